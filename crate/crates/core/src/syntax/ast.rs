use std::fmt;

use rug::Rational;

/// Expression tree over `t`, `theta`, `D`, rational literals, `+`, `-`, `*`,
/// `/` and `^`. Multiplication is noncommutative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorAst {
    T,
    Theta,
    D,
    Lit(Rational),
    Neg(Box<OperatorAst>),
    Add(Box<OperatorAst>, Box<OperatorAst>),
    Sub(Box<OperatorAst>, Box<OperatorAst>),
    Mul(Box<OperatorAst>, Box<OperatorAst>),
    /// Right multiplication by the inverse of a function of `t`.
    Div(Box<OperatorAst>, Box<OperatorAst>),
    Pow(Box<OperatorAst>, u32),
}

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const FACTOR: u8 = 3;
const ATOM: u8 = 4;

impl OperatorAst {
    fn precedence(&self) -> u8 {
        match self {
            OperatorAst::Add(..) | OperatorAst::Sub(..) => SUM,
            OperatorAst::Mul(..) | OperatorAst::Div(..) => PRODUCT,
            OperatorAst::Neg(_) | OperatorAst::Pow(..) => FACTOR,
            OperatorAst::Lit(c) if !c.denom().eq(&1) || *c < 0 => FACTOR,
            _ => ATOM,
        }
    }

    fn is_integer_lit(&self) -> bool {
        matches!(self, OperatorAst::Lit(c) if c.denom().eq(&1) && *c >= 0)
    }

    // "n/m" and "-n/m" at the start of a term read back as one literal
    fn leads_with_integer(&self) -> bool {
        match self {
            OperatorAst::Neg(x) => x.leads_with_integer(),
            _ => self.is_integer_lit(),
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let bare_fraction = matches!(self, OperatorAst::Lit(_)) && !self.is_integer_lit() && min > SUM;
        if self.precedence() < min || bare_fraction {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Canonical printer: parsing the output yields the same tree.
impl fmt::Display for OperatorAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorAst::T => f.write_str("t"),
            OperatorAst::Theta => f.write_str("theta"),
            OperatorAst::D => f.write_str("D"),
            OperatorAst::Lit(c) => write!(f, "{c}"),
            OperatorAst::Neg(x) => {
                f.write_str("-")?;
                x.write_operand(f, pow_or_atom(x))
            }
            OperatorAst::Add(a, b) => {
                a.write_operand(f, SUM)?;
                f.write_str(" + ")?;
                b.write_operand(f, PRODUCT)
            }
            OperatorAst::Sub(a, b) => {
                a.write_operand(f, SUM)?;
                f.write_str(" - ")?;
                b.write_operand(f, PRODUCT)
            }
            OperatorAst::Mul(a, b) => {
                a.write_operand(f, PRODUCT)?;
                f.write_str("*")?;
                b.write_operand(f, pow_or_atom(b))
            }
            OperatorAst::Div(a, b) => {
                if a.leads_with_integer() {
                    write!(f, "({a})")?;
                } else {
                    a.write_operand(f, PRODUCT)?;
                }
                f.write_str("/")?;
                b.write_operand(f, pow_or_atom(b))
            }
            OperatorAst::Pow(x, e) => {
                x.write_operand(f, ATOM)?;
                write!(f, "^{e}")
            }
        }
    }
}

// powers are printed bare as the right operand of a product; negations and
// fractional literals are parenthesized
fn pow_or_atom(x: &OperatorAst) -> u8 {
    if matches!(x, OperatorAst::Pow(..)) {
        FACTOR
    } else {
        ATOM
    }
}
