use super::ast::OperatorAst;
use super::parser::parse_operator;
use crate::algebra::{DiffOperator, ThetaOperator};
use crate::error::{Error, Result};
use crate::mhs::SymbolM;

/// Expand the noncommutative expression into `sum_j c_j(t) theta^j`.
///
/// Uses `theta * g = g * theta + t g'` and `D = t^{-1} theta`. A quotient
/// `a / b` needs `b` to be a nonzero function of `t` and means `a * b^{-1}`.
pub fn collect_operator(ast: &OperatorAst) -> Result<DiffOperator> {
    Ok(match ast {
        OperatorAst::T => DiffOperator::t(),
        OperatorAst::Theta => DiffOperator::theta(),
        OperatorAst::D => DiffOperator::d(),
        OperatorAst::Lit(c) => DiffOperator::constant(c.clone()),
        OperatorAst::Neg(x) => -&collect_operator(x)?,
        OperatorAst::Add(a, b) => &collect_operator(a)? + &collect_operator(b)?,
        OperatorAst::Sub(a, b) => &collect_operator(a)? - &collect_operator(b)?,
        OperatorAst::Mul(a, b) => &collect_operator(a)? * &collect_operator(b)?,
        OperatorAst::Div(a, b) => {
            let g = collect_operator(b)?
                .as_function()
                .ok_or_else(|| Error::InvalidArgument(format!("divisor '{b}' involves theta")))?;
            let inv = g.inv().ok_or_else(|| Error::InvalidArgument(format!("division by zero in '{ast}'")))?;
            &collect_operator(a)? * &DiffOperator::function(inv)
        }
        OperatorAst::Pow(x, e) => collect_operator(x)?.pow(*e),
    })
}

/// Collect and divide by the leading coefficient.
pub fn normalize_operator(ast: &OperatorAst) -> Result<ThetaOperator> {
    collect_operator(ast)?.into_monic()
}

/// Parse and normalize in one step.
pub fn parse_theta_operator(text: &str) -> Result<ThetaOperator> {
    normalize_operator(&parse_operator(text)?)
}

/// Parse a symbol `m = sum_{j<r} v_j(t) theta^j`. Degree `r` or more in
/// `theta` is an error.
pub fn parse_symbol(text: &str, r: usize) -> Result<SymbolM> {
    SymbolM::from_operator(r, &collect_operator(&parse_operator(text)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, RationalFunction};

    #[test]
    fn t_d_is_theta() {
        assert_eq!(parse_theta_operator("t*D").unwrap(), parse_theta_operator("theta").unwrap());
        assert_eq!(collect_operator(&parse_operator("t*D").unwrap()).unwrap(), DiffOperator::theta());
    }

    #[test]
    fn commutator_before_monic_division() {
        let c = collect_operator(&parse_operator("theta*t").unwrap()).unwrap();
        assert_eq!(c, DiffOperator::from_coeffs(vec![RationalFunction::t(), RationalFunction::t()]));
        let op = normalize_operator(&parse_operator("theta*t").unwrap()).unwrap();
        assert_eq!(op.order(), 1);
        assert_eq!(op.q(1), &RationalFunction::one());
    }

    #[test]
    fn hypergeometric_text() {
        let op = parse_theta_operator("theta^2 - (t/(1-t))*theta - (1/4)*(t/(1-t))").unwrap();
        assert_eq!(op, ThetaOperator::legendre());
    }

    #[test]
    fn division_rules() {
        assert!(matches!(parse_theta_operator("theta/theta"), Err(Error::InvalidArgument(_))));
        assert!(matches!(parse_theta_operator("theta/(t - t)"), Err(Error::InvalidArgument(_))));
        // right division: theta * t^{-1} = t^{-1} (theta - 1)
        assert_eq!(parse_theta_operator("theta/t").unwrap(), parse_theta_operator("theta - 1").unwrap());
        assert_eq!(parse_theta_operator("(1/t)*theta").unwrap(), parse_theta_operator("theta").unwrap());
        assert_eq!(parse_theta_operator("t - t"), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn symbols() {
        let m = parse_symbol("1 + t*theta", 2).unwrap();
        assert_eq!(m.v(0), &RationalFunction::one());
        assert_eq!(m.v(1), &RationalFunction::from_poly(Poly::var()));
        assert!(matches!(parse_symbol("theta^2", 2), Err(Error::InvalidArgument(_))));
    }
}
