//! Deterministic JSON encodings of exact and multiprecision values.

use limhodge::algebra::{FormalScalar, RationalFunction, ThetaOperator};
use limhodge::mhs::{DualVector, Filtration, FormalMatrix};
use rug::{Complex, Float, Rational};
use serde_json::{json, Value};

/// Significant decimal digits carried by a `prec`-bit mantissa.
pub fn digits_for(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

/// Always `"num/den"`, including integers.
pub fn rational(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn rationals(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational).collect())
}

pub fn function(f: &RationalFunction) -> Value {
    Value::String(f.to_string())
}

pub fn float(x: &Float, digits: usize) -> Value {
    Value::String(x.to_string_radix(10, Some(digits)))
}

pub fn complex(z: &Complex, digits: usize) -> Value {
    json!({
        "re": z.real().to_string_radix(10, Some(digits)),
        "im": z.imag().to_string_radix(10, Some(digits)),
        "digits": digits,
    })
}

pub fn complex_vector(v: &DualVector<Complex>, digits: usize) -> Value {
    Value::Array(v.coords.iter().map(|z| complex(z, digits)).collect())
}

pub fn operator(op: &ThetaOperator) -> Value {
    json!({
        "order": op.order(),
        "q": op.coefficients().iter().map(function).collect::<Vec<_>>(),
    })
}

fn scalar(s: &FormalScalar) -> Value {
    Value::String(s.to_string())
}

pub fn formal_matrix(m: &FormalMatrix) -> Value {
    Value::Array(m.rows().iter().map(|row| Value::Array(row.iter().map(scalar).collect())).collect())
}

pub fn filtration(f: &Filtration) -> Value {
    Value::Array(
        f.steps
            .iter()
            .map(|s| json!({ "label": s.label, "dim": s.dim(), "span": s.indices }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_keep_denominators() {
        assert_eq!(rational(&Rational::from(3)), json!("3/1"));
        assert_eq!(rational(&Rational::from((-2, 4))), json!("-1/2"));
    }

    #[test]
    fn digit_counts() {
        assert_eq!(digits_for(128), 38);
        assert_eq!(digits_for(64), 19);
    }

    #[test]
    fn complex_has_explicit_precision() {
        let z = Complex::with_val(64, (0.5, -1));
        let v = complex(&z, 5);
        assert_eq!(v["digits"], json!(5));
        assert_eq!(v["re"], json!("5.0000e-1"));
    }
}
