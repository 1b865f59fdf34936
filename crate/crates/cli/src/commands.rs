use limhodge::algebra::ThetaOperator;
use limhodge::frobenius::{check_mum, indicial_polynomial, residual, standard_basis};
use limhodge::mhs::{
    is_maximally_unipotent, limit_functional, limiting_hodge_filtration, log_monodromy, monodromy_matrix,
    rescaled_monodromy, twisted_functional_at_z, twisted_functional_routes, weight_filtration, functional_at_z,
};
use limhodge::numeric::{eval_phi, eval_phi_at_z, EvalConfig};
use limhodge::syntax::parse_symbol;
use limhodge::Error;
use rug::{Complex, Float};
use serde_json::{json, Value};

use crate::decimal::{parse_complex, parse_decimal};
use crate::json::{self, digits_for};
use crate::{operator_from, verify, CliError, Command, JobConfig, Report};

pub(crate) fn dispatch(job: &JobConfig) -> Result<Report, CliError> {
    match job.command {
        Command::Solve => solve(job),
        Command::Indicial => indicial(job),
        Command::Monodromy => monodromy(job),
        Command::Filtrations => filtrations(job),
        Command::Limit => limit(job),
        Command::Functional => functional(job),
        Command::Eval => eval(job),
        Command::Verify(suite) => verify::run_suite(suite, job),
    }
}

pub(crate) fn eval_config(job: &JobConfig) -> EvalConfig {
    EvalConfig { precision: job.precision, truncation: job.nmax, ..EvalConfig::default() }
}

pub(crate) fn real_point(text: &str, prec: u32) -> Result<Float, CliError> {
    let q = parse_decimal(text).ok_or_else(|| CliError::Usage(format!("'{text}' is not a decimal number")))?;
    Ok(Float::with_val(prec, q))
}

pub(crate) fn complex_point(text: &str, prec: u32) -> Result<Complex, CliError> {
    parse_complex(text, prec).ok_or_else(|| CliError::Usage(format!("'{text}' is not a complex number re,im")))
}

pub(crate) fn tolerance(job: &JobConfig, default: &str) -> Result<Float, CliError> {
    real_point(job.tolerance.as_deref().unwrap_or(default), job.precision)
}

fn mum_operator(job: &JobConfig) -> Result<ThetaOperator, CliError> {
    let op = operator_from(job)?;
    check_mum(&op)?;
    Ok(op)
}

fn solve(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let basis = standard_basis(&op, job.nmax)?;
    let mut residuals_vanish = true;
    for k in 0..op.order() {
        residuals_vanish &= residual(&op, &basis, k)?.is_zero();
    }
    let f: Vec<Value> = basis.series().iter().map(|s| json::rationals(s.coeffs())).collect();
    let mut report = Report::new(
        Some(op),
        json!({ "truncation": job.nmax, "f": f, "residuals_vanish": residuals_vanish }),
    );
    report.passed = residuals_vanish;
    Ok(report)
}

fn indicial(job: &JobConfig) -> Result<Report, CliError> {
    let op = operator_from(job)?;
    let p = indicial_polynomial(&op)?;
    let r = op.order();
    let mum = match check_mum(&op) {
        Ok(()) => Value::Null,
        Err(Error::NotMum { index, failure, .. }) => json!({ "index": index, "failure": failure.to_string() }),
        Err(e) => return Err(e.into()),
    };
    let result = json!({
        "polynomial": p.display_in("rho"),
        "coefficients": json::rationals(p.coeffs()),
        "exponents_all_zero": p == limhodge::algebra::Poly::var().pow(r as u32),
        "mum": mum.is_null(),
        "mum_failure": mum,
    });
    Ok(Report::new(Some(op), result))
}

fn monodromy(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let gamma = monodromy_matrix(op.order());
    let n = log_monodromy(&gamma)?;
    let rescaled = rescaled_monodromy(&gamma)
        .map(|rows| Value::Array(rows.iter().map(|r| json::rationals(r)).collect()));
    let result = json!({
        "tau": "2*pi*i",
        "gamma": json::formal_matrix(&gamma),
        "log_gamma": json::formal_matrix(&n),
        "maximally_unipotent": is_maximally_unipotent(&gamma),
        "exp_log_roundtrip": n.exp_nilpotent() == gamma,
        "rescaled_gamma": rescaled,
    });
    Ok(Report::new(Some(op), result))
}

fn filtrations(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let r = op.order();
    let result = json!({
        "basis": (0..r).map(|j| format!("phi_{j}^dual")).collect::<Vec<_>>(),
        "weight": json::filtration(&weight_filtration(r)),
        "hodge_limit": json::filtration(&limiting_hodge_filtration(r)),
    });
    Ok(Report::new(Some(op), result))
}

fn symbol_text(job: &JobConfig) -> Result<&str, CliError> {
    job.symbol.as_deref().ok_or_else(|| CliError::Usage("missing --symbol".into()))
}

fn limit(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let m = parse_symbol(symbol_text(job)?, op.order())?;
    let lim = limit_functional(&m)?;
    let result = json!({
        "symbol": m.coefficients().iter().map(json::function).collect::<Vec<_>>(),
        "limit": json::rationals(&lim.coords),
    });
    Ok(Report::new(Some(op), result))
}

fn functional(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let m = parse_symbol(symbol_text(job)?, op.order())?;
    let cfg = eval_config(job);
    let z_text = job.z.as_deref().ok_or_else(|| CliError::Usage("missing --z".into()))?;
    let z = complex_point(z_text, cfg.precision)?;
    let basis = standard_basis(&op, cfg.truncation)?;
    let digits = digits_for(cfg.precision);

    let pi_z = functional_at_z(&m, &z, &basis, &cfg)?;
    let twisted = twisted_functional_at_z(&m, &z, &basis, &cfg)?;
    let routes = twisted_functional_routes(&m, &z, &basis, &cfg)?;
    let lim = limit_functional(&m).ok();
    let result = json!({
        "z": json::complex(&z, digits),
        "pi_z": json::complex_vector(&pi_z, digits),
        "pi_prime_z": json::complex_vector(&twisted, digits),
        "route_difference": json::float(&routes.matrix_route.distance(&routes.closed_form), 6),
        "limit": lim.as_ref().map(|l| json::rationals(&l.coords)),
        "distance_to_limit": lim.as_ref().map(|l| json::float(&twisted.distance_to_rational(l), 6)),
    });
    Ok(Report::new(Some(op), result))
}

fn eval(job: &JobConfig) -> Result<Report, CliError> {
    let op = mum_operator(job)?;
    let cfg = eval_config(job);
    let basis = standard_basis(&op, cfg.truncation)?;
    let digits = digits_for(cfg.precision);
    let (point, values) = match (&job.t, &job.z) {
        (Some(t), None) => {
            let t = Complex::with_val(cfg.precision, real_point(t, cfg.precision)?);
            let values = (0..op.order()).map(|k| eval_phi(&basis, k, &t, &cfg)).collect::<Result<Vec<_>, _>>()?;
            (json!({ "t": json::complex(&t, digits) }), values)
        }
        (None, Some(z)) => {
            let z = complex_point(z, cfg.precision)?;
            let values =
                (0..op.order()).map(|k| eval_phi_at_z(&basis, k, &z, &cfg)).collect::<Result<Vec<_>, _>>()?;
            (json!({ "z": json::complex(&z, digits) }), values)
        }
        _ => return Err(CliError::Usage("eval needs exactly one of --t and --z".into())),
    };
    let mut report = Report::new(
        Some(op),
        json!({
            "point": point,
            "phi": values.iter().map(|v| json::complex(&v.value, digits)).collect::<Vec<_>>(),
        }),
    );
    for (k, v) in values.iter().enumerate() {
        report.tail_estimates.insert(format!("phi_{k}"), json::float(&v.tail_estimate, 6));
    }
    Ok(report)
}
