use limhodge::algebra::ThetaOperator;
use limhodge::frobenius::{check_mum, standard_basis};
use limhodge::mhs::{mhs_checks, twisted_functional_at_z, MhsReport};
use limhodge::numeric::{
    eval_phi, legendre_period_first, legendre_period_second, monodromy_defect, pi_partial_sums, verify_identity_hg,
};
use limhodge::syntax::parse_symbol;
use rug::float::Constant;
use rug::{Complex, Float};
use serde_json::{json, Value};

use crate::commands::{complex_point, eval_config, real_point, tolerance};
use crate::json::{self, digits_for};
use crate::{operator_from, CliError, JobConfig, Report, Suite};

struct Check {
    name: String,
    value: Option<Float>,
    passed: bool,
}

impl Check {
    fn below(name: impl Into<String>, value: Float, tol: &Float) -> Check {
        let passed = value < *tol;
        Check { name: name.into(), value: Some(value), passed }
    }

    fn flag(name: impl Into<String>, passed: bool) -> Check {
        Check { name: name.into(), value: None, passed }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "value": self.value.as_ref().map(|v| json::float(v, 6)),
            "passed": self.passed,
        })
    }
}

fn finish(suite: Suite, operator: Option<ThetaOperator>, tol: Option<&Float>, checks: Vec<Check>, extra: Value) -> Report {
    let passed = checks.iter().all(|c| c.passed);
    let mut result = json!({
        "suite": suite.name(),
        "passed": passed,
        "tolerance": tol.map(|t| json::float(t, 6)),
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    });
    if let Value::Object(extra) = extra {
        result.as_object_mut().expect("object").extend(extra);
    }
    let mut report = Report::new(operator, result);
    report.passed = passed;
    report
}

fn points(job: &JobConfig, defaults: &[&str]) -> Result<Vec<(String, Float)>, CliError> {
    let texts: Vec<&str> = match &job.t {
        Some(t) => vec![t.as_str()],
        None => defaults.to_vec(),
    };
    texts.into_iter().map(|s| Ok((s.to_string(), real_point(s, job.precision)?))).collect()
}

pub(crate) fn run_suite(suite: Suite, job: &JobConfig) -> Result<Report, CliError> {
    match suite {
        Suite::HypergeomIdentity => hypergeom_identity(job),
        Suite::Legendre => legendre(job),
        Suite::PiSeries => pi_series(job),
        Suite::MhsChecks => mhs(job),
        Suite::Periodicity => periodicity(job),
    }
}

fn hypergeom_identity(job: &JobConfig) -> Result<Report, CliError> {
    let cfg = eval_config(job);
    let tol = tolerance(job, "1e-20")?;
    let mut checks = Vec::new();
    let mut tails = Vec::new();
    for (label, t) in points(job, &["0.3", "0.5"])? {
        let r = verify_identity_hg(&t, &cfg)?;
        tails.push((format!("t={label}"), json::float(&r.tail_estimate, 6)));
        checks.push(Check::below(format!("t={label}"), r.residual, &tol));
    }
    let mut report = finish(Suite::HypergeomIdentity, Some(ThetaOperator::legendre()), Some(&tol), checks, json!({}));
    report.tail_estimates.extend(tails);
    Ok(report)
}

fn legendre(job: &JobConfig) -> Result<Report, CliError> {
    let cfg = eval_config(job);
    let prec = cfg.precision;
    let tol = tolerance(job, "1e-8")?;
    let op = ThetaOperator::legendre();
    let basis = standard_basis(&op, cfg.truncation)?;
    let pi = Float::with_val(prec, Constant::Pi);
    let four_log2 = Float::with_val(prec, Constant::Log2) * 4u32;
    let mut checks = Vec::new();
    let mut tails = Vec::new();
    for (label, t) in points(job, &["0.25", "0.5"])? {
        let tc = Complex::with_val(prec, &t);
        let phi0 = eval_phi(&basis, 0, &tc, &cfg)?;
        let phi1 = eval_phi(&basis, 1, &tc, &cfg)?;

        let first = legendre_period_first(&t, &cfg)?;
        let expected = Complex::with_val(prec, &phi0.value * &pi);
        checks.push(Check::below(format!("first_period t={label}"), Float::with_val(prec, (first.value - expected).abs_ref()), &tol));

        // -4 i log(2) phi_0 + i phi_1
        let second = legendre_period_second(&t, &cfg)?;
        let combo = Complex::with_val(prec, &phi0.value * &four_log2) - &phi1.value;
        let expected = combo * Complex::with_val(prec, (0, -1));
        checks.push(Check::below(format!("second_period t={label}"), Float::with_val(prec, (second.value - expected).abs_ref()), &tol));

        tails.push((format!("quadrature t={label}"), json::float(&(first.tail_estimate + second.tail_estimate), 6)));
        tails.push((format!("series t={label}"), json::float(&(phi0.tail_estimate + phi1.tail_estimate), 6)));
    }
    let mut report = finish(Suite::Legendre, Some(op), Some(&tol), checks, json!({}));
    report.tail_estimates.extend(tails);
    Ok(report)
}

fn pi_series(job: &JobConfig) -> Result<Report, CliError> {
    let cfg = eval_config(job);
    let prec = cfg.precision;
    let tol = tolerance(job, "1e-3")?;
    if job.terms == 0 {
        return Err(CliError::Usage("--terms must be positive".into()));
    }
    let (partial, uncertainty) = pi_partial_sums(job.terms, &cfg);
    let last = partial.last().expect("at least one term");
    let pi = Float::with_val(prec, Constant::Pi);
    let error = Float::with_val(prec, &pi - last).abs();
    let monotone = partial.windows(2).all(|w| w[1] > w[0]);
    let checks = vec![
        Check::below(format!("distance_to_pi terms={}", job.terms), error, &tol),
        Check::flag("monotone_increasing", monotone),
    ];
    let digits = digits_for(prec);
    let extra = json!({ "terms": job.terms, "partial_sum": json::float(last, digits) });
    let mut report = finish(Suite::PiSeries, None, Some(&tol), checks, extra);
    report.tail_estimates.insert("inner_sums".into(), json::float(&uncertainty, 6));
    Ok(report)
}

fn mhs_entry(rep: &MhsReport) -> Value {
    json!({
        "order": rep.order,
        "maximally_unipotent": rep.maximally_unipotent,
        "exp_log_roundtrip": rep.exp_log_roundtrip,
        "weight_is_image_of_n_powers": rep.weight_is_image_of_n_powers,
        "opposite": rep.opposite,
        "graded_dims": rep.graded_dims.iter().map(|(l, d)| json!([l, d])).collect::<Vec<_>>(),
        "n_lowers_weight": rep.n_lowers_weight,
        "rescaled_gamma_rational": rep.conjugated_gamma.is_some(),
    })
}

fn mhs(job: &JobConfig) -> Result<Report, CliError> {
    let (operator, orders) = match job.operator {
        Some(_) => {
            let op = operator_from(job)?;
            check_mum(&op)?;
            let r = op.order();
            (Some(op), vec![r])
        }
        None => (None, (1..=8).collect()),
    };
    let reports: Vec<MhsReport> = orders.iter().map(|&r| mhs_checks(r)).collect();
    let checks = reports.iter().map(|r| Check::flag(format!("order={}", r.order), r.passed())).collect();
    let extra = json!({ "orders": reports.iter().map(mhs_entry).collect::<Vec<_>>() });
    Ok(finish(Suite::MhsChecks, operator, None, checks, extra))
}

fn periodicity(job: &JobConfig) -> Result<Report, CliError> {
    let cfg = eval_config(job);
    let prec = cfg.precision;
    let tol = tolerance(job, "1e-20")?;
    let op = match job.operator {
        Some(_) => operator_from(job)?,
        None => ThetaOperator::legendre(),
    };
    check_mum(&op)?;
    let m = parse_symbol(job.symbol.as_deref().unwrap_or("1"), op.order())?;
    let z = complex_point(job.z.as_deref().unwrap_or("0.3,3"), prec)?;
    let z1 = Complex::with_val(prec, &z + 1u32);
    let basis = standard_basis(&op, cfg.truncation)?;

    let a = twisted_functional_at_z(&m, &z, &basis, &cfg)?;
    let b = twisted_functional_at_z(&m, &z1, &basis, &cfg)?;
    let (defect, tail) = monodromy_defect(&basis, &z, &cfg)?;
    let checks = vec![
        Check::below("twisted_functional_shift", a.distance(&b), &tol),
        Check::below("basis_continuation", defect, &tol),
    ];
    let digits = digits_for(prec);
    let extra = json!({ "z": json::complex(&z, digits), "pi_prime_z": json::complex_vector(&a, digits) });
    let mut report = finish(Suite::Periodicity, Some(op), Some(&tol), checks, extra);
    report.tail_estimates.insert("basis_continuation".into(), json::float(&tail, 6));
    Ok(report)
}
