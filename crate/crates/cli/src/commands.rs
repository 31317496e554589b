use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use logcert::certify::{
    self, certify_direct, certify_dirichlet, certify_p23, certify_root_monotone_t21_with, search_nu,
    Certificate, CertifyError, Mode, NuWitness, T21Options, Tail,
};
use logcert::checks::{self, CheckError, Property, Window};
use logcert::exact::{format_rational, format_rational_compact, DigitBudget, Rational};
use logcert::sequences::{
    convolve_dp, convolve_dp_squared, ConvolutionKind, SequenceError, SequenceHandle, SequenceSource,
    ThreeTermSpec,
};

use crate::report::{CliError, Outcome, EXIT_FAILS, EXIT_HOLDS};
use crate::{
    CertifyArgs, CheckArgs, ConvolveArgs, Format, GenArgs, ModeArg, ReplayArgs, SourceArgs, TheoremArg,
};

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

fn check_error(e: CheckError) -> CliError {
    match e {
        CheckError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        e => input(e),
    }
}

fn read_source(path: &Path) -> Result<SequenceSource, CliError> {
    let raw = fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_three_term(path: &Path) -> Result<ThreeTermSpec, CliError> {
    match read_source(path)? {
        SequenceSource::ThreeTerm(spec) => Ok(spec),
        _ => Err(input(format!("{}: expected a sequence of kind `three_term`", path.display()))),
    }
}

impl SourceArgs {
    fn resolve(&self) -> Result<SequenceSource, CliError> {
        match (&self.family, &self.spec) {
            (Some(src), _) => Ok(src.clone()),
            (None, Some(path)) => read_source(path),
            (None, None) => Err(input("one of --family or --spec is required")),
        }
    }
}

/// A file path if one exists, otherwise a family or elementary name.
fn resolve_operand(token: &str) -> Result<SequenceSource, CliError> {
    let path = Path::new(token);
    if path.is_file() {
        return read_source(path);
    }
    SequenceSource::from_name(token).map_err(|e| input(format!("`{token}` is neither a file nor a sequence name: {e}")))
}

fn handle(src: &SequenceSource) -> Result<SequenceHandle, CliError> {
    SequenceHandle::from_source(src).map_err(input)
}

fn values_outcome(
    s: &SequenceHandle,
    from: u64,
    to: u64,
    format: Format,
    extra: Option<(&str, Value)>,
    exit: u8,
) -> Result<Outcome, CliError> {
    if to < from {
        return Err(input(format!("--to {to} is below --from {from}")));
    }
    let values: Vec<Rational> = s.terms(from, to).map_err(input)?;
    if format == Format::Csv {
        let line: Vec<String> = values.iter().map(format_rational_compact).collect();
        return Ok(Outcome {
            exit,
            result: Value::Null,
            csv: Some(line.join(",")),
        });
    }
    let mut result = json!({
        "status": if exit == EXIT_HOLDS { "ok" } else { "fails" },
        "sequence": s.name(),
        "source": s.source(),
        "from": from,
        "to": to,
        "values": values.iter().map(format_rational).collect::<Vec<_>>(),
    });
    if let Some((key, value)) = extra {
        result[key] = value;
    }
    Ok(Outcome::json(exit, result))
}

pub fn gen(a: &GenArgs) -> Result<Outcome, CliError> {
    let s = handle(&a.source.resolve()?)?;
    let from = a.from.unwrap_or(s.support());
    values_outcome(&s, from, a.to, a.format, None, EXIT_HOLDS)
}

pub fn check(a: &CheckArgs, budget: DigitBudget) -> Result<Outcome, CliError> {
    let s = handle(&a.source.resolve()?)?;
    let from = a.from.unwrap_or(a.property.min_index(s.support()));
    let verdict = checks::check(&s, a.property, Window::new(from, a.to), a.strict, budget).map_err(check_error)?;
    let exit = if verdict.holds { EXIT_HOLDS } else { EXIT_FAILS };
    Ok(Outcome::json(
        exit,
        json!({
            "status": if verdict.holds { "holds" } else { "fails" },
            "sequence": s.name(),
            "verdict": verdict,
        }),
    ))
}

fn failure(label: &str, detail: &str) -> Outcome {
    Outcome::json(
        EXIT_FAILS,
        json!({ "status": "fails", "failure": { "label": label, "detail": detail } }),
    )
}

fn certificate_outcome(r: Result<Certificate, CertifyError>) -> Result<Outcome, CliError> {
    match r {
        Ok(cert) => Ok(Outcome::json(
            EXIT_HOLDS,
            json!({ "status": "holds", "certificate": cert }),
        )),
        Err(e) => certify_error(e),
    }
}

fn certify_error(e: CertifyError) -> Result<Outcome, CliError> {
    match e {
        CertifyError::HypothesisFailed {
            label,
            detail,
            counterexample,
            verdict,
        } => Ok(Outcome::json(
            EXIT_FAILS,
            json!({
                "status": "fails",
                "failure": {
                    "label": label,
                    "detail": detail,
                    "counterexample": counterexample,
                    "verdict": verdict,
                },
            }),
        )),
        CertifyError::ReplayMismatch(detail) => Ok(failure("replay", &detail)),
        e if e.is_budget() => Err(CliError::Budget(e.to_string())),
        e => Err(input(e)),
    }
}

/// Explicit witness, or the first one found on the search grid.
fn witness(
    spec: &ThreeTermSpec,
    nu: Option<&logcert::RationalFunctionQ>,
    n0: i64,
    degree: Option<u32>,
) -> Result<Option<NuWitness>, CertifyError> {
    if let Some(nu) = nu {
        return Ok(Some(NuWitness {
            nu: nu.clone(),
            valid_from: n0 - 1,
        }));
    }
    let degrees = match degree {
        Some(d) => vec![d],
        None => vec![1, 2],
    };
    for d in degrees {
        if let Some(w) = search_nu(spec, n0, d)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn certify(a: &CertifyArgs) -> Result<Outcome, CliError> {
    let source = match (&a.family, &a.spec) {
        (Some(src), _) => src.clone(),
        (None, Some(path)) => read_source(path)?,
        (None, None) => return Err(input("certify needs --family or --spec")),
    };
    match a.theorem {
        Some(TheoremArg::T21) => certify_t21(a, &source),
        Some(TheoremArg::Direct) => {
            let property = a.property.ok_or_else(|| input("--theorem direct needs --property"))?;
            let to = a.to.ok_or_else(|| input("--theorem direct needs --to"))?;
            let s = handle(&source)?;
            let from = a.from.unwrap_or(property.min_index(s.support()));
            certificate_outcome(certify_direct(&s, property, Window::new(from, to), a.strict))
        }
        None => match source {
            SequenceSource::ThreeTerm(spec) => {
                if a.nu.is_none() && !a.auto_nu {
                    return Err(input("a three_term spec needs --nu or --auto-nu"));
                }
                match witness(&spec, a.nu.as_ref(), a.n0, a.degree) {
                    Ok(Some(w)) => certificate_outcome(certify_p23(&spec, &w, a.n0)),
                    Ok(None) => Ok(failure("witness search", "no witness on the grid passes every condition")),
                    Err(e) => certify_error(e),
                }
            }
            SequenceSource::Dirichlet(spec) => certificate_outcome(certify_dirichlet(&spec, a.strict)),
            _ => Err(input(
                "without --theorem, --spec must be of kind three_term or dirichlet",
            )),
        },
    }
}

fn certify_t21(a: &CertifyArgs, source: &SequenceSource) -> Result<Outcome, CliError> {
    let n = a.big_n.ok_or_else(|| input("--theorem t21 needs --N"))?;
    let s = handle(source)?;
    let mode = match a.mode {
        ModeArg::ConvexInc => Mode::ConvexInc,
        ModeArg::ConcaveDec => Mode::ConcaveDec,
    };
    let tail = match &a.tail_spec {
        None => None,
        Some(path) => {
            let spec = read_three_term(path)?;
            match witness(&spec, a.tail_nu.as_ref(), a.tail_n0, a.degree) {
                Ok(Some(w)) => Some(Tail {
                    spec,
                    witness: w,
                    n0: a.tail_n0,
                }),
                Ok(None) => {
                    return Ok(failure("tail witness search", "no witness on the grid passes every condition"))
                }
                Err(e) => return certify_error(e),
            }
        }
    };
    let options = T21Options {
        direct_from: a.direct_from,
        remark_b: a.remark_b,
        tail,
    };
    certificate_outcome(certify_root_monotone_t21_with(&s, n, a.horizon, mode, options))
}

pub fn convolve(a: &ConvolveArgs) -> Result<Outcome, CliError> {
    let x = handle(&resolve_operand(&a.x)?)?;
    let y = handle(&resolve_operand(&a.y)?)?;
    let conv = match a.kind {
        ConvolutionKind::Plain => convolve_dp(&x, &y),
        ConvolutionKind::Squared => convolve_dp_squared(&x, &y),
    };
    let z = conv.map_err(|e: SequenceError| input(e))?;
    if !a.certify {
        return values_outcome(&z, a.from, a.to, a.format, None, EXIT_HOLDS);
    }
    if a.to < 1 {
        return Err(input("--certify needs --to >= 1"));
    }
    let window = Window::new(1, a.to);
    let built = certify_direct(&x, Property::LogConvex, window, false)
        .and_then(|xc| Ok((xc, certify_direct(&y, Property::LogConvex, window, false)?)))
        .and_then(|(xc, yc)| certify::certify_convolution(&xc, &yc, a.kind));
    let outcome = certificate_outcome(built)?;
    let cert = outcome
        .result
        .get("certificate")
        .cloned()
        .unwrap_or_else(|| outcome.result.clone());
    values_outcome(&z, a.from, a.to, a.format, Some(("certificate", cert)), outcome.exit)
}

pub fn replay(a: &ReplayArgs) -> Result<Outcome, CliError> {
    let path = &a.certificate;
    let raw = fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let inner = match value.pointer("/result/certificate") {
        Some(c) => c.clone(),
        None => value,
    };
    let cert: Certificate =
        serde_json::from_value(inner).map_err(|e| input(format!("{}: {e}", path.display())))?;
    match certify::replay(&cert) {
        Ok(report) => Ok(Outcome::json(
            EXIT_HOLDS,
            json!({ "status": "holds", "replay": report }),
        )),
        Err(e) => certify_error(e),
    }
}
