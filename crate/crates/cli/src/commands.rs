use std::fmt;
use std::time::Instant;

use bellrec::arith::{lift_all, BigInt, BigRational, Domain, FromElem, RingElem};
use bellrec::convolve::{conv_all, conv_bell, conv_direct, conv_thm_recurrence, ConvSpec};
use bellrec::linrec::{
    chebyshev_t, chebyshev_u, decompose, eval_recurrence, reconstruct, Method, RecurrenceSpec,
};
use bellrec::parse::parse_list;
use bellrec::symfun::{elem_from_roots, power_sums_bell, power_sums_direct, power_sums_newton};
use bellrec::verify::{self, Suite};
use bellrec::Error;
use serde_json::Value;

use crate::output::{OutputRecord, Rendered};
use crate::{ConvArgs, ConvMethod, DecomposeArgs, Family, PowersumArgs, SeqArgs, VerifyArgs};

pub const NMAX_ENV: &str = "BELLREC_NMAX_LIMIT";
const NMAX_DEFAULT: usize = 500;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verify(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verify(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::PathMismatch { .. } | Error::NonIntegral(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// A record to print, plus an error that still sets the exit status.
pub struct Outcome {
    pub record: OutputRecord,
    pub failure: Option<CliError>,
}

impl From<OutputRecord> for Outcome {
    fn from(record: OutputRecord) -> Self {
        Outcome { record, failure: None }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn n_limit() -> Result<usize, CliError> {
    match std::env::var(NMAX_ENV) {
        Err(_) => Ok(NMAX_DEFAULT),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{NMAX_ENV}={s:?} is not a non-negative integer"))),
    }
}

fn check_n(n: usize) -> Result<(), CliError> {
    let limit = n_limit()?;
    if n > limit {
        return Err(CliError::Usage(format!("--n {n} exceeds the limit {limit} (set {NMAX_ENV} to raise it)")));
    }
    Ok(())
}

fn list(flag: &str, text: &str) -> Result<Vec<RingElem>, CliError> {
    parse_list(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn render<R: FromElem>(values: &[R]) -> Vec<Rendered> {
    values.iter().map(|v| Rendered::from(&v.to_elem())).collect()
}

fn tags(methods: &[Method]) -> Vec<String> {
    methods.iter().map(|m| m.tag().to_owned()).collect()
}

fn first_difference<R: PartialEq>(a: &[R], b: &[R]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Call `$f::<R>($args)` with `R` the concrete ring for `$domain`.
macro_rules! dispatch {
    ($domain:expr, $f:ident($($arg:expr),*)) => {
        match $domain {
            Domain::Integer => $f::<BigInt>($($arg),*),
            Domain::Rational => $f::<BigRational>($($arg),*),
            Domain::Poly => $f::<bellrec::arith::Poly>($($arg),*),
        }
    };
}

pub fn seq(args: &SeqArgs) -> CmdResult {
    check_n(args.n)?;
    if let Some(family) = args.family {
        return Ok(seq_family(family, args.n)?.into());
    }
    let (Some(coeffs), Some(init)) = (&args.coeffs, &args.init) else {
        return Err(CliError::Usage("seq needs --coeffs and --init, or --family".into()));
    };
    let coeffs = list("coeffs", coeffs)?;
    let init = list("init", init)?;
    let domain = Domain::spanning(&[&coeffs, &init]);
    let values = dispatch!(domain, seq_values(&coeffs, &init, args.n))?;
    let mut record = OutputRecord::new("seq")
        .list_param("coeffs", &coeffs)
        .list_param("init", &init)
        .param("n", args.n)
        .param("domain", domain.name());
    record.values = values;
    record.methods = tags(&[Method::DirectRecurrence]);
    Ok(record.into())
}

fn seq_values<R: FromElem>(coeffs: &[RingElem], init: &[RingElem], n: usize) -> Result<Vec<Rendered>, CliError> {
    let spec = RecurrenceSpec::new(lift_all::<R>(coeffs)?, lift_all::<R>(init)?)?;
    Ok(render(&eval_recurrence(&spec, n).values))
}

fn seq_family(family: Family, n: usize) -> Result<OutputRecord, CliError> {
    let (name, spec, closed): (_, _, fn(usize) -> bellrec::arith::Poly) = match family {
        Family::ChebyshevT => ("chebyshev-t", RecurrenceSpec::chebyshev_t(), chebyshev_t),
        Family::ChebyshevU => ("chebyshev-u", RecurrenceSpec::chebyshev_u(), chebyshev_u),
    };
    let values = eval_recurrence(&spec, n).values;
    if let Some(index) = (0..=n).find(|&i| closed(i) != values[i]) {
        return Err(Error::PathMismatch { what: "recurrence vs closed form", index }.into());
    }
    let mut record = OutputRecord::new("seq")
        .param("family", name)
        .param("n", n)
        .param("domain", Domain::Poly.name());
    record.values = render(&values);
    record.methods = tags(&[Method::DirectRecurrence, Method::ClosedForm]);
    record.verdict = Some("agree".into());
    Ok(record)
}

pub fn decompose_recurrence(args: &DecomposeArgs) -> CmdResult {
    let coeffs = list("coeffs", &args.coeffs)?;
    let init = list("init", &args.init)?;
    let domain = Domain::spanning(&[&coeffs, &init]);
    let values = dispatch!(domain, decompose_values(&coeffs, &init))?;
    let mut record = OutputRecord::new("decompose")
        .list_param("coeffs", &coeffs)
        .list_param("init", &init)
        .param("domain", domain.name());
    record.values = values;
    record.methods = tags(&[Method::DirectRecurrence, Method::BellFormula]);
    record.verdict = Some("agree".into());
    Ok(record.into())
}

/// The lambdas, after checking that they rebuild the sequence well past
/// the initial window.
fn decompose_values<R: FromElem>(coeffs: &[RingElem], init: &[RingElem]) -> Result<Vec<Rendered>, CliError> {
    let spec = RecurrenceSpec::new(lift_all::<R>(coeffs)?, lift_all::<R>(init)?)?;
    let lambdas = decompose(&spec);
    let horizon = 2 * spec.depth() + 8;
    let direct = eval_recurrence(&spec, horizon).values;
    let rebuilt = reconstruct(&lambdas, spec.coeffs(), horizon)?.values;
    if let Some(index) = first_difference(&direct, &rebuilt) {
        return Err(Error::PathMismatch { what: "recurrence vs decomposition", index }.into());
    }
    Ok(render(&lambdas.lambdas))
}

pub fn conv(args: &ConvArgs) -> CmdResult {
    check_n(args.n)?;
    let coeffs = list("coeffs", &args.coeffs)?;
    match args.method {
        ConvMethod::Bell | ConvMethod::Recurrence if args.r == 0 => {
            return Err(CliError::Usage("--r must be at least 1 for this method".into()));
        }
        ConvMethod::Recurrence if args.delta > 0 => {
            return Err(CliError::Usage("the recurrence method needs --delta 0".into()));
        }
        _ => {}
    }
    let domain = Domain::spanning(&[&coeffs]);
    let (values, methods) = dispatch!(domain, conv_values(&coeffs, args))?;
    let method_name = match args.method {
        ConvMethod::Direct => "direct",
        ConvMethod::Bell => "bell",
        ConvMethod::Recurrence => "recurrence",
        ConvMethod::All => "all",
    };
    let mut record = OutputRecord::new("conv")
        .list_param("coeffs", &coeffs)
        .param("r", args.r)
        .param("delta", args.delta)
        .param("n", args.n)
        .param("method", method_name)
        .param("domain", domain.name());
    record.values = values;
    record.methods = tags(&methods);
    if args.method == ConvMethod::All {
        record.verdict = Some("agree".into());
    }
    Ok(record.into())
}

fn conv_values<R: FromElem>(coeffs: &[RingElem], args: &ConvArgs) -> Result<(Vec<Rendered>, Vec<Method>), CliError> {
    let spec = ConvSpec::new(lift_all::<R>(coeffs)?, args.r, args.delta, args.n);
    let (seq, methods) = match args.method {
        ConvMethod::Direct => {
            let s = conv_direct(&spec)?;
            let m = vec![s.method];
            (s, m)
        }
        ConvMethod::Bell => {
            let s = conv_bell(&spec)?;
            let m = vec![s.method];
            (s, m)
        }
        ConvMethod::Recurrence => {
            let s = conv_thm_recurrence(&spec)?;
            let m = vec![s.method];
            (s, m)
        }
        ConvMethod::All => conv_all(&spec)?,
    };
    Ok((render(&seq.values), methods))
}

pub fn powersum(args: &PowersumArgs) -> CmdResult {
    check_n(args.n)?;
    let (source, text) = match (&args.roots, &args.elems) {
        (Some(r), None) => ("roots", r),
        (None, Some(e)) => ("elems", e),
        _ => return Err(CliError::Usage("powersum needs exactly one of --roots and --elems".into())),
    };
    let items = list(source, text)?;
    if items.is_empty() {
        return Err(CliError::Usage(format!("--{source} must not be empty")));
    }
    let d = args.d.unwrap_or(items.len());
    if d != items.len() {
        return Err(CliError::Usage(format!("--d {d} does not match {} {source}", items.len())));
    }
    let items_q: Vec<BigRational> = lift_all(&items)?;

    let mut routes = Vec::new();
    let elems = if source == "roots" {
        routes.push(power_sums_direct(&items_q, args.n));
        elem_from_roots(&items_q)
    } else {
        items_q
    };
    routes.push(power_sums_newton(&elems, d, args.n)?);
    routes.push(power_sums_bell(&elems, d, args.n)?);
    for pair in routes.windows(2) {
        if let Some(index) = first_difference(&pair[0].values, &pair[1].values) {
            return Err(Error::PathMismatch { what: "power-sum routes", index }.into());
        }
    }

    let mut record = OutputRecord::new("powersum")
        .list_param(source, &items)
        .param("d", d)
        .param("n", args.n);
    record.values = render(&routes[0].values);
    record.methods = routes.iter().map(|s| s.method.tag().to_owned()).collect();
    record.verdict = Some("agree".into());
    Ok(record.into())
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let suite: Suite = args.suite.parse()?;
    let start = Instant::now();
    let reports = verify::run(suite, args.seed, args.trials);
    eprintln!("runtime: {:.3}s", start.elapsed().as_secs_f64());

    let mut record = OutputRecord::new("verify")
        .param("suite", suite.name())
        .param("seed", args.seed)
        .param("trials", args.trials);
    let mut failed = Vec::new();
    for report in &reports {
        let status = if report.passed() { "pass" } else { "fail" };
        let ok = report.trials - report.failures.len();
        record
            .values
            .push(Rendered::Scalar(format!("{} {status} {ok}/{}", report.suite, report.trials)));
        record.methods.push(report.suite.name().to_owned());
        for f in &report.failures {
            eprintln!("{}: {f}", report.suite);
        }
        if !report.passed() {
            failed.push(report.suite.name());
        }
    }
    record.params.insert(
        "suites".into(),
        Value::Array(reports.iter().map(|r| Value::from(r.suite.name())).collect()),
    );
    let failure = if failed.is_empty() {
        record.verdict = Some("pass".into());
        None
    } else {
        record.verdict = Some("fail".into());
        Some(CliError::Verify(failed.join(", ")))
    };
    Ok(Outcome { record, failure })
}
