use num_bigint::BigInt;
use num_traits::Zero;
use pcore::arith::{binomial, is_prime};
use pcore::asymptotics::{
    approx_almkvist, approx_garvan, class_number, cp_all, cp_constant, parity_allows, remark31_scan, s_sum_value,
    t_sum, verify_conjecture1, verify_conjecture2, verify_intro_identity, verify_prop21, verify_theorem33,
    ApproxReport, ClassNumberMethod, CpValue, CpVariant, ExponentReading, SnappedInteger, TransformCase,
};
use pcore::fourier::{check_bernoulli_row, check_legendre_row, check_zeta_row, DftReport};
use pcore::scalar::{rational_to_string, rel_dev};
use pcore::series::{pcore_count, pcore_series};
use pcore::{Error, Mpf, PrecisionConfig, Rational, Real};
use serde_json::{json, Map, Value};

use crate::args::{ApproxMethodArg, Command, FftRow, Verify};
use crate::report::Report;

/// Failure modes distinguished by the exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Out = std::result::Result<Report, CliError>;

fn dec(x: &Mpf, cfg: &PrecisionConfig) -> String {
    x.to_decimal(cfg.decimal_digits as usize)
}

fn short(x: &Mpf) -> String {
    x.to_decimal(6)
}

fn snapped(s: &SnappedInteger<Mpf>, cfg: &PrecisionConfig) -> Value {
    json!({
        "nearest": s.nearest.to_string(),
        "raw": dec(&s.raw, cfg),
    })
}

/// Parses `a/b` or a terminating decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("cannot parse {s:?} as a rational"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let q = Rational::new(num, den);
    Ok(if neg { -q } else { q })
}

pub fn execute(cmd: &Command, cfg: &PrecisionConfig) -> Out {
    match cmd {
        Command::Count { p, n } => {
            let mut r = Report::new("count", cfg).param("p", *p).param("n", *n);
            r.value("a_p(n)", pcore_count(*p, *n)?.to_string());
            Ok(r)
        }
        Command::Series { p, max_n } => {
            let mut r = Report::new("series", cfg).param("p", *p).param("max_n", *max_n);
            let s = pcore_series(*p, *max_n)?;
            let coeffs: Vec<Value> = s.coefficients().iter().map(|c| Value::String(c.to_string())).collect();
            r.value("coefficients", coeffs);
            Ok(r)
        }
        Command::Approx { p, n, method, kmax } => approx(*p, *n, *method, *kmax, cfg),
        Command::Cp { p, variant } => cp(*p, variant, cfg),
        Command::Trig { r, p } => trig(*r, *p, cfg),
        Command::Classnum { p, method } => classnum(*p, method, cfg),
        Command::Verify { target } => verify(target, cfg),
    }
}

fn approx(p: u64, n: i64, method: ApproxMethodArg, kmax: Option<u64>, cfg: &PrecisionConfig) -> Out {
    let (name, report): (&str, ApproxReport<Mpf>) = match method {
        ApproxMethodArg::Almkvist => ("almkvist", approx_almkvist(p, n, kmax.unwrap_or(50), cfg)?),
        ApproxMethodArg::Garvan => {
            if kmax.is_some() {
                return Err(CliError::Usage("--kmax applies only to --method almkvist".into()));
            }
            ("garvan", approx_garvan(p, n, cfg)?)
        }
    };
    let mut r = Report::new("approx", cfg).param("p", p).param("n", n).param("method", name);
    if let Some(k) = report.kmax {
        r = r.param("kmax", k);
    }
    r.value("estimate", dec(&report.estimate, cfg));
    if let Some(q) = &report.exact_estimate {
        r.value("exact_estimate", rational_to_string(q));
    }
    if let Some(e) = &report.exact {
        r.value("exact", e.to_string());
    }
    if let Some(rel) = &report.relative_error {
        r.residual("relative_error", dec(rel, cfg));
    }
    Ok(r)
}

fn cp_value(v: &CpValue<Mpf>, cfg: &PrecisionConfig) -> String {
    match v {
        CpValue::Exact(q) => rational_to_string(q),
        CpValue::Numeric(x) => dec(x, cfg),
    }
}

fn cp(p: u64, variant: &str, cfg: &PrecisionConfig) -> Out {
    let mut r = Report::new("cp", cfg).param("p", p).param("variant", variant);
    if variant == "all" {
        let rep = cp_all::<Mpf>(p, cfg)?;
        r.value("consensus", rep.consensus.to_string());
        let mut variants = Map::new();
        for ((v, value), (_, sign)) in rep.values.iter().zip(&rep.signs) {
            variants.insert(v.name().into(), json!({ "value": cp_value(value, cfg), "sign": sign }));
        }
        r.value("variants", variants);
        for (v, res) in &rep.residuals {
            r.residual(v.name(), short(res));
        }
        return Ok(r);
    }
    let v: CpVariant = variant.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let value = cp_constant::<Mpf>(p, v, cfg)?;
    r.value("value", cp_value(&value, cfg));
    r.value("sign", value.sign());
    Ok(r)
}

fn trig(rr: u64, p: u64, cfg: &PrecisionConfig) -> Out {
    let t = t_sum(rr, p)?;
    let s = s_sum_value::<Mpf>(rr, p, cfg)?;
    let mut r = Report::new("trig", cfg).param("r", rr).param("p", p);
    r.value("T", rational_to_string(&t));
    r.value("T_integer", t.is_integer());
    r.value("parity_allows", parity_allows(p, rr + 1));
    if t.is_integer() {
        let sn = SnappedInteger::new(s, cfg)?;
        sn.require(&format!("S({rr}, {p})"), cfg)?;
        r.value("S", snapped(&sn, cfg));
        r.residual("S_snap", short(&sn.residual));
        r.pass = sn.nearest == t.to_integer();
    } else {
        let tv = Mpf::from_rational(&t, cfg);
        let dev = rel_dev(&s, &tv);
        r.value("S", json!({ "raw": dec(&s, cfg) }));
        r.pass = dev <= Mpf::pow10_neg(cfg.decimal_digits / 2, cfg);
        r.residual("S_minus_T_relative", short(&dev));
    }
    Ok(r)
}

fn classnum(p: u64, method: &str, cfg: &PrecisionConfig) -> Out {
    let mut r = Report::new("classnum", cfg).param("p", p).param("method", method);
    let methods: Vec<ClassNumberMethod> = if method == "all" {
        ClassNumberMethod::ALL.to_vec()
    } else {
        vec![method.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?]
    };
    let mut values = Vec::new();
    for m in methods {
        let h = class_number::<Mpf>(p, m, cfg)?;
        r.value(m.name(), h.to_string());
        values.push(h);
    }
    r.pass = values.iter().all(|v| *v == values[0]);
    if r.pass {
        r.value("h", values[0].to_string());
    }
    Ok(r)
}

fn dft_entry(rep: &DftReport<Mpf>) -> Value {
    let mut v = json!({
        "row": format!("{:?}", rep.row),
        "max_deviation": short(&rep.max_deviation),
        "pass": rep.pass,
    });
    if let Some(d) = &rep.printed_formula_deviation {
        v["printed_formula_deviation"] = Value::String(short(d));
    }
    if !rep.notes.is_empty() {
        v["notes"] = json!(rep.notes);
    }
    v
}

fn fft(row: FftRow, k: Option<u64>, rr: Option<u32>, p: Option<u64>, s: Option<u32>, cfg: &PrecisionConfig) -> Out {
    let usage = |flag: &str, row: &str| CliError::Usage(format!("--row {row} needs --{flag}"));
    let mut r = Report::new("verify fft", cfg).param("row", format!("{row:?}").to_lowercase());
    let mut reports = Vec::new();
    match row {
        FftRow::Bernoulli => {
            let (k, rr) = (k.ok_or_else(|| usage("k", "bernoulli"))?, rr.ok_or_else(|| usage("r", "bernoulli"))?);
            r = r.param("k", k).param("r", rr);
            reports.push(check_bernoulli_row::<Mpf>(k, rr, cfg)?);
        }
        FftRow::Legendre => {
            let p = p.ok_or_else(|| usage("p", "legendre"))?;
            r = r.param("p", p);
            reports.push(check_legendre_row::<Mpf>(p, cfg)?);
        }
        FftRow::Zeta => {
            let (k, s) = (k.ok_or_else(|| usage("k", "zeta"))?, s.ok_or_else(|| usage("s", "zeta"))?);
            r = r.param("k", k).param("s", s);
            reports.push(check_zeta_row::<Mpf>(k, s, cfg)?);
        }
        FftRow::All => {
            if k.is_some() || rr.is_some() || p.is_some() || s.is_some() {
                return Err(CliError::Usage("--row all takes no row parameters".into()));
            }
            for k in 2..=13 {
                for rr in 1..=6 {
                    reports.push(check_bernoulli_row::<Mpf>(k, rr, cfg)?);
                }
            }
            for p in (3..=97).filter(|&p| is_prime(p)) {
                reports.push(check_legendre_row::<Mpf>(p, cfg)?);
            }
            for k in 2..=13 {
                for s in 2..=6 {
                    reports.push(check_zeta_row::<Mpf>(k, s, cfg)?);
                }
            }
        }
    }
    let worst = reports
        .iter()
        .map(|x| x.max_deviation.clone())
        .fold(Mpf::zero(), |m, d| if d > m { d } else { m });
    r.pass = reports.iter().all(|x| x.pass);
    r.value("rows_checked", reports.len());
    if reports.len() == 1 {
        r.value("row", dft_entry(&reports[0]));
    } else {
        let failing: Vec<Value> = reports.iter().filter(|x| !x.pass).map(dft_entry).collect();
        r.value("failing_rows", failing);
        let notes: Vec<Value> = reports.iter().filter(|x| !x.notes.is_empty()).map(dft_entry).collect();
        r.value("annotated_rows", notes);
    }
    r.residual("max_deviation", short(&worst));
    Ok(r)
}

fn verify(target: &Verify, cfg: &PrecisionConfig) -> Out {
    match target {
        Verify::Conjecture1 { p, kmax, nmax } => {
            let rep = verify_conjecture1::<Mpf>(*p, *kmax, *nmax, cfg)?;
            let mut r = Report::new("verify conjecture1", cfg)
                .param("p", *p)
                .param("kmax", *kmax)
                .param("nmax", *nmax);
            r.value("cases", rep.cases);
            r.value("counterexamples", rep.counterexamples.clone());
            if let Some(w) = &rep.worst_residual {
                r.residual("worst_snap", short(w));
            }
            r.pass = rep.pass();
            Ok(r)
        }
        Verify::Conjecture2 { p, kmax } => {
            let rep = verify_conjecture2::<Mpf>(*p, *kmax)?;
            let mut r = Report::new("verify conjecture2", cfg).param("p", *p).param("kmax", *kmax);
            r.value("cases", rep.cases);
            r.value("counterexamples", rep.counterexamples.clone());
            r.pass = rep.pass();
            Ok(r)
        }
        Verify::Prop21 { p, s, n, kmax } => {
            let rep = verify_prop21::<Mpf>(*p, *s, *n, *kmax, cfg)?;
            let mut r = Report::new("verify prop21", cfg)
                .param("p", *p)
                .param("s", *s)
                .param("n", *n)
                .param("kmax", *kmax);
            r.value("partial_sum", dec(&rep.partial_sum, cfg));
            r.value("closed_form", dec(&rep.closed_form, cfg));
            r.residual("deviation", short(&rep.deviation));
            r.residual("tail_bound", short(&rep.tail_bound));
            r.pass = rep.pass;
            Ok(r)
        }
        Verify::Theorem33 { p, h, k, t, factors } => {
            let tq = parse_rational(t)?;
            let case = TransformCase::new(*p, *h, *k, tq.clone(), *factors)?;
            let rep = verify_theorem33::<Mpf>(&case, cfg)?;
            let mut r = Report::new("verify theorem33", cfg)
                .param("p", *p)
                .param("h", *h)
                .param("k", *k)
                .param("t", rational_to_string(&tq))
                .param("factors", *factors);
            r.value("B", rep.b);
            r.value("lhs", json!({ "re": dec(&rep.lhs.re, cfg), "im": dec(&rep.lhs.im, cfg) }));
            r.value(
                "empirical_exponent",
                match rep.empirical_reading {
                    ExponentReading::Negative => "-(p-1)/2",
                    ExponentReading::Positive => "+(p-1)/2",
                },
            );
            r.residual("deviation_negative_exponent", short(&rep.deviation_negative));
            r.residual("deviation_positive_exponent", short(&rep.deviation_positive));
            r.residual("error_budget", short(&rep.error_budget));
            r.pass = rep.pass;
            Ok(r)
        }
        Verify::Fft { row, k, r, p, s } => fft(*row, *k, *r, *p, *s, cfg),
        Verify::Intro { r: rr, p } => {
            let rep = verify_intro_identity::<Mpf>(*rr, *p, cfg)?;
            let mut r = Report::new("verify intro", cfg).param("r", *rr).param("p", *p);
            r.value("lhs", snapped(&rep.lhs, cfg));
            r.value("rhs", rational_to_string(&rep.rhs));
            r.value("relative_sign", rep.relative_sign);
            r.residual("lhs_snap", short(&rep.lhs.residual));
            r.residual("magnitude", short(&rep.magnitude_deviation));
            r.pass = rep.pass;
            Ok(r)
        }
        Verify::Remark31 { p, rmax } => {
            let rmax = match rmax {
                Some(v) => *v,
                None => u64::try_from(binomial(*p, 2)).map_err(|_| CliError::Usage("p is too large".into()))?,
            };
            let rep = remark31_scan(*p, rmax)?;
            let mut r = Report::new("verify remark31", cfg).param("p", *p).param("rmax", rmax);
            let rows: Vec<Value> = rep
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "r": row.r,
                        "T": rational_to_string(&row.t),
                        "integer": row.integer,
                        "divisible_by_p": row.divisible_by_p,
                        "parity_zero": row.parity_zero,
                        "exceptional": row.exceptional,
                    })
                })
                .collect();
            r.value("rows", rows);
            r.value("divisibility_violations", rep.divisibility_violations.clone());
            r.value("first_non_integer", rep.first_non_integer);
            r.value("predicted_first_non_integer", rep.predicted_first_non_integer);
            r.value("first_non_integer_matches", rep.first_non_integer_matches);
            r.pass = rep.pass();
            Ok(r)
        }
    }
}
