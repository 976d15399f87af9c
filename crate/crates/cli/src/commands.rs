use std::fmt::Write as _;

use canonlab_core::canon::{
    canon_polynomial_bruteforce, conjecture_sweep, dissonant_polynomial, gamma_interpretation_counts,
    weak_descent_polynomial, AmphibianSpec, GammaInterpretation, SweepReport,
};
use canonlab_core::linext::{descent_count, enumerate_linear_extensions, par_descent_histogram};
use canonlab_core::poly::{eulerian, narayana, order_polynomial_values};
use canonlab_core::poset::{checked_labeling, checked_product};
use canonlab_core::verify::{verify, verify_all, Base, Claim, Outcome, VerifyParams};
use canonlab_core::{IntPolynomial, Labeling, Limits, Poset};
use serde::Serialize;
use serde_json::json;

use crate::args::{Command, Format, PolyKind, Shape, SweepKind};
use crate::input::required;
use crate::{Cli, CliError, Report};

/// Prefix depth used to split extension enumeration across threads.
const SPLIT_DEPTH: usize = 3;

pub fn execute(cli: &Cli, limits: &Limits) -> Result<Report, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Poly { kind, shape, max_j } => poly(*kind, shape, *max_j, format, limits),
        Command::Verify { claim, shape, max_size } => verify_cmd(claim, shape, *max_size, format, limits),
        Command::Sweep { kind: SweepKind::Gamma, m, n } => sweep(*m, *n, format, limits),
        Command::Gamma { m, n, rule } => gamma(*m, *n, (*rule).into(), format, limits),
        Command::Extensions { shape, checked, count } => extensions(shape, *checked, *count, format, limits),
    }
}

fn holds(body: String) -> Report {
    Report { body, notes: String::new(), holds: true }
}

fn to_json(value: &impl Serialize) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Usage(format!("cannot serialize report: {e}")))
}

fn to_csv<R: Serialize>(header: &[&str], rows: impl IntoIterator<Item = R>) -> Result<String, CliError> {
    let fail = |e: csv::Error| CliError::Usage(format!("cannot write csv: {e}"));
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    writer.write_record(header).map_err(fail)?;
    for row in rows {
        writer.serialize(row).map_err(fail)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Usage(format!("cannot write csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Labels run together when they are single digits, comma-separated otherwise.
fn fmt_word(word: &[usize]) -> String {
    let sep = if word.iter().any(|&v| v > 9) { "," } else { "" };
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn fmt_list<T: ToString>(items: &[T]) -> String {
    format!("[{}]", items.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn hstar_parallel(poset: &Poset, w: &Labeling, limits: &Limits) -> Result<IntPolynomial, CliError> {
    Ok(IntPolynomial::from_counts(&par_descent_histogram(poset, w, SPLIT_DEPTH, limits)?))
}

#[derive(Serialize)]
struct PolyOut<'a> {
    kind: &'a str,
    instance: String,
    #[serde(flatten)]
    polynomial: IntPolynomial,
    text: String,
}

fn poly(kind: PolyKind, shape: &Shape, max_j: usize, format: Format, limits: &Limits) -> Result<Report, CliError> {
    let (name, instance, p) = match kind {
        PolyKind::Canon => {
            let (base, poset, w) = shape.base()?;
            let n = required(shape.n, "--n")?;
            let p = canon_polynomial_bruteforce(&poset, &w, n, limits)?;
            ("canon", format!("base={base} w={} n={n}", fmt_word(w.values())), p)
        }
        PolyKind::Eulerian => {
            let n = required(shape.n, "--n")?;
            ("eulerian", format!("n={n}"), eulerian(n))
        }
        PolyKind::Narayana => {
            let n = required(shape.n, "--n")?;
            ("narayana", format!("n={n}"), narayana(n))
        }
        PolyKind::Hstar => {
            let (base, poset, w) = shape.whole()?;
            let p = hstar_parallel(&poset, &w, limits)?;
            ("hstar", format!("poset={base} w={}", fmt_word(w.values())), p)
        }
        PolyKind::Dissonant => {
            let m = required(shape.m, "--m")?;
            let n = required(shape.n, "--n")?;
            let spec = AmphibianSpec::new(m, n, shape.remove.clone().unwrap_or_default())?;
            let w = shape.labels()?.unwrap_or_else(|| Labeling::identity(m));
            let p = dissonant_polynomial(&spec, &w, limits)?;
            ("dissonant", format!("{spec} w={} mode={}", fmt_word(w.values()), spec.mode()), p)
        }
        PolyKind::Weak => {
            let m = required(shape.m, "--m")?;
            let n = required(shape.n, "--n")?;
            ("weak", format!("m={m} n={n}"), weak_descent_polynomial(m, n, limits)?)
        }
        PolyKind::Order => return order(shape, max_j, format, limits),
    };
    let body = match format {
        Format::Json => {
            let text = p.to_string();
            to_json(&PolyOut { kind: name, instance, polynomial: p, text })?
        }
        Format::Csv => to_csv(&["exponent", "coefficient"], p.to_decimal_strings().into_iter().enumerate())?,
        Format::Plain => format!("{name} {instance}\ncoeffs: {}\n{p}\n", fmt_list(&p.to_decimal_strings())),
    };
    Ok(holds(body))
}

fn order(shape: &Shape, max_j: usize, format: Format, limits: &Limits) -> Result<Report, CliError> {
    let (base, poset, w) = shape.whole()?;
    let values = order_polynomial_values(&poset, &w, max_j, limits)?;
    let values: Vec<String> = values.iter().map(ToString::to_string).collect();
    let instance = format!("poset={base} w={}", fmt_word(w.values()));
    let body = match format {
        Format::Json => to_json(&json!({ "kind": "order", "instance": instance, "values": values }))?,
        Format::Csv => to_csv(&["j", "value"], values.iter().enumerate())?,
        Format::Plain => format!("order {instance}\nvalues for j=0..{max_j}: {}\n", fmt_list(&values)),
    };
    Ok(holds(body))
}

fn verify_cmd(
    claim: &str,
    shape: &Shape,
    max_size: usize,
    format: Format,
    limits: &Limits,
) -> Result<Report, CliError> {
    let outcomes = if claim == "all" {
        verify_all(max_size, limits)?
    } else {
        let claim: Claim = claim.parse().map_err(CliError::Usage)?;
        let base = if shape.poset.is_some() || shape.labels.is_some() {
            let (name, poset, w) = shape.base()?;
            Some(Base { name, poset, labeling: Some(w) })
        } else {
            None
        };
        let params = VerifyParams { m: shape.m, n: shape.n, base, removed: shape.remove.clone(), limits: *limits };
        verify(claim, &params)?
    };
    let failing: Vec<&Outcome> = outcomes.iter().filter(|o| !o.holds).collect();
    let body = match format {
        Format::Json => to_json(&json!({
            "total": outcomes.len(),
            "failing": failing.len(),
            "outcomes": outcomes,
        }))?,
        Format::Csv => to_csv(&["claim", "instance", "holds"], outcomes.iter().map(|o| (o.claim.name(), &o.instance, o.holds)))?,
        Format::Plain => {
            let mut s = String::new();
            for o in &outcomes {
                let verdict = if o.holds { "holds" } else { "FAILS" };
                let _ = writeln!(s, "{verdict}  {}  {}", o.claim, o.instance);
            }
            let _ = writeln!(s, "{} instances, {} failing", outcomes.len(), failing.len());
            for o in &failing {
                let _ = writeln!(s, "certificate for {} {}:", o.claim, o.instance);
                s.push_str(&to_json(&o.report)?);
            }
            s
        }
    };
    Ok(Report { body, notes: String::new(), holds: failing.is_empty() })
}

#[derive(Serialize)]
struct SweepCsvRow {
    removed_edge_mask: u64,
    degree: Option<usize>,
    palindromic: bool,
    gamma: String,
    gamma_positive: bool,
    unimodal: bool,
    mode: String,
}

fn sweep(m: usize, n: usize, format: Format, limits: &Limits) -> Result<Report, CliError> {
    let report: SweepReport = conjecture_sweep(m, n, limits)?;
    let consistency = report.check_consistency();
    let sound = consistency.is_ok() && report.all_gamma_positive();
    let mut body = match format {
        Format::Json => to_json(&json!({
            "report": report,
            "consistent": consistency.is_ok(),
            "consistency_error": consistency.as_ref().err(),
        }))?,
        Format::Csv => to_csv(
            &["removed_edge_mask", "degree", "palindromic", "gamma", "gamma_positive", "unimodal", "mode"],
            report.rows.iter().map(|r| SweepCsvRow {
                removed_edge_mask: r.mask,
                degree: r.degree,
                palindromic: r.palindromic,
                gamma: r.gamma.as_ref().map(|g| g.to_decimal_strings().join(";")).unwrap_or_default(),
                gamma_positive: r.gamma_positive,
                unimodal: r.unimodal,
                mode: r.mode.to_string(),
            }),
        )?,
        Format::Plain => {
            let mut s = String::new();
            for r in &report.rows {
                let removed: Vec<String> = r.spec.removed.iter().map(ToString::to_string).collect();
                let gamma = r.gamma.as_ref().map_or("-".into(), |g| format!("({})", g.to_decimal_strings().join(",")));
                let _ = writeln!(
                    s,
                    "mask={} removed=[{}] mode={} polynomial={} palindromic: {} gamma={gamma} gamma-positive: {} unimodal: {}",
                    r.mask,
                    removed.join(","),
                    r.mode,
                    r.polynomial,
                    r.palindromic,
                    r.gamma_positive,
                    r.unimodal,
                );
            }
            let _ = writeln!(
                s,
                "m={m} n={n}: {} subposets, {} gamma-negative, {} non-palindromic",
                report.rows.len(),
                report.gamma_negative,
                report.non_palindromic
            );
            s
        }
    };
    // CSV has no room for certificates, so they go to stderr
    let mut notes = String::new();
    let target = if format == Format::Csv { &mut notes } else { &mut body };
    if format != Format::Json {
        if let Err(e) = &consistency {
            let _ = writeln!(target, "inconsistent report: {e}");
        }
        for c in &report.certificates {
            target.push_str("certificate:\n");
            target.push_str(&to_json(c)?);
        }
    }
    Ok(Report { body, notes, holds: sound })
}

fn gamma(m: usize, n: usize, rule: canonlab_core::linext::RhoRule, format: Format, limits: &Limits) -> Result<Report, CliError> {
    if m == 0 || n == 0 {
        return Err(CliError::Usage("--m and --n must be at least 1".into()));
    }
    let g: GammaInterpretation = gamma_interpretation_counts(m, n, rule, limits)?;
    let expected = g.expected.as_ref().map(|e| e.to_decimal_strings()).unwrap_or_default();
    let body = match format {
        Format::Json => to_json(&g)?,
        Format::Csv => to_csv(
            &["index", "gamma", "count"],
            g.counts.iter().enumerate().map(|(i, c)| (i, expected.get(i).cloned().unwrap_or_default(), c)),
        )?,
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "m={m} n={n} rule={rule:?}");
            let _ = writeln!(s, "C_n^m = {}", g.polynomial);
            let _ = writeln!(s, "gamma: ({})", expected.join(","));
            let counts: Vec<String> = g.counts.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "rho-descent counts at offset {}: ({})", g.stated_offset, counts.join(","));
            let _ = writeln!(s, "matches: {}", g.matches_stated);
            if !g.matches_stated {
                let _ = writeln!(s, "offsets that match: {}", fmt_list(&g.matching_offsets));
                let hist: Vec<String> = g.histogram.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "histogram by rho-descents: {}", fmt_list(&hist));
            }
            s
        }
    };
    Ok(Report { body, notes: String::new(), holds: g.matches_stated })
}

#[derive(Serialize)]
struct ExtensionRow {
    order: String,
    word: String,
    descents: usize,
}

fn extensions(shape: &Shape, checked: bool, count: bool, format: Format, limits: &Limits) -> Result<Report, CliError> {
    let (name, poset, w) = if checked {
        let m = required(shape.m, "--m")?;
        let n = required(shape.n, "--n")?;
        let w = shape.labels()?.unwrap_or_else(|| Labeling::identity(m));
        if w.len() != m {
            return Err(CliError::Usage(format!("--labels needs {m} entries for the checked product")));
        }
        (format!("checked-chain-{m}x{n}"), checked_product(&Poset::chain(m), n), checked_labeling(&w, n))
    } else {
        shape.whole()?
    };
    if count {
        let hist = par_descent_histogram(&poset, &w, SPLIT_DEPTH, limits)?;
        let total: u128 = hist.iter().sum();
        let hist: Vec<String> = hist.iter().map(ToString::to_string).collect();
        let body = match format {
            Format::Json => to_json(&json!({ "poset": name, "count": total.to_string(), "descent_histogram": hist }))?,
            Format::Csv => to_csv(&["descents", "extensions"], hist.iter().enumerate())?,
            Format::Plain => format!("{name}: {total} extensions\ndescent histogram: {}\n", fmt_list(&hist)),
        };
        return Ok(holds(body));
    }
    let rows: Vec<ExtensionRow> = enumerate_linear_extensions(&poset, limits)?
        .iter()
        .map(|ext| {
            let word = ext.word(&w);
            ExtensionRow {
                order: ext.order().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                descents: descent_count(&word),
                word: fmt_word(&word),
            }
        })
        .collect();
    let body = match format {
        Format::Json => to_json(&json!({ "poset": name, "labels": w, "extensions": rows }))?,
        Format::Csv => to_csv(&["order", "word", "descents"], &rows)?,
        Format::Plain => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "{}  des={}", r.word, r.descents);
            }
            let _ = writeln!(s, "{name}: {} extensions", rows.len());
            s
        }
    };
    Ok(holds(body))
}
