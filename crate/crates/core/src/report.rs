//! Report rendering: JSON, per-prime CSV and plain text.
//!
//! Big integers and rationals are written as decimal strings, factorization
//! types as ascending integer arrays. Output is a pure function of the
//! analysis, except for the optional `generated_at` timestamp.

use std::fmt::Write as _;

use num_rational::{BigRational, Ratio};
use serde::Serialize;

use crate::disc_bound::{BoundReport, Log2Expr};
use crate::factor_type::FactorType;
use crate::galois_id::{DeterminationReport, FrequencyReport, Outcome, Verdict};

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions<'a> {
    /// Include observed and expected frequencies.
    pub frequencies: bool,
    pub bound: Option<&'a BoundReport>,
    /// Seconds since the Unix epoch; omitted when `None`.
    pub generated_at: Option<u64>,
}

#[derive(Serialize)]
struct AnalysisJson<'a> {
    poly: String,
    degree: usize,
    disc: String,
    prime_limit: u64,
    primes_scanned: usize,
    skipped: Vec<SkippedJson>,
    observed_types: Vec<&'a FactorType>,
    counts: Vec<CountJson<'a>>,
    frequencies: Option<FrequenciesJson>,
    candidates: &'a [String],
    disc_is_square: Option<bool>,
    verdict: VerdictJson<'a>,
    mode: &'static str,
    bound: Option<BoundJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
}

#[derive(Serialize)]
struct SkippedJson {
    prime: u64,
    reason: &'static str,
}

#[derive(Serialize)]
struct CountJson<'a> {
    #[serde(rename = "type")]
    ftype: &'a FactorType,
    count: u64,
}

#[derive(Serialize)]
struct FrequenciesJson {
    observed: u64,
    rows: Vec<FrequencyJson>,
    expected: Vec<ExpectedJson>,
}

#[derive(Serialize)]
struct FrequencyJson {
    #[serde(rename = "type")]
    ftype: FactorType,
    count: u64,
    exact: String,
    decimal: String,
}

#[derive(Serialize)]
struct ExpectedJson {
    group: String,
    densities: Vec<DensityJson>,
}

#[derive(Serialize)]
struct DensityJson {
    #[serde(rename = "type")]
    ftype: FactorType,
    exact: String,
    decimal: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum VerdictJson<'a> {
    Conclusive { group: &'a str, basis: &'static str },
    Consistent { groups: &'a [String] },
    Exhausted { groups: &'a [String] },
}

#[derive(Serialize)]
struct BoundJson {
    degree: usize,
    root_bound: String,
    z_bound: String,
    beta_bound: String,
    h_degree_bound: String,
    disc_base: String,
    disc_exponent: String,
    disc_bound: Option<String>,
    disc_bound_log2: Log2Json,
    a: Option<String>,
    prime_bound_log2: Log2Json,
}

#[derive(Serialize)]
struct Log2Json {
    expr: String,
    exact: Option<String>,
    approx: Option<f64>,
}

impl From<&Log2Expr> for Log2Json {
    fn from(e: &Log2Expr) -> Self {
        Log2Json {
            expr: e.to_string(),
            exact: e.exact().map(|v| v.to_string()),
            approx: Some(e.approx()),
        }
    }
}

/// `n/d` rendered to six decimal places, rounding half up.
pub fn decimal6(r: &Ratio<u64>) -> String {
    let (n, d) = (*r.numer() as u128, *r.denom() as u128);
    let scaled = (n * 2_000_000 + d) / (2 * d);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

fn exact(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn verdict_json(v: &Verdict) -> VerdictJson<'_> {
    match v {
        Verdict::Conclusive { group, basis } => VerdictJson::Conclusive {
            group,
            basis: basis.as_str(),
        },
        Verdict::Consistent(groups) => VerdictJson::Consistent { groups },
        Verdict::Exhausted(groups) => VerdictJson::Exhausted { groups },
    }
}

fn frequencies_json(f: &FrequencyReport) -> FrequenciesJson {
    FrequenciesJson {
        observed: f.observed,
        rows: f
            .rows
            .iter()
            .map(|r| FrequencyJson {
                ftype: r.ftype.clone(),
                count: r.count,
                exact: exact(&r.frequency),
                decimal: decimal6(&r.frequency),
            })
            .collect(),
        expected: f
            .expected
            .iter()
            .map(|(group, dens)| ExpectedJson {
                group: group.clone(),
                densities: dens
                    .iter()
                    .map(|(t, d)| DensityJson {
                        ftype: t.clone(),
                        exact: exact(d),
                        decimal: decimal6(d),
                    })
                    .collect(),
            })
            .collect(),
    }
}

fn bound_json(b: &BoundReport) -> BoundJson {
    let rational = |r: &BigRational| r.to_string();
    BoundJson {
        degree: b.degree,
        root_bound: rational(&b.root_bound),
        z_bound: rational(&b.z_bound),
        beta_bound: rational(&b.beta_bound),
        h_degree_bound: b.h_degree_bound.to_string(),
        disc_base: b.disc_base.to_string(),
        disc_exponent: b.disc_exponent.to_string(),
        disc_bound: b.disc_bound.as_ref().map(ToString::to_string),
        disc_bound_log2: (&b.disc_bound_log2()).into(),
        a: b.a.as_ref().map(rational),
        prime_bound_log2: match b.prime_bound_log2() {
            Some(e) => (&e).into(),
            None => Log2Json {
                expr: b.prime_bound_log2_display(),
                exact: None,
                approx: None,
            },
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn analysis_json(r: &DeterminationReport, opts: &ReportOptions<'_>) -> String {
    to_json(&AnalysisJson {
        poly: r.poly.to_string(),
        degree: r.degree,
        disc: r.disc.to_string(),
        prime_limit: r.prime_limit,
        primes_scanned: r.primes_scanned(),
        skipped: r
            .tally
            .skipped
            .iter()
            .map(|&(prime, reason)| SkippedJson {
                prime,
                reason: reason.as_str(),
            })
            .collect(),
        observed_types: r.tally.counts.keys().collect(),
        counts: r
            .tally
            .counts
            .iter()
            .map(|(t, &count)| CountJson { ftype: t, count })
            .collect(),
        frequencies: opts.frequencies.then(|| frequencies_json(&r.frequencies())),
        candidates: &r.candidates,
        disc_is_square: r.disc_is_square,
        verdict: verdict_json(&r.verdict),
        mode: r.mode.as_str(),
        bound: opts.bound.map(bound_json),
        generated_at: opts.generated_at,
    })
}

pub fn bound_report_json(b: &BoundReport) -> String {
    to_json(&bound_json(b))
}

fn type_array(t: &FactorType) -> String {
    let parts: Vec<String> = t.parts().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// One row per scanned prime, ascending: `prime,type_or_skip_reason`.
pub fn observations_csv(r: &DeterminationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["prime", "type_or_skip_reason"]).expect("in-memory write");
    for obs in &r.observations {
        let value = match &obs.outcome {
            Outcome::Type(t) => type_array(t),
            Outcome::Skipped(reason) => reason.as_str().to_string(),
        };
        w.write_record([obs.prime.to_string(), value]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Conclusive { group, basis } => format!("conclusive: {group} ({})", basis.as_str()),
        Verdict::Consistent(groups) => format!("consistent with: {}", groups.join(", ")),
        Verdict::Exhausted(groups) => {
            format!("no usable prime below the limit; candidates: {}", groups.join(", "))
        }
    }
}

pub fn analysis_text(r: &DeterminationReport, opts: &ReportOptions<'_>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial      {}", r.poly);
    let _ = writeln!(s, "degree          {}", r.degree);
    let _ = writeln!(s, "discriminant    {}", r.disc);
    let _ = writeln!(s, "primes scanned  {} (limit {})", r.primes_scanned(), r.prime_limit);
    let skipped: Vec<String> = r
        .tally
        .skipped
        .iter()
        .map(|(p, why)| format!("{p} ({})", why.as_str()))
        .collect();
    let _ = writeln!(
        s,
        "skipped         {}",
        if skipped.is_empty() { "none".to_string() } else { skipped.join(", ") }
    );
    let _ = writeln!(s, "observed types");
    for (t, c) in &r.tally.counts {
        let _ = writeln!(s, "  {:<14}{c}", t.to_string());
    }
    let _ = writeln!(s, "candidates      {}", r.candidates.join(", "));
    if let Some(square) = r.disc_is_square {
        let _ = writeln!(s, "disc is square  {}", if square { "yes" } else { "no" });
    }
    let _ = writeln!(s, "mode            {}", r.mode);
    let _ = writeln!(s, "verdict         {}", verdict_line(&r.verdict));
    if opts.frequencies {
        let f = r.frequencies();
        let _ = writeln!(s, "frequencies over {} primes", f.observed);
        for row in &f.rows {
            let _ = writeln!(
                s,
                "  {:<14}{:<10}{}",
                row.ftype.to_string(),
                decimal6(&row.frequency),
                exact(&row.frequency)
            );
        }
        for (group, dens) in &f.expected {
            let _ = writeln!(s, "expected for {group}");
            for (t, d) in dens {
                let _ = writeln!(s, "  {:<14}{:<10}{}", t.to_string(), decimal6(d), exact(d));
            }
        }
    }
    if let Some(b) = opts.bound {
        s.push_str(&bound_text(b));
    }
    if let Some(t) = opts.generated_at {
        let _ = writeln!(s, "generated at    {t}");
    }
    s
}

pub fn bound_text(b: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "root bound B_c          {}", b.root_bound);
    let _ = writeln!(s, "multiplier bound        {}", b.z_bound);
    let _ = writeln!(s, "beta bound B_beta       {}", b.beta_bound);
    let _ = writeln!(s, "degree bound m          {}", b.h_degree_bound);
    match &b.disc_bound {
        Some(d) if d.bits() <= 256 => {
            let _ = writeln!(s, "disc bound              {}^{} = {d}", b.disc_base, b.disc_exponent);
        }
        _ => {
            let _ = writeln!(s, "disc bound              {}^{}", b.disc_base, b.disc_exponent);
        }
    }
    let log = b.disc_bound_log2();
    let _ = writeln!(s, "log2 disc bound         {log} ~ {:.3}", log.approx());
    match b.prime_bound_log2() {
        Some(e) => {
            let _ = writeln!(s, "log2 prime bound        {e} ~ {:.3}", e.approx());
        }
        None => {
            let _ = writeln!(s, "log2 prime bound        {}", b.prime_bound_log2_display());
        }
    }
    s
}
