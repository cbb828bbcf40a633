//! Galois group determination from factorization types modulo primes.
//!
//! For a monic irreducible `c` of degree 3 to 5, the types of `c mod p` over
//! unramified primes are exactly the cycle types of its Galois group. The
//! pipeline scans primes in ascending order, collects the types it sees and
//! keeps the table rows whose cycle-type sets contain all of them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::factor_type::FactorType;
use crate::fp_poly::ModPoly;
use crate::perm_groups::expected_type_densities;
use crate::primes::primes_up_to;
use crate::tables::{self, TableRow};
use crate::zz_poly::{IntPoly, Irreducibility, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("degree {0} is outside the determination range 3..=5")]
    UnsupportedDegree(usize),
    #[error("polynomial is reducible: {factor} is a factor")]
    Reducible { factor: IntPoly },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("observed types {0} fit no transitive group")]
    NoCandidate(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Report only what set inclusion proves.
    #[default]
    Strict,
    /// Treat the observed types as the complete set of cycle types.
    AssumeComplete,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Strict => "strict",
            Mode::AssumeComplete => "assume-complete",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "assume-complete" => Ok(Mode::AssumeComplete),
            other => Err(format!("unknown mode `{other}` (expected strict or assume-complete)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SkipReason {
    DividesDiscriminant,
    NotSquarefree,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::DividesDiscriminant => "divides-disc",
            SkipReason::NotSquarefree => "not-squarefree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Type(FactorType),
    Skipped(SkipReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeObservation {
    pub prime: u64,
    pub outcome: Outcome,
}

impl TypeObservation {
    pub fn factor_type(&self) -> Option<&FactorType> {
        match &self.outcome {
            Outcome::Type(t) => Some(t),
            Outcome::Skipped(_) => None,
        }
    }
}

/// Reduces one fixed polynomial modulo many primes.
#[derive(Clone, Debug)]
pub struct TypeScanner {
    poly: IntPoly,
    disc: BigInt,
}

impl TypeScanner {
    /// `c` must be nonconstant.
    pub fn new(c: &IntPoly) -> Self {
        TypeScanner {
            disc: c.discriminant(),
            poly: c.clone(),
        }
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn observe(&self, p: u64) -> TypeObservation {
        let outcome = if (&self.disc % BigInt::from(p)).is_zero() {
            Outcome::Skipped(SkipReason::DividesDiscriminant)
        } else {
            let reduced = ModPoly::reduce(&self.poly, p).expect("scanned moduli are prime");
            match reduced.distinct_degree_type() {
                Ok(t) => Outcome::Type(t),
                Err(_) => Outcome::Skipped(SkipReason::NotSquarefree),
            }
        };
        TypeObservation { prime: p, outcome }
    }

    /// Observations for every prime, in the order given. Primes are reduced
    /// in parallel.
    pub fn scan(&self, primes: &[u64]) -> Vec<TypeObservation> {
        primes.par_iter().map(|&p| self.observe(p)).collect()
    }
}

/// Type of `c mod p`, or the reason `p` was skipped.
pub fn observe(c: &IntPoly, p: u64) -> TypeObservation {
    TypeScanner::new(c).observe(p)
}

/// Counters accumulated over a prime scan. Tallies over disjoint prime
/// ranges merge associatively and commutatively.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TypeTally {
    pub counts: BTreeMap<FactorType, u64>,
    /// Skipped primes in ascending order.
    pub skipped: Vec<(u64, SkipReason)>,
    pub scanned: usize,
}

impl TypeTally {
    pub fn add(&mut self, obs: &TypeObservation) {
        self.scanned += 1;
        match &obs.outcome {
            Outcome::Type(t) => *self.counts.entry(t.clone()).or_default() += 1,
            Outcome::Skipped(r) => self.skipped.push((obs.prime, *r)),
        }
    }

    pub fn merge(mut self, other: TypeTally) -> TypeTally {
        for (t, c) in other.counts {
            *self.counts.entry(t).or_default() += c;
        }
        self.skipped.extend(other.skipped);
        self.skipped.sort_unstable();
        self.scanned += other.scanned;
        self
    }

    pub fn observed_types(&self) -> BTreeSet<FactorType> {
        self.counts.keys().cloned().collect()
    }

    /// Number of primes that produced a type.
    pub fn observed(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl<'a> FromIterator<&'a TypeObservation> for TypeTally {
    fn from_iter<I: IntoIterator<Item = &'a TypeObservation>>(iter: I) -> Self {
        let mut tally = TypeTally::default();
        for obs in iter {
            tally.add(obs);
        }
        tally
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Only one group contains every observed type.
    UniqueCandidate,
    /// The discriminant's squareness left one candidate.
    DiscriminantSquare,
    /// Assume-complete mode: the observed set equals one group's full set.
    ExactMatch,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::UniqueCandidate => "unique-candidate",
            Basis::DiscriminantSquare => "discriminant-square",
            Basis::ExactMatch => "exact-match",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Conclusive { group: String, basis: Basis },
    /// Several groups remain consistent with the observations.
    Consistent(Vec<String>),
    /// The scan ended without a single unramified observation.
    Exhausted(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetermineOptions {
    /// Use the squareness of the discriminant to break ties between groups
    /// inside and outside `A_n`.
    pub disc_refinement: bool,
    /// Stop scanning as soon as one candidate remains.
    pub early_exit: bool,
    /// Primes tried for an irreducibility certificate.
    pub irreducibility_budget: u64,
}

impl Default for DetermineOptions {
    fn default() -> Self {
        DetermineOptions {
            disc_refinement: true,
            early_exit: false,
            irreducibility_budget: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminationReport {
    pub poly: IntPoly,
    pub degree: usize,
    pub disc: BigInt,
    pub prime_limit: u64,
    pub mode: Mode,
    /// One entry per scanned prime, ascending.
    pub observations: Vec<TypeObservation>,
    pub tally: TypeTally,
    /// Groups whose cycle-type sets contain every observed type.
    pub candidates: Vec<String>,
    /// `None` when the refinement is disabled.
    pub disc_is_square: Option<bool>,
    pub verdict: Verdict,
    /// Cycle-type densities of the verdict group when conclusive.
    pub expected_densities: Option<BTreeMap<FactorType, Ratio<u64>>>,
}

impl DeterminationReport {
    pub fn primes_scanned(&self) -> usize {
        self.tally.scanned
    }

    pub fn observed_types(&self) -> BTreeSet<FactorType> {
        self.tally.observed_types()
    }

    pub fn frequencies(&self) -> FrequencyReport {
        FrequencyReport::new(self.degree, &self.tally, &self.candidates)
    }
}

/// True iff the discriminant is a perfect square.
pub fn disc_square_refinement(c: &IntPoly) -> bool {
    is_square(&c.discriminant())
}

fn is_square(d: &BigInt) -> bool {
    !d.is_negative() && {
        let r = d.sqrt();
        &(&r * &r) == d
    }
}

fn check_subject(c: &IntPoly, budget: u64) -> Result<usize, GaloisError> {
    let n = c.degree().unwrap_or(0);
    if !(3..=5).contains(&n) {
        return Err(GaloisError::UnsupportedDegree(n));
    }
    match c.is_irreducible(budget)? {
        Irreducibility::Irreducible(_) => Ok(n),
        Irreducibility::Reducible { factor } => Err(GaloisError::Reducible { factor }),
    }
}

fn candidates_for<'t>(rows: &'t [TableRow], observed: &BTreeSet<FactorType>) -> Vec<&'t TableRow> {
    rows.iter().filter(|r| r.admits(observed)).collect()
}

/// Scans primes up to `prime_limit` and decides the Galois group as far as
/// the observations and `mode` allow.
pub fn determine(
    c: &IntPoly,
    prime_limit: u64,
    mode: Mode,
    options: &DetermineOptions,
) -> Result<DeterminationReport, GaloisError> {
    let n = check_subject(c, options.irreducibility_budget)?;
    let rows = &tables::table(n).expect("tables cover degrees 3..=5").groups;
    let scanner = TypeScanner::new(c);
    let primes = primes_up_to(prime_limit);

    let observations = if options.early_exit {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for &p in &primes {
            let obs = scanner.observe(p);
            let new_type = obs.factor_type().is_some_and(|t| seen.insert(t.clone()));
            out.push(obs);
            if new_type && candidates_for(rows, &seen).len() <= 1 {
                break;
            }
        }
        out
    } else {
        scanner.scan(&primes)
    };
    let tally: TypeTally = observations.iter().collect();
    let observed = tally.observed_types();
    let candidates = candidates_for(rows, &observed);
    let names = |rs: &[&TableRow]| rs.iter().map(|r| r.name.clone()).collect::<Vec<_>>();

    let disc_is_square = options
        .disc_refinement
        .then(|| is_square(scanner.discriminant()));

    let verdict = if observed.is_empty() {
        Verdict::Exhausted(names(&candidates))
    } else if candidates.is_empty() {
        let shown: Vec<String> = observed.iter().map(ToString::to_string).collect();
        return Err(GaloisError::NoCandidate(shown.join(" ")));
    } else if candidates.len() == 1 {
        Verdict::Conclusive {
            group: candidates[0].name.clone(),
            basis: Basis::UniqueCandidate,
        }
    } else {
        let refined: Option<Vec<&TableRow>> = disc_is_square.map(|square| {
            candidates
                .iter()
                .copied()
                .filter(|r| r.is_even() == square)
                .collect()
        });
        let exact: Vec<&TableRow> = candidates
            .iter()
            .copied()
            .filter(|r| r.types == observed)
            .collect();
        match refined {
            Some(r) if r.len() == 1 => Verdict::Conclusive {
                group: r[0].name.clone(),
                basis: Basis::DiscriminantSquare,
            },
            _ if mode == Mode::AssumeComplete && exact.len() == 1 => Verdict::Conclusive {
                group: exact[0].name.clone(),
                basis: Basis::ExactMatch,
            },
            _ => Verdict::Consistent(names(&candidates)),
        }
    };

    let expected_densities = match &verdict {
        Verdict::Conclusive { group, .. } => tables::transitive_group(n, group)
            .map(|g| expected_type_densities(g).expect("transitive group of degree >= 3")),
        _ => None,
    };

    Ok(DeterminationReport {
        poly: c.clone(),
        degree: n,
        disc: scanner.discriminant().clone(),
        prime_limit,
        mode,
        observations,
        tally,
        candidates: names(&candidates),
        disc_is_square,
        verdict,
        expected_densities,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyRow {
    pub ftype: FactorType,
    pub count: u64,
    pub frequency: Ratio<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyReport {
    /// Primes that produced a type.
    pub observed: u64,
    pub rows: Vec<FrequencyRow>,
    /// Cycle-type densities of each candidate group.
    pub expected: Vec<(String, BTreeMap<FactorType, Ratio<u64>>)>,
}

impl FrequencyReport {
    fn new(degree: usize, tally: &TypeTally, candidates: &[String]) -> Self {
        let observed = tally.observed();
        let rows = tally
            .counts
            .iter()
            .map(|(t, &count)| FrequencyRow {
                ftype: t.clone(),
                count,
                frequency: Ratio::new(count, observed),
            })
            .collect();
        let expected = candidates
            .iter()
            .filter_map(|name| {
                let g = tables::transitive_group(degree, name)?;
                Some((name.clone(), expected_type_densities(g).ok()?))
            })
            .collect();
        FrequencyReport {
            observed,
            rows,
            expected,
        }
    }

    pub fn frequency_of(&self, t: &FactorType) -> Option<Ratio<u64>> {
        self.rows.iter().find(|r| &r.ftype == t).map(|r| r.frequency)
    }
}

/// Observed type frequencies over the unskipped primes up to `prime_limit`,
/// with the densities each candidate group predicts.
pub fn frequency_report(c: &IntPoly, prime_limit: u64) -> Result<FrequencyReport, GaloisError> {
    let options = DetermineOptions {
        disc_refinement: false,
        ..DetermineOptions::default()
    };
    Ok(determine(c, prime_limit, Mode::Strict, &options)?.frequencies())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ftype;

    fn p(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn observe_examples() {
        let c = p(&[1, 0, 0, -2]);
        assert_eq!(observe(&c, 5).outcome, Outcome::Type(ftype![1, 2]));
        assert_eq!(
            observe(&c, 3).outcome,
            Outcome::Skipped(SkipReason::DividesDiscriminant)
        );
        assert_eq!(observe(&c, 31).outcome, Outcome::Type(ftype![1, 1, 1]));
    }

    #[test]
    fn cyclic_cubic() {
        let c = p(&[1, 0, -3, -1]);
        let opts = DetermineOptions::default();
        let strict = determine(&c, 1000, Mode::Strict, &opts).unwrap();
        assert_eq!(strict.observed_types(), BTreeSet::from([ftype![1, 1, 1], ftype![3]]));
        assert_eq!(strict.candidates, ["A3", "S3"]);
        assert_eq!(
            strict.verdict,
            Verdict::Conclusive {
                group: "A3".into(),
                basis: Basis::DiscriminantSquare
            }
        );

        let off = DetermineOptions {
            disc_refinement: false,
            ..opts
        };
        let strict = determine(&c, 1000, Mode::Strict, &off).unwrap();
        assert_eq!(strict.verdict, Verdict::Consistent(vec!["A3".into(), "S3".into()]));
        let complete = determine(&c, 1000, Mode::AssumeComplete, &off).unwrap();
        assert_eq!(
            complete.verdict,
            Verdict::Conclusive {
                group: "A3".into(),
                basis: Basis::ExactMatch
            }
        );
    }

    #[test]
    fn early_exit_stops_at_first_unique_candidate() {
        let c = p(&[1, 0, 0, -2]);
        let opts = DetermineOptions {
            early_exit: true,
            ..DetermineOptions::default()
        };
        let r = determine(&c, 1000, Mode::Strict, &opts).unwrap();
        // 2 and 3 are skipped, 5 gives {1,2}
        assert_eq!(r.observations.last().unwrap().prime, 5);
        assert_eq!(r.primes_scanned(), 3);
        assert!(matches!(r.verdict, Verdict::Conclusive { ref group, .. } if group == "S3"));
    }

    #[test]
    fn skipped_primes_divide_the_discriminant() {
        let c = p(&[1, 0, 0, 0, -1, -1]);
        let r = determine(&c, 500, Mode::Strict, &DetermineOptions::default()).unwrap();
        let skipped: Vec<u64> = r.tally.skipped.iter().map(|s| s.0).collect();
        assert_eq!(skipped, [19, 151]);
    }

    #[test]
    fn limit_below_first_unskipped_prime() {
        let c = p(&[1, 0, 0, -2]);
        let r = determine(&c, 3, Mode::Strict, &DetermineOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Exhausted(vec!["A3".into(), "S3".into()]));
        assert!(frequency_report(&c, 3).unwrap().rows.is_empty());
    }

    #[test]
    fn rejects_bad_subjects() {
        let opts = DetermineOptions::default();
        assert_eq!(
            determine(&p(&[1, 0, 1]), 100, Mode::Strict, &opts),
            Err(GaloisError::UnsupportedDegree(2))
        );
        assert!(matches!(
            determine(&p(&[1, 0, 0, 0, -1]), 100, Mode::Strict, &opts),
            Err(GaloisError::Reducible { .. })
        ));
        assert_eq!(
            determine(&p(&[2, 0, 0, 1]), 100, Mode::Strict, &opts),
            Err(GaloisError::Poly(PolyError::NotMonic))
        );
    }

    #[test]
    fn disc_square_examples() {
        assert!(disc_square_refinement(&p(&[1, 0, -3, -1])));
        assert!(!disc_square_refinement(&p(&[1, 0, 0, -2])));
        assert!(disc_square_refinement(&p(&[1, 0, 0, 0, 1])));
    }

    #[test]
    fn tallies_merge_like_a_single_scan() {
        let c = p(&[1, 0, 0, -2]);
        let scanner = TypeScanner::new(&c);
        let primes = primes_up_to(2000);
        let (lo, hi) = primes.split_at(primes.len() / 3);
        let whole: TypeTally = scanner.scan(&primes).iter().collect();
        let a: TypeTally = scanner.scan(lo).iter().collect();
        let b: TypeTally = scanner.scan(hi).iter().collect();
        assert_eq!(b.clone().merge(a.clone()), whole);
        assert_eq!(a.merge(b), whole);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("strict".parse::<Mode>(), Ok(Mode::Strict));
        assert_eq!("assume-complete".parse::<Mode>(), Ok(Mode::AssumeComplete));
        assert!("lenient".parse::<Mode>().is_err());
    }
}
