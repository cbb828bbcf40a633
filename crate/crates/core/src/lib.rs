//! Galois groups of cubic, quartic and quintic integer polynomials from
//! their factorization types modulo primes, with the supporting arithmetic
//! over `F_p` and `Z`, a small permutation-group engine, and an explicit
//! bound on the primes needed for a provably complete type set.

pub mod disc_bound;
pub mod factor_type;
pub mod fp_poly;
pub mod galois_id;
pub mod numeric;
pub mod parse;
pub mod perm_groups;
pub mod primes;
pub mod report;
pub mod tables;
pub mod zz_poly;

pub use disc_bound::{compute_bound_chain, BoundError, BoundReport};
pub use factor_type::{FactorType, ZeroPartError};
pub use fp_poly::{FpError, ModPoly};
pub use galois_id::{
    determine, disc_square_refinement, frequency_report, observe, Basis, DeterminationReport,
    DetermineOptions, GaloisError, Mode, Outcome, SkipReason, TypeObservation, TypeScanner,
    TypeTally, Verdict,
};
pub use parse::{parse_poly, ParseError, PolySpec};
pub use perm_groups::{Perm, PermGroup};
pub use zz_poly::{IntPoly, Irreducibility, IrreducibilityCertificate, PolyError};
