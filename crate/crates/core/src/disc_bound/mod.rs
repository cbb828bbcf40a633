//! Explicit upper bound on the discriminant of the splitting field of a
//! monic polynomial, and the resulting bound on the primes a scan must cover
//! before its type set is provably complete.
//!
//! Chain: every root of `c` is bounded by `B_c`; a primitive element
//! `β = α_1 + z_2 α_2 + ... + z_n α_n` exists with `|z_i| < (n!)^2 / 2`, so
//! every conjugate of `β` is bounded by `B_β = B_c (1 + (n-1) (n!)^2 / 2)`.
//! Its minimal polynomial `h` has degree `m <= n!`, and
//! `|disc h| = prod_{i<j} (β_i - β_j)^2 <= (2 B_β)^{m(m-1)}`. The splitting
//! field discriminant divides `disc h`.

mod matrix;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::zz_poly::{IntPoly, Irreducibility, PolyError};

pub use matrix::{build_beta_matrix, charpoly, verify_beta_root, BetaRootCheck, IntMatrix};

/// Largest `disc_bound` kept as an exact integer, in bits.
pub const EXACT_BITS_LIMIT: u64 = 1_000_000;

/// Largest degree accepted by [`build_beta_matrix`]; the matrix has
/// dimension `n^n`.
pub const MAX_MATRIX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("degree {0} defines a trivial extension; degree must be at least 2")]
    DegreeTooSmall(usize),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("the exponent A must be positive")]
    NonPositiveExponent,
    #[error("beta matrix is limited to degree {MAX_MATRIX_DEGREE}, got {0}")]
    UnsupportedDegree(usize),
    #[error("expected {expected} multipliers z_2..z_n, got {found}")]
    MultiplierCount { expected: usize, found: usize },
    #[error("multiplier z_{index} = {value} is outside |z| < {limit}")]
    MultiplierOutOfRange { index: usize, value: i64, limit: String },
    #[error("polynomial is reducible: {factor} is a factor")]
    Reducible { factor: IntPoly },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `offset + coefficient * log2(base)`, exact but not necessarily rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Log2Expr {
    pub offset: BigRational,
    pub coefficient: BigRational,
    pub base: BigInt,
}

impl Log2Expr {
    /// The value as a rational when `base` is a power of two.
    pub fn exact(&self) -> Option<BigRational> {
        let bits = self.base.bits();
        if bits == 0 || self.base.is_negative() || self.base != BigInt::one() << (bits - 1) {
            return None;
        }
        Some(&self.offset + &self.coefficient * BigRational::from_integer(BigInt::from(bits - 1)))
    }

    pub fn approx(&self) -> f64 {
        self.offset.to_f64().unwrap_or(f64::NAN)
            + self.coefficient.to_f64().unwrap_or(f64::NAN) * log2_int(&self.base)
    }
}

impl fmt::Display for Log2Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.exact() {
            return write!(f, "{v}");
        }
        if !self.offset.is_zero() {
            write!(f, "{} + ", self.offset)?;
        }
        write!(f, "{}*log2({})", self.coefficient, self.base)
    }
}

fn log2_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::NAN).log2();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap_or(f64::NAN).log2() + shift as f64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub degree: usize,
    /// `B_c`: every complex root of `c` has absolute value below this.
    pub root_bound: BigRational,
    /// `(n!)^2 / 2`.
    pub z_bound: BigRational,
    /// `B_β = B_c (1 + (n-1) z_bound)`.
    pub beta_bound: BigRational,
    /// `m = n!`.
    pub h_degree_bound: BigUint,
    /// `2 ceil(B_β)`.
    pub disc_base: BigInt,
    /// `m (m - 1)`.
    pub disc_exponent: BigUint,
    /// `disc_base ^ disc_exponent`, when it fits in [`EXACT_BITS_LIMIT`] bits.
    pub disc_bound: Option<BigInt>,
    /// The exponent `A` of the prime bound; `None` keeps it symbolic.
    pub a: Option<BigRational>,
}

impl BoundReport {
    pub fn disc_bound_log2(&self) -> Log2Expr {
        Log2Expr {
            offset: BigRational::zero(),
            coefficient: BigRational::from_integer(self.disc_exponent.clone().into()),
            base: self.disc_base.clone(),
        }
    }

    /// `log2(2 disc_bound^A) = 1 + A log2(disc_bound)`; `None` if `A` is unset.
    pub fn prime_bound_log2(&self) -> Option<Log2Expr> {
        let a = self.a.as_ref()?;
        Some(Log2Expr {
            offset: BigRational::one(),
            coefficient: a * BigRational::from_integer(self.disc_exponent.clone().into()),
            base: self.disc_base.clone(),
        })
    }

    /// The prime bound's logarithm, in `A` when `A` is unset.
    pub fn prime_bound_log2_display(&self) -> String {
        match self.prime_bound_log2() {
            Some(e) => e.to_string(),
            None => format!("1 + A*{}*log2({})", self.disc_exponent, self.disc_base),
        }
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// The certified chain for a monic `c` of degree at least 2.
pub fn compute_bound_chain(c: &IntPoly, a: Option<BigRational>) -> Result<BoundReport, BoundError> {
    let n = c.degree().unwrap_or(0);
    if n < 2 {
        return Err(BoundError::DegreeTooSmall(n));
    }
    if !c.is_monic() {
        return Err(BoundError::NotMonic);
    }
    if a.as_ref().is_some_and(|a| !a.is_positive()) {
        return Err(BoundError::NonPositiveExponent);
    }
    let root_bound = c.cauchy_root_bound();
    let m = factorial(n);
    let z_bound = BigRational::new(BigInt::from(&m * &m), BigInt::from(2));
    let beta_bound =
        &root_bound * (BigRational::one() + BigRational::from_integer(BigInt::from(n - 1)) * &z_bound);
    let disc_base = BigInt::from(2) * beta_bound.ceil().to_integer();
    let disc_exponent = &m * (&m - 1u32);
    let disc_bound = (disc_exponent.to_u64())
        .filter(|&e| e.checked_mul(disc_base.bits()).is_some_and(|b| b <= EXACT_BITS_LIMIT))
        .map(|e| num_traits::pow(disc_base.clone(), e as usize));
    Ok(BoundReport {
        degree: n,
        root_bound,
        z_bound,
        beta_bound,
        h_degree_bound: m,
        disc_base,
        disc_exponent,
        disc_bound,
        a,
    })
}

pub(crate) fn require_irreducible(c: &IntPoly) -> Result<(), BoundError> {
    match c.is_irreducible(1000)? {
        Irreducibility::Irreducible(_) => Ok(()),
        Irreducibility::Reducible { factor } => Err(BoundError::Reducible { factor }),
    }
}

/// Whether `|z| < (n!)^2 / 2`, i.e. `2|z| < (n!)^2`.
pub(crate) fn multiplier_in_range(n: usize, z: i64) -> bool {
    let f = factorial(n);
    BigUint::from(z.unsigned_abs()) * 2u32 < &f * &f
}

pub(crate) fn z_limit_display(n: usize) -> String {
    let f = factorial(n);
    let (q, r) = (&f * &f).div_rem(&BigUint::from(2u32));
    if r.is_zero() {
        q.to_string()
    } else {
        format!("{}/2", &f * &f)
    }
}
