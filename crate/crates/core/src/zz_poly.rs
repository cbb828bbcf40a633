//! Dense univariate polynomials over `Z` with arbitrary-precision coefficients.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::factor_type::FactorType;
use crate::fp_poly::ModPoly;
use crate::primes::SegmentedPrimes;

/// Largest degree handled by [`IntPoly::is_irreducible`].
pub const MAX_IRREDUCIBILITY_DEGREE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is constant")]
    Constant,
    #[error("degree {0} is not supported (maximum is {MAX_IRREDUCIBILITY_DEGREE})")]
    UnsupportedDegree(usize),
}

/// Integer polynomial, coefficients in ascending degree order with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Outcome of [`IntPoly::is_irreducible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityCertificate),
    Reducible { factor: IntPoly },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Degree one.
    Linear,
    /// The reduction modulo this prime is squarefree and irreducible.
    ModPrime(u64),
    /// No monic factor of degree at most `n / 2` with coefficients bounded
    /// by `bound` exists.
    FactorSearch { bound: BigInt },
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Ascending coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Descending coefficients, leading coefficient first.
    pub fn from_descending_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn monomial(coeff: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest absolute value among the coefficients below the leading one.
    pub fn max_lower_coeff(&self) -> BigInt {
        let n = self.coeffs.len().saturating_sub(1);
        self.coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn derivative(&self) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`, which must divide all of them.
    fn div_scalar_exact(&self, k: &BigInt) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Pseudo-remainder `prem(self, d) = lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return IntPoly::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = ds - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &top * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps -= 1;
        }
        let tail = num_traits::pow(lc, steps);
        IntPoly::new(r).scale(&tail)
    }

    /// Exact quotient by a monic divisor when the remainder vanishes.
    pub fn div_exact_monic(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        let Some(ds) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if ds < dd {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (dd..=ds).rev() {
            let top = std::mem::take(&mut r[k]);
            if top.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                r[k - dd + j] -= &top * dc;
            }
            q[k - dd] = top;
        }
        r.iter()
            .all(Zero::is_zero)
            .then(|| IntPoly::new(q))
    }

    /// Discriminant `(-1)^(n(n-1)/2) Res(c, c') / lc(c)`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree().expect("discriminant of the zero polynomial");
        if n == 0 {
            return BigInt::zero();
        }
        let res = resultant(self, &self.derivative());
        let disc = res / self.leading().unwrap();
        if (n * (n - 1) / 2) % 2 == 1 {
            -disc
        } else {
            disc
        }
    }

    /// Cauchy bound `1 + max |c_i / c_n|` on the modulus of every complex root.
    pub fn cauchy_root_bound(&self) -> BigRational {
        let lc = self.leading().expect("root bound of the zero polynomial").abs();
        BigRational::one() + BigRational::new(self.max_lower_coeff(), lc)
    }

    /// Decides irreducibility over `Q` for monic polynomials of degree at most 5.
    ///
    /// Primes up to `prime_budget` not dividing the discriminant are tried
    /// first; a reduction of type `{n}` certifies irreducibility. The
    /// factor-degree patterns seen along the way prune the fallback search
    /// over monic integer factors with coefficients bounded by
    /// `2^n (1 + max |c_i|)`.
    pub fn is_irreducible(&self, prime_budget: u64) -> Result<Irreducibility, PolyError> {
        let n = self.degree().ok_or(PolyError::Constant)?;
        if n == 0 {
            return Err(PolyError::Constant);
        }
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        if n > MAX_IRREDUCIBILITY_DEGREE {
            return Err(PolyError::UnsupportedDegree(n));
        }
        if n == 1 {
            return Ok(Irreducibility::Irreducible(IrreducibilityCertificate::Linear));
        }
        if self.coeffs[0].is_zero() {
            return Ok(Irreducibility::Reducible {
                factor: IntPoly::from_i64(&[0, 1]),
            });
        }

        // Degrees d for which a factor of degree d is still possible.
        let mut possible: BTreeSet<usize> = (1..n).collect();
        let disc = self.discriminant();
        if !disc.is_zero() {
            for p in SegmentedPrimes::new(prime_budget) {
                if (&disc % BigInt::from(p)).is_zero() {
                    continue;
                }
                let reduced = ModPoly::reduce(self, p).expect("p is prime");
                let Ok(t) = reduced.distinct_degree_type() else {
                    continue;
                };
                if t.len() == 1 {
                    return Ok(Irreducibility::Irreducible(
                        IrreducibilityCertificate::ModPrime(p),
                    ));
                }
                let sums = subset_sums(&t);
                possible.retain(|d| sums.contains(d));
            }
        }

        let bound = BigInt::from(1u32 << n) * (BigInt::one() + self.max_lower_coeff());
        for d in 1..=n / 2 {
            if !possible.contains(&d) && !possible.contains(&(n - d)) {
                continue;
            }
            if let Some(factor) = self.find_monic_factor(d, &bound) {
                return Ok(Irreducibility::Reducible { factor });
            }
        }
        Ok(Irreducibility::Irreducible(
            IrreducibilityCertificate::FactorSearch { bound },
        ))
    }

    /// Exhaustive search for a monic factor of degree `d` whose constant term
    /// divides `c_0` and whose other coefficients lie in `[-bound, bound]`.
    fn find_monic_factor(&self, d: usize, bound: &BigInt) -> Option<IntPoly> {
        let c0 = &self.coeffs[0];
        let at_one = self.eval(&BigInt::one());
        let consts: Vec<BigInt> = signed_divisors(c0)
            .into_iter()
            .filter(|b| b.abs() <= *bound)
            .collect();
        let range: Vec<BigInt> = num_iter(bound);
        let mut middle = vec![0usize; d.saturating_sub(1)];
        loop {
            for b0 in &consts {
                let mut coeffs = Vec::with_capacity(d + 1);
                coeffs.push(b0.clone());
                coeffs.extend(middle.iter().map(|&i| range[i].clone()));
                coeffs.push(BigInt::one());
                let cand = IntPoly::new(coeffs);
                let v1 = cand.eval(&BigInt::one());
                if !at_one.is_zero() && (v1.is_zero() || !(&at_one % &v1).is_zero()) {
                    continue;
                }
                if self.div_exact_monic(&cand).is_some() {
                    return Some(cand);
                }
            }
            // odometer over the middle coefficients
            let mut k = 0;
            loop {
                if k == middle.len() {
                    return None;
                }
                middle[k] += 1;
                if middle[k] < range.len() {
                    break;
                }
                middle[k] = 0;
                k += 1;
            }
        }
    }
}

fn num_iter(bound: &BigInt) -> Vec<BigInt> {
    let b = bound.to_i64().expect("factor search bound fits in i64");
    (-b..=b).map(BigInt::from).collect()
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let root = n.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                out.push(e.clone());
                out.push(-e);
            }
            out.push(d.clone());
            out.push(-d.clone());
        }
        d += 1;
    }
    out
}

fn subset_sums(t: &FactorType) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0usize]);
    for &p in t.parts() {
        let next: Vec<usize> = sums.iter().map(|s| s + p as usize).collect();
        sums.extend(next);
    }
    sums
}

/// Resultant by the subresultant pseudo-remainder sequence.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            negate = true;
        }
    }
    let sign = |v: BigInt, neg: bool| if neg { -v } else { v };
    if b.degree() == Some(0) {
        let v = num_traits::pow(b.coeffs[0].clone(), a.degree().unwrap());
        return sign(v, negate);
    }

    let ca = a.content();
    let cb = b.content();
    let t = num_traits::pow(ca.clone(), b.degree().unwrap())
        * num_traits::pow(cb.clone(), a.degree().unwrap());
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&divisor);
        g = a.leading().unwrap().clone();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1);
        }
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lb = b.coeffs[0].clone();
    let h = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
    sign(t * h, negate)
}

impl fmt::Display for IntPoly {
    /// Canonical expression form, e.g. `x^5 - x - 1` or `2x^2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 0, 0, -2]).derivative(), p(&[3, 0, 0]));
        assert_eq!(p(&[5]).derivative(), IntPoly::zero());
        assert_eq!(p(&[1, 0, 0, 0, -1, -1]).derivative(), p(&[5, 0, 0, 0, -1]));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[1, 0, 0, -2]).discriminant(), BigInt::from(-108));
        assert_eq!(p(&[1, 0, 1]).discriminant(), BigInt::from(-4));
        assert_eq!(p(&[1, 0, -3, -1]).discriminant(), BigInt::from(81));
        assert_eq!(p(&[1, 0, 0, 0, 1]).discriminant(), BigInt::from(256));
        // x^5 - x - 1 has discriminant 2869 = 19 * 151
        assert_eq!(p(&[1, 0, 0, 0, -1, -1]).discriminant(), BigInt::from(2869));
        // repeated root
        assert_eq!(p(&[1, -2, 1]).discriminant(), BigInt::zero());
    }

    #[test]
    fn non_monic_discriminant() {
        // 2x^2 + 3x + 1: 9 - 8 = 1
        assert_eq!(p(&[2, 3, 1]).discriminant(), BigInt::from(1));
        // 3x^3 - x + 5: b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd with a=3,b=0,c=-1,d=5
        assert_eq!(p(&[3, 0, -1, 5]).discriminant(), BigInt::from(12 - 27 * 9 * 25));
    }

    #[test]
    fn cauchy_bound_examples() {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(p(&[1, 0, 1]).cauchy_root_bound(), r(2));
        assert_eq!(p(&[1, 0, 0, -2]).cauchy_root_bound(), r(3));
        assert_eq!(p(&[1, 0, 0, 0, -1, -1]).cauchy_root_bound(), r(2));
    }

    #[test]
    fn irreducibility_examples() {
        let x4p1 = p(&[1, 0, 0, 0, 1]).is_irreducible(1000).unwrap();
        assert!(matches!(
            x4p1,
            Irreducibility::Irreducible(IrreducibilityCertificate::FactorSearch { .. })
        ));
        assert_eq!(
            p(&[1, 0, 0, -2]).is_irreducible(1000).unwrap(),
            Irreducibility::Irreducible(IrreducibilityCertificate::ModPrime(7))
        );
        assert_eq!(
            p(&[1, 0, 0, 0, -1]).is_irreducible(1000).unwrap(),
            Irreducibility::Reducible { factor: p(&[1, 1]) }
        );
        // (x^2 + 1)(x^2 + x + 1)
        let Irreducibility::Reducible { factor } = p(&[1, 1, 2, 1, 1]).is_irreducible(100).unwrap()
        else {
            panic!("expected reducible")
        };
        assert_eq!(factor.degree(), Some(2));
        // (x^2 - 2)^2 has zero discriminant
        assert!(!p(&[1, 0, -4, 0, 4]).is_irreducible(100).unwrap().is_irreducible());
    }

    #[test]
    fn irreducibility_errors() {
        assert_eq!(p(&[2, 0, 1]).is_irreducible(10), Err(PolyError::NotMonic));
        assert_eq!(
            p(&[1, 0, 0, 0, 0, 0, 1]).is_irreducible(10),
            Err(PolyError::UnsupportedDegree(6))
        );
        assert_eq!(p(&[7]).is_irreducible(10), Err(PolyError::Constant));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[1, 0, 0, 0, -1, -1]).to_string(), "x^5 - x - 1");
        assert_eq!(p(&[-2, 3, 0]).to_string(), "-2x^2 + 3x");
        assert_eq!(p(&[1, 0, 0, -2]).to_string(), "x^3 - 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, 1, 4, 1, 5]);
        let b = p(&[2, 7, 1]);
        // lc(b)^(4-2+1) a = q b + r with deg r < 2
        let r = a.pseudo_rem(&b);
        assert!(r.degree().unwrap() < 2);
        // 8a - r is a multiple of b
        let diff = a.scale(&BigInt::from(8)).sub(&r);
        assert!(diff.pseudo_rem(&b).is_zero());
    }
}
