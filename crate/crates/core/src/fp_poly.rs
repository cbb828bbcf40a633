//! Polynomials over prime fields `F_p` with word-sized `p`.
//!
//! Only factorization *types* are ever needed downstream, so the module stops
//! at distinct-degree factorization: for a squarefree monic `f`, the gcd of
//! `f` with `x^(p^d) - x` collects every irreducible factor of degree `d`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::factor_type::FactorType;
use crate::primes::{is_prime, mul_mod, pow_mod};
use crate::zz_poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("moduli differ: {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefree(u64),
    #[error("zero polynomial")]
    Zero,
}

/// Element of `F_p[x]`: residues in `[0, p)`, ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Reduces the given coefficients into `[0, p)`; `p` must be prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, FpError> {
        if !is_prime(p) {
            return Err(FpError::NotPrime(p));
        }
        Ok(Self::from_raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn reduce(c: &IntPoly, p: u64) -> Result<Self, FpError> {
        if !is_prime(p) {
            return Err(FpError::NotPrime(p));
        }
        let m = BigInt::from(p);
        let coeffs = c
            .coeffs()
            .iter()
            .map(|a| a.mod_floor(&m).to_u64().expect("residue fits in u64"))
            .collect();
        Ok(Self::from_raw(p, coeffs))
    }

    fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    fn x(p: u64) -> Self {
        ModPoly { p, coeffs: vec![0, 1] }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn check_modulus(&self, other: &ModPoly) -> Result<(), FpError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(FpError::ModulusMismatch(self.p, other.p))
        }
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> ModPoly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => {
                let inv = self.inv(lc);
                ModPoly {
                    p: self.p,
                    coeffs: self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect(),
                }
            }
        }
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        Self::from_raw(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    fn sub(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_raw(
            p,
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
        )
    }

    fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return Self::from_raw(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::from_raw(p, out)
    }

    /// Euclidean division; panics on a zero divisor.
    fn div_rem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = self.inv(*d.coeffs.last().unwrap());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::from_raw(p, Vec::new()), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let t = mul_mod(r[k], inv, p);
            if t == 0 {
                continue;
            }
            q[k - dd] = t;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                r[idx] = (r[idx] + p - mul_mod(t, dc, p)) % p;
            }
        }
        r.truncate(dd);
        (Self::from_raw(p, q), Self::from_raw(p, r))
    }

    fn rem(&self, d: &ModPoly) -> ModPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(a, 0)` is `a` made monic.
    pub fn gcd(&self, other: &ModPoly) -> Result<ModPoly, FpError> {
        self.check_modulus(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// True iff `gcd(f, f') = 1`.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let g = self.gcd(&self.derivative()).expect("same modulus");
        g.degree() == Some(0)
    }

    /// `self^exp mod m`.
    fn pow_mod(&self, mut exp: u64, m: &ModPoly) -> ModPoly {
        let mut base = self.rem(m);
        let mut acc = Self::from_raw(self.p, vec![1]).rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Degrees of the irreducible factors of a squarefree polynomial.
    pub fn distinct_degree_type(&self) -> Result<FactorType, FpError> {
        if self.is_zero() {
            return Err(FpError::Zero);
        }
        if !self.is_squarefree() {
            return Err(FpError::NotSquarefree(self.p));
        }
        let x = Self::x(self.p);
        let mut rest = self.monic();
        let mut frob = x.rem(&rest); // x^(p^d) mod rest
        let mut parts = Vec::new();
        let mut d = 0;
        while let Some(deg) = rest.degree().filter(|&k| k > 0) {
            d += 1;
            if 2 * d > deg {
                parts.push(deg);
                break;
            }
            frob = frob.pow_mod(self.p, &rest);
            let g = rest.gcd(&frob.sub(&x))?;
            let k = g.degree().unwrap();
            if k > 0 {
                parts.extend(std::iter::repeat_n(d, k / d));
                rest = rest.div_rem(&g).0;
                frob = frob.rem(&rest);
            }
        }
        Ok(FactorType::from_positive(parts))
    }
}

/// `c mod p`.
pub fn reduce_mod_p(c: &IntPoly, p: u64) -> Result<ModPoly, FpError> {
    ModPoly::reduce(c, p)
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if e == 0 || c != 1 {
                write!(f, "{c}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ftype;

    fn x3m2() -> IntPoly {
        IntPoly::from_descending_i64(&[1, 0, 0, -2])
    }

    fn mp(p: u64, asc: &[u64]) -> ModPoly {
        ModPoly::new(p, asc.to_vec()).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_mod_p(&x3m2(), 5).unwrap(), mp(5, &[3, 0, 0, 1]));
        assert_eq!(reduce_mod_p(&x3m2(), 2).unwrap(), mp(2, &[0, 0, 0, 1]));
        let x4p1 = IntPoly::from_descending_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(reduce_mod_p(&x4p1, 3).unwrap(), mp(3, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(reduce_mod_p(&x3m2(), 9), Err(FpError::NotPrime(9)));
        assert_eq!(ModPoly::new(1, vec![1]), Err(FpError::NotPrime(1)));
    }

    #[test]
    fn gcd_examples() {
        let f = mp(5, &[3, 0, 0, 1]);
        assert_eq!(f.gcd(&mp(5, &[0, 0, 3])).unwrap(), mp(5, &[1]));
        let g = mp(5, &[2, 4, 0, 3]);
        assert_eq!(g.gcd(&g).unwrap(), g.monic());
        assert_eq!(
            mp(2, &[0, 0, 0, 1]).gcd(&mp(2, &[0, 0, 1])).unwrap(),
            mp(2, &[0, 0, 1])
        );
        assert_eq!(g.gcd(&mp(5, &[])).unwrap(), g.monic());
        assert_eq!(f.gcd(&mp(7, &[1])), Err(FpError::ModulusMismatch(5, 7)));
    }

    #[test]
    fn squarefree_examples() {
        assert!(reduce_mod_p(&x3m2(), 5).unwrap().is_squarefree());
        assert!(!reduce_mod_p(&x3m2(), 3).unwrap().is_squarefree());
        assert!(!reduce_mod_p(&x3m2(), 2).unwrap().is_squarefree());
    }

    #[test]
    fn distinct_degree_examples() {
        let t = |p| reduce_mod_p(&x3m2(), p).unwrap().distinct_degree_type().unwrap();
        assert_eq!(t(5), ftype![1, 2]);
        assert_eq!(t(31), ftype![1, 1, 1]);
        assert_eq!(t(7), ftype![3]);
    }

    #[test]
    fn distinct_degree_rejects_repeated_factors() {
        assert_eq!(
            reduce_mod_p(&x3m2(), 3).unwrap().distinct_degree_type(),
            Err(FpError::NotSquarefree(3))
        );
    }

    #[test]
    fn squarefree_exactly_off_discriminant_primes() {
        // disc(x^3 - 2) = -108 = -2^2 * 3^3
        for p in crate::primes::primes_up_to(200) {
            let sf = reduce_mod_p(&x3m2(), p).unwrap().is_squarefree();
            assert_eq!(sf, p != 2 && p != 3, "p = {p}");
        }
    }

    #[test]
    fn non_monic_input_is_normalized() {
        // 2(x - 1)(x - 2) over F_7
        let f = mp(7, &[4, 1, 2]);
        assert_eq!(f.distinct_degree_type().unwrap(), ftype![1, 1]);
    }
}
