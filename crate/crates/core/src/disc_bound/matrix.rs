use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{multiplier_in_range, require_irreducible, z_limit_display, BoundError, MAX_MATRIX_DEGREE};
use crate::numeric::{complex_roots, relative_residual};
use crate::primes::{is_prime, mul_mod, pow_mod};
use crate::zz_poly::IntPoly;

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * dim + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.dim + j]
    }

    /// Largest absolute row sum.
    fn row_norm(&self) -> BigInt {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(BigInt::abs).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }
}

/// Matrix of multiplication by `β = α_1 + z_2 α_2 + ... + z_n α_n` on the
/// monomials `α_1^{e_1} ... α_n^{e_n}`, `0 <= e_j < n`. The monomial with
/// exponents `e` has index `sum e_j n^{j-1}`. Row `i` holds the coordinates
/// of `β γ_i`.
pub fn build_beta_matrix(c: &IntPoly, z: &[i64]) -> Result<IntMatrix, BoundError> {
    let n = c.degree().unwrap_or(0);
    if n < 2 {
        return Err(BoundError::DegreeTooSmall(n));
    }
    if n > MAX_MATRIX_DEGREE {
        return Err(BoundError::UnsupportedDegree(n));
    }
    if !c.is_monic() {
        return Err(BoundError::NotMonic);
    }
    if z.len() != n - 1 {
        return Err(BoundError::MultiplierCount {
            expected: n - 1,
            found: z.len(),
        });
    }
    if let Some((i, &v)) = z.iter().enumerate().find(|(_, &v)| !multiplier_in_range(n, v)) {
        return Err(BoundError::MultiplierOutOfRange {
            index: i + 2,
            value: v,
            limit: z_limit_display(n),
        });
    }
    require_irreducible(c)?;

    let dim = n.pow(n as u32);
    let weights: Vec<BigInt> = std::iter::once(BigInt::one())
        .chain(z.iter().map(|&v| BigInt::from(v)))
        .collect();
    // α^n = -(c_0 + c_1 α + ... + c_{n-1} α^{n-1})
    let reduction: Vec<BigInt> = c.coeffs()[..n].iter().map(|a| -a).collect();
    let place: Vec<usize> = (0..n).map(|j| n.pow(j as u32)).collect();

    let rows: Vec<Vec<(usize, BigInt)>> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for (j, w) in weights.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let e = (i / place[j]) % n;
                if e + 1 < n {
                    row.push((i + place[j], w.clone()));
                } else {
                    let base = i - e * place[j];
                    for (k, r) in reduction.iter().enumerate() {
                        if !r.is_zero() {
                            row.push((base + k * place[j], w * r));
                        }
                    }
                }
            }
            row
        })
        .collect();

    let mut m = IntMatrix::zeros(dim);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row {
            *m.entry_mut(i, j) += v;
        }
    }
    Ok(m)
}

/// Characteristic polynomial `det(x I - M)`.
///
/// Computed modulo enough 62-bit primes to cover the coefficient bound
/// `(1 + ||M||_inf)^dim` and recombined by the Chinese remainder theorem.
pub fn charpoly(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    if n == 0 {
        return IntPoly::from_i64(&[1]);
    }
    let bound = num_traits::pow(BigInt::one() + m.row_norm(), n);
    let needed = bound.bits() + 2;

    let mut primes = Vec::new();
    let mut bits = 0u64;
    let mut candidate = (1u64 << 62) - 1;
    while bits < needed {
        if is_prime(candidate) {
            primes.push(candidate);
            bits += 61;
        }
        candidate -= 2;
    }

    let images: Vec<Vec<u64>> = primes.par_iter().map(|&p| charpoly_mod(m, p)).collect();

    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (&p, image) in primes.iter().zip(&images) {
        let pb = BigInt::from(p);
        let inv = pow_mod((&modulus % &pb).to_u64().unwrap(), p - 2, p);
        for (c, &r) in coeffs.iter_mut().zip(image) {
            let cur = c.mod_floor(&pb).to_u64().unwrap();
            let delta = mul_mod((r + p - cur) % p, inv, p);
            *c += &modulus * delta;
        }
        modulus *= pb;
    }
    let half = &modulus >> 1;
    for c in coeffs.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    IntPoly::new(coeffs)
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Characteristic polynomial over `F_p` by reduction to Hessenberg form;
/// ascending coefficients.
fn charpoly_mod(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.dim();
    let pb = BigInt::from(p);
    let mut h: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();

    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = pow_mod(h[col + 1][col], p - 2, p);
        for i in col + 2..n {
            let u = mul_mod(h[i][col], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u row_{col+1}, then col_{col+1} += u col_i
            for j in 0..n {
                let t = mul_mod(u, h[col + 1][j], p);
                h[i][j] = sub_mod(h[i][j], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[col + 1] = (row[col + 1] + t) % p;
            }
        }
    }

    // polys[k] = charpoly of the leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        let diag = h[k - 1][k - 1];
        for (d, &a) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + a) % p;
            next[d] = sub_mod(next[d], mul_mod(diag, a, p), p);
        }
        let mut t = 1u64;
        for i in (0..k - 1).rev() {
            t = mul_mod(t, h[i + 1][i], p);
            if t == 0 {
                break;
            }
            let f = mul_mod(t, h[i][k - 1], p);
            for (d, &a) in polys[i].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(f, a, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaRootCheck {
    pub beta: Complex64,
    pub relative_residual: f64,
    pub passed: bool,
}

/// Residual of `k` at a floating-point `β` built from numerical roots of
/// `c`; passes below `1e-6`.
pub fn verify_beta_root(c: &IntPoly, z: &[i64], k: &IntPoly) -> BetaRootCheck {
    let roots = complex_roots(c);
    let beta = roots[0]
        + z.iter()
            .zip(&roots[1..])
            .map(|(&w, &a)| a * w as f64)
            .sum::<Complex64>();
    let residual = relative_residual(k, beta);
    BetaRootCheck {
        beta,
        relative_residual: residual,
        passed: residual < 1e-6,
    }
}
