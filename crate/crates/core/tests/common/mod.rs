//! Fixtures and independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_complex::Complex64;
use galois_scan::numeric::complex_roots;
use galois_scan::{FactorType, IntPoly};

pub fn poly(desc: &[i64]) -> IntPoly {
    IntPoly::from_descending_i64(desc)
}

pub fn types(list: &[&[u32]]) -> BTreeSet<FactorType> {
    list.iter()
        .map(|t| FactorType::new(t.iter().copied()).unwrap())
        .collect()
}

/// Monic irreducible polynomials with Galois groups known from the
/// literature, as (descending coefficients, group).
pub const CUBICS: &[(&[i64], &str)] = &[
    (&[1, 0, 0, -2], "S3"),
    (&[1, 0, -3, -1], "A3"),
    (&[1, 0, -1, -1], "S3"),
    (&[1, 1, -2, -1], "A3"),
    (&[1, -1, -2, 1], "A3"),
    (&[1, 0, -3, 1], "A3"),
    (&[1, 0, 2, 1], "S3"),
    (&[1, 0, 0, -7], "S3"),
    (&[1, 0, 1, 1], "S3"),
    (&[1, 0, -21, -35], "A3"),
    (&[1, 0, 0, -5], "S3"),
];

pub const QUARTICS: &[(&[i64], &str)] = &[
    (&[1, 0, 0, 0, 1], "Z2xZ2"),
    (&[1, 0, -10, 0, 1], "Z2xZ2"),
    (&[1, 1, 1, 1, 1], "Z4"),
    (&[1, 0, -4, 0, 2], "Z4"),
    (&[1, 0, 4, 0, 2], "Z4"),
    (&[1, 0, 0, 0, -2], "D4"),
    (&[1, 0, 0, 0, -3], "D4"),
    (&[1, 0, 0, 0, -5], "D4"),
    (&[1, 0, 0, 0, 2], "D4"),
    (&[1, 0, 0, 8, 12], "A4"),
    (&[1, 0, 0, 1, 1], "S4"),
    (&[1, 0, 0, -1, -1], "S4"),
    (&[1, 0, 0, -1, 1], "S4"),
];

pub const QUINTICS: &[(&[i64], &str)] = &[
    (&[1, 1, -4, -3, 3, 1], "Z5"),
    (&[1, 0, 0, 0, -5, 12], "D5"),
    (&[1, 0, 0, 0, 0, -2], "Hol(Z5)"),
    (&[1, 0, 0, 0, 0, -3], "Hol(Z5)"),
    (&[1, 0, 0, 0, 0, 2], "Hol(Z5)"),
    (&[1, 0, 0, 0, 15, 12], "Hol(Z5)"),
    (&[1, 0, 0, 0, 20, 16], "A5"),
    (&[1, 0, 0, 0, -1, -1], "S5"),
    (&[1, 0, 0, 0, -1, 1], "S5"),
    (&[1, 0, 0, 0, -4, 2], "S5"),
    (&[1, 0, 0, 0, -6, 3], "S5"),
];

/// Factorization type of a squarefree `c mod p` by brute force: strip
/// roots, then try every monic polynomial of each degree as a divisor.
/// Returns `None` when `c mod p` has a repeated factor.
pub fn brute_force_type(c: &IntPoly, p: u64) -> Option<FactorType> {
    let reduce = |v: &num_bigint::BigInt| -> i64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        v.mod_floor(&num_bigint::BigInt::from(p)).to_i64().unwrap()
    };
    let p = p as i64;
    let mut f: Vec<i64> = c.coeffs().iter().map(reduce).collect();
    let mut degrees = Vec::new();
    let mut d = 1;
    while f.len() > 1 {
        if 2 * d > f.len() - 1 {
            degrees.push(f.len() - 1);
            break;
        }
        let mut found = false;
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                g.push((x % p as u64) as i64);
                x /= p as u64;
            }
            g.push(1);
            if let Some(q) = divide_mod(&f, &g, p) {
                if divide_mod(&q, &g, p).is_some() {
                    return None;
                }
                degrees.push(d);
                f = q;
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    Some(FactorType::new(degrees.into_iter().map(|d| d as u32)).unwrap())
}

/// Exact quotient of ascending `f` by monic ascending `g` over `F_p`.
fn divide_mod(f: &[i64], g: &[i64], p: i64) -> Option<Vec<i64>> {
    let (n, m) = (f.len() - 1, g.len() - 1);
    if n < m {
        return None;
    }
    let mut r = f.to_vec();
    let mut q = vec![0i64; n - m + 1];
    for k in (0..=n - m).rev() {
        let lead = r[k + m].rem_euclid(p);
        q[k] = lead;
        for (j, &gj) in g.iter().enumerate() {
            r[k + j] = (r[k + j] - lead * gj).rem_euclid(p);
        }
    }
    r[..m].iter().all(|&v| v == 0).then_some(q)
}

/// Coefficients of `prod (x - r)` over the given roots, ascending.
pub fn expand_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// Minimal polynomial of `β = α_1 + z_2 α_2 + z_3 α_3` for a cubic with
/// Galois group `S_3`: the product over all six orderings of the roots,
/// rounded to integers. Returns `None` unless the six conjugates are
/// numerically distinct.
pub fn h_numeric_s3(c: &IntPoly, z: &[i64; 2]) -> Option<IntPoly> {
    let roots = complex_roots(c);
    let betas: Vec<Complex64> = permutations(3)
        .iter()
        .map(|s| roots[s[0]] + roots[s[1]] * z[0] as f64 + roots[s[2]] * z[1] as f64)
        .collect();
    for i in 0..betas.len() {
        for j in 0..i {
            if (betas[i] - betas[j]).norm() < 1e-6 {
                return None;
            }
        }
    }
    let coeffs = expand_roots(&betas);
    let ints: Vec<i64> = coeffs
        .iter()
        .map(|c| {
            assert!(c.im.abs() < 1e-6, "conjugate product has real coefficients");
            c.re.round() as i64
        })
        .collect();
    Some(IntPoly::from_i64(&ints))
}
