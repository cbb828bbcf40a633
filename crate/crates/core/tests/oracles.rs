//! Library results checked against independent, slower computations.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::{brute_force_type, poly, CUBICS, QUARTICS, QUINTICS};
use galois_scan::disc_bound::{build_beta_matrix, charpoly, IntMatrix};
use galois_scan::numeric::complex_roots;
use galois_scan::perm_groups::{conjugacy_classes, divisions, run_verifier_suite, PermGroup};
use galois_scan::zz_poly::resultant;
use galois_scan::{FpError, IntPoly, Irreducibility, ModPoly};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        ..Config::default()
    })
}

fn coeffs(len: usize, range: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-range..=range, len)
}

fn monic(len: usize, range: i64) -> impl Strategy<Value = IntPoly> {
    coeffs(len, range).prop_map(|mut v| {
        v.insert(0, 1);
        IntPoly::from_descending_i64(&v)
    })
}

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn ddf_matches_brute_force(c: &IntPoly, p: u64) -> Result<(), TestCaseError> {
    let reduced = ModPoly::reduce(c, p).unwrap();
    match (reduced.distinct_degree_type(), brute_force_type(c, p)) {
        (Ok(t), Some(u)) => prop_assert_eq!(t, u, "{} mod {}", c, p),
        (Err(FpError::NotSquarefree(_)), None) => {}
        (got, want) => prop_assert!(false, "{} mod {}: {:?} vs {:?}", c, p, got, want),
    }
    prop_assert_eq!(reduced.is_squarefree(), brute_force_type(c, p).is_some());
    Ok(())
}

#[test]
fn distinct_degree_type_matches_brute_force_on_fixtures() {
    for (desc, _) in CUBICS.iter().chain(QUARTICS).chain(QUINTICS) {
        for p in SMALL_PRIMES {
            ddf_matches_brute_force(&poly(desc), p).unwrap();
        }
    }
}

#[test]
fn distinct_degree_type_matches_brute_force_on_random_polys() {
    runner(300)
        .run(&(1usize..=5).prop_flat_map(|n| monic(n, 20)), |c| {
            for p in SMALL_PRIMES {
                ddf_matches_brute_force(&c, p)?;
            }
            Ok(())
        })
        .unwrap();
}

/// `b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd` for `ax^3 + bx^2 + cx + d`.
fn cubic_disc(a: i64, b: i64, c: i64, d: i64) -> BigInt {
    let [a, b, c, d] = [a, b, c, d].map(BigInt::from);
    &b * &b * &c * &c - 4 * &a * &c * &c * &c - 4 * &b * &b * &b * &d - 27 * &a * &a * &d * &d
        + 18 * &a * &b * &c * &d
}

fn quartic_disc(a: i64, b: i64, c: i64, d: i64, e: i64) -> BigInt {
    let [a, b, c, d, e] = [a, b, c, d, e].map(BigInt::from);
    let p = |k: i64, f: &[&BigInt]| f.iter().fold(BigInt::from(k), |acc, x| acc * *x);
    p(256, &[&a, &a, &a, &e, &e, &e]) - p(192, &[&a, &a, &b, &d, &e, &e])
        - p(128, &[&a, &a, &c, &c, &e, &e])
        + p(144, &[&a, &a, &c, &d, &d, &e])
        - p(27, &[&a, &a, &d, &d, &d, &d])
        + p(144, &[&a, &b, &b, &c, &e, &e])
        - p(6, &[&a, &b, &b, &d, &d, &e])
        - p(80, &[&a, &b, &c, &c, &d, &e])
        + p(18, &[&a, &b, &c, &d, &d, &d])
        + p(16, &[&a, &c, &c, &c, &c, &e])
        - p(4, &[&a, &c, &c, &c, &d, &d])
        - p(27, &[&b, &b, &b, &b, &e, &e])
        + p(18, &[&b, &b, &b, &c, &d, &e])
        - p(4, &[&b, &b, &b, &d, &d, &d])
        - p(4, &[&b, &b, &c, &c, &c, &e])
        + p(1, &[&b, &b, &c, &c, &d, &d])
}

#[test]
fn discriminant_matches_closed_forms() {
    runner(200)
        .run(&(coeffs(4, 50), coeffs(5, 50)), |(c3, c4)| {
            if c3[0] != 0 {
                let got = IntPoly::from_descending_i64(&c3).discriminant();
                prop_assert_eq!(got, cubic_disc(c3[0], c3[1], c3[2], c3[3]));
            }
            if c4[0] != 0 {
                let got = IntPoly::from_descending_i64(&c4).discriminant();
                prop_assert_eq!(got, quartic_disc(c4[0], c4[1], c4[2], c4[3], c4[4]));
            }
            Ok(())
        })
        .unwrap();
}

/// Determinant by fraction-free Bareiss elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn sylvester(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let nonconstant = |r| {
        (1usize..=6).prop_flat_map(move |n| coeffs(n + 1, r)).prop_filter_map("degree", |v| {
            (v[0] != 0).then(|| IntPoly::from_descending_i64(&v))
        })
    };
    runner(200)
        .run(&(nonconstant(9), nonconstant(9)), |(a, b)| {
            prop_assert_eq!(resultant(&a, &b), sylvester(&a, &b), "res({}, {})", a, b);
            Ok(())
        })
        .unwrap();
}

/// Reducibility by exhaustion over root subsets: `c` has a proper monic
/// factor in `Z[x]` iff some subset of its roots multiplies out to an
/// integer polynomial dividing `c`.
fn reducible_by_root_subsets(c: &IntPoly) -> bool {
    let roots = complex_roots(c);
    let n = roots.len();
    (1u32..(1 << n) - 1).any(|mask| {
        if mask.count_ones() as usize > n / 2 {
            return false;
        }
        let subset: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| roots[i]).collect();
        let expanded = common::expand_roots(&subset);
        // loose: repeated roots are only accurate to about eps^(1/n); the
        // exact division below rejects false candidates
        if expanded.iter().any(|z| z.im.abs() > 1e-2 || (z.re - z.re.round()).abs() > 1e-2) {
            return false;
        }
        let f = IntPoly::from_i64(&expanded.iter().map(|z| z.re.round() as i64).collect::<Vec<_>>());
        c.div_exact_monic(&f).is_some()
    })
}

#[test]
fn irreducibility_agrees_with_root_subset_search() {
    let mut checked = 0;
    for n in 1..=4usize {
        let total = 7usize.pow(n as u32);
        for code in 0..total {
            let mut desc = vec![1i64];
            let mut x = code;
            for _ in 0..n {
                desc.push((x % 7) as i64 - 3);
                x /= 7;
            }
            let c = IntPoly::from_descending_i64(&desc);
            let verdict = c.is_irreducible(200).unwrap();
            let oracle_reducible = reducible_by_root_subsets(&c);
            match verdict {
                Irreducibility::Irreducible(_) => assert!(!oracle_reducible, "{c} has a factor"),
                Irreducibility::Reducible { factor } => {
                    assert!(oracle_reducible, "{c} reported reducible");
                    assert!(c.div_exact_monic(&factor).is_some(), "{factor} does not divide {c}");
                    let d = factor.degree().unwrap();
                    assert!(d >= 1 && d < n);
                }
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 7 + 49 + 343 + 2401);
}

#[test]
fn numeric_roots_lie_within_the_root_bound() {
    runner(200)
        .run(&(1usize..=6).prop_flat_map(|n| monic(n, 1000)), |c| {
            let bound = c.cauchy_root_bound().to_f64().unwrap();
            let roots = complex_roots(&c);
            prop_assert_eq!(roots.len(), c.degree().unwrap());
            for r in roots {
                prop_assert!(r.norm() < bound * (1.0 + 1e-9), "{} root {} bound {}", c, r, bound);
            }
            Ok(())
        })
        .unwrap();
}

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence over the rationals.
fn faddeev_leverrier(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| m.row(i).iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        for i in 0..n {
            mk[i][i] += &coeffs[n - k + 1];
        }
        let am = mul(&a, &mk);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
        mk = am;
    }
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}

#[test]
fn charpoly_matches_faddeev_leverrier() {
    let matrix = (1usize..=6).prop_flat_map(|n| prop::collection::vec(coeffs(n, 40), n));
    runner(100)
        .run(&matrix, |rows| {
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(charpoly(&m), faddeev_leverrier(&m));
            Ok(())
        })
        .unwrap();
    for (desc, z) in [
        (&[1i64, 0, 1][..], &[1i64][..]),
        (&[1, 0, -3], &[-1]),
        (&[1, 0, 0, -2], &[1, 2]),
        (&[1, 1, -2, -1], &[3, -5]),
    ] {
        let m = build_beta_matrix(&poly(desc), z).unwrap();
        assert_eq!(charpoly(&m), faddeev_leverrier(&m), "{desc:?} {z:?}");
    }
}

#[test]
fn charpoly_of_wide_entries() {
    // entries near 2^40 force several CRT primes
    let big = 1i64 << 40;
    let m = IntMatrix::from_rows(&[vec![big, -3, 7], vec![2, -big, 5], vec![big / 3, 11, big - 1]]);
    assert_eq!(charpoly(&m), faddeev_leverrier(&m));
}

#[test]
fn discriminant_sign_matches_real_root_count() {
    // nonzero disc of a real polynomial has sign (-1)^s, s = pairs of complex roots
    runner(200)
        .run(&(2usize..=5).prop_flat_map(|n| monic(n, 30)), |c| {
            let d = c.discriminant();
            if d.is_zero() {
                return Ok(());
            }
            let complex = complex_roots(&c).iter().filter(|r| r.im.abs() > 1e-7).count();
            prop_assert_eq!(complex % 2, 0);
            let expected_negative = (complex / 2) % 2 == 1;
            prop_assert_eq!(d.is_negative(), expected_negative, "{} disc {}", c, d);
            Ok(())
        })
        .unwrap();
}

#[test]
fn verifier_suite_through_degree_four() {
    for line in run_verifier_suite(4).unwrap() {
        assert!(line.passed(), "{}: {:?}", line.check, line.failures);
    }
}

#[test]
fn subgroup_lattice_sizes() {
    // numbers of subgroups of S_3, S_4, S_5
    for (n, count) in [(3, 6), (4, 30), (5, 156)] {
        assert_eq!(PermGroup::symmetric(n).subgroups().len(), count, "S{n}");
    }
}

#[test]
fn class_counts_of_symmetric_groups() {
    // partitions of n; in S_n every division is a single class
    for (n, parts) in [(3, 3), (4, 5), (5, 7)] {
        let g = PermGroup::symmetric(n);
        assert_eq!(conjugacy_classes(&g).len(), parts);
        assert_eq!(divisions(&g).len(), parts);
    }
    assert_eq!(conjugacy_classes(&PermGroup::alternating(5)).len(), 5);
    // the two 5-cycle classes of A5 generate conjugate cyclic subgroups
    assert_eq!(divisions(&PermGroup::alternating(5)).len(), 4);
}
