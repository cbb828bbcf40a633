//! Floating-point root finding for cross-checks against exact arithmetic.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::zz_poly::IntPoly;

/// All complex roots of a nonconstant polynomial by Durand–Kerner
/// iteration, followed by a few Newton polishing steps.
pub fn complex_roots(c: &IntPoly) -> Vec<Complex64> {
    let n = c.degree().expect("roots of the zero polynomial");
    assert!(n > 0, "roots of a constant polynomial");
    let lc = c.leading().unwrap().to_f64().unwrap();
    let monic: Vec<f64> = c
        .coeffs()
        .iter()
        .map(|a| a.to_f64().unwrap() / lc)
        .collect();
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));

    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (radius / 2.0))
        .collect();

    for _ in 0..2000 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if i != j {
                    denom *= zi - zj;
                }
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            shift = shift.max(step.norm() / (1.0 + zi.norm()));
        }
        if shift < 1e-15 {
            break;
        }
    }

    let deriv: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * i as f64)
        .collect();
    let eval_d = |z: Complex64| deriv.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let d = eval_d(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    roots
}

/// `|k(z)| / sum |k_i| |z|^i`, the residual of `z` as a root of `k` relative
/// to the magnitude of the terms being cancelled.
pub fn relative_residual(k: &IntPoly, z: Complex64) -> f64 {
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    let r = z.norm();
    for a in k.coeffs().iter().rev() {
        let a = a.to_f64().unwrap_or(f64::INFINITY);
        value = value * z + a;
        scale = scale * r + a.abs();
    }
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}
