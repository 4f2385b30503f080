#![allow(dead_code)]

use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn real(x: f64) -> Complex64 {
    c(x, 0.0)
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `B_0 … B_n` from `Σ_{k≤n} C(n+1, k) B_k = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<f64> {
    let mut b = vec![1.0];
    for m in 1..=n {
        let s: f64 = (0..m).map(|k| binomial(m + 1, k) * b[k]).sum();
        b.push(-s / (m + 1) as f64);
    }
    b
}

/// `B_n(x) = Σ C(n, k) B_k x^{n−k}`.
pub fn bernoulli_poly(n: usize, x: Complex64) -> Complex64 {
    let b = bernoulli_numbers(n);
    (0..=n).map(|k| binomial(n, k) * b[k] * x.powu((n - k) as u32)).sum()
}

/// `Σ z^n a_n` on `|z| = 1, z ≠ 1`, summed by repeatedly applying
/// `S_n ← (S_{n+1} − z S_n)/(1 − z)` to the partial sums, which removes the
/// geometric part of the remainder each time. Every pass amplifies rounding by
/// up to `2/|1 − z|`, so keep `passes` small.
pub fn accelerated_series(z: Complex64, a: impl Fn(usize) -> Complex64, terms: usize, passes: usize) -> Complex64 {
    let mut partial = Vec::with_capacity(terms);
    let mut s = c(0.0, 0.0);
    let mut zn = c(1.0, 0.0);
    for n in 0..terms {
        s += zn * a(n);
        partial.push(s);
        zn *= z;
    }
    for _ in 0..passes {
        partial = partial.windows(2).map(|w| (w[1] - z * w[0]) / (1.0 - z)).collect();
    }
    *partial.last().expect("enough terms")
}

/// `Σ_{n<terms} z^n (v+n)^{−s}`.
pub fn lerch_partial(z: Complex64, s: Complex64, v: Complex64, terms: usize) -> Complex64 {
    let mut zn = c(1.0, 0.0);
    let mut sum = c(0.0, 0.0);
    for n in 0..terms {
        sum += zn * (-s * (v + n as f64).ln()).exp();
        zn *= z;
    }
    sum
}
