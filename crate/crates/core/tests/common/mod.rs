//! Reference implementations shared by the integration tests. None of them
//! calls into the library's numerics.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pochhammer(a: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, i| {
        acc * (a + BigRational::from_integer(BigInt::from(i)))
    })
}

fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, i| {
        acc * BigRational::from_integer(BigInt::from(i))
    })
}

/// Exact `h_k / √2` for rational α from the gamma-ratio closed form
/// `(α)_k (α)_{ν−k} ν! / (k! (ν−k)! (2α)_ν)`.
pub fn gamma_ratio_coeffs(nu: usize, alpha: &BigRational) -> Vec<BigRational> {
    let two_alpha = alpha * ratio(2, 1);
    let den = pochhammer(&two_alpha, nu);
    (0..=nu)
        .map(|k| {
            pochhammer(alpha, k) * pochhammer(alpha, nu - k) * factorial(nu)
                / (factorial(k) * factorial(nu - k) * &den)
        })
        .collect()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap()
}

/// Monomial coefficients of `C_n^(α)(x)`, lowest power first, from the
/// three-term recurrence carried out on coefficient arrays.
pub fn gegenbauer_monomials(n: usize, alpha: &BigRational) -> Vec<BigRational> {
    let mut prev = vec![BigRational::one()];
    if n == 0 {
        return prev;
    }
    let two = ratio(2, 1);
    let mut cur = vec![BigRational::zero(), &two * alpha];
    for m in 2..=n {
        let mf = BigRational::from_integer(BigInt::from(m));
        let a = &two * (&mf + alpha - BigRational::one()) / &mf;
        let b = (&mf + &two * alpha - &two) / &mf;
        let mut next = vec![BigRational::zero(); m + 1];
        for (p, c) in cur.iter().enumerate() {
            next[p + 1] += &a * c;
        }
        for (p, c) in prev.iter().enumerate() {
            next[p] -= &b * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn binomial_row(m: usize) -> Vec<BigRational> {
    let mut row = vec![BigRational::one()];
    for _ in 0..m {
        let mut next = vec![BigRational::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

/// Taps of `z^{−ν/2} C_ν^(α)((z^{1/2} + z^{−1/2}) / 2)`, normalised to
/// unit DC gain. Each odd monomial `x^m` becomes
/// `(1 + z^{−1})^m z^{−(ν−m)/2} / 2^m`.
pub fn polynomial_expansion_coeffs(nu: usize, alpha: &BigRational) -> Vec<BigRational> {
    let mono = gegenbauer_monomials(nu, alpha);
    let mut taps = vec![BigRational::zero(); nu + 1];
    for (m, c) in mono.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        assert_eq!((nu - m) % 2, 0, "parity of C_nu");
        let shift = (nu - m) / 2;
        let scale = c / BigRational::from_integer(BigInt::from(2).pow(m as u32));
        for (k, b) in binomial_row(m).iter().enumerate() {
            taps[shift + k] += &scale * b;
        }
    }
    let dc: BigRational = taps.iter().sum();
    taps.iter().map(|t| t / &dc).collect()
}

/// `C_n^(α)(x) = Σ_k (−1)^k (α)_{n−k} / (k! (n−2k)!) (2x)^{n−2k}`.
pub fn gegenbauer_explicit(n: usize, alpha: f64, x: f64) -> f64 {
    let poch = |k: usize| (0..k).fold(1.0, |acc, i| acc * (alpha + i as f64));
    let fact = |k: usize| (1..=k).fold(1.0, |acc, i| acc * i as f64);
    (0..=n / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * poch(n - k) / (fact(k) * fact(n - 2 * k)) * (2.0 * x).powi((n - 2 * k) as i32)
        })
        .sum()
}

/// Zeros of `C_n^(α)` on (−1, 1) by grid scan and bisection.
pub fn gegenbauer_zeros(n: usize, alpha: f64) -> Vec<f64> {
    let f = |x: f64| gegenbauer_explicit(n, alpha, x);
    let grid = 20_000;
    // half-step offset keeps x = 0 (a zero for odd n) off the grid
    let xs: Vec<f64> = (0..grid)
        .map(|i| -1.0 + 2.0 * (i as f64 + 0.5) / grid as f64)
        .collect();
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Unit-circle angles in (0, 2π) of the transfer zeros implied by the
/// polynomial zeros `x_r = cos(ω/2)`.
pub fn transfer_zero_angles(n: usize, alpha: f64) -> Vec<f64> {
    let mut w: Vec<f64> = gegenbauer_zeros(n, alpha)
        .iter()
        .map(|x| 2.0 * x.acos())
        .collect();
    w.sort_by(f64::total_cmp);
    w
}

/// Full convolution against an explicitly padded copy of the signal, then
/// every other sample.
pub fn naive_level(x: &[f64], taps: &[f64]) -> Vec<f64> {
    let pad = taps.len();
    let mut ext: Vec<f64> = x[..pad].iter().rev().copied().collect();
    ext.extend_from_slice(x);
    let conv: Vec<f64> = (0..x.len())
        .map(|m| {
            taps.iter()
                .enumerate()
                .map(|(k, &c)| c * ext[m + pad - k])
                .sum()
        })
        .collect();
    conv.into_iter().step_by(2).collect()
}

/// `(approximations, details)` for `levels` stages of [`naive_level`].
pub fn naive_mra(x: &[f64], h: &[f64], g: &[f64], levels: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let mut a = Vec::new();
    let mut d = Vec::new();
    let mut cur = x.to_vec();
    for _ in 0..levels {
        d.push(naive_level(&cur, g));
        cur = naive_level(&cur, h);
        a.push(cur.clone());
    }
    (a, d)
}

/// Sequence impedances to the 3×3 phase-domain matrix of a transposed element.
fn phase_matrix(z0: Complex64, z1: Complex64) -> DMatrix<Complex64> {
    let zs = (z0 + 2.0 * z1) / 3.0;
    let zm = (z0 - z1) / 3.0;
    DMatrix::from_fn(3, 3, |r, c| if r == c { zs } else { zm })
}

fn inverse(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    m.clone().try_inverse().expect("invertible")
}

fn stamp_series(y: &mut DMatrix<Complex64>, a: usize, b: usize, yb: &DMatrix<Complex64>) {
    for r in 0..3 {
        for c in 0..3 {
            y[(a + r, a + c)] += yb[(r, c)];
            y[(b + r, b + c)] += yb[(r, c)];
            y[(a + r, b + c)] -= yb[(r, c)];
            y[(b + r, a + c)] -= yb[(r, c)];
        }
    }
}

fn stamp_shunt(y: &mut DMatrix<Complex64>, a: usize, yb: &DMatrix<Complex64>) {
    for r in 0..3 {
        for c in 0..3 {
            y[(a + r, a + c)] += yb[(r, c)];
        }
    }
}

/// Two-source, one-line network data in ohms and peak volts.
pub struct Network {
    pub ze1: (Complex64, Complex64),
    pub ze2: (Complex64, Complex64),
    pub zl: (Complex64, Complex64),
    pub e1: Complex64,
    pub e2: Complex64,
}

/// Terminal-A phase voltages and line currents, `([V; 3], [I; 3])`.
pub type Terminal = ([Complex64; 3], [Complex64; 3]);

/// Solves the nodal equations of buses A (terminal), F (fault) and B in the
/// phase domain. Sources enter as Norton equivalents; a fault is a 1e8 S
/// conductance from each faulted phase to ground (ground faults) or between
/// each pair of faulted phases.
pub fn nodal_solve(
    net: &Network,
    m: f64,
    faulted: [bool; 3],
    ground: bool,
) -> (Terminal, Terminal) {
    let a = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let seq = |e: Complex64| [e, e * a * a, e * a];
    let y1 = inverse(&phase_matrix(net.ze1.0, net.ze1.1));
    let y2 = inverse(&phase_matrix(net.ze2.0, net.ze2.1));
    let ya = inverse(&phase_matrix(net.zl.0 * m, net.zl.1 * m));
    let yb = inverse(&phase_matrix(net.zl.0 * (1.0 - m), net.zl.1 * (1.0 - m)));
    let (ba, bf, bb) = (0, 3, 6);
    let mut y = DMatrix::<Complex64>::zeros(9, 9);
    stamp_shunt(&mut y, ba, &y1);
    stamp_shunt(&mut y, bb, &y2);
    stamp_series(&mut y, ba, bf, &ya);
    stamp_series(&mut y, bf, bb, &yb);
    let e1 = DVector::from_column_slice(&seq(net.e1));
    let e2 = DVector::from_column_slice(&seq(net.e2));
    let mut inj = DVector::<Complex64>::zeros(9);
    inj.rows_mut(ba, 3).copy_from(&(&y1 * e1));
    inj.rows_mut(bb, 3).copy_from(&(&y2 * e2));

    let terminal = |y: &DMatrix<Complex64>| -> Terminal {
        let v = y.clone().lu().solve(&inj).expect("nonsingular");
        let va = v.rows(ba, 3).into_owned();
        let vf = v.rows(bf, 3).into_owned();
        let i = &ya * (&va - &vf);
        ([va[0], va[1], va[2]], [i[0], i[1], i[2]])
    };
    let pre = terminal(&y);

    let g = Complex64::new(1e8, 0.0);
    let idx: Vec<usize> = (0..3).filter(|&k| faulted[k]).collect();
    if ground {
        for &p in &idx {
            y[(bf + p, bf + p)] += g;
        }
    } else {
        for (n, &p) in idx.iter().enumerate() {
            for &q in &idx[n + 1..] {
                y[(bf + p, bf + p)] += g;
                y[(bf + q, bf + q)] += g;
                y[(bf + p, bf + q)] -= g;
                y[(bf + q, bf + p)] -= g;
            }
        }
    }
    let post = terminal(&y);

    let rot = Complex64::from_polar(1.0, -pre.0[0].arg());
    let r = |t: Terminal| (t.0.map(|z| z * rot), t.1.map(|z| z * rot));
    (r(pre), r(post))
}
