use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{idx, lit, to_f64, Real};

const MAX_ITER: usize = 500;
pub const RESIDUAL_TOLERANCE: f64 = 1e-6;

/// A zero of the transfer polynomial with its distance from the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Zero<T> {
    pub value: Complex<T>,
    pub radius: T,
}

/// Zeros of `H(z) = Σ h_k z^{−k}`, i.e. the roots of `h_0 z^ν + … + h_ν`.
///
/// Roots come from simultaneous Aberth–Ehrlich iteration. Each is checked
/// against the relative residual `|p(z)| / Σ|a_k||z|^k`.
pub fn zeros_on_unit_circle<T: Real>(taps: &[T]) -> Result<Vec<Zero<T>>> {
    let start = taps
        .iter()
        .position(|&c| c != T::zero())
        .ok_or(Error::EmptyFilter)?;
    let mut coeffs: Vec<T> = taps[start..].to_vec();
    let mut at_origin = 0;
    while coeffs.len() > 1 && *coeffs.last().unwrap() == T::zero() {
        coeffs.pop();
        at_origin += 1;
    }
    if coeffs.len() + at_origin < 2 {
        return Err(Error::ConstantPolynomial);
    }
    let mut roots = aberth(&coeffs);
    let tol = lit::<T>(RESIDUAL_TOLERANCE);
    for z in &roots {
        let r = relative_residual(&coeffs, *z);
        if !(r <= tol) {
            return Err(Error::RootResidual {
                residual: to_f64(r),
                tolerance: RESIDUAL_TOLERANCE,
            });
        }
    }
    roots.extend(std::iter::repeat_n(
        Complex::new(T::zero(), T::zero()),
        at_origin,
    ));
    Ok(roots
        .into_iter()
        .map(|value| Zero {
            value,
            radius: value.norm(),
        })
        .collect())
}

fn horner<T: Real>(coeffs: &[T], z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let zero = Complex::new(T::zero(), T::zero());
    let mut p = zero;
    let mut dp = zero;
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn relative_residual<T: Real>(coeffs: &[T], z: Complex<T>) -> T {
    let r = z.norm();
    let scale = coeffs.iter().fold(T::zero(), |acc, &c| acc * r + c.abs());
    let (p, _) = horner(coeffs, z);
    if scale == T::zero() {
        p.norm()
    } else {
        p.norm() / scale
    }
}

fn aberth<T: Real>(coeffs: &[T]) -> Vec<Complex<T>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[0].abs();
    let tail = coeffs[n].abs();
    let radius = (tail / lead).powf(T::one() / idx(n));
    let radius = if radius > T::zero() && radius.is_finite() {
        radius
    } else {
        T::one()
    };
    let offset = lit::<T>(0.4);
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let theta = T::TAU() * idx(k) / idx(n) + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();
    let eps = T::epsilon() * lit(4.0);
    for _ in 0..MAX_ITER {
        let mut converged = true;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.norm() == T::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut repulse = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                if j != i {
                    repulse += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex::new(T::one(), T::zero()) - ratio * repulse);
            z[i] -= step;
            if step.norm() > eps * z[i].norm().max(T::one()) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    z
}
