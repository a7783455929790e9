//! Log-gamma and Gegenbauer polynomial evaluation.

use crate::error::{Error, Result};
use crate::scalar::{idx, lit, to_f64, Real};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of |Γ(x)| (Lanczos, g = 7, nine terms).
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        let pi = T::PI();
        return (pi / (pi * x).sin().abs()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let mut acc = lit::<T>(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += lit::<T>(c) / (x + idx(i));
    }
    let t = x + lit::<T>(LANCZOS_G) + half;
    half * (T::TAU()).ln() + (x + half) * t.ln() - t + acc.ln()
}

/// Evaluates C_n^{(α)}(z) by the three-term recurrence.
///
/// `C_0 = 1`, `C_1 = 2αz`, `C_2 = 2α(α+1)z² − α`, and for `n ≥ 3`
/// `n·C_n = 2(α+n−1)z·C_{n−1} − (2α+n−2)·C_{n−2}`.
pub fn eval_gegenbauer<T: Real>(n: usize, alpha: T, z: T) -> Result<T> {
    if !(alpha > lit(-0.5)) {
        return Err(Error::AlphaBelowDomain(to_f64(alpha)));
    }
    if !(z.abs() <= T::one()) {
        return Err(Error::ArgumentOutOfDomain(to_f64(z)));
    }
    Ok(gegenbauer_unchecked(n, alpha, z))
}

pub(crate) fn gegenbauer_unchecked<T: Real>(n: usize, alpha: T, z: T) -> T {
    let two = lit::<T>(2.0);
    let c1 = two * alpha * z;
    let c2 = two * alpha * (alpha + T::one()) * z * z - alpha;
    match n {
        0 => T::one(),
        1 => c1,
        2 => c2,
        _ => {
            let (mut prev, mut cur) = (c1, c2);
            for m in 3..=n {
                let mf = idx::<T>(m);
                let next = (two * (alpha + mf - T::one()) * z * cur
                    - (two * alpha + mf - two) * prev)
                    / mf;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// An evaluated polynomial sample C_n^{(α)}(z).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolynomialValue<T> {
    pub order: usize,
    pub alpha: T,
    pub argument: T,
    pub value: T,
}

impl<T: Real> PolynomialValue<T> {
    pub fn evaluate(order: usize, alpha: T, argument: T) -> Result<Self> {
        let value = eval_gegenbauer(order, alpha, argument)?;
        Ok(Self {
            order,
            alpha,
            argument,
            value,
        })
    }

    /// The value at `−z` implied by parity, `(−1)^n C_n(z)`.
    pub fn reflected(&self) -> Self {
        let sign = if self.order.is_multiple_of(2) {
            T::one()
        } else {
            -T::one()
        };
        Self {
            order: self.order,
            alpha: self.alpha,
            argument: -self.argument,
            value: sign * self.value,
        }
    }
}
