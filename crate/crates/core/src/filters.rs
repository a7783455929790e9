//! Gegenbauer scaling/wavelet filter pairs and the Daubechies-4 reference.
//!
//! Coefficients follow the orthonormal convention: the scaling filter sums to
//! √2 and the wavelet filter sums to 0. For a Gegenbauer pair of order ν the
//! scaling taps are
//!
//! ```text
//! h_k = √2 · Γ(α+k) Γ(α+ν−k) / ( k! (ν−k)! Γ(α)² C_ν^{(α)}(1) ),   k = 0..ν
//! ```
//!
//! evaluated through log-gamma differences so that large α stays finite.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{idx, lit, to_f64, Real};
use crate::special::{gegenbauer_unchecked, ln_gamma};

/// Default ceiling on α. Keeps Γ(α+ν) finite in double precision.
pub const DEFAULT_ALPHA_LIMIT: f64 = 170.0;

/// Order ν (odd) and family parameter α (> 0) of a Gegenbauer filter pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GegenbauerParams<T> {
    nu: usize,
    alpha: T,
}

impl<T: Real> GegenbauerParams<T> {
    pub fn new(nu: usize, alpha: T) -> Result<Self> {
        Self::with_alpha_limit(nu, alpha, lit(DEFAULT_ALPHA_LIMIT))
    }

    pub fn with_alpha_limit(nu: usize, alpha: T, limit: T) -> Result<Self> {
        if nu.is_multiple_of(2) {
            return Err(Error::EvenOrder(nu));
        }
        if !(alpha > T::zero()) {
            return Err(Error::NonPositiveAlpha(to_f64(alpha)));
        }
        if alpha > limit {
            return Err(Error::AlphaOutOfRange {
                alpha: to_f64(alpha),
                limit: to_f64(limit),
            });
        }
        Ok(Self { nu, alpha })
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FilterFamily<T> {
    Gegenbauer(GegenbauerParams<T>),
    Haar,
    Daub4,
}

/// Analysis filter pair: scaling (low-pass) `h` and wavelet (high-pass) `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterPair<T> {
    family: FilterFamily<T>,
    h: Vec<T>,
    g: Vec<T>,
}

impl<T: Real> FilterPair<T> {
    pub fn gegenbauer(params: GegenbauerParams<T>) -> Result<Self> {
        let h = gegenbauer_scaling_coeffs(params)?;
        let g = wavelet_from_scaling(&h)?;
        Ok(Self {
            family: FilterFamily::Gegenbauer(params),
            h,
            g,
        })
    }

    pub fn haar() -> Self {
        let c = T::FRAC_1_SQRT_2();
        Self {
            family: FilterFamily::Haar,
            h: vec![c, c],
            g: vec![c, -c],
        }
    }

    pub fn daub4() -> Self {
        daub4_coeffs()
    }

    pub fn family(&self) -> FilterFamily<T> {
        self.family
    }

    pub fn scaling(&self) -> &[T] {
        &self.h
    }

    pub fn wavelet(&self) -> &[T] {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    /// Filter order (taps − 1).
    pub fn order(&self) -> usize {
        self.h.len() - 1
    }

    /// Constant group delay in samples, for the linear-phase families.
    pub fn group_delay(&self) -> Option<T> {
        match self.family {
            FilterFamily::Daub4 => None,
            _ => Some(idx::<T>(self.order()) / lit(2.0)),
        }
    }

    /// Short label such as `geg3a12`, `haar` or `daub4`.
    pub fn label(&self) -> String {
        match self.family {
            FilterFamily::Gegenbauer(p) => {
                format!("geg{}a{}", p.nu, format_alpha(to_f64(p.alpha)))
            }
            FilterFamily::Haar => "haar".into(),
            FilterFamily::Daub4 => "daub4".into(),
        }
    }

    /// Inner product of `h` with itself shifted by two taps.
    pub fn shift2_autocorrelation(&self) -> T {
        self.h
            .iter()
            .zip(self.h.iter().skip(2))
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn export(&self) -> FilterExport {
        let (family, nu, alpha) = match self.family {
            FilterFamily::Gegenbauer(p) => ("gegenbauer", p.nu, Some(to_f64(p.alpha))),
            FilterFamily::Haar => ("haar", 1, None),
            FilterFamily::Daub4 => ("daub4", 3, None),
        };
        FilterExport {
            family: family.into(),
            label: self.label(),
            nu,
            alpha,
            h: self.h.iter().map(|&x| to_f64(x)).collect(),
            g: self.g.iter().map(|&x| to_f64(x)).collect(),
        }
    }

    /// `k,h_k,g_k` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,h_k,g_k\n");
        for (k, (h, g)) in self.h.iter().zip(&self.g).enumerate() {
            out.push_str(&format!("{k},{},{}\n", to_f64(*h), to_f64(*g)));
        }
        out
    }
}

/// Serializable view of a filter pair.
#[derive(Clone, Debug, Serialize)]
pub struct FilterExport {
    pub family: String,
    pub label: String,
    pub nu: usize,
    pub alpha: Option<f64>,
    pub h: Vec<f64>,
    pub g: Vec<f64>,
}

fn format_alpha(alpha: f64) -> String {
    let s = format!("{alpha:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// Scaling taps h_0..h_ν of the Gegenbauer filter.
pub fn gegenbauer_scaling_coeffs<T: Real>(params: GegenbauerParams<T>) -> Result<Vec<T>> {
    let GegenbauerParams { nu, alpha } = params;
    let at_one = gegenbauer_unchecked(nu, alpha, T::one());
    if !at_one.is_finite() || at_one <= T::zero() {
        return Err(Error::AlphaOutOfRange {
            alpha: to_f64(alpha),
            limit: DEFAULT_ALPHA_LIMIT,
        });
    }
    let ln_norm = lit::<T>(2.0) * ln_gamma(alpha) + at_one.ln();
    let taps = (0..=nu)
        .map(|k| {
            let log = ln_gamma(alpha + idx(k)) + ln_gamma(alpha + idx(nu - k))
                - ln_gamma(idx::<T>(k + 1))
                - ln_gamma(idx::<T>(nu - k + 1))
                - ln_norm;
            T::SQRT_2() * log.exp()
        })
        .collect::<Vec<_>>();
    if taps.iter().any(|t| !t.is_finite()) {
        return Err(Error::AlphaOutOfRange {
            alpha: to_f64(alpha),
            limit: DEFAULT_ALPHA_LIMIT,
        });
    }
    Ok(taps)
}

/// Wavelet taps from scaling taps by the alternating flip
/// `g_k = (−1)^k h_{ν−k}`, `k = 0..ν`.
///
/// This is `(−1)^k h_{1−k}` delayed by ν−1 taps so the filter stays causal on
/// `0..=ν`; its magnitude is `|H(π−ω)|`. For symmetric `h` it reduces to the
/// π-modulation `(−1)^k h_k`, giving the odd-symmetric (type IV) filter.
pub fn wavelet_from_scaling<T: Real>(h: &[T]) -> Result<Vec<T>> {
    if h.is_empty() {
        return Err(Error::EmptyFilter);
    }
    if !h.len().is_multiple_of(2) {
        return Err(Error::OddFilterLength(h.len()));
    }
    let nu = h.len() - 1;
    Ok((0..=nu)
        .map(|k| if k % 2 == 0 { h[nu - k] } else { -h[nu - k] })
        .collect())
}

/// Daubechies 4-tap pair in the minimum-phase ordering.
pub fn daub4_coeffs<T: Real>() -> FilterPair<T> {
    let s3 = lit::<T>(3.0).sqrt();
    let denom = lit::<T>(4.0) * T::SQRT_2();
    let h = vec![
        (T::one() + s3) / denom,
        (lit::<T>(3.0) + s3) / denom,
        (lit::<T>(3.0) - s3) / denom,
        (T::one() - s3) / denom,
    ];
    let g = wavelet_from_scaling(&h).expect("four taps");
    FilterPair {
        family: FilterFamily::Daub4,
        h,
        g,
    }
}

/// Textual filter selector: `geg:<nu>:<alpha>`, `haar` or `daub4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FilterSpec {
    Gegenbauer { nu: usize, alpha: f64 },
    Haar,
    Daub4,
}

impl FilterSpec {
    pub fn build<T: Real>(&self) -> Result<FilterPair<T>> {
        match *self {
            FilterSpec::Gegenbauer { nu, alpha } => {
                FilterPair::gegenbauer(GegenbauerParams::new(nu, lit(alpha))?)
            }
            FilterSpec::Haar => Ok(FilterPair::haar()),
            FilterSpec::Daub4 => Ok(FilterPair::daub4()),
        }
    }
}

impl FromStr for FilterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::FilterSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "haar" => return Ok(FilterSpec::Haar),
            "daub4" | "db2" => return Ok(FilterSpec::Daub4),
            _ => {}
        }
        let mut parts = lower.split(':');
        if parts.next() != Some("geg") {
            return Err(bad("expected geg:<nu>:<alpha>, haar or daub4"));
        }
        let nu_text = parts.next().ok_or_else(|| bad("missing nu"))?;
        let alpha_text = parts.next().ok_or_else(|| bad("missing alpha"))?;
        if parts.next().is_some() {
            return Err(bad("too many fields"));
        }
        let nu: usize = nu_text
            .parse()
            .map_err(|_| bad(&format!("nu {nu_text:?} is not a positive integer")))?;
        if nu.is_multiple_of(2) {
            return Err(bad(&format!("nu must be odd, got {nu}")));
        }
        if let Some((_, frac)) = alpha_text.split_once('.') {
            if frac.len() > 6 {
                return Err(bad(&format!(
                    "alpha {alpha_text:?} has more than 6 fractional digits"
                )));
            }
        }
        let alpha: f64 = alpha_text
            .parse()
            .ok()
            .filter(|a: &f64| a.is_finite())
            .ok_or_else(|| bad(&format!("alpha {alpha_text:?} is not a decimal number")))?;
        if alpha <= 0.0 {
            return Err(bad(&format!("alpha must be > 0, got {alpha_text}")));
        }
        Ok(FilterSpec::Gegenbauer { nu, alpha })
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterSpec::Gegenbauer { nu, alpha } => write!(f, "geg:{nu}:{}", format_alpha(*alpha)),
            FilterSpec::Haar => f.write_str("haar"),
            FilterSpec::Daub4 => f.write_str("daub4"),
        }
    }
}
