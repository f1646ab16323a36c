//! Finite-window growth estimates for Betti and Bass sequences.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default number of trailing ratios used for estimates.
pub const DEFAULT_WINDOW: usize = 4;
/// Default resolution depth.
pub const DEFAULT_DEPTH: usize = 12;

pub type Rational = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthClass {
    FinitePd,
    Periodic,
    Polynomial,
    Exponential,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::FinitePd => "finite-pd",
            GrowthClass::Periodic => "periodic",
            GrowthClass::Polynomial => "polynomial",
            GrowthClass::Exponential => "exponential",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    RatioWindow,
    RootWindow,
}

/// An interval estimate for the exponential growth rate of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureInterval {
    #[serde(serialize_with = "ser_ratio")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub hi: Rational,
    pub method: Method,
    /// Inclusive index range of the sequence the estimate reads.
    pub window: (usize, usize),
    pub classification: GrowthClass,
}

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Rational", 3)?;
    st.serialize_field("num", r.numer())?;
    st.serialize_field("den", r.denom())?;
    st.serialize_field("value", &to_f64(r))?;
    st.end()
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl CurvatureInterval {
    pub fn lo_f64(&self) -> f64 {
        to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        to_f64(&self.hi)
    }

    pub fn is_finite_pd(&self) -> bool {
        self.classification == GrowthClass::FinitePd
    }
}

impl fmt::Display for CurvatureInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] ≈ [{:.4}, {:.4}] ({}, indices {}..{})",
            self.lo,
            self.hi,
            self.lo_f64(),
            self.hi_f64(),
            self.classification,
            self.window.0,
            self.window.1
        )
    }
}

fn tail_checked(seq: &[usize], points: usize) -> Result<usize> {
    if seq.len() < points {
        return Err(Error::Shape(format!(
            "need at least {points} terms, have {}",
            seq.len()
        )));
    }
    let start = seq.len() - points;
    if let Some(i) = (start..seq.len()).find(|&i| seq[i] == 0) {
        return Err(Error::ZeroEntry(i));
    }
    Ok(start)
}

/// Min and max of `c_{n+1}/c_n` over the last `window` ratios.
pub fn ratio_window(seq: &[usize], window: usize) -> Result<(Rational, Rational)> {
    let window = window.max(1);
    let start = tail_checked(seq, window + 1)?;
    let ratios = (start..seq.len() - 1).map(|n| Rational::new(seq[n + 1] as u64, seq[n] as u64));
    let (mut lo, mut hi) = (None::<Rational>, None::<Rational>);
    for r in ratios {
        lo = Some(lo.map_or(r, |x| x.min(r)));
        hi = Some(hi.map_or(r, |x| x.max(r)));
    }
    Ok((lo.unwrap(), hi.unwrap()))
}

/// Min and max of `c_n^{1/n}` over the last `window` indices (excluding 0).
pub fn root_window(seq: &[usize], window: usize) -> Result<(f64, f64)> {
    let window = window.max(1);
    let start = tail_checked(seq, window)?.max(1);
    if start >= seq.len() {
        return Err(Error::Shape("root window needs an index n ≥ 1".into()));
    }
    let roots: Vec<f64> = (start..seq.len())
        .map(|n| (seq[n] as f64).powf(1.0 / n as f64))
        .collect();
    let lo = roots.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = roots.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

/// Smallest period `p ≤ 4` with `c_n = c_{n+p}` on the second half of the
/// sequence (at least `2p` comparisons).
pub fn tail_period(seq: &[usize]) -> Option<usize> {
    let from = seq.len() / 2;
    (1..=4).find(|&p| {
        let tail = &seq[from.min(seq.len())..];
        tail.len() > 2 * p && (0..tail.len() - p).all(|i| tail[i] == tail[i + p])
    })
}

/// Whether some finite difference of order 1 to 3 is constant on the last
/// `window + 1` terms.
fn polynomial_tail(seq: &[usize], window: usize) -> bool {
    let tail: Vec<i128> = seq[seq.len() - (window + 1)..].iter().map(|&x| x as i128).collect();
    let mut diff = tail;
    for _ in 1..=3 {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        if diff.len() < 2 {
            return false;
        }
        if diff.iter().all(|&d| d == diff[0]) {
            return true;
        }
    }
    false
}

/// Curvature interval of a Betti (or Bass) prefix.
pub fn curvature_estimate(seq: &[usize], window: usize) -> Result<CurvatureInterval> {
    let window = window.max(1);
    if seq.len() < window + 2 {
        return Err(Error::Shape(format!(
            "depth {} too small for window {window}",
            seq.len().saturating_sub(1)
        )));
    }
    let last = seq.len() - 1;
    if let Some(z) = seq.iter().position(|&b| b == 0) {
        return Ok(CurvatureInterval {
            lo: Rational::from_integer(0),
            hi: Rational::from_integer(0),
            method: Method::RatioWindow,
            window: (z, last),
            classification: GrowthClass::FinitePd,
        });
    }
    let span = (last - window, last);
    if tail_period(seq).is_some() {
        return Ok(CurvatureInterval {
            lo: Rational::one(),
            hi: Rational::one(),
            method: Method::RatioWindow,
            window: span,
            classification: GrowthClass::Periodic,
        });
    }
    let (lo, hi) = ratio_window(seq, window)?;
    let classification = if lo > Rational::one() && !polynomial_tail(seq, window) {
        GrowthClass::Exponential
    } else {
        GrowthClass::Polynomial
    };
    Ok(CurvatureInterval {
        lo,
        hi,
        method: Method::RatioWindow,
        window: span,
        classification,
    })
}

/// Exact check of `c_1·(min ratio)^{N-1} ≤ c_N ≤ c_1·(max ratio)^{N-1}` over
/// the ratios `c_{n+1}/c_n`, `1 ≤ n < N`.
pub fn ratio_bounds_hold(seq: &[usize]) -> bool {
    if seq.len() < 3 || seq[1..].contains(&0) {
        return true;
    }
    let n = seq.len() - 1;
    let ratios: Vec<BigRational> = (1..n)
        .map(|i| BigRational::new(BigInt::from(seq[i + 1]), BigInt::from(seq[i])))
        .collect();
    let lo = ratios.iter().min().unwrap().clone();
    let hi = ratios.iter().max().unwrap().clone();
    let c1 = BigRational::from_integer(BigInt::from(seq[1]));
    let cn = BigRational::from_integer(BigInt::from(seq[n]));
    let e = (n - 1) as i32;
    let lower = &c1 * num_traits::pow::Pow::pow(lo, e);
    let upper = &c1 * num_traits::pow::Pow::pow(hi, e);
    lower <= cn && cn <= upper
}
