//! Lebesgue exponents in `[1, inf]`.
//!
//! An [`Exponent`] is stored through its reciprocal, which lives in `[0, 1]`
//! and is exact (a small rational) whenever the exponent was built from an
//! integer, a fraction or a short decimal. All relations between exponents
//! are reciprocal relations, so `inf` (reciprocal `0`) needs no special case.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::CheckedAdd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type Rational = Ratio<i64>;

/// Tolerance for reciprocal relations when an inexact exponent is involved.
pub const RELATION_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
enum Reciprocal {
    Exact(Rational),
    Approx(f64),
}

impl Reciprocal {
    fn to_f64(self) -> f64 {
        match self {
            Reciprocal::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Reciprocal::Approx(x) => x,
        }
    }

    fn exact(self) -> Option<Rational> {
        match self {
            Reciprocal::Exact(r) => Some(r),
            Reciprocal::Approx(_) => None,
        }
    }

    fn add(self, other: Reciprocal) -> Reciprocal {
        match (self.exact(), other.exact()) {
            (Some(a), Some(b)) => a
                .checked_add(&b)
                .map(Reciprocal::Exact)
                .unwrap_or_else(|| Reciprocal::Approx(self.to_f64() + other.to_f64())),
            _ => Reciprocal::Approx(self.to_f64() + other.to_f64()),
        }
    }

    fn one_minus(self) -> Reciprocal {
        match self {
            Reciprocal::Exact(r) => Reciprocal::Exact(Rational::from_integer(1) - r),
            Reciprocal::Approx(x) => Reciprocal::Approx(1.0 - x),
        }
    }
}

/// A Lebesgue exponent `e` in `[1, inf]`, carried as `1/e` in `[0, 1]`.
#[derive(Clone, Copy, Debug)]
pub struct Exponent {
    recip: Reciprocal,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { recip: Reciprocal::Exact(Rational::new_raw(1, 1)) };
    pub const TWO: Exponent = Exponent { recip: Reciprocal::Exact(Rational::new_raw(1, 2)) };
    pub const INFINITY: Exponent = Exponent { recip: Reciprocal::Exact(Rational::new_raw(0, 1)) };

    /// The exponent `numer / denom`, kept exact.
    pub fn ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 || numer == 0 {
            return Err(Error::ExponentOutOfRange(format!("{numer}/{denom}")));
        }
        Self::from_exact_reciprocal(Rational::new(denom, numer))
    }

    /// The exponent whose reciprocal is `numer / denom`; `0` gives `inf`.
    pub fn from_reciprocal_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ExponentOutOfRange(format!("1/({numer}/{denom})")));
        }
        Self::from_exact_reciprocal(Rational::new(numer, denom))
    }

    pub fn integer(value: i64) -> Result<Self> {
        Self::ratio(value, 1)
    }

    pub fn infinity() -> Self {
        Self::INFINITY
    }

    /// Build from a float. Integral values become exact; `f64::INFINITY` is `inf`.
    pub fn from_f64(value: f64) -> Result<Self> {
        if value == f64::INFINITY {
            return Ok(Self::infinity());
        }
        if !(value >= 1.0) || !value.is_finite() {
            return Err(Error::ExponentOutOfRange(value.to_string()));
        }
        if value.fract() == 0.0 && value < 1e12 {
            return Self::integer(value as i64);
        }
        Ok(Exponent { recip: Reciprocal::Approx(1.0 / value) })
    }

    /// Build from the reciprocal `1/e`, which must lie in `[0, 1]`.
    pub fn from_reciprocal(recip: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&recip) {
            return Err(Error::ExponentOutOfRange(format!("1/{recip}")));
        }
        Ok(Exponent { recip: Reciprocal::Approx(recip) })
    }

    fn from_exact_reciprocal(recip: Rational) -> Result<Self> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        if recip < zero || recip > one {
            return Err(Error::ExponentOutOfRange(format!("1/({recip})")));
        }
        Ok(Exponent { recip: Reciprocal::Exact(recip) })
    }

    fn from_recip(recip: Reciprocal) -> Result<Self> {
        match recip {
            Reciprocal::Exact(r) => Self::from_exact_reciprocal(r),
            Reciprocal::Approx(x) => {
                // snap rounding noise at the ends of [0, 1]
                let x = if x.abs() < RELATION_TOLERANCE {
                    0.0
                } else if (x - 1.0).abs() < RELATION_TOLERANCE {
                    1.0
                } else {
                    x
                };
                Self::from_reciprocal(x)
            }
        }
    }

    pub fn value(&self) -> f64 {
        let r = self.recip.to_f64();
        if r == 0.0 {
            f64::INFINITY
        } else {
            1.0 / r
        }
    }

    pub fn reciprocal(&self) -> f64 {
        self.recip.to_f64()
    }

    /// The exact reciprocal as `(numer, denom)`, if known.
    pub fn exact_reciprocal(&self) -> Option<(i64, i64)> {
        self.recip.exact().map(|r| (*r.numer(), *r.denom()))
    }

    pub fn is_exact(&self) -> bool {
        self.recip.exact().is_some()
    }

    pub fn is_infinite(&self) -> bool {
        self.reciprocal() == 0.0
    }

    pub fn is_one(&self) -> bool {
        self.reciprocal() == 1.0
    }

    pub fn is_two(&self) -> bool {
        self.reciprocal() == 0.5
    }

    /// The conjugate exponent `e' = e/(e-1)`, with `1' = inf` and `inf' = 1`.
    pub fn conjugate(&self) -> Exponent {
        Exponent { recip: self.recip.one_minus() }
    }

    /// True when `self` lies in `[1, 2]`.
    pub fn in_hausdorff_young_range(&self) -> bool {
        self.reciprocal() >= 0.5
    }
}

/// Compare two reciprocals: exactly when both are rational, otherwise within
/// [`RELATION_TOLERANCE`].
fn recip_eq(a: Reciprocal, b: Reciprocal) -> bool {
    match (a.exact(), b.exact()) {
        (Some(x), Some(y)) => x == y,
        _ => (a.to_f64() - b.to_f64()).abs() <= RELATION_TOLERANCE,
    }
}

impl PartialEq for Exponent {
    fn eq(&self, other: &Self) -> bool {
        recip_eq(self.recip, other.recip)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        if self == other {
            return Some(std::cmp::Ordering::Equal);
        }
        // larger exponent, smaller reciprocal
        other.reciprocal().partial_cmp(&self.reciprocal())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.recip {
            Reciprocal::Exact(r) => {
                if *r.numer() == 0 {
                    write!(f, "inf")
                } else if *r.numer() == 1 {
                    write!(f, "{}", r.denom())
                } else {
                    write!(f, "{}/{}", r.denom(), r.numer())
                }
            }
            Reciprocal::Approx(_) if self.is_infinite() => write!(f, "inf"),
            Reciprocal::Approx(_) => write!(f, "{}", self.value()),
        }
    }
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    if int_part.len() + frac_part.len() > 15 {
        return None;
    }
    let digits: i64 = format!("{int_part}{frac_part}").parse().ok()?;
    let denom = 10i64.checked_pow(frac_part.len() as u32)?;
    Some(Rational::new(digits, denom))
}

impl FromStr for Exponent {
    type Err = Error;

    /// Accepts integers, fractions `a/b`, decimal literals, and `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ExponentParse(s.to_string());
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => return Ok(Exponent::infinity()),
            _ => {}
        }
        if let Some((a, b)) = s.split_once('/') {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if a <= 0 || b <= 0 {
                return Err(Error::ExponentOutOfRange(s.to_string()));
            }
            return Exponent::ratio(a, b);
        }
        if let Some(value) = parse_decimal(s) {
            if value == Rational::from_integer(0) {
                return Err(Error::ExponentOutOfRange(s.to_string()));
            }
            return Exponent::from_exact_reciprocal(value.recip());
        }
        let value: f64 = s.parse().map_err(|_| bad())?;
        Exponent::from_f64(value)
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dimensions `(d1, d2)` of the two factors of `R^{d1} x R^{d2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionPair {
    pub d1: usize,
    pub d2: usize,
}

impl DimensionPair {
    /// `d1 >= 1`; `d2 = 0` describes a single-factor (plain Hausdorff-Young) setting.
    pub fn new(d1: usize, d2: usize) -> Result<Self> {
        if d1 == 0 {
            return Err(Error::InvalidGrid("first factor needs d1 >= 1".into()));
        }
        Ok(DimensionPair { d1, d2 })
    }

    pub fn total(&self) -> usize {
        self.d1 + self.d2
    }
}

pub fn conjugate(e: Exponent) -> Exponent {
    e.conjugate()
}

/// Sharp Hausdorff-Young constant `C_r = r^{1/2r} (r')^{-1/2r'}` for `r` in `[1, 2]`.
pub fn beckner_constant(r: Exponent) -> Result<f64> {
    if !r.in_hausdorff_young_range() {
        return Err(Error::ExponentRange { exponent: r.to_string(), range: "[1, 2]" });
    }
    if r.is_one() || r.is_two() {
        return Ok(1.0);
    }
    // with rho = 1/r:  C_r = exp(-(rho/2) ln rho + ((1 - rho)/2) ln(1 - rho))
    let rho = r.reciprocal();
    let sigma = 1.0 - rho;
    Ok((-0.5 * rho * rho.ln() + 0.5 * sigma * sigma.ln()).exp())
}

/// `C_r^n`, the sharp Hausdorff-Young constant on `R^n`.
pub fn beckner_power(r: Exponent, n: usize) -> Result<f64> {
    Ok(beckner_constant(r)?.powi(n as i32))
}

/// The relations of a bilinear exponent tuple, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `1/s + 1/t = 1`
    #[serde(rename = "s-t-relation")]
    InnerConjugate,
    /// `1/r = 1 - 1/p - 1/q`
    #[serde(rename = "r-relation")]
    TargetReciprocal,
    /// `r >= 2`
    #[serde(rename = "r-range")]
    TargetRange,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::InnerConjugate => "s-t-relation",
            Relation::TargetReciprocal => "r-relation",
            Relation::TargetRange => "r-range",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    Violates(Relation),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }

    pub fn reason(&self) -> Option<Relation> {
        match self {
            Admissibility::Admissible => None,
            Admissibility::Violates(r) => Some(*r),
        }
    }
}

/// Exponents `(p, s; q, t; r)`: `F` in `L^p L^s`, `G` in `L^q L^t`, target `L^r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentTuple {
    pub p: Exponent,
    pub s: Exponent,
    pub q: Exponent,
    pub t: Exponent,
    pub r: Exponent,
}

impl ExponentTuple {
    pub fn new(p: Exponent, s: Exponent, q: Exponent, t: Exponent, r: Exponent) -> Self {
        ExponentTuple { p, s, q, t, r }
    }

    pub fn admissibility(&self) -> Admissibility {
        admissible(self)
    }

    /// Mismatch `1/r - (1 - 1/p - 1/q)`; zero for admissible tuples.
    pub fn target_mismatch(&self) -> f64 {
        self.r.reciprocal() - (1.0 - self.p.reciprocal() - self.q.reciprocal())
    }

    /// Mismatch `1/s + 1/t - 1`; zero for admissible tuples.
    pub fn inner_mismatch(&self) -> f64 {
        self.s.reciprocal() + self.t.reciprocal() - 1.0
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {}; {})", self.p, self.s, self.q, self.t, self.r)
    }
}

/// Decide `1/s + 1/t = 1`, `1/r = 1 - 1/p - 1/q` and `r >= 2`, reporting the
/// first relation that fails.
pub fn admissible(tuple: &ExponentTuple) -> Admissibility {
    let one = Reciprocal::Exact(Rational::from_integer(1));
    if !recip_eq(tuple.s.recip.add(tuple.t.recip), one) {
        return Admissibility::Violates(Relation::InnerConjugate);
    }
    // 1/r + 1/p + 1/q = 1
    let total = tuple.r.recip.add(tuple.p.recip).add(tuple.q.recip);
    if !recip_eq(total, one) {
        return Admissibility::Violates(Relation::TargetReciprocal);
    }
    if !tuple.r.in_hausdorff_young_range_conjugate() {
        return Admissibility::Violates(Relation::TargetRange);
    }
    Admissibility::Admissible
}

impl Exponent {
    /// True when `self >= 2`, i.e. the conjugate lies in `[1, 2]`.
    fn in_hausdorff_young_range_conjugate(&self) -> bool {
        match self.recip.exact() {
            Some(r) => r <= Rational::new(1, 2),
            None => self.reciprocal() <= 0.5 + RELATION_TOLERANCE,
        }
    }
}

/// Hölder exponents of a product: `1/u = 1/p + 1/q`, `1/v = 1/s + 1/t`.
pub fn holder_exponents(
    p: Exponent,
    q: Exponent,
    s: Exponent,
    t: Exponent,
) -> Result<(Exponent, Exponent)> {
    let combine = |a: Exponent, b: Exponent| {
        let sum = a.recip.add(b.recip);
        let x = sum.to_f64();
        if x > 1.0 + RELATION_TOLERANCE {
            return Err(Error::ReciprocalSumTooLarge(x));
        }
        Exponent::from_recip(sum)
    };
    Ok((combine(p, q)?, combine(s, t)?))
}
