//! Exact numbers of the form `Σ q_s·√s` with rational `q_s` and squarefree `s`.
//!
//! Square roots of distinct squarefree integers are linearly independent over
//! the rationals, so a normalized term map is a unique representation and
//! equality is map equality. Ordering needs the sign of a radical sum: a
//! floating-point filter settles it when the value is clearly away from zero,
//! otherwise the sign is decided exactly by splitting off one prime at a time.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RadicalRepr", try_from = "RadicalRepr")]
pub struct RadicalValue {
    terms: BTreeMap<u64, BigRational>,
}

/// Splits `k` as `f²·s` with `s` squarefree.
pub fn squarefree_split(k: u64) -> (u64, u64) {
    assert!(k > 0, "squarefree_split(0)");
    let mut rest = k;
    let mut factor = 1;
    let mut core = 1;
    let mut p = 2;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            factor *= p;
        }
        if rest.is_multiple_of(p) {
            rest /= p;
            core *= p;
        }
        p += 1;
    }
    (factor, core * rest)
}

fn smallest_prime_factor(k: u64) -> u64 {
    (2..)
        .take_while(|p| p * p <= k)
        .find(|p| k.is_multiple_of(*p))
        .unwrap_or(k)
}

impl RadicalValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: BigRational) -> Self {
        let mut v = Self::zero();
        v.add_term(1, q);
        v
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(BigRational::from_integer(k.into()))
    }

    /// `p/q` as a rational radical value.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    /// `coef·√k`, normalized.
    pub fn sqrt_term(coef: BigRational, k: u64) -> Self {
        let mut v = Self::zero();
        v.add_sqrt_term(coef, k);
        v
    }

    /// `1/√k = √k / k`.
    pub fn inv_sqrt(k: u64) -> Self {
        Self::sqrt_term(BigRational::new(1.into(), k.into()), k)
    }

    /// Adds `coef·√k` for any positive `k`, pulling square factors out.
    pub fn add_sqrt_term(&mut self, coef: BigRational, k: u64) {
        let (factor, core) = squarefree_split(k);
        self.add_term(core, coef * BigRational::from_integer(factor.into()));
    }

    fn add_term(&mut self, s: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    /// Terms `(s, q_s)` with squarefree `s` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&s, q)| (s, q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        RadicalValue {
            terms: self.terms.iter().map(|(&s, q)| (s, q * factor)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&s, q)| rational_to_f64(q) * (s as f64).sqrt())
            .sum()
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        if let Some(sign) = self.float_sign() {
            return sign;
        }
        self.exact_sign()
    }

    fn float_sign(&self) -> Option<Ordering> {
        let mut value = 0.0;
        let mut magnitude = 0.0;
        for (&s, q) in &self.terms {
            let term = rational_to_f64(q) * (s as f64).sqrt();
            value += term;
            magnitude += term.abs();
        }
        if !value.is_finite() || !magnitude.is_finite() {
            return None;
        }
        // f64 error per term is a few ulps; 1e-10 relative leaves a wide margin
        // for the at most a few thousand terms that ever occur.
        if value.abs() > 1e-10 * magnitude {
            Some(value.partial_cmp(&0.0).expect("finite"))
        } else {
            None
        }
    }

    /// Writes the value as `a + b·√p` for a prime `p` and recurses on `a` and
    /// `b`, which do not involve `√p`. When their signs disagree the answer
    /// is `sign(a)·sign(a² − p·b²)`, again free of `√p`.
    fn exact_sign(&self) -> Ordering {
        let mut iter = self.terms.iter();
        let Some((_, first)) = iter.next() else {
            return Ordering::Equal;
        };
        if self.terms.len() == 1 {
            return first.cmp(&BigRational::zero());
        }
        let largest = *self.terms.keys().next_back().expect("nonempty");
        let p = smallest_prime_factor(largest);

        let mut without = RadicalValue::zero();
        let mut with = RadicalValue::zero();
        for (&s, q) in &self.terms {
            if s % p == 0 {
                with.add_term(s / p, q.clone());
            } else {
                without.add_term(s, q.clone());
            }
        }
        let a_sign = without.signum();
        let b_sign = with.signum();
        match (a_sign, b_sign) {
            (Ordering::Equal, b) => b,
            (a, Ordering::Equal) => a,
            (a, b) if a == b => a,
            (a, _) => {
                let p_scale = BigRational::from_integer(BigInt::from(p));
                let diff = &(&without * &without) - &(&with * &with).scale(&p_scale);
                match a {
                    Ordering::Greater => diff.signum(),
                    _ => diff.signum().reverse(),
                }
            }
        }
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
    })
}

impl PartialOrd for RadicalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadicalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum()
    }
}

impl AddAssign<&RadicalValue> for RadicalValue {
    fn add_assign(&mut self, rhs: &RadicalValue) {
        for (&s, q) in &rhs.terms {
            self.add_term(s, q.clone());
        }
    }
}

impl Add for &RadicalValue {
    type Output = RadicalValue;
    fn add(self, rhs: &RadicalValue) -> RadicalValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalValue {
    type Output = RadicalValue;
    fn add(mut self, rhs: RadicalValue) -> RadicalValue {
        self += &rhs;
        self
    }
}

impl Neg for &RadicalValue {
    type Output = RadicalValue;
    fn neg(self) -> RadicalValue {
        RadicalValue {
            terms: self.terms.iter().map(|(&s, q)| (s, -q)).collect(),
        }
    }
}

impl Neg for RadicalValue {
    type Output = RadicalValue;
    fn neg(self) -> RadicalValue {
        -&self
    }
}

impl Sub for &RadicalValue {
    type Output = RadicalValue;
    fn sub(self, rhs: &RadicalValue) -> RadicalValue {
        let mut out = self.clone();
        for (&s, q) in &rhs.terms {
            out.add_term(s, -q);
        }
        out
    }
}

impl Sub for RadicalValue {
    type Output = RadicalValue;
    fn sub(self, rhs: RadicalValue) -> RadicalValue {
        &self - &rhs
    }
}

/// `√a·√b = g·√((a/g)(b/g))` with `g = gcd(a, b)`.
impl Mul for &RadicalValue {
    type Output = RadicalValue;
    fn mul(self, rhs: &RadicalValue) -> RadicalValue {
        let mut out = RadicalValue::zero();
        for (&a, qa) in &self.terms {
            for (&b, qb) in &rhs.terms {
                let g = a.gcd(&b);
                let coef = qa * qb * BigRational::from_integer(g.into());
                out.add_term((a / g) * (b / g), coef);
            }
        }
        out
    }
}

impl std::iter::Sum for RadicalValue {
    fn sum<I: Iterator<Item = RadicalValue>>(iter: I) -> Self {
        iter.fold(RadicalValue::zero(), |acc, v| acc + v)
    }
}

/// `1/2 + 2/3*sqrt(3)`; zero prints as `0`.
impl fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&s, q)) in self.terms.iter().enumerate() {
            let magnitude = q.abs();
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if s == 1 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "sqrt({s})")?;
            } else {
                write!(f, "{magnitude}*sqrt({s})")?;
            }
        }
        Ok(())
    }
}

/// JSON shape: `{"terms": [[s, "p/q"], ...], "float": x}`.
#[derive(Serialize, Deserialize)]
struct RadicalRepr {
    terms: Vec<(u64, String)>,
    float: f64,
}

impl From<RadicalValue> for RadicalRepr {
    fn from(v: RadicalValue) -> Self {
        RadicalRepr {
            float: v.to_f64(),
            terms: v
                .terms
                .iter()
                .map(|(&s, q)| (s, format!("{}/{}", q.numer(), q.denom())))
                .collect(),
        }
    }
}

impl TryFrom<RadicalRepr> for RadicalValue {
    type Error = String;
    fn try_from(repr: RadicalRepr) -> Result<Self, String> {
        let mut v = RadicalValue::zero();
        for (s, text) in repr.terms {
            if s == 0 {
                return Err("radicand must be positive".into());
            }
            let q: BigRational = match text.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad numerator in {text:?}"))?;
                    let q: BigInt = q
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad denominator in {text:?}"))?;
                    if q.is_zero() {
                        return Err(format!("zero denominator in {text:?}"));
                    }
                    BigRational::new(p, q)
                }
                None => BigRational::from_integer(
                    text.trim()
                        .parse()
                        .map_err(|_| format!("bad coefficient {text:?}"))?,
                ),
            };
            v.add_sqrt_term(q, s);
        }
        Ok(v)
    }
}
