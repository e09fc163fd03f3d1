//! Exact numbers of the form `Σ c_m √m` with rational `c_m` and square-free `m`.
//!
//! Every transition amplitude is a signed square root of a rational, and sums and
//! products of those stay inside this set. Radicands are kept square-free so that
//! two values are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An exact element of the field generated by square roots over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Radical {
    // radicand (square-free, >= 1) -> nonzero coefficient
    terms: BTreeMap<BigUint, Rational>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRadicalError {
    #[error("empty amplitude")]
    Empty,
    #[error("unexpected input at byte {0}")]
    Unexpected(usize),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("radicand must be positive")]
    ZeroRadicand,
}

/// Splits `n` into `(s, r)` with `n = s² r` and `r` square-free.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u64() {
        let (s, r) = square_free_split_u64(small);
        return (BigUint::from(s), BigUint::from(r));
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    // Past the cube root, what is left is 1, p, p*q or p^2.
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    let root = rest.sqrt();
    if &root * &root == rest && rest > BigUint::one() {
        square *= root;
    } else {
        free *= rest;
    }
    (square, free)
}

fn square_free_split_u64(mut rest: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if root * root == rest && rest > 1 {
        square *= root;
    } else {
        free *= rest;
    }
    (square, free)
}

impl Radical {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(BigUint::one(), value);
        }
        Self { terms }
    }

    pub fn from_integer(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(value)))
    }

    /// `c · √m` for an arbitrary (not necessarily square-free) radicand `m`.
    pub fn scaled_sqrt(coefficient: Rational, radicand: &BigUint) -> Self {
        if coefficient.is_zero() || radicand.is_zero() {
            return Self::zero();
        }
        let (square, free) = square_free_split(radicand);
        let coefficient = coefficient * Rational::from_integer(BigInt::from(square));
        let mut terms = BTreeMap::new();
        terms.insert(free, coefficient);
        Self { terms }
    }

    /// `sign · √(num / den)` in normal form.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn signed_sqrt(sign: Sign, num: &BigUint, den: &BigUint) -> Self {
        assert!(!den.is_zero(), "signed_sqrt: zero denominator");
        if sign == Sign::NoSign || num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(den);
        let (num, den) = (num / &g, den / &g);
        // √(a/b) = (s_a / (s_b r_b)) √(r_a r_b); r_a and r_b are coprime, so r_a r_b is square-free.
        let (sa, ra) = square_free_split(&num);
        let (sb, rb) = square_free_split(&den);
        let magnitude = Rational::new(BigInt::from(sa), BigInt::from(sb * &rb));
        let coefficient = match sign {
            Sign::Minus => -magnitude,
            _ => magnitude,
        };
        let mut terms = BTreeMap::new();
        terms.insert(ra * rb, coefficient);
        Self { terms }
    }

    /// Convenience wrapper over [`Radical::signed_sqrt`] for machine integers.
    pub fn signed_sqrt_u64(sign: i8, num: u64, den: u64) -> Self {
        let sign = match sign.signum() {
            -1 => Sign::Minus,
            0 => Sign::NoSign,
            _ => Sign::Plus,
        };
        Self::signed_sqrt(sign, &BigUint::from(num), &BigUint::from(den))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The `(radicand, coefficient)` pairs, sorted by radicand.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Returns the value as a rational if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Sign of the value, decided exactly.
    ///
    /// Single-term values are trivial; otherwise the sum is split into a positive and a
    /// negative part and the squares are compared recursively.
    pub fn signum(&self) -> i32 {
        if self.terms.is_empty() {
            return 0;
        }
        if self.terms.len() == 1 {
            let (_, c) = self.terms.iter().next().unwrap();
            return if c.is_positive() { 1 } else { -1 };
        }
        let mut pos = Radical::zero();
        let mut neg = Radical::zero();
        for (m, c) in &self.terms {
            let term = Radical::single(m.clone(), c.abs());
            if c.is_positive() {
                pos += term;
            } else {
                neg += term;
            }
        }
        match (pos.is_zero(), neg.is_zero()) {
            (false, true) => 1,
            (true, false) => -1,
            _ => (pos.square() - neg.square()).signum(),
        }
    }

    /// Double-precision value, for display only.
    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(m, c)| c.to_f64().unwrap_or(f64::NAN) * m.to_f64().unwrap_or(f64::NAN).sqrt()).sum()
    }

    fn single(radicand: BigUint, coefficient: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(radicand, coefficient);
        }
        Self { terms }
    }

    fn add_term(&mut self, radicand: BigUint, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl From<i64> for Radical {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<Rational> for Radical {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

impl AddAssign<&Radical> for Radical {
    fn add_assign(&mut self, rhs: &Radical) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Radical {
    fn add_assign(&mut self, rhs: Radical) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for Radical {
    type Output = Radical;
    fn add(mut self, rhs: Radical) -> Radical {
        self += rhs;
        self
    }
}

impl Add<&Radical> for &Radical {
    type Output = Radical;
    fn add(self, rhs: &Radical) -> Radical {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add<&Radical> for Radical {
    type Output = Radical;
    fn add(mut self, rhs: &Radical) -> Radical {
        self += rhs;
        self
    }
}

impl Add<Radical> for &Radical {
    type Output = Radical;
    fn add(self, rhs: Radical) -> Radical {
        rhs + self
    }
}

impl Neg for Radical {
    type Output = Radical;
    fn neg(mut self) -> Radical {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        -self.clone()
    }
}

impl Sub for Radical {
    type Output = Radical;
    fn sub(self, rhs: Radical) -> Radical {
        self + (-rhs)
    }
}

impl Sub<&Radical> for &Radical {
    type Output = Radical;
    fn sub(self, rhs: &Radical) -> Radical {
        self + &(-rhs)
    }
}

impl Mul<&Radical> for &Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        let mut out = Radical::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                // m1, m2 square-free: m1 m2 = g² (m1/g)(m2/g) with the cofactor square-free.
                let g = m1.gcd(m2);
                let radicand = (m1 / &g) * (m2 / &g);
                let coefficient = c1 * c2 * Rational::from_integer(BigInt::from(g));
                out.add_term(radicand, coefficient);
            }
        }
        out
    }
}

impl Mul for Radical {
    type Output = Radical;
    fn mul(self, rhs: Radical) -> Radical {
        &self * &rhs
    }
}

impl Mul<&Radical> for Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        &self * rhs
    }
}

impl Mul<Radical> for &Radical {
    type Output = Radical;
    fn mul(self, rhs: Radical) -> Radical {
        self * &rhs
    }
}

impl Sum for Radical {
    fn sum<I: Iterator<Item = Radical>>(iter: I) -> Radical {
        iter.fold(Radical::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Radical> for Radical {
    fn sum<I: Iterator<Item = &'a Radical>>(iter: I) -> Radical {
        let mut acc = Radical::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Text form: `-1/2*sqrt(3)`, `1/2*sqrt(2)+1/3*sqrt(3)`, `0`.
impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let c = c.abs();
            write!(f, "{}", c.numer())?;
            if !c.denom().is_one() {
                write!(f, "/{}", c.denom())?;
            }
            if !m.is_one() {
                write!(f, "*sqrt({m})")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Radical {
    type Err = ParseRadicalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        for (i, b) in bytes.iter().enumerate() {
            if b.is_ascii_whitespace() && i > 0 && bytes[i - 1].is_ascii_digit() {
                let next = bytes[i..].iter().position(|c| !c.is_ascii_whitespace());
                if next.is_some_and(|j| bytes[i + j].is_ascii_digit()) {
                    return Err(ParseRadicalError::Unexpected(i + next.unwrap()));
                }
            }
        }
        let compact: Vec<(usize, u8)> = s.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseRadicalError::Empty);
        }
        let mut pos = 0;
        let mut out = Radical::zero();
        let at = |pos: usize| compact.get(pos).map(|&(_, b)| b);
        let offset = |pos: usize| compact.get(pos).map_or(s.len(), |&(i, _)| i);

        let digits = |pos: &mut usize| -> Result<BigUint, ParseRadicalError> {
            let start = *pos;
            let mut value = BigUint::zero();
            while let Some(b) = at(*pos).filter(u8::is_ascii_digit) {
                value = value * 10u32 + u32::from(b - b'0');
                *pos += 1;
            }
            if *pos == start {
                return Err(ParseRadicalError::Unexpected(offset(start)));
            }
            Ok(value)
        };

        while pos < compact.len() {
            let negative = match at(pos) {
                Some(b'-') => {
                    pos += 1;
                    true
                }
                Some(b'+') => {
                    pos += 1;
                    false
                }
                _ if pos == 0 => false,
                _ => return Err(ParseRadicalError::Unexpected(offset(pos))),
            };
            let numer = digits(&mut pos)?;
            let mut denom = BigUint::one();
            if at(pos) == Some(b'/') {
                pos += 1;
                denom = digits(&mut pos)?;
                if denom.is_zero() {
                    return Err(ParseRadicalError::ZeroDenominator);
                }
            }
            let mut radicand = BigUint::one();
            if at(pos) == Some(b'*') {
                pos += 1;
                for expected in b"sqrt(" {
                    if at(pos) != Some(*expected) {
                        return Err(ParseRadicalError::Unexpected(offset(pos)));
                    }
                    pos += 1;
                }
                radicand = digits(&mut pos)?;
                if at(pos) != Some(b')') {
                    return Err(ParseRadicalError::Unexpected(offset(pos)));
                }
                pos += 1;
                if radicand.is_zero() {
                    return Err(ParseRadicalError::ZeroRadicand);
                }
            }
            let sign = if negative { Sign::Minus } else { Sign::Plus };
            let coefficient = Rational::new(BigInt::from_biguint(sign, numer), BigInt::from(denom));
            out += Radical::scaled_sqrt(coefficient, &radicand);
        }
        Ok(out)
    }
}

/// Integer that serializes as a JSON number when it fits in 64 bits, else as a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WideInt {
    Small(i64),
    Unsigned(u64),
    Text(String),
}

impl WideInt {
    fn from_bigint(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(small) => WideInt::Small(small),
            None => WideInt::Text(v.to_string()),
        }
    }

    fn to_bigint<E: serde::de::Error>(&self) -> Result<BigInt, E> {
        match self {
            WideInt::Small(v) => Ok(BigInt::from(*v)),
            WideInt::Unsigned(v) => Ok(BigInt::from(*v)),
            WideInt::Text(t) => t.parse().map_err(|_| E::custom(format!("not an integer: {t}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    radicand: WideInt,
    num: WideInt,
    den: WideInt,
}

#[derive(Serialize, Deserialize)]
struct RadicalRepr {
    terms: Vec<TermRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    approx: Option<f64>,
}

impl Serialize for Radical {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr {
                radicand: WideInt::from_bigint(&BigInt::from(m.clone())),
                num: WideInt::from_bigint(c.numer()),
                den: WideInt::from_bigint(c.denom()),
            })
            .collect();
        RadicalRepr { terms, approx: Some(self.to_f64()) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Radical {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = RadicalRepr::deserialize(deserializer)?;
        let mut out = Radical::zero();
        for term in repr.terms {
            let radicand = term.radicand.to_bigint::<D::Error>()?;
            let num = term.num.to_bigint::<D::Error>()?;
            let den = term.den.to_bigint::<D::Error>()?;
            if !radicand.is_positive() {
                return Err(D::Error::custom("radicand must be positive"));
            }
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            let radicand = radicand.to_biguint().expect("checked positive");
            out += Radical::scaled_sqrt(Rational::new(num, den), &radicand);
        }
        Ok(out)
    }
}
