//! Exact arithmetic in Q(q): Laurent polynomials, reduced rational functions,
//! q-integers and evaluation at rational points.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    PoleAtPoint(String),
    #[error("evaluation point {0} is not generic (must avoid 0 and |q| = 1)")]
    InvalidEvalPoint(String),
}

/// Laurent polynomial in q with rational coefficients.
/// Stored densely as q^low * (c0 + c1 q + ...); both end coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// q^exp
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i32, BigRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::trimmed(lo, coeffs)
    }

    fn trimmed(mut low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i32;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// (exponent, coefficient) pairs with nonzero coefficient, exponents descending.
    pub fn terms_desc(&self) -> Vec<(i32, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i32, c.clone()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn shift(&self, by: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    fn add_ref(&self, other: &Self, sign: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { other.clone() } else { other.neg_ref() };
        }
        let lo = self.low.min(other.low);
        let hi = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - lo) as usize + i];
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Self::trimmed(lo, coeffs)
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::trimmed(self.low + other.low, coeffs)
    }

    /// Exact value at q = x (x must be nonzero when negative exponents occur).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low != 0 {
            acc *= pow_rat(x, self.low);
        }
        acc
    }

    /// Polynomial division in Q[q] after shifting both to low exponent 0.
    /// Returns (quotient, remainder) of the shifted polynomials.
    fn poly_divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem: Vec<BigRational> = num.to_vec();
        if num.len() < den.len() {
            return (Vec::new(), rem);
        }
        let dl = den.len();
        let lead = den[dl - 1].clone();
        let mut quot = vec![BigRational::zero(); num.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] / &lead;
            if !c.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        (quot, rem)
    }

    /// Monic gcd in Q[q] of the exponent-shifted polynomials.
    fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let (_, r) = Self::poly_divrem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(lead) = x.last().cloned() {
            for c in x.iter_mut() {
                *c = &*c / &lead;
            }
        }
        x
    }

    /// Exact division; `None` if `den` does not divide `self` in Q[q, q^-1].
    pub fn exact_div(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (quot, rem) = Self::poly_divrem(&self.coeffs, &den.coeffs);
        if !rem.is_empty() {
            return None;
        }
        Some(Self::trimmed(self.low - den.low, quot))
    }
}

fn pow_rat(x: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num::pow::pow(base, e.unsigned_abs() as usize)
}

fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_desc() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs, true)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs, false)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

/// Element of Q(q) in canonical form: gcd(num, den) = 1, the denominator has
/// lowest exponent 0 and lowest coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    pub fn from_poly(p: LaurentPoly) -> Self {
        QScalar { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// c * q^e
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigRational::from_integer(c.into()), e))
    }

    /// q^e
    pub fn q_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn sign(b: bool) -> Self {
        Self::from_int(if b { 1 } else { -1 })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Builds num/den and reduces to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        let (mut num, mut den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = LaurentPoly::poly_gcd(&num.coeffs, &den.coeffs);
            if g.len() > 1 {
                let g = LaurentPoly::trimmed(0, g);
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            } else {
                (num, den)
            }
        };
        let shift = den.low;
        num = num.shift(-shift);
        den = den.shift(-shift);
        let lead = den.coeffs[0].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QScalar { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn try_inv(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// 1/x; panics on zero.
    pub fn recip(&self) -> Self {
        self.try_inv().expect("inverse of zero in Q(q)")
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self * &rhs.try_inv()?)
    }

    pub fn eval_at(&self, p: &EvalPoint) -> Result<BigRational, ArithError> {
        let d = self.den.eval(&p.value);
        if d.is_zero() {
            return Err(ArithError::PoleAtPoint(fmt_rat(&p.value)));
        }
        Ok(self.num.eval(&p.value) / d)
    }

    /// Bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        let flip = |p: &LaurentPoly| {
            LaurentPoly::from_terms(p.terms_desc().into_iter().map(|(e, c)| (-e, c)))
        };
        Self::normalize(flip(&self.num), flip(&self.den))
    }
}

/// Exact value of x at q = p.
pub fn eval_at(x: &QScalar, p: &EvalPoint) -> Result<BigRational, ArithError> {
    x.eval_at(p)
}

/// q-integer [n] = (q^n - q^-n)/(q - q^-1).
pub fn qint(n: i32) -> QScalar {
    let terms = (0..n.abs()).map(|i| (n.abs() - 1 - 2 * i, BigRational::one()));
    let p = LaurentPoly::from_terms(terms);
    QScalar::from_poly(if n < 0 { -&p } else { p })
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.den == rhs.den {
            if self.den.is_one() {
                return QScalar::from_poly(&self.num + &rhs.num);
            }
            return QScalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        QScalar::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num * &rhs.num);
        }
        QScalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.try_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(QScalar);
owned_ops!(LaurentPoly);

impl Div for QScalar {
    type Output = QScalar;
    fn div(self, rhs: QScalar) -> QScalar {
        &self / &rhs
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::from_poly(LaurentPoly::one())
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    /// Structural order (descending exponents, then coefficients); only used for sorting.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.terms_desc();
        let b = other.terms_desc();
        a.cmp(&b)
    }
}

impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}

/// A rational value of q away from 0 and the unit circle.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct EvalPoint {
    #[serde(with = "rat_string")]
    value: BigRational,
}

impl EvalPoint {
    pub fn new(value: BigRational) -> Result<Self, ArithError> {
        if value.is_zero() || value.abs().is_one() {
            return Err(ArithError::InvalidEvalPoint(fmt_rat(&value)));
        }
        Ok(EvalPoint { value })
    }

    pub fn ratio(p: i64, q: i64) -> Result<Self, ArithError> {
        if q == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(BigRational::new(p.into(), q.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// `count` distinct points p/q' with 2 <= p, q' <= 97, drawn from a seeded generator.
    pub fn seeded(seed: u64, count: usize) -> Vec<EvalPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<EvalPoint> = Vec::with_capacity(count);
        while out.len() < count {
            let p: i64 = rng.gen_range(2..=97);
            let q: i64 = rng.gen_range(2..=97);
            if let Ok(pt) = EvalPoint::ratio(p, q) {
                if !out.contains(&pt) {
                    out.push(pt);
                }
            }
        }
        out
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rat(&self.value))
    }
}

mod rat_string {
    use num::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_rat(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<BigRational>().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QScalar {
        QScalar::q_pow(1)
    }

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), &q() + &QScalar::q_pow(-1));
        let three = &(&QScalar::q_pow(2) + &QScalar::one()) + &QScalar::q_pow(-2);
        assert_eq!(qint(-3), -&three);
    }

    #[test]
    fn telescoping_and_reduction() {
        let qq = &q() - &QScalar::q_pow(-1);
        assert_eq!(&qq * &qint(2), &QScalar::q_pow(2) - &QScalar::q_pow(-2));
        let num = &QScalar::q_pow(2) - &QScalar::one();
        let den = &q() - &QScalar::one();
        let r = num.try_div(&den).unwrap();
        assert_eq!(r, &q() + &QScalar::one());
        assert!(r.is_laurent());
        assert_eq!(den.try_div(&den).unwrap(), QScalar::one());
        assert_eq!(den.try_div(&QScalar::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let two = EvalPoint::ratio(2, 1).unwrap();
        assert_eq!(qint(2).eval_at(&two).unwrap(), BigRational::new(5.into(), 2.into()));
        let pole = QScalar::one().try_div(&(&q() - &QScalar::from_int(2))).unwrap();
        assert!(matches!(pole.eval_at(&two), Err(ArithError::PoleAtPoint(_))));
        let p = EvalPoint::ratio(3, 2).unwrap();
        assert_eq!(QScalar::q_pow(3).eval_at(&p).unwrap(), BigRational::new(27.into(), 8.into()));
        assert!(EvalPoint::ratio(-1, 1).is_err());
        assert!(EvalPoint::ratio(0, 5).is_err());
    }

    #[test]
    fn rendering() {
        let x = &(&QScalar::q_pow(2) - &QScalar::q_pow(-2)) + &QScalar::monomial(3, 0);
        assert_eq!(x.to_string(), "q^2 + 3 - q^-2");
        let y = QScalar::one().try_div(&qint(2)).unwrap();
        assert_eq!(y.to_string(), "(q)/(q^2 + 1)");
    }

    #[test]
    fn seeded_points_are_reproducible() {
        let a = EvalPoint::seeded(7, 3);
        let b = EvalPoint::seeded(7, 3);
        assert_eq!(a, b);
        for p in &a {
            assert!(!p.value().abs().is_one());
        }
    }
}
