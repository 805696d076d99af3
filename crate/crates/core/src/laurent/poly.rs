use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::ring::{Coefficient, ExactDiv};
use super::LaurentError;

/// An integer-coefficient Laurent polynomial in one variable `x`.
///
/// Terms are kept sparse, keyed by exponent, and never store a zero
/// coefficient, so the zero polynomial is the empty map and structural
/// equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `x^exp`.
    pub fn x_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `x^(lowest + k)`.
    pub fn from_coeffs(lowest: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (lowest + k as i32, C::from_i64(c).expect("coefficient out of range"))),
        )
    }

    fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for the units of the Laurent ring, `±x^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v.clone() * c.clone())).collect() }
    }

    /// The substitution `x -> 1/x`, done by negating exponents.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Canonical representative of the orbit `{±x^k p}`: shifted so the
    /// lowest exponent is zero and signed so the constant term is positive.
    pub fn normalize(&self) -> Result<Self, LaurentError> {
        let low = self.min_exponent().ok_or(LaurentError::ZeroPolynomial)?;
        let shifted = self.shift(-low);
        if shifted.coeff(0).is_negative() {
            Ok(-shifted)
        } else {
            Ok(shifted)
        }
    }

    /// If `self == s * x^k * other` for a sign `s`, returns `(s, k)`.
    pub fn unit_ratio(&self, other: &Self) -> Option<(i8, i32)> {
        let (a, b) = (self.min_exponent()?, other.min_exponent()?);
        let k = a - b;
        let shifted = other.shift(k);
        if *self == shifted {
            Some((1, k))
        } else if *self == -shifted {
            Some((-1, k))
        } else {
            None
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn evaluate(&self, at: &Ratio<C>) -> Result<Ratio<C>, LaurentError> {
        if at.is_zero() {
            return Err(LaurentError::ZeroEvaluationPoint);
        }
        let inv = at.recip();
        let mut total = Ratio::zero();
        for (&e, c) in &self.terms {
            let base = if e < 0 { &inv } else { at };
            let mut power = Ratio::one();
            for _ in 0..e.unsigned_abs() {
                power = power * base.clone();
            }
            total = total + power * Ratio::from_integer(c.clone());
        }
        Ok(total)
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn coefficient_sum(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coefficient> AddAssign for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: LaurentPoly<C>) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: LaurentPoly<C>) {
        *self -= &rhs;
    }
}

impl<C: Coefficient> MulAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn mul_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = &*self * rhs;
    }
}

impl<C: Coefficient> MulAssign for LaurentPoly<C> {
    fn mul_assign(&mut self, rhs: LaurentPoly<C>) {
        *self = &*self * &rhs;
    }
}

impl<C: Coefficient> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(mut self) -> LaurentPoly<C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coefficient> $trait for LaurentPoly<C> {
            type Output = LaurentPoly<C>;

            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coefficient> $trait<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;

            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }

        impl<C: Coefficient> $trait<LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;

            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coefficient> ExactDiv for LaurentPoly<C> {
    /// Long division from the top degree down. In `Z[x, 1/x]` an exact
    /// quotient of `a` by `b` has exponents in
    /// `[min a - min b, max a - max b]`, which bounds the loop.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (d_low, d_high) = (rhs.min_exponent()?, rhs.max_exponent()?);
        let Some(a_low) = self.min_exponent() else {
            return Some(Self::zero());
        };
        let floor = a_low - d_low;
        let lead = &rhs.terms[&d_high];
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_high) = rem.max_exponent() {
            let exp = r_high - d_high;
            if exp < floor {
                return None;
            }
            let c = rem.terms[&r_high].div_exact(lead)?;
            let term = Self::monomial(c.clone(), exp);
            rem -= &term * rhs;
            quotient.add_term(exp, c);
        }
        Some(quotient)
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    /// Ascending exponents, e.g. `-x^-2 + 3x^-1 - 3 + 3x - x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match e {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<C: Coefficient> FromStr for LaurentPoly<C> {
    type Err = LaurentError;

    /// Parses the [`Display`](fmt::Display) form. Accepts terms like `3`,
    /// `-x`, `2x^-1`, `x^3` joined by `+`/`-`, with optional whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            // a sign starts a new term unless it belongs to an exponent
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = Self::zero();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match body.find('x') {
                None => (C::from_str_radix(body, 10).map_err(|_| bad())?, 0),
                Some(pos) => {
                    let coeff = match &body[..pos] {
                        "" => C::one(),
                        digits => C::from_str_radix(digits, 10).map_err(|_| bad())?,
                    };
                    let exp = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest.strip_prefix('^').and_then(|e| e.parse::<i32>().ok()).ok_or_else(bad)?,
                    };
                    (coeff, exp)
                }
            };
            out.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl<C: Coefficient> Serialize for LaurentPoly<C> {
    /// `{"exponent": coefficient}`; coefficients that do not fit an `i64`
    /// are written as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireCoefficient {
    Int(i64),
    Text(String),
}

impl<'de, C: Coefficient> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<C>(std::marker::PhantomData<C>);

        impl<'de, C: Coefficient> Visitor<'de> for PolyVisitor<C> {
            type Value = LaurentPoly<C>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from exponent to integer coefficient")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((key, value)) = access.next_entry::<String, WireCoefficient>()? {
                    let exp: i32 = key.parse().map_err(de::Error::custom)?;
                    let coeff = match value {
                        WireCoefficient::Int(v) => C::from_i64(v),
                        WireCoefficient::Text(t) => C::from_str_radix(&t, 10).ok(),
                    }
                    .ok_or_else(|| de::Error::custom("coefficient out of range"))?;
                    p.add_term(exp, coeff);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;

    type P = LaurentPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        assert_eq!(p("x - 1") * p("x + 1"), p("x^2 - 1"));
    }

    #[test]
    fn product_with_inverse_powers() {
        // (1 - 1/x)(-x) = -x + 1
        assert_eq!(p("1 - x^-1") * p("-x"), p("1 - x"));
    }

    #[test]
    fn display_matches_documented_rendering() {
        let beta = P::from_coeffs(-2, &[-1, 3, -3, 3, -1]);
        assert_eq!(beta.to_string(), "-x^-2 + 3x^-1 - 3 + 3x - x^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::x().to_string(), "x");
        assert_eq!(p("-x^-1").to_string(), "-x^-1");
    }

    #[test]
    fn normalize_examples() {
        let delta = P::from_coeffs(1, &[1, -3, 3, -3, 1]);
        let canonical = P::from_coeffs(0, &[1, -3, 3, -3, 1]);
        assert_eq!(delta.normalize().unwrap(), canonical);
        let beta = P::from_coeffs(-2, &[-1, 3, -3, 3, -1]);
        assert_eq!(beta.normalize().unwrap(), canonical);
        assert_eq!(p("-x^7").normalize().unwrap(), P::one());
        assert_eq!(P::zero().normalize(), Err(LaurentError::ZeroPolynomial));
    }

    #[test]
    fn unit_ratio_recovers_sign_and_shift() {
        let delta = P::from_coeffs(1, &[1, -3, 3, -3, 1]);
        let beta = P::from_coeffs(-2, &[-1, 3, -3, 3, -1]);
        assert_eq!(beta.unit_ratio(&delta), Some((-1, -3)));
        assert_eq!(delta.unit_ratio(&p("1 + x")), None);
    }

    #[test]
    fn evaluation() {
        let beta = P::from_coeffs(-2, &[-1, 3, -3, 3, -1]);
        let one = Ratio::from_integer(BigInt::from(1));
        assert_eq!(beta.evaluate(&one).unwrap(), one);
        let delta = P::from_coeffs(1, &[1, -3, 3, -3, 1]);
        assert_eq!(delta.evaluate(&one).unwrap(), Ratio::from_integer(BigInt::from(-1)));
        let half = Ratio::new(BigInt::from(1), BigInt::from(2));
        // x^-1 + x at 1/2 = 2 + 1/2
        assert_eq!(p("x^-1 + x").evaluate(&half).unwrap(), Ratio::new(BigInt::from(5), BigInt::from(2)));
        assert_eq!(beta.evaluate(&Ratio::from_integer(BigInt::from(0))), Err(LaurentError::ZeroEvaluationPoint));
    }

    #[test]
    fn exact_division() {
        let a = p("x^3 - 1");
        assert_eq!(a.div_exact(&p("x - 1")), Some(p("x^2 + x + 1")));
        assert_eq!(a.div_exact(&p("x + 1")), None);
        assert_eq!(p("2x").div_exact(&p("4")), None);
        assert_eq!(p("x^-2 - 1").div_exact(&p("x^-1 - 1")), Some(p("x^-1 + 1")));
        assert_eq!(a.div_exact(&P::zero()), None);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<P>().is_err());
        assert!("x^".parse::<P>().is_err());
        assert!("3y".parse::<P>().is_err());
        assert!("1 +".parse::<P>().is_err());
    }

    #[test]
    fn json_shape() {
        let beta = P::from_coeffs(-2, &[-1, 3]);
        let json = serde_json::to_string(&beta).unwrap();
        assert_eq!(json, r#"{"-2":-1,"-1":3}"#);
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, beta);
        let huge = P::constant(BigInt::from(i64::MAX) * BigInt::from(4));
        let back: P = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-3i32..=3, -4i64..=4), 0..5)
            .prop_map(|terms| P::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn display_parse_round_trip(a in small_poly()) {
            let back: P = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_undoes_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn normalize_is_orbit_invariant(a in small_poly(), k in -4i32..=4, negate in any::<bool>()) {
            prop_assume!(!a.is_zero());
            let n = a.normalize().unwrap();
            prop_assert_eq!(n.normalize().unwrap(), n.clone());
            let moved = if negate { -a.shift(k) } else { a.shift(k) };
            prop_assert_eq!(moved.normalize().unwrap(), n);
        }

        #[test]
        fn value_at_one_is_coefficient_sum(a in small_poly()) {
            let one = Ratio::from_integer(BigInt::from(1));
            prop_assert_eq!(a.evaluate(&one).unwrap(), Ratio::from_integer(a.coefficient_sum()));
        }
    }
}
