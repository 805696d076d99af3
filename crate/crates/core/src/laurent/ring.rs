use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A commutative ring with identity, expressed through the `num-traits`
/// operator vocabulary so that machine integers, big integers and Laurent
/// polynomials all qualify.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Debug + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Integral domains where divisibility is decidable.
///
/// `div_exact(a, b)` returns `Some(q)` with `a == q * b` when such a `q`
/// exists and `None` otherwise (including division by zero).
pub trait ExactDiv: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! exact_div_for_integer {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn div_exact(&self, rhs: &Self) -> Option<Self> {
                if rhs.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(rhs);
                r.is_zero().then_some(q)
            }
        }
    )*};
}

exact_div_for_integer!(i32, i64, i128, BigInt);

/// Coefficient types for [`LaurentPoly`](super::LaurentPoly).
///
/// Any signed integer type works; [`BigInt`] is the default because fraction
/// free elimination produces minors that outgrow 64 bits on mid-sized
/// diagrams.
pub trait Coefficient:
    ExactDiv + Integer + Signed + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: ExactDiv + Integer + Signed + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
