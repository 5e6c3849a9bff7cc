//! The scalar abstraction the matrix code is written against.
//!
//! Every implementor is an exact integral domain or field: fraction-free
//! elimination and condensation only ever divide when the quotient is exact,
//! and [`Scalar::exact_div`] reports when it is not.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display + Send + Sync {
    /// `self / rhs` when the quotient exists in `Self`, `None` otherwise
    /// (including division by zero).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_scalar_int {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 {
                    return None;
                }
                let (q, r) = self.div_rem(rhs);
                (r == 0).then_some(q)
            }

            fn from_i64(v: i64) -> Self {
                <$t>::try_from(v).expect("value fits the scalar type")
            }
        }
    )*};
}

impl_scalar_int!(i32, i64, i128);

impl Scalar for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        num_traits::Zero::is_zero(&r).then_some(q)
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Scalar + Integer,
{
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division_is_checked() {
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(8i64.exact_div(&-2), Some(-4));
        assert_eq!(1i64.exact_div(&0), None);
        assert_eq!(
            BigInt::from(-9).exact_div(&BigInt::from(3)),
            Some(BigInt::from(-3))
        );
        assert_eq!(BigInt::from(5).exact_div(&BigInt::from(3)), None);
    }

    #[test]
    fn rational_division_always_exact() {
        let a = Ratio::new(3i64, 4);
        let b = Ratio::new(-1i64, 2);
        assert_eq!(a.exact_div(&b), Some(Ratio::new(-3, 2)));
        assert_eq!(a.exact_div(&Ratio::from_integer(0)), None);
    }
}
