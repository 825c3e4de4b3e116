//! Exact rational coefficients.
//!
//! A thin wrapper over `Ratio<i64>` whose arithmetic is overflow-checked in
//! every build profile. Results are either exact or the operation panics.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(Ratio<i64>);

impl Scalar {
    pub const ZERO: Scalar = Scalar(Ratio::new_raw(0, 1));
    pub const ONE: Scalar = Scalar(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Scalar(Ratio::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Ratio::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Scalar(self.0.recip())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_add(&rhs.0).expect("rational overflow in add"))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_sub(&rhs.0).expect("rational overflow in sub"))
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_mul(&rhs.0).expect("rational overflow in mul"))
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(self.0.checked_div(&rhs.0).expect("rational overflow in div"))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::ZERO - self
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Scalar::new(1, 3);
        let b = Scalar::new(1, 6);
        assert_eq!(a + b, Scalar::new(1, 2));
        assert_eq!(a - b, b);
        assert_eq!(a * b, Scalar::new(1, 18));
        assert_eq!(a / b, Scalar::from_int(2));
        assert_eq!(-a + a, Scalar::ZERO);
        assert_eq!(a.recip(), Scalar::from_int(3));
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn overflow_panics() {
        let big = Scalar::from_int(i64::MAX);
        let _ = big + Scalar::ONE;
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Scalar::new(-2, 4)), "-1/2");
        assert_eq!(alloc::format!("{}", Scalar::from_int(3)), "3");
    }
}
