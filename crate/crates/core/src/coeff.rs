//! Gaussian rationals `a + b·i` with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact complex number with rational real and imaginary parts.
///
/// Both parts are kept in lowest terms with positive denominators by
/// `BigRational`; no operation ever rounds.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coefficient {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coefficient { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coefficient {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real coefficient. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    /// `re + im·i` from small integers.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Coefficient {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coefficient {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|c|²`, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Coefficient {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Coefficient {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn mul_i(&self) -> Self {
        Coefficient {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coefficient::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Nearest double-precision complex value.
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact rational image of a finite double-precision complex value.
    pub fn from_complex64(z: Complex64) -> Option<Self> {
        Some(Coefficient {
            re: BigRational::from_float(z.re)?,
            im: BigRational::from_float(z.im)?,
        })
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Prints `a`, `b*i`, or `(a + b*i)` using parser-compatible syntax.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", im_abs)
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, im_part);
        }
        let op = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "({} {} {})", self.re, op, im_part)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient::real(r)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_gaussian() {
        let c = Coefficient::gaussian(1, 1);
        let inv = c.inv().unwrap();
        assert_eq!(inv, Coefficient::new(BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 2.into())));
        assert!((&c * &inv).is_one());
        assert!(Coefficient::zero().inv().is_none());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let c = Coefficient::gaussian(2, -3);
        let mut acc = Coefficient::one();
        for e in 0..7 {
            assert_eq!(c.pow(e), acc);
            acc = &acc * &c;
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Coefficient::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Coefficient::gaussian(0, -1).to_string(), "-i");
        assert_eq!(Coefficient::gaussian(3, 2).to_string(), "(3 + 2*i)");
        let c = Coefficient::new(BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 3.into()));
        assert_eq!(c.to_string(), "(1/2 - 1/3*i)");
    }

    #[test]
    fn float_round_trip_is_exact() {
        let z = Complex64::new(0.1, -2.5e-7);
        let c = Coefficient::from_complex64(z).unwrap();
        assert_eq!(c.to_complex64(), z);
    }
}
