//! Exact scalars: arbitrary-precision rationals and the cyclotomic field
//! of cube roots of unity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar field of every linear combination in the kernel.
pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ring operations needed by the dense matrices of representation checks.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// `a + b·ω` with `ω² + ω + 1 = 0`, i.e. an element of ℚ(ω) for a primitive
/// cube root of unity ω.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycOmega {
    pub a: Rational,
    pub b: Rational,
}

impl CycOmega {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycOmega { a, b }
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        CycOmega::new(Rational::zero(), Rational::one())
    }

    /// `ωᵏ` for any integer exponent.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycOmega::one(),
            1 => CycOmega::omega(),
            _ => CycOmega::new(-Rational::one(), -Rational::one()),
        }
    }

    /// Complex conjugation, ω ↦ ω² = −1 − ω.
    pub fn conj(&self) -> Self {
        CycOmega::new(&self.a - &self.b, -self.b.clone())
    }
}

impl fmt::Display for CycOmega {
    /// `a + b*w` with unit coefficients and zero terms elided: `w`, `-1 - w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w_term = |b: &Rational| {
            if b.is_one() {
                "w".to_string()
            } else {
                format!("{}*w", format_rational(b))
            }
        };
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        if self.a.is_zero() {
            return if (-&self.b).is_one() { write!(f, "-w") } else { write!(f, "{}", w_term(&self.b)) };
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {sign} {}", format_rational(&self.a), w_term(&self.b.abs()))
    }
}

impl Add for CycOmega {
    type Output = CycOmega;
    fn add(self, rhs: CycOmega) -> CycOmega {
        CycOmega::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for CycOmega {
    type Output = CycOmega;
    fn sub(self, rhs: CycOmega) -> CycOmega {
        CycOmega::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for CycOmega {
    type Output = CycOmega;
    fn neg(self) -> CycOmega {
        CycOmega::new(-self.a, -self.b)
    }
}

impl Mul for CycOmega {
    type Output = CycOmega;
    // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², with ω² = −1 − ω
    fn mul(self, rhs: CycOmega) -> CycOmega {
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a - bd;
        CycOmega::new(a, b)
    }
}

impl Zero for CycOmega {
    fn zero() -> Self {
        CycOmega::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycOmega {
    fn one() -> Self {
        CycOmega::new(Rational::one(), Rational::zero())
    }
}

impl Scalar for CycOmega {
    fn from_rational(r: &Rational) -> Self {
        CycOmega::new(r.clone(), Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = CycOmega::omega();
        let w2 = w.clone() * w.clone();
        assert_eq!(CycOmega::one() + w.clone() + w2.clone(), CycOmega::zero());
        assert_eq!(w2.clone() * w.clone(), CycOmega::one());
        assert_ne!(w, CycOmega::one());
        assert_eq!(w.conj(), w2);
    }

    #[test]
    fn omega_powers_wrap() {
        assert_eq!(CycOmega::omega_pow(-1), CycOmega::omega_pow(2));
        assert_eq!(CycOmega::omega_pow(3), CycOmega::one());
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }
}
