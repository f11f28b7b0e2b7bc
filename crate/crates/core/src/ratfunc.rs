//! The rational function field F_q(x).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;

/// A reduced fraction `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduce by the gcd and make the denominator monic.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let field = num.field().clone();
        if num.is_zero() {
            return Ok(Self::from_poly(num));
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?.expect("gcd divides"), den.exact_div(&g)?.expect("gcd divides"))
        };
        let lead_inv = field.inv(den.leading())?;
        Ok(RationalFunction { num: num.scale(lead_inv), den: den.scale(lead_inv) })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Self::from_poly(Polynomial::constant(field, c))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_poly(Polynomial::zero(field))
    }

    pub fn one(field: &Field) -> Self {
        Self::from_poly(Polynomial::one(field))
    }

    pub fn x(field: &Field) -> Self {
        Self::from_poly(Polynomial::x(field))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Is this an element of the base field?
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `[F(x) : F(f)] = max(deg num, deg den)` for reduced `f`.
    pub fn extension_degree(&self) -> Result<usize> {
        if self.is_constant() {
            return Err(Error::ConstantFunction);
        }
        Ok(self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0)))
    }

    /// True when every coefficient of numerator and denominator is in F_p.
    pub fn over_prime_field(&self) -> bool {
        self.num.over_prime_field() && self.den.over_prime_field()
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.field() != rhs.field() {
            return Err(Error::FieldMismatch);
        }
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.field() != rhs.field() {
            return Err(Error::FieldMismatch);
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&rhs.den).unwrap_or_else(|_| Polynomial::one(self.field()));
        let g2 = rhs.num.gcd(&self.den).unwrap_or_else(|_| Polynomial::one(self.field()));
        let div = |a: &Polynomial, g: &Polynomial| -> Result<Polynomial> {
            Ok(if g.is_one() || g.is_zero() { a.clone() } else { a.exact_div(g)?.expect("gcd divides") })
        };
        let num = &div(&self.num, &g1)? * &div(&rhs.num, &g2)?;
        let den = &div(&self.den, &g2)? * &div(&rhs.den, &g1)?;
        Self::new(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.inv()?)
    }

    /// Powers of a reduced fraction stay reduced, so no gcd is needed.
    pub fn pow(&self, k: u64) -> Self {
        let num = self.num.pow(k);
        let den = self.den.pow(k);
        let lead_inv = self.field().inv(den.leading()).expect("nonzero denominator");
        RationalFunction { num: num.scale(lead_inv), den: den.scale(lead_inv) }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs).expect("rational function field mismatch")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_sub(rhs).expect("rational function field mismatch")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs).expect("rational function field mismatch")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    fn poly(k: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(k, c)
    }

    fn rf(k: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(k, n), poly(k, d)).unwrap()
    }

    #[test]
    fn canonicalization_examples() {
        let f2 = f(2, 1);
        let r = rf(&f2, &[0, 1, 1], &[0, 1]);
        assert_eq!(r.num(), &poly(&f2, &[1, 1]));
        assert!(r.den().is_one());

        let f3 = f(3, 1);
        let a = poly(&f3, &[1, 2, 1]);
        assert_eq!(RationalFunction::new(a.clone(), Polynomial::one(&f3)).unwrap().num(), &a);
        let r = rf(&f3, &[0, 2], &[2]);
        assert_eq!(r, RationalFunction::x(&f3));

        assert_eq!(
            RationalFunction::new(a, Polynomial::zero(&f3)).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = f(2, 1);
        let s = &rf(&f2, &[1], &[0, 1]) + &rf(&f2, &[1], &[1, 1]);
        assert_eq!(s, rf(&f2, &[1], &[0, 1, 1]));

        let g = rf(&f2, &[1, 1], &[0, 1]);
        assert_eq!(g.pow(3), rf(&f2, &[1, 1, 1, 1], &[0, 0, 0, 1]));
        assert_eq!(&g * &g.inv().unwrap(), RationalFunction::one(&f2));
        assert_eq!(RationalFunction::zero(&f2).inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn extension_degree_examples() {
        let f2 = f(2, 1);
        assert_eq!(RationalFunction::x(&f2).extension_degree().unwrap(), 1);
        let f3 = rf(&f2, &[1, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1]);
        assert_eq!(f3.extension_degree().unwrap(), 6);
        assert_eq!(rf(&f2, &[0, 0, 1], &[1]).extension_degree().unwrap(), 2);
        assert_eq!(
            RationalFunction::one(&f2).extension_degree().unwrap_err(),
            Error::ConstantFunction
        );
    }

    #[test]
    fn mismatch() {
        let a = RationalFunction::x(&f(2, 1));
        let b = RationalFunction::x(&f(3, 1));
        assert_eq!(a.try_add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.try_mul(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn display() {
        let f2 = f(2, 1);
        assert_eq!(rf(&f2, &[1, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1]).to_string(), "(x^6+x^5+x^3+x+1) / (x^4+x^2)");
        assert_eq!(RationalFunction::x(&f2).to_string(), "x");
    }
}
