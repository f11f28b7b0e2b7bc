//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: no trailing zeros, and the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Polynomial {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero(field: &Field) -> Self {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Polynomial { field: field.clone(), coeffs: vec![c] }.trim()
    }

    /// The indeterminate x.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// `c x^deg`.
    pub fn monomial(field: &Field, c: Elem, deg: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Polynomial { field: field.clone(), coeffs }.trim()
    }

    /// `a x + b`.
    pub fn linear(field: &Field, a: Elem, b: Elem) -> Self {
        Polynomial { field: field.clone(), coeffs: vec![b, a] }.trim()
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        Polynomial { field: field.clone(), coeffs }.trim()
    }

    /// Coefficients from integers, reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// Parse the serialized form: one digit vector per coefficient, ascending.
    pub fn from_digit_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Self> {
        let coeffs = rows.iter().map(|r| field.from_digits(r)).collect::<Result<_>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn to_digit_rows(&self) -> Vec<Vec<u32>> {
        self.coeffs.iter().map(|&c| self.field.digits(c)).collect()
    }

    /// `x^q - x`.
    pub fn x_q_minus_x(field: &Field) -> Self {
        let q = field.q() as usize;
        let mut coeffs = vec![Elem::ZERO; q + 1];
        coeffs[q] = field.one();
        coeffs[1] = field.neg(field.one());
        Self::from_coeffs(field, coeffs)
    }

    /// The expanded product of `(x - a)` over every element `a` of the field.
    pub fn vanishing(field: &Field) -> Self {
        field.elements().fold(Self::one(field), |acc, a| acc.mul_linear(field.one(), field.neg(a)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    /// True when every coefficient lies in the prime subfield.
    pub fn over_prime_field(&self) -> bool {
        self.coeffs.iter().all(|&c| self.field.in_prime_field(c))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.field.add(*c, s);
        }
        Ok(Self::from_coeffs(&self.field, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            self.field.axpy(&mut out[i..], a, &other.coeffs);
        }
        Ok(Self::from_coeffs(&self.field, out))
    }

    pub fn scale(&self, c: Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Multiply by `a x + b` in linear time.
    pub fn mul_linear(&self, a: Elem, b: Elem) -> Self {
        let k = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] = k.add(out[i], k.mul(c, b));
            out[i + 1] = k.add(out[i + 1], k.mul(c, a));
        }
        Self::from_coeffs(k, out)
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; shift];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Scale to leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    /// `self^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let k = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = k.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(k), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        let neg_div: Vec<Elem> = divisor.coeffs.iter().map(|&c| k.neg(c)).collect();
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let factor = k.mul(c, lead_inv);
            quot[top - dd] = factor;
            k.axpy(&mut rem[top - dd..=top], factor, &neg_div);
            debug_assert!(rem[top].is_zero());
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(k, quot), Self::from_coeffs(k, rem)))
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument("gcd of two zero polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Horner evaluation.
    pub fn eval(&self, v: Elem) -> Elem {
        let k = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| k.add(k.mul(acc, v), c))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics if the operands live in different fields; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial field mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial field mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial field mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Polynomial { field: self.field.clone(), coeffs }
    }
}

impl fmt::Display for Polynomial {
    /// Descending degree, unit coefficients omitted: `x^6+x^5+x^3+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let k = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let rendered = k.render(c);
            let coeff = if c == k.one() && i > 0 {
                String::new()
            } else if rendered.contains('+') && i > 0 {
                format!("({rendered})")
            } else {
                rendered
            };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.field)
    }
}
