//! Exact arithmetic in the finite field F_{p^n}.
//!
//! A [`Field`] is a cheap, shareable handle to the field description together
//! with precomputed log/exp and addition tables. Elements are plain [`Elem`]
//! indices interpreted by the field that produced them; every element is kept
//! in canonical (fully reduced) form so equality is structural.
//!
//! An element is the residue class of `d_0 + d_1 t + ... + d_{n-1} t^{n-1}`
//! modulo the field's irreducible modulus. Its index is the digit vector read
//! as a base-p number with `d_0` as the *most* significant digit, so that
//! iterating indices `0..q` walks the digit vectors in lexicographic order.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u32 = 1 << 16;

/// Above this order the addition table is not materialized.
const ADD_TABLE_LIMIT: u32 = 1024;

/// An element of some [`Field`], stored as its canonical index in `0..q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    /// `p^(n-1)`: the index of the unit element.
    unit: u32,
    modulus: Option<Vec<u32>>,
    add: Option<Vec<u16>>,
    neg: Vec<u32>,
    /// `exp[i] = g^i` for `i in 0..2(q-1)`, `g` the primitive element.
    exp: Vec<u32>,
    /// `log[g^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
    primitive: Elem,
}

/// The finite field F_q, q = p^n.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            Some(m) if self.0.n > 1 => write!(f, "F_{}[t]/({})", self.0.p, render_fp_poly(m, 't')),
            _ => write!(f, "F_{}", self.0.p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

/// Construct F_{p^n}. Without a modulus the lexicographically smallest monic
/// irreducible polynomial of degree n (digits compared constant term first)
/// is used.
pub fn make_field(p: u64, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
    Field::new(p, n, modulus)
}

impl Field {
    pub fn new(p: u64, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if n < 1 {
            return Err(Error::InvalidDegree(n));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = (p as u128).checked_pow(n).filter(|&q| q <= MAX_ORDER as u128);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge { p, n, max: MAX_ORDER }),
        };
        let p = p as u32;

        let modulus = match modulus {
            Some(m) => {
                validate_modulus(m, p, n)?;
                Some(m.to_vec())
            }
            None if n > 1 => Some(default_modulus(p, n)),
            None => None,
        };

        let arith = SlowArith { p, n, modulus: modulus.as_deref() };
        let unit = q / p;
        let primitive = arith.first_primitive(q, unit);

        let mut exp = Vec::with_capacity(2 * (q as usize - 1).max(1));
        let mut log = vec![0u32; q as usize];
        let mut acc = unit;
        for i in 0..2 * (q - 1).max(1) {
            exp.push(acc);
            if i < q - 1 {
                log[acc as usize] = i;
            }
            acc = arith.mul(acc, primitive);
        }

        let neg = (0..q).map(|a| arith.neg(a)).collect();
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    t.push(arith.add(a, b) as u16);
                }
            }
            t
        });

        Ok(Field(Arc::new(Inner {
            p,
            n,
            q,
            unit,
            modulus,
            add,
            neg,
            exp,
            log,
            primitive: Elem(primitive),
        })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus digits in ascending powers, present for proper extensions (and
    /// for prime fields built with an explicit modulus).
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem(self.0.unit)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        let r = v.rem_euclid(self.0.p as i64) as u32;
        Elem(r * self.0.unit)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        let Inner { p, n, .. } = *self.0;
        if digits.len() > n as usize || digits.iter().any(|&d| d >= p) {
            return Err(Error::InvalidDigits { digits: digits.to_vec(), p, n });
        }
        let mut padded = digits.to_vec();
        padded.resize(n as usize, 0);
        Ok(Elem(encode(&padded, p)))
    }

    /// The element with the given index in enumeration order.
    pub fn element(&self, index: u32) -> Option<Elem> {
        (index < self.0.q).then_some(Elem(index))
    }

    /// Digits `d_0..d_{n-1}` (ascending powers of t).
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        decode(a.0, self.0.p, self.0.n)
    }

    /// Does `a` lie in the prime subfield F_p?
    pub fn in_prime_field(&self, a: Elem) -> bool {
        a.0 % self.0.unit == 0
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.n == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= inner.p { s - inner.p } else { s });
        }
        match &inner.add {
            Some(t) => Elem(t[(a.0 * inner.q + b.0) as usize] as u32),
            None => Elem(digitwise_add(a.0, b.0, inner.p, inner.n)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        let i = inner.log[a.0 as usize] + inner.log[b.0 as usize];
        Elem(inner.exp[i as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let l = inner.log[a.0 as usize];
        Ok(Elem(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` by repeated squaring; `0^0 = 1`.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.0.p as u64)
    }

    /// All q elements in lexicographic digit order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.q).map(Elem)
    }

    /// The first element of [`Field::elements`] with multiplicative order q - 1.
    pub fn primitive_element(&self) -> Elem {
        self.0.primitive
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let group = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Ok(group / gcd_u64(group, l))
    }

    /// Human-readable element: an integer for prime fields, a polynomial in
    /// `t` otherwise.
    pub fn render(&self, a: Elem) -> String {
        if self.0.n == 1 {
            a.0.to_string()
        } else {
            render_fp_poly(&self.digits(a), 't')
        }
    }

    /// `dst[i] += a * src[i]`.
    #[inline]
    pub(crate) fn axpy(&self, dst: &mut [Elem], a: Elem, src: &[Elem]) {
        if a.is_zero() {
            return;
        }
        let inner = &*self.0;
        let la = inner.log[a.0 as usize];
        for (d, &s) in dst.iter_mut().zip(src) {
            if s.0 != 0 {
                let prod = Elem(inner.exp[(la + inner.log[s.0 as usize]) as usize]);
                *d = self.add(*d, prod);
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let arith = SlowArith { p: self.0.p, n: self.0.n, modulus: self.0.modulus.as_deref() };
        Elem(arith.mul(a.0, b.0))
    }

    #[cfg(test)]
    pub(crate) fn slow_add(&self, a: Elem, b: Elem) -> Elem {
        Elem(digitwise_add(a.0, b.0, self.0.p, self.0.n))
    }
}

pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().fold(0, |acc, &d| acc * p + d)
}

fn decode(mut idx: u32, p: u32, n: u32) -> Vec<u32> {
    let mut digits = vec![0; n as usize];
    for slot in digits.iter_mut().rev() {
        *slot = idx % p;
        idx /= p;
    }
    digits
}

fn digitwise_add(mut a: u32, mut b: u32, p: u32, n: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..n {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Schoolbook arithmetic on digit vectors, used to build the tables and as an
/// independent reference in tests.
struct SlowArith<'a> {
    p: u32,
    n: u32,
    modulus: Option<&'a [u32]>,
}

impl SlowArith<'_> {
    fn add(&self, a: u32, b: u32) -> u32 {
        digitwise_add(a, b, self.p, self.n)
    }

    fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = decode(a, self.p, self.n).iter().map(|&x| (self.p - x) % self.p).collect();
        encode(&d, self.p)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.n == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let da = decode(a, self.p, self.n);
        let db = decode(b, self.p, self.n);
        let mut prod = vec![0u64; 2 * self.n as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let m = self.modulus.expect("extension field without modulus");
        let n = self.n as usize;
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c != 0 {
                // t^n = -(m_0 + ... + m_{n-1} t^{n-1})
                for (i, &mi) in m[..n].iter().enumerate() {
                    prod[k - n + i] = (prod[k - n + i] + (p - c) * mi as u64) % p;
                }
                prod[k] = 0;
            }
        }
        let digits: Vec<u32> = prod[..n].iter().map(|&x| x as u32).collect();
        encode(&digits, self.p)
    }

    fn pow(&self, a: u32, mut k: u64, unit: u32) -> u32 {
        let mut base = a;
        let mut acc = unit;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn first_primitive(&self, q: u32, unit: u32) -> u32 {
        let group = (q - 1) as u64;
        let factors = prime_factors(group);
        (1..q)
            .find(|&y| factors.iter().all(|&r| self.pow(y, group / r, unit) != unit))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

// ---- polynomials over F_p on raw digit vectors (ascending), for modulus search ----

fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let idx = top - db + i;
            r[idx] = ((r[idx] as u64 + (p - c) as u64 * bi as u64) % p as u64) as u32;
        }
        fp_trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Trial division by every monic polynomial of degree 1..=n/2.
pub fn is_irreducible_over_prime(poly: &[u32], p: u32) -> bool {
    let n = poly.len() - 1;
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = decode(idx as u32, p, d as u32);
            divisor.push(1);
            if fp_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, n: u32) -> Vec<u32> {
    let count = p.pow(n);
    (0..count)
        .map(|idx| {
            let mut m = decode(idx, p, n);
            m.push(1);
            m
        })
        .find(|m| is_irreducible_over_prime(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn validate_modulus(m: &[u32], p: u32, n: u32) -> Result<()> {
    if m.len() != n as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} digits for degree {}, got {}",
            n + 1,
            n,
            m.len()
        )));
    }
    if let Some(&d) = m.iter().find(|&&d| d >= p) {
        return Err(Error::InvalidModulus(format!("digit {d} is not in [0, {p})")));
    }
    if m[n as usize] != 1 {
        return Err(Error::InvalidModulus("modulus is not monic".into()));
    }
    if !is_irreducible_over_prime(m, p) {
        return Err(Error::ReducibleModulus(m.to_vec()));
    }
    Ok(())
}

/// Render ascending digits as a polynomial in `var`, descending degree.
pub(crate) fn render_fp_poly(digits: &[u32], var: char) -> String {
    let mut terms = Vec::new();
    for (i, &d) in digits.iter().enumerate().rev() {
        if d == 0 {
            continue;
        }
        let coeff = if d == 1 && i > 0 { String::new() } else { d.to_string() };
        let term = match i {
            0 => coeff,
            1 => format!("{coeff}{var}"),
            _ => format!("{coeff}{var}^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    fn el(k: &Field, d: &[u32]) -> Elem {
        k.from_digits(d).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f2 = f(2, 1);
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.modulus(), None);
        assert_eq!(f(2, 2).modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(f(3, 1).q(), 3);
        // x^2 + 1 is the first monic irreducible quadratic over F_3
        assert_eq!(f(3, 2).modulus(), Some(&[1, 0, 1][..]));
    }

    #[test]
    fn default_modulus_is_lexicographically_first() {
        for (p, n) in [(2u32, 2u32), (2,3), (2, 4), (3, 2), (5, 2), (3, 3)] {
            let m = default_modulus(p, n);
            // brute-force: smallest monic irreducible, comparing d_0 first
            let mut all: Vec<Vec<u32>> = (0..p.pow(n))
                .map(|i| {
                    let mut v: Vec<u32> = (0..n).map(|j| (i / p.pow(j)) % p).collect();
                    v.push(1);
                    v
                })
                .filter(|v| is_irreducible_over_prime(v, p))
                .collect();
            all.sort();
            assert_eq!(m, all[0], "p={p} n={n}");
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1, 1, None).unwrap_err(), Error::NotPrime(1));
        assert_eq!(Field::new(2, 0, None).unwrap_err(), Error::InvalidDegree(0));
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(_))));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1, 0])), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1])), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(2, 20, None), Err(Error::FieldTooLarge { .. })));
        assert!(Field::new(2, 3, Some(&[1, 1, 0, 1])).is_ok());
    }

    #[test]
    fn arithmetic_examples() {
        let f3 = f(3, 1);
        assert_eq!(f3.mul(f3.from_int(2), f3.from_int(2)), f3.one());
        assert_eq!(f3.inv(f3.from_int(2)).unwrap(), f3.from_int(2));
        assert_eq!(f3.pow(f3.from_int(2), 2), f3.one());

        let f4 = f(2, 2);
        let t = el(&f4, &[0, 1]);
        let t1 = el(&f4, &[1, 1]);
        assert_eq!(f4.mul(t, t), t1);
        assert_eq!(f4.inv(t).unwrap(), t1);
        assert_eq!(f4.pow(t, 4), t);
        assert_eq!(f4.frobenius(t), t1);
        assert_eq!(f4.frobenius(f4.zero()), f4.zero());

        let f2 = f(2, 1);
        assert_eq!(f2.inv(f2.one()).unwrap(), f2.one());
        assert_eq!(f2.inv(f2.zero()), Err(Error::DivisionByZero));
        for k in [f2.clone(), f3.clone(), f4.clone()] {
            assert_eq!(k.pow(k.zero(), 0), k.one());
            for a in k.elements() {
                assert_eq!(k.add(a, k.neg(a)), k.zero());
            }
        }
    }

    #[test]
    fn enumeration_and_primitive() {
        let f2 = f(2, 1);
        assert_eq!(f2.elements().collect::<Vec<_>>(), vec![f2.zero(), f2.one()]);
        assert_eq!(f2.primitive_element(), f2.one());
        let f3 = f(3, 1);
        let e: Vec<_> = f3.elements().map(|a| f3.digits(a)).collect();
        assert_eq!(e, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(f3.primitive_element(), f3.from_int(2));
        let f4 = f(2, 2);
        let all: Vec<_> = f4.elements().map(|a| f4.digits(a)).collect();
        assert_eq!(all.len(), 4);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        assert_eq!(f4.primitive_element(), el(&f4, &[0, 1]));
    }

    #[test]
    fn tables_agree_with_schoolbook_arithmetic() {
        for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (2, 4), (7, 1), (5, 2)] {
            let k = f(p, n);
            for a in k.elements() {
                for b in k.elements() {
                    assert_eq!(k.mul(a, b), k.slow_mul(a, b));
                    assert_eq!(k.add(a, b), k.slow_add(a, b));
                }
            }
        }
    }

    #[test]
    fn fermat_and_frobenius_exhaustive() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let k = f(p, n);
            let q = k.q() as u64;
            for a in k.elements() {
                assert_eq!(k.pow(a, q), a);
                if !a.is_zero() {
                    assert_eq!(k.pow(a, q - 1), k.one());
                }
                for b in k.elements() {
                    assert_eq!(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
                }
            }
            assert_eq!(k.order(k.primitive_element()).unwrap(), q - 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let k = f(p, n);
            for a in k.elements() {
                if !a.is_zero() {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
                }
                for b in k.elements() {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in k.elements() {
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn digits_round_trip_and_prime_subfield() {
        let k = f(3, 2);
        for a in k.elements() {
            assert_eq!(k.from_digits(&k.digits(a)).unwrap(), a);
        }
        assert!(k.in_prime_field(k.from_int(2)));
        assert!(!k.in_prime_field(el(&k, &[0, 1])));
        assert!(k.from_digits(&[3, 0]).is_err());
        assert!(k.from_digits(&[0, 0, 1]).is_err());
        assert_eq!(k.render(el(&k, &[1, 2])), "2t+1");
        assert_eq!(k.render(k.zero()), "0");
    }
}
