//! The automorphism group Aut(F_q(x)/F_q) ≅ PGL₂(F_q) as Möbius maps
//! `x -> (ax + b)/(cx + d)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// A nondegenerate Möbius map, stored as the representative of its projective
/// class whose first nonzero entry among `(a, b, c, d)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MoebiusMap {
    field: Field,
    a: Elem,
    b: Elem,
    c: Elem,
    d: Elem,
}

impl MoebiusMap {
    pub fn new(field: &Field, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Self> {
        let k = field;
        if k.mul(a, d) == k.mul(b, c) {
            return Err(Error::DegenerateMap);
        }
        let lead = [a, b, c, d].into_iter().find(|e| !e.is_zero()).expect("nondegenerate");
        let s = k.inv(lead)?;
        Ok(MoebiusMap { field: k.clone(), a: k.mul(a, s), b: k.mul(b, s), c: k.mul(c, s), d: k.mul(d, s) })
    }

    pub fn identity(field: &Field) -> Self {
        Self::new(field, field.one(), Elem::ZERO, Elem::ZERO, field.one()).unwrap()
    }

    /// `x -> x + b`.
    pub fn translation(field: &Field, b: Elem) -> Self {
        Self::new(field, field.one(), b, Elem::ZERO, field.one()).unwrap()
    }

    /// `x -> y x`, `y != 0`.
    pub fn scaling(field: &Field, y: Elem) -> Result<Self> {
        Self::new(field, y, Elem::ZERO, Elem::ZERO, field.one())
    }

    /// `x -> 1/x`.
    pub fn reciprocal(field: &Field) -> Self {
        Self::new(field, Elem::ZERO, field.one(), field.one(), Elem::ZERO).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> [Elem; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_affine(&self) -> bool {
        self.c.is_zero()
    }

    /// Function composition `x -> self(other(x))`, i.e. the matrix product.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let k = &self.field;
        let dot = |p: Elem, q: Elem, r: Elem, s: Elem| k.add(k.mul(p, q), k.mul(r, s));
        Self::new(
            k,
            dot(self.a, other.a, self.b, other.c),
            dot(self.a, other.b, self.b, other.d),
            dot(self.c, other.a, self.d, other.c),
            dot(self.c, other.b, self.d, other.d),
        )
    }

    /// Adjugate matrix; equal to the inverse up to the scalar `ad - bc`.
    pub fn inverse(&self) -> Self {
        let k = &self.field;
        Self::new(k, self.d, k.neg(self.b), k.neg(self.c), self.a).expect("inverse of a nondegenerate map")
    }

    /// The image of the generator x: `(ax + b)/(cx + d)`.
    pub fn image_of_x(&self) -> RationalFunction {
        let k = &self.field;
        RationalFunction::new(Polynomial::linear(k, self.a, self.b), Polynomial::linear(k, self.c, self.d))
            .expect("nondegenerate map has nonzero denominator")
    }

    /// Substitute `(ax + b)/(cx + d)` for `x` in `f`.
    ///
    /// Denominators are cleared symbolically: with `e = max(deg N, deg D)`, each
    /// `x^i` is replaced by `(ax + b)^i (cx + d)^(e - i)`.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        if &self.field != f.field() {
            return Err(Error::FieldMismatch);
        }
        let k = &self.field;
        let (num, den) = (f.num(), f.den());
        let e = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        let mut acc_num = Polynomial::zero(k);
        let mut acc_den = Polynomial::zero(k);
        let mut m_pow = Polynomial::one(k);
        for i in (0..=e).rev() {
            acc_num = &acc_num.mul_linear(self.a, self.b) + &m_pow.scale(num.coeff(i));
            acc_den = &acc_den.mul_linear(self.a, self.b) + &m_pow.scale(den.coeff(i));
            if i > 0 {
                m_pow = m_pow.mul_linear(self.c, self.d);
            }
        }
        RationalFunction::new(acc_num, acc_den)
    }
}

impl fmt::Display for MoebiusMap {
    /// Affine maps render as `ax+b`; others as `(ax+b)/(x+d)` scaled so the
    /// denominator is monic.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        let wrap = |p: Polynomial| {
            let s = p.to_string();
            if s.contains('+') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.is_affine() {
            let s = k.inv(self.d).expect("affine map has d != 0");
            write!(f, "{}", Polynomial::linear(k, k.mul(self.a, s), k.mul(self.b, s)))
        } else {
            let s = k.inv(self.c).expect("c != 0");
            let num = Polynomial::linear(k, k.mul(self.a, s), k.mul(self.b, s));
            let den = Polynomial::linear(k, k.one(), k.mul(self.d, s));
            write!(f, "{}/{}", wrap(num), wrap(den))
        }
    }
}

impl fmt::Debug for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}", self)
    }
}

/// All (q+1)q(q-1) elements of the group.
///
/// Affine maps `ax + b` (`a != 0`) come first, then the maps
/// `(ax + b)/(x + c)` with `ac != b`, each loop running over the field
/// elements in order.
pub fn enumerate_group(field: &Field) -> Vec<MoebiusMap> {
    let k = field;
    let q = k.q() as usize;
    let mut out = Vec::with_capacity((q + 1) * q * (q - 1));
    for a in k.nonzero_elements() {
        for b in k.elements() {
            out.push(MoebiusMap::new(k, a, b, Elem::ZERO, k.one()).unwrap());
        }
    }
    for a in k.elements() {
        for b in k.elements() {
            for c in k.elements() {
                if k.mul(a, c) != b {
                    out.push(MoebiusMap::new(k, a, b, k.one(), c).unwrap());
                }
            }
        }
    }
    out
}

/// `{x + 1, y x, 1/x}` with `y` the primitive element; `y x` is omitted for
/// q = 2 where it is the identity.
pub fn group_generators(field: &Field) -> Vec<MoebiusMap> {
    let mut gens = vec![MoebiusMap::translation(field, field.one())];
    if field.q() > 2 {
        gens.push(MoebiusMap::scaling(field, field.primitive_element()).unwrap());
    }
    gens.push(MoebiusMap::reciprocal(field));
    gens
}

/// Breadth-first closure of a generating set under composition.
pub fn closure(gens: &[MoebiusMap]) -> Result<Vec<MoebiusMap>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let id = MoebiusMap::identity(first.field());
    let mut seen: HashSet<MoebiusMap> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g)?;
            if seen.insert(h.clone()) {
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}
