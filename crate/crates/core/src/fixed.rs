//! The generator f_m of the fixed field of Aut(F_q(x)/F_q), m = q² - 1.
//!
//! `f_k` is the sum of `φ(x)^k` over every group element φ. It is computed
//! three independent ways:
//!
//! * [`f_k_direct`]: the defining sum, accumulated over the common
//!   denominator `(x^q - x)^k`;
//! * [`f_k_factored`]: `1 - (1 + Σ_b (x - b)^k)(1 + Σ_c (x - c)^-k)`, valid
//!   when `(q - 1) | k`, evaluated with general rational arithmetic;
//! * [`generator_closed_form`]: `g = Σ θ_i x^{i(q-1)}`, `h = Σ x^{iq(q-1)}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::moebius::{enumerate_group, group_generators, MoebiusMap};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// Groups up to this order are checked exhaustively by default.
pub const EXHAUSTIVE_INVARIANCE_MAX_Q: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Factored,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Factored, Method::ClosedForm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Factored => "factored",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Sizes attached to a field: `m = q² - 1` and `|G| = (q + 1) q (q - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpecs {
    pub field: Field,
    pub m: u64,
    pub group_order: u64,
}

impl GeneratorSpecs {
    pub fn new(field: &Field) -> Self {
        let q = field.q() as u64;
        GeneratorSpecs { field: field.clone(), m: q * q - 1, group_order: (q + 1) * q * (q - 1) }
    }
}

fn q_minus_one(field: &Field) -> u64 {
    field.q() as u64 - 1
}

fn require_multiple(field: &Field, k: u64) -> Result<()> {
    let d = q_minus_one(field);
    if k == 0 || k % d != 0 {
        return Err(Error::NotMultiple { k, q_minus_one: d });
    }
    Ok(())
}

/// `Σ_{α ∈ F} α^k` by direct summation. `k = 0` is rejected: the empty-power
/// convention gives `q·1 = 0`, which callers inline.
pub fn power_sum(field: &Field, k: u64) -> Result<Elem> {
    if k == 0 {
        return Err(Error::InvalidArgument("power sum requires k >= 1".into()));
    }
    Ok(field.elements().fold(Elem::ZERO, |acc, a| field.add(acc, field.pow(a, k))))
}

/// `-1` when `(q - 1) | k`, `0` otherwise.
pub fn power_sum_formula(field: &Field, k: u64) -> Result<Elem> {
    if k == 0 {
        return Err(Error::InvalidArgument("power sum requires k >= 1".into()));
    }
    Ok(if k % q_minus_one(field) == 0 { field.neg(field.one()) } else { Elem::ZERO })
}

/// Accumulates `Σ φ(x)^k` as a numerator over the fixed denominator
/// `(x^q - x)^k`.
///
/// Each map is first written in the form `Ax + B` (affine) or
/// `(Ax + B)/(x + C)`. Terms are summed per denominator bucket and multiplied
/// by the matching cofactor `(x^q - x)^k` or `((x^q - x)/(x + C))^k` only in
/// [`DirectAccumulator::finish`]. Absorption order and partitioning do not
/// affect the result; partial accumulators combine with
/// [`DirectAccumulator::merge`].
#[derive(Clone, Debug)]
pub struct DirectAccumulator {
    field: Field,
    k: u64,
    affine: Polynomial,
    fractional: BTreeMap<Elem, Polynomial>,
}

impl DirectAccumulator {
    pub fn new(field: &Field, k: u64) -> Self {
        DirectAccumulator {
            field: field.clone(),
            k,
            affine: Polynomial::zero(field),
            fractional: BTreeMap::new(),
        }
    }

    pub fn absorb(&mut self, map: &MoebiusMap) -> Result<()> {
        if map.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let [a, b, c, d] = map.coeffs();
        if c.is_zero() {
            let s = f.inv(d)?;
            let term = Polynomial::linear(f, f.mul(a, s), f.mul(b, s)).pow(self.k);
            self.affine = &self.affine + &term;
        } else {
            let s = f.inv(c)?;
            let term = Polynomial::linear(f, f.mul(a, s), f.mul(b, s)).pow(self.k);
            let slot = self.fractional.entry(f.mul(d, s)).or_insert_with(|| Polynomial::zero(f));
            *slot = &*slot + &term;
        }
        Ok(())
    }

    pub fn merge(mut self, other: DirectAccumulator) -> Result<Self> {
        if self.field != other.field || self.k != other.k {
            return Err(Error::InvalidArgument("accumulators for different (field, k)".into()));
        }
        self.affine = &self.affine + &other.affine;
        for (c, p) in other.fractional {
            let slot = self.fractional.entry(c).or_insert_with(|| Polynomial::zero(&self.field));
            *slot = &*slot + &p;
        }
        Ok(self)
    }

    /// The unreduced numerator `g_k` with `f_k = g_k / (x^q - x)^k`.
    pub fn numerator(&self) -> Polynomial {
        let f = &self.field;
        let h = Polynomial::x_q_minus_x(f);
        let mut g = &self.affine * &h.pow(self.k);
        for (&c, sum) in &self.fractional {
            if sum.is_zero() {
                continue;
            }
            let cofactor = h
                .exact_div(&Polynomial::linear(f, f.one(), c))
                .expect("same field")
                .expect("x + c divides x^q - x");
            g = &g + &(sum * &cofactor.pow(self.k));
        }
        g
    }

    pub fn finish(&self) -> Result<RationalFunction> {
        let den = Polynomial::x_q_minus_x(&self.field).pow(self.k);
        RationalFunction::new(self.numerator(), den)
    }
}

fn direct_accumulator(field: &Field, k: u64) -> Result<DirectAccumulator> {
    if k == 0 {
        return Err(Error::InvalidArgument("f_k requires k >= 1".into()));
    }
    let mut acc = DirectAccumulator::new(field, k);
    for map in enumerate_group(field) {
        acc.absorb(&map)?;
    }
    Ok(acc)
}

/// `f_k = Σ_{φ ∈ G} φ(x)^k`, reduced.
pub fn f_k_direct(field: &Field, k: u64) -> Result<RationalFunction> {
    direct_accumulator(field, k)?.finish()
}

/// `g_k` with `f_k = g_k / (x^q - x)^k` exactly.
pub fn g_k_numerator(field: &Field, k: u64) -> Result<Polynomial> {
    Ok(direct_accumulator(field, k)?.numerator())
}

/// `f_k = 1 - (1 + Σ_b (x - b)^k)(1 + Σ_c 1/(x - c)^k)` for `(q - 1) | k`.
pub fn f_k_factored(field: &Field, k: u64) -> Result<RationalFunction> {
    require_multiple(field, k)?;
    let one = RationalFunction::one(field);
    let mut left = Polynomial::one(field);
    let mut right = one.clone();
    for b in field.elements() {
        let power = Polynomial::linear(field, field.one(), field.neg(b)).pow(k);
        left = &left + &power;
        right = right.try_add(&RationalFunction::from_poly(power).inv()?)?;
    }
    one.try_sub(&RationalFunction::from_poly(left).try_mul(&right)?)
}

/// The closed-form pair `(g, h)`:
/// `g = Σ_{i=0}^{q(q+1)} θ_i x^{i(q-1)}` with `θ_i = 2` for `i ∈ {q, 2q, …, q²}`
/// and 1 otherwise (reduced into F_p), and `h = Σ_{i=1}^{q} x^{iq(q-1)}`.
pub fn generator_closed_form(field: &Field) -> (Polynomial, Polynomial) {
    let q = field.q() as usize;
    let step = q - 1;
    let mut g = vec![Elem::ZERO; q * (q + 1) * step + 1];
    for i in 0..=q * (q + 1) {
        let theta = if i >= q && i % q == 0 && i <= q * q { 2 } else { 1 };
        g[i * step] = field.from_int(theta);
    }
    let mut h = vec![Elem::ZERO; q * q * step + 1];
    for i in 1..=q {
        h[i * q * step] = field.one();
    }
    (Polynomial::from_coeffs(field, g), Polynomial::from_coeffs(field, h))
}

pub fn closed_form_generator(field: &Field) -> Result<RationalFunction> {
    let (g, h) = generator_closed_form(field);
    RationalFunction::new(g, h)
}

/// `f_m` by the given method.
pub fn generator(field: &Field, method: Method) -> Result<RationalFunction> {
    let m = GeneratorSpecs::new(field).m;
    match method {
        Method::Direct => f_k_direct(field, m),
        Method::Factored => f_k_factored(field, m),
        Method::ClosedForm => closed_form_generator(field),
    }
}

/// Is `f` fixed by every group element (`exhaustive`) or by the generators?
pub fn is_invariant(field: &Field, f: &RationalFunction, exhaustive: bool) -> Result<bool> {
    let maps = if exhaustive { enumerate_group(field) } else { group_generators(field) };
    for s in &maps {
        if &s.apply(f)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generator together with every verification outcome.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub field: Field,
    pub method: Method,
    pub generator: RationalFunction,
    pub degree: usize,
    pub group_order: u64,
    pub coprime: bool,
    pub invariant_under_group: bool,
    pub invariance_exhaustive: bool,
    pub coefficients_in_prime_field: bool,
    pub methods_agree: bool,
    pub compared_with: Vec<Method>,
}

impl GeneratorReport {
    pub fn degree_matches_group_order(&self) -> bool {
        self.degree as u64 == self.group_order
    }

    pub fn all_pass(&self) -> bool {
        self.degree_matches_group_order()
            && self.coprime
            && self.invariant_under_group
            && self.coefficients_in_prime_field
            && self.methods_agree
    }
}

/// Compute the generator by `method` and verify it, cross-checking against
/// the closed form (or, for the closed form itself, against the direct sum).
pub fn build_report(field: &Field, method: Method) -> Result<GeneratorReport> {
    let others = if method == Method::ClosedForm { vec![Method::Direct] } else { vec![Method::ClosedForm] };
    build_report_with(field, method, &others, field.q() <= EXHAUSTIVE_INVARIANCE_MAX_Q)
}

/// As [`build_report`], comparing against each method in `compare`.
pub fn build_report_with(
    field: &Field,
    method: Method,
    compare: &[Method],
    exhaustive: bool,
) -> Result<GeneratorReport> {
    let specs = GeneratorSpecs::new(field);
    let generator = generator(field, method)?;
    let coprime = if method == Method::ClosedForm {
        let (g, h) = generator_closed_form(field);
        g.gcd(&h)?.is_one()
    } else {
        generator.num().gcd(generator.den())?.is_one()
    };
    let degree = generator.extension_degree()?;
    let invariant_under_group = is_invariant(field, &generator, exhaustive)?;
    let mut methods_agree = true;
    let mut compared_with = Vec::new();
    for &other in compare.iter().filter(|&&o| o != method) {
        methods_agree &= crate::fixed::generator(field, other)? == generator;
        compared_with.push(other);
    }
    Ok(GeneratorReport {
        field: field.clone(),
        method,
        coefficients_in_prime_field: generator.over_prime_field(),
        generator,
        degree,
        group_order: specs.group_order,
        coprime,
        invariant_under_group,
        invariance_exhaustive: exhaustive,
        methods_agree,
        compared_with,
    })
}
