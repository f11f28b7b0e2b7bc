//! Exact checks of the supporting identities behind the closed-form
//! generator. Each check computes both sides by polynomial arithmetic and
//! reports what it found.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::fixed::{f_k_direct, g_k_numerator, GeneratorSpecs};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// `C(n, k) mod p` by Lucas' theorem on the base-p digits of n and k.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binomial_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// `C(n, k) mod p` for digits `n, k < p` via the multiplicative formula.
fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumeratorDegreeOutcome {
    pub k: u64,
    /// `f_k · (x^q - x)^k` came out as a polynomial.
    pub exact: bool,
    pub degree: Option<usize>,
    /// The asserted degree `k(q + 1)`.
    pub claimed: u64,
}

impl NumeratorDegreeOutcome {
    pub fn holds(&self) -> bool {
        self.exact && self.degree.map(|d| d as u64) == Some(self.claimed)
    }
}

/// Compute `g_k = f_k · (x^q - x)^k` from the reduced `f_k` and compare its
/// degree with `k(q + 1)`.
pub fn numerator_degree_check(field: &Field, k: u64) -> Result<NumeratorDegreeOutcome> {
    let d = field.q() as u64 - 1;
    if k == 0 || k % d != 0 {
        return Err(Error::NotMultiple { k, q_minus_one: d });
    }
    let f = f_k_direct(field, k)?;
    let h = Polynomial::x_q_minus_x(field).pow(k);
    let g = (f.num() * &h).exact_div(f.den())?;
    Ok(NumeratorDegreeOutcome {
        k,
        exact: g.is_some(),
        degree: g.as_ref().and_then(Polynomial::degree),
        claimed: k * (field.q() as u64 + 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBoundOutcome {
    pub deg_g: usize,
    pub deg_h: usize,
    pub group_order: u64,
}

impl DegreeBoundOutcome {
    pub fn holds(&self) -> bool {
        let g = self.deg_g as u64;
        self.deg_h < self.deg_g && g < 2 * self.group_order
    }
}

/// Degree hypothesis for `g_m / (x^q - x)^m`: `deg h < deg g < 2|G|`.
pub fn degree_bound_check(field: &Field) -> Result<DegreeBoundOutcome> {
    let specs = GeneratorSpecs::new(field);
    let g = g_k_numerator(field, specs.m)?;
    Ok(DegreeBoundOutcome {
        deg_g: g.degree().unwrap_or(0),
        deg_h: field.q() as usize * specs.m as usize,
        group_order: specs.group_order,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClearedGeneratorOutcome {
    pub is_polynomial: bool,
    pub degree: Option<usize>,
    pub group_order: u64,
    pub coprime: bool,
    pub quotient_is_f_m: bool,
}

impl ClearedGeneratorOutcome {
    pub fn holds(&self) -> bool {
        self.is_polynomial
            && self.degree.map(|d| d as u64) == Some(self.group_order)
            && self.coprime
            && self.quotient_is_f_m
    }

    pub fn diagnostic(&self) -> String {
        let mut failed = Vec::new();
        if !self.is_polynomial {
            failed.push("g is not a polynomial".to_string());
        }
        if self.degree.map(|d| d as u64) != Some(self.group_order) {
            failed.push(format!("deg g = {:?}, expected {}", self.degree, self.group_order));
        }
        if !self.coprime {
            failed.push("gcd(g, h) != 1".into());
        }
        if !self.quotient_is_f_m {
            failed.push("g/h != f_m".into());
        }
        if failed.is_empty() {
            format!("deg g = {}", self.group_order)
        } else {
            failed.join("; ")
        }
    }
}

/// With `h = (x^q - x)^{q(q-1)}` and `g = h · f_m`: g is a polynomial of
/// degree |G|, coprime to h, and `g/h = f_m`.
pub fn cleared_generator_check(field: &Field) -> Result<ClearedGeneratorOutcome> {
    let specs = GeneratorSpecs::new(field);
    let q = field.q() as u64;
    let f_m = f_k_direct(field, specs.m)?;
    let h = Polynomial::x_q_minus_x(field).pow(q * (q - 1));
    let g = (f_m.num() * &h).exact_div(f_m.den())?;
    let (coprime, quotient_is_f_m) = match &g {
        Some(g) => (g.gcd(&h)?.is_one(), RationalFunction::new(g.clone(), h.clone())? == f_m),
        None => (false, false),
    };
    Ok(ClearedGeneratorOutcome {
        is_polynomial: g.is_some(),
        degree: g.as_ref().and_then(Polynomial::degree),
        group_order: specs.group_order,
        coprime,
        quotient_is_f_m,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialSumOutcome {
    pub j: u64,
    pub value: u64,
    pub expected: u64,
}

impl BinomialSumOutcome {
    pub fn holds(&self) -> bool {
        self.value == self.expected
    }
}

/// `Σ_{i=j}^{m} C(i(q-1), j(q-1)) mod p`, expected 0 for `j ≤ q` and 1 for
/// `q < j ≤ m`.
pub fn binomial_sum_check(field: &Field, j: u64) -> Result<BinomialSumOutcome> {
    let q = field.q() as u64;
    let p = field.p() as u64;
    let m = q * q - 1;
    if j > m {
        return Err(Error::InvalidArgument(format!("j = {j} outside [0, {m}]")));
    }
    let value = (j..=m).fold(0, |acc, i| (acc + binomial_mod_p(i * (q - 1), j * (q - 1), p)) % p);
    Ok(BinomialSumOutcome { j, value, expected: u64::from(j > q) })
}

/// `Σ_{i=0}^{q} (x + α)^{i(q-1)} = Σ_{i=0}^{q} x^{i(q-1)}`.
pub fn translation_identity_check(field: &Field, alpha: Elem) -> bool {
    let q = field.q() as u64;
    let sum = |shift: Elem| {
        let base = Polynomial::linear(field, field.one(), shift).pow(q - 1);
        let mut acc = Polynomial::zero(field);
        let mut term = Polynomial::one(field);
        for _ in 0..=q {
            acc = &acc + &term;
            term = &term * &base;
        }
        acc
    };
    sum(alpha) == sum(Elem::ZERO)
}

/// `(A - B)^{p^k - 1} = Σ_{i=0}^{p^k - 1} A^{p^k - 1 - i} B^i`.
pub fn difference_power_check(field: &Field, a: &Polynomial, b: &Polynomial, k: u32) -> Result<bool> {
    if a.field() != field || b.field() != field {
        return Err(Error::FieldMismatch);
    }
    let e = (field.p() as u64).pow(k) - 1;
    let lhs = a.try_sub(b)?.pow(e);
    let mut a_powers = vec![Polynomial::one(field)];
    for i in 0..e as usize {
        a_powers.push(&a_powers[i] * a);
    }
    let mut rhs = Polynomial::zero(field);
    let mut b_pow = Polynomial::one(field);
    for a_pow in a_powers.iter().rev() {
        rhs = &rhs + &(a_pow * &b_pow);
        b_pow = &b_pow * b;
    }
    Ok(lhs == rhs)
}

/// `Σ_{a≠0, b} (ax + b)^k = (Σ_a a^k) · Σ_b (x + b)^k`.
pub fn affine_sum_factorization_check(field: &Field, k: u64) -> bool {
    let mut lhs = Polynomial::zero(field);
    for a in field.nonzero_elements() {
        for b in field.elements() {
            lhs = &lhs + &Polynomial::linear(field, a, b).pow(k);
        }
    }
    let scalar = if k == 0 {
        Elem::ZERO
    } else {
        field.elements().fold(Elem::ZERO, |acc, a| field.add(acc, field.pow(a, k)))
    };
    let translates = field
        .elements()
        .fold(Polynomial::zero(field), |acc, b| &acc + &Polynomial::linear(field, field.one(), b).pow(k));
    lhs == translates.scale(scalar)
}

/// `1 + Σ_b (x - b)^m = -(x^q - x)^{q-1}`.
pub fn shifted_power_sum_check(field: &Field) -> bool {
    let q = field.q() as u64;
    let m = q * q - 1;
    let lhs = field.elements().fold(Polynomial::one(field), |acc, b| {
        &acc + &Polynomial::linear(field, field.one(), field.neg(b)).pow(m)
    });
    lhs == -&Polynomial::x_q_minus_x(field).pow(q - 1)
}

/// `(x^q - x)/(x - c) = (x - c)^{q-1} - 1`.
pub fn quotient_identity_check(field: &Field, c: Elem) -> Result<bool> {
    let linear = Polynomial::linear(field, field.one(), field.neg(c));
    let Some(quot) = Polynomial::x_q_minus_x(field).exact_div(&linear)? else {
        return Ok(false);
    };
    let rhs = &linear.pow(field.q() as u64 - 1) - &Polynomial::one(field);
    Ok(quot == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    /// Pascal's triangle mod p, as an independent route for Lucas.
    fn pascal_mod(n: usize, p: u64) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u64; i + 1];
            for j in 1..i {
                row[j] = (prev[j - 1] + prev[j]) % p;
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [2u64, 3, 5, 7] {
            let rows = pascal_mod(120, p);
            for n in 0..=120u64 {
                for k in 0..=n + 3 {
                    let expected = if k > n { 0 } else { rows[n as usize][k as usize] };
                    assert_eq!(binomial_mod_p(n, k, p), expected, "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_mod_p(4, 2, 3), 0);
        assert_eq!(binomial_mod_p(5, 2, 3), 1);
        assert_eq!(binomial_mod_p(17, 0, 5), 1);
        assert_eq!(binomial_mod_p(2, 5, 7), 0);
    }

    #[test]
    fn numerator_degrees_frozen() {
        // Computed independently by a pure-integer evaluation of the defining sum:
        // deg g_k = kq for k < m and (q-1)q(q+2) for k = m, both below the claim.
        let cases = [(2, 1, 3, 9, 8), (3, 1, 2, 8, 6), (3, 1, 8, 32, 30), (5, 1, 24, 144, 140)];
        for (p, n, k, claimed, actual) in cases {
            let out = numerator_degree_check(&f(p, n), k).unwrap();
            assert!(out.exact);
            assert_eq!(out.claimed, claimed);
            assert_eq!(out.degree, Some(actual));
            assert!(!out.holds());
        }
        assert!(numerator_degree_check(&f(3, 1), 3).is_err());
    }

    #[test]
    fn degree_bound_holds() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            assert!(degree_bound_check(&f(p, n)).unwrap().holds());
        }
    }

    #[test]
    fn cleared_generator_examples() {
        for (p, n, deg) in [(2, 1, 6), (3, 1, 24), (2, 2, 60)] {
            let out = cleared_generator_check(&f(p, n)).unwrap();
            assert!(out.holds(), "{}", out.diagnostic());
            assert_eq!(out.degree, Some(deg));
        }
    }

    #[test]
    fn binomial_sum_examples() {
        assert_eq!(binomial_sum_check(&f(3, 1), 0).unwrap().value, 0);
        assert_eq!(binomial_sum_check(&f(3, 1), 4).unwrap().value, 1);
        assert_eq!(binomial_sum_check(&f(2, 1), 3).unwrap().value, 1);
        assert!(binomial_sum_check(&f(3, 1), 9).is_err());
    }

    #[test]
    fn translation_examples() {
        let k = f(2, 1);
        assert!(translation_identity_check(&k, k.one()));
        let k = f(3, 1);
        assert!(translation_identity_check(&k, k.zero()));
        assert!(translation_identity_check(&k, k.from_int(2)));
    }

    #[test]
    fn difference_power_examples() {
        let k = f(2, 1);
        assert!(difference_power_check(&k, &Polynomial::x(&k), &Polynomial::one(&k), 1).unwrap());
        let k = f(3, 1);
        let x = Polynomial::x(&k);
        assert!(difference_power_check(&k, &x, &Polynomial::one(&k), 1).unwrap());
        assert_eq!(x.try_sub(&Polynomial::one(&k)).unwrap().pow(2), Polynomial::from_ints(&k, &[1, 1, 1]));
        assert!(difference_power_check(&k, &x, &x, 2).unwrap());
    }

    #[test]
    fn shifted_power_sum_and_quotient_small() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let k = f(p, n);
            assert!(shifted_power_sum_check(&k));
            for c in k.elements() {
                assert!(quotient_identity_check(&k, c).unwrap());
            }
            for e in 0..=10 {
                assert!(affine_sum_factorization_check(&k, e), "q = {} k = {e}", k.q());
            }
        }
    }
}
