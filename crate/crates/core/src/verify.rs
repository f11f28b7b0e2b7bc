//! The full verification suite for one field, as a list of named verdicts.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{Elem, Field};
use crate::fixed::{
    closed_form_generator, f_k_direct, f_k_factored, generator_closed_form, is_invariant, power_sum,
    power_sum_formula, GeneratorSpecs, EXHAUSTIVE_INVARIANCE_MAX_Q,
};
use crate::identities::{
    affine_sum_factorization_check, shifted_power_sum_check, degree_bound_check, numerator_degree_check, difference_power_check,
    cleared_generator_check, binomial_sum_check, quotient_identity_check, translation_identity_check,
};
use crate::moebius::{closure, enumerate_group, group_generators, MoebiusMap};
use crate::poly::Polynomial;

const SEED: u64 = 0x5eed_f1e1d;

/// Fields up to this order get exhaustive triple checks of the field axioms.
const EXHAUSTIVE_AXIOMS_MAX_Q: u32 = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Verdict { name: name.to_string(), pass, detail: detail.into() }
    }
}

pub fn all_pass(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.pass)
}

/// A random polynomial of degree at most `max_deg`.
pub fn random_poly(field: &Field, rng: &mut impl Rng, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| random_elem(field, rng)).collect();
    Polynomial::from_coeffs(field, coeffs)
}

pub fn random_elem(field: &Field, rng: &mut impl Rng) -> Elem {
    field.element(rng.gen_range(0..field.q())).expect("index below q")
}

fn field_checks(field: &Field, rng: &mut StdRng, out: &mut Vec<Verdict>) {
    let q = field.q() as u64;
    let fermat = field.elements().all(|a| {
        field.pow(a, q) == a && (a.is_zero() || field.pow(a, q - 1) == field.one())
    });
    out.push(Verdict::new("fermat", fermat, format!("a^q = a and a^(q-1) = 1 for all {q} elements")));

    let frob = field.elements().all(|a| {
        field
            .elements()
            .all(|b| field.frobenius(field.add(a, b)) == field.add(field.frobenius(a), field.frobenius(b)))
    });
    out.push(Verdict::new("frobenius_additive", frob, "all pairs"));

    let axioms = |a: Elem, b: Elem, c: Elem| {
        field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
            && field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
            && field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
            && field.add(a, b) == field.add(b, a)
            && field.mul(a, b) == field.mul(b, a)
            && field.add(a, field.neg(a)) == field.zero()
            && (a.is_zero() || field.mul(a, field.inv(a).unwrap()) == field.one())
    };
    let (ok, how) = if field.q() <= EXHAUSTIVE_AXIOMS_MAX_Q {
        let ok = field.elements().all(|a| field.elements().all(|b| field.elements().all(|c| axioms(a, b, c))));
        (ok, "exhaustive over all triples".to_string())
    } else {
        let ok = (0..5000).all(|_| {
            let (a, b, c) = (random_elem(field, rng), random_elem(field, rng), random_elem(field, rng));
            axioms(a, b, c)
        });
        (ok, "5000 random triples".to_string())
    };
    out.push(Verdict::new("field_axioms", ok, how));

    let g = field.primitive_element();
    let order = field.order(g).unwrap_or(0);
    out.push(Verdict::new(
        "primitive_element",
        order == q - 1,
        format!("{} has order {order}", field.render(g)),
    ));

    let vanishing = Polynomial::vanishing(field);
    out.push(Verdict::new(
        "vanishing_polynomial",
        vanishing == Polynomial::x_q_minus_x(field),
        format!("prod (x - a) = {vanishing}"),
    ));

    let kmax = 2 * (q - 1) + 1;
    let sums = (1..=kmax).all(|k| power_sum(field, k).ok() == power_sum_formula(field, k).ok());
    out.push(Verdict::new("power_sums", sums, format!("k = 1..={kmax}")));
}

fn group_checks(field: &Field, exhaustive: bool, rng: &mut StdRng, out: &mut Vec<Verdict>) -> Result<()> {
    let specs = GeneratorSpecs::new(field);
    let group = enumerate_group(field);
    let distinct: HashSet<&MoebiusMap> = group.iter().collect();
    out.push(Verdict::new(
        "group_order",
        group.len() as u64 == specs.group_order && distinct.len() == group.len(),
        format!("{} distinct maps, (q+1)q(q-1) = {}", distinct.len(), specs.group_order),
    ));

    let mut degree_one = true;
    for m in &group {
        let [a, b, c, d] = m.coeffs();
        degree_one &= field.mul(a, d) != field.mul(b, c) && m.image_of_x().extension_degree()? == 1;
    }
    out.push(Verdict::new("maps_have_degree_one", degree_one, "ad != bc and [F(x):F(phi(x))] = 1"));

    let full = exhaustive || field.q() <= EXHAUSTIVE_INVARIANCE_MAX_Q;
    let id = MoebiusMap::identity(field);
    let mut axioms = true;
    for s in &group {
        axioms &= s.compose(&id)? == *s && id.compose(s)? == *s && s.compose(&s.inverse())? == id;
    }
    let detail = if full {
        for s in &group {
            for t in &group {
                axioms &= distinct.contains(&s.compose(t)?);
            }
        }
        let sample = if field.q() <= 3 { group.len() } else { 12 };
        for s in group.iter().take(sample) {
            for t in group.iter().take(sample) {
                for u in group.iter().take(sample) {
                    axioms &= s.compose(&t.compose(u)?)? == s.compose(t)?.compose(u)?;
                }
            }
        }
        "identity and inverses for all maps, closure over all pairs, associativity on triples"
    } else {
        for _ in 0..2000 {
            let pick = |rng: &mut StdRng| &group[rng.gen_range(0..group.len())];
            let (s, t, u) = (pick(rng), pick(rng), pick(rng));
            axioms &= distinct.contains(&s.compose(t)?);
            axioms &= s.compose(&t.compose(u)?)? == s.compose(t)?.compose(u)?;
        }
        "identity and inverses for all maps, closure and associativity on 2000 random triples"
    };
    out.push(Verdict::new("group_axioms", axioms, detail));

    let closed: HashSet<MoebiusMap> = closure(&group_generators(field))?.into_iter().collect();
    let gens_ok = closed.len() == distinct.len() && closed.iter().all(|m| distinct.contains(m));
    out.push(Verdict::new("generator_closure", gens_ok, format!("closure has {} elements", closed.len())));
    Ok(())
}

fn identity_checks(field: &Field, rng: &mut StdRng, out: &mut Vec<Verdict>) -> Result<()> {
    let specs = GeneratorSpecs::new(field);
    let q = field.q() as u64;
    let p = field.p() as u64;

    let fact = (0..=10).all(|k| affine_sum_factorization_check(field, k));
    out.push(Verdict::new("affine_sum_factorization", fact, "k = 0..=10"));

    let mut outcomes = Vec::new();
    for k in [q - 1, 2 * (q - 1), specs.m] {
        outcomes.push(numerator_degree_check(field, k)?);
    }
    let detail = outcomes
        .iter()
        .map(|o| match o.degree {
            Some(d) => format!("k={}: deg g_k = {d}, claimed {}", o.k, o.claimed),
            None => format!("k={}: g_k = 0, claimed degree {}", o.k, o.claimed),
        })
        .collect::<Vec<_>>()
        .join("; ");
    out.push(Verdict::new("numerator_degree", outcomes.iter().all(|o| o.holds()), detail));

    let l1 = degree_bound_check(field)?;
    out.push(Verdict::new(
        "degree_bound",
        l1.holds(),
        format!("deg h = {} < deg g_m = {} < 2|G| = {}", l1.deg_h, l1.deg_g, 2 * l1.group_order),
    ));

    // exponent p^2 - 1 only where the expansion stays desk-sized
    let ks: &[u32] = if p * p <= 49 { &[1, 2] } else { &[1] };
    let mut diff_power = true;
    for i in 0..100 {
        let k = ks[i % ks.len()];
        let a = random_poly(field, rng, 3);
        let b = random_poly(field, rng, 3);
        diff_power &= difference_power_check(field, &a, &b, k)?;
    }
    let a = random_poly(field, rng, 3);
    diff_power &= ks.iter().all(|&k| difference_power_check(field, &a, &a, k).unwrap_or(false));
    out.push(Verdict::new("difference_power", diff_power, format!("100 random pairs plus A = B, k in {ks:?}")));

    let l5 = cleared_generator_check(field)?;
    out.push(Verdict::new("cleared_generator", l5.holds(), l5.diagnostic()));

    let mut bad = Vec::new();
    for j in 0..=specs.m {
        let o = binomial_sum_check(field, j)?;
        if !o.holds() {
            bad.push(j);
        }
    }
    out.push(Verdict::new(
        "binomial_sums",
        bad.is_empty(),
        if bad.is_empty() { format!("j = 0..={}", specs.m) } else { format!("fails at j = {bad:?}") },
    ));

    let trans = field.elements().all(|a| translation_identity_check(field, a));
    out.push(Verdict::new("translation_identity", trans, "all alpha"));
    out.push(Verdict::new("shifted_power_sum", shifted_power_sum_check(field), "1 + sum_b (x-b)^m = -(x^q-x)^(q-1)"));
    let mut quot = true;
    for c in field.elements() {
        quot &= quotient_identity_check(field, c)?;
    }
    out.push(Verdict::new("quotient_identity", quot, "(x^q-x)/(x-c) = (x-c)^(q-1) - 1 for all c"));
    Ok(())
}

fn generator_checks(field: &Field, exhaustive: bool, out: &mut Vec<Verdict>) -> Result<()> {
    let specs = GeneratorSpecs::new(field);
    let direct = f_k_direct(field, specs.m)?;
    let factored = f_k_factored(field, specs.m)?;
    let closed = closed_form_generator(field)?;
    out.push(Verdict::new(
        "method_agreement",
        direct == factored && factored == closed,
        format!("direct == factored: {}, factored == closed: {}", direct == factored, factored == closed),
    ));
    let (g, h) = generator_closed_form(field);
    out.push(Verdict::new("closed_form_coprime", g.gcd(&h)?.is_one(), "gcd(g, h) = 1"));
    let degree = closed.extension_degree()?;
    out.push(Verdict::new(
        "degree_law",
        degree as u64 == specs.group_order,
        format!("[F(x):F(f_m)] = {degree}, |G| = {}", specs.group_order),
    ));
    let full = exhaustive || field.q() <= EXHAUSTIVE_INVARIANCE_MAX_Q;
    out.push(Verdict::new(
        "invariance",
        is_invariant(field, &closed, full)?,
        if full { "all group elements" } else { "group generators" },
    ));
    out.push(Verdict::new(
        "prime_subfield_coefficients",
        closed.over_prime_field(),
        "every coefficient of f_m lies in F_p",
    ));
    Ok(())
}

/// Run every check for `field`. `exhaustive` forces full-group checks above
/// the default cutoff.
pub fn run_suite(field: &Field, exhaustive: bool) -> Result<Vec<Verdict>> {
    let mut rng = StdRng::seed_from_u64(SEED ^ field.q() as u64);
    let mut out = Vec::new();
    field_checks(field, &mut rng, &mut out);
    group_checks(field, exhaustive, &mut rng, &mut out)?;
    identity_checks(field, &mut rng, &mut out)?;
    generator_checks(field, exhaustive, &mut out)?;
    Ok(out)
}
