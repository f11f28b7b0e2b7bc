//! Acceptance run: one PASS/FAIL line per criterion, with the runtime limit
//! each one has to meet.
//!
//! Runs without the libtest harness so the lines always show. The run exits
//! nonzero on any failure except the degree claim for `g_k`, which is known
//! to be false (`deg g_k` is `kq` for `k < m` and `(q-1)q(q+2)` for `k = m`,
//! never `k(q+1)`); set `ACCEPTANCE_STRICT=1` to count that one too.

use std::time::{Duration, Instant};

use fixedfield::fixed::{f_k_direct, f_k_factored, generator_closed_form, power_sum, power_sum_formula};
use fixedfield::identities::{
    shifted_power_sum_check, degree_bound_check, numerator_degree_check, difference_power_check, cleared_generator_check, binomial_sum_check,
    quotient_identity_check, translation_identity_check,
};
use fixedfield::verify::random_poly;
use fixedfield::{
    closure, enumerate_group, generator, group_generators, is_invariant, Elem, Field, GeneratorSpecs,
    Method, Polynomial, RationalFunction,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

const SWEEP: [(u64, u32); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

struct Outcome {
    pass: bool,
    /// The only failure is the false degree claim for `g_k`.
    known_red: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, known_red: false, detail: detail.into() }
}

fn field(p: u64, n: u32) -> Field {
    Field::new(p, n, None).unwrap()
}

fn rf(k: &Field, num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_ints(k, num), Polynomial::from_ints(k, den)).unwrap()
}

fn all_methods_equal(k: &Field, expected: &RationalFunction) -> Vec<&'static str> {
    let m = GeneratorSpecs::new(k).m;
    let mut wrong = Vec::new();
    if &f_k_direct(k, m).unwrap() != expected {
        wrong.push("direct");
    }
    if &f_k_factored(k, m).unwrap() != expected {
        wrong.push("factored");
    }
    if &generator(k, Method::ClosedForm).unwrap() != expected {
        wrong.push("closed_form");
    }
    wrong
}

fn c1() -> Outcome {
    let k = field(2, 1);
    let expected = rf(&k, &[1, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1]);
    let wrong = all_methods_equal(&k, &expected);
    ok(wrong.is_empty(), format!("f_3 = {expected} by all three methods; mismatched: {wrong:?}"))
}

fn c2() -> Outcome {
    let k = field(3, 1);
    let mut num = vec![0; 25];
    for e in (0..=24).step_by(2) {
        num[e] = if e % 6 == 0 && e != 0 && e != 24 { 2 } else { 1 };
    }
    let mut den = vec![0; 19];
    for e in [6, 12, 18] {
        den[e] = 1;
    }
    let expected = rf(&k, &num, &den);
    let wrong = all_methods_equal(&k, &expected);
    ok(wrong.is_empty(), format!("f_8 = {expected}; mismatched: {wrong:?}"))
}

fn c3() -> Outcome {
    let k = field(2, 2);
    let m = GeneratorSpecs::new(&k).m;
    let direct = f_k_direct(&k, m).unwrap();
    let (g, h) = generator_closed_form(&k);
    let closed = RationalFunction::new(g.clone(), h.clone()).unwrap();
    let agree = direct == closed && g.gcd(&h).unwrap().is_one();
    let support: Vec<usize> = (0..=60).filter(|&e| !g.coeff(e).is_zero()).collect();
    let multiples_of_3 = g.degree() == Some(60) && support.iter().all(|e| e % 3 == 0);
    let vanished: Vec<usize> = (0..=60).step_by(3).filter(|e| !support.contains(e)).collect();
    let has_24 = !direct.den().coeff(24).is_zero();
    let has_18 = !direct.den().coeff(18).is_zero();
    let which = match (has_24, has_18) {
        (true, false) => "x^24 occurs, x^18 does not",
        (false, true) => "x^18 is correct",
        _ => "neither",
    };
    ok(
        agree && multiples_of_3 && vanished == [12, 24, 36, 48] && has_24 && !has_18,
        format!("closed form == direct: {agree}; vanished exponents {vanished:?}; denominator {}: {which}", direct.den()),
    )
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    for (p, n) in SWEEP {
        let k = field(p, n);
        let closed = generator(&k, Method::ClosedForm).unwrap();
        if !all_methods_equal(&k, &closed).is_empty() {
            bad.push(k.q());
        }
    }
    ok(bad.is_empty(), format!("q in {{2,3,4,5,7,8,9}}; disagreeing q: {bad:?}"))
}

fn c5() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for (p, n) in SWEEP {
        let k = field(p, n);
        let specs = GeneratorSpecs::new(&k);
        let d = generator(&k, Method::ClosedForm).unwrap().extension_degree().unwrap();
        pass &= d as u64 == specs.group_order;
        rows.push(format!("q={}:{d}", k.q()));
    }
    ok(pass, rows.join(" "))
}

fn c6() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for (p, n) in SWEEP {
        let k = field(p, n);
        let exhaustive = k.q() <= 5;
        let count = if exhaustive { enumerate_group(&k).len() } else { group_generators(&k).len() };
        let f = generator(&k, Method::ClosedForm).unwrap();
        let inv = is_invariant(&k, &f, exhaustive).unwrap();
        pass &= inv;
        rows.push(format!("q={}: {count} maps {}", k.q(), if inv { "ok" } else { "BROKEN" }));
    }
    ok(pass, rows.join(", "))
}

fn c7() -> Outcome {
    let mut pass = true;
    for (p, n) in [(2, 2), (2, 3), (3, 2)] {
        pass &= generator(&field(p, n), Method::ClosedForm).unwrap().over_prime_field();
    }
    ok(pass, "q in {4, 8, 9}: every coefficient of f_m in F_p")
}

fn numerator_degree_sweep() -> (bool, bool, String) {
    let mut claim = true;
    let mut corrected = true;
    let mut rows = Vec::new();
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let k = field(p, n);
        let q = k.q() as u64;
        for kk in [q - 1, 2 * (q - 1), q * q - 1] {
            let o = numerator_degree_check(&k, kk).unwrap();
            claim &= o.holds();
            let observed = if kk == q * q - 1 { (q - 1) * q * (q + 2) } else { kk * q };
            corrected &= o.exact && o.degree.map(|d| d as u64) == Some(observed);
            rows.push(format!("q={q},k={kk}:{}/{}", o.degree.unwrap_or(0), o.claimed));
        }
    }
    (claim, corrected, rows.join(" "))
}

fn c8() -> Outcome {
    let mut failed: Vec<String> = Vec::new();
    let mut rng = StdRng::seed_from_u64(8);
    for p in [2, 3, 5] {
        let k = field(p, 1);
        for i in 0..100 {
            let a = random_poly(&k, &mut rng, 4);
            let b = random_poly(&k, &mut rng, 4);
            let e = 1 + (i % 2) as u32;
            if !difference_power_check(&k, &a, &b, e).unwrap() || !difference_power_check(&k, &a, &a, e).unwrap() {
                failed.push(format!("difference_power p={p}"));
            }
        }
    }
    for (p, n) in SWEEP {
        let k = field(p, n);
        let q = k.q() as u64;
        if !cleared_generator_check(&k).unwrap().holds() {
            failed.push(format!("cleared_generator q={q}"));
        }
        if q <= 5 && !(0..=q * q - 1).all(|j| binomial_sum_check(&k, j).unwrap().holds()) {
            failed.push(format!("binomial_sums q={q}"));
        }
        if !k.elements().all(|a| translation_identity_check(&k, a)) {
            failed.push(format!("translation q={q}"));
        }
        for e in 1..=2 * (q - 1) + 1 {
            let brute = k.elements().fold(Elem::ZERO, |acc, a| k.add(acc, k.pow(a, e)));
            if power_sum(&k, e).unwrap() != brute || power_sum_formula(&k, e).unwrap() != brute {
                failed.push(format!("power_sum q={q} k={e}"));
            }
        }
        if !shifted_power_sum_check(&k) || !k.elements().all(|c| quotient_identity_check(&k, c).unwrap()) {
            failed.push(format!("shifted_power_sum/quotient q={q}"));
        }
        if !degree_bound_check(&k).unwrap().holds() {
            failed.push(format!("degree_bound q={q}"));
        }
    }
    let (claim, corrected, rows) = numerator_degree_sweep();
    let others = failed.is_empty();
    let detail = format!(
        "numerator_degree_check (deg g_k = k(q+1)): {}; deg g_k = kq for k < m and (q-1)q(q+2) for k = m: {corrected} [{rows}]; \
         other identities: {}",
        if claim { "holds" } else { "FAILS" },
        if others { "pass".to_string() } else { format!("failed {failed:?}") },
    );
    Outcome { pass: claim && corrected && others, known_red: !claim && corrected && others, detail }
}

fn c9() -> Outcome {
    let mut failed = Vec::new();
    for (p, n) in SWEEP {
        let k = field(p, n);
        let q = k.q();
        let specs = GeneratorSpecs::new(&k);
        let group = enumerate_group(&k);
        let distinct: std::collections::HashSet<_> = group.iter().cloned().collect();
        if group.len() as u64 != specs.group_order || distinct.len() != group.len() {
            failed.push(format!("count q={q}"));
        }
        if !group.iter().all(|m| m.image_of_x().extension_degree().unwrap() == 1) {
            failed.push(format!("degree one q={q}"));
        }
        if q > 5 {
            continue;
        }
        let id = fixedfield::MoebiusMap::identity(&k);
        let axioms = group.iter().all(|a| {
            a.compose(&id).unwrap() == *a
                && a.compose(&a.inverse()).unwrap() == id
                && group.iter().all(|b| distinct.contains(&a.compose(b).unwrap()))
        });
        let assoc = if q <= 4 {
            group.iter().all(|a| {
                group.iter().all(|b| {
                    let ab = a.compose(b).unwrap();
                    group.iter().all(|c| ab.compose(c).unwrap() == a.compose(&b.compose(c).unwrap()).unwrap())
                })
            })
        } else {
            // 120^3 triples; associativity of 2x2 matrix products on a strided third.
            group.iter().all(|a| {
                group.iter().all(|b| {
                    let ab = a.compose(b).unwrap();
                    group.iter().step_by(7).all(|c| ab.compose(c).unwrap() == a.compose(&b.compose(c).unwrap()).unwrap())
                })
            })
        };
        if !axioms || !assoc {
            failed.push(format!("axioms q={q}"));
        }
        let closed: std::collections::HashSet<_> = closure(&group_generators(&k)).unwrap().into_iter().collect();
        if closed != distinct {
            failed.push(format!("closure q={q}"));
        }
    }
    ok(failed.is_empty(), format!("counts q<=9, axioms and closure q<=5; failed {failed:?}"))
}

fn main() {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let criteria: [(u32, fn() -> Outcome, Duration); 9] = [
        (1, c1, Duration::from_secs(1)),
        (2, c2, Duration::from_secs(1)),
        (3, c3, Duration::from_secs(10)),
        (4, c4, Duration::from_secs(300)),
        (5, c5, Duration::from_secs(300)),
        (6, c6, Duration::from_secs(300)),
        (7, c7, Duration::from_secs(300)),
        (8, c8, Duration::from_secs(120)),
        (9, c9, Duration::from_secs(300)),
    ];
    let mut unexpected = 0;
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = took <= limit;
        let pass = outcome.pass && in_time;
        println!(
            "criterion {n}: {} ({:.3}s, limit {}s) {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs(),
            outcome.detail
        );
        if !pass && (strict || !in_time || !outcome.known_red) {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
