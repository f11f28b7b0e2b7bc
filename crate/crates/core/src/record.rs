//! Machine-readable records shared by the CLI and the browser demo.
//!
//! Field elements serialize as digit arrays (ascending powers of t, length n),
//! polynomials as arrays of element digit arrays (ascending powers of x).
//! Every command emits the envelope
//! `{field: {p, n, modulus}, command, result, verdicts: [{name, pass, detail}]}`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixed::{generator, GeneratorReport, GeneratorSpecs, Method};
use crate::moebius::{enumerate_group, MoebiusMap};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::verify::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u32,
    pub n: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldRecord {
    pub fn of(field: &Field) -> Self {
        FieldRecord { p: field.p(), n: field.n(), modulus: field.modulus().map(<[u32]>::to_vec) }
    }

    pub fn to_field(&self) -> Result<Field> {
        Field::new(self.p as u64, self.n, self.modulus.as_deref())
    }
}

pub type PolyRecord = Vec<Vec<u32>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRecord {
    pub num: PolyRecord,
    pub den: PolyRecord,
}

impl RationalRecord {
    pub fn of(f: &RationalFunction) -> Self {
        RationalRecord { num: f.num().to_digit_rows(), den: f.den().to_digit_rows() }
    }

    /// Parse and re-canonicalize.
    pub fn to_rational(&self, field: &Field) -> Result<RationalFunction> {
        RationalFunction::new(
            Polynomial::from_digit_rows(field, &self.num)?,
            Polynomial::from_digit_rows(field, &self.den)?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub d: Vec<u32>,
}

impl MapRecord {
    pub fn of(m: &MoebiusMap) -> Self {
        let k = m.field();
        let [a, b, c, d] = m.coeffs().map(|e| k.digits(e));
        MapRecord { a, b, c, d }
    }

    pub fn to_map(&self, field: &Field) -> Result<MoebiusMap> {
        let e = |d: &[u32]| field.from_digits(d);
        MoebiusMap::new(field, e(&self.a)?, e(&self.b)?, e(&self.c)?, e(&self.d)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub field: FieldRecord,
    pub command: String,
    pub result: Value,
    pub verdicts: Vec<Verdict>,
}

impl Envelope {
    pub fn new(field: &Field, command: &str, result: Value, verdicts: Vec<Verdict>) -> Self {
        Envelope { field: FieldRecord::of(field), command: command.to_string(), result, verdicts }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// Verdicts carried by a generator report, in a fixed order.
pub fn report_verdicts(r: &GeneratorReport) -> Vec<Verdict> {
    let compared: Vec<&str> = r.compared_with.iter().map(|m| m.name()).collect();
    vec![
        Verdict::new(
            "degree",
            r.degree_matches_group_order(),
            format!("[F(x):F(f_m)] = {}, |G| = {}", r.degree, r.group_order),
        ),
        Verdict::new("coprime", r.coprime, "numerator and denominator are relatively prime"),
        Verdict::new(
            "invariant_under_group",
            r.invariant_under_group,
            if r.invariance_exhaustive { "checked against every group element" } else { "checked against the generators" },
        ),
        Verdict::new(
            "coefficients_in_prime_field",
            r.coefficients_in_prime_field,
            "every coefficient lies in F_p",
        ),
        Verdict::new(
            "methods_agree",
            r.methods_agree,
            format!("{} compared with [{}]", r.method.name(), compared.join(", ")),
        ),
    ]
}

pub fn generator_envelope(r: &GeneratorReport) -> Envelope {
    let specs = GeneratorSpecs::new(&r.field);
    let result = json!({
        "m": specs.m,
        "group_order": specs.group_order,
        "method": r.method,
        "compared_with": r.compared_with,
        "generator": RationalRecord::of(&r.generator),
        "degree": r.degree,
        "rendered": r.generator.to_string(),
    });
    Envelope::new(&r.field, "generator", result, report_verdicts(r))
}

pub fn group_envelope(field: &Field) -> Envelope {
    let specs = GeneratorSpecs::new(field);
    let maps = enumerate_group(field);
    let result = json!({
        "count": maps.len(),
        "maps": maps.iter().map(MapRecord::of).collect::<Vec<_>>(),
        "rendered": maps.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    });
    let verdicts = vec![Verdict::new(
        "group_order",
        maps.len() as u64 == specs.group_order,
        format!("{} maps, (q+1)q(q-1) = {}", maps.len(), specs.group_order),
    )];
    Envelope::new(field, "group", result, verdicts)
}

/// Which methods apply to `f_k`: direct always, factored when `(q - 1) | k`,
/// the closed form only for `k = m`.
pub fn applicable_methods(field: &Field, k: u64) -> Vec<Method> {
    let specs = GeneratorSpecs::new(field);
    let mut out = vec![Method::Direct];
    if k % (field.q() as u64 - 1) == 0 {
        out.push(Method::Factored);
    }
    if k == specs.m {
        out.push(Method::ClosedForm);
    }
    out
}

/// Compute `f_k` with each of `methods` and report agreement.
pub fn fk_envelope(field: &Field, k: u64, methods: &[Method]) -> Result<Envelope> {
    let specs = GeneratorSpecs::new(field);
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut values = Vec::new();
    for &m in methods {
        let v = match m {
            Method::Direct => crate::fixed::f_k_direct(field, k)?,
            Method::Factored => crate::fixed::f_k_factored(field, k)?,
            Method::ClosedForm if k == specs.m => generator(field, Method::ClosedForm)?,
            Method::ClosedForm => {
                return Err(Error::InvalidArgument(format!(
                    "the closed form only gives f_m, m = {}; got k = {k}",
                    specs.m
                )))
            }
        };
        values.push((m, v));
    }
    let Some((_, value)) = values.first().cloned() else {
        return Err(Error::InvalidArgument("no method selected".into()));
    };
    let agree = values.iter().all(|(_, v)| v == &value);
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let mut verdicts =
        vec![Verdict::new("methods_agree", agree, format!("compared [{}]", names.join(", ")))];
    if let Ok(deg) = value.extension_degree() {
        verdicts.push(Verdict::new("extension_degree", true, format!("[F(x):F(f_k)] = {deg}")));
    }
    let result = json!({
        "k": k,
        "methods": methods,
        "value": RationalRecord::of(&value),
        "rendered": value.to_string(),
    });
    Ok(Envelope::new(field, "fk", result, verdicts))
}

pub fn verify_envelope(field: &Field, verdicts: Vec<Verdict>) -> Envelope {
    let passed = verdicts.iter().filter(|v| v.pass).count();
    let result = json!({ "passed": passed, "failed": verdicts.len() - passed });
    Envelope::new(field, "verify", result, verdicts)
}
