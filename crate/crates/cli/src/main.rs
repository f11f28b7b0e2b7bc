use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fixedfield::fixed::EXHAUSTIVE_INVARIANCE_MAX_Q;
use fixedfield::record::{
    applicable_methods, fk_envelope, generator_envelope, group_envelope, verify_envelope, Envelope,
};
use fixedfield::verify::run_suite;
use fixedfield::{build_report_with, Error, Field, GeneratorSpecs, Method};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Compute the generator of the field fixed by every automorphism of F_q(x).
#[derive(Parser, Debug)]
#[command(name = "fixedfield", version)]
struct Cli {
    /// Characteristic of the base field.
    #[arg(long)]
    p: u64,
    /// Extension degree; q = p^n.
    #[arg(long)]
    n: u32,
    /// Monic irreducible modulus, coefficients ascending (d0,d1,...,1).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = MethodArg::All, global = true)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Check invariance against the whole group regardless of q.
    #[arg(long, global = true)]
    exhaustive: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute f_m and verify it.
    Generator,
    /// Run the full verification suite.
    Verify,
    /// List every element of the group.
    Group,
    /// Compute f_k.
    Fk {
        #[arg(long)]
        k: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Factored,
    Closed,
    All,
}

impl MethodArg {
    fn single(self) -> Option<Method> {
        match self {
            MethodArg::Direct => Some(Method::Direct),
            MethodArg::Factored => Some(Method::Factored),
            MethodArg::Closed => Some(Method::ClosedForm),
            MethodArg::All => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("fixedfield: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field = match Field::new(cli.p, cli.n, cli.modulus.as_deref()) {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    let exhaustive = cli.exhaustive || field.q() <= EXHAUSTIVE_INVARIANCE_MAX_Q;
    let envelope = match run(&cli, &field, exhaustive) {
        Ok(env) => env,
        Err(Error::NotMultiple { k, q_minus_one }) => {
            return usage(format!(
                "the factored method needs (q-1) | k, but {q_minus_one} does not divide {k}"
            ))
        }
        Err(e) => return usage(e),
    };
    let out = match cli.format {
        Format::Json => serde_json::to_string_pretty(&envelope).expect("serializable") + "\n",
        Format::Text => render_text(&field, &envelope),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    if envelope.all_pass() {
        ExitCode::SUCCESS
    } else {
        let failed: Vec<&str> =
            envelope.verdicts.iter().filter(|v| !v.pass).map(|v| v.name.as_str()).collect();
        eprintln!("fixedfield: failed checks: {}", failed.join(", "));
        ExitCode::from(EXIT_FAILED)
    }
}

fn run(cli: &Cli, field: &Field, exhaustive: bool) -> fixedfield::Result<Envelope> {
    match &cli.command {
        Command::Generator => {
            let (method, compare) = match cli.method.single() {
                Some(Method::ClosedForm) => (Method::ClosedForm, vec![Method::Direct]),
                Some(m) => (m, vec![Method::ClosedForm]),
                None => (Method::ClosedForm, vec![Method::Direct, Method::Factored]),
            };
            let report = build_report_with(field, method, &compare, exhaustive)?;
            Ok(generator_envelope(&report))
        }
        Command::Verify => Ok(verify_envelope(field, run_suite(field, cli.exhaustive)?)),
        Command::Group => Ok(group_envelope(field)),
        Command::Fk { k } => {
            let methods = match cli.method.single() {
                Some(m) => vec![m],
                None => applicable_methods(field, *k),
            };
            fk_envelope(field, *k, &methods)
        }
    }
}

fn render_text(field: &Field, env: &Envelope) -> String {
    let mut out = String::new();
    let specs = GeneratorSpecs::new(field);
    writeln!(out, "field: {field:?}, q = {}", field.q()).unwrap();
    let r = &env.result;
    match env.command.as_str() {
        "generator" => {
            writeln!(out, "m = {}, |G| = {}", specs.m, specs.group_order).unwrap();
            writeln!(out, "method: {}", r["method"].as_str().unwrap_or_default()).unwrap();
            writeln!(out, "f_m = {}", r["rendered"].as_str().unwrap_or_default()).unwrap();
            writeln!(out, "degree: {}", r["degree"]).unwrap();
        }
        "group" => {
            for m in r["rendered"].as_array().into_iter().flatten() {
                writeln!(out, "{}", m.as_str().unwrap_or_default()).unwrap();
            }
            writeln!(out, "count: {}", r["count"]).unwrap();
        }
        "fk" => writeln!(out, "f_{} = {}", r["k"], r["rendered"].as_str().unwrap_or_default()).unwrap(),
        _ => {}
    }
    for v in &env.verdicts {
        writeln!(out, "{} {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.name, v.detail).unwrap();
    }
    if env.command == "verify" {
        writeln!(out, "{} passed, {} failed", r["passed"], r["failed"]).unwrap();
    }
    out
}
