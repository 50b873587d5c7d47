mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hessian_moduli::correspondence::{decompose_so0, herm_to_orth, orth_to_herm, HermImage};
use hessian_moduli::cubic_invariants::{
    classical_invariants, classify, delta_km, delta_sing, eckardt_delta, elem_sym, kummer_invariant,
    SylvesterParam,
};
use hessian_moduli::heegner::heegner_membership;
use hessian_moduli::hermitian_group::decompose::f_mod2;
use hessian_moduli::hermitian_group::{
    decompose_hgamma0, membership, phi9_coset_classify, GElement, HToken, HMembership,
};
use hessian_moduli::lattice_m::{
    block_parity, disc_action, is_in_enr, is_in_k3, is_orthogonal, orientation, to_s5,
};
use hessian_moduli::period_domain::{dm_membership, psi, psi_inv};
use hessian_moduli::verify::{all_passed, run_suite, Suite};
use serde_json::{json, Map, Value};

use input::InputError;

#[derive(Parser)]
#[command(name = "hessian-moduli", version, about = "Exact computations for the moduli of Hessian K3 surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatrixArg {
    /// Inline JSON, `@file`, or `-` for stdin.
    #[arg(long)]
    matrix: String,
}

#[derive(Subcommand)]
enum Command {
    /// Sylvester invariants, discriminants and loci of a cubic surface.
    Invariants {
        /// Five rationals, e.g. '["1","2","3","4","5"]'.
        #[arg(long)]
        lambda: String,
    },
    /// Elements of O(M), given as 6x6 integer matrices.
    #[command(subcommand)]
    Orth(OrthCmd),
    /// Elements of the Hermitian modular group, given as 4x4 matrices of [a,b] entries.
    #[command(subcommand)]
    Herm(HermCmd),
    /// The map between D_M+ and H2.
    #[command(subcommand)]
    Map(MapCmd),
    /// Transport between O+(M) and the Hermitian side.
    #[command(subcommand)]
    Correspond(CorrespondCmd),
    /// Heegner divisor membership of a point of H2.
    Heegner {
        /// 2x2 matrix of tower numbers [a,b,c,d] = a + b√3 + c i + d i√3.
        #[arg(long)]
        tau: String,
    },
    /// Deterministic verification suites.
    Verify {
        #[arg(long, value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OrthCmd {
    /// Orthogonality, determinant, orientation and membership in the K3 and Enriques subgroups.
    Check(MatrixArg),
    /// Word in the standard generators of SO+(M)_0.
    Decompose(MatrixArg),
    /// Induced action on the discriminant group.
    DiscAction(MatrixArg),
    /// Image in S5.
    ToS5(MatrixArg),
}

#[derive(Subcommand)]
enum HermCmd {
    /// Membership in HGamma, HGamma0(2) and HGamma1(2).
    Check(MatrixArg),
    /// Word in the generators of HGamma1(2).
    Decompose(MatrixArg),
    /// Reduction modulo 2.
    Mod2(MatrixArg),
    /// Coset of an element of HGamma0(2), or with --scaled of S h S^-1 for h in HGamma.
    Coset {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        scaled: bool,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Point of H2 for a period point z.
    ZToTau {
        /// Six tower numbers.
        #[arg(long)]
        z: String,
    },
    /// Period point for tau in H2.
    TauToZ {
        #[arg(long)]
        tau: String,
    },
}

#[derive(Subcommand)]
enum CorrespondCmd {
    /// Hermitian element corresponding to g in O+(M).
    O2h(MatrixArg),
    /// Element g of HGamma0(2); --t and --w prepend the involutions T and W.
    H2o {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        t: bool,
        #[arg(long)]
        w: bool,
    },
}

enum Failure {
    Usage(InputError),
    Math(hessian_moduli::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e)
    }
}

impl From<hessian_moduli::Error> for Failure {
    fn from(e: hessian_moduli::Error) -> Self {
        Failure::Math(e)
    }
}

/// Outputs plus whether the command's check passed.
struct Outcome {
    outputs: Value,
    passed: bool,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn ok(outputs: Value) -> Self {
        Self {
            outputs,
            passed: true,
            diagnostics: Vec::new(),
        }
    }

    fn check(outputs: Value, passed: bool, why: &str) -> Self {
        Self {
            outputs,
            passed,
            diagnostics: if passed { Vec::new() } else { vec![why.to_string()] },
        }
    }
}

struct Run {
    name: &'static str,
    inputs: Map<String, Value>,
}

impl Run {
    fn new(name: &'static str) -> Self {
        Self { name, inputs: Map::new() }
    }

    fn load(&mut self, arg: &str, field: &str) -> Result<Value, Failure> {
        let v = input::load(arg, field)?;
        self.inputs.insert(field.to_string(), v.clone());
        Ok(v)
    }
}

fn execute(cmd: Command, run: &mut Run) -> Result<Outcome, Failure> {
    match cmd {
        Command::Invariants { lambda } => {
            run.name = "invariants";
            let l = SylvesterParam::new(input::lambda(&run.load(&lambda, "lambda")?, "lambda")?)?;
            let inv = classical_invariants(&l);
            let locus = classify(&l);
            let mut diagnostics = Vec::new();
            let km = match delta_km(&l) {
                Ok(v) => render::rational(&v),
                Err(e) => {
                    diagnostics.push(format!("delta_km: {e}"));
                    Value::Null
                }
            };
            Ok(Outcome {
                outputs: json!({
                    "sigma": elem_sym(&l).iter().map(render::rational).collect::<Vec<_>>(),
                    "I8": render::rational(&inv.i8),
                    "I16": render::rational(&inv.i16),
                    "I24": render::rational(&inv.i24),
                    "I32": render::rational(&inv.i32),
                    "I40": render::rational(&inv.i40),
                    "I100": render::rational(&inv.i100),
                    "delta": render::rational(&eckardt_delta(&l)),
                    "delta_sing": render::rational(&delta_sing(&l)),
                    "delta_km": km,
                    "kummer_invariant": render::rational(&kummer_invariant(&inv)),
                    "locus": {
                        "sylvester_degenerate": locus.sylvester_degenerate,
                        "singular": locus.singular,
                        "eckardt": locus.eckardt,
                        "kummer": locus.kummer,
                    },
                }),
                passed: true,
                diagnostics,
            })
        }
        Command::Orth(sub) => orth(sub, run),
        Command::Herm(sub) => herm(sub, run),
        Command::Map(MapCmd::ZToTau { z }) => {
            run.name = "map z-to-tau";
            let z = input::period_point(&run.load(&z, "z")?, "z")?;
            let tau = psi(&z)?;
            Ok(Outcome::ok(json!({ "tau": render::tau(&tau) })))
        }
        Command::Map(MapCmd::TauToZ { tau }) => {
            run.name = "map tau-to-z";
            let tau = input::tau(&run.load(&tau, "tau")?, "tau")?;
            let z = psi_inv(&tau)?;
            Ok(Outcome::ok(json!({
                "z": render::period_point(&z),
                "component": format!("{:?}", dm_membership(&z)),
            })))
        }
        Command::Correspond(CorrespondCmd::O2h(MatrixArg { matrix })) => {
            run.name = "correspond o2h";
            let g = input::orth_matrix(&run.load(&matrix, "matrix")?, "matrix")?;
            let img = orth_to_herm(&g)?;
            Ok(Outcome::ok(json!({
                "uses_t": img.uses_t,
                "uses_w": img.uses_w,
                "word": render::display_list(&img.word.0),
                "matrix": render::eis_matrix(&img.matrix()?),
                "action": "tau -> T^t(W^w(word . tau))",
            })))
        }
        Command::Correspond(CorrespondCmd::H2o { matrix, t, w }) => {
            run.name = "correspond h2o";
            let g = input::herm_matrix(&run.load(&matrix, "matrix")?, "matrix")?;
            run.inputs.insert("t".into(), json!(t));
            run.inputs.insert("w".into(), json!(w));
            let (a, word) = decompose_hgamma0(&g)?;
            let mut tokens = vec![HToken::A(a)];
            tokens.extend(word.0);
            let img = HermImage::with_flags(t, w, tokens);
            let o = herm_to_orth(&img)?;
            Ok(Outcome::ok(json!({
                "matrix": render::int_matrix(&o),
                "note": "determined up to -I6",
            })))
        }
        Command::Heegner { tau } => {
            run.name = "heegner";
            let tau = input::tau(&run.load(&tau, "tau")?, "tau")?;
            let f = heegner_membership(&tau)?;
            Ok(Outcome::ok(json!({
                "node": f.node,
                "eckardt": f.eckardt,
                "ns": f.ns,
                "km": f.km,
            })))
        }
        Command::Verify { suite, seed } => {
            run.name = "verify";
            run.inputs.insert("suite".into(), json!(suite));
            run.inputs.insert("seed".into(), json!(seed));
            let suite: Suite = suite.parse()?;
            let lines = run_suite(suite, seed);
            let passed = all_passed(&lines);
            let checks: Vec<Value> = lines
                .iter()
                .map(|l| json!({ "name": l.name, "anchor": l.anchor, "passed": l.passed, "detail": l.detail }))
                .collect();
            Ok(Outcome {
                outputs: json!({
                    "passed": lines.iter().filter(|l| l.passed).count(),
                    "total": lines.len(),
                    "checks": checks,
                }),
                passed,
                diagnostics: lines.iter().filter(|l| !l.passed).map(ToString::to_string).collect(),
            })
        }
    }
}

fn orth(cmd: OrthCmd, run: &mut Run) -> Result<Outcome, Failure> {
    let (name, arg) = match &cmd {
        OrthCmd::Check(a) => ("orth check", a),
        OrthCmd::Decompose(a) => ("orth decompose", a),
        OrthCmd::DiscAction(a) => ("orth disc-action", a),
        OrthCmd::ToS5(a) => ("orth to-s5", a),
    };
    run.name = name;
    let g = input::orth_matrix(&run.load(&arg.matrix, "matrix")?, "matrix")?;
    match cmd {
        OrthCmd::Check(_) => {
            let orthogonal = is_orthogonal(&g);
            if !orthogonal {
                return Ok(Outcome::check(json!({ "orthogonal": false }), false, "matrix is not in O(M)"));
            }
            let orient = orientation(&g)?;
            let plus = orient == hessian_moduli::lattice_m::Orientation::Plus;
            let (k3, enr) = if plus { (Some(is_in_k3(&g)?), Some(is_in_enr(&g)?)) } else { (None, None) };
            Ok(Outcome::ok(json!({
                "orthogonal": true,
                "det": render::int(g.det()),
                "orientation": format!("{orient:?}"),
                "block_parity": format!("{:?}", block_parity(&g)?),
                "in_k3": k3,
                "in_enr": enr,
            })))
        }
        OrthCmd::Decompose(_) => {
            let word = decompose_so0(&g)?;
            Ok(Outcome::ok(json!({
                "word": render::display_list(&word.0),
                "length": word.len(),
            })))
        }
        OrthCmd::DiscAction(_) => {
            let a = disc_action(&g)?;
            Ok(Outcome::ok(json!({
                "images_of_generators": render::display_list(&a.images_of_generators()),
                "is_identity": a.is_identity(),
            })))
        }
        OrthCmd::ToS5(_) => {
            let p = to_s5(&g)?;
            Ok(Outcome::ok(json!({
                "permutation": p.to_string(),
                "cycles": p.cycles(),
                "even": p.is_even(),
            })))
        }
    }
}

fn herm(cmd: HermCmd, run: &mut Run) -> Result<Outcome, Failure> {
    let (name, matrix) = match &cmd {
        HermCmd::Check(a) => ("herm check", &a.matrix),
        HermCmd::Decompose(a) => ("herm decompose", &a.matrix),
        HermCmd::Mod2(a) => ("herm mod2", &a.matrix),
        HermCmd::Coset { matrix, .. } => ("herm coset", matrix),
    };
    run.name = name;
    let g = input::herm_matrix(&run.load(matrix, "matrix")?, "matrix")?;
    match cmd {
        HermCmd::Check(_) => {
            let m = membership(&g);
            Ok(Outcome::check(
                json!({ "membership": m.to_string() }),
                m != HMembership::NotInHGamma,
                "matrix is not in HGamma",
            ))
        }
        HermCmd::Decompose(_) => {
            let (a, word) = decompose_hgamma0(&g)?;
            Ok(Outcome::ok(json!({
                "gA": render::eis_matrix(&a),
                "word": render::display_list(&word.0),
                "factorization": "g = gA(A) . word",
            })))
        }
        HermCmd::Mod2(_) => {
            let m = f_mod2(&g)?;
            Ok(Outcome::ok(json!({
                "A_mod_2": m.to_string(),
                "permutation": m.projective_permutation().to_string(),
            })))
        }
        HermCmd::Coset { scaled, .. } => {
            run.inputs.insert("scaled".into(), json!(scaled));
            let e = if scaled { GElement::from_scaled(g)? } else { GElement::from_hgamma0(&g)? };
            Ok(Outcome::ok(json!({ "coset": phi9_coset_classify(&e).to_string() })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut run = Run::new("");
    let result = execute(cli.command, &mut run);
    let (status, outputs, diagnostics, code) = match result {
        Ok(o) => {
            let code = if o.passed { 0 } else { 1 };
            (if o.passed { "ok" } else { "error" }, o.outputs, o.diagnostics, code)
        }
        Err(Failure::Usage(e)) => ("error", Value::Null, vec![e.to_string()], 2),
        Err(Failure::Math(e)) => ("error", Value::Null, vec![e.to_string()], 1),
    };
    let envelope = json!({
        "command": run.name,
        "inputs": Value::Object(run.inputs),
        "outputs": outputs,
        "status": status,
        "diagnostics": diagnostics,
    });
    let text = serde_json::to_string_pretty(&envelope).expect("JSON values serialize");
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code)
}
