//! Command-line surface: argument definitions and the dispatch from
//! commands to the kernel. `run_args` is pure (arguments in, exit code and
//! output text out) so the whole surface is testable without a process.
//!
//! Exit codes: 0 all checks pass, 1 a check fails or a construction is
//! refused, 2 usage errors, 3 file parse errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hopfbrace::brace::{self, BraceData, CoactionData};
use hopfbrace::error::HopfError;
use hopfbrace::hopf::{check_hopf, sweedler_h4};
use hopfbrace::lazy::{self, laurent_brace, monomial_window};
use hopfbrace::matched::{self, check_weak_rmatrix, WeakRMatrix};
use hopfbrace::zoo;
use hopfbrace::{bicrossed, cocycle};
use hopfbrace::{CheckReport, FieldSpec, HopfData, StructureMap, Tensor};

use crate::format::{self, parse_field_token, ParsedFile};
use crate::report::Report;

#[derive(Parser)]
#[command(
    name = "hopfbrace",
    about = "Exact axiom checks and constructions for Hopf algebras, Hopf braces, \
             matched pairs and bicrossed coproducts"
)]
pub struct Cli {
    /// Base field for zoo objects: Q, F<p> or Fp:<p>
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Report rendering for check commands
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Monomial window |a| <= A, b <= B for zoo:laurent
    #[arg(long, global = true, num_args = 2, value_names = ["A", "B"])]
    pub window: Option<Vec<u64>>,
    /// Allow targets of dimension above 16
    #[arg(long, global = true)]
    pub extended: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Structured,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Verify the axioms of an object from a file or the zoo
    Check {
        kind: CheckKind,
        /// A file path, or zoo:<name>
        target: String,
    },
    /// Construct an object and emit it in the text format
    Build {
        what: BuildKind,
        target: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Braid operator commands
    Braid {
        #[command(subcommand)]
        cmd: BraidCmd,
    },
    /// Named example objects
    Zoo {
        #[command(subcommand)]
        cmd: ZooCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CheckKind {
    Hopf,
    Brace,
    Matched,
    Cocycle,
    Rmatrix,
    Braid,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BuildKind {
    /// Re-serialize a zoo object or a file
    Export,
    /// Brace pairing a coproduct with its co-opposite
    CopBrace,
    /// Brace on H^op (x) H* from the canonical weak R-matrix
    DoubleDual,
    /// Bicrossed coproduct of a weak R-matrix file
    Bicrossed,
    /// Smash coproduct of a coaction file
    Smash,
    /// Coproduct conjugated by a copairing
    Twist,
}

#[derive(Subcommand)]
pub enum BraidCmd {
    /// Print the braid operator of a commutative brace as a matrix of terms
    Export {
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum ZooCmd {
    /// List every zoo name
    List,
}

pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CmdOut = Result<(i32, String), Failure>;

pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    run(cli)
}

pub fn run(cli: Cli) -> (i32, String) {
    match dispatch(&cli) {
        Ok((code, text)) => (code, text),
        Err(f) => (f.code, format!("error: {}", f.message)),
    }
}

fn dispatch(cli: &Cli) -> CmdOut {
    let field = parse_field_token(&cli.field).map_err(|m| fail(2, m))?;
    match &cli.cmd {
        Cmd::Check { kind, target } => check_cmd(cli, field, *kind, target),
        Cmd::Build { what, target, out } => build_cmd(cli, field, *what, target, out.as_deref()),
        Cmd::Braid { cmd: BraidCmd::Export { target, out } } => {
            braid_export(field, target, out.as_deref())
        }
        Cmd::Zoo { cmd: ZooCmd::List } => {
            let mut names = zoo::list();
            names.push("laurent".into());
            Ok((0, names.join("\n")))
        }
    }
}

// ---------------------------------------------------------------------------
// target loading
// ---------------------------------------------------------------------------

fn load_parsed(path: &str) -> Result<ParsedFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {}", path, e)))?;
    format::parse(&text).map_err(|e| fail(3, format!("{}: {}", path, e)))
}

/// Zoo constructor errors: unknown names are usage errors, everything else
/// is a refusal of the requested construction.
fn zoo_err(e: HopfError) -> Failure {
    match e {
        HopfError::UnknownZooObject(_) => fail(2, e.to_string()),
        _ => fail(1, e.to_string()),
    }
}

fn get_hopf(target: &str, field: FieldSpec) -> Result<(String, HopfData), Failure> {
    if let Some(name) = target.strip_prefix("zoo:") {
        let h = zoo::hopf(name, field).map_err(zoo_err)?;
        return Ok((name.to_string(), h));
    }
    match load_parsed(target)? {
        ParsedFile::Hopf { name, hopf } => Ok((name, hopf)),
        other => Err(fail(
            2,
            format!("{} describes {}, not a single Hopf algebra", target, file_kind(&other)),
        )),
    }
}

fn file_kind(f: &ParsedFile) -> &'static str {
    match f {
        ParsedFile::Hopf { .. } => "a Hopf algebra",
        ParsedFile::Brace { .. } => "a brace",
        ParsedFile::Matched { .. } => "a matched pair",
        ParsedFile::Coacted { .. } => "a coaction",
        ParsedFile::RMatrix { .. } => "an R-matrix",
    }
}

/// Refuses the dimension-36 double dual targets unless --extended is set.
fn gate_dimension(dim: usize, extended: bool, name: &str) -> Result<(), Failure> {
    if dim > 16 && !extended {
        return Err(fail(
            2,
            format!("{} has dimension {}; pass --extended to allow it", name, dim),
        ));
    }
    Ok(())
}

fn get_brace(
    target: &str,
    field: FieldSpec,
    extended: bool,
) -> Result<(String, BraceData), Failure> {
    if let Some(name) = target.strip_prefix("zoo:") {
        if let Some(base) = name.strip_prefix("double-dual-") {
            let h = zoo::hopf(base, field).map_err(zoo_err)?;
            gate_dimension(h.dim() * h.dim(), extended, name)?;
        }
        let b = zoo::brace(name, field).map_err(zoo_err)?;
        return Ok((name.to_string(), b));
    }
    match load_parsed(target)? {
        ParsedFile::Brace { name, brace } => Ok((name, brace)),
        other => Err(fail(
            2,
            format!("{} describes {}, not a brace", target, file_kind(&other)),
        )),
    }
}

fn get_rmatrix(
    target: &str,
    field: FieldSpec,
) -> Result<(String, HopfData, HopfData, Tensor), Failure> {
    if let Some(name) = target.strip_prefix("zoo:") {
        if name == "h4-z2" {
            let h = sweedler_h4(field).map_err(|e| fail(1, e.to_string()))?;
            let a = zoo::hopf("z2", field).map_err(zoo_err)?;
            let r = bicrossed::h4_z2_rmatrix(field).map_err(|e| fail(1, e.to_string()))?;
            return Ok((name.to_string(), h, a, r));
        }
        return Err(fail(2, format!("no zoo R-matrix named '{}'", name)));
    }
    match load_parsed(target)? {
        ParsedFile::RMatrix { name, h, a, r } => Ok((name, h, a, r)),
        other => Err(fail(
            2,
            format!("{} describes {}, not an R-matrix", target, file_kind(&other)),
        )),
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn render(cli: &Cli, rep: Report) -> (i32, String) {
    let code = if rep.passed() { 0 } else { 1 };
    let text = match cli.output {
        Output::Text => rep.text(),
        Output::Structured => rep.json(),
    };
    (code, text)
}

fn check_cmd(cli: &Cli, field: FieldSpec, kind: CheckKind, target: &str) -> CmdOut {
    let fname = field.to_string();
    match kind {
        CheckKind::Hopf => {
            let (name, h) = get_hopf(target, field)?;
            let rep = check_hopf(&h);
            Ok(render(
                cli,
                Report::from_check("hopf", &name, &fname, &h.algebra.basis_labels, &rep),
            ))
        }
        CheckKind::Brace => {
            if target == "zoo:laurent" {
                return check_laurent(cli, field);
            }
            let (name, b) = get_brace(target, field, cli.extended)?;
            let rep = brace::check_brace(&b);
            Ok(render(
                cli,
                Report::from_check("brace", &name, &fname, &b.hopf.algebra.basis_labels, &rep),
            ))
        }
        CheckKind::Matched => check_matched(cli, field, target),
        CheckKind::Cocycle => {
            let (name, b) = get_brace(target, field, cli.extended)?;
            let c = cocycle::brace_to_cocycle(&b).map_err(|e| fail(1, e.to_string()))?;
            let rep = cocycle::check_cocycle(&c);
            Ok(render(
                cli,
                Report::from_check("cocycle", &name, &fname, &b.hopf.algebra.basis_labels, &rep),
            ))
        }
        CheckKind::Rmatrix => {
            let (name, h, a, r) = get_rmatrix(target, field)?;
            let rep = check_weak_rmatrix(&h, &a, &r);
            Ok(render(
                cli,
                Report::from_check("rmatrix", &name, &fname, &h.algebra.basis_labels, &rep),
            ))
        }
        CheckKind::Braid => {
            let (name, b) = get_brace(target, field, cli.extended)?;
            let c = brace::braid_operator(&b).map_err(|e| fail(1, e.to_string()))?;
            let invertible = match brace::invert_operator(&c) {
                Ok(c_inv) => {
                    let id = StructureMap::identity(field, c.in_dims().to_vec());
                    if c_inv.compose(&c).unwrap().equal_tables(&id) {
                        CheckReport::pass()
                    } else {
                        CheckReport::fail("braid.invertible", vec![], Tensor::zero(vec![]))
                    }
                }
                Err(_) => CheckReport::fail("braid.invertible", vec![], Tensor::zero(vec![])),
            };
            let rep = invertible
                .and_then(|| brace::check_braid_equation(&c))
                .and_then(|| {
                    brace::check_braid_conjugation(&b)
                        .expect("braid_operator succeeded, so the brace is commutative")
                });
            Ok(render(
                cli,
                Report::from_check("braid", &name, &fname, &b.hopf.algebra.basis_labels, &rep),
            ))
        }
    }
}

fn check_laurent(cli: &Cli, field: FieldSpec) -> CmdOut {
    let (a_max, b_max) = match cli.window.as_deref() {
        Some([a, b]) => (*a as i64, *b),
        Some(_) => return Err(fail(2, "--window takes two numbers")),
        None => (2, 2),
    };
    let set = monomial_window(a_max, b_max);
    let labels: Vec<String> = set.iter().map(|m| m.label()).collect();
    let l = laurent_brace(field);
    let rep = lazy::check_brace_on_monomials(&l, &set)
        .and_then(|| lazy::check_comult_prime_multiplicative(&l, &set));
    let name = format!("laurent[|a|<={},b<={}]", a_max, b_max);
    Ok(render(
        cli,
        Report::from_check("brace", &name, &field.to_string(), &labels, &rep),
    ))
}

fn check_matched(cli: &Cli, field: FieldSpec, target: &str) -> CmdOut {
    let fname = field.to_string();
    if let Some(name) = target.strip_prefix("zoo:") {
        // a zoo brace name: check the matched pair it induces
        let (_, b) = get_brace(target, field, cli.extended)?;
        let mp = matched::brace_to_matched(&b).map_err(|e| fail(1, e.to_string()))?;
        let rep = matched::check_matched_pair(&mp);
        return Ok(render(
            cli,
            Report::from_check("matched", name, &fname, &b.hopf.algebra.basis_labels, &rep),
        ));
    }
    match load_parsed(target)? {
        ParsedFile::Matched { name, pair } => {
            let rep = matched::check_matched_pair(&pair);
            Ok(render(cli, Report::from_check("matched", &name, &fname, &[], &rep)))
        }
        ParsedFile::RMatrix { name, h, a, r } => {
            let rep = check_weak_rmatrix(&h, &a, &r);
            if !rep.passed() {
                return Ok(render(cli, Report::from_check("matched", &name, &fname, &[], &rep)));
            }
            let rm = WeakRMatrix::new(&h, &a, r).map_err(|e| fail(1, e.to_string()))?;
            let mp = matched::matched_from_rmatrix(&h, &a, &rm)
                .map_err(|e| fail(1, e.to_string()))?;
            let rep = matched::check_matched_pair(&mp);
            Ok(render(cli, Report::from_check("matched", &name, &fname, &[], &rep)))
        }
        other => Err(fail(
            2,
            format!("{} describes {}, not a matched pair", target, file_kind(&other)),
        )),
    }
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

fn emit(out: Option<&std::path::Path>, contents: String) -> CmdOut {
    match out {
        None => Ok((0, contents)),
        Some(path) => {
            std::fs::write(path, &contents)
                .map_err(|e| fail(2, format!("cannot write {}: {}", path.display(), e)))?;
            Ok((0, format!("wrote {}", path.display())))
        }
    }
}

fn build_cmd(
    cli: &Cli,
    field: FieldSpec,
    what: BuildKind,
    target: &str,
    out: Option<&std::path::Path>,
) -> CmdOut {
    let contents = match what {
        BuildKind::Export => export_target(cli, field, target)?,
        BuildKind::CopBrace => {
            let (name, h) = get_hopf(target, field)?;
            let b = brace::cop_brace(&h).map_err(|e| fail(1, e.to_string()))?;
            format::serialize_brace(&format!("{}-cop", name), &b)
        }
        BuildKind::DoubleDual => {
            let (name, h) = get_hopf(target, field)?;
            gate_dimension(h.dim() * h.dim(), cli.extended, &name)?;
            let dd = bicrossed::drinfeld_double_dual(&h).map_err(|e| fail(1, e.to_string()))?;
            format::serialize_brace(&format!("double-dual-{}", name), &dd.brace)
        }
        BuildKind::Bicrossed => {
            let (name, h, a, r) = get_rmatrix(target, field)?;
            let rm = WeakRMatrix::new(&h, &a, r).map_err(|e| fail(1, e.to_string()))?;
            let mp = matched::matched_from_rmatrix(&h, &a, &rm)
                .map_err(|e| fail(1, e.to_string()))?;
            let bc = bicrossed::bicrossed_coproduct(&mp).map_err(|e| fail(1, e.to_string()))?;
            format::serialize_hopf(&format!("bicrossed-{}", name), &bc.result)
        }
        BuildKind::Smash => {
            let (name, h, a, rho) = match load_parsed(target)? {
                ParsedFile::Coacted { name, h, a, rho } => (name, h, a, rho),
                ParsedFile::Matched { name, pair } => {
                    let rho = CoactionData {
                        side: brace::CoactionSide::Left,
                        map: pair.rho.clone(),
                    };
                    (name, pair.h, pair.a, rho)
                }
                other => {
                    return Err(fail(
                        2,
                        format!("{} describes {}, not a coaction", target, file_kind(&other)),
                    ))
                }
            };
            let result = bicrossed::smash_coproduct(&a, &h, &rho)
                .map_err(|e| fail(1, e.to_string()))?;
            format::serialize_hopf(&format!("smash-{}", name), &result)
        }
        BuildKind::Twist => {
            let (name, h, r) = twist_input(target, field)?;
            let result = brace::twist_comultiplication(&h, &r)
                .map_err(|e| fail(1, e.to_string()))?;
            format::serialize_hopf(&format!("twist-{}", name), &result)
        }
    };
    emit(out, contents)
}

fn export_target(cli: &Cli, field: FieldSpec, target: &str) -> Result<String, Failure> {
    if let Some(name) = target.strip_prefix("zoo:") {
        if let Ok(h) = zoo::hopf(name, field) {
            return Ok(format::serialize_hopf(name, &h));
        }
        let (name, b) = get_brace(target, field, cli.extended)?;
        return Ok(format::serialize_brace(&name, &b));
    }
    match load_parsed(target)? {
        ParsedFile::Hopf { name, hopf } => Ok(format::serialize_hopf(&name, &hopf)),
        ParsedFile::Brace { name, brace } => Ok(format::serialize_brace(&name, &brace)),
        other => Err(fail(
            2,
            format!("cannot export {}, only Hopf algebras and braces", file_kind(&other)),
        )),
    }
}

/// Copairings live in `H (x) H`: the named zoo copairings, or an R-matrix
/// file whose two blocks coincide.
fn twist_input(target: &str, field: FieldSpec) -> Result<(String, HopfData, Tensor), Failure> {
    if let Some(name) = target.strip_prefix("zoo:") {
        let r = match name {
            "z2" => zoo::z2_copairing(field),
            "d4" => zoo::d4_copairing(field),
            _ => return Err(fail(2, format!("no zoo copairing on '{}'", name))),
        }
        .map_err(|e| fail(1, e.to_string()))?;
        let h = zoo::hopf(name, field).map_err(zoo_err)?;
        return Ok((name.to_string(), h, r));
    }
    let (name, h, a, r) = get_rmatrix(target, field)?;
    if h != a {
        return Err(fail(2, "twist needs a copairing on a single object"));
    }
    Ok((name, h, r))
}

// ---------------------------------------------------------------------------
// braid export
// ---------------------------------------------------------------------------

fn braid_export(field: FieldSpec, target: &str, out: Option<&std::path::Path>) -> CmdOut {
    // --extended is not needed here: braid operators only exist on
    // commutative braces, which rules the large double duals out anyway
    let (name, b) = get_brace(target, field, true)?;
    let c = brace::braid_operator(&b).map_err(|e| fail(1, e.to_string()))?;
    let n = b.dim();
    let labels = &b.hopf.algebra.basis_labels;
    let legs: [&[String]; 2] = [labels, labels];
    let mut text = format!("# braid operator of {} over {} (dimension {})\n", name, field, n);
    for i in 0..n {
        for j in 0..n {
            let t = c.apply_basis(i * n + j).to_tensor(&[n, n]);
            text.push_str(&format!(
                "c {} (*) {} = {}\n",
                labels[i],
                labels[j],
                format::expr_string(&t, &legs)
            ));
        }
    }
    emit(out, text)
}
