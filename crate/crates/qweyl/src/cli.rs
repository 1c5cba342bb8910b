//! The `qweyl` command line: batch normalization, relation and morphism
//! checks, module graphs, and classification.
//!
//! Every command exits `0` on success, `1` when a verification report has a
//! failed entry, and `2` on usage errors (bad flags, malformed expressions
//! or character literals, out-of-range axes).  `--format json` switches the
//! check commands to line-oriented JSON; `module-graph` emits DOT by
//! default and JSON lines on request.  `--out` writes to a file instead of
//! stdout.  Randomized suites elsewhere in the crate honor the `QWEYL_SEED`
//! environment variable; the commands here are fully deterministic.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::characters::{Character, Coord};
use crate::parse::{parse_character, parse_element};
use crate::presentations::{
    check_relations_ext, theta_report, twist_relation_report, Family, Form, PresentationId,
};
use crate::qdiff::{e_equals_s_trivial_report, qdiff_morphism_report};
use crate::report::CheckReport;
use crate::scalars::{LambdaMode, ParamContext};
use crate::weightmod::{
    action_graph, isomorphic_induced_rank_one, isomorphic_simple, shift_iso_report,
    simple_weight_support, simplicity_report, tensor_report, twist_report, ModuleSpec,
};

/// Parse `args` (including the program name) and run the command,
/// printing to stdout or `--out`.  Returns the process exit code.
pub fn run(args: &[String]) -> u8 {
    match run_captured(args) {
        Ok((text, out, code)) => {
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            code
        }
        Err(code) => code,
    }
}

/// Like [`run`], but hands back the rendered output instead of writing it.
/// `Err` carries the exit code for argument errors (whose diagnostics go
/// straight to the terminal).
pub fn run_captured(args: &[String]) -> Result<(String, Option<PathBuf>, u8), u8> {
    let cli = match Cli::try_parse_from(args.iter().map(String::as_str)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let _ = e.print();
            return Err(code);
        }
    };
    match execute(cli) {
        Ok(done) => Ok(done),
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            Err(2)
        }
    }
}

/// A domain-level usage error: reported on stderr, exit code 2.
struct Usage(String);

trait OrUsage<T> {
    fn or_usage(self) -> Result<T, Usage>;
}

impl<T, E: std::fmt::Display> OrUsage<T> for Result<T, E> {
    fn or_usage(self) -> Result<T, Usage> {
        self.map_err(|e| Usage(e.to_string()))
    }
}

#[derive(Parser)]
#[command(
    name = "qweyl",
    about = "Exact computer algebra for multiparameter quantized Weyl algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse expressions and print their normal forms.
    Normalize(NormalizeArgs),
    /// Check every defining relation and z-normality identity of a presentation.
    Relcheck(RelcheckArgs),
    /// Check that theta embeds the localized Akhavizadegan-Jordan algebra
    /// into the Maltsiniotis localization.
    ThetaCheck(ThetaCheckArgs),
    /// Check the multiparameter relations under the Zhang-twisted product
    /// of the one-parameter algebra.
    TwistCheck(TwistCheckArgs),
    /// Emit the action graph of a weight module (DOT or JSON lines).
    ModuleGraph(ModuleGraphArgs),
    /// Print the weight support and simplicity verdict of a character's modules.
    Classify(ClassifyArgs),
    /// Decide whether the modules of two characters are isomorphic.
    Iso(IsoArgs),
    /// Compare P(phi) against the tensor product of its factors on a window
    /// (one-parameter case).
    TensorCheck(TensorCheckArgs),
    /// Check the q-difference operator model and its identification with
    /// the trivial simple module.
    QdiffCheck(QdiffCheckArgs),
    /// Check the shift isomorphism P(e_l . phi) -> P(phi) on a window.
    ShiftIso(ShiftIsoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Akhavizadegan-Jordan presentation (per-axis z_i).
    Aj,
    /// Maltsiniotis presentation (cumulative z_i).
    Maltsiniotis,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Aj => Family::AkhavizadeganJordan,
            FamilyArg::Maltsiniotis => Family::Maltsiniotis,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LambdaArg {
    /// Fully symbolic skew matrix l_ij.
    Symbolic,
    /// The one-parameter specialization: every l_ij = 1.
    Ones,
}

impl LambdaArg {
    fn mode(self) -> LambdaMode {
        match self {
            LambdaArg::Symbolic => LambdaMode::Symbolic,
            LambdaArg::Ones => LambdaMode::AllOnes,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    /// Human-readable tables.
    Human,
    /// One JSON object per checked identity.
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// Graphviz DOT.
    Dot,
    /// One JSON object per node and edge.
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum KindArg {
    /// The induced module P(phi).
    P,
    /// The simple quotient S(phi).
    S,
}

#[derive(Args)]
struct AlgebraOpts {
    /// Rank of the algebra (number of axes), between 1 and 9.
    #[arg(long, default_value_t = 1)]
    n: u8,
    /// Skew parameter matrix.
    #[arg(long, value_enum, default_value = "symbolic")]
    lambda: LambdaArg,
    /// Number of free weight symbols c_1..c_T available in characters.
    #[arg(long, default_value_t = 2)]
    symbols: u32,
}

impl AlgebraOpts {
    fn ctx(&self) -> Result<ParamContext, Usage> {
        ParamContext::new(self.n, self.lambda.mode(), self.symbols).or_usage()
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: ReportFormat,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn check_radius(radius: i64) -> Result<i64, Usage> {
    if radius >= 1 {
        Ok(radius)
    } else {
        Err(Usage("the window radius must be at least 1".into()))
    }
}

#[derive(Args)]
struct NormalizeArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Presentation family.
    #[arg(long, value_enum, default_value = "aj")]
    family: FamilyArg,
    /// Use the localized presentation (the z_i inverted).
    #[arg(long)]
    localized: bool,
    #[command(flatten)]
    output: OutputOpts,
    /// Expressions to normalize.  Values may start with a minus sign.
    #[arg(required = true, allow_hyphen_values = true)]
    exprs: Vec<String>,
}

#[derive(Args)]
struct RelcheckArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Presentation family.
    #[arg(long, value_enum, default_value = "aj")]
    family: FamilyArg,
    /// Use the localized presentation (the z_i inverted).
    #[arg(long)]
    localized: bool,
    /// Square q_1 in the first same-axis relation, demonstrating the
    /// failure path (the command then exits 1).
    #[arg(long)]
    perturb: bool,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct ThetaCheckArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct TwistCheckArgs {
    /// Rank of the algebra (number of axes), between 1 and 9.
    #[arg(long, default_value_t = 2)]
    n: u8,
    /// Twist matrix for the Zhang twist of the one-parameter algebra.
    #[arg(long, value_enum, default_value = "symbolic")]
    lambda: LambdaArg,
    /// Number of free weight symbols c_1..c_T available in characters.
    #[arg(long, default_value_t = 2)]
    symbols: u32,
    /// Optional character literal: additionally check that the twisted
    /// realization of P(phi) matches the direct action on a window.
    #[arg(long)]
    phi: Option<String>,
    /// Window radius for the module comparison (with --phi).
    #[arg(long, default_value_t = 4)]
    radius: i64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct ModuleGraphArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Character literal, e.g. "[q^2, c1*q^-1]".
    #[arg(long)]
    phi: String,
    /// Window radius: vertices range over [-radius, radius]^n.
    #[arg(long, default_value_t = 4)]
    radius: i64,
    /// Which module to draw.
    #[arg(long, value_enum, ignore_case = true, default_value = "P")]
    kind: KindArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "dot")]
    format: GraphFormat,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Character literal, e.g. "[q^2, c1*q^-1]".
    #[arg(long)]
    phi: String,
    /// Additionally certify simplicity of S(phi) on a window: every
    /// support vector generates and is generated by the origin coset.
    #[arg(long)]
    certify: bool,
    /// Window radius for the certificate (with --certify).
    #[arg(long, default_value_t = 4)]
    radius: i64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct IsoArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// First character literal.
    #[arg(long)]
    phi: String,
    /// Second character literal.
    #[arg(long)]
    psi: String,
    /// Compare the simple quotients S or (rank one only) the induced
    /// modules P.
    #[arg(long, value_enum, ignore_case = true, default_value = "S")]
    kind: KindArg,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct TensorCheckArgs {
    /// Rank of the algebra (number of axes), between 2 and 9; the skew
    /// matrix is all ones (the tensor decomposition's hypothesis).
    #[arg(long, default_value_t = 2)]
    n: u8,
    /// Number of free weight symbols c_1..c_T available in characters.
    #[arg(long, default_value_t = 2)]
    symbols: u32,
    /// Character literal for the full module.
    #[arg(long)]
    phi: String,
    /// Tensor split position: the factors cover axes 1..=split and
    /// split+1..=n.
    #[arg(long, default_value_t = 1)]
    split: u8,
    /// Window radius for the structure-constant comparison.
    #[arg(long, default_value_t = 4)]
    radius: i64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct QdiffCheckArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Verify operator identities on all monomials up to this degree per axis.
    #[arg(long, default_value_t = 5)]
    degree: i64,
    /// Window radius for the trivial-module identification.
    #[arg(long, default_value_t = 4)]
    radius: i64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct ShiftIsoArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,
    /// Character literal for the target module P(phi).
    #[arg(long)]
    phi: String,
    /// Axis along which the character is shifted.
    #[arg(long, default_value_t = 1)]
    ell: u8,
    /// Window radius for the intertwining check.
    #[arg(long, default_value_t = 4)]
    radius: i64,
    #[command(flatten)]
    output: OutputOpts,
}

fn render_report(report: &CheckReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Human => format!("{report}\n"),
        ReportFormat::Json => report.to_json_lines(),
    }
}

fn report_result(report: CheckReport, output: &OutputOpts) -> (String, Option<PathBuf>, u8) {
    let code = if report.passed() { 0 } else { 1 };
    (
        render_report(&report, output.format),
        output.out.clone(),
        code,
    )
}

/// The support of `S(phi)` as one condition per axis on the basis index.
fn support_condition(phi: &Character) -> String {
    phi.coords()
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let i = idx + 1;
            match c {
                Coord::Generic { .. } => format!("k{i} in Z"),
                Coord::Integral(a) if *a >= 0 => format!("k{i} <= {a}"),
                Coord::Integral(a) => format!("k{i} >= {}", a + 1),
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn execute(cli: Cli) -> Result<(String, Option<PathBuf>, u8), Usage> {
    match cli.command {
        Command::Normalize(args) => {
            let ctx = args.algebra.ctx()?;
            let form = if args.localized {
                Form::Localized
            } else {
                Form::Polynomial
            };
            let pres = PresentationId::new(args.family.family(), form, ctx);
            let mut text = String::new();
            for src in &args.exprs {
                let e = parse_element(src, &pres).or_usage()?;
                match args.output.format {
                    ReportFormat::Human => text.push_str(&format!("{e}\n")),
                    ReportFormat::Json => text.push_str(&format!(
                        "{}\n",
                        json!({ "input": src, "normal": e.to_string() })
                    )),
                }
            }
            Ok((text, args.output.out, 0))
        }
        Command::Relcheck(args) => {
            let ctx = args.algebra.ctx()?;
            let form = if args.localized {
                Form::Localized
            } else {
                Form::Polynomial
            };
            let pres = PresentationId::new(args.family.family(), form, ctx);
            let report = check_relations_ext(&pres, args.perturb);
            Ok(report_result(report, &args.output))
        }
        Command::ThetaCheck(args) => {
            let ctx = args.algebra.ctx()?;
            Ok(report_result(theta_report(&ctx), &args.output))
        }
        Command::TwistCheck(args) => {
            if args.n == 0 || args.n > 9 {
                return Err(Usage("the rank must be between 1 and 9".into()));
            }
            let mut report = twist_relation_report(args.n, &args.lambda.mode());
            if let Some(src) = &args.phi {
                let ctx = ParamContext::new(args.n, args.lambda.mode(), args.symbols).or_usage()?;
                let radius = check_radius(args.radius)?;
                let phi = parse_character(src, &ctx).or_usage()?;
                let module = twist_report(&ctx, &phi, radius).or_usage()?;
                if args.output.format == ReportFormat::Human {
                    let code = if report.passed() && module.passed() {
                        0
                    } else {
                        1
                    };
                    return Ok((format!("{report}\n{module}\n"), args.output.out, code));
                }
                report.merge(module);
            }
            Ok(report_result(report, &args.output))
        }
        Command::ModuleGraph(args) => {
            let ctx = args.algebra.ctx()?;
            let radius = check_radius(args.radius)?;
            let phi = parse_character(&args.phi, &ctx).or_usage()?;
            let spec = match args.kind {
                KindArg::P => ModuleSpec::induced(ctx, phi),
                KindArg::S => ModuleSpec::simple(ctx, phi),
            }
            .or_usage()?;
            let graph = action_graph(&spec, radius);
            let text = match args.format {
                GraphFormat::Dot => graph.to_dot(),
                GraphFormat::Json => graph.to_json_lines(),
            };
            Ok((text, args.out, 0))
        }
        Command::Classify(args) => {
            let ctx = args.algebra.ctx()?;
            let phi = parse_character(&args.phi, &ctx).or_usage()?;
            let weights = simple_weight_support(&phi);
            let support = support_condition(&phi);
            let p_simple = phi.coords().iter().all(|c| !c.is_integral());
            let mut text = match args.output.format {
                ReportFormat::Human => format!(
                    "character: {phi}\nweights: {weights}\nS-support: {support}\nP simple: {p_simple}\n"
                ),
                ReportFormat::Json => format!(
                    "{}\n",
                    json!({
                        "character": phi.to_string(),
                        "weights": weights.to_string(),
                        "support": support,
                        "p_simple": p_simple,
                    })
                ),
            };
            let mut code = 0;
            if args.certify {
                let radius = check_radius(args.radius)?;
                let report = simplicity_report(&ctx, &phi, radius).or_usage()?;
                code = if report.passed() { 0 } else { 1 };
                text.push_str(&render_report(&report, args.output.format));
            }
            Ok((text, args.output.out, code))
        }
        Command::Iso(args) => {
            let ctx = args.algebra.ctx()?;
            let phi = parse_character(&args.phi, &ctx).or_usage()?;
            let psi = parse_character(&args.psi, &ctx).or_usage()?;
            let isomorphic = match args.kind {
                KindArg::S => isomorphic_simple(&phi, &psi).or_usage()?,
                KindArg::P => isomorphic_induced_rank_one(&phi, &psi).or_usage()?,
            };
            let kind = match args.kind {
                KindArg::P => "P",
                KindArg::S => "S",
            };
            let (wp, wq) = (simple_weight_support(&phi), simple_weight_support(&psi));
            let text = match args.output.format {
                ReportFormat::Human => format!(
                    "kind: {kind}\nphi: {phi}  weights: {wp}\npsi: {psi}  weights: {wq}\nisomorphic: {isomorphic}\n"
                ),
                ReportFormat::Json => format!(
                    "{}\n",
                    json!({
                        "kind": kind,
                        "phi": phi.to_string(),
                        "psi": psi.to_string(),
                        "phi_weights": wp.to_string(),
                        "psi_weights": wq.to_string(),
                        "isomorphic": isomorphic,
                    })
                ),
            };
            Ok((text, args.output.out, 0))
        }
        Command::TensorCheck(args) => {
            let ctx = ParamContext::all_ones(args.n, args.symbols).or_usage()?;
            let radius = check_radius(args.radius)?;
            let phi = parse_character(&args.phi, &ctx).or_usage()?;
            let report = tensor_report(&ctx, &phi, args.split, radius).or_usage()?;
            Ok(report_result(report, &args.output))
        }
        Command::QdiffCheck(args) => {
            let ctx = args.algebra.ctx()?;
            let radius = check_radius(args.radius)?;
            if args.degree < 0 {
                return Err(Usage("the monomial degree must be nonnegative".into()));
            }
            let mut report = qdiff_morphism_report(&ctx, args.degree);
            let trivial = e_equals_s_trivial_report(&ctx, radius);
            match args.output.format {
                ReportFormat::Human => {
                    let code = if report.passed() && trivial.passed() {
                        0
                    } else {
                        1
                    };
                    let text = format!("{report}\n{trivial}\n");
                    Ok((text, args.output.out, code))
                }
                ReportFormat::Json => {
                    report.merge(trivial);
                    Ok(report_result(report, &args.output))
                }
            }
        }
        Command::ShiftIso(args) => {
            let ctx = args.algebra.ctx()?;
            let radius = check_radius(args.radius)?;
            let phi = parse_character(&args.phi, &ctx).or_usage()?;
            let report = shift_iso_report(&ctx, &phi, args.ell, radius).or_usage()?;
            Ok(report_result(report, &args.output))
        }
    }
}
