//! `syzrate`: resolutions, rates and Veronese checks from the command line.

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use syzrate_core::bounds::{
    corpus_run, Checker, CorpusCase, Inequality, LabeledModule, Params, Summary, EXIT_INCONCLUSIVE,
    EXIT_OK,
};
use syzrate_core::resolution::{
    ceil_div, rat_from_residue_table, resolve_minimal, BettiTable, Cutoffs, ModulePresentation,
    RingPresentation, DEFAULT_HOMOLOGICAL_CUTOFF,
};
use syzrate_core::session::{ModuleSpec, SessionSpec};
use syzrate_core::veronese::{veronese_module, veronese_ring, VeroneseCaps, VeroneseMap};
use syzrate_core::Error;

const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_SOFTWARE: u8 = 70;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "syzrate",
    version,
    about = "Graded free resolutions and Veronese rate bounds over prime fields"
)]
struct Cli {
    /// Session file describing the ring and module.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Override the field characteristic.
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Homological cutoff N.
    #[arg(long = "cutoff-n", global = true)]
    cutoff_n: Option<usize>,
    /// Internal degree cutoff D.
    #[arg(long = "cutoff-d", global = true)]
    cutoff_d: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 3 when any result is truncated or inconclusive.
    #[arg(long, global = true)]
    strict: bool,
    /// Lower every right-hand side by one (harness self-test).
    #[arg(long = "inject-rhs-error", global = true, hide = true)]
    inject_rhs: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Betti diagram of the module.
    Resolve {
        /// Print `i j count` triples instead of the diagram.
        #[arg(long)]
        raw: bool,
    },
    /// Truncated rate of the module.
    Rate,
    /// Truncated Backelin rate of the ring.
    Rat,
    /// Presentation of the Veronese subring R^(c).
    VeroneseRing {
        #[arg(long)]
        c: i64,
    },
    /// Presentation of the piece M^(c,d) over R^(c).
    VeroneseModule {
        #[arg(long)]
        c: i64,
        #[arg(long)]
        d: i64,
    },
    /// Check one inequality.
    Check {
        #[arg(long)]
        ineq: Inequality,
        #[arg(long)]
        c: Option<i64>,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
    },
    /// Check every case of a corpus file.
    Corpus {
        #[arg(long)]
        file: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Usage(_) => EXIT_USAGE,
            Error::Parse { .. } => EXIT_PARSE,
            Error::Io(_) => EXIT_NO_INPUT,
            Error::Invariant(_) | Error::NegInfCeiling => EXIT_SOFTWARE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Invalid session content is a data error, whatever the engine calls it.
fn invalid_input(e: Error) -> Failure {
    match e {
        Error::Usage(message) => Failure {
            code: EXIT_PARSE,
            message,
        },
        other => other.into(),
    }
}

fn in_file(path: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = invalid_input(e);
        f.message = format!("{path}: {}", f.message);
        f
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Cli {
    fn read(&self, path: &str) -> Result<String, Failure> {
        fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_NO_INPUT,
            message: format!("{path}: {e}"),
        })
    }

    fn session(&self) -> Result<SessionSpec, Failure> {
        let path = self.input.as_deref().ok_or(Failure {
            code: EXIT_USAGE,
            message: "this command needs --input PATH".into(),
        })?;
        let text = self.read(path)?;
        let spec = SessionSpec::parse(&text).map_err(in_file(path))?;
        Ok(self.override_spec(spec))
    }

    fn override_spec(&self, mut spec: SessionSpec) -> SessionSpec {
        if let Some(p) = self.characteristic {
            spec.characteristic = p;
        }
        if let Some(n) = self.cutoff_n {
            spec.cutoffs.n = Some(n);
        }
        if let Some(d) = self.cutoff_d {
            spec.cutoffs.d = Some(d);
        }
        spec
    }

    fn emit(&self, text: String, value: serde_json::Value, truncated: bool) -> Output {
        let text = match self.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
        };
        let code = if self.strict && truncated {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        };
        Output { text, code }
    }
}

fn homological(spec: &SessionSpec) -> usize {
    spec.cutoffs.n.unwrap_or(DEFAULT_HOMOLOGICAL_CUTOFF)
}

fn top_degree(m: &ModulePresentation) -> i64 {
    m.prune_units()
        .generator_degrees()
        .into_iter()
        .max()
        .unwrap_or(0)
}

fn degree_cutoff(spec: &SessionSpec, m: &ModulePresentation) -> i64 {
    let t0 = top_degree(m);
    match spec.cutoffs.d {
        Some(d) => d,
        None => Cutoffs::default_degree(m.ring(), homological(spec)) + t0.max(0),
    }
}

fn veronese(ring: &Arc<RingPresentation>, c: i64) -> Result<VeroneseMap, Failure> {
    if c < 1 {
        return Err(Error::usage("--c must be at least 1").into());
    }
    Ok(veronese_ring(ring, c, VeroneseCaps::default())?)
}

/// The piece `M^(c,d)` of `m`, with the relation cap the checker uses.
fn piece(
    spec: &SessionSpec,
    m: &ModulePresentation,
    v: &VeroneseMap,
    d: i64,
) -> Result<ModulePresentation, Failure> {
    let c = v.level();
    let cap = match spec.cutoffs.d {
        Some(d) => d,
        None => {
            Cutoffs::default_degree(v.target(), homological(spec))
                + ceil_div(top_degree(m), c).max(0)
                + 1
        }
    };
    Ok(veronese_module(m, v, d, cap)?)
}

/// The module a session describes, over whichever ring it lives on.
fn session_module(spec: &SessionSpec) -> Result<ModulePresentation, Failure> {
    let ring = spec.ring().map_err(invalid_input)?;
    let relation_cap =
        Cutoffs::default_degree(&ring, homological(spec)).max(spec.cutoffs.d.unwrap_or(0));
    match spec.module {
        ModuleSpec::VeronesePiece { c, d } => {
            let v = veronese(&ring, c)?;
            let base = ModulePresentation::free(ring, vec![0]).twisted(spec.twist);
            piece(spec, &base, &v, d)
        }
        _ => spec.module(&ring, relation_cap).map_err(invalid_input),
    }
}

fn label(spec: &SessionSpec) -> String {
    let base = match &spec.module {
        ModuleSpec::ResidueField => "K".to_string(),
        ModuleSpec::MaxIdealPower { s } => format!("m^{s}({s})"),
        ModuleSpec::Coker { .. } => "coker".to_string(),
        ModuleSpec::VeronesePiece { c, d } => format!("R^({c},{d})"),
    };
    if spec.twist == 0 {
        base
    } else {
        format!("{base}({})", spec.twist)
    }
}

fn resolve_table(spec: &SessionSpec, m: &ModulePresentation) -> Result<BettiTable, Failure> {
    let cut = Cutoffs::new(homological(spec), degree_cutoff(spec, m));
    Ok(resolve_minimal(m, cut)?.1)
}

fn truncation_note(table: &BettiTable) -> String {
    if table.is_truncated() {
        let cols: Vec<String> = table
            .truncated_columns()
            .iter()
            .map(|i| i.to_string())
            .collect();
        format!("truncated columns: {}\n", cols.join(" "))
    } else {
        String::new()
    }
}

fn veronese_ring_text(v: &VeroneseMap) -> String {
    let source = v.source().ring();
    let target = v.target().ring();
    let mut text = String::new();
    for (name, rep) in target.names().iter().zip(v.representatives()) {
        text.push_str(&format!("# {name} = {}\n", rep.fmt_with(source.names())));
    }
    text.push_str(&format!(
        "# variables: {}, quadrics: {}, relations: {}\n",
        target.nvars(),
        v.target()
            .ideal()
            .iter()
            .filter(|g| g.degree() == Some(2))
            .count(),
        v.target().ideal().len()
    ));
    if v.is_truncated() {
        text.push_str("# truncated: elimination hit its degree cap\n");
    }
    text + &SessionSpec::from_ring(v.target()).serialize()
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Resolve { raw } => {
            let spec = cli.session()?;
            let m = session_module(&spec)?;
            let table = resolve_table(&spec, &m)?;
            let text = if *raw {
                table.to_raw()
            } else {
                table.to_text()
            };
            let value = serde_json::to_value(table.report()).expect("serializable");
            Ok(cli.emit(text, value, table.is_truncated()))
        }
        Command::Rate => {
            let spec = cli.session()?;
            let m = session_module(&spec)?;
            let table = resolve_table(&spec, &m)?;
            let rate = table.rate_truncated();
            let text = format!("{rate}\n{}", truncation_note(&table));
            let value = json!({
                "rate": rate.to_string(),
                "truncated": table.is_truncated(),
                "cutoffs": { "N": table.homological_cutoff(), "D": table.degree_cutoff() },
            });
            Ok(cli.emit(text, value, table.is_truncated()))
        }
        Command::Rat => {
            let spec = cli.session()?;
            let ring = spec.ring().map_err(invalid_input)?;
            let k = ModulePresentation::residue_field(ring.clone());
            let n = homological(&spec);
            let d = spec
                .cutoffs
                .d
                .unwrap_or_else(|| Cutoffs::default_degree(&ring, n));
            let (_, table) = resolve_minimal(&k, Cutoffs::new(n + 1, d))?;
            let rat = rat_from_residue_table(table);
            let text = format!("{}\n{}", rat.value, truncation_note(&rat.table));
            let value = json!({
                "rat": rat.value.to_string(),
                "lower_bound": rat.lower_bound,
                "cutoffs": { "N": n, "D": d },
            });
            Ok(cli.emit(text, value, rat.lower_bound))
        }
        Command::VeroneseRing { c } => {
            let spec = cli.session()?;
            let ring = spec.ring().map_err(invalid_input)?;
            let v = veronese(&ring, *c)?;
            let target = v.target();
            let value = json!({
                "c": c,
                "vars": target.ring().names(),
                "representatives": v.representatives().iter().map(|m| m.fmt_with(ring.ring().names())).collect::<Vec<_>>(),
                "ideal": target.ideal().iter().map(|g| target.ring().fmt(g)).collect::<Vec<_>>(),
                "verified_through": v.verified_through(),
                "truncated": v.is_truncated(),
            });
            Ok(cli.emit(veronese_ring_text(&v), value, v.is_truncated()))
        }
        Command::VeroneseModule { c, d } => {
            let spec = cli.session()?;
            let ring = spec.ring().map_err(invalid_input)?;
            let v = veronese(&ring, *c)?;
            let m = match spec.module {
                ModuleSpec::VeronesePiece { .. } => {
                    return Err(
                        Error::usage("the session module is already a Veronese piece").into(),
                    )
                }
                _ => spec
                    .module(
                        &ring,
                        degree_cutoff(&spec, &ModulePresentation::residue_field(ring.clone())),
                    )
                    .map_err(invalid_input)?,
            };
            let p = piece(&spec, &m, &v, *d)?;
            let exported = SessionSpec::from_module(&p);
            let mut text = format!("# piece {d} of {} over level {c}\n", label(&spec));
            if let Some(b) = p.relations_valid_through() {
                text.push_str(&format!("# relations complete through degree {b}\n"));
            }
            text.push_str(&exported.serialize());
            let ModuleSpec::Coker { matrix, shifts } = &exported.module else {
                unreachable!("exported modules are cokernels")
            };
            let value = json!({
                "c": c,
                "d": d,
                "vars": exported.vars,
                "ideal": exported.ideal,
                "shifts": shifts,
                "matrix": matrix,
                "twist": exported.twist,
                "relations_valid_through": p.relations_valid_through(),
            });
            let truncated = v.is_truncated() || p.relations_valid_through().is_some();
            Ok(cli.emit(text, value, truncated))
        }
        Command::Check { ineq, c, s, d } => {
            let spec = cli.session()?;
            if matches!(spec.module, ModuleSpec::VeronesePiece { .. }) {
                return Err(Error::usage("check needs a module over the base ring").into());
            }
            let ring = spec.ring().map_err(invalid_input)?;
            let n = homological(&spec);
            let mut checker =
                Checker::new(ring.clone(), n, spec.cutoffs.d).with_rhs_injection(cli.inject_rhs);
            let m = spec
                .module(
                    &ring,
                    degree_cutoff(&spec, &ModulePresentation::residue_field(ring.clone())),
                )
                .map_err(invalid_input)?;
            let module = LabeledModule {
                label: label(&spec),
                module: m,
            };
            let params = Params {
                c: *c,
                s: *s,
                d: *d,
            };
            let report = checker.check(*ineq, &module, &params)?;
            let mut summary = Summary::default();
            summary.add(&report);
            let value = serde_json::to_value(&report).expect("serializable");
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
            };
            Ok(Output {
                text,
                code: summary.exit_code(cli.strict),
            })
        }
        Command::Corpus { file } => {
            let text = cli.read(file)?;
            let specs = SessionSpec::parse_many(&text).map_err(in_file(file))?;
            let mut cases = Vec::with_capacity(specs.len());
            for spec in specs {
                let spec = cli.override_spec(spec);
                let Some(check) = spec.check.clone() else {
                    return Err(in_file(file)(Error::usage(
                        "every corpus case needs check.ineq",
                    )));
                };
                let ring = spec.ring().map_err(in_file(file))?;
                let m = spec
                    .module(
                        &ring,
                        degree_cutoff(&spec, &ModulePresentation::residue_field(ring.clone())),
                    )
                    .map_err(in_file(file))?;
                cases.push(CorpusCase {
                    ring,
                    module: LabeledModule {
                        label: label(&spec),
                        module: m,
                    },
                    inequality: check.inequality,
                    params: check.params,
                    homological: homological(&spec),
                    degree: spec.cutoffs.d,
                });
            }
            let outcome = corpus_run(&cases, cli.inject_rhs)?;
            let text = match cli.format {
                Format::Text => {
                    let mut out = String::new();
                    for r in &outcome.reports {
                        out.push_str(&r.to_text());
                        out.push('\n');
                    }
                    out + &outcome.summary.to_text()
                }
                Format::Json => {
                    serde_json::to_string_pretty(&outcome).expect("serializable") + "\n"
                }
            };
            Ok(Output {
                text,
                code: outcome.summary.exit_code(cli.strict),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(f) => {
            eprintln!("syzrate: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
