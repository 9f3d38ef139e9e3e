//! Command-line front end: enumeration, traces, orbit reports, genomic
//! tableaux, verification suites and the extremal families.
//!
//! Exit codes: 0 success, 1 usage or malformed input, 2 verification
//! failure (a disagreement or a flagged finding), 3 internal invariant
//! violation.

use clap::{Args, Parser, Subcommand, ValueEnum};

use schubert_core::localesh::{local_esh, render_trace};
use schubert_core::monodromy::{
    enumerate_lr_after_limited, enumerate_lr_limited, orbit_bound_report,
    orbit_decomposition_limited, verify_components, verify_staircase, ProblemInstance,
};
use schubert_core::verify::{check_instance, sample_instances};
use schubert_core::{
    enumerate_genomic_limited, esh_via_rectification, Error, Partition, PuncturedTableau,
    Rectangle,
};

const SCHEMA_VERSION: u32 = 1;
const OUTPUT_ENV: &str = "SCHUBERT_OUTPUT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    about = "Combinatorics of Schubert curves: shuffling algorithms, orbits and genomic tableaux",
    version
)]
struct Cli {
    /// Output format; defaults to the SCHUBERT_OUTPUT environment variable,
    /// then to the table form.
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,

    /// Refuse computations whose enumerations exceed this many elements.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// First partition, comma-separated ("6,5,3,1"); "-" for empty.
    #[arg(long)]
    alpha: String,
    /// Content partition.
    #[arg(long)]
    beta: String,
    /// Third partition.
    #[arg(long)]
    gamma: String,
    /// Ambient rectangle, rows x columns ("6x8").
    #[arg(long)]
    rect: String,
}

impl InstanceArgs {
    fn build(&self) -> Result<ProblemInstance, Error> {
        ProblemInstance::new(
            self.alpha.parse()?,
            self.beta.parse()?,
            self.gamma.parse()?,
            self.rect.parse()?,
        )
    }
}

#[derive(Debug, Args)]
struct TableauArgs {
    /// Ambient rectangle, rows x columns.
    #[arg(long)]
    rect: String,
    /// Marked tableau in row notation, "X" for the empty cell
    /// (e.g. "..X11/..122/..3/..4/23").
    #[arg(long)]
    tableau: String,
}

impl TableauArgs {
    /// Parses the tableau and derives its instance from the rectangle.
    fn build(&self) -> Result<(ProblemInstance, PuncturedTableau), Error> {
        let rect: Rectangle = self.rect.parse()?;
        let p: PuncturedTableau = self.tableau.parse()?;
        if !p.is_lr_start() {
            return Err(Error::InvalidInput(format!(
                "tableau is not in LR(alpha, box, beta, gamma): {p}"
            )));
        }
        let outer = p.shape().outer().clone();
        if !outer.fits(&rect) {
            return Err(Error::InvalidProblem(format!(
                "tableau shape {outer} does not fit in {rect}"
            )));
        }
        let alpha = p.shape().inner().clone();
        let beta = Partition::new(p.content())
            .map_err(|_| Error::InvalidInput("content is not a partition".into()))?;
        let gamma = outer.complement(&rect)?;
        Ok((ProblemInstance::new(alpha, beta, gamma, rect)?, p))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print both marked fibers of an instance.
    Chains(InstanceArgs),
    /// Print the step-by-step trace of local evacuation-shuffling.
    Trace(TableauArgs),
    /// Run both evacuation-shuffle routes and compare them.
    Esh {
        /// First partition (with --beta and --gamma, checks the whole fiber).
        #[arg(long)]
        alpha: Option<String>,
        /// Content partition.
        #[arg(long)]
        beta: Option<String>,
        /// Third partition.
        #[arg(long)]
        gamma: Option<String>,
        /// Ambient rectangle, rows x columns.
        #[arg(long)]
        rect: String,
        /// Single element to check instead of the whole fiber.
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Print the orbit report of the monodromy operator.
    Orbits(InstanceArgs),
    /// Alias of `orbits`.
    Omega(InstanceArgs),
    /// Print the genomic tableaux grouped by extra entry.
    Genomic(InstanceArgs),
    /// Run the relation suites on one instance or a seeded sweep.
    Verify {
        /// First partition of a single instance.
        #[arg(long)]
        alpha: Option<String>,
        /// Content partition of a single instance.
        #[arg(long)]
        beta: Option<String>,
        /// Third partition of a single instance.
        #[arg(long)]
        gamma: Option<String>,
        /// Rectangle (required; with --sweep, the box to sample in).
        #[arg(long)]
        rect: String,
        /// Sample this many instances instead of giving one explicitly.
        #[arg(long)]
        sweep: Option<usize>,
        /// Seed for the sweep sample.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Build and verify one of the parameterized families.
    Family {
        #[command(subcommand)]
        which: FamilyKind,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyKind {
    /// Staircase-ribbon instances: a single orbit of known genus.
    Staircase {
        #[arg(long)]
        t: usize,
    },
    /// Split instances: the identity on t-1 elements with no genomic tableaux.
    Components {
        #[arg(long)]
        t: usize,
    },
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => {
            let format = cli.output.unwrap_or_else(|| {
                match std::env::var(OUTPUT_ENV).ok().as_deref() {
                    Some("structured") => OutputFormat::Structured,
                    _ => OutputFormat::Table,
                }
            });
            match dispatch(cli.command, format, cli.limit) {
                Ok(code) => code,
                Err(err) => {
                    eprintln!("error: {err}");
                    exit_code(&err)
                }
            }
        }
        Err(err) => {
            // clap handles --help/--version as "errors" with zero meaning
            let kind = err.kind();
            let _ = err.print();
            if kind == clap::error::ErrorKind::DisplayHelp
                || kind == clap::error::ErrorKind::DisplayVersion
            {
                0
            } else {
                1
            }
        }
    };
    std::process::exit(code);
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvariantViolation(_) => 3,
        _ => 1,
    }
}

fn emit(format: OutputFormat, table: String, doc: serde_json::Value) {
    match format {
        OutputFormat::Table => print!("{table}"),
        OutputFormat::Structured => {
            println!("{}", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn dispatch(command: Command, format: OutputFormat, limit: usize) -> Result<i32, Error> {
    let limit = Some(limit);
    match command {
        Command::Chains(args) => {
            let instance = args.build()?;
            let before = enumerate_lr_limited(&instance, limit)?;
            let after = enumerate_lr_after_limited(&instance, limit)?;
            let mut table = format!("LR(alpha, box, beta, gamma): {} elements\n", before.len());
            for p in &before {
                table.push_str(&format!("{p}\n"));
            }
            table.push_str(&format!(
                "LR(alpha, beta, box, gamma): {} elements\n",
                after.len()
            ));
            for p in &after {
                table.push_str(&format!("{p}\n"));
            }
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "chains",
                "instance": instance_doc(&instance),
                "before": before.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "after": after.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            emit(format, table, doc);
            Ok(0)
        }
        Command::Trace(args) => {
            let (instance, p) = args.build()?;
            let (out, path) = local_esh(&p)?;
            let table = render_trace(&p, &path)?;
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "trace",
                "instance": instance_doc(&instance),
                "input": p.to_string(),
                "output": out.to_string(),
                "transition_step": path.transition_step,
                "steps": path.steps.iter().map(|s| serde_json::json!({
                    "kind": format!("{:?}", s.kind),
                    "value": s.value,
                    "from": [s.from.row, s.from.col],
                    "to": [s.to.row, s.to.col],
                })).collect::<Vec<_>>(),
            });
            emit(format, table, doc);
            Ok(0)
        }
        Command::Esh {
            alpha,
            beta,
            gamma,
            rect,
            tableau,
        } => {
            let (instance, elements) = match (alpha, beta, gamma, tableau) {
                (None, None, None, Some(t)) => {
                    let (instance, p) = TableauArgs { rect, tableau: t }.build()?;
                    (instance, vec![p])
                }
                (Some(a), Some(b), Some(g), None) => {
                    let instance = InstanceArgs {
                        alpha: a,
                        beta: b,
                        gamma: g,
                        rect,
                    }
                    .build()?;
                    let elements = enumerate_lr_limited(&instance, limit)?;
                    (instance, elements)
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "give either --tableau or --alpha/--beta/--gamma".into(),
                    ))
                }
            };
            let mut table = String::new();
            let mut rows = Vec::new();
            let mut disagreements = 0usize;
            for p in &elements {
                let (local, _) = local_esh(p)?;
                let rectified = esh_via_rectification(p)?;
                let agree = local == rectified;
                if !agree {
                    disagreements += 1;
                }
                table.push_str(&format!(
                    "{p}\n  local:     {local}\n  rectified: {rectified}\n  agree: {agree}\n"
                ));
                rows.push(serde_json::json!({
                    "input": p.to_string(),
                    "local": local.to_string(),
                    "rectified": rectified.to_string(),
                    "agree": agree,
                }));
            }
            table.push_str(&format!(
                "checked {} elements, {} disagreements\n",
                elements.len(),
                disagreements
            ));
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "esh",
                "instance": instance_doc(&instance),
                "elements": rows,
                "disagreements": disagreements,
            });
            emit(format, table, doc);
            Ok(if disagreements == 0 { 0 } else { 2 })
        }
        Command::Orbits(args) | Command::Omega(args) => {
            let instance = args.build()?;
            let report = orbit_decomposition_limited(&instance, limit)?;
            let mut doc = report.to_json();
            doc["schema"] = serde_json::json!(SCHEMA_VERSION);
            doc["command"] = serde_json::json!("orbits");
            emit(format, report.render_table(), doc);
            Ok(0)
        }
        Command::Genomic(args) => {
            let instance = args.build()?;
            let set = enumerate_genomic_limited(&instance, limit)?;
            let mut table = format!("K(gamma^c/alpha; beta): {} tableaux\n", set.total());
            let mut groups = Vec::new();
            for (i, tabs) in set.groups() {
                table.push_str(&format!("extra entry {i}: {}\n", tabs.len()));
                for g in tabs {
                    table.push_str(&format!("{g}\n"));
                }
                groups.push(serde_json::json!({
                    "extra": i,
                    "tableaux": tabs.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                }));
            }
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "genomic",
                "instance": instance_doc(&instance),
                "total": set.total(),
                "groups": groups,
            });
            emit(format, table, doc);
            Ok(0)
        }
        Command::Verify {
            alpha,
            beta,
            gamma,
            rect,
            sweep,
            seed,
        } => {
            let rect: Rectangle = rect.parse()?;
            let instances = match (alpha, beta, gamma, sweep) {
                (Some(a), Some(b), Some(g), None) => {
                    vec![ProblemInstance::new(
                        a.parse()?,
                        b.parse()?,
                        g.parse()?,
                        rect,
                    )?]
                }
                (None, None, None, Some(count)) => sample_instances(&rect, seed, count),
                _ => {
                    return Err(Error::InvalidInput(
                        "give either --alpha/--beta/--gamma or --sweep N".into(),
                    ))
                }
            };
            let mut table = String::new();
            let mut rows = Vec::new();
            let mut violations = 0usize;
            for instance in &instances {
                let check = check_instance(instance)?;
                violations += check.bound_violations;
                table.push_str(&format!(
                    "{instance}: lr={} k={} route-agreement={} orbit-bound-violations={}\n",
                    check.lr_count,
                    check.k_count,
                    if check.esh_disagreements == 0 { "ok" } else { "FAILED" },
                    check.bound_violations,
                ));
                rows.push(serde_json::json!({
                    "instance": instance_doc(instance),
                    "lr_count": check.lr_count,
                    "k_count": check.k_count,
                    "esh_disagreements": check.esh_disagreements,
                    "bound_violations": check.bound_violations,
                }));
                if check.esh_disagreements > 0 {
                    return Ok(2);
                }
            }
            table.push_str(&format!(
                "verified {} instances; orbit-bound violations: {violations}\n",
                instances.len()
            ));
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "verify",
                "instances": rows,
                "bound_violations": violations,
            });
            emit(format, table, doc);
            Ok(if violations == 0 { 0 } else { 2 })
        }
        Command::Family { which } => match which {
            FamilyKind::Staircase { t } => {
                let r = verify_staircase(t)?;
                let bounds = orbit_bound_report(&r.report);
                let ok = bounds.iter().all(|b| b.phase1_ok && b.phase2_ok);
                let table = format!(
                    "staircase t={t}: one orbit on {} elements; k_count={}; chi={} (genus {})\n",
                    r.report.lr_count, r.report.k_count, r.report.chi, r.genus
                );
                let mut doc = r.report.to_json();
                doc["schema"] = serde_json::json!(SCHEMA_VERSION);
                doc["command"] = serde_json::json!("family staircase");
                doc["t"] = serde_json::json!(t);
                doc["genus"] = serde_json::json!(r.genus);
                emit(format, table, doc);
                Ok(if ok { 0 } else { 2 })
            }
            FamilyKind::Components { t } => {
                let r = verify_components(t)?;
                let plural = if r.elements == 1 { "" } else { "s" };
                let table = format!(
                    "components t={t}: omega = identity on {} element{plural}; K = empty\n",
                    r.elements
                );
                let doc = serde_json::json!({
                    "schema": SCHEMA_VERSION,
                    "command": "family components",
                    "t": t,
                    "elements": r.elements,
                    "k_count": r.k_count,
                });
                emit(format, table, doc);
                Ok(0)
            }
        },
    }
}

fn instance_doc(instance: &ProblemInstance) -> serde_json::Value {
    serde_json::json!({
        "alpha": instance.alpha().to_string(),
        "beta": instance.beta().to_string(),
        "gamma": instance.gamma().to_string(),
        "rect": instance.rect().to_string(),
    })
}
