//! Command-line surface for the two-diagonal group computations: counting
//! tables, descriptor listings, the exact character table, the model
//! assignment with its multiplicity report, and the verification harness.
//!
//! Exit codes: 0 success, 1 failed verification, 2 flag errors, 3 budget
//! exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tdorbit::cyclo::{CycInt, ExactRational};
use tdorbit::fq::FieldElement;
use tdorbit::group::GroupElement;
use tdorbit::partitions::{container_of_flock, flocks, FlockType};
use tdorbit::{Budget, Error};

#[derive(Parser)]
#[command(
    name = "tdorbit",
    version,
    about = "Exact coadjoint orbits, characters and models for two-diagonal groups over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker parallelism bound (default: TDORBIT_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Enumeration budget (elements per enumeration).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit counts by dimension and class counts by dimension.
    Counts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Coadjoint orbit descriptors.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// List every descriptor instead of the per-dimension summary.
        #[arg(long)]
        enumerate: bool,
    },
    /// Conjugacy class descriptors.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// List every class instead of the per-dimension summary.
        #[arg(long)]
        enumerate: bool,
    },
    /// Ordered partitions, their types, flocks and containers.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Group the compositions into flocks.
        #[arg(long)]
        flocks: bool,
        /// Show the container assigned to each flock.
        #[arg(long)]
        containers: bool,
    },
    /// Irreducible representations and their exact character table.
    Irreps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Emit the full character table (rows: irreducibles, columns: classes).
        #[arg(long = "char-table")]
        char_table: bool,
    },
    /// The model assignment and its multiplicity report.
    Model {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Run exact verification suites; exit 0 only if every check passes.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("TDORBIT_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(jobs) = jobs {
        tdorbit::par::configure_threads(jobs);
    }
    let budget = match cli.budget {
        Some(limit) => Budget::with_limit(limit),
        None => Budget::default(),
    };
    match run(&cli, &budget) {
        Ok(code) => code,
        Err(Error::BudgetExceeded(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn check_q(q: u32) -> tdorbit::Result<()> {
    if !tdorbit::fq::is_prime(q) {
        return Err(Error::OutOfRange(format!("q = {q} is not prime")));
    }
    Ok(())
}

fn run(cli: &Cli, budget: &Budget) -> tdorbit::Result<ExitCode> {
    let rendered = match &cli.command {
        Command::Counts { n, q } => {
            check_q(*q)?;
            counts_report(*n, *q, cli.format, budget)?
        }
        Command::Orbits { n, q, enumerate } => {
            check_q(*q)?;
            orbits_report(*n, *q, *enumerate, cli.format, budget)?
        }
        Command::Classes { n, q, enumerate } => {
            check_q(*q)?;
            classes_report(*n, *q, *enumerate, cli.format, budget)?
        }
        Command::Partitions {
            n,
            flocks,
            containers,
        } => partitions_report(*n, *flocks, *containers, cli.format)?,
        Command::Irreps { n, q, char_table } => {
            check_q(*q)?;
            irreps_report(*n, *q, *char_table, cli.format, budget)?
        }
        Command::Model { n, q } => {
            check_q(*q)?;
            model_report(*n, *q, cli.format, budget)?
        }
        Command::Verify { n, q, suite } => {
            check_q(*q)?;
            let reports = tdorbit::verify::run_suite(suite, *n, *q, budget)?;
            let mut lines = Vec::new();
            let mut all_ok = true;
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    all_ok &= c.passed;
                    if c.details.is_empty() {
                        lines.push(format!("[{status}] {}: {}", r.suite, c.name));
                    } else {
                        lines.push(format!(
                            "[{status}] {}: {} ({})",
                            r.suite, c.name, c.details
                        ));
                    }
                }
            }
            lines.push(if all_ok {
                format!("verify: all {} checks passed", lines.len())
            } else {
                "verify: FAILED".to_string()
            });
            emit(cli, lines.join("\n"))?;
            return Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    emit(cli, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(cli: &Cli, text: String) -> tdorbit::Result<()> {
    match &cli.out {
        None => {
            // tolerate a closed pipe (e.g. piping into head)
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(Error::OutOfRange(format!("cannot write to stdout: {e}")));
                }
            }
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| Error::OutOfRange(format!("cannot create {}: {e}", path.display())))?;
            writeln!(file, "{text}")
                .map_err(|e| Error::OutOfRange(format!("cannot write {}: {e}", path.display())))?;
            Ok(())
        }
    }
}

fn json_out(value: Value) -> String {
    serde_json::to_string_pretty(&value).expect("serializable")
}

fn fe_vec(v: &[FieldElement]) -> Value {
    Value::Array(v.iter().map(|e| json!(e.value())).collect())
}

fn cyc_value(c: &CycInt) -> Value {
    json!({ "p": c.modulus(), "coeffs": c.coeffs() })
}

fn rational_value(r: &ExactRational) -> Value {
    match r.as_i64_parts() {
        Some((num, den)) => json!({ "num": num, "den": den }),
        None => json!({ "num": r.numerator().to_string(), "den": r.denominator().to_string() }),
    }
}

fn element_label(g: &GroupElement) -> String {
    format!(
        "g({};{})",
        g.alpha
            .iter()
            .map(|e| e.value().to_string())
            .collect::<Vec<_>>()
            .join(","),
        g.beta
            .iter()
            .map(|e| e.value().to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn counts_report(n: usize, q: u32, format: Format, budget: &Budget) -> tdorbit::Result<String> {
    let orbit_census = tdorbit::orbits::census_by_dimension(n, q);
    for (k, &c) in orbit_census.iter().enumerate() {
        assert_eq!(tdorbit::orbits::count_by_dimension(n, q, k)?, c);
    }
    // recursion for the class table, cross-checked against the string sum
    let class_table = if n >= 2 {
        let rec = tdorbit::classes::count_classes_recursive(n, q);
        if (n as u64) < 24 {
            assert_eq!(
                rec,
                tdorbit::classes::count_classes_by_strings(n, q, budget)?
            );
        }
        rec
    } else {
        tdorbit::classes::count_classes_by_strings(n, q, budget)?
    };
    Ok(match format {
        Format::Json => {
            let mut orbits = Map::new();
            for (k, &c) in orbit_census.iter().enumerate() {
                orbits.insert((2 * k).to_string(), json!(c as u64));
            }
            let mut classes = Map::new();
            for (k, &c) in class_table.totals().iter().enumerate() {
                classes.insert(k.to_string(), json!(c as u64));
            }
            json_out(json!({ "classes": classes, "orbits": orbits }))
        }
        Format::Csv => {
            let mut lines = vec!["kind,dimension,count".to_string()];
            for (k, &c) in orbit_census.iter().enumerate() {
                lines.push(format!("orbits,{},{c}", 2 * k));
            }
            for (k, &c) in class_table.totals().iter().enumerate() {
                lines.push(format!("classes,{k},{c}"));
            }
            lines.join("\n")
        }
        Format::Table => {
            let mut lines = vec![format!("orbit and class counts for n = {n}, q = {q}")];
            lines.push(format!(
                "group order: {}",
                tdorbit::group::group_order(n, q)
            ));
            lines.push("orbits by dimension:".to_string());
            for (k, &c) in orbit_census.iter().enumerate() {
                lines.push(format!("  dim {:>2}: {c}", 2 * k));
            }
            lines.push("classes by dimension (a_1 = 0 | a_1 != 0 | total):".to_string());
            for k in 0..n {
                lines.push(format!(
                    "  dim {k:>2}: {} | {} | {}",
                    class_table.light[k],
                    class_table.heavy[k],
                    class_table.total(k)
                ));
            }
            lines.push(format!(
                "totals: {} orbits, {} classes",
                orbit_census.iter().sum::<u128>(),
                class_table.grand_total()
            ));
            lines.join("\n")
        }
    })
}

fn orbits_report(
    n: usize,
    q: u32,
    enumerate: bool,
    format: Format,
    budget: &Budget,
) -> tdorbit::Result<String> {
    if !enumerate {
        return counts_report(n, q, format, budget);
    }
    let descriptors = tdorbit::orbits::enumerate_descriptors(n, q, budget)?;
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = descriptors
                .iter()
                .map(|d| {
                    json!({
                        "dimension": d.dimension(),
                        "invariants": d.odd_invariants.iter()
                            .map(|(r, v)| json!({ "part": r, "value": v.value() }))
                            .collect::<Vec<_>>(),
                        "partition": d.partition.parts(),
                        "y": fe_vec(&d.y),
                    })
                })
                .collect();
            json_out(json!({ "count": descriptors.len(), "orbits": items }))
        }
        Format::Csv => {
            let mut lines = vec!["partition,y,invariants,dimension".to_string()];
            for d in &descriptors {
                lines.push(format!(
                    "{},{},{},{}",
                    d.partition
                        .parts()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join("+"),
                    d.y.iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    d.odd_invariants
                        .iter()
                        .map(|(r, v)| format!("v{r}={}", v.value()))
                        .collect::<Vec<_>>()
                        .join(";"),
                    d.dimension()
                ));
            }
            lines.join("\n")
        }
        Format::Table => {
            let mut lines = vec![format!(
                "{} coadjoint orbits for n = {n}, q = {q}",
                descriptors.len()
            )];
            for d in &descriptors {
                lines.push(format!(
                    "  partition {:?}  y = ({})  {}  dim {}",
                    d.partition,
                    d.y.iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    if d.odd_invariants.is_empty() {
                        "no invariants".to_string()
                    } else {
                        d.odd_invariants
                            .iter()
                            .map(|(r, v)| format!("v{r} = {}", v.value()))
                            .collect::<Vec<_>>()
                            .join(", ")
                    },
                    d.dimension()
                ));
            }
            lines.join("\n")
        }
    })
}

fn classes_report(
    n: usize,
    q: u32,
    enumerate: bool,
    format: Format,
    budget: &Budget,
) -> tdorbit::Result<String> {
    if !enumerate {
        return counts_report(n, q, format, budget);
    }
    let classes = tdorbit::classes::conjugacy_classes(n, q, budget)?;
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = classes
                .iter()
                .map(|c| {
                    json!({
                        "a": fe_vec(&c.descriptor.a),
                        "b_coset": fe_vec(&c.descriptor.b_coset),
                        "representative": element_label(&c.rep),
                        "size": c.size,
                    })
                })
                .collect();
            json_out(json!({ "classes": items, "count": classes.len() }))
        }
        Format::Csv => {
            let mut lines = vec!["a,b_coset,size".to_string()];
            for c in &classes {
                lines.push(format!(
                    "{},{},{}",
                    c.descriptor
                        .a
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    c.descriptor
                        .b_coset
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    c.size
                ));
            }
            lines.join("\n")
        }
        Format::Table => {
            let mut lines = vec![format!(
                "{} conjugacy classes for n = {n}, q = {q}",
                classes.len()
            )];
            for c in &classes {
                lines.push(format!("  {}  size {}", element_label(&c.rep), c.size));
            }
            lines.join("\n")
        }
    })
}

fn partitions_report(
    n: usize,
    show_flocks: bool,
    show_containers: bool,
    format: Format,
) -> tdorbit::Result<String> {
    if !show_flocks {
        let all = tdorbit::partitions::all_compositions(n);
        return Ok(match format {
            Format::Json => {
                let items: Vec<Value> = all
                    .iter()
                    .map(|p| {
                        json!({
                            "parts": p.parts(),
                            "type": format!("{:?}", tdorbit::partitions::type_of(p)).to_lowercase(),
                        })
                    })
                    .collect();
                json_out(json!({ "count": all.len(), "partitions": items }))
            }
            Format::Csv => {
                let mut lines = vec!["parts,type".to_string()];
                for p in &all {
                    lines.push(format!(
                        "{},{:?}",
                        p.parts()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join("+"),
                        tdorbit::partitions::type_of(p)
                    ));
                }
                lines.join("\n")
            }
            Format::Table => {
                let mut lines = vec![format!("{} ordered partitions of {n}", all.len())];
                for p in &all {
                    lines.push(format!(
                        "  {:?}  ({:?})",
                        p,
                        tdorbit::partitions::type_of(p)
                    ));
                }
                lines.join("\n")
            }
        });
    }

    let flock_entry = |f: &tdorbit::partitions::Flock| -> Value {
        let mut m = Map::new();
        m.insert("head".into(), json!(f.head.parts()));
        m.insert("tail".into(), json!(f.tail.parts()));
        m.insert(
            "members".into(),
            Value::Array(f.members().iter().map(|p| json!(p.parts())).collect()),
        );
        if show_containers {
            m.insert("container".into(), json!(container_of_flock(f).indices()));
        }
        Value::Object(m)
    };
    let odd = flocks(n, FlockType::Odd);
    let even = flocks(n, FlockType::Even);
    Ok(match format {
        Format::Json => json_out(json!({
            "even": even.iter().map(flock_entry).collect::<Vec<_>>(),
            "odd": odd.iter().map(flock_entry).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut lines = vec!["type,head,tail,members,container".to_string()];
            for (ty, fs) in [("odd", &odd), ("even", &even)] {
                for f in fs.iter() {
                    lines.push(format!(
                        "{ty},{},{},{},{}",
                        f.head.to_string_compact(),
                        f.tail.to_string_compact(),
                        f.members()
                            .iter()
                            .map(|p| p.to_string_compact())
                            .collect::<Vec<_>>()
                            .join(";"),
                        if show_containers {
                            format!("{:?}", container_of_flock(f))
                        } else {
                            String::new()
                        }
                    ));
                }
            }
            lines.join("\n")
        }
        Format::Table => {
            let mut lines = vec![format!(
                "{} odd-type + {} even-type flocks for n = {n}",
                odd.len(),
                even.len()
            )];
            for (ty, fs) in [("odd", &odd), ("even", &even)] {
                lines.push(format!("{ty} type:"));
                for f in fs.iter() {
                    let members = f
                        .members()
                        .iter()
                        .map(|p| p.to_string_compact())
                        .collect::<Vec<_>>()
                        .join(", ");
                    if show_containers {
                        lines.push(format!("  [{members}]  ->  {:?}", container_of_flock(f)));
                    } else {
                        lines.push(format!(
                            "  head {:?}, tail {:?}: [{members}]",
                            f.head, f.tail
                        ));
                    }
                }
            }
            lines.join("\n")
        }
    })
}

fn irreps_report(
    n: usize,
    q: u32,
    char_table: bool,
    format: Format,
    budget: &Budget,
) -> tdorbit::Result<String> {
    let table = tdorbit::reps::character_table(n, q, budget)?;
    let descriptor_value = |d: &tdorbit::orbits::OrbitDescriptor| -> Value {
        json!({
            "dimension": qpow_u64(q, d.k()),
            "invariants": d.odd_invariants.iter()
                .map(|(r, v)| json!({ "part": r, "value": v.value() }))
                .collect::<Vec<_>>(),
            "partition": d.partition.parts(),
            "y": fe_vec(&d.y),
        })
    };
    Ok(match format {
        Format::Json => {
            let mut root = Map::new();
            root.insert(
                "classes".into(),
                Value::Array(
                    table
                        .classes
                        .iter()
                        .map(|c| json!({ "representative": element_label(&c.rep), "size": c.size }))
                        .collect(),
                ),
            );
            root.insert(
                "irreps".into(),
                Value::Array(
                    table
                        .irreps
                        .iter()
                        .enumerate()
                        .map(|(i, d)| {
                            let mut m = descriptor_value(d);
                            if char_table {
                                m.as_object_mut().unwrap().insert(
                                    "values".into(),
                                    Value::Array(table.values[i].iter().map(cyc_value).collect()),
                                );
                            }
                            m
                        })
                        .collect(),
                ),
            );
            json_out(Value::Object(root))
        }
        Format::Csv => {
            if char_table {
                let mut lines = vec!["irrep,class,coeffs".to_string()];
                for (i, row) in table.values.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        lines.push(format!(
                            "{i},{c},{}",
                            v.coeffs()
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(";")
                        ));
                    }
                }
                lines.join("\n")
            } else {
                let mut lines = vec!["irrep,partition,dimension".to_string()];
                for (i, d) in table.irreps.iter().enumerate() {
                    lines.push(format!(
                        "{i},{},{}",
                        d.partition
                            .parts()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join("+"),
                        qpow_u64(q, d.k())
                    ));
                }
                lines.join("\n")
            }
        }
        Format::Table => {
            let mut lines = vec![format!(
                "{} irreducible representations for n = {n}, q = {q} ({} classes)",
                table.irreps.len(),
                table.classes.len()
            )];
            for (i, d) in table.irreps.iter().enumerate() {
                lines.push(format!(
                    "  chi_{i}: partition {:?}, y = ({}), dim {}",
                    d.partition,
                    d.y.iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    qpow_u64(q, d.k())
                ));
                if char_table {
                    let row = table.values[i]
                        .iter()
                        .map(|v| format!("{v}"))
                        .collect::<Vec<_>>()
                        .join(" | ");
                    lines.push(format!("    values: {row}"));
                }
            }
            lines.join("\n")
        }
    })
}

fn qpow_u64(q: u32, k: usize) -> u64 {
    tdorbit::qpow(q, k as u32) as u64
}

fn model_report(n: usize, q: u32, format: Format, budget: &Budget) -> tdorbit::Result<String> {
    let (table, values, assignment) = tdorbit::verify::model_values_for_cli(n, q, budget)?;
    let multiplicities = tdorbit::model::multiplicities_against_table(&values, &table)?;
    let all_one = multiplicities.iter().all(|m| m.is_one());
    Ok(match format {
        Format::Json => {
            let assignments: Vec<Value> = assignment
                .assignments
                .iter()
                .map(|a| {
                    let cont = &assignment.containers[a.container];
                    json!({
                        "a_coeffs": fe_vec(&a.chi.a_coeffs),
                        "b_coeffs": fe_vec(&a.chi.b_coeffs),
                        "class_rep": element_label(&cont.classes[a.class].rep),
                        "container": cont.seq.indices(),
                    })
                })
                .collect();
            let mults: Vec<Value> = multiplicities.iter().map(rational_value).collect();
            json_out(json!({
                "assignments": assignments,
                "model": all_one,
                "multiplicities": mults,
            }))
        }
        Format::Csv => {
            let mut lines = vec!["container,class_rep,a_coeffs,b_coeffs".to_string()];
            for a in &assignment.assignments {
                let cont = &assignment.containers[a.container];
                lines.push(format!(
                    "{},{},{},{}",
                    cont.seq
                        .indices()
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    element_label(&cont.classes[a.class].rep),
                    a.chi
                        .a_coeffs
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    a.chi
                        .b_coeffs
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                ));
            }
            lines.push(format!("multiplicity_one,{all_one},,"));
            lines.join("\n")
        }
        Format::Table => {
            let mut lines = vec![format!(
                "model for n = {n}, q = {q}: {} induced characters over {} containers",
                assignment.assignments.len(),
                assignment.containers.len()
            )];
            for a in &assignment.assignments {
                let cont = &assignment.containers[a.container];
                lines.push(format!(
                    "  {:?}  class {}  A = ({})  B = ({})",
                    cont.seq,
                    element_label(&cont.classes[a.class].rep),
                    a.chi
                        .a_coeffs
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    a.chi
                        .b_coeffs
                        .iter()
                        .map(|e| e.value().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                ));
            }
            lines.push(format!(
                "multiplicities: {}",
                multiplicities
                    .iter()
                    .map(|m| format!("{m}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            lines.push(if all_one {
                "every irreducible appears exactly once".to_string()
            } else {
                "NOT multiplicity-one".to_string()
            });
            lines.join("\n")
        }
    })
}
