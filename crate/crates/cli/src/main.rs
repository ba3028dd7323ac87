use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seminormal_core::bench::{bench_fat_hook, default_fat_hooks, BenchRow};
use seminormal_core::hecke::MurphyOracle;
use seminormal_core::json::{expansion_doc, to_json, BaseChangeDoc, ExpansionDoc, MatrixDoc};
use seminormal_core::modular::{verify_submodule_fn, verify_submodule_tleq, SubmoduleReport};
use seminormal_core::seminormal::{base_change, Method};
use seminormal_core::specht::{gram_matrix, invariant_gram_matrix, oracle_gram_matrix};
use seminormal_core::tableaux::{Node, Partition, Tableau};
use seminormal_core::verify::{run_suite, Suite, SuiteReport};

#[derive(Parser)]
#[command(name = "seminormal", version, about = "Seminormal bases of Specht modules for Hecke algebras of type A")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 2024, global = true)]
    seed: u64,
    /// Progress messages on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Expand f_t in the standard basis.
    Expand(ExpandArgs),
    /// The matrix M with f = M e, its inverse and the norms.
    Basechange(ShapeMethodArgs),
    /// Gram matrix of the bilinear form in the standard basis.
    Gram(GramArgs),
    /// Run consistency suites over all shapes up to a size.
    Verify(VerifyArgs),
    /// Submodules of restricted Specht modules at a root of unity.
    Modular(ModularArgs),
    /// Term counts and timings of the stepwise and fat hook constructions.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    shape: Partition,
    /// Rows joined by `/`, e.g. 1,2,7/3,4/5,6.
    #[arg(long)]
    tableau: Tableau,
    #[arg(long, default_value = "fast")]
    method: Method,
}

#[derive(Args)]
struct ShapeMethodArgs {
    #[arg(long)]
    shape: Partition,
    #[arg(long, default_value = "fast")]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GramSource {
    /// From the seminormal basis.
    Seminormal,
    /// From the definition inside the Specht module.
    Definition,
    /// From the Murphy basis of the Hecke algebra (n <= 5).
    Oracle,
}

#[derive(Args)]
struct GramArgs {
    #[arg(long)]
    shape: Partition,
    #[arg(long, value_enum, default_value_t = GramSource::Seminormal)]
    source: GramSource,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Args)]
struct ModularArgs {
    #[arg(long)]
    shape: Partition,
    /// Order of the root of unity.
    #[arg(long)]
    e: u32,
    /// Removable node `r,c` generating `f_n`; all removable nodes by default.
    #[arg(long)]
    node: Option<Node>,
    /// Standard tableau for the submodule generated by `f_{t<=}`.
    #[arg(long, requires = "r")]
    tableau: Option<Tableau>,
    /// The `r` of `t<=`, between 2 and n.
    #[arg(long, requires = "tableau")]
    r: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// A fat hook; defaults to lambda_2, k_2 in {2,3} with lambda_1 = lambda_2 + 1.
    #[arg(long)]
    shape: Vec<Partition>,
    /// Timings are the best of this many runs.
    #[arg(long, default_value_t = 5)]
    repeat: usize,
}

struct Output {
    format: Format,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, body: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                Ok(())
            }
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Result<()> {
        let mut s = to_json(value)?;
        s.push('\n');
        self.emit(&s)
    }

    fn no_csv(&self, command: &str) -> Result<()> {
        ensure!(self.format != Format::Csv, "`{command}` has no csv output");
        Ok(())
    }
}

fn csv_string<F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>>(f: F) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["shape", "method", "terms", "millis"])?;
    f(&mut w)?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    let out = Output { format: cli.format, out: cli.out.clone() };
    match &cli.command {
        Command::Expand(a) => expand(&out, a),
        Command::Basechange(a) => basechange(&out, a),
        Command::Gram(a) => gram(&out, a),
        Command::Verify(a) => verify(&out, a, cli.seed, cli.verbose),
        Command::Modular(a) => modular(&out, a),
        Command::Bench(a) => bench(&out, a, cli.verbose),
    }
}

fn expand(out: &Output, a: &ExpandArgs) -> Result<ExitCode> {
    ensure!(a.tableau.shape() == &a.shape, "tableau {} has shape {}, not {}", a.tableau, a.tableau.shape(), a.shape);
    if let Some(why) = a.tableau.standardness_violation() {
        bail!("tableau {} is not standard: {why}", a.tableau);
    }
    let start = Instant::now();
    let doc = expansion_doc(&a.tableau, a.method)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    match out.format {
        Format::Json => out.json(&doc)?,
        Format::Text => out.emit(&expansion_text(&doc))?,
        Format::Csv => out.emit(&csv_string(|w| {
            w.serialize((doc.shape.to_string(), &doc.method, doc.terms.len(), format!("{millis:.3}")))?;
            Ok(())
        })?)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn expansion_text(doc: &ExpansionDoc) -> String {
    let mut s = format!("f[{}] ({}), {} terms\n", doc.tableau, doc.method, doc.terms.len());
    for t in &doc.terms {
        s += &format!("  {}  e[{}]\n", t.coeff, t.tableau);
    }
    let lcm: Vec<String> = doc.denominators.lcm.iter().map(|(d, m)| if *m == 1 { format!("Phi_{d}") } else { format!("Phi_{d}^{m}") }).collect();
    s += &format!("denominator lcm: {}\n", if lcm.is_empty() { "1".into() } else { lcm.join(" ") });
    s += &format!("predicted r: {:?}, divides: {}\n", doc.denominators.predicted_r, doc.denominators.divides);
    for p in &doc.factors {
        s += &format!("P_{} (r = {:?}):\n", p.i, p.r);
        for x in &p.factors {
            s += &format!("  {x}\n");
        }
    }
    s
}

fn matrix_text(title: &str, order: &[Tableau], m: &[Vec<seminormal_core::qcoeff::RationalFunction>]) -> String {
    let mut s = format!("{title}\n");
    for (t, row) in order.iter().zip(m) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        s += &format!("  [{t}]  {}\n", cells.join("  "));
    }
    s
}

fn basechange(out: &Output, a: &ShapeMethodArgs) -> Result<ExitCode> {
    out.no_csv("basechange")?;
    let bc = base_change(&a.shape, a.method)?;
    match out.format {
        Format::Text => {
            let mut s = matrix_text("M", &bc.order, &bc.m);
            s += &matrix_text("Minv", &bc.order, &bc.minv);
            s += "gamma\n";
            for (t, g) in bc.order.iter().zip(&bc.gammas) {
                s += &format!("  [{t}]  {g}\n");
            }
            out.emit(&s)?;
        }
        _ => out.json(&BaseChangeDoc::new(&bc, a.method))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn gram(out: &Output, a: &GramArgs) -> Result<ExitCode> {
    out.no_csv("gram")?;
    let g = match a.source {
        GramSource::Seminormal => gram_matrix(&a.shape)?,
        GramSource::Definition => invariant_gram_matrix(&a.shape)?,
        GramSource::Oracle => oracle_gram_matrix(&a.shape, &MurphyOracle::new(a.shape.n())?)?,
    };
    match out.format {
        Format::Text => out.emit(&matrix_text("Gram", &g.order, &g.entries))?,
        _ => out.json(&MatrixDoc::from(&g))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(out: &Output, a: &VerifyArgs, seed: u64, verbose: bool) -> Result<ExitCode> {
    out.no_csv("verify")?;
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        let start = Instant::now();
        let r = run_suite(s, a.max_n, seed)?;
        if verbose {
            eprintln!("{s}: {} checks in {:.1?}", r.checks, start.elapsed());
        }
        reports.push(r);
    }
    let ok = reports.iter().all(SuiteReport::passed);
    match out.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                s += &format!("{status} {} (n <= {}): {} checks, {} failures\n", r.suite, r.max_n, r.checks, r.failures.len());
                for f in r.failures.iter().take(10) {
                    s += &format!("    {f}\n");
                }
            }
            out.emit(&s)?;
        }
        _ => out.json(&reports)?,
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn modular(out: &Output, a: &ModularArgs) -> Result<ExitCode> {
    out.no_csv("modular")?;
    let reports: Vec<SubmoduleReport> = if let (Some(t), Some(r)) = (&a.tableau, a.r) {
        ensure!(t.shape() == &a.shape, "tableau {t} does not have shape {}", a.shape);
        vec![verify_submodule_tleq(t, r, a.e)?]
    } else {
        let nodes = a.shape.removable_nodes();
        let picked: Vec<usize> = match a.node {
            Some(node) => {
                let j = nodes.iter().position(|&x| x == node).with_context(|| format!("{node} is not a removable node of {}", a.shape))?;
                vec![j + 1]
            }
            None => (1..=nodes.len()).collect(),
        };
        picked.into_iter().map(|j| verify_submodule_fn(&a.shape, j, a.e)).collect::<seminormal_core::Result<_>>()?
    };
    match out.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let hyp: Vec<String> = r.hypothesis.iter().map(|h| format!("[{}]{}0", h.r, if h.nonzero { "!=" } else { "=" })).collect();
                s += &format!(
                    "{} node {} e={}: hypothesis {} pole-free {} generators {} verdict {}\n",
                    r.shape,
                    r.node,
                    r.e,
                    if hyp.is_empty() { "none".into() } else { hyp.join(",") },
                    r.pole_free,
                    r.generators_checked,
                    serde_json::to_value(r.verdict)?.as_str().unwrap_or_default()
                );
            }
            out.emit(&s)?;
        }
        _ => out.json(&reports)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(out: &Output, a: &BenchArgs, verbose: bool) -> Result<ExitCode> {
    let shapes = if a.shape.is_empty() { default_fat_hooks() } else { a.shape.clone() };
    let mut rows: Vec<BenchRow> = Vec::new();
    for s in &shapes {
        let row = bench_fat_hook(s, a.repeat)?;
        if verbose {
            eprintln!("{s}: stepwise {:.3} ms, fast {:.3} ms", row.stepwise_time, row.fast_time);
        }
        rows.push(row);
    }
    match out.format {
        Format::Json => out.json(&rows)?,
        Format::Csv => out.emit(&csv_string(|w| {
            for r in &rows {
                w.serialize((r.shape.to_string(), "stepwise", r.stepwise_terms, format!("{:.3}", r.stepwise_time)))?;
                w.serialize((r.shape.to_string(), "fast", r.fast_terms, format!("{:.3}", r.fast_time)))?;
            }
            Ok(())
        })?)?,
        Format::Text => {
            let mut s = String::from("lambda1 lambda2 k2 stepwise_terms fast_terms stepwise_time fast_time\n");
            for r in &rows {
                s += &format!(
                    "{} {} {} {} {} {:.3} {:.3}\n",
                    r.lambda1, r.lambda2, r.k2, r.stepwise_terms, r.fast_terms, r.stepwise_time, r.fast_time
                );
            }
            out.emit(&s)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
