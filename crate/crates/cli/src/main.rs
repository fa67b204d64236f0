//! `theta`: deciders, generators, unfold/fold and verification tasks.
//!
//! Exit codes: 0 success or pass, 1 violations found (or a graph fails
//! `check free`), 2 usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use theta_core::codec::{parse_graphs, to_edge_list};
use theta_core::families::{
    gen_brousek, gen_catalog, gen_chain, gen_g, gen_g6_rows, gen_h, gen_link, Catalog, ChainSpec, HFamilySpec,
    LinkClass,
};
use theta_core::forbidden::{find_forbidden, parse_forbidden_list};
use theta_core::hamilton::hamilton_cycle;
use theta_core::harness::{encode_graph, run_verification, Task, TaskParams};
use theta_core::metrics::structural_metrics;
use theta_core::multigraph::{parse_multigraph, AnyMultiGraph, EdgeMultiset};
use theta_core::theta::spanning_theta;
use theta_core::unfold::{
    fold, fold_semi, parse_colored, parse_link_specs, unfold, unfold_semi, Color, ColoredGraph, ColoredLink,
    LinkAssignment, PureLinkSpec,
};

#[derive(Parser)]
#[command(name = "theta", version, about = "Spanning theta subgraphs, unfoldments and verification tasks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a decider on every graph in FILE (edge list or graph6 lines).
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        file: PathBuf,
        /// Comma-separated forbidden graphs for `free`, e.g. "K1,3 B1,5".
        #[arg(long)]
        forbid: Option<String>,
    },
    /// Generate a named graph or multigraph.
    Gen(GenArgs),
    /// Unfold a multigraph file into a coloured graph or link.
    Unfold {
        file: PathBuf,
        /// Link shape per edge, e.g. "t,p2,t". Defaults to all triangles.
        #[arg(long)]
        links: Option<String>,
        /// For semi-loopless input: also join the two link ends.
        #[arg(long)]
        end_edge: bool,
    },
    /// Fold a coloured graph or link back into its multigraph.
    Fold { file: PathBuf },
    /// Run a verification task and print its JSON-lines report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Theta,
    Hamilton,
    Free,
    Metrics,
}

#[derive(Args)]
struct GenArgs {
    /// H1..H7, G1..G9, M1..M7, N1, N2, L1..L3, brousek or chain.
    #[arg(long)]
    family: String,
    /// Pure-link shapes, e.g. "t,t,p3,t".
    #[arg(long)]
    links: Option<String>,
    /// Chain for H5..H7 or `chain`, e.g. "B(0,0)" or "T(3) B(1,1)".
    #[arg(long)]
    chain: Option<String>,
    /// Parameter k for G families; "k1,k2,k3" for brousek.
    #[arg(long)]
    k: Option<String>,
    /// Row sizes b,c,d for G6.
    #[arg(long)]
    rows: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    task: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_mult: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    forbid: Option<String>,
    #[arg(long)]
    k_extra: Option<usize>,
    /// TOML file with any of the parameter keys; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also write the report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Writes to stdout; a closed pipe (`| head`) ends the program quietly.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r?),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().with_context(|| format!("not a number: {t:?}"))).collect()
}

fn check(what: CheckKind, file: &Path, forbid: Option<&str>) -> Result<u8> {
    let graphs = parse_graphs(&read(file)?)?;
    let specs = match (what, forbid) {
        (CheckKind::Free, Some(list)) => parse_forbidden_list(list)?,
        (CheckKind::Free, None) => bail!("`check free` needs --forbid"),
        _ => Vec::new(),
    };
    let mut code = 0;
    for g in &graphs {
        let id = encode_graph(g);
        let record = match what {
            CheckKind::Theta if g.n() < 4 => json!({"graph": id, "theta": null}),
            CheckKind::Theta => match spanning_theta(g)? {
                Some(c) => json!({"graph": id, "theta": c.serialize(), "branch": [c.u, c.v], "paths": c.paths}),
                None => json!({"graph": id, "theta": null}),
            },
            CheckKind::Hamilton => json!({"graph": id, "hamilton_cycle": hamilton_cycle(g)?}),
            CheckKind::Free => {
                let mut hits = BTreeMap::new();
                for s in &specs {
                    if let Some(e) = find_forbidden(g, *s)? {
                        hits.insert(s.to_string(), e.map);
                    }
                }
                if !hits.is_empty() {
                    code = 1;
                }
                json!({"graph": id, "free": hits.is_empty(), "induced": hits})
            }
            CheckKind::Metrics => json!({"graph": id, "metrics": structural_metrics(g)}),
        };
        emit(&format!("{record}\n"))?;
    }
    Ok(code)
}

fn labeled_text(g: &theta_core::SimpleGraph, labels: &BTreeMap<String, usize>, colors: Option<&[Color]>) -> String {
    let mut out = String::new();
    if let Some(c) = colors {
        out.push_str(&format!("colors: {}\n", c.iter().map(|c| c.code()).collect::<String>()));
    }
    out.push_str(&to_edge_list(g, Some(labels)));
    out
}

fn gen(args: &GenArgs) -> Result<String> {
    let family = args.family.trim();
    let upper = family.to_ascii_uppercase();
    let links = args.links.as_deref().map(parse_link_specs).transpose()?;
    let chain = args.chain.as_deref().map(str::parse::<ChainSpec>).transpose()?;
    let index = |prefix: char| upper.strip_prefix(prefix).and_then(|d| d.parse::<u8>().ok());
    if upper == "BROUSEK" {
        let k = numbers(args.k.as_deref().unwrap_or("2,2,2"))?;
        let [a, b, c] = k[..] else { bail!("brousek takes --k k1,k2,k3") };
        let lg = gen_brousek(a, b, c)?;
        return Ok(labeled_text(&lg.graph, &lg.labels, None));
    }
    if upper == "CHAIN" {
        let c = gen_chain(&chain.unwrap_or_else(ChainSpec::trivial))?;
        return Ok(labeled_text(&c.graph, &c.labels, None));
    }
    if let (Some(i), true) = (index('H'), upper.starts_with('H')) {
        let mut spec = HFamilySpec::default_for(i)?;
        if let Some(l) = links {
            spec.links = l;
        }
        if chain.is_some() {
            spec.chain = chain;
        }
        let lg = gen_h(&spec)?;
        return Ok(labeled_text(&lg.graph, &lg.labels, lg.colors.as_deref()));
    }
    if let (Some(i), true) = (index('G'), upper.starts_with('G')) {
        let k = match &args.k {
            Some(k) => k.trim().parse::<usize>().context("--k must be a number")?,
            None => theta_core::families::G_MIN_K.get(i.wrapping_sub(1) as usize).copied().unwrap_or(0),
        };
        let lg = match (&args.rows, i) {
            (Some(rows), 6) => {
                let r = numbers(rows)?;
                let [b, c, d] = r[..] else { bail!("--rows takes b,c,d") };
                gen_g6_rows(k, [b, c, d])?
            }
            (Some(_), _) => bail!("--rows only applies to G6"),
            (None, _) => gen_g(i, k)?,
        };
        return Ok(labeled_text(&lg.graph, &lg.labels, None));
    }
    if let Ok(class) = family.parse::<LinkClass>() {
        let specs = links.unwrap_or_else(|| vec![PureLinkSpec::Triangle; class.arity()]);
        let l = gen_link(class, &specs)?;
        return Ok(labeled_text(&l.link.graph, &l.labels, Some(&l.link.colors)));
    }
    if let Ok(c) = family.parse::<Catalog>() {
        return Ok(match gen_catalog(c)? {
            AnyMultiGraph::Loopless(m) => m.to_text(),
            AnyMultiGraph::SemiLoopless(s) => s.to_text(),
        });
    }
    bail!("unknown family {family:?}")
}

fn assignment(count: usize, links: Option<&str>) -> Result<LinkAssignment> {
    Ok(match links {
        Some(l) => LinkAssignment::from_list(0..count, &parse_link_specs(l)?)?,
        None => LinkAssignment::uniform(0..count, PureLinkSpec::Triangle),
    })
}

fn do_unfold(file: &Path, links: Option<&str>, end_edge: bool) -> Result<String> {
    Ok(match parse_multigraph(&read(file)?)? {
        AnyMultiGraph::Loopless(f) => unfold(&f, &assignment(f.edge_count(), links)?)?.to_text(),
        AnyMultiGraph::SemiLoopless(f) => {
            // The labelled edge is never replaced, so it takes no shape.
            let others: Vec<usize> = (0..f.edge_count()).filter(|&e| e != f.e0()).collect();
            let a = match links {
                Some(l) => LinkAssignment::from_list(others, &parse_link_specs(l)?)?,
                None => LinkAssignment::uniform(others, PureLinkSpec::Triangle),
            };
            unfold_semi(&f, &a, end_edge)?.to_text()
        }
    })
}

fn do_fold(file: &Path) -> Result<String> {
    let (g, colors) = parse_colored(&read(file)?)?;
    Ok(if colors.contains(&Color::Black) {
        fold_semi(&ColoredLink::new(g, colors)?)?.multigraph.to_text()
    } else {
        fold(&ColoredGraph::new(g, colors)?)?.multigraph.to_text()
    })
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let task: Task = args.task.parse()?;
    let base = match &args.config {
        Some(path) => TaskParams::from_config_file(path)?,
        None => TaskParams::default(),
    };
    let flags = TaskParams {
        max_n: args.max_n,
        max_mult: args.max_mult,
        seed: args.seed,
        samples: args.samples,
        forbid: args.forbid.clone(),
        k_extra: args.k_extra,
    };
    let report = run_verification(task, &base.overridden_by(&flags))?;
    let text = report.to_json_lines();
    emit(&text)?;
    if let Some(path) = &args.output {
        fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { what, file, forbid } => check(what, &file, forbid.as_deref()),
        Command::Gen(args) => emit(&gen(&args)?).map(|_| 0),
        Command::Unfold { file, links, end_edge } => emit(&do_unfold(&file, links.as_deref(), end_edge)?).map(|_| 0),
        Command::Fold { file } => emit(&do_fold(&file)?).map(|_| 0),
        Command::Verify(args) => verify(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
