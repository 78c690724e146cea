//! Command-line front end: formulas, constructions, verification, exact oracles,
//! reduction instances and rendering.
//!
//! Exit codes: 0 success, 1 negative verification or decision, 2 usage or format error.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use uncrossed::certify::{certificate_size_vs_bounds, verify_certificate, verify_drawing, CertificateReport};
use uncrossed::constructions::{
    bipartite_uncrossed_collection, double_cycle_cover, double_cycle_cover_minus_one, k5_example, ladder_with_leaves,
    wheel_drawing,
};
use uncrossed::formulas::{bound_report, report_complete, report_complete_bipartite};
use uncrossed::graph::{complete_bipartite, complete_graph};
use uncrossed::io::{parse_certificate, parse_graph, parse_parts, write_certificate, write_cover, write_graph};
use uncrossed::oracle::{self, OracleOptions, DEFAULT_CAP};
use uncrossed::reductions::{
    ecr_forward_witness, reduce_mos_to_ecr, reduce_ot_to_unc, unc_forward_witness, ReductionInstance,
};
use uncrossed::{BoundReport, Graph, UncrossedCertificate};

use render::{render, Format, Layout, RenderSpec};

#[derive(Debug, Parser)]
#[command(name = "uncrossed", version, about = "Uncrossed numbers of graphs: bounds, certificates and exact search")]
struct Cli {
    /// Suppress normal output; only the exit code reports the result.
    #[arg(long, global = true)]
    quiet: bool,
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form values for complete and complete bipartite graphs.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Lower and upper bounds for the graph in FILE.
    Bound {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Build a drawing, cover or uncrossed collection.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
        /// Write the result here instead of standard output.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
        /// Emit a rendered figure instead of the certificate text.
        #[arg(long, global = true)]
        emit: Option<Format>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Exact values by exhaustive search (small graphs only).
    Oracle {
        what: OracleWhat,
        #[arg(long)]
        graph: PathBuf,
        /// Edge cap for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Edge threshold for `mus`: is there an admissible drawing with at least K
        /// uncrossed edges?
        #[arg(short)]
        k: Option<usize>,
        /// Write the optimal collection (unc) or witness drawing (h, mus) here.
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// Hardness-reduction instances.
    Reduce {
        what: ReduceWhat,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// Parts file: one outerplanar edge set (ecr) or an outerplanar cover (unc).
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Render a certificate as SVG or DOT.
    Render {
        /// Certificate file; omit to use `--builtin`.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "cert")]
        builtin: Option<Builtin>,
        #[arg(long, value_enum, default_value_t = Layout::TutteBarycentric)]
        layout: Layout,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum FormulaCmd {
    /// Values for `K_N`.
    Complete { n: u64 },
    /// Values for `K_{M,N}`.
    Bipartite { m: u64, n: u64 },
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// Wheel drawing of `K_N`.
    Wheel { n: usize },
    /// Ladder with leaves in `K_{M,N}`.
    Ladder { m: usize, n: usize },
    /// Double cycle cover of `K_{M,N}` (`N >= 2M` or `N = 2M-1`).
    Cover { m: usize, n: usize },
    /// Uncrossed collection of `K_{M,N}` of optimal size.
    Collection { m: usize, n: usize },
    /// Two-wheel collection of `K_5`.
    K5Example,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleWhat {
    H,
    Ecr,
    Unc,
    Mus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceWhat {
    Ecr,
    Unc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builtin {
    K5,
}

/// Output sink honoring `--quiet`.
struct Out {
    quiet: bool,
    json: bool,
}

impl Out {
    fn text(&self, s: &str) {
        if !self.quiet {
            print!("{s}");
            if !s.ends_with('\n') {
                println!();
            }
        }
    }

    fn value(&self, v: serde_json::Value) {
        if !self.quiet {
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_certificate(path: &Path) -> Result<UncrossedCertificate> {
    parse_certificate(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn write_or_print(out: &Out, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            out.text(text);
            Ok(())
        }
    }
}

fn report_text(r: &BoundReport) -> String {
    let mut s = String::new();
    for q in &r.quantities {
        s.push_str(&format!("{} = {} [{}]\n", q.name, q.value, q.tag));
    }
    s.push_str(&format!("lower: {}\n", r.lower));
    if let Some(u) = r.upper {
        s.push_str(&format!("upper: {u}\n"));
    }
    if let Some(e) = r.exact {
        s.push_str(&format!("exact: {e}\n"));
    }
    s.push_str(&format!("provenance: {}\n", r.provenance.join(", ")));
    s
}

fn show_report(out: &Out, r: &BoundReport) {
    if out.json {
        out.value(serde_json::to_value(r).expect("serializable"));
    } else {
        out.text(&report_text(r));
    }
}

/// 0 on success, 1 on a negative answer.
type Status = u8;

fn formula(out: &Out, which: FormulaCmd) -> Result<Status> {
    let r = match which {
        FormulaCmd::Complete { n } => report_complete(n)?,
        FormulaCmd::Bipartite { m, n } => report_complete_bipartite(m, n)?,
    };
    show_report(out, &r);
    Ok(0)
}

fn construct(out: &Out, what: ConstructCmd, path: Option<&Path>, emit: Option<Format>) -> Result<Status> {
    let (cert, layout) = match what {
        ConstructCmd::Wheel { n } => {
            (UncrossedCertificate::new(complete_graph(n)?, vec![wheel_drawing(n)?]), Layout::RadialWheel)
        }
        ConstructCmd::Ladder { m, n } => (
            UncrossedCertificate::new(complete_bipartite(m, n)?, vec![ladder_with_leaves(m, n)?]),
            Layout::TutteBarycentric,
        ),
        ConstructCmd::Cover { m, n } => {
            let cover = if n + 1 == 2 * m { double_cycle_cover_minus_one(m)? } else { double_cycle_cover(m, n)? };
            if emit.is_none() {
                write_or_print(out, path, &write_cover(&cover))?;
                return Ok(0);
            }
            (bipartite_uncrossed_collection(m.min(n), m.max(n))?, Layout::BipartiteCircular)
        }
        ConstructCmd::Collection { m, n } => {
            (bipartite_uncrossed_collection(m.min(n), m.max(n))?, Layout::BipartiteCircular)
        }
        ConstructCmd::K5Example => (k5_example(), Layout::TutteBarycentric),
    };
    let text = match emit {
        Some(format) => render(&cert, RenderSpec { layout, format }),
        None => write_certificate(&cert),
    };
    write_or_print(out, path, &text)?;
    Ok(0)
}

fn verify_text(c: &UncrossedCertificate, r: &CertificateReport) -> String {
    let mut s = format!("drawings: {}\n", r.size);
    for (k, d) in r.drawings.iter().enumerate() {
        s.push_str(&format!(
            "drawing {k}: {} drawn edges, {} faces, connected {}, euler {}, non-cofacial {}\n",
            d.drawn_edges,
            d.face_count,
            d.connected,
            d.euler,
            d.non_cofacial.len()
        ));
        for (u, v) in &d.non_cofacial {
            s.push_str(&format!("  undrawn edge {u} {v} has no shared face\n"));
        }
    }
    for (u, v) in &r.uncovered {
        s.push_str(&format!("uncovered: {u} {v}\n"));
    }
    s.push_str(&format!("result: {}\n", if r.passes() { "pass" } else { "fail" }));
    if r.passes() {
        s.push_str(&report_text(&certificate_size_vs_bounds(c)));
    }
    s
}

fn verify(out: &Out, graph: &Path, cert: &Path, report: ReportFormat) -> Result<Status> {
    let g = load_graph(graph)?;
    let c = load_certificate(cert)?;
    if c.host != g {
        bail!("certificate host graph differs from {}", graph.display());
    }
    let r = verify_certificate(&c)?;
    if out.json || report == ReportFormat::Json {
        let drawings: Vec<_> = r
            .drawings
            .iter()
            .map(|d| {
                json!({
                    "drawn_edges": d.drawn_edges,
                    "faces": d.face_count,
                    "connected": d.connected,
                    "euler": d.euler,
                    "non_cofacial": d.non_cofacial,
                    "passes": d.passes(),
                })
            })
            .collect();
        out.value(json!({
            "size": r.size,
            "passes": r.passes(),
            "drawings": drawings,
            "uncovered": r.uncovered,
            "witness": r.witness,
            "bounds": r.passes().then(|| certificate_size_vs_bounds(&c)),
        }));
    } else {
        out.text(&verify_text(&c, &r));
    }
    Ok(if r.passes() { 0 } else { 1 })
}

fn oracle_cmd(
    out: &Out,
    what: OracleWhat,
    graph: &Path,
    cap: usize,
    k: Option<usize>,
    emit: Option<&Path>,
) -> Result<Status> {
    let g = load_graph(graph)?;
    let opts = OracleOptions { cap, ..OracleOptions::default() };
    let (name, value, status, cert) = match what {
        OracleWhat::H | OracleWhat::Mus => {
            let fam = oracle::enumerate_admissible(&g, opts)?;
            let best =
                fam.members.iter().max_by_key(|m| m.edges.len()).ok_or_else(|| anyhow!("no admissible drawing"))?;
            let h = best.edges.len();
            let cert = UncrossedCertificate::new(g.clone(), vec![best.witness.clone()]);
            match (what, k) {
                (OracleWhat::Mus, Some(k)) => ("mus", h, u8::from(h < k), cert),
                (OracleWhat::Mus, None) => bail!("`oracle mus` needs -k"),
                _ => ("h", h, 0, cert),
            }
        }
        OracleWhat::Ecr => {
            let h = oracle::exact_h(&g, opts)?;
            ("ecr", g.m() - h, 0, UncrossedCertificate::new(g.clone(), Vec::new()))
        }
        OracleWhat::Unc => {
            let sol = oracle::exact_unc(&g, opts)?;
            ("unc", sol.value, 0, sol.certificate)
        }
    };
    if let Some(p) = emit {
        if !cert.is_empty() {
            fs::write(p, write_certificate(&cert)).with_context(|| format!("cannot write {}", p.display()))?;
        }
    }
    if out.json {
        out.value(json!({ "quantity": name, "value": value, "k": k, "holds": status == 0 }));
    } else if let (OracleWhat::Mus, Some(k)) = (what, k) {
        out.text(&format!("h = {value}\nat least {k} uncrossed edges: {}\n", if status == 0 { "yes" } else { "no" }));
    } else {
        out.text(&format!("{name} = {value} [exhaustive]\n"));
    }
    Ok(status)
}

fn instance_text(inst: &ReductionInstance) -> String {
    let mut s = String::new();
    for (v, role) in inst.gadget_map.iter().enumerate() {
        s.push_str(&format!("# {v}: {role:?}\n"));
    }
    s.push_str(&write_graph(&inst.target));
    s.push_str(&format!("budget: {}\n", inst.budget));
    s
}

fn reduce(out: &Out, what: ReduceWhat, graph: &Path, k: usize, witness: Option<&Path>) -> Result<Status> {
    let g = load_graph(graph)?;
    let inst = match what {
        ReduceWhat::Ecr => reduce_mos_to_ecr(&g, k)?,
        ReduceWhat::Unc => reduce_ot_to_unc(&g, k)?,
    };
    let mut check = None;
    if let Some(p) = witness {
        let parts = parse_parts(&read(p)?, &g).with_context(|| format!("{}", p.display()))?;
        let (used, ok) = match what {
            ReduceWhat::Ecr => {
                let [h] = parts.as_slice() else {
                    bail!("ecr witness needs exactly one edge set, found {}", parts.len());
                };
                match ecr_forward_witness(&inst, h) {
                    Ok(d) => {
                        let r = verify_drawing(&inst.target, &d)?;
                        let crossed = inst.target.m() - r.drawn_edges;
                        (crossed, r.passes() && crossed <= inst.budget)
                    }
                    Err(e) => {
                        check = Some((0, false, e.to_string()));
                        (0, false)
                    }
                }
            }
            ReduceWhat::Unc => match unc_forward_witness(&inst, &parts) {
                Ok(c) => (c.len(), verify_certificate(&c)?.passes()),
                Err(e) => {
                    check = Some((0, false, e.to_string()));
                    (0, false)
                }
            },
        };
        if check.is_none() {
            check = Some((used, ok, String::new()));
        }
    }
    if out.json {
        out.value(json!({
            "kind": inst.kind,
            "vertices": inst.target.n(),
            "edges": inst.target.edges(),
            "budget": inst.budget,
            "gadget_map": inst.gadget_map,
            "witness": check.as_ref().map(|(used, ok, err)| json!({ "used": used, "passes": ok, "error": err })),
        }));
    } else {
        let mut s = instance_text(&inst);
        if let Some((used, ok, err)) = &check {
            if err.is_empty() {
                s.push_str(&format!(
                    "witness: {} (uses {used} of {})\n",
                    if *ok { "pass" } else { "fail" },
                    inst.budget
                ));
            } else {
                s.push_str(&format!("witness: fail ({err})\n"));
            }
        }
        out.text(&s);
    }
    Ok(match check {
        Some((_, false, _)) => 1,
        _ => 0,
    })
}

fn render_cmd(
    out: &Out,
    cert: Option<&Path>,
    builtin: Option<Builtin>,
    layout: Layout,
    format: Format,
    path: Option<&Path>,
) -> Result<Status> {
    let c = match (cert, builtin) {
        (Some(p), _) => load_certificate(p)?,
        (None, Some(Builtin::K5)) => k5_example(),
        (None, None) => bail!("give --cert FILE or --builtin"),
    };
    let r = verify_certificate(&c)?;
    if r.drawings.iter().any(|d| !d.passes()) {
        bail!("certificate has inadmissible drawings; run `verify` for details");
    }
    write_or_print(out, path, &render(&c, RenderSpec { layout, format }))?;
    Ok(0)
}

fn run(cli: Cli) -> Result<Status> {
    let out = Out { quiet: cli.quiet, json: cli.json };
    match cli.command {
        Command::Formula { which } => formula(&out, which),
        Command::Bound { graph } => {
            show_report(&out, &bound_report(&load_graph(&graph)?));
            Ok(0)
        }
        Command::Construct { what, out: path, emit } => construct(&out, what, path.as_deref(), emit),
        Command::Verify { graph, cert, report } => verify(&out, &graph, &cert, report),
        Command::Oracle { what, graph, cap, k, emit_cert } => {
            oracle_cmd(&out, what, &graph, cap, k, emit_cert.as_deref())
        }
        Command::Reduce { what, graph, k, witness } => reduce(&out, what, &graph, k, witness.as_deref()),
        Command::Render { cert, builtin, layout, format, out: path } => {
            render_cmd(&out, cert.as_deref(), builtin, layout, format, path.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
