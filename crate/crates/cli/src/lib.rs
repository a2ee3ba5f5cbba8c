//! Command-line front end: solution-file parsing, command dispatch and report output.

pub mod dot;
pub mod solution;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use ybx_core::braidmon::{prolongation_sequence, veronese_solution};
use ybx_core::diffcalc::{
    annihilator_check, check_rho_map, connectedness_check, identity_solution_algebra, right_multiply, rho_family,
    OneForm, RhoFailure,
};
use ybx_core::growth::{
    gk_dimension, global_dimension, normal_graph_of, obstruction_graph_of, tournament_structure, DirectedGraph,
    GlDim, GrowthClass,
};
use ybx_core::linr::{
    braided_matrix_relations, check_braid, check_idempotent, check_matrix_ybe, format_relation, frt_relations,
    koszul_dual_relations, linearize, nichols_relations, normalize_relations, transpose_yb_relations, GeneratorStyle,
};
use ybx_core::ncgb::{complete, hilbert_series, GroebnerBasis, NcPolynomial, Rule, Word};
use ybx_core::orbits::{canonical_relations, orbit_graph, r_orbits};
use ybx_core::quadset::{check_properties, enumerate_solutions, PropertyMask, QuadraticSet};
use ybx_core::verseg::{segre_morphism_check, veronese_isomorphism_check, veronese_presentation};
use ybx_core::Rat;

pub use dot::emit_dot;
pub use solution::{parse_solution, render_solution};

/// Degree bound used when neither `--max-deg` nor `YBX_MAX_DEG` is set.
pub const DEFAULT_MAX_DEG: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] ybx_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ybx", version, about = "Set-theoretic Yang-Baxter solutions and their quadratic algebras")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Degree bound for Gröbner completion (default: $YBX_MAX_DEG or 6).
    #[arg(long = "max-deg", global = true, value_name = "D")]
    pub max_deg: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Braided, idempotent, involutive and nondegeneracy flags.
    Check { file: PathBuf },
    /// r-orbits on pairs.
    Orbits { file: PathBuf },
    /// Canonical binomial relations.
    Relations { file: PathBuf },
    /// Gröbner basis of the quadratic algebra.
    Groebner { file: PathBuf },
    /// Hilbert series prefix.
    Hilbert { file: PathBuf },
    /// Growth degree and global dimension.
    Dims { file: PathBuf },
    /// Tournament characterization of the normal-word graph.
    Tournament {
        file: PathBuf,
        /// 1-based vertex carrying the self-arrow.
        #[arg(long, default_value_t = 1)]
        basepoint: usize,
    },
    /// d-Veronese solution and presentation.
    Veronese {
        file: PathBuf,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
    },
    /// Prolongations r^(1), …, r^(d).
    Prolong {
        file: PathBuf,
        #[arg(long = "max-d", default_value_t = 4)]
        max_d: usize,
    },
    /// Segre product checks for two solutions.
    Segre { a: PathBuf, b: PathBuf },
    /// R-matrix constructions.
    Linear {
        file: PathBuf,
        #[command(flatten)]
        which: LinearFlags,
    },
    /// Two-generator first-order calculus family.
    Calculus {
        /// α,β,λ,μ as rationals (e.g. `1,0,1/2,0`).
        #[arg(long, default_value = "1,0,1,0")]
        params: String,
    },
    /// Canonical representatives of quadratic sets with given properties.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        /// Comma-separated: braided, idempotent, involutive, lnd, rnd, l2c.
        #[arg(long, default_value = "braided")]
        mask: String,
    },
    /// Normal-word, obstruction or orbit graph.
    Graph {
        file: PathBuf,
        #[arg(long, conflicts_with_all = ["gw", "orbit"])]
        gn: bool,
        #[arg(long, conflicts_with = "orbit")]
        gw: bool,
        #[arg(long)]
        orbit: bool,
        /// Emit DOT.
        #[arg(long)]
        dot: bool,
        /// Write the DOT output here instead of stdout.
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Default, Clone, Copy)]
pub struct LinearFlags {
    #[arg(long)]
    pub ybe: bool,
    #[arg(long)]
    pub transpose: bool,
    #[arg(long)]
    pub koszul: bool,
    #[arg(long)]
    pub nichols: bool,
    #[arg(long)]
    pub frt: bool,
    #[arg(long)]
    pub bmat: bool,
}

/// Result of one command.
#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub results: Map<String, Value>,
    pub lines: Vec<String>,
    pub warnings: Vec<String>,
    /// A checked property failed; exit code 1.
    pub failed: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    fn put(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        let v = json!({ "command": self.command, "results": self.results, "warnings": self.warnings });
        serde_json::to_string_pretty(&v).expect("report values are serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

/// Parses arguments, runs the command, prints the report and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let env = std::env::var("YBX_MAX_DEG").ok();
    let max_deg = match resolve_max_deg(cli.max_deg, env.as_deref()) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let json = cli.json;
    match dispatch(cli.command, max_deg) {
        Ok(rep) => {
            for w in &rep.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                println!("{}", rep.to_json());
            } else {
                print!("{}", rep.to_text());
            }
            u8::from(rep.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn resolve_max_deg(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match env {
        Some(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("YBX_MAX_DEG is not a number: `{s}`"))),
        None => Ok(DEFAULT_MAX_DEG),
    }
}

fn load(path: &Path) -> Result<QuadraticSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_solution(&text)
}

fn word_name(w: &Word) -> String {
    w.to_string()
}

fn pair_name((i, j): (usize, usize)) -> String {
    format!("x{}x{}", i + 1, j + 1)
}

fn basis(qs: &QuadraticSet, max_deg: usize, rep: &mut Report) -> Result<GroebnerBasis, CliError> {
    let gb = complete(qs.n(), &canonical_relations(qs).to_polynomials(), max_deg.max(3))?;
    if !gb.is_complete() {
        rep.warnings.push(format!("Gröbner basis truncated at degree {}", gb.max_degree()));
    }
    Ok(gb)
}

fn growth_string(g: GrowthClass) -> String {
    match g {
        GrowthClass::Exponential => "Exponential".into(),
        GrowthClass::Polynomial(k) => format!("Polynomial({k})"),
    }
}

fn gldim_string(g: GlDim) -> String {
    match g {
        GlDim::Infinite => "Infinite".into(),
        GlDim::Finite(k) => format!("Finite({k})"),
    }
}

/// Images `[k, l]` (1-based) of the pairs in lexicographic order.
fn table_json(qs: &QuadraticSet) -> Value {
    Value::Array(qs.table().into_iter().map(|(k, l)| json!([k + 1, l + 1])).collect())
}

fn table_line(qs: &QuadraticSet) -> String {
    let n = qs.n();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (k, l) = qs.r(i, j);
            parts.push(format!("{}{}->{}{}", i + 1, j + 1, k + 1, l + 1));
        }
    }
    parts.join(" ")
}

pub fn dispatch(command: Command, max_deg: usize) -> Result<Report, CliError> {
    match command {
        Command::Check { file } => cmd_check(&load(&file)?),
        Command::Orbits { file } => cmd_orbits(&load(&file)?),
        Command::Relations { file } => cmd_relations(&load(&file)?),
        Command::Groebner { file } => cmd_groebner(&load(&file)?, max_deg),
        Command::Hilbert { file } => cmd_hilbert(&load(&file)?, max_deg),
        Command::Dims { file } => cmd_dims(&load(&file)?, max_deg),
        Command::Tournament { file, basepoint } => cmd_tournament(&load(&file)?, basepoint, max_deg),
        Command::Veronese { file, d } => cmd_veronese(&load(&file)?, d),
        Command::Prolong { file, max_d } => cmd_prolong(&load(&file)?, max_d),
        Command::Segre { a, b } => cmd_segre(&load(&a)?, &load(&b)?, max_deg),
        Command::Linear { file, which } => cmd_linear(&load(&file)?, which),
        Command::Calculus { params } => cmd_calculus(&params, max_deg),
        Command::Enumerate { n, mask } => cmd_enumerate(n, &mask),
        Command::Graph { file, gn: _, gw, orbit, dot, output } => {
            let kind = if gw {
                GraphKind::Obstruction
            } else if orbit {
                GraphKind::Orbit
            } else {
                GraphKind::Normal
            };
            cmd_graph(&load(&file)?, kind, dot, output.as_deref(), max_deg)
        }
    }
}

fn cmd_check(qs: &QuadraticSet) -> Result<Report, CliError> {
    let mut rep = Report::new("check");
    let p = check_properties(qs);
    let flags = [
        ("braided", p.braided),
        ("idempotent", p.idempotent),
        ("involutive", p.involutive),
        ("left_nondegenerate", p.left_nondegenerate),
        ("right_nondegenerate", p.right_nondegenerate),
        ("left_2_cancellative", p.left_2_cancellative),
    ];
    rep.put("n", qs.n());
    rep.line(format!("n: {}", qs.n()));
    for (k, v) in flags {
        rep.put(k, v);
        rep.line(format!("{k}: {v}"));
    }
    rep.failed = !p.braided;
    Ok(rep)
}

fn cmd_orbits(qs: &QuadraticSet) -> Result<Report, CliError> {
    let mut rep = Report::new("orbits");
    let dec = r_orbits(qs);
    let mut list = Vec::new();
    for o in &dec.orbits {
        let members: Vec<String> = o.members.iter().copied().map(pair_name).collect();
        let fixed: Vec<String> = o.fixed_points.iter().copied().map(pair_name).collect();
        rep.line(format!("{{{}}} minimal {} fixed [{}]", members.join(", "), pair_name(o.minimal), fixed.join(", ")));
        list.push(json!({ "members": members, "minimal": pair_name(o.minimal), "fixed_points": fixed }));
    }
    rep.put("count", dec.orbits.len());
    rep.put("orbits", list);
    Ok(rep)
}

fn cmd_relations(qs: &QuadraticSet) -> Result<Report, CliError> {
    let mut rep = Report::new("relations");
    let rels: Vec<String> = canonical_relations(qs)
        .relations
        .iter()
        .map(|b| format!("{} = {}", pair_name(b.lead), pair_name(b.rhs)))
        .collect();
    for r in &rels {
        rep.line(r.clone());
    }
    rep.put("count", rels.len());
    rep.put("relations", rels);
    Ok(rep)
}

fn cmd_groebner(qs: &QuadraticSet, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("groebner");
    let gb = basis(qs, max_deg, &mut rep)?;
    let rules: Vec<String> = gb.rules().iter().map(rule_text).collect();
    let s = gb.stats();
    let pbw = gb.rules().iter().all(|r| r.lead.len() == 2);
    for r in &rules {
        rep.line(r.clone());
    }
    rep.line(format!("complete: {}", gb.is_complete()));
    rep.line(format!("pbw: {pbw}"));
    rep.line(format!("ambiguities: {} resolved: {} new rules: {}", s.ambiguities, s.resolved, s.rules_from_ambiguities));
    rep.put("rules", rules);
    rep.put("complete", gb.is_complete());
    rep.put("pbw", pbw);
    rep.put("ambiguities", s.ambiguities);
    rep.put("resolved", s.resolved);
    rep.put("rules_from_ambiguities", s.rules_from_ambiguities);
    Ok(rep)
}

/// `u -> rhs` with words as space-separated 1-based indices.
fn rule_text(r: &Rule) -> String {
    let terms: Vec<String> = r
        .rhs
        .terms()
        .rev()
        .map(|(w, c)| {
            let word = if w.is_empty() { "1".to_string() } else { w.to_indices() };
            if *c == ybx_core::rat(1) {
                word
            } else {
                format!("{c}*{word}")
            }
        })
        .collect();
    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    format!("{} -> {rhs}", r.lead.to_indices())
}

fn cmd_hilbert(qs: &QuadraticSet, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("hilbert");
    let gb = basis(qs, max_deg, &mut rep)?;
    let h = hilbert_series(&gb, max_deg);
    let text: Vec<String> = h.coefficients.iter().map(usize::to_string).collect();
    rep.line(format!("[{}]", text.join(", ")));
    rep.put("coefficients", h.coefficients.clone());
    rep.put("exact", h.exact);
    Ok(rep)
}

fn cmd_dims(qs: &QuadraticSet, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("dims");
    let gb = basis(qs, max_deg, &mut rep)?;
    if gb.rules().iter().any(|r| r.lead.len() > 2) {
        rep.warnings.push("relations are not PBW; graph invariants describe the degree-2 obstructions only".into());
    }
    let gk = growth_string(gk_dimension(&normal_graph_of(&gb)));
    let gl = gldim_string(global_dimension(&obstruction_graph_of(&gb)));
    rep.line(format!("gk: {gk}"));
    rep.line(format!("gldim: {gl}"));
    rep.put("gk", gk);
    rep.put("gldim", gl);
    Ok(rep)
}

fn cmd_tournament(qs: &QuadraticSet, basepoint: usize, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("tournament");
    if basepoint == 0 || basepoint > qs.n() {
        return Err(CliError::Usage(format!("basepoint must lie in 1..={}", qs.n())));
    }
    let gb = basis(qs, max_deg, &mut rep)?;
    let t = tournament_structure(&normal_graph_of(&gb), basepoint - 1)?;
    let relabel: Option<Vec<usize>> = t.relabeling.as_ref().map(|p| p.iter().map(|v| v + 1).collect());
    for (k, v) in [
        ("growth_and_count", t.growth_and_count),
        ("tournament_plus_loop", t.tournament_plus_loop),
        ("relabeling_exists", t.relabeling_exists),
        ("equivalence_holds", t.equivalence_holds()),
    ] {
        rep.line(format!("{k}: {v}"));
        rep.put(k, v);
    }
    if let Some(p) = &relabel {
        rep.line(format!("relabeling: {p:?}"));
    }
    rep.put("relabeling", json!(relabel));
    rep.failed = !t.equivalence_holds();
    Ok(rep)
}

fn cmd_veronese(qs: &QuadraticSet, d: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("veronese");
    let sol = veronese_solution(qs, d)?;
    let labels: Vec<String> = sol.labels.iter().map(word_name).collect();
    for (k, l) in labels.iter().enumerate() {
        rep.line(format!("v{} = {l}", k + 1));
    }
    let mut table = Vec::new();
    let m = sol.labels.len();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = sol.base.r(i, j);
            table.push(format!("v{}v{} -> v{}v{}", i + 1, j + 1, a + 1, b + 1));
        }
    }
    rep.line("solution:");
    rep.lines.extend(table.iter().map(|t| format!("  {t}")));
    let pres = veronese_presentation(qs.n(), &canonical_relations(qs).to_polynomials(), d)?;
    let vname = |g: usize| format!("v{}", g + 1);
    let rels: Vec<String> = pres.relations.iter().map(|p| format!("{} = 0", p.format_with(&vname))).collect();
    rep.line("presentation:");
    rep.lines.extend(rels.iter().map(|t| format!("  {t}")));
    let p = check_properties(qs);
    let iso = if p.braided && p.idempotent && p.left_nondegenerate {
        Some(veronese_isomorphism_check(qs, d)?)
    } else {
        None
    };
    if let Some(b) = iso {
        rep.line(format!("isomorphic: {b}"));
        rep.failed = !b;
    }
    rep.put("d", d);
    rep.put("labels", labels);
    rep.put("solution", table);
    rep.put("relations", rels);
    rep.put("isomorphic", json!(iso));
    Ok(rep)
}

fn cmd_prolong(qs: &QuadraticSet, max_d: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("prolong");
    if max_d == 0 {
        return Err(CliError::Usage("--max-d must be at least 1".into()));
    }
    let p = prolongation_sequence(qs, max_d)?;
    let tables: Vec<String> = p.solutions.iter().map(table_line).collect();
    for (d, t) in tables.iter().enumerate() {
        rep.line(format!("r^({}) : {t}", d + 1));
    }
    rep.line(format!("return degree: {}", p.return_degree.map_or("none".into(), |d| d.to_string())));
    rep.line(format!("distinct: {}", p.distinct));
    rep.put("solutions", tables);
    rep.put("return_degree", json!(p.return_degree));
    rep.put("distinct", p.distinct);
    Ok(rep)
}

fn cmd_segre(a: &QuadraticSet, b: &QuadraticSet, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("segre");
    let s = segre_morphism_check(a, b, max_deg.max(2))?;
    rep.line(format!("relations vanish: {}", s.relations_vanish));
    for &(d, p, q) in &s.dimensions {
        rep.line(format!("degree {d}: product {p}, tensor {q}"));
    }
    rep.line(format!("dimensions match: {}", s.dimensions_match));
    rep.line(format!("relation space identity: {} (dim {})", s.relation_space_identity, s.relation_space_dim));
    rep.put("relations_vanish", s.relations_vanish);
    rep.put("dimensions", s.dimensions.iter().map(|&(d, p, q)| json!([d, p, q])).collect::<Vec<_>>());
    rep.put("dimensions_match", s.dimensions_match);
    rep.put("relation_space_identity", s.relation_space_identity);
    rep.put("relation_space_dim", s.relation_space_dim);
    rep.failed = !s.all_pass();
    Ok(rep)
}

fn relation_block(rep: &mut Report, key: &str, rels: &[NcPolynomial], style: GeneratorStyle, n: usize) {
    let text: Vec<String> =
        normalize_relations(rels.iter().cloned()).iter().map(|p| format_relation(p, style, n)).collect();
    rep.line(format!("{key}:"));
    rep.lines.extend(text.iter().map(|t| format!("  {t}")));
    rep.put(key, text);
}

fn cmd_linear(qs: &QuadraticSet, mut which: LinearFlags) -> Result<Report, CliError> {
    let mut rep = Report::new("linear");
    if !(which.ybe || which.transpose || which.koszul || which.nichols || which.frt || which.bmat) {
        which.ybe = true;
    }
    let n = qs.n();
    let (psi, r) = linearize(qs);
    if which.ybe {
        let p = check_properties(qs);
        let rows = [
            ("braid", check_braid(&psi)?, p.braided),
            ("ybe", check_matrix_ybe(&r)?, p.braided),
            ("idempotent", check_idempotent(&psi)?, p.idempotent),
        ];
        for (k, m, s) in rows {
            rep.line(format!("{k}: matrix {m}, set {s}"));
            rep.put(k, m);
            if m != s {
                rep.failed = true;
            }
        }
    }
    if which.transpose {
        relation_block(&mut rep, "transpose", &transpose_yb_relations(&r)?, GeneratorStyle::DualY, n);
    }
    if which.koszul {
        relation_block(&mut rep, "koszul", &koszul_dual_relations(&r)?.relations, GeneratorStyle::DualY, n);
    }
    if which.nichols {
        relation_block(&mut rep, "nichols", &nichols_relations(&r)?, GeneratorStyle::Theta, n);
    }
    if which.frt {
        relation_block(&mut rep, "frt", &frt_relations(&r)?, GeneratorStyle::T, n);
    }
    if which.bmat {
        relation_block(&mut rep, "bmat", &braided_matrix_relations(&r)?, GeneratorStyle::U, n);
    }
    Ok(rep)
}

pub fn parse_params(s: &str) -> Result<[Rat; 4], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!("--params needs four values, got {}", parts.len())));
    }
    let mut out: Vec<Rat> = Vec::with_capacity(4);
    for p in parts {
        out.push(p.parse().map_err(|_| CliError::Usage(format!("not a rational number: `{p}`")))?);
    }
    Ok(out.try_into().expect("four values"))
}

fn cmd_calculus(params: &str, max_deg: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("calculus");
    let [alpha, beta, lambda, mu] = parse_params(params)?;
    let d = max_deg.max(2);
    let gb = identity_solution_algebra(2, d + 2)?;
    let rho = rho_family(&alpha, &beta, &lambda, &mu);
    let name = |g: usize| ["x", "y"][g].to_string();
    let mut rules = Vec::new();
    for (i, di) in ["dx", "dy"].iter().enumerate() {
        for j in 0..2 {
            let f = right_multiply(&OneForm::basis(2, i), &Word::letter(j), &rho, &gb);
            let rhs: Vec<String> = f
                .coefficients
                .iter()
                .zip(["dx", "dy"])
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, b)| format!("({}){b}", c.format_with(&name)))
                .collect();
            rules.push(format!("{di}·{} = {}", name(j), if rhs.is_empty() { "0".into() } else { rhs.join(" + ") }));
        }
    }
    rep.line("bimodule rules:");
    rep.lines.extend(rules.iter().map(|t| format!("  {t}")));
    let check = check_rho_map(&gb, &rho, d)?;
    let ann = annihilator_check(&rho, &gb, d)?;
    let conn = connectedness_check(&rho, &gb, d)?;
    rep.line(format!("rho conditions: {}", check.passes()));
    if let Some(f) = &check.first_failure {
        let msg = match f {
            RhoFailure::Multiplicative { relation } => format!("multiplicativity fails on {relation}"),
            RhoFailure::Derivation { relation, k } => format!("derivation condition fails on {relation} at k={}", k + 1),
        };
        rep.line(format!("  {msg}"));
        rep.put("failure", msg);
    }
    rep.line(format!("(dx - dy) annihilates degree >= 2: {ann}"));
    rep.line(format!("connected through degree {d}: {conn}"));
    rep.put("params", params.to_string());
    rep.put("bimodule_rules", rules);
    rep.put("rho_conditions", check.passes());
    rep.put("annihilator", ann);
    rep.put("connected", conn);
    rep.failed = !check.passes();
    Ok(rep)
}

fn cmd_enumerate(n: usize, mask: &str) -> Result<Report, CliError> {
    let mut rep = Report::new("enumerate");
    let m = PropertyMask::parse(mask).map_err(CliError::Usage)?;
    let sols = enumerate_solutions(n, m)?;
    // dim A_2 is the number of r-orbits on pairs
    let dims: Vec<usize> = sols.iter().map(|s| r_orbits(s).orbits.len()).collect();
    for (s, d) in sols.iter().zip(&dims) {
        rep.line(format!("{}  dimA2={d}", table_line(s)));
    }
    rep.line(format!("count: {}", sols.len()));
    if let Some(m) = dims.iter().max() {
        rep.line(format!("max dimA2: {m}"));
    }
    rep.put("count", sols.len());
    rep.put("dim_a2", dims.clone());
    rep.put("max_dim_a2", json!(dims.iter().max()));
    rep.put("solutions", sols.iter().map(table_json).collect::<Vec<_>>());
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GraphKind {
    Normal,
    Obstruction,
    Orbit,
}

fn cmd_graph(
    qs: &QuadraticSet,
    kind: GraphKind,
    as_dot: bool,
    output: Option<&Path>,
    max_deg: usize,
) -> Result<Report, CliError> {
    let mut rep = Report::new("graph");
    let n = qs.n();
    let (g, labels): (DirectedGraph, Vec<String>) = match kind {
        GraphKind::Orbit => {
            (orbit_graph(qs), (0..n * n).map(|p| pair_name((p / n, p % n))).collect())
        }
        GraphKind::Normal | GraphKind::Obstruction => {
            let gb = basis(qs, max_deg, &mut rep)?;
            let gn = normal_graph_of(&gb);
            let g = if kind == GraphKind::Normal { gn } else { gn.complement() };
            (g, (0..n).map(|x| format!("x{}", x + 1)).collect())
        }
    };
    let edges: Vec<String> = g.edges().map(|(a, b)| format!("{} -> {}", labels[a], labels[b])).collect();
    rep.put("vertices", labels.clone());
    rep.put("edges", edges.clone());
    rep.put("components", g.weak_component_count());
    let text = emit_dot(&g, Some(&labels));
    if as_dot {
        match output {
            Some(path) => {
                std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
                rep.line(format!("wrote {}", path.display()));
            }
            None => rep.lines.extend(text.lines().map(str::to_string)),
        }
        rep.put("dot", text);
    } else {
        rep.lines.extend(edges);
        rep.line(format!("components: {}", g.weak_component_count()));
    }
    Ok(rep)
}
