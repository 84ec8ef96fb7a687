//! Subcommand dispatch and report rendering.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use pkoszul::ext::{
    ainfty_feasible_arities, classify, classify_module, ek_structure_constants, ext_generation_degrees, ext_table,
    generation_verdict, module_generation, reduced_2l_check, ArityReport, Classification, GenerationReport,
    ModuleClassification, ModuleGeneration, Reduced2lReport, Verdict, YonedaCache,
};
use pkoszul::groebner::{buchberger_truncated, graded_algebra_data, GroebnerBasis};
use pkoszul::modules::{FreeModule, Generator};
use pkoszul::resolution::{minimal_resolution, resolve_trivial, BettiTable, Resolution};
use pkoszul::scalars::EchelonSpace;
use pkoszul::structure::{ingest_structure_constants, StructureConstants};
use pkoszul::{DeltaFunction, Error, ExtTable, GradedAlgebra, ModulePresentation, ModuleSpec, Result};

use crate::config::{Command, Format, ModulePart, RunConfig, DEFAULT_MAX_HDEG};
use crate::document::InputDocument;

/// Exit status and the text for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

impl Outcome {
    pub fn input_error(message: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run(cfg: &RunConfig, doc: &InputDocument) -> Outcome {
    match execute(cfg, doc) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(Error::Refusal(m)) => Outcome { code: EXIT_REFUSAL, stdout: String::new(), stderr: format!("refused: {m}\n") },
        Err(Error::Input(m)) => Outcome::input_error(m),
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
struct Bounds {
    max_hdeg: usize,
    max_ideg: usize,
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    command: &'static str,
    bounds: Bounds,
    #[serde(flatten)]
    body: &'a T,
}

trait Render: Serialize {
    fn table(&self, out: &mut String);
}

fn emit<T: Render>(cfg: &RunConfig, bounds: Bounds, body: &T) -> String {
    match cfg.format {
        Format::Json => {
            let report = Report { command: cfg.command.name(), bounds, body };
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = format!("{}  (N = {}, D = {})\n", cfg.command.name(), bounds.max_hdeg, bounds.max_ideg);
            body.table(&mut s);
            s
        }
    }
}

struct Engine {
    gb: GroebnerBasis,
    alg: Arc<GradedAlgebra>,
    trivial: Resolution,
    bounds: Bounds,
}

fn build(doc: &InputDocument, n: usize, d: usize) -> Result<Engine> {
    let pres = doc.presentation();
    let gb = buchberger_truncated(&pres, &doc.monomial_order(), d.max(pres.max_relation_degree()))?;
    let alg = Arc::new(graded_algebra_data(&gb, d)?);
    let trivial = resolve_trivial(&alg, n, d)?;
    Ok(Engine { gb, alg, trivial, bounds: Bounds { max_hdeg: n, max_ideg: d } })
}

fn override_delta(cfg: &RunConfig) -> Result<Option<DeltaFunction>> {
    cfg.pd.map(|(p, d)| DeltaFunction::new(p, d)).transpose()
}

/// Resolves `A_0` with the configured bounds. Without an explicit `D` the
/// first pass uses `2N` (or `δ(N)+1` for a given `(p,d)`); when the
/// resulting classification finds `(p,d)` with `δ(N)+1` larger, the
/// computation is repeated with that bound.
fn prepare(cfg: &RunConfig, doc: &InputDocument) -> Result<Engine> {
    let n = cfg.max_hdeg.or(doc.bounds.map(|b| b.0)).unwrap_or(DEFAULT_MAX_HDEG);
    let floor = doc.presentation().max_relation_degree().max(2);
    if let Some(d) = cfg.max_ideg.or(doc.bounds.map(|b| b.1)) {
        if d < 2 {
            return Err(Error::input("the internal degree bound must be at least 2"));
        }
        return build(doc, n, d);
    }
    if let Some(f) = override_delta(cfg)? {
        return build(doc, n, (f.eval(n) + 1).max(floor));
    }
    let first = build(doc, n, (2 * n).max(floor))?;
    let wanted = classify(&first.trivial.betti_table()).delta().map(|f| f.eval(n) + 1);
    match wanted {
        Some(d) if d > first.bounds.max_ideg => build(doc, n, d),
        _ => Ok(first),
    }
}

fn delta_for(cfg: &RunConfig, e: &Engine) -> Result<DeltaFunction> {
    if let Some(f) = override_delta(cfg)? {
        return Ok(f);
    }
    let c = classify(&e.trivial.betti_table());
    c.delta().ok_or_else(|| {
        Error::input(format!("no (p,d) fits the certified rows (verdict {}); pass --p and --d", c.verdict))
    })
}

fn execute(cfg: &RunConfig, doc: &InputDocument) -> Result<String> {
    let e = prepare(cfg, doc)?;
    let b = e.bounds;
    let r = &e.trivial;
    Ok(match &cfg.command {
        Command::Resolve(_) => emit(cfg, b, &ResolveOut::new(r)),
        Command::Classify(_) => {
            let betti = r.betti_table();
            emit(cfg, b, &ClassifyOut { classification: classify(&betti), degrees: row_degrees(&betti) })
        }
        Command::Ext(_) => emit(cfg, b, &ExtOut { ext: ext_table(&r.betti_table()) }),
        Command::Yoneda { i, j, .. } => emit(cfg, b, &yoneda(r, *i, *j)?),
        Command::Generation(_) => {
            let report = ext_generation_degrees(r, b.max_hdeg)?;
            let verdict = generation_verdict(&report, b.max_ideg);
            let betti_verdict = classify(&r.betti_table()).verdict;
            emit(cfg, b, &GenerationOut { agree: verdict == betti_verdict, report, verdict, betti_verdict })
        }
        Command::ModuleClassify { module, part, .. } => {
            let f = delta_for(cfg, &e)?;
            emit(cfg, b, &module_classify(doc, &e, module, *part, f)?)
        }
        Command::Ek { k, .. } => {
            let f = delta_for(cfg, &e)?;
            emit(cfg, b, &ek(r, f, *k)?)
        }
        Command::Arities { q_max, .. } => {
            let f = delta_for(cfg, &e)?;
            let report = ainfty_feasible_arities(&ext_table(&r.betti_table()), f, *q_max);
            emit(cfg, b, &AritiesOut { p: f.p, d: f.d, report })
        }
        Command::Reduced2l { l, .. } => {
            if *l < 3 {
                return Err(Error::input("l must be at least 3"));
            }
            emit(cfg, b, &reduced_2l_check(r, &ext_table(&r.betti_table()), *l)?)
        }
    })
}

fn row_degrees(b: &BettiTable) -> Vec<Option<Vec<usize>>> {
    b.rows.iter().map(|row| row.certified.then(|| b.degrees(row.n).into_iter().collect())).collect()
}

fn opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn betti_lines(b: &BettiTable, out: &mut String) {
    let _ = writeln!(out, "n    cert  generators (vertex@degree)");
    for row in &b.rows {
        let gens: Vec<String> = row
            .generators
            .iter()
            .map(|g| if g.count == 1 { format!("{}@{}", g.vertex, g.degree) } else { format!("{}x{}@{}", g.count, g.vertex, g.degree) })
            .collect();
        let cert = if row.certified { "yes" } else { "no" };
        let _ = writeln!(out, "{:<4} {:<5} {}", row.n, cert, if gens.is_empty() { "0".to_string() } else { gens.join(" ") });
    }
}

#[derive(Serialize)]
struct ResolveOut {
    certified_to: Option<usize>,
    termination_degree: Option<usize>,
    betti: BettiTable,
}

impl ResolveOut {
    fn new(r: &Resolution) -> Self {
        Self { certified_to: r.certified_to(), termination_degree: r.termination_degree(), betti: r.betti_table() }
    }
}

impl Render for ResolveOut {
    fn table(&self, out: &mut String) {
        betti_lines(&self.betti, out);
        let _ = writeln!(out, "certified to {}, terminates at {}", opt(self.certified_to), opt(self.termination_degree));
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    #[serde(flatten)]
    classification: Classification,
    degrees: Vec<Option<Vec<usize>>>,
}

impl Render for ClassifyOut {
    fn table(&self, out: &mut String) {
        let c = &self.classification;
        let pairs: Vec<String> = c.fitting_pairs.iter().map(|(p, d)| format!("({p},{d})")).collect();
        let degrees: Vec<String> = self
            .degrees
            .iter()
            .map(|d| match d {
                None => "?".to_string(),
                Some(v) if v.is_empty() => "-".to_string(),
                Some(v) => v.iter().map(usize::to_string).collect::<Vec<_>>().join("/"),
            })
            .collect();
        let _ = writeln!(out, "verdict        {}", c.verdict);
        let _ = writeln!(out, "p, d           {}, {}", opt(c.p), opt(c.d));
        let _ = writeln!(out, "certified to   {}", opt(c.certified_to));
        let _ = writeln!(out, "terminates at  {}", opt(c.termination_degree));
        let _ = writeln!(out, "fitting pairs  {}", if pairs.is_empty() { "none".to_string() } else { pairs.join(" ") });
        let _ = writeln!(out, "degrees        {}", degrees.join(" "));
    }
}

#[derive(Serialize)]
struct ExtOut {
    ext: ExtTable,
}

impl Render for ExtOut {
    fn table(&self, out: &mut String) {
        let _ = writeln!(out, "i    cert  shift:dim");
        for row in &self.ext.rows {
            let cells: Vec<String> = row.dims.iter().map(|e| format!("{}:{}", e.shift, e.dim)).collect();
            let cert = if row.certified { "yes" } else { "no" };
            let _ = writeln!(out, "{:<4} {:<5} {}", row.i, cert, if cells.is_empty() { "0".to_string() } else { cells.join(" ") });
        }
    }
}

#[derive(Serialize)]
struct YonedaOut {
    i: usize,
    j: usize,
    products: Vec<(usize, usize, Vec<(usize, u32)>)>,
    target_dim: usize,
    image_dim: usize,
    surjective: bool,
    #[serde(skip)]
    characteristic: u32,
}

fn yoneda(r: &Resolution, i: usize, j: usize) -> Result<YonedaOut> {
    if r.certified_to().is_none_or(|t| t < i + j) {
        return Err(Error::refusal(format!(
            "Ext^{} lies beyond the certified range (certified to {})",
            i + j,
            opt(r.certified_to())
        )));
    }
    let mut cache = YonedaCache::new(r, r);
    let target_dim = r.module(i + j).rank();
    let mut span = EchelonSpace::new(r.algebra().field(), target_dim);
    let mut products = Vec::new();
    for g in 0..r.module(j).rank() {
        for (h, prod) in cache.left_products(i, j, g)?.into_iter().enumerate() {
            if prod.is_zero() {
                continue;
            }
            span.insert(&prod.coeffs);
            let terms = prod.coeffs.iter().enumerate().filter(|&(_, &c)| c != 0).map(|(c, &v)| (c, v)).collect();
            products.push((h, g, terms));
        }
    }
    products.sort();
    Ok(YonedaOut {
        i,
        j,
        products,
        target_dim,
        image_dim: span.dim(),
        surjective: span.dim() == target_dim,
        characteristic: r.algebra().field().characteristic(),
    })
}

impl Render for YonedaOut {
    fn table(&self, out: &mut String) {
        let _ = writeln!(out, "Ext^{} x Ext^{} -> Ext^{}", self.i, self.j, self.i + self.j);
        for (a, b, terms) in &self.products {
            let p = self.characteristic;
            let mut line = String::new();
            for (n, &(c, v)) in terms.iter().enumerate() {
                let (neg, m) = if v > p / 2 { (true, p - v) } else { (false, v) };
                let sign = match (n, neg) {
                    (0, false) => "",
                    (0, true) => "-",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                let coeff = if m == 1 { String::new() } else { format!("{m}*") };
                let _ = write!(line, "{sign}{coeff}e{c}");
            }
            let _ = writeln!(out, "  e{a} . e{b} = {line}");
        }
        let _ = writeln!(out, "image {} of {} ({})", self.image_dim, self.target_dim, if self.surjective { "surjective" } else { "not surjective" });
    }
}

#[derive(Serialize)]
struct GenerationOut {
    #[serde(flatten)]
    report: GenerationReport,
    #[serde(serialize_with = "display")]
    verdict: Verdict,
    #[serde(serialize_with = "display")]
    betti_verdict: Verdict,
    agree: bool,
}

fn display<S: serde::Serializer>(v: &Verdict, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Render for GenerationOut {
    fn table(&self, out: &mut String) {
        let _ = writeln!(out, "i    dim  decomposable  new (shift:count)");
        for row in &self.report.rows {
            let new: Vec<String> = row.new_generators.iter().map(|(j, c)| format!("{j}:{c}")).collect();
            let _ = writeln!(out, "{:<4} {:<4} {:<13} {}", row.i, row.dim, row.decomposable, if new.is_empty() { "-".to_string() } else { new.join(" ") });
        }
        let degs: Vec<String> = self.report.generator_degrees.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "generated in ext-degrees {}", degs.join(", "));
        if self.report.truncated {
            let _ = writeln!(out, "(truncated: rows past the certified range are omitted)");
        }
        let _ = writeln!(out, "verdict {} (betti: {}, {})", self.verdict, self.betti_verdict, if self.agree { "agree" } else { "DISAGREE" });
    }
}

#[derive(Serialize)]
struct ModuleOut {
    module: String,
    #[serde(serialize_with = "part_name")]
    part: ModulePart,
    p: usize,
    d: usize,
    classification: ModuleClassification,
    betti: BettiTable,
    generation: ModuleGeneration,
}

fn part_name<S: serde::Serializer>(p: &ModulePart, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match p {
        ModulePart::Whole => "whole",
        ModulePart::Radical => "radical",
        ModulePart::Top => "top",
    })
}

fn module_spec(doc: &InputDocument, e: &Engine, name: &str) -> Result<ModuleSpec> {
    let alg = &*e.alg;
    if name == "trivial" {
        return Ok(ModuleSpec::trivial(alg));
    }
    if name == "algebra" {
        let f0 = FreeModule::new((0..alg.num_vertices()).map(|v| Generator { vertex: v, degree: 0 }).collect());
        return Ok(ModuleSpec::of(ModulePresentation::free(alg, f0)));
    }
    if let Some(n) = name.strip_prefix("syzygy:") {
        let n: usize = n.parse().map_err(|_| Error::input(format!("`{name}`: expected syzygy:<n>")))?;
        return Ok(ModuleSpec::of(e.trivial.syzygy(n)?));
    }
    let decl = doc.module(name).ok_or_else(|| Error::input(format!("unknown module {name}")))?;
    Ok(ModuleSpec::of(doc.module_presentation(decl, &e.gb, alg)?))
}

fn module_classify(doc: &InputDocument, e: &Engine, name: &str, part: ModulePart, f: DeltaFunction) -> Result<ModuleOut> {
    let spec = module_spec(doc, e, name)?;
    let spec = match part {
        ModulePart::Whole => spec,
        ModulePart::Radical => spec.radical()?,
        ModulePart::Top => spec.top()?,
    };
    let res = minimal_resolution(&e.alg, &spec, e.bounds.max_hdeg, e.bounds.max_ideg)?;
    let betti = res.betti_table();
    Ok(ModuleOut {
        module: name.to_string(),
        part,
        p: f.p,
        d: f.d,
        classification: classify_module(&betti, f),
        generation: module_generation(&e.trivial, &res)?,
        betti,
    })
}

impl Render for ModuleOut {
    fn table(&self, out: &mut String) {
        let c = &self.classification;
        let _ = writeln!(out, "module {} ({}), δ with p = {}, d = {}", self.module, part_label(self.part), self.p, self.d);
        betti_lines(&self.betti, out);
        let verdict = if c.piecewise_koszul { "piecewise-Koszul".to_string() } else { format!("not piecewise-Koszul (row {})", opt(c.failing_row)) };
        let _ = writeln!(out, "{verdict}, s = {}, certified to {}", opt(c.s), opt(c.certified_to));
        let _ = writeln!(out, "Ext(M, A_0) generated in degree 0: {}", if self.generation.generated_in_degree_zero { "yes" } else { "no" });
    }
}

fn part_label(p: ModulePart) -> &'static str {
    match p {
        ModulePart::Whole => "M",
        ModulePart::Radical => "JM",
        ModulePart::Top => "M/JM",
    }
}

#[derive(Serialize)]
struct EkResolution {
    max_hdeg: usize,
    max_ideg: usize,
    betti: BettiTable,
    classification: Classification,
}

#[derive(Serialize)]
struct EkOut {
    k: usize,
    p: usize,
    d: usize,
    n_max: usize,
    structure_constants: StructureConstants,
    resolution: EkResolution,
}

fn ek(r: &Resolution, f: DeltaFunction, k: usize) -> Result<EkOut> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let top = r.certified_to().unwrap_or(0);
    let n_max = top / (f.p * k);
    if n_max == 0 {
        return Err(Error::refusal(format!(
            "E_{k} needs Ext^{}, beyond the certified range (certified to {})",
            f.p * k,
            opt(r.certified_to())
        )));
    }
    let sc = ek_structure_constants(r, f, k, n_max)?;
    let alg = Arc::new(ingest_structure_constants(&sc)?);
    let max_ideg = alg.max_degree();
    let res = resolve_trivial(&alg, r.max_hdeg(), max_ideg)?;
    let betti = res.betti_table();
    Ok(EkOut {
        k,
        p: f.p,
        d: f.d,
        n_max,
        structure_constants: sc,
        resolution: EkResolution { max_hdeg: r.max_hdeg(), max_ideg, classification: classify(&betti), betti },
    })
}

impl Render for EkOut {
    fn table(&self, out: &mut String) {
        let dims: Vec<String> = (0..=self.n_max)
            .map(|n| self.structure_constants.dims[&n.to_string()].iter().flatten().sum::<usize>().to_string())
            .collect();
        let _ = writeln!(out, "E_{} from Ext^(pkn), p = {}, d = {}: dims {}", self.k, self.p, self.d, dims.join(" "));
        let _ = writeln!(out, "{} nonzero products", self.structure_constants.products.len());
        let _ = writeln!(out, "re-resolved with N = {}, D = {}:", self.resolution.max_hdeg, self.resolution.max_ideg);
        betti_lines(&self.resolution.betti, out);
        let _ = writeln!(out, "verdict {}", self.resolution.classification.verdict);
    }
}

#[derive(Serialize)]
struct AritiesOut {
    p: usize,
    d: usize,
    #[serde(flatten)]
    report: ArityReport,
}

impl Render for AritiesOut {
    fn table(&self, out: &mut String) {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "p = {}, d = {}", self.p, self.d);
        let _ = writeln!(out, "support-feasible  {{{}}}", list(&self.report.support));
        let _ = writeln!(out, "closed form       {{{}}}", list(&self.report.closed_form));
        let _ = writeln!(out, "consistent        {}", if self.report.consistent { "yes" } else { "no" });
    }
}

impl Render for Reduced2lReport {
    fn table(&self, out: &mut String) {
        let _ = writeln!(out, "reduced (2,{}) structure, checked to Ext^{}", self.l, opt(self.checked_to));
        for (i, c) in [&self.condition1, &self.condition2, &self.condition3].into_iter().enumerate() {
            let status = serde_json::to_value(c.status).expect("status serializes");
            let _ = writeln!(out, "condition {}: {} [{}] {}", i + 1, status.as_str().unwrap_or(""), c.level, c.detail);
        }
        for g in &self.generation_gaps {
            let _ = writeln!(
                out,
                "E^{}: {} classes not reached by m_2; m_{} {}",
                g.n,
                g.missing,
                self.l,
                if g.m_l_feasible { "could reach them" } else { "cannot reach them" }
            );
        }
    }
}
