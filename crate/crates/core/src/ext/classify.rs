use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::resolution::{BettiTable, Resolution};

use super::delta::DeltaFunction;
use super::yoneda::{ext_basis, YonedaCache};
use crate::scalars::EchelonSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Koszul,
    DKoszul(usize),
    PiecewiseKoszul(usize, usize),
    NotPure,
    NoFit,
}

impl Verdict {
    /// Normalised verdict for a fitting pair: `d = p` is Koszul, `p = 2` is d-Koszul.
    pub fn from_pair(p: usize, d: usize) -> Self {
        if d == p {
            Verdict::Koszul
        } else if p == 2 {
            Verdict::DKoszul(d)
        } else {
            Verdict::PiecewiseKoszul(p, d)
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Koszul => "Koszul",
            Verdict::DKoszul(_) => "dKoszul",
            Verdict::PiecewiseKoszul(..) => "PK",
            Verdict::NotPure => "NotPure",
            Verdict::NoFit => "NoFit",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::DKoszul(d) => write!(f, "dKoszul({d})"),
            Verdict::PiecewiseKoszul(p, d) => write!(f, "PK({p},{d})"),
            v => f.write_str(v.name()),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub p: Option<usize>,
    pub d: Option<usize>,
    pub certified_to: Option<usize>,
    pub fitting_pairs: Vec<(usize, usize)>,
    pub termination_degree: Option<usize>,
}

impl Classification {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("classification serializes")
    }

    pub fn fits(&self, p: usize, d: usize) -> bool {
        self.fitting_pairs.contains(&(p, d))
    }

    pub fn delta(&self) -> Option<DeltaFunction> {
        Some(DeltaFunction { p: self.p?, d: self.d? })
    }
}

/// Single generator degree of a row; `Ok(None)` for an empty row, `Err(())` when mixed.
fn pure_degree(b: &BettiTable, n: usize) -> std::result::Result<Option<usize>, ()> {
    let degs = b.degrees(n);
    match degs.len() {
        0 => Ok(None),
        1 => Ok(degs.into_iter().next()),
        _ => Err(()),
    }
}

/// Betti-based classification over the certified rows.
pub fn classify(b: &BettiTable) -> Classification {
    let certified_to = b.certified_to();
    let termination_degree =
        (0..b.rows.len()).find(|&n| b.rows[n].certified && b.rows[n].generators.is_empty());
    let Some(top) = certified_to else {
        return Classification {
            verdict: Verdict::NoFit,
            p: None,
            d: None,
            certified_to,
            fitting_pairs: Vec::new(),
            termination_degree,
        };
    };
    let mut degrees = Vec::with_capacity(top + 1);
    for n in 0..=top {
        match pure_degree(b, n) {
            Ok(d) => degrees.push(d),
            Err(()) => {
                return Classification {
                    verdict: Verdict::NotPure,
                    p: None,
                    d: None,
                    certified_to,
                    fitting_pairs: Vec::new(),
                    termination_degree,
                }
            }
        }
    }
    let mut fitting_pairs = Vec::new();
    for p in 2..=top.max(2) {
        for d in p..=b.max_ideg.max(p) {
            let f = DeltaFunction { p, d };
            if degrees.iter().enumerate().all(|(n, &deg)| deg.is_none_or(|x| x == f.eval(n))) {
                fitting_pairs.push((p, d));
            }
        }
    }
    let (verdict, p, d) = match fitting_pairs.first() {
        Some(&(p, d)) => (Verdict::from_pair(p, d), Some(p), Some(d)),
        None => (Verdict::NoFit, None, None),
    };
    Classification { verdict, p, d, certified_to, fitting_pairs, termination_degree }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleClassification {
    pub piecewise_koszul: bool,
    pub p: usize,
    pub d: usize,
    pub s: Option<usize>,
    pub certified_to: Option<usize>,
    pub failing_row: Option<usize>,
}

impl ModuleClassification {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("module classification serializes")
    }
}

/// Checks that every certified row `n` is pure of degree `δ(n) + s`, with
/// `s` the degree of row 0.
pub fn classify_module(b: &BettiTable, f: DeltaFunction) -> ModuleClassification {
    let certified_to = b.certified_to();
    let mut out = ModuleClassification {
        piecewise_koszul: false,
        p: f.p,
        d: f.d,
        s: None,
        certified_to,
        failing_row: None,
    };
    let Some(top) = certified_to else {
        return out;
    };
    let s = match pure_degree(b, 0) {
        Ok(Some(s)) => s,
        _ => {
            out.failing_row = Some(0);
            return out;
        }
    };
    out.s = Some(s);
    for n in 1..=top {
        match pure_degree(b, n) {
            Ok(None) => {}
            Ok(Some(x)) if x == f.eval(n) + s => {}
            _ => {
                out.failing_row = Some(n);
                return out;
            }
        }
    }
    out.piecewise_koszul = true;
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationRow {
    pub i: usize,
    pub certified: bool,
    pub dim: usize,
    /// Distinct shifts occurring in `Ext^i`.
    pub shifts: Vec<usize>,
    pub decomposable: usize,
    /// `(shift, count)` of classes not reached by products of lower degrees.
    pub new_generators: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub rows: Vec<GenerationRow>,
    /// Ext-degrees where new algebra generators are needed.
    pub generator_degrees: Vec<usize>,
    pub truncated: bool,
}

impl GenerationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("generation report serializes")
    }
}

/// Degree-by-degree span of decomposable classes `Ext^a · Ext^b`
/// (`a, b >= 1`) inside `Ext^i`, for `i <= max_i`.
pub fn ext_generation_degrees(r: &Resolution, max_i: usize) -> Result<GenerationReport> {
    let field = r.algebra().field();
    let top = r.certified_to();
    let limit = top.map_or(0, |t| t.min(max_i));
    let truncated = top.is_none_or(|t| t < max_i);
    let mut cache = YonedaCache::new(r, r);
    let mut rows = Vec::new();
    let mut generator_degrees = Vec::new();
    if top.is_none() {
        return Ok(GenerationReport { rows, generator_degrees, truncated });
    }
    for i in 0..=limit {
        let gens = &r.module(i).generators;
        let mut by_shift: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (g, gen) in gens.iter().enumerate() {
            by_shift.entry(gen.degree).or_default().push(g);
        }
        let mut spans: BTreeMap<usize, EchelonSpace> =
            by_shift.keys().map(|&j| (j, EchelonSpace::new(field, gens.len()))).collect();
        if i >= 2 {
            for b in 1..i {
                let a = i - b;
                for g in 0..r.module(b).rank() {
                    for prod in cache.left_products(a, b, g)? {
                        if !prod.is_zero() {
                            spans.get_mut(&prod.shift).expect("product lands in an occupied shift").insert(&prod.coeffs);
                        }
                    }
                }
            }
        }
        let decomposable = spans.values().map(EchelonSpace::dim).sum();
        let new_generators: Vec<(usize, usize)> = by_shift
            .iter()
            .filter(|(j, idx)| idx.len() > spans[j].dim())
            .map(|(&j, idx)| (j, idx.len() - spans[&j].dim()))
            .collect();
        if !new_generators.is_empty() {
            generator_degrees.push(i);
        }
        rows.push(GenerationRow {
            i,
            certified: true,
            dim: gens.len(),
            shifts: by_shift.keys().copied().collect(),
            decomposable,
            new_generators,
        });
    }
    Ok(GenerationReport { rows, generator_degrees, truncated })
}

/// The generation criterion for `(p, d)`: new generators only in ext-degrees
/// `0, 1, p`, with `Ext^1` in shift 1 and `Ext^p` in shift `d`.
pub fn generation_criterion(report: &GenerationReport, p: usize, d: usize) -> bool {
    let allowed = |i: usize| i == 0 || i == 1 || i == p;
    if !report.generator_degrees.iter().all(|&i| allowed(i)) {
        return false;
    }
    let only = |i: usize, j: usize| report.rows.get(i).is_none_or(|row| row.shifts.iter().all(|&s| s == j));
    only(1, 1) && only(p, d)
}

/// Verdict read off the generation report, mirroring [`classify`].
pub fn generation_verdict(report: &GenerationReport, max_d: usize) -> Verdict {
    let top = report.rows.len().saturating_sub(1);
    for p in 2..=top.max(2) {
        for d in p..=max_d.max(p) {
            if generation_criterion(report, p, d) {
                return Verdict::from_pair(p, d);
            }
        }
    }
    Verdict::NoFit
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectivityReport {
    pub i: usize,
    pub j: usize,
    pub surjective: bool,
    pub target_dim: usize,
    pub image_dim: usize,
}

/// Whether `Ext^i · Ext^j` spans `Ext^{i+j}`; refused unless `δ` is additive on `(i, j)`.
pub fn yoneda_surjectivity_check(r: &Resolution, f: DeltaFunction, i: usize, j: usize) -> Result<SurjectivityReport> {
    if !f.is_additive(i, j) {
        return Err(crate::Error::refusal(format!(
            "δ({}) = {} differs from δ({i}) + δ({j}) = {}; the surjectivity hypothesis does not hold",
            i + j,
            f.eval(i + j),
            f.eval(i) + f.eval(j)
        )));
    }
    if r.certified_to().is_none_or(|t| t < i + j) {
        return Err(crate::Error::refusal(format!(
            "Ext^{} is beyond the certified range {:?}",
            i + j,
            r.certified_to()
        )));
    }
    let field = r.algebra().field();
    let target_dim = r.module(i + j).rank();
    let mut span = EchelonSpace::new(field, target_dim);
    let mut cache = YonedaCache::new(r, r);
    for g in 0..r.module(j).rank() {
        for prod in cache.left_products(i, j, g)? {
            span.insert(&prod.coeffs);
        }
    }
    debug_assert_eq!(ext_basis(r, i).len(), r.module(i).rank());
    Ok(SurjectivityReport { i, j, surjective: span.dim() == target_dim, target_dim, image_dim: span.dim() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleGeneration {
    pub generated_in_degree_zero: bool,
    /// `(n, dim Ext^n(M, A_0), dim E^n · Ext^0(M, A_0))`.
    pub rows: Vec<(usize, usize, usize)>,
}

/// Whether `Ext^*(M, A_0)` is generated by `Ext^0` over `E(A)` on the
/// rows certified in both resolutions.
pub fn module_generation(trivial: &Resolution, module: &Resolution) -> Result<ModuleGeneration> {
    let field = trivial.algebra().field();
    let top = match (trivial.certified_to(), module.certified_to()) {
        (Some(a), Some(b)) => a.min(b),
        _ => return Ok(ModuleGeneration { generated_in_degree_zero: true, rows: Vec::new() }),
    };
    let mut cache = YonedaCache::new(module, trivial);
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 0..=top {
        let dim = module.module(n).rank();
        let mut span = EchelonSpace::new(field, dim);
        for g in 0..module.module(0).rank() {
            for prod in cache.left_products(n, 0, g)? {
                span.insert(&prod.coeffs);
            }
        }
        ok &= span.dim() == dim;
        rows.push((n, dim, span.dim()));
    }
    Ok(ModuleGeneration { generated_in_degree_zero: ok, rows })
}
