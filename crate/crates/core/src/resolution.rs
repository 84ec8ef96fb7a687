//! Minimal graded projective resolutions, Betti tables and syzygies.
//!
//! Each stage picks minimal generators of a kernel one `(degree, vertex)`
//! slice at a time: kernel vectors that are not already reached by the
//! generators chosen in lower degrees become new generators (graded
//! Nakayama). The trivial module is resolved as the direct sum of the
//! resolutions of the simples, so every generator remembers the simple it
//! came from.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::modules::{FreeModule, Generator, ModuleMap, ModulePresentation, ModuleSlices, ModuleSpec, Part};
use crate::presentation::VertexId;
use crate::scalars::{EchelonSpace, LinearSolver};

#[derive(Clone, Debug)]
pub struct Resolution {
    alg: Arc<GradedAlgebra>,
    spec: ModuleSpec,
    max_hdeg: usize,
    max_ideg: usize,
    modules: Vec<FreeModule>,
    slices: Vec<ModuleSlices>,
    ambient_slices: ModuleSlices,
    augmentation: ModuleMap,
    // differentials[n - 1] = d_n : P_n -> P_{n-1}
    differentials: Vec<ModuleMap>,
    certified: Vec<bool>,
    origins: Option<Vec<Vec<VertexId>>>,
    solvers: Vec<Vec<Vec<OnceLock<LinearSolver>>>>,
}

/// Picks minimal generators degree by degree. `candidates(k, v)` spans the
/// submodule being covered in slice `(k, v)` of `target`; `modulo(k, v)` spans
/// a subspace that is already zero in the quotient.
fn choose_generators(
    alg: &GradedAlgebra,
    target: &FreeModule,
    target_slices: &ModuleSlices,
    max_ideg: usize,
    mut candidates: impl FnMut(usize, VertexId) -> Vec<Vec<u32>>,
    mut modulo: impl FnMut(usize, VertexId) -> Vec<Vec<u32>>,
) -> (FreeModule, Vec<Vec<u32>>) {
    let field = alg.field();
    let mut gens: Vec<Generator> = Vec::new();
    let mut images: Vec<Vec<u32>> = Vec::new();
    for k in 0..=max_ideg {
        for v in 0..alg.num_vertices() {
            let cand = candidates(k, v);
            if cand.is_empty() {
                continue;
            }
            let dim = target_slices.get(k, v).len();
            let mut span = EchelonSpace::new(field, dim);
            for m in modulo(k, v) {
                span.insert(&m);
            }
            for (g, gen) in gens.iter().enumerate() {
                if gen.degree >= k {
                    continue;
                }
                for &w in alg.words_between(k - gen.degree, gen.vertex, v) {
                    let y = target_slices.right_multiply(alg, target, &images[g], gen.degree, gen.vertex, k - gen.degree, w);
                    span.insert(&y);
                }
            }
            for c in cand {
                if span.dim() == dim {
                    break;
                }
                if span.insert(&c) {
                    gens.push(Generator { vertex: v, degree: k });
                    images.push(c);
                }
            }
        }
    }
    (FreeModule::new(gens), images)
}

fn unit(len: usize, pos: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[pos] = 1;
    v
}

/// Largest possible jump between the top generator degrees of consecutive
/// stages, when one is known.
fn degree_jump(alg: &GradedAlgebra) -> Option<usize> {
    if let Some(top) = alg.top_degree() {
        return Some(top);
    }
    alg.groebner_degree().map(|t| t.saturating_sub(1).max(1))
}

fn resolve_spec(alg: &Arc<GradedAlgebra>, spec: &ModuleSpec, max_hdeg: usize, max_ideg: usize) -> Resolution {
    let field = alg.field();
    let nv = alg.num_vertices();
    let f0 = spec.ambient().clone();
    let ambient_slices = f0.slices(alg, max_ideg);
    let rel = &spec.presentation.relations;
    let rel_slices = rel.source.slices(alg, max_ideg);

    // Basis of I (relations, plus J F0 when working modulo the radical) per slice.
    let mut modulo_basis: Vec<Vec<Vec<Vec<u32>>>> = Vec::with_capacity(max_ideg + 1);
    for k in 0..=max_ideg {
        let mut per_v = Vec::with_capacity(nv);
        for v in 0..nv {
            let slice = ambient_slices.get(k, v);
            let mut space = EchelonSpace::new(field, slice.len());
            if !rel.source.is_zero() && !rel_slices.get(k, v).is_empty() {
                let m = rel.slice_matrix(alg, &rel_slices, &ambient_slices, k, v);
                for c in 0..m.cols() {
                    space.insert(&m.column(c));
                }
            }
            if spec.mod_radical {
                for (pos, (g, _)) in slice.entries().enumerate() {
                    if f0.generators[g].degree < k {
                        space.insert(&unit(slice.len(), pos));
                    }
                }
            }
            per_v.push(space.basis().to_vec());
        }
        modulo_basis.push(per_v);
    }

    let (p0, aug_images) = choose_generators(
        alg,
        &f0,
        &ambient_slices,
        max_ideg,
        |k, v| {
            let slice = ambient_slices.get(k, v);
            slice
                .entries()
                .enumerate()
                .filter(|&(_, (g, _))| spec.part == Part::Whole || f0.generators[g].degree < k)
                .map(|(pos, _)| unit(slice.len(), pos))
                .collect()
        },
        |k, v| modulo_basis[k][v].clone(),
    );
    let augmentation = ModuleMap { source: p0.clone(), target: f0.clone(), images: aug_images };

    let jump = degree_jump(alg);
    let mut bound0 = f0.max_degree();
    if spec.part == Part::Radical {
        bound0 = match (bound0, alg.top_degree()) {
            (Some(b), Some(top)) => Some(b + top),
            (None, _) => None,
            _ => Some(usize::MAX),
        };
    }
    let mut certified = vec![bound0.is_none_or(|b| b <= max_ideg)];
    let mut slices = vec![p0.slices(alg, max_ideg)];
    let mut modules = vec![p0];
    let mut differentials: Vec<ModuleMap> = Vec::new();

    for n in 1..=max_hdeg {
        let prev = &modules[n - 1];
        let prev_slices = &slices[n - 1];
        let (map, tgt_slices): (&ModuleMap, &ModuleSlices) = if n == 1 {
            (&augmentation, &ambient_slices)
        } else {
            (&differentials[n - 2], &slices[n - 2])
        };
        let (pn, images) = choose_generators(
            alg,
            prev,
            prev_slices,
            max_ideg,
            |k, v| {
                let src = prev_slices.get(k, v);
                if src.is_empty() {
                    return Vec::new();
                }
                let m = map.slice_matrix(alg, prev_slices, tgt_slices, k, v);
                if n == 1 && !modulo_basis[k][v].is_empty() {
                    // kernel of P_0 -> F0 / I: solve [M | I] (x, y) = 0 and keep x
                    let extra = &modulo_basis[k][v];
                    let mut cols: Vec<Vec<u32>> = (0..m.cols()).map(|c| m.column(c)).collect();
                    cols.extend(extra.iter().cloned());
                    let big = crate::scalars::ScalarMatrix::from_columns(field, m.rows(), &cols);
                    big.kernel_basis().into_iter().map(|x| x[..src.len()].to_vec()).collect()
                } else {
                    m.kernel_basis()
                }
            },
            |_, _| Vec::new(),
        );
        let prev_certified = certified[n - 1];
        let ok = prev_certified
            && match prev.max_degree() {
                None => true,
                Some(top) => jump.is_some_and(|j| top + j <= max_ideg),
            };
        certified.push(ok);
        slices.push(pn.slices(alg, max_ideg));
        differentials.push(ModuleMap { source: pn.clone(), target: prev.clone(), images });
        modules.push(pn);
    }

    let solvers = (1..=max_hdeg).map(|_| (0..=max_ideg).map(|_| (0..nv).map(|_| OnceLock::new()).collect()).collect()).collect();
    Resolution {
        alg: Arc::clone(alg),
        spec: spec.clone(),
        max_hdeg,
        max_ideg,
        modules,
        slices,
        ambient_slices,
        augmentation,
        differentials,
        certified,
        origins: None,
        solvers,
    }
}

/// Re-indexes a vector of the `(k, v)` slice of a summand into the direct sum.
fn embed(
    alg: &GradedAlgebra,
    part_slices: &ModuleSlices,
    whole: &FreeModule,
    whole_slices: &ModuleSlices,
    offset: usize,
    x: &[u32],
    k: usize,
    v: VertexId,
) -> Vec<u32> {
    let src = part_slices.get(k, v);
    let dst = whole_slices.get(k, v);
    let mut out = vec![0; dst.len()];
    for (pos, &c) in x.iter().enumerate() {
        if c != 0 {
            let (g, w) = src.entry(pos);
            out[dst.position(alg, whole, g + offset, w)] = c;
        }
    }
    out
}

fn direct_sum(alg: &Arc<GradedAlgebra>, parts: Vec<Resolution>, spec: ModuleSpec) -> Resolution {
    let nv = alg.num_vertices();
    let (max_hdeg, max_ideg) = (parts[0].max_hdeg, parts[0].max_ideg);
    let f0 = spec.ambient().clone();
    let ambient_slices = f0.slices(alg, max_ideg);
    let mut modules = Vec::new();
    let mut origins = Vec::new();
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for n in 0..=max_hdeg {
        let mut gens = Vec::new();
        let mut orig = Vec::new();
        let mut offs = Vec::new();
        for (u, r) in parts.iter().enumerate() {
            offs.push(gens.len());
            gens.extend_from_slice(&r.modules[n].generators);
            orig.extend(std::iter::repeat_n(u, r.modules[n].rank()));
        }
        modules.push(FreeModule::new(gens));
        origins.push(orig);
        offsets.push(offs);
    }
    let slices: Vec<ModuleSlices> = modules.iter().map(|m| m.slices(alg, max_ideg)).collect();

    let mut aug_images = Vec::new();
    for (u, r) in parts.iter().enumerate() {
        for (g, img) in r.modules[0].generators.iter().zip(&r.augmentation.images) {
            aug_images.push(embed(alg, &r.ambient_slices, &f0, &ambient_slices, u, img, g.degree, g.vertex));
        }
    }
    let augmentation = ModuleMap { source: modules[0].clone(), target: f0.clone(), images: aug_images };
    let mut differentials = Vec::new();
    for n in 1..=max_hdeg {
        let mut images = Vec::new();
        for (u, r) in parts.iter().enumerate() {
            let d = &r.differentials[n - 1];
            for (g, img) in d.source.generators.iter().zip(&d.images) {
                images.push(embed(alg, &r.slices[n - 1], &modules[n - 1], &slices[n - 1], offsets[n - 1][u], img, g.degree, g.vertex));
            }
        }
        differentials.push(ModuleMap { source: modules[n].clone(), target: modules[n - 1].clone(), images });
    }
    let certified = (0..=max_hdeg).map(|n| parts.iter().all(|r| r.certified[n])).collect();
    let solvers = (1..=max_hdeg).map(|_| (0..=max_ideg).map(|_| (0..nv).map(|_| OnceLock::new()).collect()).collect()).collect();
    Resolution {
        alg: Arc::clone(alg),
        spec,
        max_hdeg,
        max_ideg,
        modules,
        slices,
        ambient_slices,
        augmentation,
        differentials,
        certified,
        origins: Some(origins),
        solvers,
    }
}

/// Minimal graded projective resolution of `spec` through homological degree
/// `max_hdeg`, exact in internal degrees `<= max_ideg`.
pub fn minimal_resolution(
    alg: &Arc<GradedAlgebra>,
    spec: &ModuleSpec,
    max_hdeg: usize,
    max_ideg: usize,
) -> Result<Resolution> {
    if max_ideg > alg.max_degree() {
        return Err(Error::input(format!(
            "internal degree bound {max_ideg} exceeds the algebra's truncation degree {}",
            alg.max_degree()
        )));
    }
    if let Some(t) = alg.relation_degree() {
        if max_ideg < t {
            return Err(Error::input(format!(
                "internal degree bound {max_ideg} is below the relation degree {t}"
            )));
        }
    }
    if spec.presentation.relations.target.generators.iter().any(|g| g.vertex >= alg.num_vertices()) {
        return Err(Error::input("module generator at an unknown vertex"));
    }
    if *spec == ModuleSpec::trivial(alg) {
        let parts = (0..alg.num_vertices())
            .map(|v| resolve_spec(alg, &ModuleSpec::simple(alg, v), max_hdeg, max_ideg))
            .collect();
        return Ok(direct_sum(alg, parts, spec.clone()));
    }
    Ok(resolve_spec(alg, spec, max_hdeg, max_ideg))
}

/// Resolution of the trivial module `A_0 = A/J`.
pub fn resolve_trivial(alg: &Arc<GradedAlgebra>, max_hdeg: usize, max_ideg: usize) -> Result<Resolution> {
    minimal_resolution(alg, &ModuleSpec::trivial(alg), max_hdeg, max_ideg)
}

impl Resolution {
    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.alg
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn max_hdeg(&self) -> usize {
        self.max_hdeg
    }

    pub fn max_ideg(&self) -> usize {
        self.max_ideg
    }

    pub fn module(&self, n: usize) -> &FreeModule {
        &self.modules[n]
    }

    pub fn slices(&self, n: usize) -> &ModuleSlices {
        &self.slices[n]
    }

    pub fn ambient_slices(&self) -> &ModuleSlices {
        &self.ambient_slices
    }

    pub fn augmentation(&self) -> &ModuleMap {
        &self.augmentation
    }

    /// `d_n : P_n -> P_{n-1}` for `1 <= n <= max_hdeg`.
    pub fn differential(&self, n: usize) -> &ModuleMap {
        &self.differentials[n - 1]
    }

    pub fn is_certified(&self, n: usize) -> bool {
        self.certified.get(n).copied().unwrap_or(false)
    }

    /// Largest `n` such that rows `0..=n` are certified.
    pub fn certified_to(&self) -> Option<usize> {
        self.certified.iter().position(|c| !c).map_or(Some(self.max_hdeg), |i| i.checked_sub(1))
    }

    /// The simple each generator of `P_n` resolves, for the trivial module.
    pub fn origins(&self, n: usize) -> Option<&[VertexId]> {
        self.origins.as_ref().map(|o| o[n].as_slice())
    }

    /// First certified homological degree with `P_n = 0`.
    pub fn termination_degree(&self) -> Option<usize> {
        (0..=self.max_hdeg).find(|&n| self.certified[n] && self.modules[n].is_zero())
    }

    /// Cached solver for the `(k, v)` slice of `d_n`.
    pub fn solver(&self, n: usize, k: usize, v: VertexId) -> &LinearSolver {
        self.solvers[n - 1][k][v].get_or_init(|| {
            LinearSolver::new(&self.differentials[n - 1].slice_matrix(&self.alg, &self.slices[n], &self.slices[n - 1], k, v))
        })
    }

    pub fn betti_table(&self) -> BettiTable {
        betti_table(self)
    }

    /// `Ω^n(M) = im d_n ≅ coker(d_{n+1})`, presented by `P_{n+1} -> P_n`.
    pub fn syzygy(&self, n: usize) -> Result<ModulePresentation> {
        if n + 1 > self.max_hdeg {
            return Err(Error::refusal(format!(
                "syzygy {n} needs homological degree {} but the resolution stops at {}",
                n + 1,
                self.max_hdeg
            )));
        }
        if !self.is_certified(n + 1) {
            return Err(Error::refusal(format!(
                "syzygy {n} needs row {} of the resolution, which is not certified at internal degree {}",
                n + 1,
                self.max_ideg
            )));
        }
        Ok(ModulePresentation::new(self.differentials[n].clone()))
    }

    /// Checks `d∘d = 0`, minimality and exactness on every in-range slice.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let alg = &*self.alg;
        let nv = alg.num_vertices();
        let field = alg.field();
        for n in 1..=self.max_hdeg {
            let d = &self.differentials[n - 1];
            let tgt = &self.slices[n - 1];
            for (g, (gen, img)) in d.source.generators.iter().zip(&d.images).enumerate() {
                let slice = tgt.get(gen.degree, gen.vertex);
                for (pos, &c) in img.iter().enumerate() {
                    let (h, _) = slice.entry(pos);
                    if c != 0 && d.target.generators[h].degree == gen.degree {
                        return Err(format!("d_{n} is not minimal at generator {g}"));
                    }
                }
            }
        }
        for n in 1..=self.max_hdeg {
            for k in 0..=self.max_ideg {
                for v in 0..nv {
                    let mid = self.slices[n - 1].get(k, v).len();
                    let dn = self.differentials[n - 1].slice_matrix(alg, &self.slices[n], &self.slices[n - 1], k, v);
                    let (below, below_rank) = if n == 1 {
                        // P_0 -> F0 / I
                        let m = self.augmentation.slice_matrix(alg, &self.slices[0], &self.ambient_slices, k, v);
                        let mut space = EchelonSpace::new(field, self.ambient_slices.get(k, v).len());
                        let rel = &self.spec.presentation.relations;
                        if !rel.source.is_zero() {
                            let rs = rel.source.slices(alg, self.max_ideg);
                            let r = rel.slice_matrix(alg, &rs, &self.ambient_slices, k, v);
                            for c in 0..r.cols() {
                                space.insert(&r.column(c));
                            }
                        }
                        if self.spec.mod_radical {
                            let s = self.ambient_slices.get(k, v);
                            for (pos, (g, _)) in s.entries().enumerate() {
                                if self.spec.ambient().generators[g].degree < k {
                                    space.insert(&unit(s.len(), pos));
                                }
                            }
                        }
                        let base = space.dim();
                        for c in 0..m.cols() {
                            space.insert(&m.column(c));
                        }
                        (m, space.dim() - base)
                    } else {
                        let m = self.differentials[n - 2].slice_matrix(alg, &self.slices[n - 1], &self.slices[n - 2], k, v);
                        let r = m.rank();
                        (m, r)
                    };
                    if dn.cols() > 0 && below.rows() > 0 && n >= 2 && !below.mul(&dn).is_zero() {
                        return Err(format!("d_{} d_{n} != 0 in slice ({k},{v})", n - 1));
                    }
                    let kernel = mid - below_rank;
                    let image = dn.rank();
                    if image != kernel {
                        return Err(format!(
                            "not exact at P_{} in slice ({k},{v}): kernel {kernel}, image {image}",
                            n - 1
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub vertex: String,
    pub degree: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub n: usize,
    pub certified: bool,
    pub generators: Vec<BettiEntry>,
}

/// Generator counts `β(n, j, v)` of a resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub rows: Vec<BettiRow>,
    #[serde(skip)]
    pub max_ideg: usize,
    #[serde(skip)]
    pub vertices: Vec<String>,
    /// `(origin, vertex, degree) -> count` per row, for resolutions of `A_0`.
    #[serde(skip)]
    pub pairs: Option<Vec<BTreeMap<(usize, usize, usize), usize>>>,
}

impl BettiTable {
    /// Builds a table from per-row `(vertex, degree, count)` triples.
    pub fn from_counts(vertices: Vec<String>, max_ideg: usize, rows: Vec<(bool, Vec<(usize, usize, usize)>)>) -> Self {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(n, (certified, counts))| {
                let mut agg: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for (v, j, c) in counts {
                    if c > 0 {
                        *agg.entry((j, v)).or_default() += c;
                    }
                }
                BettiRow {
                    n,
                    certified,
                    generators: agg
                        .into_iter()
                        .map(|((degree, v), count)| BettiEntry { vertex: vertices[v].clone(), degree, count })
                        .collect(),
                }
            })
            .collect();
        Self { rows, max_ideg, vertices, pairs: None }
    }

    pub fn degrees(&self, n: usize) -> BTreeSet<usize> {
        self.rows[n].generators.iter().map(|e| e.degree).collect()
    }

    pub fn total(&self, n: usize, j: usize) -> usize {
        self.rows[n].generators.iter().filter(|e| e.degree == j).map(|e| e.count).sum()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.rows[n].generators.iter().map(|e| e.count).sum()
    }

    pub fn certified_to(&self) -> Option<usize> {
        let first_bad = self.rows.iter().position(|r| !r.certified).unwrap_or(self.rows.len());
        first_bad.checked_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("betti table serializes")
    }
}

pub fn betti_table(r: &Resolution) -> BettiTable {
    let rows = (0..=r.max_hdeg)
        .map(|n| (r.certified[n], r.modules[n].generators.iter().map(|g| (g.vertex, g.degree, 1)).collect()))
        .collect();
    let mut t = BettiTable::from_counts(r.alg.vertex_labels().to_vec(), r.max_ideg, rows);
    t.pairs = r.origins.as_ref().map(|o| {
        (0..=r.max_hdeg)
            .map(|n| {
                let mut m = BTreeMap::new();
                for (g, &u) in r.modules[n].generators.iter().zip(&o[n]) {
                    *m.entry((u, g.vertex, g.degree)).or_default() += 1;
                }
                m
            })
            .collect()
    });
    t
}

/// Re-resolves `Ω^n` of `r`'s module from its presentation.
pub fn resolve_syzygy(r: &Resolution, n: usize, max_hdeg: usize) -> Result<Resolution> {
    let pres = r.syzygy(n)?;
    minimal_resolution(r.algebra(), &ModuleSpec::of(pres), max_hdeg, r.max_ideg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::algebra_from_presentation;
    use crate::presentation::{AlgebraElement, Quiver, QuiverPresentation};
    use crate::scalars::PrimeField;

    fn loop_power(d: usize, deg: usize) -> Arc<GradedAlgebra> {
        let f = PrimeField::new(32003).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = AlgebraElement::from_path(q.path(&vec!["x"; d]).unwrap());
        Arc::new(algebra_from_presentation(&QuiverPresentation::new(q, vec![r], f), deg).unwrap())
    }

    fn degree_sequence(r: &Resolution) -> Vec<Vec<usize>> {
        (0..=r.max_hdeg()).map(|n| r.module(n).generators.iter().map(|g| g.degree).collect()).collect()
    }

    #[test]
    fn x_squared_is_periodic() {
        let alg = loop_power(2, 7);
        let r = resolve_trivial(&alg, 6, 7).unwrap();
        assert_eq!(degree_sequence(&r), (0..=6).map(|n| vec![n]).collect::<Vec<_>>());
        assert_eq!(r.certified_to(), Some(6));
        r.check_invariants().unwrap();
    }

    #[test]
    fn x_cubed_jumps() {
        let alg = loop_power(3, 8);
        let r = resolve_trivial(&alg, 4, 8).unwrap();
        assert_eq!(degree_sequence(&r), vec![vec![0], vec![1], vec![3], vec![4], vec![6]]);
        r.check_invariants().unwrap();
    }

    #[test]
    fn short_bound_is_not_certified() {
        let alg = loop_power(3, 4);
        let r = resolve_trivial(&alg, 4, 4).unwrap();
        assert!(r.is_certified(2));
        assert!(!r.is_certified(3));
        assert_eq!(r.certified_to(), Some(2));
    }

    #[test]
    fn first_syzygy_is_radical() {
        let alg = loop_power(2, 6);
        let r = resolve_trivial(&alg, 4, 6).unwrap();
        let omega = r.syzygy(1).unwrap();
        assert_eq!(omega.shift(), Some(1));
        let s = minimal_resolution(&alg, &ModuleSpec::of(omega), 3, 6).unwrap();
        assert_eq!(degree_sequence(&s), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert!(r.syzygy(4).unwrap_err().is_refusal());
    }

    #[test]
    fn rejects_small_internal_bound() {
        let alg = loop_power(3, 6);
        assert!(!resolve_trivial(&alg, 2, 2).unwrap_err().is_refusal());
        assert!(resolve_trivial(&alg, 2, 9).is_err());
    }

    fn staircase_algebra(deg: usize) -> Arc<GradedAlgebra> {
        let f = PrimeField::new(32003).unwrap();
        let q = Quiver::new(
            &["1", "2", "3", "4", "5"],
            &[
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("a3", "2", "3"),
                ("a4", "3", "4"),
                ("a5", "3", "4"),
                ("a6", "3", "4"),
                ("a7", "4", "5"),
            ],
        )
        .unwrap();
        let p = |l: &[&str]| AlgebraElement::from_path(q.path(l).unwrap());
        let diff = |a: &[&str], b: &[&str]| {
            let mut e = p(a);
            e.add_term(f, q.path(b).unwrap(), f.neg(1));
            e
        };
        let rels = vec![
            diff(&["a1", "a2"], &["a1", "a3"]),
            diff(&["a4", "a7"], &["a5", "a7"]),
            diff(&["a5", "a7"], &["a6", "a7"]),
            p(&["a2", "a4"]),
            p(&["a3", "a6"]),
        ];
        Arc::new(algebra_from_presentation(&QuiverPresentation::new(q, rels, f), deg).unwrap())
    }

    #[test]
    fn staircase_example() {
        let alg = staircase_algebra(9);
        assert_eq!(&alg.dims()[..6], &[5, 7, 6, 1, 0, 0]);
        let r = resolve_trivial(&alg, 6, 9).unwrap();
        let t = r.betti_table();
        let degs: Vec<BTreeSet<usize>> = (0..=6).map(|n| t.degrees(n)).collect();
        let expect: Vec<BTreeSet<usize>> =
            [vec![0], vec![1], vec![2], vec![4], vec![], vec![], vec![]].into_iter().map(|v| v.into_iter().collect()).collect();
        assert_eq!(degs, expect);
        assert_eq!(r.certified_to(), Some(6));
        assert_eq!(r.termination_degree(), Some(4));
        r.check_invariants().unwrap();
    }

    #[test]
    fn commuting_loops() {
        let f = PrimeField::new(32003).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let mut rel = AlgebraElement::from_path(q.path(&["x", "y"]).unwrap());
        rel.add_term(f, q.path(&["y", "x"]).unwrap(), f.neg(1));
        let alg = Arc::new(algebra_from_presentation(&QuiverPresentation::new(q, vec![rel], f), 6).unwrap());
        let r = resolve_trivial(&alg, 4, 6).unwrap();
        let t = r.betti_table();
        assert_eq!((0..=4).map(|n| t.rank(n)).collect::<Vec<_>>(), vec![1, 2, 1, 0, 0]);
        assert_eq!(r.termination_degree(), Some(3));
        r.check_invariants().unwrap();
    }
}
