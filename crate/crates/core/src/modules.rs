//! Graded free right modules over a [`GradedAlgebra`], module maps stored
//! through generator images, degree slices, and module presentations.
//!
//! A generator `g` sitting at vertex `v` in degree `s` spans the shifted
//! projective `g·A` whose elements are `g·w` with `w` a path starting at `v`.
//! The degree-`k` slice of a free module splits by the end vertex of `w`; the
//! resolution engine works one `(degree, end vertex)` slice at a time.

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::presentation::VertexId;
use crate::scalars::ScalarMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Generator {
    pub vertex: VertexId,
    pub degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeModule {
    pub generators: Vec<Generator>,
}

impl FreeModule {
    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.degree).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.degree).max()
    }

    /// Degree-`k` slice ending at vertex `v`.
    pub fn slice(&self, alg: &GradedAlgebra, k: usize, v: VertexId) -> Slice {
        let mut offsets = Vec::with_capacity(self.generators.len());
        let mut entries = Vec::new();
        for (gi, g) in self.generators.iter().enumerate() {
            if g.degree > k {
                offsets.push(u32::MAX);
                continue;
            }
            offsets.push(entries.len() as u32);
            for &w in alg.words_between(k - g.degree, g.vertex, v) {
                entries.push((gi as u32, w as u32));
            }
        }
        Slice { degree: k, vertex: v, offsets, entries }
    }

    /// Full degree-`k` component: generators in order, then words of degree
    /// `k - deg(g)` starting at the generator's vertex in basis order.
    pub fn degree_slice(&self, alg: &GradedAlgebra, k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (gi, g) in self.generators.iter().enumerate() {
            if g.degree > k || k - g.degree > alg.max_degree() {
                continue;
            }
            for &w in alg.words_from(k - g.degree, g.vertex) {
                out.push((gi, w));
            }
        }
        out
    }

    /// All slices `(k, v)` for `k <= max_degree`.
    pub fn slices(&self, alg: &GradedAlgebra, max_degree: usize) -> ModuleSlices {
        let nv = alg.num_vertices();
        ModuleSlices {
            slices: (0..=max_degree).map(|k| (0..nv).map(|v| self.slice(alg, k, v)).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        FreeModule { generators }
    }
}

/// Ordered basis of one `(degree, end vertex)` slice of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub degree: usize,
    pub vertex: VertexId,
    offsets: Vec<u32>,
    entries: Vec<(u32, u32)>,
}

impl Slice {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(generator, word index)` of the basis vector at `pos`.
    #[inline]
    pub fn entry(&self, pos: usize) -> (usize, usize) {
        let (g, w) = self.entries[pos];
        (g as usize, w as usize)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|&(g, w)| (g as usize, w as usize))
    }

    /// Position of `g·w`, where `w` has degree `k - deg(g)`.
    #[inline]
    pub fn position(&self, alg: &GradedAlgebra, module: &FreeModule, g: usize, w: usize) -> usize {
        let off = self.offsets[g];
        debug_assert!(off != u32::MAX);
        off as usize + alg.local_position(self.degree - module.generators[g].degree, w)
    }

    /// Position of the generator itself (degree-0 word), when it lies in this slice.
    pub fn generator_position(&self, module: &FreeModule, g: usize) -> Option<usize> {
        let gen = module.generators[g];
        (gen.degree == self.degree && gen.vertex == self.vertex).then(|| self.offsets[g] as usize)
    }
}

/// Precomputed slices of one free module.
#[derive(Clone, Debug, Default)]
pub struct ModuleSlices {
    slices: Vec<Vec<Slice>>,
}

impl ModuleSlices {
    pub fn get(&self, k: usize, v: VertexId) -> &Slice {
        &self.slices[k][v]
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len().saturating_sub(1)
    }

    /// `x · w` for `x` in slice `(k, v)` and `w = basis_l[word]` starting at `v`.
    pub fn right_multiply(
        &self,
        alg: &GradedAlgebra,
        module: &FreeModule,
        x: &[u32],
        k: usize,
        v: VertexId,
        l: usize,
        word: usize,
    ) -> Vec<u32> {
        let f = alg.field();
        let src = self.get(k, v);
        let tv = alg.basis(l)[word].target;
        let dst = self.get(k + l, tv);
        let mut out = vec![0u32; dst.len()];
        for (pos, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (g, u) = src.entry(pos);
            let du = k - module.generators[g].degree;
            for &(r, z) in alg.product(du, u, l, word) {
                let p = dst.position(alg, module, g, r as usize);
                out[p] = f.mul_add(out[p], c, z);
            }
        }
        out
    }
}

/// Homogeneous degree-0 map between free modules, determined by the image of
/// each source generator (a vector in the target slice at the generator's
/// degree and vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: FreeModule,
    pub target: FreeModule,
    pub images: Vec<Vec<u32>>,
}

impl ModuleMap {
    pub fn new(alg: &GradedAlgebra, source: FreeModule, target: FreeModule, images: Vec<Vec<u32>>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::input("one image per source generator is required"));
        }
        for (g, img) in source.generators.iter().zip(&images) {
            if g.degree > alg.max_degree() {
                return Err(Error::input("generator degree above the algebra's truncation"));
            }
            let expect = target.slice(alg, g.degree, g.vertex).len();
            if img.len() != expect {
                return Err(Error::input(format!(
                    "image of a generator in degree {} has length {} (slice has dimension {expect})",
                    g.degree,
                    img.len()
                )));
            }
        }
        Ok(Self { source, target, images })
    }

    pub fn zero(alg: &GradedAlgebra, source: FreeModule, target: FreeModule) -> Self {
        let images =
            source.generators.iter().map(|g| vec![0; target.slice(alg, g.degree, g.vertex).len()]).collect();
        Self { source, target, images }
    }

    pub fn identity(alg: &GradedAlgebra, module: FreeModule) -> Self {
        let images = module
            .generators
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let s = module.slice(alg, g.degree, g.vertex);
                let mut v = vec![0; s.len()];
                v[s.generator_position(&module, gi).expect("generator in own slice")] = 1;
                v
            })
            .collect();
        Self { source: module.clone(), target: module, images }
    }

    /// Matrix of the map on the `(k, v)` slices (rows: target, columns: source).
    pub fn slice_matrix(
        &self,
        alg: &GradedAlgebra,
        source_slices: &ModuleSlices,
        target_slices: &ModuleSlices,
        k: usize,
        v: VertexId,
    ) -> ScalarMatrix {
        let src = source_slices.get(k, v);
        let dst = target_slices.get(k, v);
        let columns: Vec<Vec<u32>> = src
            .entries()
            .map(|(g, w)| {
                let gen = self.source.generators[g];
                target_slices.right_multiply(
                    alg,
                    &self.target,
                    &self.images[g],
                    gen.degree,
                    gen.vertex,
                    k - gen.degree,
                    w,
                )
            })
            .collect();
        ScalarMatrix::from_columns(alg.field(), dst.len(), &columns)
    }

    /// `other ∘ self`.
    pub fn then(&self, alg: &GradedAlgebra, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::input("maps are not composable"));
        }
        let d = self.source.max_degree().unwrap_or(0);
        let mid = self.target.slices(alg, d);
        let end = other.target.slices(alg, d);
        let images = self
            .source
            .generators
            .iter()
            .zip(&self.images)
            .map(|(g, x)| other.slice_matrix(alg, &mid, &end, g.degree, g.vertex).mul_vec(x))
            .collect();
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), images })
    }
}

/// Matrix of `f` on the full degree-`k` components, in [`FreeModule::degree_slice`] order.
pub fn map_slice(f: &ModuleMap, alg: &GradedAlgebra, k: usize) -> ScalarMatrix {
    let field = alg.field();
    let src_basis = f.source.degree_slice(alg, k);
    let dst_basis = f.target.degree_slice(alg, k);
    let dst_index: std::collections::HashMap<(usize, usize), usize> =
        dst_basis.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut m = ScalarMatrix::zeros(field, dst_basis.len(), src_basis.len());
    if src_basis.is_empty() {
        return m;
    }
    let tslices = f.target.slices(alg, k);
    for (col, &(g, w)) in src_basis.iter().enumerate() {
        let gen = f.source.generators[g];
        let img = tslices.right_multiply(alg, &f.target, &f.images[g], gen.degree, gen.vertex, k - gen.degree, w);
        let tv = alg.basis(k - gen.degree)[w].target;
        let slice = tslices.get(k, tv);
        for (pos, &c) in img.iter().enumerate() {
            if c != 0 {
                m.set(dst_index[&slice.entry(pos)], col, c);
            }
        }
    }
    m
}

/// Degree-`k` basis of a free module as `(generator, word)` pairs.
pub fn degree_slice(module: &FreeModule, alg: &GradedAlgebra, k: usize) -> Vec<(usize, usize)> {
    module.degree_slice(alg, k)
}

/// A module `coker(relations: F1 -> F0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub relations: ModuleMap,
}

impl ModulePresentation {
    pub fn new(relations: ModuleMap) -> Self {
        Self { relations }
    }

    /// The free module on the given generators.
    pub fn free(alg: &GradedAlgebra, generators: FreeModule) -> Self {
        Self { relations: ModuleMap::zero(alg, FreeModule::default(), generators) }
    }

    pub fn generators(&self) -> &FreeModule {
        &self.relations.target
    }

    /// Smallest generator degree.
    pub fn shift(&self) -> Option<usize> {
        self.relations.target.min_degree()
    }

    /// `A_0 = coker(⊕ g·A -> ⊕_v e_v A)` where `g` runs over minimal algebra
    /// generators of the radical.
    pub fn trivial(alg: &GradedAlgebra) -> Self {
        let nv = alg.num_vertices();
        let target = FreeModule::new((0..nv).map(|v| Generator { vertex: v, degree: 0 }).collect());
        let gens = alg.radical_generators();
        let source =
            FreeModule::new(gens.iter().map(|&(k, i)| Generator { vertex: alg.basis(k)[i].target, degree: k }).collect());
        let images = gens
            .iter()
            .map(|&(k, i)| {
                let w = &alg.basis(k)[i];
                let s = target.slice(alg, k, w.target);
                let mut v = vec![0; s.len()];
                v[s.position(alg, &target, w.source, i)] = 1;
                v
            })
            .collect();
        Self { relations: ModuleMap { source, target, images } }
    }
}

/// Which submodule of the presented module is being resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// `M` itself.
    Whole,
    /// `JM`.
    Radical,
}

/// A module described as `(part + I) / I` inside the free module `F0`, where
/// `I` is the image of the presentation's relations, enlarged by `J·F0` when
/// `mod_radical` is set. Covers `M`, `JM` and `M/JM` uniformly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub presentation: ModulePresentation,
    pub part: Part,
    pub mod_radical: bool,
}

impl ModuleSpec {
    pub fn of(presentation: ModulePresentation) -> Self {
        Self { presentation, part: Part::Whole, mod_radical: false }
    }

    /// `⊕_v S_v`.
    pub fn trivial(alg: &GradedAlgebra) -> Self {
        let nv = alg.num_vertices();
        let f0 = FreeModule::new((0..nv).map(|v| Generator { vertex: v, degree: 0 }).collect());
        Self { presentation: ModulePresentation::free(alg, f0), part: Part::Whole, mod_radical: true }
    }

    /// The simple module at `v`.
    pub fn simple(alg: &GradedAlgebra, v: VertexId) -> Self {
        let f0 = FreeModule::new(vec![Generator { vertex: v, degree: 0 }]);
        Self { presentation: ModulePresentation::free(alg, f0), part: Part::Whole, mod_radical: true }
    }

    /// `JM`; only defined for `M` itself.
    pub fn radical(&self) -> Result<Self> {
        if self.part != Part::Whole || self.mod_radical {
            return Err(Error::input("the radical is only formed from a plain presentation"));
        }
        Ok(Self { part: Part::Radical, ..self.clone() })
    }

    /// `M/JM`.
    pub fn top(&self) -> Result<Self> {
        if self.part != Part::Whole {
            return Err(Error::input("the top is only formed from a plain presentation"));
        }
        Ok(Self { mod_radical: true, ..self.clone() })
    }

    pub fn ambient(&self) -> &FreeModule {
        self.presentation.generators()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::algebra_from_presentation;
    use crate::presentation::{AlgebraElement, Quiver, QuiverPresentation};
    use crate::scalars::PrimeField;

    fn x_squared() -> GradedAlgebra {
        let f = PrimeField::new(32003).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = AlgebraElement::from_path(q.path(&["x", "x"]).unwrap());
        algebra_from_presentation(&QuiverPresentation::new(q, vec![r], f), 4).unwrap()
    }

    #[test]
    fn degree_slice_examples() {
        let alg = x_squared();
        let m = FreeModule::new(vec![Generator { vertex: 0, degree: 0 }]);
        assert_eq!(m.degree_slice(&alg, 0), vec![(0, 0)]);
        assert_eq!(alg.basis(1)[m.degree_slice(&alg, 1)[0].1].label, "x");
        assert!(m.degree_slice(&alg, 2).is_empty());
    }

    #[test]
    fn multiplication_by_x() {
        let alg = x_squared();
        let src = FreeModule::new(vec![Generator { vertex: 0, degree: 1 }]);
        let dst = FreeModule::new(vec![Generator { vertex: 0, degree: 0 }]);
        let f = ModuleMap::new(&alg, src.clone(), dst.clone(), vec![vec![1]]).unwrap();
        assert_eq!(map_slice(&f, &alg, 1), ScalarMatrix::identity(alg.field(), 1));
        assert_eq!(map_slice(&f, &alg, 2).rows(), 0);
        let z = ModuleMap::zero(&alg, src, dst.clone());
        assert!(map_slice(&z, &alg, 1).is_zero());
        let id = ModuleMap::identity(&alg, dst);
        assert_eq!(map_slice(&id, &alg, 1), ScalarMatrix::identity(alg.field(), 1));
    }

    #[test]
    fn rejects_wrong_image_length() {
        let alg = x_squared();
        let src = FreeModule::new(vec![Generator { vertex: 0, degree: 1 }]);
        let dst = FreeModule::new(vec![Generator { vertex: 0, degree: 0 }]);
        assert!(ModuleMap::new(&alg, src, dst, vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn trivial_presentation_uses_arrows() {
        let alg = x_squared();
        let p = ModulePresentation::trivial(&alg);
        assert_eq!(p.relations.source.generators, vec![Generator { vertex: 0, degree: 1 }]);
        assert_eq!(p.shift(), Some(0));
    }
}
