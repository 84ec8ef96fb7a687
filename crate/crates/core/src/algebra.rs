//! Degree-truncated graded algebras given by per-degree bases and structure
//! constants.
//!
//! Both Gröbner-derived quotients of path algebras and algebras ingested from
//! explicit tables end up as a [`GradedAlgebra`]; the module and resolution
//! code only ever sees this type.

use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::VertexId;
use crate::scalars::{EchelonSpace, PrimeField};

/// Sparse vector: `(basis index, coefficient)` pairs with increasing indices.
pub type SparseVec = Vec<(u32, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Normal words of a truncated Gröbner basis; degrees of the input
    /// relations and of the completed basis.
    Groebner { relation_degree: usize, groebner_degree: usize },
    /// Explicit structure constants.
    StructureConstants,
}

#[derive(Clone)]
pub struct GradedAlgebra {
    field: PrimeField,
    vertices: Vec<String>,
    basis: Vec<Vec<BasisElement>>,
    // products[k][l][i * dim(l) + j] = basis_k[i] * basis_l[j], for k + l <= max_degree
    products: Vec<Vec<Vec<SparseVec>>>,
    // by_source[k][v] = indices of degree-k basis elements starting at v
    by_source: Vec<Vec<Vec<usize>>>,
    // between[k][s * nv + t] = indices of degree-k basis elements from s to t
    between: Vec<Vec<Vec<usize>>>,
    // local[k][i] = position of basis_k[i] inside its `between` list
    local: Vec<Vec<u32>>,
    provenance: Provenance,
    generated_in_degree_one: bool,
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedAlgebra")
            .field("field", &self.field)
            .field("vertices", &self.vertices)
            .field("dims", &self.dims())
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// A triple `(degree, index)` x3 on which `(ab)c != a(bc)`.
pub type BasisTriple = [(usize, usize); 3];

impl GradedAlgebra {
    /// Assembles an algebra from tables. Associativity and unit laws are not
    /// checked here; see [`GradedAlgebra::check_associativity`] and
    /// [`GradedAlgebra::check_units`].
    pub(crate) fn from_tables(
        field: PrimeField,
        vertices: Vec<String>,
        basis: Vec<Vec<BasisElement>>,
        products: Vec<Vec<Vec<SparseVec>>>,
        provenance: Provenance,
    ) -> Self {
        let nv = vertices.len();
        let by_source = basis
            .iter()
            .map(|b| {
                let mut per = vec![Vec::new(); nv];
                for (i, e) in b.iter().enumerate() {
                    per[e.source].push(i);
                }
                per
            })
            .collect();
        let mut between = Vec::with_capacity(basis.len());
        let mut local = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut per = vec![Vec::new(); nv * nv];
            let mut loc = Vec::with_capacity(b.len());
            for (i, e) in b.iter().enumerate() {
                let list: &mut Vec<usize> = &mut per[e.source * nv + e.target];
                loc.push(list.len() as u32);
                list.push(i);
            }
            between.push(per);
            local.push(loc);
        }
        let mut alg = Self {
            field,
            vertices,
            basis,
            products,
            by_source,
            between,
            local,
            provenance,
            generated_in_degree_one: false,
        };
        alg.generated_in_degree_one = alg.compute_generated_in_degree_one();
        alg
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn max_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, k: usize) -> &[BasisElement] {
        &self.basis[k]
    }

    /// Degree-`k` basis indices of elements starting at `v`.
    pub fn words_from(&self, k: usize, v: VertexId) -> &[usize] {
        &self.by_source[k][v]
    }

    /// Degree-`k` basis indices of elements from `s` to `t`, in basis order.
    pub fn words_between(&self, k: usize, s: VertexId, t: VertexId) -> &[usize] {
        &self.between[k][s * self.vertices.len() + t]
    }

    /// Position of `basis_k[i]` inside [`GradedAlgebra::words_between`] for its endpoints.
    #[inline]
    pub fn local_position(&self, k: usize, i: usize) -> usize {
        self.local[k][i] as usize
    }

    /// Product of `basis_k[i]` and `basis_l[j]`; requires `k + l <= max_degree`.
    #[inline]
    pub fn product(&self, k: usize, i: usize, l: usize, j: usize) -> &[(u32, u32)] {
        &self.products[k][l][i * self.basis[l].len() + j]
    }

    pub fn generated_in_degree_one(&self) -> bool {
        self.generated_in_degree_one
    }

    /// Largest `L` with `A_L != 0`, when a vanishing degree proves the algebra
    /// finite dimensional (needs generation in degrees 0 and 1).
    pub fn top_degree(&self) -> Option<usize> {
        if !self.generated_in_degree_one {
            return None;
        }
        (1..=self.max_degree()).find(|&k| self.dim(k) == 0).map(|k| k - 1)
    }

    /// Largest input relation degree, when the algebra came from a presentation.
    pub fn relation_degree(&self) -> Option<usize> {
        match self.provenance {
            Provenance::Groebner { relation_degree, .. } => Some(relation_degree),
            Provenance::StructureConstants => None,
        }
    }

    /// Largest leading-word length of the (truncated) Gröbner basis, used to
    /// bound generator degree jumps between consecutive resolution stages.
    pub fn groebner_degree(&self) -> Option<usize> {
        match self.provenance {
            Provenance::Groebner { groebner_degree, .. } => Some(groebner_degree.max(1)),
            Provenance::StructureConstants => None,
        }
    }

    /// Restriction to degrees `<= d`.
    pub fn truncate(&self, d: usize) -> Result<Self> {
        if d > self.max_degree() {
            return Err(Error::input(format!(
                "cannot truncate to degree {d}: data only known up to {}",
                self.max_degree()
            )));
        }
        let basis = self.basis[..=d].to_vec();
        let products = (0..=d)
            .map(|k| (0..=d - k).map(|l| self.products[k][l].clone()).collect())
            .collect();
        Ok(Self::from_tables(self.field, self.vertices.clone(), basis, products, self.provenance.clone()))
    }

    fn compute_generated_in_degree_one(&self) -> bool {
        let f = self.field;
        for k in 2..=self.max_degree() {
            let dk = self.dim(k);
            if dk == 0 {
                continue;
            }
            let mut span = EchelonSpace::new(f, dk);
            'outer: for i in 0..self.dim(k - 1) {
                for j in 0..self.dim(1) {
                    let prod = self.product(k - 1, i, 1, j);
                    if prod.is_empty() {
                        continue;
                    }
                    let mut v = vec![0u32; dk];
                    for &(c, x) in prod {
                        v[c as usize] = x;
                    }
                    span.insert(&v);
                    if span.dim() == dk {
                        break 'outer;
                    }
                }
            }
            if span.dim() < dk {
                return false;
            }
        }
        true
    }

    /// Multiplies sparse vectors `a` (degree `k`) and `b` (degree `l`).
    pub fn multiply(&self, k: usize, a: &[(u32, u32)], l: usize, b: &[(u32, u32)]) -> SparseVec {
        let f = self.field;
        let mut acc = vec![0u32; self.dim(k + l)];
        for &(i, x) in a {
            for &(j, y) in b {
                let xy = f.mul(x, y);
                for &(c, z) in self.product(k, i as usize, l, j as usize) {
                    acc[c as usize] = f.mul_add(acc[c as usize], xy, z);
                }
            }
        }
        dense_to_sparse(&acc)
    }

    /// First basis triple violating associativity, if any.
    pub fn check_associativity(&self) -> Option<BasisTriple> {
        let d = self.max_degree();
        for k in 0..=d {
            for l in 0..=d - k {
                for m in 0..=d - k - l {
                    for i in 0..self.dim(k) {
                        for j in 0..self.dim(l) {
                            if self.basis[k][i].target != self.basis[l][j].source {
                                continue;
                            }
                            let ab = self.product(k, i, l, j).to_vec();
                            for c in 0..self.dim(m) {
                                let left = self.multiply(k + l, &ab, m, &[(c as u32, 1)]);
                                let bc = self.product(l, j, m, c).to_vec();
                                let right = self.multiply(k, &[(i as u32, 1)], l + m, &bc);
                                if left != right {
                                    return Some([(k, i), (l, j), (m, c)]);
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Checks that degree 0 is spanned by orthogonal idempotents, one per
    /// vertex, acting as two-sided units. Returns a description of the first
    /// failure.
    pub fn check_units(&self) -> Option<String> {
        let nv = self.num_vertices();
        if self.dim(0) != nv {
            return Some(format!("degree 0 has dimension {} but there are {nv} vertices", self.dim(0)));
        }
        for (v, e) in self.basis[0].iter().enumerate() {
            if e.source != v || e.target != v {
                return Some(format!("degree-0 element {v} is not the idempotent of vertex {v}"));
            }
        }
        for k in 0..=self.max_degree() {
            for (i, w) in self.basis[k].iter().enumerate() {
                for v in 0..nv {
                    let left = self.product(0, v, k, i);
                    let expect_left: &[(u32, u32)] = if w.source == v { &[(i as u32, 1)] } else { &[] };
                    if left != expect_left {
                        return Some(format!("e_{v} * ({k},{i}) is wrong"));
                    }
                    let right = self.product(k, i, 0, v);
                    let expect_right: &[(u32, u32)] = if w.target == v { &[(i as u32, 1)] } else { &[] };
                    if right != expect_right {
                        return Some(format!("({k},{i}) * e_{v} is wrong"));
                    }
                }
            }
        }
        None
    }

    /// Minimal algebra generators of `J` degree by degree: basis vectors of
    /// `A_k` (k >= 1) that are not in `sum_{0<i<k} A_i A_{k-i}`. Each entry
    /// is `(degree, vector)` with a single basis index.
    pub fn radical_generators(&self) -> Vec<(usize, usize)> {
        let f = self.field;
        let mut out = Vec::new();
        for k in 1..=self.max_degree() {
            let dk = self.dim(k);
            let mut span = EchelonSpace::new(f, dk);
            for i in 1..k {
                for a in 0..self.dim(i) {
                    for b in 0..self.dim(k - i) {
                        let prod = self.product(i, a, k - i, b);
                        if !prod.is_empty() {
                            span.insert(&sparse_to_dense(prod, dk));
                        }
                    }
                }
            }
            for c in 0..dk {
                let mut e = vec![0u32; dk];
                e[c] = 1;
                if span.insert(&e) {
                    out.push((k, c));
                }
            }
        }
        out
    }
}

pub fn dense_to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i as u32, x)).collect()
}

pub fn sparse_to_dense(v: &[(u32, u32)], dim: usize) -> Vec<u32> {
    let mut out = vec![0u32; dim];
    for &(i, x) in v {
        out[i as usize] = x;
    }
    out
}
