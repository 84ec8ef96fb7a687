//! Algebras given directly by structure constants, with the JSON exchange
//! format shared with the command line.
//!
//! Layout: `dims[k][s][t]` counts degree-`k` basis elements from vertex `s`
//! to vertex `t`; inside a degree the basis is ordered by `(s, t)` and then
//! by index. Degree 0 must be one idempotent per vertex. Products with an
//! idempotent follow from the unit laws and may be omitted; any listed one
//! must agree with them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{BasisElement, GradedAlgebra, Provenance, SparseVec};
use crate::error::{Error, Result};
use crate::scalars::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub char: u32,
    pub idempotents: Vec<String>,
    /// Degree (as a decimal string) to the `nv x nv` dimension matrix.
    pub dims: BTreeMap<String, Vec<Vec<usize>>>,
    /// `[deg_a, idx_a, deg_b, idx_b, [[idx_c, coeff], ...]]`.
    pub products: Vec<(usize, usize, usize, usize, Vec<(usize, u32)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Vec<String>>>,
}

impl StructureConstants {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("structure constants: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure constants serialize")
    }
}

/// Validates tables and builds an algebra usable by the resolution engine.
pub fn ingest_structure_constants(raw: &StructureConstants) -> Result<GradedAlgebra> {
    let field = PrimeField::new(raw.char)?;
    let nv = raw.idempotents.len();
    if nv == 0 {
        return Err(Error::input("at least one idempotent is required"));
    }
    let mut degrees = Vec::new();
    for key in raw.dims.keys() {
        let k: usize = key.parse().map_err(|_| Error::input(format!("degree key {key:?} is not an integer")))?;
        degrees.push(k);
    }
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let mut basis: Vec<Vec<BasisElement>> = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let table = match raw.dims.get(&k.to_string()) {
            Some(t) => t.clone(),
            None if k == 0 => (0..nv).map(|s| (0..nv).map(|t| usize::from(s == t)).collect()).collect(),
            None => vec![vec![0; nv]; nv],
        };
        if table.len() != nv || table.iter().any(|r| r.len() != nv) {
            return Err(Error::input(format!("dims for degree {k} must be a {nv}x{nv} matrix")));
        }
        let labels = raw.labels.as_ref().and_then(|l| l.get(&k.to_string()));
        let mut elems = Vec::new();
        for (s, row) in table.iter().enumerate() {
            for (t, &count) in row.iter().enumerate() {
                for _ in 0..count {
                    let i = elems.len();
                    let label = match (k, labels) {
                        (0, None) => format!("e_{}", raw.idempotents[s]),
                        (_, Some(l)) => l.get(i).cloned().ok_or_else(|| {
                            Error::input(format!("missing label for degree {k} element {i}"))
                        })?,
                        (_, None) => format!("b{k}_{i}"),
                    };
                    elems.push(BasisElement { label, source: s, target: t });
                }
            }
        }
        if labels.is_some_and(|l| l.len() != elems.len()) {
            return Err(Error::input(format!("degree {k} has {} labels for {} elements", labels.unwrap().len(), elems.len())));
        }
        basis.push(elems);
    }
    if basis[0].len() != nv || basis[0].iter().enumerate().any(|(v, e)| e.source != v || e.target != v) {
        return Err(Error::input("degree 0 must consist of exactly one idempotent per vertex"));
    }

    let mut products: Vec<Vec<Vec<SparseVec>>> = (0..=max_degree)
        .map(|k| (0..=max_degree - k).map(|l| vec![Vec::new(); basis[k].len() * basis[l].len()]).collect())
        .collect();
    for k in 0..=max_degree {
        for l in 0..=max_degree - k {
            let dl = basis[l].len();
            for (i, a) in basis[k].iter().enumerate() {
                for (j, b) in basis[l].iter().enumerate() {
                    if a.target != b.source {
                        continue;
                    }
                    if k == 0 {
                        products[k][l][i * dl + j] = vec![(j as u32, 1)];
                    } else if l == 0 {
                        products[k][l][i * dl + j] = vec![(i as u32, 1)];
                    }
                }
            }
        }
    }
    for &(ka, ia, kb, ib, ref terms) in &raw.products {
        let kc = ka + kb;
        if kc > max_degree {
            return Err(Error::input(format!("product ({ka},{ia})*({kb},{ib}) lands above the top degree")));
        }
        let (da, db, dc) = (basis[ka].len(), basis[kb].len(), basis[kc].len());
        if ia >= da || ib >= db {
            return Err(Error::input(format!("product ({ka},{ia})*({kb},{ib}) names a missing basis element")));
        }
        let (a, b) = (&basis[ka][ia], &basis[kb][ib]);
        let mut acc = vec![0u32; dc];
        for &(ic, c) in terms {
            if ic >= dc {
                return Err(Error::input(format!("product ({ka},{ia})*({kb},{ib}) has a term outside degree {kc}")));
            }
            if c >= field.characteristic() {
                return Err(Error::input(format!("coefficient {c} is not reduced mod {}", field.characteristic())));
            }
            let e = &basis[kc][ic];
            if c != 0 && (a.target != b.source || e.source != a.source || e.target != b.target) {
                return Err(Error::input(format!(
                    "product ({ka},{ia})*({kb},{ib}) is incompatible with the vertex endpoints"
                )));
            }
            acc[ic] = field.add(acc[ic], c);
        }
        products[ka][kb][ia * db + ib] = crate::algebra::dense_to_sparse(&acc);
    }

    let alg = GradedAlgebra::from_tables(
        field,
        raw.idempotents.clone(),
        basis,
        products,
        Provenance::StructureConstants,
    );
    if let Some(msg) = alg.check_units() {
        return Err(Error::input(format!("unit law fails: {msg}")));
    }
    if let Some([(k, i), (l, j), (m, c)]) = alg.check_associativity() {
        return Err(Error::input(format!(
            "associativity fails on the triple ({k},{i}), ({l},{j}), ({m},{c})"
        )));
    }
    Ok(alg)
}

impl GradedAlgebra {
    /// Exports the tables; products with idempotents are left implicit.
    /// Requires the basis of each degree to be sorted by `(source, target)`,
    /// which holds for ingested algebras; other algebras are re-indexed.
    pub fn to_structure_constants(&self) -> StructureConstants {
        let nv = self.num_vertices();
        let mut dims = BTreeMap::new();
        let mut labels = BTreeMap::new();
        // perm[k][new] = old
        let mut perm: Vec<Vec<usize>> = Vec::new();
        for k in 0..=self.max_degree() {
            let mut order: Vec<usize> = (0..self.dim(k)).collect();
            order.sort_by_key(|&i| (self.basis(k)[i].source, self.basis(k)[i].target, i));
            let mut table = vec![vec![0usize; nv]; nv];
            for e in self.basis(k) {
                table[e.source][e.target] += 1;
            }
            dims.insert(k.to_string(), table);
            labels.insert(k.to_string(), order.iter().map(|&i| self.basis(k)[i].label.clone()).collect());
            perm.push(order);
        }
        let inverse: Vec<Vec<usize>> = perm
            .iter()
            .map(|p| {
                let mut inv = vec![0; p.len()];
                for (new, &old) in p.iter().enumerate() {
                    inv[old] = new;
                }
                inv
            })
            .collect();
        let mut products = Vec::new();
        for k in 1..=self.max_degree() {
            for l in 1..=self.max_degree() - k {
                for (ni, &i) in perm[k].iter().enumerate() {
                    for (nj, &j) in perm[l].iter().enumerate() {
                        let p = self.product(k, i, l, j);
                        if p.is_empty() {
                            continue;
                        }
                        let mut terms: Vec<(usize, u32)> =
                            p.iter().map(|&(c, x)| (inverse[k + l][c as usize], x)).collect();
                        terms.sort_unstable();
                        products.push((k, ni, l, nj, terms));
                    }
                }
            }
        }
        StructureConstants {
            char: self.field().characteristic(),
            idempotents: self.vertex_labels().to_vec(),
            dims,
            products,
            labels: Some(labels),
        }
    }
}
