use std::collections::BTreeMap;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::resolution::Resolution;
use crate::structure::{ingest_structure_constants, StructureConstants};

use super::delta::DeltaFunction;
use super::yoneda::YonedaCache;

/// `E_k(A) = ⊕_n Ext^{pkn}(A_0, A_0)` as structure constants, degree `n`
/// holding `Ext^{pkn}`, for `n <= n_max`.
///
/// The class dual to a generator at vertex `v` resolving the simple `S_u`
/// becomes a basis element from `v` to `u`, so that `η·ξ` is nonzero only
/// when `η` ends where `ξ` starts, as for paths.
pub fn ek_structure_constants(r: &Resolution, f: DeltaFunction, k: usize, n_max: usize) -> Result<StructureConstants> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let step = f.p * k;
    let top = step * n_max;
    if r.certified_to().is_none_or(|t| t < top) {
        return Err(Error::refusal(format!(
            "E_{k} up to degree {n_max} needs Ext^{top}, beyond the certified range {:?}",
            r.certified_to()
        )));
    }
    let origins = |n: usize| {
        r.origins(n).ok_or_else(|| Error::input("E_k is defined from the resolution of the trivial module"))
    };
    let alg = r.algebra();
    let nv = alg.num_vertices();
    let labels_v = alg.vertex_labels();

    // order[n] = generator indices of P_{step n} sorted by (source, target)
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(n_max + 1);
    let mut dims = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for n in 0..=n_max {
        let e = step * n;
        let gens = &r.module(e).generators;
        let orig = origins(e)?;
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by_key(|&g| (gens[g].vertex, orig[g], g));
        let mut table = vec![vec![0usize; nv]; nv];
        for &g in &idx {
            table[gens[g].vertex][orig[g]] += 1;
        }
        let names: Vec<String> = if n == 0 {
            idx.iter().map(|&g| format!("e_{}", labels_v[gens[g].vertex])).collect()
        } else {
            idx.iter()
                .enumerate()
                .map(|(i, &g)| format!("x{e}_{}_{i}", gens[g].degree))
                .collect()
        };
        dims.insert(n.to_string(), table);
        labels.insert(n.to_string(), names);
        order.push(idx);
    }
    let position: Vec<Vec<usize>> = order
        .iter()
        .map(|idx| {
            let mut pos = vec![0; idx.len()];
            for (i, &g) in idx.iter().enumerate() {
                pos[g] = i;
            }
            pos
        })
        .collect();

    let mut cache = YonedaCache::new(r, r);
    let mut products = Vec::new();
    for a in 1..=n_max {
        for b in 1..=n_max - a {
            let (ea, eb) = (step * a, step * b);
            for (jb, &g) in order[b].iter().enumerate() {
                let prods = cache.left_products(ea, eb, g)?;
                for (ja, &h) in order[a].iter().enumerate() {
                    let prod = &prods[h];
                    let mut terms: Vec<(usize, u32)> = prod
                        .coeffs
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c != 0)
                        .map(|(x, &c)| (position[a + b][x], c))
                        .collect();
                    if terms.is_empty() {
                        continue;
                    }
                    terms.sort_unstable();
                    products.push((a, ja, b, jb, terms));
                }
            }
        }
    }
    Ok(StructureConstants {
        char: alg.field().characteristic(),
        idempotents: labels_v.to_vec(),
        dims,
        products,
        labels: Some(labels),
    })
}

/// [`ek_structure_constants`] followed by ingestion (which re-validates
/// associativity and units).
pub fn ek_subalgebra(r: &Resolution, f: DeltaFunction, k: usize, n_max: usize) -> Result<GradedAlgebra> {
    ingest_structure_constants(&ek_structure_constants(r, f, k, n_max)?)
}
