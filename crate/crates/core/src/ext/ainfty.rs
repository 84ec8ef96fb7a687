//! Bigrading bookkeeping for higher multiplications on `E(A)`.
//!
//! `m_q` has bidegree `(2 - q, 0)`, so it can only be nonzero on inputs of
//! bidegrees `(i_t, j_t)` when `(Σ i_t + 2 - q, Σ j_t)` is occupied. Inputs
//! come from the augmentation ideal (`i_t >= 1`); the operations are strictly
//! unital.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::resolution::Resolution;

use super::delta::DeltaFunction;
use super::table::ExtTable;
use super::yoneda::YonedaCache;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArityReport {
    pub support: Vec<usize>,
    pub closed_form: Vec<usize>,
    pub consistent: bool,
}

impl ArityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("arity report serializes")
    }
}

/// Sums of `q` occupied positive bidegrees, with total ext-degree at most `max_sum`.
fn sums(support: &[(usize, usize)], q: usize, max_sum: usize) -> BTreeSet<(usize, usize)> {
    let mut reach: BTreeSet<(usize, usize)> = BTreeSet::from([(0, 0)]);
    for _ in 0..q {
        let mut next = BTreeSet::new();
        for &(a, b) in &reach {
            for &(i, j) in support {
                if a + i <= max_sum {
                    next.insert((a + i, b + j));
                }
            }
        }
        reach = next;
    }
    reach
}

/// Arities `q` whose bidegree constraint can be met on the certified part of `e`.
pub fn support_arities(e: &ExtTable, q_max: usize) -> Vec<usize> {
    let Some(top) = e.certified_to() else {
        return Vec::new();
    };
    let positive: Vec<(usize, usize)> = e.support().into_iter().filter(|&(i, _)| i >= 1).collect();
    (2..=q_max)
        .filter(|&q| {
            sums(&positive, q, top + q - 2).iter().any(|&(si, sj)| {
                let target = si + 2 - q;
                target <= top && e.dim(target, sj) > 0
            })
        })
        .collect()
}

/// `{k(d - p) + 2 : k >= 0} ∩ [2, q_max]`; for `p = 3` this is the set from
/// the `m_q` vanishing statement.
pub fn closed_form_arities(f: DeltaFunction, q_max: usize) -> Vec<usize> {
    let step = f.d - f.p;
    if step == 0 {
        return if q_max >= 2 { vec![2] } else { Vec::new() };
    }
    (2..=q_max).filter(|q| (q - 2) % step == 0).collect()
}

pub fn ainfty_feasible_arities(e: &ExtTable, f: DeltaFunction, q_max: usize) -> ArityReport {
    let support = support_arities(e, q_max);
    let closed_form = closed_form_arities(f, q_max);
    let consistent = support.iter().all(|q| closed_form.contains(q));
    ArityReport { support, closed_form, consistent }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub status: Status,
    /// `exact` or `feasibility`.
    pub level: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduced2lReport {
    pub l: usize,
    pub checked_to: Option<usize>,
    pub condition1: ConditionResult,
    pub condition2: ConditionResult,
    pub condition3: ConditionResult,
    /// Ext-degrees `n >= 2` where `m_2` does not reach all of `E^n`, with
    /// whether an `m_l` on positive inputs can land in the missing shifts.
    pub generation_gaps: Vec<GenerationGap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationGap {
    pub n: usize,
    pub missing: usize,
    pub m_l_feasible: bool,
}

impl Reduced2lReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reduced report serializes")
    }
}

fn allowed_residues(residues: &[usize]) -> bool {
    residues.iter().filter(|&&r| r == 2).count() == 1 && residues.iter().filter(|&&r| r == 1).count() == residues.len() - 1
}

/// Checks the three conditions of a reduced `(2, l)`-structure on `E(A)`:
/// (1) `E^0` is one copy of the field per vertex, exactly; (2) `m_2` vanishes
/// on `E^{3k+s} ⊗ E^{3k'+s'}` for `s, s' ∈ {1, 2}` with `3 <= s + s' <= 4`,
/// exactly via Yoneda products; (3) the residue pattern for `m_l`, at the
/// level of bigrading feasibility only.
pub fn reduced_2l_check(r: &Resolution, e: &ExtTable, l: usize) -> Result<Reduced2lReport> {
    let nv = r.algebra().num_vertices();
    let top = r.certified_to();
    let condition1 = {
        let ok = e.dim(0, 0) == nv && e.total(0) == nv;
        ConditionResult {
            status: if ok { Status::Pass } else { Status::Fail },
            level: "exact",
            detail: format!("E^0 has dimension {} in shift 0 for {nv} vertices", e.dim(0, 0)),
        }
    };

    let mut cache = YonedaCache::new(r, r);
    let mut offending: Option<((usize, usize), (usize, usize))> = None;
    let mut checked = 0usize;
    if let Some(t) = top {
        'outer: for i1 in 1..t {
            for i2 in 1..=t - i1 {
                let (s1, s2) = (i1 % 3, i2 % 3);
                if s1 == 0 || s2 == 0 || s1 + s2 < 3 {
                    continue;
                }
                for g in 0..r.module(i2).rank() {
                    let prods = cache.left_products(i1, i2, g)?;
                    for (h, prod) in prods.iter().enumerate() {
                        checked += 1;
                        if !prod.is_zero() {
                            let j1 = r.module(i1).generators[h].degree;
                            let j2 = r.module(i2).generators[g].degree;
                            offending = Some(((i1, j1), (i2, j2)));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let condition2 = match offending {
        Some(((i1, j1), (i2, j2))) => ConditionResult {
            status: Status::Fail,
            level: "exact",
            detail: format!("m_2 is nonzero on E^{i1}_{j1} ⊗ E^{i2}_{j2}"),
        },
        None => ConditionResult {
            status: Status::Pass,
            level: "exact",
            detail: format!("{checked} basis products vanish in the certified range"),
        },
    };

    // Condition 3: look for a disallowed residue pattern that the bigrading permits.
    let support: Vec<(usize, usize)> = e.support().into_iter().filter(|&(i, _)| i >= 1).collect();
    let mut witness: Option<Vec<usize>> = None;
    if let Some(t) = e.certified_to() {
        let mut stack: Vec<(Vec<(usize, usize)>, usize, usize)> = vec![(Vec::new(), 0, 0)];
        while let Some((chosen, si, sj)) = stack.pop() {
            if witness.is_some() {
                break;
            }
            if chosen.len() == l {
                let target = si + 2 - l;
                let residues: Vec<usize> = chosen.iter().map(|&(i, _)| i % 3).collect();
                if target <= t && e.dim(target, sj) > 0 && !allowed_residues(&residues) {
                    witness = Some(chosen.iter().map(|&(i, _)| i).collect());
                }
                continue;
            }
            for &(i, j) in &support {
                if si + i <= t + l - 2 {
                    let mut c = chosen.clone();
                    c.push((i, j));
                    stack.push((c, si + i, sj + j));
                }
            }
        }
    }
    let condition3 = match &witness {
        None => ConditionResult {
            status: Status::Pass,
            level: "feasibility",
            detail: format!("no disallowed residue pattern for m_{l} is permitted by the bigrading"),
        },
        Some(w) => ConditionResult {
            status: Status::Inconclusive,
            level: "feasibility",
            detail: format!("bigrading permits m_{l} on ext-degrees {w:?}; m_{l} itself is not computed"),
        },
    };

    let mut generation_gaps = Vec::new();
    if let Some(t) = top {
        for n in 2..=t {
            let gens = &r.module(n).generators;
            let mut reached = vec![crate::scalars::EchelonSpace::new(r.algebra().field(), gens.len())];
            for b in 1..n {
                for g in 0..r.module(b).rank() {
                    for prod in cache.left_products(n - b, b, g)? {
                        reached[0].insert(&prod.coeffs);
                    }
                }
            }
            let missing = gens.len() - reached[0].dim();
            if missing == 0 {
                continue;
            }
            let shifts: BTreeSet<usize> = gens.iter().map(|g| g.degree).collect();
            let feasible = n + l >= 2
                && sums(&support, l, n + l - 2).iter().any(|&(si, sj)| si + 2 == n + l && shifts.contains(&sj));
            generation_gaps.push(GenerationGap { n, missing, m_l_feasible: feasible });
        }
    }
    Ok(Reduced2lReport { l, checked_to: top, condition1, condition2, condition3, generation_gaps })
}
