use std::collections::BTreeMap;

use serde::Serialize;

use crate::resolution::BettiTable;

use super::delta::DeltaFunction;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCount {
    /// `Ext^i(S_source, S_target)`.
    pub source: String,
    pub target: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtEntry {
    pub shift: usize,
    pub dim: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<PairCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtRow {
    pub i: usize,
    pub certified: bool,
    pub dims: Vec<ExtEntry>,
}

/// Bigraded dimensions `dim Ext^i(A_0, A_0)_j`, read off a minimal resolution
/// (`Ext^i` is dual to the generators of `P_i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub rows: Vec<ExtRow>,
}

impl ExtTable {
    /// Table with the given `(i, j, dim)` entries and rows `0..=max_i`, all certified.
    pub fn synthetic(entries: &[(usize, usize, usize)], max_i: usize) -> Self {
        let mut rows: Vec<ExtRow> = (0..=max_i).map(|i| ExtRow { i, certified: true, dims: Vec::new() }).collect();
        let mut acc: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(i, j, d) in entries {
            if i <= max_i && d > 0 {
                *acc.entry((i, j)).or_default() += d;
            }
        }
        for ((i, j), dim) in acc {
            rows[i].dims.push(ExtEntry { shift: j, dim, pairs: Vec::new() });
        }
        Self { rows }
    }

    /// One-dimensional `Ext^n` in shift `δ(n)` for `n <= max_i`.
    pub fn concentrated(f: DeltaFunction, max_i: usize) -> Self {
        let entries: Vec<_> = (0..=max_i).map(|n| (n, f.eval(n), 1)).collect();
        Self::synthetic(&entries, max_i)
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.rows.get(i).and_then(|r| r.dims.iter().find(|e| e.shift == j)).map_or(0, |e| e.dim)
    }

    pub fn total(&self, i: usize) -> usize {
        self.rows.get(i).map_or(0, |r| r.dims.iter().map(|e| e.dim).sum())
    }

    pub fn max_i(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn certified_to(&self) -> Option<usize> {
        let first_bad = self.rows.iter().position(|r| !r.certified).unwrap_or(self.rows.len());
        first_bad.checked_sub(1)
    }

    /// Nonzero bidegrees `(i, j)` with certified `i`.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let top = self.certified_to();
        self.rows
            .iter()
            .filter(|r| top.is_some_and(|t| r.i <= t))
            .flat_map(|r| r.dims.iter().filter(|e| e.dim > 0).map(move |e| (r.i, e.shift)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ext table serializes")
    }
}

pub fn ext_table(b: &BettiTable) -> ExtTable {
    let rows = b
        .rows
        .iter()
        .map(|row| {
            let mut by_shift: BTreeMap<usize, usize> = BTreeMap::new();
            for e in &row.generators {
                *by_shift.entry(e.degree).or_default() += e.count;
            }
            let dims = by_shift
                .into_iter()
                .map(|(shift, dim)| {
                    let pairs = b
                        .pairs
                        .as_ref()
                        .map(|p| {
                            p[row.n]
                                .iter()
                                .filter(|(&(_, _, j), _)| j == shift)
                                .map(|(&(u, v, _), &count)| PairCount {
                                    source: b.vertices[u].clone(),
                                    target: b.vertices[v].clone(),
                                    count,
                                })
                                .collect()
                        })
                        .unwrap_or_default();
                    ExtEntry { shift, dim, pairs }
                })
                .collect();
            ExtRow { i: row.n, certified: row.certified, dims }
        })
        .collect();
    ExtTable { rows }
}
