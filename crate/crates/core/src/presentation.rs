//! Quivers, paths and graded presentations `A = FQ/R`.
//!
//! Paths compose left to right: the word `ab` means "follow `a`, then `b`",
//! so `ab` is defined when the target of `a` is the source of `b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::PrimeField;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    /// `arrows` are `(label, source label, target label)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        };
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (label, s, t) in arrows {
            q.add_arrow(label.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<VertexId> {
        if self.vertex_index.contains_key(label) || self.arrow_index.contains_key(label) {
            return Err(Error::input(format!("duplicate label `{label}`")));
        }
        let id = self.vertices.len();
        self.vertices.push(label.to_string());
        self.vertex_index.insert(label.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, label: &str, source: &str, target: &str) -> Result<ArrowId> {
        if self.vertex_index.contains_key(label) || self.arrow_index.contains_key(label) {
            return Err(Error::input(format!("duplicate label `{label}`")));
        }
        let s = self.vertex(source).ok_or_else(|| Error::input(format!("unknown vertex `{source}`")))?;
        let t = self.vertex(target).ok_or_else(|| Error::input(format!("unknown vertex `{target}`")))?;
        let id = self.arrows.len();
        self.arrows.push(Arrow { label: label.to_string(), source: s, target: t });
        self.arrow_index.insert(label.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.vertex_index.get(label).copied()
    }

    pub fn arrow_id(&self, label: &str) -> Option<ArrowId> {
        self.arrow_index.get(label).copied()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// Path consisting of a single arrow.
    pub fn arrow_path(&self, id: ArrowId) -> PathWord {
        let a = &self.arrows[id];
        PathWord { source: a.source, target: a.target, arrows: vec![id] }
    }

    /// Builds a path from arrow labels, checking composability.
    pub fn path(&self, labels: &[&str]) -> Result<PathWord> {
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            ids.push(self.arrow_id(l).ok_or_else(|| Error::input(format!("unknown arrow `{l}`")))?);
        }
        self.path_from_ids(&ids)
    }

    pub fn path_from_ids(&self, ids: &[ArrowId]) -> Result<PathWord> {
        let Some(&first) = ids.first() else {
            return Err(Error::input("empty arrow sequence; use an idempotent instead"));
        };
        let mut p = self.arrow_path(first);
        for &a in &ids[1..] {
            p = compose(&p, &self.arrow_path(a)).ok_or_else(|| {
                Error::input(format!("arrows do not compose at `{}`", self.arrows[a].label))
            })?;
        }
        Ok(p)
    }

    pub fn path_label(&self, p: &PathWord) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A path in the quiver; length-0 paths are the vertex idempotents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl PathWord {
    pub fn idempotent(v: VertexId) -> Self {
        PathWord { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Concatenation `pq` when the target of `p` is the source of `q`.
pub fn compose(p: &PathWord, q: &PathWord) -> Option<PathWord> {
    if p.target != q.source {
        return None;
    }
    let mut arrows = Vec::with_capacity(p.len() + q.len());
    arrows.extend_from_slice(&p.arrows);
    arrows.extend_from_slice(&q.arrows);
    Some(PathWord { source: p.source, target: q.target, arrows })
}

/// Linear combination of paths. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<PathWord, u32>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: PathWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        Self { terms }
    }

    /// Stores `coeff` as given; `validate` reports coefficients that are not reduced.
    pub fn from_raw_terms(terms: impl IntoIterator<Item = (PathWord, u32)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            if c != 0 {
                out.terms.insert(p, c);
            }
        }
        out
    }

    pub fn add_term(&mut self, field: PrimeField, p: PathWord, coeff: u32) {
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry = field.add(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PathWord, u32)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common length of all paths, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(PathWord::len);
        let d = it.next()?;
        it.all(|l| l == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// All paths share source and target.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        let mut it = self.terms.keys().map(|p| (p.source, p.target));
        let e = it.next()?;
        it.all(|x| x == e).then_some(e)
    }

    pub fn is_parallel(&self) -> bool {
        self.is_zero() || self.endpoints().is_some()
    }

    pub fn display(&self, quiver: &Quiver, field: PrimeField) -> String {
        format_element(self.terms.iter().map(|(p, &c)| (quiver.path_label(p), c)), field)
    }
}

/// Renders `c1*w1 + c2*w2 - w3` with residues in `[0, p)`, `1*` omitted and
/// `p-1` written as a leading minus.
pub fn format_element(terms: impl Iterator<Item = (String, u32)>, field: PrimeField) -> String {
    let p = field.characteristic();
    let mut out = String::new();
    for (i, (label, c)) in terms.enumerate() {
        let neg = c == p - 1 && p > 2;
        if i == 0 {
            if neg {
                out.push_str("-");
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !neg && c != 1 {
            out.push_str(&format!("{c}*"));
        }
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub quiver: Quiver,
    pub relations: Vec<AlgebraElement>,
    pub field: PrimeField,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Zero,
    Inhomogeneous,
    NotParallel,
    DegreeBelowTwo,
    UnreducedCoefficient,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Zero => "relation is zero",
            ViolationKind::Inhomogeneous => "inhomogeneous",
            ViolationKind::NotParallel => "not parallel",
            ViolationKind::DegreeBelowTwo => "degree below 2",
            ViolationKind::UnreducedCoefficient => "coefficient not reduced modulo the characteristic",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl QuiverPresentation {
    pub fn new(quiver: Quiver, relations: Vec<AlgebraElement>, field: PrimeField) -> Self {
        Self { quiver, relations, field }
    }

    pub fn validate(&self) -> ValidationReport {
        let p = self.field.characteristic();
        let mut violations = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            let mut push = |kind| violations.push(Violation { relation: i, kind });
            if r.is_zero() {
                push(ViolationKind::Zero);
                continue;
            }
            if r.terms().any(|(_, c)| c >= p) {
                push(ViolationKind::UnreducedCoefficient);
            }
            match r.degree() {
                None => push(ViolationKind::Inhomogeneous),
                Some(d) if d < 2 => push(ViolationKind::DegreeBelowTwo),
                Some(_) => {}
            }
            if !r.is_parallel() {
                push(ViolationKind::NotParallel);
            }
        }
        ValidationReport { violations }
    }

    /// Errors with the first violation, if any.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::input(format!("relation {}: {}", v.relation, v.kind))),
        }
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(AlgebraElement::degree).max().unwrap_or(0)
    }

    /// Same presentation with the vertices renamed/reordered: new vertex `i`
    /// is old vertex `perm[i]`.
    pub fn relabel_vertices(&self, perm: &[VertexId]) -> Result<Self> {
        let n = self.quiver.num_vertices();
        if perm.len() != n {
            return Err(Error::input("vertex permutation has the wrong length"));
        }
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in perm.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(Error::input("not a permutation"));
            }
            inverse[old] = new;
        }
        let labels: Vec<String> = perm.iter().map(|&old| self.quiver.vertices()[old].clone()).collect();
        let arrows: Vec<(String, String, String)> = self
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                (a.label.clone(), self.quiver.vertices()[a.source].clone(), self.quiver.vertices()[a.target].clone())
            })
            .collect();
        let quiver = Quiver::new(&labels, &arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                AlgebraElement::from_raw_terms(r.terms().map(|(p, c)| {
                    (PathWord { source: inverse[p.source], target: inverse[p.target], arrows: p.arrows.clone() }, c)
                }))
            })
            .collect();
        Ok(Self { quiver, relations, field: self.field })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Quiver {
        Quiver::new(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")]).unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = chain();
        let e1 = PathWord::idempotent(0);
        let a1 = q.path(&["a1"]).unwrap();
        let a2 = q.path(&["a2"]).unwrap();
        assert_eq!(compose(&e1, &a1), Some(a1.clone()));
        assert_eq!(compose(&a1, &a2).unwrap().arrows, vec![0, 1]);
        assert_eq!(compose(&a2, &a1), None);
        assert_eq!(compose(&a1, &PathWord::idempotent(1)), Some(a1));
    }

    #[test]
    fn rejects_duplicate_and_unknown_labels() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
    }

    #[test]
    fn validation_reports_each_violation() {
        let f = PrimeField::new(7).unwrap();
        let q = Quiver::new(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3"), ("b", "1", "2")]).unwrap();
        let a1a2 = q.path(&["a1", "a2"]).unwrap();
        let mut mixed = AlgebraElement::from_path(a1a2.clone());
        mixed.add_term(f, PathWord::idempotent(0), 6);
        let mut nonpar = AlgebraElement::from_path(a1a2.clone());
        nonpar.add_term(f, q.path(&["b"]).unwrap(), 6);
        let short = AlgebraElement::from_path(q.path(&["b"]).unwrap());
        let ok = AlgebraElement::from_path(a1a2);
        let pres = QuiverPresentation::new(q, vec![ok, mixed, nonpar, short], f);
        let report = pres.validate();
        let kinds: Vec<_> = report.violations.iter().map(|v| (v.relation, v.kind.clone())).collect();
        assert!(kinds.contains(&(1, ViolationKind::Inhomogeneous)));
        assert!(kinds.contains(&(2, ViolationKind::Inhomogeneous)));
        assert!(kinds.contains(&(2, ViolationKind::NotParallel)));
        assert!(kinds.contains(&(3, ViolationKind::DegreeBelowTwo)));
        assert!(!kinds.iter().any(|(i, _)| *i == 0));
    }

    #[test]
    fn formatting_uses_minus_for_negative_one() {
        let f = PrimeField::new(7).unwrap();
        let s = format_element(vec![("x*y".to_string(), 1), ("y*x".to_string(), 6), ("z".into(), 3)].into_iter(), f);
        assert_eq!(s, "x*y - y*x + 3*z");
    }
}
