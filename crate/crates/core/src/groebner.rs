//! Degree-truncated noncommutative Gröbner bases for homogeneous ideals of a
//! path algebra, normal forms, and the resulting truncated graded algebra.
//!
//! Words are compared by length first and then lexicographically by arrow
//! precedence (an arrow earlier in the precedence list is larger). Since all
//! relations are homogeneous, completion runs degree by degree: the overlap
//! relations of total degree `k` only involve basis elements of degree `< k`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::algebra::{BasisElement, GradedAlgebra, Provenance, SparseVec};
use crate::error::{Error, Result};
use crate::presentation::{AlgebraElement, ArrowId, PathWord, Quiver, QuiverPresentation, VertexId};
use crate::scalars::PrimeField;

/// Arrow precedence for the deglex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<ArrowId>,
    rank: Vec<u16>,
}

impl MonomialOrder {
    /// Declaration order: the first declared arrow is the largest.
    pub fn declaration(num_arrows: usize) -> Self {
        Self::from_precedence((0..num_arrows).collect()).expect("identity permutation")
    }

    pub fn from_precedence(precedence: Vec<ArrowId>) -> Result<Self> {
        let n = precedence.len();
        let mut rank = vec![u16::MAX; n];
        for (r, &a) in precedence.iter().enumerate() {
            if a >= n || rank[a] != u16::MAX {
                return Err(Error::input("arrow precedence must list every arrow exactly once"));
            }
            rank[a] = r as u16;
        }
        Ok(Self { precedence, rank })
    }

    pub fn from_labels(quiver: &Quiver, labels: &[&str]) -> Result<Self> {
        let ids = labels
            .iter()
            .map(|l| quiver.arrow_id(l).ok_or_else(|| Error::input(format!("unknown arrow `{l}` in order"))))
            .collect::<Result<Vec<_>>>()?;
        if ids.len() != quiver.num_arrows() {
            return Err(Error::input("arrow precedence must list every arrow exactly once"));
        }
        Self::from_precedence(ids)
    }

    pub fn precedence(&self) -> &[ArrowId] {
        &self.precedence
    }

    /// `Greater` when `a` is larger than `b`.
    pub fn compare(&self, a: &[ArrowId], b: &[ArrowId]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn key(&self, w: &[ArrowId]) -> RankWord {
        RankWord(w.iter().map(|&a| self.rank[a]).collect())
    }
}

/// A word in rank space (letter = precedence rank of the arrow).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct RankWord(Vec<u16>);

impl Ord for RankWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a != b {
                    // lower rank = higher precedence = larger word
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for RankWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Homogeneous polynomial in rank space, terms sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    terms: Vec<(RankWord, u32)>,
}

impl Poly {
    fn lead(&self) -> &RankWord {
        &self.terms[0].0
    }

    fn degree(&self) -> usize {
        self.terms[0].0 .0.len()
    }

    fn from_map(map: BTreeMap<RankWord, u32>) -> Self {
        Poly { terms: map.into_iter().rev().collect() }
    }

    fn make_monic(&mut self, f: PrimeField) {
        let inv = f.inv(self.terms[0].1);
        for t in self.terms.iter_mut() {
            t.1 = f.mul(t.1, inv);
        }
    }
}

/// Degree-truncated Gröbner basis of the relation ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    quiver: Quiver,
    field: PrimeField,
    order: MonomialOrder,
    elements: Vec<Poly>,
    max_degree: usize,
    relation_degree: usize,
    // letter data in rank space
    letter_arrow: Vec<ArrowId>,
    letter_source: Vec<VertexId>,
    letter_target: Vec<VertexId>,
    tips: HashMap<Vec<u16>, usize>,
    tip_lengths: BTreeSet<usize>,
}

impl GroebnerBasis {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest degree among the input relations (0 when there are none).
    pub fn relation_degree(&self) -> usize {
        self.relation_degree
    }

    /// Largest degree among basis elements (0 when there are none).
    pub fn max_element_degree(&self) -> usize {
        self.elements.iter().map(Poly::degree).max().unwrap_or(0)
    }

    /// The basis elements as path-algebra elements (monic, leading word first
    /// in the internal order).
    pub fn elements(&self) -> Vec<AlgebraElement> {
        self.elements.iter().map(|p| self.to_element(p.terms.iter().map(|(w, c)| (w, *c)))).collect()
    }

    /// Leading words as arrow-id sequences.
    pub fn leading_words(&self) -> Vec<Vec<ArrowId>> {
        self.elements.iter().map(|p| self.arrows_of(p.lead())).collect()
    }

    fn arrows_of(&self, w: &RankWord) -> Vec<ArrowId> {
        w.0.iter().map(|&l| self.letter_arrow[l as usize]).collect()
    }

    fn to_element<'a>(&self, terms: impl Iterator<Item = (&'a RankWord, u32)>) -> AlgebraElement {
        AlgebraElement::from_raw_terms(terms.map(|(w, c)| {
            let arrows = self.arrows_of(w);
            let source = self.letter_source[w.0[0] as usize];
            let target = self.letter_target[*w.0.last().unwrap() as usize];
            (PathWord { source, target, arrows }, c)
        }))
    }

    fn find_divisor(&self, w: &[u16]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &l in &self.tip_lengths {
                if pos + l > w.len() {
                    break;
                }
                if let Some(&g) = self.tips.get(&w[pos..pos + l]) {
                    return Some((pos, g));
                }
            }
        }
        None
    }

    fn is_normal(&self, w: &[u16]) -> bool {
        self.find_divisor(w).is_none()
    }

    fn reduce_map(&self, mut work: BTreeMap<RankWord, u32>) -> BTreeMap<RankWord, u32> {
        let f = self.field;
        let mut out = BTreeMap::new();
        while let Some((w, c)) = work.pop_last() {
            let Some((pos, gi)) = self.find_divisor(&w.0) else {
                out.insert(w, c);
                continue;
            };
            let g = &self.elements[gi];
            let tl = g.degree();
            let (prefix, suffix) = (&w.0[..pos], &w.0[pos + tl..]);
            let neg = f.neg(c);
            for (t, gc) in g.terms.iter().skip(1) {
                let mut nw = Vec::with_capacity(w.0.len());
                nw.extend_from_slice(prefix);
                nw.extend_from_slice(&t.0);
                nw.extend_from_slice(suffix);
                let key = RankWord(nw);
                let e = work.entry(key.clone()).or_insert(0);
                *e = f.mul_add(*e, neg, *gc);
                if *e == 0 {
                    work.remove(&key);
                }
            }
        }
        out
    }

    fn add_element(&mut self, p: Poly) {
        let idx = self.elements.len();
        self.tips.insert(p.lead().0.clone(), idx);
        self.tip_lengths.insert(p.degree());
        self.elements.push(p);
    }

    fn rank_map(&self, a: &AlgebraElement) -> BTreeMap<RankWord, u32> {
        a.terms()
            .filter(|(p, _)| !p.arrows.is_empty())
            .map(|(p, c)| (self.order.key(&p.arrows), c))
            .collect()
    }

    /// Normal form of a path-algebra element.
    pub fn normal_form(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if let Some((p, _)) = a.terms().find(|(p, _)| p.len() > self.max_degree) {
            return Err(Error::input(format!(
                "element has a term of degree {} above the truncation degree {}",
                p.len(),
                self.max_degree
            )));
        }
        let idempotents: Vec<(PathWord, u32)> =
            a.terms().filter(|(p, _)| p.arrows.is_empty()).map(|(p, c)| (p.clone(), c)).collect();
        let reduced = self.reduce_map(self.rank_map(a));
        let mut out = self.to_element(reduced.iter().map(|(w, c)| (w, *c)));
        for (p, c) in idempotents {
            out.add_term(self.field, p, c);
        }
        Ok(out)
    }
}

/// Completes the relations of `pres` to a Gröbner basis valid in degrees `<= max_degree`.
pub fn buchberger_truncated(
    pres: &QuiverPresentation,
    order: &MonomialOrder,
    max_degree: usize,
) -> Result<GroebnerBasis> {
    pres.ensure_valid()?;
    let q = &pres.quiver;
    if order.precedence().len() != q.num_arrows() {
        return Err(Error::input("monomial order does not match the quiver's arrows"));
    }
    let rel_deg = pres.max_relation_degree();
    if max_degree < rel_deg {
        return Err(Error::input(format!(
            "truncation degree {max_degree} is below the relation degree {rel_deg}"
        )));
    }
    let f = pres.field;
    let letter_arrow: Vec<ArrowId> = order.precedence().to_vec();
    let letter_source = letter_arrow.iter().map(|&a| q.arrow(a).source).collect();
    let letter_target = letter_arrow.iter().map(|&a| q.arrow(a).target).collect();
    let mut gb = GroebnerBasis {
        quiver: q.clone(),
        field: f,
        order: order.clone(),
        elements: Vec::new(),
        max_degree,
        relation_degree: rel_deg,
        letter_arrow,
        letter_source,
        letter_target,
        tips: HashMap::new(),
        tip_lengths: BTreeSet::new(),
    };

    let mut inputs: BTreeMap<usize, Vec<BTreeMap<RankWord, u32>>> = BTreeMap::new();
    for r in &pres.relations {
        let d = r.degree().expect("validated relation");
        inputs.entry(d).or_default().push(gb.rank_map(r));
    }

    for deg in 2..=max_degree {
        let mut candidates: Vec<BTreeMap<RankWord, u32>> = inputs.remove(&deg).unwrap_or_default();
        // Overlaps u = u'o, v = ov' with |u'o v'| = deg, ordered by (i, j, overlap).
        let existing = gb.elements.len();
        for i in 0..existing {
            for j in 0..existing {
                let u = &gb.elements[i].lead().0;
                let v = &gb.elements[j].lead().0;
                if u.len() + v.len() <= deg {
                    continue;
                }
                let o = u.len() + v.len() - deg;
                if o == 0 || o >= u.len() || o >= v.len() {
                    continue;
                }
                if u[u.len() - o..] != v[..o] {
                    continue;
                }
                let u_prefix = &u[..u.len() - o];
                let v_suffix = &v[o..];
                let mut s: BTreeMap<RankWord, u32> = BTreeMap::new();
                for (t, c) in &gb.elements[i].terms {
                    let mut w = t.0.clone();
                    w.extend_from_slice(v_suffix);
                    let e = s.entry(RankWord(w)).or_insert(0);
                    *e = f.add(*e, *c);
                }
                for (t, c) in &gb.elements[j].terms {
                    let mut w = u_prefix.to_vec();
                    w.extend_from_slice(&t.0);
                    let e = s.entry(RankWord(w)).or_insert(0);
                    *e = f.sub(*e, *c);
                }
                s.retain(|_, c| *c != 0);
                candidates.push(s);
            }
        }
        let first_new = gb.elements.len();
        for c in candidates {
            let r = gb.reduce_map(c);
            if r.is_empty() {
                continue;
            }
            let mut p = Poly::from_map(r);
            p.make_monic(f);
            gb.add_element(p);
        }
        // Tail-reduce the new elements of this degree against each other.
        for idx in first_new..gb.elements.len() {
            let p = gb.elements[idx].clone();
            let lead = p.terms[0].clone();
            let tail: BTreeMap<RankWord, u32> = p.terms[1..].iter().cloned().collect();
            let reduced = gb.reduce_map(tail);
            let mut terms = vec![lead];
            terms.extend(reduced.into_iter().rev());
            gb.elements[idx] = Poly { terms };
        }
    }
    Ok(gb)
}

/// Normal form of `a` modulo `gb`.
pub fn normal_form(a: &AlgebraElement, gb: &GroebnerBasis) -> Result<AlgebraElement> {
    gb.normal_form(a)
}

/// The truncated graded algebra `A_0 + ... + A_D` spanned by normal words.
pub fn graded_algebra_data(gb: &GroebnerBasis, max_degree: usize) -> Result<GradedAlgebra> {
    if max_degree > gb.max_degree {
        return Err(Error::input(format!(
            "requested degree {max_degree} exceeds the Gröbner truncation degree {}",
            gb.max_degree
        )));
    }
    let q = &gb.quiver;
    let nv = q.num_vertices();
    let nletters = gb.letter_arrow.len();

    // words[k] = normal words of length k in increasing order; degree 0 handled separately
    let mut words: Vec<Vec<RankWord>> = vec![Vec::new(); max_degree + 1];
    if max_degree >= 1 {
        let mut w1: Vec<RankWord> = (0..nletters as u16).map(|l| RankWord(vec![l])).collect();
        w1.sort();
        words[1] = w1;
    }
    for k in 2..=max_degree {
        let mut next = Vec::new();
        for w in &words[k - 1] {
            let end = gb.letter_target[*w.0.last().unwrap() as usize];
            for l in 0..nletters as u16 {
                if gb.letter_source[l as usize] != end {
                    continue;
                }
                let mut cand = w.0.clone();
                cand.push(l);
                let tip_suffix = gb
                    .tip_lengths
                    .iter()
                    .any(|&tl| tl <= cand.len() && gb.tips.contains_key(&cand[cand.len() - tl..]));
                if !tip_suffix {
                    next.push(RankWord(cand));
                }
            }
        }
        next.sort();
        words[k] = next;
    }

    let index: Vec<HashMap<RankWord, u32>> = words
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect())
        .collect();

    let endpoints = |w: &RankWord| -> (VertexId, VertexId) {
        (gb.letter_source[w.0[0] as usize], gb.letter_target[*w.0.last().unwrap() as usize])
    };

    let mut basis: Vec<Vec<BasisElement>> = Vec::with_capacity(max_degree + 1);
    basis.push(
        (0..nv)
            .map(|v| BasisElement { label: format!("e_{}", q.vertices()[v]), source: v, target: v })
            .collect(),
    );
    for ws in words.iter().skip(1) {
        basis.push(
            ws.iter()
                .map(|w| {
                    let (s, t) = endpoints(w);
                    let label = w.0.iter().map(|&l| q.arrow(gb.letter_arrow[l as usize]).label.as_str());
                    BasisElement { label: label.collect::<Vec<_>>().join("*"), source: s, target: t }
                })
                .collect(),
        );
    }

    let mut nf_cache: HashMap<Vec<u16>, SparseVec> = HashMap::new();
    let mut products: Vec<Vec<Vec<SparseVec>>> = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let mut row = Vec::with_capacity(max_degree + 1 - k);
        for l in 0..=max_degree - k {
            let (dk, dl) = (basis[k].len(), basis[l].len());
            let mut table = vec![Vec::new(); dk * dl];
            for i in 0..dk {
                for j in 0..dl {
                    if basis[k][i].target != basis[l][j].source {
                        continue;
                    }
                    table[i * dl + j] = if k == 0 {
                        vec![(j as u32, 1)]
                    } else if l == 0 {
                        vec![(i as u32, 1)]
                    } else {
                        let mut w = words[k][i].0.clone();
                        w.extend_from_slice(&words[l][j].0);
                        if gb.is_normal(&w) {
                            vec![(index[k + l][&RankWord(w)], 1)]
                        } else {
                            nf_cache
                                .entry(w.clone())
                                .or_insert_with(|| {
                                    let mut m = BTreeMap::new();
                                    m.insert(RankWord(w), 1u32);
                                    let mut v: SparseVec = gb
                                        .reduce_map(m)
                                        .into_iter()
                                        .map(|(rw, c)| (index[k + l][&rw], c))
                                        .collect();
                                    v.sort_unstable();
                                    v
                                })
                                .clone()
                        }
                    };
                }
            }
            row.push(table);
        }
        products.push(row);
    }
    Ok(GradedAlgebra::from_tables(
        gb.field,
        q.vertices().to_vec(),
        basis,
        products,
        Provenance::Groebner { relation_degree: gb.relation_degree, groebner_degree: gb.max_element_degree() },
    ))
}

/// Coordinates of a homogeneous element of degree `k` in the basis of `A_k`,
/// after reduction to normal form.
pub fn coordinates(gb: &GroebnerBasis, alg: &GradedAlgebra, a: &AlgebraElement) -> Result<(usize, SparseVec)> {
    let k = a.degree().unwrap_or(0);
    if !a.is_homogeneous() {
        return Err(Error::input("element is not homogeneous"));
    }
    if k > alg.max_degree() {
        return Err(Error::input(format!("element of degree {k} lies above the algebra's truncation")));
    }
    let nf = gb.normal_form(a)?;
    let index: HashMap<&str, usize> = alg.basis(k).iter().enumerate().map(|(i, e)| (e.label.as_str(), i)).collect();
    let mut out: SparseVec = nf
        .terms()
        .map(|(p, c)| {
            let label = gb.quiver.path_label(p);
            index
                .get(label.as_str())
                .map(|&i| (i as u32, c))
                .ok_or_else(|| Error::input(format!("normal word {label} missing from the degree-{k} basis")))
        })
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok((k, out))
}

/// Convenience: Gröbner basis in declaration order followed by the truncated algebra.
pub fn algebra_from_presentation(pres: &QuiverPresentation, max_degree: usize) -> Result<GradedAlgebra> {
    let order = MonomialOrder::declaration(pres.quiver.num_arrows());
    let gb = buchberger_truncated(pres, &order, max_degree.max(pres.max_relation_degree()))?;
    graded_algebra_data(&gb, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::PrimeField;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn loops(names: &[&str]) -> Quiver {
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (*n, "1", "1")).collect();
        Quiver::new(&["1"], &arrows).unwrap()
    }

    fn element(q: &Quiver, terms: &[(i64, &[&str])]) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for (c, w) in terms {
            e.add_term(f(), q.path(w).unwrap(), f().reduce(*c));
        }
        e
    }

    #[test]
    fn monomial_square() {
        let q = loops(&["x"]);
        let r = element(&q, &[(1, &["x", "x"])]);
        let pres = QuiverPresentation::new(q.clone(), vec![r.clone()], f());
        let gb = buchberger_truncated(&pres, &MonomialOrder::declaration(1), 6).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements()[0], r);
        assert!(gb.normal_form(&r).unwrap().is_zero());
        let alg = graded_algebra_data(&gb, 6).unwrap();
        assert_eq!(alg.dims(), vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn commuting_loops() {
        let q = loops(&["x", "y"]);
        let r = element(&q, &[(1, &["x", "y"]), (-1, &["y", "x"])]);
        let pres = QuiverPresentation::new(q.clone(), vec![r], f());
        let gb = buchberger_truncated(&pres, &MonomialOrder::declaration(2), 4).unwrap();
        assert_eq!(gb.len(), 1);
        let xy = element(&q, &[(1, &["x", "y"])]);
        assert_eq!(gb.normal_form(&xy).unwrap(), element(&q, &[(1, &["y", "x"])]));
        let alg = graded_algebra_data(&gb, 4).unwrap();
        assert_eq!(alg.dims(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn normal_form_rejects_degree_above_truncation() {
        let q = loops(&["x"]);
        let pres = QuiverPresentation::new(q.clone(), vec![element(&q, &[(1, &["x", "x"])])], f());
        let gb = buchberger_truncated(&pres, &MonomialOrder::declaration(1), 3).unwrap();
        let x4 = element(&q, &[(1, &["x", "x", "x", "x"])]);
        assert!(gb.normal_form(&x4).is_err());
    }

    #[test]
    fn rejects_truncation_below_relation_degree() {
        let q = loops(&["x"]);
        let pres = QuiverPresentation::new(q.clone(), vec![element(&q, &[(1, &["x", "x", "x"])])], f());
        assert!(buchberger_truncated(&pres, &MonomialOrder::declaration(1), 2).is_err());
    }

    #[test]
    fn order_comparison() {
        let o = MonomialOrder::declaration(2);
        assert_eq!(o.compare(&[0, 1], &[1, 0]), Ordering::Greater);
        assert_eq!(o.compare(&[1], &[0, 0]), Ordering::Less);
        let rev = MonomialOrder::from_precedence(vec![1, 0]).unwrap();
        assert_eq!(rev.compare(&[0, 1], &[1, 0]), Ordering::Less);
        assert!(MonomialOrder::from_precedence(vec![0, 0]).is_err());
    }

    #[test]
    fn free_algebra_counts_paths() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1")]).unwrap();
        let pres = QuiverPresentation::new(q, vec![], f());
        let alg = algebra_from_presentation(&pres, 3).unwrap();
        // paths of length k: count by brute force over arrow sequences
        for k in 0..=3 {
            let mut count = 0;
            let arrows = [(0, 1), (1, 0), (0, 0)];
            let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
            while let Some((len, end)) = stack.pop() {
                if len == k {
                    count += if k == 0 { 2 } else { 1 };
                    continue;
                }
                for &(s, t) in &arrows {
                    if end.map_or(true, |e| e == s) {
                        stack.push((len + 1, Some(t)));
                    }
                }
            }
            assert_eq!(alg.dim(k), count, "degree {k}");
        }
    }
}
