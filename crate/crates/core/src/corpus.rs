//! Small presentations used by tests, benchmarks and examples.

use crate::presentation::{AlgebraElement, Quiver, QuiverPresentation};
use crate::scalars::PrimeField;

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).expect("corpus characteristic is prime")
}

fn binomial(q: &Quiver, f: PrimeField, a: &[&str], b: &[&str]) -> AlgebraElement {
    let mut e = AlgebraElement::from_path(q.path(a).expect("corpus path"));
    e.add_term(f, q.path(b).expect("corpus path"), f.neg(1));
    e
}

/// One loop `x` with `x^d = 0`.
pub fn truncated_loop(d: usize, p: u32) -> QuiverPresentation {
    let f = field(p);
    let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    let r = AlgebraElement::from_path(q.path(&vec!["x"; d]).unwrap());
    QuiverPresentation::new(q, vec![r], f)
}

/// Loops `x_1, ..., x_m` on one vertex with all commutators as relations.
pub fn polynomial(m: usize, p: u32) -> QuiverPresentation {
    let f = field(p);
    let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let arrows: Vec<(String, String, String)> = names.iter().map(|n| (n.clone(), "1".into(), "1".into())).collect();
    let q = Quiver::new(&["1".to_string()], &arrows).unwrap();
    let mut rels = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            rels.push(binomial(&q, f, &[&names[i], &names[j]], &[&names[j], &names[i]]));
        }
    }
    QuiverPresentation::new(q, rels, f)
}

/// Two loops `x, y` with `xy = yx`.
pub fn commuting_loops(p: u32) -> QuiverPresentation {
    let f = field(p);
    let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
    let r = binomial(&q, f, &["x", "y"], &["y", "x"]);
    QuiverPresentation::new(q, vec![r], f)
}

/// The linear quiver `1 -> 2 -> ... -> n` without relations.
pub fn linear_path(n: usize, p: u32) -> QuiverPresentation {
    let f = field(p);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> =
        (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
    QuiverPresentation::new(Quiver::new(&vertices, &arrows).unwrap(), Vec::new(), f)
}

/// Five vertices, arrows `a1: 1->2`, `a2, a3: 2->3`, `a4, a5, a6: 3->4`,
/// `a7: 4->5`, relations `a1a2 - a1a3`, `a4a7 - a5a7`, `a5a7 - a6a7`,
/// `a2a4`, `a3a6`. Its trivial module has generator degrees 0, 1, 2, 4.
pub fn five_vertex_staircase(p: u32) -> QuiverPresentation {
    let f = field(p);
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
    let mono = |l: &[&str]| AlgebraElement::from_path(q.path(l).unwrap());
    let rels = vec![
        binomial(&q, f, &["a1", "a2"], &["a1", "a3"]),
        binomial(&q, f, &["a4", "a7"], &["a5", "a7"]),
        binomial(&q, f, &["a5", "a7"], &["a6", "a7"]),
        mono(&["a2", "a4"]),
        mono(&["a3", "a6"]),
    ];
    QuiverPresentation::new(q, rels, f)
}

/// A monomial path algebra on `1 -> 2 -> ... -> 8` killing every path of
/// length 3. The trivial module has generator degrees 0, 1, 3, 4, 6, 7.
pub fn linear_cubes(p: u32) -> QuiverPresentation {
    let f = field(p);
    let n = 8;
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> =
        (1..n).map(|i| (format!("b{i}"), i.to_string(), (i + 1).to_string())).collect();
    let q = Quiver::new(&vertices, &arrows).unwrap();
    let rels = (1..n - 2)
        .map(|i| {
            let w = [format!("b{i}"), format!("b{}", i + 1), format!("b{}", i + 2)];
            AlgebraElement::from_path(q.path(&[&w[0], &w[1], &w[2]]).unwrap())
        })
        .collect();
    QuiverPresentation::new(q, rels, f)
}
