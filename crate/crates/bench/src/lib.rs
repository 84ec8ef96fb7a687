//! Shared fixtures for the criterion benchmarks.

use std::sync::Arc;

use pkoszul::{algebra_from_presentation, corpus, GradedAlgebra, QuiverPresentation};

pub const CHAR: u32 = 32003;

/// Named presentations with the (N, D) bounds each benchmark resolves to.
pub fn cases() -> Vec<(&'static str, QuiverPresentation, usize, usize)> {
    vec![
        ("staircase", corpus::five_vertex_staircase(CHAR), 8, 12),
        ("commuting_loops", corpus::commuting_loops(CHAR), 8, 10),
        ("x^3", corpus::truncated_loop(3, CHAR), 8, 13),
        ("x^4", corpus::truncated_loop(4, CHAR), 8, 17),
        ("polynomial_3", corpus::polynomial(3, CHAR), 4, 8),
    ]
}

pub fn algebra(pres: &QuiverPresentation, max_degree: usize) -> Arc<GradedAlgebra> {
    Arc::new(algebra_from_presentation(pres, max_degree).expect("fixture algebra"))
}
