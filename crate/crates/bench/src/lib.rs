//! Shared fixtures for the benchmarks.

use tabweb::{enumerate_standard, MDiagram, Shape, StandardTableau, Web};

/// Every standard tableau of the `3 x n` rectangle.
pub fn rectangles(n: usize) -> Vec<StandardTableau> {
    enumerate_standard(&Shape::three_by(n)).collect()
}

pub fn diagrams(tableaux: &[StandardTableau]) -> Vec<MDiagram> {
    tableaux.iter().map(MDiagram::from_tableau).collect()
}

pub fn webs(tableaux: &[StandardTableau]) -> Vec<Web> {
    tableaux
        .iter()
        .map(|t| Web::from_tableau(t).expect("three-row tableau"))
        .collect()
}
