//! The small reference instances used across tests, examples and docs.
//!
//! `D_B` is Bouchet's non-binary delta-matroid, `D_R` the four-member set
//! system for which no monotone sequence exists, `F_53` the quasi-tree
//! family of the one-vertex four-loop graph `R4`, and `D_0` the trivial
//! proper system on an empty ground set.

use crate::ribbon::{Edge, RibbonGraph};
use crate::set_system::SetSystem;

/// `([4], {∅,{1,2},{1,3},{1,4},{2,3},{2,4},{3,4}})`
pub fn d_b() -> SetSystem {
    SetSystem::from_element_lists(
        4,
        &[
            vec![],
            vec![1, 2],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ],
    )
    .unwrap()
}

/// `([5], {∅,{1,2},{3,4,5},{1,2,3,4}})`; not a delta-matroid.
pub fn d_r() -> SetSystem {
    SetSystem::from_element_lists(5, &[vec![], vec![1, 2], vec![3, 4, 5], vec![1, 2, 3, 4]])
        .unwrap()
}

/// `([4], {∅,{1,3},{1,4},{2,3},{2,4},{3,4}})`
pub fn f_53() -> SetSystem {
    SetSystem::from_element_lists(
        4,
        &[
            vec![],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ],
    )
    .unwrap()
}

/// The trivial proper system `(∅, {∅})`.
pub fn d_0() -> SetSystem {
    SetSystem::from_element_lists(0, &[vec![]]).unwrap()
}

/// One vertex, one untwisted loop (annulus; plane loop).
pub fn l0() -> RibbonGraph {
    RibbonGraph::new(vec![Edge { twisted: false }], vec![vec![0, 1]]).unwrap()
}

/// One vertex, one twisted loop (Möbius band).
pub fn l1() -> RibbonGraph {
    RibbonGraph::new(vec![Edge { twisted: true }], vec![vec![0, 1]]).unwrap()
}

/// One vertex, two interleaved untwisted loops (torus).
pub fn t2() -> RibbonGraph {
    RibbonGraph::new(
        vec![Edge { twisted: false }, Edge { twisted: false }],
        vec![vec![0, 2, 1, 3]],
    )
    .unwrap()
}

/// One vertex, four untwisted loops with rotation `(1,3,4,1,2,3,4,2)` in
/// edge labels; its spanning quasi-trees are exactly the family `F_53`.
pub fn r4() -> RibbonGraph {
    // edge i owns half-edges 2i and 2i+1; first occurrence of a label uses
    // the even half-edge
    RibbonGraph::new(
        vec![
            Edge { twisted: false },
            Edge { twisted: false },
            Edge { twisted: false },
            Edge { twisted: false },
        ],
        vec![vec![0, 4, 6, 1, 2, 5, 7, 3]],
    )
    .unwrap()
}

/// A single isolated vertex.
pub fn isolated_vertex() -> RibbonGraph {
    RibbonGraph::new(vec![], vec![vec![]]).unwrap()
}
