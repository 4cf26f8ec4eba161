//! Ribbon graphs as signed rotation systems.
//!
//! A graph with `m` edges owns half-edges `0..2m`; edge `i` pairs half-edges
//! `2i` and `2i+1` and carries a twist flag. Each vertex is a cyclic
//! sequence of half-edge ids; the sequences partition all half-edges.
//! Edge labels are 1-based in the public API, matching the set-system side.
//!
//! Boundary components are traced on doubled direction states, Euler genus
//! comes from Euler's formula, and partial duality is carried out on the
//! flag model (three involutions on 4m flags) by exchanging the vertex- and
//! side-involutions on the flags of the chosen edges.

use crate::error::{Error, Result};
use crate::set_system::{ground_mask, SetSystem, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub twisted: bool,
}

/// Boundary walk data of a spanning ribbon subgraph `(V, A)`.
///
/// Each walk is a traced cycle of `(half_edge, forward)` states; the walks
/// come in direction-reversed pairs, so the component count is half the
/// number of walks plus one circle for every vertex meeting no edge of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub subset: Subset,
    pub count: u32,
    pub walks: Vec<Vec<(usize, bool)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    edges: Vec<Edge>,
    vertices: Vec<Vec<usize>>,
}

impl RibbonGraph {
    /// Validates that the vertex rotations partition the half-edges
    /// `0..2m` exactly.
    pub fn new(edges: Vec<Edge>, vertices: Vec<Vec<usize>>) -> Result<RibbonGraph> {
        let m = edges.len();
        if m > 32 {
            return Err(Error::TooManyEdges {
                edges: m as u32,
                cap: 32,
            });
        }
        let mut seen = vec![false; 2 * m];
        for rot in &vertices {
            for &h in rot {
                if h >= 2 * m || seen[h] {
                    return Err(Error::Parse(format!(
                        "half-edge {h} is missing, repeated or out of range"
                    )));
                }
                seen[h] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Parse(
                "vertex rotations do not cover every half-edge".into(),
            ));
        }
        Ok(RibbonGraph { edges, vertices })
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.len() as u32
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertices.len() as u32
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    /// The full edge set as a subset over edge labels.
    pub fn full_edge_set(&self) -> Subset {
        Subset::from_bits(ground_mask(self.edge_count()))
    }

    fn require_edge_subset(&self, a: Subset) -> Result<()> {
        if a.bits() & !ground_mask(self.edge_count()) != 0 {
            return Err(Error::InvalidSubset);
        }
        Ok(())
    }

    fn vertex_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.half_edge_count()];
        for (v, rot) in self.vertices.iter().enumerate() {
            for &h in rot {
                out[h] = v;
            }
        }
        out
    }

    /// Number of connected components of the underlying graph; isolated
    /// vertices count.
    pub fn components(&self) -> u32 {
        let vertex_of = self.vertex_of();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in 0..self.edges.len() {
            let a = find(&mut parent, vertex_of[2 * e]);
            let b = find(&mut parent, vertex_of[2 * e + 1]);
            parent[a] = b;
        }
        let mut roots: Vec<usize> = (0..self.vertices.len())
            .map(|v| find(&mut parent, v))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() as u32
    }

    /// Components of the spanning subgraph `(V, A)`.
    fn subgraph_components(&self, a: Subset) -> u32 {
        let vertex_of = self.vertex_of();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in 0..self.edges.len() {
            if a.contains(e as u32 + 1) {
                let x = find(&mut parent, vertex_of[2 * e]);
                let y = find(&mut parent, vertex_of[2 * e + 1]);
                parent[x] = y;
            }
        }
        let mut roots: Vec<usize> = (0..self.vertices.len())
            .map(|v| find(&mut parent, v))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() as u32
    }

    /// Traces the boundary of the spanning ribbon subgraph `(V, A)`.
    ///
    /// States are `(half-edge of an A-edge, direction)`. A step moves to the
    /// partner half-edge, flips direction over a twisted edge, then takes
    /// the rotation successor (forward) or predecessor (backward) among
    /// A-half-edges at that vertex. The component count is the orbit count
    /// halved, plus one circle per vertex with no incident A-edge.
    pub fn boundary_count(&self, a: Subset) -> Result<BoundaryReport> {
        self.require_edge_subset(a)?;
        let m = self.edges.len();
        let in_a = |h: usize| a.contains((h / 2) as u32 + 1);

        // rotation successor/predecessor restricted to A-half-edges
        let mut succ = vec![usize::MAX; 2 * m];
        let mut pred = vec![usize::MAX; 2 * m];
        let mut free_vertices = 0u32;
        for rot in &self.vertices {
            let active: Vec<usize> = rot.iter().copied().filter(|&h| in_a(h)).collect();
            if active.is_empty() {
                free_vertices += 1;
                continue;
            }
            let k = active.len();
            for i in 0..k {
                succ[active[i]] = active[(i + 1) % k];
                pred[active[i]] = active[(i + k - 1) % k];
            }
        }

        // state id: 2h for forward, 2h+1 for backward
        let step = |state: usize| -> usize {
            let h = state / 2;
            let forward = state % 2 == 0;
            let partner = h ^ 1;
            let forward = forward != self.edges[h / 2].twisted;
            let next = if forward { succ[partner] } else { pred[partner] };
            2 * next + usize::from(!forward)
        };

        let mut visited = vec![false; 4 * m];
        let mut walks = Vec::new();
        for start in 0..4 * m {
            if visited[start] || !in_a(start / 2) {
                continue;
            }
            let mut walk = Vec::new();
            let mut s = start;
            loop {
                visited[s] = true;
                walk.push((s / 2, s % 2 == 0));
                s = step(s);
                if s == start {
                    break;
                }
            }
            walks.push(walk);
        }

        debug_assert_eq!(walks.len() % 2, 0);
        Ok(BoundaryReport {
            subset: a,
            count: walks.len() as u32 / 2 + free_vertices,
            walks,
        })
    }

    /// Euler genus `γ(G) = 2k − v + e − f`.
    pub fn euler_genus(&self) -> u32 {
        let f = self
            .boundary_count(self.full_edge_set())
            .expect("full edge set is always valid")
            .count;
        let genus = 2 * i64::from(self.components()) - i64::from(self.vertex_count())
            + i64::from(self.edge_count())
            - i64::from(f);
        debug_assert!(genus >= 0);
        genus as u32
    }

    const ENUMERATION_CAP: u32 = 20;

    fn require_enumerable(&self) -> Result<()> {
        if self.edge_count() > Self::ENUMERATION_CAP {
            return Err(Error::TooManyEdges {
                edges: self.edge_count(),
                cap: Self::ENUMERATION_CAP,
            });
        }
        Ok(())
    }

    /// Edge sets of spanning quasi-trees: subsets `A` whose spanning
    /// subgraph keeps every component connected with a single boundary
    /// circle per component.
    pub fn quasi_trees(&self) -> Result<Vec<Subset>> {
        self.require_enumerable()?;
        let k = self.components();
        let mut out = Vec::new();
        for bits in 0u64..(1u64 << self.edge_count()) {
            let a = Subset::from_bits(bits);
            if self.subgraph_components(a) == k && self.boundary_count(a)?.count == k {
                out.push(a);
            }
        }
        out.sort();
        Ok(out)
    }

    /// The delta-matroid `D(G)`: quasi-tree edge sets over the edge labels.
    pub fn delta_matroid(&self) -> Result<SetSystem> {
        SetSystem::new(self.edge_count(), self.quasi_trees()?)
    }

    /// The partial dual `G^A`, computed on the flag model: the vertices of
    /// `G^A` are the boundary components of `(V, A)` traced through the
    /// full corner structure of `G`.
    pub fn partial_dual(&self, a: Subset) -> Result<RibbonGraph> {
        self.require_edge_subset(a)?;
        if a.is_empty() {
            return Ok(self.clone());
        }
        let flags = FlagSystem::of(self);
        flags.partial_dual(self, a)
    }

    /// The geometric dual `G* = G^E`.
    pub fn geometric_dual(&self) -> RibbonGraph {
        self.partial_dual(self.full_edge_set())
            .expect("full edge set is always valid")
    }

    /// Euler genus of `G^A` from boundary counts alone:
    /// `2k + e − f(A) − f(A^c)`, which per component is the connected-case
    /// formula `2 + e − f(A) − f(A^c)` summed.
    pub fn pd_genus_formula(&self, a: Subset) -> Result<u32> {
        self.require_edge_subset(a)?;
        let complement = self.full_edge_set().minus(a);
        let f_a = self.boundary_count(a)?.count;
        let f_ac = self.boundary_count(complement)?.count;
        let genus = 2 * i64::from(self.components()) + i64::from(self.edge_count())
            - i64::from(f_a)
            - i64::from(f_ac);
        debug_assert!(genus >= 0);
        Ok(genus as u32)
    }

    /// Splits into component subgraphs with edges relabelled in increasing
    /// original order. Returns each subgraph with the original edge labels
    /// it carries.
    fn component_subgraphs(&self) -> Vec<RibbonGraph> {
        let vertex_of = self.vertex_of();
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut count = 0usize;
        for v0 in 0..self.vertices.len() {
            if comp[v0] != usize::MAX {
                continue;
            }
            let mut stack = vec![v0];
            comp[v0] = count;
            while let Some(v) = stack.pop() {
                for &h in &self.vertices[v] {
                    let w = vertex_of[h ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }

        (0..count)
            .map(|c| {
                let mut edge_map = vec![usize::MAX; self.edges.len()];
                let mut edges = Vec::new();
                for (e, edge) in self.edges.iter().enumerate() {
                    if comp[vertex_of[2 * e]] == c {
                        edge_map[e] = edges.len();
                        edges.push(*edge);
                    }
                }
                let vertices: Vec<Vec<usize>> = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(v, _)| comp[*v] == c)
                    .map(|(_, rot)| {
                        rot.iter()
                            .map(|&h| 2 * edge_map[h / 2] + h % 2)
                            .collect()
                    })
                    .collect();
                RibbonGraph { edges, vertices }
            })
            .collect()
    }

    /// The maximum partial-dual Euler genus, computed three ways that must
    /// agree: the per-component quasi-tree formula `1 + e − min f(A^c)`,
    /// the maximum twist width of `D(G)`, and the exhaustive subset sweep.
    pub fn max_pd_genus(&self) -> Result<u32> {
        self.require_enumerable()?;

        let mut by_formula = 0u32;
        for part in self.component_subgraphs() {
            let qts = part.quasi_trees()?;
            let full = part.full_edge_set();
            let min_fc = qts
                .iter()
                .map(|&a| part.boundary_count(full.minus(a)).unwrap().count)
                .min()
                .expect("a connected ribbon graph always has a quasi-tree");
            by_formula += 1 + part.edge_count() - min_fc;
        }

        let by_width = self.delta_matroid()?.max_twist_width()?;

        let by_sweep = (0u64..(1u64 << self.edge_count()))
            .map(|bits| self.pd_genus_formula(Subset::from_bits(bits)).unwrap())
            .max()
            .unwrap();

        assert_eq!(by_formula, by_width, "quasi-tree formula vs twist width");
        assert_eq!(by_width, by_sweep, "twist width vs exhaustive sweep");
        Ok(by_formula)
    }

    /// The partial-duality deficiency of a connected ribbon graph: the
    /// minimum of `f(A^c)` over spanning quasi-trees `A`.
    pub fn deficiency(&self) -> Result<u32> {
        if self.components() != 1 {
            return Err(Error::Disconnected);
        }
        self.require_enumerable()?;
        let full = self.full_edge_set();
        let value = self
            .quasi_trees()?
            .iter()
            .map(|&a| self.boundary_count(full.minus(a)).unwrap().count)
            .min()
            .expect("a connected ribbon graph always has a quasi-tree");
        debug_assert_eq!(
            value,
            self.edge_count() + 1 - self.delta_matroid()?.max_twist_width()?
        );
        Ok(value)
    }
}

/// The flag model: four flags per edge (one per half-edge side) with three
/// involutions. `s0` travels along the edge, `s1` crosses a vertex corner,
/// `s2` flips between the two sides of a half-edge. Flag `2h+1` is the
/// side facing the rotation successor of `h`, flag `2h` the predecessor
/// side.
struct FlagSystem {
    s0: Vec<usize>,
    s1: Vec<usize>,
    s2: Vec<usize>,
}

impl FlagSystem {
    fn of(g: &RibbonGraph) -> FlagSystem {
        let n = 2 * g.half_edge_count();
        let mut s0 = vec![0; n];
        let mut s1 = vec![0; n];
        let mut s2 = vec![0; n];

        for (e, edge) in g.edges.iter().enumerate() {
            let (h, p) = (2 * e, 2 * e + 1);
            if edge.twisted {
                s0[2 * h] = 2 * p;
                s0[2 * p] = 2 * h;
                s0[2 * h + 1] = 2 * p + 1;
                s0[2 * p + 1] = 2 * h + 1;
            } else {
                s0[2 * h + 1] = 2 * p;
                s0[2 * p] = 2 * h + 1;
                s0[2 * h] = 2 * p + 1;
                s0[2 * p + 1] = 2 * h;
            }
        }
        for rot in &g.vertices {
            let k = rot.len();
            for i in 0..k {
                let h = rot[i];
                let nh = rot[(i + 1) % k];
                s1[2 * h + 1] = 2 * nh;
                s1[2 * nh] = 2 * h + 1;
            }
        }
        for h in 0..g.half_edge_count() {
            s2[2 * h] = 2 * h + 1;
            s2[2 * h + 1] = 2 * h;
        }
        FlagSystem { s0, s1, s2 }
    }

    /// Exchanges the edge-travel and side-flip involutions on the flags of
    /// the chosen edges and reads the resulting map back off as a signed
    /// rotation system.
    fn partial_dual(&self, g: &RibbonGraph, a: Subset) -> Result<RibbonGraph> {
        let n = self.s0.len();
        let edge_of = |flag: usize| flag / 4;
        let mut s0 = self.s0.clone();
        let mut s2 = self.s2.clone();
        for flag in 0..n {
            if a.contains(edge_of(flag) as u32 + 1) {
                s0[flag] = self.s2[flag];
                s2[flag] = self.s0[flag];
            }
        }
        let s1 = &self.s1;

        // walk each new vertex: alternate s2 (across the half-edge) and s1
        // (across the corner); consecutive flag pairs are the half-edge
        // slots of the new rotation
        let m = g.edges.len();
        let mut pair_of_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
        let mut visited = vec![false; n];
        let mut vertices: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut rotation = Vec::new();
            let mut f = start;
            loop {
                let f2 = s2[f];
                visited[f] = true;
                visited[f2] = true;
                let e = edge_of(f);
                let slot = pair_of_edge[e].len();
                debug_assert!(slot < 2, "edge {e} occupies more than two slots");
                pair_of_edge[e].push((f, f2));
                rotation.push(2 * e + slot);
                f = s1[f2];
                if f == start {
                    break;
                }
            }
            vertices.push(rotation);
        }
        // isolated vertices have no flags and survive duality untouched
        for rot in &g.vertices {
            if rot.is_empty() {
                vertices.push(Vec::new());
            }
        }

        let edges = (0..m)
            .map(|e| {
                let pairs = &pair_of_edge[e];
                debug_assert_eq!(pairs.len(), 2);
                let (_, a_succ) = pairs[0];
                let (b_pred, b_succ) = pairs[1];
                let image = s0[a_succ];
                debug_assert!(image == b_pred || image == b_succ);
                Edge {
                    twisted: image == b_succ,
                }
            })
            .collect();

        RibbonGraph::new(edges, vertices)
    }
}

/// Edge-label-preserving isomorphism of ribbon graphs, up to relabelling
/// half-edges within an edge, reordering vertices, rotating each cyclic
/// order, and flipping vertex discs (a flip reverses the rotation and
/// toggles the twist of every non-loop edge-end at that vertex).
pub fn are_isomorphic(g1: &RibbonGraph, g2: &RibbonGraph) -> bool {
    if g1.edge_count() != g2.edge_count() || g1.vertex_count() != g2.vertex_count() {
        return false;
    }
    let m = g1.edges.len();
    let empty1 = g1.vertices.iter().filter(|r| r.is_empty()).count();
    let empty2 = g2.vertices.iter().filter(|r| r.is_empty()).count();
    if empty1 != empty2 {
        return false;
    }

    let vertex_of2 = g2.vertex_of();

    // enumerate the per-edge half-edge swaps; everything else is forced or
    // a per-vertex flip choice
    'swaps: for swap_bits in 0u32..(1u32 << m) {
        let phi = |h: usize| -> usize {
            let e = h / 2;
            if swap_bits & (1 << e) != 0 {
                h ^ 1
            } else {
                h
            }
        };

        // forced vertex correspondence plus allowed flip values
        let mut flips: Vec<Vec<bool>> = Vec::with_capacity(g1.vertices.len());
        let mut images: Vec<Option<usize>> = Vec::with_capacity(g1.vertices.len());
        let mut used = vec![false; g2.vertices.len()];
        for rot1 in &g1.vertices {
            if rot1.is_empty() {
                images.push(None);
                flips.push(vec![false]);
                continue;
            }
            let v2 = vertex_of2[phi(rot1[0])];
            if used[v2] || g2.vertices[v2].len() != rot1.len() {
                continue 'swaps;
            }
            used[v2] = true;
            let mapped: Vec<usize> = rot1.iter().map(|&h| phi(h)).collect();
            let mut allowed = Vec::new();
            if cyclically_equal(&mapped, &g2.vertices[v2]) {
                allowed.push(false);
            }
            let reversed: Vec<usize> = mapped.iter().rev().copied().collect();
            if cyclically_equal(&reversed, &g2.vertices[v2]) {
                allowed.push(true);
            }
            if allowed.is_empty() {
                continue 'swaps;
            }
            images.push(Some(v2));
            flips.push(allowed);
        }

        let vertex_of1 = g1.vertex_of();
        if flip_assignment_exists(g1, g2, &vertex_of1, &flips, 0, &mut vec![false; flips.len()]) {
            return true;
        }
    }
    false
}

fn cyclically_equal(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    if k != b.len() {
        return false;
    }
    if k == 0 {
        return true;
    }
    (0..k).any(|shift| (0..k).all(|i| a[(i + shift) % k] == b[i]))
}

fn flip_assignment_exists(
    g1: &RibbonGraph,
    g2: &RibbonGraph,
    vertex_of1: &[usize],
    flips: &[Vec<bool>],
    idx: usize,
    chosen: &mut Vec<bool>,
) -> bool {
    if idx == flips.len() {
        return (0..g1.edges.len()).all(|e| {
            let u = vertex_of1[2 * e];
            let w = vertex_of1[2 * e + 1];
            let toggles = if u == w {
                false
            } else {
                chosen[u] != chosen[w]
            };
            (g1.edges[e].twisted != toggles) == g2.edges[e].twisted
        });
    }
    flips[idx].iter().any(|&f| {
        chosen[idx] = f;
        flip_assignment_exists(g1, g2, vertex_of1, flips, idx + 1, chosen)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn edge_set(labels: &[u32], e: u32) -> Subset {
        Subset::from_elements(labels, e).unwrap()
    }

    #[test]
    fn construction_validates_partition() {
        assert!(RibbonGraph::new(vec![Edge { twisted: false }], vec![vec![0, 0]]).is_err());
        assert!(RibbonGraph::new(vec![Edge { twisted: false }], vec![vec![0]]).is_err());
        assert!(RibbonGraph::new(vec![Edge { twisted: false }], vec![vec![0, 1, 2]]).is_err());
        assert!(RibbonGraph::new(vec![], vec![vec![], vec![]]).is_ok());
    }

    #[test]
    fn boundary_counts_of_fixtures() {
        let iso = fixtures::isolated_vertex();
        assert_eq!(iso.boundary_count(Subset::EMPTY).unwrap().count, 1);

        let l0 = fixtures::l0();
        assert_eq!(l0.boundary_count(edge_set(&[1], 1)).unwrap().count, 2);
        assert_eq!(l0.boundary_count(Subset::EMPTY).unwrap().count, 1);

        let l1 = fixtures::l1();
        assert_eq!(l1.boundary_count(edge_set(&[1], 1)).unwrap().count, 1);

        let t2 = fixtures::t2();
        assert_eq!(t2.boundary_count(t2.full_edge_set()).unwrap().count, 1);

        let r4 = fixtures::r4();
        assert_eq!(r4.boundary_count(r4.full_edge_set()).unwrap().count, 3);
    }

    #[test]
    fn boundary_rejects_invalid_subset() {
        let l0 = fixtures::l0();
        assert_eq!(
            l0.boundary_count(Subset::from_bits(0b10)),
            Err(Error::InvalidSubset)
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(fixtures::r4().components(), 1);
        assert_eq!(fixtures::isolated_vertex().components(), 1);
        let two_loops = RibbonGraph::new(
            vec![Edge { twisted: false }, Edge { twisted: false }],
            vec![vec![0, 1], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(two_loops.components(), 2);
    }

    #[test]
    fn euler_genus_of_fixtures() {
        assert_eq!(fixtures::isolated_vertex().euler_genus(), 0);
        assert_eq!(fixtures::l0().euler_genus(), 0);
        assert_eq!(fixtures::l1().euler_genus(), 1);
        assert_eq!(fixtures::t2().euler_genus(), 2);
        assert_eq!(fixtures::r4().euler_genus(), 2);
    }

    #[test]
    fn quasi_tree_families() {
        let l0 = fixtures::l0();
        assert_eq!(l0.quasi_trees().unwrap(), vec![Subset::EMPTY]);

        let l1 = fixtures::l1();
        assert_eq!(
            l1.quasi_trees().unwrap(),
            vec![Subset::EMPTY, edge_set(&[1], 1)]
        );

        let r4 = fixtures::r4();
        assert_eq!(r4.delta_matroid().unwrap(), fixtures::f_53());
    }

    #[test]
    fn delta_matroid_of_fixtures() {
        let l1 = fixtures::l1();
        let d = l1.delta_matroid().unwrap();
        assert_eq!(d.ground_size(), 1);
        assert_eq!(d.family().len(), 2);
        assert!(d.check_symmetric_exchange().unwrap().holds());

        assert_eq!(
            fixtures::isolated_vertex().delta_matroid().unwrap(),
            fixtures::d_0()
        );
        assert!(fixtures::r4()
            .delta_matroid()
            .unwrap()
            .check_symmetric_exchange()
            .unwrap()
            .holds());
    }

    #[test]
    fn partial_dual_identity() {
        let r4 = fixtures::r4();
        assert_eq!(r4.partial_dual(Subset::EMPTY).unwrap(), r4);
    }

    #[test]
    fn partial_dual_of_plane_loop() {
        let l0 = fixtures::l0();
        let dual = l0.partial_dual(edge_set(&[1], 1)).unwrap();
        assert_eq!(dual.vertex_count(), 2);
        assert_eq!(dual.edge_count(), 1);
        assert_eq!(dual.euler_genus(), 0);
    }

    #[test]
    fn geometric_dual_of_torus() {
        let t2 = fixtures::t2();
        let dual = t2.geometric_dual();
        assert_eq!(dual.vertex_count(), 1);
        assert_eq!(dual.edge_count(), 2);
        assert_eq!(
            dual.boundary_count(dual.full_edge_set()).unwrap().count,
            1
        );
        assert_eq!(dual.euler_genus(), 2);

        let iso = fixtures::isolated_vertex();
        assert_eq!(iso.geometric_dual(), iso);
    }

    #[test]
    fn partial_dual_matches_twist_and_formula() {
        let r4 = fixtures::r4();
        let a = edge_set(&[1, 3], 4);
        let dual = r4.partial_dual(a).unwrap();
        assert_eq!(dual.euler_genus(), 4);
        assert_eq!(
            dual.delta_matroid().unwrap(),
            fixtures::f_53().twist(a).unwrap()
        );
        assert_eq!(r4.pd_genus_formula(a).unwrap(), 4);
    }

    #[test]
    fn pd_genus_formula_examples() {
        let r4 = fixtures::r4();
        assert_eq!(r4.pd_genus_formula(Subset::EMPTY).unwrap(), 2);
        assert_eq!(r4.pd_genus_formula(edge_set(&[1, 3], 4)).unwrap(), 4);
        let l0 = fixtures::l0();
        assert_eq!(l0.pd_genus_formula(edge_set(&[1], 1)).unwrap(), 0);
    }

    #[test]
    fn max_pd_genus_values() {
        assert_eq!(fixtures::r4().max_pd_genus().unwrap(), 4);
        assert_eq!(fixtures::l1().max_pd_genus().unwrap(), 1);
        assert_eq!(fixtures::isolated_vertex().max_pd_genus().unwrap(), 0);
    }

    #[test]
    fn deficiency_values() {
        assert_eq!(fixtures::r4().deficiency().unwrap(), 1);
        assert_eq!(fixtures::l1().deficiency().unwrap(), 1);
        assert_eq!(fixtures::isolated_vertex().deficiency().unwrap(), 1);

        let two_loops = RibbonGraph::new(
            vec![Edge { twisted: false }, Edge { twisted: false }],
            vec![vec![0, 1], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(two_loops.deficiency(), Err(Error::Disconnected));
    }

    #[test]
    fn double_dual_is_isomorphic() {
        let r4 = fixtures::r4();
        for bits in 0u64..16 {
            let a = Subset::from_bits(bits);
            let back = r4.partial_dual(a).unwrap().partial_dual(a).unwrap();
            assert!(are_isomorphic(&r4, &back), "A = {a:?}");
        }
    }

    #[test]
    fn isomorphism_respects_vertex_flips() {
        // a twisted edge between two vertices is a flipped untwisted one
        let plain = RibbonGraph::new(vec![Edge { twisted: false }], vec![vec![0], vec![1]]).unwrap();
        let flipped =
            RibbonGraph::new(vec![Edge { twisted: true }], vec![vec![0], vec![1]]).unwrap();
        assert!(are_isomorphic(&plain, &flipped));

        // but a twisted loop is not an untwisted loop
        assert!(!are_isomorphic(&fixtures::l0(), &fixtures::l1()));
    }

    #[test]
    fn quasi_tree_guard() {
        let vertices = vec![(0..42).collect::<Vec<usize>>()];
        let edges = vec![Edge { twisted: false }; 21];
        let big = RibbonGraph::new(edges, vertices).unwrap();
        assert!(matches!(
            big.quasi_trees(),
            Err(Error::TooManyEdges { edges: 21, cap: 20 })
        ));
    }
}
