//! Resolutions of a gluing graph: every vertex becomes a circle carrying its
//! edge ends in a cyclic order, and every arc of a circle gets its class in
//! `H^1` of the resulting skeleton.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredMultigraph, UnionFind};

/// A class in `H^1`, as its values on the fundamental cycles.
pub type Class = Vec<i64>;

/// Largest source accepted by [`resolve`].
pub const MAX_RESOLVE_EDGES: usize = 4;

/// An edge of the skeleton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SkeletonEdge {
    /// Edge `index` of the source graph.
    Source { index: usize },
    /// Arc `index` of the circle of `vertex`, from its `index`-th attached
    /// end to the next one.
    Arc { vertex: usize, index: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolvedDiagram {
    /// Cyclic order of edge ends at every vertex. End `2e` is the first
    /// endpoint of source edge `e`, end `2e + 1` the second. Each order
    /// starts with its smallest end.
    pub orders: Vec<Vec<usize>>,
    pub node_count: usize,
    /// Skeleton edges with their endpoints, in spanning-tree priority order.
    pub edges: Vec<(SkeletonEdge, usize, usize)>,
    /// One row per fundamental cycle: the signed multiplicity of every
    /// skeleton edge in it.
    pub h1_basis: Vec<Vec<i64>>,
    /// Classes of the arcs of each circle, in cyclic order.
    pub arc_classes: Vec<Vec<Class>>,
    /// Class of each circle.
    pub circle_classes: Vec<Class>,
}

impl ResolvedDiagram {
    pub fn rank(&self) -> usize {
        self.h1_basis.len()
    }

    /// True when the arcs of every circle share one class.
    pub fn is_degenerate(&self) -> bool {
        self.arc_classes.iter().all(|c| c.iter().all_equal())
    }
}

/// Orders of the ends at a vertex, up to rotation.
fn cyclic_orders(ends: &[usize]) -> Vec<Vec<usize>> {
    match ends.split_first() {
        None => vec![vec![]],
        Some((&first, rest)) => rest
            .iter()
            .copied()
            .permutations(rest.len())
            .map(|p| std::iter::once(first).chain(p).collect())
            .collect(),
    }
}

/// Fundamental cycles of a connected multigraph with loops, for the
/// spanning tree grown greedily in edge order.
fn fundamental_cycles(node_count: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut uf = UnionFind::new(node_count);
    let mut in_tree = vec![false; edges.len()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        in_tree[i] = uf.union(u, v);
    }
    // parent pointers of the tree rooted at node 0
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; node_count];
    let mut seen = vec![false; node_count];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !in_tree[i] {
                continue;
            }
            let y = if u == x { v } else if v == x { u } else { continue };
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, i));
                stack.push(y);
            }
        }
    }
    let path_to_root = |mut x: usize, row: &mut Vec<i64>, sign: i64| {
        while let Some((px, i)) = parent[x] {
            // walking x -> px; edge i is stored as (u, v)
            let forward = edges[i] == (x, px);
            row[i] += if forward { sign } else { -sign };
            x = px;
        }
    };
    edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !in_tree[*i])
        .map(|(i, &(u, v))| {
            // chord u -> v, then back v -> root -> u
            let mut row = vec![0i64; edges.len()];
            row[i] += 1;
            path_to_root(v, &mut row, 1);
            path_to_root(u, &mut row, -1);
            row
        })
        .collect()
}

fn build(g: &ColoredMultigraph, orders: Vec<Vec<usize>>) -> ResolvedDiagram {
    let n = g.vertex_count();
    // one node per edge end, one extra node per bare circle
    let mut node_count = 2 * g.edge_count();
    let mut edges: Vec<(SkeletonEdge, usize, usize)> = (0..g.edge_count())
        .map(|e| (SkeletonEdge::Source { index: e }, 2 * e, 2 * e + 1))
        .collect();
    let mut bare = vec![None; n];
    for v in 0..n {
        let o = &orders[v];
        if o.is_empty() {
            bare[v] = Some(node_count);
            edges.push((SkeletonEdge::Arc { vertex: v, index: 0 }, node_count, node_count));
            node_count += 1;
        } else {
            for i in 0..o.len() {
                edges.push((SkeletonEdge::Arc { vertex: v, index: i }, o[i], o[(i + 1) % o.len()]));
            }
        }
    }
    let plain: Vec<(usize, usize)> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    let h1_basis = fundamental_cycles(node_count, &plain);
    let class_of = |e: usize| -> Class { h1_basis.iter().map(|row| row[e]).collect() };
    let mut arc_classes = vec![Vec::new(); n];
    let mut circle_classes = vec![vec![0i64; h1_basis.len()]; n];
    for (e, &(kind, ..)) in edges.iter().enumerate() {
        if let SkeletonEdge::Arc { vertex, .. } = kind {
            let c = class_of(e);
            for (acc, x) in circle_classes[vertex].iter_mut().zip(&c) {
                *acc += x;
            }
            if bare[vertex].is_none() {
                arc_classes[vertex].push(c);
            }
        }
    }
    ResolvedDiagram {
        orders,
        node_count,
        edges,
        h1_basis,
        arc_classes,
        circle_classes,
    }
}

/// All resolutions of a connected graph with at most
/// [`MAX_RESOLVE_EDGES`] edges.
pub fn resolve(g: &ColoredMultigraph) -> Result<Vec<ResolvedDiagram>> {
    if g.edge_count() > MAX_RESOLVE_EDGES {
        return Err(Error::SizeBound(format!(
            "resolution is limited to {MAX_RESOLVE_EDGES} edges (got {})",
            g.edge_count()
        )));
    }
    if !g.is_connected() || g.is_empty() {
        return Err(Error::Disconnected);
    }
    let mut ends = vec![Vec::new(); g.vertex_count()];
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        ends[i].push(2 * e);
        ends[j].push(2 * e + 1);
    }
    let per_vertex: Vec<Vec<Vec<usize>>> = ends.iter().map(|e| cyclic_orders(e)).collect();
    Ok(per_vertex
        .into_iter()
        .multi_cartesian_product()
        .map(|orders| build(g, orders))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;

    fn path(c: &[Color], m: &[usize]) -> ColoredMultigraph {
        ColoredMultigraph::path(c, m).unwrap()
    }

    #[test]
    fn single_vertex() {
        let r = resolve(&ColoredMultigraph::vertex(Color::A)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].rank(), 1);
        assert!(r[0].arc_classes[0].is_empty());
        assert_eq!(r[0].circle_classes[0], vec![1]);
    }

    #[test]
    fn single_edge() {
        let r = resolve(&path(&[Color::A, Color::B], &[1])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].rank(), 2);
        for v in 0..2 {
            assert_eq!(r[0].arc_classes[v], vec![r[0].circle_classes[v].clone()]);
        }
        assert_ne!(r[0].circle_classes[0], r[0].circle_classes[1]);
    }

    #[test]
    fn double_edge() {
        let r = resolve(&path(&[Color::A, Color::B], &[2])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].rank(), 3);
        for arcs in &r[0].arc_classes {
            assert_eq!(arcs.len(), 2);
            assert_ne!(arcs[0], arcs[1]);
        }
        assert!(!r[0].is_degenerate());
    }

    #[test]
    fn counts_and_ranks() {
        let triple = path(&[Color::A, Color::B], &[3]);
        let r = resolve(&triple).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|d| d.rank() == 4));
        let star = ColoredMultigraph::new(vec![Color::A; 4], vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = resolve(&star).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|d| d.rank() == 4 && d.is_degenerate()));
        let big = path(&[Color::A; 6], &[1; 5]);
        assert!(matches!(resolve(&big), Err(Error::SizeBound(_))));
    }

    #[test]
    fn cycles_are_closed() {
        let tri = ColoredMultigraph::new(vec![Color::A, Color::B, Color::C], vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        for d in resolve(&tri).unwrap() {
            for row in &d.h1_basis {
                let mut deg = vec![0i64; d.node_count];
                for (x, &(_, u, v)) in row.iter().zip(&d.edges) {
                    deg[u] -= x;
                    deg[v] += x;
                }
                assert!(deg.iter().all(|&x| x == 0));
            }
        }
    }
}
