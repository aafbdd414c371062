//! Vertex-colored multigraphs in canonical form.
//!
//! Graphs here are small (a connected graph with `E` edges has at most
//! `E + 1` vertices and the engine never goes beyond a handful of edges), so
//! canonical labeling is done by color/degree refinement followed by an
//! exhaustive search over the permutations that respect the refined cells.
//! The lexicographically least relabeled adjacency wins; the number of
//! permutations reaching it is the order of the automorphism group.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex color: one of the parameters `*`, `a`, `b`, `c`, or any other
/// single character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub char);

impl Color {
    pub const ACTIVE: Color = Color('*');
    pub const A: Color = Color('a');
    pub const B: Color = Color('b');
    pub const C: Color = Color('c');
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Color {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => Ok(Color(c)),
            _ => Err(serde::de::Error::custom(format!("color must be one character: {s:?}"))),
        }
    }
}

/// A canonical vertex-colored multigraph without self-loops.
///
/// Two values compare equal exactly when the graphs are isomorphic through
/// a color-preserving vertex bijection that preserves edge multiplicities.
#[derive(Clone, Debug)]
pub struct ColoredMultigraph {
    colors: Vec<Color>,
    /// Sorted, `i < j`, repeated for parallel edges.
    edges: Vec<(usize, usize)>,
    automorphisms: u64,
}

impl PartialEq for ColoredMultigraph {
    fn eq(&self, o: &Self) -> bool {
        self.colors == o.colors && self.edges == o.edges
    }
}

impl Eq for ColoredMultigraph {}

impl std::hash::Hash for ColoredMultigraph {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.colors.hash(h);
        self.edges.hash(h);
    }
}

impl Ord for ColoredMultigraph {
    fn cmp(&self, o: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&o.edges.len())
            .then(self.colors.len().cmp(&o.colors.len()))
            .then_with(|| self.colors.cmp(&o.colors))
            .then_with(|| self.edges.cmp(&o.edges))
    }
}

impl PartialOrd for ColoredMultigraph {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl ColoredMultigraph {
    /// Canonicalizes an arbitrary labeled multigraph.
    pub fn new(colors: Vec<Color>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = colors.len();
        for &(i, j) in &edges {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if i >= n || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({i}, {j}) refers to a missing vertex"
                )));
            }
        }
        Ok(canonicalize(&colors, &edges))
    }

    /// The empty graph, unit of the disjoint-union product.
    pub fn empty() -> Self {
        ColoredMultigraph {
            colors: vec![],
            edges: vec![],
            automorphisms: 1,
        }
    }

    pub fn vertex(c: Color) -> Self {
        ColoredMultigraph {
            colors: vec![c],
            edges: vec![],
            automorphisms: 1,
        }
    }

    /// A path whose vertices carry the given colors; `mult[i]` parallel edges
    /// join vertex `i` and `i + 1`.
    pub fn path(colors: &[Color], mult: &[usize]) -> Result<Self> {
        assert_eq!(mult.len() + 1, colors.len().max(1));
        let edges = mult
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n((i, i + 1), m))
            .collect();
        ColoredMultigraph::new(colors.to_vec(), edges)
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Order of the color-preserving automorphism group acting on vertices.
    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    /// Valence of each vertex, parallel edges counted with multiplicity.
    pub fn valences(&self) -> Vec<usize> {
        let mut v = vec![0; self.colors.len()];
        for &(i, j) in &self.edges {
            v[i] += 1;
            v[j] += 1;
        }
        v
    }

    /// Number of connected components (0 for the empty graph).
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.colors.len());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// A connected graph without cycles. Parallel edges form cycles.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.colors.len()
    }

    pub fn has_multi_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    pub fn disjoint_union(&self, o: &Self) -> Self {
        let n = self.colors.len();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&o.colors);
        let mut edges = self.edges.clone();
        edges.extend(o.edges.iter().map(|&(i, j)| (i + n, j + n)));
        canonicalize(&colors, &edges)
    }

    pub fn recolor(&self, f: impl Fn(Color) -> Color) -> Self {
        let colors: Vec<Color> = self.colors.iter().map(|&c| f(c)).collect();
        canonicalize(&colors, &self.edges)
    }

    /// Neighbors of `v` with multiplicity.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Display for ColoredMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.colors.is_empty() {
            return write!(f, "∅");
        }
        let cs: String = self.colors.iter().map(|c| c.0).collect();
        write!(f, "[{cs}]")?;
        if !self.edges.is_empty() {
            let es: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
            write!(f, "{{{}}}", es.join(","))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    colors: Vec<Color>,
    edges: Vec<[usize; 2]>,
}

impl Serialize for ColoredMultigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            colors: self.colors.clone(),
            edges: self.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredMultigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        ColoredMultigraph::new(j.colors, j.edges.iter().map(|e| (e[0], e[1])).collect())
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let nx = self.parent[y];
            self.parent[y] = r;
            y = nx;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Color refinement: returns a cell index per vertex. Cells are numbered by
/// sorted label-independent signatures, so the cell order is itself an
/// isomorphism invariant.
fn refine(colors: &[Color], adj: &[Vec<u8>]) -> Vec<usize> {
    let n = colors.len();
    let mut sorted: Vec<Color> = colors.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut cell: Vec<usize> = colors
        .iter()
        .map(|c| sorted.binary_search(c).unwrap())
        .collect();
    let mut ncells = sorted.len();
    loop {
        let sigs: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u8)> = (0..n)
                    .filter(|&u| adj[v][u] > 0)
                    .map(|u| (cell[u], adj[v][u]))
                    .collect();
                nb.sort();
                (cell[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| uniq.binary_search(s).unwrap())
            .collect();
        if uniq.len() == ncells {
            return next;
        }
        ncells = uniq.len();
        cell = next;
    }
}

fn canonicalize(colors: &[Color], edges: &[(usize, usize)]) -> ColoredMultigraph {
    let n = colors.len();
    if n == 0 {
        return ColoredMultigraph::empty();
    }
    let mut adj = vec![vec![0u8; n]; n];
    for &(i, j) in edges {
        adj[i][j] += 1;
        adj[j][i] += 1;
    }
    let cell = refine(colors, &adj);
    let ncells = cell.iter().max().unwrap() + 1;
    let mut members: Vec<Vec<usize>> = vec![vec![]; ncells];
    for (v, &c) in cell.iter().enumerate() {
        members[c].push(v);
    }

    // order[pos] = original vertex placed at canonical position pos.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut best: Option<Vec<u8>> = None;
    let mut best_order: Vec<usize> = vec![];
    let mut count = 0u64;
    search(&members, 0, &mut vec![false; n], &mut order, &adj, &mut best, &mut best_order, &mut count);

    let colors_out: Vec<Color> = best_order.iter().map(|&v| colors[v]).collect();
    let mut pos = vec![0; n];
    for (p, &v) in best_order.iter().enumerate() {
        pos[v] = p;
    }
    let mut edges_out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (pos[i], pos[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges_out.sort();
    ColoredMultigraph {
        colors: colors_out,
        edges: edges_out,
        automorphisms: count,
    }
}

/// Upper triangle of the adjacency matrix under `order`, row-major.
fn image(order: &[usize], adj: &[Vec<u8>]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(adj[order[i]][order[j]]);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    members: &[Vec<usize>],
    cell: usize,
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    adj: &[Vec<u8>],
    best: &mut Option<Vec<u8>>,
    best_order: &mut Vec<usize>,
    count: &mut u64,
) {
    if cell == members.len() {
        let img = image(order, adj);
        match best.as_ref().map(|b| img.cmp(b)) {
            None | Some(Ordering::Less) => {
                *best = Some(img);
                *best_order = order.clone();
                *count = 1;
            }
            Some(Ordering::Equal) => *count += 1,
            Some(Ordering::Greater) => {}
        }
        return;
    }
    let placed_in_cell = order.len() - members[..cell].iter().map(Vec::len).sum::<usize>();
    if placed_in_cell == members[cell].len() {
        search(members, cell + 1, used, order, adj, best, best_order, count);
        return;
    }
    for &v in &members[cell] {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        search(members, cell, used, order, adj, best, best_order, count);
        order.pop();
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Color = Color::A;
    const B: Color = Color::B;

    #[test]
    fn path_aba_symmetry() {
        let g1 = ColoredMultigraph::new(vec![A, B, A], vec![(0, 1), (1, 2)]).unwrap();
        let g2 = ColoredMultigraph::new(vec![B, A, A], vec![(0, 2), (1, 0)]).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g1.automorphisms(), 2);
    }

    #[test]
    fn single_vertex_and_double_edge() {
        assert_eq!(ColoredMultigraph::vertex(A).automorphisms(), 1);
        let g = ColoredMultigraph::new(vec![A, B], vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.automorphisms(), 1);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_multi_edges());
        assert!(!g.is_tree());
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            ColoredMultigraph::new(vec![A], vec![(0, 0)]),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn idempotent() {
        let g = ColoredMultigraph::new(vec![B, A, A, B], vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let again = ColoredMultigraph::new(g.colors().to_vec(), g.edges().to_vec()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.automorphisms(), again.automorphisms());
    }

    #[test]
    fn json_schema() {
        let g = ColoredMultigraph::path(&[A, B], &[2]).unwrap();
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(j, r#"{"colors":["a","b"],"edges":[[0,1],[0,1]]}"#);
        let back: ColoredMultigraph = serde_json::from_str(&j).unwrap();
        assert_eq!(back, g);
    }
}
