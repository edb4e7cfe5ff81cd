//! Small simple undirected graphs stored as one `u32` adjacency row per vertex.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Largest order a [`Graph`] can hold (one machine word per adjacency row).
pub const MAX_ORDER: usize = 32;

/// Bitset over vertex indices `0..32`. Serializes as the ascending list of its members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} is out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on vertices `0..order`, `1 <= order <= 32`.
///
/// The adjacency matrix is kept symmetric with an empty diagonal; every
/// constructor and mutator maintains that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: [u32; MAX_ORDER],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub full_vertices: VertexSet,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order, max: MAX_ORDER });
        }
        Ok(Graph { order, adj: [0; MAX_ORDER] })
    }

    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        let all = VertexSet::full(order).bits();
        for v in 0..order {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry, loops and range.
    pub fn from_rows(rows: &[u32]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(rows.len())?;
        let mask = VertexSet::full(rows.len()).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> u & 1 == 1 {
                return Err(GraphError::InvalidAdjacency { vertex: u });
            }
            g.adj[u] = row;
        }
        for u in 0..g.order {
            for v in VertexSet::from_bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(GraphError::InvalidAdjacency { vertex: u });
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.order || v >= self.order {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), order: self.order });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics (in debug builds) on out-of-range or equal endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.order && v < self.order && u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_full_vertex(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.order
    }

    pub fn full_vertices(&self) -> VertexSet {
        (0..self.order).filter(|&v| self.is_full_vertex(v)).collect()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degs = (0..self.order).map(|v| self.degree(v));
        DegreeStats {
            min_degree: degs.clone().min().unwrap_or(0),
            max_degree: degs.max().unwrap_or(0),
            full_vertices: self.full_vertices(),
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Sorted degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1) as u32).iter().map(move |v| (u, v))
        })
    }

    /// True if `s` contains no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// True if every two members of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Self, GraphError> {
        let verts: Vec<usize> = keep.intersection(self.vertices()).iter().collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length must equal order");
        let mut g = Graph { order: self.order, adj: [0; MAX_ORDER] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Self {
        let all = VertexSet::full(self.order).bits();
        let mut g = self.clone();
        for v in 0..self.order {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_json_is_a_member_list() {
        let s: VertexSet = [5, 0, 3].into_iter().collect();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
        assert_eq!(serde_json::from_str::<VertexSet>("[3,0,5]").unwrap(), s);
        assert!(serde_json::from_str::<VertexSet>("[32]").is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(VertexSet::full(32).len(), 32);
        assert_eq!(format!("{s}"), "{0,3,5}");
    }

    #[test]
    fn rows_are_validated() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert!(matches!(Graph::from_rows(&[0b10, 0b00]), Err(GraphError::InvalidAdjacency { .. })));
        assert!(matches!(Graph::from_rows(&[0b01]), Err(GraphError::InvalidAdjacency { .. })));
        assert!(matches!(Graph::from_rows(&[0b100, 0]), Err(GraphError::InvalidAdjacency { .. })));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(33).is_err());
    }

    #[test]
    fn degrees_and_full_vertices() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let st = g.degree_stats();
        assert_eq!(st.min_degree, 1);
        assert_eq!(st.max_degree, 3);
        assert_eq!(st.full_vertices, VertexSet::singleton(0));
        assert_eq!(g.size(), 4);
        assert_eq!(g.edges().count(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = p4.induced([1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        let q = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(q, p4);
        assert_eq!(p4.complement().size(), 3);
    }

    #[test]
    fn max_order_rows() {
        let g = Graph::complete(32).unwrap();
        assert_eq!(g.size(), 32 * 31 / 2);
        assert_eq!(g.full_vertices().len(), 32);
    }
}
