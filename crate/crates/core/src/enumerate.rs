//! One representative per isomorphism class of graphs of order 1..=7.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph, CanonicalCode};
use crate::error::Error;
use crate::graph::Graph;

/// Largest order the built-in enumeration covers; larger inputs come from graph6 files.
pub const ENUM_MAX_ORDER: usize = 7;

/// Number of full vertices a graph must have.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FullVertexCount {
    #[default]
    Any,
    Exactly(usize),
    AtLeast(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    /// Required minimum degree δ(G).
    pub min_degree: Option<usize>,
    /// Upper bound on δ(G).
    pub min_degree_at_most: Option<usize>,
    pub full_vertices: FullVertexCount,
}

impl GraphFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn delta(d: usize) -> Self {
        GraphFilter { min_degree: Some(d), ..Self::default() }
    }

    pub fn full(mut self, count: FullVertexCount) -> Self {
        self.full_vertices = count;
        self
    }

    pub fn matches(&self, g: &Graph) -> bool {
        let st = g.degree_stats();
        if self.min_degree.is_some_and(|d| st.min_degree != d) {
            return false;
        }
        if self.min_degree_at_most.is_some_and(|d| st.min_degree > d) {
            return false;
        }
        let f = st.full_vertices.len();
        match self.full_vertices {
            FullVertexCount::Any => true,
            FullVertexCount::Exactly(k) => f == k,
            FullVertexCount::AtLeast(k) => f >= k,
        }
    }
}

static CLASSES: [OnceLock<Vec<Graph>>; ENUM_MAX_ORDER + 1] = [const { OnceLock::new() }; ENUM_MAX_ORDER + 1];

/// All isomorphism classes of order `n`, canonically labelled and sorted by code.
fn classes(n: usize) -> &'static [Graph] {
    CLASSES[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1).expect("order 1")];
        }
        // Deleting the last vertex of any order-n graph leaves an order-(n-1)
        // graph, so extending every smaller class by every neighbourhood
        // reaches every class of order n.
        let smaller = classes(n - 1);
        let found: BTreeMap<CanonicalCode, Graph> = smaller
            .par_iter()
            .flat_map_iter(|h| {
                (0u32..1 << (n - 1)).map(move |nbhd| {
                    let mut rows: Vec<u32> = h.rows().to_vec();
                    for (v, row) in rows.iter_mut().enumerate() {
                        if nbhd >> v & 1 == 1 {
                            *row |= 1 << (n - 1);
                        }
                    }
                    rows.push(nbhd);
                    Graph::from_rows(&rows).expect("extension stays simple")
                })
            })
            .map(|g| (canonical_form(&g).expect("order <= 7"), g))
            .collect();
        found
            .into_values()
            .map(|g| canonical_graph(&g).expect("order <= 7"))
            .collect()
    })
}

/// One graph per isomorphism class of order `n` satisfying `filter`.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter) -> Result<Vec<Graph>, Error> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::OrderAboveCap { operation: "enumerate_graphs", order: n, cap: ENUM_MAX_ORDER });
    }
    Ok(classes(n).iter().filter(|g| filter.matches(g)).cloned().collect())
}

/// [`enumerate_graphs`] for every order `1..=n_max`, smallest order first.
pub fn enumerate_up_to(n_max: usize, filter: &GraphFilter) -> Result<Vec<Graph>, Error> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_graphs(n, filter)?);
    }
    Ok(out)
}

/// Reference enumeration: canonicalize every labelled graph on `n` vertices
/// and keep one per code. Exponential in `n(n-1)/2`; meant for cross-checks.
pub fn enumerate_graphs_naive(n: usize) -> Result<Vec<Graph>, Error> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::OrderAboveCap { operation: "enumerate_graphs_naive", order: n, cap: ENUM_MAX_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let found: BTreeMap<CanonicalCode, Graph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .map(|mask| {
            let mut g = Graph::empty(n).expect("order checked");
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            (canonical_form(&g).expect("order <= 7"), g)
        })
        .collect();
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_small() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, &GraphFilter::all()).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn naive_agrees_to_order_5() {
        for n in 1..=5 {
            let a: Vec<_> = enumerate_graphs(n, &GraphFilter::all()).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
            let b: Vec<_> = enumerate_graphs_naive(n).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(a, b, "order {n}");
        }
    }

    #[test]
    fn filters() {
        let d2 = enumerate_graphs(4, &GraphFilter::delta(2)).unwrap();
        // C4 and K4-e
        assert!(d2.iter().all(|g| g.min_degree() == 2));
        assert_eq!(d2.len(), 2);
        let nofull = GraphFilter::delta(1).full(FullVertexCount::Exactly(0));
        let g4 = enumerate_graphs(4, &nofull).unwrap();
        // P4 and 2K2
        assert_eq!(g4.len(), 2);
        assert!(enumerate_graphs(8, &GraphFilter::all()).is_err());
        assert!(enumerate_graphs(0, &GraphFilter::all()).is_err());
    }
}
