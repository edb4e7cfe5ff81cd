//! Coalition graphs CG(G, P) and singleton coalition graphs CG(G, Γ₁).

use serde::Serialize;

use crate::domination::{is_dominating, sp_check, Partition};
use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalitionGraphResult {
    #[serde(serialize_with = "crate::report::serialize_graph6")]
    pub graph: Graph,
    /// CG vertex `i` stands for part `part_of_vertex[i]` of the input partition.
    pub part_of_vertex: Vec<usize>,
}

/// One vertex per part, in partition order; `i ~ j` iff parts `i` and `j` form a coalition.
pub fn coalition_graph(g: &Graph, p: &Partition) -> Result<CoalitionGraphResult, Error> {
    // re-validate against this graph's order
    let p = Partition::new(g.order(), p.parts().to_vec())?;
    let parts = p.parts();
    let dom: Vec<bool> = parts.iter().map(|&s| is_dominating(g, s)).collect();
    let mut cg = Graph::empty(parts.len())?;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !dom[i] && !dom[j] && is_dominating(g, parts[i].union(parts[j])) {
                cg.add_edge(i, j);
            }
        }
    }
    Ok(CoalitionGraphResult { graph: cg, part_of_vertex: (0..parts.len()).collect() })
}

/// CG(G, Γ₁) for a singleton-partition graph, on the same vertex labels as `g`.
pub fn sc_graph(g: &Graph) -> Result<Graph, Error> {
    let verdict = sp_check(g);
    if let Some(blocking_vertex) = verdict.blocking_vertex {
        return Err(Error::NotSingletonPartition { blocking_vertex });
    }
    Ok(singleton_coalition_graph_unchecked(g))
}

/// CG(G, Γ₁) without the singleton-partition precondition.
pub(crate) fn singleton_coalition_graph_unchecked(g: &Graph) -> Graph {
    let n = g.order();
    let all = g.vertices();
    let full = g.full_vertices();
    let mut cg = Graph::empty(n).expect("same order as g");
    for u in all.difference(full) {
        for v in all.difference(full).iter().filter(|&v| v > u) {
            if g.closed_neighbors(u).union(g.closed_neighbors(v)) == all {
                cg.add_edge(u, v);
            }
        }
    }
    cg
}
