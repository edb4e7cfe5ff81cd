//! Stock graphs and a small expression language for building them.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr := "K(" n ")" | "Kbar(" n ")" | "C(" n ")" | "P(" n ")"
//!       | "Kbip(" a "," b ")" | "union(" expr "," expr ")"
//!       | "join(" expr "," expr ")" | "corona_k3_k1"
//! ```
//!
//! `union` places the right operand's vertices after the left operand's;
//! `join` is `union` plus every edge between the two sides.

use crate::error::{Error, GraphError};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::complete(n)
}

pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderOutOfRange { order: n, max: crate::graph::MAX_ORDER });
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    join(&Graph::empty(a)?, &Graph::empty(b)?)
}

/// `K_{1,n}`: vertex 0 is the centre.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, leaves)
}

pub fn union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let off = g.order();
    let mut out = Graph::empty(off + h.order())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(u + off, v + off);
    }
    Ok(out)
}

pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let mut out = union(g, h)?;
    let off = g.order();
    for u in 0..off {
        for v in 0..h.order() {
            out.add_edge(u, v + off);
        }
    }
    Ok(out)
}

/// Triangle `0,1,2` with pendant vertices `3,4,5` attached to `0,1,2`.
pub fn corona_k3_k1() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("static graph")
}

/// Parses and builds a named-graph expression.
pub fn build_named(spec: &str) -> Result<Graph, Error> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { src: &compact, pos: 0, input: spec };
    let g = p.expr()?;
    if p.pos != compact.len() {
        return Err(p.fail(format!("unexpected trailing input `{}`", &compact[p.pos..])));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::NamedGraph { input: self.input.to_string(), reason: reason.into() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), Error> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.fail(format!("expected `{tok}` at offset {}", self.pos)))
        }
    }

    fn number(&mut self) -> Result<usize, Error> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            let sign = if self.rest().starts_with('-') { " (orders must be positive)" } else { "" };
            return Err(self.fail(format!("expected a number at offset {}{sign}", self.pos)));
        }
        let n: usize = self.rest()[..digits]
            .parse()
            .map_err(|_| self.fail("number too large"))?;
        self.pos += digits;
        Ok(n)
    }

    fn positive(&mut self) -> Result<usize, Error> {
        let n = self.number()?;
        if n == 0 {
            return Err(self.fail("order must be positive"));
        }
        Ok(n)
    }

    fn unary(&mut self) -> Result<usize, Error> {
        let n = self.positive()?;
        self.expect(")")?;
        Ok(n)
    }

    fn pair_graph(&mut self) -> Result<(Graph, Graph), Error> {
        let a = self.expr()?;
        self.expect(",")?;
        let b = self.expr()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<Graph, Error> {
        // longest keywords first so `Kbar(` / `Kbip(` win over `K(`
        let g = if self.eat("corona_k3_k1") {
            corona_k3_k1()
        } else if self.eat("Kbar(") {
            edgeless(self.unary()?)?
        } else if self.eat("Kbip(") {
            let a = self.positive()?;
            self.expect(",")?;
            let b = self.positive()?;
            self.expect(")")?;
            complete_bipartite(a, b)?
        } else if self.eat("K(") {
            complete(self.unary()?)?
        } else if self.eat("C(") {
            let n = self.unary()?;
            if n < 3 {
                return Err(self.fail(format!("cycle needs at least 3 vertices, got {n}")));
            }
            cycle(n)?
        } else if self.eat("P(") {
            path(self.unary()?)?
        } else if self.eat("union(") {
            let (a, b) = self.pair_graph()?;
            union(&a, &b)?
        } else if self.eat("join(") {
            let (a, b) = self.pair_graph()?;
            join(&a, &b)?
        } else {
            return Err(self.fail(format!("unknown graph name at offset {}", self.pos)));
        };
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_kbar2_and_k3() {
        let g = build_named("join(Kbar(2), K(3))").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree_sequence(), vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn union_relabels_right_operand() {
        let g = build_named("union(K(1), K(5))").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(0), 0);
        assert!((1..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn corona() {
        let g = build_named("corona_k3_k1").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 3, 3, 3]);
    }

    #[test]
    fn stock_graphs() {
        for n in 3..10 {
            let c = build_named(&format!("C({n})")).unwrap();
            assert!((0..n).all(|v| c.degree(v) == 2));
            let k = build_named(&format!("K({n})")).unwrap();
            assert_eq!(k.full_vertices().len(), n);
        }
        let kb = build_named("Kbip(2, 3)").unwrap();
        assert_eq!(kb.degree_sequence(), vec![2, 2, 2, 3, 3]);
        assert_eq!(build_named("P(1)").unwrap().order(), 1);
        assert_eq!(star(4).unwrap().degree(0), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_named("C(2)").is_err());
        assert!(build_named("K(0)").is_err());
        assert!(build_named("K(-1)").is_err());
        assert!(build_named("Q(3)").is_err());
        assert!(build_named("K(3) x").is_err());
        assert!(build_named("union(K(3)").is_err());
        assert!(build_named("K(40)").is_err());
    }
}
