//! Canonical labelling for graphs of order at most [`CANON_MAX_ORDER`].
//!
//! Colour refinement produces an ordered partition that every relabelling
//! maps onto itself; the search then individualizes vertices of the first
//! non-trivial cell until the partition is discrete and keeps the least
//! upper-triangle bit string over all leaves. Branches on a vertex that is a
//! twin of one already tried in the same cell are skipped, since swapping twins
//! is an automorphism fixing everything individualized so far.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::graph::Graph;

pub const CANON_MAX_ORDER: usize = 16;

/// Order plus the canonical upper-triangle bit string `x(0,1), x(0,2), x(1,2), ...`,
/// first bit most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    order: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Order byte followed by the bit string packed big-endian into whole bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.order();
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(8);
        let mut out = Vec::with_capacity(1 + nbytes);
        out.push(self.order);
        // left-align the bit string within nbytes * 8 bits
        let aligned = if nbits == 0 { 0 } else { self.bits << (nbytes * 8 - nbits) };
        for i in (0..nbytes).rev() {
            out.push((aligned >> (8 * i)) as u8);
        }
        out
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order)?;
        for b in &self.to_bytes()[1..] {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_cap(g: &Graph, operation: &'static str) -> Result<(), Error> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::OrderAboveCap { operation, order: g.order(), cap: CANON_MAX_ORDER });
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, Error> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// Canonical code together with a relabelling `perm` (vertex `v` goes to
/// `perm[v]`) such that `g.permuted(&perm)` is the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>), Error> {
    check_cap(g, "canonical_form")?;
    let n = g.order();
    let rows: Vec<u16> = g.rows().iter().map(|&r| r as u16).collect();
    let mut search = Search { rows: &rows, best: None };
    let cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    search.run(cells);
    let (bits, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok((CanonicalCode { order: n as u8, bits }, perm))
}

pub fn canonical_graph(g: &Graph) -> Result<Graph, Error> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.permuted(&perm))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, Error> {
    check_cap(g, "are_isomorphic")?;
    check_cap(h, "are_isomorphic")?;
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

struct Search<'a> {
    rows: &'a [u16],
    best: Option<(u128, Vec<u8>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<Vec<u8>>) {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.rows, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<u8> = Vec::with_capacity(cell.len());
        for &v in &cell {
            if tried.iter().any(|&w| are_twins(self.rows, v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.run(next);
        }
    }
}

fn are_twins(rows: &[u16], u: u8, v: u8) -> bool {
    let mask = !((1u16 << u) | (1u16 << v));
    rows[u as usize] & mask == rows[v as usize] & mask
}

fn leaf_code(rows: &[u16], order: &[u8]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = rows[order[j] as usize];
        for &u in &order[..j] {
            code = code << 1 | (row >> u & 1) as u128;
        }
    }
    code
}

/// Equitable refinement of an ordered partition. Each cell is split by the
/// vector of neighbour counts into every current cell; the pieces keep the
/// position of their parent and are ordered by that vector.
fn refine(rows: &[u16], cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<u8>> = Vec::with_capacity(rows.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, u8)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (rows[v as usize] & m).count_ones() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}
