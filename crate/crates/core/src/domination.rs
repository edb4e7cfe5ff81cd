//! Domination and coalition predicates, coalition partitions and the coalition number.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Orders above this are refused by [`coalition_number_exact`] (Bell(9) = 21147 partitions).
pub const COALITION_NUMBER_MAX_ORDER: usize = 9;

/// Nonempty, pairwise disjoint parts covering `0..order`, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(order: usize, parts: Vec<VertexSet>) -> Result<Self, Error> {
        let all = VertexSet::full(order);
        let mut seen = VertexSet::EMPTY;
        for (i, &p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            if !p.is_subset(all) {
                return Err(Error::InvalidPartition(format!("part {i} = {p} has vertices outside 0..{order}")));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("part {i} = {p} overlaps an earlier part")));
            }
            seen = seen.union(p);
        }
        if seen != all {
            return Err(Error::InvalidPartition(format!("vertices {} are not covered", all.difference(seen))));
        }
        Ok(Partition { parts })
    }

    /// Γ₁: every vertex in its own part, in vertex order.
    pub fn singletons(order: usize) -> Self {
        Partition { parts: (0..order).map(VertexSet::singleton).collect() }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// Parses `"0,1;2;3"`: parts separated by `;`, vertices by `,`.
    pub fn parse(order: usize, text: &str) -> Result<Self, Error> {
        let mut parts = Vec::new();
        for chunk in text.split(';') {
            let mut part = VertexSet::EMPTY;
            for tok in chunk.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidPartition(format!("`{tok}` is not a vertex index")))?;
                if v >= order {
                    return Err(Error::InvalidPartition(format!("vertex {v} is out of range for order {order}")));
                }
                if part.contains(v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                part.insert(v);
            }
            parts.push(part);
        }
        Partition::new(order, parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, v) in p.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for VertexSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPartition(format!("`{t}` is not a vertex index"))))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "partner", rename_all = "kebab-case")]
pub enum PartStatus {
    SingletonDominating,
    CoalitionWith(usize),
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartReport {
    pub index: usize,
    pub status: PartStatus,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionVerdict {
    pub valid: bool,
    pub per_part: Vec<PartReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpVerdict {
    pub is_sp: bool,
    pub full_vertices: VertexSet,
    /// Least-index coalition partner of every non-full vertex; `Some` iff `is_sp`.
    pub partner: Option<BTreeMap<usize, usize>>,
    /// Least-index non-full vertex without a partner; `Some` iff not `is_sp`.
    pub blocking_vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalitionNumberResult {
    pub value: usize,
    pub witness: Option<Partition>,
}

/// N\[S\]: `s` together with every neighbour of a member of `s`.
pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(s, |acc, v| acc.union(g.neighbors(v)))
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    closed_neighborhood(g, s) == g.vertices()
}

/// Neither side dominates on its own but their union does.
pub fn forms_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool, Error> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(Error::InvalidCoalitionSides);
    }
    Ok(coalition_unchecked(g, a, b))
}

fn coalition_unchecked(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    !is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a.union(b))
}

fn check_partition_of(g: &Graph, p: &Partition) -> Result<(), Error> {
    if p.order() != g.order() || !p.parts.iter().all(|s| s.is_subset(g.vertices())) {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.order(),
            g.order()
        )));
    }
    Ok(())
}

fn part_statuses(g: &Graph, parts: &[VertexSet]) -> Vec<PartStatus> {
    let dom: Vec<bool> = parts.iter().map(|&s| is_dominating(g, s)).collect();
    parts
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if dom[i] {
                return if s.len() == 1 { PartStatus::SingletonDominating } else { PartStatus::Invalid };
            }
            (0..parts.len())
                .find(|&j| j != i && !dom[j] && is_dominating(g, s.union(parts[j])))
                .map_or(PartStatus::Invalid, PartStatus::CoalitionWith)
        })
        .collect()
}

pub fn is_coalition_partition(g: &Graph, p: &Partition) -> Result<PartitionVerdict, Error> {
    check_partition_of(g, p)?;
    let per_part: Vec<PartReport> = part_statuses(g, &p.parts)
        .into_iter()
        .enumerate()
        .map(|(index, status)| {
            let s = p.parts[index];
            let reason = match status {
                PartStatus::SingletonDominating => format!("{s} is a dominating singleton"),
                PartStatus::CoalitionWith(j) => format!("{s} and {} form a coalition", p.parts[j]),
                PartStatus::Invalid if is_dominating(g, s) => {
                    format!("{s} dominates but has {} vertices", s.len())
                }
                PartStatus::Invalid => format!("{s} does not dominate and has no coalition partner"),
            };
            PartReport { index, status, reason }
        })
        .collect();
    let valid = per_part.iter().all(|r| r.status != PartStatus::Invalid);
    Ok(PartitionVerdict { valid, per_part })
}

pub fn singleton_partition(g: &Graph) -> Partition {
    Partition::singletons(g.order())
}

/// Decides whether Γ₁ is a coalition partition. A non-full vertex `v` needs a
/// non-full `u` with `{u, v}` dominating; full vertices are dominating singletons.
pub fn sp_check(g: &Graph) -> SpVerdict {
    let full = g.full_vertices();
    let non_full = g.vertices().difference(full);
    let mut partner = BTreeMap::new();
    for v in non_full {
        let found = non_full
            .without(v)
            .iter()
            .find(|&u| closed_neighborhood(g, VertexSet::singleton(u).with(v)) == g.vertices());
        match found {
            Some(u) => {
                partner.insert(v, u);
            }
            None => {
                return SpVerdict { is_sp: false, full_vertices: full, partner: None, blocking_vertex: Some(v) };
            }
        }
    }
    SpVerdict { is_sp: true, full_vertices: full, partner: Some(partner), blocking_vertex: None }
}

pub fn is_sp_graph(g: &Graph) -> bool {
    sp_check(g).is_sp
}

fn check_cn_cap(g: &Graph) -> Result<(), Error> {
    if g.order() > COALITION_NUMBER_MAX_ORDER {
        return Err(Error::OrderAboveCap {
            operation: "coalition_number_exact",
            order: g.order(),
            cap: COALITION_NUMBER_MAX_ORDER,
        });
    }
    Ok(())
}

/// C(G) with a witness partition. Singleton-partition graphs short-circuit to
/// `order` with Γ₁; everything else goes through [`coalition_number_exhaustive`].
pub fn coalition_number_exact(g: &Graph) -> Result<CoalitionNumberResult, Error> {
    check_cn_cap(g)?;
    if sp_check(g).is_sp {
        return Ok(CoalitionNumberResult { value: g.order(), witness: Some(singleton_partition(g)) });
    }
    coalition_number_exhaustive(g)
}

/// C(G) by searching set partitions (restricted growth strings) with exactly
/// `k` blocks for `k = n, n-1, ..., 1`; the first valid one is maximum.
/// Returns value 0 and no witness when no coalition partition exists.
pub fn coalition_number_exhaustive(g: &Graph) -> Result<CoalitionNumberResult, Error> {
    check_cn_cap(g)?;
    let n = g.order();
    for k in (1..=n).rev() {
        let mut blocks = vec![VertexSet::EMPTY; k];
        if let Some(parts) = search_blocks(g, 0, 0, &mut blocks) {
            let witness = Partition::new(n, parts).expect("search yields partitions");
            return Ok(CoalitionNumberResult { value: k, witness: Some(witness) });
        }
    }
    Ok(CoalitionNumberResult { value: 0, witness: None })
}

fn search_blocks(g: &Graph, v: usize, used: usize, blocks: &mut [VertexSet]) -> Option<Vec<VertexSet>> {
    let n = g.order();
    let k = blocks.len();
    if used + (n - v) < k {
        return None;
    }
    if v == n {
        let valid = part_statuses(g, blocks).iter().all(|s| *s != PartStatus::Invalid);
        return valid.then(|| blocks.to_vec());
    }
    for b in 0..(used + 1).min(k) {
        blocks[b].insert(v);
        let found = search_blocks(g, v + 1, used.max(b + 1), blocks);
        blocks[b].remove(v);
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{build_named, complete, cycle, edgeless, path};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn neighborhoods() {
        let k3 = complete(3).unwrap();
        let c4 = cycle(4).unwrap();
        assert_eq!(closed_neighborhood(&k3, VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(closed_neighborhood(&k3, set(&[0])), set(&[0, 1, 2]));
        assert_eq!(closed_neighborhood(&c4, set(&[0])), set(&[3, 0, 1]));
        assert!(is_dominating(&k3, set(&[0])));
        assert!(!is_dominating(&c4, set(&[0])));
        assert!(is_dominating(&c4, set(&[0, 1])));
    }

    #[test]
    fn coalitions() {
        let c4 = cycle(4).unwrap();
        assert!(forms_coalition(&c4, set(&[0]), set(&[1])).unwrap());
        assert!(!forms_coalition(&complete(3).unwrap(), set(&[0]), set(&[1])).unwrap());
        // N[0] ∪ N[3] = {5,0,1} ∪ {2,3,4} covers C6
        assert!(forms_coalition(&cycle(6).unwrap(), set(&[0]), set(&[3])).unwrap());
        assert!(forms_coalition(&c4, set(&[0]), set(&[0, 1])).is_err());
        assert!(forms_coalition(&c4, VertexSet::EMPTY, set(&[1])).is_err());
    }

    #[test]
    fn partition_verdicts() {
        let c4 = cycle(4).unwrap();
        let v = is_coalition_partition(&c4, &singleton_partition(&c4)).unwrap();
        assert!(v.valid);
        assert!(v.per_part.iter().all(|r| matches!(r.status, PartStatus::CoalitionWith(_))));

        let k3 = complete(3).unwrap();
        let v = is_coalition_partition(&k3, &singleton_partition(&k3)).unwrap();
        assert!(v.valid && v.per_part.iter().all(|r| r.status == PartStatus::SingletonDominating));

        let e3 = edgeless(3).unwrap();
        let v = is_coalition_partition(&e3, &singleton_partition(&e3)).unwrap();
        assert!(!v.valid);

        // a dominating part of size 2 is never allowed
        let p = Partition::parse(3, "0,1;2").unwrap();
        let v = is_coalition_partition(&k3, &p).unwrap();
        assert_eq!(v.per_part[0].status, PartStatus::Invalid);
    }

    #[test]
    fn partition_structure_errors() {
        assert!(Partition::parse(3, "0,1;1,2").is_err());
        assert!(Partition::parse(3, "0;1").is_err());
        assert!(Partition::parse(3, "0;1;;2").is_err());
        assert!(Partition::parse(3, "0;1;5").is_err());
        let p = Partition::parse(4, "0,1;2;3").unwrap();
        assert_eq!(p.to_string(), "0,1;2;3");
        let k3 = complete(3).unwrap();
        assert!(is_coalition_partition(&k3, &p).is_err());
    }

    #[test]
    fn singleton_partitions() {
        assert_eq!(singleton_partition(&complete(1).unwrap()).len(), 1);
        assert_eq!(singleton_partition(&cycle(4).unwrap()).len(), 4);
        assert_eq!(singleton_partition(&path(3).unwrap()).parts(), &[set(&[0]), set(&[1]), set(&[2])]);
    }

    #[test]
    fn sp_examples() {
        assert!(sp_check(&cycle(5).unwrap()).is_sp);
        let c7 = sp_check(&cycle(7).unwrap());
        assert!(!c7.is_sp);
        assert_eq!(c7.blocking_vertex, Some(0));
        assert!(c7.partner.is_none());
        let g = build_named("union(K(1), K(5))").unwrap();
        let v = sp_check(&g);
        assert!(v.is_sp);
        assert_eq!(v.partner.as_ref().unwrap()[&0], 1);
        assert_eq!(v.partner.unwrap()[&3], 0);
        let k1 = sp_check(&complete(1).unwrap());
        assert!(k1.is_sp && k1.full_vertices.len() == 1);
    }

    #[test]
    fn coalition_numbers() {
        assert_eq!(coalition_number_exact(&cycle(6).unwrap()).unwrap().value, 6);
        assert_eq!(coalition_number_exact(&path(4).unwrap()).unwrap().value, 4);
        let e3 = coalition_number_exact(&edgeless(3).unwrap()).unwrap();
        assert_eq!(e3.value, 2);
        let w = e3.witness.unwrap();
        assert!(is_coalition_partition(&edgeless(3).unwrap(), &w).unwrap().valid);
        assert_eq!(coalition_number_exact(&complete(1).unwrap()).unwrap().value, 1);
        assert!(coalition_number_exact(&cycle(10).unwrap()).is_err());
    }

    #[test]
    fn full_vertex_never_in_coalition() {
        let g = build_named("join(K(1), C(5))").unwrap();
        for b in 1u32..(1 << 6) {
            let b = VertexSet::from_bits(b);
            if !b.contains(0) {
                assert!(!forms_coalition(&g, set(&[0]), b).unwrap());
            }
        }
    }
}
