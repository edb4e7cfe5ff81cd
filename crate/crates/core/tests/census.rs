//! Graph counts checked against the orbit-counting formula and a naive enumerator.

use std::collections::BTreeSet;

use coalition_core::enumerate::{enumerate_graphs, enumerate_graphs_naive, FullVertexCount, GraphFilter};
use coalition_core::canonical_form;

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Integer partitions of `n` with parts at most `max`, largest part first.
fn partitions(n: u128, max: u128) -> Vec<Vec<u128>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Unlabeled graphs on `n` vertices: average over permutations of 2^(edge-pair orbits).
fn burnside_count(n: u128) -> u128 {
    let factorial = |k: u128| (1..=k).product::<u128>();
    let mut total = 0u128;
    for cycles in partitions(n, n) {
        let mut orbits = 0u128;
        for (i, &a) in cycles.iter().enumerate() {
            orbits += a / 2;
            for &b in &cycles[i + 1..] {
                orbits += gcd(a, b);
            }
        }
        // permutations with this cycle type: n! / (prod of lengths * prod of multiplicity factorials)
        let mut denom: u128 = cycles.iter().product();
        let mut i = 0;
        while i < cycles.len() {
            let run = cycles[i..].iter().take_while(|&&c| c == cycles[i]).count();
            denom *= factorial(run as u128);
            i += run;
        }
        total += factorial(n) / denom * (1u128 << orbits);
    }
    total / factorial(n)
}

#[test]
fn orbit_formula_matches_known_counts() {
    let counts: Vec<u128> = (1..=7).map(burnside_count).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn enumeration_matches_orbit_formula() {
    for n in 1..=7 {
        let found = enumerate_graphs(n, &GraphFilter::all()).unwrap().len() as u128;
        assert_eq!(found, burnside_count(n as u128), "order {n}");
    }
}

#[test]
fn enumeration_has_one_graph_per_class() {
    for n in 1..=7 {
        let graphs = enumerate_graphs(n, &GraphFilter::all()).unwrap();
        let codes: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(codes.len(), graphs.len(), "order {n}");
    }
}

#[test]
fn naive_enumeration_agrees() {
    for n in 1..=6 {
        let fast: BTreeSet<_> =
            enumerate_graphs(n, &GraphFilter::all()).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
        let naive: BTreeSet<_> =
            enumerate_graphs_naive(n).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(fast, naive, "order {n}");
    }
}

#[test]
fn filters_agree_with_direct_degree_checks() {
    type Pred = fn(&coalition_core::Graph) -> bool;
    let cases: [(GraphFilter, Pred); 3] = [
        (GraphFilter::delta(1).full(FullVertexCount::Exactly(0)), |g| g.min_degree() == 1 && g.full_vertices().is_empty()),
        (GraphFilter::delta(2).full(FullVertexCount::AtLeast(1)), |g| g.min_degree() == 2 && !g.full_vertices().is_empty()),
        (GraphFilter { min_degree_at_most: Some(2), ..GraphFilter::all() }, |g| g.degree_sequence().iter().any(|&d| d <= 2)),
    ];
    for (f, pred) in cases {
        for n in 1..=7 {
            let direct = enumerate_graphs(n, &f).unwrap();
            let post: Vec<_> = enumerate_graphs(n, &GraphFilter::all()).unwrap().into_iter().filter(pred).collect();
            assert_eq!(direct, post, "order {n}, {f:?}");
        }
    }
}

#[test]
fn orders_above_the_cap_are_rejected() {
    assert!(enumerate_graphs(8, &GraphFilter::all()).is_err());
}
