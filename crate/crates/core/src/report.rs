//! Shared helpers for the JSON Lines reports.

use serde::Serializer;

use crate::graph::Graph;
use crate::graph6::emit_graph6;

/// Version stamped into every JSON object this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

pub fn serialize_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&emit_graph6(g))
}

pub fn serialize_graph6_seq<S: Serializer>(gs: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(emit_graph6))
}
