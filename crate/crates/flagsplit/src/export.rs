//! DOT and JSON exports: Bruhat Hasse diagrams and system-containment
//! diagrams.

use serde::{Deserialize, Serialize};

use crate::richardson::Interval;
use crate::systems::System;
use crate::weyl::WeylGroup;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HasseNode {
    pub id: u32,
    pub length: usize,
    pub word: String,
}

/// JSON form of the Hasse diagram:
/// `{"nodes":[{"id","length","word"}],"edges":[[v,w]]}` with `v ⋖ w` per
/// edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HasseJson {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<[u32; 2]>,
}

pub fn hasse_json(g: &WeylGroup) -> HasseJson {
    let nodes = g
        .elements()
        .map(|w| HasseNode {
            id: w.index() as u32,
            length: g.length(w),
            word: g.word_string(w),
        })
        .collect();
    let mut edges = Vec::new();
    for v in g.elements() {
        for &w in g.covers(v) {
            edges.push([v.index() as u32, w.index() as u32]);
        }
    }
    edges.sort_unstable();
    HasseJson { nodes, edges }
}

pub fn hasse_dot(g: &WeylGroup) -> String {
    let mut out = String::new();
    out.push_str("digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n");
    for w in g.elements() {
        out.push_str(&format!(
            "  n{} [label=\"{}\"];\n",
            w.index(),
            g.word_string(w)
        ));
    }
    for v in g.elements() {
        for &w in g.covers(v) {
            out.push_str(&format!("  n{} -> n{};\n", v.index(), w.index()));
        }
    }
    out.push_str("}\n");
    out
}

/// Containment diagram of a system: an edge per covering containment among
/// members (the transitive reduction of the containment order).
pub fn system_dot(g: &WeylGroup, sys: &System) -> String {
    let members: Vec<&Interval> = sys.members().iter().collect();
    let mut out = String::new();
    out.push_str("digraph system {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, x) in members.iter().enumerate() {
        out.push_str(&format!("  m{} [label=\"{}\"];\n", i, x.label(g)));
    }
    for (i, x) in members.iter().enumerate() {
        for (j, y) in members.iter().enumerate() {
            if i == j || !y.contains(g, x) {
                continue;
            }
            let direct = !members.iter().enumerate().any(|(k, z)| {
                k != i && k != j && y.contains(g, z) && z.contains(g, x)
            });
            if direct {
                out.push_str(&format!("  m{i} -> m{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
