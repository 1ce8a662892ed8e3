//! Rauzy class enumeration: breadth-first closure under both induction
//! moves, membership tests, and graph export.
//!
//! Output is canonically sorted so enumeration results are byte-stable and
//! independent of exploration schedule; the optional parallel expansion
//! merges each level back into that canonical order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::class_key;
use crate::perm::{Letter, MoveKind, Permutation};

/// A Rauzy class with its typed transition edges. Vertices are sorted;
/// every vertex has out-degree two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    vertices: Vec<Permutation>,
    /// `(from, to, kind)` as indices into `vertices`, sorted.
    edges: Vec<(usize, usize, MoveKind)>,
}

impl RauzyGraph {
    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, MoveKind)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    pub fn self_loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b, _)| a == b).count()
    }

    fn from_vertex_set(seen: BTreeSet<Permutation>) -> Result<Self> {
        let vertices: Vec<Permutation> = seen.into_iter().collect();
        let mut edges = Vec::with_capacity(vertices.len() * 2);
        for (i, v) in vertices.iter().enumerate() {
            for kind in MoveKind::BOTH {
                let w = v.rauzy_move(kind)?;
                let j = vertices
                    .binary_search(&w)
                    .map_err(|_| Error::ConstructionFailed(format!("{w} escaped the class")))?;
                edges.push((i, j, kind));
            }
        }
        edges.sort_unstable();
        Ok(RauzyGraph { vertices, edges })
    }

    /// DOT digraph with one-line vertex labels and edge type labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph rauzy {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for &(a, b, kind) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[a], self.vertices[b], kind
            );
        }
        out.push_str("}\n");
        out
    }

    /// One JSON record per vertex, listing its outgoing edges.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let rec = VertexRecord {
                perm: v.to_string(),
                edges: self
                    .edges
                    .iter()
                    .filter(|(a, _, _)| *a == i)
                    .map(|&(_, b, kind)| EdgeRecord {
                        kind: kind.index() as u8,
                        to: self.vertices[b].to_string(),
                    })
                    .collect(),
            };
            out.push_str(&serde_json::to_string(&rec).unwrap());
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let rec: VertexRecord = serde_json::from_str(line).map_err(|e| Error::Parse {
                pos: lineno + 1,
                msg: e.to_string(),
            })?;
            seen.insert(Permutation::parse(&rec.perm)?);
        }
        if seen.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "no vertex records".into(),
            });
        }
        RauzyGraph::from_vertex_set(seen)
    }
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    perm: String,
    edges: Vec<EdgeRecord>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    #[serde(rename = "type")]
    kind: u8,
    to: String,
}

/// Breadth-first closure of a permutation under both moves, failing cleanly
/// once more than `cap` vertices are seen.
pub fn enumerate_class(p: &Permutation, cap: usize) -> Result<RauzyGraph> {
    enumerate_class_mode(p, cap, false)
}

/// As [`enumerate_class`], optionally expanding each BFS level in parallel.
/// The result is identical either way.
pub fn enumerate_class_mode(p: &Permutation, cap: usize, parallel: bool) -> Result<RauzyGraph> {
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    seen.insert(p.clone());
    let mut frontier = vec![p.clone()];
    while !frontier.is_empty() {
        let expanded = expand_frontier(&frontier, parallel)?;
        frontier = Vec::new();
        for q in expanded {
            if !seen.contains(&q) {
                seen.insert(q.clone());
                frontier.push(q);
            }
        }
        if seen.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    RauzyGraph::from_vertex_set(seen)
}

#[cfg(feature = "parallel")]
fn expand_frontier(frontier: &[Permutation], parallel: bool) -> Result<Vec<Permutation>> {
    if parallel && frontier.len() >= 32 {
        let mut out: Vec<Permutation> = frontier
            .par_iter()
            .map(|q| -> Result<Vec<Permutation>> {
                Ok(vec![
                    q.rauzy_move(MoveKind::Zero)?,
                    q.rauzy_move(MoveKind::One)?,
                ])
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    } else {
        expand_frontier_seq(frontier)
    }
}

#[cfg(not(feature = "parallel"))]
fn expand_frontier(frontier: &[Permutation], _parallel: bool) -> Result<Vec<Permutation>> {
    expand_frontier_seq(frontier)
}

fn expand_frontier_seq(frontier: &[Permutation]) -> Result<Vec<Permutation>> {
    let mut out = Vec::with_capacity(frontier.len() * 2);
    for q in frontier {
        out.push(q.rauzy_move(MoveKind::Zero)?);
        out.push(q.rauzy_move(MoveKind::One)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Class membership: exhaustive BFS up to `exact_threshold` letters, the
/// classifying key beyond it.
pub fn same_class(
    p: &Permutation,
    q: &Permutation,
    exact_threshold: usize,
    cap: usize,
) -> Result<bool> {
    if !p.is_irreducible() || !q.is_irreducible() {
        return Err(Error::Reducible(format!("{p} vs {q}")));
    }
    if p.len() != q.len() {
        return Ok(false);
    }
    if p.len() <= exact_threshold {
        let graph = enumerate_class(p, cap)?;
        Ok(graph.contains(q))
    } else {
        Ok(class_key(p)? == class_key(q)?)
    }
}

/// All irreducible permutations on `d` letters, lexicographically sorted.
pub fn all_irreducible(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<Letter> = Vec::with_capacity(d);
    let mut used = vec![false; d + 1];
    fn rec(d: usize, current: &mut Vec<Letter>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if current.len() == d {
            let p = Permutation::from_one_line(current.clone()).unwrap();
            if p.is_irreducible() {
                out.push(p);
            }
            return;
        }
        for x in 1..=d as Letter {
            if !used[x as usize] {
                used[x as usize] = true;
                current.push(x);
                rec(d, current, used, out);
                current.pop();
                used[x as usize] = false;
            }
        }
    }
    rec(d, &mut current, &mut used, &mut out);
    out
}

/// Partition of all irreducible permutations on `d` letters into classes,
/// each enumerated from its least representative.
pub fn all_classes(d: usize, cap: usize) -> Result<Vec<RauzyGraph>> {
    let mut remaining: BTreeSet<Permutation> = all_irreducible(d).into_iter().collect();
    let mut out = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let graph = enumerate_class(&seed, cap)?;
        for v in graph.vertices() {
            remaining.remove(v);
        }
        out.push(graph);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn class_of_321_matches_figure() {
        let g = enumerate_class(&p("3 2 1"), 100).unwrap();
        let want: Vec<Permutation> = ["2 3 1", "3 1 2", "3 2 1"].iter().map(|s| p(s)).collect();
        assert_eq!(g.vertices(), &want[..]);
        assert_eq!(g.edges().len(), 6);
        assert_eq!(g.self_loop_count(), 2);
    }

    #[test]
    fn two_letter_class_is_a_point() {
        let g = enumerate_class(&p("2 1"), 100).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.self_loop_count(), 2);
    }

    #[test]
    fn class_size_4321_matches_oracle() {
        // golden/oracle_counts.json: class_size_4321 = 7
        let g = enumerate_class(&p("4 3 2 1"), 100).unwrap();
        assert_eq!(g.len(), 7);
    }

    #[test]
    fn atlas_counts_match_oracle() {
        // golden/oracle_counts.json: irreducible counts and class sizes
        let want: [(usize, usize, &[usize]); 5] = [
            (2, 1, &[1]),
            (3, 3, &[3]),
            (4, 13, &[6, 7]),
            (5, 71, &[10, 11, 15, 35]),
            (6, 461, &[15, 20, 31, 66, 90, 105, 134]),
        ];
        for (d, irr, sizes) in want {
            assert_eq!(all_irreducible(d).len(), irr);
            let mut got: Vec<usize> = all_classes(d, 1_000_000)
                .unwrap()
                .iter()
                .map(|g| g.len())
                .collect();
            got.sort_unstable();
            assert_eq!(got, sizes, "class sizes at d={d}");
        }
    }

    #[test]
    fn cap_overflow_is_clean() {
        assert_eq!(
            enumerate_class(&p("4 3 2 1"), 3).unwrap_err(),
            Error::CapExceeded { cap: 3 }
        );
    }

    #[test]
    fn class_does_not_depend_on_seed() {
        let a = enumerate_class(&p("3 2 1"), 100).unwrap();
        for kind in MoveKind::BOTH {
            let b = enumerate_class(&p("3 2 1").rauzy_move(kind).unwrap(), 100).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn parallel_expansion_matches_sequential() {
        let seq = enumerate_class_mode(&p("6 5 4 3 2 1"), 1_000_000, false).unwrap();
        let par = enumerate_class_mode(&p("6 5 4 3 2 1"), 1_000_000, true).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn same_class_examples() {
        assert!(same_class(&p("3 2 1"), &p("2 3 1"), 8, 1000).unwrap());
        assert!(same_class(&p("3 2 1"), &p("3 2 1"), 8, 1000).unwrap());
        assert!(same_class(&p("4 3 2 1"), &p("4 1 3 2"), 8, 1000).unwrap());
        // above the exact threshold the key contract decides
        assert!(same_class(&p("4 3 2 1"), &p("4 1 3 2"), 2, 1000).unwrap());
    }

    #[test]
    fn inverse_maps_graph_onto_itself_with_types_swapped() {
        for seed in ["4 3 2 1", "5 4 3 2 1", "4 2 3 1"] {
            let g = enumerate_class(&p(seed), 10_000).unwrap();
            for v in g.vertices() {
                assert!(g.contains(&v.inverse()));
                for kind in MoveKind::BOTH {
                    let w = v.rauzy_move(kind).unwrap();
                    assert_eq!(
                        v.inverse().rauzy_move(kind.opposite()).unwrap(),
                        w.inverse()
                    );
                }
            }
        }
    }

    #[test]
    fn dot_export_shape() {
        let g = enumerate_class(&p("2 1"), 10).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("\"2 1\" -> \"2 1\" [label=\"0\"];"));
        assert!(dot.contains("\"2 1\" -> \"2 1\" [label=\"1\"];"));
    }

    #[test]
    fn jsonl_round_trip() {
        let g = enumerate_class(&p("4 3 2 1"), 100).unwrap();
        let text = g.to_jsonl();
        let back = RauzyGraph::from_jsonl(&text).unwrap();
        assert_eq!(g, back);
    }
}
