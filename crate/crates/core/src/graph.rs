//! Oriented graphs: finite digraphs with no loops and no opposite arc pairs.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    SelfLoop {
        vertex: u32,
    },
    /// The reversed arc was already present.
    TwoCycle {
        from: u32,
        to: u32,
    },
    ArcOutOfRange {
        from: u32,
        to: u32,
        vertex_count: usize,
    },
    CycleTooShort {
        length: usize,
    },
    LabelCountMismatch {
        labels: usize,
        vertex_count: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "arc ({vertex}, {vertex}) is a loop"),
            GraphError::TwoCycle { from, to } => {
                write!(f, "arcs ({to}, {from}) and ({from}, {to}) form a 2-cycle")
            }
            GraphError::ArcOutOfRange {
                from,
                to,
                vertex_count,
            } => write!(
                f,
                "arc ({from}, {to}) references a vertex outside 0..{vertex_count}"
            ),
            GraphError::CycleTooShort { length } => {
                write!(
                    f,
                    "a directed cycle needs at least 3 vertices, got {length}"
                )
            }
            GraphError::LabelCountMismatch {
                labels,
                vertex_count,
            } => write!(f, "{labels} labels for {vertex_count} vertices"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A digraph on vertices `0..n` with no loops and no 2-cycles.
///
/// Arcs are kept sorted, so iteration order (and every report derived
/// from it) is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(u32, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl OrientedGraph {
    /// Builds the graph, rejecting loops, 2-cycles, and out-of-range
    /// endpoints. Duplicate arcs collapse; the arc list is a set.
    pub fn new(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut set: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(GraphError::ArcOutOfRange {
                    from: u,
                    to: v,
                    vertex_count,
                });
            }
            if set.contains(&(v, u)) {
                return Err(GraphError::TwoCycle { from: u, to: v });
            }
            set.insert((u, v));
        }
        let arcs: Vec<(u32, u32)> = set.into_iter().collect();
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &arcs {
            out_adj[u as usize].push(v);
            in_adj[v as usize].push(u);
        }
        for l in in_adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(OrientedGraph {
            n: vertex_count,
            arcs,
            out_adj,
            in_adj,
            labels: None,
        })
    }

    /// The directed cycle `u_0 -> u_1 -> ... -> u_{r-1} -> u_0`.
    pub fn directed_cycle(r: usize) -> Result<Self, GraphError> {
        if r < 3 {
            return Err(GraphError::CycleTooShort { length: r });
        }
        Self::new(r, (0..r).map(|i| (i as u32, ((i + 1) % r) as u32)))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                labels: labels.len(),
                vertex_count: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.in_adj[v as usize]
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Neighbors in the underlying simple graph, sorted.
    pub fn undirected_neighbors(&self, v: u32) -> Vec<u32> {
        let mut all: Vec<u32> = self.out_adj[v as usize]
            .iter()
            .chain(&self.in_adj[v as usize])
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Length of a shortest cycle in the underlying simple graph, or
    /// `None` if there is none. BFS from every vertex; the minimum over
    /// all sources of `dist(u) + dist(w) + 1` over non-tree edges `uw`
    /// is exact for unweighted graphs.
    pub fn girth(&self) -> Option<usize> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let adj: Vec<Vec<u32>> = (0..n)
            .map(|v| self.undirected_neighbors(v as u32))
            .collect();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![UNSEEN; n];
            let mut parent = vec![u32::MAX; n];
            let mut queue = alloc::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u as usize] {
                    if dist[w as usize] == UNSEEN {
                        dist[w as usize] = dist[u as usize] + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if parent[u as usize] != w {
                        best = best.min(dist[u as usize] + dist[w as usize] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.arc_count(), 3);
        assert!(g.has_arc(2, 0) && !g.has_arc(0, 2));
        assert_eq!(g.out_neighbors(0), &[1]);
        assert_eq!(g.in_neighbors(0), &[2]);
    }

    #[test]
    fn rejects_degenerate_arcs() {
        assert_eq!(
            OrientedGraph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::TwoCycle { from: 1, to: 0 })
        );
        assert_eq!(
            OrientedGraph::new(2, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert!(matches!(
            OrientedGraph::new(2, [(0, 2)]),
            Err(GraphError::ArcOutOfRange { .. })
        ));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let g = OrientedGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn directed_cycles() {
        let c7 = OrientedGraph::directed_cycle(7).unwrap();
        assert_eq!(c7.vertex_count(), 7);
        assert_eq!(c7.arc_count(), 7);
        assert!(c7.has_arc(6, 0));
        for v in 0..7 {
            assert_eq!(c7.out_neighbors(v).len(), 1);
            assert_eq!(c7.in_neighbors(v).len(), 1);
        }
        assert!(matches!(
            OrientedGraph::directed_cycle(2),
            Err(GraphError::CycleTooShort { length: 2 })
        ));
        let c28 = OrientedGraph::directed_cycle(28).unwrap();
        assert_eq!(c28.arc_count(), 28);
    }

    #[test]
    fn girth_of_cycles_and_paths() {
        for r in [3usize, 4, 5, 7, 12, 64] {
            let c = OrientedGraph::directed_cycle(r).unwrap();
            assert_eq!(c.girth(), Some(r), "girth of C_{r}");
        }
        let path = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn girth_sees_shortest_cycle_not_first() {
        // A 5-cycle with a chord creating a triangle 0-1-4.
        let g = OrientedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap();
        assert_eq!(g.girth(), Some(3));
    }
}
