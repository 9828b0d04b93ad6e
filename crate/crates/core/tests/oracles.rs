//! Cross-checks the optimized searches against plain brute force on
//! every oriented graph small enough to enumerate outright.

use ofrac_core::{
    alpha_o, exists_bfold, omega_ro, verify_coloring, BFoldColoring, ColorSet, OrientedGraph,
    OutcomeKind, SearchBudget,
};

/// All b-subsets of {0..k-1} by simple recursion (deliberately not the
/// enumeration the solver uses).
fn combinations(k: u32, b: u32) -> Vec<ColorSet> {
    fn rec(next: u32, k: u32, left: u32, cur: u64, out: &mut Vec<ColorSet>) {
        if left == 0 {
            out.push(ColorSet::from_bits(cur));
            return;
        }
        for c in next..k {
            if k - c < left {
                break;
            }
            rec(c + 1, k, left - 1, cur | 1 << c, out);
        }
    }
    let mut out = Vec::new();
    rec(0, k, b, 0, &mut out);
    out
}

/// Tries every assignment of b-subsets to vertices, no pruning at all.
fn brute_exists(g: &OrientedGraph, fold: u32, palette: u32) -> bool {
    let combos = combinations(palette, fold);
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let sets = idx.iter().map(|&i| combos[i]).collect();
        let c = BFoldColoring::new(palette, fold, sets).unwrap();
        if verify_coloring(g, &c).unwrap().is_valid() {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            idx[pos] += 1;
            if idx[pos] < combos.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Every oriented graph on n labeled vertices: each unordered pair is
/// absent, forward, or backward.
fn all_oriented_graphs(n: usize) -> Vec<OrientedGraph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)))
        .collect();
    (0..3usize.pow(pairs.len() as u32))
        .map(|mut code| {
            let mut arcs = Vec::new();
            for &(i, j) in &pairs {
                match code % 3 {
                    1 => arcs.push((i, j)),
                    2 => arcs.push((j, i)),
                    _ => {}
                }
                code /= 3;
            }
            OrientedGraph::new(n, arcs).unwrap()
        })
        .collect()
}

/// Adjacent in either direction or joined by a directed 2-path, straight
/// from the definition.
fn related_directly(g: &OrientedGraph, a: u32, b: u32) -> bool {
    if g.has_arc(a, b) || g.has_arc(b, a) {
        return true;
    }
    let two_path = |x: u32, y: u32| g.out_neighbors(x).iter().any(|&w| g.has_arc(w, y));
    two_path(a, b) || two_path(b, a)
}

fn brute_omega_alpha(g: &OrientedGraph) -> (usize, usize) {
    let n = g.vertex_count();
    let mut omega = 0;
    let mut alpha = 0;
    for mask in 0u32..1 << n {
        let members: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        let mut clique = true;
        let mut independent = true;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if related_directly(g, a, b) {
                    independent = false;
                } else {
                    clique = false;
                }
            }
        }
        if clique {
            omega = omega.max(members.len());
        }
        if independent {
            alpha = alpha.max(members.len());
        }
    }
    (omega, alpha)
}

/// Shortest cycle of the underlying simple graph by exhaustive simple-path
/// extension.
fn brute_girth(g: &OrientedGraph) -> Option<usize> {
    let n = g.vertex_count();
    let adj: Vec<Vec<u32>> = (0..n as u32).map(|v| g.undirected_neighbors(v)).collect();
    let mut best: Option<usize> = None;

    fn extend(
        adj: &[Vec<u32>],
        start: u32,
        path: &mut Vec<u32>,
        on_path: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        let last = *path.last().unwrap();
        for &next in &adj[last as usize] {
            if next == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            }
            // Only extend through vertices above the start so each cycle
            // is found from its smallest vertex.
            if next > start && !on_path[next as usize] {
                on_path[next as usize] = true;
                path.push(next);
                extend(adj, start, path, on_path, best);
                path.pop();
                on_path[next as usize] = false;
            }
        }
    }

    for start in 0..n as u32 {
        let mut on_path = vec![false; n];
        on_path[start as usize] = true;
        extend(&adj, start, &mut vec![start], &mut on_path, &mut best);
    }
    best
}

#[test]
fn solver_agrees_with_brute_force_on_all_3_vertex_graphs() {
    let budget = SearchBudget::default();
    for g in all_oriented_graphs(3) {
        for (b, k) in [(1, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6)] {
            let brute = brute_exists(&g, b, k);
            let solved = exists_bfold(&g, b, k, &budget).unwrap();
            assert_eq!(
                solved.kind(),
                if brute {
                    OutcomeKind::Exists
                } else {
                    OutcomeKind::NotExists
                },
                "n=3 arcs={:?} b={b} k={k}",
                g.arcs()
            );
            if let Some(c) = solved.certificate() {
                assert!(verify_coloring(&g, c).unwrap().is_valid());
            }
        }
    }
}

#[test]
fn solver_agrees_with_brute_force_on_all_4_vertex_graphs() {
    let budget = SearchBudget::default();
    for g in all_oriented_graphs(4) {
        for (b, k) in [(1, 2), (1, 3), (1, 4), (2, 5)] {
            let brute = brute_exists(&g, b, k);
            let solved = exists_bfold(&g, b, k, &budget).unwrap();
            assert_eq!(
                solved.kind(),
                if brute {
                    OutcomeKind::Exists
                } else {
                    OutcomeKind::NotExists
                },
                "n=4 arcs={:?} b={b} k={k}",
                g.arcs()
            );
        }
    }
}

#[test]
fn clique_and_independence_match_subset_enumeration() {
    for g in all_oriented_graphs(4) {
        let (bo, ba) = brute_omega_alpha(&g);
        assert_eq!(omega_ro(&g).0, bo, "omega, arcs={:?}", g.arcs());
        assert_eq!(alpha_o(&g).0, ba, "alpha, arcs={:?}", g.arcs());
    }
    let structured = [
        OrientedGraph::directed_cycle(5).unwrap(),
        OrientedGraph::directed_cycle(6).unwrap(),
        OrientedGraph::directed_cycle(7).unwrap(),
        // Directed path on four vertices.
        OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
        // In-star: two sources pointing at a sink.
        OrientedGraph::new(3, [(0, 2), (1, 2)]).unwrap(),
        // A tournament-ish mix on five vertices.
        OrientedGraph::new(5, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (4, 2), (3, 4)]).unwrap(),
    ];
    for g in &structured {
        let (bo, ba) = brute_omega_alpha(g);
        assert_eq!(omega_ro(g).0, bo, "omega, arcs={:?}", g.arcs());
        assert_eq!(alpha_o(g).0, ba, "alpha, arcs={:?}", g.arcs());
    }
}

#[test]
fn girth_matches_exhaustive_cycle_enumeration() {
    for g in all_oriented_graphs(4) {
        assert_eq!(g.girth(), brute_girth(&g), "arcs={:?}", g.arcs());
    }
    for r in 3..=7 {
        let c = OrientedGraph::directed_cycle(r).unwrap();
        assert_eq!(c.girth(), Some(r));
        assert_eq!(brute_girth(&c), Some(r));
    }
    let path = OrientedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert_eq!(path.girth(), None);
    assert_eq!(brute_girth(&path), None);
    for level in 0..=1 {
        let t = ofrac_core::build_target(level).unwrap();
        assert_eq!(t.graph().girth(), brute_girth(t.graph()), "level {level}");
    }
}
