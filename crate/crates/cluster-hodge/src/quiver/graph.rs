use num::bigint::BigInt;
use num::Signed;

use super::ExtendedExchangeMatrix;

/// A weighted arrow of the quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: BigInt,
}

/// The directed graph carried by an extended exchange matrix.
///
/// For a mutable column j there is an edge i -> j whenever b_ij > 0, and an
/// edge j -> i whenever b_ij < 0 with i frozen (the mutable-mutable case of
/// b_ij < 0 is already covered by the positive entry b_ji). Vertices 0..n
/// are mutable, n..n+m frozen.
#[derive(Debug, Clone)]
pub struct QuiverGraph {
    n: usize,
    m: usize,
    edges: Vec<Edge>,
}

impl QuiverGraph {
    pub fn from_matrix(b: &ExtendedExchangeMatrix) -> Self {
        let mut edges = Vec::new();
        for j in 0..b.n() {
            for i in 0..b.total() {
                if i == j {
                    continue;
                }
                let e = b.entry(i, j);
                if e.is_positive() {
                    edges.push(Edge {
                        from: i,
                        to: j,
                        weight: e.clone(),
                    });
                } else if e.is_negative() && i >= b.n() {
                    edges.push(Edge {
                        from: j,
                        to: i,
                        weight: -e,
                    });
                }
            }
        }
        Self {
            n: b.n(),
            m: b.m(),
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges of the mutable part: both endpoints mutable.
    pub fn mutable_edges(&self) -> Vec<&Edge> {
        self.edges
            .iter()
            .filter(|e| e.from < self.n && e.to < self.n)
            .collect()
    }

    /// True when the mutable part contains a directed cycle.
    pub fn has_mutable_cycle(&self) -> bool {
        !self.cycle_vertices().is_empty()
    }

    /// Mutable vertices lying on some directed cycle of the mutable part.
    fn cycle_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.reaches(v, v, true))
            .collect()
    }

    /// Whether `to` is reachable from `from` in the mutable part;
    /// `strict` requires at least one edge to be traversed.
    fn reaches(&self, from: usize, to: usize, strict: bool) -> bool {
        let adj = self.mutable_adjacency();
        let mut stack: Vec<usize> = adj[from].clone();
        let mut seen = vec![false; self.n];
        if !strict && from == to {
            return true;
        }
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.extend(&adj[v]);
            }
        }
        false
    }

    fn mutable_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in self.edges.iter().filter(|e| e.from < self.n && e.to < self.n) {
            adj[e.from].push(e.to);
        }
        adj
    }

    /// Edges (i, j) of the mutable part that no bi-infinite directed path
    /// passes through: an edge fails to separate exactly when i is reachable
    /// from a directed cycle and j reaches a directed cycle.
    pub fn separating_edges(&self) -> Vec<(usize, usize)> {
        let cycles = self.cycle_vertices();
        let fed_by_cycle: Vec<bool> = (0..self.n)
            .map(|v| cycles.iter().any(|&c| self.reaches(c, v, false)))
            .collect();
        let feeds_cycle: Vec<bool> = (0..self.n)
            .map(|v| cycles.iter().any(|&c| self.reaches(v, c, false)))
            .collect();
        let mut out: Vec<(usize, usize)> = self
            .mutable_edges()
            .iter()
            .filter(|e| !(fed_by_cycle[e.from] && feeds_cycle[e.to]))
            .map(|e| (e.from, e.to))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::seed::{seed_three_mutable, seed_torus, seed_two_mutable};
    use crate::quiver::{ExtendedExchangeMatrix, Seed};

    fn graph(s: &Seed) -> QuiverGraph {
        QuiverGraph::from_matrix(s.matrix())
    }

    #[test]
    fn torus_has_no_edges() {
        let g = graph(&seed_torus(3));
        assert!(g.edges().is_empty());
        assert!(!g.has_mutable_cycle());
        assert!(g.separating_edges().is_empty());
    }

    #[test]
    fn frozen_rows_become_edges_in_both_directions() {
        // Two mutable x,y with x -> y weight 2; frozen z has weight +3 to x
        // (z -> x) and -5 to y (y -> z).
        let s = Seed::with_labels(
            ExtendedExchangeMatrix::from_i64(
                2,
                1,
                &[vec![0, 2], vec![-2, 0], vec![3, -5]],
            )
            .unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap();
        let g = graph(&s);
        let mut got: Vec<(usize, usize, i64)> = g
            .edges()
            .iter()
            .map(|e| (e.from, e.to, i64::try_from(&e.weight).unwrap()))
            .collect();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 1, 2), (1, 2, 5), (2, 0, 3)]);
    }

    #[test]
    fn acyclic_mutable_part_has_all_edges_separating() {
        // Mutating the acyclic unit triangle at x yields y -> x, z -> x,
        // y -> z: still no cycles, so every edge separates.
        let s = seed_three_mutable(1, 1, 1).mutate(0).unwrap();
        let g = graph(&s);
        assert!(!g.has_mutable_cycle());
        let edges: Vec<(usize, usize)> = {
            let mut v: Vec<_> = g.mutable_edges().iter().map(|e| (e.from, e.to)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(g.separating_edges(), edges);
    }

    #[test]
    fn oriented_triangle_has_no_separating_edge() {
        let g = graph(&seed_three_mutable(1, -1, 1));
        // Weights (1,-1,1) orient the triangle cyclically: x->y, z->x, y->z.
        assert!(g.has_mutable_cycle());
        assert!(g.separating_edges().is_empty());
    }

    #[test]
    fn markov_quiver_has_no_separating_edge() {
        let m = ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
        )
        .unwrap();
        let g = QuiverGraph::from_matrix(&m);
        assert!(g.separating_edges().is_empty());
    }

    #[test]
    fn single_edge_between_mutables_is_separating() {
        let g = graph(&seed_two_mutable(3, 1, 1));
        assert_eq!(g.separating_edges(), vec![(0, 1)]);
    }
}
