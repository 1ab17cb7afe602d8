//! Gabriel graphs in `R^d` and their breadth-first spanning trees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::model::{squared_distance, PointSet, BOUNDARY_RTOL};

/// Simple undirected graph on vertices `0..n`. Edges are stored as `(i, j)`
/// with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParams(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParams(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidParams(format!("duplicate edge {e:?}")));
            }
            normalized.push(e);
        }
        Ok(Graph { n, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.contains(&e)
    }

    /// Neighbor lists in increasing index order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Edge list text, one `i j` pair per line.
    pub fn to_edge_list(&self) -> String {
        self.edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
    }
}

/// A point lying on the boundary of a diametral ball, within tolerance.
/// Such a point blocks the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryContact {
    pub edge: (usize, usize),
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GabrielGraph {
    pub graph: Graph,
    /// Cocircular configurations met while testing edges.
    pub boundary_contacts: Vec<BoundaryContact>,
}

/// Position of `z` relative to the closed ball with diameter `xy`.
///
/// `(z - x) . (z - y)` equals `|z - c|^2 - r^2`, so the sign decides
/// membership without taking square roots.
fn diametral_excess(x: &[f64], y: &[f64], z: &[f64]) -> f64 {
    z.iter()
        .zip(x.iter().zip(y))
        .map(|(zi, (xi, yi))| (zi - xi) * (zi - yi))
        .sum()
}

/// Brute-force Gabriel graph: `(x, y)` is an edge iff the closed ball with
/// diameter `xy` holds no other point of the set.
pub fn gabriel_graph(ps: &PointSet) -> GabrielGraph {
    let n = ps.len();
    let mut edges = Vec::new();
    let mut boundary_contacts = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (ps.point(a), ps.point(b));
            let tol = BOUNDARY_RTOL * 0.25 * squared_distance(x, y);
            let mut empty = true;
            for c in (0..n).filter(|&c| c != a && c != b) {
                let excess = diametral_excess(x, y, ps.point(c));
                if excess.abs() <= tol {
                    boundary_contacts.push(BoundaryContact { edge: (a, b), witness: c });
                }
                if excess <= tol {
                    empty = false;
                    break;
                }
            }
            if empty {
                edges.push((a, b));
            }
        }
    }
    GabrielGraph { graph: Graph { n, edges }, boundary_contacts }
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n <= 1 {
        return true;
    }
    bfs_tree(g).len() == g.n - 1
}

/// Tree edges in discovery order of a BFS from vertex 0, visiting neighbors
/// in increasing index order.
fn bfs_tree(g: &Graph) -> Vec<(usize, usize)> {
    let adj = g.adjacency();
    let mut visited = vec![false; g.n];
    let mut queue = VecDeque::from([0]);
    visited[0] = true;
    let mut tree = Vec::with_capacity(g.n.saturating_sub(1));
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                tree.push((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }
    tree
}

pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if g.n == 0 {
        return Ok(g.clone());
    }
    let tree = bfs_tree(g);
    if tree.len() + 1 != g.n {
        return Err(Error::Disconnected);
    }
    Ok(Graph { n: g.n, edges: tree })
}
