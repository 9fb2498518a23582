//! Simple undirected graphs and the structural queries the event families
//! are built from: girth, bounded cycle and path enumeration, special pairs.
//!
//! Edge indices are positions in the edge list handed to [`Graph::new`];
//! colorings of edges refer to edges by that index.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of items produced by the exhaustive listings.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    // (neighbour, edge index), sorted by neighbour
    incidence: Vec<Vec<(usize, usize)>>,
}

/// Length of the shortest cycle, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// True when every cycle has length at least `bound` (forests always qualify).
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub girth: Girth,
}

/// A simple cycle. `vertices` starts at the smallest vertex; `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Canonical form: the sorted edge-index set.
    pub fn edge_set(&self) -> Vec<usize> {
        let mut set = self.edges.clone();
        set.sort_unstable();
        set
    }
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices. Pairs are stored with the
    /// smaller endpoint first; self-loops and duplicate edges are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        let mut stored = Vec::new();
        for (index, (a, b)) in edges.into_iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {index} = ({a}, {b}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {index} is a self-loop at vertex {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            incidence[u].push((v, index));
            incidence[v].push((u, index));
            stored.push((u, v));
        }
        for (v, list) in incidence.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge between {v} and {}",
                    w[0].0
                )));
            }
        }
        let adjacency = incidence
            .iter()
            .map(|list| list.iter().map(|&(w, _)| w).collect())
            .collect();
        Ok(Graph { vertex_count, edges: stored, adjacency, incidence })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// `(neighbour, edge index)` pairs at `v`, sorted by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.incidence[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertex_count: self.vertex_count,
            edge_count: self.edges.len(),
            max_degree: self.max_degree(),
            girth: self.girth(),
        }
    }

    /// Shortest cycle length by a BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                // every cycle closed from here has length >= 2 * dist[v]
                if 2 * dist[v] >= best {
                    break;
                }
                for &(w, e) in &self.incidence[v] {
                    if e == parent_edge[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
            parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Every simple cycle of length at most `max_len`, each exactly once.
    pub fn enumerate_cycles(&self, max_len: usize) -> Result<Vec<Cycle>> {
        self.enumerate_cycles_capped(max_len, DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_cycles_capped(&self, max_len: usize, cap: usize) -> Result<Vec<Cycle>> {
        if max_len < 3 {
            return Err(Error::Domain(format!("max cycle length must be at least 3, got {max_len}")));
        }
        let mut search = CycleSearch {
            graph: self,
            max_len,
            cap,
            start: 0,
            path: Vec::new(),
            path_edges: Vec::new(),
            on_path: vec![false; self.vertex_count],
            found: Vec::new(),
        };
        for start in 0..self.vertex_count {
            search.start = start;
            search.path.push(start);
            search.on_path[start] = true;
            search.extend()?;
            search.on_path[start] = false;
            search.path.clear();
        }
        Ok(search.found)
    }

    /// All simple paths with `edge_count` edges as vertex sequences, each
    /// undirected path once with the smaller endpoint first.
    pub fn enumerate_paths(&self, edge_count: usize) -> Result<Vec<Vec<usize>>> {
        self.enumerate_paths_capped(edge_count, DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_paths_capped(&self, edge_count: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        if edge_count == 0 {
            return Err(Error::Domain("paths must have at least one edge".into()));
        }
        let mut found = Vec::new();
        let mut path = Vec::with_capacity(edge_count + 1);
        let mut on_path = vec![false; self.vertex_count];
        for start in 0..self.vertex_count {
            path.push(start);
            on_path[start] = true;
            self.extend_path(edge_count + 1, cap, &mut path, &mut on_path, &mut found)?;
            on_path[start] = false;
            path.clear();
        }
        Ok(found)
    }

    fn extend_path(
        &self,
        target: usize,
        cap: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let last = *path.last().expect("path is never empty");
        if path.len() == target {
            if path[0] < last {
                if found.len() == cap {
                    return Err(Error::CapExceeded { what: "paths", limit: cap });
                }
                found.push(path.clone());
            }
            return Ok(());
        }
        for &w in &self.adjacency[last] {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_path(target, cap, path, on_path, found)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }

    /// Non-adjacent pairs `(u, v)`, `u < v`, with `t` common neighbours where
    /// `t^3 > Δ^2`, i.e. more than `Δ^{2/3}` common neighbours.
    pub fn special_pairs(&self) -> Vec<(usize, usize)> {
        let delta = self.max_degree() as u128;
        let threshold = delta * delta;
        let mut counts = vec![0usize; self.vertex_count];
        let mut touched = Vec::new();
        let mut pairs = Vec::new();
        for u in 0..self.vertex_count {
            for &x in &self.adjacency[u] {
                for &w in &self.adjacency[x] {
                    if w > u {
                        if counts[w] == 0 {
                            touched.push(w);
                        }
                        counts[w] += 1;
                    }
                }
            }
            touched.sort_unstable();
            for &w in &touched {
                let t = counts[w] as u128;
                if t * t * t > threshold && !self.has_edge(u, w) {
                    pairs.push((u, w));
                }
                counts[w] = 0;
            }
            touched.clear();
        }
        pairs
    }
}

struct CycleSearch<'a> {
    graph: &'a Graph,
    max_len: usize,
    cap: usize,
    start: usize,
    path: Vec<usize>,
    path_edges: Vec<usize>,
    on_path: Vec<bool>,
    found: Vec<Cycle>,
}

impl CycleSearch<'_> {
    // Cycles are rooted at their smallest vertex; the direction with
    // path[1] < last vertex is the one reported.
    fn extend(&mut self) -> Result<()> {
        let v = *self.path.last().expect("path is never empty");
        let len = self.path.len();
        for &(w, e) in self.graph.incident(v) {
            if w == self.start {
                if len >= 3 && self.path[1] < v {
                    if self.found.len() == self.cap {
                        return Err(Error::CapExceeded { what: "cycles", limit: self.cap });
                    }
                    let mut edges = self.path_edges.clone();
                    edges.push(e);
                    self.found.push(Cycle { vertices: self.path.clone(), edges });
                }
            } else if w > self.start && !self.on_path[w] && len < self.max_len {
                self.on_path[w] = true;
                self.path.push(w);
                self.path_edges.push(e);
                self.extend()?;
                self.path_edges.pop();
                self.path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(4, [(3, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (0, 1), (1, 2)]);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edge_between(3, 0), Some(0));
        assert_eq!(g.edge_between(2, 0), None);
        for (u, v) in g.edges() {
            assert!(g.has_edge(*u, *v) && g.has_edge(*v, *u));
        }
    }

    #[test]
    fn girth_of_fixtures() {
        assert_eq!(generate::complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(generate::cycle(7).unwrap().girth(), Girth::Finite(7));
        assert_eq!(generate::petersen().girth(), Girth::Finite(5));
        assert_eq!(generate::path(6).unwrap().girth(), Girth::Acyclic);
        assert_eq!(generate::hypercube(3).unwrap().girth(), Girth::Finite(4));
    }

    #[test]
    fn cycles_of_c5_and_trees() {
        let c5 = generate::cycle(5).unwrap();
        let cycles = c5.enumerate_cycles(10).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 5);
        assert!(generate::path(6).unwrap().enumerate_cycles(6).unwrap().is_empty());
        assert!(generate::star(4).unwrap().enumerate_cycles(5).unwrap().is_empty());
    }

    #[test]
    fn cycles_of_k4() {
        let cycles = generate::complete(4).unwrap().enumerate_cycles(4).unwrap();
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cycles.len(), 7);
    }

    #[test]
    fn cycle_edges_follow_vertices() {
        let g = generate::petersen();
        for c in g.enumerate_cycles(10).unwrap() {
            for (i, &e) in c.edges.iter().enumerate() {
                let (a, b) = (c.vertices[i], c.vertices[(i + 1) % c.len()]);
                assert_eq!(g.edge_between(a, b), Some(e));
            }
        }
    }

    #[test]
    fn cycle_cap_fails_loudly() {
        let g = generate::complete(7).unwrap();
        let err = g.enumerate_cycles_capped(7, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { what: "cycles", limit: 10 }));
        assert!(g.enumerate_cycles(2).is_err());
    }

    #[test]
    fn path_counts() {
        assert_eq!(generate::path(5).unwrap().enumerate_paths(4).unwrap().len(), 1);
        assert_eq!(generate::cycle(4).unwrap().enumerate_paths(3).unwrap().len(), 4);
        assert_eq!(generate::complete(4).unwrap().enumerate_paths(3).unwrap().len(), 12);
        let paths = generate::complete(4).unwrap().enumerate_paths(3).unwrap();
        assert!(paths.iter().all(|p| p[0] < p[3]));
        assert!(generate::complete(5).unwrap().enumerate_paths_capped(3, 5).is_err());
    }

    #[test]
    fn special_pairs_of_fixtures() {
        // the two hubs of K_{2,5} share 5 neighbours and 125 > 25
        let k25 = generate::complete_bipartite(2, 5).unwrap();
        assert_eq!(k25.special_pairs(), vec![(0, 1)]);
        // opposite corners of C4 share 2 neighbours and 8 > 4
        assert_eq!(generate::cycle(4).unwrap().special_pairs(), vec![(0, 2), (1, 3)]);
        // distance-2 pairs of C6 share one neighbour: 1 <= 4
        assert!(generate::cycle(6).unwrap().special_pairs().is_empty());
        // Petersen: non-adjacent pairs share exactly one neighbour
        assert!(generate::petersen().special_pairs().is_empty());
        // Q3: antipodal-at-distance-2 pairs share 2 neighbours, 8 <= 9
        assert!(generate::hypercube(3).unwrap().special_pairs().is_empty());
    }
}
