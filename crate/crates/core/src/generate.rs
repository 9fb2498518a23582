//! Deterministic graph families and the seeded pairing-model generator.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pairings tried by [`random_regular`] before giving up.
pub const MAX_PAIRING_ATTEMPTS: usize = 100_000;

/// A named family member, as requested from the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum GraphKind {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { leaves: usize },
    CompleteBipartite { a: usize, b: usize },
    Petersen,
    Hypercube { d: usize },
    Prism { n: usize },
    RandomRegular { n: usize, d: usize },
}

/// Builds `kind`; `seed` is only consulted by random families.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    match *kind {
        GraphKind::Complete { n } => complete(n),
        GraphKind::Cycle { n } => cycle(n),
        GraphKind::Path { n } => path(n),
        GraphKind::Star { leaves } => star(leaves),
        GraphKind::CompleteBipartite { a, b } => complete_bipartite(a, b),
        GraphKind::Petersen => Ok(petersen()),
        GraphKind::Hypercube { d } => hypercube(d),
        GraphKind::Prism { n } => prism(n),
        GraphKind::RandomRegular { n, d } => random_regular(n, d, seed),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InfeasibleParameters(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a + b == 0 {
        return Err(Error::InfeasibleParameters("complete bipartite graph needs a + b >= 1".into()));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen edge list is simple")
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::InfeasibleParameters(format!("hypercube dimension {d} is too large")));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(move |v| {
        (0..d).map(move |bit| (v, v ^ (1 << bit))).filter(|&(v, w)| v < w)
    });
    Graph::new(n, edges)
}

/// Two `n`-cycles `0..n` and `n..2n` joined by the matching `i ~ i + n`.
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InfeasibleParameters(format!("prism needs n >= 3, got {n}")));
    }
    let rims = (0..n).flat_map(|i| [(i, (i + 1) % n), (i + n, (i + 1) % n + n)]);
    Graph::new(2 * n, rims.chain((0..n).map(|i| (i, i + n))))
}

/// Uniform `d`-regular graph on `n` vertices from the pairing model,
/// rejecting pairings that produce loops or parallel edges.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d >= n {
        return Err(Error::InfeasibleParameters(format!(
            "random regular graph needs 1 <= n and d < n, got n = {n}, d = {d}"
        )));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::InfeasibleParameters(format!("n * d must be even, got {}", n * d)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut seen = vec![Vec::new(); n];
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        seen.iter_mut().for_each(Vec::clear);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || seen[u].contains(&v) {
                continue 'attempt;
            }
            seen[u].push(v);
            seen[v].push(u);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        return Graph::new(n, edges);
    }
    Err(Error::RejectionLimit { attempts: MAX_PAIRING_ATTEMPTS })
}

/// Replaces every edge by a path with `k + 1` edges. New vertices are
/// numbered after the original ones, `k` per edge in edge order.
pub fn subdivide(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() * (k + 1));
    for (index, &(u, v)) in g.edges().iter().enumerate() {
        let mut prev = u;
        for j in 0..k {
            let inner = n + index * k + j;
            edges.push((prev, inner));
            prev = inner;
        }
        edges.push((prev, v));
    }
    Graph::new(n + g.edge_count() * k, edges)
}

/// The small named graphs used for oracle and certificate sweeps.
pub fn catalog() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K4".to_string(), complete(4)),
        ("K3,3".to_string(), complete_bipartite(3, 3)),
        ("Q3".to_string(), hypercube(3)),
        ("petersen".to_string(), Ok(petersen())),
        ("prism3".to_string(), prism(3)),
        ("K1,3".to_string(), star(3)),
    ];
    out.extend((4..=8).map(|n| (format!("C{n}"), cycle(n))));
    out.push(("P4".to_string(), path(4)));
    out.push(("subdivided-K4".to_string(), complete(4).and_then(|k4| subdivide(&k4, 1))));
    out.extend([(8, 1), (10, 2), (12, 3)].map(|(n, seed)| (format!("cubic{n}-s{seed}"), random_regular(n, 3, seed))));
    out.into_iter()
        .map(|(name, g)| (name, g.expect("catalog parameters are feasible")))
        .collect()
}
