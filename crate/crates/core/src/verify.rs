//! Exhaustive validators for every coloring property and a brute-force
//! chromatic-number oracle for tiny graphs.
//!
//! Checks run in a fixed order (the order of [`ViolationKind`]) and each
//! returns a deterministic witness, so failure messages are reproducible.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::coloring::{Coloring, Target, Variant};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// Largest number of variables [`brute_force_chromatic`] accepts.
pub const BRUTE_FORCE_MAX_VARIABLES: usize = 16;
/// Largest palette [`brute_force_chromatic`] tries.
pub const BRUTE_FORCE_MAX_COLORS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    ImproperPair,
    EtaStar,
    FrugalSet,
    Path3,
    MonochromaticCycle,
    BichromaticCycle,
}

/// A witness: edge indices for edge targets, vertex indices for vertex
/// targets, in structural order (cycle or path order where relevant).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

pub fn verify(g: &Graph, c: &Coloring, variant: Variant) -> Result<Verdict> {
    if c.target != variant.target() {
        return Err(Error::TargetMismatch {
            expected: variant.target().as_str(),
            found: c.target.as_str(),
        });
    }
    c.check_graph(g)?;
    Ok(match check(g, &c.assignment, variant) {
        None => Verdict::Valid,
        Some(v) => Verdict::Invalid(v),
    })
}

/// Validity of a raw assignment; the caller guarantees its length.
pub(crate) fn check(g: &Graph, col: &[usize], variant: Variant) -> Option<Violation> {
    match variant {
        Variant::ProperEdge => improper_edge_pair(g, col).map(edge_pair_violation),
        Variant::AcyclicEdge => improper_edge_pair(g, col)
            .map(edge_pair_violation)
            .or_else(|| proper_bichromatic_edge_cycle(g, col).map(|c| cycle_violation(c, Target::Edges, false))),
        Variant::EtaStage { eta } => eta_star(g, col, eta)
            .map(|scope| Violation {
                description: format!("edges {scope:?} share a color at one vertex"),
                kind: ViolationKind::EtaStar,
                witness: scope,
            })
            .or_else(|| monochromatic_edge_cycle(g, col).map(|c| cycle_violation(c, Target::Edges, true)))
            .or_else(|| alternating_edge_cycle(g, col).map(|c| cycle_violation(c, Target::Edges, false))),
        Variant::ProperVertex => improper_vertex_pair(g, col).map(vertex_pair_violation),
        Variant::AcyclicVertex => improper_vertex_pair(g, col)
            .map(vertex_pair_violation)
            .or_else(|| bichromatic_vertex_cycle(g, col).map(|c| cycle_violation(c, Target::Vertices, false))),
        Variant::Star => improper_vertex_pair(g, col).map(vertex_pair_violation).or_else(|| {
            bichromatic_path3(g, col).map(|path| Violation {
                description: format!("path {path:?} is two-colored"),
                kind: ViolationKind::Path3,
                witness: path,
            })
        }),
        Variant::Frugal { beta } => improper_vertex_pair(g, col).map(vertex_pair_violation).or_else(|| {
            frugal_set(g, col, beta).map(|set| Violation {
                description: format!("vertices {set:?} share a color in one neighbourhood"),
                kind: ViolationKind::FrugalSet,
                witness: set,
            })
        }),
    }
}

fn edge_pair_violation(pair: [usize; 2]) -> Violation {
    Violation {
        kind: ViolationKind::ImproperPair,
        witness: pair.to_vec(),
        description: format!("adjacent edges {} and {} share a color", pair[0], pair[1]),
    }
}

fn vertex_pair_violation(pair: [usize; 2]) -> Violation {
    Violation {
        kind: ViolationKind::ImproperPair,
        witness: pair.to_vec(),
        description: format!("adjacent vertices {} and {} share a color", pair[0], pair[1]),
    }
}

fn cycle_violation(c: Cycle, target: Target, mono: bool) -> Violation {
    let (kind, what) = if mono {
        (ViolationKind::MonochromaticCycle, "monochromatic")
    } else {
        (ViolationKind::BichromaticCycle, "two-colored")
    };
    let witness = match target {
        Target::Edges => c.edges,
        Target::Vertices => c.vertices,
    };
    Violation { description: format!("{what} cycle of length {}", witness.len()), kind, witness }
}

/// Lexicographically smallest pair of edges sharing a vertex and a color.
pub(crate) fn improper_edge_pair(g: &Graph, col: &[usize]) -> Option<[usize; 2]> {
    let mut best: Option<[usize; 2]> = None;
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if col[e] == col[f] {
                    let pair = [e.min(f), e.max(f)];
                    best = Some(best.map_or(pair, |b| b.min(pair)));
                }
            }
        }
    }
    best
}

pub(crate) fn improper_vertex_pair(g: &Graph, col: &[usize]) -> Option<[usize; 2]> {
    g.edges().iter().filter(|&&(u, v)| col[u] == col[v]).map(|&(u, v)| [u, v]).min()
}

/// Smallest set of `eta + 1` same-colored edges at a vertex.
pub(crate) fn eta_star(g: &Graph, col: &[usize], eta: usize) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for v in 0..g.vertex_count() {
        let mut by_color: Vec<(usize, usize)> = g.incident(v).iter().map(|&(_, e)| (col[e], e)).collect();
        by_color.sort_unstable();
        for run in by_color.chunk_by(|a, b| a.0 == b.0) {
            if run.len() > eta {
                let scope: Vec<usize> = run[..=eta].iter().map(|&(_, e)| e).collect();
                if best.as_ref().is_none_or(|b| scope < *b) {
                    best = Some(scope);
                }
            }
        }
    }
    best
}

/// Smallest set of `beta + 1` same-colored vertices in one open neighbourhood.
pub(crate) fn frugal_set(g: &Graph, col: &[usize], beta: usize) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for w in 0..g.vertex_count() {
        let mut by_color: Vec<(usize, usize)> = g.neighbors(w).iter().map(|&v| (col[v], v)).collect();
        by_color.sort_unstable();
        for run in by_color.chunk_by(|a, b| a.0 == b.0) {
            if run.len() > beta {
                let scope: Vec<usize> = run[..=beta].iter().map(|&(_, v)| v).collect();
                if best.as_ref().is_none_or(|b| scope < *b) {
                    best = Some(scope);
                }
            }
        }
    }
    best
}

/// A path `v1 v2 v3 v4` with `col[v1] = col[v3]` and `col[v2] = col[v4]` in a
/// properly colored graph, oriented with `v1 < v4`; the one with the smallest
/// vertex set is returned.
pub(crate) fn bichromatic_path3(g: &Graph, col: &[usize]) -> Option<Vec<usize>> {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for &(a, b) in g.edges() {
        for (v2, v3) in [(a, b), (b, a)] {
            for &v1 in g.neighbors(v2) {
                if v1 == v3 || col[v1] != col[v3] {
                    continue;
                }
                for &v4 in g.neighbors(v3) {
                    if v4 == v2 || v4 == v1 || col[v4] != col[v2] || v1 > v4 {
                        continue;
                    }
                    let path = vec![v1, v2, v3, v4];
                    let mut key = path.clone();
                    key.sort_unstable();
                    if best.as_ref().is_none_or(|(k, p)| (&key, &path) < (k, p)) {
                        best = Some((key, path));
                    }
                }
            }
        }
    }
    best.map(|(_, path)| path)
}

/// Shortest cycle in the subgraph formed by `edges`; ties go to the cycle
/// closed by the smallest edge index.
pub(crate) fn shortest_cycle(g: &Graph, edges: &[usize]) -> Option<Cycle> {
    let mut adj: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for &e in &sorted {
        let (u, v) = g.edge(e);
        adj.entry(u).or_default().push((v, e));
        adj.entry(v).or_default().push((u, e));
    }
    let mut best: Option<Cycle> = None;
    let mut parent: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut queue = VecDeque::new();
    for &e in &sorted {
        let (u, v) = g.edge(e);
        let limit = best.as_ref().map_or(usize::MAX, Cycle::len);
        parent.clear();
        queue.clear();
        parent.insert(u, (u, usize::MAX));
        let mut depth: HashMap<usize, usize> = HashMap::from([(u, 0)]);
        queue.push_back(u);
        let mut reached = false;
        while let Some(x) = queue.pop_front() {
            if depth[&x] + 2 >= limit {
                break;
            }
            for &(y, f) in &adj[&x] {
                if f == e || parent.contains_key(&y) {
                    continue;
                }
                parent.insert(y, (x, f));
                depth.insert(y, depth[&x] + 1);
                if y == v {
                    reached = true;
                    break;
                }
                queue.push_back(y);
            }
            if reached {
                break;
            }
        }
        if !reached || depth[&v] + 1 >= limit {
            continue;
        }
        let mut vertices = vec![v];
        let mut path_edges = Vec::new();
        let mut x = v;
        while x != u {
            let (p, f) = parent[&x];
            path_edges.push(f);
            vertices.push(p);
            x = p;
        }
        vertices.reverse();
        path_edges.reverse();
        path_edges.push(e);
        best = Some(Cycle { vertices, edges: path_edges });
    }
    best
}

// Shortest first, then smallest sorted edge set.
fn better(candidate: &Cycle, best: &Option<Cycle>) -> bool {
    match best {
        None => true,
        Some(b) => (candidate.len(), candidate.edge_set()) < (b.len(), b.edge_set()),
    }
}

/// Two-colored cycle in a proper edge coloring: every such cycle is a
/// component of the subgraph spanned by two color classes.
pub(crate) fn proper_bichromatic_edge_cycle(g: &Graph, col: &[usize]) -> Option<Cycle> {
    let at: Vec<HashMap<usize, usize>> = (0..g.vertex_count())
        .map(|v| g.incident(v).iter().map(|&(_, e)| (col[e], e)).collect())
        .collect();
    let mut pairs = BTreeSet::new();
    for incident in &at {
        let colors: Vec<usize> = incident.keys().copied().collect();
        for (i, &a) in colors.iter().enumerate() {
            for &b in &colors[i + 1..] {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, &c) in col.iter().enumerate() {
        classes.entry(c).or_default().push(e);
    }
    let mut best = None;
    let mut visited = HashSet::new();
    for (a, b) in pairs {
        visited.clear();
        let mut members: Vec<usize> = classes[&a].iter().chain(&classes[&b]).copied().collect();
        members.sort_unstable();
        for &start in &members {
            if visited.contains(&start) {
                continue;
            }
            if let Some(cycle) = walk_two_colored(g, col, &at, start, a, b, &mut visited) {
                if better(&cycle, &best) {
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

// Follows the alternating walk from `start` in both directions, marking its
// edges; returns the component when it closes up.
fn walk_two_colored(
    g: &Graph,
    col: &[usize],
    at: &[HashMap<usize, usize>],
    start: usize,
    a: usize,
    b: usize,
    visited: &mut HashSet<usize>,
) -> Option<Cycle> {
    let other = |c: usize| if c == a { b } else { a };
    let (x, y) = g.edge(start);
    visited.insert(start);
    let mut vertices = vec![x, y];
    let mut edges = vec![start];
    let (mut cur, mut last) = (y, start);
    while let Some(&next) = at[cur].get(&other(col[last])) {
        if next == start {
            return Some(canonical_cycle(vertices, edges));
        }
        visited.insert(next);
        let (p, q) = g.edge(next);
        cur = if p == cur { q } else { p };
        last = next;
        edges.push(next);
        vertices.push(cur);
    }
    let (mut cur, mut last) = (x, start);
    while let Some(&next) = at[cur].get(&other(col[last])) {
        visited.insert(next);
        let (p, q) = g.edge(next);
        cur = if p == cur { q } else { p };
        last = next;
    }
    None
}

// `vertices` has one more entry than `edges`, with the last equal to the first.
fn canonical_cycle(mut vertices: Vec<usize>, edges: Vec<usize>) -> Cycle {
    vertices.pop();
    let len = edges.len();
    let (shift, _) = vertices.iter().enumerate().min_by_key(|&(_, &v)| v).expect("cycle is nonempty");
    let vertices: Vec<usize> = (0..len).map(|i| vertices[(shift + i) % len]).collect();
    let edges: Vec<usize> = (0..len).map(|i| edges[(shift + i) % len]).collect();
    Cycle { vertices, edges }
}

pub(crate) fn monochromatic_edge_cycle(g: &Graph, col: &[usize]) -> Option<Cycle> {
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, &c) in col.iter().enumerate() {
        classes.entry(c).or_default().push(e);
    }
    let mut best = None;
    for class in classes.values().filter(|c| c.len() >= 3) {
        if let Some(cycle) = shortest_cycle(g, class) {
            if better(&cycle, &best) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Shortest even cycle whose alternate edges carry two distinct colors
/// `a`, `b`, in an edge coloring that need not be proper.
pub(crate) fn alternating_edge_cycle(g: &Graph, col: &[usize]) -> Option<Cycle> {
    let mut pairs = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let colors: BTreeSet<usize> = g.incident(v).iter().map(|&(_, e)| col[e]).collect();
        let colors: Vec<usize> = colors.into_iter().collect();
        for (i, &a) in colors.iter().enumerate() {
            for &b in &colors[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    let mut best: Option<Cycle> = None;
    for (a, b) in pairs {
        let limit = best.as_ref().map_or(g.vertex_count(), |c| c.len() - 1);
        if let Some(cycle) = alternating_cycle_for(g, col, a, b, limit) {
            if better(&cycle, &best) {
                best = Some(cycle);
            }
        }
    }
    best
}

fn alternating_cycle_for(g: &Graph, col: &[usize], a: usize, b: usize, max_len: usize) -> Option<Cycle> {
    let has = |v: usize, c: usize| g.incident(v).iter().any(|&(_, e)| col[e] == c);
    let allowed: Vec<bool> = (0..g.vertex_count()).map(|v| has(v, a) && has(v, b)).collect();
    let mut search = Alternating { g, col, a, b, allowed: &allowed, on_path: vec![false; g.vertex_count()] };
    let mut len = 4;
    while len <= max_len {
        for s in (0..g.vertex_count()).filter(|&s| allowed[s]) {
            let mut vertices = vec![s];
            let mut edges = Vec::new();
            search.on_path[s] = true;
            let found = search.extend(s, len, &mut vertices, &mut edges);
            search.on_path[s] = false;
            if found {
                return Some(Cycle { vertices, edges });
            }
        }
        len += 2;
    }
    None
}

struct Alternating<'a> {
    g: &'a Graph,
    col: &'a [usize],
    a: usize,
    b: usize,
    allowed: &'a [bool],
    on_path: Vec<bool>,
}

impl Alternating<'_> {
    // Cycles are rooted at their smallest vertex and leave it along color a.
    fn extend(&mut self, s: usize, len: usize, vertices: &mut Vec<usize>, edges: &mut Vec<usize>) -> bool {
        let v = *vertices.last().expect("path is never empty");
        let want = if edges.len().is_multiple_of(2) { self.a } else { self.b };
        for &(w, e) in self.g.incident(v) {
            if self.col[e] != want {
                continue;
            }
            if edges.len() + 1 == len {
                if w == s {
                    edges.push(e);
                    return true;
                }
                continue;
            }
            if w <= s || self.on_path[w] || !self.allowed[w] {
                continue;
            }
            self.on_path[w] = true;
            vertices.push(w);
            edges.push(e);
            if self.extend(s, len, vertices, edges) {
                return true;
            }
            edges.pop();
            vertices.pop();
            self.on_path[w] = false;
        }
        false
    }
}

/// Two-colored cycle in a proper vertex coloring: a cycle in the subgraph
/// induced by two color classes.
pub(crate) fn bichromatic_vertex_cycle(g: &Graph, col: &[usize]) -> Option<Cycle> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (col[u].min(col[v]), col[u].max(col[v]));
        groups.entry((a, b)).or_default().push(e);
    }
    let mut best: Option<Cycle> = None;
    for group in groups.values().filter(|grp| grp.len() >= 4) {
        if let Some(cycle) = shortest_cycle(g, group) {
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Smallest `N <= max_colors` admitting a coloring with property `variant`,
/// by exhaustive search with colors introduced in increasing order.
pub fn brute_force_chromatic(g: &Graph, variant: Variant, max_colors: usize) -> Result<Option<usize>> {
    let target = variant.target();
    let variables = target.count(g);
    if variables > BRUTE_FORCE_MAX_VARIABLES || max_colors > BRUTE_FORCE_MAX_COLORS {
        return Err(Error::BruteForceCap { variables, colors: max_colors });
    }
    if variables == 0 {
        return Ok(Some(0));
    }
    // earlier variables that must differ from each variable (or share a vertex, for eta-stage)
    let earlier: Vec<Vec<usize>> = match target {
        Target::Vertices => (0..variables)
            .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
            .collect(),
        Target::Edges => (0..variables)
            .map(|e| {
                let (u, v) = g.edge(e);
                let mut list: Vec<usize> = g.incident(u).iter().chain(g.incident(v)).map(|&(_, f)| f).filter(|&f| f < e).collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect(),
    };
    let mut search = BruteForce { g, variant, earlier, assignment: vec![0; variables] };
    for n in 1..=max_colors {
        if search.fill(0, n, 0) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

struct BruteForce<'a> {
    g: &'a Graph,
    variant: Variant,
    earlier: Vec<Vec<usize>>,
    assignment: Vec<usize>,
}

impl BruteForce<'_> {
    fn consistent(&self, i: usize) -> bool {
        let c = self.assignment[i];
        match self.variant {
            Variant::EtaStage { eta } => {
                let (u, v) = self.g.edge(i);
                [u, v].iter().all(|&x| {
                    self.g.incident(x).iter().filter(|&&(_, f)| f <= i && self.assignment[f] == c).count() <= eta
                })
            }
            _ => self.earlier[i].iter().all(|&j| self.assignment[j] != c),
        }
    }

    fn fill(&mut self, i: usize, n: usize, used: usize) -> bool {
        if i == self.assignment.len() {
            return check(self.g, &self.assignment, self.variant).is_none();
        }
        for c in 0..n.min(used + 1) {
            self.assignment[i] = c;
            if self.consistent(i) && self.fill(i + 1, n, used.max(c + 1)) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn edges(palette: usize, a: Vec<usize>) -> Coloring {
        Coloring::new(Target::Edges, palette, a).unwrap()
    }

    fn vertices(palette: usize, a: Vec<usize>) -> Coloring {
        Coloring::new(Target::Vertices, palette, a).unwrap()
    }

    #[test]
    fn bichromatic_four_cycle() {
        let c4 = generate::cycle(4).unwrap();
        let v = verify(&c4, &edges(2, vec![0, 1, 0, 1]), Variant::AcyclicEdge).unwrap();
        let v = v.violation().unwrap();
        assert_eq!(v.kind, ViolationKind::BichromaticCycle);
        let mut w = v.witness.clone();
        w.sort_unstable();
        assert_eq!(w, vec![0, 1, 2, 3]);
        assert!(verify(&c4, &edges(3, vec![0, 1, 0, 2]), Variant::AcyclicEdge).unwrap().is_valid());
    }

    #[test]
    fn two_colored_path_is_not_star() {
        let p4 = generate::path(4).unwrap();
        let v = verify(&p4, &vertices(2, vec![0, 1, 0, 1]), Variant::Star).unwrap();
        assert_eq!(v.violation().unwrap().kind, ViolationKind::Path3);
        assert_eq!(v.violation().unwrap().witness, vec![0, 1, 2, 3]);
        let k4 = generate::complete(4).unwrap();
        assert!(verify(&k4, &vertices(4, vec![0, 1, 2, 3]), Variant::Star).unwrap().is_valid());
    }

    #[test]
    fn target_mismatch() {
        let k4 = generate::complete(4).unwrap();
        let err = verify(&k4, &vertices(4, vec![0, 1, 2, 3]), Variant::AcyclicEdge).unwrap_err();
        assert!(matches!(err, Error::TargetMismatch { .. }));
        assert!(verify(&k4, &edges(4, vec![0, 1, 2]), Variant::AcyclicEdge).is_err());
    }

    #[test]
    fn improper_pairs_are_smallest_first() {
        let k4 = generate::complete(4).unwrap();
        let v = verify(&k4, &edges(6, vec![0, 1, 2, 3, 4, 4]), Variant::ProperEdge).unwrap();
        let v = v.violation().unwrap();
        assert_eq!((v.kind, v.witness.clone()), (ViolationKind::ImproperPair, vec![4, 5]));
        let v = verify(&k4, &vertices(4, vec![1, 2, 1, 2]), Variant::AcyclicVertex).unwrap();
        assert_eq!(v.violation().unwrap().witness, vec![0, 2]);
    }

    #[test]
    fn acyclic_vertex_cycles() {
        let c6 = generate::cycle(6).unwrap();
        let v = verify(&c6, &vertices(2, vec![0, 1, 0, 1, 0, 1]), Variant::AcyclicVertex).unwrap();
        assert_eq!(v.violation().unwrap().kind, ViolationKind::BichromaticCycle);
        assert_eq!(v.violation().unwrap().witness.len(), 6);
        assert!(verify(&c6, &vertices(3, vec![0, 1, 0, 1, 0, 2]), Variant::AcyclicVertex).unwrap().is_valid());
    }

    #[test]
    fn frugality() {
        let star = generate::star(3).unwrap();
        let c = vertices(2, vec![0, 1, 1, 1]);
        assert!(verify(&star, &c, Variant::Frugal { beta: 3 }).unwrap().is_valid());
        let v = verify(&star, &c, Variant::Frugal { beta: 2 }).unwrap();
        assert_eq!(v.violation().unwrap().witness, vec![1, 2, 3]);
    }

    #[test]
    fn eta_stage_properties() {
        let c5 = generate::cycle(5).unwrap();
        // two edges of one color at a vertex are fine for eta = 2
        let ok = edges(3, vec![0, 0, 1, 1, 2]);
        assert!(verify(&c5, &ok, Variant::EtaStage { eta: 2 }).unwrap().is_valid());
        assert!(!verify(&c5, &ok, Variant::EtaStage { eta: 1 }).unwrap().is_valid());
        let mono = edges(1, vec![0; 5]);
        let v = verify(&c5, &mono, Variant::EtaStage { eta: 2 }).unwrap();
        assert_eq!(v.violation().unwrap().kind, ViolationKind::MonochromaticCycle);
        let c6 = generate::cycle(6).unwrap();
        let alt = edges(2, vec![0, 1, 0, 1, 0, 1]);
        let v = verify(&c6, &alt, Variant::EtaStage { eta: 2 }).unwrap();
        assert_eq!(v.violation().unwrap().kind, ViolationKind::BichromaticCycle);
        // 0 0 1 1 0 1 is two-colored but not alternating
        let blocks = edges(2, vec![0, 0, 1, 1, 0, 1]);
        assert!(verify(&c6, &blocks, Variant::EtaStage { eta: 2 }).unwrap().is_valid());
    }

    #[test]
    fn shortest_cycle_in_k4() {
        let k4 = generate::complete(4).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let c = shortest_cycle(&k4, &all).unwrap();
        assert_eq!(c.len(), 3);
        for (i, &e) in c.edges.iter().enumerate() {
            let (u, v) = k4.edge(e);
            let (x, y) = (c.vertices[i], c.vertices[(i + 1) % 3]);
            assert!((u, v) == (x.min(y), x.max(y)));
        }
    }

    #[test]
    fn brute_force_values() {
        let c5 = generate::cycle(5).unwrap();
        assert_eq!(brute_force_chromatic(&c5, Variant::AcyclicEdge, 8).unwrap(), Some(3));
        let c4 = generate::cycle(4).unwrap();
        assert_eq!(brute_force_chromatic(&c4, Variant::AcyclicVertex, 8).unwrap(), Some(3));
        assert_eq!(brute_force_chromatic(&c4, Variant::AcyclicEdge, 8).unwrap(), Some(3));
        let p4 = generate::path(4).unwrap();
        assert_eq!(brute_force_chromatic(&p4, Variant::Star, 8).unwrap(), Some(3));
        let k4 = generate::complete(4).unwrap();
        assert_eq!(brute_force_chromatic(&k4, Variant::AcyclicEdge, 8).unwrap(), Some(5));
        assert_eq!(brute_force_chromatic(&k4, Variant::ProperEdge, 8).unwrap(), Some(3));
        assert_eq!(brute_force_chromatic(&k4, Variant::AcyclicVertex, 3).unwrap(), None);
        let big = generate::complete(7).unwrap();
        assert!(brute_force_chromatic(&big, Variant::ProperEdge, 8).is_err());
        assert!(brute_force_chromatic(&c4, Variant::ProperEdge, 9).is_err());
    }
}
