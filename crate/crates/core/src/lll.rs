//! Dependency graphs of bad events and the two local-lemma conditions.
//!
//! The classical condition divides `μ_x` by `φ_x(μ) = (1 + μ_x) ∏_{y ∈ Γ(x)} (1 + μ_y)`,
//! a sum over all subsets of the closed neighbourhood `Γ*(x)`. The improved
//! condition keeps only the subsets of `Γ*(x)` that are independent in the
//! dependency graph, i.e. it evaluates the independent-set polynomial of the
//! subgraph induced by `Γ*(x)`. When `Γ*(x)` is covered by cliques
//! `c_1, …, c_k`, that polynomial is bounded by `∏_i (1 + Σ_{y ∈ c_i} μ_y)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::round_sig;

/// Largest closed neighbourhood evaluated exactly by [`DependencyGraph::phi_star_exact`].
pub const EXACT_CAP: usize = 25;

/// Relative slack in `p_x <= bound`; the weight choices used for certificates
/// are often exactly saturating.
pub const CONDITION_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EventSpec {
    pub p: f64,
    pub mu: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Classic,
    ImprovedExact,
    ImprovedClique,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Classic => "classic",
            Mode::ImprovedExact => "improved-exact",
            Mode::ImprovedClique => "improved-clique",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(Mode::Classic),
            "improved-exact" => Ok(Mode::ImprovedExact),
            "improved-clique" => Ok(Mode::ImprovedClique),
            other => Err(Error::Domain(format!("unknown condition mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DependencyGraph {
    events: Vec<EventSpec>,
    adjacency: Vec<Vec<usize>>,
    cliques: BTreeMap<usize, Vec<Vec<usize>>>,
}

/// On-disk form: `{"events":[{"p":..,"mu":..}], "edges":[[i,j]], "cliques":{"i":[[..]]}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DependencyGraphJson {
    pub events: Vec<EventSpec>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub cliques: BTreeMap<usize, Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EventCheck {
    pub index: usize,
    pub p: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub mode: Mode,
    pub pass: bool,
    pub events: Vec<EventCheck>,
}

impl ConditionReport {
    pub fn failures(&self) -> impl Iterator<Item = &EventCheck> {
        self.events.iter().filter(|e| !e.pass)
    }

    /// Smallest margin over all events (`+inf` when there are none).
    pub fn min_margin(&self) -> f64 {
        self.events.iter().map(|e| e.margin).fold(f64::INFINITY, f64::min)
    }

    /// Same report with every float rounded to 10 significant digits.
    pub fn rounded(&self) -> ConditionReport {
        let events = self
            .events
            .iter()
            .map(|e| EventCheck {
                p: round_sig(e.p),
                bound: round_sig(e.bound),
                margin: round_sig(e.margin),
                ..e.clone()
            })
            .collect();
        ConditionReport { events, ..self.clone() }
    }
}

impl DependencyGraph {
    pub fn new<I>(events: Vec<EventSpec>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        for (i, e) in events.iter().enumerate() {
            if !(0.0..=1.0).contains(&e.p) {
                return Err(Error::InvalidDependencyGraph(format!(
                    "event {i} has probability {} outside [0, 1]",
                    e.p
                )));
            }
            if !(e.mu >= 0.0 && e.mu.is_finite()) {
                return Err(Error::InvalidDependencyGraph(format!(
                    "event {i} has weight {} outside [0, inf)",
                    e.mu
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); events.len()];
        for (a, b) in edges {
            if a >= events.len() || b >= events.len() {
                return Err(Error::InvalidDependencyGraph(format!(
                    "edge ({a}, {b}) references an event outside 0..{}",
                    events.len()
                )));
            }
            if a == b {
                return Err(Error::InvalidDependencyGraph(format!("self-loop at event {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(DependencyGraph { events, adjacency, cliques: BTreeMap::new() })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DependencyGraphJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidDependencyGraph(format!("malformed JSON: {e}")))?;
        let mut graph = DependencyGraph::new(raw.events, raw.edges.iter().map(|&[a, b]| (a, b)))?;
        for (event, cover) in raw.cliques {
            graph.set_clique_cover(event, cover)?;
        }
        Ok(graph)
    }

    pub fn to_json_value(&self) -> DependencyGraphJson {
        let edges = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| [a, b]))
            .collect();
        DependencyGraphJson { events: self.events.clone(), edges, cliques: self.cliques.clone() }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn events(&self) -> &[EventSpec] {
        &self.events
    }

    pub fn weights(&self) -> Vec<f64> {
        self.events.iter().map(|e| e.mu).collect()
    }

    pub fn set_weights(&mut self, mu: &[f64]) -> Result<()> {
        self.check_weights(mu)?;
        for (e, &m) in self.events.iter_mut().zip(mu) {
            e.mu = m;
        }
        Ok(())
    }

    /// Sorted open neighbourhood `Γ(x)`.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Sorted closed neighbourhood `Γ*(x) = Γ(x) ∪ {x}`.
    pub fn closed_neighborhood(&self, x: usize) -> Vec<usize> {
        let mut set = self.adjacency[x].clone();
        let at = set.binary_search(&x).unwrap_err();
        set.insert(at, x);
        set
    }

    pub fn clique_cover(&self, x: usize) -> Option<&[Vec<usize>]> {
        self.cliques.get(&x).map(Vec::as_slice)
    }

    /// Declares a cover of `Γ*(x)` by cliques of the dependency graph.
    pub fn set_clique_cover(&mut self, x: usize, cover: Vec<Vec<usize>>) -> Result<()> {
        if x >= self.events.len() {
            return Err(Error::InvalidCover { event: x, message: "no such event".into() });
        }
        let closed = self.closed_neighborhood(x);
        let mut covered = vec![false; closed.len()];
        for clique in &cover {
            for (i, &a) in clique.iter().enumerate() {
                let Ok(pos) = closed.binary_search(&a) else {
                    return Err(Error::InvalidCover {
                        event: x,
                        message: format!("member {a} is outside the closed neighbourhood"),
                    });
                };
                covered[pos] = true;
                for &b in &clique[i + 1..] {
                    if a == b || !self.adjacent(a, b) {
                        return Err(Error::InvalidCover {
                            event: x,
                            message: format!("{a} and {b} are not distinct adjacent events"),
                        });
                    }
                }
            }
        }
        if let Some(pos) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidCover {
                event: x,
                message: format!("event {} of the closed neighbourhood is uncovered", closed[pos]),
            });
        }
        self.cliques.insert(x, cover);
        Ok(())
    }

    fn check_weights(&self, mu: &[f64]) -> Result<()> {
        if mu.len() != self.events.len() {
            return Err(Error::InvalidDependencyGraph(format!(
                "{} weights supplied for {} events",
                mu.len(),
                self.events.len()
            )));
        }
        if let Some(i) = mu.iter().position(|&m| !(m >= 0.0 && m.is_finite())) {
            return Err(Error::InvalidDependencyGraph(format!("weight {i} is {}", mu[i])));
        }
        Ok(())
    }

    /// Installs a cover known to be valid by construction.
    pub(crate) fn set_clique_cover_unchecked(&mut self, x: usize, cover: Vec<Vec<usize>>) {
        self.cliques.insert(x, cover);
    }

    pub fn phi_classic(&self, x: usize, mu: &[f64]) -> f64 {
        (1.0 + mu[x]) * self.adjacency[x].iter().map(|&y| 1.0 + mu[y]).product::<f64>()
    }

    /// Independent-set polynomial of the subgraph induced by `Γ*(x)`.
    pub fn phi_star_exact(&self, x: usize, mu: &[f64]) -> Result<f64> {
        let closed = self.closed_neighborhood(x);
        if closed.len() > EXACT_CAP {
            return Err(Error::ExactCapExceeded { event: x, size: closed.len(), cap: EXACT_CAP });
        }
        let masks: Vec<u32> = closed
            .iter()
            .map(|&a| {
                closed
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.adjacent(a, b))
                    .fold(0u32, |m, (j, _)| m | (1 << j))
            })
            .collect();
        let weights: Vec<f64> = closed.iter().map(|&a| mu[a]).collect();
        let all = if closed.len() == 32 { u32::MAX } else { (1u32 << closed.len()) - 1 };
        Ok(independence_polynomial(&masks, &weights, all))
    }

    pub fn phi_star_clique_bound(&self, x: usize, mu: &[f64]) -> Result<f64> {
        let cover = self.cliques.get(&x).ok_or_else(|| Error::InvalidCover {
            event: x,
            message: "no clique cover declared".into(),
        })?;
        Ok(cover
            .iter()
            .map(|clique| 1.0 + clique.iter().map(|&y| mu[y]).sum::<f64>())
            .product())
    }

    pub fn phi(&self, x: usize, mu: &[f64], mode: Mode) -> Result<f64> {
        match mode {
            Mode::Classic => Ok(self.phi_classic(x, mu)),
            Mode::ImprovedExact => self.phi_star_exact(x, mu),
            Mode::ImprovedClique => self.phi_star_clique_bound(x, mu),
        }
    }

    /// Checks `p_x <= μ_x / φ_x(μ)` for every event using the stored weights.
    pub fn check_condition(&self, mode: Mode) -> Result<ConditionReport> {
        self.check_condition_with(mode, &self.weights())
    }

    pub fn check_condition_with(&self, mode: Mode, mu: &[f64]) -> Result<ConditionReport> {
        self.check_weights(mu)?;
        let mut events = Vec::with_capacity(self.events.len());
        for (index, e) in self.events.iter().enumerate() {
            let phi = self.phi(index, mu, mode)?;
            let bound = mu[index] / phi;
            events.push(EventCheck {
                index,
                p: e.p,
                bound,
                margin: bound - e.p,
                pass: e.p <= bound * (1.0 + CONDITION_SLACK),
            });
        }
        let pass = events.iter().all(|e| e.pass);
        Ok(ConditionReport { mode, pass, events })
    }

    /// First weight on `grid` which, applied uniformly to every event, passes
    /// the condition in `mode`.
    pub fn scan_uniform_mu(&self, mode: Mode, grid: &[f64]) -> Result<Option<f64>> {
        for &m in grid {
            let mu = vec![m; self.events.len()];
            if self.check_condition_with(mode, &mu)?.pass {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }
}

/// `points` values spaced evenly in log scale over `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && points >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    (0..points).map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp()).collect()
}

// Sum over independent subsets of `cands` (including the empty set) of the
// product of their weights, branching on a vertex with a neighbour inside.
fn independence_polynomial(masks: &[u32], weights: &[f64], cands: u32) -> f64 {
    let mut rest = cands;
    let mut pivot = None;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[v] & cands != 0 {
            pivot = Some(v);
            break;
        }
    }
    match pivot {
        None => {
            let mut product = 1.0;
            let mut rest = cands;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                product *= 1.0 + weights[v];
            }
            product
        }
        Some(v) => {
            let without = cands & !(1 << v);
            independence_polynomial(masks, weights, without)
                + weights[v] * independence_polynomial(masks, weights, without & !masks[v])
        }
    }
}
