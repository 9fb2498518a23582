//! Bad-event families over a concrete graph: scopes, probabilities, the
//! intersection dependency graph, anchor clique covers and the weight
//! ansatz each family is certified with.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_rational::Ratio;

use crate::bounds::{self, BoundResult};
use crate::coloring::{Coloring, Target, Variant};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::lll::{ConditionReport, DependencyGraph, EventSpec, Mode};
use crate::verify;

/// Event kinds, declared in the order the solvers repair them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    AdjacentEdgePair,
    VertexEdge,
    EtaStar,
    SpecialPair,
    FrugalSet,
    Path3,
    InducedC4,
    Path4,
    EvenCycleBichromatic,
    CycleMonoOrBichromatic,
    OddCycleMonochromatic,
    BaseBichromaticCycle,
    HalfMonoCycle,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::AdjacentEdgePair => "adjacent-edge-pair",
            EventKind::VertexEdge => "vertex-edge",
            EventKind::EtaStar => "eta-star",
            EventKind::SpecialPair => "special-pair",
            EventKind::FrugalSet => "frugal-set",
            EventKind::Path3 => "path3",
            EventKind::InducedC4 => "induced-c4",
            EventKind::Path4 => "path4",
            EventKind::EvenCycleBichromatic => "even-cycle-bichromatic",
            EventKind::CycleMonoOrBichromatic => "cycle-mono-or-bichromatic",
            EventKind::OddCycleMonochromatic => "odd-cycle-monochromatic",
            EventKind::BaseBichromaticCycle => "base-bichromatic-cycle",
            EventKind::HalfMonoCycle => "half-mono-cycle",
        }
    }

    fn is_cycle(self) -> bool {
        matches!(
            self,
            EventKind::EvenCycleBichromatic
                | EventKind::CycleMonoOrBichromatic
                | EventKind::OddCycleMonochromatic
                | EventKind::BaseBichromaticCycle
                | EventKind::HalfMonoCycle
        )
    }
}

/// One bad event. `scope` is sorted and doubles as the anchor set;
/// `sequence` holds the same variables in the order the event reads them
/// (cycle order, path order).
#[derive(Clone, Debug, PartialEq)]
pub struct BadEvent {
    pub kind: EventKind,
    pub scope: Vec<usize>,
    pub sequence: Vec<usize>,
    pub p: f64,
    pub exact: Option<Ratio<u128>>,
}

impl BadEvent {
    fn new(kind: EventKind, sequence: Vec<usize>, p: f64, exact: Option<Ratio<u128>>) -> Self {
        let mut scope = sequence.clone();
        scope.sort_unstable();
        BadEvent { kind, scope, sequence, p, exact }
    }

    /// Whether the event holds under `assignment`: colors for coloring
    /// families, recolor indicators (1 = recolored) for the Δ + 2 family.
    pub fn occurs(&self, assignment: &[usize]) -> bool {
        let s: Vec<usize> = self.sequence.iter().map(|&v| assignment[v]).collect();
        fn all_eq(mut xs: impl Iterator<Item = usize>, value: Option<usize>) -> bool {
            let mut first = value;
            xs.all(|x| *first.get_or_insert(x) == x)
        }
        let halves = |even: Option<usize>, odd: Option<usize>| {
            all_eq(s.iter().copied().step_by(2), even) && all_eq(s.iter().copied().skip(1).step_by(2), odd)
        };
        match self.kind {
            EventKind::AdjacentEdgePair | EventKind::VertexEdge | EventKind::SpecialPair => s[0] == s[1],
            EventKind::EtaStar | EventKind::FrugalSet | EventKind::OddCycleMonochromatic => {
                all_eq(s.iter().copied(), None)
            }
            EventKind::Path3 | EventKind::InducedC4 | EventKind::Path4 => halves(None, None),
            EventKind::EvenCycleBichromatic | EventKind::CycleMonoOrBichromatic => halves(None, None),
            EventKind::BaseBichromaticCycle => {
                halves(Some(0), Some(0)) || halves(Some(1), Some(0)) || halves(Some(0), Some(1))
            }
            EventKind::HalfMonoCycle => halves(Some(0), Some(1)),
        }
    }
}

/// The coloring property (or product space) a family is built for.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilyVariant {
    AcyclicEdge,
    Girth { eta: usize },
    /// Recolor indicators drawn with probability `rate` on top of a proper
    /// base coloring.
    DeltaPlusTwo { rate: f64 },
    AcyclicVertex,
    Star,
    Frugal { beta: usize },
}

impl FamilyVariant {
    /// The coloring property whose violations the family's events describe.
    pub fn coloring_variant(self) -> Option<Variant> {
        match self {
            FamilyVariant::AcyclicEdge => Some(Variant::AcyclicEdge),
            FamilyVariant::Girth { eta } => Some(Variant::EtaStage { eta }),
            FamilyVariant::DeltaPlusTwo { .. } => None,
            FamilyVariant::AcyclicVertex => Some(Variant::AcyclicVertex),
            FamilyVariant::Star => Some(Variant::Star),
            FamilyVariant::Frugal { beta } => Some(Variant::Frugal { beta }),
        }
    }

    pub fn target(self) -> Target {
        match self {
            FamilyVariant::AcyclicEdge | FamilyVariant::Girth { .. } | FamilyVariant::DeltaPlusTwo { .. } => {
                Target::Edges
            }
            _ => Target::Vertices,
        }
    }
}

/// An anchor whose clique is larger than the counting bound allows.
#[derive(Clone, Debug, PartialEq)]
pub struct CountCheck {
    pub anchor: usize,
    pub kind: EventKind,
    /// Scope size for cycle kinds other than base-bichromatic cycles, 0 otherwise.
    pub length: usize,
    pub count: usize,
    pub bound: f64,
}

impl CountCheck {
    pub fn pass(&self) -> bool {
        self.count as f64 <= self.bound * (1.0 + 1e-12)
    }
}

/// Outcome of certifying a family with the weight ansatz.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub alpha: f64,
    /// False when the bound calculator's `α` failed and a grid value was used.
    pub nominal_alpha: bool,
    pub report: ConditionReport,
}

#[derive(Clone, Debug)]
pub struct EventFamily {
    pub variant: FamilyVariant,
    /// Number of edges or vertices the events range over.
    pub variables: usize,
    /// Palette size `N`; `Δ + 2` for the recoloring family.
    pub colors: usize,
    pub delta: usize,
    pub girth: Girth,
    pub base: Option<Coloring>,
    pub events: Vec<BadEvent>,
}

fn inverse_power(n: usize, k: usize) -> (f64, Option<Ratio<u128>>) {
    let exact = u32::try_from(k)
        .ok()
        .and_then(|k| (n as u128).checked_pow(k))
        .map(|d| Ratio::new(1, d));
    ((n as f64).powi(-(k as i32)), exact)
}

fn require_colors(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("need at least 2 colors, got {n}")));
    }
    Ok(())
}

fn cycle_limit(g: &Graph, max_cycle_len: Option<usize>) -> Option<usize> {
    let limit = max_cycle_len.unwrap_or(g.vertex_count()).min(g.vertex_count());
    (limit >= 3).then_some(limit)
}

fn edge_pairs(g: &Graph) -> Vec<[usize; 2]> {
    let mut pairs = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                pairs.push([e.min(f), e.max(f)]);
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

fn vertex_edges(g: &Graph, n: usize) -> Vec<BadEvent> {
    let (p, exact) = inverse_power(n, 1);
    g.edges().iter().map(|&(u, v)| BadEvent::new(EventKind::VertexEdge, vec![u, v], p, exact)).collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Adjacent-edge pairs (`p = 1/N`) and even cycles whose alternate halves
/// are each monochromatic (`p = 1/N^{2k−2}`).
pub fn build_acyclic_edge(g: &Graph, n: usize, max_cycle_len: Option<usize>) -> Result<EventFamily> {
    require_colors(n)?;
    let (p, exact) = inverse_power(n, 1);
    let mut events: Vec<BadEvent> = edge_pairs(g)
        .into_iter()
        .map(|[e, f]| BadEvent::new(EventKind::AdjacentEdgePair, vec![e, f], p, exact))
        .collect();
    if let Some(limit) = cycle_limit(g, max_cycle_len) {
        for c in g.enumerate_cycles(limit)? {
            if c.len() % 2 == 0 {
                let (p, exact) = inverse_power(n, c.len() - 2);
                events.push(BadEvent::new(EventKind::EvenCycleBichromatic, c.edges, p, exact));
            }
        }
    }
    Ok(family(FamilyVariant::AcyclicEdge, g, n, None, events))
}

/// The girth-restricted family: `η + 1` equally colored edges at a vertex
/// (`p = 1/N^η`), even cycles that are monochromatic or properly bichromatic
/// (`p = N²/N^{2k}`) and monochromatic odd cycles (`p = 1/N^{2l}`). Needs
/// `η ≥ 2` and girth at least 5.
pub fn build_girth_variant(g: &Graph, n: usize, eta: usize, max_cycle_len: Option<usize>) -> Result<EventFamily> {
    if eta < 2 {
        return Err(Error::Domain(format!("eta must be at least 2, got {eta}")));
    }
    if !g.girth().at_least(5) {
        return Err(Error::Precondition(format!("girth {} is below 5", g.girth())));
    }
    build_eta_stage(g, n, eta, max_cycle_len)
}

/// The events of [`build_girth_variant`] without its girth and `η`
/// preconditions; they describe the stage-one property on any graph.
pub fn build_eta_stage(g: &Graph, n: usize, eta: usize, max_cycle_len: Option<usize>) -> Result<EventFamily> {
    require_colors(n)?;
    if eta == 0 {
        return Err(Error::Domain("eta must be positive".into()));
    }
    let (p, exact) = inverse_power(n, eta);
    let mut events = Vec::new();
    for v in 0..g.vertex_count() {
        let stars = g.incident(v).iter().map(|&(_, e)| e).combinations(eta + 1);
        events.extend(stars.map(|s| BadEvent::new(EventKind::EtaStar, s, p, exact)));
    }
    if let Some(limit) = cycle_limit(g, max_cycle_len) {
        for c in g.enumerate_cycles(limit)? {
            let len = c.len();
            let event = if len % 2 == 0 {
                let p = (n as f64).powi(2 - len as i32);
                let exact = (n as u128)
                    .checked_pow(len as u32)
                    .map(|d| Ratio::new((n * n) as u128, d));
                BadEvent::new(EventKind::CycleMonoOrBichromatic, c.edges, p, exact)
            } else {
                let (p, exact) = inverse_power(n, len - 1);
                BadEvent::new(EventKind::OddCycleMonochromatic, c.edges, p, exact)
            };
            events.push(event);
        }
    }
    Ok(family(FamilyVariant::Girth { eta }, g, n, None, events))
}

/// Events over recolor indicators on top of the proper `base` coloring:
/// adjacent edges both recolored (`p = w²`), base-bichromatic cycles left
/// bichromatic, and half-monochromatic cycles whose other half is recolored.
pub fn build_delta_plus_2(g: &Graph, base: &Coloring, rate: f64, max_cycle_len: Option<usize>) -> Result<EventFamily> {
    if !(rate > 0.0 && rate <= 0.5) {
        return Err(Error::Domain(format!("recolor rate must lie in (0, 1/2], got {rate}")));
    }
    base.check_graph(g)?;
    if base.target != Target::Edges || base.palette > g.max_degree() + 1 {
        return Err(Error::Precondition(format!(
            "base must be an edge coloring with at most Δ + 1 = {} colors",
            g.max_degree() + 1
        )));
    }
    if let Some([e, f]) = verify::improper_edge_pair(g, &base.assignment) {
        return Err(Error::Precondition(format!("base coloring is improper at edges {e} and {f}")));
    }
    let w = rate;
    let mut events: Vec<BadEvent> = edge_pairs(g)
        .into_iter()
        .map(|[e, f]| BadEvent::new(EventKind::AdjacentEdgePair, vec![e, f], w * w, None))
        .collect();
    if let Some(limit) = cycle_limit(g, max_cycle_len) {
        let col = &base.assignment;
        for c in g.enumerate_cycles(limit)? {
            if c.len() % 2 == 1 {
                continue;
            }
            let k = (c.len() / 2) as i32;
            let mono = |offset: usize| c.edges.iter().skip(offset).step_by(2).all(|&e| col[e] == col[c.edges[offset]]);
            let event = match (mono(0), mono(1)) {
                (true, true) => {
                    let p = (1.0 - w).powi(2 * k) + 2.0 * w.powi(k) * (1.0 - w).powi(k);
                    BadEvent::new(EventKind::BaseBichromaticCycle, c.edges, p, None)
                }
                (true, false) => BadEvent::new(EventKind::HalfMonoCycle, c.edges, (w * (1.0 - w)).powi(k), None),
                (false, true) => {
                    let mut seq = c.edges;
                    seq.rotate_left(1);
                    BadEvent::new(EventKind::HalfMonoCycle, seq, (w * (1.0 - w)).powi(k), None)
                }
                (false, false) => continue,
            };
            events.push(event);
        }
    }
    let colors = g.max_degree() + 2;
    Ok(family(FamilyVariant::DeltaPlusTwo { rate }, g, colors, Some(base.clone()), events))
}

/// Edges (`p = 1/N`), paths on five vertices colored `a b a b a`
/// (`p = 1/N³`), induced 4-cycles with no special opposite pair colored
/// `a b a b` (`p = 1/N²`) and equally colored special pairs (`p = 1/N`).
pub fn build_acyclic_vertex(g: &Graph, n: usize) -> Result<EventFamily> {
    require_colors(n)?;
    let mut events = vertex_edges(g, n);
    let (p3, e3) = inverse_power(n, 3);
    for path in g.enumerate_paths(4)? {
        events.push(BadEvent::new(EventKind::Path4, path, p3, e3));
    }
    let special = g.special_pairs();
    let is_special = |a: usize, b: usize| special.binary_search(&(a.min(b), a.max(b))).is_ok();
    let (p2, e2) = inverse_power(n, 2);
    if g.vertex_count() >= 4 {
        for c in g.enumerate_cycles_capped(4, crate::graph::DEFAULT_ENUMERATION_CAP)? {
            let v = &c.vertices;
            if c.len() != 4 || g.has_edge(v[0], v[2]) || g.has_edge(v[1], v[3]) {
                continue;
            }
            if is_special(v[0], v[2]) || is_special(v[1], v[3]) {
                continue;
            }
            events.push(BadEvent::new(EventKind::InducedC4, c.vertices, p2, e2));
        }
    }
    let (p1, e1) = inverse_power(n, 1);
    for &(u, v) in &special {
        events.push(BadEvent::new(EventKind::SpecialPair, vec![u, v], p1, e1));
    }
    Ok(family(FamilyVariant::AcyclicVertex, g, n, None, events))
}

/// Edges (`p = 1/N`) and paths on four vertices colored `a b a b`
/// (`p = 1/N²`).
pub fn build_star(g: &Graph, n: usize) -> Result<EventFamily> {
    require_colors(n)?;
    let mut events = vertex_edges(g, n);
    let (p, exact) = inverse_power(n, 2);
    for path in g.enumerate_paths(3)? {
        events.push(BadEvent::new(EventKind::Path3, path, p, exact));
    }
    Ok(family(FamilyVariant::Star, g, n, None, events))
}

/// Edges (`p = 1/N`) and every `(β + 1)`-subset of a neighbourhood receiving
/// one color (`p = 1/N^β`), each subset once.
pub fn build_frugal(g: &Graph, n: usize, beta: usize) -> Result<EventFamily> {
    require_colors(n)?;
    if beta == 0 {
        return Err(Error::Domain("beta must be positive".into()));
    }
    let total: f64 = (0..g.vertex_count()).map(|v| binomial(g.degree(v), beta + 1)).sum();
    if total > crate::graph::DEFAULT_ENUMERATION_CAP as f64 {
        return Err(Error::CapExceeded { what: "neighbourhood subsets", limit: crate::graph::DEFAULT_ENUMERATION_CAP });
    }
    let mut sets: Vec<Vec<usize>> =
        (0..g.vertex_count()).flat_map(|v| g.neighbors(v).iter().copied().combinations(beta + 1)).collect();
    sets.sort_unstable();
    sets.dedup();
    let mut events = vertex_edges(g, n);
    let (p, exact) = inverse_power(n, beta);
    events.extend(sets.into_iter().map(|s| BadEvent::new(EventKind::FrugalSet, s, p, exact)));
    Ok(family(FamilyVariant::Frugal { beta }, g, n, None, events))
}

fn family(variant: FamilyVariant, g: &Graph, colors: usize, base: Option<Coloring>, mut events: Vec<BadEvent>) -> EventFamily {
    events.sort_by(|a, b| (a.kind, a.scope.len(), &a.scope).cmp(&(b.kind, b.scope.len(), &b.scope)));
    EventFamily {
        variant,
        variables: variant.target().count(g),
        colors,
        delta: g.max_degree(),
        girth: g.girth(),
        base,
        events,
    }
}

impl EventFamily {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn count(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    /// For every variable, the indices of the events containing it.
    pub fn events_at(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.variables];
        for (i, e) in self.events.iter().enumerate() {
            for &v in &e.scope {
                at[v].push(i);
            }
        }
        at
    }

    /// Indices of the events holding under `assignment`.
    pub fn violated(&self, assignment: &[usize]) -> Vec<usize> {
        (0..self.events.len()).filter(|&i| self.events[i].occurs(assignment)).collect()
    }

    pub fn any_violated(&self, assignment: &[usize]) -> bool {
        self.events.iter().any(|e| e.occurs(assignment))
    }

    /// The weights the family is certified with, as functions of one
    /// parameter `α` and the degree bound `delta`.
    pub fn ansatz_weights(&self, alpha: f64, delta: usize) -> Vec<f64> {
        let d = delta as f64;
        let below = (d - 1.0).max(1.0);
        self.events
            .iter()
            .map(|e| {
                let len = e.scope.len() as i32;
                match (self.variant, e.kind) {
                    (FamilyVariant::AcyclicEdge, EventKind::AdjacentEdgePair) => alpha / below,
                    (FamilyVariant::AcyclicEdge, _) => (alpha / below).powi(len - 2),
                    (FamilyVariant::Girth { eta }, EventKind::EtaStar) => (alpha / below).powi(eta as i32),
                    (FamilyVariant::Girth { .. }, EventKind::CycleMonoOrBichromatic) => (alpha / below).powi(len - 2),
                    (FamilyVariant::Girth { .. }, _) => (alpha / below).powi(len - 1),
                    (FamilyVariant::DeltaPlusTwo { .. }, EventKind::HalfMonoCycle) => (alpha / d).powi(len / 2),
                    (FamilyVariant::DeltaPlusTwo { .. }, _) => (alpha / d).powi(2),
                    (FamilyVariant::AcyclicVertex, kind) => {
                        let mu = alpha / d.powf(4.0 / 3.0);
                        match kind {
                            EventKind::Path4 => mu.powi(3),
                            EventKind::InducedC4 => mu.powi(2),
                            _ => mu,
                        }
                    }
                    (FamilyVariant::Star, EventKind::Path3) => (alpha / d.powf(1.5)).powi(2),
                    (FamilyVariant::Star, _) => alpha / d.powf(1.5),
                    (FamilyVariant::Frugal { beta }, EventKind::FrugalSet) => {
                        factorial(beta) * (alpha / d).powi(beta as i32 + 1)
                    }
                    (FamilyVariant::Frugal { .. }, _) => alpha / d,
                }
            })
            .collect()
    }

    /// Intersection dependency graph with weights `mu` and one clique per
    /// anchor variable: all events containing it.
    pub fn dependency_graph_with(&self, mu: &[f64]) -> Result<DependencyGraph> {
        if mu.len() != self.events.len() {
            return Err(Error::InvalidDependencyGraph(format!(
                "{} weights supplied for {} events",
                mu.len(),
                self.events.len()
            )));
        }
        let at = self.events_at();
        let specs: Vec<EventSpec> = self.events.iter().zip(mu).map(|(e, &mu)| EventSpec { p: e.p, mu }).collect();
        let mut edges = Vec::new();
        for (i, e) in self.events.iter().enumerate() {
            for &v in &e.scope {
                edges.extend(at[v].iter().filter(|&&j| j > i).map(|&j| (i, j)));
            }
        }
        let mut dg = DependencyGraph::new(specs, edges)?;
        for (i, e) in self.events.iter().enumerate() {
            dg.set_clique_cover_unchecked(i, e.scope.iter().map(|&v| at[v].clone()).collect());
        }
        Ok(dg)
    }

    pub fn dependency_graph(&self, alpha: f64, delta: usize) -> Result<DependencyGraph> {
        self.dependency_graph_with(&self.ansatz_weights(alpha, delta))
    }

    /// Degree bound used for certificates: the bound calculator needs at
    /// least 3, and a graph of smaller degree satisfies the bounds for 3.
    pub fn certificate_delta(&self) -> usize {
        self.delta.max(3)
    }

    /// The bound calculator's result for this family at
    /// [`certificate_delta`](Self::certificate_delta).
    pub fn bound(&self) -> Result<BoundResult> {
        let delta = self.certificate_delta() as u64;
        match self.variant {
            FamilyVariant::AcyclicEdge => bounds::bound_acyclic_edge(delta),
            FamilyVariant::Girth { eta } => {
                let girth = self.girth.finite().unwrap_or(5) as u64;
                bounds::bound_girth_acyclic_edge(delta, girth, eta as u32, false)
            }
            FamilyVariant::DeltaPlusTwo { .. } => bounds::girth_threshold_delta_plus_2(delta),
            FamilyVariant::AcyclicVertex => bounds::bound_acyclic_vertex(delta),
            FamilyVariant::Star => bounds::bound_star(delta),
            FamilyVariant::Frugal { beta } => bounds::bound_frugal(delta, beta as u32),
        }
    }

    /// Checks the local-lemma condition with the ansatz weights, first at
    /// the bound calculator's `α`, then over a grid of `α` ordered by
    /// distance from it. Returns the passing certificate, or the failing
    /// report at the calculator's `α` when no grid value passes.
    pub fn certify(&self, mode: Mode) -> Result<Certificate> {
        let delta = self.certificate_delta();
        let nominal = self.bound()?.alpha.unwrap_or(0.5);
        let first = self.dependency_graph(nominal, delta)?.check_condition(mode)?;
        if first.pass {
            return Ok(Certificate { alpha: nominal, nominal_alpha: true, report: first });
        }
        let mut grid: Vec<f64> = (1..200).map(|i| i as f64 * 0.005).collect();
        grid.sort_by(|a, b| (a - nominal).abs().total_cmp(&(b - nominal).abs()));
        for alpha in grid {
            let report = self.dependency_graph(alpha, delta)?.check_condition(mode)?;
            if report.pass {
                return Ok(Certificate { alpha, nominal_alpha: false, report });
            }
        }
        Ok(Certificate { alpha: nominal, nominal_alpha: true, report: first })
    }

    fn count_bound(&self, kind: EventKind, length: usize) -> f64 {
        let d = self.delta as f64;
        let below = d - 1.0;
        match (self.variant, kind) {
            (_, EventKind::AdjacentEdgePair) => match self.variant {
                FamilyVariant::DeltaPlusTwo { .. } => 2.0 * d,
                _ => 2.0 * below,
            },
            (_, EventKind::EvenCycleBichromatic | EventKind::CycleMonoOrBichromatic) => {
                below.powi(length as i32 - 2)
            }
            (_, EventKind::OddCycleMonochromatic) => below.powi(length as i32 - 2),
            (FamilyVariant::Girth { eta }, EventKind::EtaStar) => 2.0 * binomial(self.delta.saturating_sub(1), eta),
            (_, EventKind::BaseBichromaticCycle) => d,
            (_, EventKind::HalfMonoCycle) => 2.0 * d.powi(length as i32 / 2 - 1),
            (_, EventKind::VertexEdge) => d,
            (_, EventKind::Path4) => 2.5 * d.powi(4),
            (_, EventKind::InducedC4) => d.powf(8.0 / 3.0) / 2.0,
            (_, EventKind::SpecialPair) => d.powf(4.0 / 3.0),
            (_, EventKind::Path3) => 2.0 * d.powi(3),
            (FamilyVariant::Frugal { beta }, EventKind::FrugalSet) => d.powi(beta as i32 + 1) / factorial(beta),
            _ => f64::INFINITY,
        }
    }

    /// Per anchor, kind and cycle length: how many events contain the
    /// anchor against the counting bound for the family.
    pub fn count_audit(&self) -> Vec<CountCheck> {
        let mut counts: BTreeMap<(usize, EventKind, usize), usize> = BTreeMap::new();
        for e in &self.events {
            // base-bichromatic cycles are bounded per anchor over all lengths
            let length = if e.kind.is_cycle() && e.kind != EventKind::BaseBichromaticCycle { e.scope.len() } else { 0 };
            for &v in &e.scope {
                *counts.entry((v, e.kind, length)).or_default() += 1;
            }
        }
        counts
            .into_iter()
            .map(|((anchor, kind, length), count)| CountCheck {
                anchor,
                kind,
                length,
                count,
                bound: self.count_bound(kind, length),
            })
            .collect()
    }

    pub fn count_violations(&self) -> Vec<CountCheck> {
        self.count_audit().into_iter().filter(|c| !c.pass()).collect()
    }
}
