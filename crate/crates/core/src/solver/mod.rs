//! Resampling solvers: draw every variable uniformly, then repeatedly find a
//! violated event and redraw exactly the variables in its scope.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`. Variables are
//! drawn in index order at start-up and a scope is redrawn in increasing
//! index order, one `gen_range(0..N)` per variable, so a report is
//! reproducible bit for bit from its seed.

mod delta2;
mod expand;
mod vizing;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, Variant};
use crate::error::{Error, Result};
use crate::events::EventKind;
use crate::graph::Graph;
use crate::verify::{self, Violation};

pub use delta2::{recolor_delta_plus_2, recolor_rate, RESTART_BUDGET};
pub use expand::expand_eta_coloring;
pub use vizing::vizing_proper_edge_coloring;

pub const DEFAULT_MAX_RESAMPLES: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub variant: String,
    pub n: usize,
    pub m: usize,
    pub colors: usize,
    pub assignment: Vec<usize>,
    pub seed: u64,
    pub resamples: u64,
    pub valid: bool,
    /// Restarts used by the recoloring pipeline; zero elsewhere.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub restarts: u64,
    /// Number of entries in the violated-event log.
    #[serde(skip)]
    pub log_len: usize,
    #[serde(skip)]
    pub violation: Option<Violation>,
    #[serde(skip)]
    pub wall_time: Duration,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

impl SolveReport {
    pub fn coloring(&self, target: crate::coloring::Target) -> Result<Coloring> {
        Coloring::new(target, self.colors, self.assignment.clone())
    }
}

/// A violated event found by the detector: its kind and sorted scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detected {
    pub kind: EventKind,
    pub scope: Vec<usize>,
}

impl Detected {
    fn new(kind: EventKind, mut scope: Vec<usize>) -> Self {
        scope.sort_unstable();
        Detected { kind, scope }
    }

    fn key(&self) -> (EventKind, usize, &[usize]) {
        (self.kind, self.scope.len(), &self.scope)
    }
}

/// One resampling run, advanced one event at a time.
pub struct Resampler<'g> {
    g: &'g Graph,
    variant: Variant,
    colors: usize,
    seed: u64,
    rng: ChaCha8Rng,
    assignment: Vec<usize>,
    special: HashSet<(usize, usize)>,
    special_list: Vec<(usize, usize)>,
    log: Vec<EventKind>,
}

impl<'g> Resampler<'g> {
    pub fn new(g: &'g Graph, variant: Variant, colors: usize, seed: u64) -> Result<Self> {
        if colors == 0 {
            return Err(Error::Domain("need at least one color".into()));
        }
        if let Variant::EtaStage { eta: 0 } | Variant::Frugal { beta: 0 } = variant {
            return Err(Error::Domain(format!("variant {variant} needs a positive parameter")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let assignment = (0..variant.target().count(g)).map(|_| rng.gen_range(0..colors)).collect();
        let special_list = if variant == Variant::AcyclicVertex { g.special_pairs() } else { Vec::new() };
        Ok(Resampler {
            g,
            variant,
            colors,
            seed,
            rng,
            assignment,
            special: special_list.iter().copied().collect(),
            special_list,
            log: Vec::new(),
        })
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn resamples(&self) -> u64 {
        self.log.len() as u64
    }

    pub fn log(&self) -> &[EventKind] {
        &self.log
    }

    /// The violated event to repair next: lowest kind first, then shortest
    /// and lexicographically smallest scope among the detector's candidates.
    pub fn detect(&self) -> Option<Detected> {
        let g = self.g;
        let col = &self.assignment;
        match self.variant {
            Variant::ProperEdge => edge_pair(g, col),
            Variant::AcyclicEdge => edge_pair(g, col).or_else(|| {
                verify::proper_bichromatic_edge_cycle(g, col)
                    .map(|c| Detected::new(EventKind::EvenCycleBichromatic, c.edges))
            }),
            Variant::EtaStage { eta } => verify::eta_star(g, col, eta)
                .map(|s| Detected::new(EventKind::EtaStar, s))
                .or_else(|| {
                    let mono = verify::monochromatic_edge_cycle(g, col).map(|c| {
                        let kind = if c.len() % 2 == 0 {
                            EventKind::CycleMonoOrBichromatic
                        } else {
                            EventKind::OddCycleMonochromatic
                        };
                        Detected::new(kind, c.edges)
                    });
                    let alt = verify::alternating_edge_cycle(g, col)
                        .map(|c| Detected::new(EventKind::CycleMonoOrBichromatic, c.edges));
                    [mono, alt].into_iter().flatten().min_by(|a, b| a.key().cmp(&b.key()))
                }),
            Variant::ProperVertex => vertex_edge(g, col),
            Variant::AcyclicVertex => vertex_edge(g, col)
                .or_else(|| self.special_pair())
                .or_else(|| self.induced_c4())
                .or_else(|| path4(g, col)),
            Variant::Star => vertex_edge(g, col)
                .or_else(|| verify::bichromatic_path3(g, col).map(|p| Detected::new(EventKind::Path3, p))),
            Variant::Frugal { beta } => vertex_edge(g, col)
                .or_else(|| verify::frugal_set(g, col, beta).map(|s| Detected::new(EventKind::FrugalSet, s))),
        }
    }

    /// Repairs one violated event by redrawing its scope; `None` once no
    /// event is violated.
    pub fn step(&mut self) -> Option<Detected> {
        let found = self.detect()?;
        for &v in &found.scope {
            self.assignment[v] = self.rng.gen_range(0..self.colors);
        }
        self.log.push(found.kind);
        Some(found)
    }

    /// Steps until nothing is violated or `max_resamples` events have been
    /// redrawn; true on success.
    pub fn run(&mut self, max_resamples: u64) -> bool {
        while self.step().is_some() {
            if self.resamples() >= max_resamples {
                return self.detect().is_none();
            }
        }
        true
    }

    fn special_pair(&self) -> Option<Detected> {
        let col = &self.assignment;
        self.special_list
            .iter()
            .find(|&&(u, v)| col[u] == col[v])
            .map(|&(u, v)| Detected::new(EventKind::SpecialPair, vec![u, v]))
    }

    fn is_special(&self, a: usize, b: usize) -> bool {
        self.special.contains(&(a.min(b), a.max(b)))
    }

    // v1 v2 v3 v4 induced, colored a b a b, neither diagonal special
    fn induced_c4(&self) -> Option<Detected> {
        let g = self.g;
        let col = &self.assignment;
        let mut best: Option<Detected> = None;
        for v2 in 0..g.vertex_count() {
            let nb = g.neighbors(v2);
            for (i, &v1) in nb.iter().enumerate() {
                for &v3 in &nb[i + 1..] {
                    if col[v1] != col[v3] || g.has_edge(v1, v3) || self.is_special(v1, v3) {
                        continue;
                    }
                    for &v4 in g.neighbors(v1) {
                        if v4 == v2
                            || col[v4] != col[v2]
                            || !g.has_edge(v4, v3)
                            || g.has_edge(v2, v4)
                            || self.is_special(v2, v4)
                        {
                            continue;
                        }
                        let d = Detected::new(EventKind::InducedC4, vec![v1, v2, v3, v4]);
                        if best.as_ref().is_none_or(|b| d.scope < b.scope) {
                            best = Some(d);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn into_report(self, valid: bool, violation: Option<Violation>, wall_time: Duration) -> SolveReport {
        SolveReport {
            variant: self.variant.to_string(),
            n: self.g.vertex_count(),
            m: self.g.edge_count(),
            colors: self.colors,
            assignment: self.assignment,
            seed: self.seed,
            resamples: self.log.len() as u64,
            valid,
            restarts: 0,
            log_len: self.log.len(),
            violation,
            wall_time,
        }
    }
}

fn edge_pair(g: &Graph, col: &[usize]) -> Option<Detected> {
    verify::improper_edge_pair(g, col).map(|p| Detected::new(EventKind::AdjacentEdgePair, p.to_vec()))
}

fn vertex_edge(g: &Graph, col: &[usize]) -> Option<Detected> {
    verify::improper_vertex_pair(g, col).map(|p| Detected::new(EventKind::VertexEdge, p.to_vec()))
}

// v0 v1 v2 v3 v4 colored a b a b a
fn path4(g: &Graph, col: &[usize]) -> Option<Detected> {
    let mut best: Option<Detected> = None;
    for v2 in 0..g.vertex_count() {
        let nb = g.neighbors(v2);
        for (i, &v1) in nb.iter().enumerate() {
            for &v3 in &nb[i + 1..] {
                if col[v1] != col[v3] || col[v1] == col[v2] {
                    continue;
                }
                for &v0 in g.neighbors(v1) {
                    if v0 == v2 || v0 == v3 || col[v0] != col[v2] {
                        continue;
                    }
                    for &v4 in g.neighbors(v3) {
                        if v4 == v2 || v4 == v1 || v4 == v0 || col[v4] != col[v2] {
                            continue;
                        }
                        let d = Detected::new(EventKind::Path4, vec![v0, v1, v2, v3, v4]);
                        if best.as_ref().is_none_or(|b| d.scope < b.scope) {
                            best = Some(d);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Resampling for `variant` with palette `colors`. Running out of
/// `max_resamples` yields a report with `valid = false`, not an error; the
/// verdict always comes from the independent verifier.
pub fn resample_solve(g: &Graph, variant: Variant, colors: usize, seed: u64, max_resamples: u64) -> Result<SolveReport> {
    let start = Instant::now();
    let mut r = Resampler::new(g, variant, colors, seed)?;
    r.run(max_resamples);
    let coloring = Coloring::new(variant.target(), colors, r.assignment().to_vec())?;
    let verdict = verify::verify(g, &coloring, variant)?;
    let violation = verdict.violation().cloned();
    Ok(r.into_report(verdict.is_valid(), violation, start.elapsed()))
}
