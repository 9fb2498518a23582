//! Splitting each color class of a stage-one coloring into `η` proper
//! subcolors.

use std::collections::VecDeque;

use crate::coloring::{Coloring, Target, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify;

/// Turns a coloring with the stage-one property for `eta` into a proper
/// acyclic edge coloring with `eta · N` colors: every color class is a
/// forest of maximum degree at most `eta`, colored by BFS with `eta`
/// subcolors. Color `k` with subcolor `s` becomes `k · eta + s`.
pub fn expand_eta_coloring(g: &Graph, c: &Coloring, eta: usize) -> Result<Coloring> {
    let variant = Variant::EtaStage { eta };
    if eta == 0 {
        return Err(Error::Domain("eta must be positive".into()));
    }
    if let Some(v) = verify::verify(g, c, variant)?.violation() {
        return Err(Error::Precondition(format!("not a stage-one coloring for eta = {eta}: {}", v.description)));
    }
    let m = g.edge_count();
    let mut sub: Vec<Option<usize>> = vec![None; m];
    let mut seen = vec![false; g.vertex_count()];
    for class in 0..c.palette {
        seen.iter_mut().for_each(|s| *s = false);
        let in_class = |e: usize| c.assignment[e] == class;
        for root in 0..g.vertex_count() {
            if seen[root] || !g.incident(root).iter().any(|&(_, e)| in_class(e)) {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([(root, None::<usize>)]);
            while let Some((v, parent_sub)) = queue.pop_front() {
                let mut next = (0..eta).filter(|&s| Some(s) != parent_sub);
                for &(w, e) in g.incident(v) {
                    if !in_class(e) || sub[e].is_some() {
                        continue;
                    }
                    let s = next.next().expect("class degree is at most eta");
                    sub[e] = Some(s);
                    seen[w] = true;
                    queue.push_back((w, Some(s)));
                }
            }
        }
    }
    let assignment = (0..m)
        .map(|e| c.assignment[e] * eta + sub[e].expect("every edge lies in its class forest"))
        .collect();
    let out = Coloring::new(Target::Edges, c.palette * eta, assignment)?;
    if let Some(v) = verify::verify(g, &out, Variant::AcyclicEdge)?.violation() {
        return Err(Error::InvalidColoring(format!("expanded coloring is not acyclic: {}", v.description)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::solver::{resample_solve, DEFAULT_MAX_RESAMPLES};

    #[test]
    fn monochromatic_path_alternates() {
        let g = generate::path(4).unwrap();
        let c = Coloring::new(Target::Edges, 1, vec![0, 0, 0]).unwrap();
        let out = expand_eta_coloring(&g, &c, 2).unwrap();
        assert_eq!(out.palette, 2);
        assert_ne!(out.assignment[0], out.assignment[1]);
        assert_ne!(out.assignment[1], out.assignment[2]);
    }

    #[test]
    fn eta_one_keeps_the_coloring() {
        let g = generate::cycle(5).unwrap();
        let c = Coloring::new(Target::Edges, 3, vec![0, 1, 0, 1, 2]).unwrap();
        assert_eq!(expand_eta_coloring(&g, &c, 1).unwrap(), c);
    }

    #[test]
    fn precondition_is_checked() {
        let g = generate::cycle(4).unwrap();
        let c = Coloring::new(Target::Edges, 2, vec![0, 0, 0, 0]).unwrap();
        assert!(matches!(expand_eta_coloring(&g, &c, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn petersen_stage_one_expands() {
        let g = generate::petersen();
        let r = resample_solve(&g, Variant::EtaStage { eta: 2 }, 7, 11, DEFAULT_MAX_RESAMPLES).unwrap();
        assert!(r.valid);
        let c = r.coloring(Target::Edges).unwrap();
        let out = expand_eta_coloring(&g, &c, 2).unwrap();
        assert!(out.palette <= 14);
    }
}
