//! Proper edge coloring with at most `Δ + 1` colors by fan rotation and
//! alternating-path inversion, followed by a pass that tries to empty the
//! last color class with Kempe-chain swaps.

use crate::coloring::{Coloring, Target};
use crate::graph::Graph;

struct EdgeColorer<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    // at[v][c] = edge at v colored c
    at: Vec<Vec<Option<usize>>>,
}

impl<'a> EdgeColorer<'a> {
    fn new(g: &'a Graph, palette: usize) -> Self {
        EdgeColorer {
            g,
            colors: vec![None; g.edge_count()],
            at: vec![vec![None; palette]; g.vertex_count()],
        }
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.g.edge(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free_color(&self, v: usize) -> usize {
        self.at[v].iter().position(Option::is_none).expect("a vertex of degree <= Δ has a free color among Δ + 1")
    }

    fn uncolor(&mut self, e: usize) {
        if let Some(c) = self.colors[e].take() {
            let (u, v) = self.g.edge(e);
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    fn paint(&mut self, e: usize, c: usize) {
        let (u, v) = self.g.edge(e);
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.colors[e] = Some(c);
        self.at[u][c] = Some(e);
        self.at[v][c] = Some(e);
    }

    fn recolor_all(&mut self, changes: &[(usize, usize)]) {
        for &(e, _) in changes {
            self.uncolor(e);
        }
        for &(e, c) in changes {
            self.paint(e, c);
        }
    }

    // Edges of the maximal path from `start` whose colors alternate first, second, first, ...
    fn alternating_path(&self, start: usize, first: usize, second: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let (mut v, mut want) = (start, first);
        while let Some(e) = self.at[v][want] {
            if path.contains(&e) {
                break;
            }
            path.push(e);
            v = self.other(e, v);
            want = if want == first { second } else { first };
        }
        path
    }

    // Fan at u starting with the uncolored edge e = (u, v): each next edge's
    // color is free at the previous fan vertex.
    fn maximal_fan(&self, u: usize, e: usize) -> Vec<usize> {
        let mut fan = vec![e];
        let mut last = self.other(e, u);
        let mut rest: Vec<usize> = self.g.incident(u).iter().map(|&(_, f)| f).filter(|&f| f != e).collect();
        loop {
            let next = rest.iter().position(|&f| self.colors[f].is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(i) => {
                    let f = rest.remove(i);
                    last = self.other(f, u);
                    fan.push(f);
                }
                None => return fan,
            }
        }
    }

    fn color_edge(&mut self, e: usize) {
        let (u, _) = self.g.edge(e);
        let fan = self.maximal_fan(u, e);
        let c = self.free_color(u);
        let d = self.free_color(self.other(*fan.last().expect("fan is nonempty"), u));
        // invert the d/c path from u, so d becomes free at u
        let path = self.alternating_path(u, d, c);
        let flipped: Vec<(usize, usize)> = path
            .iter()
            .map(|&f| (f, if self.colors[f] == Some(c) { d } else { c }))
            .collect();
        self.recolor_all(&flipped);
        let w = fan
            .iter()
            .position(|&f| self.is_free(self.other(f, u), d))
            .expect("some fan vertex has d free after the inversion");
        let mut rotation: Vec<(usize, usize)> = (0..w)
            .map(|i| (fan[i], self.colors[fan[i + 1]].expect("fan edges after the first are colored")))
            .collect();
        rotation.push((fan[w], d));
        self.recolor_all(&rotation);
    }

    // Moves an edge off color `top` when a Kempe swap frees a lower color at
    // both ends.
    fn lower(&mut self, e: usize, top: usize) -> bool {
        let (u, v) = self.g.edge(e);
        let free_u: Vec<usize> = (0..top).filter(|&c| self.is_free(u, c)).collect();
        let free_v: Vec<usize> = (0..top).filter(|&c| self.is_free(v, c)).collect();
        if let Some(&c) = free_u.iter().find(|c| free_v.contains(c)) {
            self.uncolor(e);
            self.paint(e, c);
            return true;
        }
        for &a in &free_u {
            for &b in &free_v {
                // swapping the a/b chain at v frees a there unless it ends at u
                let path = self.alternating_path(v, a, b);
                let ends_at_u = path.iter().any(|&f| {
                    let (x, y) = self.g.edge(f);
                    x == u || y == u
                });
                if ends_at_u {
                    continue;
                }
                let flipped: Vec<(usize, usize)> = path
                    .iter()
                    .map(|&f| (f, if self.colors[f] == Some(a) { b } else { a }))
                    .collect();
                self.recolor_all(&flipped);
                self.uncolor(e);
                self.paint(e, a);
                return true;
            }
        }
        false
    }
}

/// A proper edge coloring with palette `Δ + 1`; the last color is avoided
/// where the local swaps allow it.
pub fn vizing_proper_edge_coloring(g: &Graph) -> Coloring {
    let delta = g.max_degree();
    let palette = delta + 1;
    let mut colorer = EdgeColorer::new(g, palette);
    for e in 0..g.edge_count() {
        colorer.color_edge(e);
    }
    if delta > 0 {
        for e in 0..g.edge_count() {
            if colorer.colors[e] == Some(delta) {
                colorer.lower(e, delta);
            }
        }
    }
    let assignment = colorer.colors.into_iter().map(|c| c.expect("every edge is colored")).collect();
    Coloring::new(Target::Edges, palette.max(1), assignment).expect("colors are below Δ + 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Variant;
    use crate::generate;
    use crate::verify::verify;

    fn check(g: &Graph) -> Coloring {
        let c = vizing_proper_edge_coloring(g);
        assert!(verify(g, &c, Variant::ProperEdge).unwrap().is_valid());
        assert!(c.used_colors() <= g.max_degree() + 1);
        c
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&generate::cycle(5).unwrap()).used_colors(), 3);
        assert_eq!(check(&generate::cycle(6).unwrap()).used_colors(), 2);
        assert_eq!(check(&generate::complete(4).unwrap()).used_colors(), 3);
        assert_eq!(check(&generate::hypercube(3).unwrap()).used_colors(), 3);
        assert_eq!(check(&generate::petersen()).used_colors(), 4);
    }

    #[test]
    fn random_regular_graphs() {
        for seed in 0..20 {
            check(&generate::random_regular(40, 5, seed).unwrap());
            check(&generate::random_regular(30, 3, seed).unwrap());
        }
        check(&generate::complete(9).unwrap());
        check(&generate::complete(10).unwrap());
        check(&Graph::new(3, []).unwrap());
    }
}
