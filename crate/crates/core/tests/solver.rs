use lllcolor_core::generate;
use lllcolor_core::solver::{recolor_delta_plus_2, resample_solve};
use lllcolor_core::{Graph, Variant};

fn successes(g: &Graph, variant: Variant, colors: usize, budget: u64) -> usize {
    (0..20).filter(|&seed| resample_solve(g, variant, colors, seed, budget).unwrap().valid).count()
}

// success rates over 20 seeds should not fall as colors are added; one
// inversion is tolerated
fn assert_monotone(g: &Graph, variant: Variant, range: std::ops::RangeInclusive<usize>, budget: u64) {
    let rates: Vec<usize> = range.map(|n| successes(g, variant, n, budget)).collect();
    let inversions = rates.windows(2).filter(|w| w[1] < w[0]).count();
    assert!(inversions <= 1, "{variant}: {rates:?}");
    assert!(rates.last() > rates.first(), "{variant}: {rates:?} never improves");
}

#[test]
fn success_rate_grows_with_colors() {
    let petersen = generate::petersen();
    assert_monotone(&petersen, Variant::Star, 4..=9, 300);
    assert_monotone(&petersen, Variant::AcyclicVertex, 3..=7, 300);
    let cubic = generate::random_regular(16, 3, 7).unwrap();
    assert_monotone(&cubic, Variant::AcyclicEdge, 3..=7, 300);
}

#[test]
fn four_regular_graphs_at_twenty_nine_colors() {
    for seed in 0..20 {
        let g = generate::random_regular(50, 4, seed).unwrap();
        let r = resample_solve(&g, Variant::AcyclicEdge, 29, seed, 100_000).unwrap();
        assert!(r.valid, "seed {seed}");
        assert!(r.resamples <= 100_000);
    }
}

#[test]
fn recoloring_pipeline_on_large_girth() {
    let g = generate::subdivide(&generate::complete(4).unwrap(), 134).unwrap();
    for seed in 0..3 {
        let r = recolor_delta_plus_2(&g, seed, 20).unwrap();
        assert!(r.valid);
        assert!(r.colors <= 5);
    }
}

#[test]
fn failures_are_reports() {
    let g = generate::complete(5).unwrap();
    let r = resample_solve(&g, Variant::AcyclicVertex, 3, 0, 100).unwrap();
    assert!(!r.valid);
    assert_eq!(r.resamples, 100);
    assert!(r.violation.is_some());
}
