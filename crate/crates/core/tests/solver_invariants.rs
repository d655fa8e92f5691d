mod common;

use common::small_instances;
use condcolor_core::graph::{self, Graph};
use condcolor_core::solver::{
    chi_r_exact, chi_r_oracle, chromatic_number, lai_lower_bound, lemma1_scan,
};
use condcolor_core::{is_conditional_coloring, SolveOptions, SolveResult};

fn solve(g: &Graph, r: usize) -> SolveResult {
    chi_r_exact(g, r, SolveOptions::default())
        .unwrap()
        .solved()
        .unwrap()
}

#[test]
fn exact_matches_oracle_on_small_graphs() {
    for (name, g) in small_instances() {
        for r in 1..=4 {
            let exact = solve(&g, r).chi;
            let oracle = chi_r_oracle(&g, r).unwrap();
            assert_eq!(exact, oracle, "{name} r={r}");
        }
    }
}

#[test]
fn solved_instances_respect_bounds_and_witnesses() {
    for (name, g) in small_instances() {
        let chi = chromatic_number(&g, SolveOptions::default())
            .unwrap()
            .chi()
            .unwrap();
        let mut previous = 0;
        for r in 1..=5 {
            let res = solve(&g, r);
            assert!(
                is_conditional_coloring(&g, &res.witness, res.chi as u32, r),
                "{name} r={r}"
            );
            assert_eq!(condcolor_core::distinct_colors_used(&res.witness), res.chi);
            assert!(
                chi <= res.chi && res.chi <= g.vertex_count(),
                "{name} r={r}: sandwich"
            );
            assert!(res.chi >= lai_lower_bound(&g, r));
            for bound in &res.lower_bounds {
                assert!(
                    res.chi >= bound.value,
                    "{name} r={r}: {} = {}",
                    bound.name,
                    bound.value
                );
            }
            if let Ok(scan) = lemma1_scan(&g, r) {
                assert!(
                    scan.bound <= res.chi,
                    "{name} r={r}: pair bound {}",
                    scan.bound
                );
            }
            assert!(previous <= res.chi, "{name}: not monotone at r={r}");
            previous = res.chi;
        }
    }
}

#[test]
fn runs_are_deterministic_across_modes() {
    let cases = [
        (graph::cycle_square(10).unwrap(), 4),
        (graph::web(2, 6).unwrap(), 2),
        (graph::strong_grid(3, 3).unwrap(), 8),
        (graph::grid2n(5).unwrap(), 2),
    ];
    for (g, r) in cases {
        let first = solve(&g, r);
        let again = solve(&g, r);
        let parallel = chi_r_exact(
            &g,
            r,
            SolveOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap()
        .solved()
        .unwrap();
        assert_eq!(first.witness, again.witness);
        assert_eq!(first.nodes_explored, again.nodes_explored);
        assert_eq!(first.witness, parallel.witness);
    }
}

#[test]
fn induced_subgraph_can_need_more_colors() {
    let c5 = solve(&graph::cycle(5).unwrap(), 2).chi;
    let w5 = solve(&graph::web(1, 5).unwrap(), 2).chi;
    assert_eq!((c5, w5), (5, 4));
}

#[test]
fn wheels_with_even_rims_need_only_three_colors() {
    for n in [4, 6, 8] {
        let g = graph::web(1, n).unwrap();
        // hub 3, rim alternating 1, 2: every rim vertex sees {3, other}
        let mut colors = vec![3];
        colors.extend((0..n).map(|i| (i % 2) as u32 + 1));
        let c = condcolor_core::Coloring::new(colors, 3).unwrap();
        assert!(is_conditional_coloring(&g, &c, 3, 2));
        assert_eq!(solve(&g, 2).chi, 3);
    }
    assert_eq!(chi_r_oracle(&graph::web(1, 6).unwrap(), 2).unwrap(), 3);
    assert_eq!(solve(&graph::web(2, 4).unwrap(), 2).chi, 4);
}
