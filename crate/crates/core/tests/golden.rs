use condcolor_core::constructions::strong_grid_coloring;
use condcolor_core::graph;
use condcolor_core::is_conditional_coloring;

/// Rows top to bottom as drawn: the last line is row 0.
fn render(n: usize, m: usize, r: usize) -> String {
    let cc = strong_grid_coloring(n, m, r).unwrap();
    let g = graph::strong_grid(n, m).unwrap();
    assert!(is_conditional_coloring(&g, &cc.coloring, cc.claimed_k, r));
    let mut out = String::new();
    for row in (0..n).rev() {
        let cells: Vec<String> = (0..m)
            .map(|col| cc.coloring.color(row * m + col).to_string())
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[test]
fn strong_grid_2_by_11() {
    assert_eq!(render(2, 11, 5), include_str!("golden/fig2.txt"));
}

#[test]
fn strong_grid_5_by_11() {
    assert_eq!(render(5, 11, 8), include_str!("golden/fig3.txt"));
}
