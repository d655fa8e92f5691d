use condcolor_core::graph::{self, Graph};

/// Every family instance with at most 9 vertices used for cross-checking.
pub fn small_instances() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=9 {
        out.push((format!("path({n})"), graph::path(n).unwrap()));
    }
    for n in 3..=9 {
        out.push((format!("cycle({n})"), graph::cycle(n).unwrap()));
        out.push((
            format!("cycle_square({n})"),
            graph::cycle_square(n).unwrap(),
        ));
    }
    for n in 2..=4 {
        out.push((format!("grid2n({n})"), graph::grid2n(n).unwrap()));
        out.push((
            format!("strong_grid(2,{n})"),
            graph::strong_grid(2, n).unwrap(),
        ));
    }
    for n in 3..=8 {
        out.push((format!("web(1,{n})"), graph::web(1, n).unwrap()));
    }
    out.push(("web(2,3)".into(), graph::web(2, 3).unwrap()));
    out.push(("web(2,4)".into(), graph::web(2, 4).unwrap()));
    out
}
