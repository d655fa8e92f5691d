//! Lower bounds on `χ_r`.

use serde::Serialize;

use crate::error::{invalid_param, Result};
use crate::graph::{Graph, VertexId};

/// `min(r, Δ) + 1`: a maximum-degree vertex needs `min(r, Δ)` distinct
/// neighbor colors, none equal to its own.
pub fn lai_lower_bound(g: &Graph, r: usize) -> usize {
    r.min(g.max_degree()) + 1
}

/// Size of the largest clique found by greedy extension from each vertex.
/// A lower bound on `χ` and therefore on every `χ_r`.
pub fn greedy_clique_bound(g: &Graph) -> usize {
    (0..g.vertex_count())
        .map(|start| {
            let mut clique = vec![start];
            for &w in g.adj(start) {
                if clique.iter().all(|&u| g.has_edge(u, w)) {
                    clique.push(w);
                }
            }
            clique.len()
        })
        .max()
        .unwrap_or(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Scan {
    pub bound: usize,
    pub witness: Option<(VertexId, VertexId)>,
}

fn without(list: &[VertexId], x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
    list.iter().copied().filter(move |&y| y != x)
}

/// `N(u) \ {v}` is contained in `N(w)` for every `w ∈ N(v) \ {u}`.
/// Membership is literal: a vertex is never in its own neighborhood.
fn dominated_side(g: &Graph, u: VertexId, v: VertexId) -> bool {
    without(g.adj(v), u).all(|w| without(g.adj(u), v).all(|x| g.has_edge(w, x)))
}

/// Largest `d(u) + d(v)` over adjacent pairs with `d(u), d(v) <= r` whose
/// neighborhoods satisfy the two containment conditions; 0 if none qualify.
///
/// Requires `r <= Δ`.
pub fn lemma1_scan(g: &Graph, r: usize) -> Result<Lemma1Scan> {
    if r > g.max_degree() {
        return Err(invalid_param(format!(
            "pair bound needs r <= max degree ({} > {})",
            r,
            g.max_degree()
        )));
    }
    let mut best = Lemma1Scan {
        bound: 0,
        witness: None,
    };
    for (u, v) in g.edges() {
        let (du, dv) = (g.adj(u).len(), g.adj(v).len());
        if du > r || dv > r {
            continue;
        }
        if dominated_side(g, u, v) && dominated_side(g, v, u) && du + dv > best.bound {
            best = Lemma1Scan {
                bound: du + dv,
                witness: Some((u, v)),
            };
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lai_bound: usize,
    pub chromatic_lb: Option<usize>,
    pub lemma1_bound: usize,
    pub lemma1_witness: Option<(VertexId, VertexId)>,
}

impl BoundReport {
    pub fn best(&self) -> usize {
        self.lai_bound
            .max(self.chromatic_lb.unwrap_or(0))
            .max(self.lemma1_bound)
    }
}

pub fn bound_report(g: &Graph, r: usize) -> BoundReport {
    let scan = lemma1_scan(g, r).unwrap_or(Lemma1Scan {
        bound: 0,
        witness: None,
    });
    BoundReport {
        lai_bound: lai_lower_bound(g, r),
        chromatic_lb: Some(greedy_clique_bound(g)),
        lemma1_bound: scan.bound,
        lemma1_witness: scan.witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn lai_examples() {
        let c10 = graph::cycle_square(10).unwrap();
        assert_eq!(lai_lower_bound(&c10, 4), 5);
        assert_eq!(lai_lower_bound(&c10, 3), 4);
        assert_eq!(lai_lower_bound(&graph::path(5).unwrap(), 9), 3);
    }

    #[test]
    fn lemma1_on_ladder_corners() {
        let g = graph::grid2n(5).unwrap();
        let scan = lemma1_scan(&g, 2).unwrap();
        assert_eq!(scan.bound, 4);
        let (u, v) = scan.witness.unwrap();
        assert_eq!((g.degree(u).unwrap(), g.degree(v).unwrap()), (2, 2));
        assert!([(0, 5), (4, 9)].contains(&(u, v)));
    }

    #[test]
    fn lemma1_on_c4() {
        let scan = lemma1_scan(&graph::cycle(4).unwrap(), 2).unwrap();
        assert_eq!(scan.bound, 4);
    }

    #[test]
    fn lemma1_clique_does_not_qualify() {
        // a common neighbor w of u and v would have to be adjacent to itself
        let scan = lemma1_scan(&graph::complete(5).unwrap(), 4).unwrap();
        assert_eq!(
            scan,
            Lemma1Scan {
                bound: 0,
                witness: None
            }
        );
    }

    #[test]
    fn lemma1_requires_r_at_most_delta() {
        assert!(lemma1_scan(&graph::cycle(6).unwrap(), 3).is_err());
    }

    #[test]
    fn clique_bound() {
        assert_eq!(greedy_clique_bound(&graph::complete(6).unwrap()), 6);
        assert_eq!(greedy_clique_bound(&graph::cycle(6).unwrap()), 2);
        assert_eq!(greedy_clique_bound(&graph::strong_grid(3, 4).unwrap()), 4);
    }
}
