//! Brute-force `χ_r` for cross-checking the exact solver on tiny graphs.
//!
//! Enumerates assignments `V -> {1..k}` for `k = 1, 2, ...` in lexicographic
//! order. The only pruning is rejecting a vertex whose color repeats an
//! already-assigned neighbor; the neighborhood condition is checked on
//! complete assignments with a fresh set per vertex. Shares no code with
//! the verifier or the exact solver.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORACLE_VERTICES: usize = 10;

pub fn chi_r_oracle(g: &Graph, r: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.adj(v).to_vec()).collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if extend(&adj, r, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    Ok(n)
}

fn extend(adj: &[Vec<usize>], r: usize, k: usize, v: usize, colors: &mut [usize]) -> bool {
    if v == colors.len() {
        return neighborhoods_ok(adj, r, colors);
    }
    for c in 1..=k {
        if adj[v].iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if extend(adj, r, k, v + 1, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

fn neighborhoods_ok(adj: &[Vec<usize>], r: usize, colors: &[usize]) -> bool {
    adj.iter().all(|nbrs| {
        let seen: HashSet<usize> = nbrs.iter().map(|&w| colors[w]).collect();
        seen.len() >= r.min(nbrs.len())
    })
}
