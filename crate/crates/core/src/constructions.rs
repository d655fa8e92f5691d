//! Closed-form conditional colorings for the studied families.
//!
//! Each colorer returns the coloring together with the `(k, r)` pair it is
//! claimed to satisfy and a short tag naming the theorem case it comes from.
//! Nothing here checks its own output; callers run the verifier (the sweep
//! harness and `construct` command always do).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coloring::{Color, Coloring};
use crate::error::{invalid_param, Error, Result};
use crate::family::FamilySpec;
use crate::graph::web_index;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimedColoring {
    pub coloring: Coloring,
    pub claimed_k: Color,
    pub claimed_r: usize,
    pub source: &'static str,
}

impl ClaimedColoring {
    fn new(colors: Vec<Color>, claimed_k: Color, claimed_r: usize, source: &'static str) -> Self {
        let coloring =
            Coloring::new(colors, claimed_k).expect("construction stays inside its palette");
        ClaimedColoring {
            coloring,
            claimed_k,
            claimed_r,
            source,
        }
    }

    /// Whether the claim speaks for order `r` on a graph of maximum degree
    /// `delta` (validity at `r >= delta` implies validity at every order).
    pub fn covers(&self, r: usize, delta: usize) -> bool {
        r <= self.claimed_r || self.claimed_r >= delta
    }
}

/// `P_2 □ P_n`, vertex `(row, col)` at index `row * n + col`: row 0 repeats
/// `1,2,3,4`, row 1 repeats `3,4,1,2`.
pub fn grid2n_coloring(n: usize) -> Result<ClaimedColoring> {
    if n < 2 {
        return Err(invalid_param("grid2n coloring needs n >= 2"));
    }
    let colors = (0..2)
        .flat_map(|row| (0..n).map(move |col| ((col + 2 * row) % 4) as Color + 1))
        .collect();
    let delta = if n == 2 { 2 } else { 3 };
    Ok(ClaimedColoring::new(colors, 4, delta, "prop1"))
}

/// `χ(C_n^2)`: `n` for the complete cases `n <= 5`, otherwise 3 when `3 | n`, else 4.
pub fn cycle_square_chromatic(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(invalid_param("cycle square needs n >= 3")),
        3..=5 => Ok(n),
        _ if n.is_multiple_of(3) => Ok(3),
        _ => Ok(4),
    }
}

/// Overwrite tables for the `r = 3` pattern, keyed by `n - i` (1-based `i`).
const R3_TAIL_MOD4_1: [(usize, Color); 5] = [(4, 2), (3, 1), (2, 3), (1, 2), (0, 4)];
const R3_TAIL_MOD4_2: [(usize, Color); 7] =
    [(6, 1), (5, 4), (4, 2), (3, 1), (2, 3), (1, 2), (0, 4)];

/// Values of `n` excluded from the cycle-square result.
pub const CYCLE_SQUARE_EXCLUDED: [usize; 3] = [13, 14, 19];

/// Splice point for the 6-coloring when `n ≢ 0 (mod 5)`; may be `<= 0`.
pub fn cycle_square_splice(n: usize) -> i64 {
    n as i64 + 1 - 6 * (n % 5) as i64
}

/// Colorings of `C_n^2` for `r = 3` (`n ≢ 3 mod 4`) and `r >= 4` (`n > 9`).
pub fn cycle_square_coloring(n: usize, r: usize) -> Result<ClaimedColoring> {
    if n < 3 {
        return Err(invalid_param("cycle square needs n >= 3"));
    }
    match r {
        0 => Err(invalid_param("r must be >= 1")),
        1 | 2 => Err(Error::UnsupportedCase(format!(
            "C_{n}^2 at r={r}: chi_r = chi(C_n^2) = {}, no closed-form coloring; use the solver",
            cycle_square_chromatic(n)?
        ))),
        3 => cycle_square_r3(n),
        _ => cycle_square_r4(n, r),
    }
}

fn cycle_square_r3(n: usize) -> Result<ClaimedColoring> {
    if n % 4 == 3 {
        return Err(Error::UnsupportedCase(format!(
            "C_{n}^2 at r=3 with n ≡ 3 (mod 4) has no claimed value; use the solver"
        )));
    }
    if n == 5 {
        return Err(Error::UnsupportedCase(
            "C_5^2 is K_5 (chi_r = 5); the 4-color pattern does not apply".into(),
        ));
    }
    let mut colors: Vec<Color> = (0..n).map(|i| (i % 4) as Color + 1).collect();
    let (tail, source): (&[(usize, Color)], _) = match n % 4 {
        1 => (&R3_TAIL_MOD4_1, "thm1-case3-mod4-1"),
        2 => (&R3_TAIL_MOD4_2, "thm1-case3-mod4-2"),
        _ => (&[], "thm1-case3-mod4-0"),
    };
    for &(offset, color) in tail {
        // v_{n-offset}; offsets reaching below v_1 (only when n = 6) are skipped
        if offset < n {
            colors[n - offset - 1] = color;
        }
    }
    Ok(ClaimedColoring::new(colors, 4, 3, source))
}

fn cycle_square_r4(n: usize, r: usize) -> Result<ClaimedColoring> {
    if CYCLE_SQUARE_EXCLUDED.contains(&n) {
        return Err(Error::ExcludedCase(format!(
            "C_{n}^2 at r={r}: n = 13, 14 and 19 are excluded from the theorem"
        )));
    }
    if n <= 9 {
        return Err(Error::UnsupportedCase(format!(
            "C_{n}^2 at r={r}: chi_r = n for n <= 9, no pattern to construct; use the solver"
        )));
    }
    if n.is_multiple_of(5) {
        let colors = (0..n).map(|i| (i % 5) as Color + 1).collect();
        return Ok(ClaimedColoring::new(colors, 5, r, "thm1-case5"));
    }
    let l = cycle_square_splice(n);
    if l < 1 {
        return Err(Error::ExcludedCase(format!(
            "C_{n}^2: splice point l = {l} < 1"
        )));
    }
    let l = l as usize;
    let colors = (1..=n)
        .map(|i| {
            if i < l {
                ((i - 1) % 5) as Color + 1
            } else {
                ((i - l) % 6) as Color + 1
            }
        })
        .collect();
    Ok(ClaimedColoring::new(colors, 6, r, "thm1-case6"))
}

/// `Δ(P_n ⊗ P_m)` for `n, m >= 2`.
pub fn strong_grid_delta(n: usize, m: usize) -> usize {
    match (n.min(m), n.max(m)) {
        (2, 2) => 3,
        (2, _) => 5,
        _ => 8,
    }
}

/// Colorings of `P_n ⊗ P_m` (vertex `(row, col)` at `row * m + col`).
///
/// `r <= 3`: `(col mod 2) + 2 (row mod 2) + 1`. `r >= Δ`: `(col mod 3) +
/// 3 (row mod 3) + 1`, compacted onto `1..=Δ+1`; on `P_2 ⊗ P_2` the rainbow.
pub fn strong_grid_coloring(n: usize, m: usize, r: usize) -> Result<ClaimedColoring> {
    if n < 2 || m < 2 {
        return Err(invalid_param("strong grid coloring needs n, m >= 2"));
    }
    let delta = strong_grid_delta(n, m);
    let cell = |f: &dyn Fn(usize, usize) -> Color| -> Vec<Color> {
        (0..n)
            .flat_map(|row| (0..m).map(move |col| (row, col)))
            .map(|(row, col)| f(row, col))
            .collect()
    };
    if r <= 3 {
        let colors = cell(&|row, col| (col % 2 + 2 * (row % 2)) as Color + 1);
        return Ok(ClaimedColoring::new(colors, 4, 3, "thm2-case1"));
    }
    if r < delta {
        return Err(Error::UnsupportedCase(format!(
            "P_{n} ⊗ P_{m} at r={r}: only r <= 3 and r = Δ = {delta} are covered; use the solver"
        )));
    }
    if delta == 3 {
        return Ok(ClaimedColoring::new(
            vec![1, 2, 3, 4],
            4,
            delta,
            "thm2-case2-k4",
        ));
    }
    let raw = Coloring::from_colors(cell(&|row, col| (col % 3 + 3 * (row % 3)) as Color + 1))?;
    let compact = raw.compacted();
    Ok(ClaimedColoring::new(
        compact.colors().to_vec(),
        delta as Color + 1,
        delta,
        "thm2-case2",
    ))
}

fn repeat(seq: &[Color], len: usize) -> impl Iterator<Item = Color> + '_ {
    seq.iter().copied().cycle().take(len)
}

/// Ring `ring` (1-based) of the `(t, n)`-web 4-coloring, in position order.
fn web_ring(ring: usize, n: usize) -> Vec<Color> {
    let block = 4 * (n / 4);
    let mut out: Vec<Color> = match (n % 4, ring, ring.is_multiple_of(2)) {
        (0, 1, _) => repeat(&[1, 2, 1, 3], n).collect(),
        (0, _, true) => repeat(&[3, 1, 4, 2], n).collect(),
        (0, _, false) => repeat(&[1, 4, 2, 3], n).collect(),

        (1, 1, _) => repeat(&[1, 2], block).chain([3]).collect(),
        (1, _, true) => repeat(&[3, 1, 2, 4], block).chain([1]).collect(),
        (1, _, false) => repeat(&[4, 2, 3, 1], block).chain([3]).collect(),

        (2, 1, _) => repeat(&[1, 2], block).chain([1, 3]).collect(),
        (2, _, true) => repeat(&[3, 4, 2, 1], block).chain([4, 2]).collect(),
        (2, _, false) => repeat(&[1, 2, 3, 4], block).chain([2, 3]).collect(),

        (_, 1, _) => repeat(&[1, 2], block + 2).chain([3]).collect(),
        (_, _, true) => repeat(&[2, 3, 4, 1], n).collect(),
        (_, _, false) => repeat(&[3, 1, 2, 4], block).chain([3, 2, 1]).collect(),
    };
    out.truncate(n);
    out
}

/// 4-coloring of the `(t, n)`-web graph claimed to be a conditional
/// `(4, 2)`-coloring: hub gets 4, rings follow residue-class sequences.
pub fn web_dynamic_coloring(t: usize, n: usize) -> Result<ClaimedColoring> {
    if t < 1 || n < 3 {
        return Err(invalid_param("web coloring needs t >= 1 and n >= 3"));
    }
    let mut colors = vec![0; 1 + t * n];
    colors[0] = 4;
    for ring in 1..=t {
        for (pos, c) in web_ring(ring, n).into_iter().enumerate() {
            colors[web_index(n, ring, pos + 1)] = c;
        }
    }
    let source = ["thm3-case1", "thm3-case2", "thm3-case3", "thm3-case4"][n % 4];
    Ok(ClaimedColoring::new(colors, 4, 2, source))
}

/// Routes a family instance and order `r` to its closed-form coloring.
pub fn construct(spec: &FamilySpec, r: usize) -> Result<ClaimedColoring> {
    if r < 1 {
        return Err(invalid_param("r must be >= 1"));
    }
    match *spec {
        FamilySpec::Grid2n { n } => grid2n_coloring(n),
        FamilySpec::CycleSquare { n } => cycle_square_coloring(n, r),
        FamilySpec::StrongGrid { n, m } => strong_grid_coloring(n, m, r),
        FamilySpec::Web { t, n } if r <= 2 => web_dynamic_coloring(t, n),
        FamilySpec::Wheel { n } if r <= 2 => web_dynamic_coloring(1, n),
        FamilySpec::Web { .. } | FamilySpec::Wheel { .. } => Err(Error::UnsupportedCase(format!(
            "{spec} at r={r}: only the r = 2 coloring is known; use the solver"
        ))),
        _ => Err(Error::UnsupportedCase(format!(
            "no closed-form coloring for {spec}; use the solver"
        ))),
    }
}

/// One errata record: a place where a literal transcription needed, or
/// could not be given, an adjustment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrataEntry {
    pub family: String,
    /// Integer parameters; a list value stands for every listed instance.
    pub params: Value,
    pub case: String,
    pub deviation_description: String,
    pub verified: bool,
}

const ERRATA_JSON: &str = include_str!("../data/errata.json");

pub fn errata() -> Vec<ErrataEntry> {
    serde_json::from_str(ERRATA_JSON).expect("bundled errata table parses")
}

pub fn errata_json() -> &'static str {
    ERRATA_JSON
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_conditional, CondParams};
    use crate::graph;

    fn valid(g: &graph::Graph, cc: &ClaimedColoring, r: usize) -> bool {
        let p = CondParams::new(cc.claimed_k, r).unwrap();
        verify_conditional(g, &cc.coloring, p, false)
            .unwrap()
            .is_valid()
    }

    #[test]
    fn grid2n_rows() {
        let cc = grid2n_coloring(4).unwrap();
        assert_eq!(cc.coloring.colors(), &[1, 2, 3, 4, 3, 4, 1, 2]);
        let cc = grid2n_coloring(2).unwrap();
        assert_eq!(cc.coloring.colors(), &[1, 2, 3, 4]);
        let g = graph::grid2n(9).unwrap();
        assert!(valid(&g, &grid2n_coloring(9).unwrap(), 3));
        assert!(grid2n_coloring(1).is_err());
    }

    #[test]
    fn grid2n_is_period_four() {
        let n = 17;
        let c = grid2n_coloring(n).unwrap().coloring;
        for col in 0..n - 4 {
            assert_eq!(c.color(col), c.color(col + 4));
            assert_eq!(c.color(n + col), c.color(n + col + 4));
        }
    }

    #[test]
    fn cycle_square_examples() {
        assert_eq!(
            cycle_square_coloring(8, 3).unwrap().coloring.colors(),
            &[1, 2, 3, 4, 1, 2, 3, 4]
        );
        let c10 = cycle_square_coloring(10, 4).unwrap();
        assert_eq!(c10.coloring.colors(), &[1, 2, 3, 4, 5, 1, 2, 3, 4, 5]);
        assert_eq!(c10.claimed_k, 5);
        let c12 = cycle_square_coloring(12, 4).unwrap();
        assert_eq!(cycle_square_splice(12), 1);
        assert_eq!(c12.coloring.colors(), &[1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6]);
        assert!(valid(&graph::cycle_square(12).unwrap(), &c12, 4));
    }

    #[test]
    fn cycle_square_tail_tables() {
        // n = 9: v5..v9 overwritten with 2,1,3,2,4
        let c9 = cycle_square_coloring(9, 3).unwrap();
        assert_eq!(c9.coloring.colors(), &[1, 2, 3, 4, 2, 1, 3, 2, 4]);
        // n = 10: v4..v10 overwritten with 1,4,2,1,3,2,4
        let c10 = cycle_square_coloring(10, 3).unwrap();
        assert_eq!(c10.coloring.colors(), &[1, 2, 3, 1, 4, 2, 1, 3, 2, 4]);
    }

    #[test]
    fn cycle_square_regimes() {
        assert!(matches!(
            cycle_square_coloring(13, 4),
            Err(Error::ExcludedCase(_))
        ));
        assert!(matches!(
            cycle_square_coloring(19, 5),
            Err(Error::ExcludedCase(_))
        ));
        assert!(matches!(
            cycle_square_coloring(11, 3),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            cycle_square_coloring(8, 4),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            cycle_square_coloring(10, 2),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            cycle_square_coloring(5, 3),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(cycle_square_coloring(2, 3).is_err());
    }

    #[test]
    fn splice_is_negative_exactly_at_exclusions() {
        let bad: Vec<usize> = (10..200)
            .filter(|n| n % 5 != 0 && cycle_square_splice(*n) < 1)
            .collect();
        assert_eq!(bad, CYCLE_SQUARE_EXCLUDED.to_vec());
    }

    #[test]
    fn chromatic_formula() {
        assert_eq!(cycle_square_chromatic(9).unwrap(), 3);
        assert_eq!(cycle_square_chromatic(10).unwrap(), 4);
        assert_eq!(cycle_square_chromatic(5).unwrap(), 5);
        assert!(cycle_square_chromatic(2).is_err());
    }

    #[test]
    fn strong_grid_examples() {
        let cc = strong_grid_coloring(2, 11, 5).unwrap();
        assert_eq!(cc.claimed_k, 6);
        assert_eq!(&cc.coloring.colors()[..4], &[1, 2, 3, 1]);
        assert_eq!(&cc.coloring.colors()[11..15], &[4, 5, 6, 4]);
        let cc = strong_grid_coloring(3, 3, 2).unwrap();
        assert_eq!(cc.coloring.colors(), &[1, 2, 1, 3, 4, 3, 1, 2, 1]);
        let k4 = strong_grid_coloring(2, 2, 3).unwrap();
        assert_eq!(k4.coloring.colors(), &[1, 2, 3, 4]);
        assert!(matches!(
            strong_grid_coloring(4, 6, 5),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(strong_grid_coloring(1, 6, 2).is_err());
    }

    #[test]
    fn strong_grid_narrow_side_is_compacted() {
        let cc = strong_grid_coloring(6, 2, 5).unwrap();
        assert_eq!(cc.claimed_k, 6);
        assert!(cc.coloring.colors().iter().all(|&c| c <= 6));
        assert!(valid(&graph::strong_grid(6, 2).unwrap(), &cc, 5));
    }

    #[test]
    fn web_examples() {
        let cc = web_dynamic_coloring(1, 4).unwrap();
        assert_eq!(cc.coloring.colors(), &[4, 1, 2, 1, 3]);
        let cc = web_dynamic_coloring(3, 4).unwrap();
        assert_eq!(
            &cc.coloring.colors()[1..],
            &[1, 2, 1, 3, 3, 1, 4, 2, 1, 4, 2, 3]
        );
        let k4 = web_dynamic_coloring(1, 3).unwrap();
        let mut seen = k4.coloring.colors().to_vec();
        seen.sort_unstable();
        assert_eq!(seen, vec![1, 2, 3, 4]);
        assert!(web_dynamic_coloring(0, 5).is_err());
    }

    #[test]
    fn web_rings_have_length_n() {
        for n in 3..30 {
            for ring in 1..5 {
                assert_eq!(web_ring(ring, n).len(), n);
            }
        }
    }

    #[test]
    fn dispatcher_routes() {
        assert_eq!(
            construct(&FamilySpec::Wheel { n: 6 }, 2).unwrap().source,
            "thm3-case3"
        );
        assert!(matches!(
            construct(&FamilySpec::Web { t: 2, n: 6 }, 3),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            construct(&FamilySpec::Cycle { n: 6 }, 2),
            Err(Error::UnsupportedCase(_))
        ));
    }

    #[test]
    fn errata_table_parses() {
        let table = errata();
        assert!(!table.is_empty());
        assert!(table
            .iter()
            .all(|e| !e.case.is_empty() && !e.deviation_description.is_empty()));
    }
}
