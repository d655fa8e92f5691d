//! Colorings and the conditional-coloring checker.
//!
//! A conditional `(k, r)`-coloring is a proper coloring with colors in
//! `1..=k` where every vertex `v` sees at least `min(r, d(v))` distinct colors
//! on its open neighborhood. Surjectivity onto `1..=k` is optional and only
//! enforced in strict mode.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid_param, Error, Result};
use crate::graph::{Graph, VertexId};

pub type Color = u32;

/// Total assignment vertex -> color in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: Color,
    colors: Vec<Color>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: Color,
    colors: Vec<Color>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.colors, raw.k)
    }
}

impl Coloring {
    pub fn new(colors: Vec<Color>, k: Color) -> Result<Self> {
        if k < 1 {
            return Err(invalid_param("palette size k must be >= 1"));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c < 1 || c > k) {
            return Err(Error::InvalidInput(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        Ok(Coloring { k, colors })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        Coloring::new(colors, k)
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Relabels the used colors onto `1..=used`, preserving their order, and
    /// shrinks the palette accordingly.
    pub fn compacted(&self) -> Coloring {
        let used: BTreeSet<Color> = self.colors.iter().copied().collect();
        let mut map = vec![0; self.k as usize + 1];
        for (i, c) in used.iter().enumerate() {
            map[*c as usize] = i as Color + 1;
        }
        Coloring {
            k: used.len().max(1) as Color,
            colors: self.colors.iter().map(|&c| map[c as usize]).collect(),
        }
    }

    /// Applies `perm[c - 1]` to every color; `perm` must be a permutation of `1..=k`.
    pub fn permuted(&self, perm: &[Color]) -> Result<Coloring> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.k).collect::<Vec<_>>() {
            return Err(invalid_param("not a permutation of the palette"));
        }
        Ok(Coloring {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        })
    }
}

pub fn distinct_colors_used(c: &Coloring) -> usize {
    c.colors.iter().collect::<BTreeSet<_>>().len()
}

/// The integers `(k, r)` of a conditional `(k, r)`-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CondParams {
    pub k: Color,
    pub r: usize,
}

impl CondParams {
    pub fn new(k: Color, r: usize) -> Result<Self> {
        if k < 1 || r < 1 {
            return Err(invalid_param(
                "conditional coloring needs k >= 1 and r >= 1",
            ));
        }
        Ok(CondParams { k, r })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Monochromatic edge `(u, v)`, `u < v`.
    Proper {
        u: VertexId,
        v: VertexId,
        color: Color,
    },
    NeighborhoodDeficit {
        vertex: VertexId,
        distinct_found: usize,
        required: usize,
    },
    SurjectivityGap {
        missing: Vec<Color>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Verdict {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn proper_violations(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Proper { .. }))
            .count()
    }

    pub fn deficits(&self) -> impl Iterator<Item = (VertexId, usize, usize)> + '_ {
        self.violations.iter().filter_map(|v| match *v {
            Violation::NeighborhoodDeficit {
                vertex,
                distinct_found,
                required,
            } => Some((vertex, distinct_found, required)),
            _ => None,
        })
    }

    /// Human-readable lines using the graph's family labels.
    pub fn describe(&self, g: &Graph) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| match v {
                Violation::Proper { u, v, color } => format!(
                    "edge {}-{} is monochromatic (color {color})",
                    g.display_name(*u),
                    g.display_name(*v)
                ),
                Violation::NeighborhoodDeficit {
                    vertex,
                    distinct_found,
                    required,
                } => format!(
                    "{} sees {distinct_found} distinct neighbor colors, needs {required}",
                    g.display_name(*vertex)
                ),
                Violation::SurjectivityGap { missing } => {
                    format!("colors {missing:?} unused (strict surjectivity)")
                }
            })
            .collect()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            write!(f, "{} violation(s)", self.violations.len())
        }
    }
}

fn check_len(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "coloring has {} entries, graph has {} vertices",
            c.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

fn proper_violations(g: &Graph, c: &Coloring) -> Vec<Violation> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .map(|(u, v)| Violation::Proper {
            u,
            v,
            color: c.color(u),
        })
        .collect()
}

/// Lists every monochromatic edge.
pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    Ok(Verdict::from_violations(proper_violations(g, c)))
}

/// `|c(N(v))|`.
pub fn neighborhood_colors(g: &Graph, c: &Coloring, v: VertexId) -> usize {
    let mut seen: Vec<Color> = g.adj(v).iter().map(|&w| c.color(w)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Full conditional check: proper edges, per-vertex neighborhood deficits,
/// and (in strict mode) unused palette colors.
///
/// Isolated vertices need `min(r, 0) = 0` colors and never produce a deficit.
pub fn verify_conditional(
    g: &Graph,
    c: &Coloring,
    p: CondParams,
    strict_surjective: bool,
) -> Result<Verdict> {
    check_len(g, c)?;
    if let Some((v, &col)) = c.colors().iter().enumerate().find(|(_, &col)| col > p.k) {
        return Err(Error::InvalidInput(format!(
            "vertex {v} has color {col} exceeding k = {}",
            p.k
        )));
    }
    let mut violations = proper_violations(g, c);
    for v in 0..g.vertex_count() {
        let required = p.r.min(g.adj(v).len());
        let distinct_found = neighborhood_colors(g, c, v);
        if distinct_found < required {
            violations.push(Violation::NeighborhoodDeficit {
                vertex: v,
                distinct_found,
                required,
            });
        }
    }
    if strict_surjective {
        let used: BTreeSet<Color> = c.colors().iter().copied().collect();
        let missing: Vec<Color> = (1..=p.k).filter(|x| !used.contains(x)).collect();
        if !missing.is_empty() {
            violations.push(Violation::SurjectivityGap { missing });
        }
    }
    Ok(Verdict::from_violations(violations))
}

/// Convenience: non-strict validity as a bool.
pub fn is_conditional_coloring(g: &Graph, c: &Coloring, k: Color, r: usize) -> bool {
    CondParams::new(k, r)
        .and_then(|p| verify_conditional(g, c, p, false))
        .is_ok_and(|v| v.is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn col(v: &[Color]) -> Coloring {
        Coloring::from_colors(v.to_vec()).unwrap()
    }

    #[test]
    fn proper_examples() {
        let c4 = graph::cycle(4).unwrap();
        assert!(verify_proper(&c4, &col(&[1, 2, 1, 2])).unwrap().is_valid());
        let k3 = graph::cycle(3).unwrap();
        let verdict = verify_proper(&k3, &col(&[1, 1, 2])).unwrap();
        assert_eq!(
            verdict.violations,
            vec![Violation::Proper {
                u: 0,
                v: 1,
                color: 1
            }]
        );
    }

    #[test]
    fn length_mismatch_is_input_error() {
        let g = graph::cycle(4).unwrap();
        assert!(matches!(
            verify_proper(&g, &col(&[1, 2])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn parity_coloring_of_c6_has_deficits_everywhere() {
        let g = graph::cycle(6).unwrap();
        let c = col(&[1, 2, 1, 2, 1, 2]);
        let v = verify_conditional(&g, &c, CondParams::new(2, 2).unwrap(), false).unwrap();
        assert_eq!(v.proper_violations(), 0);
        let deficits: Vec<_> = v.deficits().collect();
        assert_eq!(deficits.len(), 6);
        assert!(deficits
            .iter()
            .all(|&(_, found, req)| found == 1 && req == 2));
    }

    #[test]
    fn mod5_pattern_on_cycle_square_10() {
        let g = graph::cycle_square(10).unwrap();
        let c = col(&(0..10).map(|i| i % 5 + 1).collect::<Vec<_>>());
        let v = verify_conditional(&g, &c, CondParams::new(5, 4).unwrap(), false).unwrap();
        assert!(v.is_valid());
    }

    #[test]
    fn mod5_pattern_on_cycle_square_11_breaks_at_wrap() {
        let g = graph::cycle_square(11).unwrap();
        let c = col(&(0..11).map(|i| i % 5 + 1).collect::<Vec<_>>());
        let v = verify_conditional(&g, &c, CondParams::new(5, 4).unwrap(), false).unwrap();
        // v1 and v11 both get color 1
        assert!(v.violations.contains(&Violation::Proper {
            u: 0,
            v: 10,
            color: 1
        }));
    }

    #[test]
    fn color_above_k_rejected() {
        let g = graph::cycle(3).unwrap();
        let c = col(&[1, 2, 3]);
        assert!(verify_conditional(&g, &c, CondParams::new(2, 1).unwrap(), false).is_err());
    }

    #[test]
    fn strict_mode_reports_unused_colors() {
        let g = graph::cycle(4).unwrap();
        let c = Coloring::new(vec![1, 2, 3, 4], 4).unwrap();
        let lax = verify_conditional(&g, &c, CondParams::new(5, 2).unwrap(), false).unwrap();
        assert!(lax.is_valid());
        let strict = verify_conditional(&g, &c, CondParams::new(5, 2).unwrap(), true).unwrap();
        assert_eq!(
            strict.violations,
            vec![Violation::SurjectivityGap { missing: vec![5] }]
        );
    }

    #[test]
    fn isolated_vertex_needs_nothing() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let c = col(&[1, 2, 1]);
        assert!(is_conditional_coloring(&g, &c, 2, 3));
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_colors_used(&col(&[1, 1, 1])), 1);
        assert_eq!(distinct_colors_used(&col(&[1, 2, 3, 4])), 4);
    }

    #[test]
    fn compaction_and_json() {
        let c = Coloring::new(vec![2, 5, 2, 7], 9).unwrap();
        let compact = c.compacted();
        assert_eq!(compact.colors(), &[1, 2, 1, 3]);
        assert_eq!(compact.k(), 3);
        let text = serde_json::to_string(&compact).unwrap();
        assert_eq!(text, r#"{"k":3,"colors":[1,2,1,3]}"#);
        assert!(serde_json::from_str::<Coloring>(r#"{"k":2,"colors":[1,3]}"#).is_err());
    }

    #[test]
    fn verdict_json_is_tagged() {
        let g = graph::cycle(3).unwrap();
        let v = verify_conditional(&g, &col(&[1, 1, 2]), CondParams::new(2, 2).unwrap(), false)
            .unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["valid"], false);
        assert_eq!(json["violations"][0]["kind"], "proper");
        assert_eq!(json["violations"][1]["kind"], "neighborhood_deficit");
    }
}
