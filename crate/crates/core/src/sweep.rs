//! Theorem sweeps: build each instance, verify the closed-form coloring if
//! one exists, solve small instances exactly, and compare against the
//! claims table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::claims::{ClaimsTable, Instance, Theorem};
use crate::coloring::{verify_conditional, CondParams};
use crate::constructions::construct;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::solver::{chi_r_exact, SolveOptions, SolveOutcome, DEFAULT_BUDGET};

pub const DEFAULT_SOLVER_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Confirmed,
    ConstructionFailed,
    SolverDisagrees,
    UnclaimedProbe,
    Skipped,
}

impl Agreement {
    pub fn name(self) -> &'static str {
        match self {
            Agreement::Confirmed => "confirmed",
            Agreement::ConstructionFailed => "construction-failed",
            Agreement::SolverDisagrees => "solver-disagrees",
            Agreement::UnclaimedProbe => "unclaimed-probe",
            Agreement::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An entry of an `r` list: a number, or the instance's maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RValue {
    Fixed(usize),
    Delta,
}

impl FromStr for RValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("delta") {
            return Ok(RValue::Delta);
        }
        match s.parse::<usize>() {
            Ok(r) if r >= 1 => Ok(RValue::Fixed(r)),
            _ => Err(Error::Parse(format!(
                "bad r value '{s}' (positive integer or 'delta')"
            ))),
        }
    }
}

/// Parses `"3..12"` (inclusive), `"13,14,19"`, or mixes such as `"2..4,9"`.
pub fn parse_range(text: &str) -> Result<Vec<usize>> {
    let bad = |part: &str| Error::Parse(format!("bad range item '{part}'"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: usize = lo.trim().parse().map_err(|_| bad(part))?;
            let hi: usize = hi.trim().parse().map_err(|_| bad(part))?;
            if lo > hi {
                return Err(bad(part));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse(format!("empty range '{text}'")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn parse_r_list(text: &str) -> Result<Vec<RValue>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.contains("..") {
            out.extend(parse_range(part)?.into_iter().map(RValue::Fixed));
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty r list".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub theorem: Theorem,
    pub n: Vec<usize>,
    /// Second grid dimension; only used by `thm2`.
    pub m: Vec<usize>,
    /// Ring count; only used by `thm3`.
    pub t: Vec<usize>,
    pub r: Vec<RValue>,
    pub solver_cap: usize,
    /// Node budget per instance.
    pub budget: u64,
}

impl SweepConfig {
    pub fn new(theorem: Theorem) -> Self {
        let (n, m, t, r): (Vec<usize>, Vec<usize>, Vec<usize>, Vec<RValue>) = match theorem {
            Theorem::Prop1 => (
                (2..=7).collect(),
                vec![],
                vec![],
                vec![RValue::Fixed(2), RValue::Fixed(3)],
            ),
            Theorem::Thm1 => (
                (3..=12).collect(),
                vec![],
                vec![],
                vec![RValue::Fixed(2), RValue::Fixed(3), RValue::Fixed(4)],
            ),
            Theorem::Thm2 => (
                (2..=4).collect(),
                (2..=6).collect(),
                vec![],
                vec![RValue::Fixed(2), RValue::Fixed(3), RValue::Delta],
            ),
            Theorem::Thm3 => (
                (3..=8).collect(),
                vec![],
                (1..=2).collect(),
                vec![RValue::Fixed(2)],
            ),
        };
        SweepConfig {
            theorem,
            n,
            m,
            t,
            r,
            solver_cap: DEFAULT_SOLVER_CAP,
            budget: DEFAULT_BUDGET,
        }
    }

    fn specs(&self) -> Vec<FamilySpec> {
        match self.theorem {
            Theorem::Prop1 => self.n.iter().map(|&n| FamilySpec::Grid2n { n }).collect(),
            Theorem::Thm1 => self
                .n
                .iter()
                .map(|&n| FamilySpec::CycleSquare { n })
                .collect(),
            Theorem::Thm2 => self
                .n
                .iter()
                .flat_map(|&n| self.m.iter().map(move |&m| FamilySpec::StrongGrid { n, m }))
                .collect(),
            Theorem::Thm3 => self
                .t
                .iter()
                .flat_map(|&t| self.n.iter().map(move |&n| FamilySpec::Web { t, n }))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: Value,
    pub r: usize,
    pub vertices: usize,
    pub delta: usize,
    pub claimed_chi: Option<usize>,
    pub constructed_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction_source: Option<&'static str>,
    pub solver_chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_nodes: Option<u64>,
    pub agreement: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    key: (usize, usize, usize, usize),
}

impl SweepRow {
    fn param(&self, name: &str) -> Option<usize> {
        self.params
            .get(name)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
    }

    pub fn n(&self) -> Option<usize> {
        self.param("n")
    }

    pub fn m(&self) -> Option<usize> {
        self.param("m")
    }

    pub fn t(&self) -> Option<usize> {
        self.param("t")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub by_agreement: BTreeMap<&'static str, usize>,
    pub constructions_checked: usize,
    pub constructions_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: &'static str,
    pub solver_cap: usize,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn count(&self, agreement: Agreement) -> usize {
        self.rows
            .iter()
            .filter(|row| row.agreement == agreement)
            .count()
    }
}

fn agreement(
    claimed: Option<usize>,
    constructed_ok: Option<bool>,
    solver: Option<usize>,
) -> Agreement {
    match (claimed, solver) {
        (None, _) => Agreement::UnclaimedProbe,
        (Some(c), Some(s)) if c != s => Agreement::SolverDisagrees,
        _ if constructed_ok == Some(false) => Agreement::ConstructionFailed,
        (Some(_), Some(_)) => Agreement::Confirmed,
        (Some(_), None) => Agreement::Skipped,
    }
}

fn run_instance(
    spec: &FamilySpec,
    r: usize,
    claims: &ClaimsTable,
    config: &SweepConfig,
) -> SweepRow {
    let (n, m, t) = match *spec {
        FamilySpec::StrongGrid { n, m } => (n, Some(m), None),
        FamilySpec::Web { t, n } => (n, None, Some(t)),
        FamilySpec::Grid2n { n } | FamilySpec::CycleSquare { n } => (n, None, None),
        _ => unreachable!("sweeps only cover the four studied families"),
    };
    let mut row = SweepRow {
        family: spec.family().name().to_string(),
        params: spec.params_json(),
        r,
        vertices: 0,
        delta: 0,
        claimed_chi: None,
        constructed_ok: None,
        construction_source: None,
        solver_chi: None,
        solver_nodes: None,
        agreement: Agreement::Skipped,
        note: None,
        key: (n, m.unwrap_or(0), t.unwrap_or(0), r),
    };
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => {
            row.note = Some(e.to_string());
            return row;
        }
    };
    row.vertices = g.vertex_count();
    row.delta = g.max_degree();
    let inst = Instance {
        n,
        m,
        t,
        r,
        delta: row.delta,
    };
    row.claimed_chi = claims.claimed(config.theorem, &inst);

    let mut notes = Vec::new();
    match construct(spec, r) {
        Ok(cc) => {
            row.construction_source = Some(cc.source);
            let verdict = CondParams::new(cc.claimed_k, r)
                .and_then(|p| verify_conditional(&g, &cc.coloring, p, false));
            let ok = match verdict {
                Ok(v) if v.is_valid() => true,
                Ok(v) => {
                    notes.push(format!(
                        "{} fails: {}",
                        cc.source,
                        v.describe(&g).join("; ")
                    ));
                    false
                }
                Err(e) => {
                    notes.push(e.to_string());
                    false
                }
            };
            row.constructed_ok = Some(ok);
        }
        Err(Error::UnsupportedCase(_)) | Err(Error::ExcludedCase(_)) => {}
        Err(e) => notes.push(e.to_string()),
    }

    if row.vertices <= config.solver_cap {
        let options = SolveOptions {
            budget: config.budget,
            parallel: false,
        };
        match chi_r_exact(&g, r, options) {
            Ok(SolveOutcome::Solved(res)) => {
                row.solver_chi = Some(res.chi);
                row.solver_nodes = Some(res.nodes_explored);
            }
            Ok(SolveOutcome::BudgetExhausted(ex)) => {
                row.solver_nodes = Some(ex.nodes_explored);
                notes.push(format!(
                    "solver budget exhausted: {} <= chi <= {}",
                    ex.lower_bound, ex.upper_bound
                ));
            }
            Err(e) => notes.push(e.to_string()),
        }
    } else {
        notes.push(format!(
            "solver skipped: {} vertices > cap {}",
            row.vertices, config.solver_cap
        ));
    }

    row.agreement = agreement(row.claimed_chi, row.constructed_ok, row.solver_chi);
    if !notes.is_empty() {
        row.note = Some(notes.join(" | "));
    }
    row
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let claims = ClaimsTable::bundled();
    let mut jobs = Vec::new();
    for spec in config.specs() {
        spec.validate()?;
        let delta = spec.build()?.max_degree();
        let mut rs: Vec<usize> = config
            .r
            .iter()
            .map(|r| match *r {
                RValue::Fixed(r) => r,
                RValue::Delta => delta,
            })
            .collect();
        rs.sort_unstable();
        rs.dedup();
        jobs.extend(rs.into_iter().map(|r| (spec.clone(), r)));
    }
    let mut rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|(spec, r)| run_instance(spec, *r, &claims, config))
        .collect();
    rows.sort_by(|a, b| (&a.family, a.key).cmp(&(&b.family, b.key)));

    let mut by_agreement = BTreeMap::new();
    for row in &rows {
        *by_agreement.entry(row.agreement.name()).or_insert(0) += 1;
    }
    let summary = SweepSummary {
        total: rows.len(),
        by_agreement,
        constructions_checked: rows.iter().filter(|r| r.constructed_ok.is_some()).count(),
        constructions_failed: rows
            .iter()
            .filter(|r| r.constructed_ok == Some(false))
            .count(),
    };
    Ok(SweepReport {
        theorem: config.theorem.name(),
        solver_cap: config.solver_cap,
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_range("13,14,19").unwrap(), vec![13, 14, 19]);
        assert_eq!(parse_range("2..=3, 9,3").unwrap(), vec![2, 3, 9]);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("").is_err());
    }

    #[test]
    fn r_lists() {
        assert_eq!(
            parse_r_list("2,delta").unwrap(),
            vec![RValue::Fixed(2), RValue::Delta]
        );
        assert_eq!(
            parse_r_list("2..3").unwrap(),
            vec![RValue::Fixed(2), RValue::Fixed(3)]
        );
        assert!(parse_r_list("0").is_err());
    }

    #[test]
    fn agreement_precedence() {
        assert_eq!(
            agreement(None, Some(false), Some(4)),
            Agreement::UnclaimedProbe
        );
        assert_eq!(
            agreement(Some(4), Some(false), Some(5)),
            Agreement::SolverDisagrees
        );
        assert_eq!(
            agreement(Some(4), Some(false), Some(4)),
            Agreement::ConstructionFailed
        );
        assert_eq!(
            agreement(Some(4), Some(false), None),
            Agreement::ConstructionFailed
        );
        assert_eq!(
            agreement(Some(4), Some(true), Some(4)),
            Agreement::Confirmed
        );
        assert_eq!(agreement(Some(4), None, Some(4)), Agreement::Confirmed);
        assert_eq!(agreement(Some(4), Some(true), None), Agreement::Skipped);
    }

    #[test]
    fn small_prop1_sweep() {
        let mut config = SweepConfig::new(Theorem::Prop1);
        config.n = vec![2, 3];
        let report = run_sweep(&config).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert!(report
            .rows
            .iter()
            .all(|r| r.agreement == Agreement::Confirmed));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["rows"][0]["agreement"], "confirmed");
        assert_eq!(json["rows"][0]["params"]["n"], 2);
    }

    #[test]
    fn rows_are_sorted_and_deduplicated() {
        let mut config = SweepConfig::new(Theorem::Thm2);
        config.n = vec![3, 2];
        config.m = vec![2];
        config.solver_cap = 0;
        let report = run_sweep(&config).unwrap();
        let keys: Vec<_> = report.rows.iter().map(|r| (r.n(), r.m(), r.r)).collect();
        assert_eq!(
            keys,
            vec![
                (Some(2), Some(2), 2),
                (Some(2), Some(2), 3),
                (Some(3), Some(2), 2),
                (Some(3), Some(2), 3),
                (Some(3), Some(2), 5),
            ]
        );
    }
}
