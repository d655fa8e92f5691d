//! The table of claimed `χ_r` values, loaded from `data/claims.toml`.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::constructions::cycle_square_chromatic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `P_2 □ P_n`.
    Prop1,
    /// `C_n^2`.
    Thm1,
    /// `P_n ⊗ P_m`.
    Thm2,
    /// `(t, n)`-web graphs.
    Thm3,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::Prop1, Theorem::Thm1, Theorem::Thm2, Theorem::Thm3];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Prop1 => "prop1",
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Thm3 => "thm3",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown theorem '{s}' (prop1, thm1, thm2, thm3)")))
    }
}

/// Parameters of one sweep instance. `n` is the family's main size
/// parameter (`P_n` length, cycle length, ring length).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Instance {
    pub n: usize,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub r: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(untagged)]
enum ValueSpec {
    Const { r#const: usize },
    Named(NamedValue),
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
enum NamedValue {
    N,
    CycleSquareChromatic,
    DeltaPlusOne,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Default)]
#[serde(deny_unknown_fields)]
struct Rule {
    r: Option<usize>,
    r_min: Option<usize>,
    r_max: Option<usize>,
    #[serde(default)]
    r_is_delta: bool,
    n_min: Option<usize>,
    n_max: Option<usize>,
    m_min: Option<usize>,
    n_in: Option<Vec<usize>>,
    n_mod: Option<(usize, Vec<usize>)>,
    n_not_mod: Option<(usize, Vec<usize>)>,
    #[serde(default)]
    unclaimed: bool,
    value: Option<ValueSpec>,
}

impl Rule {
    fn matches(&self, inst: &Instance) -> bool {
        let n = inst.n;
        self.r.is_none_or(|r| inst.r == r)
            && self.r_min.is_none_or(|r| inst.r >= r)
            && self.r_max.is_none_or(|r| inst.r <= r)
            && (!self.r_is_delta || inst.r == inst.delta)
            && self.n_min.is_none_or(|x| n >= x)
            && self.n_max.is_none_or(|x| n <= x)
            && self.m_min.is_none_or(|x| inst.m.is_some_and(|m| m >= x))
            && self.n_in.as_ref().is_none_or(|set| set.contains(&n))
            && self
                .n_mod
                .as_ref()
                .is_none_or(|(q, res)| res.contains(&(n % q)))
            && self
                .n_not_mod
                .as_ref()
                .is_none_or(|(q, res)| !res.contains(&(n % q)))
    }

    fn evaluate(&self, inst: &Instance) -> Option<usize> {
        match self.value.as_ref()? {
            ValueSpec::Const { r#const } => Some(*r#const),
            ValueSpec::Named(NamedValue::N) => Some(inst.n),
            ValueSpec::Named(NamedValue::CycleSquareChromatic) => {
                cycle_square_chromatic(inst.n).ok()
            }
            ValueSpec::Named(NamedValue::DeltaPlusOne) => Some(inst.delta + 1),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct ClaimsTable {
    #[serde(default)]
    prop1: Vec<Rule>,
    #[serde(default)]
    thm1: Vec<Rule>,
    #[serde(default)]
    thm2: Vec<Rule>,
    #[serde(default)]
    thm3: Vec<Rule>,
}

const CLAIMS_TOML: &str = include_str!("../data/claims.toml");

impl ClaimsTable {
    pub fn bundled() -> Self {
        ClaimsTable::parse(CLAIMS_TOML).expect("bundled claims table parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let table: ClaimsTable =
            toml::from_str(text).map_err(|e| Error::Parse(format!("claims table: {e}")))?;
        for rule in table
            .prop1
            .iter()
            .chain(&table.thm1)
            .chain(&table.thm2)
            .chain(&table.thm3)
        {
            if rule.unclaimed == rule.value.is_some() {
                return Err(Error::Parse(
                    "each claims rule needs exactly one of `value` or `unclaimed = true`".into(),
                ));
            }
        }
        Ok(table)
    }

    fn rules(&self, theorem: Theorem) -> &[Rule] {
        match theorem {
            Theorem::Prop1 => &self.prop1,
            Theorem::Thm1 => &self.thm1,
            Theorem::Thm2 => &self.thm2,
            Theorem::Thm3 => &self.thm3,
        }
    }

    /// The claimed `χ_r`, or `None` where the result makes no claim.
    pub fn claimed(&self, theorem: Theorem, inst: &Instance) -> Option<usize> {
        self.rules(theorem)
            .iter()
            .find(|rule| rule.matches(inst))
            .and_then(|rule| rule.evaluate(inst))
    }
}

pub fn claims_toml() -> &'static str {
    CLAIMS_TOML
}
