//! Named graph-family instances, as used by the CLI and the sweep harness.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{invalid_param, Error, Result};
use crate::graph::{self, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Wheel,
    CycleSquare,
    Grid2n,
    StrongGrid,
    Web,
    PowerOf,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Wheel,
        Family::CycleSquare,
        Family::Grid2n,
        Family::StrongGrid,
        Family::Web,
        Family::PowerOf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Wheel => "wheel",
            Family::CycleSquare => "cycle-square",
            Family::Grid2n => "grid2n",
            Family::StrongGrid => "strong-grid",
            Family::Web => "web",
            Family::PowerOf => "power-of",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

/// A fully-parameterised family instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Wheel {
        n: usize,
    },
    CycleSquare {
        n: usize,
    },
    /// `P_2 □ P_n`.
    Grid2n {
        n: usize,
    },
    /// `P_n ⊗ P_m`.
    StrongGrid {
        n: usize,
        m: usize,
    },
    Web {
        t: usize,
        n: usize,
    },
    PowerOf {
        base: Box<FamilySpec>,
        p: usize,
    },
}

/// Loose parameter bag, as collected from CLI flags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub p: Option<usize>,
    pub base: Option<Family>,
}

fn need(value: Option<usize>, name: &str, family: Family) -> Result<usize> {
    value.ok_or_else(|| invalid_param(format!("family '{family}' needs --{name}")))
}

impl FamilySpec {
    pub fn from_params(family: Family, params: &FamilyParams) -> Result<Self> {
        let spec = match family {
            Family::Path => FamilySpec::Path {
                n: need(params.n, "n", family)?,
            },
            Family::Cycle => FamilySpec::Cycle {
                n: need(params.n, "n", family)?,
            },
            Family::Complete => FamilySpec::Complete {
                n: need(params.n, "n", family)?,
            },
            Family::Wheel => FamilySpec::Wheel {
                n: need(params.n, "n", family)?,
            },
            Family::CycleSquare => FamilySpec::CycleSquare {
                n: need(params.n, "n", family)?,
            },
            Family::Grid2n => FamilySpec::Grid2n {
                n: need(params.n, "n", family)?,
            },
            Family::StrongGrid => FamilySpec::StrongGrid {
                n: need(params.n, "n", family)?,
                m: need(params.m, "m", family)?,
            },
            Family::Web => FamilySpec::Web {
                t: need(params.t, "t", family)?,
                n: need(params.n, "n", family)?,
            },
            Family::PowerOf => {
                let base = params
                    .base
                    .ok_or_else(|| invalid_param("family 'power-of' needs --base"))?;
                if base == Family::PowerOf {
                    return Err(invalid_param("power-of cannot be nested"));
                }
                let inner = FamilySpec::from_params(base, params)?;
                FamilySpec::PowerOf {
                    base: Box::new(inner),
                    p: need(params.p, "p", family)?,
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Path { .. } => Family::Path,
            FamilySpec::Cycle { .. } => Family::Cycle,
            FamilySpec::Complete { .. } => Family::Complete,
            FamilySpec::Wheel { .. } => Family::Wheel,
            FamilySpec::CycleSquare { .. } => Family::CycleSquare,
            FamilySpec::Grid2n { .. } => Family::Grid2n,
            FamilySpec::StrongGrid { .. } => Family::StrongGrid,
            FamilySpec::Web { .. } => Family::Web,
            FamilySpec::PowerOf { .. } => Family::PowerOf,
        }
    }

    /// Checks the family's parameter domain without building the graph.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(invalid_param(format!("{}: {msg}", self.family())));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 1 => fail("needs n >= 1"),
            FamilySpec::Cycle { n } | FamilySpec::Wheel { n } | FamilySpec::CycleSquare { n }
                if n < 3 =>
            {
                fail("needs n >= 3")
            }
            FamilySpec::Grid2n { n } if n < 1 => fail("needs n >= 1"),
            FamilySpec::StrongGrid { n, m } if n < 1 || m < 1 => fail("needs n, m >= 1"),
            FamilySpec::Web { t, n } if t < 1 || n < 3 => fail("needs t >= 1 and n >= 3"),
            FamilySpec::PowerOf { ref base, p } => {
                if p < 1 {
                    return fail("needs p >= 1");
                }
                base.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path { n } => graph::path(*n),
            FamilySpec::Cycle { n } => graph::cycle(*n),
            FamilySpec::Complete { n } => graph::complete(*n),
            FamilySpec::Wheel { n } => graph::wheel(*n),
            FamilySpec::CycleSquare { n } => graph::cycle_square(*n),
            FamilySpec::Grid2n { n } => graph::grid2n(*n),
            FamilySpec::StrongGrid { n, m } => graph::strong_grid(*n, *m),
            FamilySpec::Web { t, n } => graph::web(*t, *n),
            FamilySpec::PowerOf { base, p } => graph::power(&base.build()?, *p),
        }
    }

    /// Parameters as a JSON object (`{"n": 10}`, `{"base": "cycle", "n": 8, "p": 2}`).
    pub fn params_json(&self) -> Value {
        let mut map = Map::new();
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::CycleSquare { n }
            | FamilySpec::Grid2n { n } => {
                map.insert("n".into(), json!(n));
            }
            FamilySpec::StrongGrid { n, m } => {
                map.insert("n".into(), json!(n));
                map.insert("m".into(), json!(m));
            }
            FamilySpec::Web { t, n } => {
                map.insert("t".into(), json!(t));
                map.insert("n".into(), json!(n));
            }
            FamilySpec::PowerOf { base, p } => {
                map.insert("base".into(), json!(base.family().name()));
                if let Value::Object(inner) = base.params_json() {
                    map.extend(inner);
                }
                map.insert("p".into(), json!(p));
            }
        }
        Value::Object(map)
    }

    /// Inverse of ([`Family::name`], [`FamilySpec::params_json`]).
    pub fn from_json(family: &str, params: &Value) -> Result<Self> {
        let family: Family = family.parse()?;
        let get = |key: &str| -> Result<Option<usize>> {
            match params.get(key) {
                None | Some(Value::Null) => Ok(None),
                Some(v) => v
                    .as_u64()
                    .map(|x| Some(x as usize))
                    .ok_or_else(|| Error::Parse(format!("parameter '{key}' is not an integer"))),
            }
        };
        let base = match params.get("base").and_then(Value::as_str) {
            Some(s) => Some(s.parse()?),
            None => None,
        };
        let bag = FamilyParams {
            n: get("n")?,
            m: get("m")?,
            t: get("t")?,
            p: get("p")?,
            base,
        };
        FamilySpec::from_params(family, &bag)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::StrongGrid { n, m } => write!(f, "strong-grid(n={n},m={m})"),
            FamilySpec::Web { t, n } => write!(f, "web(t={t},n={n})"),
            FamilySpec::PowerOf { base, p } => write!(f, "power-of({base},p={p})"),
            other => {
                let n = other.params_json()["n"].as_u64().unwrap_or(0);
                write!(f, "{}(n={n})", other.family())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_family_names() {
        assert_eq!(
            "cycle-square".parse::<Family>().unwrap(),
            Family::CycleSquare
        );
        assert_eq!("strong_grid".parse::<Family>().unwrap(), Family::StrongGrid);
        assert!("hypercube".parse::<Family>().is_err());
    }

    #[test]
    fn from_params_checks_domain() {
        let bag = FamilyParams {
            n: Some(2),
            ..Default::default()
        };
        assert!(FamilySpec::from_params(Family::Cycle, &bag).is_err());
        let bag = FamilyParams {
            n: Some(4),
            t: Some(0),
            ..Default::default()
        };
        assert!(FamilySpec::from_params(Family::Web, &bag).is_err());
        let bag = FamilyParams {
            n: Some(4),
            ..Default::default()
        };
        assert!(FamilySpec::from_params(Family::StrongGrid, &bag).is_err());
    }

    #[test]
    fn json_params_roundtrip() {
        let specs = [
            FamilySpec::Web { t: 2, n: 4 },
            FamilySpec::StrongGrid { n: 5, m: 11 },
            FamilySpec::PowerOf {
                base: Box::new(FamilySpec::Cycle { n: 8 }),
                p: 2,
            },
        ];
        for spec in specs {
            let back = FamilySpec::from_json(spec.family().name(), &spec.params_json()).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn power_of_builds() {
        let spec = FamilySpec::PowerOf {
            base: Box::new(FamilySpec::Cycle { n: 8 }),
            p: 2,
        };
        assert_eq!(
            spec.build().unwrap().edges(),
            graph::cycle_square(8).unwrap().edges()
        );
    }
}
