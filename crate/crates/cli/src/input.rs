use std::collections::BTreeMap;
use std::path::Path;

use orthopair::{Ifs, Ifv, NumericPolicy, OrderKind, Qrofn, WeightVector};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

/// A value as written by the user: `[mu, nu]`, `{"mu": .., "nu": ..}` or a
/// `"mu,nu"` / `"⟨mu, nu⟩"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RawValue {
    Pair(f64, f64),
    Object {
        mu: f64,
        nu: f64,
        #[serde(default)]
        q: Option<f64>,
    },
    Text(String),
}

impl RawValue {
    pub fn components(&self) -> Result<(f64, f64, Option<f64>), CliError> {
        match self {
            RawValue::Pair(mu, nu) => Ok((*mu, *nu, None)),
            RawValue::Object { mu, nu, q } => Ok((*mu, *nu, *q)),
            RawValue::Text(s) => {
                let (mu, nu) = parse_pair(s)?;
                Ok((mu, nu, None))
            }
        }
    }
}

pub fn parse_pair(s: &str) -> Result<(f64, f64), CliError> {
    let inner = s
        .trim()
        .trim_start_matches(['⟨', '<', '(', '['])
        .trim_end_matches(['⟩', '>', ')', ']']);
    let mut parts = inner.split(',').map(str::trim);
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(CliError::Parse(format!("expected \"mu,nu\", got {s:?}")));
    };
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|_| CliError::Parse(format!("{t:?} is not a number in {s:?}")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn ifv(mu: f64, nu: f64, policy: &NumericPolicy, context: &str) -> Result<Ifv, CliError> {
    Ifv::with_policy(mu, nu, policy).map_err(|e| CliError::Domain(format!("{context}: {e}")))
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Weights {
    Explicit(Vec<f64>),
    Keyword(String),
}

impl Weights {
    pub fn resolve(&self, n: usize) -> Result<WeightVector, CliError> {
        match self {
            Weights::Keyword(k) if k == "equal" => {
                WeightVector::equal(n).map_err(|e| CliError::Domain(format!("weights: {e}")))
            }
            Weights::Keyword(k) => Err(CliError::Parse(format!(
                "weights must be an array or \"equal\", got {k:?}"
            ))),
            Weights::Explicit(w) => {
                if w.len() != n {
                    return Err(CliError::Parse(format!(
                        "{} weights for {n} elements",
                        w.len()
                    )));
                }
                WeightVector::new(w.clone()).map_err(|e| CliError::Domain(format!("weights: {e}")))
            }
        }
    }
}

/// One IFS row: either keyed by element label or listed in universe order.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Row {
    Keyed(BTreeMap<String, RawValue>),
    Listed(Vec<RawValue>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyRequest {
    pub universe: Vec<String>,
    pub weights: Weights,
    pub patterns: BTreeMap<String, Row>,
    pub unknown: Row,
    #[serde(default = "default_order")]
    pub order: OrderKind,
    #[serde(default)]
    pub eps: Option<f64>,
}

fn default_order() -> OrderKind {
    OrderKind::XY
}

impl ClassifyRequest {
    pub fn build_row(
        &self,
        name: &str,
        row: &Row,
        policy: &NumericPolicy,
    ) -> Result<Ifs, CliError> {
        let raw: Vec<&RawValue> = match row {
            Row::Listed(values) => {
                if values.len() != self.universe.len() {
                    return Err(CliError::Parse(format!(
                        "{name}: {} values for {} elements",
                        values.len(),
                        self.universe.len()
                    )));
                }
                values.iter().collect()
            }
            Row::Keyed(map) => {
                if let Some(extra) = map.keys().find(|k| !self.universe.contains(k)) {
                    return Err(CliError::Parse(format!(
                        "{name}: {extra:?} is not in the universe"
                    )));
                }
                self.universe
                    .iter()
                    .map(|x| {
                        map.get(x)
                            .ok_or_else(|| CliError::Parse(format!("{name}: no value for {x:?}")))
                    })
                    .collect::<Result<_, _>>()?
            }
        };
        let values = raw
            .iter()
            .zip(&self.universe)
            .map(|(v, x)| {
                let context = format!("{name} at {x}");
                let (mu, nu, _) = v
                    .components()
                    .map_err(|e| CliError::Parse(format!("{context}: {e}")))?;
                ifv(mu, nu, policy, &context)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ifs::new(self.universe.clone(), values).map_err(|e| CliError::Parse(e.to_string()))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AggregateRequest {
    pub values: Vec<RawValue>,
    pub weights: Weights,
    #[serde(default)]
    pub q: Option<f64>,
}

impl AggregateRequest {
    pub fn ifvs(&self, policy: &NumericPolicy) -> Result<Vec<Ifv>, CliError> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (mu, nu, _) = v.components()?;
                ifv(mu, nu, policy, &format!("value {k}"))
            })
            .collect()
    }

    pub fn qrofns(&self, policy: &NumericPolicy) -> Result<Vec<Qrofn>, CliError> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (mu, nu, own) = v.components()?;
                let q = own.or(self.q).ok_or_else(|| {
                    CliError::Parse(format!(
                        "value {k}: no rung; set \"q\" on the value or the request"
                    ))
                })?;
                Qrofn::with_policy(mu, nu, q, policy)
                    .map_err(|e| CliError::Domain(format!("value {k}: {e}")))
            })
            .collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum LatticeRequest {
    Bare(Vec<RawValue>),
    Wrapped { values: Vec<RawValue> },
}

impl LatticeRequest {
    pub fn ifvs(&self, policy: &NumericPolicy) -> Result<Vec<Ifv>, CliError> {
        let values = match self {
            LatticeRequest::Bare(v) | LatticeRequest::Wrapped { values: v } => v,
        };
        values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (mu, nu, _) = v.components()?;
                ifv(mu, nu, policy, &format!("value {k}"))
            })
            .collect()
    }
}
