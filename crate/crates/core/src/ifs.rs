//! Intuitionistic fuzzy sets over a finite, ordered universe.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifv::{Ifv, NumericPolicy, OrderKind};
use crate::lattice::sup_finite;

/// An assignment of an [`Ifv`] to every label of an ordered universe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IfsRepr", into = "IfsRepr")]
pub struct Ifs {
    universe: Vec<String>,
    values: Vec<Ifv>,
}

#[derive(Serialize, Deserialize)]
struct IfsRepr {
    universe: Vec<String>,
    values: BTreeMap<String, Ifv>,
}

impl TryFrom<IfsRepr> for Ifs {
    type Error = Error;

    fn try_from(repr: IfsRepr) -> Result<Self> {
        Ifs::from_map(repr.universe, &repr.values)
    }
}

impl From<Ifs> for IfsRepr {
    fn from(ifs: Ifs) -> Self {
        IfsRepr {
            values: ifs.universe.iter().cloned().zip(ifs.values).collect(),
            universe: ifs.universe,
        }
    }
}

fn check_labels(universe: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(universe.len());
    for label in universe {
        if !seen.insert(label.as_str()) {
            return Err(Error::UniverseMismatch(format!(
                "duplicate label {label:?}"
            )));
        }
    }
    Ok(())
}

impl Ifs {
    /// Pairs `values` positionally with `universe`.
    pub fn new(universe: Vec<String>, values: Vec<Ifv>) -> Result<Self> {
        if universe.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: values.len(),
            });
        }
        check_labels(&universe)?;
        Ok(Ifs { universe, values })
    }

    /// Looks every label up in `values`, which must cover exactly the universe.
    pub fn from_map(universe: Vec<String>, values: &BTreeMap<String, Ifv>) -> Result<Self> {
        check_labels(&universe)?;
        let mut out = Vec::with_capacity(universe.len());
        for label in &universe {
            let v = values
                .get(label)
                .ok_or_else(|| Error::UniverseMismatch(format!("no value for {label:?}")))?;
            out.push(*v);
        }
        if values.len() != universe.len() {
            let extra = values.keys().find(|k| !universe.contains(k)).unwrap();
            return Err(Error::UniverseMismatch(format!(
                "{extra:?} is not in the universe"
            )));
        }
        Ok(Ifs {
            universe,
            values: out,
        })
    }

    pub fn constant(universe: Vec<String>, value: Ifv) -> Result<Self> {
        let values = vec![value; universe.len()];
        Ifs::new(universe, values)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn values(&self) -> &[Ifv] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<Ifv> {
        self.universe
            .iter()
            .position(|x| x == label)
            .map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Ifv)> + '_ {
        self.universe
            .iter()
            .map(String::as_str)
            .zip(self.values.iter().copied())
    }

    pub(crate) fn check_universe(&self, other: &Ifs) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(format!(
                "{:?} vs {:?}",
                self.universe, other.universe
            )));
        }
        Ok(())
    }
}

/// `I1(x) ≤XY I2(x)` for every `x`.
pub fn pointwise_leq(i1: &Ifs, i2: &Ifs, policy: &NumericPolicy) -> Result<bool> {
    i1.check_universe(i2)?;
    Ok(i1
        .values
        .iter()
        .zip(&i2.values)
        .all(|(a, b)| a.compare(b, OrderKind::XY, policy) != Ordering::Greater))
}

/// Labels whose value is at least `alpha` under XY, in universe order.
pub fn level_set<'a>(i: &'a Ifs, alpha: &Ifv, policy: &NumericPolicy) -> Vec<&'a str> {
    i.iter()
        .filter(|(_, v)| v.compare(alpha, OrderKind::XY, policy) != Ordering::Less)
        .map(|(x, _)| x)
        .collect()
}

/// Rebuilds every `I(x)` as the supremum of the samples whose level set
/// contains `x` and reports whether all of them come back.
pub fn decompose_check(i: &Ifs, samples: &[Ifv], policy: &NumericPolicy) -> Result<bool> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    for v in &i.values {
        let below: Vec<Ifv> = samples
            .iter()
            .filter(|alpha| v.compare(alpha, OrderKind::XY, policy) != Ordering::Less)
            .copied()
            .collect();
        match sup_finite(&below, OrderKind::XY, policy) {
            Ok(sup) if sup.compare(v, OrderKind::XY, policy) == Ordering::Equal => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Pushes `i` forward along `f`: each target label receives the XY
/// supremum over its fiber, or `⟨0, 1⟩` when the fiber is empty.
pub fn zadeh_extend(
    i: &Ifs,
    f: &BTreeMap<String, String>,
    target: &[String],
    policy: &NumericPolicy,
) -> Result<Ifs> {
    check_labels(target)?;
    let index: BTreeMap<&str, usize> = target
        .iter()
        .enumerate()
        .map(|(k, y)| (y.as_str(), k))
        .collect();
    let mut fibers: Vec<Vec<Ifv>> = vec![Vec::new(); target.len()];
    for (x, v) in i.iter() {
        let y = f.get(x).ok_or_else(|| Error::NonTotalMap(x.to_string()))?;
        let k = *index.get(y.as_str()).ok_or_else(|| {
            Error::UniverseMismatch(format!("image {y:?} of {x:?} is not in the target"))
        })?;
        fibers[k].push(v);
    }
    let values = fibers
        .iter()
        .map(|fiber| {
            if fiber.is_empty() {
                Ok(Ifv::BOTTOM)
            } else {
                sup_finite(fiber, OrderKind::XY, policy)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ifs::new(target.to_vec(), values)
}
