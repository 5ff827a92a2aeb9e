//! Skeletal 2-Hilbert spaces: ordered simple labels with positive weights, and
//! objects as multiplicity vectors over them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A skeletal finite-dimensional 2-Hilbert space.
///
/// Simple `λ` carries the weight `k_λ`, so that `⟨1_λ, 1_λ⟩ = k_λ` in the
/// one-dimensional algebra `end(e_λ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpace", into = "RawSpace")]
pub struct SpaceTable {
    simples: Vec<String>,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawSpace {
    simples: Vec<String>,
    #[serde(default)]
    weights: BTreeMap<String, f64>,
}

impl TryFrom<RawSpace> for SpaceTable {
    type Error = Error;

    fn try_from(raw: RawSpace) -> Result<Self> {
        for key in raw.weights.keys() {
            if !raw.simples.contains(key) {
                return Err(Error::UnknownLabel(key.clone()));
            }
        }
        let weights = raw
            .simples
            .iter()
            .map(|s| raw.weights.get(s).copied().unwrap_or(1.0))
            .collect();
        SpaceTable::new(raw.simples, weights)
    }
}

impl From<SpaceTable> for RawSpace {
    fn from(s: SpaceTable) -> Self {
        RawSpace {
            weights: s
                .simples
                .iter()
                .cloned()
                .zip(s.weights.iter().copied())
                .collect(),
            simples: s.simples,
        }
    }
}

impl SpaceTable {
    pub fn new(simples: Vec<String>, weights: Vec<f64>) -> Result<Self> {
        if simples.len() != weights.len() {
            return Err(Error::Invalid(format!(
                "{} labels but {} weights",
                simples.len(),
                weights.len()
            )));
        }
        for (i, s) in simples.iter().enumerate() {
            if simples[..i].contains(s) {
                return Err(Error::Invalid(format!("duplicate simple label `{s}`")));
            }
        }
        if let Some((s, w)) = simples
            .iter()
            .zip(&weights)
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(Error::Invalid(format!(
                "weight of `{s}` must be positive, got {w}"
            )));
        }
        Ok(SpaceTable { simples, weights })
    }

    /// All weights equal to 1.
    pub fn unweighted<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let simples: Vec<String> = labels.into_iter().map(Into::into).collect();
        let weights = vec![1.0; simples.len()];
        Self::new(simples, weights)
    }

    /// Labels `e0, e1, …` with the given weights.
    pub fn numbered(weights: &[f64]) -> Result<Self> {
        Self::new(
            (0..weights.len()).map(|i| format!("e{i}")).collect(),
            weights.to_vec(),
        )
    }

    /// The zero 2-Hilbert space, with no simples.
    pub fn zero() -> Self {
        SpaceTable {
            simples: Vec::new(),
            weights: Vec::new(),
        }
    }

    /// `Hilb` itself: one simple `C` of weight 1.
    pub fn hilb() -> Self {
        SpaceTable {
            simples: vec!["C".into()],
            weights: vec![1.0],
        }
    }

    /// Number of simples.
    pub fn dim(&self) -> usize {
        self.simples.len()
    }

    pub fn is_zero(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn simples(&self) -> &[String] {
        &self.simples
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn label(&self, i: usize) -> &str {
        &self.simples[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.simples
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }
}

/// A skeletal object `⊕_λ n^λ e_λ`.
#[derive(Debug, Clone)]
pub struct ObjectExpr {
    space: Arc<SpaceTable>,
    mult: Vec<usize>,
}

impl PartialEq for ObjectExpr {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult && same_space(&self.space, &other.space)
    }
}

pub(crate) fn same_space(a: &Arc<SpaceTable>, b: &Arc<SpaceTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl ObjectExpr {
    pub fn new(space: Arc<SpaceTable>, mult: Vec<usize>) -> Result<Self> {
        if mult.len() != space.dim() {
            return Err(Error::Invalid(format!(
                "multiplicity vector of length {} over a space with {} simples",
                mult.len(),
                space.dim()
            )));
        }
        Ok(ObjectExpr { space, mult })
    }

    /// Builds an object from `(label, multiplicity)` pairs; unnamed simples get 0.
    pub fn from_labels(space: Arc<SpaceTable>, entries: &[(&str, usize)]) -> Result<Self> {
        let mut mult = vec![0; space.dim()];
        for (label, n) in entries {
            mult[space.index_of(label)?] += n;
        }
        Ok(ObjectExpr { space, mult })
    }

    pub fn zero(space: Arc<SpaceTable>) -> Self {
        let mult = vec![0; space.dim()];
        ObjectExpr { space, mult }
    }

    /// The simple object `e_λ` for the simple at index `i`.
    pub fn simple(space: Arc<SpaceTable>, i: usize) -> Self {
        let mut mult = vec![0; space.dim()];
        mult[i] = 1;
        ObjectExpr { space, mult }
    }

    pub fn space(&self) -> &Arc<SpaceTable> {
        &self.space
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn mult_of(&self, label: &str) -> Result<usize> {
        Ok(self.mult[self.space.index_of(label)?])
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&n| n == 0)
    }

    /// Total number of simple summands.
    pub fn length(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn same_space(&self, other: &ObjectExpr) -> bool {
        same_space(&self.space, &other.space)
    }
}

impl fmt::Display for ObjectExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .mult
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(i, &n)| {
                if n == 1 {
                    self.space.label(i).to_string()
                } else {
                    format!("{n}{}", self.space.label(i))
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_weights_and_duplicates() {
        assert!(SpaceTable::new(vec!["a".into()], vec![0.0]).is_err());
        assert!(SpaceTable::new(vec!["a".into(), "a".into()], vec![1.0, 1.0]).is_err());
        assert!(SpaceTable::zero().is_zero());
    }

    #[test]
    fn json_defaults_missing_weights_to_one() {
        let s: SpaceTable =
            serde_json::from_str(r#"{"simples":["a","b"],"weights":{"b":2.0}}"#).unwrap();
        assert_eq!(s.weights(), &[1.0, 2.0]);
        let back: SpaceTable = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display_lists_summands() {
        let s = SpaceTable::unweighted(["a", "b"]).unwrap().into_arc();
        let x = ObjectExpr::new(s, vec![2, 1]).unwrap();
        assert_eq!(x.to_string(), "2a + b");
    }
}
