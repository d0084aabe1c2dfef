//! Collaboration of per-remark opinions and five-level classification.
//!
//! The collaborated opinion is a weighted arithmetic mean over every remark
//! that produced a value; holder weights default to 1, which reduces to a
//! plain average. Classification buckets an opinion value into five levels
//! with boundaries at 2, 4.5, 5.5, and 8.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::precision::Precision;
use crate::scorer::RemarkScore;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AggregateError {
    #[error("opinion value {0} is outside [0, 10]")]
    ScoreOutOfRange(f64),
    #[error("no remark produced an opinion value")]
    NoContributions,
    #[error("no weight listed for opinion holder `{0}`")]
    UnknownHolder(String),
    #[error("weight {weight} for opinion holder `{holder_id}` is not positive")]
    InvalidWeight { holder_id: String, weight: f64 },
}

/// Five-level opinion scale, ordered lowest to highest.
///
/// Each boundary belongs to the higher bucket, so every value in [0, 10]
/// classifies to exactly one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpinionBucket {
    VeryLow,
    Low,
    Moderate,
    High,
    VeryHigh,
}

impl OpinionBucket {
    pub fn label(self) -> &'static str {
        match self {
            OpinionBucket::VeryLow => "very low",
            OpinionBucket::Low => "low",
            OpinionBucket::Moderate => "moderate",
            OpinionBucket::High => "high",
            OpinionBucket::VeryHigh => "very high",
        }
    }

    /// Numeric rank, 0 (very low) through 4 (very high).
    pub fn level(self) -> u8 {
        self as u8
    }

    /// Inverse of [`OpinionBucket::label`].
    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "very low" => Some(OpinionBucket::VeryLow),
            "low" => Some(OpinionBucket::Low),
            "moderate" => Some(OpinionBucket::Moderate),
            "high" => Some(OpinionBucket::High),
            "very high" => Some(OpinionBucket::VeryHigh),
            _ => None,
        }
    }
}

impl fmt::Display for OpinionBucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An opinion holder's weight in the collaboration; must be positive.
#[derive(Debug, Clone, PartialEq)]
pub struct HolderWeight {
    pub holder_id: String,
    pub weight: f64,
}

impl HolderWeight {
    pub fn new(holder_id: impl Into<String>, weight: f64) -> Self {
        Self {
            holder_id: holder_id.into(),
            weight,
        }
    }
}

/// One holder's contribution to a collaborated opinion.
#[derive(Debug, Clone, PartialEq)]
pub struct Contribution {
    pub holder_id: String,
    pub value: f64,
    pub weight: f64,
}

/// The combined opinion over all contributing holders.
#[derive(Debug, Clone, PartialEq)]
pub struct CollaboratedOpinion {
    pub value: f64,
    pub bucket: OpinionBucket,
    /// Contributing (holder, value, weight) triples in input order.
    pub contributions: Vec<Contribution>,
    /// Holders whose remarks carried no opinion, in input order.
    pub skipped: Vec<String>,
}

/// Bucket an opinion value: [0,2) very low, [2,4.5) low, [4.5,5.5) moderate,
/// [5.5,8) high, [8,10] very high.
pub fn classify(value: f64) -> Result<OpinionBucket, AggregateError> {
    if !(0.0..=10.0).contains(&value) {
        return Err(AggregateError::ScoreOutOfRange(value));
    }
    Ok(if value < 2.0 {
        OpinionBucket::VeryLow
    } else if value < 4.5 {
        OpinionBucket::Low
    } else if value < 5.5 {
        OpinionBucket::Moderate
    } else if value < 8.0 {
        OpinionBucket::High
    } else {
        OpinionBucket::VeryHigh
    })
}

/// Collaborate remark scores with double-precision accumulation.
pub fn collaborate(
    scores: &[RemarkScore],
    weights: Option<&[HolderWeight]>,
) -> Result<CollaboratedOpinion, AggregateError> {
    collaborate_with(scores, weights, Precision::F64)
}

/// Collaborate remark scores into one opinion.
///
/// Each score's `remark_ref` names its opinion holder. Scores without a
/// value are skipped, not averaged. When `weights` is given it must cover
/// every contributing holder with a positive weight; absent weights mean 1.0
/// everywhere, the plain average.
///
/// Summation runs over the (value, weight) pairs in a canonical sorted
/// order, so the result is exactly permutation-invariant.
pub fn collaborate_with(
    scores: &[RemarkScore],
    weights: Option<&[HolderWeight]>,
    precision: Precision,
) -> Result<CollaboratedOpinion, AggregateError> {
    let weight_table: Option<BTreeMap<&str, f64>> = weights.map(|list| {
        list.iter()
            .map(|w| (w.holder_id.as_str(), w.weight))
            .collect()
    });

    let mut contributions = Vec::new();
    let mut skipped = Vec::new();
    for score in scores {
        let holder_id = score.remark_ref().to_string();
        match score.value() {
            None => skipped.push(holder_id),
            Some(value) => {
                let weight = match &weight_table {
                    None => 1.0,
                    Some(table) => *table
                        .get(holder_id.as_str())
                        .ok_or_else(|| AggregateError::UnknownHolder(holder_id.clone()))?,
                };
                if !(weight > 0.0 && weight.is_finite()) {
                    return Err(AggregateError::InvalidWeight { holder_id, weight });
                }
                contributions.push(Contribution {
                    holder_id,
                    value,
                    weight,
                });
            }
        }
    }

    if contributions.is_empty() {
        return Err(AggregateError::NoContributions);
    }

    let mut pairs: Vec<(f64, f64)> = contributions.iter().map(|c| (c.value, c.weight)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let mut weighted_sum = 0.0;
    let mut weight_sum = 0.0;
    for (value, weight) in pairs {
        weighted_sum = precision.add(weighted_sum, precision.mul(weight, value));
        weight_sum = precision.add(weight_sum, weight);
    }
    // Clamp so accumulated rounding can never push the mean past the scale.
    let value = precision.div(weighted_sum, weight_sum).clamp(0.0, 10.0);
    let bucket = classify(value).expect("clamped value is in range");

    Ok(CollaboratedOpinion {
        value,
        bucket,
        contributions,
        skipped,
    })
}
