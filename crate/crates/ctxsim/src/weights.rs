//! Entropy-based attribute weights.
//!
//! Two independent cases agree on a boolean attribute with probability
//! `p^2 + (1-p)^2 = 1 - 2p + 2p^2`, where `p` is the probability that the
//! attribute assumes 1. The weight of the attribute is the information
//! carried by a mismatch on it: `-log2(1 - 2p + 2p^2)` bits. Constant
//! attributes weigh nothing; a 50/50 attribute weighs one full bit.

use crate::{Error, Result};

const LN_2: f64 = std::f64::consts::LN_2;

/// Probability that a boolean attribute assumes 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    /// Validates that `value` lies in `[0, 1]`.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::ProbabilityOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Attribute weight in bits; always within `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Probability that two independent cases agree on the attribute.
///
/// Minimum 1/2 at `p = 1/2`, so logarithms of this quantity never approach
/// a singularity.
fn agreement_probability(p: f64) -> f64 {
    1.0 - 2.0 * p + 2.0 * p * p
}

fn log2_case_count(case_count: u64) -> Result<f64> {
    if case_count == 0 {
        return Err(Error::ZeroCaseCount);
    }
    Ok((case_count as f64).ln() / LN_2)
}

/// Entropy weight of an attribute: `-log2(1 - 2p + 2p^2)` bits.
///
/// Zero when the attribute is constant (`p` is 0 or 1), maximal (one bit)
/// at `p = 1/2`, and symmetric about 1/2.
pub fn attribute_weight(p: Probability) -> Weight {
    let w = -(agreement_probability(p.value()).ln() / LN_2);
    // log of exactly 1 yields -0.0
    Weight(if w == 0.0 { 0.0 } else { w })
}

/// Expected average remaining decision-tree path length, in bits, after
/// splitting `case_count` equiprobable cases on an attribute with
/// 1-probability `p`: `(1 - 2p + 2p^2) * log2(case_count)`.
///
/// Minimal (`log2(case_count) / 2`) at `p = 1/2`, maximal (`log2(case_count)`)
/// when the attribute is constant and splits nothing.
pub fn expected_path_length(p: Probability, case_count: u64) -> Result<f64> {
    Ok(agreement_probability(p.value()) * log2_case_count(case_count)?)
}

/// Expected remaining path length after splitting on two statistically
/// independent attributes: the agreement probabilities multiply.
pub fn joint_expected_path_length(
    p1: Probability,
    p2: Probability,
    case_count: u64,
) -> Result<f64> {
    Ok(agreement_probability(p1.value())
        * agreement_probability(p2.value())
        * log2_case_count(case_count)?)
}

/// Additive similarity weight: the negated attribute weight.
pub fn similarity_weight(p: Probability) -> f64 {
    let w = attribute_weight(p).value();
    if w == 0.0 {
        0.0
    } else {
        -w
    }
}
