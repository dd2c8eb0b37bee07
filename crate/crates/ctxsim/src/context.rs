//! Batch probability estimation and the frozen context model.

use crate::weights::{attribute_weight, Probability, Weight};
use crate::{Error, Result};

/// Ordered, unique attribute names shared by every case in a collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeSchema {
    names: Vec<String>,
}

impl AttributeSchema {
    /// Validates that every name is non-empty and unique.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyAttributeName);
            }
            if names[..i].iter().any(|seen| seen == name) {
                return Err(Error::DuplicateAttribute(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// One case: a named vector of boolean attribute values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseVector {
    name: String,
    values: Vec<bool>,
}

impl CaseVector {
    pub fn new(name: impl Into<String>, values: Vec<bool>) -> Self {
        Self {
            name: name.into(),
            values,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Frozen context: per-attribute probabilities and weights over a case
/// collection of known size. Immutable once built; the stored weights always
/// correspond to the stored probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ContextModel {
    schema: AttributeSchema,
    probabilities: Vec<Probability>,
    weights: Vec<Weight>,
    case_count: u64,
}

impl ContextModel {
    /// Builds a context from already-estimated probabilities.
    pub fn from_probabilities(
        schema: AttributeSchema,
        probabilities: Vec<Probability>,
        case_count: u64,
    ) -> Result<Self> {
        if case_count == 0 {
            return Err(Error::ZeroCaseCount);
        }
        if probabilities.len() != schema.len() {
            return Err(Error::LengthMismatch {
                left: schema.len(),
                right: probabilities.len(),
            });
        }
        let weights = probabilities.iter().map(|&p| attribute_weight(p)).collect();
        Ok(Self {
            schema,
            probabilities,
            weights,
            case_count,
        })
    }

    pub fn schema(&self) -> &AttributeSchema {
        &self.schema
    }

    pub fn probabilities(&self) -> &[Probability] {
        &self.probabilities
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn case_count(&self) -> u64 {
        self.case_count
    }

    pub fn attribute_count(&self) -> usize {
        self.schema.len()
    }

    /// Sum of all attribute weights; an upper bound for any dissimilarity
    /// under this context.
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().map(|w| w.value()).sum()
    }
}

/// Relative frequency of value 1 for each attribute over `cases`.
///
/// Counts are accumulated as integers and divided once at the end, so the
/// result is bit-identical under any reordering of the cases.
pub fn estimate_probabilities(cases: &[CaseVector]) -> Result<Vec<Probability>> {
    let first = cases.first().ok_or(Error::EmptyCases)?;
    let width = first.len();
    let mut ones = vec![0u64; width];
    for case in cases {
        if case.len() != width {
            return Err(Error::CaseLengthMismatch {
                case: case.name().to_string(),
                expected: width,
                found: case.len(),
            });
        }
        for (count, &value) in ones.iter_mut().zip(case.values()) {
            *count += u64::from(value);
        }
    }
    let total = cases.len() as f64;
    ones.into_iter()
        .map(|count| Probability::new(count as f64 / total))
        .collect()
}

/// Estimates probabilities from `cases` and freezes them, together with
/// their weights, into a [`ContextModel`].
pub fn build_context(schema: AttributeSchema, cases: &[CaseVector]) -> Result<ContextModel> {
    if cases.is_empty() {
        return Err(Error::EmptyCases);
    }
    for case in cases {
        if case.len() != schema.len() {
            return Err(Error::CaseLengthMismatch {
                case: case.name().to_string(),
                expected: schema.len(),
                found: case.len(),
            });
        }
    }
    let probabilities = estimate_probabilities(cases)?;
    ContextModel::from_probabilities(schema, probabilities, cases.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn country_schema() -> AttributeSchema {
        AttributeSchema::new(["north", "central", "communist", "neutral"]).unwrap()
    }

    fn first_country_table() -> Vec<CaseVector> {
        vec![
            CaseVector::new("Austria", vec![false, true, false, true]),
            CaseVector::new("Sweden", vec![true, false, false, true]),
            CaseVector::new("Poland", vec![false, false, true, false]),
            CaseVector::new("Hungary", vec![false, true, true, false]),
        ]
    }

    fn second_country_table() -> Vec<CaseVector> {
        vec![
            CaseVector::new("Austria", vec![false, true, false, true]),
            CaseVector::new("Sweden", vec![true, false, false, true]),
            CaseVector::new("Norway", vec![true, false, false, false]),
            CaseVector::new("Hungary", vec![false, true, true, false]),
        ]
    }

    #[test]
    fn schema_rejects_bad_names() {
        assert_eq!(
            AttributeSchema::new(["a", ""]),
            Err(Error::EmptyAttributeName)
        );
        assert_eq!(
            AttributeSchema::new(["a", "b", "a"]),
            Err(Error::DuplicateAttribute("a".to_string()))
        );
    }

    #[test]
    fn first_table_probabilities() {
        let probs = estimate_probabilities(&first_country_table()).unwrap();
        let values: Vec<f64> = probs.iter().map(|p| p.value()).collect();
        assert_eq!(values, vec![0.25, 0.5, 0.5, 0.5]);
    }

    #[test]
    fn second_table_probabilities() {
        let probs = estimate_probabilities(&second_country_table()).unwrap();
        let values: Vec<f64> = probs.iter().map(|p| p.value()).collect();
        assert_eq!(values, vec![0.5, 0.5, 0.25, 0.5]);
    }

    #[test]
    fn single_case_probabilities() {
        let probs =
            estimate_probabilities(&[CaseVector::new("only", vec![true, false])]).unwrap();
        let values: Vec<f64> = probs.iter().map(|p| p.value()).collect();
        assert_eq!(values, vec![1.0, 0.0]);
    }

    #[test]
    fn empty_collection_is_rejected() {
        assert_eq!(estimate_probabilities(&[]), Err(Error::EmptyCases));
        assert_eq!(
            build_context(country_schema(), &[]),
            Err(Error::EmptyCases)
        );
    }

    #[test]
    fn ragged_cases_are_rejected() {
        let cases = vec![
            CaseVector::new("a", vec![true, false]),
            CaseVector::new("b", vec![true]),
        ];
        assert_eq!(
            estimate_probabilities(&cases),
            Err(Error::CaseLengthMismatch {
                case: "b".to_string(),
                expected: 2,
                found: 1,
            })
        );
    }

    #[test]
    fn first_table_weights() {
        let ctx = build_context(country_schema(), &first_country_table()).unwrap();
        let weights: Vec<f64> = ctx.weights().iter().map(|w| w.value()).collect();
        assert!((weights[0] - 0.678).abs() < 5e-4);
        for &w in &weights[1..] {
            assert!((w - 1.0).abs() < 1e-12);
        }
        assert_eq!(ctx.case_count(), 4);
    }

    #[test]
    fn second_table_weights() {
        let ctx = build_context(country_schema(), &second_country_table()).unwrap();
        let weights: Vec<f64> = ctx.weights().iter().map(|w| w.value()).collect();
        assert!((weights[2] - 0.678).abs() < 5e-4);
        for &w in [weights[0], weights[1], weights[3]].iter() {
            assert!((w - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_attributes_weigh_nothing() {
        let schema = AttributeSchema::new(["x", "y"]).unwrap();
        let cases = vec![
            CaseVector::new("a", vec![true, false]),
            CaseVector::new("b", vec![true, false]),
        ];
        let ctx = build_context(schema, &cases).unwrap();
        for w in ctx.weights() {
            assert_eq!(w.value(), 0.0);
        }
        for p in ctx.probabilities() {
            assert!(p.value() == 0.0 || p.value() == 1.0);
        }
    }

    #[test]
    fn shuffling_cases_builds_an_identical_context() {
        let cases = first_country_table();
        let mut reversed = cases.clone();
        reversed.reverse();
        let a = build_context(country_schema(), &cases).unwrap();
        let b = build_context(country_schema(), &reversed).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn context_rejects_mismatched_schema() {
        let schema = AttributeSchema::new(["a", "b"]).unwrap();
        let cases = vec![CaseVector::new("x", vec![true, false, true])];
        assert!(matches!(
            build_context(schema, &cases),
            Err(Error::CaseLengthMismatch { .. })
        ));
    }

    #[test]
    fn from_probabilities_validates() {
        let schema = AttributeSchema::new(["a", "b"]).unwrap();
        let p = |v| Probability::new(v).unwrap();
        assert_eq!(
            ContextModel::from_probabilities(schema.clone(), vec![p(0.5)], 3),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
        assert_eq!(
            ContextModel::from_probabilities(schema, vec![p(0.5), p(0.5)], 0),
            Err(Error::ZeroCaseCount)
        );
    }
}
