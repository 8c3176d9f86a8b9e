//! Exact scalars for tableau entries and action coefficients.
//!
//! Everything in this crate is generic over [`Field`], which is implemented
//! for every `num_rational::Ratio<T>` with a signed integer backend. The
//! default scalar is the arbitrary-precision [`crate::Rational`].
//!
//! Every arrow condition on a graph reduces to one primitive: whether the
//! difference of two entries is an integer, and if so which one. That is
//! [`Field::integer_difference`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

/// An exact ordered field of scalars.
pub trait Field:
    Clone + Ord + Hash + Debug + Display + FromStr + num_traits::Num + Signed + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_int(value: i64) -> Self;

    /// The integer `self - other`, or `None` when the difference is not integral.
    fn integer_difference(&self, other: &Self) -> Option<i64>;

    /// `self - ⌊self⌋`, equal for two values exactly when they differ by an integer.
    fn residue(&self) -> Self;

    /// `true` when the value has denominator one.
    fn is_integral(&self) -> bool {
        self.integer_difference(&Self::zero()).is_some()
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer
        + Clone
        + Signed
        + Hash
        + Debug
        + Display
        + FromStr
        + From<i64>
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_int(value: i64) -> Self {
        Ratio::from_integer(T::from(value))
    }

    fn residue(&self) -> Self {
        self.clone() - self.floor()
    }

    fn integer_difference(&self, other: &Self) -> Option<i64> {
        let diff = self.clone() - other.clone();
        if diff.is_integer() {
            // entries of interest stay far below i64 range
            Some(
                diff.to_integer()
                    .to_i64()
                    .expect("integer difference overflows i64"),
            )
        } else {
            None
        }
    }
}

/// `a - b ∈ ℤ_{≥ bound}`.
pub fn diff_at_least<S: Field>(a: &S, b: &S, bound: i64) -> bool {
    matches!(a.integer_difference(b), Some(d) if d >= bound)
}

/// `a - b ∈ ℤ_{≤ bound}`.
pub fn diff_at_most<S: Field>(a: &S, b: &S, bound: i64) -> bool {
    matches!(a.integer_difference(b), Some(d) if d <= bound)
}

/// `a - b ∈ ℤ`.
pub fn integrally_linked<S: Field>(a: &S, b: &S) -> bool {
    a.integer_difference(b).is_some()
}

/// Parses a scalar written as `p/q` or `p`, tolerating surrounding spaces.
pub fn parse_scalar<S: Field>(text: &str) -> Result<S, ParseScalarError> {
    let trimmed = text.trim();
    let value = trimmed
        .parse::<S>()
        .map_err(|_| ParseScalarError(trimmed.to_string()))?;
    Ok(value)
}

/// Parses a comma separated list of scalars, e.g. `"-1/6,-2/3,5/6"`.
pub fn parse_scalar_list<S: Field>(text: &str) -> Result<Vec<S>, ParseScalarError> {
    text.split(',').map(parse_scalar).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}` (expected p/q or p)")]
pub struct ParseScalarError(pub String);
