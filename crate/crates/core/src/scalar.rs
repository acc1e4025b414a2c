//! Scalar abstractions shared by the exact and floating-point code paths.
//!
//! Two families are used throughout the crate:
//!
//! * [`IntScalar`]: a Euclidean integer type. Smith normal form and lattice
//!   computations are generic over it (`i64`, `i128`, [`BigInt`]).
//! * [`Scalar`]: a field-like type into which integer polynomial
//!   coefficients can be embedded, used for evaluating polynomial systems
//!   (`f32`, `f64`, [`BigRational`]).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive};

/// Signed Euclidean integers.
///
/// Fixed-width implementors can overflow on large inputs; [`BigInt`] is the
/// type used by every public entry point that needs guaranteed exactness.
pub trait IntScalar: Integer + Signed + Clone + Debug {}

impl<T: Integer + Signed + Clone + Debug> IntScalar for T {}

/// A number type polynomial systems can be evaluated in.
pub trait Scalar: Num + Clone + Debug {
    /// Embeds an integer coefficient.
    fn from_bigint(value: &BigInt) -> Self;

    /// Magnitude as `f64`, used for tolerance comparisons.
    fn magnitude(&self) -> f64;
}

impl Scalar for f64 {
    fn from_bigint(value: &BigInt) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    fn from_bigint(value: &BigInt) -> Self {
        value.to_f32().unwrap_or(f32::NAN)
    }

    fn magnitude(&self) -> f64 {
        f64::from(self.abs())
    }
}

impl Scalar for BigRational {
    fn from_bigint(value: &BigInt) -> Self {
        Ratio::from_integer(value.clone())
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for Ratio<i64> {
    fn from_bigint(value: &BigInt) -> Self {
        Ratio::from_integer(value.to_i64().expect("coefficient exceeds i64"))
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

/// `true` when every entry is exactly zero.
pub fn all_zero<S: Scalar>(values: &[S]) -> bool {
    values.iter().all(|v| v.is_zero())
}

/// Largest magnitude in `values` (0 for an empty slice).
pub fn max_magnitude<S: Scalar>(values: &[S]) -> f64 {
    values.iter().map(Scalar::magnitude).fold(0.0, f64::max)
}

/// Serializes a [`BigInt`] as a JSON number when it fits in `i64`, otherwise
/// as a decimal string. Deserialization accepts both.
pub(crate) mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    fn to_repr(value: &BigInt) -> Repr {
        match value.to_i64() {
            Some(v) => Repr::Small(v),
            None => Repr::Big(value.to_string()),
        }
    }

    fn from_repr<E: serde::de::Error>(repr: Repr) -> Result<BigInt, E> {
        match repr {
            Repr::Small(v) => Ok(BigInt::from(v)),
            Repr::Big(s) => s.parse().map_err(E::custom),
        }
    }

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(value).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            values.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(from_repr::<D::Error>)
                .collect()
        }
    }
}
