//! Component-level computations around deformation K-theory of discrete
//! groups: group expressions and presentations, finite groups and their
//! irreducible degrees, commutative monoids and their group completions,
//! representation monoids, ranks of `K^def_*`, and the polynomial systems
//! presenting representation varieties.
//!
//! The integer linear algebra is generic over [`scalar::IntScalar`] and
//! polynomial evaluation over [`scalar::Scalar`]; the aliases below fix the
//! types used by the public entry points.

pub mod dsl;
mod error;
pub mod groups;
pub mod kdef;
pub mod monoid;
pub mod rep_monoid;
pub mod scalar;
pub mod smith;
pub mod variety;

pub use error::Error;

pub use dsl::{parse_group_expr, parse_presentation, FinitePresentation, GroupExpr, ParseError};
pub use groups::{build_group, irrep_data, BuildOptions, FiniteGroup, IrrepCache, IrrepData};
pub use kdef::{homotopy_groups, kdef, GradedRanks, KuWedge};
pub use monoid::{
    add, equal_in_monoid, grothendieck_group, Decision, FgAbelianGroup, FgCommMonoid,
    MonoidElement,
};
pub use rep_monoid::{count_components, free_product_pi0, k0, pi0_rep_monoid, Pi0RepMonoid};
pub use variety::{evaluate_system, gl_variety, unitary_variety, PolynomialSystem, VarietyOptions};

/// Exact rationals, the default scalar for residual evaluation.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = smith::Matrix<num_bigint::BigInt>;

/// Smith normal form over arbitrary-precision integers.
pub type IntSmithForm = smith::SmithForm<num_bigint::BigInt>;

/// Integer polynomial, as emitted by the variety builders.
pub type IntPolynomial = variety::Polynomial<num_bigint::BigInt>;

pub type Result<T, E = Error> = std::result::Result<T, E>;
