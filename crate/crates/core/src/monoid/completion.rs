//! Group completion.
//!
//! The Grothendieck group of `<g_1..g_k | u_i = v_i>` is `Z^k / <u_i - v_i>`:
//! group completion is left adjoint to the inclusion of abelian groups into
//! commutative monoids, so it carries a presentation to the abelian group
//! with the same generators and relations. The quotient is read off from
//! the Smith normal form of the `k × r` matrix whose columns are the
//! relation differences.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{FgCommMonoid, MonoidElement};
use crate::scalar::bigint_json;
use crate::smith::{smith_normal_form, Matrix, SmithForm};

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_t` with `d_1 | d_2 | …` and every `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    pub rank: usize,
    #[serde(with = "bigint_json::vec")]
    pub torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// The quotient `Z^generators / L` where `L` has the given nonzero
    /// invariant factors.
    pub fn from_invariant_factors(generators: usize, factors: &[BigInt]) -> Self {
        assert!(factors.len() <= generators, "more invariant factors than generators");
        FgAbelianGroup {
            rank: generators - factors.len(),
            torsion: factors.iter().filter(|d| !d.is_one()).map(|d| d.abs()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Checks the divisibility chain.
    pub fn is_canonical(&self) -> bool {
        self.torsion.iter().all(|d| *d >= BigInt::from(2))
            && self
                .torsion
                .windows(2)
                .all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// The sublattice of `Z^k` spanned by the relation differences `u_i - v_i`.
pub(crate) struct RelationLattice {
    smith: SmithForm<BigInt>,
    generators: usize,
}

impl RelationLattice {
    pub(crate) fn new(m: &FgCommMonoid) -> Self {
        RelationLattice {
            smith: smith_normal_form(&relation_matrix(m)),
            generators: m.generator_count(),
        }
    }

    pub(crate) fn contains(&self, v: &[i128]) -> bool {
        let b: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.smith.in_column_lattice(&b)
    }

    pub(crate) fn contains_difference(&self, a: &MonoidElement, b: &MonoidElement) -> bool {
        self.contains(&a.difference(b))
    }

    pub(crate) fn quotient(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_invariant_factors(self.generators, &self.smith.invariant_factors())
    }
}

/// `k × r` matrix with columns `u_i - v_i`.
pub(crate) fn relation_matrix(m: &FgCommMonoid) -> Matrix<BigInt> {
    let columns: Vec<Vec<BigInt>> = m
        .relations()
        .iter()
        .map(|(u, v)| u.difference(v).into_iter().map(BigInt::from).collect())
        .collect();
    Matrix::from_columns(m.generator_count(), &columns)
}

/// The Grothendieck group of `m`.
pub fn grothendieck_group(m: &FgCommMonoid) -> FgAbelianGroup {
    RelationLattice::new(m).quotient()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn presented(k: usize, rels: &[(&[u64], &[u64])]) -> FgCommMonoid {
        FgCommMonoid::new(
            k,
            None,
            rels.iter()
                .map(|(u, v)| (MonoidElement(u.to_vec()), MonoidElement(v.to_vec())))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn free_monoid() {
        assert_eq!(grothendieck_group(&FgCommMonoid::free(3)), FgAbelianGroup::free(3));
        assert_eq!(grothendieck_group(&FgCommMonoid::free(0)), FgAbelianGroup::trivial());
    }

    #[test]
    fn idempotent_generator_collapses() {
        let g = grothendieck_group(&presented(1, &[(&[1], &[2])]));
        assert!(g.is_trivial());
    }

    #[test]
    fn two_x_equals_two_y() {
        let g = grothendieck_group(&presented(2, &[(&[2, 0], &[0, 2])]));
        assert_eq!(g.rank, 1);
        assert_eq!(g.torsion, vec![BigInt::from(2)]);
        assert_eq!(g.to_string(), "Z + Z/2");
    }

    #[test]
    fn torsion_chain() {
        // 2x = 0 and 3y = 0 gives Z/6
        let g = grothendieck_group(&presented(2, &[(&[2, 0], &[0, 0]), (&[0, 3], &[0, 0])]));
        assert_eq!(g, FgAbelianGroup { rank: 0, torsion: vec![BigInt::from(6)] });
        assert!(g.is_canonical());
    }

    #[test]
    fn json_shape() {
        let g = FgAbelianGroup { rank: 2, torsion: vec![BigInt::from(2), BigInt::from(4)] };
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"rank":2,"torsion":[2,4]}"#);
        assert_eq!(serde_json::from_str::<FgAbelianGroup>(&s).unwrap(), g);
    }
}
