//! Finitely generated commutative monoids at the level of path components.
//!
//! A monoid is given by `k` generators and relations `u = v` between
//! exponent vectors; elements are exponent vectors in `N^k` and two elements
//! are equal when they are related by the congruence the relations generate.
//! A free monoid is the case of no relations. Generators may carry positive
//! grades (dimensions), in which case every relation must preserve grade.

mod completion;
mod telescope;
mod text;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use completion::{grothendieck_group, FgAbelianGroup};
pub use telescope::{
    is_stably_group_like, stable_inverse, telescope_equiv, telescope_pi0_group, TelescopeClass,
};
pub use text::parse_monoid;

/// Default bound on the total exponent explored by congruence searches.
pub const DEFAULT_SEARCH_BOUND: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("element has {found} coordinates, monoid has {expected} generators")]
    LengthMismatch { expected: usize, found: usize },
    #[error("grades list has {found} entries for {expected} generators")]
    GradeCount { expected: usize, found: usize },
    #[error("generator grades must be positive")]
    ZeroGrade,
    #[error("relation {index} is not grade-homogeneous ({left} != {right})")]
    Inhomogeneous { index: usize, left: u64, right: u64 },
    #[error("operation requires a free monoid")]
    NotFree,
    #[error("anchor must be the sum of all generators")]
    AnchorNotAllOnes,
    #[error("monoid is not stably group-like with respect to the anchor ({0})")]
    NotStablyGroupLike(Decision),
    #[error("malformed monoid file at line {line}: {message}")]
    Format { line: usize, message: String },
}

/// Outcome of a bounded decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    /// The search bound was exhausted before the question was settled.
    Unknown,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        })
    }
}

/// An exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonoidElement(pub Vec<u64>);

impl MonoidElement {
    pub fn zero(k: usize) -> Self {
        MonoidElement(vec![0; k])
    }

    /// The `i`-th generator of a monoid on `k` generators.
    pub fn generator(k: usize, i: usize) -> Self {
        let mut v = vec![0; k];
        v[i] = 1;
        MonoidElement(v)
    }

    /// The sum of all `k` generators.
    pub fn all_ones(k: usize) -> Self {
        MonoidElement(vec![1; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, n: u64) -> Self {
        MonoidElement(self.0.iter().map(|x| x * n).collect())
    }

    /// `self - other` if `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MonoidElement)
    }

    pub(crate) fn plus(&self, other: &Self) -> Self {
        MonoidElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Signed difference as integers.
    pub fn difference(&self, other: &Self) -> Vec<i128> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i128 - b as i128)
            .collect()
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u64>> for MonoidElement {
    fn from(v: Vec<u64>) -> Self {
        MonoidElement(v)
    }
}

/// A finitely generated commutative monoid, free or presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgCommMonoid {
    generator_count: usize,
    grades: Option<Vec<u64>>,
    relations: Vec<(MonoidElement, MonoidElement)>,
}

impl FgCommMonoid {
    pub fn new(
        generator_count: usize,
        grades: Option<Vec<u64>>,
        relations: Vec<(MonoidElement, MonoidElement)>,
    ) -> Result<Self, MonoidError> {
        if let Some(g) = &grades {
            if g.len() != generator_count {
                return Err(MonoidError::GradeCount {
                    expected: generator_count,
                    found: g.len(),
                });
            }
            if g.contains(&0) {
                return Err(MonoidError::ZeroGrade);
            }
        }
        let m = FgCommMonoid {
            generator_count,
            grades,
            relations: Vec::new(),
        };
        for (index, (u, v)) in relations.iter().enumerate() {
            m.check(u)?;
            m.check(v)?;
            if let (Some(gu), Some(gv)) = (m.grade(u), m.grade(v)) {
                if gu != gv {
                    return Err(MonoidError::Inhomogeneous {
                        index,
                        left: gu,
                        right: gv,
                    });
                }
            }
        }
        Ok(FgCommMonoid { relations, ..m })
    }

    pub fn free(generator_count: usize) -> Self {
        FgCommMonoid {
            generator_count,
            grades: None,
            relations: Vec::new(),
        }
    }

    pub fn free_graded(grades: Vec<u64>) -> Result<Self, MonoidError> {
        Self::new(grades.len(), Some(grades), Vec::new())
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn grades(&self) -> Option<&[u64]> {
        self.grades.as_deref()
    }

    pub fn relations(&self) -> &[(MonoidElement, MonoidElement)] {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// The grade of `x`, for graded monoids.
    pub fn grade(&self, x: &MonoidElement) -> Option<u64> {
        self.grades
            .as_ref()
            .map(|g| g.iter().zip(&x.0).map(|(a, b)| a * b).sum())
    }

    pub fn check(&self, x: &MonoidElement) -> Result<(), MonoidError> {
        if x.len() == self.generator_count {
            Ok(())
        } else {
            Err(MonoidError::LengthMismatch {
                expected: self.generator_count,
                found: x.len(),
            })
        }
    }

    /// Elements reachable from `x` by one application of a relation.
    pub(crate) fn neighbors<'a>(
        &'a self,
        x: &'a MonoidElement,
    ) -> impl Iterator<Item = MonoidElement> + 'a {
        self.relations.iter().flat_map(move |(u, v)| {
            let forward = x.checked_sub(u).map(|w| w.plus(v));
            let backward = x.checked_sub(v).map(|w| w.plus(u));
            forward.into_iter().chain(backward)
        })
    }

    /// Breadth-first exploration of the congruence class of `start`,
    /// restricted to elements of total exponent at most `bound`.
    ///
    /// Stops early when `stop` returns true for a visited element. Returns
    /// whether the stop condition fired and whether any neighbor was
    /// discarded by the bound.
    pub(crate) fn explore_class(
        &self,
        start: &MonoidElement,
        bound: u64,
        mut stop: impl FnMut(&MonoidElement) -> bool,
    ) -> ClassSearch {
        let mut seen: HashSet<MonoidElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        let mut truncated = false;
        while let Some(x) = queue.pop_front() {
            if stop(&x) {
                return ClassSearch {
                    hit: true,
                    truncated,
                };
            }
            for y in self.neighbors(&x) {
                if y.total() > bound {
                    truncated = true;
                    continue;
                }
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        ClassSearch {
            hit: false,
            truncated,
        }
    }
}

pub(crate) struct ClassSearch {
    pub hit: bool,
    pub truncated: bool,
}

/// Componentwise sum.
pub fn add(
    m: &FgCommMonoid,
    a: &MonoidElement,
    b: &MonoidElement,
) -> Result<MonoidElement, MonoidError> {
    m.check(a)?;
    m.check(b)?;
    Ok(a.plus(b))
}

/// Decides `a ~ b` in the congruence generated by the relations.
///
/// Free monoids are decided by vector equality. For presented monoids a
/// grade mismatch or a difference outside the relation lattice gives an
/// exact `No` (both are invariants of the congruence); otherwise the class
/// of `a` is searched breadth-first up to total exponent `search_bound`.
pub fn equal_in_monoid(
    m: &FgCommMonoid,
    a: &MonoidElement,
    b: &MonoidElement,
    search_bound: u64,
) -> Result<Decision, MonoidError> {
    m.check(a)?;
    m.check(b)?;
    if a == b {
        return Ok(Decision::Yes);
    }
    if m.is_free() || m.grade(a) != m.grade(b) {
        return Ok(Decision::No);
    }
    if !completion::RelationLattice::new(m).contains_difference(a, b) {
        return Ok(Decision::No);
    }
    let search = m.explore_class(a, search_bound.max(a.total()), |x| x == b);
    Ok(if search.hit {
        Decision::Yes
    } else if search.truncated {
        Decision::Unknown
    } else {
        Decision::No
    })
}
