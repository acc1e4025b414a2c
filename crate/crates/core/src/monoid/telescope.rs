//! Stable inverses and the mapping telescope of `+m` at the level of
//! components.
//!
//! A point of the telescope is a pair `(x, n)`: an element `x` at stage `n`.
//! Two pairs are identified when `x + (N - n)m ~ x' + (N - n')m` for some
//! `N >= n, n'`. When every generator divides a multiple of `m` (the monoid
//! is stably group-like with respect to `m`) these classes form a group,
//! which is the localization `M[m^-1]` and coincides with the Grothendieck
//! group.
//!
//! The homotopy that anchors `m` in the space-level statement has no content
//! at this level and is not modelled.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::completion::{relation_matrix, RelationLattice};
use super::{equal_in_monoid, Decision, FgAbelianGroup, FgCommMonoid, MonoidElement, MonoidError};
use crate::smith::{smith_normal_form, Matrix};

/// `(element, stage)` in the telescope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TelescopeClass {
    pub element: MonoidElement,
    pub stage: u64,
}

impl TelescopeClass {
    pub fn new(element: MonoidElement, stage: u64) -> Self {
        TelescopeClass { element, stage }
    }

    /// `(x1, n1) + (x2, n2) = (x1 + x2, n1 + n2)`.
    pub fn add(&self, other: &TelescopeClass) -> TelescopeClass {
        TelescopeClass {
            element: self.element.plus(&other.element),
            stage: self.stage + other.stage,
        }
    }
}

/// Whether every generator `g_i` satisfies `g_i + y ~ n·m` for some `y` and
/// `n <= search_bound`.
///
/// A generator that can never occur in any multiple of `m` gives an exact
/// `No`: starting from the support of `m`, close the support under the
/// relations (a side whose support is covered lets the other side's support
/// in); generators outside that closure appear in no element congruent to
/// a multiple of `m`. For free monoids this reduces to `m` having full
/// support.
pub fn is_stably_group_like(
    m: &FgCommMonoid,
    anchor: &MonoidElement,
    search_bound: u64,
) -> Result<Decision, MonoidError> {
    m.check(anchor)?;
    let k = m.generator_count();
    let reach = reachable_support(m, anchor);
    if reach.iter().any(|r| !r) {
        return Ok(Decision::No);
    }
    if m.is_free() {
        return Ok(Decision::Yes);
    }
    let mut covered: Vec<bool> = anchor.0.iter().map(|&a| a > 0).collect();
    let step = anchor.total().max(1);
    let mut n = 1;
    while covered.iter().any(|c| !c) && (n == 1 || n * step <= search_bound) {
        let start = anchor.scaled(n);
        m.explore_class(&start, search_bound.max(start.total()), |x| {
            for (i, &e) in x.0.iter().enumerate() {
                if e > 0 {
                    covered[i] = true;
                }
            }
            covered.iter().all(|&c| c)
        });
        n += 1;
    }
    debug_assert_eq!(covered.len(), k);
    Ok(if covered.iter().all(|&c| c) {
        Decision::Yes
    } else {
        Decision::Unknown
    })
}

fn reachable_support(m: &FgCommMonoid, anchor: &MonoidElement) -> Vec<bool> {
    let mut inside: Vec<bool> = anchor.0.iter().map(|&a| a > 0).collect();
    let covered = |inside: &[bool], x: &MonoidElement| {
        x.0.iter().zip(inside).all(|(&e, &ok)| e == 0 || ok)
    };
    loop {
        let mut changed = false;
        for (u, v) in m.relations() {
            for (from, to) in [(u, v), (v, u)] {
                if covered(&inside, from) {
                    for (i, &e) in to.0.iter().enumerate() {
                        if e > 0 && !inside[i] {
                            inside[i] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return inside;
        }
    }
}

/// The stable inverse of `c` in a free monoid with respect to the sum of
/// all generators: with `A = max_i c_i`, the inverse has exponents
/// `A - c_i`, so that `c + inverse = A·m`. Returns `(inverse, A)`.
pub fn stable_inverse(
    m: &FgCommMonoid,
    c: &MonoidElement,
    anchor: &MonoidElement,
) -> Result<(MonoidElement, u64), MonoidError> {
    m.check(c)?;
    m.check(anchor)?;
    if !m.is_free() {
        return Err(MonoidError::NotFree);
    }
    if anchor.0.iter().any(|&a| a != 1) {
        return Err(MonoidError::AnchorNotAllOnes);
    }
    let top = c.0.iter().copied().max().unwrap_or(0);
    let inverse = MonoidElement(c.0.iter().map(|&a| top - a).collect());
    Ok((inverse, top))
}

/// Decides whether two telescope points lie in the same component.
///
/// For free monoids the condition does not depend on `N`:
/// `x - n·m = x' - n'·m` as integer vectors. For presented monoids a
/// difference outside the relation lattice is an exact `No`, and inside it
/// the answer is `Yes` once the monoid is known to be stably group-like
/// (the telescope is then the group completion). Otherwise stages
/// `N = max(n, n'), …` are tried while both sides stay within
/// `search_bound`.
pub fn telescope_equiv(
    m: &FgCommMonoid,
    anchor: &MonoidElement,
    a: &TelescopeClass,
    b: &TelescopeClass,
    search_bound: u64,
) -> Result<Decision, MonoidError> {
    m.check(anchor)?;
    m.check(&a.element)?;
    m.check(&b.element)?;
    let shifted = |t: &TelescopeClass| -> Vec<i128> {
        t.element
            .0
            .iter()
            .zip(&anchor.0)
            .map(|(&x, &mi)| x as i128 - t.stage as i128 * mi as i128)
            .collect()
    };
    let (da, db) = (shifted(a), shifted(b));
    if m.is_free() {
        return Ok(if da == db { Decision::Yes } else { Decision::No });
    }
    let diff: Vec<i128> = da.iter().zip(&db).map(|(x, y)| x - y).collect();
    if !RelationLattice::new(m).contains(&diff) {
        return Ok(Decision::No);
    }
    if is_stably_group_like(m, anchor, search_bound)? == Decision::Yes {
        return Ok(Decision::Yes);
    }
    let mut stage = a.stage.max(b.stage);
    loop {
        let left = a.element.plus(&anchor.scaled(stage - a.stage));
        let right = b.element.plus(&anchor.scaled(stage - b.stage));
        if left.total().max(right.total()) > search_bound && stage > a.stage.max(b.stage) {
            return Ok(Decision::Unknown);
        }
        match equal_in_monoid(m, &left, &right, search_bound)? {
            Decision::Yes => return Ok(Decision::Yes),
            d if anchor.total() == 0 => return Ok(d),
            _ => {}
        }
        stage += 1;
    }
}

/// Components of the telescope as an abelian group.
///
/// Computed as the localization `M[m^-1] = <g_1..g_k, t | u_i = v_i, m + t = 0>`,
/// which is a group whenever `M` is stably group-like with respect to `m`;
/// its invariants come from the determinantal divisors of the
/// `(k+1) × (r+1)` relation matrix (gcds of all `j × j` minors) rather than
/// from the elimination used by [`grothendieck_group`](super::grothendieck_group).
pub fn telescope_pi0_group(
    m: &FgCommMonoid,
    anchor: &MonoidElement,
    search_bound: u64,
) -> Result<FgAbelianGroup, MonoidError> {
    match is_stably_group_like(m, anchor, search_bound)? {
        Decision::Yes => {}
        other => return Err(MonoidError::NotStablyGroupLike(other)),
    }
    let k = m.generator_count();
    let base = relation_matrix(m);
    let r = base.cols();
    let mut localized: Matrix<BigInt> = Matrix::zeros(k + 1, r + 1);
    for i in 0..k {
        for j in 0..r {
            localized[(i, j)] = base[(i, j)].clone();
        }
        localized[(i, r)] = BigInt::from(anchor.0[i]);
    }
    localized[(k, r)] = BigInt::from(1);

    let factors = match determinantal_invariants(&localized) {
        Some(f) => f,
        // too many minors: fall back to elimination on the same matrix
        None => smith_normal_form(&localized).invariant_factors(),
    };
    Ok(FgAbelianGroup::from_invariant_factors(k + 1, &factors))
}

/// Limit on the number of minors examined at one size.
const MINOR_LIMIT: u128 = 200_000;

/// Invariant factors `D_j / D_{j-1}`, where `D_j` is the gcd of the `j × j`
/// minors. `None` if the enumeration would exceed [`MINOR_LIMIT`].
fn determinantal_invariants(a: &Matrix<BigInt>) -> Option<Vec<BigInt>> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut factors = Vec::new();
    let mut previous = BigInt::from(1);
    for size in 1..=rows.min(cols) {
        if binomial(rows, size) * binomial(cols, size) > MINOR_LIMIT {
            return None;
        }
        let mut g = BigInt::zero();
        for rs in combinations(rows, size) {
            for cs in combinations(cols, size) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&bareiss_determinant(minor));
                if g == BigInt::from(1) && size > 1 {
                    break;
                }
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &previous);
        previous = g;
    }
    Some(factors)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - k + i {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        current = next;
        Some(out)
    })
}

/// Fraction-free Gaussian elimination.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::from(1) } else { a[n - 1][n - 1].clone() };
    (sign * det).abs()
}
