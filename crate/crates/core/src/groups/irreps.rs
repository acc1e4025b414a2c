//! Number and degrees of the complex irreducible representations.
//!
//! Over the complex numbers the number of irreducible representations equals
//! the number of conjugacy classes. This identity, the fact that degrees
//! divide the group order, and the Burnside–Dixon eigenvector method below
//! are standard character theory.
//!
//! Degrees are found by the first strategy that succeeds:
//!
//! 1. abelian groups: all degrees are 1;
//! 2. integer search: the multisets of `k` divisors of `N` containing a 1
//!    whose squares sum to `N`; accepted when exactly one exists;
//! 3. Burnside–Dixon: common eigenvectors of the class-multiplication
//!    matrices over a prime field `F_p` with `p ≡ 1 (mod exponent)`;
//!
//! otherwise [`GroupError::DegreesUnavailable`] is returned.

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError, IrrepCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeMethod {
    Abelian,
    UniqueSearch,
    BurnsideDixon,
}

/// Class count and irreducible degrees (ascending) of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepData {
    pub class_count: usize,
    pub degrees: Vec<u64>,
    pub method: DegreeMethod,
}

impl IrrepData {
    /// Checks the counting identities every degree multiset satisfies.
    pub fn validate(&self, order: usize) -> bool {
        self.degrees.len() == self.class_count
            && self.degrees.contains(&1)
            && self.degrees.iter().map(|d| d * d).sum::<u64>() == order as u64
    }
}

/// Computes [`IrrepData`] for `g`.
pub fn irrep_data(g: &FiniteGroup) -> Result<IrrepData, GroupError> {
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let n = g.order() as u64;

    if g.is_abelian() {
        return Ok(IrrepData {
            class_count: k,
            degrees: vec![1; k],
            method: DegreeMethod::Abelian,
        });
    }
    if let Some(degrees) = unique_degree_solution(n, k) {
        return Ok(IrrepData {
            class_count: k,
            degrees,
            method: DegreeMethod::UniqueSearch,
        });
    }
    match dixon_degrees(g, &classes) {
        Some(degrees) => Ok(IrrepData {
            class_count: k,
            degrees,
            method: DegreeMethod::BurnsideDixon,
        }),
        None => Err(GroupError::DegreesUnavailable { class_count: k }),
    }
}

/// [`irrep_data`] with a lookup in, and store to, an optional cache.
pub fn irrep_data_cached(
    g: &FiniteGroup,
    cache: Option<&IrrepCache>,
) -> Result<IrrepData, GroupError> {
    if let Some(hit) = cache.and_then(|c| c.get(g)) {
        return Ok(hit);
    }
    let data = irrep_data(g)?;
    if let Some(c) = cache {
        // a failed cache write only costs a recomputation next time
        let _ = c.put(g, &data);
    }
    Ok(data)
}

/// All nondecreasing multisets of `k` divisors of `n` with a 1 whose squares
/// sum to `n`, stopping after `limit` solutions.
pub(crate) fn degree_candidates(n: u64, k: usize, limit: usize) -> Vec<Vec<u64>> {
    let divisors: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n % d == 0).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    if k == 0 {
        return out;
    }
    // the trivial representation is always present
    current.push(1);
    search(&divisors, 0, n - 1, k - 1, &mut current, &mut out, limit);
    out
}

fn search(
    divisors: &[u64],
    start: usize,
    remaining: u64,
    slots: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if slots == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    for (i, &d) in divisors.iter().enumerate().skip(start) {
        let sq = d * d;
        // every remaining slot holds at least d
        if sq * slots as u64 > remaining {
            break;
        }
        current.push(d);
        search(divisors, i, remaining - sq, slots - 1, current, out, limit);
        current.pop();
    }
}

fn unique_degree_solution(n: u64, k: usize) -> Option<Vec<u64>> {
    let mut found = degree_candidates(n, k, 2);
    (found.len() == 1).then(|| found.pop().unwrap())
}

/// The class-multiplication tensor has `k^3` entries.
const DIXON_MAX_CLASSES: usize = 128;

/// Burnside–Dixon over `F_p`.
pub(crate) fn dixon_degrees(g: &FiniteGroup, classes: &[Vec<usize>]) -> Option<Vec<u64>> {
    let n = g.order();
    let k = classes.len();
    if k > DIXON_MAX_CLASSES {
        return None;
    }
    let mut class_of = vec![0usize; n];
    for (j, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = j;
        }
    }
    let p = dixon_prime(g.exponent() as u64, n as u64);

    // coeff[j][l][m] = #{(x, y) in C_j × C_l : x·y = g_m}
    let mut coeff = vec![vec![vec![0u64; k]; k]; k];
    for (m, class) in classes.iter().enumerate() {
        let rep = class[0];
        for x in 0..n {
            let y = g.mul(g.inv(x), rep);
            coeff[class_of[x]][class_of[y]][m] += 1;
        }
    }
    let matrices: Vec<Vec<Vec<u64>>> = coeff
        .iter()
        .map(|mj| mj.iter().map(|row| row.iter().map(|&c| c % p).collect()).collect())
        .collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| unit(k, i)).collect()];
    for mj in &matrices {
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_by_eigenvalues(mj, &space, p)?);
        }
        spaces = next;
        if spaces.len() == k {
            break;
        }
    }
    if spaces.len() != k {
        return None;
    }

    let inverse_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
    let mut degrees = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        let head = v[0];
        if head == 0 {
            return None;
        }
        let scale = inv_mod(head, p);
        let w: Vec<u64> = v.iter().map(|&x| x * scale % p).collect();
        // sum_j w_j w_j* / |C_j| = N / d^2
        let mut s = 0u64;
        for j in 0..k {
            let term = w[j] * w[inverse_class[j]] % p * inv_mod(classes[j].len() as u64 % p, p) % p;
            s = (s + term) % p;
        }
        if s == 0 {
            return None;
        }
        let d2 = (n as u64 % p) * inv_mod(s, p) % p;
        let d = integer_sqrt(d2)?;
        if d == 0 || n as u64 % d != 0 {
            return None;
        }
        degrees.push(d);
    }
    degrees.sort_unstable();
    (degrees.iter().map(|d| d * d).sum::<u64>() == n as u64).then_some(degrees)
}

/// Smallest prime `p > n` with `p ≡ 1 (mod e)`.
fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = (n / e) * e + 1;
    if p <= n {
        p += e;
    }
    while !is_prime(p) {
        p += e;
    }
    p
}

fn is_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| x % d != 0)
}

fn integer_sqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r * r == x).then_some(r)
}

fn unit(k: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Splits the invariant subspace spanned by `basis` into eigenspaces of `m`.
/// Returns `None` when `m` is not diagonalizable over `F_p` on the subspace.
fn split_by_eigenvalues(
    m: &[Vec<u64>],
    basis: &[Vec<u64>],
    p: u64,
) -> Option<Vec<Vec<Vec<u64>>>> {
    let k = m.len();
    let d = basis.len();
    // images of the basis vectors
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..k).map(|r| m[r].iter().zip(b).fold(0, |acc, (x, y)| (acc + x * y) % p)).collect())
        .collect();

    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        // columns (M - λ) b_i, as a k × d system in the coefficients
        let cols: Vec<Vec<u64>> = images
            .iter()
            .zip(basis)
            .map(|(img, b)| img.iter().zip(b).map(|(x, y)| (x + p - lambda * y % p) % p).collect())
            .collect();
        let kernel = nullspace(&cols, k, p);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        pieces.push(
            kernel
                .iter()
                .map(|c| {
                    (0..k)
                        .map(|r| basis.iter().zip(c).fold(0, |acc, (b, ci)| (acc + b[r] * ci) % p))
                        .collect()
                })
                .collect(),
        );
        if found == d {
            return Some(pieces);
        }
    }
    None
}

/// Kernel of the `rows × cols.len()` matrix given by its columns, over `F_p`.
fn nullspace(cols: &[Vec<u64>], rows: usize, p: u64) -> Vec<Vec<u64>> {
    let d = cols.len();
    let mut a: Vec<Vec<u64>> = (0..rows).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..d {
        let Some(pr) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..d {
                    a[r][c] = (a[r][c] + p - f * a[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    (0..d)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; d];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][free]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::GroupExpr;
    use crate::groups::{build_group, BuildOptions};

    fn group(e: GroupExpr) -> FiniteGroup {
        build_group(&e, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn cyclic_three() {
        let d = irrep_data(&group(GroupExpr::Cyclic(3))).unwrap();
        assert_eq!(d.class_count, 3);
        assert_eq!(d.degrees, vec![1, 1, 1]);
        assert_eq!(d.method, DegreeMethod::Abelian);
    }

    #[test]
    fn symmetric_three() {
        let d = irrep_data(&group(GroupExpr::Symmetric(3))).unwrap();
        assert_eq!(d.class_count, 3);
        assert_eq!(d.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn quaternion() {
        let d = irrep_data(&group(GroupExpr::Quaternion8)).unwrap();
        assert_eq!(d.class_count, 5);
        assert_eq!(d.degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn search_is_exhaustive_for_small_cases() {
        // 6 = 1 + 1 + 4 is the only way with three squares including a 1
        assert_eq!(degree_candidates(6, 3, 10), vec![vec![1, 1, 2]]);
        assert_eq!(degree_candidates(8, 5, 10), vec![vec![1, 1, 1, 1, 2]]);
        assert_eq!(degree_candidates(16, 10, 10), vec![vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2]]);
        assert!(degree_candidates(7, 2, 10).is_empty());
    }

    #[test]
    fn dixon_agrees_with_known_degrees() {
        let cases = [
            (GroupExpr::Symmetric(3), vec![1, 1, 2]),
            (GroupExpr::Quaternion8, vec![1, 1, 1, 1, 2]),
            (GroupExpr::Dihedral(4), vec![1, 1, 1, 1, 2]),
            (GroupExpr::Dihedral(5), vec![1, 1, 2, 2]),
            (GroupExpr::Symmetric(4), vec![1, 1, 2, 3, 3]),
            (GroupExpr::Symmetric(5), vec![1, 1, 4, 4, 5, 5, 6]),
            (GroupExpr::Cyclic(6), vec![1; 6]),
        ];
        for (e, expected) in cases {
            let g = group(e.clone());
            let classes = g.conjugacy_classes();
            assert_eq!(dixon_degrees(&g, &classes), Some(expected), "{e}");
        }
    }

    #[test]
    fn symmetric_six_needs_dixon() {
        let g = group(GroupExpr::Symmetric(6));
        assert!(degree_candidates(720, 11, 2).len() > 1);
        let d = irrep_data(&g).unwrap();
        assert_eq!(d.method, DegreeMethod::BurnsideDixon);
        assert_eq!(d.degrees, vec![1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]);
        assert!(d.validate(720));
    }

    #[test]
    fn invariants_hold_on_every_builtin() {
        for e in [
            GroupExpr::Trivial,
            GroupExpr::Cyclic(1),
            GroupExpr::Cyclic(12),
            GroupExpr::Dihedral(3),
            GroupExpr::Dihedral(6),
            GroupExpr::Dihedral(12),
            GroupExpr::Symmetric(2),
            GroupExpr::Symmetric(4),
            GroupExpr::Symmetric(5),
            GroupExpr::Quaternion8,
        ] {
            let g = group(e.clone());
            let d = irrep_data(&g).unwrap();
            assert!(d.validate(g.order()), "{e}: {d:?}");
            assert_eq!(d.class_count, g.conjugacy_classes().len());
            for &deg in &d.degrees {
                assert_eq!(g.order() as u64 % deg, 0);
            }
        }
    }

    #[test]
    fn primes() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(60, 720), 1021);
        assert!(is_prime(1021));
        assert!(!is_prime(1));
    }
}
