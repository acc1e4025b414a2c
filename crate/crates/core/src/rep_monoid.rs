//! Components of representation spaces of finite groups.
//!
//! Isomorphism classes of `n`-dimensional unitary representations of a
//! finite group are multisets of irreducibles with total degree `n`, so the
//! component monoid is free on the irreducibles, graded by degree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::IrrepData;
use crate::monoid::{grothendieck_group, FgAbelianGroup, FgCommMonoid, MonoidError};
use crate::smith::{smith_normal_form, Matrix};

/// Representatives listed by [`count_components`] before truncating.
pub const REPRESENTATIVE_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepMonoidError {
    #[error("irreducible degree list is empty")]
    NoDegrees,
    #[error("irreducible degrees must be positive")]
    ZeroDegree,
    #[error("component count overflows 128 bits")]
    CountOverflow,
    #[error("a free product needs at least two factors, got {0}")]
    TooFewFactors(usize),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// The free graded monoid of components of `Rep(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0RepMonoid {
    pub base: FgCommMonoid,
    pub generator_labels: Vec<String>,
    pub group_label: String,
}

impl Pi0RepMonoid {
    pub fn degrees(&self) -> &[u64] {
        self.base.grades().unwrap_or(&[])
    }

    pub fn rank(&self) -> usize {
        self.base.generator_count()
    }

    /// Number of components in grade `n`.
    pub fn count(&self, n: u64) -> Result<u128, RepMonoidError> {
        count_by_degree(self.degrees(), n)
    }
}

pub fn pi0_rep_monoid(data: &IrrepData, label: &str) -> Result<Pi0RepMonoid, RepMonoidError> {
    if data.degrees.is_empty() {
        return Err(RepMonoidError::NoDegrees);
    }
    let base = FgCommMonoid::free_graded(data.degrees.clone()).map_err(|e| match e {
        MonoidError::ZeroGrade => RepMonoidError::ZeroDegree,
        other => RepMonoidError::Monoid(other),
    })?;
    let generator_labels = data
        .degrees
        .iter()
        .enumerate()
        .map(|(i, d)| format!("chi{}[{d}]", i + 1))
        .collect();
    Ok(Pi0RepMonoid {
        base,
        generator_labels,
        group_label: label.to_string(),
    })
}

/// Components of `Hom(G, U(n))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCount {
    pub schema: u32,
    pub group: String,
    pub n: u64,
    pub count: u128,
    pub representatives: Vec<Vec<u64>>,
    pub truncated: bool,
}

/// Number of `e` with `Σ e_i d_i = n`, by the usual coin-change recurrence.
fn count_by_degree(degrees: &[u64], n: u64) -> Result<u128, RepMonoidError> {
    Ok(suffix_counts(degrees, n)?[0][n as usize])
}

/// `table[i][r]`: ways to make `r` from `degrees[i..]`.
fn suffix_counts(degrees: &[u64], n: u64) -> Result<Vec<Vec<u128>>, RepMonoidError> {
    let n = n as usize;
    let k = degrees.len();
    let mut table = vec![vec![0u128; n + 1]; k + 1];
    table[k][0] = 1;
    for i in (0..k).rev() {
        let d = degrees[i] as usize;
        for r in 0..=n {
            let mut v = table[i + 1][r];
            if r >= d {
                v = v
                    .checked_add(table[i][r - d])
                    .ok_or(RepMonoidError::CountOverflow)?;
            }
            table[i][r] = v;
        }
    }
    Ok(table)
}

/// Counts the components of `Hom(G, U(n))` and lists up to
/// [`REPRESENTATIVE_CAP`] of them as exponent vectors over the irreducibles,
/// in lexicographic order.
pub fn count_components(
    data: &IrrepData,
    label: &str,
    n: u64,
) -> Result<ComponentCount, RepMonoidError> {
    let monoid = pi0_rep_monoid(data, label)?;
    let degrees = monoid.degrees();
    let table = suffix_counts(degrees, n)?;
    let count = table[0][n as usize];

    let mut representatives = Vec::new();
    let mut current = vec![0u64; degrees.len()];
    enumerate(degrees, &table, 0, n, &mut current, &mut representatives);
    Ok(ComponentCount {
        schema: 1,
        group: label.to_string(),
        n,
        count,
        truncated: count > representatives.len() as u128,
        representatives,
    })
}

/// Components of `Hom(G_1 * … * G_f, U(n))`: tuples of components of the
/// factors in dimension `n`. Representatives concatenate the factors'
/// exponent vectors and are listed in lexicographic order.
pub fn count_product_components(
    factors: &[(IrrepData, String)],
    label: &str,
    n: u64,
) -> Result<ComponentCount, RepMonoidError> {
    let parts = factors
        .iter()
        .map(|(d, l)| count_components(d, l, n))
        .collect::<Result<Vec<_>, _>>()?;
    let count = parts.iter().try_fold(1u128, |acc, p| {
        acc.checked_mul(p.count).ok_or(RepMonoidError::CountOverflow)
    })?;
    // the first entries of a lexicographic product only involve the first
    // entries of each factor
    let mut representatives: Vec<Vec<u64>> = vec![Vec::new()];
    for part in &parts {
        let mut next = Vec::new();
        'outer: for prefix in &representatives {
            for rep in &part.representatives {
                if next.len() >= REPRESENTATIVE_CAP {
                    break 'outer;
                }
                let mut v = prefix.clone();
                v.extend(rep);
                next.push(v);
            }
        }
        representatives = next;
    }
    Ok(ComponentCount {
        schema: 1,
        group: label.to_string(),
        n,
        count,
        truncated: count > representatives.len() as u128,
        representatives,
    })
}

fn enumerate(
    degrees: &[u64],
    table: &[Vec<u128>],
    i: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if out.len() >= REPRESENTATIVE_CAP {
        return;
    }
    if i == degrees.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let d = degrees[i];
    for e in 0..=remaining / d {
        let rest = remaining - e * d;
        if table[i + 1][rest as usize] == 0 {
            continue;
        }
        current[i] = e;
        enumerate(degrees, table, i + 1, rest, current, out);
        if out.len() >= REPRESENTATIVE_CAP {
            break;
        }
    }
    current[i] = 0;
}

/// `K^0` as the group completion of the component monoid.
pub fn k0(m: &Pi0RepMonoid) -> FgAbelianGroup {
    grothendieck_group(&m.base)
}

/// Components of `Rep(G_1 * … * G_f)`: in each dimension, tuples of
/// components of the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeProductPi0 {
    pub factors: Vec<Pi0RepMonoid>,
    /// Kernel of `⊕ Z^{a_i} → Z^{f-1}` comparing the total degrees of
    /// consecutive factors.
    pub group: FgAbelianGroup,
}

impl FreeProductPi0 {
    /// Components in dimension `n`: the product of the factors' counts.
    pub fn count(&self, n: u64) -> Result<u128, RepMonoidError> {
        self.factors.iter().try_fold(1u128, |acc, f| {
            acc.checked_mul(f.count(n)?).ok_or(RepMonoidError::CountOverflow)
        })
    }
}

pub fn free_product_pi0(factors: &[Pi0RepMonoid]) -> Result<FreeProductPi0, RepMonoidError> {
    if factors.len() < 2 {
        return Err(RepMonoidError::TooFewFactors(factors.len()));
    }
    let columns: usize = factors.iter().map(|f| f.rank()).sum();
    let mut grade_map: Matrix<i64> = Matrix::zeros(factors.len() - 1, columns);
    let mut offset = 0;
    for (i, f) in factors.iter().enumerate() {
        for (j, &d) in f.degrees().iter().enumerate() {
            if i > 0 {
                grade_map[(i - 1, offset + j)] = -(d as i64);
            }
            if i + 1 < factors.len() {
                grade_map[(i, offset + j)] = d as i64;
            }
        }
        offset += f.rank();
    }
    // a sublattice of a free group is free
    let rank = columns - smith_normal_form(&grade_map).rank();
    Ok(FreeProductPi0 {
        factors: factors.to_vec(),
        group: FgAbelianGroup::free(rank),
    })
}
