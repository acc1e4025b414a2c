//! Finite groups as validated Cayley tables.

mod cache;
mod irreps;
mod table;

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use num_integer::Integer;
use thiserror::Error;

use crate::dsl::GroupExpr;

pub use cache::IrrepCache;
pub use irreps::{irrep_data, irrep_data_cached, DegreeMethod, IrrepData};
pub use table::parse_cayley_table;

/// Default maximum group order accepted by [`build_group`].
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// Orders up to this bound get a full `O(N^3)` associativity check; larger
/// tables are checked with Light's test over a generating set.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
    #[error("table has order 0")]
    Empty,
    #[error("entry {value} at ({row}, {col}) is not an element index")]
    IndexOutOfRange { row: usize, col: usize, value: usize },
    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("malformed table file at line {line}: {message}")]
    TableFormat { line: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0} is not a finite group")]
    NotFinite(String),
    #[error("irreducible degrees unavailable (class count {class_count})")]
    DegreesUnavailable { class_count: usize },
}

/// Options for [`build_group`].
#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub order_cap: usize,
    /// Directory `table:` paths are resolved against (the working directory
    /// when `None`).
    pub base_dir: Option<PathBuf>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
            base_dir: None,
        }
    }
}

/// A finite group on the elements `0..order`, with `0` the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    label: String,
}

impl FiniteGroup {
    /// Validates a Cayley table given as rows.
    ///
    /// If the identity is not element `0`, the labels of `0` and the identity
    /// are swapped so that the returned group has identity `0`.
    pub fn from_table(
        label: impl Into<String>,
        rows: &[Vec<usize>],
        order_cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > order_cap {
            return Err(GroupError::OrderExceedsCap {
                order: n,
                cap: order_cap,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotLatinSquare(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::IndexOutOfRange { row: i, col: j, value: v });
            }
        }
        check_latin(rows)?;

        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        // relabel so the identity is 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut cayley = vec![0u32; n * n];
        for (a, row) in rows.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                cayley[relabel(a) * n + relabel(b)] = relabel(c) as u32;
            }
        }

        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| cayley[x * n + y] == 0)
                .expect("Latin square row contains the identity");
            inverse[x] = y as u32;
        }
        let g = FiniteGroup {
            order: n,
            cayley,
            inverse,
            label: label.into(),
        };
        for x in 0..n {
            if g.mul(g.inv(x), x) != 0 {
                return Err(GroupError::NotLatinSquare(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
        }
        g.check_associative()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn cayley_row(&self, a: usize) -> &[u32] {
        &self.cayley[a * self.order..(a + 1) * self.order]
    }

    pub(crate) fn raw_table(&self) -> &[u32] {
        &self.cayley
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    /// Conjugacy classes, each sorted, listed by their minimal element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// A generating set chosen greedily by smallest missing element.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        while members.len() < n {
            let g = (0..n).find(|&x| !inside[x]).expect("closure is incomplete");
            gens.push(g);
            let mut queue = vec![g];
            inside[g] = true;
            members.push(g);
            while let Some(x) = queue.pop() {
                let snapshot = members.clone();
                for &y in &snapshot {
                    for z in [self.mul(x, y), self.mul(y, x)] {
                        if !inside[z] {
                            inside[z] = true;
                            members.push(z);
                            queue.push(z);
                        }
                    }
                }
            }
        }
        gens
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let middles: Vec<usize> = if n <= FULL_ASSOCIATIVITY_LIMIT {
            (0..n).collect()
        } else {
            self.generating_set()
        };
        for &b in &middles {
            for a in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_latin(rows: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            if seen[v] == i {
                return Err(GroupError::NotLatinSquare(format!("row {i} repeats {v}")));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for (i, row) in rows.iter().enumerate() {
            let v = row[j];
            if seen[v] == j {
                return Err(GroupError::NotLatinSquare(format!(
                    "column {j} repeats {v} (row {i})"
                )));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

/// Builds the finite group named by an atomic expression.
pub fn build_group(leaf: &GroupExpr, options: &BuildOptions) -> Result<FiniteGroup, GroupError> {
    let cap = options.order_cap;
    let check_cap = |order: usize| {
        if order > cap {
            Err(GroupError::OrderExceedsCap { order, cap })
        } else {
            Ok(())
        }
    };
    let label = leaf.to_string();
    match leaf {
        GroupExpr::Trivial => FiniteGroup::from_table(label, &[vec![0]], cap),
        GroupExpr::Cyclic(m) => {
            let m = *m as usize;
            check_cap(m)?;
            let rows: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
            FiniteGroup::from_table(label, &rows, cap)
        }
        GroupExpr::Dihedral(m) => {
            let m = *m as usize;
            check_cap(2 * m)?;
            FiniteGroup::from_table(label, &dihedral_table(m), cap)
        }
        GroupExpr::Symmetric(n) => {
            let order: usize = (1..=*n as usize).product();
            check_cap(order)?;
            FiniteGroup::from_table(label, &symmetric_table(*n as usize), cap)
        }
        GroupExpr::Quaternion8 => FiniteGroup::from_table(label, &quaternion_table(), cap),
        GroupExpr::TableRef(path) => {
            let full = match &options.base_dir {
                Some(dir) => dir.join(path),
                None => PathBuf::from(path),
            };
            load_table(&full, label, cap)
        }
        GroupExpr::IntegerGroup | GroupExpr::FreeGroup(_) | GroupExpr::FreeProduct(_) => {
            Err(GroupError::NotFinite(label))
        }
    }
}

/// Reads and validates a Cayley-table file.
pub fn load_table(path: &Path, label: String, order_cap: usize) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|source| GroupError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let rows = parse_cayley_table(&text, order_cap)?;
    FiniteGroup::from_table(label, &rows, order_cap)
}

/// `r^a s^b` is stored at index `a + m*b`.
fn dihedral_table(m: usize) -> Vec<Vec<usize>> {
    let n = 2 * m;
    (0..n)
        .map(|x| {
            let (a, b) = (x % m, x / m);
            (0..n)
                .map(|y| {
                    let (c, d) = (y % m, y / m);
                    let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
                    rot + m * ((b + d) % 2)
                })
                .collect()
        })
        .collect()
}

/// Permutations in lexicographic order; `x*y` is the composite `x ∘ y`.
fn symmetric_table(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composite: Vec<u8> = q.iter().map(|&i| p[i as usize]).collect();
                    index[composite.as_slice()]
                })
                .collect()
        })
        .collect()
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Elements `1, -1, i, -i, j, -j, k, -k`.
fn quaternion_table() -> Vec<Vec<usize>> {
    // unit products on the basis 1, i, j, k as (sign, basis)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (neg, basis) = UNIT[x / 2][y / 2];
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * basis + usize::from(sign)
                })
                .collect()
        })
        .collect()
}
