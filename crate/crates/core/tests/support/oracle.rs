//! Brute-force reference computations, independent of the library's
//! elimination code.

#![allow(dead_code)]

use std::collections::HashMap;

/// Exponent vectors in `N^k` with total at most `max_total`.
pub fn box_elements(k: usize, max_total: u64) -> Vec<Vec<u64>> {
    fn go(k: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(k, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max_total, &mut Vec::new(), &mut out);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Group completion `(rank, torsion)` of `<k | u_i = v_i>` by formal
/// differences: close the elements of total at most `bound` under the
/// relations with union-find, take all differences `a - b` of congruent
/// pairs, and read off `Z^k` modulo their span.
pub fn completion_oracle(k: usize, relations: &[(Vec<u64>, Vec<u64>)], bound: u64) -> (usize, Vec<i128>) {
    let elems = box_elements(k, bound);
    let index: HashMap<Vec<u64>, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..elems.len()).collect();
    for (i, x) in elems.iter().enumerate() {
        for (u, v) in relations {
            for (from, to) in [(u, v), (v, u)] {
                if x.iter().zip(from).all(|(a, b)| a >= b) {
                    let y: Vec<u64> = x.iter().zip(from).zip(to).map(|((a, b), c)| a - b + c).collect();
                    if let Some(&j) = index.get(&y) {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..elems.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let mut differences: Vec<Vec<i128>> = Vec::new();
    for members in classes.values() {
        let first = &elems[members[0]];
        for &j in &members[1..] {
            differences.push(elems[j].iter().zip(first).map(|(&a, &b)| a as i128 - b as i128).collect());
        }
    }
    quotient_invariants(k, differences)
}

/// `Z^k / span(rows)` as `(rank, torsion)`.
pub fn quotient_invariants(k: usize, rows: Vec<Vec<i128>>) -> (usize, Vec<i128>) {
    let basis = hermite_basis(k, rows);
    let r = basis.len();
    let mut torsion = Vec::new();
    let mut previous = 1i128;
    for size in 1..=r {
        let d = minors_gcd(&basis, size);
        let factor = d / previous;
        if factor != 1 {
            torsion.push(factor);
        }
        previous = d;
    }
    (k - r, torsion)
}

/// Row-echelon basis of the row lattice, by repeated Euclidean reduction.
fn hermite_basis(k: usize, mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut basis = Vec::new();
    for col in 0..k {
        loop {
            rows.retain(|r| r.iter().any(|&x| x != 0));
            let Some(pivot) = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| r[col].abs())
                .map(|(i, _)| i)
            else {
                break;
            };
            let p = rows.swap_remove(pivot);
            let mut done = true;
            for r in rows.iter_mut() {
                if r[col] != 0 {
                    let q = r[col].div_euclid(p[col]);
                    for (x, y) in r.iter_mut().zip(&p) {
                        *x -= q * y;
                    }
                    if r[col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                basis.push(p);
                break;
            }
            rows.push(p);
        }
    }
    basis
}

fn minors_gcd(m: &[Vec<i128>], size: usize) -> i128 {
    let rows = subsets(m.len(), size);
    let cols = subsets(m[0].len(), size);
    let mut g = 0;
    for rs in &rows {
        for cs in &cols {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
            g = gcd(g, determinant(&sub));
        }
    }
    g
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Laplace expansion along the first row.
pub fn determinant(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * determinant(&minor)
            })
            .sum(),
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every presented monoid on `k` generators with at most `max_relations`
/// relations `u = v`, `u < v`, `|u| + |v| <= max_total`, relations as an
/// unordered set.
pub fn small_monoids(k: usize, max_relations: usize, max_total: u64) -> Vec<Vec<(Vec<u64>, Vec<u64>)>> {
    let mut relations = Vec::new();
    for u in box_elements(k, max_total) {
        let tu: u64 = u.iter().sum();
        for v in box_elements(k, max_total - tu) {
            if u < v {
                relations.push((u.clone(), v));
            }
        }
    }
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<(Vec<u64>, Vec<u64>)>)> = vec![(0, Vec::new())];
    for _ in 0..max_relations {
        let mut next = Vec::new();
        for (start, rels) in &frontier {
            for (i, r) in relations.iter().enumerate().skip(*start) {
                let mut extended = rels.clone();
                extended.push(r.clone());
                out.push(extended.clone());
                next.push((i + 1, extended));
            }
        }
        frontier = next;
    }
    out
}

/// Multisets of irreducibles (indices into `degrees`) of total degree `n`,
/// listed as nondecreasing index sequences.
pub fn multisets_of_degree(degrees: &[u64], n: u64) -> Vec<Vec<usize>> {
    fn go(degrees: &[u64], from: usize, left: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..degrees.len() {
            if degrees[i] <= left {
                cur.push(i);
                go(degrees, i, left - degrees[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degrees, 0, n, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
