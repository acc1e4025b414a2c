//! Deformation K-theory of group expressions as wedges of shifted `ku`.
//!
//! A [`KuWedge`] with shifts `{s_1, …}` stands for `Σ^{s_1} ku ∨ …`. The
//! trivial group gives `ku`, a finite group with `k` irreducibles gives
//! `k` copies of `ku`, and `Z` gives `ku ∨ Σku`. Free products are glued
//! by the homotopy pullback over the trivial group; since the boundary maps
//! of the resulting long exact sequence vanish, ranks add degreewise with one
//! copy of `π_* ku` subtracted, which on shifts is a multiset union with one
//! `0` removed.
//!
//! Every homotopy group here is free abelian of finite rank, so only ranks
//! are tracked.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsl::GroupExpr;
use crate::groups::{build_group, BuildOptions, GroupError};

#[derive(Debug, Error)]
pub enum KdefError {
    #[error("no base spectrum for `{0}`")]
    UnsupportedLeaf(String),
    #[error("a wedge without a ku summand cannot be glued along the trivial group")]
    MissingBaseSummand,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite wedge of shifted copies of `ku`, stored as sorted shifts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KuWedge {
    shifts: Vec<u32>,
}

impl KuWedge {
    pub fn new(mut shifts: Vec<u32>) -> Self {
        shifts.sort_unstable();
        KuWedge { shifts }
    }

    /// `ku` itself.
    pub fn ku() -> Self {
        KuWedge { shifts: vec![0] }
    }

    /// `k` copies of `ku`.
    pub fn copies(k: usize) -> Self {
        KuWedge { shifts: vec![0; k] }
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    /// Rank of `π_j`: the number of shifts `s <= j` with `j - s` even.
    pub fn rank(&self, j: u32) -> u64 {
        self.shifts
            .iter()
            .filter(|&&s| s <= j && (j - s) % 2 == 0)
            .count() as u64
    }
}

impl fmt::Display for KuWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shifts.is_empty() {
            return f.write_str("*");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.shifts.len() {
            let s = self.shifts[i];
            let run = self.shifts[i..].iter().take_while(|&&t| t == s).count();
            let base = match s {
                0 => "ku".to_string(),
                1 => "Σku".to_string(),
                _ => format!("Σ^{s}ku"),
            };
            parts.push(if run == 1 { base } else { format!("{run}·{base}") });
            i += run;
        }
        f.write_str(&parts.join(" ∨ "))
    }
}

/// Ranks of `π_0, …, π_max` of a wedge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedRanks {
    pub ranks: Vec<u64>,
}

pub fn homotopy_groups(w: &KuWedge, max_degree: u32) -> GradedRanks {
    GradedRanks {
        ranks: (0..=max_degree).map(|j| w.rank(j)).collect(),
    }
}

/// The spectrum of an atomic expression. Finite leaves are built to count
/// their conjugacy classes.
pub fn kdef_base(leaf: &GroupExpr, options: &BuildOptions) -> Result<KuWedge, KdefError> {
    match leaf {
        GroupExpr::Trivial => Ok(KuWedge::ku()),
        GroupExpr::IntegerGroup => Ok(KuWedge::new(vec![0, 1])),
        GroupExpr::FreeProduct(_) | GroupExpr::FreeGroup(_) => {
            Err(KdefError::UnsupportedLeaf(leaf.to_string()))
        }
        finite => {
            let g = build_group(finite, options)?;
            Ok(KuWedge::copies(g.conjugacy_classes().len()))
        }
    }
}

/// Glues `a` and `b` along the trivial group.
pub fn mv_free_product(a: &KuWedge, b: &KuWedge) -> Result<KuWedge, KdefError> {
    if !a.shifts.contains(&0) || !b.shifts.contains(&0) {
        return Err(KdefError::MissingBaseSummand);
    }
    let mut shifts = a.shifts.clone();
    shifts.extend(&b.shifts);
    shifts.sort_unstable();
    shifts.remove(0);
    Ok(KuWedge { shifts })
}

/// The spectrum of an expression, folding factors from the left.
pub fn kdef(expr: &GroupExpr, options: &BuildOptions) -> Result<KuWedge, KdefError> {
    let normalized = expr.clone().normalized();
    if let GroupExpr::FreeProduct(factors) = &normalized {
        let mut acc = kdef_base(&factors[0], options)?;
        for f in &factors[1..] {
            acc = mv_free_product(&acc, &kdef_base(f, options)?)?;
        }
        Ok(acc)
    } else {
        kdef_base(&normalized, options)
    }
}

/// JSON report for an expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KdefReport {
    pub schema: u32,
    pub expr: String,
    pub shifts: KuWedge,
    pub ranks: GradedRanks,
}

impl KdefReport {
    pub fn new(expr: &GroupExpr, wedge: KuWedge, max_degree: u32) -> Self {
        KdefReport {
            schema: 1,
            expr: expr.to_string(),
            ranks: homotopy_groups(&wedge, max_degree),
            shifts: wedge,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_group_expr;
    use proptest::prelude::*;

    fn eval(s: &str) -> KuWedge {
        kdef(&parse_group_expr(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn base_cases() {
        let o = BuildOptions::default();
        assert_eq!(kdef_base(&GroupExpr::Trivial, &o).unwrap().shifts(), &[0]);
        assert_eq!(kdef_base(&GroupExpr::Cyclic(3), &o).unwrap().shifts(), &[0, 0, 0]);
        assert_eq!(kdef_base(&GroupExpr::IntegerGroup, &o).unwrap().shifts(), &[0, 1]);
        assert_eq!(kdef_base(&GroupExpr::Symmetric(3), &o).unwrap().len(), 3);
        assert!(matches!(
            kdef_base(&GroupExpr::FreeProduct(vec![GroupExpr::Trivial, GroupExpr::Trivial]), &o),
            Err(KdefError::UnsupportedLeaf(_))
        ));
    }

    #[test]
    fn gluing() {
        let w = |v: &[u32]| KuWedge::new(v.to_vec());
        assert_eq!(mv_free_product(&w(&[0, 0]), &w(&[0, 0, 0])).unwrap(), w(&[0, 0, 0, 0]));
        assert_eq!(mv_free_product(&w(&[0]), &w(&[0])).unwrap(), w(&[0]));
        assert_eq!(mv_free_product(&w(&[0, 1]), &w(&[0, 1])).unwrap(), w(&[0, 1, 1]));
        assert!(matches!(
            mv_free_product(&w(&[1]), &w(&[0])),
            Err(KdefError::MissingBaseSummand)
        ));
    }

    #[test]
    fn expressions() {
        assert_eq!(eval("Z/2 * Z/3").shifts(), &[0, 0, 0, 0]);
        assert_eq!(eval("1 * 1 * 1").shifts(), &[0]);
        assert_eq!(eval("F3").shifts(), &[0, 1, 1, 1]);
        assert_eq!(eval("Z").shifts(), &[0, 1]);
        assert_eq!(eval("Q8 * Z").shifts(), &[0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn ranks() {
        assert_eq!(homotopy_groups(&KuWedge::ku(), 5).ranks, vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(homotopy_groups(&KuWedge::copies(4), 4).ranks, vec![4, 0, 4, 0, 4]);
        assert_eq!(homotopy_groups(&KuWedge::new(vec![0, 1]), 3).ranks, vec![1, 1, 1, 1]);
        assert_eq!(homotopy_groups(&KuWedge::new(vec![3]), 4).ranks, vec![0, 0, 0, 1, 0]);
    }

    #[test]
    fn cyclic_groups() {
        for m in 1..=6 {
            let r = homotopy_groups(&eval(&format!("Z/{m}")), 6).ranks;
            for (j, &x) in r.iter().enumerate() {
                assert_eq!(x, if j % 2 == 0 { m } else { 0 });
            }
        }
    }

    #[test]
    fn display_and_json() {
        assert_eq!(eval("F2").to_string(), "ku ∨ 2·Σku");
        let report = KdefReport::new(&parse_group_expr("Z/2*Z/3").unwrap(), eval("Z/2*Z/3"), 2);
        let s = serde_json::to_string(&report).unwrap();
        assert_eq!(s, r#"{"schema":1,"expr":"Z/2 * Z/3","shifts":[0,0,0,0],"ranks":[4,0,4]}"#);
        assert_eq!(serde_json::from_str::<KdefReport>(&s).unwrap(), report);
    }

    fn leaf() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["1", "Z", "Z/2", "Z/3", "Z/5", "S3", "Q8", "D4", "F2"])
    }

    fn expr() -> impl Strategy<Value = String> {
        prop::collection::vec(leaf(), 1..4).prop_map(|v| v.join(" * "))
    }

    proptest! {
        #[test]
        fn degreewise_rules(a in expr(), b in expr()) {
            let (wa, wb) = (eval(&a), eval(&b));
            let wab = eval(&format!("({a}) * ({b})"));
            for j in 0..=9u32 {
                let expected = wa.rank(j) + wb.rank(j) - u64::from(j % 2 == 0);
                prop_assert_eq!(wab.rank(j), expected);
            }
        }

        #[test]
        fn trivial_is_a_unit(a in expr()) {
            prop_assert_eq!(eval(&format!("1 * ({a})")), eval(&a));
            prop_assert_eq!(eval(&format!("({a}) * 1")), eval(&a));
        }

        #[test]
        fn gluing_is_commutative_and_associative(a in expr(), b in expr(), c in expr()) {
            let (wa, wb, wc) = (eval(&a), eval(&b), eval(&c));
            prop_assert_eq!(mv_free_product(&wa, &wb).unwrap(), mv_free_product(&wb, &wa).unwrap());
            let left = mv_free_product(&mv_free_product(&wa, &wb).unwrap(), &wc).unwrap();
            let right = mv_free_product(&wa, &mv_free_product(&wb, &wc).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
