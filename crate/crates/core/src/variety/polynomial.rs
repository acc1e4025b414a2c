use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Num;

use crate::scalar::Scalar;

/// Coefficient rings for [`Polynomial`].
pub trait Ring: Num + Clone + Neg<Output = Self> {}

impl<T: Num + Clone + Neg<Output = T>> Ring for T {}

/// A sparse polynomial in a fixed number of variables.
///
/// Terms are keyed by dense exponent vectors; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

/// Total degree descending, then lexicographic descending.
pub fn term_order(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<C: Ring> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable with index `i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, C::one());
        p
    }

    /// Builds a polynomial from terms, combining repeated exponents.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .is_some_and(|c| c.is_one())
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Option<&C> {
        self.terms.get(exponents)
    }

    /// Terms in canonical order (see [`term_order`]).
    pub fn terms(&self) -> Vec<(&[u32], &C)> {
        let mut out: Vec<(&[u32], &C)> = self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        out.sort_by(|a, b| term_order(a.0, b.0));
        out
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exponents);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    /// Evaluates with coefficients embedded by `embed`.
    pub fn evaluate_with<S: Num + Clone>(&self, point: &[S], embed: impl Fn(&C) -> S) -> S {
        assert_eq!(point.len(), self.nvars, "point length");
        let mut total = S::zero();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }
}

impl Polynomial<BigInt> {
    pub fn evaluate<S: Scalar>(&self, point: &[S]) -> S {
        self.evaluate_with(point, S::from_bigint)
    }
}

impl<C: Ring> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Ring> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Ring> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn arithmetic() {
        let x = P::variable(2, 0);
        let y = P::variable(2, 1);
        let one = P::constant(2, int(1));
        let s = &(&x * &x) + &(&y * &y);
        let circle = &s - &one;
        assert_eq!(circle.len(), 3);
        assert_eq!(circle.degree(), 2);
        let order: Vec<Vec<u32>> = circle.terms().iter().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(order, vec![vec![2, 0], vec![0, 2], vec![0, 0]]);
        assert!((&circle - &circle).is_zero());
        assert!(one.is_one());
        let sq = &(&x + &y) * &(&x - &y);
        assert_eq!(sq, &(&x * &x) - &(&y * &y));
        assert_eq!(&-&x + &x, P::zero(2));
    }

    #[test]
    fn evaluation() {
        let x = P::variable(2, 0);
        let y = P::variable(2, 1);
        let circle = &(&(&x * &x) + &(&y * &y)) - &P::constant(2, int(1));
        assert_eq!(circle.evaluate(&[1.0f64, 0.0]), 0.0);
        assert_eq!(circle.evaluate(&[1.0f64, 1.0]), 1.0);
        let half = BigRational::new(int(1), int(2));
        let r = circle.evaluate(&[half.clone(), half]);
        assert_eq!(r, BigRational::new(int(-1), int(2)));
    }

    fn poly() -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..6), 0..6)
            .prop_map(|t| P::from_terms(3, t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.terms().iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in prop::collection::vec(-3i64..4, 3)) {
            let pt: Vec<BigRational> = pt.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))).collect();
            prop_assert_eq!((&a * &b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
            prop_assert_eq!((&a + &b).evaluate(&pt), a.evaluate(&pt) + b.evaluate(&pt));
        }
    }
}
