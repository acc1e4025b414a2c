//! Real polynomial systems cutting out representation varieties.
//!
//! An `n × n` complex matrix is encoded by `2n²` real variables, the real
//! and imaginary parts of its entries. For a presentation
//! `<a_1..a_k | r_1..r_s>`, `Hom(G, U(n))` is the real variety given by
//! `A_j A_j^* = I` and `r_i(A_1..A_k) = I`, and `Hom(G, GL_n(C))` is given
//! by pairs `(A_j, B_j)` with `A_j B_j = I` and the relators, inverse letters
//! read as `B_j`. In the unitary case inverse letters become conjugate
//! transposes.
//!
//! Variables are ordered generator by generator, entries row-major, with the
//! real part before the imaginary part. In the general linear case the
//! entries of `A_j` precede those of `B_j`. Auxiliary prefix matrices, when
//! requested, follow all generator variables.

mod format;
mod polynomial;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsl::{FinitePresentation, Letter};
use crate::scalar::Scalar;

pub use format::{parse_text, render_text};
pub use polynomial::{term_order, Polynomial, Ring};

/// Default limit on the number of terms in one expanded matrix entry.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("matrix size must be at least 1")]
    ZeroDimension,
    #[error("expanding relator {relator} exceeds {cap} terms per entry; try prefix variables")]
    TermCapExceeded { relator: usize, cap: usize },
    #[error("point has {found} coordinates, system has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("malformed polynomial system: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Unitary,
    GeneralLinear,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Unitary => "unitary",
            Flavor::GeneralLinear => "general_linear",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarietyOptions {
    /// Emit every entry of `A A^* = I` instead of the upper triangle.
    pub full_redundant: bool,
    /// Introduce a matrix of variables for each proper prefix (of length at
    /// least two) of each relator, keeping every polynomial of degree 2.
    pub prefix_vars: bool,
    pub term_cap: usize,
}

impl Default for VarietyOptions {
    fn default() -> Self {
        VarietyOptions {
            full_redundant: false,
            prefix_vars: false,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

/// An emitted system. Polynomials are in canonical form with nonzero
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialSystem {
    pub presentation: String,
    pub n: usize,
    pub flavor: Flavor,
    pub variables: Vec<String>,
    pub polynomials: Vec<Polynomial<BigInt>>,
}

impl PolynomialSystem {
    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// Checks the structural invariants (used when reading systems back).
    pub fn validate(&self) -> Result<(), VarietyError> {
        let nvars = self.variables.len();
        let mut names = std::collections::HashSet::new();
        for v in &self.variables {
            if !names.insert(v.as_str()) {
                return Err(VarietyError::Malformed(format!("duplicate variable `{v}`")));
            }
        }
        if let Some(i) = self.polynomials.iter().position(|p| p.nvars() != nvars) {
            return Err(VarietyError::Malformed(format!("polynomial {i} has the wrong arity")));
        }
        Ok(())
    }
}

/// A complex matrix with polynomial entries.
#[derive(Clone)]
struct ComplexMatrix {
    n: usize,
    re: Vec<Polynomial<BigInt>>,
    im: Vec<Polynomial<BigInt>>,
}

impl ComplexMatrix {
    /// The matrix whose entries are the variables starting at `first`.
    fn variables(n: usize, nvars: usize, first: usize) -> Self {
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for e in 0..n * n {
            re.push(Polynomial::variable(nvars, first + 2 * e));
            im.push(Polynomial::variable(nvars, first + 2 * e + 1));
        }
        ComplexMatrix { n, re, im }
    }

    fn identity(n: usize, nvars: usize) -> Self {
        let mut m = ComplexMatrix {
            n,
            re: vec![Polynomial::zero(nvars); n * n],
            im: vec![Polynomial::zero(nvars); n * n],
        };
        for i in 0..n {
            m.re[i * n + i] = Polynomial::constant(nvars, BigInt::one());
        }
        m
    }

    fn conjugate_transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for p in 0..n {
            for q in 0..n {
                out.re[p * n + q] = self.re[q * n + p].clone();
                out.im[p * n + q] = -&self.im[q * n + p];
            }
        }
        out
    }

    /// `self · other`, failing once an entry exceeds `cap` terms.
    fn mul(&self, other: &ComplexMatrix, cap: usize) -> Option<ComplexMatrix> {
        let n = self.n;
        let nvars = self.re[0].nvars();
        let mut out = ComplexMatrix {
            n,
            re: Vec::with_capacity(n * n),
            im: Vec::with_capacity(n * n),
        };
        for p in 0..n {
            for q in 0..n {
                let mut re = Polynomial::zero(nvars);
                let mut im = Polynomial::zero(nvars);
                for r in 0..n {
                    let (a, b) = (&self.re[p * n + r], &self.im[p * n + r]);
                    let (c, d) = (&other.re[r * n + q], &other.im[r * n + q]);
                    re = &(&re + &(a * c)) - &(b * d);
                    im = &(&im + &(a * d)) + &(b * c);
                }
                if re.len() > cap || im.len() > cap {
                    return None;
                }
                out.re.push(re);
                out.im.push(im);
            }
        }
        Some(out)
    }

    /// Real and imaginary parts of `self - other` on the entries selected
    /// by `keep`, dropping identically zero polynomials.
    fn equations(
        &self,
        other: &ComplexMatrix,
        keep: impl Fn(usize, usize) -> bool,
        out: &mut Vec<Polynomial<BigInt>>,
    ) {
        let n = self.n;
        for p in 0..n {
            for q in 0..n {
                if !keep(p, q) {
                    continue;
                }
                let i = p * n + q;
                for part in [&self.re[i] - &other.re[i], &self.im[i] - &other.im[i]] {
                    if !part.is_zero() {
                        out.push(part);
                    }
                }
            }
        }
    }
}

struct Builder<'a> {
    pres: &'a FinitePresentation,
    n: usize,
    flavor: Flavor,
    options: VarietyOptions,
    variables: Vec<String>,
}

impl Builder<'_> {
    fn per_generator(&self) -> usize {
        match self.flavor {
            Flavor::Unitary => 2 * self.n * self.n,
            Flavor::GeneralLinear => 4 * self.n * self.n,
        }
    }

    fn push_matrix_names(&mut self, re: &str, im: &str, index: &str) {
        for p in 1..=self.n {
            for q in 1..=self.n {
                self.variables.push(format!("{re}_{index}_{p}_{q}"));
                self.variables.push(format!("{im}_{index}_{p}_{q}"));
            }
        }
    }

    /// Lengths of relators that get prefix matrices, and how many.
    fn prefix_counts(&self) -> Vec<usize> {
        self.pres
            .relators()
            .iter()
            .map(|r| if self.options.prefix_vars { r.len().saturating_sub(2) } else { 0 })
            .collect()
    }

    fn build(mut self) -> Result<PolynomialSystem, VarietyError> {
        let n = self.n;
        let k = self.pres.generator_count();
        for j in 1..=k {
            self.push_matrix_names("x", "y", &j.to_string());
            if self.flavor == Flavor::GeneralLinear {
                self.push_matrix_names("u", "v", &j.to_string());
            }
        }
        let prefix_counts = self.prefix_counts();
        for (i, &c) in prefix_counts.iter().enumerate() {
            for l in 2..2 + c {
                self.push_matrix_names("w", "z", &format!("{}_{l}", i + 1));
            }
        }
        let nvars = self.variables.len();
        let block = 2 * n * n;

        let forward: Vec<ComplexMatrix> = (0..k)
            .map(|j| ComplexMatrix::variables(n, nvars, j * self.per_generator()))
            .collect();
        let backward: Vec<ComplexMatrix> = match self.flavor {
            Flavor::Unitary => forward.iter().map(ComplexMatrix::conjugate_transpose).collect(),
            Flavor::GeneralLinear => (0..k)
                .map(|j| ComplexMatrix::variables(n, nvars, j * self.per_generator() + block))
                .collect(),
        };
        let identity = ComplexMatrix::identity(n, nvars);
        let cap = self.options.term_cap;
        let mut polynomials = Vec::new();

        for j in 0..k {
            let product = forward[j]
                .mul(&backward[j], cap)
                .ok_or(VarietyError::TermCapExceeded { relator: 0, cap })?;
            match self.flavor {
                Flavor::Unitary if !self.options.full_redundant => {
                    product.equations(&identity, |p, q| p <= q, &mut polynomials)
                }
                _ => product.equations(&identity, |_, _| true, &mut polynomials),
            }
        }

        let letter = |l: &Letter| {
            if l.inverse {
                &backward[l.generator]
            } else {
                &forward[l.generator]
            }
        };
        let mut next_aux = k * self.per_generator();
        for (index, relator) in self.pres.relators().iter().enumerate() {
            let err = VarietyError::TermCapExceeded { relator: index + 1, cap };
            let mut acc = letter(&relator[0]).clone();
            for (pos, l) in relator.iter().enumerate().skip(1) {
                let product = acc.mul(letter(l), cap).ok_or(err.clone())?;
                let last = pos + 1 == relator.len();
                if prefix_counts[index] > 0 && !last {
                    let aux = ComplexMatrix::variables(n, nvars, next_aux);
                    next_aux += block;
                    aux.equations(&product, |_, _| true, &mut polynomials);
                    acc = aux;
                } else {
                    acc = product;
                }
            }
            acc.equations(&identity, |_, _| true, &mut polynomials);
        }
        debug_assert_eq!(next_aux, nvars);

        Ok(PolynomialSystem {
            presentation: self.pres.to_string(),
            n,
            flavor: self.flavor,
            variables: self.variables,
            polynomials,
        })
    }
}

fn emit(
    pres: &FinitePresentation,
    n: usize,
    flavor: Flavor,
    options: VarietyOptions,
) -> Result<PolynomialSystem, VarietyError> {
    if n == 0 {
        return Err(VarietyError::ZeroDimension);
    }
    Builder {
        pres,
        n,
        flavor,
        options,
        variables: Vec::new(),
    }
    .build()
}

/// The system for `Hom(G, U(n))`.
pub fn unitary_variety(
    pres: &FinitePresentation,
    n: usize,
    options: VarietyOptions,
) -> Result<PolynomialSystem, VarietyError> {
    emit(pres, n, Flavor::Unitary, options)
}

/// The system for `Hom(G, GL_n(C))`.
pub fn gl_variety(
    pres: &FinitePresentation,
    n: usize,
    options: VarietyOptions,
) -> Result<PolynomialSystem, VarietyError> {
    emit(pres, n, Flavor::GeneralLinear, options)
}

/// Residuals of every polynomial at `point`.
pub fn evaluate_system<S: Scalar>(
    sys: &PolynomialSystem,
    point: &[S],
) -> Result<Vec<S>, VarietyError> {
    if point.len() != sys.variables.len() {
        return Err(VarietyError::LengthMismatch {
            expected: sys.variables.len(),
            found: point.len(),
        });
    }
    Ok(sys.polynomials.iter().map(|p| p.evaluate(point)).collect())
}

/// Flattens matrices given as row-major `(re, im)` entries into a point, in
/// variable order. Pass `A_1, …, A_k` for unitary systems and
/// `A_1, B_1, …, A_k, B_k` for general linear ones, followed by any prefix
/// matrices.
pub fn encode_matrices<S: Clone>(matrices: &[Vec<(S, S)>]) -> Vec<S> {
    matrices
        .iter()
        .flat_map(|m| m.iter().flat_map(|(re, im)| [re.clone(), im.clone()]))
        .collect()
}

/// The point of a system with `Zero` in every coordinate.
pub fn origin<S: Zero + Clone>(sys: &PolynomialSystem) -> Vec<S> {
    vec![S::zero(); sys.variables.len()]
}
