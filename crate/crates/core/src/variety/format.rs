//! Text and JSON encodings of [`PolynomialSystem`].
//!
//! Text:
//!
//! ```text
//! # flavor unitary
//! # n 1
//! # presentation <a | aa>
//! variables x_1_1_1 y_1_1_1
//! +1*x_1_1_1^2 +1*y_1_1_1^2 -1
//! +1*x_1_1_1^2 -1*y_1_1_1^2 -1
//! +2*x_1_1_1*y_1_1_1
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Flavor, Polynomial, PolynomialSystem, VarietyError};
use crate::scalar::bigint_json;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    #[serde(with = "bigint_json")]
    coefficient: BigInt,
    exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    schema: u32,
    presentation: String,
    n: usize,
    flavor: Flavor,
    variables: Vec<String>,
    polynomials: Vec<Vec<TermRepr>>,
}

impl Serialize for PolynomialSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SystemRepr {
            schema: 1,
            presentation: self.presentation.clone(),
            n: self.n,
            flavor: self.flavor,
            variables: self.variables.clone(),
            polynomials: self
                .polynomials
                .iter()
                .map(|p| {
                    p.terms()
                        .into_iter()
                        .map(|(e, c)| TermRepr {
                            coefficient: c.clone(),
                            exponents: e.to_vec(),
                        })
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolynomialSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SystemRepr::deserialize(d)?;
        from_repr(repr).map_err(serde::de::Error::custom)
    }
}

fn from_repr(repr: SystemRepr) -> Result<PolynomialSystem, VarietyError> {
    if repr.schema != 1 {
        return Err(VarietyError::Malformed(format!("unsupported schema {}", repr.schema)));
    }
    let nvars = repr.variables.len();
    let mut polynomials = Vec::with_capacity(repr.polynomials.len());
    for (i, terms) in repr.polynomials.into_iter().enumerate() {
        let mut p = Polynomial::zero(nvars);
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(VarietyError::Malformed(format!(
                    "polynomial {i}: exponent vector of length {} for {nvars} variables",
                    t.exponents.len()
                )));
            }
            if t.coefficient.is_zero() {
                return Err(VarietyError::Malformed(format!("polynomial {i}: zero coefficient")));
            }
            if p.coefficient(&t.exponents).is_some() {
                return Err(VarietyError::Malformed(format!("polynomial {i}: repeated monomial")));
            }
            p.add_term(t.exponents, t.coefficient);
        }
        polynomials.push(p);
    }
    let sys = PolynomialSystem {
        presentation: repr.presentation,
        n: repr.n,
        flavor: repr.flavor,
        variables: repr.variables,
        polynomials,
    };
    sys.validate()?;
    Ok(sys)
}

fn render_polynomial(p: &Polynomial<BigInt>, names: &[String], out: &mut String) {
    if p.is_zero() {
        out.push('0');
        return;
    }
    for (i, (e, c)) in p.terms().into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let sign = if c.is_negative() { '-' } else { '+' };
        write!(out, "{sign}{}", c.abs()).unwrap();
        for (name, &k) in names.iter().zip(e) {
            match k {
                0 => {}
                1 => write!(out, "*{name}").unwrap(),
                _ => write!(out, "*{name}^{k}").unwrap(),
            }
        }
    }
}

/// One polynomial per line after a header.
pub fn render_text(sys: &PolynomialSystem) -> String {
    let mut out = String::new();
    writeln!(out, "# flavor {}", sys.flavor.name()).unwrap();
    writeln!(out, "# n {}", sys.n).unwrap();
    writeln!(out, "# presentation {}", sys.presentation).unwrap();
    writeln!(out, "variables {}", sys.variables.join(" ")).unwrap();
    for p in &sys.polynomials {
        render_polynomial(p, &sys.variables, &mut out);
        out.push('\n');
    }
    out
}

fn malformed(line: usize, message: impl std::fmt::Display) -> VarietyError {
    VarietyError::Malformed(format!("line {line}: {message}"))
}

/// Reads the output of [`render_text`].
pub fn parse_text(text: &str) -> Result<PolynomialSystem, VarietyError> {
    let mut flavor = None;
    let mut n = None;
    let mut presentation = None;
    let mut variables: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut polynomials = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if let Some(rest) = line.strip_prefix("# ") {
            let (key, value) = rest.split_once(' ').unwrap_or((rest, ""));
            match key {
                "flavor" => {
                    flavor = Some(match value {
                        "unitary" => Flavor::Unitary,
                        "general_linear" => Flavor::GeneralLinear,
                        other => return Err(malformed(line_no, format!("unknown flavor `{other}`"))),
                    })
                }
                "n" => n = Some(value.parse().map_err(|_| malformed(line_no, "bad size"))?),
                "presentation" => presentation = Some(value.to_string()),
                _ => {}
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("variables") {
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            index = names.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
            variables = Some(names);
            continue;
        }
        let names = variables
            .as_ref()
            .ok_or_else(|| malformed(line_no, "polynomial before `variables`"))?;
        let mut p = Polynomial::zero(names.len());
        if line.trim() != "0" {
            for token in line.split_whitespace() {
                let (e, c) = parse_term(token, &index, names.len()).map_err(|m| malformed(line_no, m))?;
                if p.coefficient(&e).is_some() {
                    return Err(malformed(line_no, "repeated monomial"));
                }
                p.add_term(e, c);
            }
        }
        polynomials.push(p);
    }
    let sys = PolynomialSystem {
        presentation: presentation.ok_or_else(|| malformed(1, "missing presentation"))?,
        n: n.ok_or_else(|| malformed(1, "missing size"))?,
        flavor: flavor.ok_or_else(|| malformed(1, "missing flavor"))?,
        variables: variables.ok_or_else(|| malformed(1, "missing variables"))?,
        polynomials,
    };
    sys.validate()?;
    Ok(sys)
}

fn parse_term(
    token: &str,
    index: &HashMap<String, usize>,
    nvars: usize,
) -> Result<(Vec<u32>, BigInt), String> {
    let mut parts = token.split('*');
    let head = parts.next().unwrap_or("");
    let negative = match head.chars().next() {
        Some('+') => false,
        Some('-') => true,
        _ => return Err(format!("term `{token}` lacks a sign")),
    };
    let magnitude: BigInt = head[1..]
        .parse()
        .map_err(|_| format!("bad coefficient in `{token}`"))?;
    if magnitude.is_zero() {
        return Err(format!("zero coefficient in `{token}`"));
    }
    let mut exponents = vec![0; nvars];
    for factor in parts {
        let (name, power) = match factor.split_once('^') {
            Some((name, k)) => (name, k.parse::<u32>().map_err(|_| format!("bad exponent in `{token}`"))?),
            None => (factor, 1),
        };
        let &v = index.get(name).ok_or_else(|| format!("unknown variable `{name}`"))?;
        exponents[v] += power;
    }
    Ok((exponents, if negative { -magnitude } else { magnitude }))
}
