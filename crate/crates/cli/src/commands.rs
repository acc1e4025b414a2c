use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use defkt_core::groups::{build_group, irrep_data_cached, BuildOptions, DegreeMethod, IrrepCache, IrrepData};
use defkt_core::kdef::{kdef as kdef_wedge, KdefReport};
use defkt_core::monoid::{
    equal_in_monoid, grothendieck_group, is_stably_group_like, parse_monoid, stable_inverse,
    telescope_pi0_group, Decision, FgAbelianGroup, FgCommMonoid, MonoidElement,
};
use defkt_core::rep_monoid::{count_product_components, free_product_pi0, k0 as k0_group, pi0_rep_monoid};
use defkt_core::variety::{gl_variety, render_text, unitary_variety, VarietyOptions};
use defkt_core::{parse_group_expr, parse_presentation, GroupExpr};
use serde::{Deserialize, Serialize};

use crate::{BoundExhausted, Config, FlavorArg, FormatArg, MonoidAction, Unsupported, VarietyArgs};

/// What a command prints, and the exit status to report after printing.
pub struct Output {
    pub body: String,
    pub status: u8,
}

impl From<String> for Output {
    fn from(body: String) -> Self {
        Output { body, status: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn build_options(config: &Config) -> BuildOptions {
    BuildOptions {
        order_cap: config.order_cap,
        base_dir: None,
    }
}

fn cache(config: &Config) -> Option<IrrepCache> {
    match &config.cache_dir {
        Some(dir) => Some(IrrepCache::new(dir)),
        None => IrrepCache::from_env(),
    }
}

fn finite_irreps(leaf: &GroupExpr, config: &Config) -> Result<IrrepData> {
    if !leaf.is_finite_leaf() {
        return Err(Unsupported(format!(
            "`{leaf}` is infinite; representation components are only computed for finite groups and their free products"
        ))
        .into());
    }
    let g = build_group(leaf, &build_options(config))?;
    Ok(irrep_data_cached(&g, cache(config).as_ref())?)
}

pub fn kdef(text: &str, config: &Config) -> Result<Output> {
    let expr = parse_group_expr(text)?;
    let wedge = kdef_wedge(&expr, &build_options(config))?;
    let report = KdefReport::new(&expr, wedge, config.max_degree);
    if config.json {
        return Ok(json(&report)?.into());
    }
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "expr    {}", report.expr)?;
    writeln!(out, "wedge   {}", report.shifts)?;
    writeln!(out, "shifts  {}", join(&mut report.shifts.shifts().iter().map(u32::to_string)))?;
    writeln!(out, "ranks   {}", join(&mut report.ranks.ranks.iter().map(u64::to_string)))?;
    Ok(out.into())
}

pub fn pi0(text: &str, dim: u64, config: &Config) -> Result<Output> {
    let expr = parse_group_expr(text)?;
    let factors = expr
        .factors()
        .iter()
        .map(|leaf| Ok((finite_irreps(leaf, config)?, leaf.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let counts = count_product_components(&factors, &expr.to_string(), dim)?;
    if config.json {
        return Ok(json(&counts)?.into());
    }
    let mut out = String::new();
    writeln!(out, "components of Hom({}, U({dim})): {}", counts.group, counts.count)?;
    for rep in &counts.representatives {
        writeln!(out, "{}", MonoidElement(rep.clone()))?;
    }
    if counts.truncated {
        writeln!(out, "... ({} listed)", counts.representatives.len())?;
    }
    Ok(out.into())
}

#[derive(Serialize, Deserialize)]
struct K0Report {
    schema: u32,
    expr: String,
    group: FgAbelianGroup,
}

pub fn k0(text: &str, config: &Config) -> Result<Output> {
    let expr = parse_group_expr(text)?;
    let monoids = expr
        .factors()
        .iter()
        .map(|leaf| Ok(pi0_rep_monoid(&finite_irreps(leaf, config)?, &leaf.to_string())?))
        .collect::<Result<Vec<_>>>()?;
    let group = if monoids.len() == 1 {
        k0_group(&monoids[0])
    } else {
        free_product_pi0(&monoids)?.group
    };
    let report = K0Report {
        schema: 1,
        expr: expr.to_string(),
        group,
    };
    if config.json {
        return Ok(json(&report)?.into());
    }
    Ok(format!("K^0({}) = {}\n", report.expr, report.group).into())
}

#[derive(Serialize, Deserialize)]
struct IrrepsReport {
    schema: u32,
    group: String,
    order: usize,
    class_count: usize,
    degrees: Vec<u64>,
    method: DegreeMethod,
}

pub fn irreps(text: &str, config: &Config) -> Result<Output> {
    let expr = parse_group_expr(text)?;
    if !expr.is_atomic() {
        return Err(Unsupported(format!("`{expr}` is a free product, which is infinite")).into());
    }
    let data = finite_irreps(&expr, config)?;
    let order = data.degrees.iter().map(|d| d * d).sum::<u64>() as usize;
    let report = IrrepsReport {
        schema: 1,
        group: expr.to_string(),
        order,
        class_count: data.class_count,
        degrees: data.degrees,
        method: data.method,
    };
    if config.json {
        return Ok(json(&report)?.into());
    }
    let degrees: Vec<String> = report.degrees.iter().map(u64::to_string).collect();
    Ok(format!(
        "group        {}\norder        {}\nclasses      {}\ndegrees      {}\n",
        report.group,
        report.order,
        report.class_count,
        degrees.join(" ")
    )
    .into())
}

fn read_monoid(path: &Path) -> Result<FgCommMonoid> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_monoid(&text)?)
}

fn parse_element(text: &str, m: &FgCommMonoid) -> Result<MonoidElement> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| anyhow!("`{s}` is not a non-negative integer")))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Unparsable(e.to_string()))?;
    let element = MonoidElement(values);
    m.check(&element)?;
    Ok(element)
}

/// A malformed command-line value.
#[derive(Debug)]
pub struct Unparsable(pub String);

impl std::fmt::Display for Unparsable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Unparsable {}

#[derive(Serialize, Deserialize)]
struct CompletionReport {
    schema: u32,
    generators: usize,
    relations: usize,
    group: FgAbelianGroup,
}

#[derive(Serialize, Deserialize)]
struct EqualityReport {
    left: MonoidElement,
    right: MonoidElement,
    decision: Decision,
}

#[derive(Serialize, Deserialize)]
struct InverseReport {
    element: MonoidElement,
    inverse: MonoidElement,
    multiple: u64,
}

#[derive(Serialize, Deserialize)]
struct CheckReport {
    schema: u32,
    anchor: MonoidElement,
    bound: u64,
    stably_group_like: Decision,
    telescope_group: Option<FgAbelianGroup>,
    equal: Option<EqualityReport>,
    inverse: Option<InverseReport>,
}

pub fn monoid(action: MonoidAction, config: &Config) -> Result<Output> {
    match action {
        MonoidAction::Complete { file } => {
            let m = read_monoid(&file)?;
            let report = CompletionReport {
                schema: 1,
                generators: m.generator_count(),
                relations: m.relations().len(),
                group: grothendieck_group(&m),
            };
            if config.json {
                return Ok(json(&report)?.into());
            }
            Ok(format!("Gr(M) = {}\n", report.group).into())
        }
        MonoidAction::Check {
            file,
            anchor,
            equal,
            inverse,
        } => {
            let m = read_monoid(&file)?;
            let anchor = match anchor {
                Some(text) => parse_element(&text, &m)?,
                None => MonoidElement::all_ones(m.generator_count()),
            };
            let stably = is_stably_group_like(&m, &anchor, config.bound)?;
            let telescope_group = match stably {
                Decision::Yes => Some(telescope_pi0_group(&m, &anchor, config.bound)?),
                _ => None,
            };
            let equal = match equal {
                Some(text) => {
                    let (a, b) = text
                        .split_once('=')
                        .ok_or_else(|| Unparsable(format!("expected `a=b`, found `{text}`")))?;
                    let (left, right) = (parse_element(a, &m)?, parse_element(b, &m)?);
                    let decision = equal_in_monoid(&m, &left, &right, config.bound)?;
                    Some(EqualityReport { left, right, decision })
                }
                None => None,
            };
            let inverse = match inverse {
                Some(text) => {
                    let element = parse_element(&text, &m)?;
                    let (inv, multiple) = stable_inverse(&m, &element, &anchor)?;
                    Some(InverseReport {
                        element,
                        inverse: inv,
                        multiple,
                    })
                }
                None => None,
            };
            let report = CheckReport {
                schema: 1,
                anchor,
                bound: config.bound,
                stably_group_like: stably,
                telescope_group,
                equal,
                inverse,
            };
            let unknown = report.stably_group_like == Decision::Unknown
                || report.equal.as_ref().is_some_and(|e| e.decision == Decision::Unknown);
            let body = if config.json {
                json(&report)?
            } else {
                let mut out = String::new();
                writeln!(out, "anchor             {}", report.anchor)?;
                writeln!(out, "stably group-like  {}", report.stably_group_like)?;
                if let Some(g) = &report.telescope_group {
                    writeln!(out, "telescope pi0      {g}")?;
                }
                if let Some(e) = &report.equal {
                    writeln!(out, "{} = {}  {}", e.left, e.right, e.decision)?;
                }
                if let Some(i) = &report.inverse {
                    writeln!(out, "inverse of {}  {} (sum = {}·anchor)", i.element, i.inverse, i.multiple)?;
                }
                out
            };
            if unknown {
                eprintln!(
                    "error: {}",
                    BoundExhausted(format!("search bound {} exhausted; raise --bound", config.bound))
                );
                return Ok(Output { body, status: crate::EXIT_BOUND });
            }
            Ok(body.into())
        }
    }
}

pub fn variety(args: &VarietyArgs, config: &Config) -> Result<Output> {
    let pres = parse_presentation(&args.presentation)?;
    let options = VarietyOptions {
        full_redundant: args.full_redundant,
        prefix_vars: args.prefix_vars,
        ..VarietyOptions::default()
    };
    let sys = match args.flavor {
        FlavorArg::Unitary => unitary_variety(&pres, args.n, options)?,
        FlavorArg::Gl => gl_variety(&pres, args.n, options)?,
    };
    if config.json || args.format == FormatArg::Json {
        return Ok(json(&sys)?.into());
    }
    Ok(render_text(&sys).into())
}
