//! End-to-end acceptance checks. Prints one line per criterion and exits
//! nonzero if any fails.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use defkt_core::groups::{build_group, irrep_data, BuildOptions};
use defkt_core::kdef::KdefReport;
use defkt_core::monoid::{
    add, grothendieck_group, stable_inverse, telescope_pi0_group, FgCommMonoid, MonoidElement,
};
use defkt_core::rep_monoid::{count_components, free_product_pi0, k0, pi0_rep_monoid};
use defkt_core::variety::{evaluate_system, gl_variety, unitary_variety, VarietyOptions};
use defkt_core::{kdef, parse_group_expr, parse_presentation, GroupExpr, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn wedge(text: &str) -> defkt_core::KuWedge {
    kdef(&parse_group_expr(text).unwrap(), &BuildOptions::default()).unwrap()
}

fn psl2z_ranks() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_defkt"))
        .args(["--json", "kdef", "Z/2 * Z/3"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || "kdef exited with failure".into())?;
    let report: KdefReport = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report.ranks.ranks.len() == 11, || "expected degrees 0..10".into())?;
    for (j, &r) in report.ranks.ranks.iter().enumerate() {
        let expected = if j % 2 == 0 { 4 } else { 0 };
        ensure(r == expected, || format!("degree {j}: rank {r}, expected {expected}"))?;
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("ranks {:?} in {elapsed:.1?}", report.ranks.ranks))
}

fn cyclic_ranks() -> Verdict {
    for m in 1..=6u64 {
        let w = wedge(&format!("Z/{m}"));
        for j in 0..=10 {
            let expected = if j % 2 == 0 { m } else { 0 };
            ensure(w.rank(j) == expected, || format!("Z/{m} degree {j}: {}", w.rank(j)))?;
        }
    }
    Ok("m = 1..6, degrees 0..10".into())
}

const LEAVES: [&str; 10] = ["1", "Z", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "S3", "Q8", "D4"];

fn random_expr(rng: &mut ChaCha8Rng) -> String {
    let len = rng.gen_range(1..=3);
    (0..len)
        .map(|_| *LEAVES.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" * ")
}

fn random_pairs() -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..30).map(|_| (random_expr(&mut rng), random_expr(&mut rng))).collect()
}

fn odd_degree_splitting() -> Verdict {
    for (a, b) in random_pairs() {
        let (wa, wb) = (wedge(&a), wedge(&b));
        let wab = wedge(&format!("({a}) * ({b})"));
        for j in 0..=9u32 {
            let sum = wa.rank(j) + wb.rank(j);
            let expected = if j % 2 == 1 { sum } else { sum - 1 };
            ensure(wab.rank(j) == expected, || {
                format!("({a}) * ({b}) degree {j}: {} != {expected}", wab.rank(j))
            })?;
        }
    }
    Ok("30 seeded pairs, degrees 0..9".into())
}

fn k0_rank(expr: &GroupExpr) -> usize {
    let opts = BuildOptions::default();
    let monoids: Vec<_> = expr
        .factors()
        .iter()
        .map(|leaf| {
            let g = build_group(leaf, &opts).unwrap();
            pi0_rep_monoid(&irrep_data(&g).unwrap(), &leaf.to_string()).unwrap()
        })
        .collect();
    if monoids.len() == 1 {
        k0(&monoids[0]).rank
    } else {
        free_product_pi0(&monoids).unwrap().group.rank
    }
}

fn degree_zero_cross_check() -> Verdict {
    let mut checked = 0;
    for (a, b) in random_pairs() {
        for text in [a.clone(), b.clone(), format!("({a}) * ({b})")] {
            let expr = parse_group_expr(&text).unwrap();
            if !expr.factors().iter().all(GroupExpr::is_finite_leaf) {
                continue;
            }
            let via_k0 = k0_rank(&expr);
            let via_kdef = kdef(&expr, &BuildOptions::default()).unwrap().rank(0) as usize;
            ensure(via_k0 == via_kdef, || format!("{text}: k0 rank {via_k0}, kdef rank {via_kdef}"))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no finite expressions generated".into())?;
    Ok(format!("{checked} finite expressions"))
}

fn completion_oracle() -> Verdict {
    let start = Instant::now();
    let mut cases = 0;
    for k in 1..=3 {
        for rels in oracle::small_monoids(k, 2, 4) {
            let m = FgCommMonoid::new(
                k,
                None,
                rels.iter()
                    .map(|(u, v)| (MonoidElement(u.clone()), MonoidElement(v.clone())))
                    .collect(),
            )
            .unwrap();
            let g = grothendieck_group(&m);
            let ours = (g.rank, g.torsion.iter().map(|d| d.to_i128().unwrap()).collect::<Vec<_>>());
            let brute = oracle::completion_oracle(k, &rels, 8);
            ensure(ours == brute, || format!("{rels:?}: {ours:?} vs oracle {brute:?}"))?;
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{cases} monoids in {elapsed:.1?}"))
}

fn stable_inverses() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..1000 {
        let k = rng.gen_range(1..=8);
        let c = MonoidElement((0..k).map(|_| rng.gen_range(0..=20)).collect());
        let m = FgCommMonoid::free(k);
        let ones = MonoidElement::all_ones(k);
        let (inv, n) = stable_inverse(&m, &c, &ones).map_err(|e| e.to_string())?;
        let top = c.0.iter().copied().max().unwrap();
        ensure(n == top, || format!("{c}: multiple {n}, max exponent {top}"))?;
        let sum = add(&m, &c, &inv).map_err(|e| e.to_string())?;
        ensure(sum == ones.scaled(top), || format!("{c} + {inv} = {sum}"))?;
    }
    Ok("1000 seeded elements".into())
}

fn telescope_equals_completion() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..50 {
        let k = rng.gen_range(1..=6);
        let grades: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
        let m = FgCommMonoid::free_graded(grades.clone()).unwrap();
        let anchor = MonoidElement((0..k).map(|_| rng.gen_range(1..=3)).collect());
        let t = telescope_pi0_group(&m, &anchor, 16).map_err(|e| e.to_string())?;
        let g = grothendieck_group(&m);
        ensure(t == g, || format!("grades {grades:?}, anchor {anchor}: {t} vs {g}"))?;
    }
    Ok("50 seeded free graded monoids".into())
}

fn component_counts() -> Verdict {
    for m in 1..=6usize {
        let g = build_group(&GroupExpr::Cyclic(m as u32), &BuildOptions::default()).unwrap();
        let data = irrep_data(&g).unwrap();
        for n in 0..=12u64 {
            let c = count_components(&data, "C", n).map_err(|e| e.to_string())?;
            let brute = oracle::multisets_of_degree(&data.degrees, n).len() as u128;
            let formula = oracle::binomial(n as u128 + m as u128 - 1, m as u128 - 1);
            ensure(c.count == brute && brute == formula, || {
                format!("m={m} n={n}: {} vs enumeration {brute} vs binomial {formula}", c.count)
            })?;
        }
    }
    Ok("m <= 6, n <= 12".into())
}

/// `(cos, sin)` of `2πk/m` as exact rationals, when both are rational.
fn rational_root(k: usize, m: usize) -> Option<(Rational, Rational)> {
    let int = |v: i64| Rational::from_integer(BigInt::from(v));
    match (4 * k) % (4 * m) {
        0 => Some((int(1), int(0))),
        r if r * 4 == 4 * m => Some((int(0), int(1))),
        r if r * 2 == 4 * m => Some((int(-1), int(0))),
        r if r * 4 == 3 * 4 * m => Some((int(0), int(-1))),
        _ => None,
    }
}

fn variety_soundness() -> Verdict {
    let mut exact = 0;
    let mut float = 0;
    for m in 1..=6usize {
        let pres = parse_presentation(&format!("<a | a^{m}>")).unwrap();
        let sys = unitary_variety(&pres, 1, VarietyOptions::default()).map_err(|e| e.to_string())?;
        for k in 0..m {
            if let Some((x, y)) = rational_root(k, m) {
                let r = evaluate_system(&sys, &[x, y]).map_err(|e| e.to_string())?;
                ensure(r.iter().all(Zero::is_zero), || format!("m={m} k={k}: {r:?}"))?;
                exact += 1;
            } else {
                let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                let r = evaluate_system(&sys, &[t.cos(), t.sin()]).map_err(|e| e.to_string())?;
                ensure(r.iter().all(|v| v.abs() < 1e-9), || format!("m={m} k={k}: {r:?}"))?;
                float += 1;
            }
        }
        // every real solution lies on the unit circle; scan it for zeros of
        // the residual and count the separate clusters
        let steps = 36_000;
        let mut clusters = 0;
        let mut inside = false;
        for s in 0..steps {
            let t = 2.0 * std::f64::consts::PI * s as f64 / steps as f64;
            let r = evaluate_system(&sys, &[t.cos(), t.sin()]).unwrap();
            let norm = r.iter().map(|v| v * v).sum::<f64>().sqrt();
            let near = norm < 1e-2;
            if near && !inside {
                clusters += 1;
            }
            inside = near;
        }
        // a cluster straddling the start of the scan is counted twice
        let t0: Vec<f64> = evaluate_system(&sys, &[1.0, 0.0]).unwrap();
        if inside && t0.iter().all(|v| v.abs() < 1e-2) {
            clusters -= 1;
        }
        let g = build_group(&GroupExpr::Cyclic(m as u32), &BuildOptions::default()).unwrap();
        let expected = count_components(&irrep_data(&g).unwrap(), "C", 1).unwrap().count;
        ensure(clusters as u128 == expected, || {
            format!("m={m}: {clusters} solutions on the circle, {expected} components")
        })?;
    }
    Ok(format!("{exact} exact and {float} float roots, solution counts m"))
}

fn variable_counts() -> Verdict {
    let gens = ["a", "b", "c"];
    for k in 1..=3 {
        let g = &gens[..k];
        let text = format!("<{} | {}, {}^2>", g.join(", "), g.join(""), g[0]);
        let pres = parse_presentation(&text).unwrap();
        for n in 1..=3 {
            let u = unitary_variety(&pres, n, VarietyOptions::default()).map_err(|e| e.to_string())?;
            let l = gl_variety(&pres, n, VarietyOptions::default()).map_err(|e| e.to_string())?;
            ensure(u.variable_count() == 2 * k * n * n, || format!("unitary k={k} n={n}: {}", u.variable_count()))?;
            ensure(l.variable_count() == 4 * k * n * n, || format!("gl k={k} n={n}: {}", l.variable_count()))?;
        }
    }
    Ok("k <= 3, n <= 3, both flavors".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("PSL2(Z) homotopy ranks", psl2z_ranks),
        ("cyclic group ranks", cyclic_ranks),
        ("odd-degree splitting", odd_degree_splitting),
        ("degree-0 cross-check", degree_zero_cross_check),
        ("group completion oracle", completion_oracle),
        ("stable inverse", stable_inverses),
        ("telescope equals completion", telescope_equals_completion),
        ("component counts", component_counts),
        ("variety soundness", variety_soundness),
        ("variable-count law", variable_counts),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
