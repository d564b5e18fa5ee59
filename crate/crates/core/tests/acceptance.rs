//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use sumconn::bounds::{spider_bound_curve, unicyclic_top_two};
use sumconn::cli::{dispatch, EXIT_OK};
use sumconn::constructions::{cycle_spider_family, t_extremal, u_extremal, GraphClass};
use sumconn::enumerate::{enumerate_trees, enumerate_unicyclic, DegreeFilter};
use sumconn::graph6::{emit_graph6, parse_graph6};
use sumconn::indices::sum_connectivity;
use sumconn::verify::{
    index_correlation, monotonicity_suite, verify_sweep, verify_unicyclic_ranking,
};
use sumconn::{canonical_code, Graph, RadicalValue};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn over_sqrt(coef: i64, k: u64) -> RadicalValue {
    RadicalValue::inv_sqrt(k).scale(&BigRational::from_integer(BigInt::from(coef)))
}

fn sweep(class: GraphClass, max_n: usize, budget: Duration) -> Outcome {
    let start = Instant::now();
    let reports = verify_sweep(class, 4..=max_n).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for r in &reports {
        ensure(r.passed(), || {
            format!(
                "{}: value {} set {} k {:?} vs {}",
                r.spec, r.matches.value, r.matches.set, r.k_profile, r.k_expected
            )
        })?;
    }
    let expected_cases: usize = (4..=max_n).map(|n| n - 2).sum();
    ensure(reports.len() == expected_cases, || {
        format!("{} of {expected_cases} cases ran", reports.len())
    })?;
    ensure(elapsed <= budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })?;
    Ok(format!(
        "{} (n, delta) cases, {} graphs, {:.2?}",
        reports.len(),
        reports.iter().map(|r| r.class_size).sum::<usize>(),
        elapsed
    ))
}

fn tree_maximum() -> Outcome {
    sweep(GraphClass::Tree, 12, Duration::from_secs(60))
}

fn unicyclic_maximum() -> Outcome {
    sweep(GraphClass::Unicyclic, 11, Duration::from_secs(90))
}

fn unicyclic_ranking() -> Outcome {
    for n in 4..=11 {
        let r = verify_unicyclic_ranking(n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n = {n}: report mismatch"))?;
        let cycle = canonical_code(&Graph::cycle(n).unwrap()).unwrap();
        ensure(r.observed[0].codes == vec![cycle], || {
            format!("n = {n}: rank 1 is not the cycle")
        })?;
        ensure(
            r.observed[0].value == RadicalValue::ratio(n as i64, 2),
            || format!("n = {n}: rank 1 value"),
        )?;
        let second = if n == 4 {
            RadicalValue::integer(1) + over_sqrt(2, 5)
        } else {
            RadicalValue::ratio(n as i64 - 4, 2) + over_sqrt(1, 3) + over_sqrt(3, 5)
        };
        ensure(r.observed[1].value == second, || {
            format!("n = {n}: rank 2 value {}", r.observed[1].value)
        })?;
        if n >= 5 {
            let mut family: Vec<_> = cycle_spider_family(n, 3)
                .unwrap()
                .iter()
                .map(|g| canonical_code(g).unwrap())
                .collect();
            family.sort();
            let mut seen = r.observed[1].codes.clone();
            seen.sort();
            ensure(seen == family, || format!("n = {n}: rank 2 set"))?;
        }
        if n == 7 {
            ensure(r.observed[1].codes.len() == 3, || {
                "n = 7: rank 2 should hold 3 graphs".into()
            })?;
        }
        ensure(unicyclic_top_two(n).is_ok(), || {
            format!("n = {n}: prediction failed")
        })?;
    }
    Ok("n = 4..11, rank 1 = cycle, rank 2 exact, 3 graphs at n = 7".into())
}

fn spot_values() -> Outcome {
    let u43 = sum_connectivity(&u_extremal(4, 3).unwrap()).unwrap();
    ensure(u43 == RadicalValue::integer(1) + over_sqrt(2, 5), || {
        format!("U(4,3) = {u43}")
    })?;
    // the six-decimal figure is a rounding; the tolerance applies to the evaluation
    let float = u43.to_f64();
    ensure((float - (1.0 + 2.0 / 5f64.sqrt())).abs() <= 1e-9, || {
        format!("U(4,3) float {float}")
    })?;
    ensure(format!("{float:.6}") == "1.894427", || {
        format!("U(4,3) float {float}")
    })?;
    for n in 3..=16 {
        let c = sum_connectivity(&Graph::cycle(n).unwrap()).unwrap();
        ensure(c == RadicalValue::ratio(n as i64, 2), || {
            format!("C_{n} = {c}")
        })?;
        let p = sum_connectivity(&Graph::path(n)).unwrap();
        ensure(
            p == RadicalValue::ratio(n as i64 - 3, 2) + over_sqrt(2, 3),
            || format!("P_{n} = {p}"),
        )?;
    }
    let t74 = sum_connectivity(&t_extremal(7, 4).unwrap()).unwrap();
    ensure(
        t74 == over_sqrt(2, 5) + over_sqrt(2, 6) + over_sqrt(2, 3),
        || format!("T(7,4) = {t74}"),
    )?;
    let target = 2.865607;
    ensure((t74.to_f64() - target).abs() <= 1e-6, || {
        format!(
            "T(7,4) = {t74} = {:.10}, stated target {target} +- 1e-6 is off by {:.2e}",
            t74.to_f64(),
            t74.to_f64() - target
        )
    })?;
    Ok("U(4,3), C_n, P_n, T(7,4)".into())
}

fn transform_monotonicity() -> Outcome {
    let start = Instant::now();
    let r = monotonicity_suite(1000, 0);
    let elapsed = start.elapsed();
    ensure(r.merge.trials == 1000 && r.reattach.trials == 1000, || {
        "trial counts".into()
    })?;
    ensure(r.passed(), || {
        format!(
            "{} merge and {} reattach violations",
            r.merge.violations.len(),
            r.reattach.violations.len()
        )
    })?;
    ensure(elapsed <= Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "2 x 1000 instances, seed 0, 0 violations, {elapsed:.2?}"
    ))
}

fn enumeration_soundness() -> Outcome {
    let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &want) in trees.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_trees(n, DegreeFilter::any())
            .map_err(|e| e.to_string())?
            .len();
        ensure(got == want, || format!("trees n = {n}: {got} != {want}"))?;
    }
    let unicyclic = [1, 2, 5, 13, 33, 89, 240, 657];
    for (i, &want) in unicyclic.iter().enumerate() {
        let n = i + 3;
        let got = enumerate_unicyclic(n, DegreeFilter::any()).map_err(|e| e.to_string())?;
        ensure(got.len() == want, || {
            format!("unicyclic n = {n}: {} != {want}", got.len())
        })?;
        let codes: std::collections::HashSet<_> = got.iter().map(|m| &m.code).collect();
        ensure(codes.len() == want, || {
            format!("unicyclic n = {n}: repeated codes")
        })?;
        ensure(got.iter().all(|m| m.graph.is_unicyclic()), || {
            format!("unicyclic n = {n}: bad member")
        })?;
    }
    for n in 1..=8 {
        let fast = enumerate_trees(n, DegreeFilter::any()).unwrap();
        let oracle = common::labeled_tree_classes(n);
        ensure(
            common::generic_codes(fast.iter().map(|m| &m.graph)) == oracle,
            || format!("trees n = {n}: oracle finds {} classes", oracle.len()),
        )?;
    }
    for n in 3..=8 {
        let fast = enumerate_unicyclic(n, DegreeFilter::any()).unwrap();
        let oracle = common::labeled_unicyclic_classes(n);
        ensure(
            common::generic_codes(fast.iter().map(|m| &m.graph)) == oracle,
            || format!("unicyclic n = {n}: oracle finds {} classes", oracle.len()),
        )?;
    }
    Ok("trees n = 1..10, unicyclic n = 3..10, labeled oracle agrees for n <= 8".into())
}

fn curve_monotonicity() -> Outcome {
    let mut checked = 0;
    for n in 5..=16 {
        let steps = ((n - 1) as f64 - 2.0) * 10.0;
        let xs: Vec<f64> = (0..=steps.round() as usize)
            .map(|i| 2.0 + i as f64 / 10.0)
            .collect();
        for w in xs.windows(2) {
            let (a, b) = (
                spider_bound_curve(n, w[0]).unwrap(),
                spider_bound_curve(n, w[1]).unwrap(),
            );
            ensure(b < a, || {
                format!("n = {n}: f({}) = {b} >= f({}) = {a}", w[1], w[0])
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} consecutive grid pairs, n = 5..16"))
}

fn correlation() -> Outcome {
    let r = index_correlation(12, 4).map_err(|e| e.to_string())?;
    ensure(r.coefficient > 0.9, || format!("r = {}", r.coefficient))?;
    Ok(format!(
        "r = {:.6} over {} trees",
        r.coefficient, r.sample_size
    ))
}

fn round_trip_and_determinism() -> Outcome {
    let mut count = 0;
    for n in 1..=10 {
        let mut graphs: Vec<Graph> = enumerate_trees(n, DegreeFilter::any())
            .unwrap()
            .into_iter()
            .map(|m| m.graph)
            .collect();
        if n >= 3 {
            graphs.extend(
                enumerate_unicyclic(n, DegreeFilter::any())
                    .unwrap()
                    .into_iter()
                    .map(|m| m.graph),
            );
        }
        for g in graphs {
            let text = emit_graph6(&g);
            let back = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
            ensure(back == g && emit_graph6(&back) == text, || {
                format!("{text} does not round-trip")
            })?;
            count += 1;
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for (i, threads) in ["1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("run{i}.json"));
        let argv = [
            "sumconn",
            "--threads",
            threads,
            "verify",
            "--all",
            "--json",
            path.to_str().unwrap(),
        ];
        let code = dispatch(argv, &mut std::io::sink(), &mut std::io::sink());
        ensure(code == EXIT_OK, || format!("verify --all exited {code}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || {
        "verify --all JSON differs between runs".into()
    })?;
    Ok(format!(
        "{count} graphs round-trip; verify --all JSON identical ({} bytes)",
        outputs[0].len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("tree maximum and extremal set", tree_maximum),
        ("unicyclic maximum and extremal set", unicyclic_maximum),
        ("unicyclic top-two ranking", unicyclic_ranking),
        ("spot values", spot_values),
        ("transform monotonicity", transform_monotonicity),
        ("enumeration soundness", enumeration_soundness),
        ("bound curve monotonicity", curve_monotonicity),
        ("index correlation", correlation),
        (
            "graph6 round trip and determinism",
            round_trip_and_determinism,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("acceptance {}: PASS  {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("acceptance {}: FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
