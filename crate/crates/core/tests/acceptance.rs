//! Acceptance checks: one `[PASS]`/`[FAIL]` line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uncrossed::certify::{verify_certificate, verify_drawing};
use uncrossed::constructions::*;
use uncrossed::embedding::{is_outerplanar, is_planar_graph, planar_drawing};
use uncrossed::formulas::*;
use uncrossed::graph::{complete_bipartite, complete_graph, cycle_graph};
use uncrossed::io::{parse_certificate, parse_cover, parse_graph, write_certificate, write_cover, write_graph};
use uncrossed::oracle::{enumerate_admissible, exact_ecr, exact_h, exact_unc, OracleOptions};
use uncrossed::reductions::*;
use uncrossed::{EdgeSet, Graph, PlaneDrawing, RotationSystem, UncrossedCertificate};

type Check = Result<(), String>;

/// Name, check and time limit.
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Check {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn criterion_1() -> Check {
    let spot = [(4u64, 1u64), (5, 2), (7, 3), (8, 3)];
    for (n, v) in spot {
        eq(unc_complete(n).map_err(|e| e.to_string())?, v, &format!("unc(K_{n})"))?;
    }
    for n in 1..=20u64 {
        let want = match n {
            4 => 1,
            7 => 3,
            _ => (n + 1).div_ceil(4),
        };
        eq(unc_complete(n).unwrap(), want, &format!("unc(K_{n})"))?;
    }
    for m in 1..=30u64 {
        for n in m..=30 {
            let mn = m * n;
            let want = if m <= 2 {
                1
            } else if n <= 2 * m - 2 {
                mn.div_ceil(2 * m + n - 2)
            } else if n == 2 * m - 1 {
                mn.div_ceil(2 * m + n - 1)
            } else {
                mn.div_ceil(2 * m + n)
            };
            eq(unc_complete_bipartite(m, n).unwrap(), want, &format!("unc(K_{{{m},{n}}})"))?;
        }
    }
    eq(unc_complete_bipartite(4, 7).unwrap(), 2, "unc(K_{4,7})")?;
    eq(unc_complete_bipartite(9, 24).unwrap(), 6, "unc(K_{9,24})")
}

fn criterion_2() -> Check {
    let o = OracleOptions::default();
    let k4 = complete_graph(4).unwrap();
    let k5 = complete_graph(5).unwrap();
    let k33 = complete_bipartite(3, 3).unwrap();
    let err = |e: uncrossed::oracle::OracleError| e.to_string();
    eq(exact_h(&k5, o).map_err(err)?, 8, "h(K_5)")?;
    eq(exact_h(&k4, o).map_err(err)?, 6, "h(K_4)")?;
    eq(exact_h(&k33, o).map_err(err)?, 7, "h(K_{3,3})")?;
    for (g, want, name) in [(&k5, 2, "K_5"), (&k4, 1, "K_4"), (&k33, 2, "K_{3,3}")] {
        let sol = exact_unc(g, o).map_err(err)?;
        eq(sol.value, want, &format!("unc({name})"))?;
        ensure(verify_certificate(&sol.certificate).map(|r| r.passes()).unwrap_or(false), || {
            format!("optimal certificate for {name} fails verification")
        })?;
    }
    eq(exact_ecr(&k5, o).map_err(err)?, 2, "ecr(K_5)")?;
    eq(exact_ecr(&k33, o).map_err(err)?, 2, "ecr(K_{3,3})")
}

fn criterion_3() -> Check {
    let k5 = complete_graph(5).unwrap();
    let fam = enumerate_admissible(&k5, OracleOptions::default()).map_err(|e| e.to_string())?;
    let best: Vec<_> = fam.members.iter().filter(|m| m.edges.len() == 8).collect();
    eq(best.len(), 15, "maximum members of K_5")?;
    for m in best {
        let sub = k5.spanning_subgraph(&m.edges);
        let Some(hub) = (0..5).find(|&v| sub.degree(v) == 4) else {
            return Err("maximum member without a degree-4 hub".into());
        };
        // Rim: the other four vertices each keep two non-hub edges, forming a 4-cycle.
        for v in (0..5).filter(|&v| v != hub) {
            let rim_degree = sub.neighbors(v).iter().filter(|&&w| w != hub).count();
            eq(rim_degree, 2, "rim degree")?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for m in 3..=8usize {
        for n in 2 * m..=40 {
            let cover = double_cycle_cover(m, n).map_err(|e| e.to_string())?;
            eq(cover.cycles.len(), (m * n).div_ceil(2 * m + n), &format!("cycles for ({m},{n})"))?;
            let mut union: Vec<(usize, usize)> = cover.cycles.iter().flat_map(|c| c.edges()).collect();
            union.sort_unstable();
            union.dedup();
            let all: Vec<(usize, usize)> = (0..m).flat_map(|b| (m..m + n).map(move |w| (b, w))).collect();
            eq(union, all, &format!("edge union for ({m},{n})"))?;
            for d in &cover.degree_sequences {
                ensure(d.iter().sum::<usize>() >= n, || format!("degree window too small for ({m},{n})"))?;
            }
        }
    }
    let cover = double_cycle_cover(9, 24).map_err(|e| e.to_string())?;
    eq(cover.degree_sequences[0].clone(), vec![4, 5, 5, 4, 5, 5, 4, 5, 5], "first degree sequence for (9,24)")
}

fn criterion_5() -> Check {
    for m in 1..=6usize {
        for n in m..=30 {
            let c = bipartite_uncrossed_collection(m, n).map_err(|e| format!("({m},{n}): {e}"))?;
            eq(c.len() as u64, unc_complete_bipartite(m as u64, n as u64).unwrap(), &format!("size for ({m},{n})"))?;
            let r = verify_certificate(&c).map_err(|e| e.to_string())?;
            ensure(r.passes(), || format!("certificate for ({m},{n}) fails"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    for m in 1..=30usize {
        for n in m..=30 {
            let d = ladder_with_leaves(m, n).map_err(|e| e.to_string())?;
            eq(d.drawn_edge_count(), 2 * m + n - 2, &format!("ladder edges ({m},{n})"))?;
            let g = Graph::new(m + n, d.drawn_pairs()).map_err(|e| e.to_string())?;
            ensure(is_outerplanar(&g), || format!("ladder ({m},{n}) not outerplanar"))?;
        }
    }
    for n in 4..=30usize {
        let d = wheel_drawing(n).map_err(|e| e.to_string())?;
        eq(d.drawn_edge_count(), 2 * n - 2, &format!("wheel edges n={n}"))?;
        let r = verify_drawing(&complete_graph(n).unwrap(), &d).map_err(|e| e.to_string())?;
        ensure(r.passes(), || format!("wheel n={n} not admissible"))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    eq(unc_lower_bound_density(5, 10).unwrap(), 2, "density bound (5,10)")?;
    eq(DensityF::new(10, 24).unwrap().exact_integer(), Some(24), "f(10,24)")?;
    for n in 3..=30u64 {
        for m in 3 * n - 6..=n * (n - 1) / 2 {
            if m == 0 {
                continue;
            }
            let d = unc_lower_bound_density(n, m).unwrap();
            ensure(d >= m.div_ceil(3 * n - 6), || format!("density bound below planar bound at ({n},{m})"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8usize);
        let edges: Vec<_> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::new(n, edges).unwrap();
        let m = g.m();
        let k = rng.gen_range(0..=m);
        let e = reduce_mos_to_ecr(&g, k).map_err(|e| e.to_string())?;
        eq(
            (e.target.n(), e.target.m(), e.budget),
            (n + 1 + 2 * n * m, n + 4 * n * m, 2 * n * (m - k) + n),
            "ecr arithmetic",
        )?;
        let u = reduce_ot_to_unc(&g, k.max(1)).map_err(|e| e.to_string())?;
        eq((u.target.n(), u.target.m(), u.budget), (2 * n + 1, m + 2 * n, k.max(1)), "unc arithmetic")?;
    }
    let (two, two_parts) = example_outerthickness_two();
    let sources = [
        complete_graph(3).unwrap(),
        cycle_graph(4).unwrap(),
        complete_graph(4).unwrap(),
        complete_bipartite(2, 3).unwrap(),
        two.clone(),
    ];
    for g in &sources {
        let r = validate_reduction_small(g, ReductionKind::Ecr).map_err(|e| e.to_string())?;
        ensure(r.passes(), || format!("ecr witness failed on {:?}", g.edges()))?;
        let r = validate_reduction_small(g, ReductionKind::Unc).map_err(|e| e.to_string())?;
        ensure(r.passes(), || format!("unc witness failed on {:?}", g.edges()))?;
    }
    let inst = reduce_ot_to_unc(&two, 2).map_err(|e| e.to_string())?;
    let c = unc_forward_witness(&inst, &two_parts).map_err(|e| e.to_string())?;
    ensure(c.len() <= inst.budget && verify_certificate(&c).map(|r| r.passes()).unwrap_or(false), || {
        "two-part example witness fails".into()
    })
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (2usize..=9, any::<u64>(), any::<u64>()).prop_map(|(n, mask, seed)| {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| ((seed as usize >> (i % 32)) % i, i)).collect();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        edges.extend(pairs.enumerate().filter(|&(i, _)| i < 64 && mask >> i & 1 == 1).map(|(_, e)| e));
        edges.sort_unstable();
        edges.dedup();
        Graph::new(n, edges).unwrap()
    })
}

fn planar_part(g: &Graph) -> EdgeSet {
    let mut set = EdgeSet::new(g.m());
    for i in 0..g.m() {
        set.insert(i);
        if !is_planar_graph(&g.spanning_subgraph(&set)) {
            set.remove(i);
        }
    }
    set
}

fn criterion_9() -> Check {
    let mut runner = TestRunner::new(Config { cases: 400, failure_persistence: None, ..Config::default() });

    // Face lengths sum to 2e under arbitrary rotations; drawn edges are cofacial.
    runner
        .run(&(arb_connected(), any::<u64>()), |(g, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let lists = (0..g.n())
                .map(|v| {
                    let mut l = g.neighbors(v).to_vec();
                    for i in (1..l.len()).rev() {
                        l.swap(i, rng.gen_range(0..=i));
                    }
                    l
                })
                .collect();
            let rot = RotationSystem::new(lists).unwrap();
            prop_assert_eq!(rot.trace_faces().iter().map(|f| f.walk_length()).sum::<usize>(), 2 * g.m());
            let d = planar_drawing(&g.spanning_subgraph(&planar_part(&g))).unwrap();
            for (u, v) in d.drawn_pairs() {
                prop_assert!(d.cofacial(u, v));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    // Dropping drawings never shrinks the uncovered set; admissibility is per drawing.
    runner
        .run(&(1usize..=5, 0usize..=8, any::<u64>()), |(m, extra, keep)| {
            let full = bipartite_uncrossed_collection(m, m + extra).unwrap();
            let r = verify_certificate(&full).unwrap();
            let kept: Vec<PlaneDrawing> =
                full.drawings.iter().enumerate().filter(|(i, _)| keep >> i & 1 == 1).map(|(_, d)| d.clone()).collect();
            let rs = verify_certificate(&UncrossedCertificate::new(full.host.clone(), kept)).unwrap();
            prop_assert!(r.passes());
            prop_assert!(rs.drawings.iter().all(|d| d.passes()));
            prop_assert!(r.uncovered.iter().all(|e| rs.uncovered.contains(e)));
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    // Round trips for graphs, certificates and covers.
    runner
        .run(&(arb_connected(), 3usize..=7, 0usize..=10), |(g, m, extra)| {
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
            let d = planar_drawing(&g.spanning_subgraph(&planar_part(&g))).unwrap();
            let c = UncrossedCertificate::new(g, vec![d]);
            prop_assert_eq!(parse_certificate(&write_certificate(&c)).unwrap(), c);
            let cover = double_cycle_cover(m, 2 * m + extra).unwrap();
            prop_assert_eq!(parse_cover(&write_cover(&cover)).unwrap(), cover);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("formula table", criterion_1, Duration::from_secs(1)),
        ("oracle agrees with closed forms", criterion_2, Duration::from_secs(60)),
        ("maximum K_5 members are wheels", criterion_3, Duration::from_secs(60)),
        ("double cycle covers", criterion_4, Duration::from_secs(5)),
        ("end-to-end certificates", criterion_5, Duration::from_secs(30)),
        ("extremal ladders and wheels", criterion_6, Duration::from_secs(5)),
        ("lower-bound consistency", criterion_7, Duration::from_secs(5)),
        ("reductions", criterion_8, Duration::from_secs(30)),
        ("property suite", criterion_9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(took <= *limit, || format!("took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs()))
        });
        match outcome {
            Ok(()) => println!("[PASS] {}. {name} ({:.3}s)", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
