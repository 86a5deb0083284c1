//! Runs every acceptance criterion and prints one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use schinzel::search::{verify_normal_infinity_conjecture, SearchConfig};
use schinzel_core::dihedral::{
    caz_dihedral, cheby_tuple, dihedral_classes, dihedral_group, galois_closure_genus,
    modular_tuple, AffineElem,
};
use schinzel_core::group::automorphisms;
use schinzel_core::nielsen::{
    enumerate_nielsen, rotate_tuple, Equivalence, NielsenClassSpec, SlotOrder,
};
use schinzel_core::schinzel::{
    build_ext_group, caz_outside_symmetric, charschinzel_check, factor_orbit_lengths,
    is_newly_reducible, modular_pairing, PairSetup, Verdict,
};
use schinzel_core::wreath::{sigma_star_infinity, solve_comp_branch};
use schinzel_core::{ClassTable, CosetAction, Perm, PermGroup};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    check(
        start.elapsed() < limit,
        format!("took {:.2?}, limit {:.0?}", start.elapsed(), limit),
    )
}

fn even_up_to_12() -> impl Iterator<Item = usize> {
    (4..=12).step_by(2)
}

fn dihedral_spec(n: usize, eq: Equivalence) -> NielsenClassSpec {
    let g = dihedral_group(n).unwrap();
    let table = ClassTable::new(&g);
    let c = dihedral_classes(&table).unwrap();
    NielsenClassSpec::new(table, vec![c.reflections_odd, c.reflections_even, c.infinity], eq)
        .unwrap()
}

fn dihedral_genus() -> Outcome {
    let start = Instant::now();
    for n in even_up_to_12() {
        let t = cheby_tuple(n).unwrap();
        check(t.indices() == vec![n / 2, n / 2 - 1, n - 1], format!("indices at n = {n}"))?;
        check(t.genus() == Ok(0), format!("genus at n = {n}"))?;
    }
    within(start, Duration::from_secs(1))
}

fn nielsen_count() -> Outcome {
    let start = Instant::now();
    for n in [4, 6, 8] {
        let e = enumerate_nielsen(&dihedral_spec(n, Equivalence::Absolute)).unwrap();
        check(!e.fallback_to_inner, format!("absolute fell back at n = {n}"))?;
        check(e.count() == 6, format!("{} classes at n = {n}", e.count()))?;
    }
    within(start, Duration::from_secs(5))
}

fn factor_orbits() -> Outcome {
    for n in even_up_to_12() {
        let g = dihedral_group(n).unwrap();
        let setup = PairSetup::natural(&g, &caz_dihedral(n).unwrap()).unwrap();
        let lengths = factor_orbit_lengths(&setup).unwrap();
        check(lengths == vec![2; n / 2], format!("{lengths:?} at n = {n}"))?;
    }
    Ok(())
}

fn newly_reducible_boundary() -> Outcome {
    for n in even_up_to_12() {
        let g = dihedral_group(n).unwrap();
        let nr = is_newly_reducible(&PairSetup::natural(&g, &caz_dihedral(n).unwrap()).unwrap())
            .unwrap();
        if n == 4 {
            check(nr.verdict == Verdict::NewlyReducible, "n = 4 not newly reducible")?;
        } else {
            check(nr.verdict == Verdict::ReducibleComposite, format!("verdict at n = {n}"))?;
            check(nr.witness.is_some(), format!("no witness at n = {n}"))?;
        }
    }
    Ok(())
}

fn p(s: &str, n: usize) -> Perm {
    Perm::parse(s, n).unwrap()
}

/// `GL(2, 3)` on the eight nonzero vectors of `F_3²`.
fn gl23() -> PermGroup {
    let vectors: Vec<(u8, u8)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u8; 2]; 2]| {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vectors.iter().position(|&u| u == w).unwrap() + 1
            })
            .collect();
        Perm::from_images(&images).unwrap()
    };
    PermGroup::generate(8, &[act([[1, 1], [0, 1]]), act([[0, 1], [2, 0]]), act([[2, 0], [0, 1]])], 100)
        .unwrap()
}

fn trace_test_groups() -> Vec<PermGroup> {
    let mut groups = Vec::new();
    for n in 2..=12 {
        let c: Vec<usize> = (1..=n).collect();
        groups.push(PermGroup::generate(n, &[Perm::from_cycles(n, &[&c]).unwrap()], 48).unwrap());
    }
    for n in 3..=24 {
        groups.push(dihedral_group(n).unwrap());
    }
    groups.push(PermGroup::symmetric(4, 48).unwrap());
    groups.push(PermGroup::generate(4, &[p("(1 2 3)", 4), p("(1 2)(3 4)", 4)], 48).unwrap());
    groups.push(
        PermGroup::generate(6, &[p("(1 2 3 4)", 6), p("(1 2)", 6), p("(5 6)", 6)], 48).unwrap(),
    );
    groups.push(
        PermGroup::generate(8, &[p("(1 2 3 4)(5 6 7 8)", 8), p("(1 5 3 7)(2 8 4 6)", 8)], 48)
            .unwrap(),
    );
    groups.push(
        PermGroup::generate(7, &[p("(1 2 3 4)", 7), p("(5 6 7)", 7), p("(5 6)", 7)], 48).unwrap(),
    );
    groups.push(gl23());
    // random two-generator groups of degree 6
    let mut runner = TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = proptest::strategy::Just((0..6u32).collect::<Vec<u32>>()).prop_shuffle();
    let mut added = 0;
    while added < 20 {
        let a = Perm::from_zero_based(strategy.new_tree(&mut runner).unwrap().current()).unwrap();
        let b = Perm::from_zero_based(strategy.new_tree(&mut runner).unwrap().current()).unwrap();
        if let Ok(g) = PermGroup::generate(6, &[a, b], 48) {
            groups.push(g);
            added += 1;
        }
    }
    groups
}

fn trace_lemma() -> Outcome {
    let start = Instant::now();
    let groups = trace_test_groups();
    let mut checked = 0usize;
    for g in &groups {
        check(g.order() <= 48, "group too large")?;
        let table = ClassTable::new(g);
        let auts: Vec<_> = automorphisms(g)
            .into_iter()
            .filter(|a| a.is_class_preserving(&table))
            .collect();
        for h in g.all_subgroups() {
            let action = CosetAction::new(g, &h).unwrap();
            let traces: Vec<usize> = g.elements().iter().map(|s| action.trace(s).unwrap()).collect();
            for gamma in &auts {
                for (i, &tr) in traces.iter().enumerate() {
                    checked += 1;
                    if traces[gamma.apply_index(i)] != tr {
                        return Err(format!("trace differs in a group of order {}", g.order()));
                    }
                }
            }
        }
    }
    check(checked > 0, "nothing checked")?;
    within(start, Duration::from_secs(60))
}

fn extension_group() -> Outcome {
    for n in even_up_to_12() {
        let g = dihedral_group(n).unwrap();
        let c = caz_dihedral(n).unwrap();
        let s_inf = cheby_tuple(n).unwrap().sigma_infinity().unwrap().clone();
        let e = build_ext_group(&g, &c, &s_inf, 2).unwrap();
        check(e.order() == 4 * n, format!("order at n = {n}"))?;
        check(e.element_order(e.star()) == 2 * n, format!("star order at n = {n}"))?;
        check(e.pow(e.star(), 2) == e.embed(&s_inf).unwrap(), "square of star")?;
        if n == 4 {
            check(e.is_associative(), "not associative at n = 4")?;
            let action = CosetAction::new(&g, &g.point_stabilizer(1)).unwrap();
            check(caz_outside_symmetric(&c, &action, 8).unwrap(), "c_AZ realized in S_4")?;
        }
    }
    Ok(())
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let g = dihedral_group(4).unwrap();
    let t = cheby_tuple(4).unwrap();
    let c = caz_dihedral(4).unwrap();
    let image = t.map_automorphism(&c).unwrap();
    let rotated = rotate_tuple(&t).unwrap();
    let found = rotated.conjugator_to(&image, g.elements());
    check(found.is_some(), "no conjugator")?;
    let found = found.unwrap();
    check(rotated.conjugate_by(&found) == image, "conjugator does not conjugate")?;
    let s2 = AffineElem::new(4, -1, 0).unwrap().to_perm();
    check(ClassTable::new(&g).same_class(&found, &s2), "conjugator outside the class of σ2")?;
    check(rotated.conjugate_by(&s2) == image, "σ2 is not a conjugator")?;
    check(charschinzel_check(&g, &t, &c, 2).unwrap().holds(), "conditions fail")?;
    within(start, Duration::from_secs(1))
}

fn comp_branch() -> Outcome {
    let start = Instant::now();
    for n in [4, 6, 8] {
        let s = solve_comp_branch(n).map_err(|e| e.to_string())?;
        check(!s.solutions.is_empty(), format!("no solution at n = {n}"))?;
        let star = sigma_star_infinity(n, 2);
        for t in &s.solutions {
            let e = t.entries();
            check(e[0].cycle_type() == vec![2; n], "σ*_0 shape")?;
            let mut one = vec![2; n - 1];
            one.extend([1, 1]);
            check(e[1].cycle_type() == one, "σ*_1 shape")?;
            check(e[2] == star, "σ*_∞")?;
            check(t.satisfies_product_one(), "product-one")?;
        }
        check(s.roundtrip, format!("round trip at n = {n}"))?;
    }
    within(start, Duration::from_secs(30))
}

fn modular_example() -> Outcome {
    for n in even_up_to_12() {
        let t = modular_tuple(n).unwrap();
        let g = dihedral_group(n).unwrap();
        check(t.genus() == Ok(0), format!("fiber genus at n = {n}"))?;
        check(galois_closure_genus(&t, &g) == Ok(1), format!("closure genus at n = {n}"))?;
    }
    Ok(())
}

fn rotation_order() -> Outcome {
    let mut tuples = 0;
    for n in even_up_to_12() {
        let spec = dihedral_spec(n, Equivalence::Inner);
        let g = spec.group().clone();
        for rep in enumerate_nielsen(&spec).unwrap().representatives {
            for x in g.elements() {
                let t = rep.conjugate_by(x);
                let mut r = t.clone();
                for _ in 0..t.len() - 1 {
                    r = rotate_tuple(&r).unwrap();
                }
                check(r == t, format!("rotation order fails at n = {n}"))?;
                tuples += 1;
            }
        }
    }
    check(tuples > 0, "no tuples")
}

fn conjecture_evidence() -> Outcome {
    let start = Instant::now();
    let mut config = SearchConfig::new(7, 2);
    config.jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = verify_normal_infinity_conjecture(&config).map_err(|e| e.to_string())?;
    check(report.d4_unique, "D_4 is not the unique newly-reducible survivor")?;
    check(report.unexplained == 0, format!("{} unexplained candidates", report.unexplained))?;
    check(report.non_normal.is_empty(), "survivors with ⟨σ_∞⟩ not normal")?;
    within(start, Duration::from_secs(600))?;

    let g = dihedral_group(4).unwrap();
    let table = ClassTable::new(&g);
    let c = dihedral_classes(&table).unwrap();
    let spec = NielsenClassSpec::new(
        table,
        vec![c.reflections_odd, c.reflections_even, c.reflections_even, c.reflections_odd],
        Equivalence::Inner,
    )
    .unwrap()
    .with_slot_order(SlotOrder::Slotwise);
    let pairing = modular_pairing(&spec).unwrap();
    check(
        pairing.paired_count() == 2,
        format!("{} paired modular classes at n = 4", pairing.paired_count()),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_schinzel");
    let run = |jobs: &str| {
        Command::new(bin)
            .args(["search", "--max-n", "6", "--v", "2", "--jobs", jobs, "--no-cache"])
            .output()
            .unwrap()
    };
    let one = run("1");
    let eight = run("8");
    check(one.status.success() && eight.status.success(), "search failed")?;
    check(!one.stdout.is_empty(), "empty output")?;
    check(one.stdout == eight.stdout, "outputs differ")
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("dihedral genus", dihedral_genus),
        ("nielsen count", nielsen_count),
        ("factor orbits", factor_orbits),
        ("newly-reducible boundary", newly_reducible_boundary),
        ("trace lemma", trace_lemma),
        ("extension group", extension_group),
        ("worked example", worked_example),
        ("composite branch cycles", comp_branch),
        ("modular example", modular_example),
        ("rotation order", rotation_order),
        ("conjecture evidence", conjecture_evidence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
