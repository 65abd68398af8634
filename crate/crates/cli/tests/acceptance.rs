//! One PASS/FAIL line per acceptance criterion. Tolerance is zero: every
//! comparison is exact equality of finite values or of verdicts.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use multirel::generate::{rng_for, Instance};
use multirel::{
    alpha, determinise, enumerate_mrel, enumerate_rel, peleg, power_transpose, Class, DetMode, GenMode, GenSpec, Kind,
    MRel, MRelConst, Rel, Space, SubsetMask,
};
use multirel_laws::{check_id, CheckOptions, Mode, Report, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_rels(x: usize, y: usize) -> Vec<Rel> {
    enumerate_rel(&GenSpec { src: x, dst: y, mode: GenMode::Exhaustive, filter: vec![] }).unwrap().collect()
}

fn all_mrels(x: usize, y: usize, filter: &[Class]) -> Vec<MRel> {
    enumerate_mrel(&GenSpec { src: x, dst: y, mode: GenMode::Exhaustive, filter: filter.to_vec() }).unwrap().collect()
}

/// `η(R) = R ; 1`, built pairwise.
fn eta_of(r: &Rel) -> MRel {
    MRel::from_pairs(r.src(), r.dst(), r.pairs().map(|(a, b)| (a, SubsetMask::from_elems([b])))).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<String, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{what} in {:.2}s", t.as_secs_f64()))
    } else {
        Err(format!("{what} took {:.2}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn round_trips() -> Outcome {
    let start = Instant::now();
    let mut rels = 0;
    for x in 1..=3 {
        for y in 1..=3 {
            for r in all_rels(x, y) {
                let back = alpha(&power_transpose(&r).unwrap());
                ensure(back == r, || format!("α(Λ(R)) ≠ R for {}", r.to_json()))?;
                ensure(alpha(&eta_of(&r)) == r, || format!("α(η(R)) ≠ R for {}", r.to_json()))?;
                rels += 1;
            }
        }
    }
    let odet = all_mrels(2, 2, &[Class::OuterDeterministic]);
    ensure(odet.len() == 16, || format!("{} outer deterministic at 2,2", odet.len()))?;
    for f in &odet {
        ensure(power_transpose(&alpha(f)).unwrap() == *f, || format!("Λ(α(f)) ≠ f for {}", f.to_json()))?;
    }
    let mut idet = 0;
    for (x, y) in [(2, 2), (3, 3)] {
        for s in all_mrels(x, y, &[Class::InnerDeterministic]) {
            ensure(eta_of(&alpha(&s)) == s, || format!("η(α(S)) ≠ S for {}", s.to_json()))?;
            idet += 1;
        }
    }
    within(
        start,
        Duration::from_secs(1),
        &format!("{rels} relations, {} outer and {idet} inner deterministic", odet.len()),
    )
}

fn peleg_oracle() -> Outcome {
    let start = Instant::now();
    let all = all_mrels(2, 2, &[]);
    ensure(all.len() == 256, || format!("{} multirelations at 2,2", all.len()))?;
    for r in &all {
        for s in &all {
            let fast = peleg::peleg_compose(r, s).unwrap();
            let slow = peleg::peleg_compose_oracle(r, s).unwrap();
            ensure(fast == slow, || format!("R ∗ S differs for {} and {}", r.to_json(), s.to_json()))?;
        }
    }
    let space = Space::new(Kind::MRel, 3, 3, &[]).unwrap();
    let draw = |stream| match space.sample(&mut rng_for(42, stream), 0.5) {
        Some(Instance::MRel(m)) => m,
        other => panic!("unexpected sample {other:?}"),
    };
    for i in 0..1000u64 {
        let (r, s) = (draw(2 * i), draw(2 * i + 1));
        ensure(peleg::peleg_compose(&r, &s).unwrap() == peleg::peleg_compose_oracle(&r, &s).unwrap(), || {
            format!("R ∗ S differs for {} and {}", r.to_json(), s.to_json())
        })?;
    }
    within(start, Duration::from_secs(60), "65536 exhaustive and 1000 seeded pairs")
}

fn report(id: &str, sizes: Option<Vec<usize>>) -> Result<Report, String> {
    check_id(id, &CheckOptions { sizes, ..CheckOptions::default() }).map_err(|e| format!("{id}: {e}"))
}

fn pinned_witnesses() -> Outcome {
    let groups: [(&str, &[&str]); 6] = [
        ("a", &["REG-alpha-peleg-strict"]),
        ("b", &["REG-nonassoc-triple", "REG-nonassoc-total-triple", "NEG-peleg-assoc-general"]),
        (
            "c",
            &[
                "REG-galois-subset-alpha-lambda",
                "REG-galois-subset-lambda-alpha",
                "REG-galois-subset-alpha-eta",
                "REG-galois-subset-eta-alpha",
            ],
        ),
        ("d", &["REG-nu-fusion"]),
        ("e", &["REG-fission-peleg-outer-univalent", "REG-fusion-peleg-outer-univalent", "REG-outer-univalent-alpha"]),
        ("f", &["REG-quantaloid-empty-union-inner-univalent", "REG-quantaloid-empty-iunion-outer-univalent"]),
    ];
    let mut off = Vec::new();
    let mut n = 0;
    for (item, ids) in groups {
        for id in ids {
            let r = report(id, None)?;
            n += 1;
            if r.mode != Mode::Pinned || !r.as_declared {
                off.push(format!("({item}) {id}: {:?}, declared {:?}", r.verdict, r.expected));
            }
        }
    }
    if off.is_empty() {
        Ok(format!("{n} pinned laws as declared"))
    } else {
        Err(off.join("; "))
    }
}

/// Each law must pass exhaustively; `counts` pins the instance count.
fn exhaustive_suite(laws: &[(&str, Option<u64>)], sizes: Option<Vec<usize>>) -> Result<u64, String> {
    let mut total = 0;
    for &(id, count) in laws {
        let r = report(id, sizes.clone())?;
        ensure(r.mode == Mode::Exhaustive, || format!("{id}: {:?} mode", r.mode))?;
        ensure(r.verdict == Verdict::Pass, || {
            format!("{id}: {:?} {}", r.verdict, serde_json::to_string(&r.counterexamples).unwrap())
        })?;
        if let Some(c) = count {
            ensure(r.checked == c, || format!("{id}: {} instances, expected {c}", r.checked))?;
        }
        total += r.checked;
    }
    Ok(total)
}

fn galois_suite() -> Outcome {
    let start = Instant::now();
    let laws = [
        ("P3.3-galois-alpha-lambda", Some(256 * 16)),
        ("P3.3-galois-eta-alpha", Some(16 * 256)),
        ("P3.3-galois-fission-fusion", Some(256 * 256)),
        ("P3.3-alpha-inner-intersection", Some(256 * 256)),
        ("P3.3-monotone-lambda-eta", Some(16 * 16)),
        ("P3.3-monotone-alpha", Some(256 * 256)),
        ("P3.3-fusion-closure", Some(256 * 256)),
        ("P3.3-fission-interior", Some(256 * 256)),
    ];
    let n = exhaustive_suite(&laws, Some(vec![2, 2]))?;
    within(start, Duration::from_secs(30), &format!("{n} instances"))
}

fn category_suites() -> Outcome {
    let start = Instant::now();
    let laws = [
        ("P3.2-outer-det-category", Some(16 * 16 * 16)),
        ("P3.2-outer-det-closure", Some(16 * 16)),
        ("P3.2-outer-det-units", Some(16)),
        ("P3.2-inner-det-category", Some(16 * 16 * 16)),
        ("P3.2-inner-det-closure", Some(16 * 16)),
        ("P3.2-inner-det-units", Some(16)),
        ("P4-inner-univalent-category", Some(64 * 64 * 64)),
        ("P4-inner-univalent-closure", Some(64 * 64)),
        ("P4-inner-univalent-units", Some(64)),
        ("P2.2-outer-univalent-category", Some(25 * 25 * 25)),
        ("P2.2-outer-univalent-closure", Some(25 * 25)),
    ];
    let n = exhaustive_suite(&laws, Some(vec![2]))?;
    within(start, Duration::from_secs(300), &format!("{n} instances"))
}

fn fixpoint_suites() -> Outcome {
    let start = Instant::now();
    let fix = [
        "C3.3-fix-fission",
        "C3.3-fix-fusion",
        "L2.2-fix-inner-univalent",
        "L2.2-fix-inner-total",
        "L2.2-fix-inner-det-atoms",
        "L2.2-fix-inner-det-eta",
    ];
    let mut n = exhaustive_suite(&fix.map(|id| (id, Some(1 << 16))), Some(vec![2, 3]))?;
    n += exhaustive_suite(&fix.map(|id| (id, Some(1 << 8))), Some(vec![2, 2]))?;
    let pre = [
        "L5-outer-univalent-postfix",
        "L5-outer-total-prefix",
        "L5-fusion-postfix-coincide",
        "L5-outer-det-prefix",
        "L5-inner-univalent-fix",
        "L5-fission-postfix-univalent",
        "L5-fission-postfix-coincide",
        "L5-inner-total-prefix",
        "L5-fission-prefix-coincide",
        "L5-fission-postfix-det",
    ];
    n += exhaustive_suite(&pre.map(|id| (id, Some(1 << 8))), Some(vec![2, 2]))?;
    // Direct route: core operations against classify, without the DSL.
    let at = MRel::constant(MRelConst::Atoms, 2, 3).unwrap();
    let ilow = MRel::constant(MRelConst::InnerUnit, 2, 3).unwrap();
    let at_or_ilow = at.union(&ilow).unwrap();
    for r in all_mrels(2, 3, &[]) {
        let c = r.classify();
        let idet = determinise(DetMode::Fission, &r) == r;
        let odet = determinise(DetMode::Fusion, &r) == r;
        let iuni = r.intersection(&at_or_ilow).unwrap() == r;
        let itot = r.minus(&ilow).unwrap() == r;
        ensure(
            (idet, odet, iuni, itot)
                == (c.inner_deterministic, c.outer_deterministic, c.inner_univalent, c.inner_total),
            || format!("fixpoint test disagrees with classify on {}", r.to_json()),
        )?;
        n += 1;
    }
    within(start, Duration::from_secs(300), &format!("{n} instances"))
}

fn basis_concordance() -> Outcome {
    let start = Instant::now();
    let ids: Vec<&str> =
        multirel_laws::registry().iter().map(|l| l.id.as_str()).filter(|id| id.starts_with("A-")).collect();
    ensure(ids.contains(&"A-peleg-lift"), || "no basis law for the Peleg lifting".into())?;
    let mut capped = Vec::new();
    for id in &ids {
        for n in [1, 2] {
            let r = report(id, Some(vec![n]))?;
            ensure(r.mode == Mode::Exhaustive && r.verdict == Verdict::Pass, || {
                format!(
                    "{id} at size {n}: {:?} {:?} {}",
                    r.mode,
                    r.verdict,
                    serde_json::to_string(&r.counterexamples).unwrap()
                )
            })?;
        }
        let r =
            check_id(id, &CheckOptions { sizes: Some(vec![3]), random: Some((200, 0.5)), ..CheckOptions::default() })
                .map_err(|e| format!("{id}: {e}"))?;
        match r.verdict {
            Verdict::Pass => {}
            Verdict::Skipped => capped.push(*id),
            Verdict::Fail => {
                return Err(format!("{id} at size 3: {}", serde_json::to_string(&r.counterexamples).unwrap()))
            }
        }
    }
    let note = if capped.is_empty() { String::new() } else { format!(", capped at 3: {}", capped.join(" ")) };
    within(start, Duration::from_secs(600), &format!("{} basis laws at sizes 1, 2 and 3{note}", ids.len()))
}

fn full_check() -> Outcome {
    let start = Instant::now();
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_multirel"))
            .args(["check", "--all", "--sizes", "2,2", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        Ok::<_, String>((out.status.code(), out.stdout))
    };
    let (code, first) = run()?;
    let elapsed = start.elapsed();
    let (_, second) = run()?;
    ensure(first == second, || "reports differ between two runs with the same seed".into())?;
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
    let off: Vec<_> = reports.iter().filter(|r| r["as_declared"] != true).map(|r| r["law"].to_string()).collect();
    ensure(elapsed < Duration::from_secs(600), || format!("took {:.1}s", elapsed.as_secs_f64()))?;
    ensure(code == Some(0), || format!("exit {code:?}; not as declared: {}", off.join(" ")))?;
    Ok(format!("{} laws in {:.1}s, byte-identical reports", reports.len(), elapsed.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("round-trip bijections", round_trips),
        ("Peleg oracle equivalence", peleg_oracle),
        ("pinned witnesses", pinned_witnesses),
        ("Galois-connection suite", galois_suite),
        ("category suites", category_suites),
        ("fixpoint suites", fixpoint_suites),
        ("basis concordance", basis_concordance),
        ("check --all --sizes 2,2", full_check),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
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
