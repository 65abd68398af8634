use multirel::{MRel, SubsetMask};
use multirel_dsl::{parse, Value};
use multirel_laws::{check, check_id, law, CheckOptions, Law, LawKind, Mode, Verdict};

fn json(opts: &CheckOptions, id: &str) -> String {
    serde_json::to_string(&check_id(id, opts).unwrap()).unwrap()
}

#[test]
fn reports_are_reproducible() {
    let opts = CheckOptions::default();
    for id in ["L2.2-subassociativity", "NEG-peleg-second-arg-union", "L3.2-alpha-functor-inner"] {
        assert_eq!(json(&opts, id), json(&opts, id), "{id}");
    }
    let other = CheckOptions { seed: 7, ..CheckOptions::default() };
    let a: serde_json::Value = serde_json::from_str(&json(&other, "L2.2-subassociativity")).unwrap();
    assert_eq!(a["seed"], 7);
    assert_eq!(a["elapsed_ms"], serde_json::Value::Null);
}

#[test]
fn lambda_alpha_inverse_counts() {
    let r =
        check_id("L2.1-lambda-alpha-inverse", &CheckOptions { sizes: Some(vec![2, 2]), ..Default::default() }).unwrap();
    assert_eq!((r.mode, r.checked, r.verdict), (Mode::Exhaustive, 16, Verdict::Pass));
    let r = check_id("L2.1-lambda-alpha-inverse", &CheckOptions::default()).unwrap();
    assert_eq!((r.checked, r.verdict), (512, Verdict::Pass));
    let r =
        check_id("L2.1-alpha-lambda-inverse", &CheckOptions { sizes: Some(vec![2]), ..Default::default() }).unwrap();
    assert_eq!(r.checked, 16);
}

#[test]
fn subassociativity_random_at_three() {
    let opts = CheckOptions { sizes: Some(vec![3]), random: Some((200, 0.5)), ..Default::default() };
    let r = check_id("L2.2-subassociativity", &opts).unwrap();
    assert_eq!((r.mode, r.checked, r.verdict), (Mode::Random, 200, Verdict::Pass));
}

#[test]
fn side_conditions_are_counted() {
    let opts = CheckOptions { random: Some((300, 0.5)), ..Default::default() };
    let r = check_id("P2.2-outer-univalent-closure", &opts).unwrap();
    assert_eq!(r.checked + r.skipped_by_condition, 300);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn empty_carrier_admits_the_empty_multirelation() {
    let l = law("empty-class", LawKind::Theorem, "nothing")
        .mrel("R", "X", "X")
        .cond("R", multirel::Class::InnerDeterministic)
        .cond("R", multirel::Class::InnerUnivalent)
        .cond("R", multirel::Class::OuterTotal)
        .claim("R == R")
        .sizes(&[("X", 0)])
        .build();
    let r = check(&l, &CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "the empty relation on the empty carrier qualifies");
}

#[test]
fn bad_density_is_rejected() {
    let opts = CheckOptions { random: Some((10, 1.5)), ..Default::default() };
    assert!(check_id("L2.2-subassociativity", &opts).is_err());
    assert!(check_id("no-such-law", &CheckOptions::default()).is_err());
}

/// Every single-step reduction of the reported counterexample passes.
fn assert_locally_minimal(l: &Law, opts: &CheckOptions) {
    let report = check(l, opts).unwrap();
    assert_eq!(report.verdict, Verdict::Fail, "{}", l.id);
    let cex = &report.counterexamples[0];
    let typed = l.typed().unwrap();
    let program = Law::compile(&typed, &cex.sizes).unwrap();
    let values: Vec<Value> = cex.values.iter().map(|(_, v)| v.clone()).collect();
    assert!(!program.eval_bool(0, &values).unwrap());
    for k in 0..values.len() {
        for smaller in reductions(&values[k]) {
            let mut next = values.clone();
            next[k] = smaller;
            let holds = !l.admits(program.slots(), &next) || program.eval_bool(0, &next).unwrap();
            assert!(holds, "{}: {:?} shrinks further", l.id, cex.bindings);
        }
    }
}

fn reductions(v: &Value) -> Vec<Value> {
    match v {
        Value::Rel(r) => r
            .pairs()
            .map(|(a, b)| {
                let mut r = r.clone();
                r.remove(a, b);
                Value::Rel(r)
            })
            .collect(),
        Value::MRel(m) => {
            let pairs: Vec<(usize, SubsetMask)> = m.pairs().collect();
            let mut out = Vec::new();
            for (i, &(a, mask)) in pairs.iter().enumerate() {
                let rest = pairs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &p)| p);
                out.push(rest.clone().collect::<Vec<_>>());
                for e in mask.elems() {
                    out.push(rest.clone().chain([(a, mask.without(e))]).collect());
                }
            }
            out.into_iter().map(|p| Value::MRel(MRel::from_pairs(m.src(), m.dst(), p).unwrap())).collect()
        }
        Value::Bool(_) => Vec::new(),
    }
}

#[test]
fn shrunk_counterexamples_are_locally_minimal() {
    let claims = [
        "R * S == S * R",
        "(R * S) * T == R * (S * T)",
        "a(R * S) == a(R) ; a(S)",
        "icup(R, R) == R",
        "up(R * S) == up(R) * up(S)",
    ];
    for claim in claims {
        let mut l = Law::adhoc(parse(claim).unwrap());
        l.vars = Vec::new();
        assert_locally_minimal(
            &l,
            &CheckOptions { sizes: Some(vec![3]), random: Some((400, 0.5)), ..Default::default() },
        );
        assert_locally_minimal(&l, &CheckOptions { sizes: Some(vec![2]), ..Default::default() });
    }
}

#[test]
fn shrinking_drops_unused_carrier_elements() {
    let l = Law::adhoc(parse("R * S == S * R").unwrap());
    let r = check(&l, &CheckOptions { sizes: Some(vec![3]), ..Default::default() }).unwrap();
    let cex = &r.counterexamples[0];
    assert!(cex.sizes.values().all(|&n| n <= 2), "{:?}", cex.sizes);
}
