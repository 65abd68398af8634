//! Kleisli and Peleg liftings, the two compositions built from them, and
//! the decomposition of a relation into its univalent parts with full
//! domain (`S ⊆_d R`).

use crate::error::{Error, Result};
use crate::mrel::MRel;
use crate::power::{alpha, image_functor, pow_size, SubsetMask};
use crate::rel::Rel;
use crate::ENUM_CAP;

/// Odometer over per-row selections. Rows of length zero are outside the
/// domain and always select `None`; the first row varies slowest.
#[derive(Debug, Clone)]
pub struct Choices {
    lens: Vec<usize>,
    cur: Option<Vec<Option<usize>>>,
}

impl Choices {
    pub fn new(lens: Vec<usize>, what: &str) -> Result<Choices> {
        let mut size: u128 = 1;
        for &n in lens.iter().filter(|&&n| n > 0) {
            size = size.saturating_mul(n as u128);
        }
        if size > ENUM_CAP {
            return Err(Error::EnumerationTooLarge { what: what.to_string(), size, cap: ENUM_CAP });
        }
        let cur = lens.iter().map(|&n| (n > 0).then_some(0)).collect();
        Ok(Choices { lens, cur: Some(cur) })
    }
}

impl Iterator for Choices {
    type Item = Vec<Option<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.cur.clone()?;
        let mut advanced = false;
        if let Some(cur) = self.cur.as_mut() {
            for (slot, &n) in cur.iter_mut().zip(&self.lens).rev() {
                if let Some(i) = slot {
                    if *i + 1 < n {
                        *i += 1;
                        advanced = true;
                        break;
                    }
                    *i = 0;
                }
            }
        }
        if !advanced {
            self.cur = None;
        }
        Some(out)
    }
}

/// All `S ⊆_d R`: one mask per non-empty row, in lexicographic selection order.
pub fn d_subrelations(r: &MRel) -> Result<impl Iterator<Item = MRel> + '_> {
    let choices = Choices::new(r.rows().iter().map(Vec::len).collect(), "d-subrelations of a multirelation")?;
    Ok(choices.map(move |sel| {
        let rows =
            sel.iter().enumerate().map(|(a, pick)| pick.map(|i| vec![r.row(a)[i]]).unwrap_or_default()).collect();
        MRel::new(r.src(), r.dst(), rows).expect("selection of a canonical multirelation")
    }))
}

/// Union of the masks of a row; the empty row gives `∅`.
fn row_union(row: &[SubsetMask]) -> SubsetMask {
    row.iter().fold(SubsetMask::EMPTY, |acc, &m| acc.union(m))
}

/// `R_P = P(α(R))` as a multirelation `P X ↔ P Y`.
pub fn kleisli_lift_mrel(r: &MRel) -> Result<MRel> {
    let n = pow_size(r.src())?;
    let images: Vec<SubsetMask> = r.rows().iter().map(|row| row_union(row)).collect();
    let rows = (0..n as u64)
        .map(|a| vec![SubsetMask::new(a).elems().fold(SubsetMask::EMPTY, |acc, x| acc.union(images[x]))])
        .collect();
    MRel::new(n, r.dst(), rows)
}

/// `R_P : P X ↔ P Y`, a deterministic relation.
pub fn kleisli_lift(r: &MRel) -> Result<Rel> {
    kleisli_lift_mrel(r)?.to_rel()
}

/// All unions `⋃_{b ∈ B} g(b)` over choices `g(b) ∈ S(b)`; empty when some
/// `b ∈ B` has an empty row. The frontier is deduplicated after each step.
fn choice_unions(b: SubsetMask, s: &MRel) -> Result<Vec<SubsetMask>> {
    let mut acc = vec![SubsetMask::EMPTY];
    for e in b.elems() {
        let row = s.row(e);
        if row.is_empty() {
            return Ok(Vec::new());
        }
        let work = (acc.len() as u128) * (row.len() as u128);
        if work > ENUM_CAP {
            return Err(Error::EnumerationTooLarge {
                what: format!("choice unions for the subset {b}"),
                size: work,
                cap: ENUM_CAP,
            });
        }
        let mut next: Vec<SubsetMask> = acc.iter().flat_map(|&x| row.iter().map(move |&y| x.union(y))).collect();
        next.sort_unstable();
        next.dedup();
        acc = next;
    }
    Ok(acc)
}

/// `R_∗` as a multirelation `P X ↔ P Y`: row `A` is empty unless
/// `A ⊆ dom(R)`, and then holds every union of one choice per element.
pub fn peleg_lift_mrel(r: &MRel) -> Result<MRel> {
    let n = pow_size(r.src())?;
    let rows = (0..n as u64).map(|a| choice_unions(SubsetMask::new(a), r)).collect::<Result<_>>()?;
    MRel::new(n, r.dst(), rows)
}

/// `R_∗ : P X ↔ P Y`.
pub fn peleg_lift(r: &MRel) -> Result<Rel> {
    peleg_lift_mrel(r)?.to_rel()
}

fn check_chain(r: &MRel, s: &MRel, op: &'static str) -> Result<()> {
    if r.dst() == s.src() {
        Ok(())
    } else {
        Err(Error::shape(op, r.shape(), s.shape()))
    }
}

/// Peleg composition `R ∗ S`.
pub fn peleg_compose(r: &MRel, s: &MRel) -> Result<MRel> {
    check_chain(r, s, "Peleg composition")?;
    let rows = r
        .rows()
        .iter()
        .map(|row| {
            let mut out = Vec::new();
            for &b in row {
                out.extend(choice_unions(b, s)?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    MRel::new(r.src(), s.dst(), rows)
}

/// `R ∗ S = R ; D ; ⋃_{T ⊆_d S} T_P` with `D = {(A, A) | A ⊆ dom(S)}`,
/// evaluated on materialized relations. Independent of [`peleg_compose`].
pub fn peleg_compose_oracle(r: &MRel, s: &MRel) -> Result<MRel> {
    check_chain(r, s, "Peleg composition")?;
    let py = pow_size(s.src())?;
    let pz = pow_size(s.dst())?;
    let dom: SubsetMask = SubsetMask::from_elems((0..s.src()).filter(|&b| !s.row(b).is_empty()));
    let mut d = Rel::empty(py, py);
    for a in dom.subsets() {
        d.insert(a.bits() as usize, a.bits() as usize);
    }
    let mut lifts = Rel::empty(py, pz);
    for t in d_subrelations(s)? {
        lifts = lifts.union(&image_functor(&alpha(&t))?)?;
    }
    let composed = r.to_rel()?.compose(&d)?.compose(&lifts)?;
    MRel::from_rel(&composed, s.dst())
}

/// Kleisli composition `R ∘_P S = R ; S_P`, computed row-wise.
pub fn kleisli_compose(r: &MRel, s: &MRel) -> Result<MRel> {
    check_chain(r, s, "Kleisli composition")?;
    let images: Vec<SubsetMask> = s.rows().iter().map(|row| row_union(row)).collect();
    let rows = r
        .rows()
        .iter()
        .map(|row| row.iter().map(|b| b.elems().fold(SubsetMask::EMPTY, |acc, e| acc.union(images[e]))).collect())
        .collect();
    MRel::new(r.src(), s.dst(), rows)
}

/// `R ⊙ S = ∁(R ∗ ∁S)`.
pub fn odot(r: &MRel, s: &MRel) -> Result<MRel> {
    Ok(peleg_compose(r, &s.inner_complement())?.inner_complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrel::{MRelConst, Preorder};
    use crate::power::{eta, omega_mrel};
    use proptest::prelude::*;

    fn m(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elems(elems.iter().copied())
    }

    fn mrel(src: usize, dst: usize, pairs: &[(usize, &[usize])]) -> MRel {
        MRel::from_pairs(src, dst, pairs.iter().map(|&(a, e)| (a, m(e)))).unwrap()
    }

    fn all_mrels(src: usize, dst: usize) -> Vec<MRel> {
        let k = 1usize << dst;
        (0u64..1 << (src * k))
            .map(|code| {
                let pairs =
                    (0..src * k).filter(|&i| code >> i & 1 == 1).map(|i| (i / k, SubsetMask::new((i % k) as u64)));
                MRel::from_pairs(src, dst, pairs).unwrap()
            })
            .collect()
    }

    fn arb_mrel(src: usize, dst: usize) -> impl Strategy<Value = MRel> {
        let k = 1usize << dst;
        proptest::collection::vec(any::<bool>(), src * k).prop_map(move |bits| {
            let pairs = (0..src * k).filter(|&i| bits[i]).map(|i| (i / k, SubsetMask::new((i % k) as u64)));
            MRel::from_pairs(src, dst, pairs).unwrap()
        })
    }

    /// Keeps at most the first mask of every row.
    fn univalent_part(r: MRel) -> MRel {
        MRel::new(r.src(), r.dst(), r.rows().iter().map(|row| row.iter().take(1).copied().collect()).collect()).unwrap()
    }

    #[test]
    fn d_subrelation_examples() {
        let r = mrel(1, 2, &[(0, &[0]), (0, &[1])]);
        let subs: Vec<MRel> = d_subrelations(&r).unwrap().collect();
        assert_eq!(subs, vec![mrel(1, 2, &[(0, &[0])]), mrel(1, 2, &[(0, &[1])])]);
        let u = mrel(2, 2, &[(0, &[0, 1])]);
        assert_eq!(d_subrelations(&u).unwrap().collect::<Vec<_>>(), vec![u.clone()]);
        assert_eq!(d_subrelations(&MRel::empty(2, 2).unwrap()).unwrap().count(), 1);
    }

    #[test]
    fn d_subrelations_cover() {
        for r in all_mrels(2, 2) {
            let mut acc = MRel::empty(2, 2).unwrap();
            let mut count = 0;
            for s in d_subrelations(&r).unwrap() {
                assert!(s.is_outer_univalent() && s.is_subset(&r).unwrap());
                acc = acc.union(&s).unwrap();
                count += 1;
            }
            assert_eq!(acc, r);
            assert_eq!(count, r.rows().iter().map(|row| row.len().max(1)).product::<usize>());
        }
    }

    #[test]
    fn d_subrelations_cap() {
        let big = MRel::constant(MRelConst::Universal, 4, 4).unwrap(); // 16^4 = 2^16 selections
        assert!(d_subrelations(&big).is_ok());
        let bigger = MRel::constant(MRelConst::Universal, 6, 4).unwrap(); // 16^6 = 2^24
        assert!(matches!(d_subrelations(&bigger), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn kleisli_lift_examples() {
        assert_eq!(kleisli_lift(&eta(2).unwrap()).unwrap(), Rel::identity(4));
        // ∅→∅, {a}→{a,b}, {b}→∅, {a,b}→{a,b}
        let r = mrel(2, 2, &[(0, &[0, 1])]);
        assert_eq!(kleisli_lift(&r).unwrap(), Rel::from_pairs(4, 4, [(0, 0), (1, 3), (2, 0), (3, 3)]).unwrap());
    }

    #[test]
    fn kleisli_lift_factors_through_mu() {
        let mu = crate::power::mu_mrel(2).unwrap().to_rel().unwrap();
        for r in all_mrels(2, 2) {
            let pr = image_functor(&r.to_rel().unwrap()).unwrap();
            assert_eq!(kleisli_lift(&r).unwrap(), pr.compose(&mu).unwrap());
        }
    }

    #[test]
    fn peleg_lift_examples() {
        let down_eta = eta(2).unwrap().down().unwrap();
        assert_eq!(peleg_lift(&down_eta).unwrap(), omega_mrel(2).unwrap().to_rel().unwrap().converse());
        let r = mrel(2, 2, &[(0, &[0])]);
        assert_eq!(peleg_lift(&r).unwrap(), Rel::from_pairs(4, 4, [(0, 0), (1, 1)]).unwrap());
        for r in all_mrels(2, 2).into_iter().filter(|r| r.classify().outer_deterministic) {
            assert_eq!(peleg_lift(&r).unwrap(), kleisli_lift(&r).unwrap());
        }
    }

    #[test]
    fn peleg_examples() {
        let r = mrel(2, 2, &[(0, &[0, 1])]);
        assert!(peleg_compose(&r, &r).unwrap().is_empty());
        let e = eta(2).unwrap();
        for r in all_mrels(2, 2) {
            assert_eq!(peleg_compose(&e, &r).unwrap(), r);
            assert_eq!(peleg_compose(&r, &e).unwrap(), r);
        }
    }

    #[test]
    fn deterministic_pair_composes_associatively() {
        let r = mrel(3, 3, &[(0, &[0, 1]), (1, &[0]), (2, &[2])]);
        let s = mrel(3, 3, &[(0, &[0, 1]), (1, &[0, 2]), (2, &[2])]);
        let right = peleg_compose(&r, &peleg_compose(&r, &s).unwrap()).unwrap();
        let left = peleg_compose(&peleg_compose(&r, &r).unwrap(), &s).unwrap();
        assert!(right.contains(0, m(&[0, 1, 2])));
        assert!(left.contains(0, m(&[0, 1, 2])));
        assert_eq!(left, right);
    }

    #[test]
    fn non_associative_triples() {
        // R ∗ (R ∗ S) gains (0,{0,1,2}) over (R ∗ R) ∗ S.
        let cases = [
            (mrel(3, 3, &[(0, &[1, 2]), (1, &[0]), (2, &[0])]), mrel(3, 3, &[(0, &[0, 1]), (0, &[1, 2])])),
            (
                mrel(3, 3, &[(0, &[0, 1, 2]), (1, &[1, 2]), (2, &[0, 1, 2])]),
                mrel(3, 3, &[(0, &[2]), (1, &[0]), (1, &[1, 2]), (2, &[2])]),
            ),
        ];
        for (r, s) in cases {
            let right = peleg_compose(&r, &peleg_compose(&r, &s).unwrap()).unwrap();
            let left = peleg_compose(&peleg_compose(&r, &r).unwrap(), &s).unwrap();
            assert!(right.contains(0, m(&[0, 1, 2])));
            assert!(!left.contains(0, m(&[0, 1, 2])));
            assert!(left.is_subset(&right).unwrap());
        }
    }

    #[test]
    fn peleg_with_empty_is_terminal_part() {
        for r in all_mrels(2, 2) {
            let empty = MRel::empty(2, 2).unwrap();
            assert_eq!(peleg_compose(&r, &empty).unwrap(), r.tau());
            assert_eq!(peleg_compose_oracle(&r, &empty).unwrap(), r.tau());
        }
    }

    #[test]
    fn oracle_agrees_small_exhaustive() {
        let all = all_mrels(1, 2);
        let rs = all_mrels(2, 1);
        for r in &all {
            for s in &rs {
                assert_eq!(peleg_compose(r, s).unwrap(), peleg_compose_oracle(r, s).unwrap());
            }
        }
    }

    #[test]
    fn kleisli_units() {
        let e = eta(2).unwrap();
        for r in all_mrels(2, 2) {
            assert_eq!(kleisli_compose(&r, &e).unwrap(), r);
            if r.is_outer_univalent() && r.is_outer_total() {
                assert_eq!(kleisli_compose(&e, &r).unwrap(), r);
            }
        }
        // not a left unit in general: the empty set is added to the row
        let r = mrel(1, 1, &[(0, &[]), (0, &[0])]);
        let e1 = eta(1).unwrap();
        assert_eq!(kleisli_compose(&e1, &r).unwrap(), mrel(1, 1, &[(0, &[0])]));
    }

    #[test]
    fn odot_matches_formula() {
        let all = all_mrels(1, 1);
        for r in &all {
            for s in &all {
                let expect = peleg_compose_oracle(r, &s.inner_complement()).unwrap().inner_complement();
                assert_eq!(odot(r, s).unwrap(), expect);
            }
        }
    }

    #[test]
    fn shape_errors() {
        let r = MRel::empty(2, 2).unwrap();
        let s = MRel::empty(3, 2).unwrap();
        assert!(matches!(peleg_compose(&r, &s), Err(Error::ShapeMismatch { .. })));
        assert!(matches!(kleisli_compose(&r, &s), Err(Error::ShapeMismatch { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn oracle_agrees_at_three(r in arb_mrel(3, 3), s in arb_mrel(3, 3)) {
            prop_assert_eq!(peleg_compose(&r, &s).unwrap(), peleg_compose_oracle(&r, &s).unwrap());
        }

        #[test]
        fn subassociative(r in arb_mrel(3, 3), s in arb_mrel(3, 3), t in arb_mrel(3, 3)) {
            let left = peleg_compose(&peleg_compose(&r, &s).unwrap(), &t).unwrap();
            let right = peleg_compose(&r, &peleg_compose(&s, &t).unwrap()).unwrap();
            prop_assert!(left.is_subset(&right).unwrap());
        }

        #[test]
        fn associative_with_univalent_third(r in arb_mrel(2, 2), s in arb_mrel(2, 2), f in arb_mrel(2, 2)) {
            let f = univalent_part(f);
            let left = peleg_compose(&peleg_compose(&r, &s).unwrap(), &f).unwrap();
            let right = peleg_compose(&r, &peleg_compose(&s, &f).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn first_argument_preserves_unions(r in arb_mrel(2, 3), q in arb_mrel(2, 3), s in arb_mrel(3, 2)) {
            let lhs = peleg_compose(&r.union(&q).unwrap(), &s).unwrap();
            let rhs = peleg_compose(&r, &s).unwrap().union(&peleg_compose(&q, &s).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn univalent_and_deterministic_closure(r in arb_mrel(2, 2), s in arb_mrel(2, 2)) {
            let (r, s) = (univalent_part(r), univalent_part(s));
            prop_assert!(peleg_compose(&r, &s).unwrap().is_outer_univalent());
        }

        #[test]
        fn kleisli_associative(r in arb_mrel(3, 3), s in arb_mrel(3, 3), t in arb_mrel(3, 3)) {
            let left = kleisli_compose(&kleisli_compose(&r, &s).unwrap(), &t).unwrap();
            let right = kleisli_compose(&r, &kleisli_compose(&s, &t).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kleisli_compose_is_composition_with_lift(r in arb_mrel(2, 2), s in arb_mrel(2, 2)) {
            let via = r.to_rel().unwrap().compose(&kleisli_lift(&s).unwrap()).unwrap();
            prop_assert_eq!(kleisli_compose(&r, &s).unwrap(), MRel::from_rel(&via, 2).unwrap());
        }

        #[test]
        fn down_closure_is_peleg_with_down_eta(r in arb_mrel(2, 2)) {
            let de = eta(2).unwrap().down().unwrap();
            prop_assert_eq!(r.down().unwrap(), peleg_compose(&r, &de).unwrap());
            prop_assert!(MRel::preorder(Preorder::EqDown, &r, &r.down().unwrap()).unwrap());
        }
    }
}
