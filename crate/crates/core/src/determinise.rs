//! The determinisation maps: fusion `δ_o = Λ∘α`, fission `δ_i = η∘α`,
//! their inner-complement duals co-fusion and co-fission, and the
//! down/up-closed representations of fusion.

use crate::error::Result;
use crate::mrel::{MRel, Preorder};
use crate::power::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMode {
    Fusion,
    Fission,
    Cofusion,
    Cofission,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedMode {
    /// `δ↓(R) = ↓δ_o(R)`
    Down,
    /// `δ↑(R) = ↑δ_o(R)`
    Up,
}

fn per_row(r: &MRel, f: impl Fn(&[SubsetMask]) -> Vec<SubsetMask>) -> MRel {
    let rows = r.rows().iter().map(|row| f(row)).collect();
    MRel::new(r.src(), r.dst(), rows).expect("determinisation preserves the shape")
}

/// Every map is total: an empty row fuses to `∅` and co-fuses to `Y`
/// (the intersection of the empty family).
pub fn determinise(mode: DetMode, r: &MRel) -> MRel {
    let dst = r.dst();
    let full = SubsetMask::full(dst);
    let union = |row: &[SubsetMask]| row.iter().fold(SubsetMask::EMPTY, |acc, &m| acc.union(m));
    let inter = |row: &[SubsetMask]| row.iter().fold(full, |acc, &m| acc.intersection(m));
    match mode {
        DetMode::Fusion => per_row(r, |row| vec![union(row)]),
        DetMode::Fission => per_row(r, |row| union(row).elems().map(SubsetMask::singleton).collect()),
        DetMode::Cofusion => per_row(r, |row| vec![inter(row)]),
        DetMode::Cofission => per_row(r, |row| inter(row).complement(dst).elems().map(|b| full.without(b)).collect()),
    }
}

/// Co-fusion and co-fission by their defining composites `∁δ(∁R)`.
pub fn determinise_dual(mode: DetMode, r: &MRel) -> MRel {
    let dual = match mode {
        DetMode::Cofusion => DetMode::Fusion,
        DetMode::Cofission => DetMode::Fission,
        DetMode::Fusion => DetMode::Cofusion,
        DetMode::Fission => DetMode::Cofission,
    };
    determinise(dual, &r.inner_complement()).inner_complement()
}

pub fn closed_repr(mode: ClosedMode, r: &MRel) -> Result<MRel> {
    let fused = determinise(DetMode::Fusion, r);
    match mode {
        ClosedMode::Down => fused.down(),
        ClosedMode::Up => fused.up(),
    }
}

/// Comparison of `R` with one map's image under `⊆`, `⊑↑`, `⊑↓` and `⊑↕`.
///
/// `post[i]` is `R ≤ δ(R)` and `pre[i]` is `δ(R) ≤ R` for the i-th order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixFlags {
    pub fixpoint: bool,
    pub post: [bool; 4],
    pub pre: [bool; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixpointReport {
    pub fusion: FixFlags,
    pub fission: FixFlags,
}

/// The orders in the index order of [`FixFlags`].
pub const FIX_ORDERS: [&str; 4] = ["subset", "smyth", "hoare", "egli-milner"];

fn leq(order: usize, r: &MRel, s: &MRel) -> Result<bool> {
    match order {
        0 => r.is_subset(s),
        1 => MRel::preorder(Preorder::Smyth, r, s),
        2 => MRel::preorder(Preorder::Hoare, r, s),
        _ => MRel::preorder(Preorder::EgliMilner, r, s),
    }
}

fn fix_flags(r: &MRel, image: &MRel) -> Result<FixFlags> {
    let mut flags = FixFlags { fixpoint: r == image, post: [false; 4], pre: [false; 4] };
    for i in 0..4 {
        flags.post[i] = leq(i, r, image)?;
        flags.pre[i] = leq(i, image, r)?;
    }
    Ok(flags)
}

pub fn fixpoint_class(r: &MRel) -> Result<FixpointReport> {
    Ok(FixpointReport {
        fusion: fix_flags(r, &determinise(DetMode::Fusion, r))?,
        fission: fix_flags(r, &determinise(DetMode::Fission, r))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrel::MRelConst;
    use crate::power::{alpha, eta, power_transpose};
    use crate::rel::Rel;
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

    fn all_rels(src: usize, dst: usize) -> Vec<Rel> {
        (0u64..1 << (src * dst))
            .map(|code| {
                Rel::from_pairs(src, dst, (0..src * dst).filter(|&i| code >> i & 1 == 1).map(|i| (i / dst, i % dst)))
                    .unwrap()
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

    fn fo(r: &MRel) -> MRel {
        determinise(DetMode::Fusion, r)
    }

    fn fi(r: &MRel) -> MRel {
        determinise(DetMode::Fission, r)
    }

    fn hoare(r: &MRel, s: &MRel) -> bool {
        MRel::preorder(Preorder::Hoare, r, s).unwrap()
    }

    #[test]
    fn examples() {
        let empty = MRel::empty(2, 2).unwrap();
        assert_eq!(fo(&empty), mrel(2, 2, &[(0, &[]), (1, &[])]));
        assert_eq!(fi(&mrel(2, 2, &[(0, &[0, 1])])), mrel(2, 2, &[(0, &[0]), (0, &[1])]));
        let r = mrel(1, 2, &[(0, &[0]), (0, &[0, 1])]);
        assert_eq!(determinise(DetMode::Cofusion, &r), mrel(1, 2, &[(0, &[0])]));
        // an empty row co-fuses to the whole carrier
        assert_eq!(determinise(DetMode::Cofusion, &empty), mrel(2, 2, &[(0, &[0, 1]), (1, &[0, 1])]));
        let split = mrel(1, 2, &[(0, &[0]), (0, &[1])]);
        assert_eq!(determinise(DetMode::Cofission, &split), split);
    }

    #[test]
    fn direct_and_compositional_duals_agree() {
        for r in all_mrels(2, 2) {
            for mode in [DetMode::Cofusion, DetMode::Cofission] {
                assert_eq!(determinise(mode, &r), determinise_dual(mode, &r));
            }
        }
    }

    #[test]
    fn fusion_is_lambda_alpha() {
        for r in all_mrels(2, 2) {
            assert_eq!(fo(&r), power_transpose(&alpha(&r)).unwrap());
            let e = eta(2).unwrap().to_rel().unwrap();
            assert_eq!(fi(&r), MRel::from_rel(&alpha(&r).compose(&e).unwrap(), 2).unwrap());
        }
    }

    #[test]
    fn closed_representations() {
        let atoms = MRel::constant(MRelConst::Atoms, 2, 2).unwrap();
        let coatoms = MRel::constant(MRelConst::Coatoms, 2, 2).unwrap();
        for r in all_mrels(2, 2) {
            let down = closed_repr(ClosedMode::Down, &r).unwrap();
            let up = closed_repr(ClosedMode::Up, &r).unwrap();
            assert_eq!(fo(&down), fo(&r));
            assert_eq!(fi(&r), down.intersection(&atoms).unwrap());
            assert_eq!(determinise(DetMode::Cofusion, &up), fo(&r));
            let cofusion = determinise(DetMode::Cofusion, &r);
            assert_eq!(determinise(DetMode::Cofission, &r), cofusion.up().unwrap().intersection(&coatoms).unwrap());
        }
    }

    #[test]
    fn cofission_is_not_the_up_closed_fusion_cut() {
        let r = mrel(1, 2, &[(0, &[0]), (0, &[1])]);
        let coatoms = MRel::constant(MRelConst::Coatoms, 1, 2).unwrap();
        let cut = closed_repr(ClosedMode::Up, &r).unwrap().intersection(&coatoms).unwrap();
        assert!(cut.is_empty());
        assert_eq!(determinise(DetMode::Cofission, &r), r);
    }

    #[test]
    fn explicit_formulas() {
        for y in 1..=3 {
            let atoms = MRel::constant(MRelConst::Atoms, 1, y).unwrap();
            for r in all_mrels(1, y) {
                assert_eq!(fi(&r), r.down().unwrap().intersection(&atoms).unwrap());
            }
        }
    }

    #[test]
    fn fixpoint_examples() {
        let e = fixpoint_class(&eta(2).unwrap()).unwrap();
        assert!(e.fusion.fixpoint && e.fission.fixpoint);
        let f = fixpoint_class(&mrel(1, 2, &[(0, &[0, 1])])).unwrap();
        assert!(f.fusion.fixpoint && !f.fission.fixpoint);
        let unit = fixpoint_class(&MRel::constant(MRelConst::InnerUnit, 2, 2).unwrap()).unwrap();
        assert!(unit.fusion.post[0]);
    }

    #[test]
    fn fixpoints_are_deterministic_classes() {
        for r in all_mrels(2, 2) {
            let flags = r.classify();
            let fix = fixpoint_class(&r).unwrap();
            assert_eq!(fix.fusion.fixpoint, flags.outer_deterministic);
            assert_eq!(fix.fission.fixpoint, flags.inner_deterministic);
            assert_eq!(fix.fusion.post[0], flags.outer_univalent);
            assert_eq!(fix.fusion.pre[1], flags.outer_univalent);
        }
    }

    #[test]
    fn galois_connections() {
        let rels = all_rels(2, 2);
        let all = all_mrels(2, 2);
        for r in &all {
            let a = alpha(r);
            for t in &rels {
                let lt = power_transpose(t).unwrap();
                assert_eq!(a.is_subset(t).unwrap(), hoare(r, &lt));
            }
            for s in &all {
                assert_eq!(hoare(&fi(r), s), hoare(r, &fo(s)));
            }
        }
    }

    #[test]
    fn idempotence_square() {
        for r in all_mrels(2, 2) {
            assert_eq!(fi(&fi(&r)), fi(&r));
            assert_eq!(fo(&fo(&r)), fo(&r));
            assert_eq!(fi(&fo(&r)), fi(&r));
            assert_eq!(fo(&fi(&r)), fo(&r));
            assert!(hoare(&r, &fo(&r)));
            assert!(hoare(&fi(&r), &r));
        }
    }

    #[test]
    fn nu_of_fusion_is_not_fusion() {
        let r = mrel(2, 2, &[(0, &[])]);
        assert!(fo(&r).nu().is_empty());
        assert_ne!(fo(&r).nu(), fo(&r));
    }

    proptest! {
        #[test]
        fn fission_has_no_terminal_part(r in arb_mrel(2, 3)) {
            prop_assert!(fi(&r).tau().is_empty());
        }

        #[test]
        fn fusion_results_are_deterministic(r in arb_mrel(3, 3)) {
            prop_assert!(fo(&r).classify().outer_deterministic);
            prop_assert!(fi(&r).classify().inner_deterministic);
            prop_assert!(determinise(DetMode::Cofusion, &r).classify().outer_deterministic);
        }
    }
}
