//! Subset masks, powerset carriers and the power structure: membership,
//! power transpose, α, the relational image functor and the monad
//! constants η, μ together with Ω (inclusion) and C (complementation).
//!
//! A powerset `P Y` is materialized in numeric mask order: subset `A`
//! has index `A.bits()`.

use std::fmt;

use crate::error::{Error, Result};
use crate::mrel::MRel;
use crate::rel::{BitIter, Rel};
use crate::{MASK_CAP, POW_CAP};

/// One subset of a carrier of at most [`MASK_CAP`] elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn new(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MASK_CAP);
        SubsetMask(1 << i)
    }

    /// The whole carrier of the given width.
    pub fn full(width: usize) -> Self {
        debug_assert!(width <= MASK_CAP);
        SubsetMask((1u64 << width) - 1)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        SubsetMask(elems.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, width: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(width).0)
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn elems(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    /// All subsets of `self`, in ascending numeric order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(SubsetMask(cur))
        })
    }

    /// All supersets of `self` within the carrier of the given width.
    pub fn supersets(self, width: usize) -> impl Iterator<Item = SubsetMask> {
        let base = self.0;
        self.complement(width).subsets().map(move |extra| SubsetMask(base | extra.0))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Fails unless a carrier of `width` elements fits a subset mask.
pub fn check_mask_width(width: usize) -> Result<()> {
    if width > MASK_CAP {
        Err(Error::MaskTooWide { width, cap: MASK_CAP })
    } else {
        Ok(())
    }
}

/// Size `2^base` of a materializable powerset.
pub fn pow_size(base: usize) -> Result<usize> {
    if base > POW_CAP {
        Err(Error::PowersetTooLarge { size: base, cap: POW_CAP })
    } else {
        Ok(1 << base)
    }
}

/// The powerset of a base carrier, enumerated in numeric mask order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowCarrier {
    base: usize,
}

impl PowCarrier {
    pub fn new(base: usize) -> Result<Self> {
        pow_size(base)?;
        Ok(PowCarrier { base })
    }

    pub fn base(self) -> usize {
        self.base
    }

    pub fn size(self) -> usize {
        1 << self.base
    }

    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        (0..1u64 << self.base).map(SubsetMask)
    }
}

/// `∈_Y : Y ↔ P Y`.
pub fn member_rel(y: usize) -> Result<Rel> {
    let n = pow_size(y)?;
    let mut out = Rel::empty(y, n);
    for m in 0..n {
        for b in SubsetMask(m as u64).elems() {
            out.insert(b, m);
        }
    }
    Ok(out)
}

/// `Λ(R) = {(a, R(a))}`, an outer deterministic multirelation.
pub fn power_transpose(r: &Rel) -> Result<MRel> {
    check_mask_width(r.dst())?;
    let rows = (0..r.src()).map(|a| vec![row_mask(r, a)]).collect();
    MRel::new(r.src(), r.dst(), rows)
}

/// Row `a` of a relation with at most 64 columns, as a mask.
pub(crate) fn row_mask(r: &Rel, a: usize) -> SubsetMask {
    SubsetMask(r.row_words(a).first().copied().unwrap_or(0))
}

/// `α(M) = {(a, b) | b ∈ ⋃ M(a)}`.
pub fn alpha(m: &MRel) -> Rel {
    let mut out = Rel::empty(m.src(), m.dst());
    for a in 0..m.src() {
        let u = m.row(a).iter().fold(SubsetMask::EMPTY, |acc, &x| acc.union(x));
        for b in u.elems() {
            out.insert(a, b);
        }
    }
    out
}

/// `P(R) = {(A, R(A))}` as a multirelation `P X ↔ P Y`.
pub fn image_functor_mrel(r: &Rel) -> Result<MRel> {
    let n = pow_size(r.src())?;
    check_mask_width(r.dst())?;
    let images: Vec<SubsetMask> = (0..r.src()).map(|a| row_mask(r, a)).collect();
    let rows = (0..n as u64)
        .map(|a| {
            let img = SubsetMask(a).elems().fold(SubsetMask::EMPTY, |acc, x| acc.union(images[x]));
            vec![img]
        })
        .collect();
    MRel::new(n, r.dst(), rows)
}

/// `P(R) : P X ↔ P Y`, a deterministic relation.
pub fn image_functor(r: &Rel) -> Result<Rel> {
    image_functor_mrel(r)?.to_rel()
}

/// `η_X = {(a, {a})}`.
pub fn eta(x: usize) -> Result<MRel> {
    check_mask_width(x)?;
    MRel::new(x, x, (0..x).map(|a| vec![SubsetMask::singleton(a)]).collect())
}

/// `μ_X : P P X ↔ P X` as a multirelation; row `F` holds `⋃ F`.
pub fn mu_mrel(x: usize) -> Result<MRel> {
    let px = pow_size(x)?;
    let ppx = pow_size(px)?;
    let rows = (0..ppx as u64)
        .map(|f| vec![SubsetMask(f).elems().fold(SubsetMask::EMPTY, |acc, a| acc.union(SubsetMask(a as u64)))])
        .collect();
    MRel::new(ppx, x, rows)
}

/// `Ω_X : P X ↔ P X` as a multirelation; row `A` holds the supersets of `A`.
pub fn omega_mrel(x: usize) -> Result<MRel> {
    let px = pow_size(x)?;
    let rows = (0..px as u64).map(|a| SubsetMask(a).supersets(x).collect()).collect();
    MRel::new(px, x, rows)
}

/// `C_X : P X ↔ P X` as a multirelation; row `A` holds `X − A`.
pub fn ccomp_mrel(x: usize) -> Result<MRel> {
    let px = pow_size(x)?;
    let rows = (0..px as u64).map(|a| vec![SubsetMask(a).complement(x)]).collect();
    MRel::new(px, x, rows)
}

/// `∈_X : X ↔ P X` as a multirelation; row `a` holds the subsets containing `a`.
pub fn member_mrel(x: usize) -> Result<MRel> {
    pow_size(x)?;
    let rows = (0..x).map(|a| SubsetMask::singleton(a).supersets(x).collect()).collect();
    MRel::new(x, x, rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonadConst {
    Eta,
    Mu,
    Omega,
    Ccomp,
}

/// A power constant: η is a multirelation, the others relations over powersets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerConst {
    MRel(MRel),
    Rel(Rel),
}

pub fn monad_const(kind: MonadConst, x: usize) -> Result<PowerConst> {
    Ok(match kind {
        MonadConst::Eta => PowerConst::MRel(eta(x)?),
        MonadConst::Mu => PowerConst::Rel(mu_mrel(x)?.to_rel()?),
        MonadConst::Omega => PowerConst::Rel(omega_mrel(x)?.to_rel()?),
        MonadConst::Ccomp => PowerConst::Rel(ccomp_mrel(x)?.to_rel()?),
    })
}
