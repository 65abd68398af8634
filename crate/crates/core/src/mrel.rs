//! Multirelations `X ↔ P Y` and their inner structure.
//!
//! Each source element owns a row: a strictly ascending list of subset
//! masks over the destination carrier. The representation is canonical, so
//! structural equality is set equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::power::{check_mask_width, pow_size, SubsetMask};
use crate::rel::Rel;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MRel {
    src: usize,
    dst: usize,
    rows: Vec<Vec<SubsetMask>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MRelConst {
    /// `1⋓ = {(a, ∅)}`
    InnerUnit,
    /// `1⋒ = {(a, Y)}`
    InnerCounit,
    /// `A⋓ = {(a, {b})}`
    Atoms,
    /// `A⋒ = {(a, Y − {b})}`
    Coatoms,
    Empty,
    Universal,
    /// `η = {(a, {a})}`, square only.
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerOp {
    Union,
    Inter,
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    Up,
    Down,
    Convex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preorder {
    /// `R ⊑↑ S ⇔ S ⊆ ↑R`
    Smyth,
    /// `R ⊑↓ S ⇔ R ⊆ ↓S`
    Hoare,
    /// Both of the above.
    EgliMilner,
    EqUp,
    EqDown,
    EqUpDown,
}

/// The nine structural properties of a multirelation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropertyFlags {
    pub outer_total: bool,
    pub outer_univalent: bool,
    pub outer_deterministic: bool,
    pub inner_total: bool,
    pub inner_univalent: bool,
    pub inner_deterministic: bool,
    pub up_closed: bool,
    pub down_closed: bool,
    pub union_closed: bool,
}

impl MRel {
    /// Builds a multirelation from unordered rows; duplicates are merged.
    pub fn new(src: usize, dst: usize, mut rows: Vec<Vec<SubsetMask>>) -> Result<MRel> {
        check_mask_width(dst)?;
        if rows.len() != src {
            return Err(Error::Invalid(format!("{} rows given for a source of size {src}", rows.len())));
        }
        let full = SubsetMask::full(dst);
        for row in &mut rows {
            if let Some(bad) = row.iter().find(|m| !m.is_subset_of(full)) {
                return Err(Error::Invalid(format!("subset {bad} outside a carrier of size {dst}")));
            }
            row.sort_unstable();
            row.dedup();
        }
        Ok(MRel { src, dst, rows })
    }

    pub fn empty(src: usize, dst: usize) -> Result<MRel> {
        MRel::new(src, dst, vec![Vec::new(); src])
    }

    pub fn from_pairs<I>(src: usize, dst: usize, pairs: I) -> Result<MRel>
    where
        I: IntoIterator<Item = (usize, SubsetMask)>,
    {
        let mut rows = vec![Vec::new(); src];
        for (a, m) in pairs {
            rows.get_mut(a)
                .ok_or_else(|| Error::Invalid(format!("source element {a} outside a carrier of size {src}")))?
                .push(m);
        }
        MRel::new(src, dst, rows)
    }

    /// Rebuilds with every row mapped; the shape is preserved.
    fn map_rows(&self, mut f: impl FnMut(usize, &[SubsetMask]) -> Vec<SubsetMask>) -> MRel {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let mut out = f(a, row);
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        MRel { src: self.src, dst: self.dst, rows }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.src, self.dst)
    }

    pub fn row(&self, a: usize) -> &[SubsetMask] {
        &self.rows[a]
    }

    pub fn rows(&self) -> &[Vec<SubsetMask>] {
        &self.rows
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, SubsetMask)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| row.iter().map(move |&m| (a, m)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn contains(&self, a: usize, m: SubsetMask) -> bool {
        self.rows.get(a).is_some_and(|row| row.binary_search(&m).is_ok())
    }

    fn full(&self) -> SubsetMask {
        SubsetMask::full(self.dst)
    }

    fn check_same(&self, other: &MRel, op: &'static str) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::shape(op, self.shape(), other.shape()))
        }
    }

    /// The relational view `X ↔ P Y` with `2^dst` columns.
    pub fn to_rel(&self) -> Result<Rel> {
        let cols = pow_size(self.dst)?;
        let mut out = Rel::empty(self.src, cols);
        for (a, m) in self.pairs() {
            out.insert(a, m.bits() as usize);
        }
        Ok(out)
    }

    /// Reads a relation `X ↔ P Y` whose columns index the subsets of a
    /// carrier of `width` elements.
    pub fn from_rel(rel: &Rel, width: usize) -> Result<MRel> {
        check_mask_width(width)?;
        if width >= usize::BITS as usize || rel.dst() != 1usize << width {
            return Err(Error::Invalid(format!(
                "a relation with {} columns is not a multirelation into a carrier of size {width}",
                rel.dst()
            )));
        }
        let rows = (0..rel.src()).map(|a| rel.row(a).map(|c| SubsetMask::new(c as u64)).collect()).collect();
        MRel::new(rel.src(), width, rows)
    }

    pub fn constant(kind: MRelConst, src: usize, dst: usize) -> Result<MRel> {
        check_mask_width(dst)?;
        let full = SubsetMask::full(dst);
        let row: Vec<SubsetMask> = match kind {
            MRelConst::InnerUnit => vec![SubsetMask::EMPTY],
            MRelConst::InnerCounit => vec![full],
            MRelConst::Atoms => (0..dst).map(SubsetMask::singleton).collect(),
            MRelConst::Coatoms => (0..dst).map(|b| full.without(b)).collect(),
            MRelConst::Empty => Vec::new(),
            MRelConst::Universal => {
                pow_size(dst)?;
                full.subsets().collect()
            }
            MRelConst::Eta => {
                if src != dst {
                    return Err(Error::IdentityShapeMismatch { src, dst });
                }
                return crate::power::eta(src);
            }
        };
        MRel::new(src, dst, vec![row; src])
    }

    pub fn union(&self, other: &MRel) -> Result<MRel> {
        self.check_same(other, "union")?;
        Ok(self.map_rows(|a, row| row.iter().chain(&other.rows[a]).copied().collect()))
    }

    pub fn intersection(&self, other: &MRel) -> Result<MRel> {
        self.check_same(other, "intersection")?;
        Ok(self.map_rows(|a, row| row.iter().copied().filter(|&m| other.contains(a, m)).collect()))
    }

    pub fn minus(&self, other: &MRel) -> Result<MRel> {
        self.check_same(other, "minus")?;
        Ok(self.map_rows(|a, row| row.iter().copied().filter(|&m| !other.contains(a, m)).collect()))
    }

    /// Outer complement; every row ranges over all of `P Y`.
    pub fn complement(&self) -> Result<MRel> {
        pow_size(self.dst)?;
        let full = self.full();
        Ok(self.map_rows(|_, row| full.subsets().filter(|m| row.binary_search(m).is_err()).collect()))
    }

    pub fn is_subset(&self, other: &MRel) -> Result<bool> {
        self.check_same(other, "inclusion")?;
        Ok(self.pairs().all(|(a, m)| other.contains(a, m)))
    }

    /// `R ⋓ S = {(a, A ∪ B) | R(a, A) ∧ S(a, B)}`.
    pub fn inner_union(&self, other: &MRel) -> Result<MRel> {
        self.check_same(other, "inner union")?;
        Ok(self.map_rows(|a, row| row.iter().flat_map(|&x| other.rows[a].iter().map(move |&y| x.union(y))).collect()))
    }

    /// `R ⋒ S = {(a, A ∩ B) | R(a, A) ∧ S(a, B)}`.
    pub fn inner_intersection(&self, other: &MRel) -> Result<MRel> {
        self.check_same(other, "inner intersection")?;
        Ok(self.map_rows(|a, row| {
            row.iter().flat_map(|&x| other.rows[a].iter().map(move |&y| x.intersection(y))).collect()
        }))
    }

    /// `∁R = {(a, Y − A) | R(a, A)}`.
    pub fn inner_complement(&self) -> MRel {
        let dst = self.dst;
        self.map_rows(|_, row| row.iter().map(|m| m.complement(dst)).collect())
    }

    pub fn inner(op: InnerOp, r: &MRel, s: Option<&MRel>) -> Result<MRel> {
        let need = || s.ok_or_else(|| Error::Invalid(format!("inner {op:?} needs two operands")));
        match op {
            InnerOp::Complement => Ok(r.inner_complement()),
            InnerOp::Union => r.inner_union(need()?),
            InnerOp::Inter => r.inner_intersection(need()?),
        }
    }

    /// Inner union of a finite family; the empty family gives `1⋓`.
    pub fn inner_union_family(src: usize, dst: usize, family: &[MRel]) -> Result<MRel> {
        let mut acc = MRel::constant(MRelConst::InnerUnit, src, dst)?;
        for r in family {
            acc = acc.inner_union(r)?;
        }
        Ok(acc)
    }

    /// Marks of the masks of one row in a table indexed by mask.
    fn row_table(&self, a: usize) -> Vec<bool> {
        let mut table = vec![false; 1 << self.dst];
        for m in &self.rows[a] {
            table[m.bits() as usize] = true;
        }
        table
    }

    fn close_rows(&self, up: bool) -> Result<MRel> {
        let n = pow_size(self.dst)?;
        let dst = self.dst;
        Ok(self.map_rows(|a, _| {
            let mut table = self.row_table(a);
            // one pass per element suffices: each pass closes under adding (removing) that element
            for i in 0..dst {
                let bit = 1usize << i;
                for m in 0..n {
                    if table[m] && (m & bit == 0) == up {
                        table[m ^ bit] = true;
                    }
                }
            }
            (0..n).filter(|&m| table[m]).map(|m| SubsetMask::new(m as u64)).collect()
        }))
    }

    /// `↑R`, `↓R` or `⇕R = ↑R ∩ ↓R`.
    pub fn closure(&self, mode: ClosureMode) -> Result<MRel> {
        match mode {
            ClosureMode::Up => self.close_rows(true),
            ClosureMode::Down => self.close_rows(false),
            ClosureMode::Convex => self.close_rows(true)?.intersection(&self.close_rows(false)?),
        }
    }

    pub fn up(&self) -> Result<MRel> {
        self.closure(ClosureMode::Up)
    }

    pub fn down(&self) -> Result<MRel> {
        self.closure(ClosureMode::Down)
    }

    pub fn convex(&self) -> Result<MRel> {
        self.closure(ClosureMode::Convex)
    }

    /// `S ⊆ ↑R`, decided without building the closure.
    fn below_smyth(r: &MRel, s: &MRel) -> bool {
        s.pairs().all(|(a, b)| r.rows[a].iter().any(|x| x.is_subset_of(b)))
    }

    /// `R ⊆ ↓S`.
    fn below_hoare(r: &MRel, s: &MRel) -> bool {
        r.pairs().all(|(a, x)| s.rows[a].iter().any(|b| x.is_subset_of(*b)))
    }

    pub fn preorder(mode: Preorder, r: &MRel, s: &MRel) -> Result<bool> {
        r.check_same(s, "preorder")?;
        let up = |r, s| MRel::below_smyth(r, s);
        let down = |r, s| MRel::below_hoare(r, s);
        Ok(match mode {
            Preorder::Smyth => up(r, s),
            Preorder::Hoare => down(r, s),
            Preorder::EgliMilner => up(r, s) && down(r, s),
            Preorder::EqUp => up(r, s) && up(s, r),
            Preorder::EqDown => down(r, s) && down(s, r),
            Preorder::EqUpDown => up(r, s) && up(s, r) && down(r, s) && down(s, r),
        })
    }

    pub fn is_outer_total(&self) -> bool {
        self.rows.iter().all(|row| !row.is_empty())
    }

    pub fn is_outer_univalent(&self) -> bool {
        self.rows.iter().all(|row| row.len() <= 1)
    }

    pub fn is_inner_total(&self) -> bool {
        self.pairs().all(|(_, m)| !m.is_empty())
    }

    pub fn is_inner_univalent(&self) -> bool {
        self.pairs().all(|(_, m)| m.len() <= 1)
    }

    pub fn is_up_closed(&self) -> bool {
        let dst = self.dst;
        self.pairs().all(|(a, m)| (0..dst).all(|i| m.contains(i) || self.contains(a, m.with(i))))
    }

    pub fn is_down_closed(&self) -> bool {
        self.pairs().all(|(a, m)| m.elems().all(|i| self.contains(a, m.without(i))))
    }

    /// Every row is closed under binary unions of its members.
    pub fn is_union_closed(&self) -> bool {
        self.rows.iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(i, x)| row[i + 1..].iter().all(|y| self.contains(a, x.union(*y))))
        })
    }

    pub fn classify(&self) -> PropertyFlags {
        let outer_total = self.is_outer_total();
        let outer_univalent = self.is_outer_univalent();
        let inner_total = self.is_inner_total();
        let inner_univalent = self.is_inner_univalent();
        PropertyFlags {
            outer_total,
            outer_univalent,
            outer_deterministic: outer_total && outer_univalent,
            inner_total,
            inner_univalent,
            inner_deterministic: inner_total && inner_univalent,
            up_closed: self.is_up_closed(),
            down_closed: self.is_down_closed(),
            union_closed: self.is_union_closed(),
        }
    }

    /// `(ν(R), τ(R))`: the pairs with a non-empty and with the empty set.
    pub fn split_terminal(&self) -> (MRel, MRel) {
        (self.nu(), self.tau())
    }

    /// `ν(R) = R − 1⋓`
    pub fn nu(&self) -> MRel {
        self.map_rows(|_, row| row.iter().copied().filter(|m| !m.is_empty()).collect())
    }

    /// `τ(R) = R ∩ 1⋓`
    pub fn tau(&self) -> MRel {
        self.map_rows(|_, row| row.iter().copied().filter(|m| m.is_empty()).collect())
    }

    /// `∂R = −∁R`
    pub fn inner_dual(&self) -> Result<MRel> {
        self.inner_complement().complement()
    }
}

impl fmt::Debug for MRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MRel[{}x{}]{}", self.src, self.dst, self)
    }
}

impl fmt::Display for MRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, m)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{m})")?;
        }
        f.write_str("}")
    }
}
