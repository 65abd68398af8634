//! Finite heterogeneous binary relations as packed bit matrices.
//!
//! A [`Rel`] of shape `src x dst` stores one row of `dst` bits per source
//! element. Rows are packed into `u64` words so the boolean operations and
//! composition run word-parallel. Bits past `dst` in the last word of a row
//! are always zero.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A finite carrier: elements are the indices `0..size`.
///
/// Display names are presentation-only and never influence semantics or
/// serialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    size: usize,
    names: Option<Vec<String>>,
}

impl Carrier {
    pub fn new(size: usize) -> Self {
        Carrier { size, names: None }
    }

    pub fn named<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut sorted = names.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("carrier names must be pairwise distinct".into()));
        }
        Ok(Carrier { size: names.len(), names: Some(names) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of element `i`: its name if present, else its index.
    pub fn label(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }
}

/// The three relational constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelConst {
    Identity,
    Empty,
    Universal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Inter,
    Complement,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualSide {
    /// `T / S`
    Left,
    /// `T \ S`
    Right,
}

/// Outer functional properties of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelFlags {
    pub univalent: bool,
    pub total: bool,
    pub deterministic: bool,
    pub test: bool,
}

/// A binary relation between carriers of sizes `src` and `dst`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rel {
    src: usize,
    dst: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Rel {
    pub fn empty(src: usize, dst: usize) -> Rel {
        let words = words_for(dst);
        Rel { src, dst, words, bits: vec![0; src * words] }
    }

    pub fn universal(src: usize, dst: usize) -> Rel {
        let mut r = Rel::empty(src, dst);
        for a in 0..src {
            r.fill_row(a);
        }
        r
    }

    pub fn identity(n: usize) -> Rel {
        let mut r = Rel::empty(n, n);
        for a in 0..n {
            r.insert(a, a);
        }
        r
    }

    pub fn constant(kind: RelConst, src: usize, dst: usize) -> Result<Rel> {
        match kind {
            RelConst::Identity if src != dst => Err(Error::IdentityShapeMismatch { src, dst }),
            RelConst::Identity => Ok(Rel::identity(src)),
            RelConst::Empty => Ok(Rel::empty(src, dst)),
            RelConst::Universal => Ok(Rel::universal(src, dst)),
        }
    }

    pub fn from_pairs<I>(src: usize, dst: usize, pairs: I) -> Result<Rel>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Rel::empty(src, dst);
        for (a, b) in pairs {
            if a >= src || b >= dst {
                return Err(Error::Invalid(format!("pair ({a},{b}) outside {src}x{dst}")));
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Builds a relation from per-row column lists.
    pub fn from_rows<I, R>(dst: usize, rows: I) -> Result<Rel>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        let src = rows.len();
        Rel::from_pairs(src, dst, rows.iter().enumerate().flat_map(|(a, row)| row.iter().map(move |&b| (a, b))))
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

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.src && b < self.dst && self.bits[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.src && b < self.dst, "pair ({a},{b}) outside {}x{}", self.src, self.dst);
        self.bits[a * self.words + b / WORD] |= 1 << (b % WORD);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        if a < self.src && b < self.dst {
            self.bits[a * self.words + b / WORD] &= !(1 << (b % WORD));
        }
    }

    fn fill_row(&mut self, a: usize) {
        let row = &mut self.bits[a * self.words..(a + 1) * self.words];
        row.fill(!0);
        let tail = self.dst % WORD;
        if tail != 0 {
            if let Some(last) = row.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
    }

    /// Packed words of row `a`.
    pub fn row_words(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    fn row_words_mut(&mut self, a: usize) -> &mut [u64] {
        &mut self.bits[a * self.words..(a + 1) * self.words]
    }

    /// Columns related to `a`, ascending.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(a).iter().enumerate().flat_map(|(w, &word)| BitIter(word).map(move |i| w * WORD + i))
    }

    pub fn row_len(&self, a: usize) -> usize {
        self.row_words(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.src).flat_map(move |a| self.row(a).map(move |b| (a, b)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn check_same(&self, other: &Rel, op: &'static str) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::shape(op, self.shape(), other.shape()))
        }
    }

    fn zip_with(&self, other: &Rel, op: &'static str, f: impl Fn(u64, u64) -> u64) -> Result<Rel> {
        self.check_same(other, op)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&x, &y)| f(x, y)).collect();
        Ok(Rel { bits, ..*self.header() })
    }

    fn header(&self) -> &Rel {
        self
    }

    pub fn union(&self, other: &Rel) -> Result<Rel> {
        self.zip_with(other, "union", |x, y| x | y)
    }

    pub fn intersection(&self, other: &Rel) -> Result<Rel> {
        self.zip_with(other, "intersection", |x, y| x & y)
    }

    pub fn minus(&self, other: &Rel) -> Result<Rel> {
        self.zip_with(other, "minus", |x, y| x & !y)
    }

    pub fn complement(&self) -> Rel {
        let mut full = Rel::universal(self.src, self.dst);
        for (w, &x) in full.bits.iter_mut().zip(&self.bits) {
            *w &= !x;
        }
        full
    }

    /// Pointwise boolean combination; `complement` ignores `other`.
    pub fn boolean(op: BoolOp, r: &Rel, other: Option<&Rel>) -> Result<Rel> {
        let need = || other.ok_or_else(|| Error::Invalid(format!("{op:?} needs two operands")));
        match op {
            BoolOp::Complement => Ok(r.complement()),
            BoolOp::Union => r.union(need()?),
            BoolOp::Inter => r.intersection(need()?),
            BoolOp::Minus => r.minus(need()?),
        }
    }

    pub fn is_subset(&self, other: &Rel) -> Result<bool> {
        self.check_same(other, "inclusion")?;
        Ok(self.bits.iter().zip(&other.bits).all(|(&x, &y)| x & !y == 0))
    }

    /// Relational composition `self ; other`.
    pub fn compose(&self, other: &Rel) -> Result<Rel> {
        if self.dst != other.src {
            return Err(Error::shape("compose", self.shape(), other.shape()));
        }
        let mut out = Rel::empty(self.src, other.dst);
        for a in 0..self.src {
            for b in self.row(a) {
                let src_row = other.row_words(b);
                for (o, &w) in out.row_words_mut(a).iter_mut().zip(src_row) {
                    *o |= w;
                }
            }
        }
        Ok(out)
    }

    pub fn converse(&self) -> Rel {
        let mut out = Rel::empty(self.dst, self.src);
        for (a, b) in self.pairs() {
            out.insert(b, a);
        }
        out
    }

    /// `T / S = -(-T S˘)` for `T: X↔Y`, `S: Z↔Y`; the result is `X↔Z`.
    pub fn left_residual(t: &Rel, s: &Rel) -> Result<Rel> {
        if t.dst != s.dst {
            return Err(Error::shape("left residual", t.shape(), s.shape()));
        }
        Ok(t.complement().compose(&s.converse())?.complement())
    }

    /// `T \ S = -(T˘ (-S))` for `T: Z↔X`, `S: Z↔Y`; the result is `X↔Y`.
    pub fn right_residual(t: &Rel, s: &Rel) -> Result<Rel> {
        if t.src != s.src {
            return Err(Error::shape("right residual", t.shape(), s.shape()));
        }
        Ok(t.converse().compose(&s.complement())?.complement())
    }

    pub fn residual(side: ResidualSide, t: &Rel, s: &Rel) -> Result<Rel> {
        match side {
            ResidualSide::Left => Rel::left_residual(t, s),
            ResidualSide::Right => Rel::right_residual(t, s),
        }
    }

    /// Symmetric quotient of `T: Z↔X` and `S: Z↔Y`, a relation `X↔Y`.
    ///
    /// `(x, y)` is present iff column `x` of `T` equals column `y` of `S`.
    pub fn syq(t: &Rel, s: &Rel) -> Result<Rel> {
        if t.src != s.src {
            return Err(Error::shape("syq", t.shape(), s.shape()));
        }
        let tc = t.converse();
        let sc = s.converse();
        let mut out = Rel::empty(t.dst, s.dst);
        for x in 0..t.dst {
            let col = tc.row_words(x);
            for y in 0..s.dst {
                if sc.row_words(y) == col {
                    out.insert(x, y);
                }
            }
        }
        Ok(out)
    }

    /// `Id ∩ R R˘`: the test on the elements related to something.
    pub fn domain(&self) -> Rel {
        let mut out = Rel::empty(self.src, self.src);
        for a in 0..self.src {
            if self.row_words(a).iter().any(|&w| w != 0) {
                out.insert(a, a);
            }
        }
        out
    }

    pub fn is_univalent(&self) -> bool {
        (0..self.src).all(|a| self.row_len(a) <= 1)
    }

    pub fn is_total(&self) -> bool {
        (0..self.src).all(|a| self.row_words(a).iter().any(|&w| w != 0))
    }

    pub fn is_test(&self) -> bool {
        self.src == self.dst && self.pairs().all(|(a, b)| a == b)
    }

    pub fn classify(&self) -> RelFlags {
        let univalent = self.is_univalent();
        let total = self.is_total();
        RelFlags { univalent, total, deterministic: univalent && total, test: self.is_test() }
    }

    /// The univalent parts of `self` with the same domain, in lexicographic
    /// order of the per-row choice. Their union is `self`.
    pub fn d_subrelations(&self) -> Result<impl Iterator<Item = Rel> + '_> {
        let rows: Vec<Vec<usize>> = (0..self.src).map(|a| self.row(a).collect()).collect();
        let choices = crate::peleg::Choices::new(rows.iter().map(Vec::len).collect(), "d-subrelations of a relation")?;
        Ok(choices.map(move |sel| {
            let mut out = Rel::empty(self.src, self.dst);
            for (a, pick) in sel.iter().enumerate() {
                if let Some(i) = pick {
                    out.insert(a, rows[a][*i]);
                }
            }
            out
        }))
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel[{}x{}]{}", self.src, self.dst, self)
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("}")
    }
}

/// Iterates the set bit positions of a word, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(src: usize, dst: usize, pairs: &[(usize, usize)]) -> Rel {
        Rel::from_pairs(src, dst, pairs.iter().copied()).unwrap()
    }

    /// Brute-force `∃b. R(a,b) ∧ S(b,c)`.
    fn compose_oracle(r: &Rel, s: &Rel) -> Rel {
        let mut out = Rel::empty(r.src(), s.dst());
        for a in 0..r.src() {
            for c in 0..s.dst() {
                if (0..r.dst()).any(|b| r.contains(a, b) && s.contains(b, c)) {
                    out.insert(a, c);
                }
            }
        }
        out
    }

    fn arb_rel(src: usize, dst: usize) -> impl Strategy<Value = Rel> {
        proptest::collection::vec(any::<bool>(), src * dst).prop_map(move |bits| {
            Rel::from_pairs(src, dst, (0..src * dst).filter(|&i| bits[i]).map(|i| (i / dst, i % dst))).unwrap()
        })
    }

    fn all_rels(src: usize, dst: usize) -> impl Iterator<Item = Rel> {
        (0u64..1 << (src * dst)).map(move |code| {
            Rel::from_pairs(src, dst, (0..src * dst).filter(|&i| code >> i & 1 == 1).map(|i| (i / dst, i % dst)))
                .unwrap()
        })
    }

    #[test]
    fn constants() {
        assert_eq!(Rel::constant(RelConst::Identity, 2, 2).unwrap(), rel(2, 2, &[(0, 0), (1, 1)]));
        assert_eq!(Rel::constant(RelConst::Empty, 1, 3).unwrap(), rel(1, 3, &[]));
        assert_eq!(Rel::constant(RelConst::Universal, 1, 2).unwrap(), rel(1, 2, &[(0, 0), (0, 1)]));
        assert_eq!(Rel::constant(RelConst::Identity, 1, 2), Err(Error::IdentityShapeMismatch { src: 1, dst: 2 }));
    }

    #[test]
    fn boolean_ops() {
        assert_eq!(Rel::empty(2, 3).complement(), Rel::universal(2, 3));
        let u = Rel::universal(2, 2);
        assert_eq!(u.minus(&u).unwrap(), Rel::empty(2, 2));
        let r = rel(1, 2, &[(0, 0)]);
        let s = rel(1, 2, &[(0, 1)]);
        assert_eq!(Rel::boolean(BoolOp::Union, &r, Some(&s)).unwrap(), rel(1, 2, &[(0, 0), (0, 1)]));
        assert!(matches!(r.union(&Rel::empty(2, 2)), Err(Error::ShapeMismatch { .. })));
        // complement clears the padding bits of wide rows
        let wide = Rel::empty(1, 70).complement();
        assert_eq!(wide.len(), 70);
        assert_eq!(wide.complement(), Rel::empty(1, 70));
    }

    #[test]
    fn composition() {
        let r = rel(2, 2, &[(0, 1)]);
        assert_eq!(Rel::identity(2).compose(&r).unwrap(), r);
        assert_eq!(r.compose(&rel(2, 2, &[(1, 0)])).unwrap(), rel(2, 2, &[(0, 0)]));
        assert!(r.compose(&Rel::empty(3, 1)).is_err());
    }

    #[test]
    fn converse() {
        assert_eq!(rel(2, 2, &[(0, 1)]).converse(), rel(2, 2, &[(1, 0)]));
        assert_eq!(Rel::identity(3).converse(), Rel::identity(3));
    }

    #[test]
    fn residual_of_top_is_top() {
        for s in all_rels(2, 2) {
            assert_eq!(Rel::left_residual(&Rel::universal(2, 2), &s).unwrap(), Rel::universal(2, 2));
        }
    }

    #[test]
    fn domain_examples() {
        assert_eq!(Rel::empty(2, 2).domain(), Rel::empty(2, 2));
        assert_eq!(Rel::universal(2, 3).domain(), Rel::identity(2));
        assert_eq!(rel(2, 2, &[(0, 1)]).domain(), rel(2, 2, &[(0, 0)]));
    }

    #[test]
    fn classification() {
        let id = Rel::identity(2).classify();
        assert!(id.univalent && id.total && id.deterministic && id.test);
        let f = rel(1, 2, &[(0, 0), (0, 1)]).classify();
        assert!(f.total && !f.univalent);
        let e = Rel::empty(1, 1).classify();
        assert!(e.univalent && !e.total);
    }

    #[test]
    fn syq_matches_formula() {
        for t in all_rels(2, 2) {
            for s in all_rels(2, 2) {
                let direct = Rel::syq(&t, &s).unwrap();
                let formula = Rel::right_residual(&t, &s)
                    .unwrap()
                    .intersection(&Rel::left_residual(&t.converse(), &s.converse()).unwrap())
                    .unwrap();
                assert_eq!(direct, formula);
            }
        }
    }

    #[test]
    fn residuation_exhaustive_small() {
        // R: X↔Y, S: Y↔Z, T: X↔Z with all sizes 2
        let all: Vec<Rel> = all_rels(2, 2).collect();
        for r in &all {
            for s in &all {
                let rs = r.compose(s).unwrap();
                for t in &all {
                    let lhs = rs.is_subset(t).unwrap();
                    assert_eq!(lhs, r.is_subset(&Rel::left_residual(t, s).unwrap()).unwrap());
                    assert_eq!(lhs, s.is_subset(&Rel::right_residual(r, t).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn modular_law_exhaustive() {
        let all: Vec<Rel> = all_rels(2, 2).collect();
        for r in &all {
            for s in &all {
                for t in &all {
                    let lhs = r.compose(s).unwrap().intersection(t).unwrap();
                    let rhs = r.intersection(&t.compose(&s.converse()).unwrap()).unwrap().compose(s).unwrap();
                    assert!(lhs.is_subset(&rhs).unwrap());
                }
            }
        }
    }

    #[test]
    fn univalent_exchange() {
        let all: Vec<Rel> = all_rels(2, 2).collect();
        for p in &all {
            for q in all.iter().filter(|q| q.is_univalent()) {
                for s in &all {
                    let lhs = p.compose(q).unwrap().intersection(s).unwrap();
                    let rhs = p.intersection(&s.compose(&q.converse()).unwrap()).unwrap().compose(q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn decomposition_into_d_subrelations() {
        for r in all_rels(2, 2) {
            let mut acc = Rel::empty(2, 2);
            for s in r.d_subrelations().unwrap() {
                assert!(s.is_univalent());
                assert_eq!(s.domain(), r.domain());
                assert!(s.is_subset(&r).unwrap());
                acc = acc.union(&s).unwrap();
            }
            assert_eq!(acc, r);
        }
    }

    proptest! {
        #[test]
        fn compose_matches_triple_loop(r in arb_rel(3, 3), s in arb_rel(3, 3)) {
            prop_assert_eq!(r.compose(&s).unwrap(), compose_oracle(&r, &s));
        }

        #[test]
        fn converse_reverses_composition(r in arb_rel(2, 2), s in arb_rel(2, 2)) {
            prop_assert_eq!(r.compose(&s).unwrap().converse(), s.converse().compose(&r.converse()).unwrap());
        }

        #[test]
        fn right_residual_via_converse(t in arb_rel(3, 2), s in arb_rel(3, 3)) {
            let lhs = Rel::right_residual(&t, &s).unwrap();
            let rhs = Rel::left_residual(&s.converse(), &t.converse()).unwrap().converse();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn residuation_sampled(r in arb_rel(3, 3), s in arb_rel(3, 3), t in arb_rel(3, 3)) {
            let lhs = r.compose(&s).unwrap().is_subset(&t).unwrap();
            prop_assert_eq!(lhs, r.is_subset(&Rel::left_residual(&t, &s).unwrap()).unwrap());
            prop_assert_eq!(lhs, s.is_subset(&Rel::right_residual(&r, &t).unwrap()).unwrap());
        }
    }
}
