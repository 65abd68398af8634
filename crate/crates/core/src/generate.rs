//! Exhaustive and seeded random instance generation.
//!
//! An instance space is a product of per-row spaces. A row draws from a
//! list of allowed items (columns of a relation, masks of a multirelation)
//! under a cardinality constraint, so the outer and inner univalence,
//! totality and determinism classes are generated constructively. The
//! closure classes are filtered by rejection.
//!
//! Exhaustive order is numeric encoding order: row 0 is the least
//! significant digit, and for unconstrained rows instance `i` contains pair
//! `(a, item j)` iff bit `a·k + j` of `i` is set.
//!
//! Random instance `i` of a stream with seed `s` is drawn from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`, so every instance
//! is reproducible on its own, independently of how a run is split.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mrel::MRel;
use crate::power::{pow_size, SubsetMask};
use crate::rel::Rel;

/// Largest exhaustive enumeration [`enumerate`] accepts.
pub const EXHAUSTIVE_CAP: u128 = 1 << 24;

/// Draws per random instance before a rejection-filtered slot gives up.
pub const MAX_TRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Rel,
    MRel,
}

/// A structural class an instance is required to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    OuterUnivalent,
    OuterTotal,
    OuterDeterministic,
    InnerUnivalent,
    InnerTotal,
    InnerDeterministic,
    UpClosed,
    DownClosed,
    UnionClosed,
    /// `R ⊆ Id`; relations only.
    Test,
}

impl Class {
    pub const ALL: [Class; 10] = [
        Class::OuterUnivalent,
        Class::OuterTotal,
        Class::OuterDeterministic,
        Class::InnerUnivalent,
        Class::InnerTotal,
        Class::InnerDeterministic,
        Class::UpClosed,
        Class::DownClosed,
        Class::UnionClosed,
        Class::Test,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::OuterUnivalent => "outer_univalent",
            Class::OuterTotal => "outer_total",
            Class::OuterDeterministic => "outer_deterministic",
            Class::InnerUnivalent => "inner_univalent",
            Class::InnerTotal => "inner_total",
            Class::InnerDeterministic => "inner_deterministic",
            Class::UpClosed => "up_closed",
            Class::DownClosed => "down_closed",
            Class::UnionClosed => "union_closed",
            Class::Test => "test",
        }
    }

    pub fn from_name(name: &str) -> Option<Class> {
        Class::ALL.into_iter().find(|c| c.name() == name)
    }

    fn applies_to(self, kind: Kind) -> bool {
        match self {
            Class::OuterUnivalent | Class::OuterTotal | Class::OuterDeterministic => true,
            Class::Test => kind == Kind::Rel,
            _ => kind == Kind::MRel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Rel(Rel),
    MRel(MRel),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Rel(_) => Kind::Rel,
            Instance::MRel(_) => Kind::MRel,
        }
    }

    pub fn satisfies(&self, class: Class) -> bool {
        match self {
            Instance::Rel(r) => {
                let f = r.classify();
                match class {
                    Class::OuterUnivalent => f.univalent,
                    Class::OuterTotal => f.total,
                    Class::OuterDeterministic => f.deterministic,
                    Class::Test => f.test,
                    _ => false,
                }
            }
            Instance::MRel(m) => match class {
                Class::OuterUnivalent => m.is_outer_univalent(),
                Class::OuterTotal => m.is_outer_total(),
                Class::OuterDeterministic => m.is_outer_univalent() && m.is_outer_total(),
                Class::InnerUnivalent => m.is_inner_univalent(),
                Class::InnerTotal => m.is_inner_total(),
                Class::InnerDeterministic => m.is_inner_univalent() && m.is_inner_total(),
                Class::UpClosed => m.is_up_closed(),
                Class::DownClosed => m.is_down_closed(),
                Class::UnionClosed => m.is_union_closed(),
                Class::Test => false,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenMode {
    Exhaustive,
    Random { count: usize, density: f64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub src: usize,
    pub dst: usize,
    pub mode: GenMode,
    pub filter: Vec<Class>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Card {
    Any,
    AtMostOne,
    AtLeastOne,
    ExactlyOne,
}

/// A random-access instance space of one kind and shape.
#[derive(Debug, Clone)]
pub struct Space {
    kind: Kind,
    src: usize,
    dst: usize,
    items: Vec<Vec<u64>>,
    card: Card,
    rejection: Vec<Class>,
    len: Option<u128>,
}

impl Space {
    pub fn new(kind: Kind, src: usize, dst: usize, filter: &[Class]) -> Result<Space> {
        if let Some(c) = filter.iter().find(|c| !c.applies_to(kind)) {
            return Err(Error::Invalid(format!("class {} does not apply to {kind:?}", c.name())));
        }
        let has = |c: Class| filter.contains(&c);
        let items: Vec<Vec<u64>> = match kind {
            Kind::Rel => {
                if has(Class::Test) && src != dst {
                    return Err(Error::IdentityShapeMismatch { src, dst });
                }
                (0..src).map(|a| if has(Class::Test) { vec![a as u64] } else { (0..dst as u64).collect() }).collect()
            }
            Kind::MRel => {
                let n = pow_size(dst)? as u64;
                let univalent = has(Class::InnerUnivalent) || has(Class::InnerDeterministic);
                let total = has(Class::InnerTotal) || has(Class::InnerDeterministic);
                let row: Vec<u64> =
                    (0..n).filter(|&m| !(univalent && m.count_ones() > 1) && !(total && m == 0)).collect();
                vec![row; src]
            }
        };
        let univalent = has(Class::OuterUnivalent) || has(Class::OuterDeterministic);
        let total = has(Class::OuterTotal) || has(Class::OuterDeterministic);
        let card = match (univalent, total) {
            (false, false) => Card::Any,
            (true, false) => Card::AtMostOne,
            (false, true) => Card::AtLeastOne,
            (true, true) => Card::ExactlyOne,
        };
        let rejection = filter
            .iter()
            .copied()
            .filter(|c| matches!(c, Class::UpClosed | Class::DownClosed | Class::UnionClosed))
            .collect();
        let mut len: Option<u128> = Some(1);
        for row in &items {
            len = len.and_then(|l| l.checked_mul(Space::row_count(card, row.len())?));
        }
        Ok(Space { kind, src, dst, items, card, rejection, len })
    }

    fn row_count(card: Card, k: usize) -> Option<u128> {
        match card {
            Card::Any => 1u128.checked_shl(k as u32).filter(|_| k < 128),
            Card::AtMostOne => Some(k as u128 + 1),
            Card::AtLeastOne => 1u128.checked_shl(k as u32).filter(|_| k < 128).map(|n| n - 1),
            Card::ExactlyOne => Some(k as u128),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.src, self.dst)
    }

    /// Size of the constructive space before rejection; `None` past `u128`.
    pub fn len(&self) -> Option<u128> {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == Some(0)
    }

    /// True when some class is only enforced by rejection.
    pub fn has_rejection(&self) -> bool {
        !self.rejection.is_empty()
    }

    pub fn accepts(&self, inst: &Instance) -> bool {
        self.rejection.iter().all(|&c| inst.satisfies(c))
    }

    fn build(&self, rows: Vec<Vec<u64>>) -> Instance {
        match self.kind {
            Kind::Rel => Instance::Rel(
                Rel::from_pairs(
                    self.src,
                    self.dst,
                    rows.iter().enumerate().flat_map(|(a, row)| row.iter().map(move |&b| (a, b as usize))),
                )
                .expect("generated pairs are in range"),
            ),
            Kind::MRel => Instance::MRel(
                MRel::new(
                    self.src,
                    self.dst,
                    rows.into_iter().map(|r| r.into_iter().map(SubsetMask::new).collect()).collect(),
                )
                .expect("generated masks are in range"),
            ),
        }
    }

    /// Instance `index` in numeric encoding order, before rejection.
    pub fn get(&self, mut index: u128) -> Instance {
        let len = self.len.expect("random access into an unbounded space");
        assert!(index < len, "index {index} outside a space of {len}");
        let mut rows = Vec::with_capacity(self.src);
        for items in &self.items {
            let radix = Space::row_count(self.card, items.len()).expect("bounded row");
            let digit = index % radix;
            index /= radix;
            let pick_bits = |bits: u128| -> Vec<u64> {
                items.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).map(|(_, &x)| x).collect()
            };
            rows.push(match self.card {
                Card::Any => pick_bits(digit),
                Card::AtLeastOne => pick_bits(digit + 1),
                Card::AtMostOne if digit == 0 => Vec::new(),
                Card::AtMostOne => vec![items[digit as usize - 1]],
                Card::ExactlyOne => vec![items[digit as usize]],
            });
        }
        self.build(rows)
    }

    /// One draw: every allowed item independently with probability
    /// `density`, then the cardinality constraint is repaired by a uniform
    /// choice. `None` when the constraint is unsatisfiable.
    fn draw(&self, rng: &mut impl Rng, density: f64) -> Option<Instance> {
        let mut rows = Vec::with_capacity(self.src);
        for items in &self.items {
            let k = items.len();
            let row = match self.card {
                Card::Any => items.iter().copied().filter(|_| rng.random_bool(density)).collect(),
                Card::AtMostOne => {
                    if k > 0 && rng.random_bool(density) {
                        vec![items[rng.random_range(0..k)]]
                    } else {
                        Vec::new()
                    }
                }
                Card::AtLeastOne => {
                    if k == 0 {
                        return None;
                    }
                    let row: Vec<u64> = items.iter().copied().filter(|_| rng.random_bool(density)).collect();
                    if row.is_empty() {
                        vec![items[rng.random_range(0..k)]]
                    } else {
                        row
                    }
                }
                Card::ExactlyOne => {
                    if k == 0 {
                        return None;
                    }
                    vec![items[rng.random_range(0..k)]]
                }
            };
            rows.push(row);
        }
        Some(self.build(rows))
    }

    /// A draw honouring the rejection classes, or `None` after [`MAX_TRIES`].
    pub fn sample(&self, rng: &mut impl Rng, density: f64) -> Option<Instance> {
        for _ in 0..MAX_TRIES {
            let inst = self.draw(rng, density)?;
            if self.accepts(&inst) {
                return Some(inst);
            }
        }
        None
    }
}

/// The generator for random instance `stream` under `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn check_density(density: f64) -> Result<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("density {density} outside [0, 1]")))
    }
}

/// All instances matching `spec`, in encoding order or stream order.
pub fn enumerate(kind: Kind, spec: &GenSpec) -> Result<Box<dyn Iterator<Item = Instance>>> {
    let space = Space::new(kind, spec.src, spec.dst, &spec.filter)?;
    match spec.mode {
        GenMode::Exhaustive => {
            let len = space.len().filter(|&n| n <= EXHAUSTIVE_CAP).ok_or_else(|| Error::EnumerationTooLarge {
                what: format!("{kind:?} instances of shape {}x{}", spec.src, spec.dst),
                size: space.len().unwrap_or(u128::MAX),
                cap: EXHAUSTIVE_CAP,
            })?;
            Ok(Box::new((0..len).filter_map(move |i| Some(space.get(i)).filter(|inst| space.accepts(inst)))))
        }
        GenMode::Random { count, density, seed } => {
            check_density(density)?;
            Ok(Box::new((0..count as u64).filter_map(move |i| space.sample(&mut rng_for(seed, i), density))))
        }
    }
}

pub fn enumerate_rel(spec: &GenSpec) -> Result<impl Iterator<Item = Rel>> {
    Ok(enumerate(Kind::Rel, spec)?.filter_map(|i| match i {
        Instance::Rel(r) => Some(r),
        Instance::MRel(_) => None,
    }))
}

pub fn enumerate_mrel(spec: &GenSpec) -> Result<impl Iterator<Item = MRel>> {
    Ok(enumerate(Kind::MRel, spec)?.filter_map(|i| match i {
        Instance::MRel(m) => Some(m),
        Instance::Rel(_) => None,
    }))
}

/// Number of instances [`enumerate`] yields.
pub fn count_matching(kind: Kind, spec: &GenSpec) -> Result<u128> {
    let space = Space::new(kind, spec.src, spec.dst, &spec.filter)?;
    if spec.mode == GenMode::Exhaustive && !space.has_rejection() {
        return space.len().ok_or_else(|| Error::EnumerationTooLarge {
            what: format!("{kind:?} instances of shape {}x{}", spec.src, spec.dst),
            size: u128::MAX,
            cap: u128::MAX,
        });
    }
    Ok(enumerate(kind, spec)?.count() as u128)
}
