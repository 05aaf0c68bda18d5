//! Semibrick pairs `D ⊔ U[1]`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::universe::{BrickKey, BrickUniverse};

/// Bricks at shift 0 (`D`) and at shift 1 (`U`), each kept sorted by key and
/// free of repeats, so two pairs are equal exactly when their keys agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemibrickPair<B> {
    d: Vec<B>,
    u: Vec<B>,
}

impl<B: Clone> SemibrickPair<B> {
    pub fn new<U: BrickUniverse<Brick = B>>(uni: &U, d: Vec<B>, u: Vec<B>) -> Self {
        SemibrickPair { d: canonical(uni, d), u: canonical(uni, u) }
    }

    pub fn empty() -> Self {
        SemibrickPair { d: Vec::new(), u: Vec::new() }
    }

    pub fn d(&self) -> &[B] {
        &self.d
    }

    pub fn u(&self) -> &[B] {
        &self.u
    }

    pub fn len(&self) -> usize {
        self.d.len() + self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Keys of `D` and `U`; a cheap identity for caches.
    pub fn keys<U: BrickUniverse<Brick = B>>(&self, uni: &U) -> (Vec<BrickKey>, Vec<BrickKey>) {
        (self.d.iter().map(|b| uni.key(b)).collect(), self.u.iter().map(|b| uni.key(b)).collect())
    }

    /// Whether every brick of `self` occurs on the same side of `other`.
    pub fn is_contained_in<U: BrickUniverse<Brick = B>>(&self, uni: &U, other: &Self) -> bool {
        let (od, ou) = other.keys(uni);
        self.d.iter().all(|b| od.contains(&uni.key(b)))
            && self.u.iter().all(|b| ou.contains(&uni.key(b)))
    }

    pub fn same_as<U: BrickUniverse<Brick = B>>(&self, uni: &U, other: &Self) -> bool {
        self.keys(uni) == other.keys(uni)
    }

    /// Position of a brick in `D`.
    pub fn position_in_d<U: BrickUniverse<Brick = B>>(&self, uni: &U, b: &B) -> Option<usize> {
        let k = uni.key(b);
        self.d.iter().position(|x| uni.key(x) == k)
    }

    /// Position of a brick in `U`.
    pub fn position_in_u<U: BrickUniverse<Brick = B>>(&self, uni: &U, b: &B) -> Option<usize> {
        let k = uni.key(b);
        self.u.iter().position(|x| uni.key(x) == k)
    }

    /// Display form such as `{2/3/4} ⊔ {4, 3/2/1}[1]`.
    pub fn describe<U: BrickUniverse<Brick = B>>(&self, uni: &U) -> String {
        let names = |xs: &[B]| xs.iter().map(|b| uni.name(b)).collect::<Vec<_>>().join(", ");
        format!("{{{}}} ⊔ {{{}}}[1]", names(&self.d), names(&self.u))
    }
}

fn canonical<U: BrickUniverse>(uni: &U, bricks: Vec<U::Brick>) -> Vec<U::Brick> {
    let mut keyed: Vec<(BrickKey, U::Brick)> = bricks.into_iter().map(|b| (uni.key(&b), b)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, b)| b).collect()
}

/// Which side of the pair a brick sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    D,
    U,
}

/// The first condition a candidate pair breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotABrick { shift: Shift, name: String },
    /// Nonzero Hom between two members of the same side.
    HomWithin { shift: Shift, from: String, to: String },
    /// `Hom(S, T) ≠ 0` for `S ∈ D`, `T ∈ U`.
    Hom { from: String, to: String },
    /// `Ext¹(S, T) ≠ 0` for `S ∈ D`, `T ∈ U`.
    Ext { from: String, to: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotABrick { shift, name } => write!(f, "{name} in {shift:?} is not a brick"),
            Violation::HomWithin { shift, from, to } => {
                write!(f, "Hom({from}, {to}) is nonzero inside {shift:?}")
            }
            Violation::Hom { from, to } => write!(f, "Hom({from}, {to}) is nonzero"),
            Violation::Ext { from, to } => write!(f, "Ext({from}, {to}) is nonzero"),
        }
    }
}

/// The first violated condition, or `None` for a semibrick pair.
pub fn semibrick_violation<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<Option<Violation>> {
    for (shift, side) in [(Shift::D, pair.d()), (Shift::U, pair.u())] {
        for b in side {
            if !uni.is_brick(b)? {
                return Ok(Some(Violation::NotABrick { shift, name: uni.name(b) }));
            }
        }
        for (i, a) in side.iter().enumerate() {
            for (j, b) in side.iter().enumerate() {
                if i != j && uni.hom_dim(a, b)? != 0 {
                    return Ok(Some(Violation::HomWithin {
                        shift,
                        from: uni.name(a),
                        to: uni.name(b),
                    }));
                }
            }
        }
    }
    for s in pair.d() {
        for t in pair.u() {
            if uni.hom_dim(s, t)? != 0 {
                return Ok(Some(Violation::Hom { from: uni.name(s), to: uni.name(t) }));
            }
            if uni.ext_dim(s, t)? != 0 {
                return Ok(Some(Violation::Ext { from: uni.name(s), to: uni.name(t) }));
            }
        }
    }
    Ok(None)
}

pub fn is_semibrick_pair<U: BrickUniverse>(uni: &U, pair: &SemibrickPair<U::Brick>) -> Result<bool> {
    Ok(semibrick_violation(uni, pair)?.is_none())
}

/// Errors with [`Error::NotABrick`] or [`Error::MutationBroken`] unless `pair`
/// is a semibrick pair.
pub fn require_semibrick_pair<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<()> {
    match semibrick_violation(uni, pair)? {
        None => Ok(()),
        Some(v @ Violation::NotABrick { .. }) => Err(Error::NotABrick(format!("{v}"))),
        Some(v) => Err(Error::MutationBroken(format!("{v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brick::StringBrick;
    use crate::universe::ArcUniverse;
    use alloc::vec;

    fn b(s: &str) -> StringBrick {
        StringBrick::parse_walk(4, s).unwrap()
    }

    #[test]
    fn full_example_is_a_pair() {
        let uni = ArcUniverse::new(4);
        let p = SemibrickPair::new(&uni, vec![b("1<2>3"), b("3<4")], vec![b("1"), b("3")]);
        assert_eq!(semibrick_violation(&uni, &p).unwrap(), None);
    }

    #[test]
    fn two_sided_example_fails_on_ext() {
        let uni = ArcUniverse::new(4);
        let p = SemibrickPair::new(&uni, vec![b("2>3<4")], vec![b("1<2>3")]);
        assert!(matches!(semibrick_violation(&uni, &p).unwrap(), Some(Violation::Ext { .. })));
    }

    #[test]
    fn singletons_and_order() {
        let uni = ArcUniverse::new(4);
        let p = SemibrickPair::new(&uni, vec![b("2>3")], vec![]);
        assert!(is_semibrick_pair(&uni, &p).unwrap());
        let x = SemibrickPair::new(&uni, vec![b("3<4"), b("1<2>3")], vec![b("3"), b("1"), b("1")]);
        let y = SemibrickPair::new(&uni, vec![b("1<2>3"), b("3<4")], vec![b("1"), b("3")]);
        assert_eq!(x, y);
        assert_eq!(x.len(), 4);
    }
}
