//! Brick universes: the operations mutation and the completability search need,
//! backed either by arc combinatorics or by matrices.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::arc::Color;
use crate::brick::{
    arc_remainder, enumerate_bricks, ext_arc_witnesses, hom_arc_basis, sigma, StringBrick,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::{
    self, classify, ext_dim, hom_dim, hom_image_factorization, is_brick, radical_layers,
    rep_of_string, stacked_from, stacked_to, string_of_rep, universal_coextension,
    universal_extension, Algebra, MapKind, Representation,
};

/// Canonical identity of a brick up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BrickKey {
    String(StringBrick),
    /// Dimension vector, Hom dimensions to and from each simple, radical layers.
    Fingerprint(Vec<usize>),
}

/// Outcome of approximating one brick by another during mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Approx<B> {
    Zero,
    /// The map is injective; carries its cokernel.
    Mono(B),
    /// The map is surjective; carries its kernel.
    Epi(B),
    Neither,
}

impl<B> Approx<B> {
    pub fn kind(&self) -> &'static str {
        match self {
            Approx::Zero => "zero",
            Approx::Mono(_) => "mono",
            Approx::Epi(_) => "epi",
            Approx::Neither => "neither",
        }
    }

    pub fn is_compatible(&self) -> bool {
        !matches!(self, Approx::Neither)
    }
}

pub trait BrickUniverse {
    type Brick: Clone + Debug;

    fn algebra(&self) -> Algebra;

    fn rank(&self) -> usize {
        self.algebra().rank()
    }

    fn key(&self, b: &Self::Brick) -> BrickKey;

    /// Human-readable name; display only.
    fn name(&self, b: &Self::Brick) -> String;

    fn is_brick(&self, b: &Self::Brick) -> Result<bool>;

    fn hom_dim(&self, s: &Self::Brick, t: &Self::Brick) -> Result<usize>;

    /// Dimension of `Ext¹(s, t)`, i.e. extensions `t ↪ E ↠ s`.
    fn ext_dim(&self, s: &Self::Brick, t: &Self::Brick) -> Result<usize>;

    /// `s^e ↪ E ↠ t` with `e = dim Ext¹(t, s)`.
    fn extend_below(&self, s: &Self::Brick, t: &Self::Brick) -> Result<Self::Brick>;

    /// `r ↪ E ↠ p^e` with `e = dim Ext¹(p, r)`.
    fn extend_above(&self, p: &Self::Brick, r: &Self::Brick) -> Result<Self::Brick>;

    /// Classifies `t -> s^d` built from a basis of `Hom(t, s)`.
    fn approx_into(&self, t: &Self::Brick, s: &Self::Brick) -> Result<Approx<Self::Brick>>;

    /// Classifies `p^d -> r` built from a basis of `Hom(p, r)`.
    fn approx_from(&self, p: &Self::Brick, r: &Self::Brick) -> Result<Approx<Self::Brick>>;

    fn simples(&self) -> Vec<Self::Brick>;

    /// Every brick, when the universe knows them all.
    fn all_bricks(&self) -> Option<Vec<Self::Brick>>;

    fn same(&self, a: &Self::Brick, b: &Self::Brick) -> bool {
        self.key(a) == self.key(b)
    }
}

/// `RA_n` with bricks as strings and everything decided on arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcUniverse {
    n: usize,
}

impl ArcUniverse {
    pub fn new(n: usize) -> Self {
        ArcUniverse { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, b: &StringBrick) -> Result<()> {
        if b.n() != self.n {
            return Err(Error::SizeMismatch { left: b.n(), right: self.n });
        }
        Ok(())
    }

    fn brick_of(&self, arc: &crate::arc::Arc) -> Result<StringBrick> {
        sigma(arc, self.n)
    }

    /// Single remaining piece of `whole` after removing `part`.
    fn remainder(&self, whole: &StringBrick, part: &StringBrick) -> Result<StringBrick> {
        let w = whole.to_arc(Color::Green);
        let g = part.to_arc(Color::Green);
        match arc_remainder(&w, &g).as_slice() {
            [one] => self.brick_of(one),
            _ => Err(Error::MutationBroken(alloc::format!(
                "{whole} minus {part} is not a single brick"
            ))),
        }
    }

    fn approx(&self, from: &StringBrick, to: &StringBrick) -> Result<Approx<StringBrick>> {
        self.check(from)?;
        self.check(to)?;
        let basis = hom_arc_basis(from, to);
        match basis.as_slice() {
            [] => Ok(Approx::Zero),
            [g] => {
                let image = self.brick_of(g)?;
                let mono = image == *from;
                let epi = image == *to;
                match (mono, epi) {
                    (true, true) => Err(Error::MutationBroken(alloc::format!(
                        "{from} is isomorphic to {to}"
                    ))),
                    (true, false) => Ok(Approx::Mono(self.remainder(to, &image)?)),
                    (false, true) => Ok(Approx::Epi(self.remainder(from, &image)?)),
                    (false, false) => Ok(Approx::Neither),
                }
            }
            // Two independent maps between bricks of a semibrick pair rule
            // out single compatibility.
            _ => Ok(Approx::Neither),
        }
    }

    /// Middle term of the extension `sub ↪ E ↠ quot`, or `keep` when it splits.
    fn glued(&self, quot: &StringBrick, sub: &StringBrick, keep: &StringBrick) -> Result<StringBrick> {
        self.check(quot)?;
        self.check(sub)?;
        let ws = ext_arc_witnesses(quot, sub);
        match ws.as_slice() {
            [] => Ok(keep.clone()),
            [w] if w.second.is_none() => self.brick_of(&w.first),
            _ => Err(Error::MutationBroken(alloc::format!(
                "extension of {quot} by {sub} is not a brick"
            ))),
        }
    }
}

impl BrickUniverse for ArcUniverse {
    type Brick = StringBrick;

    fn algebra(&self) -> Algebra {
        Algebra::RA(self.n)
    }

    fn key(&self, b: &StringBrick) -> BrickKey {
        BrickKey::String(b.clone())
    }

    fn name(&self, b: &StringBrick) -> String {
        b.stacked()
    }

    fn is_brick(&self, b: &StringBrick) -> Result<bool> {
        Ok(b.n() == self.n)
    }

    fn hom_dim(&self, s: &StringBrick, t: &StringBrick) -> Result<usize> {
        self.check(s)?;
        self.check(t)?;
        Ok(hom_arc_basis(s, t).len())
    }

    fn ext_dim(&self, s: &StringBrick, t: &StringBrick) -> Result<usize> {
        self.check(s)?;
        self.check(t)?;
        Ok(ext_arc_witnesses(s, t).len())
    }

    fn extend_below(&self, s: &StringBrick, t: &StringBrick) -> Result<StringBrick> {
        // Only arrow extensions glue two hom-orthogonal bricks, so e <= 1.
        self.glued(t, s, t)
    }

    fn extend_above(&self, p: &StringBrick, r: &StringBrick) -> Result<StringBrick> {
        self.glued(p, r, r)
    }

    fn approx_into(&self, t: &StringBrick, s: &StringBrick) -> Result<Approx<StringBrick>> {
        self.approx(t, s)
    }

    fn approx_from(&self, p: &StringBrick, r: &StringBrick) -> Result<Approx<StringBrick>> {
        self.approx(p, r)
    }

    fn simples(&self) -> Vec<StringBrick> {
        (1..=self.n).map(|i| StringBrick::simple(self.n, i).expect("in range")).collect()
    }

    fn all_bricks(&self) -> Option<Vec<StringBrick>> {
        Some(enumerate_bricks(self.n))
    }
}

/// Either preset with bricks as matrices and everything solved linearly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixUniverse {
    algebra: Algebra,
    field: Field,
}

impl MatrixUniverse {
    pub fn new(algebra: Algebra, field: Field) -> Self {
        MatrixUniverse { algebra, field }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Replaces string modules by their normal form so equal keys mean equal values.
    pub fn normalize(&self, m: Representation) -> Representation {
        match string_of_rep(&m) {
            Some(b) => rep_of_string(&b, self.field),
            None => m,
        }
    }

    pub fn from_string(&self, b: &StringBrick) -> Representation {
        rep_of_string(b, self.field)
    }

    fn check(&self, m: &Representation) -> Result<()> {
        if m.algebra() != self.algebra || m.field().characteristic() != self.field.characteristic()
        {
            return Err(Error::SizeMismatch {
                left: m.algebra().vertices(),
                right: self.algebra.vertices(),
            });
        }
        Ok(())
    }

    fn brick_result(&self, m: Representation, what: &str) -> Result<Representation> {
        if !is_brick(&m)? {
            return Err(Error::MutationBroken(alloc::format!("{what} is not a brick")));
        }
        Ok(self.normalize(m))
    }

    fn approx(
        &self,
        phi: &quiver::Morphism,
        from: &Representation,
        to: &Representation,
    ) -> Result<Approx<Representation>> {
        match classify(phi, from, to) {
            MapKind::Zero => Ok(Approx::Zero),
            MapKind::Neither => Ok(Approx::Neither),
            MapKind::Iso => Err(Error::MutationBroken("approximation is an isomorphism".into())),
            MapKind::Mono => {
                let fac = hom_image_factorization(phi, from, to)?;
                Ok(Approx::Mono(self.brick_result(fac.cokernel, "cokernel")?))
            }
            MapKind::Epi => {
                let fac = hom_image_factorization(phi, from, to)?;
                Ok(Approx::Epi(self.brick_result(fac.kernel, "kernel")?))
            }
        }
    }
}

impl BrickUniverse for MatrixUniverse {
    type Brick = Representation;

    fn algebra(&self) -> Algebra {
        self.algebra
    }

    fn key(&self, b: &Representation) -> BrickKey {
        if let Some(s) = string_of_rep(b) {
            return BrickKey::String(s);
        }
        let mut fp: Vec<usize> = b.dims().to_vec();
        for s in self.simples() {
            fp.push(hom_dim(b, &s).unwrap_or(usize::MAX));
            fp.push(hom_dim(&s, b).unwrap_or(usize::MAX));
        }
        for layer in radical_layers(b) {
            fp.push(usize::MAX);
            fp.extend(layer);
        }
        BrickKey::Fingerprint(fp)
    }

    fn name(&self, b: &Representation) -> String {
        if let Some(s) = string_of_rep(b) {
            return s.stacked();
        }
        let layers = radical_layers(b);
        let rows: Vec<String> = layers
            .iter()
            .map(|layer| {
                let mut r = String::new();
                for (v, &d) in layer.iter().enumerate().skip(1) {
                    for _ in 0..d {
                        r.push_str(&alloc::format!("{v}"));
                    }
                }
                r
            })
            .collect();
        rows.join("/")
    }

    fn is_brick(&self, b: &Representation) -> Result<bool> {
        self.check(b)?;
        is_brick(b)
    }

    fn hom_dim(&self, s: &Representation, t: &Representation) -> Result<usize> {
        hom_dim(s, t)
    }

    fn ext_dim(&self, s: &Representation, t: &Representation) -> Result<usize> {
        ext_dim(s, t)
    }

    fn extend_below(&self, s: &Representation, t: &Representation) -> Result<Representation> {
        let e = universal_extension(t, s)?;
        self.brick_result(e, "universal extension")
    }

    fn extend_above(&self, p: &Representation, r: &Representation) -> Result<Representation> {
        let e = universal_coextension(r, p)?;
        self.brick_result(e, "universal extension")
    }

    fn approx_into(&self, t: &Representation, s: &Representation) -> Result<Approx<Representation>> {
        let (d, phi) = stacked_to(t, s)?;
        let target = s.power(d);
        self.approx(&phi, t, &target)
    }

    fn approx_from(&self, p: &Representation, r: &Representation) -> Result<Approx<Representation>> {
        let (d, phi) = stacked_from(p, r)?;
        let source = p.power(d);
        self.approx(&phi, &source, r)
    }

    fn simples(&self) -> Vec<Representation> {
        (1..=self.algebra.vertices())
            .map(|v| Representation::simple(self.algebra, self.field, v))
            .collect()
    }

    fn all_bricks(&self) -> Option<Vec<Representation>> {
        match self.algebra {
            Algebra::RA(n) => {
                Some(enumerate_bricks(n).iter().map(|b| rep_of_string(b, self.field)).collect())
            }
            Algebra::PiD4 => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_and_matrix_approximations_agree_on_ra3() {
        let arc = ArcUniverse::new(3);
        let mat = MatrixUniverse::new(Algebra::RA(3), Field::default());
        let bricks = enumerate_bricks(3);
        for s in &bricks {
            for t in &bricks {
                if s == t {
                    continue;
                }
                let (ms, mt) = (mat.from_string(s), mat.from_string(t));
                let a = arc.approx_into(t, s).map(|x| x.kind());
                let m = mat.approx_into(&mt, &ms).map(|x| x.kind());
                assert_eq!(a.is_ok(), m.is_ok(), "{t} -> {s}");
                assert_eq!(a.ok(), m.ok(), "{t} -> {s}");
                if let (Ok(Approx::Mono(x)), Ok(Approx::Mono(y))) =
                    (arc.approx_into(t, s), mat.approx_into(&mt, &ms))
                {
                    assert_eq!(mat.key(&y), arc.key(&x));
                }
            }
        }
    }

    #[test]
    fn extensions_agree_on_simples() {
        let arc = ArcUniverse::new(3);
        let mat = MatrixUniverse::new(Algebra::RA(3), Field::default());
        let s1 = StringBrick::simple(3, 1).unwrap();
        let s2 = StringBrick::simple(3, 2).unwrap();
        let a = arc.extend_below(&s1, &s2).unwrap();
        assert_eq!(a.walk(), "1<2");
        let m = mat.extend_below(&mat.from_string(&s1), &mat.from_string(&s2)).unwrap();
        assert_eq!(mat.key(&m), arc.key(&a));
        let a = arc.extend_above(&s1, &s2).unwrap();
        assert_eq!(a.walk(), "1>2");
    }
}
