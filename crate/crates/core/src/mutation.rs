//! Left and right mutation of semibrick pairs.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pair::{require_semibrick_pair, SemibrickPair};
use crate::universe::{Approx, BrickUniverse};

/// Classifies `T -> S^d` for every `T ∈ U`, where `S = D[s]`.
pub fn left_classification<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    s: usize,
) -> Result<Vec<Approx<U::Brick>>> {
    let pivot = pair.d().get(s).ok_or(Error::NotAMember)?;
    pair.u().iter().map(|t| uni.approx_into(t, pivot)).collect()
}

/// Classifies `P^d -> R` for every `R ∈ D`, where `P = U[p]`.
pub fn right_classification<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    p: usize,
) -> Result<Vec<Approx<U::Brick>>> {
    let pivot = pair.u().get(p).ok_or(Error::NotAMember)?;
    pair.d().iter().map(|r| uni.approx_from(pivot, r)).collect()
}

pub fn singly_left_compatible<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    s: usize,
) -> Result<bool> {
    Ok(left_classification(uni, pair, s)?.iter().all(Approx::is_compatible))
}

pub fn singly_right_compatible<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    p: usize,
) -> Result<bool> {
    Ok(right_classification(uni, pair, p)?.iter().all(Approx::is_compatible))
}

/// Left mutation at `S = D[s]`: `S` moves to `U`, the rest of `D` is extended
/// by powers of `S`, and each `T ∈ U` is replaced according to `T -> S^d`.
pub fn mutate_left<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    s: usize,
) -> Result<SemibrickPair<U::Brick>> {
    let classes = left_classification(uni, pair, s)?;
    let pivot = &pair.d()[s];
    let mut d = Vec::new();
    let mut u = alloc::vec![pivot.clone()];
    for (i, t) in pair.d().iter().enumerate() {
        if i != s {
            d.push(uni.extend_below(pivot, t)?);
        }
    }
    for (t, class) in pair.u().iter().zip(classes) {
        match class {
            Approx::Zero => u.push(t.clone()),
            Approx::Mono(cokernel) => d.push(cokernel),
            Approx::Epi(kernel) => u.push(kernel),
            Approx::Neither => return Err(Error::NotMutationCompatible),
        }
    }
    finish(uni, d, u)
}

/// Right mutation at `P = U[p]`, the dual of [`mutate_left`].
pub fn mutate_right<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
    p: usize,
) -> Result<SemibrickPair<U::Brick>> {
    let classes = right_classification(uni, pair, p)?;
    let pivot = &pair.u()[p];
    let mut d = alloc::vec![pivot.clone()];
    let mut u = Vec::new();
    for (r, class) in pair.d().iter().zip(classes) {
        match class {
            Approx::Zero => d.push(r.clone()),
            Approx::Mono(cokernel) => d.push(cokernel),
            Approx::Epi(kernel) => u.push(kernel),
            Approx::Neither => return Err(Error::NotMutationCompatible),
        }
    }
    for (i, r) in pair.u().iter().enumerate() {
        if i != p {
            u.push(uni.extend_above(pivot, r)?);
        }
    }
    finish(uni, d, u)
}

fn finish<U: BrickUniverse>(
    uni: &U,
    d: Vec<U::Brick>,
    u: Vec<U::Brick>,
) -> Result<SemibrickPair<U::Brick>> {
    let size = d.len() + u.len();
    let out = SemibrickPair::new(uni, d, u);
    if out.len() != size {
        return Err(Error::MutationBroken("two members collapsed".into()));
    }
    require_semibrick_pair(uni, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brick::StringBrick;
    use crate::universe::ArcUniverse;
    use alloc::vec;

    fn b(n: usize, s: &str) -> StringBrick {
        StringBrick::parse_walk(n, s).unwrap()
    }

    #[test]
    fn single_brick_moves_across() {
        let uni = ArcUniverse::new(1);
        let s = b(1, "1");
        let x = SemibrickPair::new(&uni, vec![s.clone()], vec![]);
        let y = mutate_left(&uni, &x, 0).unwrap();
        assert_eq!(y, SemibrickPair::new(&uni, vec![], vec![s]));
        assert_eq!(mutate_right(&uni, &y, 0).unwrap(), x);
    }

    #[test]
    fn pivot_must_exist() {
        let uni = ArcUniverse::new(2);
        let x = SemibrickPair::new(&uni, vec![], vec![b(2, "1")]);
        assert_eq!(mutate_left(&uni, &x, 0), Err(Error::NotAMember));
    }

    #[test]
    fn a4_counterexample_mutations() {
        let uni = ArcUniverse::new(4);
        let x = SemibrickPair::new(&uni, vec![b(4, "2>3>4")], vec![b(4, "4"), b(4, "1<2<3")]);
        assert!(singly_left_compatible(&uni, &x, 0).unwrap());
        let x2 = mutate_left(&uni, &x, 0).unwrap();
        let expected = SemibrickPair::new(
            &uni,
            vec![b(4, "2>3")],
            vec![b(4, "2>3>4"), b(4, "1<2<3")],
        );
        assert_eq!(x2, expected);
        let classes = left_classification(&uni, &x2, 0).unwrap();
        let t = x2.position_in_u(&uni, &b(4, "1<2<3")).unwrap();
        assert_eq!(classes[t], Approx::Neither);
        assert_eq!(mutate_left(&uni, &x2, 0), Err(Error::NotMutationCompatible));
        // Mutating back recovers the original pair.
        let back = mutate_right(&uni, &x2, x2.position_in_u(&uni, &b(4, "2>3>4")).unwrap());
        assert_eq!(back.unwrap(), x);
    }
}
