//! 2-term simple minded collections of `RA_n` and the permutation model.
//!
//! Every SMC of `RA_n` is `σδ(w) ⊔ σδ̄(w)[1]` for a unique `w ∈ S_{n+1}`, so a
//! semibrick pair is completable exactly when some `w` contains it.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{Arc, ArcDiagram, Color};
use crate::brick::{sigma, StringBrick};
use crate::error::{Error, Result};
use crate::pair::{require_semibrick_pair, SemibrickPair};
use crate::perm::Permutation;
use crate::reading::{delta, delta_bar, delta_inverse_colored};
use crate::universe::{ArcUniverse, BrickKey, BrickUniverse};

fn bricks_of(d: &ArcDiagram, n: usize) -> Vec<StringBrick> {
    d.arcs().iter().map(|a| sigma(a, n).expect("diagram fits")).collect()
}

/// `σ(δ(w)) ⊔ σ(δ̄(w))[1]`.
pub fn smc_from_permutation(w: &Permutation) -> SemibrickPair<StringBrick> {
    let n = w.rank();
    let uni = ArcUniverse::new(n);
    SemibrickPair::new(&uni, bricks_of(&delta(w), n), bricks_of(&delta_bar(w), n))
}

fn diagram_of(bricks: &[StringBrick], n: usize, color: Color) -> Result<ArcDiagram> {
    ArcDiagram::noncrossing(n + 1, bricks.iter().map(|b| b.to_arc(color)).collect())
}

fn require_semibrick(uni: &ArcUniverse, d: Vec<StringBrick>, u: Vec<StringBrick>) -> Result<()> {
    require_semibrick_pair(uni, &SemibrickPair::new(uni, d, u))
}

/// The unique `D'` making `D' ⊔ U[1]` an SMC.
pub fn completion_of_u(n: usize, u: &[StringBrick]) -> Result<Vec<StringBrick>> {
    let uni = ArcUniverse::new(n);
    require_semibrick(&uni, Vec::new(), u.to_vec())?;
    let w = delta_inverse_colored(&diagram_of(u, n, Color::Red)?, Color::Red)?;
    Ok(bricks_of(&delta(&w), n))
}

/// The unique `U'` making `D ⊔ U'[1]` an SMC.
pub fn completion_of_d(n: usize, d: &[StringBrick]) -> Result<Vec<StringBrick>> {
    let uni = ArcUniverse::new(n);
    require_semibrick(&uni, d.to_vec(), Vec::new())?;
    let w = delta_inverse_colored(&diagram_of(d, n, Color::Green)?, Color::Green)?;
    Ok(bricks_of(&delta_bar(&w), n))
}

/// Reads the permutation off a full-rank pair.
///
/// Green arcs of `D` point down and red arcs of `U` point up; a full-rank
/// pairwise completable pair makes them one directed path through all
/// `n + 1` nodes, and `w` lists the nodes along it.
pub fn complete_full_rank(n: usize, pair: &SemibrickPair<StringBrick>) -> Result<Permutation> {
    let uni = ArcUniverse::new(n);
    require_semibrick_pair(&uni, pair)?;
    if pair.len() != n {
        return Err(Error::NotFullRank { size: pair.len(), rank: n });
    }
    let arcs: Vec<Arc> = pair
        .d()
        .iter()
        .map(|b| b.to_arc(Color::Green))
        .chain(pair.u().iter().map(|b| b.to_arc(Color::Red)))
        .collect();
    let nodes = n + 1;
    let mut next = vec![None; nodes + 1];
    let mut has_pred = vec![false; nodes + 1];
    for a in &arcs {
        let (s, t) = (a.source(), a.target());
        if next[s].is_some() {
            return Err(Error::DegreeViolation(s));
        }
        if has_pred[t] {
            return Err(Error::DegreeViolation(t));
        }
        next[s] = Some(t);
        has_pred[t] = true;
    }
    // n edges on n + 1 nodes with degrees at most one: paths and cycles.
    let mut seen = vec![false; nodes + 1];
    let mut word = Vec::with_capacity(nodes);
    let mut v = (1..=nodes).find(|&s| !has_pred[s]);
    while let Some(x) = v {
        seen[x] = true;
        word.push(x);
        v = next[x];
    }
    for v in (1..=nodes).filter(|&v| !seen[v]) {
        let mut x = v;
        let mut steps = 0;
        while let Some(y) = next[x] {
            x = y;
            steps += 1;
            if x == v || steps > nodes {
                return Err(Error::CycleDetected);
            }
        }
    }
    if word.len() != nodes {
        return Err(Error::Disconnected);
    }
    let w = Permutation::new(word)?;
    if smc_from_permutation(&w) != *pair {
        return Err(Error::NoPreimage);
    }
    Ok(w)
}

/// All SMCs of `RA_n` as key sets, indexed by permutation.
#[derive(Debug, Clone)]
pub struct PermutationOracle {
    n: usize,
    smcs: Vec<(Permutation, BTreeSet<BrickKey>, BTreeSet<BrickKey>)>,
}

impl PermutationOracle {
    pub fn new(n: usize) -> Self {
        let uni = ArcUniverse::new(n);
        let smcs = Permutation::all(n)
            .map(|w| {
                let x = smc_from_permutation(&w);
                let (d, u) = x.keys(&uni);
                (w, d.into_iter().collect(), u.into_iter().collect())
            })
            .collect();
        PermutationOracle { n, smcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The first `w` (lexicographically) with `D ⊆ σδ(w)` and `U ⊆ σδ̄(w)`.
    pub fn witness(&self, pair: &SemibrickPair<StringBrick>) -> Option<&Permutation> {
        let uni = ArcUniverse::new(self.n);
        let (d, u) = pair.keys(&uni);
        self.smcs
            .iter()
            .find(|(_, sd, su)| d.iter().all(|k| sd.contains(k)) && u.iter().all(|k| su.contains(k)))
            .map(|(w, _, _)| w)
    }

    pub fn is_completable(&self, pair: &SemibrickPair<StringBrick>) -> bool {
        self.witness(pair).is_some()
    }
}

/// Pairwise compatibility of every candidate member, precomputed once.
struct Compat {
    /// `hom[i][j]`: `Hom(b_i, b_j) ≠ 0`.
    hom: Vec<Vec<bool>>,
    /// `ext[i][j]`: `Ext¹(b_i, b_j) ≠ 0`.
    ext: Vec<Vec<bool>>,
}

impl Compat {
    fn new<U: BrickUniverse>(uni: &U, bricks: &[U::Brick]) -> Result<Self> {
        let mut hom = vec![vec![false; bricks.len()]; bricks.len()];
        let mut ext = hom.clone();
        for (i, a) in bricks.iter().enumerate() {
            for (j, b) in bricks.iter().enumerate() {
                hom[i][j] = uni.hom_dim(a, b)? != 0;
                ext[i][j] = uni.ext_dim(a, b)? != 0;
            }
        }
        Ok(Compat { hom, ext })
    }

    /// Whether `(i, side_i)` and `(j, side_j)` can sit in one semibrick pair.
    fn fits(&self, (i, di): (usize, bool), (j, dj): (usize, bool)) -> bool {
        if i == j {
            return false;
        }
        match (di, dj) {
            (true, true) | (false, false) => !self.hom[i][j] && !self.hom[j][i],
            (true, false) => !self.hom[i][j] && !self.ext[i][j],
            (false, true) => !self.hom[j][i] && !self.ext[j][i],
        }
    }
}

/// Every semibrick pair of the universe, the empty one included, up to size
/// `max_size`. Needs a universe that lists its bricks.
pub fn enumerate_semibrick_pairs<U: BrickUniverse>(
    uni: &U,
    max_size: usize,
) -> Result<Vec<SemibrickPair<U::Brick>>> {
    let bricks = uni
        .all_bricks()
        .ok_or_else(|| Error::Unsupported("universe does not list its bricks".into()))?;
    let compat = Compat::new(uni, &bricks)?;
    // Vertices: (brick, in D?), D before U for each brick.
    let vertices: Vec<(usize, bool)> =
        (0..bricks.len()).flat_map(|i| [(i, true), (i, false)]).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, bool)> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn grow<B: Clone, U: BrickUniverse<Brick = B>>(
        uni: &U,
        bricks: &[B],
        compat: &Compat,
        vertices: &[(usize, bool)],
        from: usize,
        max_size: usize,
        chosen: &mut Vec<(usize, bool)>,
        out: &mut Vec<SemibrickPair<B>>,
    ) {
        let d = chosen.iter().filter(|v| v.1).map(|v| bricks[v.0].clone()).collect();
        let u = chosen.iter().filter(|v| !v.1).map(|v| bricks[v.0].clone()).collect();
        out.push(SemibrickPair::new(uni, d, u));
        if chosen.len() == max_size {
            return;
        }
        for k in from..vertices.len() {
            let v = vertices[k];
            if chosen.iter().all(|&c| compat.fits(c, v)) {
                chosen.push(v);
                grow(uni, bricks, compat, vertices, k + 1, max_size, chosen, out);
                chosen.pop();
            }
        }
    }
    grow(uni, &bricks, &compat, &vertices, 0, max_size, &mut chosen, &mut out);
    Ok(out)
}

/// No brick of the universe can join either side and keep a semibrick pair.
pub fn is_maximal<U: BrickUniverse>(uni: &U, pair: &SemibrickPair<U::Brick>) -> Result<bool> {
    let bricks = uni
        .all_bricks()
        .ok_or_else(|| Error::Unsupported("universe does not list its bricks".into()))?;
    for b in bricks {
        let mut d = pair.d().to_vec();
        d.push(b.clone());
        let bigger = SemibrickPair::new(uni, d, pair.u().to_vec());
        if bigger.len() > pair.len() && crate::pair::is_semibrick_pair(uni, &bigger)? {
            return Ok(false);
        }
        let mut u = pair.u().to_vec();
        u.push(b);
        let bigger = SemibrickPair::new(uni, pair.d().to_vec(), u);
        if bigger.len() > pair.len() && crate::pair::is_semibrick_pair(uni, &bigger)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> StringBrick {
        StringBrick::parse_walk(4, s).unwrap()
    }

    #[test]
    fn full_example() {
        let uni = ArcUniverse::new(4);
        let w = Permutation::parse("53412").unwrap();
        let x = smc_from_permutation(&w);
        let expected = SemibrickPair::new(&uni, vec![b("1<2>3"), b("3<4")], vec![b("1"), b("3")]);
        assert_eq!(x, expected);
        assert_eq!(complete_full_rank(4, &x).unwrap(), w);
        assert_eq!(completion_of_u(4, &[b("1"), b("3")]).unwrap(), x.d().to_vec());
    }

    #[test]
    fn extremes() {
        let uni = ArcUniverse::new(3);
        let simples = uni.simples();
        let id = smc_from_permutation(&Permutation::identity(3));
        assert_eq!(id, SemibrickPair::new(&uni, vec![], simples.clone()));
        let top = smc_from_permutation(&Permutation::longest(3));
        assert_eq!(top, SemibrickPair::new(&uni, simples.clone(), vec![]));
        assert_eq!(complete_full_rank(3, &id).unwrap(), Permutation::identity(3));
        assert!(completion_of_u(3, &simples).unwrap().is_empty());
        assert_eq!(completion_of_u(3, &[]).unwrap(), simples);
        assert_eq!(completion_of_d(3, &[]).unwrap(), simples);
    }

    #[test]
    fn small_pair_is_not_full_rank() {
        let uni = ArcUniverse::new(4);
        let x = SemibrickPair::new(&uni, vec![b("2>3>4")], vec![b("4"), b("1<2<3")]);
        assert_eq!(complete_full_rank(4, &x), Err(Error::NotFullRank { size: 3, rank: 4 }));
    }

    #[test]
    fn counts_for_rank_two() {
        let uni = ArcUniverse::new(2);
        let pairs = enumerate_semibrick_pairs(&uni, 2).unwrap();
        let full: Vec<_> = pairs.iter().filter(|p| p.len() == 2).collect();
        // Every full-rank pair of RA_2 is an SMC, and there are 3! of them.
        assert_eq!(full.len(), 6);
        let oracle = PermutationOracle::new(2);
        assert!(pairs.iter().all(|p| oracle.is_completable(p)));
    }
}
