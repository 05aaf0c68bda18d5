//! Deciding completability by searching over left mutations.
//!
//! A pair is completable exactly when some sequence of left mutations empties
//! `D`. Every left mutation of a completable pair moves down one cover in the
//! lattice of torsion classes, so no useful sequence is longer than the
//! longest chain; the search caps its depth there.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mutation::{left_classification, mutate_left};
use crate::pair::{require_semibrick_pair, SemibrickPair};
use crate::universe::{Approx, BrickKey, BrickUniverse};

/// Result of the mutation search.
#[derive(Debug, Clone)]
pub struct SearchOutcome<B> {
    pub completable: bool,
    /// Pivot names of a successful sequence of left mutations.
    pub trace: Vec<String>,
    /// Pivots of the same sequence, as bricks.
    pub pivots: Vec<B>,
    /// `U'` with `μ⁺(X) = U'[1]` on success.
    pub terminal: Option<Vec<B>>,
    /// On failure, the first stuck state met: not singly left compatible anywhere.
    pub obstruction: Option<SemibrickPair<B>>,
    pub states_visited: usize,
}

type StateKey = (Vec<BrickKey>, Vec<BrickKey>);
/// Pivots in order, then the terminal `U'`.
type Found<B> = (Vec<B>, Vec<B>);

struct Dfs<'a, U: BrickUniverse> {
    uni: &'a U,
    cap: usize,
    failed: BTreeSet<StateKey>,
    visited: usize,
    obstruction: Option<SemibrickPair<U::Brick>>,
}

impl<U: BrickUniverse> Dfs<'_, U> {
    /// On success returns the pivots (in order) and the terminal `U'`.
    fn run(
        &mut self,
        state: &SemibrickPair<U::Brick>,
        depth: usize,
    ) -> Result<Option<Found<U::Brick>>> {
        self.visited += 1;
        if state.d().is_empty() {
            return Ok(Some((Vec::new(), state.u().to_vec())));
        }
        let key = state.keys(self.uni);
        if depth >= self.cap || self.failed.contains(&key) {
            return Ok(None);
        }
        let mut any_compatible = false;
        // D is sorted by key, so this tries the smallest key first.
        for s in 0..state.d().len() {
            let classes = left_classification(self.uni, state, s)?;
            if !classes.iter().all(Approx::is_compatible) {
                continue;
            }
            any_compatible = true;
            let next = mutate_left(self.uni, state, s)?;
            if let Some((mut pivots, terminal)) = self.run(&next, depth + 1)? {
                pivots.insert(0, state.d()[s].clone());
                return Ok(Some((pivots, terminal)));
            }
        }
        if !any_compatible && self.obstruction.is_none() {
            self.obstruction = Some(state.clone());
        }
        self.failed.insert(key);
        Ok(None)
    }
}

/// Whether `pair` is contained in a 2-term simple minded collection.
///
/// The empty pair is completable.
pub fn is_completable<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<SearchOutcome<U::Brick>> {
    require_semibrick_pair(uni, pair)?;
    if pair.len() > uni.rank() {
        return Ok(SearchOutcome {
            completable: false,
            trace: Vec::new(),
            pivots: Vec::new(),
            terminal: None,
            obstruction: None,
            states_visited: 0,
        });
    }
    let mut dfs = Dfs {
        uni,
        cap: uni.algebra().longest_chain(),
        failed: BTreeSet::new(),
        visited: 0,
        obstruction: None,
    };
    let found = dfs.run(pair, 0)?;
    let (completable, pivots, terminal) = match found {
        Some((p, t)) => (true, p, Some(t)),
        None => (false, Vec::new(), None),
    };
    Ok(SearchOutcome {
        completable,
        trace: pivots.iter().map(|b| uni.name(b)).collect(),
        pivots,
        terminal,
        obstruction: if completable { None } else { dfs.obstruction },
        states_visited: dfs.visited,
    })
}

/// Mutation compatibility of `{S} ⊔ {T}[1]` read off the map `T -> S`:
/// zero, injective or surjective.
pub fn kstone_trichotomy<U: BrickUniverse>(uni: &U, s: &U::Brick, t: &U::Brick) -> Result<bool> {
    Ok(match uni.approx_into(t, s) {
        Ok(a) => a.is_compatible(),
        // A mono or epi whose cokernel or kernel is not a brick.
        Err(Error::MutationBroken(_)) => false,
        Err(e) => return Err(e),
    })
}

/// A mixed pair `S ∈ D`, `T ∈ U` that lies in no 2-term simple minded collection.
#[derive(Debug, Clone)]
pub struct PairwiseObstruction<B> {
    pub s: B,
    pub t: B,
}

/// Checks every `{S} ⊔ {T}[1]` with the trichotomy and confirms each answer
/// with the mutation search; a disagreement is an error.
pub fn pairwise_obstruction<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<Option<PairwiseObstruction<U::Brick>>> {
    require_semibrick_pair(uni, pair)?;
    for s in pair.d() {
        for t in pair.u() {
            let fast = kstone_trichotomy(uni, s, t)?;
            let small = SemibrickPair::new(uni, alloc::vec![s.clone()], alloc::vec![t.clone()]);
            let slow = is_completable(uni, &small)?.completable;
            if fast != slow {
                return Err(Error::Disagreement(alloc::format!(
                    "{} with {}[1]: trichotomy says {fast}, search says {slow}",
                    uni.name(s),
                    uni.name(t)
                )));
            }
            if !slow {
                return Ok(Some(PairwiseObstruction { s: s.clone(), t: t.clone() }));
            }
        }
    }
    Ok(None)
}

pub fn is_pairwise_completable<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<bool> {
    Ok(pairwise_obstruction(uni, pair)?.is_none())
}

/// Simples of the smallest wide subcategory containing the pair, when the
/// pair is mutation compatible.
pub fn wide_hull_simples<U: BrickUniverse>(
    uni: &U,
    pair: &SemibrickPair<U::Brick>,
) -> Result<Option<Vec<U::Brick>>> {
    Ok(is_completable(uni, pair)?.terminal)
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
    fn a4_counterexample() {
        let uni = ArcUniverse::new(4);
        let x = SemibrickPair::new(&uni, vec![b(4, "2>3>4")], vec![b(4, "4"), b(4, "1<2<3")]);
        let out = is_completable(&uni, &x).unwrap();
        assert!(!out.completable);
        assert!(out.obstruction.is_some());
        assert!(is_pairwise_completable(&uni, &x).unwrap());
        assert_eq!(wide_hull_simples(&uni, &x).unwrap(), None);
    }

    #[test]
    fn singletons_are_completable() {
        let uni = ArcUniverse::new(3);
        for s in crate::brick::enumerate_bricks(3) {
            let x = SemibrickPair::new(&uni, vec![s.clone()], vec![]);
            let out = is_completable(&uni, &x).unwrap();
            assert!(out.completable);
            assert_eq!(out.terminal, Some(vec![s.clone()]));
            let y = SemibrickPair::new(&uni, vec![], vec![s]);
            assert!(is_completable(&uni, &y).unwrap().completable);
        }
        assert!(is_completable(&uni, &SemibrickPair::empty()).unwrap().completable);
    }
}
