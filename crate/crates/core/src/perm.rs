//! Permutations in one-line notation and the (right) weak order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n+1}` written as the word `w_1 ... w_{n+1}`.
///
/// `n` is the rank of the corresponding Weyl group `A_n` (and of `RA_n`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

/// A pair `(p, q)` of values with `p < q`.
pub type ValuePair = (usize, usize);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let len = word.len();
        if len == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = alloc::vec![false; len + 1];
        for &v in &word {
            if v == 0 || v > len || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Parses a compact word such as `53412` (single digits) or `5,3,4,1,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let word: Option<Vec<usize>> = if text.contains(',') || text.contains(' ') {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().ok())
                .collect()
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        match word {
            Some(w) => Permutation::new(w),
            None => Err(Error::InvalidPermutation(text.into())),
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n + 1).collect() }
    }

    /// The longest element `n+1 ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n + 1).rev().collect() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Rank `n`; the permutation acts on `n + 1` letters.
    pub fn rank(&self) -> usize {
        self.word.len() - 1
    }

    /// 1-based position of `value` in the word.
    pub fn position(&self, value: usize) -> usize {
        self.word.iter().position(|&v| v == value).expect("value in range") + 1
    }

    /// Pairs `(p, q)` with `p < q` and `q` occurring before `p`.
    pub fn inversions(&self) -> BTreeSet<ValuePair> {
        let mut out = BTreeSet::new();
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    out.insert((self.word[j], self.word[i]));
                }
            }
        }
        out
    }

    /// Adjacent decreasing pairs, normalised to `(smaller, larger)`.
    pub fn descents(&self) -> BTreeSet<ValuePair> {
        self.word
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| (w[1], w[0]))
            .collect()
    }

    /// Adjacent increasing pairs.
    pub fn ascents(&self) -> BTreeSet<ValuePair> {
        self.word
            .windows(2)
            .filter(|w| w[0] < w[1])
            .map(|w| (w[0], w[1]))
            .collect()
    }

    /// `self <= other` in the weak order, i.e. `inv(self) ⊆ inv(other)`.
    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        if self.word.len() != other.word.len() {
            return Err(Error::SizeMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(self.inversions().is_subset(&other.inversions()))
    }

    /// Cover relation `self <· other` in the weak order.
    pub fn weak_covered_by(&self, other: &Permutation) -> Result<bool> {
        if !self.weak_leq(other)? {
            return Ok(false);
        }
        Ok(other.inversions().len() == self.inversions().len() + 1)
    }

    /// Next permutation in lexicographic order, or `None` at the last one.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut w = self.word.clone();
        let i = w.windows(2).rposition(|p| p[0] < p[1])?;
        let j = w.iter().rposition(|&v| v > w[i]).expect("pivot exists");
        w.swap(i, j);
        w[i + 1..].reverse();
        Some(Permutation { word: w })
    }

    /// All of `S_{n+1}` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n)) }
    }
}

/// Iterator over `S_{n+1}` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = current.next_lex();
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() < 10 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            for (i, v) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn stats_of_213() {
        let w = p("213");
        assert_eq!(w.inversions().into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(w.descents().into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(w.ascents().into_iter().collect::<Vec<_>>(), vec![(1, 3)]);
    }

    #[test]
    fn stats_of_53412() {
        let w = p("53412");
        assert_eq!(w.ascents().into_iter().collect::<Vec<_>>(), vec![(1, 2), (3, 4)]);
        assert_eq!(w.descents().into_iter().collect::<Vec<_>>(), vec![(1, 4), (3, 5)]);
    }

    #[test]
    fn identity_stats() {
        let w = Permutation::identity(4);
        assert!(w.inversions().is_empty());
        assert!(w.descents().is_empty());
        assert_eq!(w.ascents().len(), 4);
        assert!(w.ascents().iter().all(|&(a, b)| b == a + 1));
    }

    #[test]
    fn weak_order_examples() {
        assert!(p("213").weak_leq(&p("231")).unwrap());
        assert!(p("2413").weak_leq(&p("2413")).unwrap());
        assert!(!p("321").weak_leq(&p("123")).unwrap());
        assert!(p("12").weak_leq(&p("123")).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::parse("12a").is_err());
        assert_eq!(Permutation::parse("3, 1, 2").unwrap(), p("312"));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(3).count(), 24);
        assert_eq!(Permutation::all(4).count(), 120);
    }

    #[test]
    fn descents_plus_ascents_is_rank() {
        for w in Permutation::all(4) {
            assert_eq!(w.descents().len() + w.ascents().len(), 4);
        }
    }

    #[test]
    fn hasse_diagram_of_s3() {
        // Exactly the six edges of the hexagon.
        let all: Vec<_> = Permutation::all(2).collect();
        let mut covers = Vec::new();
        for a in &all {
            for b in &all {
                if a.weak_covered_by(b).unwrap() {
                    covers.push((a.to_string(), b.to_string()));
                }
            }
        }
        covers.sort();
        let mut expected: Vec<(alloc::string::String, alloc::string::String)> = [
            ("123", "132"),
            ("123", "213"),
            ("132", "312"),
            ("213", "231"),
            ("231", "321"),
            ("312", "321"),
        ]
        .iter()
        .map(|(a, b)| ((*a).into(), (*b).into()))
        .collect();
        expected.sort();
        assert_eq!(covers, expected);
    }
}
