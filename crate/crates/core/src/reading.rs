//! Reading's bijections from permutations to noncrossing arc diagrams.
//!
//! For a descent `w_i > w_{i+1}` the green arc runs from `w_i` down to
//! `w_{i+1}`; every value strictly between them sits on the left of the arc
//! when it occurs before position `i` and on the right when it occurs after
//! position `i + 1`. The red diagram uses the same rule on ascents.

use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{Arc, ArcDiagram, Color, Side};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest rank accepted by [`delta_inverse`].
pub const MAX_INVERSE_RANK: usize = 8;

fn arc_at(w: &Permutation, i: usize, color: Color) -> Arc {
    let word = w.word();
    let (a, b) = (word[i], word[i + 1]);
    let (bottom, top) = if a < b { (a, b) } else { (b, a) };
    let sides = (bottom + 1..top)
        .map(|k| if w.position(k) <= i { Side::Left } else { Side::Right })
        .collect();
    Arc::new(color, bottom, top, sides).expect("adjacent values give a valid arc")
}

fn diagram(w: &Permutation, color: Color) -> ArcDiagram {
    let word = w.word();
    let arcs = (0..word.len() - 1)
        .filter(|&i| (word[i] > word[i + 1]) == (color == Color::Green))
        .map(|i| arc_at(w, i, color))
        .collect();
    ArcDiagram::noncrossing(word.len(), arcs).expect("Reading's map yields noncrossing diagrams")
}

/// Green diagram with one arc per descent.
pub fn delta(w: &Permutation) -> ArcDiagram {
    diagram(w, Color::Green)
}

/// Red diagram with one arc per ascent.
pub fn delta_bar(w: &Permutation) -> ArcDiagram {
    diagram(w, Color::Red)
}

/// The unique permutation whose green (or red) diagram is `d`. An empty
/// diagram carries no color and is read as green; see [`delta_inverse_colored`].
pub fn delta_inverse(d: &ArcDiagram) -> Result<Permutation> {
    delta_inverse_colored(d, d.color().unwrap_or(Color::Green))
}

/// Preimage of `d` under [`delta`] (green) or [`delta_bar`] (red).
///
/// Builds the word left to right and rejects a prefix as soon as an adjacent
/// pair disagrees with `d`, so the search is exact and usually fast.
pub fn delta_inverse_colored(d: &ArcDiagram, color: Color) -> Result<Permutation> {
    if d.color().is_some_and(|c| c != color) {
        return Err(Error::NoPreimage);
    }
    // Revalidate: a two-colored diagram has no preimage under either map.
    let d = ArcDiagram::noncrossing(d.nodes(), d.arcs().to_vec())?;
    let len = d.nodes();
    if len > MAX_INVERSE_RANK + 1 {
        return Err(Error::OutOfBounds(alloc::format!(
            "inverse search limited to {} nodes",
            MAX_INVERSE_RANK + 1
        )));
    }
    // by_bottom[p] = arc whose lower endpoint is p.
    let mut by_bottom: Vec<Option<&Arc>> = vec![None; len + 1];
    for a in d.arcs() {
        by_bottom[a.bottom()] = Some(a);
    }
    let mut search = Search {
        by_bottom,
        color,
        word: Vec::with_capacity(len),
        used: vec![false; len + 1],
        len,
        steps: 0,
        arcs: d.len(),
    };
    if search.run() {
        let w = Permutation::new(search.word)?;
        let again = diagram(&w, color);
        if again.arcs() == d.arcs() {
            return Ok(w);
        }
    }
    Err(Error::NoPreimage)
}

struct Search<'a> {
    by_bottom: Vec<Option<&'a Arc>>,
    color: Color,
    word: Vec<usize>,
    used: Vec<bool>,
    len: usize,
    /// Arc steps taken so far, and the number the diagram needs.
    steps: usize,
    arcs: usize,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        if self.word.len() == self.len {
            return self.steps == self.arcs;
        }
        for v in 1..=self.len {
            if self.used[v] || !self.step_ok(v) {
                continue;
            }
            let step = self.is_arc_step(v);
            self.steps += usize::from(step);
            self.used[v] = true;
            self.word.push(v);
            if self.run() {
                return true;
            }
            self.word.pop();
            self.used[v] = false;
            self.steps -= usize::from(step);
        }
        false
    }

    fn is_arc_step(&self, v: usize) -> bool {
        match (self.word.last(), self.color) {
            (Some(&prev), Color::Green) => prev > v,
            (Some(&prev), Color::Red) => prev < v,
            (None, _) => false,
        }
    }

    /// Whether appending `v` keeps the word consistent with the diagram.
    fn step_ok(&self, v: usize) -> bool {
        let Some(&prev) = self.word.last() else { return true };
        let is_arc_step = self.is_arc_step(v);
        let (bottom, top) = if prev < v { (prev, v) } else { (v, prev) };
        let arc = self.by_bottom[bottom].filter(|a| a.top() == top);
        if !is_arc_step {
            return arc.is_none();
        }
        let Some(arc) = arc else { return false };
        // Values placed already lie on the left, the rest on the right.
        (bottom + 1..top).all(|k| {
            let want = if self.used[k] { Side::Left } else { Side::Right };
            arc.side_at(k) == Some(want)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn small_examples() {
        assert!(delta(&p("123")).is_empty());
        let d = delta(&p("321"));
        assert_eq!(d.len(), 2);
        assert!(d.arcs().iter().all(|a| a.sides().is_empty()));
        assert_eq!(delta_bar(&Permutation::identity(3)).len(), 3);
        assert!(delta_bar(&p("321")).is_empty());
    }

    #[test]
    fn full_example_arcs() {
        let w = p("53412");
        let green = delta(&w);
        let shapes: Vec<_> = green
            .arcs()
            .iter()
            .map(|a| (a.bottom(), a.top(), a.sides().to_vec()))
            .collect();
        assert_eq!(
            shapes,
            vec![(1, 4, vec![Side::Right, Side::Left]), (3, 5, vec![Side::Right])]
        );
        let red: Vec<_> = delta_bar(&w).arcs().iter().map(|a| (a.bottom(), a.top())).collect();
        assert_eq!(red, vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(delta_inverse(&ArcDiagram::empty(4)).unwrap(), p("1234"));
        let single = ArcDiagram::noncrossing(4, vec![Arc::short(Color::Green, 1)]).unwrap();
        assert_eq!(delta_inverse(&single).unwrap(), p("2134"));
        assert_eq!(delta_inverse(&delta(&p("53412"))).unwrap(), p("53412"));
        assert_eq!(delta_inverse(&delta_bar(&p("53412"))).unwrap(), p("53412"));
        assert_eq!(delta_inverse_colored(&ArcDiagram::empty(4), Color::Red).unwrap(), p("4321"));
    }

    #[test]
    fn bijective_on_s4() {
        let mut green = BTreeSet::new();
        let mut red = BTreeSet::new();
        for w in Permutation::all(3) {
            let g = delta(&w);
            let r = delta_bar(&w);
            assert_eq!(g.len(), w.descents().len());
            assert_eq!(delta_inverse(&g).unwrap(), w);
            assert_eq!(delta_inverse_colored(&r, Color::Red).unwrap(), w);
            green.insert(g);
            red.insert(r);
        }
        assert_eq!(green.len(), 24);
        assert_eq!(red.len(), 24);
    }

    #[test]
    fn crossing_diagram_has_no_preimage() {
        let d = ArcDiagram::two_colored(
            3,
            vec![Arc::short(Color::Green, 1), Arc::short(Color::Red, 2)],
        )
        .unwrap();
        assert!(delta_inverse(&d).is_err());
    }
}
