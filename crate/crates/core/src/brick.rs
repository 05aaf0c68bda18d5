//! String bricks of `RA_n` and their arc combinatorics.
//!
//! `RA_n` has arrows `a_i: i -> i+1` and `a_i*: i+1 -> i` with every 2-cycle
//! in the ideal, so a brick is an interval `[p, q]` of vertices together with
//! a choice of which of the two arrows acts along each edge.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arc::{subarc_relation, Arc, Color, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    /// `a_i: i -> i+1` acts.
    Down,
    /// `a_i*: i+1 -> i` acts.
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StringBrick {
    n: usize,
    bottom: usize,
    top: usize,
    /// Action on each edge `i -> i+1` for `i` in `bottom..top`.
    actions: Vec<Action>,
}

impl StringBrick {
    pub fn new(n: usize, support: (usize, usize), actions: Vec<Action>) -> Result<Self> {
        let (p, q) = support;
        if p == 0 || p > q || q > n {
            return Err(Error::InvalidBrick(format!("support [{p},{q}] for n = {n}")));
        }
        if actions.len() != q - p {
            return Err(Error::InvalidBrick(format!(
                "support [{p},{q}] needs {} actions, got {}",
                q - p,
                actions.len()
            )));
        }
        Ok(StringBrick { n, bottom: p, top: q, actions })
    }

    pub fn simple(n: usize, i: usize) -> Result<Self> {
        StringBrick::new(n, (i, i), Vec::new())
    }

    /// Parses the walk notation, e.g. `1<2>3` for the brick with `2 -> 1` and
    /// `2 -> 3`. Vertices must be consecutive and increasing.
    pub fn parse_walk(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::InvalidBrick(format!("cannot read walk {text:?}"));
        let mut vertices = Vec::new();
        let mut actions = Vec::new();
        let mut number = String::new();
        for c in text.trim().chars() {
            match c {
                '0'..='9' => number.push(c),
                '<' | '>' => {
                    vertices.push(number.parse::<usize>().map_err(|_| bad())?);
                    number.clear();
                    actions.push(if c == '>' { Action::Down } else { Action::Up });
                }
                _ => return Err(bad()),
            }
        }
        vertices.push(number.parse::<usize>().map_err(|_| bad())?);
        if vertices.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(bad());
        }
        StringBrick::new(n, (vertices[0], *vertices.last().expect("nonempty")), actions)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> (usize, usize) {
        (self.bottom, self.top)
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    pub fn is_simple(&self) -> bool {
        self.bottom == self.top
    }

    pub fn dimension(&self) -> usize {
        self.top - self.bottom + 1
    }

    /// Dimension vector indexed by vertex `1..=n` (entry 0 unused).
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.n).map(|v| usize::from(self.bottom <= v && v <= self.top)).collect()
    }

    /// The arc of the given color corresponding to this brick.
    pub fn to_arc(&self, color: Color) -> Arc {
        let sides = self
            .actions
            .iter()
            .map(|a| match a {
                Action::Down => Side::Left,
                Action::Up => Side::Right,
            })
            .collect();
        Arc::new(color, self.bottom, self.top + 1, sides).expect("support gives a valid arc")
    }

    /// Walk notation such as `1<2>3`.
    pub fn walk(&self) -> String {
        let mut s = format!("{}", self.bottom);
        for (k, a) in self.actions.iter().enumerate() {
            s.push(if *a == Action::Down { '>' } else { '<' });
            s.push_str(&format!("{}", self.bottom + k + 1));
        }
        s
    }

    /// Stacked name drawing the string with every arrow pointing one row down,
    /// e.g. `2/13` for `1<2>3`. Vertices above 9 are bracketed.
    pub fn stacked(&self) -> String {
        let mut level: Vec<i64> = Vec::with_capacity(self.dimension());
        level.push(0);
        for a in &self.actions {
            let last = *level.last().expect("nonempty");
            level.push(if *a == Action::Down { last - 1 } else { last + 1 });
        }
        let hi = *level.iter().max().expect("nonempty");
        let lo = *level.iter().min().expect("nonempty");
        let mut rows = Vec::new();
        for row in (lo..=hi).rev() {
            let mut r = String::new();
            for (k, &l) in level.iter().enumerate() {
                if l == row {
                    let v = self.bottom + k;
                    if v < 10 {
                        r.push_str(&format!("{v}"));
                    } else {
                        r.push_str(&format!("({v})"));
                    }
                }
            }
            rows.push(r);
        }
        rows.join("/")
    }
}

impl fmt::Display for StringBrick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.stacked())
    }
}

/// The brick of an arc on `n + 1` nodes.
pub fn sigma(arc: &Arc, n: usize) -> Result<StringBrick> {
    if !arc.fits(n + 1) {
        return Err(Error::InvalidArc(format!("{arc} does not fit on {} nodes", n + 1)));
    }
    let mut actions = Vec::with_capacity(arc.top() - arc.bottom());
    // Interior node `i + 1` decides the action on the edge `i -> i+1`.
    for i in arc.bottom()..arc.top() - 1 {
        let node = i + 1;
        let side = arc.side_at(node).expect("interior");
        actions.push(if side == Side::Left { Action::Down } else { Action::Up });
    }
    StringBrick::new(n, (arc.bottom(), arc.top() - 1), actions)
}

/// Inverse of [`sigma`] for a chosen color.
pub fn sigma_inverse(brick: &StringBrick, color: Color) -> Arc {
    brick.to_arc(color)
}

/// All bricks of `RA_n`, ordered by support then actions.
pub fn enumerate_bricks(n: usize) -> Vec<StringBrick> {
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p..=n {
            let k = q - p;
            for mask in 0u64..(1 << k) {
                let actions = (0..k)
                    .map(|j| if mask >> (k - 1 - j) & 1 == 0 { Action::Down } else { Action::Up })
                    .collect();
                out.push(StringBrick { n, bottom: p, top: q, actions });
            }
        }
    }
    out
}

/// Expected number of bricks of `RA_n`.
pub fn brick_count(n: usize) -> usize {
    (1usize << (n + 1)) - n - 2
}

/// Common subarcs indexing a basis of `Hom(S, T)`: predecessor closed in the
/// arc of `S` (a quotient of `S`) and successor closed in the arc of `T` (a
/// submodule of `T`).
pub fn hom_arc_basis(s: &StringBrick, t: &StringBrick) -> Vec<Arc> {
    let a = s.to_arc(Color::Green);
    let b = t.to_arc(Color::Green);
    let lo = a.bottom().max(b.bottom());
    let hi = a.top().min(b.top());
    let mut out = Vec::new();
    for bottom in lo..hi {
        for top in bottom + 1..=hi {
            let Some(g) = a.restrict(bottom, top) else { continue };
            if subarc_relation(&g, &a).is_predecessor_closed()
                && subarc_relation(&g, &b).is_successor_closed()
            {
                out.push(g);
            }
        }
    }
    out
}

/// An extension detected by arcs: the middle term is `first ⊕ second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcExtension {
    /// Common subarc; `None` for an extension by a single arrow.
    pub gamma: Option<Arc>,
    pub first: Arc,
    pub second: Option<Arc>,
}

/// Arc-level witnesses of `Ext¹(S, T) ≠ 0`, one per two-sided arc map from
/// the arc of `T` to the arc of `S`.
pub fn ext_arc_witnesses(s: &StringBrick, t: &StringBrick) -> Vec<ArcExtension> {
    let alpha = s.to_arc(Color::Green);
    let beta = t.to_arc(Color::Green);
    let mut out = Vec::new();

    // Empty common subarc: the supports are adjacent and one arrow glues them.
    if alpha.top() == beta.bottom() {
        out.push(ArcExtension {
            gamma: None,
            first: glue(&alpha, &beta, Side::Left),
            second: None,
        });
    }
    if alpha.bottom() == beta.top() {
        out.push(ArcExtension {
            gamma: None,
            first: glue(&beta, &alpha, Side::Right),
            second: None,
        });
    }

    let lo = alpha.bottom().max(beta.bottom());
    let hi = alpha.top().min(beta.top());
    for b in lo..hi {
        for t in b + 1..=hi {
            let Some(g) = alpha.restrict(b, t) else { continue };
            if !subarc_relation(&g, &beta).is_predecessor_closed()
                || !subarc_relation(&g, &alpha).is_successor_closed()
            {
                continue;
            }
            let alpha1 = alpha.bottom() < b;
            let alpha2 = t < alpha.top();
            let beta1 = beta.bottom() < b;
            let beta2 = t < beta.top();
            if !(alpha1 || beta1) || !(alpha2 || beta2) {
                continue;
            }
            let e1 = splice(&alpha, &g, &beta);
            let e2 = splice(&beta, &g, &alpha);
            let (first, second) = match (e1, e2) {
                (Some(x), y) => (x, y),
                (None, Some(y)) => (y, None),
                (None, None) => continue,
            };
            out.push(ArcExtension { gamma: Some(g), first, second });
        }
    }
    out
}

/// Middle term of a nonsplit extension `T ↪ E ↠ S` found by arcs, if any.
pub fn ext_nonzero_by_arcs(s: &StringBrick, t: &StringBrick) -> Option<(Arc, Option<Arc>)> {
    ext_arc_witnesses(s, t).into_iter().next().map(|e| (e.first, e.second))
}

/// `lower` followed by `upper`, which meet at the shared node with `side`.
fn glue(lower: &Arc, upper: &Arc, side: Side) -> Arc {
    let mut sides = lower.sides().to_vec();
    sides.push(side);
    sides.extend_from_slice(upper.sides());
    Arc::new(Color::Green, lower.bottom(), upper.top(), sides).expect("glued arc")
}

/// The arc made of `low` below `g`, then `g`, then `high` above `g`.
/// `None` when the result would be the empty arc.
fn splice(low: &Arc, g: &Arc, high: &Arc) -> Option<Arc> {
    let bottom = low.bottom();
    let top = high.top();
    if bottom >= top {
        return None;
    }
    let sides = (bottom + 1..top)
        .map(|x| {
            if x < g.bottom() || (x == g.bottom() && x > low.bottom()) {
                low.side_at(x)
            } else if x > g.top() || (x == g.top() && x < high.top()) {
                high.side_at(x)
            } else {
                g.side_at(x)
            }
            .expect("interior node of the spliced arc")
        })
        .collect();
    Some(Arc::new(Color::Green, bottom, top, sides).expect("spliced arc"))
}

/// Pieces of `arc` left after removing its subarc `g`, as arcs.
pub fn arc_remainder(arc: &Arc, g: &Arc) -> Vec<Arc> {
    let mut out = Vec::new();
    if arc.bottom() < g.bottom() {
        out.extend(arc.restrict(arc.bottom(), g.bottom()));
    }
    if g.top() < arc.top() {
        out.extend(arc.restrict(g.top(), arc.top()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(n: usize, s: &str) -> StringBrick {
        StringBrick::parse_walk(n, s).unwrap()
    }

    #[test]
    fn names() {
        assert_eq!(w(3, "1<2>3").stacked(), "2/13");
        assert_eq!(w(4, "2>3>4").stacked(), "2/3/4");
        assert_eq!(w(3, "1<2<3").stacked(), "3/2/1");
        assert_eq!(w(4, "1>2>3<4").stacked(), "1/24/3");
        assert_eq!(w(4, "2>3<4").stacked(), "24/3");
        assert_eq!(w(4, "1<2>3").walk(), "1<2>3");
        assert!(StringBrick::parse_walk(4, "1>3").is_err());
        assert!(StringBrick::parse_walk(2, "2>3").is_err());
    }

    #[test]
    fn sigma_examples() {
        let a = Arc::short(Color::Green, 1);
        let s = sigma(&a, 3).unwrap();
        assert!(s.is_simple());
        assert_eq!(s.support(), (1, 1));
        let a = Arc::new(Color::Green, 1, 4, vec![Side::Left, Side::Right]).unwrap();
        let s = sigma(&a, 3).unwrap();
        assert_eq!(s.support(), (1, 3));
        assert_eq!(s.actions(), &[Action::Down, Action::Up]);
        assert_eq!(sigma_inverse(&s, Color::Green), a);
    }

    #[test]
    fn sigma_round_trip() {
        for n in 1..=6 {
            for b in enumerate_bricks(n) {
                for c in [Color::Green, Color::Red] {
                    let a = sigma_inverse(&b, c);
                    assert_eq!(a.color(), c);
                    assert_eq!(sigma(&a, n).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn counts() {
        let expected = [1, 4, 11, 26, 57, 120];
        for (n, &e) in (1..=6).zip(expected.iter()) {
            assert_eq!(enumerate_bricks(n).len(), e);
            assert_eq!(brick_count(n), e);
        }
    }

    #[test]
    fn hom_basis_examples() {
        let s = w(4, "1<2>3");
        assert_eq!(hom_arc_basis(&s, &s), vec![s.to_arc(Color::Green)]);
        // 1/24/3 to 13/2 factors through the brick on {1,2}.
        let a = w(4, "1>2>3<4");
        let b = w(4, "1>2<3");
        let basis = hom_arc_basis(&a, &b);
        assert_eq!(basis.len(), 1);
        let image = sigma(&basis[0], 4).unwrap();
        assert_eq!(image.walk(), "1>2");
        // Unshifted bricks of one collection are hom-orthogonal.
        let x = w(4, "1<2>3");
        let y = w(4, "3<4");
        assert!(hom_arc_basis(&x, &y).is_empty());
        assert!(hom_arc_basis(&y, &x).is_empty());
    }

    #[test]
    fn ext_examples() {
        let s = w(4, "2>3<4");
        let t = w(4, "1<2>3");
        let (e1, e2) = ext_nonzero_by_arcs(&s, &t).unwrap();
        let mut names = vec![sigma(&e1, 4).unwrap().stacked(), sigma(&e2.unwrap(), 4).unwrap().stacked()];
        names.sort();
        assert_eq!(names, vec!["2/3", "24/13"]);
        for b in enumerate_bricks(3) {
            assert!(ext_nonzero_by_arcs(&b, &b).is_none());
        }
        // Adjacent supports glue along one arrow.
        let lower = w(4, "1<2");
        let upper = w(4, "3>4");
        let (e, rest) = ext_nonzero_by_arcs(&lower, &upper).unwrap();
        assert!(rest.is_none());
        assert_eq!(sigma(&e, 4).unwrap().walk(), "1<2>3>4");
        let (e, _) = ext_nonzero_by_arcs(&upper, &lower).unwrap();
        assert_eq!(sigma(&e, 4).unwrap().walk(), "1<2<3>4");
    }

    #[test]
    fn remainder_pieces() {
        let a = w(4, "1>2>3<4").to_arc(Color::Green);
        let g = a.restrict(2, 4).unwrap();
        let rest = arc_remainder(&a, &g);
        assert_eq!(rest.len(), 2);
    }
}
