//! Arcs on a vertical column of nodes `1..=n+1` and noncrossing arc diagrams.
//!
//! An arc is stored up to combinatorial equivalence: its color, its two
//! endpoints and, for every node strictly between them, the side of the arc on
//! which that node lies. A node lying on the *left* of an arc means the arc
//! passes to the *right* of the node.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    /// Travels downward from its top endpoint; models unshifted bricks.
    Green,
    /// Travels upward from its bottom endpoint; models shifted bricks.
    Red,
}

/// Position of a node relative to an arc passing alongside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    color: Color,
    bottom: usize,
    top: usize,
    /// Sides of the interior nodes `bottom+1 .. top-1`, low to high.
    sides: Vec<Side>,
}

/// How a candidate subarc sits inside an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubarcRelation {
    NotSubarc,
    Subarc,
    PredecessorClosed,
    SuccessorClosed,
    /// The two arcs have the same support and sides.
    Both,
}

impl SubarcRelation {
    pub fn is_predecessor_closed(self) -> bool {
        matches!(self, SubarcRelation::PredecessorClosed | SubarcRelation::Both)
    }

    pub fn is_successor_closed(self) -> bool {
        matches!(self, SubarcRelation::SuccessorClosed | SubarcRelation::Both)
    }
}

impl Arc {
    pub fn new(color: Color, bottom: usize, top: usize, sides: Vec<Side>) -> Result<Self> {
        if bottom == 0 || bottom >= top {
            return Err(Error::InvalidArc(format!("endpoints {bottom}..{top}")));
        }
        if sides.len() != top - bottom - 1 {
            return Err(Error::InvalidArc(format!(
                "arc {bottom}..{top} needs {} sides, got {}",
                top - bottom - 1,
                sides.len()
            )));
        }
        Ok(Arc { color, bottom, top, sides })
    }

    /// Arc between adjacent nodes `i` and `i + 1`.
    pub fn short(color: Color, i: usize) -> Self {
        Arc { color, bottom: i, top: i + 1, sides: Vec::new() }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Source endpoint: top for green arcs, bottom for red ones.
    pub fn source(&self) -> usize {
        match self.color {
            Color::Green => self.top,
            Color::Red => self.bottom,
        }
    }

    /// Target endpoint: bottom for green arcs, top for red ones.
    pub fn target(&self) -> usize {
        match self.color {
            Color::Green => self.bottom,
            Color::Red => self.top,
        }
    }

    pub fn with_color(&self, color: Color) -> Arc {
        Arc { color, ..self.clone() }
    }

    pub fn is_interior(&self, node: usize) -> bool {
        self.bottom < node && node < self.top
    }

    pub fn contains(&self, node: usize) -> bool {
        self.bottom <= node && node <= self.top
    }

    /// Side of an interior node; `None` at endpoints and outside the support.
    pub fn side_at(&self, node: usize) -> Option<Side> {
        if self.is_interior(node) {
            Some(self.sides[node - self.bottom - 1])
        } else {
            None
        }
    }

    /// Same endpoints and sides, color ignored.
    pub fn same_shape(&self, other: &Arc) -> bool {
        self.bottom == other.bottom && self.top == other.top && self.sides == other.sides
    }

    /// The piece of this arc between nodes `bottom < top` inside its support.
    pub fn restrict(&self, bottom: usize, top: usize) -> Option<Arc> {
        if bottom < self.bottom || top > self.top || bottom >= top {
            return None;
        }
        let sides = (bottom + 1..top).map(|i| self.side_at(i).expect("interior")).collect();
        Some(Arc { color: self.color, bottom, top, sides })
    }

    /// Every node this arc passes alongside must be a node of the diagram.
    pub fn fits(&self, nodes: usize) -> bool {
        self.top <= nodes
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.color {
            Color::Green => 'g',
            Color::Red => 'r',
        };
        write!(f, "{c}{}-{}", self.bottom, self.top)?;
        if !self.sides.is_empty() {
            f.write_str("[")?;
            for s in &self.sides {
                write!(f, "{}", s.letter())?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Classifies `sub` against `arc`; colors are ignored.
pub fn subarc_relation(sub: &Arc, arc: &Arc) -> SubarcRelation {
    if sub.bottom < arc.bottom || sub.top > arc.top {
        return SubarcRelation::NotSubarc;
    }
    if (sub.bottom + 1..sub.top).any(|i| sub.side_at(i) != arc.side_at(i)) {
        return SubarcRelation::NotSubarc;
    }
    closure_of(arc, sub.bottom, sub.top)
}

/// Closure type of the (already verified) subarc of `arc` on `[bottom, top]`.
/// Also accepts `bottom == top`, an empty subarc sitting at one node.
pub(crate) fn closure_of(arc: &Arc, bottom: usize, top: usize) -> SubarcRelation {
    let at_bottom = arc.side_at(bottom);
    let at_top = arc.side_at(top);
    // Predecessor closed: the arc does not pass right of the bottom endpoint
    // (node not on its left) nor left of the top endpoint (node not on its right).
    let pred = at_bottom != Some(Side::Left) && at_top != Some(Side::Right);
    let succ = at_bottom != Some(Side::Right) && at_top != Some(Side::Left);
    match (pred, succ) {
        (true, true) => SubarcRelation::Both,
        (true, false) => SubarcRelation::PredecessorClosed,
        (false, true) => SubarcRelation::SuccessorClosed,
        (false, false) => SubarcRelation::Subarc,
    }
}

/// Local left/right evidence between two arcs over their common support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct Evidence {
    pub a_left_of_b: bool,
    pub b_left_of_a: bool,
}

pub(crate) fn evidence(a: &Arc, b: &Arc) -> Evidence {
    let lo = a.bottom.max(b.bottom);
    let hi = a.top.min(b.top);
    let mut ev = Evidence::default();
    for x in lo..=hi {
        match (a.side_at(x), b.side_at(x)) {
            (Some(sa), Some(sb)) if sa != sb => {
                // The arc with the node on its right passes on the left.
                if sa == Side::Right {
                    ev.a_left_of_b = true;
                } else {
                    ev.b_left_of_a = true;
                }
            }
            (None, Some(sb)) if a.contains(x) => match sb {
                Side::Left => ev.a_left_of_b = true,
                Side::Right => ev.b_left_of_a = true,
            },
            (Some(sa), None) if b.contains(x) => match sa {
                Side::Left => ev.b_left_of_a = true,
                Side::Right => ev.a_left_of_b = true,
            },
            _ => {}
        }
    }
    ev
}

/// Whether the two arcs can be drawn without crossing in their interiors.
pub fn noncrossing(a: &Arc, b: &Arc) -> bool {
    let ev = evidence(a, b);
    !(ev.a_left_of_b && ev.b_left_of_a)
}

/// For crossing arcs, a common subarc that is predecessor closed in one arc
/// and successor closed in the other. Candidates predecessor closed in `a`
/// are preferred, then longer ones, then lower ones. The witness takes the
/// color of `a`.
pub fn crossing_witness(a: &Arc, b: &Arc) -> Option<Arc> {
    if noncrossing(a, b) {
        return None;
    }
    let lo = a.bottom.max(b.bottom);
    let hi = a.top.min(b.top);
    let mut forward: Option<Arc> = None;
    let mut backward: Option<Arc> = None;
    for len in (1..=hi.saturating_sub(lo)).rev() {
        for bottom in lo..=hi - len {
            let Some(g) = a.restrict(bottom, bottom + len) else { continue };
            let ra = subarc_relation(&g, a);
            let rb = subarc_relation(&g, b);
            if forward.is_none() && ra.is_predecessor_closed() && rb.is_successor_closed() {
                forward = Some(g.clone());
            }
            if backward.is_none() && rb.is_predecessor_closed() && ra.is_successor_closed() {
                backward = Some(g);
            }
        }
    }
    forward.or(backward)
}

/// `b` is left of `a`, checked literally against the three defining conditions.
///
/// Errors when the arcs cross or when their interiors do not overlap.
pub fn is_left_of(b: &Arc, a: &Arc) -> Result<bool> {
    if a.bottom.max(b.bottom) >= a.top.min(b.top) {
        return Err(Error::ArcsDoNotOverlap);
    }
    if !noncrossing(a, b) {
        return Err(Error::ArcsCross);
    }
    // Nodes on the left of b that a passes alongside are on the left of a.
    for i in b.bottom + 1..b.top {
        if b.side_at(i) == Some(Side::Left) && a.is_interior(i) && a.side_at(i) != Some(Side::Left)
        {
            return Ok(false);
        }
    }
    // a passes the endpoints of b on the right (those nodes are left of a).
    for e in [b.bottom, b.top] {
        if a.is_interior(e) && a.side_at(e) != Some(Side::Left) {
            return Ok(false);
        }
    }
    // b passes the endpoints of a on the left (those nodes are right of b).
    for e in [a.bottom, a.top] {
        if b.is_interior(e) && b.side_at(e) != Some(Side::Right) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A set of arcs drawn on `nodes` nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcDiagram {
    nodes: usize,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// A single-color noncrossing diagram; checks (C1) and (C2).
    pub fn noncrossing(nodes: usize, arcs: Vec<Arc>) -> Result<Self> {
        let d = ArcDiagram::unchecked(nodes, arcs)?;
        if let Some(first) = d.arcs.first() {
            if d.arcs.iter().any(|a| a.color != first.color) {
                return Err(Error::InvalidDiagram("mixed colors".into()));
            }
        }
        d.check_compatible()?;
        Ok(d)
    }

    /// Any collection of arcs fitting on the nodes, each color class noncrossing.
    pub fn two_colored(nodes: usize, arcs: Vec<Arc>) -> Result<Self> {
        let d = ArcDiagram::unchecked(nodes, arcs)?;
        d.check_compatible()?;
        Ok(d)
    }

    fn unchecked(nodes: usize, mut arcs: Vec<Arc>) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::InvalidDiagram("no nodes".into()));
        }
        if let Some(a) = arcs.iter().find(|a| !a.fits(nodes)) {
            return Err(Error::InvalidDiagram(format!("arc {a} leaves {nodes} nodes")));
        }
        arcs.sort();
        arcs.dedup();
        Ok(ArcDiagram { nodes, arcs })
    }

    /// (C1) and (C2) for every same-colored pair.
    fn check_compatible(&self) -> Result<()> {
        for (i, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[i + 1..] {
                if a.color != b.color {
                    continue;
                }
                if a.bottom == b.bottom || a.top == b.top {
                    return Err(Error::InvalidDiagram(format!("{a} and {b} share an endpoint")));
                }
                if !noncrossing(a, b) {
                    return Err(Error::InvalidDiagram(format!("{a} and {b} cross")));
                }
            }
        }
        Ok(())
    }

    pub fn empty(nodes: usize) -> Self {
        ArcDiagram { nodes, arcs: Vec::new() }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Color shared by all arcs, if the diagram is nonempty and single-colored.
    pub fn color(&self) -> Option<Color> {
        let first = self.arcs.first()?.color;
        self.arcs.iter().all(|a| a.color == first).then_some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use Side::{Left as L, Right as R};

    fn green(b: usize, t: usize, s: &[Side]) -> Arc {
        Arc::new(Color::Green, b, t, s.to_vec()).unwrap()
    }

    fn red(b: usize, t: usize, s: &[Side]) -> Arc {
        Arc::new(Color::Red, b, t, s.to_vec()).unwrap()
    }

    // Arcs of the shared-endpoint example: brick 1>2>3<4 (green) and 1>2<3 (red).
    fn endpt_int() -> (Arc, Arc) {
        (green(1, 5, &[L, L, R]), red(1, 4, &[L, R]))
    }

    // Arcs of the two-sided extension example: brick 2>3<4 (green) and 1<2>3 (red).
    fn ext_pair() -> (Arc, Arc) {
        (green(2, 5, &[L, R]), red(1, 4, &[R, L]))
    }

    #[test]
    fn arc_validation() {
        assert!(Arc::new(Color::Green, 2, 2, vec![]).is_err());
        assert!(Arc::new(Color::Green, 0, 2, vec![L]).is_err());
        assert!(Arc::new(Color::Green, 1, 4, vec![L]).is_err());
        let a = green(1, 4, &[L, R]);
        assert_eq!(a.source(), 4);
        assert_eq!(a.target(), 1);
        assert_eq!(a.with_color(Color::Red).source(), 1);
        assert_eq!(a.side_at(2), Some(L));
        assert_eq!(a.side_at(1), None);
    }

    #[test]
    fn disjoint_arcs_do_not_cross() {
        let a = green(1, 2, &[]);
        let b = green(3, 4, &[]);
        assert!(noncrossing(&a, &b));
        assert_eq!(crossing_witness(&a, &b), None);
    }

    #[test]
    fn shared_endpoint_example_crosses() {
        let (a, b) = endpt_int();
        assert!(!noncrossing(&a, &b));
        let g = crossing_witness(&a, &b).unwrap();
        assert_eq!((g.bottom(), g.top()), (1, 3));
        assert_eq!(subarc_relation(&g, &a), SubarcRelation::PredecessorClosed);
        assert_eq!(subarc_relation(&g, &b), SubarcRelation::SuccessorClosed);
    }

    #[test]
    fn two_sided_example_crosses() {
        let (a, b) = ext_pair();
        assert!(!noncrossing(&a, &b));
        let g = crossing_witness(&a, &b).unwrap();
        assert_eq!((g.bottom(), g.top()), (2, 4));
        assert_eq!(g.sides(), &[L]);
        assert!(subarc_relation(&g, &b).is_predecessor_closed());
        assert!(subarc_relation(&g, &a).is_successor_closed());
    }

    #[test]
    fn subarc_relation_basics() {
        let a = green(1, 4, &[L, R]);
        assert_eq!(subarc_relation(&a, &a), SubarcRelation::Both);
        assert_eq!(
            subarc_relation(&green(1, 2, &[]), &green(3, 4, &[])),
            SubarcRelation::NotSubarc
        );
        assert_eq!(subarc_relation(&green(1, 3, &[R]), &a), SubarcRelation::NotSubarc);
        // Color does not matter.
        assert_eq!(subarc_relation(&red(1, 3, &[L]), &a), SubarcRelation::SuccessorClosed);
    }

    #[test]
    fn left_of_figure_configurations() {
        // Solid arc left of dashed arc in each configuration of the figure,
        // on five nodes. Solid arcs pass on the left of the nodes they pass.
        let cases = [
            // nested, solid outer passing left, dashed inner passing right
            (green(1, 5, &[R, R, R]), red(2, 4, &[L])),
            // nested, both passing left
            (green(1, 5, &[R, R, R]), red(2, 4, &[R])),
            // solid weaves around the dashed arc's interior node
            (green(1, 5, &[R, L, R]), red(2, 4, &[L])),
            // staggered: solid 2..5, dashed 1..3
            (green(2, 5, &[R, L]), red(1, 3, &[L])),
            // staggered: solid 1..3 passing left, dashed 2..5 passing right
            (green(1, 3, &[R]), red(2, 5, &[L, L])),
        ];
        for (solid, dashed) in cases {
            assert!(is_left_of(&solid, &dashed).unwrap(), "{solid} left of {dashed}");
            assert!(!is_left_of(&dashed, &solid).unwrap(), "{dashed} not left of {solid}");
        }
    }

    #[test]
    fn left_of_nested_inner_passing_left() {
        let outer = green(1, 5, &[L, L, L]);
        let inner = green(2, 4, &[R]);
        // Inner passes node 3 on its left; outer passes everything on the right.
        assert!(noncrossing(&outer, &inner));
        assert!(is_left_of(&inner, &outer).unwrap());
        assert!(!is_left_of(&outer, &inner).unwrap());
    }

    #[test]
    fn nested_arcs_weaving_cross() {
        let outer = green(1, 5, &[R, L, R]);
        let inner = green(2, 4, &[R]);
        assert!(!noncrossing(&outer, &inner));
    }

    #[test]
    fn left_of_errors() {
        let (a, b) = endpt_int();
        assert_eq!(is_left_of(&a, &b), Err(Error::ArcsCross));
        assert_eq!(
            is_left_of(&green(1, 2, &[]), &green(2, 3, &[])),
            Err(Error::ArcsDoNotOverlap)
        );
    }

    #[test]
    fn diagram_conditions() {
        assert!(ArcDiagram::noncrossing(3, vec![green(1, 2, &[]), green(2, 3, &[])]).is_ok());
        // (C1)
        assert!(ArcDiagram::noncrossing(3, vec![green(1, 2, &[]), green(1, 3, &[L])]).is_err());
        // (C2)
        let (a, _) = endpt_int();
        assert!(ArcDiagram::noncrossing(5, vec![a, green(2, 4, &[R])]).is_err());
        // mixed colors
        assert!(ArcDiagram::noncrossing(3, vec![green(1, 2, &[]), red(2, 3, &[])]).is_err());
        assert!(ArcDiagram::two_colored(3, vec![green(1, 2, &[]), red(1, 2, &[])]).is_ok());
        // out of range
        assert!(ArcDiagram::noncrossing(2, vec![green(1, 3, &[L])]).is_err());
    }
}
