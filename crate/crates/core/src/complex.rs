//! Oriented-edge alphabet of the hexagon decomposition of a pair of pants.
//!
//! A hyperbolic pair of pants with geodesic boundary decomposes into two
//! isometric right-angled hexagons glued along three seams (the mutual
//! perpendiculars between boundary components). Cutting this way produces a
//! 1-complex with six vertices (the seam feet), six boundary edges (each
//! boundary circle is split into two arcs by its seam feet) and three seams.
//! Closed curves are spelled in the 18 oriented edges of this complex, and
//! every other module works over that alphabet.
//!
//! Labeling convention (fixed here once; `pants-census alphabet dump` emits
//! the same data as JSON):
//!
//! * the front hexagon carries the boundary edges `x1, x3, x5`, the back
//!   hexagon carries `x2, x4, x6`; the two hexagons share the seams;
//! * boundary component `β1` is made of `{x1, x4}`, `β2` of `{x2, x5}` and
//!   `β3` of `{x3, x6}`;
//! * on boundary circle `βk` the two seam feet are named `Pk` and `Qk`, and
//!   both forward edges of `βk` run from `Pk` to `Qk`; consequently the
//!   continuation of `x_j` along its boundary circle is `x_{j+3}` reversed
//!   (indices mod 6);
//! * the seam `y_k` joins the two boundary components other than `βk`, with
//!   forward orientation from the lower-indexed component to the higher:
//!   `y1: Q2 -> P3`, `y2: P1 -> Q3`, `y3: Q1 -> P2`.
//!
//! With these choices the front hexagon reads `x1 y3 x5 y1 x3 y2⁻¹` and the
//! back hexagon `x4 y3 x2 y1 x6 y2⁻¹`, and for every `j` a seam runs between
//! the endpoint of `x_{j+3}⁻¹` and the start of `x_{j+2}⁻¹`.

use core::fmt;
use core::str::FromStr;

/// Number of oriented edges in the alphabet.
pub const EDGE_COUNT: usize = 18;
/// Number of oriented boundary edges (`x1..x6` and their reverses).
pub const BOUNDARY_EDGE_COUNT: usize = 12;

/// Boundary edge (on a boundary circle) or seam (joining two circles).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Boundary,
    Seam,
}

/// Direction in which an unoriented edge is traversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Reversed,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Forward => Orientation::Reversed,
            Orientation::Reversed => Orientation::Forward,
        }
    }
}

/// One oriented edge of the complex: `x1..x6`, `y1..y3` or a reverse.
///
/// The derived order (kind, then index, then orientation) is the total order
/// used for canonical rotations throughout: `x1 < x1- < x2 < ... < y3-`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    kind: EdgeKind,
    index: u8, // 1..=6 for boundary, 1..=3 for seams
    orientation: Orientation,
}

impl OrientedEdge {
    /// Forward boundary edge `x{index}` with `index` in `1..=6`.
    pub fn boundary(index: u8) -> OrientedEdge {
        assert!((1..=6).contains(&index), "boundary index out of range");
        OrientedEdge { kind: EdgeKind::Boundary, index, orientation: Orientation::Forward }
    }

    /// Forward seam `y{index}` with `index` in `1..=3`.
    pub fn seam(index: u8) -> OrientedEdge {
        assert!((1..=3).contains(&index), "seam index out of range");
        OrientedEdge { kind: EdgeKind::Seam, index, orientation: Orientation::Forward }
    }

    pub fn kind(self) -> EdgeKind {
        self.kind
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn orientation(self) -> Orientation {
        self.orientation
    }

    pub fn is_boundary(self) -> bool {
        self.kind == EdgeKind::Boundary
    }

    pub fn is_seam(self) -> bool {
        self.kind == EdgeKind::Seam
    }

    /// Same unoriented edge, opposite direction.
    pub fn reverse(self) -> OrientedEdge {
        OrientedEdge { orientation: self.orientation.flip(), ..self }
    }

    /// Dense code in `0..EDGE_COUNT`, compatible with the derived order.
    pub fn code(self) -> usize {
        let or = match self.orientation {
            Orientation::Forward => 0,
            Orientation::Reversed => 1,
        };
        match self.kind {
            EdgeKind::Boundary => (self.index as usize - 1) * 2 + or,
            EdgeKind::Seam => BOUNDARY_EDGE_COUNT + (self.index as usize - 1) * 2 + or,
        }
    }

    /// Inverse of [`code`](Self::code).
    pub fn from_code(code: usize) -> OrientedEdge {
        assert!(code < EDGE_COUNT, "edge code out of range");
        let (kind, rel) = if code < BOUNDARY_EDGE_COUNT {
            (EdgeKind::Boundary, code)
        } else {
            (EdgeKind::Seam, code - BOUNDARY_EDGE_COUNT)
        };
        let orientation = if rel % 2 == 0 { Orientation::Forward } else { Orientation::Reversed };
        OrientedEdge { kind, index: (rel / 2 + 1) as u8, orientation }
    }

    /// All 18 oriented edges in code order.
    pub fn all() -> impl Iterator<Item = OrientedEdge> {
        (0..EDGE_COUNT).map(OrientedEdge::from_code)
    }

    /// The 12 oriented boundary edges in code order.
    pub fn all_boundary() -> impl Iterator<Item = OrientedEdge> {
        (0..BOUNDARY_EDGE_COUNT).map(OrientedEdge::from_code)
    }
}

impl fmt::Display for OrientedEdge {
    /// Label grammar: `x1`..`x6`, `y1`..`y3`, with a trailing `-` for the
    /// reversed orientation (`x4-`, `y2-`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            EdgeKind::Boundary => 'x',
            EdgeKind::Seam => 'y',
        };
        write!(f, "{}{}", letter, self.index)?;
        if self.orientation == Orientation::Reversed {
            write!(f, "-")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error when parsing an edge label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseEdgeError {
    label: alloc::string::String,
}

impl fmt::Display for ParseEdgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid edge label {:?} (expected x1..x6, y1..y3, optionally suffixed with '-')",
            self.label
        )
    }
}

impl FromStr for OrientedEdge {
    type Err = ParseEdgeError;

    fn from_str(s: &str) -> Result<OrientedEdge, ParseEdgeError> {
        let err = || ParseEdgeError { label: alloc::string::String::from(s) };
        let (body, orientation) = match s.strip_suffix('-') {
            Some(body) => (body, Orientation::Reversed),
            None => (s, Orientation::Forward),
        };
        let mut chars = body.chars();
        let letter = chars.next().ok_or_else(err)?;
        let digit = chars.next().and_then(|c| c.to_digit(10)).ok_or_else(err)?;
        if chars.next().is_some() {
            return Err(err());
        }
        let edge = match letter {
            'x' if (1..=6).contains(&digit) => OrientedEdge::boundary(digit as u8),
            'y' if (1..=3).contains(&digit) => OrientedEdge::seam(digit as u8),
            _ => return Err(err()),
        };
        Ok(match orientation {
            Orientation::Forward => edge,
            Orientation::Reversed => edge.reverse(),
        })
    }
}

/// Which hexagon a boundary edge lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hexagon {
    Front,
    Back,
}

/// Seam feet: `Pk`/`Qk` are the two hexagon corners on boundary circle `βk`.
///
/// Both forward edges of `βk` run from `Pk` to `Qk`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    P1,
    Q1,
    P2,
    Q2,
    P3,
    Q3,
}

impl Vertex {
    /// Boundary component (1..=3) the vertex lies on.
    pub fn component(self) -> u8 {
        match self {
            Vertex::P1 | Vertex::Q1 => 1,
            Vertex::P2 | Vertex::Q2 => 2,
            Vertex::P3 | Vertex::Q3 => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Vertex::P1 => "P1",
            Vertex::Q1 => "Q1",
            Vertex::P2 => "P2",
            Vertex::Q2 => "Q2",
            Vertex::P3 => "P3",
            Vertex::Q3 => "Q3",
        }
    }

    fn p(component: u8) -> Vertex {
        match component {
            1 => Vertex::P1,
            2 => Vertex::P2,
            3 => Vertex::P3,
            _ => unreachable!("component out of range"),
        }
    }

    fn q(component: u8) -> Vertex {
        match component {
            1 => Vertex::Q1,
            2 => Vertex::Q2,
            3 => Vertex::Q3,
            _ => unreachable!("component out of range"),
        }
    }

    fn all() -> [Vertex; 6] {
        [Vertex::P1, Vertex::Q1, Vertex::P2, Vertex::Q2, Vertex::P3, Vertex::Q3]
    }
}

/// Incidence data of the edge complex, as dense per-edge lookup tables.
///
/// Construction derives every table from the labeling convention in the
/// module docs and then runs a consistency pass over the result; a failure
/// there is a bug in the tables, not a user error, and panics.
pub struct PantsComplex {
    start: [Vertex; EDGE_COUNT],
    end: [Vertex; EDGE_COUNT],
    seam_out: [OrientedEdge; 6], // oriented seam leaving each vertex, indexed by Vertex order
}

impl PantsComplex {
    pub fn new() -> PantsComplex {
        let mut start = [Vertex::P1; EDGE_COUNT];
        let mut end = [Vertex::P1; EDGE_COUNT];

        for j in 1..=6u8 {
            let c = component_of_index(j);
            let e = OrientedEdge::boundary(j);
            start[e.code()] = Vertex::p(c);
            end[e.code()] = Vertex::q(c);
            start[e.reverse().code()] = Vertex::q(c);
            end[e.reverse().code()] = Vertex::p(c);
        }

        // y1: Q2 -> P3, y2: P1 -> Q3, y3: Q1 -> P2.
        let seam_ends = [
            (Vertex::Q2, Vertex::P3),
            (Vertex::P1, Vertex::Q3),
            (Vertex::Q1, Vertex::P2),
        ];
        for (k, &(u, v)) in seam_ends.iter().enumerate() {
            let s = OrientedEdge::seam(k as u8 + 1);
            start[s.code()] = u;
            end[s.code()] = v;
            start[s.reverse().code()] = v;
            end[s.reverse().code()] = u;
        }

        let mut seam_out = [OrientedEdge::seam(1); 6];
        for (vi, &v) in Vertex::all().iter().enumerate() {
            let mut found = None;
            for e in OrientedEdge::all().filter(|e| e.is_seam()) {
                if start[e.code()] == v {
                    assert!(found.is_none(), "more than one seam leaves {v:?}");
                    found = Some(e);
                }
            }
            seam_out[vi] = found.expect("every vertex carries a seam");
        }

        let complex = PantsComplex { start, end, seam_out };
        complex.consistency_pass();
        complex
    }

    /// Start vertex of an oriented edge.
    pub fn start(&self, e: OrientedEdge) -> Vertex {
        self.start[e.code()]
    }

    /// End vertex of an oriented edge.
    pub fn end(&self, e: OrientedEdge) -> Vertex {
        self.end[e.code()]
    }

    /// The unique oriented seam leaving `v`.
    pub fn seam_from(&self, v: Vertex) -> OrientedEdge {
        self.seam_out[Vertex::all().iter().position(|&u| u == v).unwrap()]
    }

    /// Whether `b` may follow `a` on a closed curve: the edges are incident
    /// head-to-tail and do not backtrack. Seam-seam continuations never pass:
    /// the only seam at the far vertex of a seam is its own reverse.
    pub fn can_concatenate(&self, a: OrientedEdge, b: OrientedEdge) -> bool {
        b != a.reverse() && self.end(a) == self.start(b)
    }

    /// Next boundary edge when continuing along the same boundary circle:
    /// `x_j` with orientation `ε` continues as `x_{j+3}` with orientation
    /// `-ε` (indices mod 6). An involution.
    pub fn boundary_successor(&self, e: OrientedEdge) -> OrientedEdge {
        assert!(e.is_boundary(), "boundary_successor expects a boundary edge");
        let j = (e.index() % 6) + 3;
        let j = if j > 6 { j - 6 } else { j };
        OrientedEdge { kind: EdgeKind::Boundary, index: j, orientation: e.orientation().flip() }
    }

    /// The oriented seam `s` with `can_concatenate(a, s)` and
    /// `can_concatenate(s, b)`, if one exists. At most one does: a single
    /// seam leaves the endpoint of `a`. Edges on the same boundary component
    /// never have one.
    pub fn seam_between(&self, a: OrientedEdge, b: OrientedEdge) -> Option<OrientedEdge> {
        assert!(a.is_boundary() && b.is_boundary(), "seam_between expects boundary edges");
        let s = self.seam_from(self.end(a));
        (self.end(s) == self.start(b)).then_some(s)
    }

    /// Hexagon carrying a boundary edge: odd indices front, even back.
    pub fn hexagon_of(&self, e: OrientedEdge) -> Hexagon {
        assert!(e.is_boundary(), "hexagon_of expects a boundary edge");
        if e.index() % 2 == 1 {
            Hexagon::Front
        } else {
            Hexagon::Back
        }
    }

    /// Boundary component (1..=3) carrying a boundary edge.
    pub fn component_of(&self, e: OrientedEdge) -> u8 {
        assert!(e.is_boundary(), "component_of expects a boundary edge");
        component_of_index(e.index())
    }

    /// Pair of components joined by a seam, ascending.
    pub fn seam_joins(&self, s: OrientedEdge) -> (u8, u8) {
        assert!(s.is_seam(), "seam_joins expects a seam");
        let a = self.start(s).component();
        let b = self.end(s).component();
        (a.min(b), a.max(b))
    }

    /// Edge cycles of the two hexagon faces, front then back, as based
    /// loops: `x1 y3 x5 y1 x3 y2⁻¹` and `x4 y3 x2 y1 x6 y2⁻¹`.
    pub fn hexagon_relators(&self) -> [[OrientedEdge; 6]; 2] {
        let x = OrientedEdge::boundary;
        let y = OrientedEdge::seam;
        [
            [x(1), y(3), x(5), y(1), x(3), y(2).reverse()],
            [x(4), y(3), x(2), y(1), x(6), y(2).reverse()],
        ]
    }

    /// Validates the derived tables against the defining constraints.
    fn consistency_pass(&self) {
        // Reversal is an involution exchanging endpoints.
        for e in OrientedEdge::all() {
            assert_eq!(e.reverse().reverse(), e);
            assert_eq!(self.start(e), self.end(e.reverse()));
        }

        // Each boundary component: two unoriented edges, one per hexagon.
        for c in 1..=3u8 {
            let edges: alloc::vec::Vec<_> = (1..=6u8)
                .filter(|&j| component_of_index(j) == c)
                .map(OrientedEdge::boundary)
                .collect();
            assert_eq!(edges.len(), 2);
            assert_ne!(self.hexagon_of(edges[0]), self.hexagon_of(edges[1]));
        }

        // Boundary successor: an involution that concatenates, alternates
        // hexagons and stays on one component.
        for e in OrientedEdge::all_boundary() {
            let s = self.boundary_successor(e);
            assert!(self.can_concatenate(e, s));
            assert_eq!(self.boundary_successor(s), e);
            assert_ne!(self.hexagon_of(e), self.hexagon_of(s));
            assert_eq!(self.component_of(e), self.component_of(s));
            // ... and it is the only boundary continuation of e.
            for b in OrientedEdge::all_boundary() {
                if self.can_concatenate(e, b) {
                    assert_eq!(b, s, "boundary continuation of {e} is not unique");
                }
            }
        }

        // For every j a seam runs between x_{j+3}⁻¹ and x_{j+2}⁻¹.
        for j in 1..=6u8 {
            let a = self.boundary_successor(OrientedEdge::boundary(j)); // x_{j+3}⁻¹
            let b = OrientedEdge::boundary(wrap6(j + 2)).reverse();
            assert!(
                self.seam_between(a, b).is_some(),
                "missing seam between {a} and {b}"
            );
        }

        // seam_between agrees with can_concatenate, and seams never join a
        // component to itself.
        for a in OrientedEdge::all_boundary() {
            for b in OrientedEdge::all_boundary() {
                let direct = self.seam_between(a, b);
                let mut scan = None;
                for s in OrientedEdge::all().filter(|s| s.is_seam()) {
                    if self.can_concatenate(a, s) && self.can_concatenate(s, b) {
                        assert!(scan.is_none(), "connecting seam not unique");
                        scan = Some(s);
                    }
                }
                assert_eq!(direct, scan);
                if let Some(s) = direct {
                    let (lo, hi) = self.seam_joins(s);
                    assert_ne!(lo, hi);
                    assert_ne!(self.component_of(a), self.component_of(b));
                }
            }
        }

        // No seam can follow a seam.
        for a in OrientedEdge::all().filter(|e| e.is_seam()) {
            for b in OrientedEdge::all().filter(|e| e.is_seam()) {
                assert!(!self.can_concatenate(a, b));
            }
        }

        // Every oriented edge has exactly two continuations.
        for e in OrientedEdge::all() {
            let outs = OrientedEdge::all().filter(|&b| self.can_concatenate(e, b)).count();
            assert_eq!(outs, 2, "{e} must have exactly two continuations");
        }

        // Both hexagon faces close up and together use all nine edges.
        for cycle in self.hexagon_relators() {
            for i in 0..6 {
                let a = cycle[i];
                let b = cycle[(i + 1) % 6];
                assert!(self.can_concatenate(a, b), "hexagon cycle breaks at {a} -> {b}");
            }
        }
        let [front, back] = self.hexagon_relators();
        for e in front.iter().chain(back.iter()) {
            if e.is_boundary() {
                let hex = if front.contains(e) || front.contains(&e.reverse()) {
                    Hexagon::Front
                } else {
                    Hexagon::Back
                };
                assert_eq!(self.hexagon_of(*e), hex);
            }
        }
    }
}

impl Default for PantsComplex {
    fn default() -> PantsComplex {
        PantsComplex::new()
    }
}

fn component_of_index(j: u8) -> u8 {
    (j - 1) % 3 + 1
}

fn wrap6(j: u8) -> u8 {
    (j - 1) % 6 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn labels_round_trip() {
        for e in OrientedEdge::all() {
            let s = e.to_string();
            assert_eq!(s.parse::<OrientedEdge>().unwrap(), e);
            assert_eq!(OrientedEdge::from_code(e.code()), e);
        }
        assert!("x7".parse::<OrientedEdge>().is_err());
        assert!("y4".parse::<OrientedEdge>().is_err());
        assert!("x1--".parse::<OrientedEdge>().is_err());
        assert!("z1".parse::<OrientedEdge>().is_err());
        assert!("".parse::<OrientedEdge>().is_err());
    }

    #[test]
    fn alphabet_counts() {
        let cx = PantsComplex::new();
        assert_eq!(OrientedEdge::all().count(), 18);
        assert_eq!(OrientedEdge::all().filter(|e| e.is_boundary()).count(), 12);
        assert_eq!(OrientedEdge::all().filter(|e| e.is_seam()).count(), 6);
        // Front hexagon: x1, x3, x5. Back: x2, x4, x6.
        for j in [1u8, 3, 5] {
            assert_eq!(cx.hexagon_of(OrientedEdge::boundary(j)), Hexagon::Front);
        }
        for j in [2u8, 4, 6] {
            assert_eq!(cx.hexagon_of(OrientedEdge::boundary(j)), Hexagon::Back);
        }
    }

    #[test]
    fn total_order_is_boundary_first() {
        let sorted: alloc::vec::Vec<_> = OrientedEdge::all().collect();
        let mut reordered = sorted.clone();
        reordered.sort();
        assert_eq!(sorted, reordered);
        assert!(OrientedEdge::boundary(6).reverse() < OrientedEdge::seam(1));
        assert!(OrientedEdge::boundary(1) < OrientedEdge::boundary(1).reverse());
    }

    #[test]
    fn successor_matches_pairing() {
        let cx = PantsComplex::new();
        let x = OrientedEdge::boundary;
        assert_eq!(cx.boundary_successor(x(1)), x(4).reverse());
        assert_eq!(cx.boundary_successor(x(4)), x(1).reverse());
        assert_eq!(cx.boundary_successor(x(4).reverse()), x(1));
        assert_eq!(cx.boundary_successor(x(6)), x(3).reverse());
        assert_eq!(cx.component_of(x(1)), 1);
        assert_eq!(cx.component_of(x(5)), 2);
        assert_eq!(cx.component_of(x(6)), 3);
    }

    #[test]
    fn seam_between_examples() {
        let cx = PantsComplex::new();
        let x = OrientedEdge::boundary;
        // A seam joins x4⁻¹ to x3⁻¹ (the j = 1 instance of the constraint).
        let s = cx.seam_between(x(4).reverse(), x(3).reverse()).unwrap();
        assert_eq!(s, OrientedEdge::seam(2));
        // Same boundary component: no connecting seam.
        assert_eq!(cx.seam_between(x(1), x(4).reverse()), None);
        // Seam indices name the component they avoid.
        for k in 1..=3u8 {
            let (a, b) = cx.seam_joins(OrientedEdge::seam(k));
            assert!(a != k && b != k && a != b);
        }
    }

    #[test]
    fn concatenation_respects_reversal() {
        let cx = PantsComplex::new();
        for a in OrientedEdge::all() {
            for b in OrientedEdge::all() {
                assert_eq!(
                    cx.can_concatenate(a, b),
                    cx.can_concatenate(b.reverse(), a.reverse()),
                    "reversal anti-symmetry fails for {a}, {b}"
                );
            }
        }
    }
}
