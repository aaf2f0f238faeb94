//! Hexagon side lengths, holonomy matrices, and geodesic lengths.
//!
//! A pair of pants with boundary lengths `(L1, L2, L3)` is two congruent
//! right-angled hexagons; alternate hexagon sides are the boundary halves
//! `L_k/2` and the seams `σ_k`, where the seam opposite the `L_k/2` side
//! joins the other two boundary circles. The holonomy sends `a` to a
//! diagonal matrix translating along the imaginary axis by `L1` and `b` to
//! the unique conjugate translation (up to reflection, fixed by a sign
//! convention) making the third boundary trace come out right.

use core::fmt;

use libm::{acosh, cosh, exp, fabs, sinh};

use crate::complex::{EdgeKind, OrientedEdge};
use crate::group::{FreeGroupElement, FreeLetter};
use crate::mobius::Mat2;

/// Relative tolerance for all floating-point identities in this module.
pub const TOLERANCE: f64 = 1e-9;

/// Refuse holonomy products beyond this many letters: traces stay far from
/// `f64` overflow below it for any desk-scale metric.
pub const MAX_TRACE_LETTERS: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricError {
    NonPositiveLength,
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricError::NonPositiveLength => {
                write!(f, "boundary lengths must be positive and finite")
            }
        }
    }
}

/// Edge lengths of the hexagon decomposition for given boundary lengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PantsMetric {
    boundary_lengths: [f64; 3],
    boundary_edge_lengths: [f64; 3],
    seam_lengths: [f64; 3],
    l_max: f64,
    l_min: f64,
}

/// Solves the right-angled hexagons: `cosh σ_k = (cosh(L_k/2) +
/// cosh(L_i/2)·cosh(L_j/2)) / (sinh(L_i/2)·sinh(L_j/2))` for `{i,j,k}` a
/// permutation of `{1,2,3}`.
pub fn solve_hexagon(l1: f64, l2: f64, l3: f64) -> Result<PantsMetric, MetricError> {
    let boundary_lengths = [l1, l2, l3];
    for &l in &boundary_lengths {
        if !(l > 0.0) || !l.is_finite() {
            return Err(MetricError::NonPositiveLength);
        }
    }
    let half = [l1 / 2.0, l2 / 2.0, l3 / 2.0];
    let ch: [f64; 3] = [cosh(half[0]), cosh(half[1]), cosh(half[2])];
    let sh: [f64; 3] = [sinh(half[0]), sinh(half[1]), sinh(half[2])];
    let mut seam_lengths = [0.0; 3];
    for k in 0..3 {
        let i = (k + 1) % 3;
        let j = (k + 2) % 3;
        seam_lengths[k] = acosh((ch[k] + ch[i] * ch[j]) / (sh[i] * sh[j]));
    }
    let mut l_max = 0.0f64;
    for &x in half.iter().chain(seam_lengths.iter()) {
        l_max = l_max.max(x);
    }
    let l_min = half[0].min(half[1]).min(half[2]);
    Ok(PantsMetric {
        boundary_lengths,
        boundary_edge_lengths: half,
        seam_lengths,
        l_max,
        l_min,
    })
}

impl PantsMetric {
    /// The equilateral case `L_k = 2·arccosh(2)`: every boundary edge and
    /// every seam has length `arccosh(2)`.
    pub fn symmetric() -> PantsMetric {
        let l = 2.0 * acosh(2.0);
        solve_hexagon(l, l, l).expect("symmetric metric is valid")
    }

    pub fn boundary_lengths(&self) -> [f64; 3] {
        self.boundary_lengths
    }

    /// Half-lengths `L_k/2`; each boundary circle is split into two edges
    /// of this length by the seam feet.
    pub fn boundary_edge_lengths(&self) -> [f64; 3] {
        self.boundary_edge_lengths
    }

    /// `σ_k` joins the two boundary circles other than `β_k`.
    pub fn seam_lengths(&self) -> [f64; 3] {
        self.seam_lengths
    }

    /// Longest edge, boundary or seam.
    pub fn l_max(&self) -> f64 {
        self.l_max
    }

    /// Shortest boundary edge (seams excluded).
    pub fn l_min(&self) -> f64 {
        self.l_min
    }

    /// Length of one edge of the decomposition.
    pub fn edge_length(&self, e: OrientedEdge) -> f64 {
        match e.kind() {
            EdgeKind::Boundary => {
                let component = (e.index() as usize - 1) % 3;
                self.boundary_edge_lengths[component]
            }
            EdgeKind::Seam => self.seam_lengths[e.index() as usize - 1],
        }
    }
}

/// Matrices for the two generators; determinants are 1 and the three
/// boundary traces match the metric.
#[derive(Clone, Copy, Debug)]
pub struct Holonomy {
    gen_a: Mat2,
    gen_b: Mat2,
}

/// Builds the normal form: `gen_a = diag(e^{L1/2}, e^{-L1/2})`, and
/// `gen_b` the translation of length `L2` whose axis crosses the imaginary
/// axis at distance `σ3` (the seam between the first two boundaries),
/// with positive upper-right entry. The trace identities below then force
/// `tr(gen_a·gen_b) = -2·cosh(L3/2)` exactly, which is verified rather
/// than solved for.
pub fn build_holonomy(m: &PantsMetric) -> Holonomy {
    let [l1, l2, l3] = m.boundary_lengths();
    let u = exp(l1 / 2.0);
    let gen_a = Mat2::new(u, 0.0, 0.0, 1.0 / u);

    let s = m.seam_lengths()[2] / 2.0;
    let (c, sh) = (cosh(s), sinh(s));
    let v = exp(l2 / 2.0);
    let off = c * sh * (v - 1.0 / v);
    let gen_b = Mat2::new(c * c / v - sh * sh * v, off, -off, c * c * v - sh * sh / v);

    let h = Holonomy { gen_a, gen_b };
    let check = |value: f64, expected: f64, what: &str| {
        let scale = 1.0 + fabs(expected);
        assert!(
            fabs(value - expected) <= TOLERANCE * scale,
            "holonomy normalization broke: {what}"
        );
    };
    check(gen_a.det(), 1.0, "det a");
    check(gen_b.det(), 1.0, "det b");
    check(gen_a.trace(), 2.0 * cosh(l1 / 2.0), "trace a");
    check(gen_b.trace(), 2.0 * cosh(l2 / 2.0), "trace b");
    check(gen_a.mul(gen_b).trace(), -2.0 * cosh(l3 / 2.0), "trace ab");
    assert!(gen_b.b > 0.0, "sign convention on gen_b");
    h
}

impl Holonomy {
    pub fn gen_a(&self) -> Mat2 {
        self.gen_a
    }

    pub fn gen_b(&self) -> Mat2 {
        self.gen_b
    }

    pub fn letter_matrix(&self, l: FreeLetter) -> Mat2 {
        match l {
            FreeLetter::A => self.gen_a,
            FreeLetter::AInv => self.gen_a.inverse(),
            FreeLetter::B => self.gen_b,
            FreeLetter::BInv => self.gen_b.inverse(),
        }
    }

    /// Product of the letter matrices of `g`.
    pub fn matrix_of(&self, g: &FreeGroupElement) -> Mat2 {
        g.letters()
            .iter()
            .fold(Mat2::IDENTITY, |m, &l| m.mul(self.letter_matrix(l)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthError {
    IdentityElement,
    /// `|trace| ≤ 2`: cannot happen for a nontrivial element of a pants
    /// group with positive boundary lengths; signals a bug upstream.
    ParabolicOrElliptic,
    /// The word is long enough that the trace could leave `f64` range.
    TraceOverflow,
}

impl fmt::Display for LengthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthError::IdentityElement => write!(f, "the identity has no geodesic"),
            LengthError::ParabolicOrElliptic => {
                write!(f, "trace is at most 2 in absolute value; not a hyperbolic element")
            }
            LengthError::TraceOverflow => write!(
                f,
                "word exceeds {MAX_TRACE_LETTERS} letters; trace could overflow"
            ),
        }
    }
}

/// Translation length `2·arccosh(|tr ρ(g)|/2)` of the geodesic in the free
/// homotopy class of `g`. Conjugation-invariant; the cyclic reduction is
/// what actually gets multiplied out.
pub fn geodesic_length(g: &FreeGroupElement, h: &Holonomy) -> Result<f64, LengthError> {
    if g.is_identity() {
        return Err(LengthError::IdentityElement);
    }
    let core = g.cyclic_reduction();
    if core.len() > MAX_TRACE_LETTERS {
        return Err(LengthError::TraceOverflow);
    }
    let t = fabs(h.matrix_of(&core).trace());
    if !t.is_finite() {
        return Err(LengthError::TraceOverflow);
    }
    if t <= 2.0 {
        return Err(LengthError::ParabolicOrElliptic);
    }
    Ok(2.0 * acosh(t / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::PantsComplex;
    use crate::word::CyclicWord;
    use alloc::vec::Vec;
    use FreeLetter::*;

    fn close(x: f64, y: f64) -> bool {
        fabs(x - y) <= 1e-9 * (1.0 + fabs(y))
    }

    fn el(letters: &[FreeLetter]) -> FreeGroupElement {
        FreeGroupElement::from_letters(letters.iter().copied())
    }

    #[test]
    fn symmetric_metric_is_equilateral() {
        let m = PantsMetric::symmetric();
        let edge = acosh(2.0);
        for k in 0..3 {
            assert!(close(m.boundary_edge_lengths()[k], edge));
            assert!(close(m.seam_lengths()[k], edge));
        }
        assert!(close(m.l_max(), edge));
        assert!(close(m.l_min(), edge));
        assert!(close(edge, 1.3169578969248166));
    }

    #[test]
    fn rejects_bad_lengths() {
        assert_eq!(solve_hexagon(0.0, 1.0, 1.0), Err(MetricError::NonPositiveLength));
        assert_eq!(solve_hexagon(1.0, -2.0, 1.0), Err(MetricError::NonPositiveLength));
        assert_eq!(solve_hexagon(1.0, f64::NAN, 1.0), Err(MetricError::NonPositiveLength));
        assert_eq!(
            solve_hexagon(1.0, f64::INFINITY, 1.0),
            Err(MetricError::NonPositiveLength)
        );
    }

    #[test]
    fn seams_blow_up_as_a_boundary_shrinks() {
        // Shrinking β3 sends the seams touching it (σ1 and σ2) to infinity,
        // while σ3 — the seam between the two surviving circles — stays
        // bounded: only σ1 and σ2 have sinh(L3/2) in the denominator.
        let seams = |l3: f64| solve_hexagon(2.0, 2.0, l3).unwrap().seam_lengths();
        let (wide, thin, hair) = (seams(1.0), seams(0.1), seams(0.001));
        for k in [0, 1] {
            assert!(wide[k] < thin[k] && thin[k] < hair[k]);
        }
        assert!(hair[2] < 2.0);
    }

    #[test]
    fn swapping_boundaries_permutes_seams() {
        let m = solve_hexagon(1.2, 2.0, 3.0).unwrap();
        let n = solve_hexagon(2.0, 1.2, 3.0).unwrap();
        assert!(close(m.seam_lengths()[0], n.seam_lengths()[1]));
        assert!(close(m.seam_lengths()[1], n.seam_lengths()[0]));
        assert!(close(m.seam_lengths()[2], n.seam_lengths()[2]));
    }

    #[test]
    fn edge_lengths_by_label() {
        let m = solve_hexagon(1.2, 2.0, 3.0).unwrap();
        let e = |s: &str| -> OrientedEdge { s.parse().unwrap() };
        assert!(close(m.edge_length(e("x1")), 0.6));
        assert!(close(m.edge_length(e("x4-")), 0.6));
        assert!(close(m.edge_length(e("x5")), 1.0));
        assert!(close(m.edge_length(e("y2")), m.seam_lengths()[1]));
    }

    #[test]
    fn boundary_traces() {
        let m = solve_hexagon(1.7, 2.4, 0.9).unwrap();
        let h = build_holonomy(&m);
        let [l1, l2, l3] = m.boundary_lengths();
        assert!(close(geodesic_length(&el(&[A]), &h).unwrap(), l1));
        assert!(close(geodesic_length(&el(&[B]), &h).unwrap(), l2));
        assert!(close(geodesic_length(&el(&[A, B]), &h).unwrap(), l3));
        assert!(close(geodesic_length(&el(&[A, A]), &h).unwrap(), 2.0 * l1));
    }

    #[test]
    fn symmetric_figure_eight_trace_is_minus_twenty() {
        let h = build_holonomy(&PantsMetric::symmetric());
        let m = h.matrix_of(&el(&[A, A, B]));
        assert!(close(m.trace(), -20.0));
        let len = geodesic_length(&el(&[A, A, B]), &h).unwrap();
        assert!(close(len, 2.0 * acosh(10.0)));
    }

    #[test]
    fn length_errors() {
        let h = build_holonomy(&PantsMetric::symmetric());
        assert_eq!(
            geodesic_length(&FreeGroupElement::identity(), &h),
            Err(LengthError::IdentityElement)
        );
        let long = el(&[A]).pow(MAX_TRACE_LETTERS as u32 + 1);
        assert_eq!(geodesic_length(&long, &h), Err(LengthError::TraceOverflow));
        // A conjugate of a long word still measures fine once reduced.
        let conj = el(&[B]).mul(&el(&[A])).mul(&el(&[BInv]));
        assert!(geodesic_length(&conj, &h).is_ok());
    }

    #[test]
    fn conjugation_invariance() {
        let m = solve_hexagon(2.2, 1.1, 2.9).unwrap();
        let h = build_holonomy(&m);
        let g = el(&[A, A, BInv, A, B, B]);
        let base = geodesic_length(&g, &h).unwrap();
        for u in [el(&[A]), el(&[B, A]), el(&[BInv, A, BInv]), el(&[A, B, A, B, A])] {
            let c = u.mul(&g).mul(&u.inverse());
            assert!(close(geodesic_length(&c, &h).unwrap(), base));
        }
    }

    #[test]
    fn worked_word_length_sits_in_the_bracket() {
        let cx = PantsComplex::new();
        let letters: Vec<OrientedEdge> = "x1 x4- x1 y3 x2 x5- y3- x4- x1 x4- y2 x3- x6 y2-"
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        let w = CyclicWord::validate(&letters, &cx).unwrap();
        let m = PantsMetric::symmetric();
        let h = build_holonomy(&m);
        let g = crate::group::word_to_group(&w);
        let len = geodesic_length(&g, &h).unwrap();
        let n = w.len() as f64;
        assert!(m.l_min() * n / 3.0 <= len && len <= m.l_max() * n);
        // Frozen value, first computed by this implementation.
        assert!(close(len, 14.671267113931455), "len = {len:.15}");
    }
}
