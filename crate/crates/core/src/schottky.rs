//! Schottky fundamental domain, axis tracing, and geometric
//! self-intersection counts.
//!
//! The four domain walls are geodesics orthogonal to the two generator
//! axes, one pair per generator, positioned so the generator maps one wall
//! of its pair onto the other (at zero offset they extend the seam lifts).
//! For a pants group the walls are pairwise disjoint, bound no corners,
//! and are never the axis of a group element, so the tiles visited by the
//! axis of a cyclically reduced word are given symbolically by its prefix
//! products — no numerical cell walking is needed. A self-crossing of the
//! closed geodesic is a `⟨g⟩`-orbit of translated axes crossing the axis
//! transversally; each double point is seen from both strands, so the
//! orbit count is halved.

use alloc::vec::Vec;
use core::fmt;

use libm::{exp, fabs, floor, log, sqrt};

use crate::group::{FreeGroupElement, FreeLetter};
use crate::hyperbolic::Holonomy;
use crate::mobius::{chordal, cyclically_ordered, interleaved, IdealPoint, Mat2};

/// Two translate axes closer than this (chordal, per endpoint) count as
/// the same geodesic.
const AXIS_MATCH: f64 = 1e-9;
/// Looser endpoint match for deduplicating translate orbits: the same
/// orbit reached through different prefix products carries rounding noise
/// amplified by the matrix products, while distinct orbits crossing the
/// axis stay macroscopically apart.
const ORBIT_MATCH: f64 = 1e-6;
/// Minimum chordal separation between wall endpoints of a valid domain.
const WALL_SEPARATION: f64 = 1e-9;
/// Relative slack when checking that a piece endpoint sits on its wall.
const WALL_INCIDENCE: f64 = 1e-6;
/// Relative tolerance for the one-period closing identity.
const PERIOD_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    IdentityElement,
    NotCyclicallyReduced,
    NotPrimitive,
    /// The four walls fail to be pairwise disjoint, or the basepoint is
    /// swallowed: the offsets (or the metric) are out of range.
    DomainOverlap,
    /// A computed configuration contradicts the geometry (axis parallel to
    /// a wall it must cross, piece endpoint off its wall, and so on).
    NumericalDegeneracy,
    /// Crossing parameters could not be separated into one period, or the
    /// strand pairing came out odd.
    UnresolvedCrossing,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::IdentityElement => write!(f, "the identity has no geodesic"),
            OracleError::NotCyclicallyReduced => {
                write!(f, "input word must be cyclically reduced")
            }
            OracleError::NotPrimitive => write!(f, "oracle requires a primitive element"),
            OracleError::DomainOverlap => {
                write!(f, "fundamental domain walls are not pairwise disjoint")
            }
            OracleError::NumericalDegeneracy => {
                write!(f, "geometry too degenerate to resolve numerically")
            }
            OracleError::UnresolvedCrossing => {
                write!(f, "crossing points could not be resolved into one period")
            }
        }
    }
}

/// One domain wall: a complete geodesic plus the half-plane it cuts off.
///
/// In the wall's own coordinates (`to_standard` maps the carrying
/// generator's axis to the imaginary axis) the wall is `|z| = radius` and
/// the half-plane is inside or outside that circle.
#[derive(Clone, Copy, Debug)]
pub struct Wall {
    label: FreeLetter,
    endpoints: (IdealPoint, IdealPoint),
    to_standard: Mat2,
    radius: f64,
    outside: bool,
    inside_pt: IdealPoint,
    pairing: Mat2,
}

impl Wall {
    pub fn label(&self) -> FreeLetter {
        self.label
    }

    pub fn endpoints(&self) -> (IdealPoint, IdealPoint) {
        self.endpoints
    }

    /// The matrix carrying this wall onto its partner wall.
    pub fn pairing(&self) -> Mat2 {
        self.pairing
    }

    /// True when the interior point lies strictly in the open half-plane
    /// this wall cuts off.
    pub fn half_plane_contains(&self, z: (f64, f64)) -> bool {
        let (x, y) = self.to_standard.apply(z);
        let r = sqrt(x * x + y * y);
        if self.outside {
            r > self.radius
        } else {
            r < self.radius
        }
    }

    /// True when the ideal point lies strictly inside this wall's boundary
    /// arc (the arc belonging to the cut-off half-plane).
    fn arc_contains(&self, p: IdealPoint) -> bool {
        let (e0, e1) = self.endpoints;
        if chordal(p, e0) < WALL_SEPARATION || chordal(p, e1) < WALL_SEPARATION {
            return false;
        }
        cyclically_ordered(e0, p, e1) == cyclically_ordered(e0, self.inside_pt, e1)
    }

    fn on_wall(&self, z: (f64, f64)) -> bool {
        let (x, y) = self.to_standard.apply(z);
        let r = sqrt(x * x + y * y);
        fabs(r - self.radius) <= WALL_INCIDENCE * (1.0 + self.radius)
    }
}

/// Fundamental domain for the holonomy group: four paired walls and a
/// checked interior basepoint.
pub struct SchottkyDomain {
    walls: [Wall; 4],
    gen_a: Mat2,
    gen_b: Mat2,
    basepoint: (f64, f64),
}

fn slot(l: FreeLetter) -> usize {
    match l {
        FreeLetter::A => 0,
        FreeLetter::AInv => 1,
        FreeLetter::B => 2,
        FreeLetter::BInv => 3,
    }
}

/// Conjugation sending the standard translation axis `(0, ∞)` onto the
/// axis `(attracting ← 0, repelling ← ∞)`; always orientation-preserving.
fn conjugator_to(att: IdealPoint, rep: IdealPoint) -> Mat2 {
    match (att, rep) {
        (IdealPoint::Finite(p), IdealPoint::Finite(q)) => {
            if q > p {
                Mat2::new(q, p, 1.0, 1.0)
            } else {
                Mat2::new(q, -p, 1.0, -1.0)
            }
        }
        (IdealPoint::Finite(p), IdealPoint::Infinity) => Mat2::new(1.0, p, 0.0, 1.0),
        (IdealPoint::Infinity, IdealPoint::Finite(q)) => Mat2::new(-q, 1.0, -1.0, 0.0),
        (IdealPoint::Infinity, IdealPoint::Infinity) => {
            unreachable!("hyperbolic fixed points are distinct")
        }
    }
}

/// Offsets tried by `build_domain`, ordered small-to-large. Zero offsets
/// can genuinely fail: walls orthogonal to the generator axes at half the
/// translation length may overlap (they do for the symmetric metric), and
/// sliding a pair along its axis is the standard cure.
const DEFAULT_OFFSETS: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.0, -0.3),
    (0.3, -0.3),
    (0.0, 0.3),
    (-0.3, 0.3),
    (0.3, 0.0),
    (-0.3, 0.0),
    (0.0, -0.15),
    (0.15, -0.3),
    (0.0, -0.45),
    (0.3, -0.45),
    (0.45, -0.3),
    (-0.15, 0.3),
    (0.0, 0.45),
    (0.0, -0.6),
    (0.6, -0.45),
    (0.45, -0.6),
    (-0.3, -0.3),
    (0.3, 0.3),
    (0.0, -0.9),
    (0.9, -0.6),
    (-0.45, 0.45),
];

/// Builds a domain for the holonomy, searching the default offset grid for
/// a configuration whose walls verify as pairwise disjoint.
pub fn build_domain(h: &Holonomy) -> Result<SchottkyDomain, OracleError> {
    let mut last = OracleError::DomainOverlap;
    for &(da, db) in DEFAULT_OFFSETS {
        match build_domain_offset(h, da, db) {
            Ok(d) => return Ok(d),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Builds the domain with the `a`-walls slid by `da` and the `b`-walls by
/// `db` along their axes. Offsets only move the fundamental domain; every
/// quantity of the quotient surface is unchanged, which the stability
/// tests exploit.
pub fn build_domain_offset(
    h: &Holonomy,
    da: f64,
    db: f64,
) -> Result<SchottkyDomain, OracleError> {
    let mut walls: Vec<Wall> = Vec::with_capacity(4);
    for (m, delta) in [(h.gen_a(), da), (h.gen_b(), db)] {
        let (rep, att) = m.fixed_points().ok_or(OracleError::NumericalDegeneracy)?;
        let lambda = exp(m.translation_length().ok_or(OracleError::NumericalDegeneracy)? / 2.0);
        let r = conjugator_to(att, rep);
        let to_standard = r.inverse();
        // In standard coordinates the generator is diag(1/λ, λ): it pulls
        // toward 0, so its mouth is the small circle and its inverse's the
        // large one; the generator maps the large wall onto the small one.
        let letter = if m == h.gen_a() { FreeLetter::A } else { FreeLetter::B };
        let rho_small = exp(delta) / lambda;
        let rho_large = exp(delta) * lambda;
        for (label, rho, outside, inside_pt, pairing) in [
            (letter, rho_small, false, att, m.inverse()),
            (letter.inverse(), rho_large, true, rep, m),
        ] {
            let endpoints = (
                r.apply_boundary(IdealPoint::Finite(-rho)),
                r.apply_boundary(IdealPoint::Finite(rho)),
            );
            walls.push(Wall { label, endpoints, to_standard, radius: rho, outside, inside_pt, pairing });
        }
    }
    // Slot order a, a⁻¹, b, b⁻¹ matches the construction order.
    let walls: [Wall; 4] = [walls[0], walls[1], walls[2], walls[3]];

    // Pairwise disjoint walls with disjoint half-planes: endpoints apart,
    // no interleaving, no nesting of boundary arcs.
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (wi, wj) = (&walls[i], &walls[j]);
            for p in [wj.endpoints.0, wj.endpoints.1] {
                for e in [wi.endpoints.0, wi.endpoints.1] {
                    if chordal(p, e) < WALL_SEPARATION {
                        return Err(OracleError::DomainOverlap);
                    }
                }
            }
            if interleaved(wi.endpoints, wj.endpoints) {
                return Err(OracleError::DomainOverlap);
            }
            if wi.arc_contains(wj.endpoints.0)
                || wi.arc_contains(wj.endpoints.1)
                || wj.arc_contains(wi.endpoints.0)
                || wj.arc_contains(wi.endpoints.1)
            {
                return Err(OracleError::DomainOverlap);
            }
        }
    }

    let domain = SchottkyDomain { walls, gen_a: h.gen_a(), gen_b: h.gen_b(), basepoint: (0.0, 1.0) };
    if !domain.contains(domain.basepoint) {
        return Err(OracleError::DomainOverlap);
    }
    // Pairing really carries each wall onto its partner.
    for l in [FreeLetter::A, FreeLetter::AInv, FreeLetter::B, FreeLetter::BInv] {
        let w = domain.wall(l);
        let partner = domain.wall(l.inverse());
        let img0 = w.pairing.apply_boundary(w.endpoints.0);
        let img1 = w.pairing.apply_boundary(w.endpoints.1);
        let direct = chordal(img0, partner.endpoints.0) < 1e-6
            && chordal(img1, partner.endpoints.1) < 1e-6;
        let swapped = chordal(img0, partner.endpoints.1) < 1e-6
            && chordal(img1, partner.endpoints.0) < 1e-6;
        if !(direct || swapped) {
            return Err(OracleError::NumericalDegeneracy);
        }
    }
    Ok(domain)
}

impl SchottkyDomain {
    pub fn wall(&self, l: FreeLetter) -> &Wall {
        &self.walls[slot(l)]
    }

    pub fn basepoint(&self) -> (f64, f64) {
        self.basepoint
    }

    pub fn letter_matrix(&self, l: FreeLetter) -> Mat2 {
        match l {
            FreeLetter::A => self.gen_a,
            FreeLetter::AInv => self.gen_a.inverse(),
            FreeLetter::B => self.gen_b,
            FreeLetter::BInv => self.gen_b.inverse(),
        }
    }

    /// True when the point lies in the closed domain (outside every open
    /// half-plane the walls cut off).
    pub fn contains(&self, z: (f64, f64)) -> bool {
        self.walls.iter().all(|w| !w.half_plane_contains(z))
    }
}

/// One arc of the closed geodesic, clipped to the fundamental domain.
#[derive(Clone, Copy, Debug)]
pub struct GeodesicPiece {
    pub start: (f64, f64),
    pub end: (f64, f64),
    pub length: f64,
}

/// The closed geodesic of a primitive class, cut into domain pieces, plus
/// the axis data the crossing counter consumes.
pub struct TracedGeodesic {
    pieces: Vec<GeodesicPiece>,
    total_length: f64,
    matrix: Mat2,
    axis: (IdealPoint, IdealPoint),
    axis_map: Mat2,
    prefixes: Vec<Mat2>,
    window_base: f64,
}

impl TracedGeodesic {
    pub fn pieces(&self) -> &[GeodesicPiece] {
        &self.pieces
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }
}

/// Parameter along the axis (unit speed, via the axis map) at which the
/// geodesic with the given ideal endpoints crosses it. The endpoints must
/// straddle the axis.
fn crossing_param(axis_map: Mat2, endpoints: (IdealPoint, IdealPoint)) -> Result<f64, OracleError> {
    let a0 = match axis_map.apply_boundary(endpoints.0) {
        IdealPoint::Finite(x) => x,
        IdealPoint::Infinity => return Err(OracleError::NumericalDegeneracy),
    };
    let a1 = match axis_map.apply_boundary(endpoints.1) {
        IdealPoint::Finite(x) => x,
        IdealPoint::Infinity => return Err(OracleError::NumericalDegeneracy),
    };
    let prod = a0 * a1;
    if !(prod < 0.0) {
        return Err(OracleError::NumericalDegeneracy);
    }
    // The crossing point lifts to height sqrt(-a0·a1) over the imaginary
    // axis in standard coordinates.
    Ok(0.5 * log(-prod))
}

/// Clips the axis of `g` against the domain tiling along one fundamental
/// period. `g` must be a cyclically reduced primitive word; the tile
/// stack is its prefix-product sequence, entered through the wall of the
/// last letter's inverse and exited through the wall of the first letter.
pub fn trace_geodesic(
    g: &FreeGroupElement,
    d: &SchottkyDomain,
) -> Result<TracedGeodesic, OracleError> {
    if g.is_identity() {
        return Err(OracleError::IdentityElement);
    }
    if !g.is_cyclically_reduced() {
        return Err(OracleError::NotCyclicallyReduced);
    }
    if !g.is_primitive() {
        return Err(OracleError::NotPrimitive);
    }
    let letters = g.letters();
    let n = letters.len();
    let matrix = letters
        .iter()
        .fold(Mat2::IDENTITY, |m, &l| m.mul(d.letter_matrix(l)));
    if !matrix.trace().is_finite() {
        return Err(OracleError::NumericalDegeneracy);
    }
    let (rep, att) = matrix.fixed_points().ok_or(OracleError::NumericalDegeneracy)?;
    let total_length = matrix
        .translation_length()
        .ok_or(OracleError::NumericalDegeneracy)?;
    let axis_map = conjugator_to(rep, att).inverse();

    let mut prefixes = Vec::with_capacity(n);
    let mut h = Mat2::IDENTITY;
    for &l in letters {
        prefixes.push(h);
        h = h.mul(d.letter_matrix(l));
    }

    // Wall-crossing parameters: entry wall first, then one per letter,
    // closing exactly one period after the entry.
    let translated = |prefix: Mat2, wall: &Wall| {
        (
            prefix.apply_boundary(wall.endpoints.0),
            prefix.apply_boundary(wall.endpoints.1),
        )
    };
    let mut params = Vec::with_capacity(n + 1);
    params.push(crossing_param(
        axis_map,
        translated(Mat2::IDENTITY, d.wall(letters[n - 1].inverse())),
    )?);
    for i in 0..n {
        params.push(crossing_param(
            axis_map,
            translated(prefixes[i], d.wall(letters[i])),
        )?);
    }
    for i in 0..n {
        if !(params[i] < params[i + 1]) {
            return Err(OracleError::NumericalDegeneracy);
        }
    }
    if fabs(params[n] - params[0] - total_length) > PERIOD_TOLERANCE * (1.0 + total_length) {
        return Err(OracleError::NumericalDegeneracy);
    }

    let from_standard = axis_map.inverse();
    let axis_point = |t: f64| from_standard.apply((0.0, exp(t)));
    let mut pieces = Vec::with_capacity(n);
    for i in 0..n {
        let back = prefixes[i].inverse();
        let start = back.apply(axis_point(params[i]));
        let end = back.apply(axis_point(params[i + 1]));
        for &(z, wall_label) in &[
            (start, letters[(i + n - 1) % n].inverse()),
            (end, letters[i]),
        ] {
            if !(z.1 > 1e-8 && z.1 < 1e8) || !d.wall(wall_label).on_wall(z) {
                return Err(OracleError::NumericalDegeneracy);
            }
        }
        pieces.push(GeodesicPiece { start, end, length: params[i + 1] - params[i] });
    }

    Ok(TracedGeodesic {
        pieces,
        total_length,
        matrix,
        axis: (rep, att),
        axis_map,
        prefixes,
        window_base: params[0],
    })
}

/// Geometric self-intersection number of the traced geodesic.
///
/// Every crossing of the closed geodesic lifts to a crossing of the axis
/// by a translate `h_i·h_m⁻¹ · axis` (the translate must pass through a
/// tile the period crosses), so those finitely many translates are
/// classified into `⟨g⟩`-orbits: parameters are reduced into one period
/// window, whose edge is placed in the widest parameter gap so rounding
/// cannot split an orbit, and the surviving axes are deduplicated by
/// endpoints. Each double point is counted from both strands, so the
/// orbit total is halved — an odd total is a hard error, never rounded.
pub fn count_self_crossings(t: &TracedGeodesic) -> Result<u64, OracleError> {
    let n = t.prefixes.len();
    let (p, q) = t.axis;
    let period = t.total_length;
    let mut entries: Vec<(f64, Mat2)> = Vec::new();
    for i in 0..n {
        for m in 0..n {
            let u = t.prefixes[i].mul(t.prefixes[m].inverse());
            let up = u.apply_boundary(p);
            let uq = u.apply_boundary(q);
            if chordal(up, p) < AXIS_MATCH && chordal(uq, q) < AXIS_MATCH {
                continue; // the translate is the axis itself
            }
            if chordal(up, q) < AXIS_MATCH && chordal(uq, p) < AXIS_MATCH {
                // An orientation-reversing stabilizer cannot exist in a
                // free group; reaching this means the numbers went bad.
                return Err(OracleError::NumericalDegeneracy);
            }
            if !interleaved((p, q), (up, uq)) {
                continue;
            }
            entries.push((crossing_param(t.axis_map, (up, uq))?, u));
        }
    }
    if entries.is_empty() {
        return Ok(0);
    }

    // Window edge into the widest circular gap of parameters mod period.
    let mut residues: Vec<f64> = entries
        .iter()
        .map(|&(tc, _)| {
            let r = (tc - t.window_base) / period;
            (r - floor(r)) * period
        })
        .collect();
    residues.sort_by(|a, b| a.partial_cmp(b).expect("parameters are finite"));
    let mut best_gap = 0.0;
    let mut offset = 0.0;
    for i in 0..residues.len() {
        let next = if i + 1 == residues.len() {
            residues[0] + period
        } else {
            residues[i + 1]
        };
        let gap = next - residues[i];
        if gap > best_gap {
            best_gap = gap;
            offset = residues[i] + gap / 2.0;
        }
    }
    if best_gap / 2.0 < 1e-6 * (1.0 + period) {
        return Err(OracleError::UnresolvedCrossing);
    }
    let base = t.window_base + offset;

    // Normalize each translate into the window and deduplicate orbits.
    let mut reps: Vec<(IdealPoint, IdealPoint)> = Vec::new();
    for (tc, u) in entries {
        let nu = floor((base + period - tc) / period) as i32 - 1;
        let r = t.matrix.pow(nu).mul(u);
        let e0 = r.apply_boundary(p);
        let e1 = r.apply_boundary(q);
        if !reps
            .iter()
            .any(|&(f0, f1)| chordal(f0, e0) < ORBIT_MATCH && chordal(f1, e1) < ORBIT_MATCH)
        {
            reps.push((e0, e1));
        }
    }
    if reps.len() % 2 != 0 {
        return Err(OracleError::UnresolvedCrossing);
    }
    Ok((reps.len() / 2) as u64)
}

/// End-to-end count for a free-homotopy class: cyclically reduces, builds
/// the reference domain, traces, and counts; on a numerical failure the
/// domain is re-cut at perturbed offsets before giving up.
pub fn self_crossing_count(g: &FreeGroupElement, h: &Holonomy) -> Result<u64, OracleError> {
    let core = g.conjugacy_form();
    let mut last = OracleError::DomainOverlap;
    let mut attempts = 0;
    for &(da, db) in DEFAULT_OFFSETS {
        let d = match build_domain_offset(h, da, db) {
            Ok(d) => d,
            Err(e) => {
                last = e;
                continue;
            }
        };
        attempts += 1;
        match trace_geodesic(&core, &d).and_then(|t| count_self_crossings(&t)) {
            Ok(count) => return Ok(count),
            Err(
                e @ (OracleError::IdentityElement
                | OracleError::NotCyclicallyReduced
                | OracleError::NotPrimitive),
            ) => return Err(e),
            Err(e) => last = e,
        }
        if attempts == 3 {
            break;
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::{build_holonomy, solve_hexagon, PantsMetric};
    use crate::FreeLetter::*;

    fn sym() -> Holonomy {
        build_holonomy(&PantsMetric::symmetric())
    }

    fn el(letters: &[FreeLetter]) -> FreeGroupElement {
        FreeGroupElement::from_letters(letters.iter().copied())
    }

    #[test]
    fn reference_domain_is_sane() {
        let h = sym();
        let d = build_domain(&h).unwrap();
        assert!(d.contains(d.basepoint()));
        // The a-walls straddle the basepoint on the imaginary axis.
        let wa = d.wall(A);
        let (e0, e1) = wa.endpoints();
        if let (IdealPoint::Finite(x0), IdealPoint::Finite(x1)) = (e0, e1) {
            assert!((x0 + x1).abs() < 1e-9, "a-wall is symmetric about 0");
        } else {
            panic!("a-wall endpoints are finite");
        }
        // Deep points of each half-plane are recognized.
        assert!(d.wall(AInv).half_plane_contains((0.0, 0.01)));
        assert!(!d.wall(AInv).half_plane_contains((0.0, 1.0)));
        assert!(d.wall(A).half_plane_contains((0.0, 100.0)));
    }

    #[test]
    fn oversized_offsets_overlap() {
        let h = sym();
        assert!(matches!(build_domain_offset(&h, 2.0, 0.0), Err(OracleError::DomainOverlap)));
        assert!(matches!(build_domain_offset(&h, 0.0, -2.0), Err(OracleError::DomainOverlap)));
        // Asymmetric pants still admit the reference domain.
        let skew = build_holonomy(&solve_hexagon(1.1, 2.7, 3.4).unwrap());
        assert!(build_domain(&skew).is_ok());
    }

    #[test]
    fn boundary_generator_traces_to_one_piece() {
        let h = sym();
        let d = build_domain(&h).unwrap();
        let t = trace_geodesic(&el(&[A]), &d).unwrap();
        assert_eq!(t.pieces().len(), 1);
        let l1 = PantsMetric::symmetric().boundary_lengths()[0];
        assert!((t.total_length() - l1).abs() < 1e-9);
        assert!((t.pieces()[0].length - l1).abs() < 1e-9);
        assert_eq!(count_self_crossings(&t).unwrap(), 0);
    }

    #[test]
    fn preconditions_are_enforced() {
        let h = sym();
        let d = build_domain(&h).unwrap();
        assert_eq!(
            trace_geodesic(&FreeGroupElement::identity(), &d).err(),
            Some(OracleError::IdentityElement)
        );
        let unreduced = el(&[B, A, BInv]);
        assert_eq!(
            trace_geodesic(&unreduced, &d).err(),
            Some(OracleError::NotCyclicallyReduced)
        );
        let square = el(&[A, B]).pow(2);
        assert_eq!(trace_geodesic(&square, &d).err(), Some(OracleError::NotPrimitive));
    }

    #[test]
    fn all_boundary_classes_are_simple() {
        let h = sym();
        for g in [el(&[A]), el(&[B]), el(&[BInv, AInv]), el(&[AInv]), el(&[A, B])] {
            assert_eq!(self_crossing_count(&g, &h).unwrap(), 0, "class {g}");
        }
        // Conjugates too: the count only sees the conjugacy class.
        let conj = el(&[A, B, A]).mul(&el(&[B])).mul(&el(&[A, B, A]).inverse());
        assert_eq!(self_crossing_count(&conj, &h).unwrap(), 0);
    }

    #[test]
    fn figure_eight_crosses_once() {
        let h = sym();
        let d = build_domain(&h).unwrap();
        let t = trace_geodesic(&el(&[A, A, B]), &d).unwrap();
        assert!(t.pieces().len() >= 2);
        assert_eq!(count_self_crossings(&t).unwrap(), 1);
        // Same count on an asymmetric metric.
        let skew = build_holonomy(&solve_hexagon(2.9, 1.3, 2.2).unwrap());
        assert_eq!(self_crossing_count(&el(&[A, A, B]), &skew).unwrap(), 1);
    }

    #[test]
    fn trace_matches_quotient_length() {
        let h = sym();
        let d = build_domain(&h).unwrap();
        for g in [el(&[A, B]), el(&[A, A, B]), el(&[A, BInv, A, A, B, A])] {
            let t = trace_geodesic(&g, &d).unwrap();
            let direct = crate::hyperbolic::geodesic_length(&g, &h).unwrap();
            assert!((t.total_length() - direct).abs() < 1e-6 * (1.0 + direct));
            let sum: f64 = t.pieces().iter().map(|p| p.length).sum();
            assert!((sum - direct).abs() < 1e-6 * (1.0 + direct));
            assert_eq!(t.pieces().len(), g.len());
        }
    }

    #[test]
    fn counts_are_stable_across_domains() {
        let h = sym();
        let g = el(&[A, BInv, A, A, B, A]);
        let mut counts = Vec::new();
        for (da, db) in [(0.0, -0.3), (0.15, -0.3), (0.0, -0.45)] {
            let d = build_domain_offset(&h, da, db).unwrap();
            let t = trace_geodesic(&g, &d).unwrap();
            counts.push(count_self_crossings(&t).unwrap());
        }
        assert_eq!(counts[0], counts[1]);
        assert_eq!(counts[1], counts[2]);
    }

    #[test]
    fn worked_word_crossing_count() {
        // Image of the 14-letter worked example word; its combinatorial
        // self-intersection bound is 26.
        let h = sym();
        let g = el(&[A, BInv, A, A, B, A]);
        let count = self_crossing_count(&g, &h).unwrap();
        assert!(count <= 26);
        // Frozen value, first computed by this implementation.
        assert_eq!(count, 6, "count = {count}");
    }
}

