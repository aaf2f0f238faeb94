//! Real 2×2 matrices acting on the upper half-plane and its ideal boundary.

use core::fmt;

use libm::{fabs, sqrt};

/// Point of the ideal boundary `R ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IdealPoint {
    Finite(f64),
    Infinity,
}

impl fmt::Display for IdealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealPoint::Finite(x) => write!(f, "{x}"),
            IdealPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Chordal distance between boundary points: the circle is identified with
/// the unit circle by stereographic projection, so distances stay bounded
/// and `∞` is an ordinary point. Range `[0, 2]`.
pub fn chordal(p: IdealPoint, q: IdealPoint) -> f64 {
    match (p, q) {
        (IdealPoint::Finite(x), IdealPoint::Finite(y)) => {
            2.0 * fabs(x - y) / sqrt((1.0 + x * x) * (1.0 + y * y))
        }
        (IdealPoint::Finite(x), IdealPoint::Infinity)
        | (IdealPoint::Infinity, IdealPoint::Finite(x)) => 2.0 / sqrt(1.0 + x * x),
        (IdealPoint::Infinity, IdealPoint::Infinity) => 0.0,
    }
}

/// Strict cyclic order on the ideal boundary: true when walking the circle
/// in the positive direction from `p` meets `q` before `r`. All three
/// points must be distinct.
pub fn cyclically_ordered(p: IdealPoint, q: IdealPoint, r: IdealPoint) -> bool {
    use IdealPoint::*;
    match (p, q, r) {
        (Finite(p), Finite(q), Finite(r)) => {
            (p < q && q < r) || (q < r && r < p) || (r < p && p < q)
        }
        (Infinity, Finite(q), Finite(r)) => q < r,
        (Finite(p), Infinity, Finite(r)) => r < p,
        (Finite(p), Finite(q), Infinity) => p < q,
        _ => panic!("cyclic order needs distinct points"),
    }
}

/// True when the geodesic with ideal endpoints `(a, b)` crosses the
/// geodesic with endpoints `(c, d)`: the pairs interleave on the circle.
/// All four points must be distinct.
pub fn interleaved(a: (IdealPoint, IdealPoint), b: (IdealPoint, IdealPoint)) -> bool {
    cyclically_ordered(a.0, b.0, a.1) != cyclically_ordered(a.0, b.1, a.1)
}

/// 2×2 real matrix acting on the upper half-plane by fractional linear
/// maps. Callers keep determinants positive (usually 1); nothing here
/// normalizes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn det(self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(self) -> f64 {
        self.a + self.d
    }

    pub fn inverse(self) -> Mat2 {
        let det = self.det();
        debug_assert!(det != 0.0, "singular matrix");
        Mat2 { a: self.d / det, b: -self.b / det, c: -self.c / det, d: self.a / det }
    }

    /// Small integer power; negative exponents go through the inverse.
    pub fn pow(self, n: i32) -> Mat2 {
        let base = if n < 0 { self.inverse() } else { self };
        let mut out = Mat2::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            out = out.mul(base);
        }
        out
    }

    /// Image of an interior point `(x, y)`, `y > 0`.
    pub fn apply(self, z: (f64, f64)) -> (f64, f64) {
        let (x, y) = z;
        let re = self.c * x + self.d;
        let im = self.c * y;
        let den = re * re + im * im;
        debug_assert!(den > 0.0, "point maps through the pole");
        let nx = ((self.a * x + self.b) * re + self.a * self.c * y * y) / den;
        let ny = self.det() * y / den;
        (nx, ny)
    }

    /// Image of an ideal boundary point.
    pub fn apply_boundary(self, p: IdealPoint) -> IdealPoint {
        match p {
            IdealPoint::Finite(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    IdealPoint::Infinity
                } else {
                    IdealPoint::Finite((self.a * x + self.b) / den)
                }
            }
            IdealPoint::Infinity => {
                if self.c == 0.0 {
                    IdealPoint::Infinity
                } else {
                    IdealPoint::Finite(self.a / self.c)
                }
            }
        }
    }

    /// Fixed boundary points `(repelling, attracting)` of a hyperbolic
    /// matrix (determinant ≈ 1); `None` when `trace² ≤ 4·det`.
    pub fn fixed_points(self) -> Option<(IdealPoint, IdealPoint)> {
        let t = self.trace();
        let disc = t * t - 4.0 * self.det();
        if disc <= 0.0 {
            return None;
        }
        // Dominant eigenvalue first, computed without cancellation.
        let root = sqrt(disc);
        let big = 0.5 * (t + if t >= 0.0 { root } else { -root });
        let small = self.det() / big;
        if self.c != 0.0 {
            let att = IdealPoint::Finite((big - self.d) / self.c);
            let rep = IdealPoint::Finite((small - self.d) / self.c);
            Some((rep, att))
        } else {
            // Upper triangular: ∞ is fixed, the other point is b/(d−a).
            let other = IdealPoint::Finite(self.b / (self.d - self.a));
            if fabs(self.a) > fabs(self.d) {
                Some((other, IdealPoint::Infinity))
            } else {
                Some((IdealPoint::Infinity, other))
            }
        }
    }

    /// Translation length `2·arccosh(|tr|/2)` of a hyperbolic matrix with
    /// determinant 1; `None` when `|tr| ≤ 2`.
    pub fn translation_length(self) -> Option<f64> {
        let t = fabs(self.trace());
        if t <= 2.0 {
            None
        } else {
            Some(2.0 * libm::acosh(t / 2.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use IdealPoint::{Finite, Infinity};

    #[test]
    fn inverse_and_powers() {
        let m = Mat2::new(2.0, 1.0, 1.0, 1.0);
        let id = m.mul(m.inverse());
        assert!((id.a - 1.0).abs() < 1e-12 && id.b.abs() < 1e-12);
        assert!(id.c.abs() < 1e-12 && (id.d - 1.0).abs() < 1e-12);
        let m3 = m.pow(3);
        assert_eq!(m3, m.mul(m).mul(m));
        let back = m.pow(-2).mul(m.pow(2));
        assert!((back.a - 1.0).abs() < 1e-12 && (back.d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interior_action_preserves_half_plane() {
        let m = Mat2::new(1.0, 2.0, 3.0, 7.0); // det 1
        let (x, y) = m.apply((0.5, 2.0));
        assert!(y > 0.0);
        // Möbius image of i·2 under (z+2)/(3z+7): checked against complex arithmetic.
        let den = 8.5f64 * 8.5 + 36.0;
        assert!((x - (2.5 * 8.5 + 3.0 * 4.0) / den).abs() < 1e-12);
        assert!((y - 2.0 / den).abs() < 1e-12);
    }

    #[test]
    fn boundary_action_of_diagonal() {
        let m = Mat2::new(2.0, 0.0, 0.0, 0.5);
        assert_eq!(m.apply_boundary(Finite(1.0)), Finite(4.0));
        assert_eq!(m.apply_boundary(Infinity), Infinity);
        let inv = Mat2::new(0.0, -1.0, 1.0, 0.0);
        assert_eq!(inv.apply_boundary(Infinity), Finite(0.0));
        assert_eq!(inv.apply_boundary(Finite(0.0)), Infinity);
    }

    #[test]
    fn fixed_points_and_length() {
        let m = Mat2::new(2.0, 0.0, 0.0, 0.5);
        assert_eq!(m.fixed_points(), Some((Finite(0.0), Infinity)));
        let l = m.translation_length().unwrap();
        assert!((l - 2.0 * (2.0f64).ln()).abs() < 1e-12);
        // Conjugated copy keeps the translation length and moves the axis.
        let u = Mat2::new(1.0, 1.0, 0.0, 1.0);
        let n = u.mul(m).mul(u.inverse());
        assert!((n.translation_length().unwrap() - l).abs() < 1e-12);
        let (rep, att) = n.fixed_points().unwrap();
        assert_eq!(rep, Finite(1.0));
        assert_eq!(att, Infinity);
        assert_eq!(Mat2::IDENTITY.fixed_points(), None);
    }

    #[test]
    fn circular_order() {
        assert!(cyclically_ordered(Finite(0.0), Finite(1.0), Finite(2.0)));
        assert!(cyclically_ordered(Finite(1.0), Finite(2.0), Finite(0.0)));
        assert!(!cyclically_ordered(Finite(2.0), Finite(1.0), Finite(0.0)));
        assert!(cyclically_ordered(Finite(0.0), Finite(1.0), Infinity));
        assert!(cyclically_ordered(Infinity, Finite(-3.0), Finite(5.0)));
        assert!(cyclically_ordered(Finite(5.0), Infinity, Finite(-3.0)));
    }

    #[test]
    fn interleaving() {
        let g1 = (Finite(-1.0), Finite(1.0));
        assert!(interleaved(g1, (Finite(0.0), Finite(3.0))));
        assert!(!interleaved(g1, (Finite(2.0), Finite(3.0))));
        assert!(!interleaved(g1, (Finite(-0.5), Finite(0.5))));
        assert!(interleaved(g1, (Finite(0.0), Infinity)));
        assert!(!interleaved((Finite(0.0), Infinity), (Finite(1.0), Finite(2.0))));
        assert!(interleaved((Finite(0.0), Infinity), (Finite(-1.0), Finite(2.0))));
    }

    #[test]
    fn chordal_treats_infinity_evenly() {
        assert!((chordal(Finite(0.0), Infinity) - 2.0).abs() < 1e-12);
        assert!(chordal(Finite(1e9), Infinity) < 1e-8);
        assert!((chordal(Finite(-1.0), Finite(1.0)) - 2.0).abs() < 1e-12);
        assert_eq!(chordal(Infinity, Infinity), 0.0);
    }
}
