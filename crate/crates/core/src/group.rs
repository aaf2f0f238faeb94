//! Free group of rank two and the dictionary from edge words into it.
//!
//! The fundamental group of the pair of pants is free on `a` and `b`,
//! chosen so that the three boundary circles are conjugate to `a`, `b` and
//! `(ab)⁻¹` (one orientation each). The dictionary collapses the spanning
//! tree `{x1, y3, x2, y1, x3}` of the 1-skeleton; of the four remaining
//! edges, the two hexagon relators eliminate `x6 = ab` and `y2 = b`,
//! leaving `x4 ↦ a⁻¹` and `x5 ↦ b` as the surviving generators. The map is
//! onto, and a surjection between free groups of equal finite rank is an
//! isomorphism, so nothing is lost.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{EdgeKind, OrientedEdge, Orientation};
use crate::cyclic;
use crate::word::CyclicWord;

/// Generator or inverse generator of the free group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeLetter {
    A,
    AInv,
    B,
    BInv,
}

impl FreeLetter {
    pub fn inverse(self) -> FreeLetter {
        match self {
            FreeLetter::A => FreeLetter::AInv,
            FreeLetter::AInv => FreeLetter::A,
            FreeLetter::B => FreeLetter::BInv,
            FreeLetter::BInv => FreeLetter::B,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FreeLetter::A => "a",
            FreeLetter::AInv => "a-",
            FreeLetter::B => "b",
            FreeLetter::BInv => "b-",
        }
    }
}

impl fmt::Display for FreeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Freely reduced word over `a, a⁻¹, b, b⁻¹`; the empty word is the
/// identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeGroupElement {
    letters: Vec<FreeLetter>,
}

impl FreeGroupElement {
    pub fn identity() -> FreeGroupElement {
        FreeGroupElement { letters: Vec::new() }
    }

    /// Builds an element from raw letters, cancelling adjacent inverses.
    pub fn from_letters<I: IntoIterator<Item = FreeLetter>>(letters: I) -> FreeGroupElement {
        let mut stack: Vec<FreeLetter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        FreeGroupElement { letters: stack }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &FreeGroupElement) -> FreeGroupElement {
        FreeGroupElement::from_letters(
            self.letters.iter().chain(rhs.letters.iter()).copied(),
        )
    }

    pub fn inverse(&self) -> FreeGroupElement {
        FreeGroupElement {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> FreeGroupElement {
        let mut out = FreeGroupElement::identity();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => f != l.inverse(),
            _ => true,
        }
    }

    /// Shortest conjugate: strips matching first/last letters.
    pub fn cyclic_reduction(&self) -> FreeGroupElement {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        FreeGroupElement { letters: self.letters[lo..hi].to_vec() }
    }

    /// Canonical conjugacy-class representative: cyclic reduction rotated
    /// to its lexicographically least position.
    pub fn conjugacy_form(&self) -> FreeGroupElement {
        let mut core = self.cyclic_reduction();
        let r = cyclic::least_rotation_index(&core.letters);
        core.letters.rotate_left(r);
        core
    }

    /// True when the element is not a proper power (identity excluded).
    pub fn is_primitive(&self) -> bool {
        let core = self.cyclic_reduction();
        !core.is_identity()
            && cyclic::fundamental_period(&core.letters) == core.letters.len()
    }
}

impl fmt::Display for FreeGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGroupElement({self})")
    }
}

/// Image of one oriented edge under the tree-collapse dictionary.
pub fn edge_letters(e: OrientedEdge) -> &'static [FreeLetter] {
    use FreeLetter::*;
    const A1: &[FreeLetter] = &[A];
    const AI: &[FreeLetter] = &[AInv];
    const B1: &[FreeLetter] = &[B];
    const BI: &[FreeLetter] = &[BInv];
    const AB: &[FreeLetter] = &[A, B];
    const BAI: &[FreeLetter] = &[BInv, AInv];
    const E: &[FreeLetter] = &[];
    let forward = e.orientation() == Orientation::Forward;
    match (e.kind(), e.index()) {
        (EdgeKind::Boundary, 4) => {
            if forward {
                AI
            } else {
                A1
            }
        }
        (EdgeKind::Boundary, 5) => {
            if forward {
                B1
            } else {
                BI
            }
        }
        (EdgeKind::Boundary, 6) => {
            if forward {
                AB
            } else {
                BAI
            }
        }
        (EdgeKind::Seam, 2) => {
            if forward {
                B1
            } else {
                BI
            }
        }
        _ => E, // spanning tree: x1, x2, x3, y1, y3
    }
}

/// Conjugacy class of a cyclic word in the fundamental group: maps each
/// letter through the dictionary and cyclically reduces. The result is
/// well defined up to conjugacy; the returned representative comes from
/// the word's canonical rotation.
pub fn word_to_group(w: &CyclicWord) -> FreeGroupElement {
    FreeGroupElement::from_letters(
        w.letters().iter().flat_map(|&e| edge_letters(e).iter().copied()),
    )
    .cyclic_reduction()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::PantsComplex;
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;
    use FreeLetter::*;

    fn word(s: &str) -> CyclicWord {
        let cx = PantsComplex::new();
        let letters: Vec<OrientedEdge> =
            s.split_whitespace().map(|t| t.parse().unwrap()).collect();
        CyclicWord::validate(&letters, &cx).unwrap()
    }

    #[test]
    fn reduction_and_arithmetic() {
        let g = FreeGroupElement::from_letters(vec![A, B, BInv, AInv, A]);
        assert_eq!(g.letters(), &[A]);
        let h = FreeGroupElement::from_letters(vec![B, A]);
        assert_eq!(g.mul(&h).letters(), &[A, B, A]);
        assert_eq!(g.mul(&g.inverse()), FreeGroupElement::identity());
        assert_eq!(h.pow(2).letters(), &[B, A, B, A]);
        assert!(!h.pow(2).is_primitive());
        assert!(h.is_primitive());
        assert!(!FreeGroupElement::identity().is_primitive());
    }

    #[test]
    fn cyclic_reduction_strips_conjugation() {
        // u g u⁻¹ with u = b⁻¹, g = ab: the conjugate b⁻¹abb stays unreduced.
        let u = FreeGroupElement::from_letters(vec![BInv]);
        let g = FreeGroupElement::from_letters(vec![A, B]);
        let c = u.mul(&g).mul(&u.inverse());
        assert!(!c.is_cyclically_reduced());
        assert_eq!(c.cyclic_reduction(), g);
        assert_eq!(c.conjugacy_form(), g.conjugacy_form());
        // Rotations share the conjugacy form.
        let r = FreeGroupElement::from_letters(vec![B, A]);
        assert_eq!(r.conjugacy_form(), g.conjugacy_form());
        assert_eq!(g.conjugacy_form().letters(), &[A, B]);
    }

    #[test]
    fn both_relators_die() {
        let cx = PantsComplex::new();
        for relator in cx.hexagon_relators() {
            let img = FreeGroupElement::from_letters(
                relator.iter().flat_map(|&e| edge_letters(e).iter().copied()),
            );
            assert!(img.is_identity(), "relator survives: {img}");
        }
    }

    #[test]
    fn reversal_inverts() {
        for e in OrientedEdge::all() {
            let img = FreeGroupElement::from_letters(edge_letters(e).iter().copied());
            let rev = FreeGroupElement::from_letters(edge_letters(e.reverse()).iter().copied());
            assert_eq!(rev, img.inverse(), "reversal mismatch at {e}");
        }
    }

    #[test]
    fn boundary_words_hit_the_generators() {
        assert_eq!(word_to_group(&word("x1 x4-")).to_string(), "a");
        assert_eq!(word_to_group(&word("x4 x1-")).to_string(), "a-");
        assert_eq!(word_to_group(&word("x5 x2-")).to_string(), "b");
        assert_eq!(word_to_group(&word("x2 x5-")).to_string(), "b-");
        assert_eq!(word_to_group(&word("x6 x3-")).to_string(), "a b");
        assert_eq!(word_to_group(&word("x3 x6-")).to_string(), "b- a-");
    }

    #[test]
    fn figure_eight_class() {
        let g = word_to_group(&word("x1 x4- y2 x3- x6 y2-"));
        assert_eq!(g.conjugacy_form().letters(), &[A, A, B]);
        assert!(g.is_primitive());
    }

    #[test]
    fn worked_word_image() {
        let g = word_to_group(&word("x1 x4- x1 y3 x2 x5- y3- x4- x1 x4- y2 x3- x6 y2-"));
        assert_eq!(format!("{g}"), "a b- a a b a");
        assert!(g.is_cyclically_reduced());
        assert!(g.is_primitive());
    }
}
