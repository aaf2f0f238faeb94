//! Cyclic edge words: the combinatorial footprint of a closed curve.
//!
//! A closed curve in the pants, pushed onto the edge complex tightly, spells
//! a cyclic word `b1 s1 b2 s2 ... bn sn` in oriented edges: boundary runs
//! `bi` of length at least 2 separated by single seams `si`, or a pure
//! boundary run winding one boundary circle. Words are kept in a canonical
//! rotation (lexicographically least under the edge order), never backtrack,
//! and consecutive letters are incident head-to-tail.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{OrientedEdge, PantsComplex};
use crate::cyclic;

/// Why a letter sequence is not a valid cyclic word. Positions refer to the
/// sequence as given (before canonical rotation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    /// The empty sequence spells no curve.
    Empty,
    /// Only seam letters: a word must visit a boundary circle.
    NoBoundaryEdge,
    /// Two consecutive seam letters (positions `at`, `at + 1` cyclically).
    SeamRunTooLong { at: usize },
    /// Letter `at + 1` is the reverse of letter `at`.
    Backtracks { at: usize },
    /// Letters `at` and `at + 1` are not incident head-to-tail.
    NotClosed { at: usize },
    /// A boundary run of length 1 in a word that also contains seams.
    ShortBoundarySubword { at: usize },
    /// No seam connects the end of run `index` to the start of the next run
    /// (reconstruction only).
    NoConnectingSeam { index: usize },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => write!(f, "empty letter sequence"),
            WordError::NoBoundaryEdge => write!(f, "word contains no boundary edge"),
            WordError::SeamRunTooLong { at } => {
                write!(f, "two consecutive seams at position {at}")
            }
            WordError::Backtracks { at } => write!(f, "backtrack at position {at}"),
            WordError::NotClosed { at } => {
                write!(f, "letters at positions {} and {} are not incident", at, at + 1)
            }
            WordError::ShortBoundarySubword { at } => {
                write!(f, "boundary run of length 1 starting at position {at}")
            }
            WordError::NoConnectingSeam { index } => {
                write!(f, "no seam connects run {} to the next run", index)
            }
        }
    }
}

/// A validated cyclic word, stored in its canonical rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<OrientedEdge>,
}

/// One boundary run of a decomposed word with the seam that follows it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subword {
    /// The boundary letters of the run, in word order.
    pub letters: Vec<OrientedEdge>,
    /// Seam following the run; absent only for a pure boundary word.
    pub seam: Option<OrientedEdge>,
    /// Boundary component (1..=3) the run winds along.
    pub component: u8,
}

/// Boundary-run decomposition `b1 s1 ... bn sn` of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub subwords: Vec<Subword>,
}

impl CyclicWord {
    /// Checks the word axioms and returns the word in canonical rotation.
    pub fn validate(letters: &[OrientedEdge], cx: &PantsComplex) -> Result<CyclicWord, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        if letters.iter().all(|e| e.is_seam()) {
            return Err(WordError::NoBoundaryEdge);
        }
        let n = letters.len();
        for i in 0..n {
            let a = letters[i];
            let b = letters[(i + 1) % n];
            if a.is_seam() && b.is_seam() {
                return Err(WordError::SeamRunTooLong { at: i });
            }
            if b == a.reverse() {
                return Err(WordError::Backtracks { at: i });
            }
            if cx.end(a) != cx.start(b) {
                return Err(WordError::NotClosed { at: i });
            }
        }
        // Runs between seams must have length >= 2 once any seam is present.
        if letters.iter().any(|e| e.is_seam()) {
            let seams: Vec<usize> =
                (0..n).filter(|&i| letters[i].is_seam()).collect();
            for (si, &here) in seams.iter().enumerate() {
                let next = seams[(si + 1) % seams.len()];
                let gap = (next + n - here) % n - 1;
                if gap < 2 {
                    return Err(WordError::ShortBoundarySubword { at: (here + 1) % n });
                }
            }
        }
        let mut letters = letters.to_vec();
        let r = cyclic::least_rotation_index(&letters);
        letters.rotate_left(r);
        Ok(CyclicWord { letters })
    }

    /// Letters in canonical rotation.
    pub fn letters(&self) -> &[OrientedEdge] {
        &self.letters
    }

    /// Combinatorial length `|w|` (number of letters).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // validation rejects empty words
    }

    /// True unless the cyclic letter sequence is a proper power.
    pub fn is_primitive(&self) -> bool {
        cyclic::fundamental_period(&self.letters) == self.letters.len()
    }

    /// Splits into boundary runs and their trailing seams. The rotation is
    /// chosen from the canonical one so the word starts at the beginning of
    /// a boundary run (pure boundary words are a single run).
    pub fn decompose(&self, cx: &PantsComplex) -> Decomposition {
        let n = self.letters.len();
        if self.letters.iter().all(|e| e.is_boundary()) {
            return Decomposition {
                subwords: alloc::vec![Subword {
                    letters: self.letters.clone(),
                    seam: None,
                    component: cx.component_of(self.letters[0]),
                }],
            };
        }
        // First position whose letter opens a run: boundary preceded by seam.
        let start = (0..n)
            .find(|&i| {
                self.letters[i].is_boundary() && self.letters[(i + n - 1) % n].is_seam()
            })
            .expect("a valid mixed word has a run start");
        let mut subwords = Vec::new();
        let mut run: Vec<OrientedEdge> = Vec::new();
        for k in 0..n {
            let e = self.letters[(start + k) % n];
            if e.is_boundary() {
                run.push(e);
            } else {
                let letters = core::mem::take(&mut run);
                let component = cx.component_of(letters[0]);
                subwords.push(Subword { letters, seam: Some(e), component });
            }
        }
        debug_assert!(run.is_empty(), "mixed words end runs with a seam");
        Decomposition { subwords }
    }

    /// Rebuilds the unique word with the given boundary runs, inserting the
    /// forced connecting seams. A single run reconstructs a pure boundary
    /// word. Run contents are re-validated.
    pub fn reconstruct_seams(
        runs: &[Vec<OrientedEdge>],
        cx: &PantsComplex,
    ) -> Result<CyclicWord, WordError> {
        if runs.is_empty() {
            return Err(WordError::Empty);
        }
        let mut letters = Vec::new();
        if runs.len() == 1 {
            letters.extend_from_slice(&runs[0]);
            return CyclicWord::validate(&letters, cx);
        }
        for (i, run) in runs.iter().enumerate() {
            if run.is_empty() {
                return Err(WordError::NoConnectingSeam { index: i });
            }
            letters.extend_from_slice(run);
            let next = &runs[(i + 1) % runs.len()];
            let last = *run.last().unwrap();
            let first = *next.first().ok_or(WordError::NoConnectingSeam { index: i })?;
            if !last.is_boundary() || !first.is_boundary() {
                return Err(WordError::NoConnectingSeam { index: i });
            }
            let seam = cx
                .seam_between(last, first)
                .ok_or(WordError::NoConnectingSeam { index: i })?;
            letters.push(seam);
        }
        CyclicWord::validate(&letters, cx)
    }

    /// Upper bound `i(w, w)` on the self-intersection number of the closed
    /// geodesic spelled by this word.
    ///
    /// Runs are grouped by boundary component; within a group, sorted by
    /// length descending (ties by first occurrence), the `i`-th run (1-based)
    /// contributes `2·i·|b|`. Rotation-invariant: ties have equal lengths.
    pub fn self_intersection(&self, cx: &PantsComplex) -> u64 {
        let decomposition = self.decompose(cx);
        let mut total = 0u64;
        for c in 1..=3u8 {
            let mut lengths: Vec<u64> = decomposition
                .subwords
                .iter()
                .filter(|s| s.component == c)
                .map(|s| s.letters.len() as u64)
                .collect();
            lengths.sort_by(|a, b| b.cmp(a)); // stable: ties keep occurrence order
            for (i, len) in lengths.iter().enumerate() {
                total += 2 * (i as u64 + 1) * len;
            }
        }
        total
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn cx() -> PantsComplex {
        PantsComplex::new()
    }

    fn parse_letters(s: &str) -> Vec<OrientedEdge> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    fn word(s: &str) -> CyclicWord {
        CyclicWord::validate(&parse_letters(s), &cx()).unwrap()
    }

    #[test]
    fn boundary_loop_is_valid() {
        let w = word("x1 x4-");
        assert_eq!(w.len(), 2);
        assert!(w.is_primitive());
        let d = w.decompose(&cx());
        assert_eq!(d.subwords.len(), 1);
        assert_eq!(d.subwords[0].component, 1);
        assert_eq!(d.subwords[0].seam, None);
        // Doubling the loop is valid but imprimitive.
        let w2 = word("x1 x4- x1 x4-");
        assert!(!w2.is_primitive());
        assert_eq!(w2.self_intersection(&cx()), 8); // 2·(1·4)
    }

    #[test]
    fn rejects_malformed_sequences() {
        let c = cx();
        assert_eq!(CyclicWord::validate(&[], &c), Err(WordError::Empty));
        assert_eq!(
            CyclicWord::validate(&parse_letters("y1 y1-"), &c),
            Err(WordError::NoBoundaryEdge)
        );
        assert_eq!(
            CyclicWord::validate(&parse_letters("x1"), &c),
            Err(WordError::NotClosed { at: 0 })
        );
        assert_eq!(
            CyclicWord::validate(&parse_letters("x1 x1-"), &c),
            Err(WordError::Backtracks { at: 0 })
        );
        assert_eq!(
            CyclicWord::validate(&parse_letters("x1 x2"), &c),
            Err(WordError::NotClosed { at: 0 })
        );
        // A length-1 boundary run squeezed between two seams (the x3 run).
        assert_eq!(
            CyclicWord::validate(&parse_letters("x1 y3 x2 x5- x2 y1 x3 y2-"), &c),
            Err(WordError::ShortBoundarySubword { at: 6 })
        );
    }

    #[test]
    fn canonical_rotation_is_least() {
        let a = word("x1 x4- x1 y3 x2 x5- y3- x4- x1 x4- y2 x3- x6 y2-");
        for r in 1..a.len() {
            let mut rotated = a.letters().to_vec();
            rotated.rotate_left(r);
            let b = CyclicWord::validate(&rotated, &cx()).unwrap();
            assert_eq!(a, b, "rotation by {r} changed the canonical form");
        }
        // Canonical form starts with the least letter here.
        assert_eq!(a.letters()[0], OrientedEdge::boundary(1));
    }

    #[test]
    fn worked_decomposition() {
        let c = cx();
        let w = word("x1 x4- x1 y3 x2 x5- y3- x4- x1 x4- y2 x3- x6 y2-");
        assert_eq!(w.len(), 14);
        let d = w.decompose(&c);
        let lens: Vec<usize> = d.subwords.iter().map(|s| s.letters.len()).collect();
        let comps: Vec<u8> = d.subwords.iter().map(|s| s.component).collect();
        assert_eq!(lens, vec![3, 2, 3, 2]);
        assert_eq!(comps, vec![1, 2, 1, 3]);
        assert_eq!(w.self_intersection(&c), 26);
        // Round trip through reconstruction.
        let runs: Vec<Vec<OrientedEdge>> =
            d.subwords.iter().map(|s| s.letters.clone()).collect();
        assert_eq!(CyclicWord::reconstruct_seams(&runs, &c).unwrap(), w);
    }

    #[test]
    fn reconstruction_requires_connecting_seams() {
        let c = cx();
        // Two runs on the same boundary component: no seam between them.
        let runs = vec![parse_letters("x1 x4-"), parse_letters("x4- x1")];
        assert_eq!(
            CyclicWord::reconstruct_seams(&runs, &c),
            Err(WordError::NoConnectingSeam { index: 0 })
        );
        // Figure-eight runs connect fine.
        let runs = vec![parse_letters("x1 x4-"), parse_letters("x3- x6")];
        let w = CyclicWord::reconstruct_seams(&runs, &c).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(String::from("x1 x4- y2 x3- x6 y2-"), alloc::format!("{w}"));
    }

    #[test]
    fn self_intersection_examples() {
        let c = cx();
        // Pure boundary loop of length 2k gives 4k.
        assert_eq!(word("x1 x4-").self_intersection(&c), 4);
        // Figure-eight: one run of length 2 on each of two components.
        assert_eq!(word("x1 x4- y2 x3- x6 y2-").self_intersection(&c), 8);
    }
}
