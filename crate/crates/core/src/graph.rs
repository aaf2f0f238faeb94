//! Transition graph on oriented boundary edges and its cyclic paths.
//!
//! Vertices are the 12 oriented boundary edges. Arcs encode which boundary
//! edge can open the next boundary run of a word:
//!
//! * an `O` arc goes `x_i -> x_{i+1}` and `x_i⁻¹ -> x_{i-1}⁻¹` (indices mod
//!   6): the run starting at the source turns, has length 3, and the next
//!   run starts one index up (or down on the reversed side);
//! * an `E` arc joins `x_i <-> x_{i+2}⁻¹` both ways: the run passes through
//!   with length 2 and the next run flips orientation class.
//!
//! Every vertex has out-degree 2 (one arc of each label), so closed walks of
//! length `n` number `tr(M^n)` for the 0/1 adjacency matrix `M`, and cyclic
//! paths (closed walks up to rotation) are counted by the Burnside divisor
//! sum. In the basis `x1..x6, x1⁻¹..x6⁻¹` the matrix is the block matrix
//! `[[A, A²], [A⁻², A⁻¹]]` for the cyclic shift `A` of order 6, whose
//! nonzero spectrum `{±2, ±1, ±1}` drives every counting identity here.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::complex::{OrientedEdge, PantsComplex};
use crate::cyclic;
use crate::word::CyclicWord;

/// Number of graph vertices (oriented boundary edges).
pub const VERTEX_COUNT: usize = 12;

/// Default cap on enumerated path length.
pub const DEFAULT_PATH_CAP: usize = 24;

/// Label of an arc; determines the length of the boundary run it opens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcLabel {
    /// Turn: length-3 run, stays in the same orientation class.
    O,
    /// Crossing: length-2 run, flips orientation class.
    E,
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLabel::O => write!(f, "o"),
            ArcLabel::E => write!(f, "e"),
        }
    }
}

/// A closed walk considered up to rotation, stored canonically.
///
/// `labels[i]` is the arc from `vertices[i]` to `vertices[(i+1) % n]`; the
/// stored rotation is the lexicographically least vertex rotation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicPath {
    vertices: Vec<OrientedEdge>,
    labels: Vec<ArcLabel>,
}

impl CyclicPath {
    fn new(vertices: Vec<OrientedEdge>, labels: Vec<ArcLabel>) -> CyclicPath {
        debug_assert_eq!(vertices.len(), labels.len());
        let r = cyclic::least_rotation_index(&vertices);
        let mut path = CyclicPath { vertices, labels };
        path.vertices.rotate_left(r);
        path.labels.rotate_left(r);
        path
    }

    pub fn vertices(&self) -> &[OrientedEdge] {
        &self.vertices
    }

    pub fn labels(&self) -> &[ArcLabel] {
        &self.labels
    }

    /// Number of vertices `|τ|`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True unless the path is a proper power of a shorter cyclic path.
    pub fn is_primitive(&self) -> bool {
        cyclic::fundamental_period(&self.vertices) == self.vertices.len()
    }

    /// The primitive path this one is a power of (itself when primitive).
    pub fn fundamental_period(&self) -> CyclicPath {
        let d = cyclic::fundamental_period(&self.vertices);
        CyclicPath::new(self.vertices[..d].to_vec(), self.labels[..d].to_vec())
    }
}

impl PartialOrd for CyclicPath {
    fn partial_cmp(&self, other: &CyclicPath) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicPath {
    /// Shorter paths first, then canonical vertex sequences.
    fn cmp(&self, other: &CyclicPath) -> core::cmp::Ordering {
        (self.vertices.len(), &self.vertices).cmp(&(other.vertices.len(), &other.vertices))
    }
}

impl fmt::Display for CyclicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicPath({self})")
    }
}

/// Enumeration refused because the requested length exceeds the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub requested: usize,
    pub cap: usize,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path length {} exceeds the enumeration cap {}", self.requested, self.cap)
    }
}

/// The transition graph with its adjacency matrix and enumeration cap.
pub struct EdgeGraph {
    o_target: [usize; VERTEX_COUNT],
    e_target: [usize; VERTEX_COUNT],
    matrix: [[u8; VERTEX_COUNT]; VERTEX_COUNT],
    cap: usize,
}

impl EdgeGraph {
    /// Builds the graph and checks it against the edge complex: block
    /// structure of the matrix, exact spectrum, and that every arc admits
    /// the connecting seam its runs will need.
    pub fn new(cx: &PantsComplex) -> EdgeGraph {
        let mut o_target = [0usize; VERTEX_COUNT];
        let mut e_target = [0usize; VERTEX_COUNT];
        for i in 0..VERTEX_COUNT {
            if i < 6 {
                o_target[i] = (i + 1) % 6;
                e_target[i] = 6 + (i + 2) % 6;
            } else {
                o_target[i] = 6 + (i - 6 + 5) % 6;
                e_target[i] = (i - 6 + 4) % 6;
            }
        }
        let mut matrix = [[0u8; VERTEX_COUNT]; VERTEX_COUNT];
        for i in 0..VERTEX_COUNT {
            matrix[i][o_target[i]] = 1;
            matrix[i][e_target[i]] = 1;
        }
        let graph = EdgeGraph { o_target, e_target, matrix, cap: DEFAULT_PATH_CAP };
        graph.consistency_pass(cx);
        graph
    }

    /// Same graph with a different enumeration cap.
    pub fn with_cap(mut self, cap: usize) -> EdgeGraph {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Oriented boundary edge at matrix index `i` (`x1..x6` then reverses).
    pub fn vertex_edge(i: usize) -> OrientedEdge {
        assert!(i < VERTEX_COUNT, "vertex index out of range");
        let e = OrientedEdge::boundary((i % 6) as u8 + 1);
        if i < 6 {
            e
        } else {
            e.reverse()
        }
    }

    /// Matrix index of an oriented boundary edge.
    pub fn vertex_index(e: OrientedEdge) -> usize {
        assert!(e.is_boundary(), "graph vertices are boundary edges");
        let base = e.index() as usize - 1;
        match e.orientation() {
            crate::complex::Orientation::Forward => base,
            crate::complex::Orientation::Reversed => base + 6,
        }
    }

    /// 0/1 adjacency matrix in the `x1..x6, x1⁻¹..x6⁻¹` basis.
    pub fn adjacency(&self) -> &[[u8; VERTEX_COUNT]; VERTEX_COUNT] {
        &self.matrix
    }

    /// Arc targets `(o, e)` from a vertex index.
    pub fn targets(&self, i: usize) -> (usize, usize) {
        (self.o_target[i], self.e_target[i])
    }

    /// Label of the arc `u -> v`, if the arc exists.
    pub fn arc_label(&self, u: usize, v: usize) -> Option<ArcLabel> {
        if self.o_target[u] == v {
            Some(ArcLabel::O)
        } else if self.e_target[u] == v {
            Some(ArcLabel::E)
        } else {
            None
        }
    }

    /// All cyclic paths of length exactly `n`, canonical, sorted. With
    /// `primitive_only`, proper powers are dropped.
    ///
    /// Depth-first search from each start vertex, pruned to walks whose
    /// vertices never precede the start in edge order; a candidate is kept
    /// only when it already is its own canonical rotation, so every class
    /// appears exactly once.
    pub fn enumerate_cyclic_paths(
        &self,
        n: usize,
        primitive_only: bool,
    ) -> Result<Vec<CyclicPath>, BudgetExceeded> {
        assert!(n >= 1, "path length must be positive");
        if n > self.cap {
            return Err(BudgetExceeded { requested: n, cap: self.cap });
        }
        let mut found = Vec::new();
        let mut walk = Vec::with_capacity(n);
        for start in 0..VERTEX_COUNT {
            walk.push(start);
            self.extend_walks(start, n, &mut walk, &mut found);
            walk.pop();
        }
        let mut paths: Vec<CyclicPath> = found
            .into_iter()
            .filter(|p| !primitive_only || p.is_primitive())
            .collect();
        paths.sort();
        Ok(paths)
    }

    fn extend_walks(
        &self,
        start: usize,
        n: usize,
        walk: &mut Vec<usize>,
        found: &mut Vec<CyclicPath>,
    ) {
        let current = *walk.last().unwrap();
        if walk.len() == n {
            if self.arc_label(current, start).is_some() {
                let vertices: Vec<OrientedEdge> =
                    walk.iter().map(|&i| EdgeGraph::vertex_edge(i)).collect();
                if cyclic::least_rotation_index(&vertices) == 0 {
                    let labels: Vec<ArcLabel> = (0..n)
                        .map(|i| self.arc_label(walk[i], walk[(i + 1) % n]).unwrap())
                        .collect();
                    found.push(CyclicPath::new(vertices, labels));
                }
            }
            return;
        }
        let rank = |i: usize| EdgeGraph::vertex_edge(i).code();
        for t in [self.o_target[current], self.e_target[current]] {
            if rank(t) >= rank(start) {
                walk.push(t);
                self.extend_walks(start, n, walk, found);
                walk.pop();
            }
        }
    }

    /// Exact trace of the `k`-th matrix power, by integer matrix power.
    pub fn trace_power(&self, k: u32) -> BigUint {
        assert!(k >= 1, "power must be positive");
        let base: Vec<Vec<BigUint>> = (0..VERTEX_COUNT)
            .map(|i| (0..VERTEX_COUNT).map(|j| BigUint::from(self.matrix[i][j])).collect())
            .collect();
        let mut result: Option<Vec<Vec<BigUint>>> = None;
        let mut square = base;
        let mut exp = k;
        while exp > 0 {
            if exp & 1 == 1 {
                result = Some(match result {
                    None => square.clone(),
                    Some(r) => mat_mul(&r, &square),
                });
            }
            exp >>= 1;
            if exp > 0 {
                square = mat_mul(&square, &square);
            }
        }
        let m = result.unwrap();
        (0..VERTEX_COUNT).map(|i| m[i][i].clone()).sum()
    }

    /// Exact characteristic polynomial of the adjacency matrix, returned as
    /// the 13 coefficients of `det(λI - M)` from `λ^12` down to `λ^0`.
    /// Faddeev-LeVerrier over integers; every division is exact.
    pub fn char_poly(&self) -> [i128; 13] {
        let m: Vec<Vec<i128>> = (0..VERTEX_COUNT)
            .map(|i| (0..VERTEX_COUNT).map(|j| self.matrix[i][j] as i128).collect())
            .collect();
        let mut coeffs = [0i128; 13];
        coeffs[0] = 1;
        let mut aux = m.clone();
        for k in 1..=VERTEX_COUNT {
            let tr: i128 = (0..VERTEX_COUNT).map(|i| aux[i][i]).sum();
            assert_eq!(tr % k as i128, 0, "Faddeev-LeVerrier division must be exact");
            let c = -tr / k as i128;
            coeffs[k] = c;
            if k < VERTEX_COUNT {
                for i in 0..VERTEX_COUNT {
                    aux[i][i] += c;
                }
                aux = int_mat_mul(&m, &aux);
            }
        }
        coeffs
    }

    /// Word spelled by a cyclic path: vertex `v` followed by an `O` arc
    /// contributes the run `v, succ(v), v`; followed by an `E` arc, the run
    /// `v, succ(v)`. Connecting seams are forced; the graph guarantees they
    /// exist, so reconstruction cannot fail for a genuine path.
    pub fn path_to_word(&self, path: &CyclicPath, cx: &PantsComplex) -> CyclicWord {
        assert!(path.len() >= 2, "cyclic paths have length at least 2");
        let runs: Vec<Vec<OrientedEdge>> = path
            .vertices
            .iter()
            .zip(&path.labels)
            .map(|(&v, &label)| run_for(cx, v, label))
            .collect();
        CyclicWord::reconstruct_seams(&runs, cx)
            .expect("every graph arc admits its connecting seam")
    }

    fn consistency_pass(&self, cx: &PantsComplex) {
        // Out-degree 2, distinct targets, matrix matches the arc tables.
        for i in 0..VERTEX_COUNT {
            assert_ne!(self.o_target[i], self.e_target[i]);
            let row_sum: u8 = self.matrix[i].iter().sum();
            assert_eq!(row_sum, 2);
        }
        // E arcs come in opposite pairs, O arcs do not.
        for i in 0..VERTEX_COUNT {
            assert_eq!(self.e_target[self.e_target[i]], i);
            assert_ne!(self.o_target[self.o_target[i]], i);
        }

        // Block structure [[A, A²], [A⁻², A⁻¹]] with A the 6-cycle shift.
        let mut shift = [[0u8; 6]; 6];
        for i in 0..6 {
            shift[i][(i + 1) % 6] = 1;
        }
        let pow = |k: usize| {
            let mut out = [[0u8; 6]; 6];
            for (i, row) in out.iter_mut().enumerate() {
                row[(i + k) % 6] = 1;
            }
            out
        };
        assert_eq!(pow(1), shift);
        assert_eq!(pow(6), pow(0), "A^6 = I");
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(self.matrix[i][j], pow(1)[i][j]);
                assert_eq!(self.matrix[i][j + 6], pow(2)[i][j]);
                assert_eq!(self.matrix[i + 6][j], pow(4)[i][j]); // A⁻² = A⁴
                assert_eq!(self.matrix[i + 6][j + 6], pow(5)[i][j]); // A⁻¹ = A⁵
            }
        }

        // Spectrum: det(λI - M) = λ⁶ (λ-2)(λ-1)²(λ+1)²(λ+2), expanded here
        // independently of the Faddeev-LeVerrier computation.
        let mut expected = vec![1i128]; // leading coefficient
        for root in [2i128, 1, 1, -1, -1, -2] {
            let mut next = vec![0i128; expected.len() + 1];
            for (i, &c) in expected.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c * root;
            }
            expected = next;
        }
        expected.extend([0i128; 6]); // times λ⁶
        assert_eq!(self.char_poly().as_slice(), expected.as_slice());

        // Every arc admits the seam its runs will need: the run opened at
        // the source ends in a letter whose endpoint carries a seam leading
        // to the target vertex.
        for u in 0..VERTEX_COUNT {
            for (label, v) in
                [(ArcLabel::O, self.o_target[u]), (ArcLabel::E, self.e_target[u])]
            {
                let run = run_for(cx, EdgeGraph::vertex_edge(u), label);
                let last = *run.last().unwrap();
                assert!(
                    cx.seam_between(last, EdgeGraph::vertex_edge(v)).is_some(),
                    "arc {u} -> {v} has no connecting seam"
                );
            }
        }
    }
}

fn run_for(cx: &PantsComplex, v: OrientedEdge, label: ArcLabel) -> Vec<OrientedEdge> {
    let s = cx.boundary_successor(v);
    match label {
        ArcLabel::O => vec![v, s, v],
        ArcLabel::E => vec![v, s],
    }
}

fn mat_mul(a: &[Vec<BigUint>], b: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let n = a.len();
    let mut out = vec![vec![BigUint::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let term = &a[i][k] * &b[k][j];
                out[i][j] += term;
            }
        }
    }
    out
}

fn int_mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Number of closed walks of length `k`, in closed form: `2(2^k + 2)` for
/// even `k`, zero for odd `k` (the nonzero spectrum is `{±2, ±1, ±1}`).
pub fn closed_walks(k: u64) -> BigUint {
    assert!(k >= 1, "walk length must be positive");
    if k % 2 == 1 {
        return BigUint::zero();
    }
    let two = BigUint::from(2u32);
    BigUint::from(2u32) * (two.pow(k as u32) + BigUint::from(2u32))
}

/// Number of cyclic paths of length `n`: the Burnside divisor sum
/// `(1/n) Σ_{d|n} φ(d) · closed_walks(n/d)`, evaluated exactly. Zero for
/// odd `n`.
pub fn count_cyclic_paths(n: u64) -> BigUint {
    assert!(n >= 1, "path length must be positive");
    let mut sum = BigUint::zero();
    for d in divisors(n) {
        sum += BigUint::from(totient(d)) * closed_walks(n / d);
    }
    let (q, r) = sum.div_rem(&BigUint::from(n));
    assert!(r.is_zero(), "Burnside sum must divide evenly");
    q
}

/// How many graph steps a census at budgets `(L, K)` may take:
/// `N(L, K) = min(L / (4·l_max), sqrt(K / 3))`.
pub fn path_budget(l: f64, k: f64, l_max: f64) -> f64 {
    assert!(l_max > 0.0, "edge lengths are positive");
    let by_length = l / (4.0 * l_max);
    let by_intersection = libm::sqrt(k / 3.0);
    by_length.min(by_intersection)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
