//! Small helpers for sequences considered up to cyclic rotation.

/// Index `r` minimizing the rotation `xs[r..] ++ xs[..r]` lexicographically.
/// Ties resolve to the smallest index. O(n²), fine at word scale.
pub(crate) fn least_rotation_index<T: Ord>(xs: &[T]) -> usize {
    let n = xs.len();
    let mut best = 0;
    for cand in 1..n {
        for k in 0..n {
            let a = &xs[(cand + k) % n];
            let b = &xs[(best + k) % n];
            match a.cmp(b) {
                core::cmp::Ordering::Less => {
                    best = cand;
                    break;
                }
                core::cmp::Ordering::Greater => break,
                core::cmp::Ordering::Equal => {}
            }
        }
    }
    best
}

/// Smallest period `d` (dividing `len`) with `xs[i] == xs[(i + d) % len]`.
pub(crate) fn fundamental_period<T: Eq>(xs: &[T]) -> usize {
    let n = xs.len();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        if (0..n).all(|i| xs[i] == xs[(i + d) % n]) {
            return d;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_picks_least() {
        assert_eq!(least_rotation_index(&[2, 1, 3]), 1);
        assert_eq!(least_rotation_index(&[1, 1, 1]), 0);
        assert_eq!(least_rotation_index(&[3, 2, 1, 2]), 2);
        assert_eq!(least_rotation_index(&[1]), 0);
    }

    #[test]
    fn period_divides() {
        assert_eq!(fundamental_period(&[1, 2, 1, 2]), 2);
        assert_eq!(fundamental_period(&[1, 2, 3]), 3);
        assert_eq!(fundamental_period(&[7]), 1);
        assert_eq!(fundamental_period(&[4, 4, 4]), 1);
    }
}
