//! Enumeration of the sign vectors `d` with `|d| = e`.
//!
//! Vertex `k` of an `n`-dimensional box maps bit `n-1-i` of `k` to
//! component `i`: a clear bit is `+1`, a set bit is `-1`. The first vertex is
//! `e`, and enumeration order is lexicographic with `+1` ranked before `-1`.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest dimension for which the `2^n` vertices are enumerated.
pub const MAX_ENUM_DIM: usize = 20;

pub fn check_dim(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_ENUM_DIM {
        Err(Error::DimensionTooLarge {
            n,
            limit: MAX_ENUM_DIM,
            what,
        })
    } else {
        Ok(())
    }
}

pub fn count(n: usize) -> usize {
    1usize << n
}

pub fn vertex(n: usize, k: usize) -> Vec<i8> {
    (0..n)
        .map(|i| if (k >> (n - 1 - i)) & 1 == 0 { 1 } else { -1 })
        .collect()
}

/// Evaluate `f` at every vertex, in parallel, returning results in
/// enumeration order.
pub fn map_all<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[i8]) -> T + Sync,
{
    (0..count(n))
        .into_par_iter()
        .map(|k| f(&vertex(n, k)))
        .collect()
}

/// Index of the largest value; ties go to the earliest vertex.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = k;
        }
    }
    best
}

pub fn to_f64(d: &[i8]) -> Vec<f64> {
    d.iter().map(|&v| f64::from(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_starts_at_e() {
        assert_eq!(vertex(2, 0), vec![1, 1]);
        assert_eq!(vertex(2, 1), vec![1, -1]);
        assert_eq!(vertex(2, 2), vec![-1, 1]);
        assert_eq!(vertex(2, 3), vec![-1, -1]);
    }

    #[test]
    fn map_all_preserves_order() {
        let v = map_all(3, |d| d.to_vec());
        for (k, d) in v.iter().enumerate() {
            assert_eq!(*d, vertex(3, k));
        }
    }

    #[test]
    fn argmax_prefers_first() {
        assert_eq!(argmax(&[0.5, 0.5, 0.25]), 0);
        assert_eq!(argmax(&[0.1, 0.5, 0.5]), 1);
    }
}
