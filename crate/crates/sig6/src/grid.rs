//! Inclusive evenly spaced grids.

/// `count` evenly spaced points from `start` to `stop`, inclusive of
/// both endpoints (the last point is forced to `stop` exactly rather
/// than accumulated). With `count == 1` the grid is just `[start]`.
///
/// # Panics
///
/// Panics if `count == 0`.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    assert!(count >= 1, "linspace requires count >= 1");
    if count == 1 {
        return vec![start];
    }
    let step = (stop - start) / ((count - 1) as f64);
    (0..count)
        .map(|i| {
            if i == count - 1 {
                stop
            } else {
                start + step * i as f64
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    // Frozen reference decimals are kept at full printed length.
    #![allow(clippy::excessive_precision)]
    use super::*;

    #[test]
    fn endpoints_are_exact() {
        let g = linspace(0.02, 0.9, 45);
        assert_eq!(g.len(), 45);
        assert_eq!(g[0], 0.02);
        assert_eq!(g[44], 0.9);
    }

    #[test]
    fn symmetric_three_point_grid_hits_zero() {
        let k = 1.6341683218140519;
        let g = linspace(-k, k, 3);
        assert_eq!(g, vec![-k, 0.0, k]);
    }

    #[test]
    fn single_point() {
        assert_eq!(linspace(0.3, 0.9, 1), vec![0.3]);
    }

    #[test]
    #[should_panic(expected = "count >= 1")]
    fn zero_count_panics() {
        let _ = linspace(0.0, 1.0, 0);
    }
}
