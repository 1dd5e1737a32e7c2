//! Post-hoc difficulty metrics.
//!
//! Both metrics are meant as inspiration for ordering or grouping a dataset,
//! not as ground truth; the pipeline only attaches them as annotations.

use serde::{Deserialize, Serialize};

use crate::grid::{count_components, palette, Connectivity, Example};
use crate::rng::rng_difficulty;
use crate::tasks::GenerationAttempt;

/// Pixel, symbol and object counts of an example, and the derived scores.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DifficultyReport {
    pub rng_difficulty: f64,
    pub pso_difficulty: f64,
    /// Cells in input and output together.
    pub p: usize,
    /// Distinct symbols across both grids.
    pub s: usize,
    /// 4-connected single-symbol components across both grids.
    pub o: usize,
}

/// `(P/1800 + S/10 + O/P) / 3` with P, S and O counted over input and output
/// together. The report's `rng_difficulty` is left at 0.
pub fn pso_difficulty(e: &Example) -> DifficultyReport {
    let p = e.input.area() + e.output.area();
    let mut symbols = palette(&e.input);
    symbols.extend(palette(&e.output));
    let s = symbols.len();
    let o = count_components(&e.input, Connectivity::Four)
        + count_components(&e.output, Connectivity::Four);
    let pso = (p as f64 / 1800.0 + s as f64 / 10.0 + o as f64 / p as f64) / 3.0;
    DifficultyReport {
        rng_difficulty: 0.0,
        pso_difficulty: pso,
        p,
        s,
        o,
    }
}

/// RNG-Difficulty of the draws made during an attempt.
pub fn rng_difficulty_of(attempt: &GenerationAttempt) -> f64 {
    rng_difficulty(&attempt.trace)
}

/// Full report for a successful attempt.
pub fn report(attempt: &GenerationAttempt) -> Option<DifficultyReport> {
    let e = attempt.example()?;
    Some(DifficultyReport {
        rng_difficulty: rng_difficulty_of(attempt),
        ..pso_difficulty(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{canvas, Grid, Isometry, Symbol};
    use crate::rng::{DifficultyBounds, TracedRng};
    use crate::tasks::Task;

    #[test]
    fn single_cell_example() {
        let g = Grid::from_rows([[0]]).unwrap();
        let r = pso_difficulty(&Example::new(g.clone(), g));
        assert_eq!((r.p, r.s, r.o), (2, 1, 2));
        let expected = (2.0 / 1800.0 + 0.1 + 1.0) / 3.0;
        assert_eq!(r.pso_difficulty, expected);
        assert!((r.pso_difficulty - 0.367037).abs() < 1e-6);
    }

    #[test]
    fn full_canvas_example() {
        let g = canvas(30, 30, Symbol::lit(6)).unwrap();
        let r = pso_difficulty(&Example::new(g.clone(), g));
        assert_eq!((r.p, r.s, r.o), (1800, 1, 2));
        assert!((r.pso_difficulty - 0.367037).abs() < 1e-6);
    }

    #[test]
    fn counts_span_both_grids() {
        let input = Grid::from_rows([[1, 2], [2, 1]]).unwrap();
        let output = Grid::from_rows([[3]]).unwrap();
        let r = pso_difficulty(&Example::new(input, output));
        assert_eq!((r.p, r.s, r.o), (5, 3, 5));
    }

    #[test]
    fn extreme_bounds_rng_difficulty() {
        for (lo, want) in [(0.0, 0.0), (1.0, 1.0)] {
            let b = DifficultyBounds::new(lo, lo).unwrap();
            for task in Task::ALL {
                let attempt = task.generate(&mut TracedRng::new(3), &b);
                assert_eq!(rng_difficulty_of(&attempt), want, "{task}");
            }
        }
    }

    #[test]
    fn pso_in_unit_interval_and_isometry_invariant() {
        for task in Task::ALL {
            for seed in 0..50 {
                let attempt = task.generate(&mut TracedRng::new(seed), &DifficultyBounds::FULL);
                let Some(r) = report(&attempt) else { continue };
                assert!(r.pso_difficulty > 0.0 && r.pso_difficulty <= 1.0);
                assert!((0.0..=1.0).contains(&r.rng_difficulty));
                assert!(r.o <= r.p && (1..=10).contains(&r.s));
                let e = attempt.example().unwrap();
                for iso in Isometry::ALL {
                    let t = pso_difficulty(&iso.apply_example(e));
                    assert_eq!(t.pso_difficulty, r.pso_difficulty);
                }
            }
        }
    }
}
