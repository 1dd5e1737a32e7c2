//! Output is a 1x1 grid holding the most frequent non-background symbol.
//!
//! Background is the most frequent symbol overall. Valid inputs have a strict
//! background and a strict majority among the remaining symbols; the
//! generator builds symbol counts that guarantee both, and the verifier
//! rejects anything with a tie.

use super::{FailureReason, ALL_SYMBOLS};
use crate::error::VerifyError;
use crate::grid::{Example, Grid, Symbol};
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "majority_color";

pub(super) const MIN_DIMS: (usize, usize) = (2, 2);
pub(super) const DRAWS: &[&str] = &[
    "height 2..=30",
    "width 2..=30",
    "foreground colors 1..=9",
    "majority count",
    "count of each other color",
];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let height = rng.unifint_usize(bounds, 2, 30)?;
    let width = rng.unifint_usize(bounds, 2, 30)?;
    let area = height * width;
    // Two or more foreground colors need at least 2 + (k - 1) foreground
    // cells plus 3 background cells.
    let max_colors = if area >= 6 { (area - 4).min(9) } else { 1 };
    let num_colors = rng.unifint_usize(bounds, 1, max_colors)?;
    let min_majority = if num_colors >= 2 { 2 } else { 1 };
    let max_majority = (area - num_colors) / 2;
    let majority = rng.unifint_usize(bounds, min_majority, max_majority)?;

    // Cells left for the minor colors while background stays above majority.
    let mut budget = area - 2 * majority - 1;
    let mut minor_counts = Vec::with_capacity(num_colors - 1);
    for remaining in (0..num_colors - 1).rev() {
        let hi = (majority - 1).min(budget - remaining);
        let count = rng.unifint_usize(bounds, 1, hi)?;
        budget -= count;
        minor_counts.push(count);
    }

    let symbols = rng.sample(&ALL_SYMBOLS, num_colors + 1);
    let background = symbols[0];
    let winner = symbols[1];
    let mut cells = vec![winner; majority];
    for (&symbol, &count) in symbols[2..].iter().zip(&minor_counts) {
        cells.extend(std::iter::repeat_n(symbol, count));
    }
    cells.resize(area, background);
    rng.shuffle(&mut cells);

    let input = Grid::from_cells(height, width, cells).expect("valid dims");
    let output = Grid::from_cells(1, 1, vec![winner]).expect("1x1");
    Ok(Example::new(input, output))
}

/// Index of the strictly largest count, if there is one.
fn strict_argmax(counts: impl Iterator<Item = (usize, usize)>) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    let mut tied = false;
    for (idx, n) in counts {
        match best {
            Some((_, m)) if n == m => tied = true,
            Some((_, m)) if n < m => {}
            _ => {
                best = Some((idx, n));
                tied = false;
            }
        }
    }
    if tied {
        None
    } else {
        best.map(|(idx, _)| idx)
    }
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let hist = input.histogram();
    let background = strict_argmax(hist.iter().copied().enumerate())
        .ok_or_else(|| VerifyError::new(ID, "no unique background symbol"))?;
    let foreground = hist
        .iter()
        .copied()
        .enumerate()
        .filter(|&(s, n)| s != background && n > 0);
    let winner = strict_argmax(foreground)
        .ok_or_else(|| VerifyError::new(ID, "no unique most frequent foreground symbol"))?;
    Ok(Grid::from_cells(1, 1, vec![Symbol::lit(winner as u8)]).expect("1x1"))
}
