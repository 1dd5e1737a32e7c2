//! Non-zero pixels fall to the bottom of their column, keeping their
//! top-to-bottom order. Background is 0.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{canvas, Example, Grid, Symbol};
use crate::rng::{DifficultyBounds, TracedRng};

pub(super) const MIN_DIMS: (usize, usize) = (1, 1);
pub(super) const DRAWS: &[&str] = &[
    "height 1..=30",
    "width 1..=30",
    "colors 1..=9",
    "pixel count 1..=area",
];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let height = rng.unifint_usize(bounds, 1, 30)?;
    let width = rng.unifint_usize(bounds, 1, 30)?;
    let num_colors = rng.unifint_usize(bounds, 1, 9)?;
    let colors = rng.sample(&FOREGROUND, num_colors);
    let area = height * width;
    let num_pixels = rng.unifint_usize(bounds, 1, area)?;

    let positions: Vec<usize> = (0..area).collect();
    let mut cells = vec![Symbol::ZERO; area];
    for idx in rng.sample(&positions, num_pixels) {
        cells[idx] = colors[rng.index(colors.len())];
    }
    let input = Grid::from_cells(height, width, cells).expect("valid dims");
    let output = settle(&input);
    Ok(Example::new(input, output))
}

fn settle(input: &Grid) -> Grid {
    let mut out = canvas(input.height(), input.width(), Symbol::ZERO).expect("same dims");
    for c in 0..input.width() {
        let column: Vec<Symbol> = (0..input.height())
            .map(|r| input.get(r, c))
            .filter(|&s| s != Symbol::ZERO)
            .collect();
        let top = input.height() - column.len();
        for (i, s) in column.into_iter().enumerate() {
            out.set(top + i, c, s);
        }
    }
    out
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    Ok(settle(input))
}
