//! Isolated single pixels are noise and get erased. Background is 0.
//!
//! Objects of two or more pixels are placed from the enumerated candidate
//! offsets; noise pixels are placed by rejection sampling and must have only
//! background as 4-neighbors.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{
    canvas, connected_components, paint_in_place, CellSet, Connectivity, Example, Grid,
    GridObject, Symbol,
};
use crate::objects::{anywhere, candidate_positions, keeps_clearance, place_rejection};
use crate::objects::{sample_shape, ShapeBudget};
use crate::rng::{DifficultyBounds, TracedRng};

pub(super) const MIN_DIMS: (usize, usize) = (3, 3);
pub(super) const DRAWS: &[&str] = &[
    "height 3..=30",
    "width 3..=30",
    "colors 1..=9",
    "objects 1..=area/12",
    "object size 2..=min(8, box)",
    "noise pixels 1..=area/10",
];

const NOISE_TRIES: usize = 30;

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let bg = Symbol::ZERO;
    let height = rng.unifint_usize(bounds, 3, 30)?;
    let width = rng.unifint_usize(bounds, 3, 30)?;
    let num_colors = rng.unifint_usize(bounds, 1, 9)?;
    let colors = rng.sample(&FOREGROUND, num_colors);
    let area = height * width;
    let num_objects = rng.unifint_usize(bounds, 1, (area / 12).max(1))?;
    let (box_h, box_w) = (height.min(4), width.min(4));

    let mut grid = canvas(height, width, bg).expect("valid dims");
    let mut placed = 0;
    for _ in 0..num_objects {
        let size = rng.unifint_usize(bounds, 2, (box_h * box_w).min(8))?;
        let budget = ShapeBudget::new(size, box_h, box_w, Connectivity::Four)?;
        let shape = sample_shape(rng, &budget);
        let obj = GridObject::monochrome(&shape, *rng.rand_choice(&colors)?);
        let spots = candidate_positions(&grid, &obj, bg, anywhere);
        if spots.is_empty() {
            break;
        }
        let (dr, dc) = spots[rng.index(spots.len())];
        paint_in_place(&mut grid, &obj, dr, dc).expect("candidate is in bounds");
        placed += 1;
    }
    if placed == 0 {
        return Err(FailureReason::PlacementExhausted);
    }
    let output = grid.clone();

    let num_noise = rng.unifint_usize(bounds, 1, (area / 10).max(1))?;
    let mut noisy = 0;
    for _ in 0..num_noise {
        let dot = GridObject::monochrome(&CellSet::from_iter([(0, 0)]), *rng.rand_choice(&colors)?);
        for _ in 0..NOISE_TRIES {
            let Some((dr, dc)) = place_rejection(rng, &grid, &dot, bg, 1) else {
                continue;
            };
            if keeps_clearance(&grid, &dot, bg, dr, dc) {
                paint_in_place(&mut grid, &dot, dr, dc).expect("in bounds");
                noisy += 1;
                break;
            }
        }
    }
    if noisy == 0 {
        return Err(FailureReason::PlacementExhausted);
    }
    Ok(Example::new(grid, output))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let mut out = input.clone();
    for obj in connected_components(input, Connectivity::Four) {
        let p = obj.pixels()[0];
        if obj.len() == 1 && p.symbol != Symbol::ZERO {
            out.set(p.row, p.col, Symbol::ZERO);
        }
    }
    Ok(out)
}
