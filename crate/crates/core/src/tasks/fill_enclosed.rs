//! Background cells (0) that cannot reach the border through background are
//! filled with 4.
//!
//! The generator draws closed rectangular rings on non-overlapping footprints
//! and sprinkles noise pixels outside them. Noise can occasionally seal off a
//! pocket of background by accident; such examples fail verification and are
//! filtered downstream.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{
    canvas, enclosed_cells, paint_in_place, CellSet, Example, Grid, GridObject, Symbol,
};
use crate::objects::place_rejection;
use crate::rng::{DifficultyBounds, TracedRng};

const FILL: Symbol = Symbol::lit(4);
const TRIES: usize = 12;

pub(super) const MIN_DIMS: (usize, usize) = (3, 3);
pub(super) const DRAWS: &[&str] = &[
    "height 3..=30",
    "width 3..=30",
    "colors 1..=8",
    "rings 1..=area/20",
    "ring height 3..=height",
    "ring width 3..=width",
    "noise pixels 0..=area/12",
];

fn rect(height: usize, width: usize) -> CellSet {
    (0..height)
        .flat_map(|r| (0..width).map(move |c| (r, c)))
        .collect()
}

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let bg = Symbol::ZERO;
    let height = rng.unifint_usize(bounds, 3, 30)?;
    let width = rng.unifint_usize(bounds, 3, 30)?;
    let palette: Vec<Symbol> = FOREGROUND.iter().copied().filter(|&s| s != FILL).collect();
    let num_colors = rng.unifint_usize(bounds, 1, palette.len())?;
    let colors = rng.sample(&palette, num_colors);
    let area = height * width;
    let num_rings = rng.unifint_usize(bounds, 1, (area / 20).max(1))?;

    // Footprints of placed rings and noise, so nothing lands inside a ring.
    let mut occupied = canvas(height, width, bg).expect("valid dims");
    let mut input = occupied.clone();
    let mut output = occupied.clone();
    let mut rings = 0;
    for _ in 0..num_rings {
        let rh = rng.unifint_usize(bounds, 3, height)?;
        let rw = rng.unifint_usize(bounds, 3, width)?;
        let footprint = GridObject::monochrome(&rect(rh, rw), Symbol::lit(1));
        let Some((dr, dc)) = place_rejection(rng, &occupied, &footprint, bg, TRIES) else {
            continue;
        };
        let color = *rng.rand_choice(&colors)?;
        let border: CellSet = rect(rh, rw)
            .iter()
            .copied()
            .filter(|&(r, c)| r == 0 || c == 0 || r + 1 == rh || c + 1 == rw)
            .collect();
        let interior: CellSet = rect(rh - 2, rw - 2)
            .iter()
            .map(|&(r, c)| (r + 1, c + 1))
            .collect();
        let ring = GridObject::monochrome(&border, color);
        paint_in_place(&mut occupied, &footprint, dr, dc).expect("placed in bounds");
        paint_in_place(&mut input, &ring, dr, dc).expect("placed in bounds");
        paint_in_place(&mut output, &ring, dr, dc).expect("placed in bounds");
        paint_in_place(&mut output, &GridObject::monochrome(&interior, FILL), dr, dc)
            .expect("placed in bounds");
        rings += 1;
    }
    if rings == 0 {
        return Err(FailureReason::PlacementExhausted);
    }

    let num_noise = rng.unifint_usize(bounds, 0, area / 12)?;
    for _ in 0..num_noise {
        let dot = GridObject::monochrome(&CellSet::from_iter([(0, 0)]), *rng.rand_choice(&colors)?);
        if let Some((dr, dc)) = place_rejection(rng, &occupied, &dot, bg, TRIES) {
            paint_in_place(&mut occupied, &dot, dr, dc).expect("in bounds");
            paint_in_place(&mut input, &dot, dr, dc).expect("in bounds");
            paint_in_place(&mut output, &dot, dr, dc).expect("in bounds");
        }
    }
    Ok(Example::new(input, output))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let mut out = input.clone();
    for &(r, c) in enclosed_cells(input, Symbol::ZERO).iter() {
        out.set(r, c, FILL);
    }
    Ok(out)
}
