//! Every cell is blown up into a 2x2 block. Inputs are at most 15x15 so the
//! output stays within 30x30.

use super::{noise, FailureReason, ALL_SYMBOLS};
use crate::error::VerifyError;
use crate::grid::{upscale, Example, Grid, Isometry};
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "scale2";

pub(super) const MIN_DIMS: (usize, usize) = (1, 1);
pub(super) const DRAWS: &[&str] = &["height 1..=15", "width 1..=15", "colors 1..=10"];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let height = rng.unifint_usize(bounds, 1, 15)?;
    let width = rng.unifint_usize(bounds, 1, 15)?;
    let num_colors = rng.unifint_usize(bounds, 1, 10)?;
    let colors = rng.sample(&ALL_SYMBOLS, num_colors);
    let input = noise(rng, height, width, &colors);
    let output = upscale(&input, 2, 2).map_err(|_| FailureReason::ConstraintViolated)?;
    // Uniform scaling commutes with all eight symmetries.
    let iso = *rng.rand_choice(&Isometry::ALL)?;
    Ok(iso.apply_example(&Example::new(input, output)))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    upscale(input, 2, 2).map_err(|e| VerifyError::new(ID, e.to_string()))
}
