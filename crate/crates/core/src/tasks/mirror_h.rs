//! Output is the input with its row order reversed.
//!
//! The pair is built upright and then jointly passed through one of the
//! orientations that commute with a row flip (identity, either mirror, half
//! turn), so orientation never has to be handled while drawing.

use super::{noise, FailureReason, ALL_SYMBOLS};
use crate::error::VerifyError;
use crate::grid::{hmirror, Example, Grid, Isometry};
use crate::rng::{DifficultyBounds, TracedRng};

pub(super) const MIN_DIMS: (usize, usize) = (1, 1);
pub(super) const DRAWS: &[&str] = &["height 1..=30", "width 1..=30", "colors 1..=10"];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let height = rng.unifint_usize(bounds, 1, 30)?;
    let width = rng.unifint_usize(bounds, 1, 30)?;
    let num_colors = rng.unifint_usize(bounds, 1, 10)?;
    let colors = rng.sample(&ALL_SYMBOLS, num_colors);
    let input = noise(rng, height, width, &colors);
    let output = hmirror(&input);
    let iso = *rng.rand_choice(&Isometry::AXIS_PRESERVING)?;
    Ok(iso.apply_example(&Example::new(input, output)))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    Ok(hmirror(input))
}
