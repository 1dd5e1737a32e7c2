//! Restores a left-right symmetric grid from a copy with some columns of one
//! half blanked to 0.
//!
//! Generated inversely: the symmetric output comes first and the input is
//! derived from it by blanking columns. The pair is then jointly passed
//! through an axis-preserving orientation, so blanks may end up on either
//! half.

use super::{noise, FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{Example, Grid, Isometry, Symbol};
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "symmetry_complete";

pub(super) const MIN_DIMS: (usize, usize) = (1, 2);
pub(super) const DRAWS: &[&str] = &[
    "height 1..=30",
    "half width 1..=15",
    "colors 1..=9",
    "blanked columns 1..=half width",
];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let height = rng.unifint_usize(bounds, 1, 30)?;
    let half = rng.unifint_usize(bounds, 1, 15)?;
    let num_colors = rng.unifint_usize(bounds, 1, 9)?;
    let colors = rng.sample(&FOREGROUND, num_colors);
    let width = 2 * half;

    let left = noise(rng, height, half, &colors);
    let mut cells = Vec::with_capacity(height * width);
    for row in left.rows() {
        cells.extend_from_slice(row);
        cells.extend(row.iter().rev());
    }
    let output = Grid::from_cells(height, width, cells).expect("valid dims");

    let num_blank = rng.unifint_usize(bounds, 1, half)?;
    let right: Vec<usize> = (half..width).collect();
    let mut input = output.clone();
    for c in rng.sample(&right, num_blank) {
        for r in 0..height {
            input.set(r, c, Symbol::ZERO);
        }
    }
    let iso = *rng.rand_choice(&Isometry::AXIS_PRESERVING)?;
    Ok(iso.apply_example(&Example::new(input, output)))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let width = input.width();
    if !width.is_multiple_of(2) {
        return Err(VerifyError::new(ID, "width must be even"));
    }
    let mut out = input.clone();
    for r in 0..input.height() {
        for c in 0..width {
            let (a, b) = (input.get(r, c), input.get(r, width - 1 - c));
            let restored = match (a.value(), b.value()) {
                (0, 0) => {
                    return Err(VerifyError::new(ID, format!("({r}, {c}) and its mirror are both blank")))
                }
                (0, _) => b,
                (_, 0) => a,
                _ if a == b => a,
                _ => {
                    return Err(VerifyError::new(ID, format!("({r}, {c}) disagrees with its mirror")))
                }
            };
            out.set(r, c, restored);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restores_from_mirror() {
        let g = Grid::from_rows([[1, 2, 0, 1], [3, 4, 0, 0]]).unwrap();
        let want = Grid::from_rows([[1, 2, 2, 1], [3, 4, 4, 3]]).unwrap();
        assert_eq!(verify(&g).unwrap(), want);
    }

    #[test]
    fn rejects_invalid() {
        assert!(verify(&Grid::from_rows([[1, 2, 1]]).unwrap()).is_err());
        assert!(verify(&Grid::from_rows([[0, 0]]).unwrap()).is_err());
        assert!(verify(&Grid::from_rows([[1, 2]]).unwrap()).is_err());
    }
}
