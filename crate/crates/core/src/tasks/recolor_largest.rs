//! The strictly largest non-background object (4-connected, single symbol) is
//! recolored to 1. Background is 0 and objects never touch each other.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{
    canvas, connected_components, paint_in_place, Connectivity, Example, Grid, GridObject,
    Symbol,
};
use crate::objects::{candidate_positions, keeps_clearance, sample_shape, ShapeBudget};
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "recolor_largest";
const TARGET: Symbol = Symbol::lit(1);

pub(super) const MIN_DIMS: (usize, usize) = (3, 3);
pub(super) const DRAWS: &[&str] = &[
    "height 3..=30",
    "width 3..=30",
    "colors 1..=8",
    "objects 1..=area/10",
    "largest size 2..=min(12, box)",
    "other sizes 1..largest",
];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let bg = Symbol::ZERO;
    let height = rng.unifint_usize(bounds, 3, 30)?;
    let width = rng.unifint_usize(bounds, 3, 30)?;
    let num_colors = rng.unifint_usize(bounds, 1, 8)?;
    let colors = rng.sample(&FOREGROUND[1..], num_colors);
    let num_objects = rng.unifint_usize(bounds, 1, (height * width / 10).max(1))?;
    let (box_h, box_w) = (height.min(5), width.min(5));
    let largest = rng.unifint_usize(bounds, 2, (box_h * box_w).min(12))?;

    let mut input = canvas(height, width, bg).expect("valid dims");
    let mut output = input.clone();
    for i in 0..num_objects {
        let size = if i == 0 {
            largest
        } else {
            rng.unifint_usize(bounds, 1, largest - 1)?
        };
        let budget = ShapeBudget::new(size, box_h, box_w, Connectivity::Four)?;
        let shape = sample_shape(rng, &budget);
        let obj = GridObject::monochrome(&shape, *rng.rand_choice(&colors)?);
        let spots = candidate_positions(&input, &obj, bg, |g, o, dr, dc| {
            keeps_clearance(g, o, bg, dr, dc)
        });
        if spots.is_empty() {
            if i == 0 {
                return Err(FailureReason::PlacementExhausted);
            }
            continue;
        }
        let (dr, dc) = spots[rng.index(spots.len())];
        paint_in_place(&mut input, &obj, dr, dc).expect("candidate is in bounds");
        let painted = if i == 0 {
            GridObject::monochrome(&shape, TARGET)
        } else {
            obj
        };
        paint_in_place(&mut output, &painted, dr, dc).expect("candidate is in bounds");
    }
    Ok(Example::new(input, output))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let objects: Vec<GridObject> = connected_components(input, Connectivity::Four)
        .into_iter()
        .filter(|o| o.pixels()[0].symbol != Symbol::ZERO)
        .collect();
    let max = objects
        .iter()
        .map(GridObject::len)
        .max()
        .ok_or_else(|| VerifyError::new(ID, "no foreground object"))?;
    let mut largest = objects.iter().filter(|o| o.len() == max);
    let target = largest.next().expect("max exists");
    if largest.next().is_some() {
        return Err(VerifyError::new(ID, "largest object is not unique"));
    }
    let mut out = input.clone();
    for p in target.pixels() {
        out.set(p.row, p.col, TARGET);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recolors_unique_largest() {
        let g = Grid::from_rows([[2, 2, 0, 3], [2, 0, 0, 3], [0, 0, 5, 0]]).unwrap();
        let want = Grid::from_rows([[1, 1, 0, 3], [1, 0, 0, 3], [0, 0, 5, 0]]).unwrap();
        assert_eq!(verify(&g).unwrap(), want);
    }

    #[test]
    fn rejects_tied_or_empty() {
        assert!(verify(&Grid::from_rows([[2, 0, 3]]).unwrap()).is_err());
        assert!(verify(&Grid::from_rows([[0, 0]]).unwrap()).is_err());
    }
}
