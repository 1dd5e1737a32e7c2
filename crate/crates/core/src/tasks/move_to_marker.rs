//! A single-colored object moves so that its bounding-box top-left corner
//! lands on a one-pixel marker of another color; the marker disappears.
//!
//! Background is 0. The marker is drawn from the candidate offsets that keep
//! it clear of the object and leave room for the moved object.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{canvas, paint_in_place, CellSet, Connectivity, Example, Grid, GridObject, Pixel, Symbol};
use crate::objects::{anywhere, candidate_positions, keeps_clearance, sample_shape, ShapeBudget};
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "move_to_marker";

pub(super) const MIN_DIMS: (usize, usize) = (3, 3);
pub(super) const DRAWS: &[&str] = &[
    "height 3..=30",
    "width 3..=30",
    "object box height 1..=min(6, height-1)",
    "object box width 1..=min(6, width-1)",
    "object size 2..=box",
];

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let bg = Symbol::ZERO;
    let height = rng.unifint_usize(bounds, 3, 30)?;
    let width = rng.unifint_usize(bounds, 3, 30)?;
    let box_h = rng.unifint_usize(bounds, 1, (height - 1).min(6))?;
    let lo_w = if box_h == 1 { 2 } else { 1 };
    let box_w = rng.unifint_usize(bounds, lo_w, (width - 1).min(6))?;
    let size = rng.unifint_usize(bounds, 2, box_h * box_w)?;
    let pair = rng.sample(&FOREGROUND, 2);
    let (color, marker_color) = (pair[0], pair[1]);

    let shape = sample_shape(rng, &ShapeBudget::new(size, box_h, box_w, Connectivity::Eight)?);
    let obj = GridObject::monochrome(&shape, color);
    let (oh, ow) = obj.dims();

    let mut input = canvas(height, width, bg).expect("valid dims");
    let spots = candidate_positions(&input, &obj, bg, anywhere);
    if spots.is_empty() {
        return Err(FailureReason::PlacementExhausted);
    }
    let (dr, dc) = spots[rng.index(spots.len())];
    paint_in_place(&mut input, &obj, dr, dc).expect("candidate is in bounds");

    let marker = GridObject::monochrome(&CellSet::from_iter([(0, 0)]), marker_color);
    let spots = candidate_positions(&input, &marker, bg, |g, m, r, c| {
        keeps_clearance(g, m, bg, r, c)
            && r as usize + oh <= height
            && c as usize + ow <= width
    });
    if spots.is_empty() {
        return Err(FailureReason::PlacementExhausted);
    }
    let (mr, mc) = spots[rng.index(spots.len())];
    paint_in_place(&mut input, &marker, mr, mc).expect("candidate is in bounds");

    let mut output = canvas(height, width, bg).expect("valid dims");
    paint_in_place(&mut output, &obj, mr, mc).expect("room was checked");
    Ok(Example::new(input, output))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let bg = Symbol::ZERO;
    let hist = input.histogram();
    let present: Vec<usize> = (1..hist.len()).filter(|&s| hist[s] > 0).collect();
    let &[a, b] = present.as_slice() else {
        return Err(VerifyError::new(ID, "expected exactly two foreground colors"));
    };
    let (object_color, marker_color) = match (hist[a], hist[b]) {
        (1, n) if n > 1 => (b, a),
        (n, 1) if n > 1 => (a, b),
        _ => return Err(VerifyError::new(ID, "need one marker pixel and one larger object")),
    };
    let mut marker = (0, 0);
    let mut pixels = Vec::new();
    for r in 0..input.height() {
        for c in 0..input.width() {
            let s = input.get(r, c);
            if s.value() as usize == marker_color {
                marker = (r, c);
            } else if s.value() as usize == object_color {
                pixels.push(Pixel { row: r, col: c, symbol: s });
            }
        }
    }
    let obj = GridObject::new(pixels).expect("distinct cells");
    let dot = GridObject::monochrome(&CellSet::from_iter([(0, 0)]), bg);
    if !keeps_clearance(input, &dot, bg, marker.0 as isize, marker.1 as isize) {
        return Err(VerifyError::new(ID, "marker touches the object"));
    }
    let mut output = canvas(input.height(), input.width(), bg).expect("same dims");
    paint_in_place(&mut output, &obj.normalized(), marker.0 as isize, marker.1 as isize)
        .map_err(|_| VerifyError::new(ID, "object does not fit at the marker"))?;
    Ok(output)
}
