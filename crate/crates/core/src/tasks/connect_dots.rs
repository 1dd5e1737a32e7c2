//! Pairs of same-colored endpoints sharing a row or column, with only
//! background (0) between them, are joined by a straight segment of their
//! color.
//!
//! In a valid input every non-background cell sees exactly one cell of its
//! own color when looking along the four axis directions to the first
//! non-background cell, and the resulting segments do not overlap. The
//! generator reserves each segment on an occupancy grid and filters
//! candidate offsets so that neither endpoint sees any other same-colored
//! cell.

use super::{FailureReason, FOREGROUND};
use crate::error::VerifyError;
use crate::grid::{canvas, paint_in_place, CellSet, Connectivity, Example, Grid, GridObject, Isometry, Symbol};
use crate::objects::candidate_positions;
use crate::rng::{DifficultyBounds, TracedRng};

const ID: &str = "connect_dots";
const MAX_PAIRS: usize = 30;
const MAX_LEN: usize = 15;

pub(super) const MIN_DIMS: (usize, usize) = (1, 3);
pub(super) const DRAWS: &[&str] = &[
    "height 1..=30",
    "width 1..=30 (3..=30 when height < 3)",
    "colors 1..=9",
    "pairs 1..=min(30, area/8)",
    "segment length 3..=min(15, side)",
];

/// First non-background cell from `(r, c)` stepping by `(dr, dc)`.
fn first_hit(g: &Grid, r: usize, c: usize, dr: isize, dc: isize) -> Option<(usize, usize, Symbol)> {
    let (mut r, mut c) = (r as isize + dr, c as isize + dc);
    while let Some(s) = g.try_get(r, c) {
        if s != Symbol::ZERO {
            return Some((r as usize, c as usize, s));
        }
        r += dr;
        c += dc;
    }
    None
}

/// Whether `(r, c)` would see a cell of `color` in any direction but `skip`.
fn sees_color(g: &Grid, r: usize, c: usize, color: Symbol, skip: (isize, isize)) -> bool {
    Connectivity::Four
        .offsets()
        .iter()
        .filter(|&&d| d != skip)
        .any(|&(dr, dc)| matches!(first_hit(g, r, c, dr, dc), Some((_, _, s)) if s == color))
}

pub(super) fn generate(
    rng: &mut TracedRng,
    bounds: &DifficultyBounds,
) -> Result<Example, FailureReason> {
    let bg = Symbol::ZERO;
    let height = rng.unifint_usize(bounds, 1, 30)?;
    let min_width = if height < 3 { 3 } else { 1 };
    let width = rng.unifint_usize(bounds, min_width, 30)?;
    let num_colors = rng.unifint_usize(bounds, 1, 9)?;
    let colors = rng.sample(&FOREGROUND, num_colors);
    let num_pairs = rng.unifint_usize(bounds, 1, (height * width / 8).clamp(1, MAX_PAIRS))?;

    let mut reserved = canvas(height, width, bg).expect("valid dims");
    let mut input = reserved.clone();
    let mut output = reserved.clone();
    let mut placed = 0;
    for _ in 0..num_pairs {
        let mut directions = Vec::with_capacity(2);
        if width >= 3 {
            directions.push(false);
        }
        if height >= 3 {
            directions.push(true);
        }
        let vertical = *rng.rand_choice(&directions)?;
        let side = if vertical { height } else { width };
        let len = rng.unifint_usize(bounds, 3, side.min(MAX_LEN))?;
        let color = *rng.rand_choice(&colors)?;
        let cells: CellSet = (0..len)
            .map(|i| if vertical { (i, 0) } else { (0, i) })
            .collect();
        let segment = GridObject::monochrome(&cells, color);
        let far = if vertical { (len - 1, 0) } else { (0, len - 1) };
        let (fwd, back) = if vertical { ((1, 0), (-1, 0)) } else { ((0, 1), (0, -1)) };

        let spots = candidate_positions(&reserved, &segment, bg, |_, _, dr, dc| {
            let (r0, c0) = (dr as usize, dc as usize);
            let (r1, c1) = (r0 + far.0, c0 + far.1);
            !sees_color(&input, r0, c0, color, fwd) && !sees_color(&input, r1, c1, color, back)
        });
        if spots.is_empty() {
            continue;
        }
        let (dr, dc) = spots[rng.index(spots.len())];
        let ends = GridObject::monochrome(&CellSet::from_iter([(0, 0), far]), color);
        paint_in_place(&mut reserved, &segment, dr, dc).expect("candidate is in bounds");
        paint_in_place(&mut output, &segment, dr, dc).expect("candidate is in bounds");
        paint_in_place(&mut input, &ends, dr, dc).expect("candidate is in bounds");
        placed += 1;
    }
    if placed == 0 {
        return Err(FailureReason::PlacementExhausted);
    }
    let iso = *rng.rand_choice(&Isometry::ALL)?;
    Ok(iso.apply_example(&Example::new(input, output)))
}

pub(super) fn verify(input: &Grid) -> Result<Grid, VerifyError> {
    let mut out = input.clone();
    let mut filled = vec![false; input.area()];
    for r in 0..input.height() {
        for c in 0..input.width() {
            let color = input.get(r, c);
            if color == Symbol::ZERO {
                continue;
            }
            let partners: Vec<(usize, usize)> = Connectivity::Four
                .offsets()
                .iter()
                .filter_map(|&(dr, dc)| first_hit(input, r, c, dr, dc))
                .filter(|&(_, _, s)| s == color)
                .map(|(pr, pc, _)| (pr, pc))
                .collect();
            let &[(pr, pc)] = partners.as_slice() else {
                return Err(VerifyError::new(
                    ID,
                    format!("({r}, {c}) sees {} same-colored cells", partners.len()),
                ));
            };
            // Each pair is filled once, from its first cell in row-major order.
            if (pr, pc) < (r, c) {
                continue;
            }
            let between: Vec<(usize, usize)> = if pr == r {
                (c + 1..pc).map(|x| (r, x)).collect()
            } else {
                (r + 1..pr).map(|y| (y, c)).collect()
            };
            for (y, x) in between {
                let idx = y * input.width() + x;
                if filled[idx] {
                    return Err(VerifyError::new(ID, format!("segments cross at ({y}, {x})")));
                }
                filled[idx] = true;
                out.set(y, x, color);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joins_row_and_column_pairs() {
        let g = Grid::from_rows([
            [2, 0, 0, 2],
            [0, 3, 0, 0],
            [0, 0, 0, 0],
            [0, 3, 0, 0],
        ])
        .unwrap();
        let want = Grid::from_rows([
            [2, 2, 2, 2],
            [0, 3, 0, 0],
            [0, 3, 0, 0],
            [0, 3, 0, 0],
        ])
        .unwrap();
        assert_eq!(verify(&g).unwrap(), want);
    }

    #[test]
    fn rejects_ambiguous_and_crossing() {
        // Corner cell sees two partners.
        let corners = Grid::from_rows([[5, 0, 5], [0, 0, 0], [5, 0, 5]]).unwrap();
        assert!(verify(&corners).is_err());
        let lonely = Grid::from_rows([[5, 0, 6]]).unwrap();
        assert!(verify(&lonely).is_err());
        let crossing = Grid::from_rows([
            [0, 7, 0],
            [8, 0, 8],
            [0, 7, 0],
        ])
        .unwrap();
        assert!(verify(&crossing).is_err());
    }
}
