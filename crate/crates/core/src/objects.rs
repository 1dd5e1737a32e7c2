//! Random object shapes and the two placement strategies: rejection sampling
//! and sampling from an enumerated candidate set.

use std::collections::BTreeSet;

use crate::error::SamplingError;
use crate::grid::{CellSet, Connectivity, Grid, GridObject, Pixel, Symbol};
use crate::rng::TracedRng;

/// Size and extent limits for [`sample_shape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeBudget {
    num_pixels: usize,
    max_h: usize,
    max_w: usize,
    connectivity: Connectivity,
}

impl ShapeBudget {
    pub fn new(
        num_pixels: usize,
        max_h: usize,
        max_w: usize,
        connectivity: Connectivity,
    ) -> Result<Self, SamplingError> {
        if num_pixels == 0 || num_pixels > max_h * max_w {
            return Err(SamplingError::ShapeBudget {
                num_pixels,
                max_h,
                max_w,
            });
        }
        Ok(ShapeBudget {
            num_pixels,
            max_h,
            max_w,
            connectivity,
        })
    }

    pub fn num_pixels(&self) -> usize {
        self.num_pixels
    }
}

/// Grows a connected shape one adjacent cell at a time.
///
/// Starting from a single cell, each step adds a cell drawn uniformly from the
/// set of cells adjacent to the shape whose inclusion keeps the bounding box
/// within `max_h × max_w`. The result is shifted so that its minimum row and
/// column are 0.
pub fn sample_shape(rng: &mut TracedRng, budget: &ShapeBudget) -> CellSet {
    let (max_h, max_w) = (budget.max_h as isize, budget.max_w as isize);
    let mut cells: BTreeSet<(isize, isize)> = BTreeSet::from([(0, 0)]);
    let (mut r0, mut r1, mut c0, mut c1) = (0isize, 0isize, 0isize, 0isize);
    let mut frontier = Vec::new();
    while cells.len() < budget.num_pixels {
        let candidates: BTreeSet<(isize, isize)> = cells
            .iter()
            .flat_map(|&(r, c)| {
                budget
                    .connectivity
                    .offsets()
                    .iter()
                    .map(move |&(dr, dc)| (r + dr, c + dc))
            })
            .filter(|cell| !cells.contains(cell))
            .filter(|&(r, c)| {
                r.max(r1) - r.min(r0) < max_h && c.max(c1) - c.min(c0) < max_w
            })
            .collect();
        frontier.clear();
        frontier.extend(candidates);
        // Non-empty whenever the budget invariant holds.
        let (r, c) = frontier[rng.index(frontier.len())];
        cells.insert((r, c));
        r0 = r0.min(r);
        r1 = r1.max(r);
        c0 = c0.min(c);
        c1 = c1.max(c);
    }
    cells
        .into_iter()
        .map(|(r, c)| ((r - r0) as usize, (c - c0) as usize))
        .collect()
}

/// How [`colorize`] assigns symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    /// One color for the whole object.
    Uniform,
    /// Each pixel colored independently.
    PerPixel,
}

pub fn colorize(
    rng: &mut TracedRng,
    shape: &CellSet,
    colors: &[Symbol],
    mode: ColorMode,
) -> Result<GridObject, SamplingError> {
    if colors.is_empty() {
        return Err(SamplingError::EmptyChoice);
    }
    Ok(match mode {
        ColorMode::Uniform => GridObject::monochrome(shape, *rng.rand_choice(colors)?),
        ColorMode::PerPixel => {
            let pixels = shape
                .iter()
                .map(|&(row, col)| Pixel {
                    row,
                    col,
                    symbol: colors[rng.index(colors.len())],
                })
                .collect();
            GridObject::new(pixels).expect("shape cells are distinct")
        }
    })
}

/// Offset ranges `(dr_min, dr_max, dc_min, dc_max)` that keep the object's
/// bounding box inside the grid, or `None` if it cannot fit at all.
fn offset_range(g: &Grid, obj: &GridObject) -> Option<(isize, isize, isize, isize)> {
    let (r0, c0) = obj.origin()?;
    let (oh, ow) = obj.dims();
    if oh > g.height() || ow > g.width() {
        return None;
    }
    let (r0, c0) = (r0 as isize, c0 as isize);
    Some((
        -r0,
        (g.height() - oh) as isize - r0,
        -c0,
        (g.width() - ow) as isize - c0,
    ))
}

/// True when every translated pixel is in bounds and covers a `bg` cell.
pub fn placement_is_valid(g: &Grid, obj: &GridObject, bg: Symbol, dr: isize, dc: isize) -> bool {
    obj.pixels().iter().all(|p| {
        g.try_get(p.row as isize + dr, p.col as isize + dc) == Some(bg)
    })
}

/// Proposes random in-bounds offsets until one covers only background cells.
///
/// Returns `None` after `max_tries` rejected proposals, or immediately when
/// the object is larger than the grid.
pub fn place_rejection(
    rng: &mut TracedRng,
    g: &Grid,
    obj: &GridObject,
    bg: Symbol,
    max_tries: usize,
) -> Option<(isize, isize)> {
    if obj.is_empty() {
        return Some((0, 0));
    }
    let (dr0, dr1, dc0, dc1) = offset_range(g, obj)?;
    for _ in 0..max_tries {
        let dr = dr0 + rng.below((dr1 - dr0 + 1) as u64) as isize;
        let dc = dc0 + rng.below((dc1 - dc0 + 1) as u64) as isize;
        if placement_is_valid(g, obj, bg, dr, dc) {
            return Some((dr, dc));
        }
    }
    None
}

/// Every offset, in row-major order, where the object covers only background
/// cells and `predicate(g, obj, dr, dc)` holds.
pub fn candidate_positions<P>(
    g: &Grid,
    obj: &GridObject,
    bg: Symbol,
    mut predicate: P,
) -> Vec<(isize, isize)>
where
    P: FnMut(&Grid, &GridObject, isize, isize) -> bool,
{
    let Some((dr0, dr1, dc0, dc1)) = offset_range(g, obj) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for dr in dr0..=dr1 {
        for dc in dc0..=dc1 {
            if placement_is_valid(g, obj, bg, dr, dc) && predicate(g, obj, dr, dc) {
                out.push((dr, dc));
            }
        }
    }
    out
}

/// Predicate for [`candidate_positions`] that accepts every offset.
pub fn anywhere(_: &Grid, _: &GridObject, _: isize, _: isize) -> bool {
    true
}

/// True when no translated pixel is 4-adjacent to a non-`bg` cell of `g`.
pub fn keeps_clearance(g: &Grid, obj: &GridObject, bg: Symbol, dr: isize, dc: isize) -> bool {
    obj.pixels().iter().all(|p| {
        let (r, c) = (p.row as isize + dr, p.col as isize + dc);
        Connectivity::Four
            .offsets()
            .iter()
            .all(|&(a, b)| g.try_get(r + a, c + b).is_none_or(|s| s == bg))
    })
}
