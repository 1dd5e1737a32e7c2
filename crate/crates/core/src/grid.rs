//! The grid value type and the transformation primitives every generator,
//! verifier and metric is built from.
//!
//! Coordinates are `(row, col)` with the origin in the top-left corner and rows
//! growing downward, which matches the nested-list JSON layout of ARC files.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::GridError;

/// Largest allowed grid side.
pub const MAX_SIDE: usize = 30;
/// Number of distinct symbols.
pub const NUM_SYMBOLS: u8 = 10;

/// A cell color in `0..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0);

    pub fn new(value: u8) -> Result<Self, GridError> {
        if value < NUM_SYMBOLS {
            Ok(Symbol(value))
        } else {
            Err(GridError::SymbolOutOfRange(i64::from(value)))
        }
    }

    /// Panics on values above 9. Only for literals known to be valid.
    pub const fn lit(value: u8) -> Self {
        assert!(value < NUM_SYMBOLS, "symbol out of range");
        Symbol(value)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    /// All ten symbols in ascending order.
    pub fn all() -> impl Iterator<Item = Symbol> {
        (0..NUM_SYMBOLS).map(Symbol)
    }
}

impl TryFrom<i64> for Symbol {
    type Error = GridError;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        if (0..i64::from(NUM_SYMBOLS)).contains(&value) {
            Ok(Symbol(value as u8))
        } else {
            Err(GridError::SymbolOutOfRange(value))
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Rectangular, row-major matrix of symbols with sides in `1..=30`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    height: usize,
    width: usize,
    cells: Vec<Symbol>,
}

fn check_dims(height: usize, width: usize) -> Result<(), GridError> {
    if (1..=MAX_SIDE).contains(&height) && (1..=MAX_SIDE).contains(&width) {
        Ok(())
    } else {
        Err(GridError::Dimensions { height, width })
    }
}

/// A grid of `fill` with the given dimensions.
pub fn canvas(height: usize, width: usize, fill: Symbol) -> Result<Grid, GridError> {
    check_dims(height, width)?;
    Ok(Grid {
        height,
        width,
        cells: vec![fill; height * width],
    })
}

impl Grid {
    pub fn from_cells(height: usize, width: usize, cells: Vec<Symbol>) -> Result<Self, GridError> {
        check_dims(height, width)?;
        if cells.len() != height * width {
            return Err(GridError::CellCount {
                expected: height * width,
                actual: cells.len(),
            });
        }
        Ok(Grid {
            height,
            width,
            cells,
        })
    }

    /// Builds a grid from nested rows of raw integers, validating every value.
    pub fn from_rows<R, T>(rows: R) -> Result<Self, GridError>
    where
        R: IntoIterator<Item = T>,
        T: IntoIterator<Item = i64>,
    {
        let mut cells = Vec::new();
        let mut height = 0;
        let mut width = None;
        for row in rows {
            let before = cells.len();
            for v in row {
                cells.push(Symbol::try_from(v)?);
            }
            let len = cells.len() - before;
            match width {
                None => width = Some(len),
                Some(w) if w != len => return Err(GridError::Ragged { row: height }),
                Some(_) => {}
            }
            height += 1;
        }
        Grid::from_cells(height, width.unwrap_or(0), cells)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.cells[row * self.width + col]
    }

    /// Bounds-checked lookup with signed coordinates.
    pub fn try_get(&self, row: isize, col: isize) -> Option<Symbol> {
        if row < 0 || col < 0 || row as usize >= self.height || col as usize >= self.width {
            None
        } else {
            Some(self.get(row as usize, col as usize))
        }
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Symbol) {
        self.cells[row * self.width + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Symbol]> {
        self.cells.chunks(self.width)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows()
            .map(|row| row.iter().map(|s| s.value()).collect())
            .collect()
    }

    /// Occurrence count of each symbol, indexed by symbol value.
    pub fn histogram(&self) -> [usize; NUM_SYMBOLS as usize] {
        let mut counts = [0; NUM_SYMBOLS as usize];
        for s in &self.cells {
            counts[s.value() as usize] += 1;
        }
        counts
    }

    fn from_fn(height: usize, width: usize, f: impl Fn(usize, usize) -> Symbol) -> Grid {
        let mut cells = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                cells.push(f(r, c));
            }
        }
        Grid {
            height,
            width,
            cells,
        }
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid{:?}", self.to_rows())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for s in row {
                write!(f, "{}", s.value())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for Grid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Grid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<i64>> = Vec::deserialize(deserializer)?;
        Grid::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Flip about the horizontal axis: row order reversed.
pub fn hmirror(g: &Grid) -> Grid {
    Grid::from_fn(g.height, g.width, |r, c| g.get(g.height - 1 - r, c))
}

/// Flip about the vertical axis: column order reversed.
pub fn vmirror(g: &Grid) -> Grid {
    Grid::from_fn(g.height, g.width, |r, c| g.get(r, g.width - 1 - c))
}

/// Clockwise quarter turn.
pub fn rot90(g: &Grid) -> Grid {
    Grid::from_fn(g.width, g.height, |r, c| g.get(g.height - 1 - c, r))
}

pub fn rot180(g: &Grid) -> Grid {
    Grid::from_fn(g.height, g.width, |r, c| {
        g.get(g.height - 1 - r, g.width - 1 - c)
    })
}

pub fn rot270(g: &Grid) -> Grid {
    Grid::from_fn(g.width, g.height, |r, c| g.get(c, g.width - 1 - r))
}

pub fn transpose(g: &Grid) -> Grid {
    Grid::from_fn(g.width, g.height, |r, c| g.get(c, r))
}

/// Reflection about the anti-diagonal.
pub fn antitranspose(g: &Grid) -> Grid {
    Grid::from_fn(g.width, g.height, |r, c| {
        g.get(g.height - 1 - c, g.width - 1 - r)
    })
}

/// The eight symmetries of the square, used for orientation augmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Isometry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    HMirror,
    VMirror,
    Transpose,
    AntiTranspose,
}

impl Isometry {
    pub const ALL: [Isometry; 8] = [
        Isometry::Identity,
        Isometry::Rot90,
        Isometry::Rot180,
        Isometry::Rot270,
        Isometry::HMirror,
        Isometry::VMirror,
        Isometry::Transpose,
        Isometry::AntiTranspose,
    ];

    /// The subgroup that keeps row and column axes in place.
    pub const AXIS_PRESERVING: [Isometry; 4] = [
        Isometry::Identity,
        Isometry::HMirror,
        Isometry::VMirror,
        Isometry::Rot180,
    ];

    pub fn apply(self, g: &Grid) -> Grid {
        match self {
            Isometry::Identity => g.clone(),
            Isometry::Rot90 => rot90(g),
            Isometry::Rot180 => rot180(g),
            Isometry::Rot270 => rot270(g),
            Isometry::HMirror => hmirror(g),
            Isometry::VMirror => vmirror(g),
            Isometry::Transpose => transpose(g),
            Isometry::AntiTranspose => antitranspose(g),
        }
    }

    pub fn apply_example(self, e: &Example) -> Example {
        Example {
            input: self.apply(&e.input),
            output: self.apply(&e.output),
        }
    }
}

/// Expands every cell into an `fh × fw` block.
pub fn upscale(g: &Grid, fh: usize, fw: usize) -> Result<Grid, GridError> {
    if fh == 0 || fw == 0 {
        return Err(GridError::ScaleFactor { fh, fw });
    }
    check_dims(g.height * fh, g.width * fw)?;
    Ok(Grid::from_fn(g.height * fh, g.width * fw, |r, c| {
        g.get(r / fh, c / fw)
    }))
}

/// Distinct symbols present in the grid.
pub fn palette(g: &Grid) -> BTreeSet<Symbol> {
    g.histogram()
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(v, _)| Symbol(v as u8))
        .collect()
}

/// Set of non-negative `(row, col)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CellSet(BTreeSet<(usize, usize)>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, cell: (usize, usize)) -> bool {
        self.0.insert(cell)
    }

    pub fn contains(&self, cell: &(usize, usize)) -> bool {
        self.0.contains(cell)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }

    /// `(rows, cols)` of the bounding box measured from the origin.
    pub fn extent(&self) -> (usize, usize) {
        self.0.iter().fold((0, 0), |(h, w), &(r, c)| {
            (h.max(r + 1), w.max(c + 1))
        })
    }
}

impl FromIterator<(usize, usize)> for CellSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

/// One colored cell of an object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pixel {
    pub row: usize,
    pub col: usize,
    pub symbol: Symbol,
}

/// A set of colored pixels with pairwise distinct coordinates, kept in
/// row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GridObject {
    pixels: Vec<Pixel>,
}

impl GridObject {
    pub fn new(mut pixels: Vec<Pixel>) -> Result<Self, GridError> {
        pixels.sort_unstable();
        for pair in pixels.windows(2) {
            if (pair[0].row, pair[0].col) == (pair[1].row, pair[1].col) {
                return Err(GridError::DuplicatePixel {
                    row: pair[0].row,
                    col: pair[0].col,
                });
            }
        }
        Ok(GridObject { pixels })
    }

    /// Every cell of `cells` painted with `symbol`.
    pub fn monochrome(cells: &CellSet, symbol: Symbol) -> Self {
        GridObject {
            pixels: cells
                .iter()
                .map(|&(row, col)| Pixel { row, col, symbol })
                .collect(),
        }
    }

    pub fn pixels(&self) -> &[Pixel] {
        &self.pixels
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn cells(&self) -> CellSet {
        self.pixels.iter().map(|p| (p.row, p.col)).collect()
    }

    /// Top-left corner of the bounding box, `None` for an empty object.
    pub fn origin(&self) -> Option<(usize, usize)> {
        let r = self.pixels.iter().map(|p| p.row).min()?;
        let c = self.pixels.iter().map(|p| p.col).min()?;
        Some((r, c))
    }

    /// Bounding box size `(rows, cols)`; `(0, 0)` when empty.
    pub fn dims(&self) -> (usize, usize) {
        match self.origin() {
            None => (0, 0),
            Some((r0, c0)) => {
                let r1 = self.pixels.iter().map(|p| p.row).max().unwrap_or(r0);
                let c1 = self.pixels.iter().map(|p| p.col).max().unwrap_or(c0);
                (r1 - r0 + 1, c1 - c0 + 1)
            }
        }
    }

    /// Same object shifted so its bounding box starts at `(0, 0)`.
    pub fn normalized(&self) -> GridObject {
        let (r0, c0) = self.origin().unwrap_or((0, 0));
        GridObject {
            pixels: self
                .pixels
                .iter()
                .map(|p| Pixel {
                    row: p.row - r0,
                    col: p.col - c0,
                    symbol: p.symbol,
                })
                .collect(),
        }
    }

    pub fn palette(&self) -> BTreeSet<Symbol> {
        self.pixels.iter().map(|p| p.symbol).collect()
    }
}

/// An input/output pair. The two grids need not share dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Example {
    pub input: Grid,
    pub output: Grid,
}

impl Example {
    pub fn new(input: Grid, output: Grid) -> Self {
        Example { input, output }
    }
}

/// Pixel adjacency used for objectness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Four,
    Eight,
}

impl Connectivity {
    pub fn offsets(self) -> &'static [(isize, isize)] {
        const FOUR: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        const EIGHT: [(isize, isize); 8] = [
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        match self {
            Connectivity::Four => &FOUR,
            Connectivity::Eight => &EIGHT,
        }
    }
}

impl TryFrom<u8> for Connectivity {
    type Error = GridError;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        match value {
            4 => Ok(Connectivity::Four),
            8 => Ok(Connectivity::Eight),
            other => Err(GridError::Connectivity(other)),
        }
    }
}

/// Per-cell component labels (row-major) and the number of components.
///
/// Labels are assigned in row-major order of each component's first cell, so
/// label order equals topmost-then-leftmost order.
pub fn component_labels(g: &Grid, connectivity: Connectivity) -> (Vec<u32>, usize) {
    const UNSET: u32 = u32::MAX;
    let (h, w) = (g.height as isize, g.width as isize);
    let mut labels = vec![UNSET; g.area()];
    let mut queue = VecDeque::new();
    let mut next = 0u32;
    for start in 0..g.area() {
        if labels[start] != UNSET {
            continue;
        }
        let symbol = g.cells[start];
        labels[start] = next;
        queue.push_back(start);
        while let Some(idx) = queue.pop_front() {
            let (r, c) = ((idx / g.width) as isize, (idx % g.width) as isize);
            for &(dr, dc) in connectivity.offsets() {
                let (nr, nc) = (r + dr, c + dc);
                if nr < 0 || nc < 0 || nr >= h || nc >= w {
                    continue;
                }
                let n = nr as usize * g.width + nc as usize;
                if labels[n] == UNSET && g.cells[n] == symbol {
                    labels[n] = next;
                    queue.push_back(n);
                }
            }
        }
        next += 1;
    }
    (labels, next as usize)
}

/// Number of single-symbol connected components.
pub fn count_components(g: &Grid, connectivity: Connectivity) -> usize {
    component_labels(g, connectivity).1
}

/// Partition of the grid into maximal single-symbol connected objects, ordered
/// by their topmost-then-leftmost pixel.
pub fn connected_components(g: &Grid, connectivity: Connectivity) -> Vec<GridObject> {
    let (labels, n) = component_labels(g, connectivity);
    let mut objects = vec![Vec::new(); n];
    for (idx, &label) in labels.iter().enumerate() {
        objects[label as usize].push(Pixel {
            row: idx / g.width,
            col: idx % g.width,
            symbol: g.cells[idx],
        });
    }
    // Pixels were pushed in row-major order, which is already sorted.
    objects
        .into_iter()
        .map(|pixels| GridObject { pixels })
        .collect()
}

/// `g` with the object's pixels, shifted by `(dr, dc)`, written over it.
pub fn paint(g: &Grid, obj: &GridObject, dr: isize, dc: isize) -> Result<Grid, GridError> {
    let mut out = g.clone();
    paint_in_place(&mut out, obj, dr, dc)?;
    Ok(out)
}

/// Like [`paint`] but mutates `g`. On error `g` is left untouched.
pub fn paint_in_place(
    g: &mut Grid,
    obj: &GridObject,
    dr: isize,
    dc: isize,
) -> Result<(), GridError> {
    for p in &obj.pixels {
        let (r, c) = (p.row as isize + dr, p.col as isize + dc);
        if g.try_get(r, c).is_none() {
            return Err(GridError::OutOfBounds { row: r, col: c });
        }
    }
    for p in &obj.pixels {
        let (r, c) = ((p.row as isize + dr) as usize, (p.col as isize + dc) as usize);
        g.set(r, c, p.symbol);
    }
    Ok(())
}

/// Background cells that cannot reach the border through 4-connected
/// background cells.
pub fn enclosed_cells(g: &Grid, bg: Symbol) -> CellSet {
    let mut reachable = vec![false; g.area()];
    let mut queue = VecDeque::new();
    for r in 0..g.height {
        for c in 0..g.width {
            let border = r == 0 || c == 0 || r + 1 == g.height || c + 1 == g.width;
            let idx = r * g.width + c;
            if border && g.cells[idx] == bg {
                reachable[idx] = true;
                queue.push_back((r, c));
            }
        }
    }
    while let Some((r, c)) = queue.pop_front() {
        for &(dr, dc) in Connectivity::Four.offsets() {
            let (nr, nc) = (r as isize + dr, c as isize + dc);
            if g.try_get(nr, nc) != Some(bg) {
                continue;
            }
            let idx = nr as usize * g.width + nc as usize;
            if !reachable[idx] {
                reachable[idx] = true;
                queue.push_back((nr as usize, nc as usize));
            }
        }
    }
    (0..g.area())
        .filter(|&idx| g.cells[idx] == bg && !reachable[idx])
        .map(|idx| (idx / g.width, idx % g.width))
        .collect()
}

/// SHA-256 over a fixed byte layout: for the input and then the output grid,
/// one byte of height, one byte of width, then every cell as one byte in
/// row-major order.
pub fn canonical_digest(e: &Example) -> [u8; 32] {
    let mut hasher = Sha256::new();
    let mut buf = Vec::with_capacity(4 + e.input.area() + e.output.area());
    for g in [&e.input, &e.output] {
        buf.push(g.height as u8);
        buf.push(g.width as u8);
        buf.extend(g.cells.iter().map(|s| s.value()));
    }
    hasher.update(&buf);
    hasher.finalize().into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&[i64]]) -> Grid {
        Grid::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    #[test]
    fn canvas_examples() {
        assert_eq!(canvas(1, 1, Symbol::ZERO).unwrap(), grid(&[&[0]]));
        assert_eq!(
            canvas(2, 3, Symbol::lit(5)).unwrap(),
            grid(&[&[5, 5, 5], &[5, 5, 5]])
        );
        assert!(matches!(
            canvas(0, 4, Symbol::lit(1)),
            Err(GridError::Dimensions { height: 0, width: 4 })
        ));
        assert!(canvas(31, 1, Symbol::ZERO).is_err());
        assert!(canvas(30, 30, Symbol::ZERO).is_ok());
    }

    #[test]
    fn symbol_range() {
        assert!(Symbol::new(9).is_ok());
        assert!(Symbol::new(10).is_err());
        assert!(Symbol::try_from(-1).is_err());
    }

    #[test]
    fn from_rows_rejects_bad_shapes() {
        assert!(matches!(
            Grid::from_rows(vec![vec![1, 2], vec![3]]),
            Err(GridError::Ragged { row: 1 })
        ));
        assert!(Grid::from_rows(Vec::<Vec<i64>>::new()).is_err());
        assert!(Grid::from_rows(vec![Vec::<i64>::new()]).is_err());
        assert!(Grid::from_rows(vec![vec![10]]).is_err());
    }

    #[test]
    fn mirrors_and_rotations() {
        assert_eq!(hmirror(&grid(&[&[1], &[2]])), grid(&[&[2], &[1]]));
        assert_eq!(hmirror(&grid(&[&[3]])), grid(&[&[3]]));
        assert_eq!(vmirror(&grid(&[&[1, 2]])), grid(&[&[2, 1]]));
        assert_eq!(vmirror(&grid(&[&[7]])), grid(&[&[7]]));
        assert_eq!(rot90(&grid(&[&[1, 2], &[3, 4]])), grid(&[&[3, 1], &[4, 2]]));
        assert_eq!(rot90(&grid(&[&[1], &[2]])), grid(&[&[2, 1]]));
        let g = grid(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(rot180(&g), rot90(&rot90(&g)));
        assert_eq!(rot270(&g), rot90(&rot180(&g)));
        assert_eq!(transpose(&g), grid(&[&[1, 4], &[2, 5], &[3, 6]]));
        assert_eq!(antitranspose(&g), rot90(&vmirror(&g)));
    }

    #[test]
    fn upscale_examples() {
        assert_eq!(upscale(&grid(&[&[1]]), 2, 2).unwrap(), grid(&[&[1, 1], &[1, 1]]));
        assert_eq!(upscale(&grid(&[&[1, 2]]), 1, 2).unwrap(), grid(&[&[1, 1, 2, 2]]));
        let g = grid(&[&[1, 2], &[3, 4]]);
        assert_eq!(upscale(&g, 1, 1).unwrap(), g);
        let big = canvas(16, 2, Symbol::ZERO).unwrap();
        assert!(upscale(&big, 2, 2).is_err());
        assert!(upscale(&g, 0, 1).is_err());
    }

    #[test]
    fn palette_examples() {
        let set = |v: &[u8]| v.iter().map(|&x| Symbol::lit(x)).collect::<BTreeSet<_>>();
        assert_eq!(palette(&grid(&[&[0]])), set(&[0]));
        assert_eq!(palette(&grid(&[&[1, 2], &[2, 1]])), set(&[1, 2]));
        assert_eq!(palette(&canvas(5, 5, Symbol::lit(3)).unwrap()), set(&[3]));
    }

    #[test]
    fn components_examples() {
        let single = connected_components(&grid(&[&[5]]), Connectivity::Four);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].len(), 1);

        let checker = grid(&[&[1, 2], &[2, 1]]);
        assert_eq!(connected_components(&checker, Connectivity::Four).len(), 4);
        assert_eq!(connected_components(&checker, Connectivity::Eight).len(), 2);
    }

    #[test]
    fn components_are_ordered_top_left() {
        let g = grid(&[&[1, 1, 2], &[3, 1, 2], &[3, 3, 3]]);
        let objs = connected_components(&g, Connectivity::Four);
        let origins: Vec<_> = objs
            .iter()
            .map(|o| (o.pixels()[0].row, o.pixels()[0].col))
            .collect();
        assert_eq!(origins, vec![(0, 0), (0, 2), (1, 0)]);
        assert_eq!(objs[0].len(), 3);
    }

    #[test]
    fn paint_examples() {
        let obj = GridObject::new(vec![Pixel {
            row: 0,
            col: 0,
            symbol: Symbol::lit(3),
        }])
        .unwrap();
        let base = canvas(2, 2, Symbol::ZERO).unwrap();
        assert_eq!(paint(&base, &obj, 1, 1).unwrap(), grid(&[&[0, 0], &[0, 3]]));
        assert_eq!(base, canvas(2, 2, Symbol::ZERO).unwrap());
        assert_eq!(paint(&base, &GridObject::default(), 0, 0).unwrap(), base);

        let one = obj_at(0, 0, 1);
        let err = paint(&canvas(1, 1, Symbol::ZERO).unwrap(), &one, 0, 1).unwrap_err();
        assert_eq!(err, GridError::OutOfBounds { row: 0, col: 1 });
    }

    fn obj_at(row: usize, col: usize, v: u8) -> GridObject {
        GridObject::new(vec![Pixel {
            row,
            col,
            symbol: Symbol::lit(v),
        }])
        .unwrap()
    }

    #[test]
    fn duplicate_pixels_rejected() {
        let p = Pixel {
            row: 1,
            col: 1,
            symbol: Symbol::lit(2),
        };
        let q = Pixel {
            symbol: Symbol::lit(3),
            ..p
        };
        assert!(GridObject::new(vec![p, q]).is_err());
    }

    #[test]
    fn enclosed_examples() {
        assert!(enclosed_cells(&canvas(3, 3, Symbol::ZERO).unwrap(), Symbol::ZERO).is_empty());
        let ring = grid(&[&[1, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        let cells = enclosed_cells(&ring, Symbol::ZERO);
        assert_eq!(cells.iter().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        // A diagonal gap does not leak under 4-connectivity.
        let leaky = grid(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        assert_eq!(enclosed_cells(&leaky, Symbol::ZERO).len(), 1);
    }

    #[test]
    fn digest_layout() {
        let e = Example::new(grid(&[&[1, 2]]), grid(&[&[3]]));
        let expected: [u8; 32] = Sha256::digest([1u8, 2, 1, 2, 1, 1, 3]).into();
        assert_eq!(canonical_digest(&e), expected);
        assert_eq!(canonical_digest(&e), canonical_digest(&e.clone()));
        // Same cells, different shape.
        let f = Example::new(grid(&[&[1], &[2]]), grid(&[&[3]]));
        assert_ne!(canonical_digest(&e), canonical_digest(&f));
    }

    #[test]
    fn json_round_trip() {
        let g = grid(&[&[0, 1], &[2, 3]]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[[0,1],[2,3]]");
        assert_eq!(serde_json::from_str::<Grid>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Grid>("[[0,1],[2]]").is_err());
        assert!(serde_json::from_str::<Grid>("[[12]]").is_err());
    }
}
