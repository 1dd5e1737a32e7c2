#![allow(clippy::needless_range_loop)]

//! Independent reference implementations used to check the library.
#![allow(dead_code)]

use gridforge_core::grid::{Grid, Symbol};
use gridforge_core::TracedRng;

/// Random grid with sides in `1..=max_side` over the first `symbols` symbols.
pub fn random_grid(rng: &mut TracedRng, max_side: usize, symbols: u8) -> Grid {
    let h = 1 + rng.index(max_side);
    let w = 1 + rng.index(max_side);
    let cells = (0..h * w)
        .map(|_| Symbol::new(rng.below(symbols as u64) as u8).unwrap())
        .collect();
    Grid::from_cells(h, w, cells).unwrap()
}

/// Component labels by repeated neighbor-minimum propagation until nothing
/// changes. Each cell starts with its own index as label.
pub fn label_propagation(g: &Grid, diagonal: bool) -> Vec<usize> {
    let (h, w) = (g.height() as isize, g.width() as isize);
    let mut labels: Vec<usize> = (0..g.area()).collect();
    loop {
        let mut changed = false;
        for r in 0..h {
            for c in 0..w {
                for dr in -1..=1isize {
                    for dc in -1..=1isize {
                        let orthogonal = (dr == 0) != (dc == 0);
                        if !(orthogonal || (diagonal && dr != 0 && dc != 0)) {
                            continue;
                        }
                        let (nr, nc) = (r + dr, c + dc);
                        if nr < 0 || nc < 0 || nr >= h || nc >= w {
                            continue;
                        }
                        let (a, b) = ((r * w + c) as usize, (nr * w + nc) as usize);
                        if g.cells()[a] == g.cells()[b] && labels[b] < labels[a] {
                            labels[a] = labels[b];
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return labels;
        }
    }
}

/// Background cells reachable from the border, by BFS over an explicit
/// visited matrix; returns the unreachable background cells.
pub fn border_bfs_enclosed(g: &Grid, bg: Symbol) -> Vec<(usize, usize)> {
    let (h, w) = (g.height(), g.width());
    let mut seen = vec![vec![false; w]; h];
    let mut stack = Vec::new();
    for r in 0..h {
        for c in 0..w {
            if (r == 0 || c == 0 || r == h - 1 || c == w - 1) && g.get(r, c) == bg {
                seen[r][c] = true;
                stack.push((r, c));
            }
        }
    }
    while let Some((r, c)) = stack.pop() {
        let mut next = Vec::new();
        if r > 0 {
            next.push((r - 1, c));
        }
        if r + 1 < h {
            next.push((r + 1, c));
        }
        if c > 0 {
            next.push((r, c - 1));
        }
        if c + 1 < w {
            next.push((r, c + 1));
        }
        for (nr, nc) in next {
            if !seen[nr][nc] && g.get(nr, nc) == bg {
                seen[nr][nc] = true;
                stack.push((nr, nc));
            }
        }
    }
    let mut out = Vec::new();
    for r in 0..h {
        for c in 0..w {
            if g.get(r, c) == bg && !seen[r][c] {
                out.push((r, c));
            }
        }
    }
    out
}
