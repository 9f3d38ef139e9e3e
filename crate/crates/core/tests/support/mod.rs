//! Shared test support: independent brute-force oracles and random
//! generators. Everything here deliberately avoids the library's pruned
//! enumeration engine so the two routes stay independent.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::BTreeSet;

use rand::Rng;

use schubert_core::monodromy::ProblemInstance;
use schubert_core::{is_genomic, Cell, GenomicTableau, Partition, Rectangle, SkewShape, SkewTableau};

/// Plain backtracking enumeration of semistandard fillings with the given
/// content: cells in row-major order, only the row/column comparisons and
/// content counts. No ballot pruning of any kind.
pub fn enumerate_ssyt_brute(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    let cells = shape.cells();
    let total: usize = content.iter().sum();
    if total != cells.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut grid: std::collections::HashMap<Cell, usize> = std::collections::HashMap::new();
    let mut counts = vec![0usize; content.len()];

    fn recurse(
        cells: &[Cell],
        depth: usize,
        shape: &SkewShape,
        content: &[usize],
        grid: &mut std::collections::HashMap<Cell, usize>,
        counts: &mut Vec<usize>,
        out: &mut Vec<SkewTableau>,
    ) {
        if depth == cells.len() {
            let entries = cells.iter().map(|c| grid[c]).collect();
            out.push(SkewTableau::new(shape.clone(), entries).expect("construction is valid"));
            return;
        }
        let cell = cells[depth];
        let mut lo = 1usize;
        if cell.row > 1 {
            if let Some(&above) = grid.get(&Cell::new(cell.row - 1, cell.col)) {
                lo = lo.max(above + 1);
            }
        }
        if cell.col > 1 {
            if let Some(&left) = grid.get(&Cell::new(cell.row, cell.col - 1)) {
                lo = lo.max(left);
            }
        }
        for v in lo..=content.len() {
            if counts[v - 1] >= content[v - 1] {
                continue;
            }
            counts[v - 1] += 1;
            grid.insert(cell, v);
            recurse(cells, depth + 1, shape, content, grid, counts, out);
            grid.remove(&cell);
            counts[v - 1] -= 1;
        }
    }

    recurse(&cells, 0, shape, content, &mut grid, &mut counts, &mut out);
    out
}

/// Brute-force genomic enumeration: every semistandard filling with one
/// extra letter `i`, every unordered pair of cells holding that letter,
/// filtered by the public criterion.
pub fn genomic_brute(instance: &ProblemInstance) -> BTreeSet<GenomicTableau> {
    let mut out = BTreeSet::new();
    let Some(shape) = instance.total_shape() else {
        return out;
    };
    let beta = instance.beta();
    for i in 1..=beta.len() {
        let mut content: Vec<usize> = beta.parts().to_vec();
        content[i - 1] += 1;
        for t in enumerate_ssyt_brute(&shape, &content) {
            let cells = shape.cells();
            for (a_idx, &a) in cells.iter().enumerate() {
                for &b in &cells[a_idx + 1..] {
                    // the marked pair must hold the extra letter of this pass
                    if t.get(a) == Some(i)
                        && t.get(b) == Some(i)
                        && is_genomic(&t, (a, b)).expect("cells are in shape")
                    {
                        out.insert(GenomicTableau::new(t.clone(), (a, b)).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Random partition inside the rectangle.
pub fn random_partition<R: Rng>(rng: &mut R, rect: &Rectangle) -> Partition {
    let mut parts = Vec::new();
    let mut max = rect.cols;
    for _ in 0..rect.rows {
        let p = rng.gen_range(0..=max);
        if p == 0 {
            break;
        }
        parts.push(p);
        max = p;
    }
    Partition::new(parts).unwrap()
}

/// Random partition nested inside `outer`.
pub fn random_subpartition<R: Rng>(rng: &mut R, outer: &Partition) -> Partition {
    let mut parts = Vec::new();
    let mut prev = usize::MAX;
    for r in 1..=outer.len() {
        let hi = outer.part(r).min(prev);
        let p = rng.gen_range(0..=hi);
        if p == 0 {
            break;
        }
        parts.push(p);
        prev = p;
    }
    Partition::new(parts).unwrap()
}

/// Random semistandard filling of a skew shape with entries at most `cap`.
/// Retries until the greedy row-major fill succeeds.
pub fn random_ssyt<R: Rng>(rng: &mut R, shape: &SkewShape, cap: usize) -> SkewTableau {
    'outer: loop {
        let mut grid: std::collections::HashMap<Cell, usize> = std::collections::HashMap::new();
        for cell in shape.cells() {
            let mut lo = 1usize;
            if cell.row > 1 {
                if let Some(&above) = grid.get(&Cell::new(cell.row - 1, cell.col)) {
                    lo = lo.max(above + 1);
                }
            }
            if cell.col > 1 {
                if let Some(&left) = grid.get(&Cell::new(cell.row, cell.col - 1)) {
                    lo = lo.max(left);
                }
            }
            if lo > cap {
                continue 'outer;
            }
            grid.insert(cell, rng.gen_range(lo..=cap));
        }
        let entries = shape.cells().into_iter().map(|c| grid[&c]).collect();
        return SkewTableau::new(shape.clone(), entries).expect("fill obeys the constraints");
    }
}
