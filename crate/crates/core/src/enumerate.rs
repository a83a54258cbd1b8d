//! Exhaustive, deterministic generators.
//!
//! Every generator yields its objects in a fixed order, so identity checks are
//! reproducible. Fillings can also be addressed by index for parallel splitting.

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;

use crate::colored::{Circloid, ColoredLetter};
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::maps;
use crate::shapes::{Cell, Composition, Partition, SkewShape};
use crate::words::Word;

pub const DEFAULT_MAX_N: usize = 6;
pub const CAP_ENV: &str = "CIRCLOID_MAX_N";

static CAP_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Largest size an exhaustive computation may take on: an explicit override,
/// else `CIRCLOID_MAX_N`, else 6.
pub fn max_n() -> usize {
    match CAP_OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var(CAP_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N),
        n => n,
    }
}

pub fn set_max_n(n: usize) {
    CAP_OVERRIDE.store(n, Ordering::Relaxed);
}

pub fn check_cap(n: usize) -> Result<()> {
    let cap = max_n();
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    Ok(())
}

/// Partitions of every size `0..=n`, by size then decreasing lexicographic order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all).collect()
}

/// Length-`k` sequences of nonnegative integers summing to `n`, lexicographically decreasing.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Composition> {
    fn rec(rem: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 1 {
            cur.push(rem);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=rem).rev() {
            cur.push(p);
            rec(rem - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Strict compositions of `n`.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::new(Vec::new())];
    }
    (0..1u64 << (n - 1))
        .map(|mask| {
            let set = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            Composition::from_prefix_set(n, &set)
        })
        .collect()
}

/// Pairs `lambda ⊆ nu` of partitions with `|nu| <= max_outer` and
/// `1 <= |nu / lambda| <= max_size`.
pub fn skew_shapes(max_outer: usize, max_size: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for nu in partitions_up_to(max_outer) {
        for lam in partitions_up_to(nu.degree()) {
            let size = nu.degree() - lam.degree();
            if size == 0 || size > max_size || lam.len() > nu.len() {
                continue;
            }
            if lam.parts().iter().zip(nu.parts()).any(|(a, b)| a > b) {
                continue;
            }
            out.push(SkewShape::new(nu.parts().to_vec(), lam.parts().to_vec()).expect("contained"));
        }
    }
    out
}

/// Number of fillings of `shape` with entries in `1..=max`.
pub fn count_fillings(shape: &SkewShape, max: usize) -> usize {
    max.pow(shape.size() as u32)
}

/// The `index`-th filling in lexicographic order of the row-major entry list.
pub fn filling_at(shape: &SkewShape, max: usize, mut index: usize) -> Filling {
    let mut rows: Vec<Vec<usize>> = (1..=shape.num_rows()).map(|r| vec![1; shape.row_len(r)]).collect();
    for row in rows.iter_mut().rev() {
        for x in row.iter_mut().rev() {
            *x = index % max + 1;
            index /= max;
        }
    }
    Filling::new(shape.clone(), rows).expect("shape-conforming rows")
}

/// All fillings of `shape` with entries in `1..=max`.
pub fn fillings(shape: &SkewShape, max: usize) -> impl Iterator<Item = Filling> + '_ {
    (0..count_fillings(shape, max)).map(move |i| filling_at(shape, max, i))
}

/// Circloids of weight `mu` with exactly `sectors` sectors (empty ones allowed).
pub fn circloids(mu: &Partition, sectors: usize) -> impl Iterator<Item = Circloid> {
    circloids_with_colors(&Composition::from(mu), sectors)
}

/// Circloids whose letter `r` carries the colors `1..=gamma_r`, with exactly
/// `sectors` sectors.
pub fn circloids_with_colors(gamma: &Composition, sectors: usize) -> impl Iterator<Item = Circloid> {
    let shape = gamma.to_skew();
    (0..count_fillings(&shape, sectors)).map(move |i| {
        maps::f_inv_sectors(&filling_at(&shape, sectors, i), sectors).expect("entries fit")
    })
}

/// All words of length `n` over `[m]`, lexicographically.
pub fn words(m: usize, n: usize) -> impl Iterator<Item = Word> {
    (0..m.pow(n as u32)).map(move |mut i| {
        let mut v = vec![0; n];
        for x in v.iter_mut().rev() {
            *x = i % m + 1;
            i /= m;
        }
        Word::new(v).expect("letters are positive")
    })
}

/// The colored letters of weight `mu` in increasing prismatic order.
pub fn colored_alphabet(mu: &Partition) -> Vec<ColoredLetter> {
    let mut v: Vec<ColoredLetter> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(x, &m)| (1..=m).map(move |c| ColoredLetter::new(x + 1, c)))
        .collect();
    v.sort_unstable();
    v
}

/// Every ordering of the colored letters of weight `mu`, as counter-clockwise words.
pub fn colored_words(mu: &Partition) -> impl Iterator<Item = Vec<ColoredLetter>> {
    let alphabet = colored_alphabet(mu);
    let n = alphabet.len();
    alphabet.into_iter().permutations(n)
}

/// Fillings of `shape` with weakly increasing rows and strictly increasing
/// columns whose weight is exactly `weight`.
pub fn ssyt(shape: &SkewShape, weight: &[usize]) -> Vec<Filling> {
    if shape.size() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let max = weight.len();
    let mut remaining = weight.to_vec();
    let mut out = Vec::new();
    tableau_search(shape, max, false, &mut remaining, &mut out);
    out
}

/// Semistandard fillings of `shape` with entries in `1..=max`.
pub fn ssyt_bounded(shape: &SkewShape, max: usize) -> Vec<Filling> {
    let mut remaining = vec![usize::MAX; max];
    let mut out = Vec::new();
    tableau_search(shape, max, false, &mut remaining, &mut out);
    out
}

/// Standard tableaux of `shape`.
pub fn standard(shape: &SkewShape) -> Vec<Filling> {
    ssyt(shape, &vec![1; shape.size()])
}

/// Reverse plane partitions of `shape` with entries in `1..=max`.
pub fn rpp(shape: &SkewShape, max: usize) -> Vec<Filling> {
    let mut remaining = vec![usize::MAX; max];
    let mut out = Vec::new();
    tableau_search(shape, max, true, &mut remaining, &mut out);
    out
}

/// Backtracking over cells bottom row first, west to east. `weak_columns`
/// allows equal entries up a column.
fn tableau_search(
    shape: &SkewShape,
    max: usize,
    weak_columns: bool,
    remaining: &mut [usize],
    out: &mut Vec<Filling>,
) {
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[Cell],
        shape: &SkewShape,
        max: usize,
        weak: bool,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut [usize],
        out: &mut Vec<Filling>,
    ) {
        if k == cells.len() {
            out.push(Filling::new(shape.clone(), rows.clone()).expect("shape-conforming rows"));
            return;
        }
        let cell = cells[k];
        let at = |rows: &Vec<Vec<usize>>, c: Cell| -> Option<usize> {
            if shape.contains(c) {
                Some(rows[c.row - 1][c.col - shape.inner_part(c.row) - 1])
            } else {
                None
            }
        };
        let mut lo = 1;
        if let Some(left) = at(rows, Cell::new(cell.row, cell.col.wrapping_sub(1))) {
            lo = lo.max(left);
        }
        if cell.row > 1 {
            if let Some(below) = at(rows, Cell::new(cell.row - 1, cell.col)) {
                lo = lo.max(if weak { below } else { below + 1 });
            }
        }
        for x in lo..=max {
            if remaining[x - 1] == 0 {
                continue;
            }
            remaining[x - 1] -= 1;
            rows[cell.row - 1][cell.col - shape.inner_part(cell.row) - 1] = x;
            rec(k + 1, cells, shape, max, weak, rows, remaining, out);
            remaining[x - 1] += 1;
        }
    }
    rec(0, &cells, shape, max, weak_columns, &mut rows, remaining, out);
}

/// Tabloids (weakly increasing rows) of a composition shape with entries in `1..=max`.
pub fn tabloids(shape: &Composition, max: usize) -> Vec<Filling> {
    if shape.is_empty() {
        return vec![Filling::from_rows(Vec::new()).expect("empty")];
    }
    shape
        .parts()
        .iter()
        .map(|&g| (1..=max).combinations_with_replacement(g).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|rows| Filling::from_rows(rows).expect("positive entries"))
        .collect()
}

/// Tensor vertices `b_1 (x) .. (x) b_l`, each `b_j` a weakly increasing word
/// of length `gamma_j` over `[m]`.
pub fn tensor_rows(gamma: &Composition, m: usize) -> Vec<Vec<Vec<usize>>> {
    if gamma.is_empty() {
        return vec![Vec::new()];
    }
    gamma
        .parts()
        .iter()
        .map(|&g| (1..=m).combinations_with_replacement(g).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn filling_counts() {
        assert_eq!(fillings(&p(&[1]).to_skew(), 2).count(), 2);
        assert_eq!(fillings(&p(&[2, 1]).to_skew(), 3).count(), 27);
        let all: std::collections::BTreeSet<Filling> = fillings(&p(&[2, 1]).to_skew(), 3).collect();
        assert_eq!(all.len(), 27);
    }

    #[test]
    fn circloid_counts() {
        assert_eq!(circloids(&p(&[1]), 1).count(), 1);
        assert_eq!(circloids(&p(&[1, 1]), 3).count(), 9);
        assert_eq!(circloids(&p(&[2, 1]), 2).count(), 8);
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(ssyt(&p(&[2, 1]).to_skew(), &[1, 1, 1]).len(), 2);
        assert_eq!(ssyt(&p(&[1, 1]).to_skew(), &[2]).len(), 0);
        assert_eq!(rpp(&p(&[1, 1]).to_skew(), 2).len(), 3);
        assert_eq!(standard(&p(&[3, 2]).to_skew()).len(), 5);
        assert_eq!(ssyt_bounded(&p(&[2, 1]).to_skew(), 3).len(), 8);
    }

    #[test]
    fn other_generators() {
        assert_eq!(words(2, 3).count(), 8);
        assert_eq!(colored_words(&p(&[2, 1])).count(), 6);
        assert_eq!(weak_compositions(2, 3).len(), 6);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(tabloids(&Composition::new(vec![2, 1]), 2).len(), 6);
        assert_eq!(tensor_rows(&Composition::new(vec![2, 1]), 2).len(), 6);
    }

    #[test]
    fn cap() {
        assert!(check_cap(2).is_ok());
        assert!(matches!(check_cap(1000), Err(Error::CapExceeded { .. })));
    }
}
