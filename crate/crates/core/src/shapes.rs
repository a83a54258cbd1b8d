//! Partitions, compositions, skew shapes and cells.
//!
//! Rows are numbered from 1 at the bottom and columns from 1 at the left, so
//! the cell `(r, c)` sits in the `r`-th row from the bottom.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition after dropping trailing zeros.
    pub fn from_weak(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` counted from 1; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `n(mu) = sum_i (i - 1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// True when every prefix sum of `self` is at least the matching prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn cells(&self) -> Vec<Cell> {
        shape_cells(&self.0, &[])
    }

    pub fn to_skew(&self) -> SkewShape {
        SkewShape { outer: self.0.clone(), inner: Vec::new() }
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::from_weak(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A finite sequence of nonnegative integers. Zero parts are allowed (a weak
/// composition); they keep their row index when the composition is used as a shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// The composition with its zero parts removed.
    pub fn strict(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn is_partition(&self) -> bool {
        Partition::from_weak(self.0.clone()).is_ok()
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_weak(self.0.clone()).map_err(|_| Error::NonPartitionWeight(self.0.clone()))
    }

    /// Proper prefix sums `{g1, g1+g2, ...}` taken in sector order; zero parts add nothing.
    pub fn prefix_set(&self) -> BTreeSet<usize> {
        let strict = self.strict();
        let mut out = BTreeSet::new();
        let mut acc = 0;
        for &p in strict.0.iter().take(strict.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::prefix_set`] on strict compositions of `n`.
    pub fn from_prefix_set(n: usize, set: &BTreeSet<usize>) -> Composition {
        let mut parts = Vec::new();
        let mut last = 0;
        for &s in set.iter().chain(std::iter::once(&n)) {
            parts.push(s - last);
            last = s;
        }
        Composition(parts)
    }

    pub fn cells(&self) -> Vec<Cell> {
        shape_cells(&self.0, &[])
    }

    pub fn to_skew(&self) -> SkewShape {
        SkewShape { outer: self.0.clone(), inner: Vec::new() }
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// The cells of `outer` that are not cells of `inner`. Row `r` holds the
/// columns `inner_r + 1 ..= outer_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SkewShapeRepr")]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

#[derive(Deserialize)]
struct SkewShapeRepr {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
}

impl TryFrom<SkewShapeRepr> for SkewShape {
    type Error = Error;
    fn try_from(r: SkewShapeRepr) -> Result<Self> {
        SkewShape::new(r.outer, r.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Vec<usize>, mut inner: Vec<usize>) -> Result<Self> {
        while inner.last() == Some(&0) {
            inner.pop();
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Vec<usize>) -> Self {
        SkewShape { outer, inner: Vec::new() }
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&i| i == 0)
    }

    /// The outer shape as a partition when the shape is a straight partition shape.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.is_straight() {
            Partition::from_weak(self.outer.clone()).ok()
        } else {
            None
        }
    }

    pub fn inner_part(&self, row: usize) -> usize {
        self.inner.get(row - 1).copied().unwrap_or(0)
    }

    pub fn outer_part(&self, row: usize) -> usize {
        self.outer.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of cells in row `row`.
    pub fn row_len(&self, row: usize) -> usize {
        self.outer_part(row) - self.inner_part(row)
    }

    pub fn size(&self) -> usize {
        (1..=self.num_rows()).map(|r| self.row_len(r)).sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.num_rows()
            && cell.col > self.inner_part(cell.row)
            && cell.col <= self.outer_part(cell.row)
    }

    pub fn cells(&self) -> Vec<Cell> {
        shape_cells(&self.outer, &self.inner)
    }

    /// Number of cells of column `col`; only meaningful for straight shapes.
    pub fn column_height(&self, col: usize) -> usize {
        (1..=self.num_rows()).filter(|&r| self.contains(Cell::new(r, col))).count()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.outer)?;
        if !self.is_straight() {
            write!(f, "/")?;
            write_list(f, &self.inner)?;
        }
        Ok(())
    }
}

/// A lattice square in row `row` (from the bottom) and column `col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Compares by position in reading order: `Less` means `self` is read first
    /// (higher row, or same row and further west).
    pub fn reading_cmp(&self, other: &Cell) -> Ordering {
        other.row.cmp(&self.row).then(self.col.cmp(&other.col))
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

/// Cells sorted in reading order: highest row first, west to east within a row.
pub fn reading_order<I: IntoIterator<Item = Cell>>(cells: I) -> Vec<Cell> {
    let mut v: Vec<Cell> = cells.into_iter().collect();
    v.sort_by(|a, b| a.reading_cmp(b));
    v.dedup();
    v
}

fn shape_cells(outer: &[usize], inner: &[usize]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (i, &o) in outer.iter().enumerate() {
        let start = inner.get(i).copied().unwrap_or(0);
        for c in start + 1..=o {
            cells.push(Cell::new(i + 1, c));
        }
    }
    cells
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 3, 3]).conjugate(), p(&[3, 3, 3]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for n in 0..=10 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn n_statistic() {
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[5]).n_stat(), 0);
        assert_eq!(p(&[3, 3, 3, 2, 2, 1]).n_stat(), 28);
    }

    #[test]
    fn dominance() {
        assert!(p(&[2, 1]).dominates(&p(&[2, 1])).unwrap());
        assert!(p(&[3]).dominates(&p(&[1, 1, 1])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[3]).dominates(&p(&[1, 1])).is_err());
    }

    #[test]
    fn reading_order_examples() {
        let r = reading_order(p(&[2, 1]).cells());
        assert_eq!(r, vec![Cell::new(2, 1), Cell::new(1, 1), Cell::new(1, 2)]);
        assert_eq!(reading_order(vec![Cell::new(1, 1)]), vec![Cell::new(1, 1)]);
        assert_eq!(reading_order(p(&[1, 1]).cells()), vec![Cell::new(2, 1), Cell::new(1, 1)]);
    }

    #[test]
    fn prefix_sets() {
        let set = |v: &[usize]| Composition::new(v.to_vec()).prefix_set().into_iter().collect::<Vec<_>>();
        assert_eq!(set(&[3, 3, 2, 1]), vec![3, 6, 8]);
        assert_eq!(set(&[4]), Vec::<usize>::new());
        assert_eq!(set(&[1, 1, 1]), vec![1, 2]);
        assert_eq!(set(&[3, 0, 3, 2, 1]), vec![3, 6, 8]);
    }

    #[test]
    fn prefix_set_is_injective_on_strict_compositions() {
        for n in 1..=8usize {
            let mut seen = std::collections::HashSet::new();
            for mask in 0..(1u32 << (n - 1)) {
                let set: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let comp = Composition::from_prefix_set(n, &set);
                assert!(comp.is_strict());
                assert_eq!(comp.degree(), n);
                assert_eq!(comp.prefix_set(), set);
                assert!(seen.insert(comp));
            }
        }
    }

    #[test]
    fn skew_shapes() {
        let s = SkewShape::new(vec![3, 2], vec![1]).unwrap();
        assert_eq!(s.size(), 4);
        assert!(!s.contains(Cell::new(1, 1)));
        assert!(s.contains(Cell::new(2, 1)));
        assert!(SkewShape::new(vec![1], vec![2]).is_err());
        let json = serde_json::to_string(&s).unwrap();
        let back: SkewShape = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_weak(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }
}
