//! Fillings of (skew) shapes and the statistics and predicates defined on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colored::ColoredLetter;
use crate::error::{Error, Result};
use crate::shapes::{Cell, Composition, Partition, SkewShape};
use crate::words::{self, Word};

/// Positive integers in every cell of a shape. `rows[r-1]` lists row `r`
/// west to east, starting in column `inner_r + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ShapeRepr {
    Straight(Vec<usize>),
    Skew {
        outer: Vec<usize>,
        #[serde(default)]
        inner: Vec<usize>,
    },
}

#[derive(Serialize, Deserialize)]
struct FillingRepr {
    #[serde(default)]
    shape: Option<ShapeRepr>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let shape = if self.shape.is_straight() {
            ShapeRepr::Straight(self.shape.outer().to_vec())
        } else {
            ShapeRepr::Skew { outer: self.shape.outer().to_vec(), inner: self.shape.inner().to_vec() }
        };
        FillingRepr { shape: Some(shape), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FillingRepr::deserialize(d)?;
        let shape = match r.shape {
            None => SkewShape::straight(r.rows.iter().map(Vec::len).collect()),
            Some(ShapeRepr::Straight(o)) => SkewShape::straight(o),
            Some(ShapeRepr::Skew { outer, inner }) => SkewShape::new(outer, inner).map_err(serde::de::Error::custom)?,
        };
        Filling::new(shape, r.rows).map_err(serde::de::Error::custom)
    }
}

impl Filling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::RowLength(rows.len().min(shape.num_rows()) + 1));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::RowLength(i + 1));
            }
            if row.contains(&0) {
                return Err(Error::ZeroLetter);
            }
        }
        Ok(Filling { shape, rows })
    }

    /// A left-justified filling whose shape is the row lengths (possibly zero).
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Filling::new(SkewShape::straight(rows.iter().map(Vec::len).collect()), rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn rows_vec(&self) -> Vec<Vec<usize>> {
        self.rows.clone()
    }

    pub fn row(&self, r: usize) -> &[usize] {
        self.rows.get(r - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains(cell) {
            return None;
        }
        Some(self.rows[cell.row - 1][cell.col - self.shape.inner_part(cell.row) - 1])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn weight(&self) -> Composition {
        Composition::new(words::weight_of(&self.rows.concat(), self.max_entry()))
    }

    pub fn partition_weight(&self) -> Result<Partition> {
        self.weight().to_partition()
    }

    /// Entries in reading order: top row first, west to east.
    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect()).expect("entries are positive")
    }

    /// Row of the first row that decreases somewhere, if any.
    pub fn first_unsorted_row(&self) -> Option<usize> {
        self.rows.iter().position(|r| r.windows(2).any(|w| w[0] > w[1])).map(|i| i + 1)
    }

    pub fn is_tabloid(&self) -> bool {
        self.first_unsorted_row().is_none()
    }

    /// Each row rearranged into weakly increasing order.
    pub fn sorted_rows(&self) -> Filling {
        let mut rows = self.rows.clone();
        for r in &mut rows {
            r.sort_unstable();
        }
        Filling { shape: self.shape.clone(), rows }
    }

    fn straight_partition(&self) -> Result<Partition> {
        self.shape.as_partition().ok_or(Error::SkewUnsupported)
    }

    /// Number of inversion triples. With `r` at `(i, j)`, `t` at `(i, j')` for
    /// `j < j'` and `s` at `(i - 1, j)` (zero in row 1), the triple counts
    /// when `r = s != t` or when `(r, t, s)` decreases along one of its cycles.
    pub fn inv(&self) -> Result<usize> {
        self.straight_partition()?;
        let mut total = 0;
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..row.len() {
                let r = row[j];
                let s = if i == 0 { 0 } else { self.rows[i - 1][j] };
                total += row[j + 1..].iter().filter(|&&t| is_inversion(r, t, s)).count();
            }
        }
        Ok(total)
    }

    /// Sum over cells `(r, c)` with `F(r, c) > F(r - 1, c)` of `lambda'_c - r + 1`.
    pub fn maj(&self) -> Result<usize> {
        let lambda = self.straight_partition()?;
        let conj = lambda.conjugate();
        let mut total = 0;
        for r in 2..=self.rows.len() {
            for (c, &x) in self.rows[r - 1].iter().enumerate() {
                if x > self.rows[r - 2][c] {
                    total += conj.part(c + 1) + 1 - r;
                }
            }
        }
        Ok(total)
    }

    /// Sorts each row of an inversionless filling.
    pub fn s_sort(&self) -> Result<Filling> {
        let inv = self.inv()?;
        if inv != 0 {
            return Err(Error::HasInversions(inv));
        }
        Ok(self.sorted_rows())
    }

    /// The unique inversionless filling with the same row contents as `t`.
    pub fn s_unsort(t: &Filling) -> Result<Filling> {
        t.straight_partition()?;
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(t.rows.len());
        for (i, row) in t.rows.iter().enumerate() {
            let mut pool = row.clone();
            pool.sort_unstable();
            if i == 0 {
                rows.push(pool);
                continue;
            }
            let below = &rows[i - 1];
            let mut out = Vec::with_capacity(pool.len());
            for &b in &below[..row.len()] {
                let k = pool.iter().position(|&v| v > b).unwrap_or(0);
                out.push(pool.remove(k));
            }
            rows.push(out);
        }
        Ok(Filling { shape: t.shape.clone(), rows })
    }

    pub fn is_yamanouchi(&self) -> bool {
        words::is_yamanouchi(&self.reading_word())
    }

    pub fn is_lambda_yamanouchi(&self, lambda: &Partition) -> bool {
        words::is_lambda_yamanouchi(&self.reading_word(), lambda)
    }

    /// The row-sorted filling is Yamanouchi.
    pub fn is_super_yamanouchi(&self) -> bool {
        self.sorted_rows().is_yamanouchi()
    }

    /// Letters strictly increase up every column.
    pub fn is_column_strict(&self) -> bool {
        self.column_pairs().all(|(lo, hi)| lo < hi)
    }

    pub fn is_ssyt(&self) -> bool {
        self.is_tabloid() && self.is_column_strict()
    }

    /// Rows weakly increase west to east and columns weakly increase upward.
    pub fn is_rpp(&self) -> bool {
        self.is_tabloid() && self.column_pairs().all(|(lo, hi)| lo <= hi)
    }

    fn column_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.shape.cells().into_iter().filter_map(move |cell| {
            let above = self.get(Cell::new(cell.row + 1, cell.col))?;
            Some((self.get(cell).expect("cell in shape"), above))
        })
    }

    /// Colors every letter of the filling in place: the copies of `x` are
    /// numbered rows bottom to top, east to west within a row.
    pub fn reverse_colored_cells(&self) -> Vec<Vec<ColoredLetter>> {
        let mut next: Vec<usize> = vec![1; self.max_entry() + 1];
        self.rows
            .iter()
            .map(|row| {
                let mut out = vec![ColoredLetter::new(0, 0); row.len()];
                for (k, &x) in row.iter().enumerate().rev() {
                    out[k] = ColoredLetter::new(x, next[x]);
                    next[x] += 1;
                }
                out
            })
            .collect()
    }

    /// Some pistol holds both `x_y` and `(x+1)_{y+1}` under the reverse
    /// coloring. Pistol `(r, c)` is columns `1..=c` of row `r` together with
    /// columns `c..` of row `r + 1`, for rows `r` with a row above.
    pub fn is_jammed(&self) -> Result<bool> {
        self.straight_partition()?;
        let colored = self.reverse_colored_cells();
        let ell = colored.len();
        if ell < 2 {
            return Ok(false);
        }
        let mut where_: std::collections::HashMap<ColoredLetter, Cell> = std::collections::HashMap::new();
        for (r, row) in colored.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                where_.insert(x, Cell::new(r + 1, c + 1));
            }
        }
        for (&a, &ca) in &where_ {
            let Some(&cb) = where_.get(&ColoredLetter::new(a.letter + 1, a.color + 1)) else {
                continue;
            };
            let together = if ca.row == cb.row {
                true
            } else if ca.row + 1 == cb.row {
                ca.col <= cb.col
            } else if cb.row + 1 == ca.row {
                cb.col <= ca.col
            } else {
                false
            };
            if together {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Keeps only the topmost copy of each run of equal letters in a column,
    /// then left-justifies the rows.
    pub fn rpp_compress(&self) -> Result<Filling> {
        if !self.is_rpp() {
            return Err(Error::NotReversePlanePartition);
        }
        let rows = (1..=self.rows.len())
            .map(|r| {
                self.shape
                    .cells()
                    .into_iter()
                    .filter(|c| c.row == r)
                    .filter(|&c| self.get(Cell::new(r + 1, c.col)) != self.get(c))
                    .map(|c| self.get(c).expect("cell in shape"))
                    .collect()
            })
            .collect();
        Filling::from_rows(rows)
    }
}

fn is_inversion(r: usize, t: usize, s: usize) -> bool {
    (r == s && r != t) || (r > t && t > s) || (t > s && s > r) || (s > r && r > t)
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let lead = ". ".repeat(self.shape.inner_part(i + 1));
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{lead}{}", cells.join(" "))?;
            if i > 0 {
                write!(f, " / ")?;
            }
        }
        Ok(())
    }
}

/// Rows with holes, bottom row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Punctured<T> {
    pub rows: Vec<Vec<Option<T>>>,
}

impl<T: Clone> Punctured<T> {
    pub fn get(&self, cell: Cell) -> Option<&T> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?)?.as_ref()
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if x.is_some() {
                    out.insert(Cell::new(r + 1, c + 1));
                }
            }
        }
        out
    }

    /// Rows with the holes removed.
    pub fn collapse(&self) -> Vec<Vec<T>> {
        self.rows.iter().map(|r| r.iter().flatten().cloned().collect()).collect()
    }
}

/// Places `row` west to east, each entry in the leftmost column past the
/// previous entry whose cells above (`blocked`) hold nothing smaller.
fn space_row<T: Ord + Clone>(row: &[T], blocked: impl Fn(usize, &T) -> bool) -> Vec<Option<T>> {
    let mut out: Vec<Option<T>> = Vec::new();
    let mut col = 0;
    for e in row {
        col += 1;
        while blocked(col, e) {
            col += 1;
        }
        out.resize(col, None);
        out[col - 1] = Some(e.clone());
    }
    out
}

/// Inflates every row from the top down against all rows already placed.
pub fn inflate<T: Ord + Clone>(rows: &[Vec<T>]) -> Punctured<T> {
    let mut placed: Vec<Vec<Option<T>>> = vec![Vec::new(); rows.len()];
    for i in (0..rows.len()).rev() {
        let above = &placed[i + 1..];
        let spaced = space_row(&rows[i], |col, e| {
            above.iter().any(|r| matches!(r.get(col - 1), Some(Some(x)) if x < e))
        });
        placed[i] = spaced;
    }
    Punctured { rows: placed }
}

/// Spaces out row `i` against the left-justified row `i + 1`; other rows stay put.
pub fn i_inflate<T: Ord + Clone>(rows: &[Vec<T>], i: usize) -> Punctured<T> {
    let mut out: Vec<Vec<Option<T>>> = rows.iter().map(|r| r.iter().cloned().map(Some).collect()).collect();
    if i >= 1 && i <= rows.len() {
        let above: &[T] = rows.get(i).map(Vec::as_slice).unwrap_or(&[]);
        out[i - 1] = space_row(&rows[i - 1], |col, e| matches!(above.get(col - 1), Some(x) if x < e));
    }
    Punctured { rows: out }
}

/// Cells occupied by the inflation of a tabloid.
pub fn inflated_cells(t: &Filling) -> BTreeSet<Cell> {
    inflate(t.rows()).cells()
}

/// Block maj: with `offset_i = nu_1 + .. + nu_{i-1}`, each `d` in `D` lying
/// strictly inside block `i` contributes `d - offset_i`.
pub fn maj_block(nu: &Partition, d: &BTreeSet<usize>) -> Result<usize> {
    let n = nu.degree();
    if let Some(&bad) = d.iter().find(|&&x| x == 0 || x >= n.max(1)) {
        return Err(Error::DescentOutOfRange(bad));
    }
    let mut total = 0;
    let mut offset = 0;
    for &part in nu.parts() {
        total += d.range(offset + 1..offset + part).map(|&x| x - offset).sum::<usize>();
        offset += part;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(rows: &[&[usize]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> Filling {
        f(&[&[2, 1, 1], &[2, 2, 1], &[3, 2, 3]])
    }

    #[test]
    fn printed_inv_and_maj() {
        assert_eq!(example().inv().unwrap(), 4);
        assert_eq!(example().maj().unwrap(), 4);
    }

    #[test]
    fn small_inv_and_maj() {
        assert_eq!(f(&[&[2, 2], &[2, 2]]).inv().unwrap(), 0);
        assert_eq!(f(&[&[2, 1]]).inv().unwrap(), 1);
        assert_eq!(f(&[&[3, 3], &[2, 1]]).maj().unwrap(), 0);
        let skew = Filling::new(SkewShape::new(vec![2], vec![1]).unwrap(), vec![vec![1]]).unwrap();
        assert_eq!(skew.inv(), Err(Error::SkewUnsupported));
    }

    #[test]
    fn s_unsort_example() {
        let t = f(&[&[1, 1, 2], &[1, 2, 2], &[2, 3, 3]]);
        let u = Filling::s_unsort(&t).unwrap();
        assert_eq!(u.inv().unwrap(), 0);
        assert_eq!(u.s_sort().unwrap(), t);
        let one = f(&[&[1, 2, 2]]);
        assert_eq!(Filling::s_unsort(&one).unwrap(), one);
        assert!(example().s_sort().is_err());
    }

    #[test]
    fn yamanouchi_predicates() {
        let t = f(&[&[1, 1], &[2]]);
        assert!(t.is_super_yamanouchi());
        assert!(!f(&[&[2, 2], &[1]]).is_super_yamanouchi());
        assert!(!f(&[&[1, 2, 2]]).is_jammed().unwrap());
    }

    #[test]
    fn jammed_two_rows() {
        // Reverse colors: 1_1 at (1,1), 2_1 at (1,2) and 2_2 at (2,1).
        assert!(f(&[&[1, 2], &[2]]).is_jammed().unwrap());
        assert!(!f(&[&[1, 1], &[2]]).is_jammed().unwrap());
    }

    #[test]
    fn printed_inflation() {
        let c = |l, k| ColoredLetter::new(l, k);
        let rows = vec![
            vec![c(1, 3), c(2, 2), c(3, 1)],
            vec![c(1, 2), c(2, 1), c(3, 3)],
            vec![c(1, 1), c(2, 3), c(3, 2)],
        ];
        let two = i_inflate(&rows, 2);
        assert_eq!(two.rows[1], vec![Some(c(1, 2)), None, Some(c(2, 1)), Some(c(3, 3))]);
        let full = inflate(&rows);
        assert_eq!(full.rows[1], vec![Some(c(1, 2)), None, Some(c(2, 1)), Some(c(3, 3))]);
        assert_eq!(full.rows[0], vec![Some(c(1, 3)), None, Some(c(2, 2)), None, Some(c(3, 1))]);
        let one = vec![vec![c(1, 1), c(2, 1)]];
        assert_eq!(inflate(&one).collapse(), one);
    }

    #[test]
    fn compress() {
        let r = f(&[&[1], &[1]]);
        assert_eq!(r.rpp_compress().unwrap().rows(), &[vec![], vec![1]]);
        let s = f(&[&[1, 2], &[2, 3]]);
        assert_eq!(s.rpp_compress().unwrap(), s);
        assert!(f(&[&[2], &[1]]).rpp_compress().is_err());
    }

    #[test]
    fn block_maj() {
        let nu = Partition::new(vec![3]).unwrap();
        assert_eq!(maj_block(&nu, &BTreeSet::new()).unwrap(), 0);
        assert_eq!(maj_block(&nu, &[1].into_iter().collect()).unwrap(), 1);
        assert_eq!(maj_block(&nu, &[2].into_iter().collect()).unwrap(), 2);
        let nu2 = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(maj_block(&nu2, &[2].into_iter().collect()).unwrap(), 0);
        assert_eq!(maj_block(&nu2, &[3].into_iter().collect()).unwrap(), 1);
    }

    #[test]
    fn json_round_trip() {
        let e = example();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<Filling>(&s).unwrap(), e);
    }
}
