//! The bijections between circloids, fillings and colored tabloids.

use serde::{Deserialize, Serialize};

use crate::colored::{Circloid, ColoredLetter, ColoredTabloid};
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::shapes::{Cell, Composition, SkewShape};
use crate::words::Word;

/// Sends each colored letter `r_c` in sector `x` to the entry `x` at cell
/// `(r, c)`. The shape is `alpha / beta` for the circloid's weight.
pub fn f_map(c: &Circloid) -> Result<Filling> {
    let (alpha, beta) = c.weight()?;
    let shape = SkewShape::new(alpha, beta)?;
    let mut rows: Vec<Vec<usize>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    for (x, sector) in c.sectors().iter().enumerate() {
        for l in sector {
            let offset = shape.inner_part(l.letter);
            rows[l.letter - 1][l.color - offset - 1] = x + 1;
        }
    }
    Filling::new(shape, rows)
}

/// Inverse of [`f_map`] with as many sectors as the largest entry.
pub fn f_inv(f: &Filling) -> Circloid {
    f_inv_sectors(f, f.max_entry()).expect("largest entry fits")
}

/// Inverse of [`f_map`] onto circloids with exactly `sectors` sectors.
pub fn f_inv_sectors(f: &Filling, sectors: usize) -> Result<Circloid> {
    if f.max_entry() > sectors {
        return Err(Error::ShapeLength { shape: vec![sectors], len: f.max_entry() });
    }
    let mut out: Vec<Vec<ColoredLetter>> = vec![Vec::new(); sectors];
    for cell in f.shape().cells() {
        let x = f.get(cell).expect("cell in shape");
        out[x - 1].push(ColoredLetter::new(cell.row, cell.col));
    }
    Circloid::from_sets(out)
}

/// `iota . f_inv`: entry `e` at `(r, c)` becomes `r_c` in row `e`.
pub fn companion(f: &Filling) -> ColoredTabloid {
    f_inv(f).iota()
}

/// Companion with a fixed number of rows.
pub fn companion_rows(f: &Filling, rows: usize) -> Result<ColoredTabloid> {
    Ok(f_inv_sectors(f, rows)?.iota())
}

pub fn companion_inv(t: &ColoredTabloid) -> Result<Filling> {
    f_map(&t.iota_inv())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReadMode {
    /// Reading order: top row first, west to east.
    Row,
    /// Columns left to right, each top to bottom.
    Column,
}

/// Order in which the cells of a straight shape receive the letters of a word.
pub fn cell_order(shape: &Composition, mode: ReadMode) -> Vec<Cell> {
    let cells = shape.cells();
    let mut cells = cells;
    match mode {
        ReadMode::Row => cells.sort_by(|a, b| a.reading_cmp(b)),
        ReadMode::Column => cells.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row))),
    }
    cells
}

/// The filling of shape `gamma` whose `mode` reading is `b`.
pub fn filling_from_word(b: &Word, gamma: &Composition, mode: ReadMode) -> Result<Filling> {
    if b.len() != gamma.degree() {
        return Err(Error::LengthMismatch { word: b.len(), shape: gamma.degree() });
    }
    let mut rows: Vec<Vec<usize>> = gamma.parts().iter().map(|&g| vec![0; g]).collect();
    for (cell, &x) in cell_order(gamma, mode).iter().zip(b.letters()) {
        rows[cell.row - 1][cell.col - 1] = x;
    }
    Filling::from_rows(rows)
}

/// The word read off a straight filling in the given mode.
pub fn word_from_filling(f: &Filling, mode: ReadMode) -> Word {
    let shape = Composition::new(f.shape().outer().to_vec());
    let letters = cell_order(&shape, mode).iter().map(|&c| f.get(c).expect("cell in shape")).collect();
    Word::new(letters).expect("entries are positive")
}

/// `c_gamma(b)`: the companion of the row-reading filling of shape `gamma`,
/// with one row per letter of the alphabet `[m]`.
pub fn c_gamma(b: &Word, gamma: &Composition, m: usize) -> Result<ColoredTabloid> {
    companion_rows(&filling_from_word(b, gamma, ReadMode::Row)?, m)
}

/// Inverse of [`c_gamma`].
pub fn c_gamma_inv(t: &ColoredTabloid) -> Result<Word> {
    Ok(word_from_filling(&companion_inv(t)?, ReadMode::Row))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::tests::{c1, cl};

    #[test]
    fn first_printed_image() {
        let letters = cl(&[(2, 3), (1, 4), (3, 1), (2, 1), (2, 2), (3, 2)]);
        let c = Circloid::from_clockwise(&letters, &Composition::new(vec![2, 3, 1])).unwrap();
        let f = f_map(&c).unwrap();
        assert_eq!(f.shape(), &SkewShape::new(vec![4, 3, 2], vec![3]).unwrap());
        assert_eq!(f.rows(), &[vec![1], vec![2, 2, 1], vec![2, 3]]);
        assert_eq!(f_inv(&f), c);
    }

    #[test]
    fn second_printed_image() {
        let f = f_map(&c1()).unwrap();
        assert_eq!(f.rows(), &[vec![2, 1, 3], vec![2, 2, 1], vec![3, 4, 1]]);
        assert_eq!(f.maj().unwrap(), 4);
        assert_eq!(f.inv().unwrap(), 2);
    }

    #[test]
    fn printed_companion() {
        let f = Filling::from_rows(vec![vec![2, 3, 3, 4, 5], vec![1, 2, 4], vec![1, 2], vec![1, 1]]).unwrap();
        let t = companion(&f);
        assert_eq!(t.iota_inv().sectors()[0], cl(&[(4, 1), (4, 2), (3, 1), (2, 1)]));
        assert_eq!(t.row(1), cl(&[(2, 1), (3, 1), (4, 2), (4, 1)]).as_slice());
        assert_eq!(t.row(5), cl(&[(1, 5)]).as_slice());
        assert!(t.is_reverse_colored());
        assert_eq!(companion_inv(&t).unwrap(), f);
    }

    #[test]
    fn reading_modes() {
        let b: Word = "21".parse().unwrap();
        let f = filling_from_word(&b, &Composition::new(vec![1, 1]), ReadMode::Row).unwrap();
        assert_eq!(f.rows(), &[vec![1], vec![2]]);
        let b: Word = "12".parse().unwrap();
        let f = filling_from_word(&b, &Composition::new(vec![2]), ReadMode::Row).unwrap();
        assert_eq!(f.rows(), &[vec![1, 2]]);
        let b: Word = "1234".parse().unwrap();
        let f = filling_from_word(&b, &Composition::new(vec![2, 2]), ReadMode::Column).unwrap();
        assert_eq!(f.rows(), &[vec![2, 4], vec![1, 3]]);
        assert_eq!(word_from_filling(&f, ReadMode::Column), b);
        assert!(filling_from_word(&b, &Composition::new(vec![1]), ReadMode::Row).is_err());
    }
}
