//! Colored letters, circloids and colored tabloids.
//!
//! `Ord` on [`ColoredLetter`] is the prismatic order: a larger letter is
//! greater, and among equal letters the smaller color is greater. Circloid
//! sectors are stored clockwise from the star, each strictly decreasing.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::shapes::{Composition, Partition};
use crate::words::{self, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct ColoredLetter {
    pub letter: usize,
    pub color: usize,
}

impl ColoredLetter {
    pub const fn new(letter: usize, color: usize) -> Self {
        ColoredLetter { letter, color }
    }
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter.cmp(&other.letter).then(other.color.cmp(&self.color))
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(usize, usize)> for ColoredLetter {
    fn from((letter, color): (usize, usize)) -> Self {
        ColoredLetter { letter, color }
    }
}

impl From<ColoredLetter> for (usize, usize) {
    fn from(c: ColoredLetter) -> Self {
        (c.letter, c.color)
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.letter, self.color)
    }
}

pub fn prismatic_cmp(a: &ColoredLetter, b: &ColoredLetter) -> Ordering {
    a.cmp(b)
}

/// Larger color is greater; equal colors compare by letter.
pub fn coprismatic_cmp(a: &ColoredLetter, b: &ColoredLetter) -> Ordering {
    a.color.cmp(&b.color).then(a.letter.cmp(&b.letter))
}

fn check_letters<'a>(letters: impl Iterator<Item = &'a ColoredLetter>) -> Result<()> {
    let mut seen = HashSet::new();
    for &c in letters {
        if c.letter == 0 || c.color == 0 {
            return Err(Error::ZeroLetter);
        }
        if !seen.insert(c) {
            return Err(Error::DuplicateLetter { letter: c.letter, color: c.color });
        }
    }
    Ok(())
}

/// Colors of letter `x` form `{beta_x + 1, .., alpha_x}`; returns `(alpha, beta)`.
fn weight_bounds<'a>(letters: impl Iterator<Item = &'a ColoredLetter>) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut colors: Vec<Vec<usize>> = Vec::new();
    for c in letters {
        if colors.len() < c.letter {
            colors.resize(c.letter, Vec::new());
        }
        colors[c.letter - 1].push(c.color);
    }
    let mut alpha = Vec::with_capacity(colors.len());
    let mut beta = Vec::with_capacity(colors.len());
    for (x, cs) in colors.iter_mut().enumerate() {
        cs.sort_unstable();
        match (cs.first(), cs.last()) {
            (Some(&lo), Some(&hi)) => {
                if hi - lo + 1 != cs.len() {
                    return Err(Error::ColorGap(x + 1));
                }
                alpha.push(hi);
                beta.push(lo - 1);
            }
            _ => {
                alpha.push(0);
                beta.push(0);
            }
        }
    }
    Ok((alpha, beta))
}

fn partition_weight_of<'a>(letters: impl Iterator<Item = &'a ColoredLetter>) -> Result<Partition> {
    let (alpha, beta) = weight_bounds(letters)?;
    if beta.iter().any(|&b| b > 0) || alpha.contains(&0) {
        return Err(Error::NonPartitionWeight(alpha));
    }
    Partition::new(alpha.clone()).map_err(|_| Error::NonPartitionWeight(alpha))
}

/// A star-anchored circle of distinct colored letters split into sectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circloid {
    sectors: Vec<Vec<ColoredLetter>>,
}

#[derive(Serialize, Deserialize)]
struct CircloidRepr {
    #[serde(default)]
    shape: Option<Vec<usize>>,
    sectors: Vec<Vec<ColoredLetter>>,
}

impl Serialize for Circloid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CircloidRepr { shape: Some(self.shape().into()), sectors: self.sectors.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Circloid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CircloidRepr::deserialize(d)?;
        let c = Circloid::new(r.sectors).map_err(serde::de::Error::custom)?;
        if let Some(shape) = r.shape {
            if shape != Vec::from(c.shape()) {
                return Err(serde::de::Error::custom("shape does not match sector sizes"));
            }
        }
        Ok(c)
    }
}

impl Circloid {
    /// Sectors must each be strictly decreasing clockwise.
    pub fn new(sectors: Vec<Vec<ColoredLetter>>) -> Result<Self> {
        check_letters(sectors.iter().flatten())?;
        for (x, s) in sectors.iter().enumerate() {
            if s.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::SectorOrder(x + 1));
            }
        }
        Ok(Circloid { sectors })
    }

    /// Sorts each sector into decreasing order first.
    pub fn from_sets(mut sectors: Vec<Vec<ColoredLetter>>) -> Result<Self> {
        for s in &mut sectors {
            s.sort_unstable_by(|a, b| b.cmp(a));
        }
        Circloid::new(sectors)
    }

    /// Cuts a clockwise sequence into sectors of sizes `shape`.
    pub fn from_clockwise(letters: &[ColoredLetter], shape: &Composition) -> Result<Self> {
        if shape.degree() != letters.len() {
            return Err(Error::ShapeLength { shape: shape.parts().to_vec(), len: letters.len() });
        }
        let mut sectors = Vec::with_capacity(shape.len());
        let mut at = 0;
        for &g in shape.parts() {
            sectors.push(letters[at..at + g].to_vec());
            at += g;
        }
        Circloid::new(sectors)
    }

    /// The shape `(1, .., 1)` circloid of a colored word inscribed counter-clockwise.
    pub fn from_colored_word(ccw: &[ColoredLetter]) -> Result<Self> {
        Circloid::new(ccw.iter().rev().map(|&c| vec![c]).collect())
    }

    pub fn sectors(&self) -> &[Vec<ColoredLetter>] {
        &self.sectors
    }

    pub fn num_sectors(&self) -> usize {
        self.sectors.len()
    }

    pub fn len(&self) -> usize {
        self.sectors.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.sectors.iter().map(Vec::len).collect())
    }

    pub fn clockwise(&self) -> Vec<ColoredLetter> {
        self.sectors.iter().flatten().copied().collect()
    }

    /// The counter-clockwise reading: the underlying colored word.
    pub fn colored_word(&self) -> Vec<ColoredLetter> {
        let mut v = self.clockwise();
        v.reverse();
        v
    }

    /// The counter-clockwise reading with colors dropped.
    pub fn word(&self) -> Word {
        Word::new(self.colored_word().iter().map(|c| c.letter).collect()).expect("letters are positive")
    }

    /// `(alpha, beta)` with the colors of `x` equal to `{beta_x + 1, .., alpha_x}`.
    pub fn weight(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        weight_bounds(self.sectors.iter().flatten())
    }

    pub fn partition_weight(&self) -> Result<Partition> {
        partition_weight_of(self.sectors.iter().flatten())
    }

    /// `pos[x-1][y-1]` is the clockwise position of `x_y`.
    fn positions(&self, mu: &Partition) -> Vec<Vec<usize>> {
        let mut pos: Vec<Vec<usize>> = mu.parts().iter().map(|&m| vec![0; m]).collect();
        for (p, c) in self.clockwise().iter().enumerate() {
            pos[c.letter - 1][c.color - 1] = p;
        }
        pos
    }

    /// Sum over colors of the cocharge of each color class read clockwise.
    pub fn cocharge(&self) -> Result<usize> {
        let mu = self.partition_weight()?;
        let pos = self.positions(&mu);
        let conj = mu.conjugate();
        Ok((1..=mu.part(1))
            .map(|j| {
                let chain: Vec<usize> = (0..conj.part(j)).map(|x| pos[x][j - 1]).collect();
                words::standard_cocharge(&chain)
            })
            .sum())
    }

    pub fn charge(&self) -> Result<usize> {
        Ok(self.partition_weight()?.n_stat() - self.cocharge()?)
    }

    /// Sum of `s_{i,j}`: the letters `i` of color above `j` passed when moving
    /// clockwise from `(i-1)_j` (the star when `i = 1`) to `i_j`.
    pub fn betrayal(&self) -> Result<usize> {
        let mu = self.partition_weight()?;
        let pos = self.positions(&mu);
        let mut total = 0;
        for (i, row) in pos.iter().enumerate() {
            for j in 0..row.len() {
                let end = row[j];
                let start = if i == 0 { None } else { Some(pos[i - 1][j]) };
                let between = |p: usize| match start {
                    None => p < end,
                    Some(s) if s < end => s < p && p < end,
                    Some(s) => p > s || p < end,
                };
                total += row[j + 1..].iter().filter(|&&p| between(p)).count();
            }
        }
        Ok(total)
    }

    /// Letters of color `i`, read counter-clockwise.
    pub fn restrict_color(&self, i: usize) -> Word {
        let v: Vec<usize> =
            self.colored_word().iter().filter(|c| c.color == i).map(|c| c.letter).collect();
        Word::new(v).expect("letters are positive")
    }

    /// Keeps the letters `x >= j` in place.
    pub fn restrict_letters(&self, j: usize) -> Circloid {
        Circloid {
            sectors: self
                .sectors
                .iter()
                .map(|s| s.iter().copied().filter(|c| c.letter >= j).collect())
                .collect(),
        }
    }

    /// Clockwise positions `p` (1-based) with `c_p < c_{p+1}`.
    pub fn clockwise_ascents(&self) -> BTreeSet<usize> {
        clockwise_ascents(&self.clockwise())
    }

    /// Colors of each letter increase clockwise from the star.
    pub fn is_reverse_colored(&self) -> bool {
        let mut last: Vec<usize> = Vec::new();
        for c in self.clockwise() {
            if last.len() < c.letter {
                last.resize(c.letter, 0);
            }
            if c.color < last[c.letter - 1] {
                return false;
            }
            last[c.letter - 1] = c.color;
        }
        true
    }

    /// The coloring equals the faithful coloring of its letters.
    pub fn is_faithful(&self) -> bool {
        match faithful_coloring_rows(&self.sector_letters()) {
            Ok(t) => t.iota_inv() == *self,
            Err(_) => false,
        }
    }

    pub fn sector_letters(&self) -> Vec<Vec<usize>> {
        self.sectors.iter().map(|s| s.iter().map(|c| c.letter).collect()).collect()
    }

    pub fn iota(&self) -> ColoredTabloid {
        ColoredTabloid {
            rows: self.sectors.iter().map(|s| s.iter().rev().copied().collect()).collect(),
        }
    }
}

impl fmt::Display for Circloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*")?;
        for s in &self.sectors {
            write!(f, " |")?;
            for c in s {
                write!(f, " {c}")?;
            }
        }
        Ok(())
    }
}

pub fn clockwise_ascents(cw: &[ColoredLetter]) -> BTreeSet<usize> {
    (1..cw.len()).filter(|&p| cw[p - 1] < cw[p]).collect()
}

/// A colored word (counter-clockwise) admits `shape` iff its clockwise ascents
/// all fall on sector boundaries.
pub fn admits_shape(ccw: &[ColoredLetter], shape: &Composition) -> bool {
    let cw: Vec<ColoredLetter> = ccw.iter().rev().copied().collect();
    shape.degree() == cw.len() && clockwise_ascents(&cw).is_subset(&shape.prefix_set())
}

/// Rows of colored letters, bottom row first, each prismatically increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTabloid {
    rows: Vec<Vec<ColoredLetter>>,
}

#[derive(Serialize, Deserialize)]
struct TabloidRepr {
    #[serde(default)]
    shape: Option<Vec<usize>>,
    rows: Vec<Vec<ColoredLetter>>,
}

impl Serialize for ColoredTabloid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TabloidRepr { shape: Some(self.shape().into()), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredTabloid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TabloidRepr::deserialize(d)?;
        ColoredTabloid::new(r.rows).map_err(serde::de::Error::custom)
    }
}

impl ColoredTabloid {
    pub fn new(rows: Vec<Vec<ColoredLetter>>) -> Result<Self> {
        check_letters(rows.iter().flatten())?;
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::RowOrder(r + 1));
            }
        }
        Ok(ColoredTabloid { rows })
    }

    /// Sorts every row prismatically first.
    pub fn from_sets(mut rows: Vec<Vec<ColoredLetter>>) -> Result<Self> {
        for r in &mut rows {
            r.sort_unstable();
        }
        ColoredTabloid::new(rows)
    }

    pub fn rows(&self) -> &[Vec<ColoredLetter>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[ColoredLetter] {
        self.rows.get(r - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn weight(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        weight_bounds(self.rows.iter().flatten())
    }

    pub fn partition_weight(&self) -> Result<Partition> {
        partition_weight_of(self.rows.iter().flatten())
    }

    pub fn iota_inv(&self) -> Circloid {
        Circloid { sectors: self.rows.iter().map(|r| r.iter().rev().copied().collect()).collect() }
    }

    /// The uncolored tabloid underneath.
    pub fn strip(&self) -> Filling {
        Filling::from_rows(self.letter_rows()).expect("letters are positive")
    }

    pub fn letter_rows(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().map(|c| c.letter).collect()).collect()
    }

    pub fn cocharge(&self) -> Result<usize> {
        self.iota_inv().cocharge()
    }

    pub fn charge(&self) -> Result<usize> {
        self.iota_inv().charge()
    }

    pub fn betrayal(&self) -> Result<usize> {
        self.iota_inv().betrayal()
    }

    pub fn is_reverse_colored(&self) -> bool {
        self.iota_inv().is_reverse_colored()
    }

    pub fn is_faithful(&self) -> bool {
        self.iota_inv().is_faithful()
    }

    /// Drops the colors and colors the letters faithfully.
    pub fn faithful_recoloring(&self) -> Result<ColoredTabloid> {
        faithful_coloring_rows(&self.letter_rows())
    }

    /// Whether the counter-clockwise reading of `iota_inv` is `lambda`-Yamanouchi.
    pub fn is_lambda_yamanouchi(&self, lambda: &Partition) -> bool {
        words::is_lambda_yamanouchi(&self.iota_inv().word(), lambda)
    }

    /// Every cell with a cell directly above satisfies `less(below, above)`.
    pub fn columns_increase_by(&self, less: impl Fn(&ColoredLetter, &ColoredLetter) -> bool) -> bool {
        columns_increase(&self.rows, less)
    }

    pub fn columns_prismatic_increasing(&self) -> bool {
        self.columns_increase_by(|a, b| a < b)
    }

    pub fn columns_letter_increasing(&self) -> bool {
        self.columns_increase_by(|a, b| a.letter < b.letter)
    }

    /// Semistandard in the co-prismatic order: partition shape, and after
    /// sorting rows co-prismatically the columns strictly increase.
    pub fn is_ssct(&self) -> bool {
        if !self.shape().is_partition() {
            return false;
        }
        let rows: Vec<Vec<ColoredLetter>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable_by(coprismatic_cmp);
                r
            })
            .collect();
        columns_increase(&rows, |a, b| coprismatic_cmp(a, b) == Ordering::Less)
    }
}

impl fmt::Display for ColoredTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
            if i > 0 {
                write!(f, " / ")?;
            }
        }
        Ok(())
    }
}

fn columns_increase<T>(rows: &[Vec<T>], less: impl Fn(&T, &T) -> bool) -> bool {
    rows.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| less(a, b)))
}

/// Colors each letter `x` by running through the rows bottom to top and,
/// within a row, east to west, handing out `1, 2, ..`.
pub fn reverse_coloring(t: &Filling) -> Result<ColoredTabloid> {
    if let Some(r) = t.first_unsorted_row() {
        return Err(Error::NotTabloid(r));
    }
    Ok(reverse_coloring_rows(&t.rows_vec()))
}

pub(crate) fn reverse_coloring_rows(rows: &[Vec<usize>]) -> ColoredTabloid {
    let mut next: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut colored = vec![ColoredLetter::new(0, 0); row.len()];
        for (k, &x) in row.iter().enumerate().rev() {
            if next.len() < x {
                next.resize(x, 1);
            }
            colored[k] = ColoredLetter::new(x, next[x - 1]);
            next[x - 1] += 1;
        }
        colored.sort_unstable();
        out.push(colored);
    }
    ColoredTabloid { rows: out }
}

/// Faithful coloring of a tabloid's rows.
pub fn faithful_coloring(t: &Filling) -> Result<ColoredTabloid> {
    faithful_coloring_rows(&t.rows_vec())
}

/// Color `i` starts at the star, takes the nearest uncolored 1 clockwise and
/// then, from each `x_i`, the nearest uncolored `x + 1` clockwise. Within a
/// sector all copies of a letter are interchangeable, so the scan moves
/// sector by sector: from sector `s` it visits `s+1, .., l, 1, .., s`.
pub fn faithful_coloring_rows(rows: &[Vec<usize>]) -> Result<ColoredTabloid> {
    let max = rows.iter().flatten().copied().max().unwrap_or(0);
    let mut count = vec![vec![0usize; max + 2]; rows.len()];
    let mut total = vec![0usize; max + 2];
    for (s, row) in rows.iter().enumerate() {
        for &x in row {
            if x == 0 {
                return Err(Error::ZeroLetter);
            }
            count[s][x] += 1;
            total[x] += 1;
        }
    }
    let weight: Vec<usize> = total[1..=max].to_vec();
    Partition::new(weight.clone()).map_err(|_| Error::NonPartitionWeight(weight))?;
    let l = rows.len();
    let mut out: Vec<Vec<ColoredLetter>> = vec![Vec::new(); l];
    let mut color = 0;
    while max > 0 && total[1] > 0 {
        color += 1;
        let mut s = (0..l).find(|&s| count[s][1] > 0).expect("an uncolored 1 exists");
        let mut x = 1;
        loop {
            count[s][x] -= 1;
            total[x] -= 1;
            out[s].push(ColoredLetter::new(x, color));
            if total[x + 1] == 0 {
                break;
            }
            x += 1;
            s = (1..=l).map(|k| (s + k) % l).find(|&t| count[t][x] > 0).expect("an uncolored x+1 exists");
        }
    }
    ColoredTabloid::from_sets(out)
}

/// The standard-subword coloring of `w` as a circloid of shape `(1, .., 1)`.
pub fn standard_coloring(w: &Word) -> Result<Circloid> {
    let subs = words::standard_subwords(w)?;
    let ccw: Vec<ColoredLetter> =
        w.letters().iter().zip(&subs).map(|(&x, &c)| ColoredLetter::new(x, c)).collect();
    Circloid::from_colored_word(&ccw)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cl(v: &[(usize, usize)]) -> Vec<ColoredLetter> {
        v.iter().map(|&p| p.into()).collect()
    }

    pub(crate) fn c1() -> Circloid {
        let letters = cl(&[(3, 3), (2, 3), (1, 2), (2, 1), (2, 2), (1, 1), (3, 1), (1, 3), (3, 2)]);
        Circloid::from_clockwise(&letters, &Composition::new(vec![3, 3, 2, 1])).unwrap()
    }

    #[test]
    fn orders() {
        let a = ColoredLetter::new(3, 3);
        assert_eq!(prismatic_cmp(&a, &ColoredLetter::new(2, 3)), Ordering::Greater);
        assert_eq!(prismatic_cmp(&ColoredLetter::new(2, 1), &ColoredLetter::new(2, 2)), Ordering::Greater);
        assert_eq!(prismatic_cmp(&a, &a), Ordering::Equal);
        assert_eq!(coprismatic_cmp(&ColoredLetter::new(1, 2), &ColoredLetter::new(3, 1)), Ordering::Greater);
        assert_eq!(coprismatic_cmp(&ColoredLetter::new(3, 1), &ColoredLetter::new(2, 1)), Ordering::Greater);
    }

    #[test]
    fn example_circloids() {
        let c = c1();
        assert_eq!(c.cocharge().unwrap(), 4);
        assert_eq!(c.betrayal().unwrap(), 2);
        let c2 = Circloid::from_clockwise(&c.clockwise(), &Composition::new(vec![3, 1, 2, 2, 1])).unwrap();
        assert_eq!(c2.cocharge().unwrap(), 4);
        assert_eq!(c2.betrayal().unwrap(), 2);
        assert_eq!(c.clockwise_ascents().into_iter().collect::<Vec<_>>(), vec![3, 6, 8]);
        assert_eq!(c.restrict_color(1).letters(), &[3, 1, 2]);
        assert_eq!(c.restrict_letters(1), c);
        assert!(c.restrict_letters(4).is_empty());
    }

    #[test]
    fn bad_sector_is_rejected() {
        let letters = cl(&[(1, 1), (2, 1)]);
        assert_eq!(
            Circloid::from_clockwise(&letters, &Composition::new(vec![2])),
            Err(Error::SectorOrder(1))
        );
        let dup = cl(&[(1, 1), (1, 1)]);
        assert!(Circloid::from_clockwise(&dup, &Composition::new(vec![1, 1])).is_err());
    }

    #[test]
    fn betrayal_passes_higher_color() {
        // 1_2 then 1_1 clockwise: reaching 1_1 from the star passes 1_2.
        let c = Circloid::new(vec![cl(&[(1, 2)]), cl(&[(1, 1)])]).unwrap();
        assert_eq!(c.betrayal().unwrap(), 1);
    }

    #[test]
    fn faithful_example() {
        let letters = cl(&[(3, 3), (2, 2), (1, 1), (2, 1), (2, 3), (1, 2), (3, 1), (1, 3), (3, 2)]);
        let c = Circloid::from_clockwise(&letters, &Composition::new(vec![3, 3, 2, 1])).unwrap();
        assert!(c.is_faithful());
        assert_eq!(c.betrayal().unwrap(), 0);
        let t = c.iota();
        assert_eq!(
            t.rows(),
            &[
                cl(&[(1, 1), (2, 2), (3, 3)]),
                cl(&[(1, 2), (2, 3), (2, 1)]),
                cl(&[(1, 3), (3, 1)]),
                cl(&[(3, 2)])
            ]
        );
        assert_eq!(t.iota_inv(), c);
    }

    #[test]
    fn standard_coloring_matches_printed_subscripts() {
        let w: Word = "32111532243546".parse().unwrap();
        let c = standard_coloring(&w).unwrap();
        let colors: Vec<usize> = c.clockwise().iter().map(|x| x.color).collect();
        assert_eq!(colors, vec![1, 1, 1, 3, 2, 2, 3, 2, 2, 1, 2, 3, 1, 1]);
        assert_eq!(c.betrayal().unwrap(), 0);
        assert_eq!(c.cocharge().unwrap(), 15);
    }

    #[test]
    fn reverse_coloring_example() {
        let f = Filling::from_rows(vec![vec![2, 3, 3, 4, 5], vec![1, 2, 4], vec![1, 2], vec![1, 1]]).unwrap();
        let t = reverse_coloring(&f).unwrap();
        assert_eq!(t.row(1), cl(&[(2, 1), (3, 2), (3, 1), (4, 1), (5, 1)]).as_slice());
        assert!(t.is_reverse_colored());
        assert!(reverse_coloring(&Filling::from_rows(vec![vec![2, 1]]).unwrap()).is_err());
    }

    #[test]
    fn colored_word_round_trip() {
        let c = c1();
        let ccw = c.colored_word();
        assert!(admits_shape(&ccw, &Composition::new(vec![3, 3, 2, 1])));
        assert!(admits_shape(&ccw, &Composition::new(vec![3, 1, 2, 2, 1])));
        assert!(!admits_shape(&ccw, &Composition::new(vec![9])));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Circloid>(&json).unwrap(), c);
    }
}
