//! Words over the positive integers: weight, descents, standard subwords,
//! cocharge, charge and the Yamanouchi conditions.
//!
//! A word `w_1 .. w_n` is inscribed counter-clockwise with the star between
//! `w_n` and `w_1`. Reading clockwise from the star therefore visits
//! `w_n, w_{n-1}, .., w_1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `alpha_i` = number of occurrences of `i`.
    pub fn weight(&self) -> Composition {
        Composition::new(weight_of(&self.0, self.max_letter()))
    }

    /// The weight as a partition, or an error when it is not one.
    pub fn partition_weight(&self) -> Result<Partition> {
        let w = weight_of(&self.0, self.max_letter());
        Partition::new(w.clone()).map_err(|_| Error::NonPartitionWeight(w))
    }

    pub fn is_standard(&self) -> bool {
        self.weight().parts().iter().all(|&m| m == 1)
    }

    /// Positions `p` (1-based) with `w_p > w_{p+1}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.len()).filter(|&p| self.0[p - 1] > self.0[p]).collect()
    }

    /// Sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Letters in clockwise order from the star.
    pub fn clockwise(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl TryFrom<Vec<usize>> for Word {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Parses `6714235` (single digits) or `10,2,3` (comma separated).
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Word::new(letters.ok_or_else(|| Error::Parse(format!("bad word {s:?}")))?)
    }
}

pub(crate) fn weight_of(letters: &[usize], max: usize) -> Vec<usize> {
    let mut w = vec![0; max];
    for &x in letters {
        w[x - 1] += 1;
    }
    w
}

/// Cocharge of a standard sequence given the clockwise position of each
/// letter: `pos[j]` is where letter `j + 1` sits. The label of `j + 1` exceeds
/// the label of `j` by one exactly when `j + 1` lies clockwise after `j`
/// without crossing the star.
pub fn standard_cocharge(pos: &[usize]) -> usize {
    let mut label = 0;
    let mut total = 0;
    for j in 1..pos.len() {
        if pos[j] > pos[j - 1] {
            label += 1;
        }
        total += label;
    }
    total
}

/// Subword index (from 1) of every letter of a clockwise sequence.
///
/// Subword `i` starts at the star, takes the first unclaimed 1, then the first
/// unclaimed 2 found by continuing clockwise (cyclically), and so on through
/// the largest letter still unclaimed.
pub fn clockwise_subwords(cw: &[usize]) -> Result<Vec<usize>> {
    let n = cw.len();
    let max = cw.iter().copied().max().unwrap_or(0);
    let weight = weight_of(cw, max);
    Partition::new(weight.clone()).map_err(|_| Error::NonPartitionWeight(weight.clone()))?;
    let mut index = vec![0usize; n];
    let mut remaining = weight;
    let mut sub = 0;
    while remaining.first().copied().unwrap_or(0) > 0 {
        sub += 1;
        let top = remaining.iter().take_while(|&&m| m > 0).count();
        let mut at = 0;
        for letter in 1..=top {
            let p = (0..n)
                .map(|k| (at + k) % n)
                .find(|&p| index[p] == 0 && cw[p] == letter)
                .expect("partition weight guarantees a next letter");
            index[p] = sub;
            remaining[letter - 1] -= 1;
            at = p;
        }
    }
    Ok(index)
}

/// Cocharge of a clockwise sequence of partition weight.
pub fn clockwise_cocharge(cw: &[usize]) -> Result<usize> {
    let index = clockwise_subwords(cw)?;
    let subs = index.iter().copied().max().unwrap_or(0);
    let mut total = 0;
    for s in 1..=subs {
        let mut pos: Vec<(usize, usize)> =
            (0..cw.len()).filter(|&p| index[p] == s).map(|p| (cw[p], p)).collect();
        pos.sort();
        total += standard_cocharge(&pos.iter().map(|&(_, p)| p).collect::<Vec<_>>());
    }
    Ok(total)
}

/// Subword index of each letter of `w`, listed by word position.
pub fn standard_subwords(w: &Word) -> Result<Vec<usize>> {
    let mut idx = clockwise_subwords(&w.clockwise())?;
    idx.reverse();
    Ok(idx)
}

pub fn cocharge_word(w: &Word) -> Result<usize> {
    clockwise_cocharge(&w.clockwise())
}

/// `n(mu) - cocharge(w)`.
pub fn charge_word(w: &Word) -> Result<usize> {
    let mu = w.partition_weight()?;
    Ok(mu.n_stat() - cocharge_word(w)?)
}

/// The reading word of the tableau of shape and weight `lambda`: row `r`
/// holds `lambda_r` copies of `r`, read from the top row down.
pub fn superstandard_word(lambda: &Partition) -> Word {
    let mut v = Vec::with_capacity(lambda.degree());
    for r in (1..=lambda.len()).rev() {
        v.extend(std::iter::repeat_n(r, lambda.part(r)));
    }
    Word(v)
}

/// Every suffix of `w . word(T_lambda)` has partition weight.
pub fn is_lambda_yamanouchi(w: &Word, lambda: &Partition) -> bool {
    let full = w.concat(&superstandard_word(lambda));
    suffixes_are_partitions(full.letters())
}

pub fn is_yamanouchi(w: &Word) -> bool {
    suffixes_are_partitions(w.letters())
}

pub(crate) fn suffixes_are_partitions(letters: &[usize]) -> bool {
    let max = letters.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 2];
    for &x in letters.iter().rev() {
        count[x] += 1;
        if x > 1 && count[x] > count[x - 1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(w("6714235").weight().parts(), &[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(w("64534223511123").weight().parts(), &[3, 3, 3, 2, 2, 1]);
        assert_eq!(w("1").weight().parts(), &[1]);
    }

    #[test]
    fn small_cocharges() {
        assert_eq!(cocharge_word(&w("6714235")).unwrap(), 6);
        assert_eq!(cocharge_word(&w("21")).unwrap(), 1);
        assert_eq!(cocharge_word(&w("12")).unwrap(), 0);
        assert_eq!(charge_word(&w("12")).unwrap(), 1);
        assert_eq!(charge_word(&w("21")).unwrap(), 0);
    }

    #[test]
    fn fourteen_letter_circle() {
        // The circle lists 6,4,5,3,4,2,2,3,5,1,1,1,2,3 clockwise, which is the
        // counter-clockwise inscription of the reversed word.
        let word = w("32111532243546");
        let mut subs = standard_subwords(&word).unwrap();
        subs.reverse();
        assert_eq!(subs, vec![1, 1, 1, 3, 2, 2, 3, 2, 2, 1, 2, 3, 1, 1]);
        assert_eq!(cocharge_word(&word).unwrap(), 15);
        assert_eq!(charge_word(&word).unwrap(), 13);
    }

    #[test]
    fn subwords_of_1122() {
        assert_eq!(standard_subwords(&w("1122")).unwrap(), vec![2, 1, 2, 1]);
        assert_eq!(standard_subwords(&w("3142")).unwrap(), vec![1, 1, 1, 1]);
        assert!(standard_subwords(&w("122")).is_err());
    }

    #[test]
    fn yamanouchi() {
        let empty = Partition::empty();
        assert!(is_lambda_yamanouchi(&w("21"), &empty));
        assert!(!is_lambda_yamanouchi(&w("12"), &empty));
        assert!(is_lambda_yamanouchi(&w("11"), &Partition::new(vec![1]).unwrap()));
        assert!(is_lambda_yamanouchi(&w("2"), &Partition::new(vec![1]).unwrap()));
        assert_eq!(superstandard_word(&Partition::new(vec![2, 1]).unwrap()), w("211"));
    }

    #[test]
    fn descents_and_maj() {
        assert_eq!(w("132").maj(), 2);
        assert_eq!(w("212").maj(), 1);
        assert_eq!(w("23").maj(), 0);
        assert_eq!(w("3142").descents().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
