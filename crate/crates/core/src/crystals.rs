//! Crystal operators on words, circloids and colored tabloids, the graphs they
//! generate, and the zmaj statistic on tensor products of row crystals.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colored::{coprismatic_cmp, Circloid, ColoredLetter, ColoredTabloid};
use crate::error::{Error, Result};
use crate::fillings::i_inflate;
use crate::maps::{c_gamma, c_gamma_inv, companion, filling_from_word, ReadMode};
use crate::shapes::{Composition, Partition};
use crate::words::{self, Word};

/// Bracket matching: `Some(true)` opens, `Some(false)` closes, `None` is
/// ignored. Returns the unmatched closers and the unmatched openers, each in
/// left-to-right order.
fn unmatched(seq: impl IntoIterator<Item = Option<bool>>) -> (Vec<usize>, Vec<usize>) {
    let mut open = Vec::new();
    let mut closers = Vec::new();
    for (k, s) in seq.into_iter().enumerate() {
        match s {
            Some(true) => open.push(k),
            Some(false) if open.pop().is_none() => closers.push(k),
            _ => {}
        }
    }
    (closers, open)
}

fn word_brackets(b: &Word, i: usize) -> (Vec<usize>, Vec<usize>) {
    unmatched(b.letters().iter().map(|&x| match x {
        x if x == i + 1 => Some(true),
        x if x == i => Some(false),
        _ => None,
    }))
}

/// Changes the leftmost unmatched `i + 1` into `i`.
pub fn word_raise(b: &Word, i: usize) -> Option<Word> {
    if i == 0 {
        return None;
    }
    let (_, opens) = word_brackets(b, i);
    let p = *opens.first()?;
    let mut v = b.letters().to_vec();
    v[p] = i;
    Some(Word::new(v).expect("positive letters"))
}

/// Changes the rightmost unmatched `i` into `i + 1`.
pub fn word_lower(b: &Word, i: usize) -> Option<Word> {
    if i == 0 {
        return None;
    }
    let (closers, _) = word_brackets(b, i);
    let p = *closers.last()?;
    let mut v = b.letters().to_vec();
    v[p] = i + 1;
    Some(Word::new(v).expect("positive letters"))
}

/// Entries of sectors `i` and `i + 1` in co-prismatically decreasing order,
/// tagged with whether they come from sector `i + 1`.
fn circloid_brackets(c: &Circloid, i: usize) -> (Vec<(ColoredLetter, bool)>, Vec<usize>, Vec<usize>) {
    let mut both: Vec<(ColoredLetter, bool)> = c.sectors()[i - 1]
        .iter()
        .map(|&l| (l, false))
        .chain(c.sectors()[i].iter().map(|&l| (l, true)))
        .collect();
    both.sort_by(|a, b| coprismatic_cmp(&b.0, &a.0));
    let (closers, opens) = unmatched(both.iter().map(|&(_, upper)| Some(upper)));
    (both, closers, opens)
}

fn move_letter(c: &Circloid, l: ColoredLetter, from: usize, to: usize) -> Circloid {
    let mut sectors = c.sectors().to_vec();
    sectors[from - 1].retain(|&x| x != l);
    sectors[to - 1].push(l);
    Circloid::from_sets(sectors).expect("moving a letter keeps a valid circloid")
}

/// Moves the co-prismatically largest unpaired entry of sector `i + 1` into sector `i`.
pub fn circloid_raise(c: &Circloid, i: usize) -> Option<Circloid> {
    if i == 0 || i >= c.num_sectors() {
        return None;
    }
    let (both, _, opens) = circloid_brackets(c, i);
    let l = both[*opens.first()?].0;
    Some(move_letter(c, l, i + 1, i))
}

/// Moves the co-prismatically smallest unpaired entry of sector `i` into sector `i + 1`.
pub fn circloid_lower(c: &Circloid, i: usize) -> Option<Circloid> {
    if i == 0 || i >= c.num_sectors() {
        return None;
    }
    let (both, closers, _) = circloid_brackets(c, i);
    let l = both[*closers.last()?].0;
    Some(move_letter(c, l, i, i + 1))
}

/// Slides the largest entry of row `i + 1` that sits above an empty cell of
/// the `i`-inflation down into row `i`. Cells past the end of row `i` are empty.
pub fn dagger_raise(b: &ColoredTabloid, i: usize) -> Option<ColoredTabloid> {
    if i == 0 || i >= b.num_rows() {
        return None;
    }
    let spaced = i_inflate(b.rows(), i);
    let low = &spaced.rows[i - 1];
    let high = b.row(i + 1);
    let col = (0..high.len()).rev().find(|&c| !matches!(low.get(c), Some(Some(_))))?;
    let mut rows = b.rows().to_vec();
    let l = rows[i].remove(col);
    rows[i - 1].push(l);
    Some(ColoredTabloid::from_sets(rows).expect("sliding keeps a valid tabloid"))
}

/// Row lengths of the filling behind a dagger vertex: `gamma_r` counts the
/// colored letters `r`.
pub fn dagger_gamma(b: &ColoredTabloid) -> Composition {
    let mut g = Vec::new();
    for l in b.rows().iter().flatten() {
        if g.len() < l.letter {
            g.resize(l.letter, 0);
        }
        g[l.letter - 1] += 1;
    }
    Composition::new(g)
}

/// Lowering on dagger vertices, transported from the word crystal through `c_gamma`.
pub fn dagger_lower(b: &ColoredTabloid, i: usize) -> Option<ColoredTabloid> {
    let m = b.num_rows();
    if i == 0 || i >= m {
        return None;
    }
    let w = c_gamma_inv(b).ok()?;
    let lowered = word_lower(&w, i)?;
    c_gamma(&lowered, &dagger_gamma(b), m).ok()
}

/// A tensor product vertex `b_1 ⊗ .. ⊗ b_l` of weakly increasing rows.
/// The crystal acts on the reading word `b_l .. b_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct TensorRowVertex {
    rows: Vec<Vec<usize>>,
}

impl TensorRowVertex {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        for (k, r) in rows.iter().enumerate() {
            if r.contains(&0) {
                return Err(Error::ZeroLetter);
            }
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::UnsortedComponent(k + 1));
            }
        }
        Ok(TensorRowVertex { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn profile(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect()).expect("positive letters")
    }

    /// Splits a reading word back into rows of lengths `profile`.
    pub fn from_word(w: &Word, profile: &Composition) -> Result<Self> {
        if w.len() != profile.degree() {
            return Err(Error::LengthMismatch { word: w.len(), shape: profile.degree() });
        }
        let mut rest = w.letters();
        let mut rows = vec![Vec::new(); profile.len()];
        for (k, &len) in profile.parts().iter().enumerate().rev() {
            rows[k] = rest[..len].to_vec();
            rest = &rest[len..];
        }
        TensorRowVertex::new(rows)
    }

    pub fn raise(&self, i: usize) -> Option<Self> {
        let w = word_raise(&self.reading_word(), i)?;
        Some(TensorRowVertex::from_word(&w, &self.profile()).expect("rows stay sorted"))
    }

    pub fn lower(&self, i: usize) -> Option<Self> {
        let w = word_lower(&self.reading_word(), i)?;
        Some(TensorRowVertex::from_word(&w, &self.profile()).expect("rows stay sorted"))
    }

    /// The extraction words: each round takes the smallest letter of `b_1`,
    /// then from each later row the smallest letter exceeding the previous
    /// pick (or the smallest if none does). A round's word lists its picks
    /// from the last row back to the first.
    pub fn zwords(&self) -> Result<Vec<Word>> {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        Partition::new(lens.clone()).map_err(|_| Error::NotPartition(lens))?;
        let mut rest = self.rows.clone();
        let mut out = Vec::new();
        while rest.first().is_some_and(|r| !r.is_empty()) {
            let mut picks = Vec::new();
            let mut prev: Option<usize> = None;
            for row in rest.iter_mut().take_while(|r| !r.is_empty()) {
                let k = prev.and_then(|p| row.iter().position(|&x| x > p)).unwrap_or(0);
                let x = row.remove(k);
                picks.push(x);
                prev = Some(x);
            }
            picks.reverse();
            out.push(Word::new(picks).expect("positive letters"));
        }
        Ok(out)
    }

    pub fn zmaj(&self) -> Result<usize> {
        Ok(self.zwords()?.iter().map(Word::maj).sum())
    }

    /// The filling `f_b` of shape `profile` whose reading word is this vertex's.
    pub fn filling(&self) -> crate::fillings::Filling {
        filling_from_word(&self.reading_word(), &self.profile(), ReadMode::Row).expect("lengths agree")
    }

    /// `cocharge` of the faithful recoloring of the companion of `f_b`.
    pub fn companion_cocharge(&self) -> Result<usize> {
        companion(&self.filling()).faithful_recoloring()?.cocharge()
    }
}

impl TryFrom<Vec<Vec<usize>>> for TensorRowVertex {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        TensorRowVertex::new(rows)
    }
}

impl From<TensorRowVertex> for Vec<Vec<usize>> {
    fn from(v: TensorRowVertex) -> Self {
        v.rows
    }
}

impl fmt::Display for TensorRowVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<String>()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// Objects with crystal operators `raise_i`, `lower_i` for `1 <= i < rank + 1`.
pub trait CrystalVertex: Clone + Eq + Hash + Send + Sync + Serialize + fmt::Display {
    fn raise(&self, i: usize) -> Option<Self>;
    fn lower(&self, i: usize) -> Option<Self>;
    /// Weight vector; raising `i` moves one unit from coordinate `i + 1` to `i`.
    fn weight(&self) -> Vec<usize>;
    /// Named statistics shown on exported vertices.
    fn stats(&self) -> BTreeMap<String, i64> {
        BTreeMap::new()
    }
}

impl CrystalVertex for Word {
    fn raise(&self, i: usize) -> Option<Self> {
        word_raise(self, i)
    }
    fn lower(&self, i: usize) -> Option<Self> {
        word_lower(self, i)
    }
    fn weight(&self) -> Vec<usize> {
        Word::weight(self).into()
    }
    fn stats(&self) -> BTreeMap<String, i64> {
        let mut s = BTreeMap::new();
        s.insert("maj".into(), self.maj() as i64);
        if let Ok(c) = words::cocharge_word(self) {
            s.insert("cocharge".into(), c as i64);
        }
        s
    }
}

impl CrystalVertex for Circloid {
    fn raise(&self, i: usize) -> Option<Self> {
        circloid_raise(self, i)
    }
    fn lower(&self, i: usize) -> Option<Self> {
        circloid_lower(self, i)
    }
    fn weight(&self) -> Vec<usize> {
        self.shape().into()
    }
    fn stats(&self) -> BTreeMap<String, i64> {
        let mut s = BTreeMap::new();
        if let Ok(c) = self.cocharge() {
            s.insert("cocharge".into(), c as i64);
        }
        if let Ok(b) = self.betrayal() {
            s.insert("betrayal".into(), b as i64);
        }
        s
    }
}

impl CrystalVertex for ColoredTabloid {
    fn raise(&self, i: usize) -> Option<Self> {
        dagger_raise(self, i)
    }
    fn lower(&self, i: usize) -> Option<Self> {
        dagger_lower(self, i)
    }
    fn weight(&self) -> Vec<usize> {
        self.shape().into()
    }
    fn stats(&self) -> BTreeMap<String, i64> {
        let mut s = BTreeMap::new();
        if let Ok(c) = self.cocharge() {
            s.insert("cocharge".into(), c as i64);
        }
        if let Ok(c) = self.faithful_recoloring().and_then(|t| t.cocharge()) {
            s.insert("faithful_cocharge".into(), c as i64);
        }
        s
    }
}

impl CrystalVertex for TensorRowVertex {
    fn raise(&self, i: usize) -> Option<Self> {
        TensorRowVertex::raise(self, i)
    }
    fn lower(&self, i: usize) -> Option<Self> {
        TensorRowVertex::lower(self, i)
    }
    fn weight(&self) -> Vec<usize> {
        self.reading_word().weight().into()
    }
    fn stats(&self) -> BTreeMap<String, i64> {
        let mut s = BTreeMap::new();
        if let Ok(z) = self.zmaj() {
            s.insert("zmaj".into(), z as i64);
        }
        s
    }
}

/// A finite crystal graph: `(a, b, i)` is an edge when `raise_i(a) = b`.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph<V> {
    pub vertices: Vec<V>,
    pub edges: Vec<(usize, usize, usize)>,
    /// Number of edge colors; operators are indexed `1..=rank`.
    pub rank: usize,
}

fn pad(v: &[usize], len: usize) -> Vec<usize> {
    let mut v = v.to_vec();
    v.resize(len.max(v.len()), 0);
    v
}

impl<V: CrystalVertex> CrystalGraph<V> {
    /// Computes every raising edge and checks the crystal axioms: raising
    /// stays inside the vertex set, `raise_i(a) = b` iff `lower_i(b) = a`,
    /// and raising shifts the weight from `i + 1` to `i`.
    pub fn build(vertices: Vec<V>, rank: usize) -> Result<Self> {
        let index: HashMap<&V, usize> = vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let per_vertex: Vec<Result<Vec<(usize, usize, usize)>>> = vertices
            .par_iter()
            .enumerate()
            .map(|(a, v)| {
                let mut out = Vec::new();
                for i in 1..=rank {
                    if let Some(up) = v.raise(i) {
                        let &b = index
                            .get(&up)
                            .ok_or_else(|| Error::Invariant(format!("raise_{i}({v}) = {up} leaves the vertex set")))?;
                        if up.lower(i).as_ref() != Some(v) {
                            return Err(Error::Invariant(format!("lower_{i}(raise_{i}({v})) != {v}")));
                        }
                        let len = rank + 1;
                        let (wa, mut wb) = (pad(&v.weight(), len), pad(&up.weight(), len));
                        wb[i - 1] = wb[i - 1].wrapping_sub(1);
                        wb[i] += 1;
                        if wa != wb {
                            return Err(Error::Invariant(format!("raise_{i}({v}) breaks the weight shift")));
                        }
                        out.push((a, b, i));
                    }
                    if let Some(down) = v.lower(i) {
                        if down.raise(i).as_ref() != Some(v) {
                            return Err(Error::Invariant(format!("raise_{i}(lower_{i}({v})) != {v}")));
                        }
                        if !index.contains_key(&down) {
                            return Err(Error::Invariant(format!("lower_{i}({v}) = {down} leaves the vertex set")));
                        }
                    }
                }
                Ok(out)
            })
            .collect();
        let mut edges = Vec::new();
        for r in per_vertex {
            edges.extend(r?);
        }
        Ok(CrystalGraph { vertices, edges, rank })
    }

    /// Vertices killed by every raising operator.
    pub fn highest_weights(&self) -> Vec<usize> {
        let mut has_up = vec![false; self.vertices.len()];
        for &(a, _, _) in &self.edges {
            has_up[a] = true;
        }
        (0..self.vertices.len()).filter(|&k| !has_up[k]).collect()
    }

    /// Highest weight vertices of weight `mu`.
    pub fn highest_weights_of(&self, mu: &Partition) -> Vec<usize> {
        self.highest_weights()
            .into_iter()
            .filter(|&k| {
                let w = self.vertices[k].weight();
                let len = w.len().max(mu.len());
                pad(&w, len) == pad(mu.parts(), len)
            })
            .collect()
    }

    /// Connected components (ignoring direction), each listed in vertex order;
    /// components are ordered by their smallest vertex index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b, _) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..n {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(k);
        }
        groups.into_values().collect()
    }

    /// Each component holds exactly one highest weight vertex.
    pub fn check_unique_highest_weights(&self) -> Result<()> {
        let mut is_hw = vec![false; self.vertices.len()];
        for k in self.highest_weights() {
            is_hw[k] = true;
        }
        for comp in self.components() {
            let count = comp.iter().filter(|&&k| is_hw[k]).count();
            if count != 1 {
                return Err(Error::Invariant(format!(
                    "component of {} has {count} highest weights",
                    self.vertices[comp[0]]
                )));
            }
        }
        Ok(())
    }

    /// Whether `stat` takes a single value on every component.
    pub fn stat_constant_on_components(&self, stat: impl Fn(&V) -> Option<i64>) -> Option<usize> {
        self.components().into_iter().find_map(|comp| {
            let first = stat(&self.vertices[comp[0]]);
            comp.iter().find(|&&k| stat(&self.vertices[k]) != first).copied()
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        for (k, v) in self.vertices.iter().enumerate() {
            let stats: Vec<String> = v.stats().iter().map(|(n, x)| format!("{n}={x}")).collect();
            let label = if stats.is_empty() { v.to_string() } else { format!("{v}\\n{}", stats.join(" ")) };
            writeln!(s, "  v{k} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
        }
        for &(a, b, i) in &self.edges {
            writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| {
                serde_json::json!({
                    "id": k,
                    "object": v,
                    "label": v.to_string(),
                    "weight": v.weight(),
                    "stats": v.stats(),
                })
            })
            .collect();
        let edges: Vec<serde_json::Value> =
            self.edges.iter().map(|&(a, b, i)| serde_json::json!({"source": a, "target": b, "color": i})).collect();
        serde_json::json!({"rank": self.rank, "vertices": vertices, "edges": edges})
    }
}

/// The word crystal on `[m]^n`.
pub fn word_crystal(m: usize, n: usize) -> Result<CrystalGraph<Word>> {
    CrystalGraph::build(crate::enumerate::words(m, n).collect(), m.saturating_sub(1))
}

/// The circloid crystal on circloids with `m` sectors whose letter `r`
/// carries the colors `1..=gamma_r`.
pub fn circloid_crystal(gamma: &Composition, m: usize) -> Result<CrystalGraph<Circloid>> {
    CrystalGraph::build(crate::enumerate::circloids_with_colors(gamma, m).collect(), m.saturating_sub(1))
}

/// Reads the filling of a circloid down its columns, right to left: entry
/// `x_y` comes before `u_v` exactly when `x_y` is co-prismatically larger.
/// This intertwines the circloid crystal with the word crystal.
pub fn column_word(c: &Circloid) -> Word {
    let mut letters: Vec<(ColoredLetter, usize)> = c
        .sectors()
        .iter()
        .enumerate()
        .flat_map(|(x, s)| s.iter().map(move |&l| (l, x + 1)))
        .collect();
    letters.sort_by(|a, b| coprismatic_cmp(&b.0, &a.0));
    Word::new(letters.into_iter().map(|(_, x)| x).collect()).expect("sector numbers are positive")
}

/// The dagger crystal on colored tabloids with `m` rows and letter counts `gamma`,
/// listed in the order of their `c_gamma` preimages.
pub fn dagger_crystal(gamma: &Composition, m: usize) -> Result<CrystalGraph<ColoredTabloid>> {
    let vertices: Result<Vec<ColoredTabloid>> =
        crate::enumerate::words(m, gamma.degree()).map(|b| c_gamma(&b, gamma, m)).collect();
    CrystalGraph::build(vertices?, m.saturating_sub(1))
}

/// `B(gamma_1) ⊗ .. ⊗ B(gamma_l)` over the alphabet `[m]`.
pub fn tensor_crystal(gamma: &Composition, m: usize) -> Result<CrystalGraph<TensorRowVertex>> {
    let vertices: Result<Vec<TensorRowVertex>> =
        crate::enumerate::tensor_rows(gamma, m).into_iter().map(TensorRowVertex::new).collect();
    CrystalGraph::build(vertices?, m.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::tests::cl;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_operators() {
        assert_eq!(word_raise(&w("12"), 1), Some(w("11")));
        assert_eq!(word_lower(&w("12"), 1), Some(w("22")));
        assert_eq!(word_raise(&w("21"), 1), None);
        assert_eq!(word_lower(&w("21"), 1), None);
        assert_eq!(word_raise(&w("2212"), 1), Some(w("1212")));
    }

    #[test]
    fn small_word_crystal() {
        let g = word_crystal(2, 2).unwrap();
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 2);
        let hw: Vec<String> = g.highest_weights().iter().map(|&k| g.vertices[k].to_string()).collect();
        assert_eq!(hw, vec!["11", "21"]);
        let comps: Vec<Vec<String>> = g
            .components()
            .iter()
            .map(|c| c.iter().map(|&k| g.vertices[k].to_string()).collect())
            .collect();
        assert_eq!(comps, vec![vec!["11", "12", "22"], vec!["21"]]);
        g.check_unique_highest_weights().unwrap();
        assert!(g.to_dot("g").contains("v1 -> v0 [label=\"1\"]"));
    }

    #[test]
    fn zmaj_printed_example() {
        let b = TensorRowVertex::new(vec![vec![2, 2, 3], vec![1, 2, 3], vec![1, 2]]).unwrap();
        let z: Vec<String> = b.zwords().unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(z, vec!["132", "212", "23"]);
        assert_eq!(b.zmaj().unwrap(), 3);
        assert_eq!(b.zmaj().unwrap(), b.companion_cocharge().unwrap());
        assert_eq!(b.reading_word(), w("12123223"));
        assert_eq!(TensorRowVertex::from_word(&b.reading_word(), &b.profile()).unwrap(), b);
    }

    #[test]
    fn dagger_slide_on_printed_tabloid() {
        let t = ColoredTabloid::new(vec![
            cl(&[(1, 3), (2, 2), (3, 1)]),
            cl(&[(1, 2), (2, 1), (3, 3)]),
            cl(&[(1, 1), (2, 3), (3, 2)]),
        ])
        .unwrap();
        let up = dagger_raise(&t, 2).unwrap();
        assert_eq!(up.row(2), cl(&[(1, 2), (2, 3), (2, 1), (3, 3)]).as_slice());
        assert_eq!(up.row(3), cl(&[(1, 1), (3, 2)]).as_slice());
        assert_eq!(dagger_lower(&up, 2), Some(t));
    }

    #[test]
    fn circloid_raise_with_empty_sector() {
        let c = Circloid::from_sets(vec![vec![], cl(&[(2, 1), (1, 1)])]).unwrap();
        let up = circloid_raise(&c, 1).unwrap();
        assert_eq!(up.shape().parts(), &[1, 1]);
        assert_eq!(circloid_lower(&up, 1), Some(c));
    }
}
