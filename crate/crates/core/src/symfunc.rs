//! Symmetric and quasisymmetric expansions over `Z[q, t]`, and the
//! generating functions built from fillings, circloids and colored words.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::colored::{clockwise_ascents, Circloid};
use crate::crystals::TensorRowVertex;
use crate::enumerate::{self, check_cap};
use crate::error::{Error, Result};
use crate::fillings::{inflate, maj_block, Filling};
use crate::maps;
use crate::qtpoly::QTPoly;
use crate::shapes::{Cell, Composition, Partition, SkewShape};
use crate::words::{self, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
    /// Fundamental quasisymmetric functions; labels are subsets of `1..degree`.
    Fundamental,
}

impl Basis {
    fn prefix(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Fundamental => "Q",
        }
    }
}

/// A linear combination of basis elements with `Z[q, t]` coefficients.
/// Monomial and Schur labels are partitions; fundamental labels are sorted
/// subsets of `1..degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymExpansion {
    pub basis: Basis,
    pub nvars: usize,
    /// Degree of the homogeneous part of highest degree.
    pub degree: usize,
    #[serde(serialize_with = "ser_terms", deserialize_with = "de_terms")]
    pub terms: BTreeMap<Vec<usize>, QTPoly>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    label: Vec<usize>,
    coeff: QTPoly,
}

fn ser_terms<S: Serializer>(terms: &BTreeMap<Vec<usize>, QTPoly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Term> = terms.iter().map(|(l, c)| Term { label: l.clone(), coeff: c.clone() }).collect();
    v.serialize(s)
}

fn de_terms<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Vec<usize>, QTPoly>, D::Error> {
    let v = Vec::<Term>::deserialize(d)?;
    let mut out: BTreeMap<Vec<usize>, QTPoly> = BTreeMap::new();
    for t in v {
        *out.entry(t.label).or_default() += &t.coeff;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

impl SymExpansion {
    pub fn new(basis: Basis, nvars: usize, degree: usize) -> Self {
        SymExpansion { basis, nvars, degree, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, label: Vec<usize>, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(label.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn coeff(&self, label: &[usize]) -> QTPoly {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> SymExpansion {
        let mut out = SymExpansion::new(self.basis, self.nvars, self.degree);
        for (l, c) in &self.terms {
            out.add(l.clone(), &f(c));
        }
        out
    }

    pub fn at_q0(&self) -> SymExpansion {
        self.map_coeffs(QTPoly::at_q0)
    }

    pub fn at_q1(&self) -> SymExpansion {
        self.map_coeffs(QTPoly::at_q1)
    }

    pub fn swap_qt(&self) -> SymExpansion {
        self.map_coeffs(QTPoly::swap_qt)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QTPoly::is_nonnegative)
    }

    /// Drops Schur or monomial terms with more than `n` parts and records `n`
    /// as the variable count.
    pub fn truncate_vars(&self, n: usize) -> SymExpansion {
        let mut out = SymExpansion::new(self.basis, n, self.degree);
        for (l, c) in &self.terms {
            if self.basis == Basis::Fundamental || l.len() <= n {
                out.add(l.clone(), c);
            }
        }
        out
    }

    pub fn label_string(&self, label: &[usize]) -> String {
        let body: Vec<String> = label.iter().map(|x| x.to_string()).collect();
        match self.basis {
            Basis::Fundamental => format!("Q{{{}}}", body.join(",")),
            b => format!("{}[{}]", b.prefix(), body.join(",")),
        }
    }

    /// Labels by decreasing degree, then decreasing lexicographic order.
    fn ordered(&self) -> Vec<(&Vec<usize>, &QTPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        match self.basis {
            Basis::Fundamental => {}
            _ => v.sort_by(|a, b| (b.0.iter().sum::<usize>(), b.0).cmp(&(a.0.iter().sum::<usize>(), a.0))),
        }
        v
    }

    /// One line per term: `s[3,1] : 1 + q*t + t^2`.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (l, c) in self.ordered() {
            writeln!(s, "{} : {c}", self.label_string(l)).unwrap();
        }
        s
    }

    /// `label,q,t,coeff` rows, one per monomial of every coefficient.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["label", "q", "t", "coeff"]).expect("in-memory write");
        for (l, c) in self.ordered() {
            for (a, b, k) in c.terms() {
                let row = [self.label_string(l), a.to_string(), b.to_string(), k.to_string()];
                w.write_record(&row).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Converts to another basis in the same number of variables.
    pub fn to_basis(&self, target: Basis) -> Result<SymExpansion> {
        match (self.basis, target) {
            (a, b) if a == b => Ok(self.clone()),
            (Basis::Monomial, Basis::Schur) => monomial_to_schur(self),
            (Basis::Schur, Basis::Monomial) => Ok(schur_to_monomial(self)),
            (Basis::Fundamental, Basis::Monomial) => fundamental_to_poly(self).to_monomial(self.degree),
            (Basis::Fundamental, Basis::Schur) => monomial_to_schur(&self.to_basis(Basis::Monomial)?),
            (_, Basis::Fundamental) => Err(Error::Unsupported("expansion into the fundamental basis".into())),
            _ => unreachable!("all basis pairs are covered"),
        }
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.ordered().iter().map(|(l, c)| format!("({c})*{}", self.label_string(l))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A polynomial in `x_1 .. x_nvars` keyed by exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<usize>, QTPoly>,
}

impl Poly {
    pub fn new(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    /// Adds `c * x^exps`; `exps` is padded with zeros to `nvars`.
    pub fn add_term(&mut self, exps: &[usize], c: &QTPoly) {
        assert!(exps.iter().skip(self.nvars).all(|&e| e == 0), "exponent beyond the variable count");
        let mut key = exps[..exps.len().min(self.nvars)].to_vec();
        key.resize(self.nvars, 0);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn merge(mut self, other: Poly) -> Poly {
        for (k, c) in other.terms {
            self.add_term(&k, &c);
        }
        self
    }

    /// Checks symmetry and collects the coefficients of sorted exponent
    /// vectors as a monomial expansion.
    pub fn to_monomial(&self, degree: usize) -> Result<SymExpansion> {
        let mut groups: BTreeMap<Vec<usize>, (QTPoly, u128)> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut lam = k.clone();
            lam.sort_unstable_by(|a, b| b.cmp(a));
            let g = groups.entry(lam).or_insert_with(|| (c.clone(), 0));
            if &g.0 != c {
                return Err(Error::NotSymmetric);
            }
            g.1 += 1;
        }
        let mut out = SymExpansion::new(Basis::Monomial, self.nvars, degree);
        for (lam, (c, count)) in groups {
            if count != distinct_permutations(&lam) {
                return Err(Error::NotSymmetric);
            }
            let label: Vec<usize> = lam.into_iter().filter(|&x| x > 0).collect();
            out.add(label, &c);
        }
        Ok(out)
    }
}

fn distinct_permutations(v: &[usize]) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in v {
        *mult.entry(x).or_default() += 1;
    }
    mult.values().fold(fact(v.len()), |acc, &m| acc / fact(m))
}

/// All distinct rearrangements of `v`, in lexicographic order.
fn rearrangements(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("a larger element exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Expands a monomial expansion into explicit monomials.
pub fn monomial_to_poly(e: &SymExpansion) -> Poly {
    let mut p = Poly::new(e.nvars);
    for (lam, c) in &e.terms {
        if lam.len() > e.nvars {
            continue;
        }
        let mut padded = lam.clone();
        padded.resize(e.nvars, 0);
        for key in rearrangements(&padded) {
            p.add_term(&key, c);
        }
    }
    p
}

type KostkaCache = Mutex<HashMap<(Vec<usize>, Vec<usize>), usize>>;

static KOSTKA: OnceLock<KostkaCache> = OnceLock::new();

/// Number of semistandard tableaux of shape `lambda` and weight `mu`.
pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> usize {
    let key = (lambda.parts().to_vec(), mu.to_vec());
    let cache = KOSTKA.get_or_init(Default::default);
    if let Some(&k) = cache.lock().expect("cache lock").get(&key) {
        return k;
    }
    let k = enumerate::ssyt(&lambda.to_skew(), mu).len();
    cache.lock().expect("cache lock").insert(key, k);
    k
}

/// `s_lambda(x_1 .. x_n)` in the monomial basis.
pub fn schur_in_vars(lambda: &Partition, n: usize) -> SymExpansion {
    let mut out = SymExpansion::new(Basis::Monomial, n, lambda.degree());
    if lambda.len() > n {
        return out;
    }
    for mu in Partition::all(lambda.degree()) {
        if mu.len() <= n {
            let k = kostka_number(lambda, mu.parts());
            out.add(mu.parts().to_vec(), &QTPoly::constant(k));
        }
    }
    out
}

fn schur_to_monomial(e: &SymExpansion) -> SymExpansion {
    let mut out = SymExpansion::new(Basis::Monomial, e.nvars, e.degree);
    for (lam, c) in &e.terms {
        let lam = Partition::new(lam.clone()).expect("schur labels are partitions");
        for (mu, k) in schur_in_vars(&lam, e.nvars).terms {
            out.add(mu, &(&k * c));
        }
    }
    out
}

/// Repeatedly strips the leading term, taking labels by decreasing degree and
/// then decreasing lexicographic order, which refines dominance.
pub fn monomial_to_schur(e: &SymExpansion) -> Result<SymExpansion> {
    if e.basis != Basis::Monomial {
        return e.to_basis(Basis::Schur);
    }
    for lam in e.terms.keys() {
        Partition::new(lam.clone())?;
    }
    let mut work = e.terms.clone();
    let mut out = SymExpansion::new(Basis::Schur, e.nvars, e.degree);
    let key = |l: &Vec<usize>| (l.iter().sum::<usize>(), l.clone());
    while let Some(lead) = work.keys().max_by_key(|l| key(l)).cloned() {
        if lead.len() > e.nvars {
            return Err(Error::NonzeroResidual);
        }
        let c = work.remove(&lead).expect("key present");
        out.add(lead.clone(), &c);
        let lam = Partition::new(lead.clone()).expect("checked above");
        for (mu, k) in schur_in_vars(&lam, e.nvars).terms {
            if mu == lead {
                continue;
            }
            if key(&mu) > key(&lead) {
                return Err(Error::NonzeroResidual);
            }
            let entry = work.entry(mu.clone()).or_default();
            *entry += &(-(&k * &c));
            if entry.is_zero() {
                work.remove(&mu);
            }
        }
    }
    Ok(out)
}

/// `Q_S` of degree `d` in `n` variables: the sum of `x_{i_1} .. x_{i_d}` over
/// `i_1 <= .. <= i_d` with `i_j < i_{j+1}` for every `j` in `S`.
pub fn fundamental_poly(d: usize, s: &BTreeSet<usize>, n: usize, c: &QTPoly) -> Poly {
    #[allow(clippy::too_many_arguments)]
    fn rec(j: usize, d: usize, lo: usize, s: &BTreeSet<usize>, n: usize, exps: &mut [usize], c: &QTPoly, out: &mut Poly) {
        if j == d {
            out.add_term(exps, c);
            return;
        }
        for v in lo..=n {
            exps[v - 1] += 1;
            let next = if s.contains(&(j + 1)) { v + 1 } else { v };
            rec(j + 1, d, next, s, n, exps, c, out);
            exps[v - 1] -= 1;
        }
    }
    let mut out = Poly::new(n);
    let mut exps = vec![0; n];
    rec(0, d, 1, s, n, &mut exps, c, &mut out);
    out
}

fn fundamental_to_poly(e: &SymExpansion) -> Poly {
    e.terms
        .par_iter()
        .map(|(s, c)| fundamental_poly(e.degree, &s.iter().copied().collect(), e.nvars, c))
        .reduce(|| Poly::new(e.nvars), Poly::merge)
}

fn qt(a: usize, b: usize) -> QTPoly {
    QTPoly::monomial(a as u32, b as u32)
}

fn padded(w: &Composition, n: usize) -> Vec<usize> {
    let mut v = w.parts().to_vec();
    v.resize(n.max(v.len()), 0);
    v
}

fn guard(mu: &Partition, n: usize) -> Result<()> {
    check_cap(mu.degree())?;
    check_cap(n)
}

/// `sum_F q^inv(F) t^maj(F) x^F` over all fillings of shape `mu` with entries in `[n]`.
pub fn macdonald_hhl(mu: &Partition, n: usize) -> Result<SymExpansion> {
    guard(mu, n)?;
    let shape = mu.to_skew();
    let poly = (0..enumerate::count_fillings(&shape, n))
        .into_par_iter()
        .fold(
            || Poly::new(n),
            |mut acc, k| {
                let f = enumerate::filling_at(&shape, n, k);
                let c = qt(f.inv().expect("partition shape"), f.maj().expect("partition shape"));
                acc.add_term(&padded(&f.weight(), n), &c);
                acc
            },
        )
        .reduce(|| Poly::new(n), Poly::merge);
    poly.to_monomial(mu.degree())
}

/// `sum_C q^betrayal(C) t^stat(C) x^shape(C)` over circloids of weight `mu`
/// with `n` (possibly empty) sectors.
fn circloid_sum(mu: &Partition, n: usize, stat: fn(&Circloid) -> Result<usize>) -> Result<SymExpansion> {
    guard(mu, n)?;
    let shape = mu.to_skew();
    let poly = (0..enumerate::count_fillings(&shape, n))
        .into_par_iter()
        .fold(
            || Poly::new(n),
            |mut acc, k| {
                let c = maps::f_inv_sectors(&enumerate::filling_at(&shape, n, k), n).expect("entries fit");
                let coeff = qt(c.betrayal().expect("partition weight"), stat(&c).expect("partition weight"));
                acc.add_term(c.shape().parts(), &coeff);
                acc
            },
        )
        .reduce(|| Poly::new(n), Poly::merge);
    poly.to_monomial(mu.degree())
}

/// `sum_C q^betrayal(C) t^cocharge(C) x^shape(C)`.
pub fn macdonald_circloid(mu: &Partition, n: usize) -> Result<SymExpansion> {
    circloid_sum(mu, n, Circloid::cocharge)
}

/// `sum_C q^betrayal(C) t^charge(C) x^shape(C)`.
pub fn macdonald_circloid_charge(mu: &Partition, n: usize) -> Result<SymExpansion> {
    circloid_sum(mu, n, Circloid::charge)
}

/// `sum_w q^betrayal(w) t^cocharge(w) Q_{Asc(w)}` over colored words of
/// weight `mu`, with the ascent set read clockwise.
pub fn macdonald_qsym(mu: &Partition, n: usize) -> Result<SymExpansion> {
    guard(mu, n)?;
    let all: Vec<_> = enumerate::colored_words(mu).collect();
    let tally: BTreeMap<Vec<usize>, QTPoly> = all
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Vec<usize>, QTPoly>, ccw| {
            let c = Circloid::from_colored_word(ccw).expect("distinct letters");
            let label: Vec<usize> = clockwise_ascents(&c.clockwise()).into_iter().collect();
            *acc.entry(label).or_default() +=
                &qt(c.betrayal().expect("partition weight"), c.cocharge().expect("partition weight"));
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += &v;
            }
            a
        });
    let mut out = SymExpansion::new(Basis::Fundamental, n, mu.degree());
    for (l, c) in tally {
        out.add(l, &c);
    }
    Ok(out)
}

/// `K_{lambda mu}(t)`: the sum of `t^cocharge` of the reading words of
/// semistandard tableaux of shape `lambda` and weight `mu`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QTPoly> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch { left: lambda.degree(), right: mu.degree() });
    }
    let mut p = QTPoly::zero();
    for t in enumerate::ssyt(&lambda.to_skew(), mu.parts()) {
        p += &qt(0, words::cocharge_word(&t.reading_word())?);
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum HlMethod {
    /// Inversionless super-Yamanouchi fillings weighted by `t^maj`.
    Super,
    /// Yamanouchi tensor vertices weighted by `t^zmaj`.
    Zmaj,
    /// `q = 0` in the inv/maj filling sum.
    HhlQ0,
    /// Kostka-Foulkes polynomials.
    Kostka,
}

impl HlMethod {
    pub const ALL: [HlMethod; 4] = [HlMethod::Super, HlMethod::Zmaj, HlMethod::HhlQ0, HlMethod::Kostka];
}

fn schur_sum(n: usize, degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, QTPoly)>) -> SymExpansion {
    let mut out = SymExpansion::new(Basis::Schur, n, degree);
    for (mut l, c) in terms {
        while l.last() == Some(&0) {
            l.pop();
        }
        if l.len() <= n {
            out.add(l, &c);
        }
    }
    out
}

/// The `q = 0` specialization in the Schur basis of `n` variables.
pub fn hl_specialization(mu: &Partition, n: usize, method: HlMethod) -> Result<SymExpansion> {
    guard(mu, n)?;
    let d = mu.degree();
    match method {
        HlMethod::Super => {
            let shape = mu.to_skew();
            let terms: Vec<(Vec<usize>, QTPoly)> = (0..enumerate::count_fillings(&shape, d.max(1)))
                .into_par_iter()
                .filter_map(|k| {
                    let f = enumerate::filling_at(&shape, d.max(1), k);
                    (f.inv().ok()? == 0 && f.is_super_yamanouchi())
                        .then(|| (f.weight().into(), qt(0, f.maj().expect("partition shape"))))
                })
                .collect();
            Ok(schur_sum(n, d, terms))
        }
        HlMethod::Zmaj => {
            let gamma = Composition::from(mu);
            let terms: Result<Vec<(Vec<usize>, QTPoly)>> = enumerate::tensor_rows(&gamma, d.max(1))
                .into_par_iter()
                .filter_map(|rows| {
                    let b = TensorRowVertex::new(rows).expect("sorted rows");
                    let w = b.reading_word();
                    words::is_yamanouchi(&w).then(|| Ok((w.weight().into(), qt(0, b.zmaj()?))))
                })
                .collect();
            Ok(schur_sum(n, d, terms?))
        }
        HlMethod::HhlQ0 => monomial_to_schur(&macdonald_hhl(mu, n)?.at_q0()),
        HlMethod::Kostka => {
            let mut terms = Vec::new();
            for lam in Partition::all(d) {
                terms.push((lam.parts().to_vec(), kostka_foulkes(&lam, mu)?));
            }
            Ok(schur_sum(n, d, terms))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Q1Method {
    /// Semistandard colored tabloids weighted by `t^cocharge`.
    Ssct,
    /// Yamanouchi words weighted by the block maj of their descent sets.
    MajBlock,
    /// Standard tableaux weighted by the cocharges of their letter blocks.
    Standard,
    /// `q = 1` in the inv/maj filling sum.
    HhlQ1,
}

impl Q1Method {
    pub const ALL: [Q1Method; 4] = [Q1Method::Ssct, Q1Method::MajBlock, Q1Method::Standard, Q1Method::HhlQ1];
}

/// Standardizes a word whose letters are distinct.
fn standardize_distinct(letters: &[usize]) -> Word {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    Word::new(letters.iter().map(|x| sorted.binary_search(x).expect("present") + 1).collect()).expect("positive")
}

/// `sum over c` of the cocharge of the standardized restriction of `t`'s
/// reading word to the `c`-th block of consecutive letters; block `c` has
/// `blocks[c]` letters.
pub fn block_cocharge(t: &Filling, blocks: &[usize]) -> Result<usize> {
    let word = t.reading_word();
    let mut total = 0;
    let mut lo = 0;
    for &b in blocks {
        let sub: Vec<usize> = word.letters().iter().copied().filter(|&x| x > lo && x <= lo + b).collect();
        total += words::cocharge_word(&standardize_distinct(&sub))?;
        lo += b;
    }
    Ok(total)
}

/// The `q = 1` specialization in the Schur basis of `n` variables.
pub fn mac_q1(mu: &Partition, n: usize, method: Q1Method) -> Result<SymExpansion> {
    guard(mu, n)?;
    let d = mu.degree();
    let conj = mu.conjugate();
    match method {
        Q1Method::Ssct => {
            let shape = mu.to_skew();
            let rows = d.max(1);
            let terms: Result<Vec<(Vec<usize>, QTPoly)>> = (0..enumerate::count_fillings(&shape, rows))
                .into_par_iter()
                .filter_map(|k| {
                    let c = maps::f_inv_sectors(&enumerate::filling_at(&shape, rows, k), rows).expect("entries fit");
                    let t = c.iota();
                    t.is_ssct().then(|| Ok((t.shape().into(), qt(0, t.cocharge()?))))
                })
                .collect();
            Ok(schur_sum(n, d, terms?))
        }
        Q1Method::MajBlock => {
            let m = d.max(1);
            let terms: Result<Vec<(Vec<usize>, QTPoly)>> = (0..m.pow(d as u32))
                .into_par_iter()
                .filter_map(|k| {
                    let b = word_at(m, d, k);
                    words::is_yamanouchi(&b).then(|| Ok((b.weight().into(), qt(0, maj_block(&conj, &b.descents())?))))
                })
                .collect();
            Ok(schur_sum(n, d, terms?))
        }
        Q1Method::Standard => {
            let mut terms = Vec::new();
            for lam in Partition::all(d) {
                for t in enumerate::standard(&lam.to_skew()) {
                    terms.push((lam.parts().to_vec(), qt(0, block_cocharge(&t, conj.parts())?)));
                }
            }
            Ok(schur_sum(n, d, terms))
        }
        Q1Method::HhlQ1 => monomial_to_schur(&macdonald_hhl(mu, n)?.at_q1()),
    }
}

fn word_at(m: usize, n: usize, mut k: usize) -> Word {
    let mut v = vec![0; n];
    for x in v.iter_mut().rev() {
        *x = k % m + 1;
        k /= m;
    }
    Word::new(v).expect("positive letters")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GrothMethod {
    /// Reverse plane partitions weighted by the columns containing each letter.
    Rpp,
    /// Schur functions of Yamanouchi tabloids with the given inflated shape.
    Schur,
}

/// How a tabloid's inflation is matched against a skew shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KConvention {
    /// The occupied cells of the inflation are exactly the cells of `nu / lambda`.
    Cells,
    /// The tabloid is the compression of a reverse plane partition of shape `nu / lambda`.
    Decompress,
    /// Straight shapes only: `nu_r` is the last occupied column in rows `r` and above.
    Closure,
}

impl KConvention {
    pub const ALL: [KConvention; 3] = [KConvention::Cells, KConvention::Decompress, KConvention::Closure];
}

/// The column weight of a reverse plane partition: `alpha_i` counts the
/// columns containing `i`.
pub fn column_weight(r: &Filling) -> Vec<usize> {
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for cell in r.shape().cells() {
        seen.insert((r.get(cell).expect("cell in shape"), cell.col));
    }
    let mut w = vec![0; r.max_entry()];
    for (x, _) in seen {
        w[x - 1] += 1;
    }
    w
}

/// Yamanouchi tabloids with at most `rows` rows and exactly `size` letters.
pub fn yamanouchi_tabloids(rows: usize, size: usize) -> Vec<Filling> {
    let mut out = Vec::new();
    for gamma in enumerate::weak_compositions(size, rows) {
        for t in enumerate::tabloids(&gamma, size.max(1)) {
            if t.is_yamanouchi() {
                out.push(t);
            }
        }
    }
    out
}

/// Whether the inflation of `t` matches `shape` under `conv`.
pub fn inflated_shape_matches(t: &Filling, shape: &SkewShape, conv: KConvention) -> bool {
    let cells = inflate(t.rows()).cells();
    match conv {
        KConvention::Cells => cells == shape.cells().into_iter().collect::<BTreeSet<Cell>>(),
        KConvention::Closure => shape.is_straight() && closure_shape(&cells) == trim(shape.outer()),
        KConvention::Decompress => unreachable!("decompression is not a property of the inflation alone"),
    }
}

fn trim(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `nu_r` = the last occupied column over rows `r` and above.
pub fn closure_shape(cells: &BTreeSet<Cell>) -> Vec<usize> {
    let top = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut nu = vec![0; top];
    for c in cells {
        nu[c.row - 1] = nu[c.row - 1].max(c.col);
    }
    for r in (0..top.saturating_sub(1)).rev() {
        nu[r] = nu[r].max(nu[r + 1]);
    }
    trim(&nu)
}

/// Two distinct reverse plane partitions with the same compression.
pub type Collision = (Filling, Filling);

/// The distinct Yamanouchi compressions of reverse plane partitions of `shape`,
/// plus a pair of distinct plane partitions with equal compressions if any.
pub fn decompress_tabloids(shape: &SkewShape) -> Result<(Vec<Filling>, Option<Collision>)> {
    let mut seen: BTreeMap<Vec<Vec<usize>>, Filling> = BTreeMap::new();
    let mut collision = None;
    for r in enumerate::rpp(shape, shape.size().max(1)) {
        let f = r.rpp_compress()?;
        let key = f.rows_vec();
        match seen.get(&key) {
            Some(prev) if collision.is_none() => collision = Some((prev.clone(), r)),
            Some(_) => {}
            None => {
                seen.insert(key, r);
            }
        }
    }
    let mut out = Vec::new();
    for key in seen.into_keys() {
        let f = Filling::from_rows(key)?;
        if f.is_yamanouchi() {
            out.push(f);
        }
    }
    Ok((out, collision))
}

/// The dual stable Grothendieck function `g_{nu/lambda}` in `n` variables,
/// in the monomial basis for `Rpp` and the Schur basis for `Schur`.
pub fn dual_groth(shape: &SkewShape, n: usize, method: GrothMethod, conv: KConvention) -> Result<SymExpansion> {
    check_cap(shape.size())?;
    check_cap(n)?;
    let degree = shape.size();
    match method {
        GrothMethod::Rpp => {
            let mut p = Poly::new(n);
            for r in enumerate::rpp(shape, n) {
                p.add_term(&column_weight(&r), &QTPoly::one());
            }
            p.to_monomial(degree)
        }
        GrothMethod::Schur => {
            let tabloids = match conv {
                KConvention::Decompress => decompress_tabloids(shape)?.0,
                KConvention::Cells | KConvention::Closure => (1..=degree)
                    .flat_map(|k| yamanouchi_tabloids(shape.num_rows(), k))
                    .filter(|t| inflated_shape_matches(t, shape, conv))
                    .collect(),
            };
            Ok(schur_sum(n, degree, tabloids.iter().map(|t| (t.weight().into(), QTPoly::one()))))
        }
    }
}

/// `(x_1 + .. + x_n)^d` in the monomial basis.
pub fn power_sum_one(d: usize, n: usize) -> SymExpansion {
    let mut out = SymExpansion::new(Basis::Monomial, n, d);
    for lam in Partition::all(d) {
        if lam.len() <= n {
            let fact = |k: usize| (1..=k).map(BigInt::from).product::<BigInt>();
            let multinomial = lam.parts().iter().fold(fact(d), |acc, &p| acc / fact(p));
            out.add(lam.parts().to_vec(), &QTPoly::constant(multinomial));
        }
    }
    out
}

pub fn schur(labels: &[(&[usize], QTPoly)], n: usize) -> SymExpansion {
    let degree = labels.iter().map(|(l, _)| l.iter().sum()).max().unwrap_or(0);
    schur_sum(n, degree, labels.iter().map(|(l, c)| (l.to_vec(), c.clone())))
}

/// `sum of coefficients` at `q = t = 1` per monomial label.
pub fn at_one(e: &SymExpansion) -> SymExpansion {
    e.map_coeffs(|c| QTPoly::constant(c.at_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(b: u32) -> QTPoly {
        QTPoly::t_pow(b)
    }

    fn q(a: u32) -> QTPoly {
        QTPoly::monomial(a, 0)
    }

    #[test]
    fn schur_polynomials() {
        let s1 = schur_in_vars(&p(&[1]), 3);
        assert_eq!(monomial_to_poly(&s1).terms.len(), 3);
        let s21 = schur_in_vars(&p(&[2, 1]), 3);
        assert_eq!(s21.coeff(&[2, 1]), QTPoly::one());
        assert_eq!(s21.coeff(&[1, 1, 1]), QTPoly::constant(2));
        let e2 = schur_in_vars(&p(&[1, 1]), 2);
        assert_eq!(monomial_to_poly(&e2).terms.keys().collect::<Vec<_>>(), vec![&vec![1, 1]]);
        assert!(schur_in_vars(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn schur_round_trip() {
        for lam in Partition::all(4) {
            let s = monomial_to_schur(&schur_in_vars(&lam, 4)).unwrap();
            assert_eq!(s.terms.len(), 1);
            assert_eq!(s.coeff(lam.parts()), QTPoly::one());
        }
        let mut h2 = SymExpansion::new(Basis::Monomial, 2, 2);
        h2.add(vec![2], &QTPoly::one());
        h2.add(vec![1, 1], &QTPoly::one());
        assert_eq!(monomial_to_schur(&h2).unwrap(), schur(&[(&[2], QTPoly::one())], 2));
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let mut poly = Poly::new(2);
        poly.add_term(&[1, 0], &QTPoly::one());
        assert_eq!(poly.to_monomial(1), Err(Error::NotSymmetric));
    }

    #[test]
    fn small_macdonald_polynomials() {
        let h11 = monomial_to_schur(&macdonald_hhl(&p(&[1, 1]), 2).unwrap()).unwrap();
        assert_eq!(h11, schur(&[(&[2], QTPoly::one()), (&[1, 1], t(1))], 2));
        let h2 = monomial_to_schur(&macdonald_hhl(&p(&[2]), 2).unwrap()).unwrap();
        assert_eq!(h2, schur(&[(&[2], QTPoly::one()), (&[1, 1], q(1))], 2));
        let h21 = monomial_to_schur(&macdonald_hhl(&p(&[2, 1]), 3).unwrap()).unwrap();
        let expected =
            schur(&[(&[3], QTPoly::one()), (&[2, 1], q(1) + t(1)), (&[1, 1, 1], QTPoly::monomial(1, 1))], 3);
        assert_eq!(h21, expected);
    }

    #[test]
    fn fundamental_of_empty_set_is_complete_homogeneous() {
        let e = fundamental_poly(3, &BTreeSet::new(), 3, &QTPoly::one()).to_monomial(3).unwrap();
        for lam in Partition::all(3) {
            assert_eq!(e.coeff(lam.parts()), QTPoly::one());
        }
    }

    #[test]
    fn kostka_foulkes_values() {
        assert_eq!(kostka_foulkes(&p(&[2]), &p(&[1, 1])).unwrap(), QTPoly::one());
        assert_eq!(kostka_foulkes(&p(&[1, 1]), &p(&[1, 1])).unwrap(), t(1));
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), t(1) + t(2));
        assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn q1_small_values() {
        for m in Q1Method::ALL {
            let e = mac_q1(&p(&[2]), 2, m).unwrap();
            assert_eq!(e, schur(&[(&[2], QTPoly::one()), (&[1, 1], QTPoly::one())], 2), "{m:?}");
            let e = mac_q1(&p(&[2, 1]), 3, m).unwrap();
            let expected = schur(&[(&[3], QTPoly::one()), (&[2, 1], QTPoly::one() + t(1)), (&[1, 1, 1], t(1))], 3);
            assert_eq!(e, expected, "{m:?}");
        }
    }

    #[test]
    fn q0_small_values() {
        for m in HlMethod::ALL {
            let e = hl_specialization(&p(&[1, 1]), 2, m).unwrap();
            assert_eq!(e, schur(&[(&[2], QTPoly::one()), (&[1, 1], t(1))], 2), "{m:?}");
            let e = hl_specialization(&p(&[3]), 3, m).unwrap();
            assert_eq!(e, schur(&[(&[3], QTPoly::one())], 3), "{m:?}");
        }
    }

    #[test]
    fn dual_grothendieck_small_shapes() {
        let one = SkewShape::straight(vec![1]);
        let g = monomial_to_schur(&dual_groth(&one, 3, GrothMethod::Rpp, KConvention::Decompress).unwrap()).unwrap();
        assert_eq!(g, schur(&[(&[1], QTPoly::one())], 3));
        let col = SkewShape::straight(vec![1, 1]);
        let g = monomial_to_schur(&dual_groth(&col, 3, GrothMethod::Rpp, KConvention::Decompress).unwrap()).unwrap();
        let mut expected = schur(&[(&[1, 1], QTPoly::one()), (&[1], QTPoly::one())], 3);
        expected.degree = 2;
        assert_eq!(g, expected);
        let s = dual_groth(&col, 3, GrothMethod::Schur, KConvention::Decompress).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn output_formats() {
        let e = schur(&[(&[3, 1], QTPoly::one() + QTPoly::monomial(1, 1) + t(2)), (&[4], QTPoly::one())], 4);
        assert_eq!(e.to_lines(), "s[4] : 1\ns[3,1] : 1 + t^2 + q*t\n");
        assert!(e.to_csv().starts_with("label,q,t,coeff\ns[4],0,0,1\n"));
        let js = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<SymExpansion>(&js).unwrap(), e);
    }
}
