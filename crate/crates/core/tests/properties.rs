use std::cmp::Ordering;
use std::collections::BTreeSet;

use circloid::colored::{self, admits_shape, clockwise_ascents, prismatic_cmp, standard_coloring};
use circloid::crystals::{word_lower, word_raise};
use circloid::enumerate;
use circloid::fillings::inflate;
use circloid::maps;
use circloid::symfunc;
use circloid::words::{self, Word};
use circloid::{Cell, Circloid, ColoredLetter, Composition, Filling, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 1..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A word whose weight is the partition `mu`, in random order.
fn word_of_weight(max: usize) -> impl Strategy<Value = Word> {
    partition().prop_filter("size", move |p| p.degree() <= max).prop_flat_map(|mu| {
        let letters: Vec<usize> = mu.parts().iter().enumerate().flat_map(|(k, &m)| vec![k + 1; m]).collect();
        Just(letters).prop_shuffle().prop_map(|v| Word::new(v).unwrap())
    })
}

fn circloid() -> impl Strategy<Value = Circloid> {
    partition().prop_filter("size", |p| p.degree() <= 8).prop_flat_map(|mu| {
        let alpha = enumerate::colored_alphabet(&mu);
        let n = alpha.len();
        (Just(alpha).prop_shuffle(), prop::collection::btree_set(1..n.max(2), 0..n))
    })
    .prop_map(|(ccw, cuts)| {
        let c = Circloid::from_colored_word(&ccw).unwrap();
        let cw = c.clockwise();
        let n = cw.len();
        let allowed = clockwise_ascents(&cw);
        let cuts: BTreeSet<usize> = cuts.into_iter().filter(|p| *p < n).collect::<BTreeSet<_>>().union(&allowed).copied().collect();
        Circloid::from_clockwise(&cw, &Composition::from_prefix_set(n, &cuts)).unwrap()
    })
}

fn tabloid() -> impl Strategy<Value = Filling> {
    prop::collection::vec(prop::collection::vec(1usize..5, 0..4), 1..5).prop_map(|mut rows| {
        for r in &mut rows {
            r.sort_unstable();
        }
        Filling::from_rows(rows).unwrap()
    })
}

/// A tabloid of partition shape.
fn straight_tabloid() -> impl Strategy<Value = Filling> {
    partition()
        .prop_flat_map(|mu| {
            mu.parts().iter().map(|&m| prop::collection::vec(1usize..5, m)).collect::<Vec<_>>()
        })
        .prop_map(|mut rows| {
            for r in &mut rows {
                r.sort_unstable();
            }
            Filling::from_rows(rows).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn conjugate_is_an_involution(mu in partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu);
    }

    #[test]
    fn cocharge_is_bounded_by_n(w in word_of_weight(9)) {
        let mu = w.partition_weight().unwrap();
        let c = words::cocharge_word(&w).unwrap();
        prop_assert!(c <= mu.n_stat());
        prop_assert_eq!(words::charge_word(&w).unwrap() + c, mu.n_stat());
    }

    #[test]
    fn word_cocharge_matches_its_standard_coloring(w in word_of_weight(8)) {
        let c = standard_coloring(&w).unwrap();
        prop_assert_eq!(c.cocharge().unwrap(), words::cocharge_word(&w).unwrap());
    }

    #[test]
    fn iota_round_trip(c in circloid()) {
        prop_assert_eq!(c.iota().iota_inv(), c.clone());
        let f = maps::f_map(&c).unwrap();
        prop_assert_eq!(maps::f_inv_sectors(&f, c.num_sectors()).unwrap(), c);
    }

    #[test]
    fn sector_cuts_contain_the_ascents(c in circloid()) {
        let cw = c.clockwise();
        prop_assert!(clockwise_ascents(&cw).is_subset(&c.shape().prefix_set()));
        let mut ccw = cw.clone();
        ccw.reverse();
        prop_assert!(admits_shape(&ccw, &c.shape()));
    }

    #[test]
    fn colorings_are_manifestations(t in tabloid()) {
        let r = colored::reverse_coloring(&t).unwrap();
        prop_assert!(r.is_reverse_colored());
        prop_assert_eq!(r.strip().rows_vec(), t.rows_vec());
        if let Ok(f) = colored::faithful_coloring(&t) {
            prop_assert_eq!(f.betrayal().unwrap(), 0);
            prop_assert_eq!(f.strip().rows_vec(), t.rows_vec());
        }
    }

    #[test]
    fn inflation_keeps_rows_and_orders_columns(t in tabloid()) {
        let r = colored::reverse_coloring(&t).unwrap();
        let p = inflate(r.rows());
        prop_assert_eq!(p.collapse(), r.rows().to_vec());
        for c in p.cells() {
            if let Some(above) = p.get(Cell::new(c.row + 1, c.col)) {
                prop_assert!(p.get(c).unwrap() < above);
            }
        }
    }

    #[test]
    fn sort_and_unsort_keep_row_contents(t in straight_tabloid()) {
        let u = Filling::s_unsort(&t).unwrap();
        prop_assert_eq!(u.inv().unwrap(), 0);
        prop_assert_eq!(u.sorted_rows().rows_vec(), t.rows_vec());
        prop_assert_eq!(u.s_sort().unwrap(), t);
    }

    #[test]
    fn word_operators_are_partners(v in prop::collection::vec(1usize..5, 1..9), i in 1usize..4) {
        let w = Word::new(v).unwrap();
        if let Some(up) = word_raise(&w, i) {
            prop_assert_eq!(word_lower(&up, i), Some(w.clone()));
            prop_assert_eq!(up.descents(), w.descents());
        }
        if let Some(down) = word_lower(&w, i) {
            prop_assert_eq!(word_raise(&down, i), Some(w));
        }
    }
}

#[test]
fn prismatic_order_is_reading_order() {
    let letters: Vec<ColoredLetter> = (1..=4).flat_map(|l| (1..=4).map(move |c| ColoredLetter::new(l, c))).collect();
    for a in &letters {
        for b in &letters {
            let read_first = Cell::new(a.letter, a.color).reading_cmp(&Cell::new(b.letter, b.color)) == Ordering::Less;
            assert_eq!(prismatic_cmp(a, b) == Ordering::Greater, read_first, "{a} {b}");
        }
    }
}

#[test]
fn prefix_sets_are_injective() {
    for n in 1..=8 {
        let comps = enumerate::compositions(n);
        let sets: BTreeSet<BTreeSet<usize>> = comps.iter().map(Composition::prefix_set).collect();
        assert_eq!(sets.len(), comps.len());
        assert_eq!(sets.len(), 1 << (n - 1));
        for c in &comps {
            assert_eq!(&Composition::from_prefix_set(n, &c.prefix_set()), c);
        }
    }
}

#[test]
fn zero_charge_is_yamanouchi() {
    for n in 1..=6 {
        for w in enumerate::words(n, n) {
            if let Ok(c) = words::charge_word(&w) {
                assert_eq!(c == 0, words::is_yamanouchi(&w), "{w}");
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let shape = circloid::SkewShape::new(vec![3, 2], vec![1]).unwrap();
    let a: Vec<Filling> = enumerate::fillings(&shape, 3).collect();
    let b: Vec<Filling> = enumerate::fillings(&shape, 3).collect();
    assert_eq!(a, b);
    let mu = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(enumerate::circloids(&mu, 3).collect::<Vec<_>>(), enumerate::circloids(&mu, 3).collect::<Vec<_>>());
}

/// `s_lambda(1, .., 1)` counts semistandard tableaux with entries at most `n`.
#[test]
fn schur_principal_specialization_counts_tableaux() {
    use itertools::Itertools;
    for n in 1..=4 {
        for lam in (1..=5).flat_map(Partition::all).filter(|l| l.len() <= n) {
            let count = enumerate::ssyt_bounded(&lam.to_skew(), n).len();
            let s = symfunc::schur_in_vars(&lam, n);
            let total: usize = s
                .terms
                .iter()
                .map(|(label, c)| {
                    let mut exps = label.clone();
                    exps.resize(n, 0);
                    let perms = exps.into_iter().permutations(n).unique().count();
                    perms * usize::try_from(c.at_one()).unwrap()
                })
                .sum();
            assert_eq!(count, total, "{lam} in {n} variables");
        }
    }
}
