//! One PASS/FAIL line per acceptance criterion. All tolerances are exact:
//! coefficients are integers and every comparison is equality.

use circloid::verify::{self, worked, SuiteReport, COMPANION_CLAUSES};
use circloid::words::{self, Word};

/// Criteria that fail as stated; each is recorded with its counterexample.
const KNOWN_UNATTAINABLE: [usize; 1] = [8];

struct Criterion {
    id: usize,
    title: &'static str,
    reports: Vec<SuiteReport>,
}

impl Criterion {
    fn new(id: usize, title: &'static str, suites: &[(&str, usize)]) -> Self {
        let reports = suites.iter().map(|&(s, n)| verify::run_suite(s, n).expect("within the cap")).collect();
        Criterion { id, title, reports }
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    fn line(&self) -> String {
        let checks: usize = self.reports.iter().map(|r| r.checks).sum();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{status} criterion {:>2}: {} [tolerance: exact; {checks} checks]", self.id, self.title);
        for r in self.reports.iter().filter(|r| !r.passed) {
            s.push_str(&format!("\n      {r}"));
        }
        s
    }
}

/// Per-letter cocharge labels of a circle listed clockwise from the star.
fn clockwise_labels(cw: &[usize]) -> Vec<usize> {
    let mut ccw = cw.to_vec();
    ccw.reverse();
    let w = Word::new(ccw).unwrap();
    let mut colors = words::standard_subwords(&w).unwrap();
    colors.reverse();
    let mut labels = vec![0; cw.len()];
    for c in 1..=colors.iter().copied().max().unwrap_or(0) {
        let mut prev: Option<(usize, usize)> = None;
        for x in 1.. {
            let Some(p) = (0..cw.len()).find(|&p| cw[p] == x && colors[p] == c) else { break };
            let label = match prev {
                None => 0,
                Some((q, l)) if p > q => l + 1,
                Some((_, l)) => l,
            };
            labels[p] = label;
            prev = Some((p, label));
        }
    }
    labels
}

#[test]
fn acceptance() {
    let criteria = vec![
        Criterion::new(1, "circloid sum equals the inv/maj filling sum, mu |- n <= 6", &[("rjformula", 6)]),
        Criterion::new(2, "fundamental quasisymmetric sum equals the filling sum, n <= 6", &[("qsym", 6)]),
        Criterion::new(3, "four q=0 methods coincide, n <= 6", &[("hsuper", 6), ("h2zigs", 6)]),
        Criterion::new(4, "four q=1 methods coincide, n <= 5", &[("macq1", 5)]),
        Criterion::new(5, "worked values reproduced", &[("examples", 1)]),
        Criterion::new(6, "inv/maj transport to betrayal/cocharge, size and entries <= 6", &[("transport", 6)]),
        Criterion::new(7, "f, iota, companion and s round trips; multinomial counts, size <= 6", &[("bijections", 6)]),
        Criterion::new(8, "companion characterizations, size <= 6", &[("companions", 6)]),
        Criterion::new(9, "inversionless super-Yamanouchi = inversionless jamless Yamanouchi, size <= 6", &[("jamless", 6)]),
        Criterion::new(10, "crystal axioms and theorems, n <= 5", &[("crystals", 5), ("daggerops", 5)]),
        Criterion::new(11, "q=t=1 count, Schur positivity, q/t symmetry, n <= 6", &[("counting", 6)]),
        Criterion::new(12, "dual Grothendieck methods agree, |nu| <= 6, size <= 5, 4 variables", &[("ktheory", 6)]),
    ];

    let mut unexpected = Vec::new();
    for c in &criteria {
        println!("{}", c.line());
        if !c.passed() && !KNOWN_UNATTAINABLE.contains(&c.id) {
            unexpected.push(c.id);
        }
        if c.id == 12 {
            for note in &c.reports[0].notes {
                println!("      convention analysis: {note}");
            }
        }
    }

    let cw = worked::FOURTEEN_CLOCKWISE;
    let labels = clockwise_labels(&cw);
    let drawn = labels.iter().sum::<usize>();
    let mut typed: Vec<usize> = cw.to_vec();
    typed.reverse();
    let typed_word: Word = "64534223511123".parse().unwrap();
    println!(
        "INFO 14-letter circle as drawn: labels {labels:?}, cocharge {drawn}, charge {}; \
         the same letters read as the typed word give cocharge {}, charge {}",
        words::charge_word(&Word::new(typed).unwrap()).unwrap(),
        words::cocharge_word(&typed_word).unwrap(),
        words::charge_word(&typed_word).unwrap(),
    );
    println!("INFO the stated 'charge 15 / cocharge 13' reading is not reproduced: it swaps the two statistics of the drawn circle");
    assert_eq!(labels, vec![3, 2, 3, 0, 1, 0, 0, 1, 2, 0, 0, 0, 1, 2]);
    assert_eq!(drawn, 15);

    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");

    // Criterion 8 fails only through the converse of the column-strict clause.
    let c8 = &criteria[7].reports[0];
    let failing: Vec<&String> = c8.notes.iter().filter(|n| n.ends_with("FAILS")).collect();
    assert_eq!(failing.len(), 1, "{c8}");
    assert!(failing[0].starts_with(COMPANION_CLAUSES[3]), "{c8}");
}
