//! Exact polynomials in `q` and `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Sparse map `(q exponent, t exponent) -> coefficient`; zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Monomial>", into = "Vec<Monomial>")]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn one() -> Self {
        QTPoly::monomial(0, 0)
    }

    /// `q^a t^b`.
    pub fn monomial(a: u32, b: u32) -> Self {
        let mut p = QTPoly::zero();
        p.add_term(a, b, BigInt::one());
        p
    }

    pub fn t_pow(b: u32) -> Self {
        QTPoly::monomial(0, b)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = QTPoly::zero();
        p.add_term(0, 0, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn scale(&self, c: &BigInt) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// Terms free of `q`.
    pub fn at_q0(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().filter(|(&(a, _), _)| a == 0).map(|(&k, v)| (k, v.clone())).collect() }
    }

    /// Substitutes `q = 1`.
    pub fn at_q1(&self) -> QTPoly {
        let mut p = QTPoly::zero();
        for (&(_, b), c) in &self.terms {
            p.add_term(0, b, c.clone());
        }
        p
    }

    /// Substitutes `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect() }
    }

    /// `t^d p(q, 1/t)`; requires every `t` exponent to be at most `d`.
    pub fn reverse_t(&self, d: u32) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| {
                    assert!(b <= d, "t exponent {b} exceeds {d}");
                    ((a, d - b), v.clone())
                })
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }
}

/// Serialized form of one term; the coefficient is a decimal string so that
/// it survives JSON readers limited to 64-bit numbers.
#[derive(Serialize, Deserialize)]
struct Monomial {
    q: u32,
    t: u32,
    coeff: String,
}

impl TryFrom<Vec<Monomial>> for QTPoly {
    type Error = String;

    fn try_from(v: Vec<Monomial>) -> Result<Self, String> {
        let mut p = QTPoly::zero();
        for m in v {
            let c: BigInt = m.coeff.parse().map_err(|e| format!("bad coefficient {:?}: {e}", m.coeff))?;
            p.add_term(m.q, m.t, c);
        }
        Ok(p)
    }
}

impl From<QTPoly> for Vec<Monomial> {
    fn from(p: QTPoly) -> Self {
        p.terms.into_iter().map(|((q, t), c)| Monomial { q, t, coeff: c.to_string() }).collect()
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl Add for QTPoly {
    type Output = QTPoly;
    fn add(mut self, rhs: QTPoly) -> QTPoly {
        self += &rhs;
        self
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl Sub for QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: QTPoly) -> QTPoly {
        self + (-rhs)
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut p = QTPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                p.add_term(a + x, b + y, c * d);
            }
        }
        p
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> QTPoly {
        iter.fold(QTPoly::zero(), |acc, p| acc + p)
    }
}

fn var_power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

/// Terms sorted by `(q exponent, t exponent)`, e.g. `1 + t^2 + q*t`.
impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = [var_power("q", a), var_power("t", b)].into_iter().flatten().collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{mag}*{}", vars.join("*")),
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order() {
        let p = QTPoly::monomial(1, 1) + QTPoly::t_pow(2) + QTPoly::one();
        assert_eq!(p.to_string(), "1 + t^2 + q*t");
        let p = QTPoly::constant(3) - QTPoly::monomial(2, 0).scale(&BigInt::from(2));
        assert_eq!(p.to_string(), "3 - 2*q^2");
        assert_eq!(QTPoly::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = QTPoly::t_pow(1) - QTPoly::t_pow(1);
        assert!(p.is_zero());
        assert_eq!(p, QTPoly::zero());
    }

    #[test]
    fn specializations() {
        let p = QTPoly::monomial(1, 0) + QTPoly::t_pow(1) + QTPoly::monomial(1, 1);
        assert_eq!(p.at_q0(), QTPoly::t_pow(1));
        assert_eq!(p.at_q1(), QTPoly::one() + QTPoly::t_pow(1).scale(&BigInt::from(2)));
        assert_eq!(p.at_one(), BigInt::from(3));
        assert_eq!(p.swap_qt().coeff(0, 1), BigInt::one());
        assert_eq!(QTPoly::t_pow(1).reverse_t(3), QTPoly::t_pow(2));
    }

    #[test]
    fn product_and_json() {
        let a = QTPoly::one() + QTPoly::t_pow(1);
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
        let js = serde_json::to_string(&sq).unwrap();
        assert_eq!(js, r#"[{"q":0,"t":0,"coeff":"1"},{"q":0,"t":1,"coeff":"2"},{"q":0,"t":2,"coeff":"1"}]"#);
        assert_eq!(serde_json::from_str::<QTPoly>(&js).unwrap(), sq);
        let big = QTPoly::constant(BigInt::from(u64::MAX) * 7);
        assert_eq!(serde_json::from_str::<QTPoly>(&serde_json::to_string(&big).unwrap()).unwrap(), big);
        assert!(serde_json::from_str::<QTPoly>(r#"[{"q":0,"t":0,"coeff":"x"}]"#).is_err());
    }
}
