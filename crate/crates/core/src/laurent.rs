//! Laurent polynomials in `v = q^{1/2}` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Element of `Z[v, v^-1]`; `q = v^2`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `coeff * q^k`.
    pub fn q_power(k: i32, coeff: i64) -> Self {
        Self::monomial(2 * k, coeff)
    }

    /// `sum_k coeffs[k] q^k`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(2 * k as i32, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms `(v-exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
        }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Part of degree `<= k`.
    pub fn truncate_above(&self, k: i32) -> Self {
        Self {
            terms: self.terms.range(..=k).map(|(&e, &c)| (e, c)).collect(),
        }
    }

    /// Part of degree `>= k`.
    pub fn truncate_below(&self, k: i32) -> Self {
        Self {
            terms: self.terms.range(k..).map(|(&e, &c)| (e, c)).collect(),
        }
    }

    /// True if only even powers of `v` occur, i.e. the element lies in `Z[q, q^-1]`.
    pub fn is_in_q(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Coefficients of an honest polynomial in `q`.
    pub fn q_coeffs(&self) -> Option<Vec<i64>> {
        if !self.is_in_q() || self.min_degree().is_some_and(|e| e < 0) {
            return None;
        }
        let top = self.max_degree().map_or(0, |e| e / 2 + 1) as usize;
        let mut out = vec![0; top];
        for (&e, &c) in &self.terms {
            out[(e / 2) as usize] = c;
        }
        Some(out)
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn v_degree_at_most(&self, bound: i32) -> bool {
        self.max_degree().map_or(true, |d| d <= bound)
    }

    /// Parses the text produced by `Display`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.is_empty() {
            return None;
        }
        if text == "0" {
            return Some(Self::zero());
        }
        let bytes = text.as_bytes();
        let mut p = Self::zero();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = 1;
            match bytes[pos] {
                b'+' if !first => pos += 1,
                b'-' => {
                    sign = -1;
                    pos += 1
                }
                _ if first => {}
                _ => return None,
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<i64> = if pos > start {
                Some(text[start..pos].parse().ok()?)
            } else {
                None
            };
            let exp = if pos < bytes.len() && bytes[pos] == b'q' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    if pos < bytes.len() && bytes[pos] == b'(' {
                        let close = text[pos..].find(')')? + pos;
                        let inner = &text[pos + 1..close];
                        let (num, den) = inner.split_once('/')?;
                        if den != "2" {
                            return None;
                        }
                        pos = close + 1;
                        num.parse::<i32>().ok()?
                    } else {
                        let s = pos;
                        if pos < bytes.len() && bytes[pos] == b'-' {
                            pos += 1;
                        }
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        2 * text[s..pos].parse::<i32>().ok()?
                    }
                } else {
                    2
                }
            } else {
                coeff?;
                0
            };
            let c = coeff.unwrap_or(1);
            if c == 0 || p.coeff(exp) != 0 {
                return None;
            }
            p.add_term(exp, sign * c);
        }
        Some(p)
    }
}

/// Ascending powers of `q`, e.g. `1-q+2q^2`, `q^-1`, `q^(1/2)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, &c)) in self.terms.iter().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}")?;
            }
            match (e % 2 == 0, e / 2) {
                (true, 1) => f.write_str("q")?,
                (true, k) => write!(f, "q^{k}")?,
                (false, _) => write!(f, "q^({e}/2)")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i32..8, -5i64..5), 0..6).prop_map(|ts| {
            let mut p = LaurentPoly::zero();
            for (e, c) in ts {
                p.add_term(e, c);
            }
            p
        })
    }

    #[test]
    fn render() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_q_coeffs(&[1, -1, 2]).to_string(),
            "1-q+2q^2"
        );
        assert_eq!(LaurentPoly::from_q_coeffs(&[1, 0, 1]).to_string(), "1+q^2");
        assert_eq!(LaurentPoly::q_power(-1, 1).to_string(), "q^-1");
        assert_eq!(
            (&LaurentPoly::q_power(-1, 1) + &LaurentPoly::one()).to_string(),
            "q^-1+1"
        );
        assert_eq!(LaurentPoly::monomial(3, -2).to_string(), "-2q^(3/2)");
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "q^(-1/2)");
    }

    #[test]
    fn q_coeffs_and_eval() {
        let p = LaurentPoly::from_q_coeffs(&[1, 1]);
        assert_eq!(p.q_coeffs(), Some(vec![1, 1]));
        assert_eq!(p.eval_one(), 2);
        assert_eq!(LaurentPoly::monomial(1, 1).q_coeffs(), None);
        assert_eq!(LaurentPoly::q_power(-1, 1).q_coeffs(), None);
        assert_eq!(LaurentPoly::zero().q_coeffs(), Some(vec![]));
    }

    proptest! {
        #[test]
        fn text_round_trip(p in poly()) {
            prop_assert_eq!(LaurentPoly::parse(&p.to_string()), Some(p));
        }

        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "q^", "1+", "2x", "1++q", "q^(1/3)", "0q", "1+1"] {
            assert_eq!(LaurentPoly::parse(bad), None, "{bad}");
        }
    }
}
