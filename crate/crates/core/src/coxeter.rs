//! Algorithms that only need a Coxeter system's descents and left multiplication.
//!
//! Both the full Weyl group and the integral Weyl group `W(lambda)` (with its
//! own simple reflections and length) implement [`CoxeterSystem`], so Bruhat
//! order, intervals and Kazhdan-Lusztig polynomials are written once.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub trait CoxeterSystem {
    type Element: Clone + Eq + Hash + Ord + Debug;

    /// Number of simple generators.
    fn generators(&self) -> usize;
    fn identity(&self) -> Self::Element;
    fn length(&self, x: &Self::Element) -> usize;
    /// `s x < x`.
    fn is_left_descent(&self, s: usize, x: &Self::Element) -> bool;
    fn left_mul(&self, s: usize, x: &Self::Element) -> Self::Element;
    /// A reduced word `s_{w[0]} ... s_{w[k-1]}`; its first letter is a left descent.
    fn reduced_word(&self, x: &Self::Element) -> Result<Vec<usize>>;
}

/// Bruhat order `x <= y`, by the lifting property along left descents of `y`.
pub fn bruhat_leq<S: CoxeterSystem>(sys: &S, x: &S::Element, y: &S::Element) -> Result<bool> {
    let mut x = x.clone();
    let mut y = y.clone();
    loop {
        let (lx, ly) = (sys.length(&x), sys.length(&y));
        if lx > ly {
            return Ok(false);
        }
        if lx == 0 {
            return Ok(true);
        }
        if lx == ly {
            return Ok(x == y);
        }
        let s = sys.reduced_word(&y)?[0];
        if sys.is_left_descent(s, &x) {
            x = sys.left_mul(s, &x);
        }
        y = sys.left_mul(s, &y);
    }
}

/// `{x : x <= y}`, sorted by (length, element), built from subwords of a reduced word.
pub fn lower_interval<S: CoxeterSystem>(sys: &S, y: &S::Element) -> Result<Vec<S::Element>> {
    let mut set: HashSet<S::Element> = HashSet::new();
    set.insert(sys.identity());
    for &s in sys.reduced_word(y)?.iter().rev() {
        let shifted: Vec<_> = set.iter().map(|x| sys.left_mul(s, x)).collect();
        set.extend(shifted);
    }
    Ok(sort_by_length(sys, set))
}

/// `{z : x <= z <= y}`, sorted by (length, element).
pub fn interval<S: CoxeterSystem>(
    sys: &S,
    x: &S::Element,
    y: &S::Element,
) -> Result<Vec<S::Element>> {
    let mut out = Vec::new();
    for z in lower_interval(sys, y)? {
        if bruhat_leq(sys, x, &z)? {
            out.push(z);
        }
    }
    Ok(out)
}

pub fn sort_by_length<S: CoxeterSystem>(
    sys: &S,
    elems: impl IntoIterator<Item = S::Element>,
) -> Vec<S::Element> {
    let ordered: BTreeSet<(usize, S::Element)> =
        elems.into_iter().map(|x| (sys.length(&x), x)).collect();
    ordered.into_iter().map(|(_, x)| x).collect()
}

/// Product `s_{w[0]} ... s_{w[k-1]}` by left multiplications.
pub fn from_generators<S: CoxeterSystem>(sys: &S, word: &[usize]) -> S::Element {
    word.iter()
        .rev()
        .fold(sys.identity(), |acc, &s| sys.left_mul(s, &acc))
}
