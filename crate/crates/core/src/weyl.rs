//! The Weyl group in canonical form.
//!
//! An element `w` is stored as `nu = rho - w rho`, a nonnegative integer
//! vector. Since `rho` is regular dominant (also in affine type, where
//! `(rho, delta) != 0`), its stabilizer is trivial and `nu` determines `w`.
//! Writing `c = w rho` in fundamental coordinates, `c_j = 1 - <h_j, nu>` and
//! `s_j` is a left descent of `w` exactly when `c_j < 0`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::cartan::{CartanDatum, Rational, RootLatticeVector, Weight};
use crate::coxeter::{self, CoxeterSystem};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct WeylElement {
    canon: RootLatticeVector,
    word: Vec<usize>,
}

impl WeylElement {
    /// `rho - w rho`.
    pub fn canon(&self) -> &RootLatticeVector {
        &self.canon
    }

    /// Reduced word `s_{w[0]} ... s_{w[k-1]}`, led by the least left descent at every step.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word_string(&self) -> String {
        format_word(&self.word)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canon.hash(state);
    }
}

/// By length, then lexicographically by canonical form.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.canon.cmp(&other.canon))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a space-separated word of 0-based generator indices.
pub fn parse_word(text: &str) -> Option<Vec<usize>> {
    text.split_whitespace().map(|t| t.parse().ok()).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct WeylGroup<'a> {
    datum: &'a CartanDatum,
}

impl<'a> WeylGroup<'a> {
    pub fn new(datum: &'a CartanDatum) -> Self {
        Self { datum }
    }

    pub fn datum(&self) -> &'a CartanDatum {
        self.datum
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            canon: RootLatticeVector::zero(self.datum.rank()),
            word: Vec::new(),
        }
    }

    /// `<h_j, w rho> = 1 - <h_j, nu>`.
    fn rho_coord(&self, canon: &RootLatticeVector, j: usize) -> i64 {
        1 - self.datum.coroot_on_root(j, canon)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        for &i in word {
            self.datum.check_index(i)?;
        }
        let mut nu = RootLatticeVector::zero(self.datum.rank());
        for &j in word.iter().rev() {
            let c = self.rho_coord(&nu, j);
            nu.add_to(j, c);
        }
        self.from_canon(nu)
    }

    /// Normalizes `nu` by stripping least left descents; fails unless `nu = rho - w rho`.
    pub fn from_canon(&self, canon: RootLatticeVector) -> Result<WeylElement> {
        let n = self.datum.rank();
        if canon.rank() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: canon.rank(),
            });
        }
        let mut nu = canon.clone();
        let mut word = Vec::new();
        loop {
            if !nu.is_nonnegative() {
                return Err(Error::NotAWeylElement(canon));
            }
            match (0..n).find_map(|j| {
                let c = self.rho_coord(&nu, j);
                (c < 0).then_some((j, c))
            }) {
                Some((j, c)) => {
                    nu.add_to(j, c);
                    word.push(j);
                }
                None => break,
            }
        }
        if !nu.is_zero() {
            return Err(Error::NotAWeylElement(canon));
        }
        Ok(WeylElement { canon, word })
    }

    pub fn is_left_descent(&self, i: usize, x: &WeylElement) -> bool {
        self.rho_coord(&x.canon, i) < 0
    }

    pub fn is_right_descent(&self, x: &WeylElement, i: usize) -> bool {
        self.act_on_root(x, &RootLatticeVector::simple(self.datum.rank(), i))
            .is_negative()
    }

    pub fn left_mul_simple(&self, i: usize, x: &WeylElement) -> WeylElement {
        let mut nu = x.canon.clone();
        nu.add_to(i, self.rho_coord(&x.canon, i));
        self.normalized(nu)
    }

    /// `nu(w s_i) = nu(w) + w alpha_i`.
    pub fn right_mul_simple(&self, x: &WeylElement, i: usize) -> WeylElement {
        let wa = self.act_on_root(x, &RootLatticeVector::simple(self.datum.rank(), i));
        self.normalized(&x.canon + &wa)
    }

    fn normalized(&self, nu: RootLatticeVector) -> WeylElement {
        self.from_canon(nu)
            .expect("canonical form of a group element normalizes")
    }

    pub fn multiply(&self, x: &WeylElement, y: &WeylElement) -> WeylElement {
        y.word
            .iter()
            .fold(x.clone(), |acc, &i| self.right_mul_simple(&acc, i))
    }

    pub fn inverse(&self, x: &WeylElement) -> WeylElement {
        x.word
            .iter()
            .fold(self.identity(), |acc, &i| self.left_mul_simple(i, &acc))
    }

    /// `w gamma`, letters applied right to left.
    pub fn act_on_root(&self, x: &WeylElement, gamma: &RootLatticeVector) -> RootLatticeVector {
        x.word
            .iter()
            .rev()
            .fold(gamma.clone(), |g, &i| self.datum.reflect_root(i, &g))
    }

    /// Linear action on a weight.
    pub fn act_on_weight(&self, x: &WeylElement, lambda: &Weight) -> Weight {
        x.word
            .iter()
            .rev()
            .fold(lambda.clone(), |l, &i| self.datum.reflect_weight(i, &l))
    }

    /// `N(x) = {beta > 0 : x beta < 0}`, one root per letter of the reduced word.
    ///
    /// For `x = s_{i_1} ... s_{i_r}` the roots are `s_{i_r} ... s_{i_{j+1}} alpha_{i_j}`,
    /// and they sum to `rho - x^{-1} rho`.
    pub fn inversion_set(&self, x: &WeylElement) -> Vec<RootLatticeVector> {
        let n = self.datum.rank();
        let mut out = Vec::with_capacity(x.length());
        for j in 0..x.word.len() {
            let mut beta = RootLatticeVector::simple(n, x.word[j]);
            for &i in &x.word[j + 1..] {
                beta = self.datum.reflect_root(i, &beta);
            }
            out.push(beta);
        }
        out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        out
    }

    /// The reflection `s_beta`, with `nu(s_beta) = (2 (rho, beta) / (beta, beta)) beta`.
    pub fn reflection(&self, beta: &RootLatticeVector) -> Result<WeylElement> {
        let norm = self.datum.norm(beta);
        if norm <= 0 {
            return Err(Error::ZeroNorm(beta.clone()));
        }
        let k = Rational::new(2 * self.datum.rho_pairing(beta), norm);
        if !k.is_integer() {
            return Err(Error::NotAWeylElement(beta.clone()));
        }
        self.from_canon(beta.scaled(k.to_integer()))
    }

    /// `(x rho, beta)`: negative exactly when `x^{-1} beta < 0`.
    pub fn rho_image_pairing(&self, x: &WeylElement, beta: &RootLatticeVector) -> i64 {
        self.datum.rho_pairing(beta) - self.datum.form(&x.canon, beta)
    }

    /// `s_beta x` for a real root `beta`: `nu + (beta^vee, x rho) beta`.
    pub fn left_mul_reflection(&self, beta: &RootLatticeVector, x: &WeylElement) -> WeylElement {
        let norm = self.datum.norm(beta);
        let k = 2 * self.rho_image_pairing(x, beta) / norm;
        let mut nu = x.canon.clone();
        nu.add_scaled(beta, k);
        self.normalized(nu)
    }

    pub fn bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> bool {
        coxeter::bruhat_leq(self, x, y).expect("Weyl group words are infallible")
    }

    pub fn lower_interval(&self, y: &WeylElement) -> Vec<WeylElement> {
        coxeter::lower_interval(self, y).expect("Weyl group words are infallible")
    }

    /// Every element of length at most `max_len`, sorted by (length, canon).
    pub fn elements_up_to(&self, max_len: usize) -> Vec<WeylElement> {
        let mut all: BTreeSet<WeylElement> = BTreeSet::new();
        let mut layer = vec![self.identity()];
        all.insert(self.identity());
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for i in 0..self.datum.rank() {
                    if !self.is_left_descent(i, x) {
                        let y = self.left_mul_simple(i, x);
                        if all.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            layer = next;
        }
        all.into_iter().collect()
    }
}

impl CoxeterSystem for WeylGroup<'_> {
    type Element = WeylElement;

    fn generators(&self) -> usize {
        self.datum.rank()
    }

    fn identity(&self) -> WeylElement {
        WeylGroup::identity(self)
    }

    fn length(&self, x: &WeylElement) -> usize {
        x.length()
    }

    fn is_left_descent(&self, s: usize, x: &WeylElement) -> bool {
        WeylGroup::is_left_descent(self, s, x)
    }

    fn left_mul(&self, s: usize, x: &WeylElement) -> WeylElement {
        self.left_mul_simple(s, x)
    }

    fn reduced_word(&self, x: &WeylElement) -> Result<Vec<usize>> {
        Ok(x.word.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rv(v: &[i64]) -> RootLatticeVector {
        RootLatticeVector::new(v.to_vec())
    }

    fn a2() -> CartanDatum {
        CartanDatum::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()
    }

    fn a3() -> CartanDatum {
        CartanDatum::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap()
    }

    #[test]
    fn from_word_examples() {
        let d = a2();
        let w = WeylGroup::new(&d);
        let x = w.from_word(&[0, 1, 0]).unwrap();
        let y = w.from_word(&[1, 0, 1]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.length(), 3);
        assert_eq!(x.canon(), &rv(&[2, 2]));
        assert!(w.from_word(&[]).unwrap().is_identity());
        assert!(w.from_word(&[0, 0]).unwrap().is_identity());
        assert!(matches!(
            w.from_word(&[2]),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        ));
        assert!(matches!(
            w.from_canon(rv(&[1, 1])),
            Err(Error::NotAWeylElement(_))
        ));
    }

    #[test]
    fn multiply_examples() {
        let d = a2();
        let w = WeylGroup::new(&d);
        let s1 = w.from_word(&[0]).unwrap();
        let s2 = w.from_word(&[1]).unwrap();
        let x = w.multiply(&s1, &s2);
        assert_eq!(x.length(), 2);
        assert_eq!(x.canon(), &rv(&[2, 1]));
        assert!(w.multiply(&x, &w.inverse(&x)).is_identity());
        assert_eq!(w.multiply(&w.identity(), &x), x);
    }

    #[test]
    fn inversion_set_examples() {
        let d = a2();
        let w = WeylGroup::new(&d);
        assert!(w.inversion_set(&w.identity()).is_empty());
        let x = w.from_word(&[0, 1]).unwrap();
        assert_eq!(w.inversion_set(&x), vec![rv(&[0, 1]), rv(&[1, 1])]);

        let d3 = a3();
        let w3 = WeylGroup::new(&d3);
        let s_theta = w3.from_word(&[0, 1, 2, 1, 0]).unwrap();
        assert_eq!(
            w3.inversion_set(&s_theta),
            vec![
                rv(&[0, 0, 1]),
                rv(&[1, 0, 0]),
                rv(&[0, 1, 1]),
                rv(&[1, 1, 0]),
                rv(&[1, 1, 1])
            ]
        );
        assert_eq!(w3.reflection(&rv(&[1, 1, 1])).unwrap(), s_theta);
    }

    #[test]
    fn bruhat_examples() {
        let d3 = a3();
        let w = WeylGroup::new(&d3);
        let s2 = w.from_word(&[1]).unwrap();
        let s_theta = w.reflection(&rv(&[1, 1, 1])).unwrap();
        assert!(w.bruhat_leq(&w.identity(), &s_theta));
        assert!(w.bruhat_leq(&s2, &s_theta));
        assert!(!w.bruhat_leq(&s_theta, &s2));

        let d = a2();
        let w = WeylGroup::new(&d);
        let s1 = w.from_word(&[0]).unwrap();
        let s2 = w.from_word(&[1]).unwrap();
        assert!(!w.bruhat_leq(&s1, &s2));
    }

    #[test]
    fn lower_interval_examples() {
        let d = a2();
        let w = WeylGroup::new(&d);
        assert_eq!(w.lower_interval(&w.identity()).len(), 1);
        let w0 = w.from_word(&[0, 1, 0]).unwrap();
        assert_eq!(w.lower_interval(&w0).len(), 6);
        let a1 = CartanDatum::new(vec![vec![2]]).unwrap();
        let wa = WeylGroup::new(&a1);
        assert_eq!(wa.lower_interval(&wa.from_word(&[0]).unwrap()).len(), 2);
        let d3 = a3();
        let w3 = WeylGroup::new(&d3);
        assert_eq!(w3.elements_up_to(10).len(), 24);
        let w0 = w3.from_word(&[0, 1, 0, 2, 1, 0]).unwrap();
        assert_eq!(w3.lower_interval(&w0).len(), 24);
    }

    /// Subword characterization: x <= y iff some subword of a reduced word of y gives x.
    fn subword_leq(w: &WeylGroup, x: &WeylElement, y: &WeylElement) -> bool {
        let word = y.word();
        (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<usize> = (0..word.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| word[b])
                .collect();
            w.from_word(&sub).unwrap() == *x
        })
    }

    #[test]
    fn bruhat_matches_subwords_exhaustively() {
        let data = [
            a2(),
            a3(),
            CartanDatum::new(vec![vec![2, -2], vec![-1, 2]]).unwrap(),
            CartanDatum::new(vec![vec![2, -1], vec![-3, 2]]).unwrap(),
            CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap(),
            CartanDatum::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap(),
        ];
        for d in &data {
            let w = WeylGroup::new(d);
            let elems = w.elements_up_to(5);
            for x in &elems {
                for y in &elems {
                    assert_eq!(w.bruhat_leq(x, y), subword_leq(&w, x, y), "{x:?} {y:?}");
                }
            }
        }
    }

    fn datum_and_words() -> impl Strategy<Value = (CartanDatum, Vec<usize>, Vec<usize>)> {
        let data = vec![
            a2(),
            a3(),
            CartanDatum::new(vec![vec![2, -1], vec![-3, 2]]).unwrap(),
            CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap(),
            CartanDatum::new(vec![vec![2, -3], vec![-3, 2]]).unwrap(),
        ];
        (
            proptest::sample::select(data),
            proptest::collection::vec(0usize..3, 0..7),
            proptest::collection::vec(0usize..3, 0..7),
        )
            .prop_map(|(d, a, b)| {
                let n = d.rank();
                let a = a.into_iter().map(|i| i % n).collect();
                let b = b.into_iter().map(|i| i % n).collect();
                (d, a, b)
            })
    }

    proptest! {
        #[test]
        fn canonical_form_invariants((d, a, b) in datum_and_words()) {
            let w = WeylGroup::new(&d);
            let x = w.from_word(&a).unwrap();
            let y = w.from_word(&b).unwrap();
            prop_assert_eq!(&w.from_word(x.word()).unwrap(), &x);
            prop_assert_eq!(w.from_word(x.word()).unwrap().word().to_vec(), x.word().to_vec());
            prop_assert_eq!(w.inverse(&x).length(), x.length());

            let xy = w.multiply(&x, &y);
            let joined: Vec<usize> = x.word().iter().chain(y.word()).copied().collect();
            prop_assert_eq!(&xy, &w.from_word(&joined).unwrap());
            prop_assert!(xy.length() <= x.length() + y.length());

            let inv = w.inversion_set(&x);
            prop_assert_eq!(inv.len(), x.length());
            prop_assert!(inv.iter().all(|b| b.is_positive()));
            prop_assert!(inv.iter().all(|b| w.act_on_root(&x, b).is_negative()));
            let total = inv.iter().fold(RootLatticeVector::zero(d.rank()), |acc, b| &acc + b);
            prop_assert_eq!(&total, &w.inverse(&x).canon().clone());

            // canon agrees with the shifted action at lambda = 0
            let offset = d.shifted_action(x.word(), &Weight::zero(d.rank())).unwrap().offset;
            prop_assert_eq!(&offset, x.canon());
        }

        #[test]
        fn reflections_are_involutions((d, a, _b) in datum_and_words()) {
            let w = WeylGroup::new(&d);
            let x = w.from_word(&a).unwrap();
            for beta in w.inversion_set(&x) {
                let s = w.reflection(&beta).unwrap();
                prop_assert!(w.multiply(&s, &s).is_identity());
                prop_assert_eq!(w.left_mul_reflection(&beta, &x), w.multiply(&s, &x));
            }
        }
    }
}
