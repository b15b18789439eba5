//! The monodromic modules `M^lambda` (basis `A_w`) and `N^lambda` (dual basis `B_w`).
//!
//! Only the class of `lambda` modulo the weight lattice matters here; it is
//! carried as a [`ResidueClass`]. Coefficients live in `Z[v, v^-1]` with `q = v^2`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::cartan::{fractional_part, CartanDatum, Rational, RootLatticeVector, Weight};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{WeylElement, WeylGroup};

/// `lambda` modulo the weight lattice: the residues `<h_i, lambda> mod 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass(Vec<Rational>);

impl ResidueClass {
    pub fn of(lambda: &Weight) -> Self {
        Self(lambda.coords().iter().map(fractional_part).collect())
    }

    pub fn integral(rank: usize) -> Self {
        Self(vec![Rational::zero(); rank])
    }

    pub fn residues(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral_at(&self, i: usize) -> bool {
        self.0[i].is_zero()
    }

    /// `r_j -> r_j - r_i a_ji`.
    pub fn reflect(&self, datum: &CartanDatum, i: usize) -> Self {
        let ri = self.0[i];
        Self(
            (0..self.0.len())
                .map(|j| {
                    fractional_part(&(self.0[j] - ri * Rational::from_integer(datum.entry(j, i))))
                })
                .collect(),
        )
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|r| fractional_part(&-r)).collect())
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A finite combination `sum a_w A_w^lambda`, or of `B_w^lambda` when used in `N^lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MElement {
    pub class: ResidueClass,
    terms: BTreeMap<WeylElement, LaurentPoly>,
}

/// Elements of `N^lambda` restricted to a finite window; same shape as [`MElement`].
pub type NElement = MElement;

impl MElement {
    pub fn zero(class: ResidueClass) -> Self {
        Self {
            class,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * A_w`.
    pub fn basis(class: ResidueClass, w: WeylElement, coeff: LaurentPoly) -> Self {
        let mut m = Self::zero(class);
        m.add_term(w, &coeff);
        m
    }

    pub fn add_term(&mut self, w: WeylElement, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MElement, scale: &LaurentPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * scale));
        }
    }

    pub fn coeff(&self, w: &WeylElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in (length, canon) order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply every coefficient by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            class: self.class.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.shift(k)))
                .collect(),
        }
    }

    /// `kappa`: same coefficients, class negated.
    pub fn kappa(&self) -> Self {
        Self {
            class: self.class.negate(),
            terms: self.terms.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    Star,
    Shriek,
}

type Key = (ResidueClass, RootLatticeVector);

/// Operators on `M^lambda` and `N^lambda` for one Cartan datum, with memoized
/// bar images and canonical bases.
pub struct Monodromic<'a> {
    weyl: WeylGroup<'a>,
    bar_memo: Mutex<HashMap<Key, Arc<MElement>>>,
    c_memo: Mutex<HashMap<Key, Arc<MElement>>>,
}

impl<'a> Monodromic<'a> {
    pub fn new(datum: &'a CartanDatum) -> Self {
        Self {
            weyl: WeylGroup::new(datum),
            bar_memo: Mutex::new(HashMap::new()),
            c_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn weyl(&self) -> &WeylGroup<'a> {
        &self.weyl
    }

    fn check_class(&self, class: &ResidueClass) -> Result<()> {
        let n = self.weyl.datum().rank();
        if class.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: class.0.len(),
            });
        }
        Ok(())
    }

    /// `theta_{i*}` or `theta_{i!}` on `M^lambda`, landing in `M^{s_i lambda}`.
    pub fn theta_m(&self, kind: ThetaKind, i: usize, m: &MElement) -> Result<MElement> {
        self.weyl.datum().check_index(i)?;
        let integral = m.class.is_integral_at(i);
        let mut out = MElement::zero(m.class.reflect(self.weyl.datum(), i));
        let one = LaurentPoly::one();
        let q = LaurentPoly::q_power(1, 1);
        let q_inv = LaurentPoly::q_power(-1, 1);
        for (w, a) in &m.terms {
            let ws = self.weyl.right_mul_simple(w, i);
            let up = !self.weyl.is_right_descent(w, i);
            let (to_ws, to_w) = match (kind, integral, up) {
                (ThetaKind::Star, false, true) => (q_inv.clone(), None),
                (ThetaKind::Star, false, false) => (one.clone(), None),
                (ThetaKind::Star, true, true) => (q_inv.clone(), Some(&q_inv - &one)),
                (ThetaKind::Star, true, false) => (one.clone(), None),
                (ThetaKind::Shriek, false, true) => (one.clone(), None),
                (ThetaKind::Shriek, false, false) => (q.clone(), None),
                (ThetaKind::Shriek, true, true) => (one.clone(), None),
                (ThetaKind::Shriek, true, false) => (q.clone(), Some(&q - &one)),
            };
            out.add_term(ws, &(a * &to_ws));
            if let Some(c) = to_w {
                out.add_term(w.clone(), &(a * &c));
            }
        }
        Ok(out)
    }

    /// The adjoint operators on `N^lambda`: `<theta n, m> = <n, theta m>`.
    pub fn theta_n(&self, kind: ThetaKind, i: usize, n: &NElement) -> Result<NElement> {
        self.weyl.datum().check_index(i)?;
        let integral = n.class.is_integral_at(i);
        let mut out = MElement::zero(n.class.reflect(self.weyl.datum(), i));
        let one = LaurentPoly::one();
        let q = LaurentPoly::q_power(1, 1);
        let q_inv = LaurentPoly::q_power(-1, 1);
        for (w, a) in &n.terms {
            let ws = self.weyl.right_mul_simple(w, i);
            let up = !self.weyl.is_right_descent(w, i);
            let (to_ws, to_w) = match (kind, integral, up) {
                (ThetaKind::Star, false, true) => (one.clone(), None),
                (ThetaKind::Star, false, false) => (q_inv.clone(), None),
                (ThetaKind::Star, true, true) => (one.clone(), Some(&q_inv - &one)),
                (ThetaKind::Star, true, false) => (q_inv.clone(), None),
                (ThetaKind::Shriek, false, true) => (q.clone(), None),
                (ThetaKind::Shriek, false, false) => (one.clone(), None),
                (ThetaKind::Shriek, true, true) => (q.clone(), None),
                (ThetaKind::Shriek, true, false) => (one.clone(), Some(&q - &one)),
            };
            out.add_term(ws, &(a * &to_ws));
            if let Some(c) = to_w {
                out.add_term(w.clone(), &(a * &c));
            }
        }
        Ok(out)
    }

    /// `bar(A_w^lambda)`, via `bar(A_w^lambda) = theta_{i*}(bar(A_{w s_i}^{s_i lambda}))`
    /// for the least right descent `i`.
    pub fn bar_basis(&self, class: &ResidueClass, w: &WeylElement) -> Result<Arc<MElement>> {
        self.check_class(class)?;
        let key = (class.clone(), w.canon().clone());
        if let Some(m) = self.bar_memo.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let value = if w.is_identity() {
            MElement::basis(class.clone(), w.clone(), LaurentPoly::one())
        } else {
            let n = self.weyl.datum().rank();
            let i = (0..n)
                .find(|&i| self.weyl.is_right_descent(w, i))
                .expect("nonidentity element has a right descent");
            self.bar_via(class, w, i)?
        };
        let value = Arc::new(value);
        self.bar_memo.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// `bar(A_w^lambda)` computed through the right descent `i`.
    pub fn bar_via(&self, class: &ResidueClass, w: &WeylElement, i: usize) -> Result<MElement> {
        let u = self.weyl.right_mul_simple(w, i);
        let inner_class = class.reflect(self.weyl.datum(), i);
        let inner = self.bar_basis(&inner_class, &u)?;
        self.theta_m(ThetaKind::Star, i, &inner)
    }

    /// The bar involution on `M^lambda`.
    pub fn bar_m(&self, m: &MElement) -> Result<MElement> {
        let mut out = MElement::zero(m.class.clone());
        for (w, a) in &m.terms {
            out.add_scaled(&*self.bar_basis(&m.class, w)?, &a.bar());
        }
        Ok(out)
    }

    /// The bar involution on a window-restricted element of `N^lambda`:
    /// `<bar n, A_z> = bar(<n, bar A_z>)`. Exact on the window because `n`
    /// vanishes outside it and the window is an upper ideal above its base.
    pub fn bar_n(&self, n: &NElement, window: &[WeylElement]) -> Result<NElement> {
        let mut out = MElement::zero(n.class.clone());
        for z in window {
            let bz = self.bar_basis(&n.class, z)?;
            let mut acc = LaurentPoly::zero();
            for (u, r) in bz.terms() {
                let nu = n.coeff(u);
                if !nu.is_zero() {
                    acc += &(r * &nu);
                }
            }
            out.add_term(z.clone(), &acc.bar());
        }
        Ok(out)
    }

    /// The canonical basis element `C_w^lambda`: `A_w` plus lower terms with
    /// coefficients of `v`-degree at most `l(w) - l(y) - 1`, fixed by
    /// `bar(C) = q^{-l(w)} C`.
    ///
    /// Solved top-down over the lower interval: writing `t` for `q^{l(w)}` times
    /// the already-known part of the `A_y` coefficient of `bar(C)`, the unknown
    /// `p_y` must satisfy `p_y - v^{2m} bar(p_y) = t` with `m = l(w) - l(y)`, whose
    /// two sides live in degrees `<= m-1` and `>= m+1`.
    pub fn canonical_c(&self, class: &ResidueClass, w: &WeylElement) -> Result<Arc<MElement>> {
        self.check_class(class)?;
        let key = (class.clone(), w.canon().clone());
        if let Some(m) = self.c_memo.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let lw = w.length() as i32;
        let lower = self.weyl.lower_interval(w);
        let mut known: Vec<(WeylElement, LaurentPoly)> = vec![(w.clone(), LaurentPoly::one())];
        let mut bars: HashMap<RootLatticeVector, Arc<MElement>> = HashMap::new();
        bars.insert(w.canon().clone(), self.bar_basis(class, w)?);
        for y in lower.iter().rev().skip(1) {
            let mut r = LaurentPoly::zero();
            for (z, pz) in &known {
                let coeff = bars[z.canon()].coeff(y);
                if !coeff.is_zero() {
                    r += &(&pz.bar() * &coeff);
                }
            }
            let m = lw - y.length() as i32;
            let t = r.shift(2 * lw);
            let p = t.truncate_above(m - 1);
            if t.coeff(m) != 0 {
                return Err(Error::SolveFailure {
                    at: y.word().to_vec(),
                    reason: "middle-degree coefficient is nonzero",
                });
            }
            if t.truncate_below(m + 1) != -&p.bar().shift(2 * m) {
                return Err(Error::SolveFailure {
                    at: y.word().to_vec(),
                    reason: "upper part is not the mirror of the lower part",
                });
            }
            if !p.is_in_q() {
                return Err(Error::SolveFailure {
                    at: y.word().to_vec(),
                    reason: "coefficient is not in Z[q, q^-1]",
                });
            }
            if !p.is_zero() {
                bars.insert(y.canon().clone(), self.bar_basis(class, y)?);
                known.push((y.clone(), p));
            }
        }
        let mut c = MElement::zero(class.clone());
        for (y, p) in known {
            c.add_term(y, &p);
        }
        let c = Arc::new(c);
        self.c_memo.lock().unwrap().insert(key, c.clone());
        Ok(c)
    }

    /// Checks that `window` contains `w`, lies above `w` and is closed under
    /// Bruhat intervals `[w, y]`.
    pub fn validate_window(&self, w: &WeylElement, window: &[WeylElement]) -> Result<()> {
        if !window.contains(w) {
            return Err(Error::WindowNotUpperIdeal(
                "window does not contain its base",
            ));
        }
        for y in window {
            if !self.weyl.bruhat_leq(w, y) {
                return Err(Error::WindowNotUpperIdeal(
                    "window element not above the base",
                ));
            }
            for z in self.weyl.lower_interval(y) {
                if self.weyl.bruhat_leq(w, &z) && !window.contains(&z) {
                    return Err(Error::WindowNotUpperIdeal("window is not interval-closed"));
                }
            }
        }
        Ok(())
    }

    /// `{y >= w : l(y) <= l(w) + extra}`, sorted by (length, canon).
    pub fn window_above(&self, w: &WeylElement, extra: usize) -> Vec<WeylElement> {
        self.weyl
            .elements_up_to(w.length() + extra)
            .into_iter()
            .filter(|y| self.weyl.bruhat_leq(w, y))
            .collect()
    }

    /// The window restriction of `D_w^lambda`, fixed by `<D_w, C_y> = delta_{w,y}`.
    ///
    /// Before returning, checks the degree bound `v-deg <= l(y) - l(w) - 1` on
    /// every coefficient and `bar(kappa(D_w^lambda)) = q^{l(w)} D_w^{-lambda}`,
    /// which together characterize `D_w`.
    pub fn dual_d(
        &self,
        class: &ResidueClass,
        w: &WeylElement,
        window: &[WeylElement],
    ) -> Result<NElement> {
        self.validate_window(w, window)?;
        let plus = self.solve_dual(class, w, window)?;
        let minus = self.solve_dual(&class.negate(), w, window)?;
        for (y, p) in plus.terms().chain(minus.terms()) {
            if y != w && !within_degree_bound(p, y.length() - w.length()) {
                return Err(Error::SolveFailure {
                    at: y.word().to_vec(),
                    reason: "dual coefficient violates the degree bound",
                });
            }
        }
        let lhs = self.bar_n(&plus.kappa(), window)?;
        if lhs != minus.shift(2 * w.length() as i32) {
            return Err(Error::SolveFailure {
                at: w.word().to_vec(),
                reason: "bar(kappa(D)) differs from q^l(w) D in the opposite class",
            });
        }
        Ok(plus)
    }

    fn solve_dual(
        &self,
        class: &ResidueClass,
        w: &WeylElement,
        window: &[WeylElement],
    ) -> Result<NElement> {
        let mut ordered = window.to_vec();
        ordered.sort();
        let mut d = MElement::zero(class.clone());
        d.add_term(w.clone(), &LaurentPoly::one());
        for y in ordered.iter().filter(|y| *y != w) {
            let cy = self.canonical_c(class, y)?;
            let mut acc = LaurentPoly::zero();
            for (z, pzy) in cy.terms() {
                if z == y {
                    continue;
                }
                let dz = d.coeff(z);
                if !dz.is_zero() {
                    acc -= &(&dz * pzy);
                }
            }
            d.add_term(y.clone(), &acc);
        }
        Ok(d)
    }

    /// `<n, m>` for `n` in `N^lambda` and `m` in `M^lambda`.
    pub fn pairing(n: &NElement, m: &MElement) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (w, a) in m.terms() {
            let b = n.coeff(w);
            if !b.is_zero() {
                acc += &(a * &b);
            }
        }
        acc
    }
}

/// `v`-degree bound `l(big) - l(small) - 1`, evenness included.
pub fn within_degree_bound(p: &LaurentPoly, gap: usize) -> bool {
    p.is_in_q() && p.v_degree_at_most(gap as i32 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> CartanDatum {
        CartanDatum::new(vec![vec![2]]).unwrap()
    }

    fn q(k: i32) -> LaurentPoly {
        LaurentPoly::q_power(k, 1)
    }

    #[test]
    fn theta_examples() {
        let d = a1();
        let mono = Monodromic::new(&d);
        let w = mono.weyl();
        let e = w.identity();
        let s = w.from_word(&[0]).unwrap();
        let half = ResidueClass::of(&Weight::new(vec![Rational::new(1, 2)]));
        let a_e = MElement::basis(half.clone(), e.clone(), LaurentPoly::one());
        let got = mono.theta_m(ThetaKind::Star, 0, &a_e).unwrap();
        assert_eq!(got, MElement::basis(half.clone(), s.clone(), q(-1)));

        let int = ResidueClass::integral(1);
        let a_s = MElement::basis(int.clone(), s.clone(), LaurentPoly::one());
        let got = mono.theta_m(ThetaKind::Shriek, 0, &a_s).unwrap();
        let mut expected = MElement::basis(int.clone(), e.clone(), q(1));
        expected.add_term(s.clone(), &(&q(1) - &LaurentPoly::one()));
        assert_eq!(got, expected);
    }

    #[test]
    fn bar_examples() {
        let d = a1();
        let mono = Monodromic::new(&d);
        let w = mono.weyl();
        let e = w.identity();
        let s = w.from_word(&[0]).unwrap();
        let int = ResidueClass::integral(1);
        let a_e = MElement::basis(int.clone(), e.clone(), LaurentPoly::one());
        assert_eq!(mono.bar_m(&a_e).unwrap(), a_e);
        let qa_e = MElement::basis(int.clone(), e.clone(), q(1));
        assert_eq!(
            mono.bar_m(&qa_e).unwrap(),
            MElement::basis(int.clone(), e.clone(), q(-1))
        );
        let mut expected = MElement::basis(int.clone(), s.clone(), q(-1));
        expected.add_term(e.clone(), &(&q(-1) - &LaurentPoly::one()));
        assert_eq!(*mono.bar_basis(&int, &s).unwrap(), expected);
    }

    #[test]
    fn canonical_examples() {
        let d = a1();
        let mono = Monodromic::new(&d);
        let w = mono.weyl();
        let e = w.identity();
        let s = w.from_word(&[0]).unwrap();
        let int = ResidueClass::integral(1);
        let half = ResidueClass::of(&Weight::new(vec![Rational::new(1, 2)]));

        let c_e = mono.canonical_c(&int, &e).unwrap();
        assert_eq!(
            *c_e,
            MElement::basis(int.clone(), e.clone(), LaurentPoly::one())
        );

        let c_s = mono.canonical_c(&int, &s).unwrap();
        let mut expected = MElement::basis(int.clone(), s.clone(), LaurentPoly::one());
        expected.add_term(e.clone(), &LaurentPoly::one());
        assert_eq!(*c_s, expected);

        let c_s = mono.canonical_c(&half, &s).unwrap();
        assert_eq!(
            *c_s,
            MElement::basis(half.clone(), s.clone(), LaurentPoly::one())
        );
    }

    #[test]
    fn dual_examples() {
        let d = a1();
        let mono = Monodromic::new(&d);
        let w = mono.weyl();
        let e = w.identity();
        let s = w.from_word(&[0]).unwrap();
        let window = vec![e.clone(), s.clone()];
        let int = ResidueClass::integral(1);
        let d_e = mono.dual_d(&int, &e, &window).unwrap();
        let mut expected = MElement::basis(int.clone(), e.clone(), LaurentPoly::one());
        expected.add_term(s.clone(), &LaurentPoly::monomial(0, -1));
        assert_eq!(d_e, expected);

        let d_s = mono.dual_d(&int, &s, &[s.clone()]).unwrap();
        assert_eq!(
            d_s,
            MElement::basis(int.clone(), s.clone(), LaurentPoly::one())
        );

        let half = ResidueClass::of(&Weight::new(vec![Rational::new(1, 2)]));
        let d_e = mono.dual_d(&half, &e, &window).unwrap();
        assert_eq!(d_e, MElement::basis(half, e.clone(), LaurentPoly::one()));

        assert!(matches!(
            mono.dual_d(&int, &e, &[s.clone()]),
            Err(Error::WindowNotUpperIdeal(_))
        ));
    }

    #[test]
    fn kappa_examples() {
        let d = a1();
        let mono = Monodromic::new(&d);
        let w = mono.weyl();
        let s = w.from_word(&[0]).unwrap();
        let third = ResidueClass::of(&Weight::new(vec![Rational::new(1, 3)]));
        let c = mono.canonical_c(&third, &s).unwrap();
        assert_eq!(c.kappa(), *mono.canonical_c(&third.negate(), &s).unwrap());
        assert_eq!(c.kappa().kappa(), *c);
        assert_eq!(third.negate().residues(), &[Rational::new(2, 3)]);
    }
}
