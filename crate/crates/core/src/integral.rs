//! The integral root system `Delta(lambda)` and the integral Weyl group `W(lambda)`.
//!
//! `Delta(lambda)` collects the real roots `beta` with `(beta^vee, lambda)` an
//! integer. Its simple system `Pi(lambda)` may be infinite, so it is only
//! listed up to a height window `H`; a root of height at most `H` is simple
//! exactly when it is not a sum of two or more roots of `Delta^+(lambda)`, and
//! every such decomposition uses smaller heights, so the listing is exact.
//!
//! Lengths `l_lambda` and membership are decided without the window: `l_lambda(w)`
//! counts the lambda-integral roots in the inversion set, and a descent in
//! `Pi(lambda)` can always be found among roots no higher than the integral
//! inversions of `w^{-1}`.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use crate::cartan::{CartanDatum, Rational, RootLatticeVector, Weight};
use crate::coxeter::{self, CoxeterSystem};
use crate::error::{Error, Result};
use crate::roots::positive_real_roots;
use crate::weyl::{WeylElement, WeylGroup};

/// Default cap on the number of elements produced by interval enumeration.
pub const ENUMERATION_LIMIT: usize = 200_000;

#[derive(Debug)]
pub struct IntegralSystem<'a> {
    weyl: WeylGroup<'a>,
    lambda: Weight,
    bound: u32,
    delta_plus: Vec<RootLatticeVector>,
    simple: Vec<RootLatticeVector>,
    words: Mutex<HashMap<RootLatticeVector, Vec<usize>>>,
}

/// `w = w_min x` with `x` in `W(lambda)` and `w_min` sending `Delta^+(lambda)` into `Delta^+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub w_min: WeylElement,
    pub x: WeylElement,
    /// A lambda-reduced word for `x`, as indices into [`IntegralSystem::simple_roots`].
    pub x_word: Vec<usize>,
}

impl<'a> IntegralSystem<'a> {
    pub fn new(datum: &'a CartanDatum, lambda: Weight, bound: u32) -> Result<Self> {
        datum.check_weight(&lambda)?;
        let mut sys = Self {
            weyl: WeylGroup::new(datum),
            lambda,
            bound,
            delta_plus: Vec::new(),
            simple: Vec::new(),
            words: Mutex::new(HashMap::new()),
        };
        sys.delta_plus = positive_real_roots(datum, bound)
            .into_iter()
            .filter(|b| sys.is_integral_root(b))
            .collect();
        sys.simple = indecomposables(&sys.delta_plus);
        Ok(sys)
    }

    pub fn datum(&self) -> &'a CartanDatum {
        self.weyl.datum()
    }

    pub fn weyl(&self) -> &WeylGroup<'a> {
        &self.weyl
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `Delta^+(lambda)` up to height `H`, in (height, lex) order.
    pub fn integral_roots(&self) -> &[RootLatticeVector] {
        &self.delta_plus
    }

    /// `Pi(lambda)` up to height `H`, in (height, lex) order.
    pub fn simple_roots(&self) -> &[RootLatticeVector] {
        &self.simple
    }

    /// Whether the real root `beta` has `(beta^vee, lambda)` integral.
    pub fn is_integral_root(&self, beta: &RootLatticeVector) -> bool {
        self.datum()
            .coroot_pair(&self.lambda, beta)
            .is_ok_and(|p| p.is_integer())
    }

    /// `#{beta in N(w) : (beta^vee, lambda) in Z}`; equals `l_lambda(w)` on `W(lambda)`.
    pub fn lambda_length(&self, w: &WeylElement) -> usize {
        self.weyl
            .inversion_set(w)
            .iter()
            .filter(|b| self.is_integral_root(b))
            .count()
    }

    fn integral_inversions(&self, w: &WeylElement) -> Vec<RootLatticeVector> {
        let mut roots: Vec<_> = self
            .weyl
            .inversion_set(w)
            .into_iter()
            .filter(|b| self.is_integral_root(b))
            .collect();
        roots.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        roots
    }

    fn check_window(&self, roots: &[RootLatticeVector]) -> Result<()> {
        match roots.iter().map(|r| r.height()).max() {
            Some(h) if h > self.bound as i64 => Err(Error::HeightBoundExceeded {
                needed: h,
                bound: self.bound,
            }),
            _ => Ok(()),
        }
    }

    /// A lambda-reduced word `s_{a_0} ... s_{a_{k-1}}` (indices into the simple roots),
    /// obtained by repeatedly removing the first lambda-simple left descent.
    pub fn lambda_reduced_word(&self, w: &WeylElement) -> Result<Vec<usize>> {
        if let Some(word) = self.words.lock().unwrap().get(w.canon()) {
            return Ok(word.clone());
        }
        let mut cur = w.clone();
        let mut word = Vec::new();
        loop {
            let integral = self.integral_inversions(&self.weyl.inverse(&cur));
            if integral.is_empty() {
                if !cur.is_identity() {
                    return Err(Error::NotInIntegralWeylGroup {
                        residue: cur.word().to_vec(),
                    });
                }
                break;
            }
            self.check_window(&integral)?;
            let k = (0..self.simple.len())
                .find(|&k| self.weyl.rho_image_pairing(&cur, &self.simple[k]) < 0)
                .ok_or_else(|| {
                    Error::InternalInconsistency(format!(
                        "no lambda-simple descent for [{}]",
                        cur.word_string()
                    ))
                })?;
            cur = self.weyl.left_mul_reflection(&self.simple[k], &cur);
            word.push(k);
        }
        self.words
            .lock()
            .unwrap()
            .insert(w.canon().clone(), word.clone());
        Ok(word)
    }

    /// The lambda-reduced word as roots.
    pub fn lambda_reduced_roots(&self, w: &WeylElement) -> Result<Vec<RootLatticeVector>> {
        Ok(self
            .lambda_reduced_word(w)?
            .into_iter()
            .map(|k| self.simple[k].clone())
            .collect())
    }

    /// `Ok(false)` when `w` is provably outside `W(lambda)`.
    pub fn contains(&self, w: &WeylElement) -> Result<bool> {
        match self.lambda_reduced_word(w) {
            Ok(_) => Ok(true),
            Err(Error::NotInIntegralWeylGroup { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `s_{beta_0} ... s_{beta_{k-1}}` for indices into the simple roots.
    pub fn from_simple_word(&self, word: &[usize]) -> Result<WeylElement> {
        for &k in word {
            if k >= self.simple.len() {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    rank: self.simple.len(),
                });
            }
        }
        Ok(coxeter::from_generators(self, word))
    }

    /// Strips lambda-simple right descents until `w_min Delta^+(lambda) > 0`.
    pub fn min_coset_decomposition(&self, w: &WeylElement) -> Result<CosetDecomposition> {
        let mut cur = w.clone();
        let mut stripped = Vec::new();
        loop {
            let integral = self.integral_inversions(&cur);
            if integral.is_empty() {
                break;
            }
            self.check_window(&integral)?;
            let k = (0..self.simple.len())
                .find(|&k| self.weyl.act_on_root(&cur, &self.simple[k]).is_negative())
                .ok_or_else(|| {
                    Error::InternalInconsistency(format!(
                        "no lambda-simple right descent for [{}]",
                        cur.word_string()
                    ))
                })?;
            // cur s_a = (s_a cur^{-1})^{-1}
            let inv = self.weyl.inverse(&cur);
            cur = self
                .weyl
                .inverse(&self.weyl.left_mul_reflection(&self.simple[k], &inv));
            stripped.push(k);
        }
        stripped.reverse();
        let x = self.from_simple_word(&stripped)?;
        Ok(CosetDecomposition {
            w_min: cur,
            x,
            x_word: stripped,
        })
    }

    /// Bruhat order of the Coxeter system `(W(lambda), {s_a : a in Pi(lambda)})`.
    pub fn lambda_bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> Result<bool> {
        self.lambda_reduced_word(x)?;
        self.lambda_reduced_word(y)?;
        coxeter::bruhat_leq(self, x, y)
    }

    /// `{z in W(lambda) : z <=_lambda y}`, sorted by (l_lambda, canon).
    pub fn lambda_lower_interval(&self, y: &WeylElement) -> Result<Vec<WeylElement>> {
        coxeter::lower_interval(self, y)
    }

    /// Offset `(lambda + rho) - w (lambda + rho)`, integral for `w` in `W(lambda)`.
    pub fn offset(&self, w: &WeylElement) -> Result<RootLatticeVector> {
        Ok(self.datum().shifted_action(w.word(), &self.lambda)?.offset)
    }

    /// All `y >=_lambda x` with `ht((lambda + rho) - y(lambda + rho)) <= cap`,
    /// sorted by (l_lambda, canon).
    ///
    /// Enumerated upward from `e` by lambda-simple reflections; for integrally
    /// dominant `lambda` each step adds `(y^{-1} a^vee, lambda + rho) a` to the
    /// offset, which is never negative, so pruning by height is safe.
    pub fn lambda_interval_above(&self, x: &WeylElement, cap: i64) -> Result<Vec<WeylElement>> {
        self.lambda_reduced_word(x)?;
        if cap > self.bound as i64 {
            return Err(Error::HeightBoundExceeded {
                needed: cap,
                bound: self.bound,
            });
        }
        let datum = self.datum();
        let shifted = self.lambda.plus_rho();
        let e = self.weyl.identity();
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(e.clone());
        let mut frontier = vec![(e, RootLatticeVector::zero(datum.rank()))];
        while let Some((y, off)) = frontier.pop() {
            let image = self.weyl.act_on_weight(&y, &shifted);
            for a in &self.simple {
                if self.weyl.rho_image_pairing(&y, a) < 0 {
                    continue;
                }
                let k = datum.coroot_pair(&image, a)?;
                if k < Rational::from_integer(0) {
                    return Err(Error::NotIntegrallyDominant { root: a.clone() });
                }
                let mut next_off = off.clone();
                next_off.add_scaled(a, k.to_integer());
                if next_off.height() > cap {
                    continue;
                }
                let z = self.weyl.left_mul_reflection(a, &y);
                if seen.insert(z.clone()) {
                    if seen.len() > ENUMERATION_LIMIT {
                        return Err(Error::EnumerationLimit(ENUMERATION_LIMIT));
                    }
                    frontier.push((z, next_off));
                }
            }
        }
        let mut out = Vec::new();
        for y in seen {
            if coxeter::bruhat_leq(self, x, &y)? {
                out.push(y);
            }
        }
        Ok(coxeter::sort_by_length(self, out))
    }
}

impl CoxeterSystem for IntegralSystem<'_> {
    type Element = WeylElement;

    fn generators(&self) -> usize {
        self.simple.len()
    }

    fn identity(&self) -> WeylElement {
        self.weyl.identity()
    }

    fn length(&self, x: &WeylElement) -> usize {
        self.lambda_length(x)
    }

    fn is_left_descent(&self, s: usize, x: &WeylElement) -> bool {
        self.weyl.rho_image_pairing(x, &self.simple[s]) < 0
    }

    fn left_mul(&self, s: usize, x: &WeylElement) -> WeylElement {
        self.weyl.left_mul_reflection(&self.simple[s], x)
    }

    fn reduced_word(&self, x: &WeylElement) -> Result<Vec<usize>> {
        self.lambda_reduced_word(x)
    }
}

/// Members of `roots` that are not a sum of two or more members.
fn indecomposables(roots: &[RootLatticeVector]) -> Vec<RootLatticeVector> {
    let Some(top) = roots.iter().map(|r| r.height()).max() else {
        return Vec::new();
    };
    // sums[h]: vectors of height h that are sums of >= 1 roots
    let mut sums: HashSet<RootLatticeVector> = HashSet::new();
    let mut by_height: Vec<Vec<RootLatticeVector>> = vec![Vec::new(); top as usize + 1];
    let mut simple = Vec::new();
    for r in roots {
        by_height[r.height() as usize].push(r.clone());
    }
    for h in 1..=top as usize {
        // new sums a + t of height h with t already a sum
        let mut fresh = Vec::new();
        for a in roots.iter().filter(|a| (a.height() as usize) < h) {
            for t in by_height_sums(&sums, h as i64 - a.height()) {
                fresh.push(&t + a);
            }
        }
        let decomposable: HashSet<RootLatticeVector> = fresh.into_iter().collect();
        for r in &by_height[h] {
            if !decomposable.contains(r) {
                simple.push(r.clone());
            }
        }
        sums.extend(decomposable);
        sums.extend(by_height[h].iter().cloned());
    }
    simple
}

fn by_height_sums(sums: &HashSet<RootLatticeVector>, h: i64) -> Vec<RootLatticeVector> {
    sums.iter().filter(|s| s.height() == h).cloned().collect()
}
