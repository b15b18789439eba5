//! Slow reference implementations used by the test suites.
//!
//! None of these share code paths with the production algorithms beyond the
//! basic Cartan and Weyl group arithmetic.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::cartan::{CartanDatum, Rational, RootLatticeVector, Weight};
use crate::laurent::LaurentPoly;
use crate::roots::box_vectors;
use crate::weyl::WeylGroup;

/// Number of ways to write `gamma` as a sum of positive roots, each root
/// `alpha` coming in `mult(alpha)` colours. Plain recursion over the root list.
pub fn kostant_brute(roots: &[(RootLatticeVector, i64)], gamma: &RootLatticeVector) -> i64 {
    fn go(
        roots: &[(RootLatticeVector, i64)],
        idx: usize,
        colour: i64,
        rest: &RootLatticeVector,
    ) -> i64 {
        if rest.is_zero() {
            return 1;
        }
        if idx == roots.len() {
            return 0;
        }
        let (alpha, m) = &roots[idx];
        let (next_idx, next_colour) = if colour + 1 < *m {
            (idx, colour + 1)
        } else {
            (idx + 1, 0)
        };
        let mut total = go(roots, next_idx, next_colour, rest);
        let mut cur = rest - alpha;
        while cur.is_nonnegative() {
            total += go(roots, next_idx, next_colour, &cur);
            cur = &cur - alpha;
        }
        total
    }
    go(roots, 0, 0, gamma)
}

/// Root multiplicities up to height `bound` read off the denominator identity
/// `prod_{alpha > 0} (1 - e^{-alpha})^{mult alpha} = sum_w (-1)^{l(w)} e^{w rho - rho}`.
pub fn denominator_multiplicities(
    datum: &CartanDatum,
    bound: u32,
) -> BTreeMap<RootLatticeVector, i64> {
    let rank = datum.rank();
    let weyl = WeylGroup::new(datum);
    let mut rhs: HashMap<RootLatticeVector, i64> = HashMap::new();
    for w in weyl.elements_up_to(bound as usize) {
        if w.canon().height() <= bound as i64 {
            let sign = if w.length() % 2 == 0 { 1 } else { -1 };
            *rhs.entry(w.canon().clone()).or_insert(0) += sign;
        }
    }
    let mut order = vec![RootLatticeVector::zero(rank)];
    order.extend(box_vectors(rank, bound));
    let mut product: HashMap<RootLatticeVector, i64> =
        order.iter().map(|g| (g.clone(), 0)).collect();
    product.insert(RootLatticeVector::zero(rank), 1);
    let mut mults = BTreeMap::new();
    for h in 1..=bound as i64 {
        let level: Vec<_> = order.iter().filter(|g| g.height() == h).cloned().collect();
        let found: Vec<(RootLatticeVector, i64)> = level
            .iter()
            .map(|g| (g.clone(), product[g] - rhs.get(g).copied().unwrap_or(0)))
            .filter(|(_, m)| *m != 0)
            .collect();
        for (alpha, m) in found {
            for _ in 0..m {
                for g in order.iter().rev() {
                    let below = g - &alpha;
                    if below.is_nonnegative() {
                        let sub = product[&below];
                        *product.get_mut(g).unwrap() -= sub;
                    }
                }
            }
            mults.insert(alpha, m);
        }
    }
    mults
}

/// Weight multiplicities of the finite-dimensional `L(lambda)`, `lambda`
/// dominant integral, at `lambda - gamma` for `ht(gamma) <= bound`, by
/// Freudenthal's formula. `roots` are all positive roots of the finite type.
pub fn freudenthal(
    datum: &CartanDatum,
    roots: &[RootLatticeVector],
    lambda: &Weight,
    bound: u32,
) -> BTreeMap<RootLatticeVector, i64> {
    let rank = datum.rank();
    let shifted = lambda.plus_rho();
    let mut m: BTreeMap<RootLatticeVector, i64> = BTreeMap::new();
    m.insert(RootLatticeVector::zero(rank), 1);
    for gamma in box_vectors(rank, bound) {
        let denom = datum.pair_weight_root(&shifted, &gamma) * Rational::from_integer(2)
            - Rational::from_integer(datum.norm(&gamma));
        let mut numer = Rational::zero();
        for alpha in roots {
            let mut k = 1;
            loop {
                let higher = &gamma - &alpha.scaled(k);
                if !higher.is_nonnegative() {
                    break;
                }
                let mult = m.get(&higher).copied().unwrap_or(0);
                if mult != 0 {
                    // (lambda - higher, alpha)
                    let pairing = datum.pair_weight_root(lambda, alpha)
                        - Rational::from_integer(datum.form(&higher, alpha));
                    numer += pairing * Rational::from_integer(2 * mult);
                }
                k += 1;
            }
        }
        let value = if denom.is_zero() {
            assert!(
                numer.is_zero(),
                "Freudenthal numerator nonzero on the sphere"
            );
            0
        } else {
            let v = numer / denom;
            assert!(v.is_integer(), "Freudenthal produced {v}");
            v.to_integer()
        };
        m.insert(gamma, value);
    }
    m
}

/// A permutation of `0..n` in one-line notation.
pub type Perm = Vec<usize>;

/// Number of inversions.
pub fn perm_length(p: &Perm) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// `s_i p`: swap the values `i` and `i + 1`.
pub fn perm_left_mul(i: usize, p: &Perm) -> Perm {
    p.iter()
        .map(|&v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect()
}

/// The permutation of `s_{w[0]} ... s_{w[k-1]}` in `S_n`.
pub fn perm_of_word(n: usize, word: &[usize]) -> Perm {
    word.iter()
        .rev()
        .fold((0..n).collect(), |acc, &i| perm_left_mul(i, &acc))
}

/// Bruhat order on `S_n` by the tableau criterion.
pub fn perm_bruhat_leq(x: &Perm, w: &Perm) -> bool {
    for k in 1..x.len() {
        let mut a = x[..k].to_vec();
        let mut b = w[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(u, v)| u > v) {
            return false;
        }
    }
    true
}

/// All of `S_n`, sorted by length.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn build(n: usize, cur: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                build(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    build(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out.sort_by_key(perm_length);
    out
}

/// KL polynomials of `S_n` through the R-polynomials:
/// `q^{l(w)-l(x)} P_{x,w}(q^-1) - P_{x,w}(q) = sum_{x < y <= w} R_{x,y} P_{y,w}`.
pub struct PermKl {
    n: usize,
    r: HashMap<(Perm, Perm), LaurentPoly>,
    p: HashMap<(Perm, Perm), LaurentPoly>,
}

impl PermKl {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            r: HashMap::new(),
            p: HashMap::new(),
        }
    }

    fn is_left_descent(i: usize, p: &Perm) -> bool {
        let pos = |v: usize| p.iter().position(|&u| u == v).unwrap();
        pos(i) > pos(i + 1)
    }

    pub fn r(&mut self, x: &Perm, w: &Perm) -> LaurentPoly {
        if let Some(v) = self.r.get(&(x.clone(), w.clone())) {
            return v.clone();
        }
        let value = if !perm_bruhat_leq(x, w) {
            LaurentPoly::zero()
        } else if x == w {
            LaurentPoly::one()
        } else {
            let s = (0..self.n - 1)
                .find(|&i| Self::is_left_descent(i, w))
                .unwrap();
            let sw = perm_left_mul(s, w);
            let sx = perm_left_mul(s, x);
            if Self::is_left_descent(s, x) {
                self.r(&sx, &sw)
            } else {
                let q = LaurentPoly::q_power(1, 1);
                let a = &(&q - &LaurentPoly::one()) * &self.r(x, &sw);
                let b = &q * &self.r(&sx, &sw);
                &a + &b
            }
        };
        self.r.insert((x.clone(), w.clone()), value.clone());
        value
    }

    pub fn p(&mut self, x: &Perm, w: &Perm) -> LaurentPoly {
        if let Some(v) = self.p.get(&(x.clone(), w.clone())) {
            return v.clone();
        }
        let value = if !perm_bruhat_leq(x, w) {
            LaurentPoly::zero()
        } else if x == w {
            LaurentPoly::one()
        } else {
            let d = (perm_length(w) - perm_length(x)) as i32;
            let mut s = LaurentPoly::zero();
            for y in all_perms(self.n) {
                if &y != x && perm_bruhat_leq(x, &y) && perm_bruhat_leq(&y, w) {
                    s += &(&self.r(x, &y) * &self.p(&y, w));
                }
            }
            // P has v-degree at most d - 1, the mirrored term at least d + 1
            -&s.truncate_above(d - 1)
        };
        self.p.insert((x.clone(), w.clone()), value.clone());
        value
    }
}
