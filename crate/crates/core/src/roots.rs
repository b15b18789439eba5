//! Positive roots up to a height bound, with multiplicities.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::cartan::{CartanDatum, Rational, RootLatticeVector};
use crate::error::{Error, Result};

/// Positive real roots of height at most `bound`, sorted by (height, lex).
///
/// Breadth-first from the simple roots, applying only height-raising simple
/// reflections; every non-simple positive real root has a height-lowering one,
/// so nothing is missed.
pub fn positive_real_roots(datum: &CartanDatum, bound: u32) -> Vec<RootLatticeVector> {
    let n = datum.rank();
    let h = bound as i64;
    let mut seen: BTreeSet<RootLatticeVector> = BTreeSet::new();
    let mut frontier: Vec<RootLatticeVector> = Vec::new();
    if h >= 1 {
        for i in 0..n {
            let a = RootLatticeVector::simple(n, i);
            seen.insert(a.clone());
            frontier.push(a);
        }
    }
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let p = datum.coroot_on_root(i, &beta);
            if p >= 0 || beta.height() - p > h {
                continue;
            }
            let next = datum.reflect_root(i, &beta);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    Real,
    Imaginary,
    NotARoot,
}

/// Positive roots of height at most `bound` with their multiplicities.
#[derive(Clone, Debug)]
pub struct RootTable {
    bound: u32,
    real_positive: BTreeSet<RootLatticeVector>,
    mult: BTreeMap<RootLatticeVector, i64>,
}

impl RootTable {
    /// Real roots by reflection closure, all multiplicities by Peterson's recurrence
    /// `(g, g - 2 rho) c_g = sum_{g' + g'' = g} (g', g'') c_g' c_g''`.
    pub fn new(datum: &CartanDatum, bound: u32) -> Result<Self> {
        let n = datum.rank();
        let real_positive: BTreeSet<_> = positive_real_roots(datum, bound).into_iter().collect();

        let mut c: HashMap<RootLatticeVector, Rational> = HashMap::new();
        let mut support: Vec<RootLatticeVector> = Vec::new();
        let mut mult = BTreeMap::new();
        for gamma in box_vectors(n, bound) {
            let value = if gamma.height() == 1 {
                Rational::one()
            } else {
                let mut s = Rational::zero();
                for g1 in &support {
                    if !g1.le_componentwise(&gamma) {
                        continue;
                    }
                    let g2 = &gamma - g1;
                    if let Some(c2) = c.get(&g2) {
                        s += c[g1] * c2 * Rational::from_integer(datum.form(g1, &g2));
                    }
                }
                let lead = datum.norm(&gamma) - 2 * datum.rho_pairing(&gamma);
                if lead != 0 {
                    s / Rational::from_integer(lead)
                } else if s.is_zero() {
                    // The recurrence says nothing here. Imaginary roots have
                    // lead < 0, so gamma is a real root or not a root at all.
                    let mut value = if real_positive.contains(&gamma) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    for k in 2..=gamma.height() {
                        if let Some(&mk) = gamma.divided_by(k).and_then(|p| mult.get(&p)) {
                            value += Rational::new(mk, k);
                        }
                    }
                    value
                } else {
                    return Err(Error::InternalInconsistency(format!(
                        "Peterson recurrence degenerate at {gamma}"
                    )));
                }
            };
            // c_g = sum_{k | g} mult(g / k) / k
            let mut m = value;
            for k in 2..=gamma.height() {
                if let Some(part) = gamma.divided_by(k) {
                    if let Some(&mk) = mult.get(&part) {
                        m -= Rational::new(mk, k);
                    }
                }
            }
            if !m.is_integer() || m < Rational::zero() {
                return Err(Error::InternalInconsistency(format!(
                    "multiplicity of {gamma} came out as {m}"
                )));
            }
            let m = m.to_integer();
            if m > 0 {
                mult.insert(gamma.clone(), m);
            }
            if !value.is_zero() {
                c.insert(gamma.clone(), value);
                support.push(gamma);
            }
        }

        for beta in &real_positive {
            if mult.get(beta) != Some(&1) {
                return Err(Error::InternalInconsistency(format!(
                    "real root {beta} has multiplicity {:?}",
                    mult.get(beta)
                )));
            }
        }
        Ok(Self {
            bound,
            real_positive,
            mult,
        })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn real_positive(&self) -> impl Iterator<Item = &RootLatticeVector> {
        self.real_positive.iter()
    }

    /// Positive roots (real and imaginary) with multiplicities, in (height, lex) order.
    pub fn positive_roots(&self) -> Vec<(&RootLatticeVector, i64)> {
        let mut out: Vec<_> = self.mult.iter().map(|(r, &m)| (r, m)).collect();
        out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        out
    }

    pub fn is_real_positive(&self, beta: &RootLatticeVector) -> bool {
        self.real_positive.contains(beta)
    }

    /// `dim g_gamma` for `gamma` in the positive cone; 0 off the root set.
    pub fn mult(&self, gamma: &RootLatticeVector) -> Result<i64> {
        self.check_height(gamma)?;
        Ok(self.mult.get(gamma).copied().unwrap_or(0))
    }

    pub fn classify(&self, gamma: &RootLatticeVector) -> Result<RootClass> {
        let abs = if gamma.is_negative() {
            -gamma
        } else {
            gamma.clone()
        };
        if !abs.is_positive() {
            return Ok(RootClass::NotARoot);
        }
        self.check_height(&abs)?;
        Ok(if self.real_positive.contains(&abs) {
            RootClass::Real
        } else if self.mult.contains_key(&abs) {
            RootClass::Imaginary
        } else {
            RootClass::NotARoot
        })
    }

    fn check_height(&self, gamma: &RootLatticeVector) -> Result<()> {
        if gamma.height() > self.bound as i64 {
            Err(Error::OutOfBounds {
                height: gamma.height(),
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }
}

/// All nonnegative integer vectors of height `1..=bound`, ordered by (height, lex).
pub(crate) fn box_vectors(rank: usize, bound: u32) -> Vec<RootLatticeVector> {
    let mut out = Vec::new();
    for h in 1..=bound as i64 {
        let mut cur = vec![0i64; rank];
        compositions(rank, h, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(
    rank: usize,
    remaining: i64,
    pos: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<RootLatticeVector>,
) {
    if pos + 1 == rank {
        cur[pos] = remaining;
        out.push(RootLatticeVector::new(cur.clone()));
        return;
    }
    for k in 0..=remaining {
        cur[pos] = k;
        compositions(rank, remaining - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RootLatticeVector {
        RootLatticeVector::new(v.to_vec())
    }

    fn affine_a1() -> CartanDatum {
        CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap()
    }

    #[test]
    fn real_roots_examples() {
        let a2 = CartanDatum::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(
            positive_real_roots(&a2, 2),
            vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]
        );
        let a3 = CartanDatum::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(positive_real_roots(&a3, 3).len(), 6);
        assert_eq!(
            positive_real_roots(&affine_a1(), 5),
            vec![
                rv(&[0, 1]),
                rv(&[1, 0]),
                rv(&[1, 2]),
                rv(&[2, 1]),
                rv(&[2, 3]),
                rv(&[3, 2])
            ]
        );
    }

    #[test]
    fn multiplicities() {
        let t = RootTable::new(&affine_a1(), 4).unwrap();
        assert_eq!(t.mult(&rv(&[1, 1])).unwrap(), 1);
        assert_eq!(t.mult(&rv(&[2, 1])).unwrap(), 1);
        assert_eq!(t.mult(&rv(&[2, 0])).unwrap(), 0);
        assert!(t.mult(&rv(&[3, 2])).is_err());

        let a2 = CartanDatum::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let t = RootTable::new(&a2, 2).unwrap();
        assert_eq!(t.positive_roots().len(), 3);
        assert!(t.positive_roots().iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn classify_examples() {
        let a2 = CartanDatum::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let t = RootTable::new(&a2, 3).unwrap();
        assert_eq!(t.classify(&rv(&[1, 1])).unwrap(), RootClass::Real);
        assert_eq!(t.classify(&rv(&[-1, -1])).unwrap(), RootClass::Real);
        assert_eq!(t.classify(&rv(&[2, 0])).unwrap(), RootClass::NotARoot);
        assert_eq!(t.classify(&rv(&[1, -1])).unwrap(), RootClass::NotARoot);
        let t = RootTable::new(&affine_a1(), 4).unwrap();
        assert_eq!(t.classify(&rv(&[1, 1])).unwrap(), RootClass::Imaginary);
        assert!(matches!(
            t.classify(&rv(&[3, 3])),
            Err(Error::OutOfBounds {
                height: 6,
                bound: 4
            })
        ));
    }

    #[test]
    fn hyperbolic_imaginary_multiplicities() {
        // Rank 2 hyperbolic [[2,-3],[-3,2]]: [e1, e2] spans the (1,1) root space.
        let d = CartanDatum::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
        let t = RootTable::new(&d, 4).unwrap();
        assert_eq!(t.classify(&rv(&[1, 1])).unwrap(), RootClass::Imaginary);
        assert_eq!(t.mult(&rv(&[1, 1])).unwrap(), 1);
        assert_eq!(t.classify(&rv(&[1, 3])).unwrap(), RootClass::Real);
    }
}
