//! Kazhdan-Lusztig polynomials `P_{x,w}` and their inverses `Q_{x,w}` for any
//! [`CoxeterSystem`], by the classical recursion along a left descent.
//!
//! For `s w < w`, `v = s w` and `c = [s x < x]`:
//!
//! `P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`,
//!
//! summed over `z < v` with `s z < z`, where `mu(z,v)` is the coefficient of
//! `q^{(l(v)-l(z)-1)/2}` in `P_{z,v}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::coxeter::{self, CoxeterSystem};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

type Column<E> = Arc<HashMap<E, LaurentPoly>>;

/// Memoized KL data for one Coxeter system. Polynomials are stored in `v`
/// (so `q^k` is `v^{2k}`).
pub struct KlTable<'s, S: CoxeterSystem> {
    sys: &'s S,
    columns: Mutex<HashMap<S::Element, Column<S::Element>>>,
    inverse: Mutex<HashMap<(S::Element, S::Element), LaurentPoly>>,
}

impl<'s, S: CoxeterSystem> KlTable<'s, S> {
    pub fn new(sys: &'s S) -> Self {
        Self {
            sys,
            columns: Mutex::new(HashMap::new()),
            inverse: Mutex::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> &'s S {
        self.sys
    }

    /// `P_{x,w}` for every `x <= w`.
    pub fn column(&self, w: &S::Element) -> Result<Column<S::Element>> {
        if let Some(col) = self.columns.lock().unwrap().get(w) {
            return Ok(col.clone());
        }
        let sys = self.sys;
        let lower = coxeter::lower_interval(sys, w)?;
        let lw = sys.length(w);
        let mut col = HashMap::with_capacity(lower.len());
        if lw == 0 {
            col.insert(w.clone(), LaurentPoly::one());
        } else {
            let s = sys.reduced_word(w)?[0];
            let v = sys.left_mul(s, w);
            let lv = sys.length(&v);
            let colv = self.column(&v)?;
            let mut corrections = Vec::new();
            for (z, pzv) in colv.iter() {
                let lz = sys.length(z);
                if lz == lv || !sys.is_left_descent(s, z) || (lv - lz) % 2 == 0 {
                    continue;
                }
                let mu = pzv.coeff((lv - lz - 1) as i32);
                if mu != 0 {
                    corrections.push((self.column(z)?, mu, (lw - lz) as i32));
                }
            }
            for x in &lower {
                let c = sys.is_left_descent(s, x) as i32;
                let sx = sys.left_mul(s, x);
                let mut p = LaurentPoly::zero();
                if let Some(a) = colv.get(&sx) {
                    p += &a.shift(2 * (1 - c));
                }
                if let Some(b) = colv.get(x) {
                    p += &b.shift(2 * c);
                }
                for (colz, mu, shift) in &corrections {
                    if let Some(pxz) = colz.get(x) {
                        p -= &pxz.shift(*shift).scale(*mu);
                    }
                }
                let lx = sys.length(x);
                let bound = if lx == lw { 0 } else { (lw - lx - 1) as i32 };
                if p.coeff(0) != 1 || p.q_coeffs().is_none() || !p.v_degree_at_most(bound) {
                    return Err(Error::InternalInconsistency(format!(
                        "KL polynomial for {x:?} <= {w:?} came out as {p}"
                    )));
                }
                col.insert(x.clone(), p);
            }
        }
        let col = Arc::new(col);
        self.columns.lock().unwrap().insert(w.clone(), col.clone());
        Ok(col)
    }

    /// `P_{x,w}`, zero unless `x <= w`.
    pub fn p(&self, x: &S::Element, w: &S::Element) -> Result<LaurentPoly> {
        Ok(self.column(w)?.get(x).cloned().unwrap_or_default())
    }

    /// `mu(x, w)`: the coefficient of `q^{(l(w)-l(x)-1)/2}` in `P_{x,w}`.
    pub fn mu(&self, x: &S::Element, w: &S::Element) -> Result<i64> {
        let (lx, lw) = (self.sys.length(x), self.sys.length(w));
        if lx >= lw || (lw - lx) % 2 == 0 {
            return Ok(0);
        }
        Ok(self.p(x, w)?.coeff((lw - lx - 1) as i32))
    }

    /// `Q_{x,z}` from `sum_{x <= y <= z} (-1)^{l(y)-l(x)} Q_{x,y} P_{y,z} = delta_{x,z}`.
    pub fn q(&self, x: &S::Element, z: &S::Element) -> Result<LaurentPoly> {
        let key = (x.clone(), z.clone());
        if let Some(p) = self.inverse.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        if !coxeter::bruhat_leq(self.sys, x, z)? {
            return Err(Error::NotComparable);
        }
        let between = coxeter::interval(self.sys, x, z)?;
        let mut row: HashMap<S::Element, LaurentPoly> = HashMap::new();
        for y in &between {
            let ly = self.sys.length(y);
            let value = if y == x {
                LaurentPoly::one()
            } else {
                let col = self.column(y)?;
                let mut acc = LaurentPoly::zero();
                for (u, qxu) in &row {
                    if let Some(puy) = col.get(u) {
                        let term = qxu * puy;
                        if (ly - self.sys.length(u)) % 2 == 0 {
                            acc -= &term;
                        } else {
                            acc += &term;
                        }
                    }
                }
                acc
            };
            row.insert(y.clone(), value);
        }
        let mut memo = self.inverse.lock().unwrap();
        for (y, poly) in &row {
            memo.insert((x.clone(), y.clone()), poly.clone());
        }
        Ok(row.remove(z).expect("z lies in its own interval"))
    }
}
