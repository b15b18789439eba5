//! Cartan data, weights and the invariant form.
//!
//! A weight is stored only through its fundamental coordinates
//! `c_i = <h_i, lambda>`. Every pairing in this crate is taken against the
//! root lattice, so components of `lambda` killed by all simple coroots never
//! influence a result. `rho` is the all-ones coordinate vector.
//!
//! The form is normalised by `(alpha_i, alpha_j) = d_i a_ij` with `d` the least
//! positive integer symmetrizer, so root norms are integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used for weight coordinates and pairings.
pub type Rational = num_rational::Rational64;

/// Integer vector in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootLatticeVector(Vec<i64>);

impl RootLatticeVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// The simple root `alpha_i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// True for nonzero vectors with all coefficients of one sign.
    pub fn is_positive(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && !self.is_zero()
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }

    pub fn add_to(&mut self, i: usize, k: i64) {
        self.0[i] += k;
    }

    /// If every coefficient is divisible by `k`, the quotient.
    pub fn divided_by(&self, k: i64) -> Option<Self> {
        if self.0.iter().all(|c| c % k == 0) {
            Some(Self(self.0.iter().map(|c| c / k).collect()))
        } else {
            None
        }
    }

    /// Ordering key used for every deterministic listing: height, then lexicographic.
    pub fn sort_key(&self) -> (i64, &[i64]) {
        (self.height(), &self.0)
    }

    pub fn parse(text: &str) -> Option<Self> {
        text.split_whitespace()
            .map(|t| t.parse::<i64>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for RootLatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &RootLatticeVector {
    type Output = RootLatticeVector;
    fn add(self, rhs: Self) -> RootLatticeVector {
        RootLatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootLatticeVector {
    type Output = RootLatticeVector;
    fn sub(self, rhs: Self) -> RootLatticeVector {
        RootLatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootLatticeVector {
    type Output = RootLatticeVector;
    fn neg(self) -> RootLatticeVector {
        RootLatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A weight, given by its fundamental coordinates `c_i = <h_i, lambda>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational::zero(); rank])
    }

    pub fn rho(rank: usize) -> Self {
        Self::new(vec![Rational::one(); rank])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn plus_rho(&self) -> Self {
        Self::new(self.coords.iter().map(|c| c + Rational::one()).collect())
    }

    pub fn minus_rho(&self) -> Self {
        Self::new(self.coords.iter().map(|c| c - Rational::one()).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// The weight `self - gamma`.
    pub fn minus_root(&self, datum: &CartanDatum, gamma: &RootLatticeVector) -> Self {
        let coords = (0..self.rank())
            .map(|i| self.coords[i] - Rational::from_integer(datum.coroot_on_root(i, gamma)))
            .collect();
        Self::new(coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The weight `anchor - offset`, for weights below a fixed highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleWeight {
    pub anchor: Weight,
    pub offset: RootLatticeVector,
}

impl ModuleWeight {
    pub fn at(anchor: Weight) -> Self {
        let rank = anchor.rank();
        Self {
            anchor,
            offset: RootLatticeVector::zero(rank),
        }
    }

    pub fn new(anchor: Weight, offset: RootLatticeVector) -> Self {
        Self { anchor, offset }
    }

    /// Fundamental coordinates of `anchor - offset`.
    pub fn weight(&self, datum: &CartanDatum) -> Weight {
        self.anchor.minus_root(datum, &self.offset)
    }
}

/// Type of an indecomposable component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Finite => "finite",
            Kind::Affine => "affine",
            Kind::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub kind: Kind,
    /// Null root of an affine component, written over the full index set.
    pub null_root: Option<RootLatticeVector>,
}

/// A validated symmetrizable generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    components: Vec<Component>,
}

impl CartanDatum {
    /// Validates `matrix` (`a_ij = <h_i, alpha_j>`) and classifies its components.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::NotGcm {
                    row: i,
                    col: i,
                    reason: "diagonal entry must be 2",
                });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[i][j] > 0 {
                    return Err(Error::NotGcm {
                        row: i,
                        col: j,
                        reason: "off-diagonal entry must be non-positive",
                    });
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::NotGcm {
                        row: i,
                        col: j,
                        reason: "a_ij = 0 must imply a_ji = 0",
                    });
                }
            }
        }

        let components_nodes = connected_components(&matrix);
        let symmetrizer = symmetrize(&matrix, &components_nodes)?;
        let components = components_nodes
            .into_iter()
            .map(|nodes| classify(&matrix, nodes))
            .collect();
        Ok(Self {
            matrix,
            symmetrizer,
            components,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `a_ij = <h_i, alpha_j>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components.len() == 1
    }

    /// Kind of an indecomposable datum; `None` when decomposable.
    pub fn kind(&self) -> Option<Kind> {
        match self.components.as_slice() {
            [c] => Some(c.kind),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.kind == Kind::Finite)
    }

    /// Null root `delta` of an indecomposable affine datum.
    pub fn null_root(&self) -> Result<&RootLatticeVector> {
        match self.components.as_slice() {
            [Component {
                kind: Kind::Affine,
                null_root: Some(delta),
                ..
            }] => Ok(delta),
            _ => Err(Error::NotAffine),
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, weight: &Weight) -> Result<()> {
        if weight.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: weight.rank(),
            })
        }
    }

    /// `<h_i, gamma> = sum_j a_ij gamma_j`.
    pub fn coroot_on_root(&self, i: usize, gamma: &RootLatticeVector) -> i64 {
        self.matrix[i]
            .iter()
            .zip(gamma.coeffs())
            .map(|(a, g)| a * g)
            .sum()
    }

    /// `(gamma, gamma') = sum_ij gamma_i gamma'_j d_i a_ij`.
    pub fn form(&self, a: &RootLatticeVector, b: &RootLatticeVector) -> i64 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            let ai = a.coeffs()[i];
            if ai == 0 {
                continue;
            }
            total += ai * self.symmetrizer[i] * self.coroot_on_root(i, b);
        }
        total
    }

    pub fn norm(&self, gamma: &RootLatticeVector) -> i64 {
        self.form(gamma, gamma)
    }

    /// `(lambda, gamma) = sum_i gamma_i d_i c_i`.
    pub fn pair_weight_root(&self, lambda: &Weight, gamma: &RootLatticeVector) -> Rational {
        lambda
            .coords()
            .iter()
            .zip(gamma.coeffs())
            .zip(&self.symmetrizer)
            .map(|((c, g), d)| c * Rational::from_integer(g * d))
            .sum()
    }

    /// `(rho, gamma)`, an integer.
    pub fn rho_pairing(&self, gamma: &RootLatticeVector) -> i64 {
        gamma
            .coeffs()
            .iter()
            .zip(&self.symmetrizer)
            .map(|(g, d)| g * d)
            .sum()
    }

    /// `(beta^vee, lambda) = 2 (lambda, beta) / (beta, beta)`.
    pub fn coroot_pair(&self, lambda: &Weight, beta: &RootLatticeVector) -> Result<Rational> {
        let norm = self.norm(beta);
        if norm == 0 {
            return Err(Error::ZeroNorm(beta.clone()));
        }
        Ok(self.pair_weight_root(lambda, beta) * Rational::new(2, norm))
    }

    /// `s_i(gamma) = gamma - <h_i, gamma> alpha_i`.
    pub fn reflect_root(&self, i: usize, gamma: &RootLatticeVector) -> RootLatticeVector {
        let mut out = gamma.clone();
        out.add_to(i, -self.coroot_on_root(i, gamma));
        out
    }

    /// `s_beta(gamma) = gamma - (gamma, beta^vee) beta` for a real root `beta`.
    pub fn reflect_root_by(
        &self,
        beta: &RootLatticeVector,
        gamma: &RootLatticeVector,
    ) -> Result<RootLatticeVector> {
        let norm = self.norm(beta);
        if norm == 0 {
            return Err(Error::ZeroNorm(beta.clone()));
        }
        let num = 2 * self.form(gamma, beta);
        if num % norm != 0 {
            return Err(Error::InternalInconsistency(format!(
                "({gamma}, {beta}^vee) is not an integer"
            )));
        }
        let mut out = gamma.clone();
        out.add_scaled(beta, -(num / norm));
        Ok(out)
    }

    /// `s_i(lambda)` on fundamental coordinates: `c_j - c_i a_ji`.
    pub fn reflect_weight(&self, i: usize, lambda: &Weight) -> Weight {
        let ci = lambda.coords()[i];
        let coords = (0..self.rank())
            .map(|j| lambda.coords()[j] - ci * Rational::from_integer(self.matrix[j][i]))
            .collect();
        Weight::new(coords)
    }

    /// Simple reflection of a module weight, keeping its anchor.
    ///
    /// Fails when `<h_i, mu>` is not an integer, since the result then leaves
    /// the coset `anchor - Q`.
    pub fn reflect(&self, i: usize, mu: &ModuleWeight) -> Result<ModuleWeight> {
        self.check_index(i)?;
        let pairing =
            mu.anchor.coords()[i] - Rational::from_integer(self.coroot_on_root(i, &mu.offset));
        if !pairing.is_integer() {
            let mut offs: Vec<String> = mu.offset.coeffs().iter().map(|c| c.to_string()).collect();
            offs[i] = (Rational::from_integer(mu.offset.coeffs()[i]) + pairing).to_string();
            return Err(Error::NonIntegralOffset(offs));
        }
        let mut offset = mu.offset.clone();
        offset.add_to(i, pairing.to_integer());
        Ok(ModuleWeight::new(mu.anchor.clone(), offset))
    }

    /// Rational offset `(lambda + rho) - w(lambda + rho)` for `w = s_{word[0]} ... s_{word[k-1]}`.
    pub fn shifted_offset(&self, word: &[usize], lambda: &Weight) -> Result<Vec<Rational>> {
        let n = self.rank();
        for &i in word {
            self.check_index(i)?;
        }
        // Track mu = w'(lambda + rho) via its coordinates and the offset.
        let mut coords: Vec<Rational> = lambda.plus_rho().coords().to_vec();
        let mut offset = vec![Rational::zero(); n];
        for &i in word.iter().rev() {
            let ci = coords[i];
            offset[i] += ci;
            for j in 0..n {
                coords[j] -= ci * Rational::from_integer(self.matrix[j][i]);
            }
        }
        Ok(offset)
    }

    /// `w o lambda = w(lambda + rho) - rho`, anchored at `lambda`.
    pub fn shifted_action(&self, word: &[usize], lambda: &Weight) -> Result<ModuleWeight> {
        self.check_weight(lambda)?;
        let offset = self.shifted_offset(word, lambda)?;
        if offset.iter().any(|c| !c.is_integer()) {
            return Err(Error::NonIntegralOffset(
                offset.iter().map(|c| c.to_string()).collect(),
            ));
        }
        Ok(ModuleWeight::new(
            lambda.clone(),
            RootLatticeVector::new(offset.iter().map(|c| c.to_integer()).collect()),
        ))
    }
}

fn connected_components(matrix: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if !seen[j] && matrix[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        out.push(nodes);
    }
    out
}

/// Least positive integers `d` with `d_i a_ij = d_j a_ji`, per component.
fn symmetrize(matrix: &[Vec<i64>], components: &[Vec<usize>]) -> Result<Vec<i64>> {
    let n = matrix.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for nodes in components {
        let root = nodes[0];
        d[root] = Some(Rational::one());
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            let di = d[i].unwrap();
            for &j in nodes {
                if i == j || matrix[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let dj = di * Rational::new(matrix[i][j], matrix[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable { row: i, col: j });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut out = vec![0i64; n];
    for nodes in components {
        let lcm = nodes
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let ints: Vec<i64> = nodes
            .iter()
            .map(|&i| (d[i].unwrap() * Rational::from_integer(lcm)).to_integer())
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, v) in nodes.iter().zip(ints) {
            out[i] = v / g;
        }
    }
    Ok(out)
}

fn submatrix(matrix: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<i64>> {
    nodes
        .iter()
        .map(|&i| nodes.iter().map(|&j| matrix[i][j]).collect())
        .collect()
}

/// Fraction-free Gaussian elimination.
pub(crate) fn determinant(matrix: &[Vec<i64>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn classify(matrix: &[Vec<i64>], nodes: Vec<usize>) -> Component {
    let k = nodes.len();
    let sub = submatrix(matrix, &nodes);
    let full = determinant(&sub);
    // Every proper principal minor; subsets of size < k.
    let mut proper_positive = true;
    for mask in 1u64..(1u64 << k) - 1 {
        let idx: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).collect();
        if determinant(&submatrix(&sub, &idx)) <= 0 {
            proper_positive = false;
            break;
        }
    }
    let kind = if proper_positive && full > 0 {
        Kind::Finite
    } else if proper_positive && full == 0 {
        Kind::Affine
    } else {
        Kind::Indefinite
    };
    let null_root = if kind == Kind::Affine {
        let local = kernel_vector(&sub);
        let mut v = vec![0i64; matrix.len()];
        for (&i, x) in nodes.iter().zip(local) {
            v[i] = x;
        }
        Some(RootLatticeVector::new(v))
    } else {
        None
    };
    Component {
        nodes,
        kind,
        null_root,
    }
}

/// Positive primitive integer vector spanning the (one-dimensional) kernel.
fn kernel_vector(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..n {
                    let v = a[row][c];
                    a[r][c] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c)).unwrap_or(n - 1);
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][free];
    }
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<i64> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm)).to_integer())
        .collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x /= g;
    }
    if ints.iter().any(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -*x;
        }
    }
    ints
}

/// Reduced residue `c mod 1` in `[0, 1)`.
pub fn fractional_part(c: &Rational) -> Rational {
    c - c.floor()
}
