//! Truncated formal characters of Verma and irreducible highest weight modules.
//!
//! A [`CharacterSeries`] based at `mu` with bound `H` records the weight
//! multiplicities at `mu - gamma` for every `gamma >= 0` of height at most `H`.
//! Contributions of Verma modules whose highest weight falls outside that box
//! are dropped, which is exact on the box since they only affect lower weights.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::cartan::{CartanDatum, Kind, ModuleWeight, Rational, RootLatticeVector, Weight};
use crate::error::{Error, Result};
use crate::hecke::KlTable;
use crate::integral::{IntegralSystem, ENUMERATION_LIMIT};
use crate::roots::{box_vectors, positive_real_roots, RootTable};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    base: ModuleWeight,
    bound: u32,
    coeffs: BTreeMap<RootLatticeVector, i64>,
}

impl CharacterSeries {
    /// All-zero series; every vector of the box is present.
    pub fn zero(base: ModuleWeight, bound: u32) -> Self {
        let rank = base.anchor.rank();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(RootLatticeVector::zero(rank), 0);
        for g in box_vectors(rank, bound) {
            coeffs.insert(g, 0);
        }
        Self {
            base,
            bound,
            coeffs,
        }
    }

    pub fn base(&self) -> &ModuleWeight {
        &self.base
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Multiplicity at `base - gamma`; zero outside the box.
    pub fn coeff(&self, gamma: &RootLatticeVector) -> i64 {
        self.coeffs.get(gamma).copied().unwrap_or(0)
    }

    /// Every box vector with its multiplicity, in (height, lex) order.
    pub fn rows(&self) -> Vec<(&RootLatticeVector, i64)> {
        let mut out: Vec<_> = self.coeffs.iter().map(|(g, &c)| (g, c)).collect();
        out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        out
    }

    /// Nonzero entries only.
    pub fn support(&self) -> impl Iterator<Item = (&RootLatticeVector, i64)> {
        self.coeffs
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(g, &c)| (g, c))
    }

    /// Adds `k` times `other`, moved down by `shift`; entries leaving the box are dropped.
    pub fn add_shifted(&mut self, other: &CharacterSeries, shift: &RootLatticeVector, k: i64) {
        if k == 0 {
            return;
        }
        for (g, &c) in &other.coeffs {
            if c == 0 {
                continue;
            }
            let target = g + shift;
            if let Some(slot) = self.coeffs.get_mut(&target) {
                *slot += k * c;
            }
        }
    }

    /// Tab-separated table with a header row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("offset\tmultiplicity\n");
        for (g, c) in self.rows() {
            out.push_str(&format!("{g}\t{c}\n"));
        }
        out
    }
}

/// Kostant partition function on the box of height `bound`: the coefficients of
/// `prod_{alpha > 0} (1 - e^{-alpha})^{-mult alpha}`.
pub fn partition_counts(table: &RootTable, bound: u32) -> Result<BTreeMap<RootLatticeVector, i64>> {
    if bound > table.bound() {
        return Err(Error::OutOfBounds {
            height: bound as i64,
            bound: table.bound(),
        });
    }
    let roots = table.positive_roots();
    let rank = roots.first().map_or(0, |(r, _)| r.rank());
    let mut order = vec![RootLatticeVector::zero(rank)];
    order.extend(box_vectors(rank, bound));
    let mut counts: BTreeMap<RootLatticeVector, i64> =
        order.iter().map(|g| (g.clone(), 0)).collect();
    counts.insert(RootLatticeVector::zero(rank), 1);
    for (alpha, m) in roots {
        if alpha.height() > bound as i64 {
            continue;
        }
        for _ in 0..m {
            // ascending height makes this the geometric series in e^{-alpha}
            for g in &order {
                let below = g - alpha;
                if below.is_nonnegative() {
                    let add = counts[&below];
                    *counts.get_mut(g).unwrap() += add;
                }
            }
        }
    }
    Ok(counts)
}

/// `ch M(mu)` on the box of height `bound`.
pub fn verma_character(
    table: &RootTable,
    mu: &ModuleWeight,
    bound: u32,
) -> Result<CharacterSeries> {
    let counts = partition_counts(table, bound)?;
    let mut series = CharacterSeries::zero(mu.clone(), bound);
    for (g, c) in counts {
        series.coeffs.insert(g, c);
    }
    Ok(series)
}

/// Outcome of one hypothesis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Verified for every root, not just those in the box.
    Holds,
    /// Verified for every root of height at most the given bound.
    HoldsUpTo(u32),
    /// No counterexample up to the bound, but the check is only sufficient.
    NoWitnessUpTo(u32),
    Fails(RootLatticeVector),
    NotCheckable(&'static str),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(
            self,
            Verdict::Holds | Verdict::HoldsUpTo(_) | Verdict::NoWitnessUpTo(_)
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::HoldsUpTo(h) => write!(f, "holds up to height {h}"),
            Verdict::NoWitnessUpTo(h) => write!(f, "no counterexample up to height {h}"),
            Verdict::Fails(root) => write!(f, "fails at {root}"),
            Verdict::NotCheckable(why) => write!(f, "not checkable: {why}"),
        }
    }
}

/// Hypotheses of the character formula for a weight `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// `2(alpha, lambda + rho) != (alpha, alpha)` for positive imaginary `alpha`.
    pub imaginary: Verdict,
    /// `(alpha^vee, lambda + rho)` is never a nonpositive integer for positive real `alpha`.
    pub real: Verdict,
    /// The shifted-action stabilizer of `lambda` is trivial.
    pub isotropy: Verdict,
    /// All coroot pairings are rational.
    pub rational: Verdict,
    /// Only finitely many positive real roots pair to a negative integer.
    pub finite_negative: Verdict,
    /// `lambda` is regular and `lambda + rho` is positive on integral positive coroots.
    pub regular_dominant: Verdict,
}

impl ConditionReport {
    /// The four hypotheses of the formula (not the chamber condition) all pass.
    pub fn hypotheses_hold(&self) -> bool {
        self.imaginary.is_ok()
            && self.real.is_ok()
            && self.isotropy.is_ok()
            && self.rational.is_ok()
    }

    pub fn rows(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("imaginary-roots", &self.imaginary),
            ("real-roots", &self.real),
            ("isotropy", &self.isotropy),
            ("rationality", &self.rational),
            ("finite-negative-set", &self.finite_negative),
            ("regular-dominant", &self.regular_dominant),
        ]
    }

    pub fn summary(&self) -> String {
        self.rows()
            .iter()
            .map(|(name, v)| format!("{name}: {v}"))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn is_affine(datum: &CartanDatum) -> bool {
    datum.is_indecomposable() && datum.kind() == Some(Kind::Affine)
}

/// True when the table contains every positive real root.
fn real_roots_complete(datum: &CartanDatum, table: &RootTable) -> bool {
    datum.is_finite()
        && positive_real_roots(datum, table.bound() + 1).len() == table.real_positive().count()
}

fn nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Checks the hypotheses on all roots of height at most `bound`, exactly where
/// the root system allows it.
pub fn check_hypotheses(
    datum: &CartanDatum,
    table: &RootTable,
    lambda: &Weight,
    bound: u32,
) -> Result<ConditionReport> {
    datum.check_weight(lambda)?;
    if bound > table.bound() {
        return Err(Error::OutOfBounds {
            height: bound as i64,
            bound: table.bound(),
        });
    }
    let shifted = lambda.plus_rho();
    let complete = real_roots_complete(datum, table) && bound == table.bound();
    let upto = |ok: bool| {
        if ok && complete {
            Verdict::Holds
        } else {
            Verdict::HoldsUpTo(bound)
        }
    };
    let real: Vec<&RootLatticeVector> = table
        .real_positive()
        .filter(|b| b.height() <= bound as i64)
        .collect();

    let imaginary = if datum.is_finite() {
        Verdict::Holds
    } else if is_affine(datum) {
        let delta = datum.null_root()?;
        if datum.pair_weight_root(&shifted, delta).is_zero() {
            Verdict::Fails(delta.clone())
        } else {
            Verdict::Holds
        }
    } else {
        let mut verdict = Verdict::HoldsUpTo(bound);
        for (alpha, _) in table.positive_roots() {
            if alpha.height() > bound as i64 || table.is_real_positive(alpha) {
                continue;
            }
            let lhs = datum.pair_weight_root(&shifted, alpha) * Rational::from_integer(2);
            if lhs == Rational::from_integer(datum.norm(alpha)) {
                verdict = Verdict::Fails(alpha.clone());
                break;
            }
        }
        verdict
    };

    let mut real_verdict = upto(true);
    let mut not_positive = None;
    for beta in &real {
        let k = datum.coroot_pair(&shifted, beta)?;
        if nonpositive_integer(&k) && matches!(real_verdict, Verdict::Holds | Verdict::HoldsUpTo(_))
        {
            real_verdict = Verdict::Fails((*beta).clone());
        }
        if k.is_integer() && !k.is_positive() && not_positive.is_none() {
            not_positive = Some((*beta).clone());
        }
    }

    let isotropy = if is_affine(datum) {
        match affine_isotropy(datum, lambda) {
            Ok(group) => match group.generators.first() {
                Some(beta) => Verdict::Fails(beta.clone()),
                None => Verdict::Holds,
            },
            Err(Error::NullPairingZero) => {
                Verdict::NotCheckable("the null root pairs to zero with lambda + rho")
            }
            Err(e) => return Err(e),
        }
    } else {
        let zero = real
            .iter()
            .find(|b| datum.pair_weight_root(&shifted, b).is_zero());
        match zero {
            Some(beta) => Verdict::Fails((*beta).clone()),
            None if complete => Verdict::Holds,
            None => Verdict::NoWitnessUpTo(bound),
        }
    };

    let finite_negative = if datum.is_finite() {
        Verdict::Holds
    } else {
        Verdict::NoWitnessUpTo(bound)
    };

    let regular_dominant = match (&not_positive, &imaginary, &isotropy) {
        (Some(beta), _, _) => Verdict::Fails(beta.clone()),
        (None, Verdict::Fails(w), _) | (None, _, Verdict::Fails(w)) => Verdict::Fails(w.clone()),
        (None, _, Verdict::NotCheckable(why)) => Verdict::NotCheckable(why),
        (None, _, Verdict::NoWitnessUpTo(h)) => Verdict::NoWitnessUpTo(*h),
        _ => upto(true),
    };

    Ok(ConditionReport {
        imaginary,
        real: real_verdict,
        isotropy,
        rational: Verdict::Holds,
        finite_negative,
        regular_dominant,
    })
}

/// One step `lambda_k = lambda_{k-1} - n beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub root: RootLatticeVector,
    pub n: i64,
}

/// Breadth-first search for a chain `start = lambda_0, ..., lambda_l = start - target`
/// with `lambda_k = lambda_{k-1} - n_k beta_k`, `beta_k > 0`, `n_k >= 1` and
/// `2(beta_k, lambda_{k-1} + rho) = n_k (beta_k, beta_k)`.
///
/// Returns a shortest chain, or `None` if no chain stays inside the box.
pub fn kac_kazhdan_search(
    datum: &CartanDatum,
    table: &RootTable,
    start: &Weight,
    target: &RootLatticeVector,
    bound: u32,
) -> Result<Option<Vec<ChainStep>>> {
    datum.check_weight(start)?;
    if bound > table.bound() {
        return Err(Error::OutOfBounds {
            height: bound as i64,
            bound: table.bound(),
        });
    }
    if target.height() > bound as i64 || !target.is_nonnegative() {
        return Err(Error::OutOfBounds {
            height: target.height(),
            bound,
        });
    }
    let shifted = start.plus_rho();
    let roots = table.positive_roots();
    let zero = RootLatticeVector::zero(datum.rank());
    let mut parent: HashMap<RootLatticeVector, (RootLatticeVector, ChainStep)> = HashMap::new();
    let mut seen: BTreeSet<RootLatticeVector> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero.clone()]);
    while let Some(gamma) = queue.pop_front() {
        if &gamma == target {
            let mut chain = Vec::new();
            let mut cur = gamma;
            while let Some((prev, step)) = parent.get(&cur) {
                chain.push(step.clone());
                cur = prev.clone();
            }
            chain.reverse();
            return Ok(Some(chain));
        }
        // (beta, lambda_{k-1} + rho) = (beta, start + rho) - (beta, gamma)
        let room = target - &gamma;
        for (beta, _) in &roots {
            if !beta.le_componentwise(&room) {
                continue;
            }
            let pairing = datum.pair_weight_root(&shifted, beta)
                - Rational::from_integer(datum.form(beta, &gamma));
            let norm = datum.norm(beta);
            let candidates: Vec<i64> = if norm == 0 {
                if pairing.is_zero() {
                    (1..)
                        .take_while(|n| beta.scaled(*n).le_componentwise(&room))
                        .collect()
                } else {
                    Vec::new()
                }
            } else {
                let n = pairing * Rational::from_integer(2) / Rational::from_integer(norm);
                if n.is_integer() && n.is_positive() {
                    vec![n.to_integer()]
                } else {
                    Vec::new()
                }
            };
            for n in candidates {
                let mut next = gamma.clone();
                next.add_scaled(beta, n);
                if !next.le_componentwise(target) || !seen.insert(next.clone()) {
                    continue;
                }
                parent.insert(
                    next.clone(),
                    (
                        gamma.clone(),
                        ChainStep {
                            root: (*beta).clone(),
                            n,
                        },
                    ),
                );
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// The finite group `W_0(lambda) = {w : w . lambda = lambda}` of an affine datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyGroup {
    /// Positive real roots `beta` with `(beta, lambda + rho) = 0`.
    pub generators: Vec<RootLatticeVector>,
    /// All elements, sorted by (length, canon).
    pub elements: Vec<WeylElement>,
}

impl IsotropyGroup {
    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// The longest element of `w W_0(lambda)`.
    pub fn longest_in_coset(&self, weyl: &WeylGroup<'_>, w: &WeylElement) -> WeylElement {
        self.elements
            .iter()
            .map(|u| weyl.multiply(w, u))
            .max()
            .expect("the group contains the identity")
    }
}

/// Stabilizer of `lambda` under the shifted action, for an indecomposable
/// affine datum with `(delta, lambda + rho) != 0`.
///
/// Each real root is `beta_0 + k p delta` for a class representative `beta_0`
/// and period `p`; the equation `(beta, lambda + rho) = 0` is solved for `k`
/// directly, so no height bound is involved.
pub fn affine_isotropy(datum: &CartanDatum, lambda: &Weight) -> Result<IsotropyGroup> {
    datum.check_weight(lambda)?;
    if !is_affine(datum) {
        return Err(Error::NotAffine);
    }
    let delta = datum.null_root()?.clone();
    let shifted = lambda.plus_rho();
    let delta_pairing = datum.pair_weight_root(&shifted, &delta);
    if delta_pairing.is_zero() {
        return Err(Error::NullPairingZero);
    }
    let reach = 6 * delta.height() as u32;
    let mut classes: BTreeMap<RootLatticeVector, Vec<RootLatticeVector>> = BTreeMap::new();
    for beta in positive_real_roots(datum, reach) {
        let m = beta
            .coeffs()
            .iter()
            .zip(delta.coeffs())
            .map(|(b, d)| b.div_euclid(*d))
            .min()
            .unwrap_or(0);
        let mut key = beta.clone();
        key.add_scaled(&delta, -m);
        classes.entry(key).or_default().push(beta);
    }
    let mut generators = Vec::new();
    for members in classes.values() {
        let (first, second) = match members.as_slice() {
            [a, b, ..] => (a, b),
            _ => {
                return Err(Error::InternalInconsistency(format!(
                    "real root class of {} has no second member below height {reach}",
                    members[0]
                )))
            }
        };
        let gap = second - first;
        let period = gap
            .coeffs()
            .iter()
            .zip(delta.coeffs())
            .find(|(_, d)| **d != 0)
            .map(|(g, d)| g / d)
            .unwrap_or(0);
        if period <= 0 || gap != delta.scaled(period) {
            return Err(Error::InternalInconsistency(format!(
                "real roots {first} and {second} do not differ by a multiple of delta"
            )));
        }
        let k = -datum.pair_weight_root(&shifted, first)
            / (delta_pairing * Rational::from_integer(period));
        if k.is_integer() && !k.is_negative() {
            let mut beta = first.clone();
            beta.add_scaled(&delta, k.to_integer() * period);
            generators.push(beta);
        }
    }
    generators.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    let weyl = WeylGroup::new(datum);
    let reflections = generators
        .iter()
        .map(|b| weyl.reflection(b))
        .collect::<Result<Vec<_>>>()?;
    let mut elements: BTreeSet<WeylElement> = BTreeSet::new();
    elements.insert(weyl.identity());
    let mut frontier = vec![weyl.identity()];
    while let Some(x) = frontier.pop() {
        for s in &reflections {
            let y = weyl.multiply(s, &x);
            if elements.insert(y.clone()) {
                if elements.len() > ENUMERATION_LIMIT {
                    return Err(Error::EnumerationLimit(ENUMERATION_LIMIT));
                }
                frontier.push(y);
            }
        }
    }
    Ok(IsotropyGroup {
        generators,
        elements: elements.into_iter().collect(),
    })
}

/// Whether the hypotheses are verified before a formula is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypotheses {
    Verify,
    /// Skip the checks; the caller takes responsibility.
    Override,
}

/// Characters of modules with highest weights in `W(lambda) . lambda`.
pub struct Characters<'s, 'a> {
    sys: &'s IntegralSystem<'a>,
    table: &'s RootTable,
    kl: KlTable<'s, IntegralSystem<'a>>,
    partitions: BTreeMap<RootLatticeVector, i64>,
}

impl<'s, 'a> Characters<'s, 'a> {
    pub fn new(sys: &'s IntegralSystem<'a>, table: &'s RootTable) -> Result<Self> {
        Ok(Self {
            sys,
            table,
            kl: KlTable::new(sys),
            partitions: partition_counts(table, table.bound())?,
        })
    }

    pub fn system(&self) -> &'s IntegralSystem<'a> {
        self.sys
    }

    pub fn kl(&self) -> &KlTable<'s, IntegralSystem<'a>> {
        &self.kl
    }

    fn datum(&self) -> &'a CartanDatum {
        self.sys.datum()
    }

    fn check_bound(&self, bound: u32) -> Result<()> {
        if bound > self.table.bound() {
            return Err(Error::OutOfBounds {
                height: bound as i64,
                bound: self.table.bound(),
            });
        }
        Ok(())
    }

    /// `w . lambda` as a module weight anchored at `lambda`.
    pub fn dot(&self, w: &WeylElement) -> Result<ModuleWeight> {
        Ok(ModuleWeight::new(
            self.sys.lambda().clone(),
            self.sys.offset(w)?,
        ))
    }

    pub fn report(&self, bound: u32) -> Result<ConditionReport> {
        check_hypotheses(self.datum(), self.table, self.sys.lambda(), bound)
    }

    /// `ch M(w . lambda)` on the box.
    pub fn verma(&self, w: &WeylElement, bound: u32) -> Result<CharacterSeries> {
        self.check_bound(bound)?;
        let mut series = CharacterSeries::zero(self.dot(w)?, bound);
        for (g, slot) in series.coeffs.iter_mut() {
            *slot = self.partitions[g];
        }
        Ok(series)
    }

    /// `y >=_lambda w` whose highest weights lie in the box below `w . lambda`,
    /// with their offsets relative to `w . lambda`.
    fn above(&self, w: &WeylElement, bound: u32) -> Result<Vec<(WeylElement, RootLatticeVector)>> {
        if !self.sys.contains(w)? {
            return Err(Error::NotInIntegralWeylGroup {
                residue: w.word().to_vec(),
            });
        }
        let base = self.sys.offset(w)?;
        let cap = bound as i64 + base.height();
        let mut out = Vec::new();
        for y in self.sys.lambda_interval_above(w, cap)? {
            let shift = &self.sys.offset(&y)? - &base;
            if !shift.is_nonnegative() {
                return Err(Error::InternalInconsistency(format!(
                    "offset of [{}] is not below that of [{}]",
                    y.word_string(),
                    w.word_string()
                )));
            }
            out.push((y, shift));
        }
        Ok(out)
    }

    /// `sum_{y >=_lambda w} (-1)^{l_lambda(y) - l_lambda(w)} Q_{w,y}(1) ch M(y . lambda)`.
    fn alternating_sum(&self, w: &WeylElement, bound: u32) -> Result<CharacterSeries> {
        self.check_bound(bound)?;
        let above = self.above(w, bound)?;
        let mut series = CharacterSeries::zero(self.dot(w)?, bound);
        let verma = self.verma(&self.sys.weyl().identity(), bound)?;
        let lw = self.sys.lambda_length(w);
        for (y, shift) in above {
            let q = self.kl.q(w, &y)?.eval_one();
            let sign = if (self.sys.lambda_length(&y) - lw) % 2 == 0 {
                1
            } else {
                -1
            };
            series.add_shifted(&verma, &shift, sign * q);
        }
        if let Some((g, c)) = series.support().find(|(_, c)| *c < 0) {
            return Err(Error::NegativeMultiplicity {
                offset: g.clone(),
                value: c,
            });
        }
        Ok(series)
    }

    /// `ch L(w . lambda)` on the box, for `w` in `W(lambda)`.
    pub fn irreducible(
        &self,
        w: &WeylElement,
        bound: u32,
        policy: Hypotheses,
    ) -> Result<CharacterSeries> {
        if policy == Hypotheses::Verify {
            let report = self.report(bound)?;
            if !report.hypotheses_hold() {
                return Err(Error::HypothesesNotVerified(report.summary()));
            }
        }
        self.alternating_sum(w, bound)
    }

    /// `(y, P_{w,y}(1))` for every `y >=_lambda w` in the box, after checking that
    /// these multiplicities rebuild `ch M(w . lambda)` from irreducible characters.
    pub fn expand_verma(
        &self,
        w: &WeylElement,
        bound: u32,
        policy: Hypotheses,
    ) -> Result<Vec<(WeylElement, i64)>> {
        if policy == Hypotheses::Verify {
            let report = self.report(bound)?;
            if !report.hypotheses_hold() {
                return Err(Error::HypothesesNotVerified(report.summary()));
            }
        }
        let mut assembled = CharacterSeries::zero(self.dot(w)?, bound);
        let mut out = Vec::new();
        for (y, shift) in self.above(w, bound)? {
            let p = self.kl.p(w, &y)?.eval_one();
            let inner = self.alternating_sum(&y, bound - shift.height() as u32)?;
            assembled.add_shifted(&inner, &shift, p);
            out.push((y, p));
        }
        let verma = self.verma(w, bound)?;
        if assembled != verma {
            return Err(Error::InternalInconsistency(format!(
                "irreducible characters do not rebuild the Verma character of [{}]",
                w.word_string()
            )));
        }
        Ok(out)
    }

    /// `ch L(w . lambda)` for affine data with singular `lambda`, where `w` must be
    /// the longest element of `w W_0(lambda)`.
    pub fn nonregular_irreducible(
        &self,
        w: &WeylElement,
        bound: u32,
        policy: Hypotheses,
    ) -> Result<CharacterSeries> {
        let datum = self.datum();
        let group = affine_isotropy(datum, self.sys.lambda())?;
        if policy == Hypotheses::Verify {
            let shifted = self.sys.lambda().plus_rho();
            for beta in self.table.real_positive() {
                if beta.height() > bound as i64 {
                    continue;
                }
                let k = datum.coroot_pair(&shifted, beta)?;
                if k.is_integer() && k.is_negative() {
                    return Err(Error::HypothesesNotVerified(format!(
                        "coroot of {beta} pairs to {k} with lambda + rho"
                    )));
                }
            }
        }
        let longest = group.longest_in_coset(self.sys.weyl(), w);
        if &longest != w {
            return Err(Error::NotLongestInCoset {
                hint: longest.word().to_vec(),
            });
        }
        self.alternating_sum(w, bound)
    }
}
