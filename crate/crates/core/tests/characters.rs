use kmchar_core::characters::{
    affine_isotropy, kac_kazhdan_search, verma_character, Characters, Hypotheses, Verdict,
};
use kmchar_core::coxeter;
use kmchar_core::integral::IntegralSystem;
use kmchar_core::oracles;
use kmchar_core::roots::{positive_real_roots, RootTable};
use kmchar_core::{CartanDatum, Error, ModuleWeight, Rational, RootLatticeVector, Weight};

fn datum(m: &[&[i64]]) -> CartanDatum {
    CartanDatum::new(m.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn rv(v: &[i64]) -> RootLatticeVector {
    RootLatticeVector::new(v.to_vec())
}

fn weight(coords: &[(i64, i64)]) -> Weight {
    Weight::new(coords.iter().map(|&(n, d)| Rational::new(n, d)).collect())
}

fn owned_roots(table: &RootTable) -> Vec<(RootLatticeVector, i64)> {
    table
        .positive_roots()
        .into_iter()
        .map(|(r, m)| (r.clone(), m))
        .collect()
}

#[test]
fn verma_matches_brute_partitions() {
    for (m, h) in [
        (datum(&[&[2, -1], &[-1, 2]]), 5),
        (datum(&[&[2, -1], &[-3, 2]]), 5),
        (datum(&[&[2, -2], &[-2, 2]]), 6),
        (datum(&[&[2, -3], &[-3, 2]]), 5),
    ] {
        let table = RootTable::new(&m, h).unwrap();
        let ch = verma_character(&table, &ModuleWeight::at(Weight::zero(m.rank())), h).unwrap();
        let roots = owned_roots(&table);
        for (g, c) in ch.rows() {
            assert_eq!(c, oracles::kostant_brute(&roots, g), "{g}");
        }
    }
}

#[test]
fn peterson_matches_denominator_identity() {
    for (m, h) in [
        (datum(&[&[2, -2], &[-2, 2]]), 8),
        (datum(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]), 6),
        (datum(&[&[2, -4], &[-1, 2]]), 7),
        (datum(&[&[2, -3], &[-3, 2]]), 6),
        (datum(&[&[2, -1], &[-3, 2]]), 5),
    ] {
        let table = RootTable::new(&m, h).unwrap();
        let peterson: Vec<_> = owned_roots(&table);
        let oracle: Vec<_> = oracles::denominator_multiplicities(&m, h)
            .into_iter()
            .collect();
        let mut peterson_sorted = peterson.clone();
        peterson_sorted.sort();
        assert_eq!(peterson_sorted, oracle);
    }
    let aff = datum(&[&[2, -2], &[-2, 2]]);
    let table = RootTable::new(&aff, 12).unwrap();
    for k in 1..=6 {
        assert_eq!(table.mult(&rv(&[k, k])).unwrap(), 1);
    }
}

#[test]
fn irreducible_matches_freudenthal() {
    for (m, lambdas) in [
        (
            datum(&[&[2, -1], &[-1, 2]]),
            vec![[0, 0], [1, 0], [1, 1], [2, 1]],
        ),
        (
            datum(&[&[2, -2], &[-1, 2]]),
            vec![[0, 0], [0, 1], [1, 1], [2, 0]],
        ),
        (datum(&[&[2, -1], &[-3, 2]]), vec![[0, 0], [1, 0], [0, 1]]),
    ] {
        let h = 5;
        let roots = positive_real_roots(&m, 20);
        let table = RootTable::new(&m, h).unwrap();
        for l in lambdas {
            let lambda = Weight::from_integers(&l);
            let sys = IntegralSystem::new(&m, lambda.clone(), h).unwrap();
            let chars = Characters::new(&sys, &table).unwrap();
            let ch = chars
                .irreducible(&sys.weyl().identity(), h, Hypotheses::Verify)
                .unwrap();
            let oracle = oracles::freudenthal(&m, &roots, &lambda, h);
            for (g, c) in ch.rows() {
                assert_eq!(c, oracle[g], "lambda {lambda}, offset {g}");
            }
        }
    }
}

fn inverse_pair(m: &CartanDatum, lambda: Weight, h: u32, max_w: usize) -> usize {
    let table = RootTable::new(m, h).unwrap();
    let sys = IntegralSystem::new(m, lambda, 2 * h).unwrap();
    let chars = Characters::new(&sys, &table).unwrap();
    let ws = sys
        .lambda_interval_above(&sys.weyl().identity(), h as i64)
        .unwrap();
    let mut checked = 0;
    for w in ws.iter().take(max_w) {
        let terms = chars.expand_verma(w, h, Hypotheses::Verify).unwrap();
        assert_eq!(terms[0], (w.clone(), 1));
        checked += 1;
    }
    checked
}

#[test]
fn verma_and_irreducible_are_inverse() {
    assert!(inverse_pair(&datum(&[&[2]]), Weight::zero(1), 6, 10) >= 2);
    assert!(inverse_pair(&datum(&[&[2, -1], &[-1, 2]]), Weight::zero(2), 5, 10) >= 6);
    let a3 = datum(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    assert!(inverse_pair(&a3, weight(&[(1, 2), (0, 1), (1, 2)]), 5, 10) >= 2);
    assert!(inverse_pair(&datum(&[&[2, -2], &[-2, 2]]), Weight::zero(2), 5, 10) >= 3);
}

#[test]
fn half_weight_irreducible() {
    let a3 = datum(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    let lambda = weight(&[(1, 2), (0, 1), (1, 2)]);
    let table = RootTable::new(&a3, 3).unwrap();
    let sys = IntegralSystem::new(&a3, lambda, 6).unwrap();
    let chars = Characters::new(&sys, &table).unwrap();
    let e = sys.weyl().identity();
    let ch = chars.irreducible(&e, 3, Hypotheses::Verify).unwrap();
    let verma = chars.verma(&e, 3).unwrap();
    assert_eq!(ch.coeff(&rv(&[0, 1, 0])), 0);
    // only s_{alpha2} contributes inside height 3
    let alpha2 = rv(&[0, 1, 0]);
    for (g, c) in ch.rows() {
        let below = g - &alpha2;
        let sub = if below.is_nonnegative() {
            verma.coeff(&below)
        } else {
            0
        };
        assert_eq!(c, verma.coeff(g) - sub, "{g}");
    }
}

#[test]
fn kac_kazhdan_agrees_with_bruhat() {
    let h = 6;
    for (m, lambda) in [
        (datum(&[&[2, -1], &[-1, 2]]), Weight::zero(2)),
        (datum(&[&[2, -1], &[-1, 2]]), weight(&[(1, 2), (1, 2)])),
        (
            datum(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            weight(&[(1, 2), (0, 1), (1, 2)]),
        ),
    ] {
        let table = RootTable::new(&m, h).unwrap();
        let sys = IntegralSystem::new(&m, lambda.clone(), 2 * h).unwrap();
        let chars = Characters::new(&sys, &table).unwrap();
        assert!(chars.report(h).unwrap().regular_dominant.is_ok());
        let box_elems = sys
            .lambda_interval_above(&sys.weyl().identity(), h as i64)
            .unwrap();
        for x in &box_elems {
            let start = chars.dot(x).unwrap();
            for y in &box_elems {
                let target = chars.dot(y).unwrap();
                let diff = &target.offset - &start.offset;
                let leq = coxeter::bruhat_leq(&sys, x, y).unwrap();
                if !diff.is_nonnegative() {
                    assert!(!leq);
                    continue;
                }
                let found = kac_kazhdan_search(&m, &table, &start.weight(&m), &diff, h)
                    .unwrap()
                    .is_some();
                assert_eq!(found, leq, "x={:?} y={:?}", x.word(), y.word());
            }
        }
    }
}

#[test]
fn affine_nonregular() {
    let aff = datum(&[&[2, -2], &[-2, 2]]);
    for c in [(1, 2), (1, 3), (5, 2), (2, 3)] {
        // lambda + rho = (c, 0)
        let lambda = Weight::new(vec![
            Rational::new(c.0, c.1) - 1,
            Rational::from_integer(-1),
        ]);
        let group = affine_isotropy(&aff, &lambda).unwrap();
        assert_eq!(group.generators, vec![rv(&[0, 1])]);
        let h = 5;
        let table = RootTable::new(&aff, h).unwrap();
        let sys = IntegralSystem::new(&aff, lambda, 4 * h).unwrap();
        let chars = Characters::new(&sys, &table).unwrap();
        let e = sys.weyl().identity();
        let s1 = sys.weyl().from_word(&[1]).unwrap();
        assert_eq!(
            chars.nonregular_irreducible(&e, h, Hypotheses::Verify),
            Err(Error::NotLongestInCoset { hint: vec![1] })
        );
        let ch = chars
            .nonregular_irreducible(&s1, h, Hypotheses::Verify)
            .unwrap();
        assert_eq!(ch.coeff(&rv(&[0, 0])), 1);
        assert!(ch.rows().iter().all(|(_, c)| *c >= 0));
        let report = chars.report(h).unwrap();
        assert_eq!(report.isotropy, Verdict::Fails(rv(&[0, 1])));
    }
}

#[test]
fn trivial_isotropy_nonregular_matches_regular() {
    let aff = datum(&[&[2, -2], &[-2, 2]]);
    let lambda = weight(&[(-1, 2), (-1, 2)]);
    let h = 5;
    let table = RootTable::new(&aff, h).unwrap();
    let sys = IntegralSystem::new(&aff, lambda, 4 * h).unwrap();
    let chars = Characters::new(&sys, &table).unwrap();
    let e = sys.weyl().identity();
    assert_eq!(
        chars
            .nonregular_irreducible(&e, h, Hypotheses::Verify)
            .unwrap(),
        chars.irreducible(&e, h, Hypotheses::Verify).unwrap()
    );
}

#[test]
fn unverified_hypotheses_are_rejected() {
    let a1 = datum(&[&[2]]);
    let lambda = Weight::from_integers(&[-1]);
    let table = RootTable::new(&a1, 3).unwrap();
    let sys = IntegralSystem::new(&a1, lambda, 3).unwrap();
    let chars = Characters::new(&sys, &table).unwrap();
    let e = sys.weyl().identity();
    assert!(matches!(
        chars.irreducible(&e, 3, Hypotheses::Verify),
        Err(Error::HypothesesNotVerified(_))
    ));
}

#[test]
fn kl_matches_permutation_oracle() {
    let a3 = datum(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    let sys = IntegralSystem::new(&a3, Weight::zero(3), 6).unwrap();
    let table = kmchar_core::hecke::KlTable::new(&sys);
    let mut oracle = oracles::PermKl::new(4);
    let elems = sys.weyl().elements_up_to(6);
    assert_eq!(elems.len(), 24);
    for x in &elems {
        for w in &elems {
            let px = oracles::perm_of_word(4, x.word());
            let pw = oracles::perm_of_word(4, w.word());
            assert_eq!(table.p(x, w).unwrap(), oracle.p(&px, &pw));
        }
    }
}
