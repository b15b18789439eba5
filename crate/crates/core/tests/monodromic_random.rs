use kmchar_core::hecke::monodromic::within_degree_bound;
use kmchar_core::hecke::{MElement, Monodromic, ResidueClass, ThetaKind};
use kmchar_core::laurent::LaurentPoly;
use kmchar_core::weyl::WeylElement;
use kmchar_core::{CartanDatum, Rational, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn data() -> Vec<CartanDatum> {
    [
        vec![vec![2]],
        vec![vec![2, -1], vec![-1, 2]],
        vec![vec![2, -2], vec![-1, 2]],
        vec![vec![2, -1], vec![-3, 2]],
        vec![vec![2, -2], vec![-2, 2]],
        vec![vec![2, -3], vec![-3, 2]],
        vec![vec![2, 0], vec![0, 2]],
        vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        vec![
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ],
    ]
    .into_iter()
    .map(|m| CartanDatum::new(m).unwrap())
    .collect()
}

fn random_class(rng: &mut ChaCha8Rng, rank: usize) -> ResidueClass {
    if rng.gen_bool(0.4) {
        return ResidueClass::integral(rank);
    }
    let coords = (0..rank)
        .map(|_| {
            let d = rng.gen_range(1..=5);
            Rational::new(rng.gen_range(0..d), d)
        })
        .collect();
    ResidueClass::of(&Weight::new(coords))
}

fn random_element(rng: &mut ChaCha8Rng, mono: &Monodromic<'_>, max_len: usize) -> WeylElement {
    let rank = mono.weyl().datum().rank();
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank)).collect();
    mono.weyl().from_word(&word).unwrap()
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        p.add_term(2 * rng.gen_range(-3..=3), rng.gen_range(-4..=4));
    }
    p
}

fn random_m(rng: &mut ChaCha8Rng, mono: &Monodromic<'_>, class: &ResidueClass) -> MElement {
    let mut m = MElement::zero(class.clone());
    for _ in 0..rng.gen_range(1..=3) {
        let w = random_element(rng, mono, 6);
        m.add_term(w, &random_poly(rng));
    }
    m
}

fn check_case(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = data();
    let d = &all[rng.gen_range(0..all.len())];
    let mono = Monodromic::new(d);
    let weyl = mono.weyl();
    let class = random_class(&mut rng, d.rank());
    let m = random_m(&mut rng, &mono, &class);
    let i = rng.gen_range(0..d.rank());

    for (a, b) in [
        (ThetaKind::Star, ThetaKind::Shriek),
        (ThetaKind::Shriek, ThetaKind::Star),
    ] {
        let there = mono.theta_m(a, i, &m).unwrap();
        assert_eq!(mono.theta_m(b, i, &there).unwrap(), m, "seed {seed}");
        assert_eq!(
            mono.theta_m(a, i, &m.kappa()).unwrap(),
            there.kappa(),
            "seed {seed}"
        );
    }

    let barred = mono.bar_m(&m).unwrap();
    assert_eq!(mono.bar_m(&barred).unwrap(), m, "seed {seed}");
    assert_eq!(
        mono.bar_m(&m.kappa()).unwrap(),
        barred.kappa(),
        "seed {seed}"
    );

    let w = random_element(&mut rng, &mono, 6);
    let bw = mono.bar_basis(&class, &w).unwrap();
    for (y, c) in bw.terms() {
        if y == &w {
            assert_eq!(*c, LaurentPoly::q_power(-(w.length() as i32), 1));
        } else {
            assert!(weyl.bruhat_leq(y, &w) && y.length() < w.length());
        }
    }

    let c = mono.canonical_c(&class, &w).unwrap();
    assert_eq!(c.coeff(&w), LaurentPoly::one());
    for (y, p) in c.terms() {
        assert!(weyl.bruhat_leq(y, &w));
        if y != &w {
            assert!(
                within_degree_bound(p, w.length() - y.length()),
                "seed {seed}"
            );
        }
    }
    assert_eq!(
        mono.bar_m(&c).unwrap(),
        c.shift(-2 * w.length() as i32),
        "seed {seed}"
    );
    assert_eq!(
        c.kappa(),
        *mono.canonical_c(&class.negate(), &w).unwrap(),
        "seed {seed}"
    );

    let base = random_element(&mut rng, &mono, 4);
    let window = mono.window_above(&base, 2);
    let dual = mono.dual_d(&class, &base, &window).unwrap();
    for y in &window {
        let cy = mono.canonical_c(&class, y).unwrap();
        let expected = if *y == base {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
        assert_eq!(Monodromic::pairing(&dual, &cy), expected, "seed {seed}");
    }
}

#[test]
fn randomized_invariants() {
    for seed in 0..240 {
        check_case(seed);
    }
}
