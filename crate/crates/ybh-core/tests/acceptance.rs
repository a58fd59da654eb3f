//! Acceptance suite: one test per criterion, each ending in a single
//! pass/fail line (printed with `--nocapture`; the cargo status line per
//! test mirrors it). Arithmetic is exact, so every tolerance below is
//! equality in Q[y, y^-1], up to the documented canonicalization where a
//! value is only determined up to units. Runtime budgets are asserted
//! where a criterion pins one.

use std::sync::{Mutex, MutexGuard};
use std::time::Instant;
use ybh_core::differential::{d_psi, d_skein};
use ybh_core::homology::{
    annihilator_report, check_alpha_cocycle, cohomology, conjecture_report, homology,
    closed_form_coefficient, special_coefficient, special_image, AnnihilatorReport,
};
use ybh_core::skein::{
    check_loop_identities, check_skein, check_stl_relations, check_ybe, identity_pow, maps,
};
use ybh_core::{differential, LaurentPoly, PivotStrategy, Rational, RingMatrix, SmithNormalForm};

/// The runtime budgets below are wall-clock asserts, so the criteria run
/// one at a time; a poisoned lock (criterion 16 fails by design) still
/// hands the guard over.
fn serial() -> MutexGuard<'static, ()> {
    static LOCK: Mutex<()> = Mutex::new(());
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

fn pass(id: usize, what: &str) {
    println!("acceptance c{id:02} PASS  {what}");
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn yd(a: i64, b: i64) -> LaurentPoly {
    &LaurentPoly::y_pow(a) - &LaurentPoly::y_pow(b)
}

#[test]
fn acceptance_c01_skein_identity() {
    let _serial = serial();
    assert!(check_skein(), "acceptance c01 FAIL: R != 1 + beta . alpha");
    let sk = maps();
    assert_eq!(
        sk.r,
        &identity_pow(2) + &sk.beta.compose(&sk.alpha),
        "acceptance c01 FAIL: explicit recomposition differs"
    );
    pass(1, "R = 1 + beta . alpha exactly");
}

#[test]
fn acceptance_c02_yang_baxter_equation() {
    let _serial = serial();
    assert!(check_ybe(&maps().r), "acceptance c02 FAIL: YBE violated");
    pass(2, "(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) exactly");
}

#[test]
fn acceptance_c03_loop_identities() {
    let _serial = serial();
    assert!(check_loop_identities(), "acceptance c03 FAIL: a loop identity is violated");
    let sk = maps();
    let mut loop_value = RingMatrix::zeros(1, 1);
    loop_value.set(0, 0, -&p("y^2 + 1"));
    assert_eq!(
        sk.alpha.compose(&sk.beta),
        loop_value,
        "acceptance c03 FAIL: alpha . beta != -(y^2 + 1)"
    );
    pass(3, "alpha beta = -(y^2+1); cup-over-cap slides give xi, zeta; xi zeta = y^2");
}

#[test]
fn acceptance_c04_skew_temperley_lieb() {
    let _serial = serial();
    for n in 2..=6 {
        assert!(
            check_stl_relations(n),
            "acceptance c04 FAIL: skew Temperley-Lieb relations broken on {n} strands"
        );
    }
    pass(4, "skew Temperley-Lieb relations hold on 2..6 strands");
}

#[test]
fn acceptance_c05_chain_condition_through_8() {
    let _serial = serial();
    let t0 = Instant::now();
    for n in 1..=8 {
        assert!(
            differential(n).compose(&differential(n + 1)).is_zero(),
            "acceptance c05 FAIL: d_{n} . d_{} != 0",
            n + 1
        );
    }
    assert!(t0.elapsed().as_secs() < 60, "acceptance c05 FAIL: over the 1 minute budget");
    pass(5, "d_n . d_(n+1) = 0 for 1 <= n <= 8");
}

#[test]
fn acceptance_c06_constructions_agree_through_8() {
    let _serial = serial();
    let t0 = Instant::now();
    for n in 1..=8 {
        let built = differential(n);
        assert_eq!(d_skein(n), *built, "acceptance c06 FAIL: skein != curtain at degree {n}");
        assert_eq!(d_psi(n), *built, "acceptance c06 FAIL: psi != curtain at degree {n}");
    }
    assert!(t0.elapsed().as_secs() < 120, "acceptance c06 FAIL: over the 2 minute budget");
    pass(6, "d_skein = d_curtain = d_psi for 1 <= n <= 8");
}

#[test]
fn acceptance_c07_low_differentials_vanish() {
    let _serial = serial();
    assert!(differential(1).is_zero(), "acceptance c07 FAIL: d_1 != 0");
    assert!(differential(2).is_zero(), "acceptance c07 FAIL: d_2 != 0");
    pass(7, "d_1 = 0 and d_2 = 0");
}

#[test]
fn acceptance_c08_d3_columns() {
    let _serial = serial();
    let mut expected = RingMatrix::zeros(4, 8);
    for (row, val) in [(0, yd(0, 4)), (1, yd(2, 0)), (2, yd(4, 2))] {
        expected.set(row, 1, val);
    }
    for (row, val) in [(1, yd(0, 2)), (2, yd(2, 4)), (3, yd(4, 0))] {
        expected.set(row, 3, val);
    }
    assert_eq!(
        *differential(3),
        expected,
        "acceptance c08 FAIL: d_3 differs from the two-column table"
    );
    pass(8, "d_3 has exactly the two tabulated nonzero columns");
}

#[test]
fn acceptance_c09_d4_table() {
    let _serial = serial();
    // (row, col, value) with columns indexed by words of V x V x V x V;
    // every entry and every zero row/column is asserted via full equality.
    let entries: [(usize, usize, LaurentPoly); 22] = [
        (0, 1, yd(6, 2)),
        (0, 2, yd(0, 4)),
        (2, 1, yd(2, 4)),
        (2, 2, yd(2, 0)),
        (2, 5, yd(4, 2)),
        (2, 6, yd(0, 2)),
        (4, 1, yd(4, 6)),
        (4, 2, yd(4, 2)),
        (4, 5, yd(2, 4)),
        (4, 6, yd(2, 4)),
        (4, 9, yd(4, 0)),
        (5, 5, yd(4, 2)),
        (5, 7, yd(2, 4)),
        (5, 9, yd(0, 2)),
        (5, 11, yd(2, 0)),
        (6, 5, yd(2, 4)),
        (6, 6, yd(4, 0)),
        (6, 7, yd(4, 6)),
        (6, 9, yd(2, 4)),
        (6, 11, yd(4, 2)),
        (7, 7, yd(6, 2)),
        (7, 11, yd(0, 4)),
    ];
    let mut expected = RingMatrix::zeros(8, 16);
    for (r, c, v) in entries {
        expected.set(r, c, v);
    }
    assert_eq!(
        *differential(4),
        expected,
        "acceptance c09 FAIL: d_4 differs from the tabulated transpose"
    );
    pass(9, "d_4 matches the tabulated entries, zero rows included");
}

#[test]
fn acceptance_c10_snf_of_d4() {
    let _serial = serial();
    let snf = SmithNormalForm::compute(&differential(4));
    let nonunits: Vec<LaurentPoly> =
        snf.nonunit_factors().iter().map(|f| f.canonicalize()).collect();
    assert_eq!(
        nonunits,
        vec![p("y^2 - 1"), p("y^2 - 1"), p("y^4 - 1"), p("y^4 - 1")],
        "acceptance c10 FAIL: snf(d_4) nonunit factors differ"
    );
    pass(10, "snf(d_4) nonunit invariant factors are y^2-1, y^2-1, y^4-1, y^4-1");
}

#[test]
fn acceptance_c11_low_homology() {
    let _serial = serial();
    let t0 = Instant::now();
    let h1 = homology(1, 2);
    assert!(
        h1.free_rank == 2 && h1.torsion.is_empty(),
        "acceptance c11 FAIL: H_1 = {h1}, expected k^2"
    );
    let h2 = homology(2, 3);
    assert!(
        h2.free_rank == 2 && h2.torsion == vec![p("y^2 - 1"), p("y^4 - 1")],
        "acceptance c11 FAIL: H_2 = {h2}"
    );
    let h3 = homology(3, 4);
    assert!(
        h3.free_rank == 2
            && h3.torsion == vec![p("y^2 - 1"), p("y^2 - 1"), p("y^4 - 1"), p("y^4 - 1")],
        "acceptance c11 FAIL: H_3 = {h3}"
    );
    assert!(t0.elapsed().as_secs() < 5, "acceptance c11 FAIL: over the 5 second budget");
    pass(11, "H_1 = k^2; H_2 = k^2 (+) k/(y^2-1) (+) k/(y^4-1); H_3 doubles the torsion");
}

#[test]
fn acceptance_c12_low_cohomology_direct_and_uct() {
    let _serial = serial();
    let t0 = Instant::now();
    // cohomology() recomputes through the transposed complex and panics
    // if the universal-coefficient description disagrees, so calling it
    // is already the two-route comparison.
    let c2 = cohomology(2);
    assert!(
        c2.free_rank == 2 && c2.torsion.is_empty(),
        "acceptance c12 FAIL: H^2 = {c2}, expected k^2"
    );
    let c3 = cohomology(3);
    assert!(
        c3.free_rank == 2 && c3.torsion == vec![p("y^2 - 1"), p("y^4 - 1")],
        "acceptance c12 FAIL: H^3 = {c3}"
    );
    assert!(t0.elapsed().as_secs() < 5, "acceptance c12 FAIL: over the 5 second budget");
    pass(12, "H^2 = k^2 and H^3 = k^2 (+) k/(y^2-1) (+) k/(y^4-1), direct = UCT");
}

#[test]
fn acceptance_c13_alpha_cocycle() {
    let _serial = serial();
    assert!(check_alpha_cocycle(), "acceptance c13 FAIL: alpha . d_3 != 0 or alpha vanishes");
    assert_eq!(
        maps().alpha.get(0, 1),
        -&LaurentPoly::y_pow(1),
        "acceptance c13 FAIL: alpha(e_1 x e_2) != -y"
    );
    pass(13, "alpha is a 2-cocycle with alpha(e_1 x e_2) = -y != 0");
}

#[test]
fn acceptance_c14_constant_words_are_cycles_through_9() {
    let _serial = serial();
    let t0 = Instant::now();
    for n in 2..=9 {
        for j in [1u8, 2] {
            assert!(
                special_image(n, j, 0).is_zero(),
                "acceptance c14 FAIL: d_{n}(e_({j},0)) != 0"
            );
        }
    }
    assert!(t0.elapsed().as_secs() < 60, "acceptance c14 FAIL: over the 1 minute budget");
    pass(14, "d_n(e_(j,0)) = 0 for 2 <= n <= 9, j = 1, 2");
}

/// The evaluation tables as previously tabulated, encoded verbatim for
/// comparison. Where these disagree with the directly computed columns,
/// the computed value is ground truth and the divergence is printed.
fn tabulated_coefficient(n: usize, j: u8, i: usize) -> LaurentPoly {
    if i == 0 {
        return LaurentPoly::zero();
    }
    let (ni, ii) = (n as i64, i as i64);
    if n % 2 == 1 {
        match (j, i % 2 == 1) {
            (1, true) if i == 1 => LaurentPoly::y_pow(2),
            (1, true) => yd(0, 2 * ii - 2),
            (1, false) => yd(2 * ii - 2, 2),
            (2, true) if i == 1 => yd(2 * ni - 2, 0),
            (2, true) => yd(2, 2 * ni - 2 * ii),
            (2, false) => yd(2 * ni - 2 * ii, 0),
            _ => unreachable!(),
        }
    } else {
        match (j, i % 2 == 1) {
            (1, true) => yd(2 * ii, 2),
            (1, false) => yd(0, 2 * ii - 4),
            (2, true) => yd(2, 2 * (ni - ii + 2)),
            (2, false) => yd(2 * (ni - ii + 2), 0),
            _ => unreachable!(),
        }
    }
}

#[test]
fn acceptance_c15_closed_forms_against_brute_force() {
    let _serial = serial();
    let t0 = Instant::now();
    let mut divergences = Vec::new();
    for n in 4..=9 {
        for j in [1u8, 2] {
            for i in 0..=n {
                let brute = special_coefficient(n, j, i);
                assert_eq!(
                    brute,
                    closed_form_coefficient(n, j, i),
                    "acceptance c15 FAIL: closed form differs from the computed column at n={n} j={j} i={i}"
                );
                let tabulated = tabulated_coefficient(n, j, i);
                if tabulated != brute {
                    divergences.push(format!(
                        "  c15 divergence at n={n} j={j} i={i}: computed {brute} (ground truth), tabulated {tabulated}"
                    ));
                }
            }
        }
    }
    assert!(t0.elapsed().as_secs() < 120, "acceptance c15 FAIL: over the 2 minute budget");
    pass(
        15,
        &format!(
            "closed forms match every computed d_n column for 4 <= n <= 9; {} tabulated entries diverge and are reported below with computed values as ground truth",
            divergences.len()
        ),
    );
    for d in &divergences {
        println!("{d}");
    }
}

#[test]
fn acceptance_c16_annihilators() {
    let _serial = serial();
    let quart = p("y^4 - 1");
    for n in [5usize, 7] {
        match annihilator_report(n) {
            AnnihilatorReport::Odd { family1, family2 } => {
                assert!(
                    family1 == quart && family2 == quart,
                    "acceptance c16 FAIL: odd degree {n} families gcd to {family1} and {family2}, expected y^4 - 1"
                );
            }
            other => panic!("acceptance c16 FAIL: degree {n} is odd, got {other:?}"),
        }
    }
    for n in [4usize, 6] {
        match annihilator_report(n) {
            AnnihilatorReport::Even { boundary_unit, annihilator } => {
                assert!(
                    boundary_unit && annihilator == p("y^2 - 1"),
                    "acceptance c16 FAIL (even half): the expectation asserts that a unit \
                     coefficient carries e_(1,0) into im d_{} and that the class of e_(2,0) is \
                     annihilated by y^2 - 1. The directly computed differential columns \
                     contradict both at n = {n}: computed boundary_unit = {boundary_unit} (the \
                     coefficient pairing e_(1,0) with e_(1,1) is 0, and no other coefficient in \
                     that family is a unit, so e_(1,0) is not a boundary), and the computed \
                     annihilator of e_(2,0) is {annihilator}, i.e. y^4 - 1. The odd half \
                     (n = 5, 7) passed with both family gcds equal to y^4 - 1. Computed values \
                     are ground truth.",
                    n + 1
                );
            }
            other => panic!("acceptance c16 FAIL: degree {n} is even, got {other:?}"),
        }
    }
    pass(16, "odd-degree family gcds are y^4 - 1; even-degree boundary/annihilator claims hold");
}

#[test]
fn acceptance_c17_conjecture_through_7() {
    let _serial = serial();
    let t0 = Instant::now();
    let rows = conjecture_report(7);
    for r in &rows {
        println!(
            "  c17 degree {}: a_n = {}, s_(n-2) = {}, agree = {}{}",
            r.degree,
            r.prediction.a_n,
            r.prediction.s_n_minus_2,
            r.agrees,
            if r.degree <= 3 { " (asserted)" } else { " (informational)" }
        );
        if r.degree <= 3 {
            assert!(
                r.agrees,
                "acceptance c17 FAIL: proved degree {} disagrees: predicted {}, computed {}",
                r.degree, r.prediction.predicted, r.computed
            );
        }
    }
    assert!(t0.elapsed().as_secs() < 600, "acceptance c17 FAIL: over the 10 minute budget");
    pass(17, "conjecture asserted at degrees 2, 3; degrees 4..7 computed and reported");
}

#[test]
fn acceptance_c18_randomized_property_suites() {
    let _serial = serial();
    use rand::{Rng, SeedableRng};
    let t0 = Instant::now();
    let seed: u64 = std::env::var("YBH_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_cafe);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    // Random Laurent polynomial with exponent span (euclid norm) <= 4,
    // in the coefficient texture of the differentials themselves.
    let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| -> LaurentPoly {
        let base: i64 = rng.random_range(-3..=3);
        let terms = rng.random_range(1..=3);
        let mut poly = LaurentPoly::zero();
        for _ in 0..terms {
            let offset: i64 = rng.random_range(0..=4);
            let c = [-2, -1, -1, 1, 1, 2][rng.random_range(0..6)];
            poly += &LaurentPoly::monomial(base + offset, Rational::from_integer(c.into()));
        }
        poly
    };

    // Ring axioms on 500 random triples.
    for _ in 0..500 {
        let (a, b, c) = (rand_poly(&mut rng), rand_poly(&mut rng), rand_poly(&mut rng));
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c), "acceptance c18 FAIL: + not associative");
        assert_eq!(&a + &b, &b + &a, "acceptance c18 FAIL: + not commutative");
        assert_eq!(&a * &b, &b * &a, "acceptance c18 FAIL: * not commutative");
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "acceptance c18 FAIL: * not associative");
        assert_eq!(
            &a * &(&b + &c),
            &(&a * &b) + &(&a * &c),
            "acceptance c18 FAIL: * does not distribute"
        );
        assert_eq!(&a * &LaurentPoly::one(), a, "acceptance c18 FAIL: 1 is not neutral");
        assert!((&a - &a).is_zero(), "acceptance c18 FAIL: a - a != 0");
    }

    // Euclidean division contract on 500 random pairs.
    let mut checked = 0;
    while checked < 500 {
        let (a, b) = (rand_poly(&mut rng), rand_poly(&mut rng));
        if b.is_zero() {
            continue;
        }
        let (q, r) = a.euclid_div(&b);
        assert_eq!(a, &(&q * &b) + &r, "acceptance c18 FAIL: a != q b + r");
        assert!(
            r.is_zero() || r.euclid_norm() < b.euclid_norm(),
            "acceptance c18 FAIL: remainder norm not reduced"
        );
        if !(a.is_zero() && b.is_zero()) {
            let g = a.gcd(&b);
            assert!(
                g.divides(&a) && g.divides(&b),
                "acceptance c18 FAIL: gcd does not divide"
            );
        }
        checked += 1;
    }

    // SNF soundness on 500 random matrices up to 6 x 6. compute() itself
    // re-multiplies U A V = D and checks the divisibility chain; on top,
    // assert the transforms are unimodular.
    for _ in 0..500 {
        let rows = rng.random_range(1..=6);
        let cols = rng.random_range(1..=6);
        let mut a = RingMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.random_range(0..3) > 0 {
                    a.set(i, j, rand_poly(&mut rng));
                }
            }
        }
        let strategy = if rng.random_range(0..2) == 0 {
            PivotStrategy::MinNorm
        } else {
            PivotStrategy::FirstNonzero
        };
        let snf = SmithNormalForm::compute_with(&a, strategy);
        assert!(snf.u.is_unimodular(), "acceptance c18 FAIL: U not unimodular");
        assert!(snf.v.is_unimodular(), "acceptance c18 FAIL: V not unimodular");
    }

    assert!(t0.elapsed().as_secs() < 60, "acceptance c18 FAIL: over the 1 minute budget");
    pass(18, "ring axioms, Euclidean contract, SNF soundness on 500+ seeded random cases");
}
