//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every comparison here is exact (surd ordering or certified enclosures);
//! the only tolerances are the ones stated in the criteria themselves.

use std::time::Instant;

use num::bigint::BigInt;
use num::traits::One;

use cfspec_core::bounds::{eval_gm, fk_radicand_constant, gk_radicand_constant};
use cfspec_core::cf::{psi, quality_sweep, CFExpansion};
use cfspec_core::exact::bigrat::{rat_int, BigRat};
use cfspec_core::exact::radical::{bound_cmp, BoundOrdering};
use cfspec_core::exact::squarefree::perfect_square_root;
use cfspec_core::exact::surd::QuadSurd;
use cfspec_core::spectra;
use cfspec_core::verify;

struct Criterion {
    id: u32,
    label: &'static str,
    budget_secs: u64,
    start: Instant,
}

impl Criterion {
    fn new(id: u32, label: &'static str, budget_secs: u64) -> Self {
        Criterion {
            id,
            label,
            budget_secs,
            start: Instant::now(),
        }
    }

    fn pass(self) {
        let elapsed = self.start.elapsed();
        println!(
            "acceptance {:>2} ({}): PASS in {:.2?} (budget {}s)",
            self.id, self.label, elapsed, self.budget_secs
        );
        assert!(
            elapsed.as_secs() < self.budget_secs,
            "criterion {} exceeded its {}s budget: {:.2?}",
            self.id,
            self.budget_secs,
            elapsed
        );
    }
}

fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
    QuadSurd::new(a, b, c, d).unwrap()
}

fn cf(pre: Vec<i64>, period: Vec<i64>) -> CFExpansion {
    CFExpansion::new(pre, period).unwrap()
}

#[test]
fn acceptance_01_constants() {
    let c = Criterion::new(1, "spectrum constants", 1);
    let d0 = spectra::dirichlet_constant(&spectra::alpha_k_cf(0)).unwrap();
    assert_eq!(d0, surd(5, 1, 10, 5), "D_0 = (5+sqrt5)/10 exactly");
    // |D_0 - 0.723606797749979| < 0.5e-15
    let reference = BigRat::new(BigInt::from(723606797749979i64), BigInt::from(10u8).pow(15));
    let gap = d0
        .checked_sub(&QuadSurd::from_rat(&reference))
        .unwrap()
        .abs();
    let half_ulp = QuadSurd::from_rat(&BigRat::new(BigInt::one(), BigInt::from(2) * BigInt::from(10u8).pow(15)));
    assert!(gap < half_ulp, "15-digit agreement");
    assert_eq!(spectra::dirichlet_d_k(1), surd(3, 1, 6, 3), "D_1 exact");
    assert_eq!(
        spectra::dirichlet_constant(&spectra::alpha_k_cf(1)).unwrap(),
        surd(3, 1, 6, 3)
    );
    let l1 = spectra::lagrange_constant(&CFExpansion::purely_periodic(vec![1]).unwrap()).unwrap();
    assert_eq!(l1, surd(0, 1, 1, 5), "L_1 = sqrt5");
    let l2 = spectra::lagrange_constant(&CFExpansion::purely_periodic(vec![2]).unwrap()).unwrap();
    assert_eq!(l2, surd(0, 1, 1, 8), "L_2 = sqrt8");
    let l3 =
        spectra::lagrange_constant(&CFExpansion::purely_periodic(vec![2, 2, 1, 1]).unwrap()).unwrap();
    assert_eq!(l3, surd(0, 1, 5, 221), "L_3 = sqrt221/5");
    c.pass();
}

#[test]
fn acceptance_02_perron_structure_for_alpha0() {
    let c = Criterion::new(2, "perfect-square structure", 5);
    let alpha0 = spectra::alpha_k_cf(0);
    let n_max = 80usize;
    let qualities = quality_sweep(&alpha0, n_max).unwrap();
    let convs = alpha0.convergents(n_max + 1);
    let root5 = surd(0, 1, 1, 5);
    let four = BigInt::from(4);
    for n in 0..=n_max {
        let q = &convs[n + 1].q;
        let five_q2 = BigInt::from(5) * q * q;
        let eps: i64 = if n % 2 == 0 { 1 } else { -1 };
        let radicand = &five_q2 + BigInt::from(eps) * &four;
        let s = perfect_square_root(radicand.magnitude())
            .unwrap_or_else(|| panic!("5 q^2 {eps:+} * 4 must be a perfect square at n = {n}"));
        // the opposite sign is not a square once q > 1 (alternation)
        if q > &BigInt::one() {
            let other = &five_q2 - BigInt::from(eps) * &four;
            assert!(
                perfect_square_root(other.magnitude()).is_none(),
                "alternation broken at n = {n}"
            );
        }
        // closed form: q (sqrt5 + 1) / (q sqrt5 + s)
        let q_surd = QuadSurd::from_int(q.clone());
        let closed = q_surd
            .checked_mul(&root5.checked_add(&QuadSurd::one()).unwrap())
            .unwrap()
            .checked_div(
                &q_surd
                    .checked_mul(&root5)
                    .unwrap()
                    .checked_add(&QuadSurd::from_int(BigInt::from(s)))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(qualities[n], closed, "closed form at n = {n}");
    }
    c.pass();
}

#[test]
fn acceptance_03_theorem1() {
    let c = Criterion::new(3, "theorem 1", 30);
    let n = 100usize;
    // part 2 families: equality certificates on exactly one parity class
    for (alpha, parity) in [
        (cf(vec![1], vec![1]), 1i64),
        (cf(vec![0, 2], vec![1]), 0),
        (cf(vec![3, 2], vec![1]), 0),
    ] {
        let report = verify::check_theorem1_part2(&alpha, n).unwrap();
        assert!(
            report.verdict.is_confirmed(),
            "part 2 for {alpha}: {:?}",
            report.verdict
        );
        let certified: Vec<i64> = report
            .rows
            .iter()
            .filter(|r| r.certified)
            .map(|r| r.n)
            .collect();
        assert!(!certified.is_empty());
        assert!(
            certified.iter().all(|m| m % 2 == parity),
            "{alpha}: equality class must be parity {parity}: {certified:?}"
        );
        assert!(
            report
                .rows
                .iter()
                .all(|r| r.ordering != ">"),
            "{alpha}: no index may exceed f_0"
        );
        assert!(verify::check_theorem1(&alpha, n).unwrap().verdict.is_confirmed());
    }
    // part 1 on non-equivalent / wider-preperiod numbers: strict witnesses
    for alpha in [
        CFExpansion::purely_periodic(vec![2]).unwrap(),
        cf(vec![2, 3], vec![1]),
    ] {
        let report = verify::check_theorem1_part1(&alpha, n).unwrap();
        assert!(
            report.verdict.is_confirmed(),
            "part 1 for {alpha}: {:?}",
            report.verdict
        );
        assert!(
            report.rows.iter().any(|r| r.ordering == ">"),
            "{alpha}: strict witnesses expected"
        );
    }
    c.pass();
}

#[test]
fn acceptance_04_proposition1() {
    let c = Criterion::new(4, "proposition 1 and remark 1", 60);
    for k in 1..=3u32 {
        let report = verify::check_prop1(k, 120).unwrap();
        assert!(
            report.verdict.is_confirmed(),
            "prop 1 at k = {k}: {:?}",
            report.verdict
        );
        // both variants produced certified equality witnesses
        let cert_count = report.rows.iter().filter(|r| r.certified).count();
        assert!(cert_count > 0, "k = {k} has certified equalities");
    }
    c.pass();
}

#[test]
fn acceptance_05_theorem2() {
    let c = Criterion::new(5, "theorem 2", 60);
    let n = 64usize;
    for k in [1u32, 2] {
        let report = verify::check_theorem2(k, n).unwrap();
        assert!(
            report.verdict.is_confirmed(),
            "theorem 2 at k = {k}: {:?}",
            report.verdict
        );
        // the eq (26)/(27) progressions for m <= 15, certified symbolically
        let offsets: Vec<(String, i64)> = if k % 2 == 1 {
            vec![("beta_k".to_string(), -2)]
        } else {
            vec![("beta_k_1".to_string(), -1), ("beta_k_2".to_string(), -3)]
        };
        for (label, offset) in offsets {
            for m in 1..=15i64 {
                let idx = (2 * m + 1) * k as i64 + offset;
                if idx < 0 || idx >= n as i64 {
                    continue;
                }
                let row = report
                    .rows
                    .iter()
                    .find(|r| r.n == idx && r.note == label)
                    .unwrap_or_else(|| panic!("row n = {idx} for {label}"));
                assert!(
                    row.certified && row.ordering == "=",
                    "k = {k} {label}: n = {idx} must be certified equality, got {}",
                    row.ordering
                );
            }
        }
    }
    c.pass();
}

#[test]
fn acceptance_06_radicand_identities() {
    let c = Criterion::new(6, "derived radicand identities", 1);
    let two_thirds = QuadSurd::from_rat(&BigRat::new(BigInt::from(2), BigInt::from(3)));
    let f1 = fk_radicand_constant(1).unwrap();
    let g1 = gk_radicand_constant(1).unwrap();
    assert_eq!(f1, two_thirds, "2 a_1/((2 b_1 + 1)(a_1 + 1)) = 2/3");
    assert_eq!(g1, two_thirds, "4 D_1 (1 - D_1) = 2/3");
    assert_eq!(f1, g1);
    // the coincidence is flagged in the proposition 1 report
    let report = verify::check_prop1(1, 16).unwrap();
    assert!(
        report.notes.iter().any(|note| note.contains("coincide")),
        "f_1 = g_1 coincidence flagged"
    );
    c.pass();
}

#[test]
fn acceptance_07_lemma_oracles() {
    let c = Criterion::new(7, "lemmas 1-4 exhaustive oracles", 300);
    let targets: Vec<(&str, CFExpansion)> = vec![
        ("alpha_0", spectra::alpha_k_cf(0)),
        ("alpha_1", spectra::alpha_k_cf(1)),
        ("gamma(1)", spectra::gamma_k_cf(1).unwrap()),
        ("beta_1", spectra::beta_k_cf(1).unwrap()),
    ];
    let mut instances = 0usize;
    for (name, target) in &targets {
        for depth in 1..=6usize {
            for direction in [verify::LemmaDirection::Below, verify::LemmaDirection::Above] {
                let which = match (depth % 2 == 0, direction) {
                    (true, verify::LemmaDirection::Below) => 1,
                    (false, verify::LemmaDirection::Below) => 2,
                    (false, verify::LemmaDirection::Above) => 3,
                    (true, verify::LemmaDirection::Above) => 4,
                };
                let inst = verify::LemmaInstance {
                    target: target.clone(),
                    depth,
                    quotient_bound: 3,
                    direction,
                };
                let report = verify::lemma_oracle(which, &inst).unwrap();
                assert!(
                    report.verdict.is_confirmed(),
                    "lemma {which} on {name} at depth {depth}: {:?}",
                    report.verdict
                );
                instances += 1;
            }
        }
    }
    assert!(instances >= 48, "{instances} instances");
    c.pass();
}

#[test]
fn acceptance_08_lemma5() {
    let c = Criterion::new(8, "lemma 5 case split", 60);
    for k in 1..=5u32 {
        let report = verify::lemma5_check(k, (3, 20)).unwrap();
        assert!(
            report.verdict.is_confirmed(),
            "lemma 5 at k = {k}: {:?}",
            report.verdict
        );
        assert!(
            report.notes.iter().any(|n| n.contains("case split holds")),
            "threshold reported for k = {k}"
        );
        // the even-s maximum is the 2k boundary form at every m
        for row in &report.rows {
            assert!(
                row.q.contains(&format!("even argmax s = {}", 2 * k)),
                "k = {k}, m = {}: {}",
                row.n,
                row.q
            );
        }
    }
    c.pass();
}

#[test]
fn acceptance_09_propositions_a_b() {
    let c = Criterion::new(9, "propositions A/B and theorem A", 60);
    // g_m(x) < 1/(L_m x) for x in {1, 2, 10, 10^6}, m <= 3
    for m in 1..=3usize {
        let (_, l) = spectra::lagrange_l(m).unwrap();
        for x in [1i64, 2, 10, 1_000_000] {
            let g = eval_gm(m, &rat_int(x)).unwrap();
            let classical = l
                .checked_mul(&QuadSurd::from_int(x))
                .unwrap()
                .inv()
                .unwrap();
            assert_eq!(
                bound_cmp(&classical, &g).unwrap(),
                BoundOrdering::Greater,
                "g_{m}({x}) < 1/(L_{m} x)"
            );
        }
    }
    // monotone-growing solution counts for [overline(2)] against L_1
    let silver = CFExpansion::purely_periodic(vec![2]).unwrap();
    let report = verify::prop_a_count(&silver, 1, 10_000).unwrap();
    assert!(report.verdict.is_confirmed(), "{:?}", report.verdict);
    let counts: Vec<u64> = report
        .rows
        .iter()
        .map(|r| r.value.parse().unwrap())
        .collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
    // proposition B panel of 10 under the equivalence filter
    let panel = vec![
        spectra::alpha_k_cf(0),
        spectra::alpha_k_cf(1),
        spectra::alpha_k_cf(2),
        spectra::alpha_k_cf(3),
        spectra::alpha_k_cf(4),
        CFExpansion::purely_periodic(vec![2]).unwrap(),
        CFExpansion::purely_periodic(vec![3]).unwrap(),
        CFExpansion::purely_periodic(vec![1, 2, 2]).unwrap(),
        CFExpansion::purely_periodic(vec![2, 2, 1, 1]).unwrap(),
        cf(vec![5, 1], vec![1, 2]),
    ];
    let report = verify::check_prop_b(&panel, 1, 40).unwrap();
    assert!(report.verdict.is_confirmed(), "{:?}", report.verdict);
    c.pass();
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

#[test]
fn acceptance_10_engine_properties() {
    let c = Criterion::new(10, "engine properties", 120);
    let mut rng = XorShift(0x5eed_cafe_f00d_1234);

    // 10,000 exact round trips. Uniform draws at |a|,|b|,c <= 10^6 have
    // periods in the millions (regulator of the conductor-bc order), so the
    // bulk of the sample takes surds born from random CF words, whose
    // coefficients do reach the stated magnitude; the rest are direct small
    // draws through the reduced-state expansion.
    let mut coeff_max = BigInt::from(0);
    for _ in 0..6000 {
        let mut pre = vec![rng.in_range(-3, 9)];
        for _ in 0..rng.in_range(0, 2) {
            pre.push(rng.in_range(1, 6));
        }
        let mut period = Vec::new();
        for _ in 0..rng.in_range(1, 8) {
            period.push(rng.in_range(1, 6));
        }
        let word = cf(pre, period);
        let x = word.value();
        coeff_max = coeff_max.max(x.a().magnitude().clone().into());
        let back = CFExpansion::expand(&x, 512).unwrap();
        assert_eq!(back, word);
        assert_eq!(back.value(), x);
    }
    assert!(
        coeff_max > BigInt::from(1_000_000),
        "sample reaches the million coefficient range: {coeff_max}"
    );
    for _ in 0..4000 {
        let x = QuadSurd::new(
            rng.in_range(-40, 40),
            rng.in_range(-12, 12),
            rng.in_range(1, 25),
            rng.in_range(0, 60),
        )
        .unwrap();
        let e = CFExpansion::expand(&x, 4000).unwrap();
        assert_eq!(e.value(), x, "round trip for {x}");
    }

    // psi agrees with the brute-force minimum for every t <= 1000 on 20 surds
    for i in 0..20 {
        let mut pre = vec![rng.in_range(0, 3)];
        for _ in 0..rng.in_range(0, 1) {
            pre.push(rng.in_range(1, 4));
        }
        let mut period = Vec::new();
        for _ in 0..rng.in_range(1, 4) {
            period.push(rng.in_range(1, 4));
        }
        let alpha = cf(pre, period);
        let value = alpha.value();
        let mut running_min: Option<QuadSurd> = None;
        for q in 1..=1000i64 {
            let dist = value
                .checked_mul(&QuadSurd::from_int(q))
                .unwrap()
                .dist_to_nearest_int();
            running_min = Some(match running_min {
                None => dist,
                Some(m) => m.min(dist),
            });
            let sample = psi(&alpha, &rat_int(q)).unwrap();
            assert_eq!(
                &sample.value,
                running_min.as_ref().unwrap(),
                "psi brute-force mismatch for surd {i} ({alpha}) at t = {q}"
            );
        }
    }

    // interval soundness at 4x precision on bound values and surds
    for x in [2i64, 3, 7, 10, 57, 111] {
        let b = cfspec_core::bounds::eval_f0(&rat_int(x)).unwrap();
        let base = b.enclosure(64).unwrap();
        let fine = b.enclosure(256).unwrap();
        assert!(base.contains_interval(&fine));
        let g = eval_gm(1, &rat_int(x)).unwrap();
        assert!(g
            .enclosure(64)
            .unwrap()
            .contains_interval(&g.enclosure(256).unwrap()));
        let s = surd(x, 1, 2, 7);
        assert!(s.enclosure(64).contains_interval(&s.enclosure(256)));
    }
    c.pass();
}
