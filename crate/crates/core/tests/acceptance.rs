//! One test per acceptance criterion; each prints a PASS or FAIL line.
//! Run with `cargo test --test acceptance -- --nocapture --test-threads 1`.

mod common;

use std::fs;
use std::time::{Duration, Instant};

use common::*;
use cyclotomic_sgp::cyclotomy::{is_prime, prime_power_base};
use cyclotomic_sgp::hilbert::{
    detect_irreducible_cyclotomic_h, deviations_from_poincare, f_d_minus_2, f_to_h, h_to_f,
    koszul_deviations, plane_monoid_hilbert, poincare_coefficients, HVector, HilbertSeries,
    Verdict,
};
use cyclotomic_sgp::survey::{run_survey, SurveyConfig, RECORDS_FILE};
use cyclotomic_sgp::{
    cyclotomic, enumerate_semigroups, exponent_sequence, is_kronecker, kronecker_factor,
    two_generator_factorization, IntPoly, Limit, NumericalSemigroup,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!(
        "{} criterion {id:>2} {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

#[test]
fn criterion_01_two_prime_generators() {
    let start = Instant::now();
    let primes = primes_upto(47);
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            pairs += 1;
            let s = NumericalSemigroup::from_generators(&[p, q]).unwrap();
            if s.semigroup_polynomial() != cyclotomic(p * q) {
                bad.push((p, q));
            }
        }
    }
    let t = start.elapsed();
    report(
        1,
        "two prime generators",
        bad.is_empty() && t < Duration::from_secs(10),
        format!("{pairs} pairs, mismatches {bad:?}, {:.2}s", t.as_secs_f64()),
    );
}

#[test]
fn criterion_02_two_generator_product() {
    let start = Instant::now();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for a in 2..=30u64 {
        for b in a + 1..=30 {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            pairs += 1;
            let p = NumericalSemigroup::from_generators(&[a, b])
                .unwrap()
                .semigroup_polynomial();
            let product: IntPoly = two_generator_factorization(a, b)
                .unwrap()
                .into_iter()
                .map(cyclotomic)
                .product();
            if p != product {
                bad.push((a, b));
            }
        }
    }
    let t = start.elapsed();
    report(
        2,
        "two-generator product formula",
        bad.is_empty() && t < Duration::from_secs(30),
        format!(
            "{pairs} coprime pairs, mismatches {bad:?}, {:.2}s",
            t.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_03_survey_to_frobenius_33() {
    let mut config = SurveyConfig::new(33);
    config.workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let r = run_survey(&config).unwrap();
    let t = r.totals;
    report(3, "survey F <= 33", r.conjecture_holds() && t.ci == t.cyclotomic,
        format!("{} semigroups, {} symmetric, {} cyclotomic, {} complete intersections, {} counterexamples, {:.1}s",
            t.semigroups, t.symmetric, t.cyclotomic, t.ci, r.counterexamples.len(), r.runtime_secs));
}

#[test]
fn criterion_04_symmetric_not_cyclotomic_family() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 5..=12u64 {
        let gens: Vec<u64> = (k..=2 * k - 2).collect();
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        if !s.is_symmetric() || is_kronecker(&s.semigroup_polynomial()).unwrap() {
            bad.push(k);
        }
    }
    let t = start.elapsed();
    report(
        4,
        "<k,...,2k-2> symmetric, not Kronecker",
        bad.is_empty() && t < Duration::from_secs(5),
        format!("k = 5..=12, failures {bad:?}, {:.3}s", t.as_secs_f64()),
    );
}

#[test]
fn criterion_05_plane_monoid() {
    let fit = plane_monoid_hilbert(&[(8, 0), (6, 2), (5, 3), (3, 5), (0, 8)], 12).unwrap();
    let want = IntPoly::from_i64s(&[1, 3, 3, 1]);
    report(
        5,
        "plane monoid h-polynomial",
        fit.h == want,
        format!("h = {}", fit.h),
    );
}

#[test]
fn criterion_06_cyclotomic_values_and_prime_powers() {
    let mut bad_a = Vec::new();
    for m in 2..=200u64 {
        let want = BigInt::from(prime_power_base(m).unwrap_or(1));
        let oracle_value: BigInt = cyclotomic_oracle(m).iter().sum();
        if cyclotomic(m).evaluate(&BigInt::from(1)) != want || oracle_value != want {
            bad_a.push(m);
        }
    }
    let mut bad_b = Vec::new();
    for p in primes_upto(13) {
        for k in 1..=3u32 {
            let m = p.pow(k);
            let composed = cyclotomic(p).compose_x_pow(p.pow(k - 1) as usize);
            if cyclotomic(m) != composed || cyclotomic(m).coeffs() != &cyclotomic_oracle(m)[..] {
                bad_b.push(m);
            }
        }
    }
    report(
        6,
        "Phi_m(1) and Phi_(p^k)",
        bad_a.is_empty() && bad_b.is_empty(),
        format!("(a) m = 2..=200 failures {bad_a:?}; (b) p <= 13, k <= 3 failures {bad_b:?}"),
    );
}

#[test]
fn criterion_07_cyclotomic_h_detection() {
    let mut bad = Vec::new();
    let mut admissible = 0;
    for m in 2..=100u64 {
        let got = detect_irreducible_cyclotomic_h(&cyclotomic(m));
        let want = if is_prime(m) {
            Verdict::AdmissibleHypersurface
        } else {
            Verdict::Inadmissible
        };
        admissible += (got.map(|g| g.1) == Some(Verdict::AdmissibleHypersurface)) as u32;
        if got != Some((m, want)) {
            bad.push(m);
        }
    }
    report(
        7,
        "irreducible cyclotomic h detection",
        bad.is_empty() && admissible == 25,
        format!("m = 2..=100: {admissible} admissible (primes), failures {bad:?}"),
    );
}

#[test]
fn criterion_08_deviation_round_trip() {
    let mut notes = Vec::new();
    let mut ok = true;
    for (h, d) in [(vec![1i64], 1usize), (vec![1, 1], 1), (vec![1, 1, -1], 1)] {
        let h = IntPoly::from_i64s(&h);
        let eps = koszul_deviations(&h, d, 20).unwrap();
        let betti = poincare_coefficients(&HilbertSeries::new(h.clone(), &vec![1; d]).unwrap(), 20)
            .unwrap();
        let agree = deviations_from_poincare(&betti).unwrap() == eps;
        let fac = kronecker_factor(&h).unwrap();
        let vanish = !fac.is_kronecker()
            || eps.last_nonzero().unwrap_or(0) as u64 <= fac.largest_index().unwrap_or(1);
        ok &= agree && vanish;
        notes.push(format!(
            "h = {h}: agree {agree}, last nonzero {:?}",
            eps.last_nonzero()
        ));
    }
    report(8, "deviation round trip to 20", ok, notes.join("; "));
}

#[test]
fn criterion_09_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let mut round_trip = 0;
    for _ in 0..500 {
        let deg = rng.gen_range(0..=15usize);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
        c[0] = 1;
        let f = IntPoly::from_i64s(&c);
        let b = 2 * f.degree().unwrap_or(0).max(1);
        let seq = exponent_sequence(&f, b).unwrap();
        round_trip += (product_of_exponents(&seq.values) == f.to_series(b).coeffs()) as u32;
    }

    let mut oracle_agree = 0;
    let mut kron = 0;
    for _ in 0..500 {
        let f = random_kronecker_candidate(&mut rng, 40);
        let lib = is_kronecker(&IntPoly::new(f.clone())).unwrap();
        kron += lib as u32;
        oracle_agree += (lib == kronecker_by_roots(&f, 1e-6)) as u32;
    }

    let mut involution = 0;
    for _ in 0..500 {
        let len = rng.gen_range(1..=8usize);
        let h: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
        let dim = len - 1 + rng.gen_range(0..=2);
        let hv = HVector::from_i64s(&h);
        let back = f_to_h(&h_to_f(&hv, dim).unwrap());
        involution += (trim(back.0) == trim(hv.0)) as u32;
    }

    let mut fd2 = 0;
    for _ in 0..200 {
        let half = rng.gen_range(0..=5usize);
        let s = 2 * half;
        let mut h = vec![0i64; s + 1];
        for i in 0..half {
            let v = if i == 0 { 1 } else { rng.gen_range(-6..=6) };
            h[i] = v;
            h[s - i] = v;
        }
        let rest: i64 = h.iter().sum::<i64>() - h[half];
        h[half] = 1 - rest;
        let dim = s.max(1) + rng.gen_range(0..=4);
        let got = f_d_minus_2(&HVector::from_i64s(&h), dim).unwrap();
        fd2 += (got == BigInt::from(dim as i64 - half as i64)) as u32;
    }

    let stats = enumerate_semigroups(Limit::MaxGenus(7), |_| {});
    let counts: Vec<u64> = stats.by_genus.values().copied().collect();
    let oracle = genus_counts_oracle(7);
    let genus_ok = counts == oracle && oracle == [1, 1, 2, 4, 7, 12, 23, 39];

    report(9, "property suites",
        round_trip == 500 && oracle_agree == 500 && involution == 500 && fd2 == 200 && genus_ok,
        format!("exponent round trip {round_trip}/500, root oracle {oracle_agree}/500 ({kron} Kronecker), \
                 h/f involution {involution}/500, f_(D-2) identity {fd2}/200, genus counts {counts:?}"));
}

#[test]
fn criterion_10_deterministic_records() {
    let one = tempfile::tempdir().unwrap();
    let eight = tempfile::tempdir().unwrap();
    for (dir, workers) in [(&one, 1), (&eight, 8)] {
        let mut c = SurveyConfig::new(20);
        c.workers = workers;
        c.out_path = Some(dir.path().to_path_buf());
        run_survey(&c).unwrap();
    }
    let a = fs::read(one.path().join(RECORDS_FILE)).unwrap();
    let b = fs::read(eight.path().join(RECORDS_FILE)).unwrap();
    report(
        10,
        "records identical across worker counts",
        a == b && !a.is_empty(),
        format!(
            "{} bytes with 1 worker, {} bytes with 8 workers",
            a.len(),
            b.len()
        ),
    );
}
