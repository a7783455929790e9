mod common;

use common::*;
use gegmra::powersys::solve_fault_phasors;
use gegmra::{
    decompose, eval_gegenbauer, zeros_on_unit_circle, FaultScenario, FaultType, FilterPair64,
    GegenbauerParams, LineModel,
};
use num_complex::Complex64;

fn geg(nu: usize, alpha: f64) -> FilterPair64 {
    FilterPair64::gegenbauer(GegenbauerParams::new(nu, alpha).unwrap()).unwrap()
}

const RATIONAL_ALPHAS: [(i64, i64); 6] = [(1, 2), (1, 1), (3, 2), (12, 1), (7, 3), (1, 10)];

#[test]
fn scaling_taps_match_gamma_ratio_form() {
    for nu in [1, 3, 5, 7, 9] {
        for (p, q) in RATIONAL_ALPHAS {
            let exact = gamma_ratio_coeffs(nu, &ratio(p, q));
            let pair = geg(nu, p as f64 / q as f64);
            for (h, e) in pair.scaling().iter().zip(&exact) {
                let want = to_f64(e) * std::f64::consts::SQRT_2;
                assert!(
                    (h - want).abs() < 1e-13,
                    "nu={nu} alpha={p}/{q}: {h} vs {want}"
                );
            }
        }
    }
}

#[test]
fn polynomial_expansion_agrees_with_gamma_ratio_form() {
    // two exact routes to the same taps
    for nu in [1, 3, 5, 7, 9] {
        for (p, q) in RATIONAL_ALPHAS {
            let a = ratio(p, q);
            assert_eq!(
                polynomial_expansion_coeffs(nu, &a),
                gamma_ratio_coeffs(nu, &a),
                "nu={nu} alpha={p}/{q}"
            );
        }
    }
}

#[test]
fn legendre_case_from_expansion() {
    let exact = polynomial_expansion_coeffs(3, &ratio(1, 2));
    assert_eq!(
        exact,
        vec![ratio(5, 16), ratio(3, 16), ratio(3, 16), ratio(5, 16)]
    );
}

#[test]
fn polynomial_values_match_explicit_sum() {
    for n in 0..=9 {
        for alpha in [0.25, 0.5, 1.0, 2.5, 12.0] {
            for i in 0..=40 {
                let x = -1.0 + i as f64 / 20.0;
                let want = gegenbauer_explicit(n, alpha, x);
                let got = eval_gegenbauer(n, alpha, x).unwrap();
                assert!(
                    (got - want).abs() <= 1e-11 * want.abs().max(1.0),
                    "C_{n}^({alpha})({x}): {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn transfer_zeros_match_polynomial_zeros() {
    for nu in [3, 5, 7, 9] {
        for alpha in [0.5, 1.0, 4.0, 12.0] {
            let mut got: Vec<f64> = zeros_on_unit_circle(geg(nu, alpha).scaling())
                .unwrap()
                .iter()
                .map(|z| z.value.arg().rem_euclid(std::f64::consts::TAU))
                .collect();
            got.sort_by(f64::total_cmp);
            let want = transfer_zero_angles(nu, alpha);
            assert_eq!(got.len(), want.len(), "nu={nu} alpha={alpha}");
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-7, "nu={nu} alpha={alpha}: {g} vs {w}");
            }
        }
    }
}

#[test]
fn decomposition_matches_naive_filter_bank() {
    let x: Vec<f64> = (0..1000)
        .map(|n| ((n * n) % 97) as f64 - 48.0 + (n as f64 * 0.05).sin())
        .collect();
    for pair in [
        geg(3, 12.0),
        geg(7, 1.0),
        FilterPair64::daub4(),
        FilterPair64::haar(),
    ] {
        let m = decompose(&x, &pair, 4, 7680.0).unwrap();
        let (a, d) = naive_mra(&x, pair.scaling(), pair.wavelet(), 4);
        for j in 0..4 {
            assert_eq!(m.approximation(j + 1).len(), a[j].len());
            for (u, v) in m.approximation(j + 1).iter().zip(&a[j]) {
                assert!((u - v).abs() < 1e-9);
            }
            for (u, v) in m.detail(j + 1).iter().zip(&d[j]) {
                assert!((u - v).abs() < 1e-9);
            }
        }
    }
}

fn network(s: &FaultScenario, line: &LineModel) -> Network {
    let src = &s.sources;
    let peak = |kv: f64, deg: f64| {
        Complex64::from_polar(kv * 1e3 * (2.0f64 / 3.0).sqrt(), deg.to_radians())
    };
    Network {
        ze1: (src.ze1_zero, src.ze1),
        ze2: (src.ze2_zero, src.ze2),
        zl: (
            line.z0_per_km(60.0) * line.length_km,
            line.z1_per_km(60.0) * line.length_km,
        ),
        e1: peak(src.e1_kv, src.e1_deg),
        e2: peak(src.e2_kv, src.e2_deg),
    }
}

fn close(a: [Complex64; 3], b: [Complex64; 3], scale: f64, what: &str) {
    for k in 0..3 {
        assert!(
            (a[k] - b[k]).norm() <= 1e-5 * scale,
            "{what}[{k}]: {} vs {}",
            a[k],
            b[k]
        );
    }
}

#[test]
fn sequence_solution_matches_phase_domain_nodal_solution() {
    let line = LineModel::default();
    for ft in FaultType::ALL {
        for m in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let s = FaultScenario::new(ft, m, 4.0);
            let got = solve_fault_phasors(&s, &line, 60.0).unwrap();
            let (pre, post) = nodal_solve(&network(&s, &line), m, ft.phases(), ft.ground());
            let vs = pre.0[0].norm();
            let is = post.1.iter().map(|z| z.norm()).fold(0.0, f64::max);
            close(got.prefault_v, pre.0, vs, "pre V");
            close(got.prefault_i, pre.1, is, "pre I");
            close(got.postfault_v, post.0, vs, &format!("{ft} {m} post V"));
            close(got.postfault_i, post.1, is, &format!("{ft} {m} post I"));
        }
    }
}

#[test]
fn daub4_cascade_converges_to_integer_values() {
    // φ(1) = (1+√3)/2, φ(2) = (1−√3)/2 solve the two-scale relation at
    // integers. φ is only about 0.55-Hölder: the error shrinks roughly 3× per
    // three extra iterations.
    let s3 = 3f64.sqrt();
    let phi = |n: i64| match n {
        1 => (1.0 + s3) / 2.0,
        2 => (1.0 - s3) / 2.0,
        _ => 0.0,
    };
    let pair = FilterPair64::daub4();
    let g = pair.wavelet();
    // ψ(m/2) = Σ √2 g_k φ(m − k)
    let psi_half = |m: i64| -> f64 {
        (0..4)
            .map(|k| std::f64::consts::SQRT_2 * g[k] * phi(m - k as i64))
            .sum()
    };
    let worst = |iters: usize| {
        let step = 1usize << iters;
        let w = gegmra::cascade(&pair, gegmra::spectral::WaveformKind::Scaling, iters).unwrap();
        let p = gegmra::cascade(&pair, gegmra::spectral::WaveformKind::Wavelet, iters).unwrap();
        let e_phi = (1..=2)
            .map(|n| (w.samples[n * step] - phi(n as i64)).abs())
            .fold(0.0, f64::max);
        let e_psi = (1..6)
            .map(|m| (p.samples[m * step / 2] - psi_half(m as i64)).abs())
            .fold(0.0, f64::max);
        e_phi.max(e_psi)
    };
    let (coarse, fine) = (worst(6), worst(12));
    assert!(fine < 0.06, "{fine}");
    assert!(fine < coarse / 4.0, "{coarse} -> {fine}");
}
