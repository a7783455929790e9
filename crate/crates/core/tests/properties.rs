use gegmra::pipeline::{calibrate_thresholds, detect, detect_record, LocateSettings};
use gegmra::powersys::clarke_sample;
use gegmra::spectral::{cascade, WaveformKind};
use gegmra::{
    decompose, eval_gegenbauer, generate_fault_record, locate, sliding_phasor,
    zeros_on_unit_circle, FaultScenario, FaultType, FilterPair64, GegenbauerParams,
    GeneratorSettings, LineModel, PhasorSeries, PipelineConfig,
};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{SQRT_2, TAU};

fn geg(nu: usize, alpha: f64) -> FilterPair64 {
    FilterPair64::gegenbauer(GegenbauerParams::new(nu, alpha).unwrap()).unwrap()
}

fn odd_order() -> impl Strategy<Value = usize> {
    (0usize..5).prop_map(|k| 2 * k + 1)
}

fn fault_type() -> impl Strategy<Value = FaultType> {
    (0usize..10).prop_map(|k| FaultType::ALL[k])
}

fn scenario() -> impl Strategy<Value = FaultScenario> {
    (fault_type(), 0.05f64..0.95, 3.5f64..5.0).prop_map(|(ft, m, t)| FaultScenario::new(ft, m, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_parity(n in 0usize..12, alpha in 0.01f64..40.0, x in -1.0f64..1.0) {
        let p = eval_gegenbauer(n, alpha, x).unwrap();
        let q = eval_gegenbauer(n, alpha, -x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((p - sign * q).abs() <= 1e-12 * p.abs().max(1.0));
    }

    #[test]
    fn scaling_filter_identities(nu in odd_order(), alpha in 0.01f64..50.0) {
        let pair = geg(nu, alpha);
        let h = pair.scaling();
        for k in 0..=nu {
            prop_assert!((h[k] - h[nu - k]).abs() < 1e-14);
        }
        let even: f64 = h.iter().step_by(2).sum();
        let odd: f64 = h.iter().skip(1).step_by(2).sum();
        prop_assert!((even - SQRT_2 / 2.0).abs() < 1e-12);
        prop_assert!((odd - SQRT_2 / 2.0).abs() < 1e-12);
        prop_assert!(pair.wavelet().iter().sum::<f64>().abs() < 1e-12);
        for z in zeros_on_unit_circle(h).unwrap() {
            prop_assert!((z.radius - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn first_order_is_haar(alpha in 0.01f64..170.0) {
        let (p, haar) = (geg(1, alpha), FilterPair64::haar());
        for (a, b) in p.scaling().iter().chain(p.wavelet()).zip(haar.scaling().iter().chain(haar.wavelet())) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn cascade_partition_of_unity(nu in odd_order(), alpha in 0.1f64..20.0, iters in 2usize..8) {
        let pair = geg(nu, alpha);
        let phi = cascade(&pair, WaveformKind::Scaling, iters).unwrap().samples;
        let step = 1usize << iters;
        for r in 0..step {
            let s: f64 = phi.iter().skip(r).step_by(step).sum();
            prop_assert!((s - 1.0).abs() < 1e-9, "residue {} sums to {}", r, s);
        }
        let psi = cascade(&pair, WaveformKind::Wavelet, iters).unwrap().samples;
        prop_assert!(psi.iter().sum::<f64>().abs() < 1e-9);
    }

    #[test]
    fn decomposition_is_linear(
        x in prop::collection::vec(-1e3f64..1e3, 256),
        y in prop::collection::vec(-1e3f64..1e3, 256),
        a in -5.0f64..5.0,
        b in -5.0f64..5.0,
    ) {
        let pair = geg(3, 12.0);
        let z: Vec<f64> = x.iter().zip(&y).map(|(u, v)| a * u + b * v).collect();
        let (mx, my, mz) = (
            decompose(&x, &pair, 3, 7680.0).unwrap(),
            decompose(&y, &pair, 3, 7680.0).unwrap(),
            decompose(&z, &pair, 3, 7680.0).unwrap(),
        );
        for j in 1..=3 {
            for n in 0..mz.approximation(j).len() {
                let want = a * mx.approximation(j)[n] + b * my.approximation(j)[n];
                prop_assert!((mz.approximation(j)[n] - want).abs() < 1e-8);
                let want = a * mx.detail(j)[n] + b * my.detail(j)[n];
                prop_assert!((mz.detail(j)[n] - want).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn clarke_linearity_and_balanced_zero_mode(amp in 1.0f64..1e5, phi in 0.0f64..TAU, k in -3.0f64..3.0) {
        let third = TAU / 3.0;
        let [a, b, c] = [phi, phi - third, phi + third].map(|p| amp * p.cos());
        let m = clarke_sample(a, b, c);
        prop_assert!(m[2].abs() < 1e-9 * amp);
        let scaled = clarke_sample(k * a, k * b, k * c);
        for i in 0..3 {
            prop_assert!((scaled[i] - k * m[i]).abs() < 1e-9 * amp);
        }
        // amplitude invariance: α carries phase a's balanced component
        prop_assert!((m[0] - a).abs() < 1e-9 * amp);
    }

    #[test]
    fn phasor_of_stationary_cosine(amp in 0.1f64..1e4, phi in -3.0f64..3.0) {
        let x: Vec<f64> = (0..64).map(|n| amp * (TAU * n as f64 / 16.0 + phi).cos()).collect();
        let s = sliding_phasor(&x, 16).unwrap();
        let want = Complex64::from_polar(amp, phi);
        prop_assert_eq!(s.len(), 49);
        for p in &s.phasors {
            prop_assert!((p - want).norm() < 1e-10 * amp);
        }
    }

    #[test]
    fn location_inverts_ideal_loop(
        ft in fault_type(),
        d in 1.0f64..205.0,
        currents in prop::array::uniform3((10.0f64..3000.0, -3.2f64..3.2)),
        other_v in prop::array::uniform3((1e4f64..4e5, -3.2f64..3.2)),
    ) {
        let line = LineModel::default();
        let z1 = line.z1_per_km(60.0);
        let k0 = line.k0(60.0);
        let i = currents.map(|(m, a)| Complex64::from_polar(m, a));
        let mut v = other_v.map(|(m, a)| Complex64::from_polar(m, a));
        let ph: Vec<usize> = (0..3).filter(|&p| ft.phases()[p]).collect();
        match ph.as_slice() {
            [p] => v[*p] = z1 * d * (i[*p] + k0 * (i[0] + i[1] + i[2])),
            [p, q, ..] => v[*p] = v[*q] + z1 * d * (i[*p] - i[*q]),
            _ => unreachable!(),
        }
        let series = |z: Complex64| PhasorSeries { window_length: 16, phasors: vec![z; 96] };
        let (vs, is) = (v.map(series), i.map(series));
        let r = locate(
            [&vs[0], &vs[1], &vs[2]],
            [&is[0], &is[1], &is[2]],
            ft,
            &line,
            Some(d),
            &LocateSettings::default(),
        ).unwrap();
        let got = r.sixth_window_km.unwrap();
        prop_assert!((got - d).abs() < 1e-9 * d.max(1.0), "{} vs {}", got, d);
        prop_assert!(r.sixth_window_error.unwrap().abs() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn detection_is_monotone_in_threshold(s in scenario(), k1 in 1.5f64..5.0, extra in 0.0f64..20.0) {
        let rec = generate_fault_record(&s, &LineModel::default(), &GeneratorSettings::default()).unwrap();
        let pair = geg(3, 1.0);
        let (_, details) = detect_record(&rec, &pair, &PipelineConfig::default()).unwrap();
        let low = detect(&details, &calibrate_thresholds(&details, 2, k1).unwrap());
        let high = detect(&details, &calibrate_thresholds(&details, 2, k1 + extra).unwrap());
        if let Some(n_high) = high.inception_index {
            let n_low = low.inception_index;
            prop_assert!(n_low.is_some_and(|n| n <= n_high));
        }
    }

    #[test]
    fn detection_ignores_overall_gain(s in scenario(), gain in -3.0f64..3.0) {
        let rec = generate_fault_record(&s, &LineModel::default(), &GeneratorSettings::default()).unwrap();
        let pair = FilterPair64::daub4();
        let cfg = PipelineConfig::default();
        let (a, _) = detect_record(&rec, &pair, &cfg).unwrap();
        let (b, _) = detect_record(&rec.scaled(10f64.powf(gain)), &pair, &cfg).unwrap();
        prop_assert_eq!(a.inception_index, b.inception_index);
        prop_assert_eq!(a.ground_involved, b.ground_involved);
    }
}
