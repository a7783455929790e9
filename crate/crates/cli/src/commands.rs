use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::{self, File};
use std::path::{Path, PathBuf};

use gegmra::pipeline::{analyze_record, run_sweep, PipelineConfig, SweepReport};
use gegmra::spectral::{
    band_table, cascade as cascade_waveform, dtft, ideal_band_table, WaveformKind,
};
use gegmra::{
    decompose as mra, FaultScenario, FaultType, FilterPair64, FilterSpec, ThreePhaseRecord,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::{AnalyzeArgs, Channel, CliError, PipelineFlags, SimulateArgs, SweepArgs};

pub struct Context {
    pub cfg: RunConfig,
    pub out: PathBuf,
}

impl Context {
    fn write(&self, name: &str, contents: &str) -> Result<(), CliError> {
        fs::create_dir_all(&self.out).map_err(|e| CliError::io(&self.out, e))?;
        let path = self.out.join(name);
        fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
        println!("{}", path.display());
        Ok(())
    }

    fn write_json<S: Serialize>(&self, name: &str, value: &S) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value).map_err(gegmra::Error::from)?;
        text.push('\n');
        self.write(name, &text)
    }

    fn pipeline(&self, flags: &PipelineFlags) -> PipelineConfig {
        let mut p = self.cfg.pipeline.clone();
        if let Some(d) = flags.detection {
            p.detection_signal = d.into();
        }
        if let Some(t) = flags.threshold {
            p.threshold_multiplier = t;
        }
        if let Some(l) = flags.levels {
            p.location_levels = l;
        }
        p
    }
}

fn filter(spec: &str) -> Result<FilterPair64, CliError> {
    Ok(spec.parse::<FilterSpec>()?.build()?)
}

fn fault_type(text: &str) -> Result<FaultType, CliError> {
    Ok(text.parse()?)
}

fn positive(flag: &'static str, value: f64) -> Result<f64, CliError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::Value {
            flag,
            value: value.to_string(),
            reason: "must be a positive number".into(),
        })
    }
}

pub fn design(ctx: &Context, spec: &str) -> Result<(), CliError> {
    let pair = filter(spec)?;
    let label = pair.label();
    ctx.write(&format!("{label}.csv"), &pair.to_csv())?;
    ctx.write_json(&format!("{label}.json"), &pair.export())
}

pub fn response(ctx: &Context, spec: &str, grid: usize) -> Result<(), CliError> {
    let pair = filter(spec)?;
    let label = pair.label();
    let scaling = dtft(pair.scaling(), grid)?;
    let wavelet = dtft(pair.wavelet(), grid)?;
    ctx.write(&format!("{label}_scaling_response.csv"), &scaling.to_csv())?;
    ctx.write(&format!("{label}_wavelet_response.csv"), &wavelet.to_csv())
}

pub fn bands(ctx: &Context, spec: &str, levels: usize, fs: Option<f64>) -> Result<(), CliError> {
    let fs = match fs {
        Some(f) => positive("fs", f)?,
        None => ctx.cfg.pipeline.generator.sample_rate,
    };
    let table = if spec.trim().eq_ignore_ascii_case("ideal") {
        ideal_band_table(fs, levels)?
    } else {
        band_table(&filter(spec)?, fs, levels)?
    };
    ctx.write_json(&format!("{}_bands.json", table.filter), &table)
}

pub fn cascade(ctx: &Context, spec: &str, iterations: usize) -> Result<(), CliError> {
    let pair = filter(spec)?;
    let phi = cascade_waveform(&pair, WaveformKind::Scaling, iterations)?;
    let psi = cascade_waveform(&pair, WaveformKind::Wavelet, iterations)?;
    let mut out = String::from("t,phi,psi\n");
    for (n, (p, q)) in phi.samples.iter().zip(&psi.samples).enumerate() {
        let _ = writeln!(out, "{},{p},{q}", phi.time(n));
    }
    ctx.write(&format!("{}_cascade.csv", pair.label()), &out)
}

fn load_record(ctx: &Context, path: &Path) -> Result<ThreePhaseRecord<f64>, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let fundamental = ctx.cfg.pipeline.generator.fundamental;
    let rec = ThreePhaseRecord::read_csv(file, fundamental, stem)?;
    if !rec.is_paper_rate() {
        eprintln!(
            "gegmra: note: {} has {:.2} samples per cycle; phasor windows assume 128",
            path.display(),
            rec.samples_per_cycle()
        );
    }
    Ok(rec)
}

pub fn decompose(
    ctx: &Context,
    path: &Path,
    spec: &str,
    levels: usize,
    channel: Channel,
) -> Result<(), CliError> {
    let rec = load_record(ctx, path)?;
    let pair = filter(spec)?;
    let (name, x) = match channel {
        Channel::Va => ("va", &rec.va),
        Channel::Vb => ("vb", &rec.vb),
        Channel::Vc => ("vc", &rec.vc),
        Channel::Ia => ("ia", &rec.ia),
        Channel::Ib => ("ib", &rec.ib),
        Channel::Ic => ("ic", &rec.ic),
    };
    let m = mra(x, &pair, levels, rec.sample_rate)?;
    let base = format!("{}_{}_{name}", rec.meta, pair.label());
    let mut sidecar = Vec::new();
    for j in 1..=levels {
        let (a, d) = (m.approximation(j), m.detail(j));
        let mut out = format!("n,a_{j},d_{j}\n");
        for n in 0..a.len() {
            let _ = writeln!(out, "{n},{},{}", a[n], d[n]);
        }
        ctx.write(&format!("{base}_L{j}.csv"), &out)?;
        sidecar.push(json!({
            "level": j,
            "samples": a.len(),
            "effective_rate_hz": m.effective_rate(j),
            "delay_samples": m.delays[j - 1],
        }));
    }
    let meta = json!({
        "record": rec.meta,
        "channel": name,
        "filter": pair.label(),
        "sample_rate_hz": rec.sample_rate,
        "levels": sidecar,
    });
    ctx.write_json(&format!("{base}_mra.json"), &meta)
}

pub fn simulate(ctx: &Context, a: &SimulateArgs) -> Result<(), CliError> {
    let ft = fault_type(&a.fault_type)?;
    let mut s = FaultScenario::new(ft, a.at, a.inception);
    s.fault_resistance = a.rf;
    s.sources = ctx.cfg.sources;
    if let Some(id) = &a.id {
        s = s.with_id(id.clone());
    }
    let p = &ctx.cfg.pipeline;
    let rec = gegmra::generate_fault_record(&s, &p.line, &p.generator)?;
    let mut buf = Vec::new();
    rec.write_csv(&mut buf)?;
    ctx.write(&format!("{}.csv", s.id), &String::from_utf8_lossy(&buf))
}

pub fn analyze(ctx: &Context, a: &AnalyzeArgs) -> Result<(), CliError> {
    let rec = load_record(ctx, &a.record)?;
    let pair = filter(&a.filter)?;
    let cfg = ctx.pipeline(&a.pipeline);
    let known = a.fault_type.as_deref().map(fault_type).transpose()?;
    let truth = a.truth.map(|t| positive("truth", t)).transpose()?;
    let result = analyze_record(&rec, &pair, &cfg, truth, known)?;
    let base = format!("{}_{}", rec.meta, pair.label());
    ctx.write(&format!("{base}_windows.csv"), &result.location.to_csv())?;
    ctx.write_json(&format!("{base}_analysis.json"), &result)
}

fn load_catalog(ctx: &Context, name: &str) -> Result<Vec<FaultScenario>, CliError> {
    if name == "paper" {
        let mut cat = gegmra::paper_catalog();
        for s in &mut cat {
            s.sources = ctx.cfg.sources;
        }
        return Ok(cat);
    }
    let path = Path::new(name);
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })
}

fn pct(x: Option<f64>) -> String {
    x.map(|e| (100.0 * e).to_string()).unwrap_or_default()
}

fn summary_json(catalog: &str, cases: usize, reports: &[SweepReport]) -> Value {
    let mut classes: BTreeMap<&str, BTreeMap<String, Value>> = BTreeMap::new();
    for r in reports {
        for c in &r.summary {
            classes.entry(c.class.name()).or_default().insert(
                r.filter.clone(),
                json!({
                    "cases": c.cases,
                    "detected": c.detected,
                    "detected_within_one_cycle": c.detected_in_time,
                    "ground_correct": c.ground_correct,
                    "type_correct": c.type_correct,
                    "max_abs_error_pct": c.max_abs_error.map(|e| 100.0 * e),
                }),
            );
        }
    }
    json!({
        "catalog": catalog,
        "cases": cases,
        "filters": reports.iter().map(|r| r.filter.clone()).collect::<Vec<_>>(),
        "classes": classes,
    })
}

pub fn sweep(ctx: &Context, a: &SweepArgs) -> Result<(), CliError> {
    let pairs = a
        .filters
        .iter()
        .map(|f| filter(f))
        .collect::<Result<Vec<_>, _>>()?;
    let catalog = load_catalog(ctx, &a.catalog)?;
    let cfg = ctx.pipeline(&a.pipeline);
    let reports = pairs
        .iter()
        .map(|p| run_sweep(&catalog, p, &cfg))
        .collect::<Result<Vec<_>, _>>()?;

    let mut errors = String::from("id");
    for r in &reports {
        let _ = write!(errors, ",{}_err", r.filter);
    }
    errors.push('\n');
    let mut cases =
        String::from("id,filter,type,location_fraction,inception_cycles,detected,classified_as,ground_correct,sixth_window_km,error_pct,failure\n");
    for (i, s) in catalog.iter().enumerate() {
        errors.push_str(&s.id);
        for r in &reports {
            let o = &r.outcomes[i];
            let _ = write!(errors, ",{}", pct(o.sixth_window_error()));
            let analysis = o.analysis.as_ref();
            let _ = writeln!(
                cases,
                "{},{},{},{},{},{},{},{},{},{},{}",
                o.id,
                r.filter,
                o.fault_type,
                o.location_fraction,
                o.inception_cycles,
                o.detected(),
                analysis
                    .map(|x| x.fault_type.to_string())
                    .unwrap_or_default(),
                o.ground_correct()
                    .map(|g| g.to_string())
                    .unwrap_or_default(),
                analysis
                    .and_then(|x| x.location.sixth_window_km)
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                pct(o.sixth_window_error()),
                o.failure.as_deref().unwrap_or("").replace(',', ";"),
            );
        }
        errors.push('\n');
    }
    ctx.write("sweep_errors.csv", &errors)?;
    ctx.write("sweep_cases.csv", &cases)?;
    ctx.write_json(
        "sweep_summary.json",
        &summary_json(&a.catalog, catalog.len(), &reports),
    )
}
