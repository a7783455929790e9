//! Three-phase waveform records and their CSV form.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, RecordError, Result};
use crate::scalar::{idx, lit, to_f64, Real};

pub const HEADER: [&str; 7] = ["t_s", "va", "vb", "vc", "ia", "ib", "ic"];
pub const DEFAULT_FUNDAMENTAL: f64 = 60.0;
pub const PAPER_SAMPLES_PER_CYCLE: usize = 128;

/// Phase voltages and currents sampled at terminal A.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreePhaseRecord<T> {
    pub sample_rate: T,
    pub fundamental: T,
    pub va: Vec<T>,
    pub vb: Vec<T>,
    pub vc: Vec<T>,
    pub ia: Vec<T>,
    pub ib: Vec<T>,
    pub ic: Vec<T>,
    pub meta: String,
}

impl<T: Real> ThreePhaseRecord<T> {
    pub fn new(
        sample_rate: T,
        fundamental: T,
        voltages: [Vec<T>; 3],
        currents: [Vec<T>; 3],
        meta: impl Into<String>,
    ) -> Result<Self> {
        if !(sample_rate > T::zero()) {
            return Err(Error::SampleRate(to_f64(sample_rate)));
        }
        if !(fundamental > T::zero()) {
            return Err(Error::SampleRate(to_f64(fundamental)));
        }
        let [va, vb, vc] = voltages;
        let [ia, ib, ic] = currents;
        let lens = [va.len(), vb.len(), vc.len(), ia.len(), ib.len(), ic.len()];
        if lens.iter().any(|&l| l != lens[0]) {
            return Err(Error::ChannelLengths(lens));
        }
        Ok(Self {
            sample_rate,
            fundamental,
            va,
            vb,
            vc,
            ia,
            ib,
            ic,
            meta: meta.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.va.len()
    }

    pub fn is_empty(&self) -> bool {
        self.va.is_empty()
    }

    pub fn voltages(&self) -> [&[T]; 3] {
        [&self.va, &self.vb, &self.vc]
    }

    pub fn currents(&self) -> [&[T]; 3] {
        [&self.ia, &self.ib, &self.ic]
    }

    pub fn samples_per_cycle(&self) -> T {
        self.sample_rate / self.fundamental
    }

    /// True when the record carries 128 samples per fundamental cycle
    /// (to within 1 %, which admits the 130.2 μs ATP step).
    pub fn is_paper_rate(&self) -> bool {
        let spc = to_f64(self.samples_per_cycle());
        (spc / PAPER_SAMPLES_PER_CYCLE as f64 - 1.0).abs() < 0.01
    }

    pub fn time(&self, n: usize) -> T {
        idx::<T>(n) / self.sample_rate
    }

    /// Every channel multiplied by `k`.
    pub fn scaled(&self, k: T) -> Self {
        let s = |v: &[T]| v.iter().map(|&x| x * k).collect::<Vec<_>>();
        Self {
            sample_rate: self.sample_rate,
            fundamental: self.fundamental,
            va: s(&self.va),
            vb: s(&self.vb),
            vc: s(&self.vc),
            ia: s(&self.ia),
            ib: s(&self.ib),
            ic: s(&self.ic),
            meta: self.meta.clone(),
        }
    }

    /// Converts every sample to another scalar type.
    pub fn cast<U: Real>(&self) -> ThreePhaseRecord<U> {
        let c = |v: &[T]| v.iter().map(|&x| lit::<U>(to_f64(x))).collect::<Vec<_>>();
        ThreePhaseRecord {
            sample_rate: lit(to_f64(self.sample_rate)),
            fundamental: lit(to_f64(self.fundamental)),
            va: c(&self.va),
            vb: c(&self.vb),
            vc: c(&self.vc),
            ia: c(&self.ia),
            ib: c(&self.ib),
            ic: c(&self.ic),
            meta: self.meta.clone(),
        }
    }

    /// Writes the record as `t_s,va,vb,vc,ia,ib,ic` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(HEADER).map_err(RecordError::from)?;
        for n in 0..self.len() {
            let row = [
                self.time(n),
                self.va[n],
                self.vb[n],
                self.vc[n],
                self.ia[n],
                self.ib[n],
                self.ic[n],
            ];
            w.write_record(row.iter().map(|&x| to_f64(x).to_string()))
                .map_err(RecordError::from)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Parses a record, inferring the sample rate from the time column.
    pub fn read_csv<R: Read>(input: R, fundamental: T, meta: impl Into<String>) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(input);
        let header = rdr.headers().map_err(RecordError::from)?.clone();
        if header.len() != HEADER.len() || header.iter().zip(HEADER).any(|(a, b)| a.trim() != b) {
            return Err(RecordError::Header(header.iter().collect::<Vec<_>>().join(",")).into());
        }
        let mut t = Vec::new();
        let mut ch: [Vec<T>; 6] = Default::default();
        for (row_no, row) in rdr.records().enumerate() {
            let line = row_no + 2;
            let row = row.map_err(|e| RecordError::MalformedRow {
                line,
                reason: e.to_string(),
            })?;
            if row.len() != HEADER.len() {
                return Err(RecordError::MalformedRow {
                    line,
                    reason: format!("{} fields, expected 7", row.len()),
                }
                .into());
            }
            let mut vals = [0.0f64; 7];
            for (k, field) in row.iter().enumerate() {
                vals[k] = field
                    .trim()
                    .parse()
                    .map_err(|_| RecordError::MalformedRow {
                        line,
                        reason: format!("{:?} in column {} is not a number", field, HEADER[k]),
                    })?;
                if !vals[k].is_finite() {
                    return Err(RecordError::MalformedRow {
                        line,
                        reason: format!("non-finite value in column {}", HEADER[k]),
                    }
                    .into());
                }
            }
            t.push((line, vals[0]));
            for k in 0..6 {
                ch[k].push(lit(vals[k + 1]));
            }
        }
        if t.len() < 2 {
            return Err(RecordError::TooShort {
                samples: t.len(),
                min: 2,
            }
            .into());
        }
        let step = t[1].1 - t[0].1;
        if !(step > 0.0) {
            return Err(RecordError::NonMonotone { line: t[1].0 }.into());
        }
        for w in t.windows(2) {
            let found = w[1].1 - w[0].1;
            if !(found > 0.0) {
                return Err(RecordError::NonMonotone { line: w[1].0 }.into());
            }
            if (found - step).abs() > 1e-6 * step {
                return Err(RecordError::NonUniformStep {
                    line: w[1].0,
                    expected: step,
                    found,
                }
                .into());
            }
        }
        // mean step over the whole column is less sensitive to text rounding
        let step = (t[t.len() - 1].1 - t[0].1) / (t.len() - 1) as f64;
        let sample_rate = 1.0 / step;
        let min = (2.0 * sample_rate / to_f64(fundamental)).ceil() as usize;
        if t.len() < min {
            return Err(RecordError::TooShort {
                samples: t.len(),
                min,
            }
            .into());
        }
        let [va, vb, vc, ia, ib, ic] = ch;
        Self::new(
            lit(sample_rate),
            fundamental,
            [va, vb, vc],
            [ia, ib, ic],
            meta,
        )
    }
}

pub fn write_record<T: Real>(record: &ThreePhaseRecord<T>, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    record.write_csv(&mut out)?;
    out.flush()?;
    Ok(())
}

/// Reads a record at the default 60 Hz fundamental; `meta` is the file stem.
pub fn read_record<T: Real>(path: &Path) -> Result<ThreePhaseRecord<T>> {
    let meta = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    ThreePhaseRecord::read_csv(File::open(path)?, lit(DEFAULT_FUNDAMENTAL), meta)
}
