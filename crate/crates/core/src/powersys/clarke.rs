//! Clarke (α, β, 0) modal transform with the amplitude-invariant 1/3 scaling:
//!
//! ```text
//! ⎡x_α⎤       ⎡2  −1   −1⎤ ⎡x_a⎤
//! ⎢x_β⎥ = 1/3 ⎢0  √3  −√3⎥ ⎢x_b⎥
//! ⎣x_0⎦       ⎣1   1    1⎦ ⎣x_c⎦
//! ```

use super::record::ThreePhaseRecord;
use crate::scalar::{lit, Real};

/// Modal images of a record's voltages and currents.
#[derive(Clone, Debug, PartialEq)]
pub struct ModalRecord<T> {
    pub v_alpha: Vec<T>,
    pub v_beta: Vec<T>,
    pub v_zero: Vec<T>,
    pub i_alpha: Vec<T>,
    pub i_beta: Vec<T>,
    pub i_zero: Vec<T>,
}

impl<T> ModalRecord<T> {
    /// Voltage channels in `[α, β, 0]` order.
    pub fn voltages(&self) -> [&[T]; 3] {
        [&self.v_alpha, &self.v_beta, &self.v_zero]
    }

    pub fn currents(&self) -> [&[T]; 3] {
        [&self.i_alpha, &self.i_beta, &self.i_zero]
    }
}

#[inline]
pub fn clarke_sample<T: Real>(a: T, b: T, c: T) -> [T; 3] {
    let three = lit::<T>(3.0);
    let sqrt3 = three.sqrt();
    [
        (a + a - b - c) / three,
        sqrt3 * (b - c) / three,
        (a + b + c) / three,
    ]
}

/// Applies [`clarke_sample`] to three equally long phase sequences.
pub fn clarke_series<T: Real>(a: &[T], b: &[T], c: &[T]) -> [Vec<T>; 3] {
    let mut out: [Vec<T>; 3] = Default::default();
    for ((&xa, &xb), &xc) in a.iter().zip(b).zip(c) {
        let m = clarke_sample(xa, xb, xc);
        for (o, v) in out.iter_mut().zip(m) {
            o.push(v);
        }
    }
    out
}

pub fn clarke<T: Real>(record: &ThreePhaseRecord<T>) -> ModalRecord<T> {
    let [v_alpha, v_beta, v_zero] = clarke_series(&record.va, &record.vb, &record.vc);
    let [i_alpha, i_beta, i_zero] = clarke_series(&record.ia, &record.ib, &record.ic);
    ModalRecord {
        v_alpha,
        v_beta,
        v_zero,
        i_alpha,
        i_beta,
        i_zero,
    }
}
