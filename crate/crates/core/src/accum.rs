//! Numeric helpers shared by the frame-sum machinery: compensated
//! accumulation, stable oscillatory primitives, and a deterministic
//! fork-join helper honoring `HEISEN_THREADS`.

use crate::C64;

/// Neumaier compensated accumulator. Frame sums aggregate ~1e5 terms near
/// cancellation; error-free-transformation accumulation keeps the reduction
/// reproducible to well below the reported tolerances.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `e^{ix}` as a complex number.
#[inline]
pub fn cis(x: f64) -> C64 {
    let (s, c) = x.sin_cos();
    C64::new(c, s)
}

/// `sin(x)/x`, stable through `x = 0`.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Derivative of `sinc`: `(x cos x - sin x)/x²`, stable through `x = 0`.
#[inline]
pub fn sinc_prime(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        -x / 3.0 + x * x2 / 30.0
    } else {
        (x * x.cos() - x.sin()) / (x * x)
    }
}

/// Worker count: `HEISEN_THREADS` caps the available parallelism.
pub fn worker_count() -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match std::env::var("HEISEN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(cap) if cap >= 1 => available.min(cap),
        _ => available,
    }
}

/// Apply `work` to every item index, fanning out across workers, and return
/// the outputs in input order. The reduction stays deterministic regardless
/// of the worker count because results are recombined positionally.
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync>(n: usize, work: F) -> Vec<T> {
    let workers = worker_count().min(n.max(1));
    if workers <= 1 || n <= 1 {
        return (0..n).map(work).collect();
    }
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    let chunk = n.div_ceil(workers);
    std::thread::scope(|scope| {
        for (w, slot) in out.chunks_mut(chunk).enumerate() {
            let work = &work;
            scope.spawn(move || {
                for (off, cell) in slot.iter_mut().enumerate() {
                    *cell = Some(work(w * chunk + off));
                }
            });
        }
    });
    out.into_iter().map(|x| x.expect("worker filled slot")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_handles_cancellation() {
        let mut acc = Accumulator::new();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.total(), 1.0);
    }

    #[test]
    fn sinc_series_matches_direct() {
        for &x in &[1e-5, 5e-5, 1e-3, 0.5] {
            assert!((sinc(x) - x.sin() / x).abs() < 1e-15);
            assert!((sinc_prime(x) - (x * x.cos() - x.sin()) / (x * x)).abs() < 1e-12);
        }
        assert_eq!(sinc(0.0), 1.0);
        assert_eq!(sinc_prime(0.0), 0.0);
    }

    #[test]
    fn map_indexed_is_order_preserving() {
        let squares = map_indexed(17, |i| i * i);
        assert_eq!(squares, (0..17).map(|i| i * i).collect::<Vec<_>>());
    }
}
