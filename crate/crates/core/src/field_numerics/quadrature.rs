//! Brute-force composite Simpson quadrature for cross-checking the analytic
//! cell integrals. Integration happens per grid rectangle (so the integrand
//! is smooth on every panel) but the method itself is plain sampled Simpson,
//! independent of the closed forms in [`super::inner`].

use crate::accum::cis;
use crate::C64;

use super::field::Field;
use super::inner::{merge_lambda, merge_t_segments, PhaseIndex};

const TAU: f64 = std::f64::consts::TAU;

/// Composite Simpson weights over `n` panels (n even), step h: the returned
/// nodes are `x0 + i h` with weights `h/3 · [1,4,2,…,4,1]`.
fn simpson_weights(n_panels: usize) -> Vec<f64> {
    let n = n_panels.max(2) + (n_panels % 2);
    let mut w = vec![0.0; n + 1];
    w[0] = 1.0;
    w[n] = 1.0;
    for (i, slot) in w.iter_mut().enumerate().take(n).skip(1) {
        *slot = if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    w
}

/// `⟨f, T̂_{k,l,m} g⟩` by dense 2D Simpson quadrature with roughly
/// `points_per_axis` sample points along each axis (distributed over the
/// merged grid rectangles proportionally to their size).
pub fn simpson_inner_product(f: &Field, g: &Field, idx: &PhaseIndex, points_per_axis: usize) -> C64 {
    let merged = merge_lambda(f.grid(), g.grid());
    let l = idx.modulation;
    let m = idx.central as f64;
    let total_lambda: f64 = merged.iter().map(|c| c.width).sum();
    if total_lambda == 0.0 {
        return C64::new(0.0, 0.0);
    }
    let mut total = C64::new(0.0, 0.0);
    for mc in &merged {
        let Some((breaks, products)) = merge_t_segments(&f.rows()[mc.fi], &g.rows()[mc.gi], idx.shift)
        else {
            continue;
        };
        let n_lam = ((points_per_axis as f64 * mc.width / total_lambda).round() as usize).max(8);
        let n_lam = n_lam + n_lam % 2;
        let w_lam = simpson_weights(n_lam);
        let h_lam = mc.width / n_lam as f64;
        let total_t: f64 = breaks[breaks.len() - 1] - breaks[0];
        for (s, p) in products.iter().enumerate() {
            if p.norm_sqr() == 0.0 {
                continue;
            }
            let (t0, t1) = (breaks[s], breaks[s + 1]);
            let n_t = ((points_per_axis as f64 * (t1 - t0) / total_t).round() as usize).max(8);
            let n_t = n_t + n_t % 2;
            let w_t = simpson_weights(n_t);
            let h_t = (t1 - t0) / n_t as f64;
            let mut rect = C64::new(0.0, 0.0);
            for (i, wl) in w_lam.iter().enumerate() {
                let lam = mc.a0 + i as f64 * h_lam;
                // inner t-sweep with a multiplicative phase step, renormalized
                // periodically to keep drift well below the oracle tolerance
                let step = cis(TAU * lam * l * h_t);
                let mut phase = cis(TAU * (lam * l * t0 - lam * m));
                let mut row = C64::new(0.0, 0.0);
                for (j, wt) in w_t.iter().enumerate() {
                    if j > 0 {
                        phase *= step;
                        if j % 256 == 0 {
                            phase = cis(TAU * (lam * l * (t0 + j as f64 * h_t) - lam * m));
                        }
                    }
                    row += wt * phase;
                }
                rect += wl * row * lam.abs();
            }
            total += p * rect * (h_lam / 3.0) * (h_t / 3.0);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_numerics::field::{Field, UniformT};
    use crate::field_numerics::grid::LambdaGrid;
    use crate::field_numerics::inner::inner_product;
    use crate::interval_set::IntervalUnion;

    #[test]
    fn simpson_agrees_with_analytic_on_indicator_pair() {
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &"1/4".parse().unwrap());
        let t = UniformT {
            t_min: 0.0,
            dt: 0.25,
            n_t: 4,
        };
        let values = vec![vec![C64::new(1.0, 0.0); 4]; grid.len()];
        let f = Field::uniform(grid, t, values).unwrap();
        let idx = PhaseIndex {
            shift: 0.0,
            modulation: 0.0,
            central: 1,
        };
        let analytic = inner_product(&f, &f, &idx);
        let oracle = simpson_inner_product(&f, &f, &idx, 10_000);
        assert!(
            (analytic - oracle).norm() < 1e-10,
            "analytic {analytic} vs oracle {oracle}"
        );
    }
}
