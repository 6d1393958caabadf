//! The group `N`, its dilation automorphisms, and the Schrödinger
//! representation acting on sampled lines.
//!
//! The group law implemented here is the polarized Heisenberg product
//! `(x₁,x₂,x₃)·(y₁,y₂,y₃) = (x₁+y₁, x₂+y₂, x₃+y₃+x₁y₂)` — the unique choice
//! under which `π_λ(x)π_λ(y) = π_λ(xy)` holds for the representation below.

use crate::accum::{cis, Accumulator};
use crate::error::{Error, Result};
use crate::C64;

/// Element `(x₁, x₂, x₃)` of `N ≅ ℝ³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        x1: 0.0,
        x2: 0.0,
        x3: 0.0,
    };

    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        GroupElement { x1, x2, x3 }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            x1: -self.x1,
            x2: -self.x2,
            x3: -self.x3 + self.x1 * self.x2,
        }
    }
}

/// Group product.
pub fn multiply(x: &GroupElement, y: &GroupElement) -> GroupElement {
    GroupElement {
        x1: x.x1 + y.x1,
        x2: x.x2 + y.x2,
        x3: x.x3 + y.x3 + x.x1 * y.x2,
    }
}

/// Dilation automorphism `a·x = (a^{1/2}x₁, a^{1/2}x₂, a x₃)`, `a > 0`.
pub fn dilate_element(a: f64, x: &GroupElement) -> Result<GroupElement> {
    if !(a > 0.0) {
        return Err(Error::NonpositiveScale(a));
    }
    let s = a.sqrt();
    Ok(GroupElement {
        x1: s * x.x1,
        x2: s * x.x2,
        x3: a * x.x3,
    })
}

/// Piecewise-constant function on the line: value `values[n]` on the cell
/// `[t_min + n·dt, t_min + (n+1)·dt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLine {
    pub t_min: f64,
    pub dt: f64,
    pub values: Vec<C64>,
}

impl SampledLine {
    pub fn new(t_min: f64, dt: f64, values: Vec<C64>) -> Self {
        assert!(dt > 0.0, "cell width must be positive");
        SampledLine { t_min, dt, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cell_midpoint(&self, n: usize) -> f64 {
        self.t_min + (n as f64 + 0.5) * self.dt
    }

    /// Breakpoints `t_min, t_min+dt, …` (length `len()+1`).
    pub fn breakpoints(&self) -> Vec<f64> {
        (0..=self.values.len())
            .map(|n| self.t_min + n as f64 * self.dt)
            .collect()
    }

    /// `∫ |f|² dt`.
    pub fn norm2(&self) -> f64 {
        let mut acc = Accumulator::new();
        for v in &self.values {
            acc.add(v.norm_sqr() * self.dt);
        }
        acc.total()
    }

    pub fn scale(&self, c: C64) -> SampledLine {
        SampledLine {
            t_min: self.t_min,
            dt: self.dt,
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }
}

/// How far a shift may sit from the sample lattice before it is rejected.
const SHIFT_ALIGNMENT_TOL: f64 = 1e-9;

pub(crate) fn aligned_steps(shift: f64, dt: f64) -> Result<i64> {
    let steps = shift / dt;
    let rounded = steps.round();
    if (steps - rounded).abs() > SHIFT_ALIGNMENT_TOL {
        return Err(Error::MisalignedShift { shift, dt });
    }
    Ok(rounded as i64)
}

/// Schrödinger representation
/// `(π_λ(x) f)(t) = e^{2πiλx₃} e^{-2πiλx₂ t} f(t - x₁)`.
///
/// The shift `x₁` must be grid aligned; the modulation factor is evaluated at
/// cell midpoints, which keeps the operator exactly norm preserving on the
/// sampled model.
pub fn schrodinger(lambda: f64, x: &GroupElement, f: &SampledLine) -> Result<SampledLine> {
    if lambda == 0.0 {
        return Err(Error::Parse("schrodinger representation requires λ ≠ 0".into()));
    }
    let steps = aligned_steps(x.x1, f.dt)?;
    let t_min = f.t_min + steps as f64 * f.dt;
    let central = cis(2.0 * std::f64::consts::PI * lambda * x.x3);
    let shifted = SampledLine {
        t_min,
        dt: f.dt,
        values: f.values.clone(),
    };
    let values = shifted
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let t = shifted.cell_midpoint(n);
            central * cis(-2.0 * std::f64::consts::PI * lambda * x.x2 * t) * v
        })
        .collect();
    Ok(SampledLine {
        t_min,
        dt: f.dt,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &GroupElement, b: &GroupElement, tol: f64) -> bool {
        (a.x1 - b.x1).abs() <= tol && (a.x2 - b.x2).abs() <= tol && (a.x3 - b.x3).abs() <= tol
    }

    #[test]
    fn identity_and_inverse() {
        let y = GroupElement::new(0.3, -1.2, 2.5);
        assert_eq!(multiply(&GroupElement::IDENTITY, &y), y);
        assert_eq!(multiply(&y, &GroupElement::IDENTITY), y);
        let prod = multiply(&y, &y.inverse());
        assert!(close(&prod, &GroupElement::IDENTITY, 1e-15));
        let prod = multiply(&y.inverse(), &y);
        assert!(close(&prod, &GroupElement::IDENTITY, 1e-15));
    }

    #[test]
    fn product_example() {
        let x = GroupElement::new(1.0, 0.0, 0.0);
        let y = GroupElement::new(0.0, 1.0, 0.0);
        assert_eq!(multiply(&x, &y), GroupElement::new(1.0, 1.0, 1.0));
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        for _ in 0..200 {
            let x = GroupElement::new(next(), next(), next());
            let y = GroupElement::new(next(), next(), next());
            let z = GroupElement::new(next(), next(), next());
            let lhs = multiply(&multiply(&x, &y), &z);
            let rhs = multiply(&x, &multiply(&y, &z));
            assert!(close(&lhs, &rhs, 1e-12));
        }
    }

    #[test]
    fn dilation_example_and_automorphism() {
        let x = GroupElement::new(1.0, 1.0, 1.0);
        let d = dilate_element(4.0, &x).unwrap();
        assert_eq!(d, GroupElement::new(2.0, 2.0, 4.0));
        assert_eq!(dilate_element(1.0, &x).unwrap(), x);
        assert!(dilate_element(0.0, &x).is_err());
        assert!(dilate_element(-2.0, &x).is_err());

        let mut state = 88172645463325252u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        for _ in 0..100 {
            let a = next().abs() + 0.1;
            let x = GroupElement::new(next(), next(), next());
            let y = GroupElement::new(next(), next(), next());
            let lhs = dilate_element(a, &multiply(&x, &y)).unwrap();
            let rhs = multiply(
                &dilate_element(a, &x).unwrap(),
                &dilate_element(a, &y).unwrap(),
            );
            assert!(close(&lhs, &rhs, 1e-12));
        }
    }

    fn sample_bump() -> SampledLine {
        let dt = 1.0 / 16.0;
        let values = (0..64)
            .map(|n| {
                let t = -2.0 + (n as f64 + 0.5) * dt;
                C64::new((-t * t).exp(), 0.3 * t)
            })
            .collect();
        SampledLine::new(-2.0, dt, values)
    }

    #[test]
    fn schrodinger_identity_and_unitarity() {
        let f = sample_bump();
        let same = schrodinger(0.7, &GroupElement::IDENTITY, &f).unwrap();
        assert_eq!(same, f);
        let x = GroupElement::new(0.25, 1.7, -0.4);
        let g = schrodinger(0.7, &x, &f).unwrap();
        assert!((g.norm2() - f.norm2()).abs() < 1e-12);
    }

    #[test]
    fn schrodinger_rejects_misaligned_shift() {
        let f = sample_bump();
        let x = GroupElement::new(0.03, 0.0, 0.0);
        assert!(matches!(
            schrodinger(1.0, &x, &f),
            Err(Error::MisalignedShift { .. })
        ));
    }

    #[test]
    fn schrodinger_representation_property() {
        // π_λ(x) π_λ(y) = π_λ(x·y) for grid-aligned shifts.
        let f = sample_bump();
        let lambda = -0.6;
        let x = GroupElement::new(0.5, -0.8, 0.3);
        let y = GroupElement::new(-0.25, 1.1, -0.7);
        let inner = schrodinger(lambda, &y, &f).unwrap();
        let lhs = schrodinger(lambda, &x, &inner).unwrap();
        let rhs = schrodinger(lambda, &multiply(&x, &y), &f).unwrap();
        assert_eq!(lhs.t_min, rhs.t_min);
        let mut err2 = 0.0;
        for (a, b) in lhs.values.iter().zip(&rhs.values) {
            err2 += (a - b).norm_sqr() * lhs.dt;
        }
        assert!(err2.sqrt() < 1e-9, "fiber-norm deviation {}", err2.sqrt());
    }
}
