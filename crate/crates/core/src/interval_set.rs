//! Exact arithmetic on finite unions of rational-endpoint half-open intervals,
//! and the two congruence decision procedures that characterize Heisenberg
//! wavelet sets.
//!
//! All sets are canonical: pieces `[lo, hi)` are sorted, pairwise disjoint and
//! non-adjacent (adjacent pieces are merged). Identification of sets up to
//! null sets is realized by this half-open canonical form together with
//! measure-based overlap tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Finite disjoint union of half-open intervals `[lo, hi)` with exact
/// rational endpoints. Models a measurable subset `I ⊂ Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalUnion {
    pieces: Vec<(Rational, Rational)>,
}

/// Which half-line an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfLine {
    Positive,
    Negative,
}

impl HalfLine {
    pub fn from_sign(sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(HalfLine::Positive),
            -1 => Ok(HalfLine::Negative),
            other => Err(Error::Parse(format!("half-line sign must be ±1, got {other}"))),
        }
    }
}

/// A piecewise map witnessing a congruence: each sub-interval of `I` carries
/// the integer shift `k(λ)` (translation) or dyadic exponent `j(λ)` (dilation)
/// applied to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceWitness {
    pub kind: CongruenceKind,
    pub pieces: Vec<WitnessPiece>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceKind {
    Translation,
    Dilation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPiece {
    pub lo: Rational,
    pub hi: Rational,
    /// Shift `k` for translation witnesses, exponent `j` for dilation ones.
    pub exponent: i64,
}

impl WitnessPiece {
    /// Image of the piece under its witness map.
    pub fn image(&self, kind: CongruenceKind) -> (Rational, Rational) {
        match kind {
            CongruenceKind::Translation => {
                let k = Rational::integer(self.exponent);
                (&self.lo + &k, &self.hi + &k)
            }
            CongruenceKind::Dilation => {
                let j = self.exponent as i32;
                (self.lo.times_pow2(j), self.hi.times_pow2(j))
            }
        }
    }
}

/// Outcome of the translation congruence test.
#[derive(Debug, Clone)]
pub enum TranslationCongruence {
    Congruent(CongruenceWitness),
    /// Two sub-pieces whose integer translates overlap, with the overlapping
    /// region of `[0,1)`.
    Overlap {
        first: WitnessPiece,
        second: WitnessPiece,
        image_overlap: (Rational, Rational),
    },
}

impl TranslationCongruence {
    pub fn is_congruent(&self) -> bool {
        matches!(self, TranslationCongruence::Congruent(_))
    }

    pub fn witness(&self) -> Option<&CongruenceWitness> {
        match self {
            TranslationCongruence::Congruent(w) => Some(w),
            _ => None,
        }
    }
}

/// Outcome of the dilation congruence test against the Shannon set.
#[derive(Debug, Clone)]
pub enum DilationCongruence {
    Congruent(CongruenceWitness),
    /// Two sub-pieces whose dyadic folds into the Shannon set overlap.
    Overlap {
        first: WitnessPiece,
        second: WitnessPiece,
        image_overlap: (Rational, Rational),
    },
    /// Part of the Shannon set left uncovered by every dyadic fold.
    Uncovered { gap: (Rational, Rational) },
}

impl DilationCongruence {
    pub fn is_congruent(&self) -> bool {
        matches!(self, DilationCongruence::Congruent(_))
    }

    pub fn witness(&self) -> Option<&CongruenceWitness> {
        match self {
            DilationCongruence::Congruent(w) => Some(w),
            _ => None,
        }
    }
}

/// Wire format for set specs: `{"intervals": [["lo","hi"], ...]}` with
/// rationals as `"p/q"` strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetSpec {
    pub intervals: Vec<(Rational, Rational)>,
}

impl IntervalUnion {
    /// Canonicalize a list of raw pieces: sort, check `lo < hi`, merge
    /// overlapping or adjacent pieces. Idempotent.
    pub fn normalize(pieces: Vec<(Rational, Rational)>) -> Result<Self> {
        for (lo, hi) in &pieces {
            if lo >= hi {
                return Err(Error::EmptyInterval {
                    lo: lo.to_string(),
                    hi: hi.to_string(),
                });
            }
        }
        let mut sorted = pieces;
        sorted.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(sorted.len());
        for (lo, hi) in sorted {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        Ok(IntervalUnion { pieces: merged })
    }

    pub fn empty() -> Self {
        IntervalUnion { pieces: Vec::new() }
    }

    /// The Shannon set `I₀ = [-1,-1/2) ∪ [1/2,1)`.
    pub fn shannon() -> Self {
        IntervalUnion::normalize(vec![
            (Rational::integer(-1), Rational::new(-1, 2).unwrap()),
            (Rational::new(1, 2).unwrap(), Rational::integer(1)),
        ])
        .unwrap()
    }

    pub fn from_spec(spec: &SetSpec) -> Result<Self> {
        IntervalUnion::normalize(spec.intervals.clone())
    }

    pub fn to_spec(&self) -> SetSpec {
        SetSpec {
            intervals: self.pieces.clone(),
        }
    }

    pub fn pieces(&self) -> &[(Rational, Rational)] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn measure(&self) -> Rational {
        let mut total = Rational::zero();
        for (lo, hi) in &self.pieces {
            total = total + (hi - lo);
        }
        total
    }

    /// Translate every piece by the integer `k`.
    pub fn translate(&self, k: i64) -> Self {
        let kr = Rational::integer(k);
        IntervalUnion {
            pieces: self
                .pieces
                .iter()
                .map(|(lo, hi)| (lo + &kr, hi + &kr))
                .collect(),
        }
    }

    /// Dilate by `2^j`: multiply every endpoint by `2^j`.
    pub fn dilate(&self, j: i32) -> Self {
        let mut pieces: Vec<(Rational, Rational)> = self
            .pieces
            .iter()
            .map(|(lo, hi)| (lo.times_pow2(j), hi.times_pow2(j)))
            .collect();
        // Positive scaling preserves order, so the result is already canonical.
        pieces.sort_by(|a, b| a.0.cmp(&b.0));
        IntervalUnion { pieces }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let mut i = 0;
        let mut j = 0;
        while i < self.pieces.len() && j < other.pieces.len() {
            let (a_lo, a_hi) = &self.pieces[i];
            let (b_lo, b_hi) = &other.pieces[j];
            let lo = a_lo.clone().max(b_lo.clone());
            let hi = a_hi.clone().min(b_hi.clone());
            if lo < hi {
                out.push((lo, hi));
            }
            if a_hi <= b_hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalUnion { pieces: out }
    }

    pub fn overlap_measure(&self, other: &Self) -> Rational {
        self.intersect(other).measure()
    }

    /// True when `self ⊆ other` (as a measure-zero-insensitive inclusion of
    /// half-open unions, which here is exact inclusion).
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.overlap_measure(other) == self.measure()
    }

    /// Restrict to one half-line (exact; the endpoint 0 may appear).
    pub fn half_line(&self, half: HalfLine) -> Self {
        let band = match half {
            HalfLine::Positive => (Rational::zero(), None),
            HalfLine::Negative => (Rational::zero(), Some(())),
        };
        let mut out = Vec::new();
        for (lo, hi) in &self.pieces {
            match band {
                (ref z, None) => {
                    let lo2 = lo.clone().max(z.clone());
                    if &lo2 < hi {
                        out.push((lo2, hi.clone()));
                    }
                }
                (ref z, Some(())) => {
                    let hi2 = hi.clone().min(z.clone());
                    if lo < &hi2 {
                        out.push((lo.clone(), hi2));
                    }
                }
            }
        }
        IntervalUnion { pieces: out }
    }

    /// `Σ ln(hi/lo)` over the pieces in the chosen half-line, i.e. the
    /// integral of `|λ|⁻¹` there. Endpoint ratios are formed exactly before
    /// the logarithm.
    pub fn log_measure(&self, half: HalfLine) -> Result<f64> {
        let restricted = self.half_line(half);
        let mut total = 0.0;
        for (lo, hi) in &restricted.pieces {
            if lo.is_zero() || hi.is_zero() {
                return Err(Error::TouchesZero);
            }
            let ratio = match half {
                HalfLine::Positive => hi / lo,
                HalfLine::Negative => lo / hi,
            };
            total += ratio.to_f64().ln();
        }
        Ok(total)
    }

    /// Decide whether the integer translates of `I` are disjoint, i.e. whether
    /// `I` is translation congruent with a subset of the unit interval.
    ///
    /// Folds every piece mod 1 into `[0,1)` in exact arithmetic. On success
    /// the witness records the shift `k(λ)` on each sub-piece; on failure two
    /// sub-pieces with overlapping images are returned.
    pub fn is_translation_congruent_unit(&self) -> TranslationCongruence {
        // Split each piece at integer boundaries; each sub-piece folds by one shift.
        let mut folded: Vec<(Rational, Rational, WitnessPiece)> = Vec::new();
        for (lo, hi) in &self.pieces {
            let mut cur = lo.clone();
            while &cur < hi {
                let next_int = Rational::integer(cur.floor_int() + 1);
                let stop = next_int.min(hi.clone());
                let shift = -cur.floor_int();
                let piece = WitnessPiece {
                    lo: cur.clone(),
                    hi: stop.clone(),
                    exponent: shift,
                };
                let (ilo, ihi) = piece.image(CongruenceKind::Translation);
                folded.push((ilo, ihi, piece));
                cur = stop;
            }
        }
        folded.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        for w in folded.windows(2) {
            let (ref a_lo, ref a_hi, ref a_piece) = w[0];
            let (ref b_lo, ref b_hi, ref b_piece) = w[1];
            if b_lo < a_hi {
                let ov_lo = b_lo.clone().max(a_lo.clone());
                let ov_hi = a_hi.clone().min(b_hi.clone());
                return TranslationCongruence::Overlap {
                    first: a_piece.clone(),
                    second: b_piece.clone(),
                    image_overlap: (ov_lo, ov_hi),
                };
            }
        }
        TranslationCongruence::Congruent(CongruenceWitness {
            kind: CongruenceKind::Translation,
            pieces: folded.into_iter().map(|(_, _, p)| p).collect(),
        })
    }

    /// Decide whether the dyadic dilates of `I` tile the line, i.e. whether
    /// `I` is dilation congruent with the Shannon set
    /// `I₀ = [-1,-1/2) ∪ [1/2,1)`.
    ///
    /// Folds `2^j · piece ∩ I₀` over the finite range of relevant `j`,
    /// separately on each half-line; the folds must cover `I₀` with zero
    /// overlap. Requires every endpoint nonzero.
    pub fn is_dilation_congruent_shannon(&self) -> Result<DilationCongruence> {
        let half = Rational::new(1, 2).unwrap();
        let one = Rational::one();
        let mut witness_pieces: Vec<WitnessPiece> = Vec::new();
        // Collect folded images per half-line as (image, source piece).
        for half_line in [HalfLine::Positive, HalfLine::Negative] {
            let restricted = self.half_line(half_line);
            let mut images: Vec<(Rational, Rational, WitnessPiece)> = Vec::new();
            for (lo, hi) in restricted.pieces() {
                if lo.is_zero() || hi.is_zero() {
                    return Err(Error::TouchesZero);
                }
                // Work with absolute values: |piece| = [a, b), 0 < a < b.
                let (a, b) = match half_line {
                    HalfLine::Positive => (lo.clone(), hi.clone()),
                    HalfLine::Negative => (hi.abs(), lo.abs()),
                };
                // All j with 2^j [a,b) ∩ [1/2,1) nonempty: 2^j b > 1/2 and 2^j a < 1.
                let mut j = 0i32;
                while b.times_pow2(j) <= half {
                    j += 1;
                }
                while b.times_pow2(j - 1) > half {
                    j -= 1;
                }
                while a.times_pow2(j) < one {
                    let scaled_lo = a.times_pow2(j).max(half.clone());
                    let scaled_hi = b.times_pow2(j).min(one.clone());
                    if scaled_lo < scaled_hi {
                        // Map back to the source sub-interval of I.
                        let (src_lo, src_hi) = match half_line {
                            HalfLine::Positive => {
                                (scaled_lo.times_pow2(-j), scaled_hi.times_pow2(-j))
                            }
                            HalfLine::Negative => {
                                (-scaled_hi.times_pow2(-j), -scaled_lo.times_pow2(-j))
                            }
                        };
                        let piece = WitnessPiece {
                            lo: src_lo,
                            hi: src_hi,
                            exponent: j as i64,
                        };
                        let (img_lo, img_hi) = match half_line {
                            HalfLine::Positive => (scaled_lo, scaled_hi),
                            HalfLine::Negative => (-scaled_hi, -scaled_lo),
                        };
                        images.push((img_lo, img_hi, piece));
                    }
                    j += 1;
                }
            }
            // The images must tile I₀ on this half-line exactly.
            let (target_lo, target_hi) = match half_line {
                HalfLine::Positive => (half.clone(), one.clone()),
                HalfLine::Negative => (-&one, -&half),
            };
            images.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
            let mut cursor = target_lo.clone();
            for (idx, (img_lo, img_hi, _)) in images.iter().enumerate() {
                match img_lo.cmp(&cursor) {
                    std::cmp::Ordering::Greater => {
                        return Ok(DilationCongruence::Uncovered {
                            gap: (cursor, img_lo.clone()),
                        });
                    }
                    std::cmp::Ordering::Less => {
                        // Overlap with the previous image.
                        let prev = &images[idx - 1];
                        let ov_hi = prev.1.clone().min(img_hi.clone());
                        return Ok(DilationCongruence::Overlap {
                            first: prev.2.clone(),
                            second: images[idx].2.clone(),
                            image_overlap: (img_lo.clone(), ov_hi),
                        });
                    }
                    std::cmp::Ordering::Equal => {
                        cursor = img_hi.clone();
                    }
                }
            }
            if cursor < target_hi {
                return Ok(DilationCongruence::Uncovered {
                    gap: (cursor, target_hi),
                });
            }
            witness_pieces.extend(images.into_iter().map(|(_, _, p)| p));
        }
        witness_pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
        Ok(DilationCongruence::Congruent(CongruenceWitness {
            kind: CongruenceKind::Dilation,
            pieces: witness_pieces,
        }))
    }

    /// Conjunction of the two congruence tests, for `I ⊆ [-1, 1]`.
    pub fn is_heisenberg_wavelet_set(&self) -> Result<bool> {
        let band = IntervalUnion::normalize(vec![(Rational::integer(-1), Rational::integer(1))])?;
        if !self.is_subset_of(&band) {
            return Err(Error::OutsideBand {
                lo: "-1".into(),
                hi: "1".into(),
            });
        }
        let translation = self.is_translation_congruent_unit().is_congruent();
        let dilation = self.is_dilation_congruent_shannon()?.is_congruent();
        Ok(translation && dilation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn iu(pairs: &[(&str, &str)]) -> IntervalUnion {
        IntervalUnion::normalize(pairs.iter().map(|(a, b)| (r(a), r(b))).collect()).unwrap()
    }

    #[test]
    fn normalize_merges_adjacent() {
        let set = iu(&[("1/2", "1"), ("1/4", "1/2")]);
        assert_eq!(set.pieces(), iu(&[("1/4", "1")]).pieces());
    }

    #[test]
    fn normalize_keeps_canonical_input() {
        let set = iu(&[("-1", "-1/2"), ("1/2", "1")]);
        assert_eq!(set.pieces().len(), 2);
        assert_eq!(set, IntervalUnion::shannon());
    }

    #[test]
    fn normalize_merges_overlap() {
        // sweep-line union oracle: [0,1) ∪ [1/2,3/2) = [0,3/2)
        let set = iu(&[("0", "1"), ("1/2", "3/2")]);
        assert_eq!(set.pieces(), iu(&[("0", "3/2")]).pieces());
    }

    #[test]
    fn normalize_rejects_empty_pieces() {
        let err = IntervalUnion::normalize(vec![(r("1"), r("1"))]).unwrap_err();
        assert!(matches!(err, Error::EmptyInterval { .. }));
    }

    #[test]
    fn measure_and_overlap() {
        assert_eq!(IntervalUnion::shannon().measure(), r("1"));
        let a = iu(&[("3/8", "3/4")]);
        let b = iu(&[("1/4", "5/8")]);
        // exact intersection oracle: [3/8,3/4) ∩ [1/4,5/8) = [3/8,5/8)
        assert_eq!(a.overlap_measure(&b), r("1/4"));
    }

    #[test]
    fn translate_and_dilate() {
        let set = iu(&[("1/2", "1")]);
        assert_eq!(set.dilate(1), iu(&[("1", "2")]));
        assert_eq!(set.translate(-1), iu(&[("-1/2", "0")]));
        let neg = iu(&[("-3/4", "-3/8")]);
        assert_eq!(neg.dilate(1), iu(&[("-3/2", "-3/4")]));
    }

    #[test]
    fn log_measure_values() {
        let shannon = IntervalUnion::shannon();
        let ln2 = std::f64::consts::LN_2;
        assert!((shannon.log_measure(HalfLine::Positive).unwrap() - ln2).abs() < 1e-14);
        assert!((shannon.log_measure(HalfLine::Negative).unwrap() - ln2).abs() < 1e-14);
        assert!((iu(&[("1", "2")]).log_measure(HalfLine::Positive).unwrap() - ln2).abs() < 1e-14);
        // Σ ln(hi/lo) by hand: ln((3/4)/(3/8)) = ln 2 on the negative side
        let two_sided = iu(&[("3/8", "3/4"), ("-3/4", "-3/8")]);
        assert!((two_sided.log_measure(HalfLine::Negative).unwrap() - ln2).abs() < 1e-14);
        assert!(iu(&[("0", "1")]).log_measure(HalfLine::Positive).is_err());
    }

    #[test]
    fn translation_congruence_shannon() {
        let outcome = IntervalUnion::shannon().is_translation_congruent_unit();
        let witness = outcome.witness().expect("shannon set folds disjointly");
        // mod-1 folding oracle: shifts {+1 on [-1,-1/2), 0 on [1/2,1)}
        assert_eq!(witness.pieces.len(), 2);
        assert_eq!(witness.pieces[0].exponent, 1);
        assert_eq!(witness.pieces[1].exponent, 0);
        let images: Vec<_> = witness
            .pieces
            .iter()
            .map(|p| p.image(CongruenceKind::Translation))
            .collect();
        assert_eq!(images[0], (r("0"), r("1/2")));
        assert_eq!(images[1], (r("1/2"), r("1")));
    }

    #[test]
    fn translation_congruence_failure() {
        let set = iu(&[("3/8", "3/4"), ("-3/4", "-3/8")]);
        match set.is_translation_congruent_unit() {
            TranslationCongruence::Overlap { image_overlap, .. } => {
                // folded images overlap on [3/8, 5/8)
                assert_eq!(image_overlap, (r("3/8"), r("5/8")));
            }
            other => panic!("expected overlap, got {other:?}"),
        }
    }

    #[test]
    fn translation_congruence_unit_interval() {
        let outcome = iu(&[("0", "1")]).is_translation_congruent_unit();
        let witness = outcome.witness().unwrap();
        assert_eq!(witness.pieces.len(), 1);
        assert_eq!(witness.pieces[0].exponent, 0);
    }

    #[test]
    fn dilation_congruence_shannon_identity() {
        let outcome = IntervalUnion::shannon()
            .is_dilation_congruent_shannon()
            .unwrap();
        let witness = outcome.witness().expect("I₀ is dilation congruent with itself");
        assert!(witness.pieces.iter().all(|p| p.exponent == 0));
    }

    #[test]
    fn dilation_congruence_two_scale() {
        // dyadic folding oracle: [1/2,3/4) with j=0, [3/8,1/2) → [3/4,1) with j=1
        let set = iu(&[("3/8", "3/4"), ("-3/4", "-3/8")]);
        let outcome = set.is_dilation_congruent_shannon().unwrap();
        let witness = outcome.witness().expect("two-scale set tiles I₀");
        let pos: Vec<_> = witness
            .pieces
            .iter()
            .filter(|p| p.lo.is_positive())
            .collect();
        assert_eq!(pos.len(), 2);
        assert_eq!((pos[0].lo.clone(), pos[0].hi.clone()), (r("3/8"), r("1/2")));
        assert_eq!(pos[0].exponent, 1);
        assert_eq!((pos[1].lo.clone(), pos[1].hi.clone()), (r("1/2"), r("3/4")));
        assert_eq!(pos[1].exponent, 0);
    }

    #[test]
    fn dilation_congruence_uncovered() {
        // [1/2,3/4) alone: [3/4,1) uncovered on the positive side
        let set = iu(&[("1/2", "3/4")]);
        match set.is_dilation_congruent_shannon().unwrap() {
            DilationCongruence::Uncovered { gap } => {
                assert_eq!(gap, (r("3/4"), r("1")));
            }
            other => panic!("expected uncovered gap, got {other:?}"),
        }
    }

    #[test]
    fn dilation_congruence_negative_side_missing() {
        // [1/2,1) alone tiles the positive half but leaves [-1,-1/2) empty.
        let set = iu(&[("1/2", "1")]);
        match set.is_dilation_congruent_shannon().unwrap() {
            DilationCongruence::Uncovered { gap } => {
                assert_eq!(gap, (r("-1"), r("-1/2")));
            }
            other => panic!("expected negative-side gap, got {other:?}"),
        }
    }

    #[test]
    fn dilation_congruence_overlap() {
        // [1/2,1) ∪ [5/4,2): the second piece folds onto [5/8,1) at j=-1, overlapping.
        let set = iu(&[("1/2", "1"), ("5/4", "2")]);
        match set.is_dilation_congruent_shannon().unwrap() {
            DilationCongruence::Overlap { image_overlap, .. } => {
                assert_eq!(image_overlap.0, r("5/8"));
            }
            other => panic!("expected overlap, got {other:?}"),
        }
    }

    #[test]
    fn dilation_requires_nonzero_endpoints() {
        assert!(matches!(
            iu(&[("0", "1/2")]).is_dilation_congruent_shannon(),
            Err(Error::TouchesZero)
        ));
    }

    #[test]
    fn wavelet_set_decision() {
        assert!(IntervalUnion::shannon().is_heisenberg_wavelet_set().unwrap());
        // translation test fails
        assert!(!iu(&[("3/8", "3/4"), ("-3/4", "-3/8")])
            .is_heisenberg_wavelet_set()
            .unwrap());
        // dilation test fails on the negative half-line
        assert!(!iu(&[("1/2", "1")]).is_heisenberg_wavelet_set().unwrap());
        // outside the band [-1,1]
        assert!(matches!(
            iu(&[("1/2", "3/2")]).is_heisenberg_wavelet_set(),
            Err(Error::OutsideBand { .. })
        ));
    }

    #[test]
    fn witnesses_are_checkable() {
        // Re-applying the witness map must reproduce a subset of [0,1)
        // (translation) or exactly I₀ (dilation), with zero overlap.
        for set in [
            IntervalUnion::shannon(),
            iu(&[("-1", "-7/8"), ("7/16", "1/2"), ("1/2", "15/16")]),
        ] {
            if let TranslationCongruence::Congruent(w) = set.is_translation_congruent_unit() {
                let images: Vec<(Rational, Rational)> = w
                    .pieces
                    .iter()
                    .map(|p| p.image(CongruenceKind::Translation))
                    .collect();
                let union = IntervalUnion::normalize(images.clone()).unwrap();
                let total: Rational = images
                    .iter()
                    .fold(Rational::zero(), |acc, (lo, hi)| acc + (hi - lo));
                assert_eq!(union.measure(), total, "zero overlap");
                assert_eq!(union.measure(), set.measure());
                let unit = iu(&[("0", "1")]);
                assert!(union.is_subset_of(&unit));
            } else {
                panic!("expected translation congruence for {set:?}");
            }
        }
        let two_scale = iu(&[("3/8", "3/4"), ("-3/4", "-3/8")]);
        if let DilationCongruence::Congruent(w) =
            two_scale.is_dilation_congruent_shannon().unwrap()
        {
            let images: Vec<(Rational, Rational)> = w
                .pieces
                .iter()
                .map(|p| p.image(CongruenceKind::Dilation))
                .collect();
            let union = IntervalUnion::normalize(images.clone()).unwrap();
            assert_eq!(union, IntervalUnion::shannon());
            let total: Rational = images
                .iter()
                .fold(Rational::zero(), |acc, (lo, hi)| acc + (hi - lo));
            assert_eq!(total, Rational::one(), "zero overlap in the tiling");
        } else {
            panic!("expected dilation congruence");
        }
    }

    #[test]
    fn set_spec_round_trip() {
        let set = iu(&[("-3/4", "-3/8"), ("3/8", "3/4")]);
        let json = serde_json::to_string(&set.to_spec()).unwrap();
        let spec: SetSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(IntervalUnion::from_spec(&spec).unwrap(), set);
    }
}
