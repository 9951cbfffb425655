//! Segmented regression: per-interval fit costs wired into the
//! segmentation recurrences.

use crate::dp::{segment_fixed_count, segment_min_length, segment_opt, Segment};
use crate::error::{DpError, Result};
use crate::lifting::Acceptance;
use crate::semiring::{MinPlus, Tupled, ViterbiSimple};

/// Segments longer than this are costed by a centered two-pass sum
/// instead of prefix sums.
pub const CENTERING_THRESHOLD: usize = 10_000;

/// Segments up to this length are also summed directly; prefix-sum
/// differences lose all relative precision when the residual is tiny.
pub const SHORT_SEGMENT: usize = 16;

/// Samples `y_1..y_N`; non-empty and finite.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    samples: Vec<f64>,
}

impl TimeSeries {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(DpError::InvalidSeries("series is empty".into()));
        }
        if let Some(k) = samples.iter().position(|y| !y.is_finite()) {
            return Err(DpError::InvalidSeries(format!(
                "sample {} is not finite",
                k + 1
            )));
        }
        Ok(TimeSeries { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// `y_n`, 1-based.
    pub fn at(&self, n: usize) -> f64 {
        self.samples[n - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    ConstantMean,
    Linear,
}

/// Per-segment model, error exponent `p` and regularization `λ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentCostModel {
    kind: ModelKind,
    exponent: f64,
    lambda: f64,
}

impl SegmentCostModel {
    pub fn new(kind: ModelKind, exponent: f64, lambda: f64) -> Result<Self> {
        if !(exponent > 0.0 && exponent.is_finite()) {
            return Err(DpError::InvalidConstraint(format!(
                "exponent must be positive, got {exponent}"
            )));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(DpError::InvalidConstraint(format!(
                "lambda must be non-negative, got {lambda}"
            )));
        }
        Ok(SegmentCostModel {
            kind,
            exponent,
            lambda,
        })
    }

    /// Least squares with no regularization.
    pub fn least_squares(kind: ModelKind) -> Self {
        SegmentCostModel {
            kind,
            exponent: 2.0,
            lambda: 0.0,
        }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

/// Fit `f(n) = intercept + slope · n` on one interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fit {
    pub intercept: f64,
    pub slope: f64,
}

impl Fit {
    pub fn at(&self, n: usize) -> f64 {
        self.intercept + self.slope * n as f64
    }
}

#[derive(Clone, Copy, Default)]
struct Moments {
    k: f64,
    x: f64,
    xx: f64,
    y: f64,
    xy: f64,
    yy: f64,
}

/// Interval fit costs `e_{i,j} = (1/p) Σ_{n=i..j} |y_n - f(n)|^p`.
///
/// For `p = 2` each query is `O(1)` from prefix sums of
/// `(1, n, n², y, n y, y²)`, taken about the global means of `n` and `y`.
/// Other exponents fit by least squares and sum residuals directly.
#[derive(Clone, Debug)]
pub struct SegmentCosts<'a> {
    ts: &'a TimeSeries,
    model: SegmentCostModel,
    x_shift: f64,
    y_shift: f64,
    // prefix[k] = moments of samples 1..=k, shifted
    prefix: Vec<[f64; 5]>,
}

impl<'a> SegmentCosts<'a> {
    pub fn new(ts: &'a TimeSeries, model: SegmentCostModel) -> Self {
        let n = ts.len();
        let x_shift = (n as f64 + 1.0) / 2.0;
        let y_shift = ts.samples.iter().sum::<f64>() / n as f64;
        let mut prefix = Vec::with_capacity(n + 1);
        let mut acc = [0.0; 5];
        prefix.push(acc);
        for (k, &y) in ts.samples.iter().enumerate() {
            let x = (k + 1) as f64 - x_shift;
            let y = y - y_shift;
            acc[0] += x;
            acc[1] += x * x;
            acc[2] += y;
            acc[3] += x * y;
            acc[4] += y * y;
            prefix.push(acc);
        }
        SegmentCosts {
            ts,
            model,
            x_shift,
            y_shift,
            prefix,
        }
    }

    pub fn model(&self) -> &SegmentCostModel {
        &self.model
    }

    pub fn series(&self) -> &TimeSeries {
        self.ts
    }

    fn moments(&self, i: usize, j: usize) -> Moments {
        let len = j + 1 - i;
        if len > CENTERING_THRESHOLD || len <= SHORT_SEGMENT {
            return self.centered_moments(i, j);
        }
        let (a, b) = (&self.prefix[i - 1], &self.prefix[j]);
        Moments {
            k: (j + 1 - i) as f64,
            x: b[0] - a[0],
            xx: b[1] - a[1],
            y: b[2] - a[2],
            xy: b[3] - a[3],
            yy: b[4] - a[4],
        }
        .center()
    }

    fn centered_moments(&self, i: usize, j: usize) -> Moments {
        let k = (j + 1 - i) as f64;
        let ys = &self.ts.samples[i - 1..j];
        let mx = (i + j) as f64 / 2.0;
        let my = ys.iter().sum::<f64>() / k;
        let mut m = Moments {
            k,
            ..Moments::default()
        };
        for (off, &y) in ys.iter().enumerate() {
            let dx = (i + off) as f64 - mx;
            let dy = y - my;
            m.xx += dx * dx;
            m.xy += dx * dy;
            m.yy += dy * dy;
        }
        // store means in x / y for fit recovery
        m.x = mx - self.x_shift;
        m.y = my - self.y_shift;
        m
    }

    /// Least-squares fit on `[i, j]`; single points get slope 0.
    pub fn fit(&self, i: usize, j: usize) -> Fit {
        let m = self.moments(i, j);
        let mean_x = m.x + self.x_shift;
        let mean_y = m.y + self.y_shift;
        let slope = match self.model.kind {
            ModelKind::Linear if m.xx > 0.0 => m.xy / m.xx,
            _ => 0.0,
        };
        Fit {
            intercept: mean_y - slope * mean_x,
            slope,
        }
    }

    /// `e_{i,j}`, clamped at zero.
    pub fn cost(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        if self.model.exponent != 2.0 {
            return self.cost_by_summation(i, j);
        }
        if self.model.kind == ModelKind::Linear && j - i < 2 {
            // a line through two points is exact
            return 0.0;
        }
        let m = self.moments(i, j);
        let sse = match self.model.kind {
            ModelKind::ConstantMean => m.yy,
            ModelKind::Linear if m.xx > 0.0 => m.yy - m.xy * m.xy / m.xx,
            ModelKind::Linear => m.yy,
        };
        (sse / 2.0).max(0.0)
    }

    /// `e_{i,j}` by direct summation of residuals of [`Self::fit`].
    pub fn cost_by_summation(&self, i: usize, j: usize) -> f64 {
        let fit = self.fit(i, j);
        let p = self.model.exponent;
        (i..=j)
            .map(|n| (self.ts.at(n) - fit.at(n)).abs().powf(p))
            .sum::<f64>()
            / p
    }

    /// `w(i, j) = e_{i,j} + λ`.
    pub fn weight(&self, seg: Segment) -> f64 {
        self.cost(seg.start, seg.end) + self.model.lambda
    }
}

impl Moments {
    /// Convert raw sums to centered second moments, keeping the means in
    /// `x` and `y`.
    fn center(self) -> Moments {
        let mx = self.x / self.k;
        let my = self.y / self.k;
        Moments {
            k: self.k,
            x: mx,
            y: my,
            xx: self.xx - self.x * mx,
            xy: self.xy - self.x * my,
            yy: self.yy - self.y * my,
        }
    }
}

/// Weight map `w(i, j) = e_{i,j} + λ` for the segmentation recurrences.
pub fn regularized_weights<'c>(costs: &'c SegmentCosts<'_>) -> impl Fn(Segment) -> f64 + 'c {
    move |seg| costs.weight(seg)
}

/// Constraint on the optimal segmentation.
#[derive(Clone, Debug)]
pub enum SegmentConstraint {
    None,
    /// Number of segments in `lo..=hi`.
    CountRange {
        lo: usize,
        hi: usize,
    },
    /// Accepted values of the shortest segment length.
    MinLength(Acceptance),
}

/// Optimal segmentation and its cost.
#[derive(Clone, Debug, PartialEq)]
pub struct Segmentation {
    pub cost: f64,
    pub segments: Vec<Segment>,
}

impl Segmentation {
    /// Breakpoints: the last index of every segment but the final one.
    pub fn breakpoints(&self) -> Vec<usize> {
        let k = self.segments.len().saturating_sub(1);
        self.segments[..k].iter().map(|s| s.end).collect()
    }

    /// Fitted value at every sample.
    pub fn fitted(&self, costs: &SegmentCosts<'_>) -> Vec<f64> {
        self.segments
            .iter()
            .flat_map(|s| {
                let fit = costs.fit(s.start, s.end);
                (s.start..=s.end).map(move |n| fit.at(n))
            })
            .collect()
    }
}

/// Minimum-cost segmentation under `constraint`, with the witness
/// segments carried by the tupled min-plus semiring.
pub fn segment_series(
    ts: &TimeSeries,
    model: SegmentCostModel,
    constraint: &SegmentConstraint,
) -> Result<Segmentation> {
    let n = ts.len();
    if let SegmentConstraint::CountRange { lo, hi } = *constraint {
        if lo == 0 || lo > hi {
            return Err(DpError::InvalidConstraint(format!(
                "segment count range [{lo}, {hi}] is empty or includes zero"
            )));
        }
        if lo > n {
            return Err(DpError::InvalidConstraint(format!(
                "cannot split {n} samples into {lo} or more segments"
            )));
        }
    }
    let costs = SegmentCosts::new(ts, model);
    let s = ViterbiSimple::<MinPlus, Segment>::new(MinPlus);
    let w = |seg: Segment| Tupled::decision(costs.weight(seg), seg);
    let best = match constraint {
        SegmentConstraint::None => segment_opt(n, &s, w),
        SegmentConstraint::CountRange { lo, hi } => {
            segment_fixed_count(n, *lo, (*hi).min(n), &s, w)?
        }
        SegmentConstraint::MinLength(accept) => segment_min_length(n, accept, &s, w)?,
    };
    if !best.score.is_finite() {
        return Err(DpError::InvalidConstraint(
            "no segmentation satisfies the constraint".into(),
        ));
    }
    Ok(Segmentation {
        cost: best.score,
        segments: best.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(y: &[f64]) -> TimeSeries {
        TimeSeries::new(y.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(TimeSeries::new(vec![]).is_err());
        assert!(TimeSeries::new(vec![1.0, f64::NAN]).is_err());
        assert!(SegmentCostModel::new(ModelKind::Linear, 0.0, 0.0).is_err());
        assert!(SegmentCostModel::new(ModelKind::Linear, 2.0, -1.0).is_err());
    }

    #[test]
    fn cost_examples() {
        let c = series(&[2.0, 2.0, 2.0]);
        let m = SegmentCostModel::least_squares(ModelKind::ConstantMean);
        assert_eq!(SegmentCosts::new(&c, m).cost(1, 3), 0.0);
        let l = series(&[1.0, 2.0, 3.0]);
        let m = SegmentCostModel::least_squares(ModelKind::Linear);
        assert!(SegmentCosts::new(&l, m).cost(1, 3) < 1e-12);
        let d = series(&[0.0, 2.0]);
        let m = SegmentCostModel::least_squares(ModelKind::ConstantMean);
        let costs = SegmentCosts::new(&d, m);
        assert!((costs.cost(1, 2) - 1.0).abs() < 1e-12);
        assert!((costs.cost_by_summation(1, 2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fit_recovers_line() {
        let ts = series(&[3.0, 5.0, 7.0, 9.0]);
        let costs = SegmentCosts::new(&ts, SegmentCostModel::least_squares(ModelKind::Linear));
        let fit = costs.fit(2, 4);
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!((fit.intercept - 1.0).abs() < 1e-12);
        assert_eq!(costs.fit(3, 3).slope, 0.0);
    }

    #[test]
    fn long_segments_are_centered() {
        let y: Vec<f64> = (0..CENTERING_THRESHOLD + 50)
            .map(|k| 1e6 + (k % 7) as f64)
            .collect();
        let ts = TimeSeries::new(y).unwrap();
        let costs = SegmentCosts::new(&ts, SegmentCostModel::least_squares(ModelKind::Linear));
        let n = ts.len();
        let fast = costs.cost(1, n);
        let slow = costs.cost_by_summation(1, n);
        assert!((fast - slow).abs() <= 1e-6 * slow);
    }

    #[test]
    fn step_breakpoint() {
        let mut y = vec![0.0; 10];
        y.extend([5.0; 10]);
        let ts = series(&y);
        let model = SegmentCostModel::least_squares(ModelKind::ConstantMean);
        let got =
            segment_series(&ts, model, &SegmentConstraint::CountRange { lo: 2, hi: 2 }).unwrap();
        assert_eq!(got.breakpoints(), vec![10]);
        assert_eq!(got.cost, 0.0);
        let one =
            segment_series(&ts, model, &SegmentConstraint::CountRange { lo: 1, hi: 1 }).unwrap();
        assert_eq!(one.segments, vec![Segment::new(1, 20)]);
        let min = SegmentConstraint::MinLength(Acceptance::Exactly(20));
        assert_eq!(
            segment_series(&ts, model, &min).unwrap().segments,
            vec![Segment::new(1, 20)]
        );
    }

    #[test]
    fn regularization() {
        let ts = series(&[0.0, 1.0, 0.0, 1.0, 0.0]);
        let flat = SegmentCostModel::least_squares(ModelKind::Linear);
        assert_eq!(
            segment_series(&ts, flat, &SegmentConstraint::None)
                .unwrap()
                .cost,
            0.0
        );
        let heavy = SegmentCostModel::new(ModelKind::Linear, 2.0, 100.0).unwrap();
        let got = segment_series(&ts, heavy, &SegmentConstraint::None).unwrap();
        assert_eq!(got.segments.len(), 1);
    }

    #[test]
    fn infeasible_constraints() {
        let ts = series(&[1.0, 2.0]);
        let m = SegmentCostModel::least_squares(ModelKind::Linear);
        assert!(segment_series(&ts, m, &SegmentConstraint::CountRange { lo: 3, hi: 3 }).is_err());
        assert!(segment_series(&ts, m, &SegmentConstraint::CountRange { lo: 0, hi: 3 }).is_err());
        let none = SegmentConstraint::MinLength(Acceptance::Exactly(5));
        assert!(segment_series(&ts, m, &none).is_err());
    }
}
