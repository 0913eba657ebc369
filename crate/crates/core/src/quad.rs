//! Adaptive Gauss-Kronrod quadrature and oscillatory panel summation.
//!
//! This is the quadrature used by the evaluation paths (Mittag-Leffler large
//! arguments, fractional operators, Fourier inversion). The verification
//! oracles carry their own independent rules in [`crate::oracle`].

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the nodes XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

/// GK21 estimate together with `∫|f|`, which sets the rounding floor.
fn gk21<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Estimate, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[10];
    let mut resabs = fc.norm() * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    for (j, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let f1 = f(c - h * x);
        let f2 = f(c + h * x);
        kronrod += (f1 + f2) * w;
        resabs += (f1.norm() + f2.norm()) * w;
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let value = kronrod * h;
    let mut error = ((kronrod - gauss) * h).norm();
    if !error.is_finite() || !value.norm().is_finite() {
        error = f64::INFINITY;
    }
    // Guard against a vanishing Gauss-Kronrod difference that is only a
    // rounding coincidence.
    error = error.max(50.0 * f64::EPSILON * value.norm());
    (Estimate { value, error }, resabs * h.abs())
}

struct Segment {
    a: f64,
    b: f64,
    est: Estimate,
    resabs: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.est.error == other.est.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est.error.total_cmp(&other.est.error)
    }
}

/// Globally adaptive GK21 over `[a, b]` with optional interior break points.
pub(crate) fn integrate<F>(mut f: F, breaks: &[f64], tol: Tolerance, max_segments: usize) -> Result<Estimate>
where
    F: FnMut(f64) -> Complex64,
{
    let mut heap = BinaryHeap::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut resabs = 0.0;
    for w in breaks.windows(2) {
        if w[1] == w[0] {
            continue;
        }
        let (est, abs) = gk21(&mut f, w[0], w[1]);
        total += est.value;
        err += est.error;
        resabs += abs;
        heap.push(Segment { a: w[0], b: w[1], est, resabs: abs });
    }
    let mut segments = heap.len();
    // Below this the error estimate is dominated by rounding in the sum.
    let floor = |resabs: f64| 100.0 * f64::EPSILON * resabs;
    while err > tol.target(total.norm()).max(floor(resabs)) {
        if segments >= max_segments {
            return Err(Error::QuadratureFailure {
                estimate: err,
                tolerance: tol.target(total.norm()),
            });
        }
        let Some(seg) = heap.pop() else { break };
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // Interval cannot be split any further in f64.
            heap.push(seg);
            return Err(Error::QuadratureFailure {
                estimate: err,
                tolerance: tol.target(total.norm()),
            });
        }
        let (left, la) = gk21(&mut f, seg.a, mid);
        let (right, ra) = gk21(&mut f, mid, seg.b);
        total += left.value + right.value - seg.est.value;
        err += left.error + right.error - seg.est.error;
        resabs += la + ra - seg.resabs;
        heap.push(Segment { a: seg.a, b: mid, est: left, resabs: la });
        heap.push(Segment { a: mid, b: seg.b, est: right, resabs: ra });
        segments += 1;
    }
    // Re-sum to shed the drift from incremental updates.
    let (mut value, mut error) = (Complex64::new(0.0, 0.0), 0.0);
    for s in heap.iter() {
        value += s.est.value;
        error += s.est.error;
    }
    Ok(Estimate { value, error })
}

/// Wynn's epsilon algorithm over a sequence of partial sums, stored as the
/// latest anti-diagonal of the epsilon table.
#[derive(Debug, Default, Clone)]
pub(crate) struct Wynn {
    row: Vec<Complex64>,
    len: usize,
}

impl Wynn {
    /// Adds a partial sum; returns the deepest even-column estimate and its
    /// change relative to the previous anti-diagonal.
    pub fn push(&mut self, partial: Complex64) -> Option<(Complex64, f64)> {
        let prev = std::mem::take(&mut self.row);
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(partial);
        for k in 0..prev.len() {
            let lower = if k == 0 { Complex64::new(0.0, 0.0) } else { prev[k - 1] };
            let diff = row[k] - prev[k];
            if diff.norm() == 0.0 || !diff.norm().is_finite() {
                break;
            }
            row.push(lower + diff.inv());
        }
        self.len += 1;
        let mut best = None;
        let mut k = 0;
        while k < row.len() {
            if k < prev.len() && row[k].norm().is_finite() {
                best = Some((row[k], (row[k] - prev[k]).norm()));
            }
            k += 2;
        }
        self.row = row;
        best
    }

    fn depth(&self) -> usize {
        self.len
    }
}

/// Result of a semi-infinite oscillatory integral.
#[derive(Debug, Clone, Copy)]
pub(crate) struct OscillatoryEstimate {
    pub value: Complex64,
    pub error: f64,
}

/// `∫_0^∞ g(k) dk` where `g` oscillates with half-period `half_period`
/// (zero-crossing spacing). Panels are integrated individually; the partial
/// sums are accepted directly once the panels become negligible, and
/// otherwise accelerated with Wynn's epsilon algorithm.
pub(crate) fn oscillatory_half_line<F>(
    mut g: F,
    first_panel_end: f64,
    half_period: f64,
    tol: Tolerance,
    max_panels: usize,
) -> Result<OscillatoryEstimate>
where
    F: FnMut(f64) -> Complex64,
{
    let panel_tol = Tolerance::new(tol.abs * 0.01, tol.rel * 0.01);
    let mut partial = Complex64::new(0.0, 0.0);
    let mut quad_err = 0.0;
    let mut wynn = Wynn::default();
    let mut small_run = 0;
    let mut a = 0.0;
    let mut b = first_panel_end;
    let mut last_extrap: Option<(Complex64, f64)> = None;
    let mut stable_run = 0;
    for panel in 0..max_panels {
        let est = integrate(&mut g, &[a, b], panel_tol, 200)?;
        partial += est.value;
        quad_err += est.error;
        let p = est.value.norm();
        if p <= tol.target(partial.norm()) * 0.01 {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 4 {
            return Ok(OscillatoryEstimate {
                value: partial,
                error: quad_err + p * 4.0,
            });
        }
        if panel >= 1 {
            if let Some((v, d)) = wynn.push(partial) {
                if let Some((lv, _)) = last_extrap {
                    let change = (v - lv).norm().max(d);
                    if change <= tol.target(v.norm()) {
                        stable_run += 1;
                        if stable_run >= 3 && panel >= 8 {
                            return Ok(OscillatoryEstimate {
                                value: v,
                                error: change + quad_err,
                            });
                        }
                    } else {
                        stable_run = 0;
                    }
                }
                last_extrap = Some((v, d));
            }
        } else {
            wynn.push(partial);
        }
        a = b;
        b += half_period;
        // Keep the Wynn table bounded; restart from the current partial sum.
        if wynn.depth() > 60 {
            wynn = Wynn::default();
            wynn.push(partial);
            last_extrap = None;
            stable_run = 0;
        }
    }
    Err(Error::SlowDecay(format!(
        "oscillatory integral not converged after {max_panels} panels"
    )))
}
