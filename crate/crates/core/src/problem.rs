//! Problem description shared by the solvers, the oracles and the CLI.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fracops::{HilferOrder, RieszFellerSymbol};

/// Equation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Laplace,
    Poisson,
    Helmholtz,
    /// Space-time wave equation; `y` plays the role of time.
    Wave,
    /// Wave equation with the additional `-k²` term.
    WaveK,
}

impl Kind {
    pub fn is_wave(self) -> bool {
        matches!(self, Kind::Wave | Kind::WaveK)
    }

    pub fn has_wave_number(self) -> bool {
        matches!(self, Kind::Helmholtz | Kind::WaveK)
    }
}

/// Sign convention of the space operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Symbol `-ψ`.
    RieszFeller,
    /// Symbol `+ψ`.
    Quantum,
}

pub type SpectralFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;
pub type SourceFn = Arc<dyn Fn(f64, f64) -> Complex64 + Send + Sync>;

/// Fourier transform of a boundary datum.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case")]
pub enum BoundaryTransform {
    #[default]
    Zero,
    /// `f̂ ≡ 1`, i.e. `f = δ(x)`.
    Delta,
    /// `f̂ = exp(-w²κ²/2)`, the transform of a unit-mass normal density
    /// with standard deviation `w`.
    Gaussian { width: f64 },
    /// Arbitrary transform `κ -> f̂(κ)`; not representable in JSON.
    #[serde(skip)]
    Custom(SpectralFn),
}

impl BoundaryTransform {
    pub fn eval(&self, kappa: f64) -> Complex64 {
        match self {
            Self::Zero => Complex64::new(0.0, 0.0),
            Self::Delta => Complex64::new(1.0, 0.0),
            Self::Gaussian { width } => Complex64::new((-0.5 * width * width * kappa * kappa).exp(), 0.0),
            Self::Custom(f) => f(kappa),
        }
    }

    /// The boundary datum in physical space, where it is a function.
    pub fn physical(&self, x: f64) -> Option<f64> {
        match self {
            Self::Zero => Some(0.0),
            Self::Gaussian { width } => {
                Some((-0.5 * x * x / (width * width)).exp() / (width * (2.0 * std::f64::consts::PI).sqrt()))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }

    /// True when the transform decays faster than any power.
    pub fn decays_rapidly(&self) -> bool {
        matches!(self, Self::Zero | Self::Gaussian { .. })
    }
}

impl fmt::Debug for BoundaryTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => write!(f, "Zero"),
            Self::Delta => write!(f, "Delta"),
            Self::Gaussian { width } => f.debug_struct("Gaussian").field("width", width).finish(),
            Self::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Fourier transform in `x` of the source term.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case")]
pub enum SourceSpec {
    #[default]
    Zero,
    /// `Φ = δ(x)δ(y)`.
    DeltaDelta,
    /// `Φ = δ(x) y^{-β}/Γ(1-β)`.
    DeltaPower { beta: f64 },
    /// Smooth `(κ, y) -> Φ̂(κ, y)`; not representable in JSON.
    #[serde(skip)]
    Custom(SourceFn),
}

impl SourceSpec {
    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }
}

impl fmt::Debug for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => write!(f, "Zero"),
            Self::DeltaDelta => write!(f, "DeltaDelta"),
            Self::DeltaPower { beta } => f.debug_struct("DeltaPower").field("beta", beta).finish(),
            Self::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Everything that defines a half-space problem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub kind: Kind,
    pub variant: Variant,
    #[serde(flatten)]
    pub sym: RieszFellerSymbol,
    #[serde(flatten)]
    pub ord: HilferOrder,
    #[serde(default)]
    pub k: f64,
    #[serde(default)]
    pub f: BoundaryTransform,
    #[serde(default)]
    pub g: BoundaryTransform,
    #[serde(default)]
    pub source: SourceSpec,
}

impl ProblemSpec {
    /// A problem with zero data and `k = 0`; parameters are not validated here.
    pub fn new(kind: Kind, variant: Variant, alpha: f64, theta: f64, mu: f64, nu: f64) -> Self {
        Self {
            kind,
            variant,
            sym: RieszFellerSymbol { alpha, theta },
            ord: HilferOrder { mu, nu },
            k: 0.0,
            f: BoundaryTransform::Zero,
            g: BoundaryTransform::Zero,
            source: SourceSpec::Zero,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        let (alpha, theta, mu, nu) = (self.sym.alpha, self.sym.theta, self.ord.mu, self.ord.nu);
        if !(alpha > 1.0 && alpha <= 2.0) {
            problems.push(format!("space order alpha = {alpha} outside the solution range 1 < alpha <= 2"));
        } else if !(theta.abs() <= 2.0 - alpha + 1e-15) {
            problems.push(format!("skewness theta = {theta} violates |theta| <= 2 - alpha"));
        }
        if !(mu > 1.0 && mu <= 2.0) {
            problems.push(format!("derivative order mu = {mu} outside the solution range 1 < mu <= 2"));
        }
        if !(0.0..=1.0).contains(&nu) {
            problems.push(format!("derivative type nu = {nu} outside 0 <= nu <= 1"));
        }
        if !(self.k >= 0.0 && self.k.is_finite()) {
            problems.push(format!("wave number k = {} must be finite and non-negative", self.k));
        } else if self.k != 0.0 && !self.kind.has_wave_number() {
            problems.push(format!("wave number k = {} is only allowed for helmholtz and wave_k", self.k));
        }
        if self.kind == Kind::Laplace && !self.source.is_zero() {
            problems.push("the Laplace equation has no source term".to_string());
        }
        for (name, b) in [("f", &self.f), ("g", &self.g)] {
            if let BoundaryTransform::Gaussian { width } = b {
                if !(*width > 0.0) {
                    problems.push(format!("gaussian width of {name} must be positive, got {width}"));
                }
            }
        }
        if let SourceSpec::DeltaPower { beta } = self.source {
            if !(beta < 1.0) {
                problems.push(format!("source exponent beta = {beta} must be < 1"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidProblem(problems.join("; ")))
        }
    }

    /// `λ = (1-ν)(2-μ)`, the order of the boundary integral.
    pub fn lambda(&self) -> f64 {
        (1.0 - self.ord.nu) * (2.0 - self.ord.mu)
    }

    /// Whether the kernel uses the quantum sign `Λ = -(ψ + k²)`.
    pub fn quantum_sign(&self) -> bool {
        self.kind.is_wave() || self.variant == Variant::Quantum
    }

    /// True when every datum has a rapidly decaying transform.
    pub fn rapidly_decaying(&self) -> bool {
        self.f.decays_rapidly() && self.g.decays_rapidly() && matches!(self.source, SourceSpec::Zero | SourceSpec::Custom(_))
    }
}

/// One grid axis: uniform `count` points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn points(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            n => (0..n).map(|i| self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawGrid {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<Range>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<Range>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x_list: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y_list: Option<Vec<f64>>,
}

/// Tensor grid of evaluation points, `x` varying fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct GridSpec {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl TryFrom<RawGrid> for GridSpec {
    type Error = String;

    fn try_from(raw: RawGrid) -> std::result::Result<Self, String> {
        let axis = |range: Option<Range>, list: Option<Vec<f64>>, name: &str| match (range, list) {
            (Some(r), None) => Ok(r.points()),
            (None, Some(l)) => Ok(l),
            (None, None) => Err(format!("grid needs either \"{name}\" or \"{name}_list\"")),
            (Some(_), Some(_)) => Err(format!("grid has both \"{name}\" and \"{name}_list\"")),
        };
        Ok(GridSpec { x: axis(raw.x, raw.x_list, "x")?, y: axis(raw.y, raw.y_list, "y")? })
    }
}

impl From<GridSpec> for RawGrid {
    fn from(g: GridSpec) -> Self {
        RawGrid { x_list: Some(g.x), y_list: Some(g.y), ..Default::default() }
    }
}

impl GridSpec {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        Self { x, y }
    }

    /// Points in output order: for each `y`, every `x`.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.y.iter().flat_map(|&y| self.x.iter().map(move |&x| (x, y))).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(y) = self.y.iter().find(|y| !(**y > 0.0)) {
            return Err(Error::InvalidProblem(format!("grid y values must be positive, found {y}")));
        }
        if let Some(x) = self.x.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidProblem(format!("grid x values must be finite, found {x}")));
        }
        Ok(())
    }
}
