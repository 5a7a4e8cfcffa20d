//! Symmetric two-mode Gaussian environments.
//!
//! A zero-mean two-mode Gaussian state is fixed by its covariance matrix
//! `σ_ij = ½⟨{R_i, R_j}⟩` over the quadrature vector `R = (q₁, p₁, q₂, p₂)`,
//! with `q = b† + b` and `p = (b† − b)/i` (`ħ = 2`, so the vacuum has
//! `σ = 𝟙`). Up to local symplectic operations every such matrix has the
//! standard form
//!
//! ```text
//!     ⎡ a   0   c₊  0  ⎤
//!     ⎢ 0   a   0   c₋ ⎥
//!     ⎢ c₊  0   b   0  ⎥
//!     ⎣ 0   c₋  0   b  ⎦
//! ```
//!
//! Only the symmetric case `a = b` appears here, parameterised by
//! `(a, c₊, θ)` with `c₋ = θ·c₊`.
//!
//! Displacements act as `D(α) = exp(i(Im α·q + Re α·p))`, so a pair of
//! displacements `(α₁, α₂)` maps to `Λ = (Im α₁, Re α₁, Im α₂, Re α₂)` and
//! the characteristic function is `exp(−½ ΛᵀσΛ)`.

use std::fmt;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute slack allowed on every inequality check.
pub const INVARIANT_TOL: f64 = 1e-9;

/// The inequality an environment or covariance matrix fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    NonFinite,
    /// `a < 1`: variance below the vacuum level.
    BelowVacuum {
        a: f64,
    },
    NegativeCrossCorrelation {
        c_plus: f64,
    },
    CrossExceedsVariance {
        c_plus: f64,
        a: f64,
    },
    ThetaOutOfRange {
        theta: f64,
    },
    /// `det σ + 1 < a² + b² + 2c₊c₋`; `lhs` and `rhs` are the two sides.
    Determinant {
        lhs: f64,
        rhs: f64,
    },
    Asymmetric {
        row: usize,
        col: usize,
    },
    DiagonalBelowVacuum {
        index: usize,
        value: f64,
    },
    NotPositiveDefinite,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NonFinite => write!(f, "parameters must be finite"),
            Violation::BelowVacuum { a } => write!(f, "a = {a} is below the vacuum variance 1"),
            Violation::NegativeCrossCorrelation { c_plus } => {
                write!(f, "c+ = {c_plus} is negative")
            }
            Violation::CrossExceedsVariance { c_plus, a } => {
                write!(f, "c+ = {c_plus} exceeds a = {a}")
            }
            Violation::ThetaOutOfRange { theta } => {
                write!(f, "theta = {theta} lies outside [-1, 1]")
            }
            Violation::Determinant { lhs, rhs } => {
                write!(f, "det(sigma) + 1 = {lhs} is smaller than a^2 + b^2 + 2 c+ c- = {rhs}")
            }
            Violation::Asymmetric { row, col } => {
                write!(f, "covariance matrix is not symmetric at ({row}, {col})")
            }
            Violation::DiagonalBelowVacuum { index, value } => {
                write!(f, "diagonal entry {index} = {value} is below the vacuum variance 1")
            }
            Violation::NotPositiveDefinite => write!(f, "covariance matrix is not positive definite"),
        }
    }
}

/// Outcome of a physicality check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Physicality {
    /// All invariants hold. `slack` is `det σ + 1 − (a² + b² + 2c₊c₋)`;
    /// zero for pure states.
    Valid {
        slack: f64,
    },
    Invalid(Violation),
}

impl Physicality {
    pub fn is_valid(&self) -> bool {
        matches!(self, Physicality::Valid { .. })
    }

    pub fn violation(&self) -> Option<Violation> {
        match self {
            Physicality::Valid { .. } => None,
            Physicality::Invalid(v) => Some(*v),
        }
    }

    fn into_result(self) -> Result<()> {
        match self {
            Physicality::Valid { .. } => Ok(()),
            Physicality::Invalid(v) => Err(Error::NonPhysical(v)),
        }
    }
}

/// Symmetric two-mode Gaussian environment `(a, c₊, θ)`.
///
/// Construction enforces the range invariants `a ≥ 1`, `0 ≤ c₊ ≤ a` and
/// `−1 ≤ θ ≤ 1`. The determinant inequality is reported separately by
/// [`validate_physicality`]: the decay formulas are defined on the whole
/// range, including idealized boundary points that fail it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvCorrelation {
    a: f64,
    c_plus: f64,
    theta: f64,
}

impl EnvCorrelation {
    pub fn new(a: f64, c_plus: f64, theta: f64) -> Result<Self> {
        if let Some(v) = range_violation(a, c_plus, theta) {
            return Err(match v {
                Violation::NonFinite => Error::domain("environment parameters must be finite"),
                other => Error::NonPhysical(other),
            });
        }
        Ok(Self { a, c_plus, theta })
    }

    /// Product state of two identical thermal-like modes with variance `a`.
    pub fn uncorrelated(a: f64) -> Result<Self> {
        Self::new(a, 0.0, 0.0)
    }

    pub fn vacuum() -> Self {
        Self { a: 1.0, c_plus: 0.0, theta: 0.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c_plus(&self) -> f64 {
        self.c_plus
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn c_minus(&self) -> f64 {
        self.theta * self.c_plus
    }

    /// `c₊/a`: 0 for a product state, 1 on the idealized EPR boundary.
    pub fn correlation_coefficient(&self) -> f64 {
        self.c_plus / self.a
    }

    pub fn physicality(&self) -> Physicality {
        validate_physicality(self)
    }

    /// Standard-form covariance matrix. Fails for environments that violate
    /// the determinant inequality.
    pub fn to_covariance(&self) -> Result<CovarianceMatrix> {
        self.physicality().into_result()?;
        Ok(self.standard_form_matrix())
    }

    pub(crate) fn standard_form_matrix(&self) -> CovarianceMatrix {
        let (a, cp, cm) = (self.a, self.c_plus, self.c_minus());
        #[rustfmt::skip]
        let m = Matrix4::new(
            a,   0.0, cp,  0.0,
            0.0, a,   0.0, cm,
            cp,  0.0, a,   0.0,
            0.0, cm,  0.0, a,
        );
        CovarianceMatrix { entries: m }
    }
}

fn range_violation(a: f64, c_plus: f64, theta: f64) -> Option<Violation> {
    if !(a.is_finite() && c_plus.is_finite() && theta.is_finite()) {
        return Some(Violation::NonFinite);
    }
    if a < 1.0 - INVARIANT_TOL {
        return Some(Violation::BelowVacuum { a });
    }
    if c_plus < 0.0 {
        return Some(Violation::NegativeCrossCorrelation { c_plus });
    }
    if c_plus > a + INVARIANT_TOL {
        return Some(Violation::CrossExceedsVariance { c_plus, a });
    }
    if theta.abs() > 1.0 + INVARIANT_TOL {
        return Some(Violation::ThetaOutOfRange { theta });
    }
    None
}

/// Determinant slack `det σ + 1 − (a² + b² + 2c₊c₋)` for a standard form.
///
/// With `u = ab − c₊²` and `v = ab − c₋²` the slack equals
/// `(u − 1)(v − 1) − (c₊ + c₋)²` when `a = b`, which avoids cancelling
/// `O(a⁴)` terms for strongly squeezed states.
fn standard_form_slack(a: f64, c_plus: f64, c_minus: f64) -> (f64, f64, f64) {
    let u = (a - c_plus) * (a + c_plus);
    let v = (a - c_minus) * (a + c_minus);
    let lhs = u * v + 1.0;
    let rhs = 2.0 * a * a + 2.0 * c_plus * c_minus;
    let slack = (u - 1.0) * (v - 1.0) - (c_plus + c_minus).powi(2);
    (slack, lhs, rhs)
}

/// Check every environment invariant, including the determinant inequality.
pub fn validate_physicality(env: &EnvCorrelation) -> Physicality {
    if let Some(v) = range_violation(env.a, env.c_plus, env.theta) {
        return Physicality::Invalid(v);
    }
    let (slack, lhs, rhs) = standard_form_slack(env.a, env.c_plus, env.c_minus());
    if slack < -INVARIANT_TOL {
        Physicality::Invalid(Violation::Determinant { lhs, rhs })
    } else {
        Physicality::Valid { slack }
    }
}

/// Two-mode squeezed vacuum with squeezing `r`: `a = cosh 2r`,
/// `c₊ = sinh 2r = √(a² − 1)`, `θ = −1`.
pub fn make_tmsv(r: f64) -> Result<EnvCorrelation> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::domain(format!("squeezing parameter must be finite and non-negative, got {r}")));
    }
    let two_r = 2.0 * r;
    EnvCorrelation::new(two_r.cosh(), two_r.sinh(), -1.0)
}

/// Real symmetric 4×4 covariance matrix over `(q₁, p₁, q₂, p₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix {
    entries: Matrix4<f64>,
}

impl CovarianceMatrix {
    /// Wrap a general matrix; checks symmetry, finiteness and diagonal ≥ 1.
    pub fn from_matrix(entries: Matrix4<f64>) -> Result<Self> {
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::domain("covariance entries must be finite"));
        }
        for i in 0..4 {
            if entries[(i, i)] < 1.0 - INVARIANT_TOL {
                return Err(Error::NonPhysical(Violation::DiagonalBelowVacuum { index: i, value: entries[(i, i)] }));
            }
            for j in (i + 1)..4 {
                if (entries[(i, j)] - entries[(j, i)]).abs() > INVARIANT_TOL {
                    return Err(Error::NonPhysical(Violation::Asymmetric { row: i, col: j }));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &Matrix4<f64> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[(row, col)]
    }

    /// `Some((a, b, c₊, c₋))` when every entry outside the standard-form
    /// pattern is exactly zero and the local blocks are diagonal multiples
    /// of the identity.
    pub fn standard_form(&self) -> Option<(f64, f64, f64, f64)> {
        let m = &self.entries;
        for i in 0..4 {
            for j in 0..4 {
                let in_pattern = i == j || (i, j) == (0, 2) || (i, j) == (2, 0) || (i, j) == (1, 3) || (i, j) == (3, 1);
                if !in_pattern && m[(i, j)] != 0.0 {
                    return None;
                }
            }
        }
        if m[(0, 0)] != m[(1, 1)] || m[(2, 2)] != m[(3, 3)] {
            return None;
        }
        Some((m[(0, 0)], m[(2, 2)], m[(0, 2)], m[(1, 3)]))
    }

    /// Read `(a, c₊, θ)` back from a symmetric standard form. `θ` is reported
    /// as 0 when `c₊ = 0`.
    pub fn to_env(&self) -> Result<EnvCorrelation> {
        let (a, b, cp, cm) =
            self.standard_form().ok_or_else(|| Error::domain("covariance matrix is not in standard form"))?;
        if a != b {
            return Err(Error::domain("standard form is not symmetric (a != b)"));
        }
        let theta = if cp == 0.0 { 0.0 } else { cm / cp };
        EnvCorrelation::new(a, cp, theta)
    }

    /// Positive definiteness plus `det σ + 1 ≥ det A + det B + 2 det C` on
    /// the 2×2 blocks; the latter reduces to `a² + b² + 2c₊c₋` for a
    /// standard form.
    pub fn physicality(&self) -> Physicality {
        if let Some((a, b, cp, cm)) = self.standard_form() {
            if a == b {
                if a < 1.0 - INVARIANT_TOL {
                    return Physicality::Invalid(Violation::BelowVacuum { a });
                }
                let (slack, lhs, rhs) = standard_form_slack(a, cp, cm);
                return if slack < -INVARIANT_TOL {
                    Physicality::Invalid(Violation::Determinant { lhs, rhs })
                } else {
                    Physicality::Valid { slack }
                };
            }
        }
        let m = &self.entries;
        if m.cholesky().is_none() {
            return Physicality::Invalid(Violation::NotPositiveDefinite);
        }
        let block = |r: usize, c: usize| Matrix2::new(m[(r, c)], m[(r, c + 1)], m[(r + 1, c)], m[(r + 1, c + 1)]);
        let (da, db, dc) = (block(0, 0).determinant(), block(2, 2).determinant(), block(0, 2).determinant());
        let lhs = m.determinant() + 1.0;
        let rhs = da + db + 2.0 * dc;
        let slack = lhs - rhs;
        let scale = 1.0_f64.max(da.abs()).max(db.abs());
        if slack < -INVARIANT_TOL * scale {
            Physicality::Invalid(Violation::Determinant { lhs, rhs })
        } else {
            Physicality::Valid { slack }
        }
    }

    /// `ΛᵀσΛ` for a quadrature-space vector.
    pub fn quadratic_form(&self, lambda: &[f64; 4]) -> f64 {
        let v = nalgebra::Vector4::from_column_slice(lambda);
        (v.transpose() * self.entries * v)[(0, 0)]
    }
}

/// Quadrature-space vector for the displacement pair `D(α₁) ⊗ D(α₂)`.
pub fn displacement_vector(alpha1: Complex64, alpha2: Complex64) -> [f64; 4] {
    [alpha1.im, alpha1.re, alpha2.im, alpha2.re]
}

/// `ln Tr[D(α₁) ⊗ D(α₂) ρ] = −½ ΛᵀσΛ` without a physicality check.
pub(crate) fn log_characteristic_unchecked(cov: &CovarianceMatrix, alpha1: Complex64, alpha2: Complex64) -> f64 {
    -0.5 * cov.quadratic_form(&displacement_vector(alpha1, alpha2))
}

/// Wigner characteristic function of the zero-mean Gaussian state with
/// covariance `cov`, in `(0, 1]`.
pub fn characteristic_function(cov: &CovarianceMatrix, alpha1: Complex64, alpha2: Complex64) -> Result<f64> {
    if !(alpha1.is_finite() && alpha2.is_finite()) {
        return Err(Error::domain("displacements must be finite"));
    }
    cov.physicality().into_result()?;
    Ok(log_characteristic_unchecked(cov, alpha1, alpha2).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tmsv_vacuum_and_fig3_value() {
        let vac = make_tmsv(0.0).unwrap();
        assert_eq!((vac.a(), vac.c_plus(), vac.theta()), (1.0, 0.0, -1.0));

        let env = make_tmsv(1.5).unwrap();
        assert!((env.a() - 10.067_661_995_777_765).abs() < 1e-12);
        assert!((env.c_plus() - 10.017_874_927_409_903).abs() < 1e-12);
        assert!((env.c_plus() - (env.a() * env.a() - 1.0).sqrt()).abs() < 1e-12);
        assert_eq!(env.theta(), -1.0);
    }

    #[test]
    fn tmsv_rejects_bad_squeezing() {
        assert!(make_tmsv(-0.1).is_err());
        assert!(make_tmsv(f64::NAN).is_err());
        assert!(make_tmsv(f64::INFINITY).is_err());
    }

    #[test]
    fn physicality_examples() {
        let vac = EnvCorrelation::new(1.0, 0.0, 0.0).unwrap();
        match validate_physicality(&vac) {
            Physicality::Valid { slack } => assert_eq!(slack, 0.0),
            other => panic!("vacuum rejected: {other:?}"),
        }

        let pure = EnvCorrelation::new(3f64.cosh(), 3f64.sinh(), -1.0).unwrap();
        match validate_physicality(&pure) {
            Physicality::Valid { slack } => assert!(slack.abs() < 1e-10),
            other => panic!("pure state rejected: {other:?}"),
        }

        // det σ + 1 = (1 − 0.25)·1 + 1 = 1.75 < a² + b² = 2.
        let bad = EnvCorrelation::new(1.0, 0.5, 0.0).unwrap();
        match validate_physicality(&bad) {
            Physicality::Invalid(Violation::Determinant { lhs, rhs }) => {
                assert!((lhs - 1.75).abs() < 1e-15);
                assert!((rhs - 2.0).abs() < 1e-15);
            }
            other => panic!("expected determinant violation, got {other:?}"),
        }
    }

    #[test]
    fn construction_rejects_out_of_range() {
        assert!(matches!(EnvCorrelation::new(0.5, 0.0, 0.0), Err(Error::NonPhysical(Violation::BelowVacuum { .. }))));
        assert!(matches!(
            EnvCorrelation::new(2.0, -0.1, 0.0),
            Err(Error::NonPhysical(Violation::NegativeCrossCorrelation { .. }))
        ));
        assert!(matches!(
            EnvCorrelation::new(2.0, 2.5, 0.0),
            Err(Error::NonPhysical(Violation::CrossExceedsVariance { .. }))
        ));
        assert!(matches!(
            EnvCorrelation::new(2.0, 1.0, 1.5),
            Err(Error::NonPhysical(Violation::ThetaOutOfRange { .. }))
        ));
        assert!(matches!(EnvCorrelation::new(f64::NAN, 0.0, 0.0), Err(Error::Domain(_))));
        // The idealized EPR boundary is constructible.
        assert!(EnvCorrelation::new(10.0, 10.0, -1.0).is_ok());
    }

    #[test]
    fn correlation_coefficient_examples() {
        let f = |a, cp| EnvCorrelation::new(a, cp, -1.0).unwrap().correlation_coefficient();
        assert_eq!(f(5.0, 0.0), 0.0);
        assert_eq!(f(10.0, 10.0), 1.0);
        assert!((f(10.0, 9.95) - 0.995).abs() < 1e-15);
    }

    #[test]
    fn covariance_placement() {
        let id = EnvCorrelation::vacuum().to_covariance().unwrap();
        assert_eq!(*id.entries(), Matrix4::identity());

        let cov = EnvCorrelation::new(2.0, 1.0, -1.0).unwrap().to_covariance().unwrap();
        for i in 0..4 {
            assert_eq!(cov.get(i, i), 2.0);
        }
        assert_eq!(cov.get(0, 2), 1.0);
        assert_eq!(cov.get(2, 0), 1.0);
        assert_eq!(cov.get(1, 3), -1.0);
        assert_eq!(cov.get(3, 1), -1.0);
        assert_eq!(cov.get(0, 1), 0.0);
        assert_eq!(cov.get(0, 3), 0.0);

        let back = cov.to_env().unwrap();
        assert_eq!((back.a(), back.c_plus(), back.theta()), (2.0, 1.0, -1.0));
    }

    #[test]
    fn to_covariance_propagates_violation() {
        let bad = EnvCorrelation::new(1.0, 0.5, 0.0).unwrap();
        assert!(matches!(bad.to_covariance(), Err(Error::NonPhysical(Violation::Determinant { .. }))));
        // θ = 1 on the EPR boundary fails the determinant inequality.
        let dfs = EnvCorrelation::new(3.0, 3.0, 1.0).unwrap();
        assert!(!dfs.physicality().is_valid());
    }

    #[test]
    fn characteristic_function_calibration() {
        let vac = EnvCorrelation::vacuum().to_covariance().unwrap();
        assert_eq!(characteristic_function(&vac, c(0.0, 0.0), c(0.0, 0.0)).unwrap(), 1.0);
        let v = characteristic_function(&vac, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!((v - (-0.5f64).exp()).abs() < 1e-15);
        let v = characteristic_function(&vac, c(0.0, 1.0), c(0.0, 0.0)).unwrap();
        assert!((v - (-0.5f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn characteristic_function_rejects_nonphysical() {
        let m = EnvCorrelation::new(1.0, 0.5, 0.0).unwrap().standard_form_matrix();
        assert!(characteristic_function(&m, c(0.1, 0.0), c(0.0, 0.0)).is_err());
        let vac = EnvCorrelation::vacuum().to_covariance().unwrap();
        assert!(characteristic_function(&vac, c(f64::NAN, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn general_matrix_checks() {
        let mut m = Matrix4::identity();
        m[(0, 3)] = 0.5;
        assert!(matches!(CovarianceMatrix::from_matrix(m), Err(Error::NonPhysical(Violation::Asymmetric { .. }))));
        m[(3, 0)] = 0.5;
        // q₁–p₂ coupling on top of vacuum: det σ + 1 = 1.75 < 2.
        let cov = CovarianceMatrix::from_matrix(m).unwrap();
        assert!(cov.standard_form().is_none());
        assert!(!cov.physicality().is_valid());

        let thermal = CovarianceMatrix::from_matrix(Matrix4::identity() * 3.0).unwrap();
        assert!(thermal.physicality().is_valid());
        assert!(cov.to_env().is_err());

        // Indefinite single-mode block that satisfies the determinant inequality with equality.
        let mut m = Matrix4::identity();
        m[(0, 1)] = 2.0;
        m[(1, 0)] = 2.0;
        let cov = CovarianceMatrix::from_matrix(m).unwrap();
        assert_eq!(cov.physicality().violation(), Some(Violation::NotPositiveDefinite));
    }
}
