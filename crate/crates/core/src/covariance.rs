//! Two-mode covariance matrices: validation, symplectic invariants, and the
//! reduction to standard form.
//!
//! Conventions: quadrature order `(q1, p1, q2, p2)`, vacuum variance `1/2`.
//! The standard form of a covariance matrix is the quadruple
//! `(v1, v2, vc1, vc2)` with `V1 = v1·I`, `V2 = v2·I`,
//! `Vc = diag(vc1, vc2)`; it is reached by local symplectic operations and
//! is the sole state input consumed by the witnessing pipeline.

use core::fmt;

use crate::math;

/// Relative tolerance for the symmetry check on input matrices.
const SYMMETRY_RTOL: f64 = 1e-10;
/// A state is accepted as bona fide when the smaller symplectic eigenvalue
/// stays above `1/2` up to this slack.
const BONA_FIDE_TOL: f64 = 1e-9;

/// Errors from covariance-matrix handling.
#[derive(Clone, Debug, PartialEq)]
pub enum CovarianceError {
    /// The input matrix violates the symmetry tolerance.
    NonSymmetric,
    /// The matrix has a non-positive eigenvalue (not a valid second-moment
    /// matrix).
    NonPositive,
    /// An entry is NaN or infinite.
    NonFinite,
    /// The invariant system has no real solution; the input is not a valid
    /// covariance matrix.
    DegenerateInvariants,
    /// Fewer samples than the estimator minimum of 16.
    TooFewSamples,
    /// A standard-form quadruple violating `v >= 1/2` or the ordering
    /// conventions.
    InvalidStandardForm(&'static str),
}

impl fmt::Display for CovarianceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CovarianceError::NonSymmetric => write!(f, "matrix is not symmetric"),
            CovarianceError::NonPositive => write!(f, "matrix has a non-positive eigenvalue"),
            CovarianceError::NonFinite => write!(f, "non-finite value in input"),
            CovarianceError::DegenerateInvariants => {
                write!(f, "invariants admit no real standard form")
            }
            CovarianceError::TooFewSamples => write!(f, "need at least 16 samples"),
            CovarianceError::InvalidStandardForm(what) => {
                write!(f, "invalid standard form: {what}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CovarianceError {}

/// Symmetric 4×4 matrix of quadrature second moments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovarianceMatrix {
    m: [[f64; 4]; 4],
}

/// Local-symplectic invariants of the block decomposition: the determinants
/// of the two diagonal blocks, the coupling block, and the full matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymplecticInvariants {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
}

/// Standard form `(v1, v2, vc1, vc2)` with `|vc1| >= |vc2|` and `vc1 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StandardForm {
    v1: f64,
    v2: f64,
    vc1: f64,
    vc2: f64,
}

/// Outcome of the bona-fide check: the two symplectic eigenvalues
/// `nu1 >= nu2` and whether `nu2 >= 1/2` holds within tolerance.
#[derive(Clone, Copy, Debug)]
pub struct BonaFideCheck {
    pub valid: bool,
    pub nu1: f64,
    pub nu2: f64,
}

/// Which test-operator family the coupling block calls for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySelection {
    /// `det Vc > 0`: the photon-number-conserving family.
    P,
    /// `det Vc < 0`: the two-mode-squeezing family.
    N,
    /// `det Vc = 0` with a nonzero coupling block: examine both families.
    Both,
    /// `Vc = 0`: no Schmidt number above 1 can be identified.
    None,
}

fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    // Laplace expansion along the first row with 3×3 minors.
    let minor = |r: [usize; 3], c: [usize; 3]| -> f64 {
        m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
            - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
            + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
    };
    m[0][0] * minor([1, 2, 3], [1, 2, 3]) - m[0][1] * minor([1, 2, 3], [0, 2, 3])
        + m[0][2] * minor([1, 2, 3], [0, 1, 3])
        - m[0][3] * minor([1, 2, 3], [0, 1, 2])
}

impl CovarianceMatrix {
    /// Validate and wrap a 4×4 second-moment matrix.
    ///
    /// Requires finite entries, symmetry within `1e-10` relative tolerance,
    /// and strictly positive diagonal entries.
    pub fn new(m: [[f64; 4]; 4]) -> Result<Self, CovarianceError> {
        let mut maxabs = 0.0f64;
        for row in &m {
            for &x in row {
                if !x.is_finite() {
                    return Err(CovarianceError::NonFinite);
                }
                maxabs = maxabs.max(x.abs());
            }
        }
        let tol = SYMMETRY_RTOL * maxabs.max(f64::MIN_POSITIVE);
        let mut m = m;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if (m[i][j] - m[j][i]).abs() > tol {
                    return Err(CovarianceError::NonSymmetric);
                }
                // Within tolerance the asymmetry is measurement noise;
                // downstream algebra assumes an exactly symmetric matrix.
                let s = 0.5 * (m[i][j] + m[j][i]);
                m[i][j] = s;
                m[j][i] = s;
            }
        }
        for i in 0..4 {
            if m[i][i] <= 0.0 {
                return Err(CovarianceError::NonPositive);
            }
        }
        Ok(CovarianceMatrix { m })
    }

    /// The raw matrix, row-major, quadrature order `(q1, p1, q2, p2)`.
    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    /// Unchecked constructor for estimator output, which may be unphysical
    /// (e.g. the zero matrix from constant records) until validated.
    fn from_estimate(m: [[f64; 4]; 4]) -> Self {
        CovarianceMatrix { m }
    }
}

/// Symplectic eigenvalues and the bona-fide verdict.
///
/// The two symplectic eigenvalues of a two-mode covariance matrix follow in
/// closed form from the block invariants; the matrix describes a physical
/// state exactly when both stay at or above the vacuum variance `1/2`.
pub fn validate_bona_fide(cm: &CovarianceMatrix) -> Result<BonaFideCheck, CovarianceError> {
    let (nu1, nu2) = symplectic_eigenvalues(cm)?;
    Ok(BonaFideCheck {
        valid: nu2 >= 0.5 - BONA_FIDE_TOL,
        nu1,
        nu2,
    })
}

/// Cholesky factor of the matrix; failure means a non-positive eigenvalue.
fn cholesky4(m: &[[f64; 4]; 4]) -> Result<[[f64; 4]; 4], CovarianceError> {
    let mut l = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..=i {
            let mut s = m[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(CovarianceError::NonPositive);
                }
                l[i][j] = math::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    Ok(l)
}

fn positive_definite_check(cm: &CovarianceMatrix) -> Result<(), CovarianceError> {
    cholesky4(&cm.m).map(|_| ())
}

/// Symplectic eigenvalues via the antisymmetric form `A = Lᵀ J L` with
/// `V = L Lᵀ`: the eigenvalues of `AᵀA` are the squared symplectic
/// eigenvalues, each doubled. Unlike the invariant closed form, this route
/// has no cancellation blow-up when the two eigenvalues degenerate (pure
/// states), so it resolves them to machine precision.
fn symplectic_eigenvalues(cm: &CovarianceMatrix) -> Result<(f64, f64), CovarianceError> {
    let l = cholesky4(&cm.m)?;
    // J has blocks [[0,1],[-1,0]] per mode: (Jx)_0 = x_1, (Jx)_1 = -x_0, ...
    let mut jl = [[0.0; 4]; 4];
    for j in 0..4 {
        jl[0][j] = l[1][j];
        jl[1][j] = -l[0][j];
        jl[2][j] = l[3][j];
        jl[3][j] = -l[2][j];
    }
    let mut a = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += l[k][i] * jl[k][j];
            }
            a[i][j] = s;
        }
    }
    let mut gram = crate::linalg::SymMat::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += a[k][i] * a[k][j];
            }
            gram.set(i, j, s);
        }
    }
    let (vals, _) = crate::linalg::jacobi_eigh(&gram);
    let nu2 = math::sqrt((0.5 * (vals[0] + vals[1])).max(0.0));
    let nu1 = math::sqrt((0.5 * (vals[2] + vals[3])).max(0.0));
    Ok((nu1, nu2))
}

fn block_invariants(cm: &CovarianceMatrix) -> SymplecticInvariants {
    let m = &cm.m;
    SymplecticInvariants {
        i1: det2(m[0][0], m[0][1], m[1][0], m[1][1]),
        i2: det2(m[2][2], m[2][3], m[3][2], m[3][3]),
        i3: det2(m[0][2], m[0][3], m[1][2], m[1][3]),
        i4: det4(m),
    }
}

/// The four local-symplectic invariants `(det V1, det V2, det Vc, det V)`.
pub fn invariants(cm: &CovarianceMatrix) -> Result<SymplecticInvariants, CovarianceError> {
    positive_definite_check(cm)?;
    Ok(block_invariants(cm))
}

/// Jacobi rotation `(c, s)` diagonalizing the symmetric 2×2
/// `[[a, b], [b, d]]` as `Gᵀ M G` with `G = [[c, s], [-s, c]]`.
fn rot2(a: f64, b: f64, d: f64) -> (f64, f64) {
    if b == 0.0 {
        return (1.0, 0.0);
    }
    let tau = (d - a) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + math::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    (c, t * c)
}

/// Reduce to the standard form by the explicit local reduction.
///
/// Each mode is rotated to diagonalize its block and squeezed to make it a
/// multiple of the identity (so `v_j = sqrt(det V_j)`); the transformed
/// coupling block is then brought to diagonal form by one rotation per
/// mode. Its signed singular values are read off in closed form:
/// `vc1 = Q + R >= |vc2| = |Q - R|` with `Q = sqrt(E² + H²)`,
/// `R = sqrt(F² + G²)` built from the half-sums and half-differences of the
/// block entries, and `sign(vc2) = sign(det Vc)`. Singular values are
/// perfectly conditioned, so the split stays accurate even when
/// `|vc1| = |vc2|` (every pure squeezed state), where solving the invariant
/// system loses half the digits. The returned quadruple reproduces the
/// invariants `i1..i4` when re-expanded; that is checked, and a gross
/// violation reports `DegenerateInvariants`.
pub fn to_standard_form(cm: &CovarianceMatrix) -> Result<StandardForm, CovarianceError> {
    let inv = invariants(cm)?;
    let v1 = math::sqrt(inv.i1);
    let v2 = math::sqrt(inv.i2);
    let m = &cm.m;

    // Per-mode rotation + squeeze normalizing the diagonal block.
    let (c1, s1) = rot2(m[0][0], m[0][1], m[1][1]);
    let a1 = c1 * c1 * m[0][0] - 2.0 * c1 * s1 * m[0][1] + s1 * s1 * m[1][1];
    let b1 = s1 * s1 * m[0][0] + 2.0 * c1 * s1 * m[0][1] + c1 * c1 * m[1][1];
    let z1 = math::sqrt(math::sqrt(b1 / a1));
    let (c2, s2) = rot2(m[2][2], m[2][3], m[3][3]);
    let a2 = c2 * c2 * m[2][2] - 2.0 * c2 * s2 * m[2][3] + s2 * s2 * m[3][3];
    let b2 = s2 * s2 * m[2][2] + 2.0 * c2 * s2 * m[2][3] + c2 * c2 * m[3][3];
    let z2 = math::sqrt(math::sqrt(b2 / a2));

    // Coupling block under T_j = Z_j · G_jᵀ: C' = T1 · C · T2ᵀ.
    let cb = [[m[0][2], m[0][3]], [m[1][2], m[1][3]]];
    let g1t = [[c1, -s1], [s1, c1]];
    let g2 = [[c2, s2], [-s2, c2]];
    let mut t = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            t[i][j] = g1t[i][0] * cb[0][j] + g1t[i][1] * cb[1][j];
        }
    }
    let mut cp = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            cp[i][j] = t[i][0] * g2[0][j] + t[i][1] * g2[1][j];
        }
    }
    let zs1 = [z1, 1.0 / z1];
    let zs2 = [z2, 1.0 / z2];
    for i in 0..2 {
        for j in 0..2 {
            cp[i][j] *= zs1[i] * zs2[j];
        }
    }

    // Signed singular values of the 2×2 coupling.
    let e = 0.5 * (cp[0][0] + cp[1][1]);
    let f = 0.5 * (cp[0][0] - cp[1][1]);
    let g = 0.5 * (cp[1][0] + cp[0][1]);
    let h = 0.5 * (cp[1][0] - cp[0][1]);
    let q = math::sqrt(e * e + h * h);
    let r = math::sqrt(f * f + g * g);
    let vc1 = q + r;
    let vc2 = q - r;

    // Consistency with the invariant system.
    let scale = (v1 * v2).max(1.0);
    if (vc1 * vc2 - inv.i3).abs() > 1e-6 * scale
        || ((v1 * v2 - vc1 * vc1) * (v1 * v2 - vc2 * vc2) - inv.i4).abs() > 1e-6 * scale * scale
    {
        return Err(CovarianceError::DegenerateInvariants);
    }
    StandardForm::new(v1, v2, vc1, vc2)
}

/// Mirror reflection of one subsystem in phase space: flips the sign of the
/// chosen mode's momentum row and column. Involutive.
pub fn partial_transpose(cm: &CovarianceMatrix, subsystem: u8) -> CovarianceMatrix {
    let p_index = match subsystem {
        1 => 1,
        _ => 3,
    };
    let mut m = cm.m;
    for k in 0..4 {
        m[p_index][k] = -m[p_index][k];
        m[k][p_index] = -m[k][p_index];
    }
    CovarianceMatrix { m }
}

/// Choose the test-operator family from the sign of `det Vc`.
pub fn select_family(sf: &StandardForm) -> FamilySelection {
    let det = sf.vc1 * sf.vc2;
    if det > 0.0 {
        FamilySelection::P
    } else if det < 0.0 {
        FamilySelection::N
    } else if sf.vc1 == 0.0 && sf.vc2 == 0.0 {
        FamilySelection::None
    } else {
        FamilySelection::Both
    }
}

/// Mean-subtracted, symmetrized sample second-moment matrix.
///
/// `C = 1/(N-1) · Σ (x - x̄)(x - x̄)ᵀ`, then `C ← (C + Cᵀ)/2`. Sums are
/// compensated so the estimate is independent of record order to near
/// machine precision. The result is not validated; run
/// [`validate_bona_fide`] before physical use.
pub fn cm_from_samples(records: &[[f64; 4]]) -> Result<CovarianceMatrix, CovarianceError> {
    if records.len() < 16 {
        return Err(CovarianceError::TooFewSamples);
    }
    for rec in records {
        for &x in rec {
            if !x.is_finite() {
                return Err(CovarianceError::NonFinite);
            }
        }
    }
    let n = records.len() as f64;
    let mut mean = [KahanSum::default(); 4];
    for rec in records {
        for k in 0..4 {
            mean[k].add(rec[k]);
        }
    }
    let mean: [f64; 4] = core::array::from_fn(|k| mean[k].value() / n);

    let mut acc = [[KahanSum::default(); 4]; 4];
    for rec in records {
        let d: [f64; 4] = core::array::from_fn(|k| rec[k] - mean[k]);
        for i in 0..4 {
            for j in 0..4 {
                acc[i][j].add(d[i] * d[j]);
            }
        }
    }
    let mut m = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = acc[i][j].value() / (n - 1.0);
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let s = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    Ok(CovarianceMatrix::from_estimate(m))
}

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl StandardForm {
    /// Wrap a quadruple, enforcing `v >= 1/2` (within the bona-fide slack),
    /// `|vc1| >= |vc2|`, and `vc1 >= 0`.
    pub fn new(v1: f64, v2: f64, vc1: f64, vc2: f64) -> Result<Self, CovarianceError> {
        if !(v1.is_finite() && v2.is_finite() && vc1.is_finite() && vc2.is_finite()) {
            return Err(CovarianceError::NonFinite);
        }
        if v1 < 0.5 - BONA_FIDE_TOL || v2 < 0.5 - BONA_FIDE_TOL {
            return Err(CovarianceError::InvalidStandardForm(
                "local variance below 1/2",
            ));
        }
        if vc1 < 0.0 {
            return Err(CovarianceError::InvalidStandardForm(
                "vc1 must be non-negative",
            ));
        }
        if vc1.abs() < vc2.abs() {
            return Err(CovarianceError::InvalidStandardForm("|vc1| < |vc2|"));
        }
        Ok(StandardForm { v1, v2, vc1, vc2 })
    }

    pub fn v1(&self) -> f64 {
        self.v1
    }

    pub fn v2(&self) -> f64 {
        self.v2
    }

    pub fn vc1(&self) -> f64 {
        self.vc1
    }

    pub fn vc2(&self) -> f64 {
        self.vc2
    }

    /// `det Vc = vc1 · vc2`.
    pub fn det_vc(&self) -> f64 {
        self.vc1 * self.vc2
    }

    /// Block-diagonal embedding back into a full covariance matrix.
    pub fn embed(&self) -> CovarianceMatrix {
        let m = [
            [self.v1, 0.0, self.vc1, 0.0],
            [0.0, self.v1, 0.0, self.vc2],
            [self.vc1, 0.0, self.v2, 0.0],
            [0.0, self.vc2, 0.0, self.v2],
        ];
        CovarianceMatrix { m }
    }

    /// Symplectic eigenvalues of the embedded matrix, `nu1 >= nu2`.
    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        // The constructor guarantees positive local variances; an embedded
        // standard form always has a Cholesky factor.
        symplectic_eigenvalues(&self.embed()).unwrap_or((f64::NAN, f64::NAN))
    }
}

/// Collects the standard form together with the validation outcome, the
/// direct output of the reduction step.
#[derive(Clone, Copy, Debug)]
pub struct Reduction {
    pub standard_form: StandardForm,
    pub check: BonaFideCheck,
    pub invariants: SymplecticInvariants,
}

/// Convenience: validate, compute invariants, and reduce in one step.
pub fn reduce(cm: &CovarianceMatrix) -> Result<Reduction, CovarianceError> {
    let check = validate_bona_fide(cm)?;
    let invariants = invariants(cm)?;
    let standard_form = to_standard_form(cm)?;
    Ok(Reduction {
        standard_form,
        check,
        invariants,
    })
}
