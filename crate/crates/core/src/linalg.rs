//! Internal dense/tridiagonal symmetric eigensolvers.
//!
//! Everything here is plain `Vec<f64>` based so it works without `std`.
//! The tridiagonal path (Sturm counts plus bisection) is the workhorse for
//! the bound ladder; the dense path (Householder reduction, bisection,
//! inverse iteration) serves the truncated-Fock oracle.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// Number of eigenvalues of the symmetric tridiagonal matrix `(diag, off)`
/// strictly less than `shift`, via the LDLᵀ pivot recurrence.
pub(crate) fn sturm_count_below(diag: &[f64], off: &[f64], shift: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0usize;
    let mut q = diag[0] - shift;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < f64::MIN_POSITIVE {
            if q >= 0.0 {
                f64::MIN_POSITIVE
            } else {
                -f64::MIN_POSITIVE
            }
        } else {
            q
        };
        q = (diag[i] - shift) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Smallest eigenvalue of a symmetric tridiagonal matrix by Sturm bisection
/// on the bracket `[lo, hi]`, absolute tolerance `tol`.
///
/// The bracket must satisfy `count(lo) == 0` and `count(hi) >= 1`; callers
/// get that from Gershgorin disks or from eigenvalue interlacing.
pub(crate) fn tridiag_smallest_in(diag: &[f64], off: &[f64], lo: f64, hi: f64, tol: f64) -> f64 {
    debug_assert_eq!(off.len() + 1, diag.len());
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if sturm_count_below(diag, off, mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Gershgorin bounds `(lo, hi)` enclosing the whole spectrum.
pub(crate) fn gershgorin_bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// Dense symmetric matrix in row-major storage.
#[derive(Clone, Debug)]
pub(crate) struct SymMat {
    pub n: usize,
    pub a: Vec<f64>,
}

impl SymMat {
    pub fn zeros(n: usize) -> Self {
        SymMat {
            n,
            a: vec![0.0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] += v;
    }
}

/// Householder reflector `(k, beta, v)` with `v` acting on rows `k+1..n`.
type Reflector = (usize, f64, Vec<f64>);

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
///
/// Returns `(diag, off, reflectors)`; the reflectors are replayed in
/// reverse when transforming tridiagonal eigenvectors back to the dense
/// basis.
fn householder_tridiagonalize(mat: &mut SymMat) -> (Vec<f64>, Vec<f64>, Vec<Reflector>) {
    let n = mat.n;
    let mut reflectors = Vec::new();
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        // Column k below the diagonal.
        let mut x = vec![0.0; m];
        for i in 0..m {
            x[i] = mat.get(k + 1 + i, k);
        }
        let mut norm2 = 0.0;
        for &xi in &x[1..] {
            norm2 += xi * xi;
        }
        if norm2 == 0.0 {
            continue;
        }
        let alpha = math::sqrt(x[0] * x[0] + norm2);
        let alpha = if x[0] > 0.0 { -alpha } else { alpha };
        let mut v = x.clone();
        v[0] -= alpha;
        let vnorm2 = v[0] * v[0] + norm2;
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // p = beta * A22 * v, w = p - (beta/2)(pᵀv) v, A22 -= v wᵀ + w vᵀ.
        let mut p = vec![0.0; m];
        for i in 0..m {
            let mut s = 0.0;
            let row = (k + 1 + i) * n + (k + 1);
            for j in 0..m {
                s += mat.a[row + j] * v[j];
            }
            p[i] = beta * s;
        }
        let mut pv = 0.0;
        for i in 0..m {
            pv += p[i] * v[i];
        }
        let half = 0.5 * beta * pv;
        let mut w = p;
        for i in 0..m {
            w[i] -= half * v[i];
        }
        for i in 0..m {
            let row = (k + 1 + i) * n + (k + 1);
            for j in 0..m {
                mat.a[row + j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
        mat.set(k + 1, k, alpha);
        mat.set(k, k + 1, alpha);
        for i in 2..=m {
            mat.set(k + i, k, 0.0);
            mat.set(k, k + i, 0.0);
        }
        reflectors.push((k, beta, v));
    }

    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    for i in 0..n {
        diag[i] = mat.get(i, i);
    }
    for i in 0..n.saturating_sub(1) {
        off[i] = mat.get(i + 1, i);
    }
    (diag, off, reflectors)
}

/// Solve `(T - shift) x = b` for tridiagonal `T` with partial pivoting.
///
/// Gaussian elimination with row swaps needs one extra superdiagonal of
/// fill-in; `b` is overwritten with the solution. Near-singular pivots are
/// clamped, which is exactly what inverse iteration wants.
fn tridiag_shifted_solve(diag: &[f64], off: &[f64], shift: f64, b: &mut [f64]) {
    let n = diag.len();
    let mut d = vec![0.0; n]; // main diagonal of U
    let mut u1 = vec![0.0; n]; // first superdiagonal of U
    let mut u2 = vec![0.0; n]; // second superdiagonal (fill-in)
    for i in 0..n {
        d[i] = diag[i] - shift;
    }
    u1[..n - 1].copy_from_slice(off);
    for i in 0..n - 1 {
        if off[i].abs() > d[i].abs() {
            // Swap row i with row i+1, then eliminate.
            let (ri0, ri1, ri2) = (d[i], u1[i], u2[i]);
            d[i] = off[i];
            u1[i] = d[i + 1];
            u2[i] = if i + 2 < n { u1[i + 1] } else { 0.0 };
            d[i + 1] = ri1;
            u1[i + 1] = ri2;
            b.swap(i, i + 1);
            let mult = ri0
                / if d[i].abs() < f64::MIN_POSITIVE {
                    f64::MIN_POSITIVE
                } else {
                    d[i]
                };
            d[i + 1] -= mult * u1[i];
            u1[i + 1] -= mult * u2[i];
            b[i + 1] -= mult * b[i];
        } else {
            let pivot = if d[i].abs() < f64::MIN_POSITIVE {
                f64::MIN_POSITIVE
            } else {
                d[i]
            };
            let mult = off[i] / pivot;
            d[i + 1] -= mult * u1[i];
            if i + 2 < n {
                u1[i + 1] -= mult * u2[i];
            }
            b[i + 1] -= mult * b[i];
        }
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= u1[i] * b[i + 1];
        }
        if i + 2 < n {
            s -= u2[i] * b[i + 2];
        }
        let di = if d[i].abs() < f64::MIN_POSITIVE {
            f64::MIN_POSITIVE
        } else {
            d[i]
        };
        b[i] = s / di;
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let mut s = 0.0;
    for &x in v.iter() {
        s += x * x;
    }
    let norm = math::sqrt(s);
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
    norm
}

/// Smallest eigenvalue of a dense symmetric matrix.
pub(crate) fn dense_smallest_eigenvalue(mut mat: SymMat) -> f64 {
    if mat.n == 0 {
        return 0.0;
    }
    let (diag, off, _) = householder_tridiagonalize(&mut mat);
    let (lo, hi) = gershgorin_bounds(&diag, &off);
    tridiag_smallest_in(&diag, &off, lo - 1.0, hi + 1.0, 1e-13)
}

/// Smallest eigenpair of a dense symmetric matrix.
///
/// The eigenvector comes from inverse iteration on the tridiagonal form,
/// replayed through the Householder reflectors; the returned value is the
/// Rayleigh quotient of that vector in the original matrix.
pub(crate) fn dense_smallest_eigenpair(mat: &SymMat) -> (f64, Vec<f64>) {
    let n = mat.n;
    if n == 1 {
        return (mat.get(0, 0), vec![1.0]);
    }
    let mut work = mat.clone();
    let (diag, off, reflectors) = householder_tridiagonalize(&mut work);
    let (glo, ghi) = gershgorin_bounds(&diag, &off);
    let lambda = tridiag_smallest_in(&diag, &off, glo - 1.0, ghi + 1.0, 1e-13);

    // Inverse iteration with a slightly displaced shift.
    let scale = ghi.abs().max(glo.abs()).max(1.0);
    let shift = lambda - 1e-12 * scale;
    let mut y = vec![1.0; n];
    normalize(&mut y);
    for _ in 0..4 {
        tridiag_shifted_solve(&diag, &off, shift, &mut y);
        normalize(&mut y);
    }

    // Back-transform through the reflectors, last to first.
    for (k, beta, v) in reflectors.iter().rev() {
        let m = v.len();
        let mut dot = 0.0;
        for i in 0..m {
            dot += v[i] * y[k + 1 + i];
        }
        let f = beta * dot;
        for i in 0..m {
            y[k + 1 + i] -= f * v[i];
        }
    }
    normalize(&mut y);

    // Rayleigh quotient in the original matrix.
    let mut quad = 0.0;
    for i in 0..n {
        let mut s = 0.0;
        let row = i * n;
        for j in 0..n {
            s += mat.a[row + j] * y[j];
        }
        quad += y[i] * s;
    }
    (quad, y)
}

/// Full eigen-decomposition of a small dense symmetric matrix by cyclic
/// Jacobi rotations. Returns eigenvalues ascending with matching
/// eigenvectors as rows.
pub(crate) fn jacobi_eigh(mat: &SymMat) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = mat.n;
    let mut a = mat.clone();
    let mut q = vec![vec![0.0; n]; n];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..60 {
        let mut offsum = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                offsum += a.get(i, j) * a.get(i, j);
            }
        }
        if offsum < 1e-28 {
            break;
        }
        for p in 0..n {
            for r in (p + 1)..n {
                let apr = a.get(p, r);
                if apr.abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (a.get(r, r) - a.get(p, p)) / apr;
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akr = a.get(k, r);
                    a.set(k, p, c * akp - s * akr);
                    a.set(k, r, s * akp + c * akr);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let ark = a.get(r, k);
                    a.set(p, k, c * apk - s * ark);
                    a.set(r, k, s * apk + c * ark);
                }
                for k in 0..n {
                    let qpk = q[p][k];
                    let qrk = q[r][k];
                    q[p][k] = c * qpk - s * qrk;
                    q[r][k] = s * qpk + c * qrk;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).partial_cmp(&a.get(j, j)).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors: Vec<Vec<f64>> = order.iter().map(|&i| q[i].clone()).collect();
    (values, vectors)
}
