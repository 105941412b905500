//! Independent truncated-Fock verification of the bound ladder.
//!
//! The test operators are built as dense matrices in the product Fock basis
//! straight from ladder-operator algebra, with no reference to the analytic
//! tridiagonal determinants. [`ground_energy`] checks the `g_∞` anchor;
//! [`sn_minimize`] minimizes `⟨χ|L|χ⟩` over states of Schmidt rank at most
//! `r` by alternating block eigenproblems and must land on `g_r`;
//! [`correlated_subset_min`] brute-forces the Fock-window choice.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::{self, SymMat};
use crate::math;
use crate::witness::{Family, WitnessParams};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Alternation stops when the value improves by less than this.
const ALTERNATION_TOL: f64 = 1e-10;
/// Hard cap on alternation sweeps.
const MAX_SWEEPS: usize = 500;

/// Errors from oracle construction.
#[derive(Clone, Debug, PartialEq)]
pub enum OracleError {
    /// The Fock cutoff must be at least 2.
    CutoffTooSmall,
    /// Requested Schmidt rank exceeds the cutoff.
    RankExceedsCutoff,
    /// Subset enumeration is guarded to cutoffs of at most 18.
    CutoffTooLarge,
    /// The operation is defined for the other test-operator family.
    FamilyMismatch,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CutoffTooSmall => write!(f, "Fock cutoff must be at least 2"),
            OracleError::RankExceedsCutoff => write!(f, "rank exceeds the Fock cutoff"),
            OracleError::CutoffTooLarge => write!(f, "cutoff too large for subset enumeration"),
            OracleError::FamilyMismatch => write!(f, "operation requires the other family"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

/// Dense test operator in the product Fock basis `|m⟩|n⟩`,
/// index `m·(nmax+1) + n`, dimension `(nmax+1)²`.
#[derive(Clone)]
pub struct TruncatedOperator {
    nmax: usize,
    dim: usize,
    family: Family,
    dense: Vec<f64>,
}

/// Rank-`r` minimizer: mutually orthogonal left vectors, orthonormal right
/// vectors, and the attained expectation value.
#[derive(Clone, Debug)]
pub struct SchmidtAnsatz {
    pub rank: u32,
    pub left: Vec<Vec<f64>>,
    pub right: Vec<Vec<f64>>,
    pub value: f64,
}

impl fmt::Debug for TruncatedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedOperator")
            .field("nmax", &self.nmax)
            .field("dim", &self.dim)
            .field("family", &self.family)
            .finish_non_exhaustive()
    }
}

impl TruncatedOperator {
    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Matrix dimension `(nmax+1)²`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Entry `⟨m,n| L |m',n'⟩`.
    pub fn entry(&self, m: usize, n: usize, mp: usize, np: usize) -> f64 {
        let d = self.nmax + 1;
        self.dense[(m * d + n) * self.dim + (mp * d + np)]
    }

    /// Raw dense matrix, row-major.
    pub fn dense(&self) -> &[f64] {
        &self.dense
    }

    /// Nonzero entries as `(row, col, value)`, both triangles.
    fn nonzeros(&self) -> Vec<(u32, u32, f64)> {
        let mut out = Vec::new();
        for row in 0..self.dim {
            let base = row * self.dim;
            for col in 0..self.dim {
                let v = self.dense[base + col];
                if v != 0.0 {
                    out.push((row as u32, col as u32, v));
                }
            }
        }
        out
    }
}

/// Build the dense operator from ladder-operator matrix elements.
///
/// Diagonal `2ω1·m + 2ω2·n + ω1 + ω2` at `|m,n⟩`. The two-mode-squeezing
/// family couples `|m,n⟩ ↔ |m+1,n+1⟩` with `ωc·sqrt((m+1)(n+1))`; the
/// number-conserving family couples `|m,n⟩ ↔ |m+1,n-1⟩` with
/// `ωc·sqrt((m+1)·n)`.
pub fn build(p: &WitnessParams, nmax: usize) -> Result<TruncatedOperator, OracleError> {
    if nmax < 2 {
        return Err(OracleError::CutoffTooSmall);
    }
    let d = nmax + 1;
    let dim = d * d;
    let (w1, w2, wc) = (p.omega1(), p.omega2(), p.omegac());
    let mut dense = vec![0.0; dim * dim];
    for m in 0..=nmax {
        for n in 0..=nmax {
            let i = m * d + n;
            dense[i * dim + i] = 2.0 * w1 * m as f64 + 2.0 * w2 * n as f64 + w1 + w2;
            match p.family() {
                Family::N => {
                    if m < nmax && n < nmax {
                        let j = (m + 1) * d + (n + 1);
                        let v = wc * math::sqrt(((m + 1) * (n + 1)) as f64);
                        dense[i * dim + j] = v;
                        dense[j * dim + i] = v;
                    }
                }
                Family::P => {
                    if m < nmax && n > 0 {
                        let j = (m + 1) * d + (n - 1);
                        let v = wc * math::sqrt(((m + 1) * n) as f64);
                        dense[i * dim + j] = v;
                        dense[j * dim + i] = v;
                    }
                }
            }
        }
    }
    Ok(TruncatedOperator {
        nmax,
        dim,
        family: p.family(),
        dense,
    })
}

/// Ground-state energy of the dense operator.
///
/// The nonzero pattern splits into connected components (correlated chains
/// for one family, fixed-total-photon blocks for the other); each component
/// is solved densely and the minimum wins. The components are discovered
/// from the stored matrix, not assumed.
pub fn ground_energy(t: &TruncatedOperator) -> f64 {
    let nnz = t.nonzeros();
    let mut uf: Vec<u32> = (0..t.dim as u32).collect();
    fn find(uf: &mut [u32], mut x: u32) -> u32 {
        while uf[x as usize] != x {
            uf[x as usize] = uf[uf[x as usize] as usize];
            x = uf[x as usize];
        }
        x
    }
    for &(r, c, _) in &nnz {
        let (a, b) = (find(&mut uf, r), find(&mut uf, c));
        if a != b {
            uf[a as usize] = b;
        }
    }
    // Gather members per root.
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); t.dim];
    for i in 0..t.dim as u32 {
        let root = find(&mut uf, i);
        members[root as usize].push(i);
    }
    let mut best = f64::INFINITY;
    for group in members.iter().filter(|g| !g.is_empty()) {
        if group.len() == 1 {
            let i = group[0] as usize;
            best = best.min(t.dense[i * t.dim + i]);
            continue;
        }
        let mut sub = SymMat::zeros(group.len());
        for (k, &g) in group.iter().enumerate() {
            let base = g as usize * t.dim;
            for (l, &h) in group.iter().enumerate() {
                sub.set(k, l, t.dense[base + h as usize]);
            }
        }
        best = best.min(linalg::dense_smallest_eigenvalue(sub));
    }
    best
}

/// Minimize `⟨χ|L|χ⟩` over normalized states of Schmidt rank at most `r`.
///
/// Alternating block-coordinate descent: with the right vectors held
/// orthonormal, minimizing over the left family is a symmetric eigenproblem
/// for the block-compressed operator; the roles then swap. The overlap
/// matrix of the held side is reduced away by re-orthonormalizing it each
/// half-step (pushing the mixing onto the partner side), so every half-step
/// solves an ordinary symmetric eigenproblem and the value never increases.
/// The best over `restarts` seeded random starts is returned; the result is
/// an upper bound on the rank-`r` infimum within the truncation.
pub fn sn_minimize(
    t: &TruncatedOperator,
    r: u32,
    restarts: u32,
    seed: u64,
) -> Result<SchmidtAnsatz, OracleError> {
    if r == 0 || r as usize > t.nmax {
        return Err(OracleError::RankExceedsCutoff);
    }
    let restarts = restarts.max(1);
    let nnz = t.nonzeros();

    type RunResult = (f64, Vec<Vec<f64>>, Vec<Vec<f64>>);
    let run = |k: u32| -> RunResult {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(k as u64 + 1)),
        );
        alternate(t, &nnz, r as usize, &mut rng)
    };

    #[cfg(feature = "parallel")]
    let results: Vec<(u32, RunResult)> =
        (0..restarts).into_par_iter().map(|k| (k, run(k))).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<(u32, RunResult)> = (0..restarts).map(|k| (k, run(k))).collect();

    let (_, (value, left, right)) = results
        .into_iter()
        .min_by(|(ka, (va, ..)), (kb, (vb, ..))| va.partial_cmp(vb).unwrap().then(ka.cmp(kb)))
        .unwrap();

    Ok(SchmidtAnsatz {
        rank: r,
        left,
        right,
        value,
    })
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller on uniforms from the top 53 bits.
    let u1 = ((rng.next_u64() >> 11) as f64 + 1.0) / 9_007_199_254_740_993.0;
    let u2 = (rng.next_u64() >> 11) as f64 / 9_007_199_254_740_992.0;
    math::sqrt(-2.0 * math::ln(u1)) * math::cos(2.0 * core::f64::consts::PI * u2)
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..dim).map(|_| gaussian(rng)).collect();
    let norm = math::sqrt(v.iter().map(|x| x * x).sum());
    for x in &mut v {
        *x /= norm;
    }
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Modified Gram-Schmidt on `vs`, pushing the triangular mixing onto
/// `partner` so the represented state `Σ_i vs_i ⊗ partner_i` is unchanged.
/// Numerically deficient directions are replaced by random orthonormal
/// fill-ins carrying zero partner weight.
fn orthonormalize_with_push(
    vs: &mut [Vec<f64>],
    partner: &[Vec<f64>],
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<f64>> {
    let r = vs.len();
    let dim = vs[0].len();
    let mut coeff = vec![vec![0.0; r]; r]; // coeff[i][j]: old v_i on new q_j
    let max_norm = vs
        .iter()
        .map(|v| math::sqrt(dot(v, v)))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    for i in 0..r {
        let mut resid = vs[i].clone();
        for j in 0..i {
            let c = dot(&vs[j], &resid);
            for (x, q) in resid.iter_mut().zip(&vs[j]) {
                *x -= c * q;
            }
            coeff[i][j] = c;
        }
        let norm = math::sqrt(dot(&resid, &resid));
        if norm > 1e-12 * max_norm {
            for x in &mut resid {
                *x /= norm;
            }
            coeff[i][i] = norm;
        } else {
            // Deficient: random fill-in, orthogonal to what we have.
            loop {
                let mut cand = random_unit(rng, dim);
                for j in 0..i {
                    let c = dot(&vs[j], &cand);
                    for (x, q) in cand.iter_mut().zip(&vs[j]) {
                        *x -= c * q;
                    }
                }
                let n = math::sqrt(dot(&cand, &cand));
                if n > 0.5 {
                    for x in &mut cand {
                        *x /= n;
                    }
                    resid = cand;
                    break;
                }
            }
            coeff[i][i] = 0.0;
        }
        vs[i] = resid;
    }
    // partner_new[j] = Σ_{i>=j} coeff[i][j] · partner_old[i]
    let pdim = partner[0].len();
    let mut out = vec![vec![0.0; pdim]; r];
    for j in 0..r {
        for i in j..r {
            let c = coeff[i][j];
            if c != 0.0 {
                for (o, p) in out[j].iter_mut().zip(&partner[i]) {
                    *o += c * p;
                }
            }
        }
    }
    out
}

/// Compress the operator onto `span(held) ⊗ full` and return the block
/// matrix for the free side.
///
/// `held_on_mode1 = true`: held vectors live in mode 1, free coordinates are
/// mode-2 Fock indices, block entry `⟨held_i, c| L |held_j, d⟩`. Otherwise
/// the roles swap.
fn block_operator(
    nnz: &[(u32, u32, f64)],
    d: usize,
    held: &[Vec<f64>],
    held_on_mode1: bool,
) -> SymMat {
    let r = held.len();
    let mut big = SymMat::zeros(r * d);
    for &(row, col, v) in nnz {
        let (a, c) = ((row as usize) / d, (row as usize) % d);
        let (b, e) = ((col as usize) / d, (col as usize) % d);
        // (a, c) are the mode-1/mode-2 indices of the row, (b, e) of the col.
        let (hr, fr, hc, fc) = if held_on_mode1 {
            (a, c, b, e)
        } else {
            (c, a, e, b)
        };
        for i in 0..r {
            let hi = held[i][hr];
            if hi == 0.0 {
                continue;
            }
            for j in 0..r {
                let hj = held[j][hc];
                if hj != 0.0 {
                    big.add(i * d + fr, j * d + fc, hi * v * hj);
                }
            }
        }
    }
    big
}

fn alternate(
    t: &TruncatedOperator,
    nnz: &[(u32, u32, f64)],
    r: usize,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let d = t.nmax + 1;
    // Random orthonormal right family to start.
    let mut right: Vec<Vec<f64>> = (0..r).map(|_| random_unit(rng, d)).collect();
    let mut left: Vec<Vec<f64>> = vec![vec![0.0; d]; r];
    let dummy = vec![vec![0.0; 1]; r];
    orthonormalize_with_push(&mut right, &dummy, rng);

    let mut value = f64::INFINITY;
    for _sweep in 0..MAX_SWEEPS {
        // Left half-step: right family orthonormal, solve for the left.
        let big = block_operator(nnz, d, &right, false);
        let (v1, z) = linalg::dense_smallest_eigenpair(&big);
        debug_assert!(v1 <= value + 1e-9 * (1.0 + value.abs()));
        for (i, li) in left.iter_mut().enumerate() {
            li.copy_from_slice(&z[i * d..(i + 1) * d]);
        }

        // Right half-step: orthonormalize the left family (pushing the
        // mixing onto the right), then solve for the right.
        right = orthonormalize_with_push(&mut left, &right, rng);
        let big = block_operator(nnz, d, &left, true);
        let (v2, w) = linalg::dense_smallest_eigenpair(&big);
        debug_assert!(v2 <= v1 + 1e-9 * (1.0 + v1.abs()));
        for (i, ri) in right.iter_mut().enumerate() {
            ri.copy_from_slice(&w[i * d..(i + 1) * d]);
        }
        // Restore the invariant: right orthonormal, mixing onto left.
        left = orthonormalize_with_push(&mut right, &left, rng);

        if value - v2 < ALTERNATION_TOL {
            value = value.min(v2);
            break;
        }
        value = v2;
    }

    let (left, right) = schmidt_factor(&left, &right);
    (value, left, right)
}

/// Re-factor `Σ_i left_i ⊗ right_i` into Schmidt form: left vectors
/// mutually orthogonal (norms are the Schmidt coefficients), right vectors
/// orthonormal. Assumes the right family is already orthonormal up to the
/// small mixing produced by the last half-step.
fn schmidt_factor(left: &[Vec<f64>], right: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let r = left.len();
    let d = left[0].len();
    // Gram of the left family diagonalized by Jacobi; rotate both sides.
    let mut gram = SymMat::zeros(r);
    for i in 0..r {
        for j in 0..r {
            gram.set(i, j, dot(&left[i], &left[j]));
        }
    }
    let (_vals, rot) = linalg::jacobi_eigh(&gram);
    let mut new_left = vec![vec![0.0; d]; r];
    let mut new_right = vec![vec![0.0; right[0].len()]; r];
    for (k, row) in rot.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if c != 0.0 {
                for (o, x) in new_left[k].iter_mut().zip(&left[i]) {
                    *o += c * x;
                }
                for (o, x) in new_right[k].iter_mut().zip(&right[i]) {
                    *o += c * x;
                }
            }
        }
    }
    // Normalize the right side, moving the weight onto the left.
    for k in 0..r {
        let n = math::sqrt(dot(&new_right[k], &new_right[k]));
        if n > 0.0 {
            for x in &mut new_right[k] {
                *x /= n;
            }
            for x in &mut new_left[k] {
                *x *= n;
            }
        }
    }
    // Largest Schmidt weight first.
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| {
        dot(&new_left[b], &new_left[b])
            .partial_cmp(&dot(&new_left[a], &new_left[a]))
            .unwrap()
    });
    let left = order.iter().map(|&k| new_left[k].clone()).collect();
    let right = order.iter().map(|&k| new_right[k].clone()).collect();
    (left, right)
}

/// Brute-force check of the Fock-window choice for the two-mode-squeezing
/// family: minimum over all `r`-element subsets `S ⊆ {0..nmax}` of the
/// smallest eigenvalue of the correlated-chain submatrix indexed by `S`.
pub fn correlated_subset_min(p: &WitnessParams, r: u32, nmax: usize) -> Result<f64, OracleError> {
    if p.family() != Family::N {
        return Err(OracleError::FamilyMismatch);
    }
    if nmax > 18 {
        return Err(OracleError::CutoffTooLarge);
    }
    let r = r as usize;
    if r == 0 || r > nmax {
        return Err(OracleError::RankExceedsCutoff);
    }
    let g1 = p.omega1() + p.omega2();
    // Chain over |n,n⟩: diagonal 2n(ω1+ω2) + ω1 + ω2, coupling (n+1)ωc.
    let chain_d: Vec<f64> = (0..=nmax).map(|n| 2.0 * n as f64 * g1 + g1).collect();
    let chain_e: Vec<f64> = (0..nmax).map(|n| (n + 1) as f64 * p.omegac()).collect();

    let mut subset: Vec<usize> = (0..r).collect();
    let mut best = f64::INFINITY;
    loop {
        // Principal submatrix of a tridiagonal matrix is tridiagonal:
        // couplings survive only between consecutive Fock indices.
        let d: Vec<f64> = subset.iter().map(|&n| chain_d[n]).collect();
        let e: Vec<f64> = subset
            .windows(2)
            .map(|w| if w[1] == w[0] + 1 { chain_e[w[0]] } else { 0.0 })
            .collect();
        let lam = if d.len() == 1 {
            d[0]
        } else {
            let (lo, hi) = linalg::gershgorin_bounds(&d, &e);
            linalg::tridiag_smallest_in(&d, &e, lo - 1.0, hi + 1.0, 1e-12)
        };
        best = best.min(lam);

        // Next lexicographic r-combination of {0..nmax}.
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(best);
            }
            i -= 1;
            if subset[i] != i + nmax + 1 - r {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params_n(wc: f64) -> WitnessParams {
        WitnessParams::new(Family::N, 0.5, 0.5, wc).unwrap()
    }

    fn params_p(wc: f64) -> WitnessParams {
        WitnessParams::new(Family::P, 0.5, 0.5, wc).unwrap()
    }

    #[test]
    fn build_entries() {
        let t = build(&params_n(-0.6), 4).unwrap();
        assert_eq!(t.entry(0, 0, 0, 0), 1.0);
        assert_eq!(t.entry(0, 0, 1, 1), -0.6);
        assert_eq!(t.entry(1, 1, 0, 0), -0.6);
        assert!((t.entry(2, 1, 3, 2) - (-0.6) * (6.0f64).sqrt()).abs() < 1e-15);
        assert_eq!(t.entry(0, 0, 1, 0), 0.0);

        let tp = build(&params_p(0.6), 4).unwrap();
        assert_eq!(tp.entry(0, 1, 1, 0), 0.6);
        assert_eq!(tp.entry(1, 0, 0, 1), 0.6);
        assert_eq!(tp.entry(0, 0, 1, 1), 0.0);
        assert_eq!(tp.entry(3, 3, 3, 3), 2.0 * 3.0 + 1.0);
    }

    #[test]
    fn build_is_symmetric() {
        let t = build(&params_p(0.5), 5).unwrap();
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                assert_eq!(t.dense()[i * t.dim() + j], t.dense()[j * t.dim() + i]);
            }
        }
    }

    #[test]
    fn cutoff_guard() {
        assert_eq!(
            build(&params_n(-0.6), 1).unwrap_err(),
            OracleError::CutoffTooSmall
        );
    }

    #[test]
    fn ground_energy_uncoupled() {
        let t = build(&params_n(0.0), 6).unwrap();
        assert!((ground_energy(&t) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ground_energy_p_family_is_vacuum() {
        // The number-conserving operator has a positive one-particle matrix:
        // the vacuum stays the ground state.
        let t = build(&params_p(0.6), 25).unwrap();
        assert!((ground_energy(&t) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ground_energy_converges_to_ginf() {
        // g_inf = sqrt(1 - 0.36) = 0.8 for the two-mode-squeezing family.
        let t = build(&params_n(-0.6), 40).unwrap();
        assert!((ground_energy(&t) - 0.8).abs() < 1e-7);
    }

    #[test]
    fn rank_one_minimum_is_vacuum() {
        let t = build(&params_n(-0.6), 12).unwrap();
        let ans = sn_minimize(&t, 1, 4, 7).unwrap();
        assert!((ans.value - 1.0).abs() < 1e-8, "value {}", ans.value);
        assert_eq!(ans.left.len(), 1);
        assert_eq!(ans.right.len(), 1);
    }

    #[test]
    fn rank_two_matches_closed_form() {
        // Frozen: 2 - sqrt(1.36).
        let t = build(&params_n(-0.6), 14).unwrap();
        let ans = sn_minimize(&t, 2, 6, 11).unwrap();
        assert!(
            (ans.value - 0.8338096210309399).abs() < 1e-7,
            "value {}",
            ans.value
        );
    }

    #[test]
    fn schmidt_structure_of_result() {
        let t = build(&params_n(-0.7), 10).unwrap();
        let ans = sn_minimize(&t, 3, 4, 3).unwrap();
        for i in 0..3 {
            let ni = dot(&ans.right[i], &ans.right[i]);
            assert!((ni - 1.0).abs() < 1e-8);
            for j in 0..i {
                assert!(dot(&ans.right[i], &ans.right[j]).abs() < 1e-8);
                assert!(dot(&ans.left[i], &ans.left[j]).abs() < 1e-8);
            }
        }
        // The state is normalized: Schmidt weights sum to 1.
        let w: f64 = ans.left.iter().map(|l| dot(l, l)).sum();
        assert!((w - 1.0).abs() < 1e-8);
    }

    #[test]
    fn subset_min_examples() {
        let p = params_n(-0.6);
        assert!((correlated_subset_min(&p, 1, 8).unwrap() - 1.0).abs() < 1e-12);
        let m2 = correlated_subset_min(&p, 2, 12).unwrap();
        assert!((m2 - 0.8338096210309399).abs() < 1e-10);
        let m3 = correlated_subset_min(&p, 3, 12).unwrap();
        assert!((m3 - crate::snbounds::g_r(&p, 3)).abs() < 1e-10);
    }

    #[test]
    fn subset_guards() {
        let p = params_n(-0.6);
        assert_eq!(
            correlated_subset_min(&p, 2, 19).unwrap_err(),
            OracleError::CutoffTooLarge
        );
        assert_eq!(
            correlated_subset_min(&params_p(0.5), 2, 10).unwrap_err(),
            OracleError::FamilyMismatch
        );
    }
}
