//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use avecond::cond::cond_exact;
use avecond::dense::{self, Matrix, NormSpec, PNorm};
use avecond::regularity::regularity_exact;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Largest exact condition number kept in the random regular corpus.
pub const COND_CAP: f64 = 1e3;

pub fn norms() -> [NormSpec; 3] {
    [NormSpec::ONE, NormSpec::TWO, NormSpec::INF]
}

/// Plain norms plus a random positive scaling of each.
pub fn norms_with_scaled(rng: &mut TestRng, n: usize) -> Vec<NormSpec> {
    let mut out = norms().to_vec();
    for p in [PNorm::One, PNorm::Two, PNorm::Inf] {
        let s = (0..n).map(|_| rng.gen_range(0.2..5.0)).collect();
        out.push(NormSpec::scaled(p, s).unwrap());
    }
    out
}

pub fn uniform_matrix(rng: &mut TestRng, n: usize, lo: f64, hi: f64) -> Matrix {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..hi)).collect())
        .collect();
    Matrix::from_rows(&rows)
}

pub fn uniform_vec(rng: &mut TestRng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

/// A point strictly inside the unit box.
pub fn interior_d(rng: &mut TestRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn dim(rng: &mut TestRng, max: usize) -> usize {
    rng.gen_range(1..=max)
}

fn well_conditioned(a: &Matrix) -> bool {
    regularity_exact(a).map(|r| r.is_regular()).unwrap_or(false)
        && norms()
            .iter()
            .all(|ns| cond_exact(a, ns).map(|c| c.value() <= COND_CAP).unwrap_or(false))
}

/// Regular `A` with `c(A) <= COND_CAP` in every plain norm. Entries in
/// `[-3, 3]` plus a signed diagonal boost, so both regular and singular-member
/// candidates are drawn and the regular ones kept.
pub fn regular(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let mut a = uniform_matrix(rng, n, -3.0, 3.0);
        for i in 0..n {
            let boost = rng.gen_range(0.5..3.0);
            a[(i, i)] += if rng.gen_bool(0.5) { boost } else { -boost };
        }
        if well_conditioned(&a) {
            return a;
        }
    }
}

/// Random symmetric matrix, not necessarily regular.
pub fn symmetric(rng: &mut TestRng, n: usize) -> Matrix {
    let r = uniform_matrix(rng, n, -2.0, 2.0);
    let mut s = r.add(&r.transpose()).scale(0.5);
    for i in 0..n {
        s[(i, i)] += rng.gen_range(-3.0..3.0);
    }
    s
}

/// Symmetric with `sigma_min > 1`, via rejection.
pub fn symmetric_regular(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let s = symmetric(rng, n);
        if dense::sigma_min(&s) > 1.05 && well_conditioned(&s) {
            return s;
        }
    }
}

/// `alpha = min_i |A_ii| - (r_i + cl_i)/2 > 1` with random diagonal signs.
pub fn diag_dominant2(rng: &mut TestRng, n: usize) -> Matrix {
    let mut a = uniform_matrix(rng, n, -1.0, 1.0);
    for i in 0..n {
        let off: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| 0.5 * (a[(i, j)].abs() + a[(j, i)].abs()))
            .sum();
        let mag = off + rng.gen_range(1.1..4.0);
        a[(i, i)] = if rng.gen_bool(0.5) { mag } else { -mag };
    }
    a
}

/// Strictly row diagonally dominant with margin above 1: an H-matrix with
/// `rho(<A>^{-1}) < 1`.
pub fn h_matrix(rng: &mut TestRng, n: usize) -> Matrix {
    let mut a = uniform_matrix(rng, n, -1.0, 1.0);
    for i in 0..n {
        let off: f64 = (0..n).filter(|&j| j != i).map(|j| a[(i, j)].abs()).sum();
        let mag = off + rng.gen_range(1.1..3.0);
        a[(i, i)] = if rng.gen_bool(0.5) { mag } else { -mag };
    }
    a
}

/// `s I - N` with `N >= 0` and `s > rho(N) + 1`: `(A - I)^{-1} >= 0` and
/// `(A + I)^{-1} >= 0`.
pub fn m_matrix_shifted(rng: &mut TestRng, n: usize) -> Matrix {
    let nn = uniform_matrix(rng, n, 0.0, 1.0);
    let rho = dense::spectral_radius(&nn).unwrap();
    let s = rho + 1.0 + rng.gen_range(0.05..2.0);
    Matrix::identity(n).scale(s).sub(&nn)
}

/// `B^T B + delta I + K` with `K` skew: positive definite, hence P. Matrices
/// with an eigenvalue near 1 are redrawn.
pub fn p_matrix(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let b = uniform_matrix(rng, n, -1.5, 1.5);
        let k = uniform_matrix(rng, n, -1.0, 1.0);
        let skew = k.sub(&k.transpose()).scale(0.5);
        let delta = rng.gen_range(0.05..1.0);
        let m = b.transpose().mul(&b).add_diag(&vec![delta; n]).add(&skew);
        if shift_ok(&m) {
            return m;
        }
    }
}

/// Mixed draws: some P-matrices, some arbitrary, none with eigenvalue 1.
pub fn mixed_p(rng: &mut TestRng, n: usize) -> Matrix {
    if rng.gen_bool(0.5) {
        return p_matrix(rng, n);
    }
    loop {
        let m = uniform_matrix(rng, n, -2.0, 2.0);
        if shift_ok(&m) {
            return m;
        }
    }
}

/// M-matrix with `Diag(M) <= e`, strictly row diagonally dominant.
pub fn lcp_m_matrix(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            let d = rng.gen_range(0.3..1.0);
            let mut budget = d * rng.gen_range(0.0..0.9);
            for j in 0..n {
                if j != i {
                    let v = rng.gen_range(0.0..=budget);
                    m[(i, j)] = -v;
                    budget -= v;
                }
            }
            m[(i, i)] = d;
        }
        if shift_ok(&m) {
            return m;
        }
    }
}

/// H-matrix with `0 <= Diag(M) <= e` and mixed off-diagonal signs.
pub fn lcp_h_matrix(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let mut m = lcp_m_matrix(rng, n);
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.gen_bool(0.5) {
                    m[(i, j)] = -m[(i, j)];
                }
            }
        }
        if shift_ok(&m) {
            return m;
        }
    }
}

fn shift_ok(m: &Matrix) -> bool {
    let n = m.rows();
    let det = dense::det(&m.sub_diag(&vec![1.0; n]));
    det.abs() > 1e-6 * m.norm_inf().max(1.0).powi(n as i32)
}

/// `q` such that a strictly complementary solution exists: pick `z*`, `w*`
/// with disjoint supports and set `q = w* - M z*`.
pub fn lcp_q(rng: &mut TestRng, m: &Matrix) -> Vec<f64> {
    let n = m.rows();
    let mut z = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n {
        if rng.gen_bool(0.5) {
            z[i] = rng.gen_range(0.1..2.0);
        } else {
            w[i] = rng.gen_range(0.1..2.0);
        }
    }
    let mz = m.mul_vec(&z);
    w.iter().zip(&mz).map(|(wi, mzi)| wi - mzi).collect()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
