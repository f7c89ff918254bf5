//! Independent reference computations for tests. Everything here is dense,
//! slow and written without reference to the library under test.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Dense = Vec<Vec<Complex64>>;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = a.iter().flatten().map(|x| x * x).sum();
        if off <= 1e-30 * scale.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Eigenvalues of a Hermitian matrix through its real embedding
/// `[[Re, -Im], [Im, Re]]`; each eigenvalue appears twice there.
pub fn hermitian_eigenvalues(m: &Dense) -> Vec<f64> {
    let n = m.len();
    let mut r = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let v = m[i][j];
            r[i][j] = v.re;
            r[i + n][j + n] = v.re;
            r[i][j + n] = -v.im;
            r[i + n][j] = v.im;
        }
    }
    jacobi_eigenvalues(r).into_iter().step_by(2).collect()
}

/// Largest singular value: the top eigenvalue of `[[0, M], [M*, 0]]`.
pub fn spectral_norm(m: &Dense) -> f64 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let n = rows + cols;
    let mut d = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..rows {
        for j in 0..cols {
            d[i][rows + j] = m[i][j];
            d[rows + j][i] = m[i][j].conj();
        }
    }
    hermitian_eigenvalues(&d).last().copied().unwrap_or(0.0).max(0.0)
}

pub fn min_eigenvalue(m: &Dense) -> f64 {
    hermitian_eigenvalues(m)[0]
}

/// Eigenvalues of `[[a, b], [conj b, d]]` from the characteristic polynomial.
pub fn eig2_hermitian(a: f64, b: Complex64, d: f64) -> (f64, f64) {
    let mean = (a + d) / 2.0;
    let rad = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
    (mean - rad, mean + rad)
}

/// First `count` indices of coarse block `i` over the atomic partition, by
/// walking anti-diagonals of the pairing grid.
pub fn cantor_block(i: usize, count: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut z = 0;
    'walk: for s in 0.. {
        for j in 0..=s {
            if s - j == i {
                out.push(z);
                if out.len() == count {
                    break 'walk;
                }
            }
            z += 1;
        }
    }
    out
}

/// Uniform(width) coarsened once: first `count` indices of coarse block `i`.
pub fn cantor_block_uniform(i: usize, width: usize, count: usize) -> Vec<usize> {
    let fine = cantor_block(i, count.div_ceil(width));
    fine.iter()
        .flat_map(|&b| b * width..(b + 1) * width)
        .take(count)
        .collect()
}

pub fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn adjoint(a: &Dense) -> Dense {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].conj()).collect()).collect()
}

/// Dense `n x n` matrix from sparse `(row, col, value)` entries.
pub fn dense(n: usize, entries: impl IntoIterator<Item = (usize, usize, Complex64)>) -> Dense {
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (r, c, v) in entries {
        m[r][c] += v;
    }
    m
}

/// Seeded sparse entries at distinct positions in `0..size` squared, with
/// real and imaginary parts in `[-1, 1)`.
pub fn seeded_entries(seed: u64, size: usize, count: usize) -> Vec<(usize, usize, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let pos = (rng.random_range(0..size), rng.random_range(0..size));
        let v = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        if seen.insert(pos) {
            out.push((pos.0, pos.1, v));
        }
    }
    out
}

/// Seeded dense `rows x cols` matrix with entries in the unit square.
pub fn seeded_dense(seed: u64, rows: usize, cols: usize) -> Dense {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect()
        })
        .collect()
}
