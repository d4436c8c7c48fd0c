//! Small dense helpers over coordinate slices.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn euclid(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

#[inline]
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[inline]
pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[inline]
pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `a + s * b`
#[inline]
pub fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// `(1 - t) a + t b`
#[inline]
pub fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| (1.0 - t) * x + t * y).collect()
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Componentwise closeness in max-norm.
pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Removes near-duplicates (max-norm within `tol`), keeping first occurrences.
pub fn dedupe(points: Vec<Vec<f64>>, tol: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| close(q, &p, tol)) {
            out.push(p);
        }
    }
    out
}

pub fn centroid(points: &[Vec<f64>]) -> Vec<f64> {
    let n = points[0].len();
    let mut c = vec![0.0; n];
    for p in points {
        for (ci, pi) in c.iter_mut().zip(p) {
            *ci += pi;
        }
    }
    let k = points.len() as f64;
    c.iter_mut().for_each(|ci| *ci /= k);
    c
}

/// Solves the square system `m x = rhs` (row-major `m`) by Gaussian
/// elimination with partial pivoting. Returns `None` when the pivot falls
/// below `pivot_tol` relative to the largest entry.
pub fn solve(m: &[f64], rhs: &[f64], pivot_tol: f64) -> Option<Vec<f64>> {
    let n = rhs.len();
    let mut a = m.to_vec();
    let mut b = rhs.to_vec();
    let scale = max_abs(&a).max(f64::MIN_POSITIVE);
    for col in 0..n {
        let (piv, best) = (col..n).map(|r| (r, a[r * n + col].abs())).max_by(|x, y| x.1.total_cmp(&y.1))?;
        if best <= pivot_tol * scale {
            return None;
        }
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
            }
            b.swap(piv, col);
        }
        let d = a[col * n + col];
        for r in col + 1..n {
            let factor = a[r * n + col] / d;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[r * n + k] -= factor * a[col * n + k];
            }
            b[r] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let mut s = b[r];
        for k in r + 1..n {
            s -= a[r * n + k] * x[k];
        }
        x[r] = s / a[r * n + r];
    }
    Some(x)
}

/// Numerical rank of a list of vectors (row echelon with relative tolerance).
pub fn rank(rows: &[Vec<f64>], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let scale = a.iter().map(|r| max_abs(r)).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let mut r = 0;
    for col in 0..n {
        if r == a.len() {
            break;
        }
        let (piv, best) = (r..a.len()).map(|i| (i, a[i][col].abs())).max_by(|x, y| x.1.total_cmp(&y.1)).unwrap();
        if best <= tol * scale {
            continue;
        }
        a.swap(r, piv);
        for i in r + 1..a.len() {
            let (top, bottom) = a.split_at_mut(i);
            let (pivot, row) = (&top[r], &mut bottom[0]);
            let f = row[col] / pivot[col];
            for (x, p) in row[col..n].iter_mut().zip(&pivot[col..n]) {
                *x -= f * p;
            }
        }
        r += 1;
    }
    r
}

/// Calls `visit` with every `k`-subset of `0..n` in lexicographic order.
/// Stops early when `visit` returns `false`.
pub fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    'outer: loop {
        if !visit(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
        }
        return;
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Eigenvalues of a symmetric matrix (row-major) by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &[f64], n: usize) -> Vec<f64> {
    let mut a = m.to_vec();
    let frob = libm::sqrt(dot(&a, &a)).max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if libm::sqrt(off) <= 1e-17 * frob {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Orthonormal basis (Euclidean) of the orthogonal complement of `normal`.
pub fn complement_basis(normal: &[f64]) -> Vec<Vec<f64>> {
    let n = normal.len();
    let len = euclid(normal);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    let unit: Vec<f64> = if len > 0.0 { scale(normal, 1.0 / len) } else { vec![0.0; n] };
    let mut kept: Vec<Vec<f64>> = Vec::new();
    if len > 0.0 {
        kept.push(unit);
    }
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        for q in &kept {
            let c = dot(&e, q);
            e = axpy(&e, -c, q);
        }
        let l = euclid(&e);
        if l > 1e-8 {
            let e = scale(&e, 1.0 / l);
            kept.push(e.clone());
            basis.push(e);
        }
        if basis.len() + usize::from(len > 0.0) == n {
            break;
        }
    }
    basis
}
