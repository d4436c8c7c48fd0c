//! Closed forms for the non-polyhedral families: gauges, support functions,
//! support points and subdifferentials.

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{self, dot, euclid};

pub fn lp_norm(x: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        x.iter().map(|c| c.abs()).sum()
    } else if p.is_infinite() {
        linalg::max_abs(x)
    } else if p == 2.0 {
        euclid(x)
    } else {
        let m = linalg::max_abs(x);
        if m == 0.0 {
            return 0.0;
        }
        let s: f64 = x.iter().map(|c| libm::pow(c.abs() / m, p)).sum();
        m * libm::pow(s, 1.0 / p)
    }
}

/// Hölder conjugate exponent.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// Unique norming functional of a nonzero `x`, for `1 < p < inf`.
pub fn lp_gradient(x: &[f64], p: f64) -> Vec<f64> {
    let n = lp_norm(x, p);
    if p == 2.0 {
        return linalg::scale(x, 1.0 / n);
    }
    x.iter().map(|c| c.signum() * libm::pow(c.abs() / n, p - 1.0)).map(|g| if g.is_nan() { 0.0 } else { g }).collect()
}

/// Unique unit vector maximizing `f`, for `1 < p < inf` and `f != 0`.
pub fn lp_support_point(f: &[f64], p: f64) -> Vec<f64> {
    let q = conjugate(p);
    lp_gradient(f, q)
}

/// Lens: intersection of two discs of radius `radius` centred at `(+-offset, 0)`.
#[derive(Clone, Copy, Debug)]
pub struct Lens {
    pub offset: f64,
    pub radius: f64,
}

impl Lens {
    fn a(&self) -> f64 {
        self.radius * self.radius - self.offset * self.offset
    }

    /// Gauge of the disc centred at `(cx, 0)`: positive root of
    /// `t^2 (R^2 - d^2) + 2 t <x, c> - |x|^2 = 0`.
    pub fn disc_gauge(&self, x: &[f64], cx: f64) -> f64 {
        let c = dot(x, x);
        if c == 0.0 {
            return 0.0;
        }
        let a = self.a();
        let b = 2.0 * x[0] * cx;
        let disc = libm::sqrt(b * b + 4.0 * a * c);
        if b >= 0.0 {
            2.0 * c / (b + disc)
        } else {
            (disc - b) / (2.0 * a)
        }
    }

    pub fn gauge(&self, x: &[f64]) -> f64 {
        self.disc_gauge(x, self.offset).max(self.disc_gauge(x, -self.offset))
    }

    pub fn corners(&self) -> [Vec<f64>; 2] {
        let h = libm::sqrt(self.a());
        [vec![0.0, h], vec![0.0, -h]]
    }

    fn candidates(&self, f: &[f64]) -> Vec<Vec<f64>> {
        let len = euclid(f);
        let u = [f[0] / len, f[1] / len];
        let r2 = self.radius * self.radius * (1.0 + 1e-12);
        let mut out: Vec<Vec<f64>> = self.corners().into_iter().collect();
        for cx in [self.offset, -self.offset] {
            let p = vec![cx + self.radius * u[0], self.radius * u[1]];
            let other = -cx;
            if (p[0] - other) * (p[0] - other) + p[1] * p[1] <= r2 {
                out.push(p);
            }
        }
        out
    }

    pub fn support(&self, f: &[f64]) -> f64 {
        if f.iter().all(|c| *c == 0.0) {
            return 0.0;
        }
        self.candidates(f).iter().map(|p| dot(f, p)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// The (unique) boundary point maximizing `f`.
    pub fn support_point(&self, f: &[f64]) -> Vec<f64> {
        let mut best = (f64::NEG_INFINITY, Vec::new());
        for p in self.candidates(f) {
            let v = dot(f, &p);
            if v > best.0 {
                best = (v, p);
            }
        }
        best.1
    }

    fn disc_gradient(&self, x: &[f64], cx: f64) -> Vec<f64> {
        let t = self.disc_gauge(x, cx);
        let denom = t * self.a() + x[0] * cx;
        vec![(x[0] - t * cx) / denom, x[1] / denom]
    }

    /// Extreme norming functionals at a unit `x`: one gradient, or both at a corner.
    pub fn support_extremes(&self, x: &[f64], tol: f64) -> Vec<Vec<f64>> {
        let gp = self.disc_gauge(x, self.offset);
        let gm = self.disc_gauge(x, -self.offset);
        let top = gp.max(gm);
        let mut out = Vec::new();
        for (g, cx) in [(gp, self.offset), (gm, -self.offset)] {
            if g >= top - tol {
                let grad = self.disc_gradient(x, cx);
                let h = self.support(&grad);
                out.push(linalg::scale(&grad, 1.0 / h));
            }
        }
        out
    }
}

/// Stadium: points within `radius` of the segment `[(-c, 0), (c, 0)]`.
#[derive(Clone, Copy, Debug)]
pub struct Stadium {
    pub half_length: f64,
    pub radius: f64,
}

impl Stadium {
    /// Smallest `t` with `d_2(x, t * segment) <= t * r`. Over the flat part
    /// `t = |x_2| / r`; over a cap `t` is the positive root of
    /// `(|x_1| - c t)^2 + x_2^2 = r^2 t^2`, taken in rationalized form.
    pub fn gauge(&self, x: &[f64]) -> f64 {
        let (a, b) = (x[0].abs(), x[1].abs());
        let (c, r) = (self.half_length, self.radius);
        if a * r <= c * b {
            return b / r;
        }
        let q = a * a + b * b;
        q / (a * c + libm::sqrt(a * a * r * r + b * b * (r * r - c * c)))
    }

    pub fn support(&self, f: &[f64]) -> f64 {
        self.half_length * f[0].abs() + self.radius * euclid(f)
    }

    pub fn face_vertices(&self, f: &[f64], tol: f64) -> Vec<Vec<f64>> {
        let len = euclid(f);
        let u = [f[0] / len, f[1] / len];
        let cap = |sx: f64| vec![sx * self.half_length + self.radius * u[0], self.radius * u[1]];
        if u[0].abs() <= tol {
            vec![cap(1.0), cap(-1.0)]
        } else {
            vec![cap(u[0].signum())]
        }
    }

    pub fn support_extremes(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let s0 = x[0].clamp(-self.half_length, self.half_length);
        let n = [x[0] - s0, x[1]];
        let h = self.support(&n);
        vec![vec![n[0] / h, n[1] / h]]
    }
}

/// `sqrt(|x|_1^2 + |x|_2^2)`.
pub fn one_two_norm(x: &[f64]) -> f64 {
    let l1: f64 = x.iter().map(|c| c.abs()).sum();
    libm::sqrt(l1 * l1 + dot(x, x))
}

/// Threshold `b` solving `b = sum_i max(|f_i| - b, 0)`.
fn one_two_threshold(f: &[f64]) -> f64 {
    let mut a: Vec<f64> = f.iter().map(|c| c.abs()).collect();
    a.sort_by(|x, y| y.total_cmp(x));
    let mut prefix = 0.0;
    for k in 0..a.len() {
        prefix += a[k];
        let b = prefix / (k as f64 + 2.0);
        let next = a.get(k + 1).copied().unwrap_or(0.0);
        if next <= b {
            return b;
        }
    }
    prefix / (a.len() as f64 + 1.0)
}

fn soft_threshold(f: &[f64], b: f64) -> Vec<f64> {
    f.iter().map(|c| c.signum() * (c.abs() - b).max(0.0)).collect()
}

/// Dual norm, in closed form: the maximizer of `f` over the ball is the
/// soft-thresholded (and renormalized) `f`.
pub fn one_two_dual(f: &[f64]) -> f64 {
    if f.iter().all(|c| *c == 0.0) {
        return 0.0;
    }
    one_two_norm(&soft_threshold(f, one_two_threshold(f)))
}

pub fn one_two_support_point(f: &[f64]) -> Vec<f64> {
    let u = soft_threshold(f, one_two_threshold(f));
    let n = one_two_norm(&u);
    linalg::scale(&u, 1.0 / n)
}

/// Extreme points of the subdifferential at a unit `x`: the box
/// `(|x|_1 s + x) / |x|` with `s_i = sign(x_i)` off the zero set and
/// `s_i = +-1` on it.
pub fn one_two_support_extremes(x: &[f64], tol: f64) -> Vec<Vec<f64>> {
    let l1: f64 = x.iter().map(|c| c.abs()).sum();
    let n = one_two_norm(x);
    let scale = linalg::max_abs(x);
    let zeros: Vec<usize> = (0..x.len()).filter(|&i| x[i].abs() <= tol * scale).collect();
    let k = zeros.len().min(16);
    (0..1usize << k)
        .map(|mask| {
            let mut g: Vec<f64> = x.iter().map(|c| (l1 * c.signum() + c) / n).collect();
            for (bit, &i) in zeros.iter().take(k).enumerate() {
                let s = if mask >> bit & 1 == 1 { 1.0 } else { -1.0 };
                g[i] = l1 * s / n;
            }
            g
        })
        .collect()
}
