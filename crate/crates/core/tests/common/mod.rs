//! Independent oracles used by the acceptance tests. Nothing here shares
//! logic with the library: areas come from a winding-number slab integral and
//! quantum identities are replayed on explicit clock-and-shift matrices.

#![allow(dead_code)]

use num_complex::Complex64;
use qtorus::{HolonomyWord, PLPath, Rat};

/// Signed winding-weighted area of a closed PL loop, computed as
/// `integral of w(x, y) dA` by vertical slab decomposition.
///
/// For fixed `x`, the winding number `w(x, y)` changes only at the heights
/// where an edge crosses the vertical line, so
/// `I(x) = integral of w dy = sum_j sigma_j * y_j(x)` over the crossing
/// edges, with `sigma_j = -sign(dx_j)` (the edges of a closed loop balance,
/// so the sum is finite). `I` is piecewise linear in `x` with breakpoints
/// only at vertex abscissae; evaluating it at each slab midpoint integrates
/// it exactly.
pub fn winding_area(loop_path: &PLPath) -> Rat {
    let verts = loop_path.vertices();
    assert_eq!(verts.first(), verts.last(), "oracle needs a closed loop");

    let mut xs: Vec<Rat> = verts.iter().map(|v| v.x).collect();
    xs.sort();
    xs.dedup();

    let zero = Rat::from_integer(0);
    let mut area = zero;
    for slab in xs.windows(2) {
        let (x0, x1) = (slab[0], slab[1]);
        let xm = (x0 + x1) / Rat::from_integer(2);
        let mut integrand = zero;
        for edge in verts.windows(2) {
            let (a, b) = (edge[0], edge[1]);
            if (a.x < xm && xm < b.x) || (b.x < xm && xm < a.x) {
                let t = (xm - a.x) / (b.x - a.x);
                let y_at = a.y + t * (b.y - a.y);
                let sigma = if b.x > a.x {
                    Rat::from_integer(-1)
                } else {
                    Rat::from_integer(1)
                };
                integrand += sigma * y_at;
            }
        }
        area += integrand * (x1 - x0);
    }
    area
}

/// Signed area between two paths with common endpoints, via the oracle:
/// the winding area of `p` followed by the reverse of `p2`.
pub fn winding_area_between(p: &PLPath, p2: &PLPath) -> Rat {
    let mut verts: Vec<_> = p.vertices().to_vec();
    verts.extend(p2.vertices().iter().rev().skip(1));
    // The concatenation may revisit vertices; the oracle only needs the
    // closed vertex cycle, so drop zero-length backtracks as we go.
    let mut clean = Vec::with_capacity(verts.len());
    for v in verts {
        if clean.last() != Some(&v) {
            clean.push(v);
        }
    }
    if clean.last() != Some(&clean[0]) {
        clean.push(clean[0]);
    }
    let loop_path = PLPath::new(clean).expect("closed concatenation");
    winding_area(&loop_path)
}

/// Dense complex matrix just big enough for the clock-and-shift oracle.
#[derive(Clone, Debug)]
pub struct CMatrix {
    pub n: usize,
    pub a: Vec<Vec<Complex64>>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            a: vec![vec![Complex64::new(0.0, 0.0); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m.a[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let s = self.a[i][k];
                for j in 0..self.n {
                    out.a[i][j] += s * other.a[k][j];
                }
            }
        }
        out
    }

    pub fn scale(&self, by: Complex64) -> CMatrix {
        let mut out = self.clone();
        for row in &mut out.a {
            for v in row.iter_mut() {
                *v *= by;
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.a[i][i]).sum()
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                worst = worst.max((self.a[i][j] - other.a[i][j]).norm());
            }
        }
        worst
    }
}

/// The N-dimensional clock-and-shift representation at `q = exp(2*pi*i/N)`:
/// `C = diag(omega^j)`, `S` the cyclic shift, so `C S = omega S C`. A word
/// `q^k exp(a r1 + b r2)` with integer `a, b` maps to
/// `exp(i theta (k - a b / 2)) C^a S^b`, which is an exact homomorphism for
/// the word product.
pub struct ClockShift {
    pub n: usize,
    pub theta: f64,
    clock: CMatrix,
    shift: CMatrix,
}

impl ClockShift {
    pub fn new(n: usize) -> Self {
        let theta = 2.0 * std::f64::consts::PI / n as f64;
        let mut clock = CMatrix::zeros(n);
        let mut shift = CMatrix::zeros(n);
        for j in 0..n {
            clock.a[j][j] = Complex64::from_polar(1.0, theta * j as f64);
            shift.a[(j + 1) % n][j] = Complex64::new(1.0, 0.0);
        }
        ClockShift { n, theta, clock, shift }
    }

    fn int_power(&self, base: &CMatrix, exp: i64) -> CMatrix {
        let mut out = CMatrix::identity(self.n);
        // The generators have order N, so a negative power is a positive one.
        let e = exp.rem_euclid(self.n as i64);
        for _ in 0..e {
            out = out.mul(base);
        }
        out
    }

    /// Matrix image of a holonomy word; `alpha` and `beta` must be integers.
    pub fn rho(&self, w: &HolonomyWord) -> CMatrix {
        assert!(w.alpha.is_integer() && w.beta.is_integer(), "integer word");
        let a = w.alpha.to_integer();
        let b = w.beta.to_integer();
        let k = rat_f64(w.phase) - (a as f64) * (b as f64) / 2.0;
        let phase = Complex64::from_polar(1.0, self.theta * k);
        self.int_power(&self.clock, a)
            .mul(&self.int_power(&self.shift, b))
            .scale(phase)
    }

    /// `q^e` as the numeric root of unity of this representation.
    pub fn q_pow(&self, e: Rat) -> Complex64 {
        Complex64::from_polar(1.0, self.theta * rat_f64(e))
    }
}

pub fn rat_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
