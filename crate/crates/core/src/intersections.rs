//! Transversal intersections of straight torus loops, with exact rational
//! positions, lift parameters and signed indices.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geometry::RatPoint;
use crate::{rat, Rat};

/// A straight loop on the torus, i.e. the straight path `(0,0) -> (m,n)`
/// taken mod Z^2. `multiplicity > 1` means the loop is reducible: it
/// traverses its primitive part several times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StraightLoop {
    m: i64,
    n: i64,
}

impl StraightLoop {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 && n == 0 {
            return Err(Error::ZeroLoop);
        }
        Ok(StraightLoop { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn winding(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    /// `gcd(|m|,|n|) >= 1`.
    pub fn multiplicity(&self) -> i64 {
        self.m.abs().gcd(&self.n.abs())
    }

    /// Primitive part `(m', n')` with `(m,n) = multiplicity * (m',n')`.
    pub fn primitive(&self) -> (i64, i64) {
        let c = self.multiplicity();
        (self.m / c, self.n / c)
    }

    pub fn inverse(&self) -> StraightLoop {
        StraightLoop {
            m: -self.m,
            n: -self.n,
        }
    }
}

/// One crossing of two straight loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionPoint {
    /// Torus position, reduced to `[0,1)^2`.
    pub position: RatPoint,
    /// Fraction along the full lift of the first loop, in `[0,1)`.
    pub lift_param: Rat,
    /// Signed index: `sign * c1 * c2` in geometric mode, `sign * c2` in
    /// lift mode (the quantum exponent of the crossing).
    pub index: i64,
}

/// Common sign of all crossings of a transversal pair: the sign of
/// `m1 t2 - n1 s2` (angle from the first tangent to the second).
pub fn intersection_index_sign(p1: &StraightLoop, p2: &StraightLoop) -> Result<i64> {
    let d = p1.m * p2.n - p1.n * p2.m;
    if d == 0 {
        return Err(Error::ParallelLoops);
    }
    Ok(d.signum())
}

/// Total intersection number: the determinant `m1 t2 - n1 s2`. Zero for
/// parallel loops.
pub fn total_intersection_number(p1: &StraightLoop, p2: &StraightLoop) -> i64 {
    p1.m * p2.n - p1.n * p2.m
}

/// Lift parameters of all crossings along the full lift of `p1`: the lift
/// meets the family of lines parallel to `p2` through lattice points exactly
/// at `lambda = i/|D|`, `i = 0..|D|-1`, where `D = m1 t2' - n1 s2'` with
/// `(s2',t2')` the primitive part of `p2`.
fn lift_grid(p1: &StraightLoop, p2: &StraightLoop) -> Result<Vec<Rat>> {
    let (s2p, t2p) = p2.primitive();
    let d = p1.m * t2p - p1.n * s2p;
    if d == 0 {
        return Err(Error::ParallelLoops);
    }
    let count = d.abs();
    Ok((0..count).map(|i| rat(i, count)).collect())
}

fn position_at(p1: &StraightLoop, lambda: Rat) -> RatPoint {
    RatPoint::new(
        lambda * Rat::from_integer(p1.m),
        lambda * Rat::from_integer(p1.n),
    )
    .frac()
}

/// Geometric mode: the distinct torus points where the two loops cross,
/// sorted by ascending lift parameter (the smallest parameter at which each
/// point is reached along `p1`). Each index is `sign * c1 * c2`; the indices
/// sum to the total intersection number.
pub fn enumerate_points(p1: &StraightLoop, p2: &StraightLoop) -> Result<Vec<IntersectionPoint>> {
    let sign = intersection_index_sign(p1, p2)?;
    let c1 = p1.multiplicity();
    let c2 = p2.multiplicity();
    let mut pts: Vec<IntersectionPoint> = Vec::new();
    for lambda in lift_grid(p1, p2)? {
        let position = position_at(p1, lambda);
        // The grid visits each torus point c1 times; keep the first visit.
        if pts.iter().any(|p| p.position == position) {
            continue;
        }
        pts.push(IntersectionPoint {
            position,
            lift_param: lambda,
            index: sign * c1 * c2,
        });
    }
    Ok(pts)
}

/// Lift mode: one entry per crossing of the full lift segment of `p1` with
/// the lines parallel to `p2` through lattice points, in strictly increasing
/// lift parameter. Torus positions repeat when `p1` is reducible. Each index
/// is `sign * c2`, the quantum exponent of the crossing.
pub fn enumerate_along_p1(p1: &StraightLoop, p2: &StraightLoop) -> Result<Vec<IntersectionPoint>> {
    let sign = intersection_index_sign(p1, p2)?;
    let c2 = p2.multiplicity();
    Ok(lift_grid(p1, p2)?
        .into_iter()
        .map(|lambda| IntersectionPoint {
            position: position_at(p1, lambda),
            lift_param: lambda,
            index: sign * c2,
        })
        .collect())
}
