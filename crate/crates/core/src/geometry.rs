//! Exact rational planar geometry: PL paths, signed areas, Pick's theorem and
//! reduction of straight lattice paths to the fundamental square.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::{rat, Rat};

/// A point of the plane with exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        RatPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RatPoint {
            x: Rat::from_integer(x),
            y: Rat::from_integer(y),
        }
    }

    pub fn origin() -> Self {
        RatPoint::from_ints(0, 0)
    }

    pub fn is_integer(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The 2d cross product `x1 y2 - x2 y1`.
    pub fn cross(&self, other: &RatPoint) -> Rat {
        self.x * other.y - other.x * self.y
    }

    /// Coordinate-wise reduction mod Z^2 into `[0,1)^2`.
    pub fn frac(&self) -> RatPoint {
        RatPoint::new(self.x - self.x.floor(), self.y - self.y.floor())
    }
}

impl Add for RatPoint {
    type Output = RatPoint;
    fn add(self, rhs: RatPoint) -> RatPoint {
        RatPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for RatPoint {
    type Output = RatPoint;
    fn sub(self, rhs: RatPoint) -> RatPoint {
        RatPoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for RatPoint {
    type Output = RatPoint;
    fn neg(self) -> RatPoint {
        RatPoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A piecewise-linear path: an ordered list of at least two vertices with no
/// zero-length segments. Paths representing torus loops start at the origin
/// and end at an integer point; operations that need this check it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLPath {
    verts: Vec<RatPoint>,
}

impl PLPath {
    pub fn new(verts: Vec<RatPoint>) -> Result<Self> {
        if verts.len() < 2 {
            return Err(Error::TooFewVertices);
        }
        for i in 1..verts.len() {
            if verts[i] == verts[i - 1] {
                return Err(Error::ZeroSegment(i - 1, i));
            }
        }
        Ok(PLPath { verts })
    }

    /// The straight path from the origin to `(m,n)`, `(m,n) != (0,0)`.
    pub fn straight(m: i64, n: i64) -> Result<Self> {
        if m == 0 && n == 0 {
            return Err(Error::ZeroLoop);
        }
        PLPath::new(vec![RatPoint::origin(), RatPoint::from_ints(m, n)])
    }

    /// Path from the origin visiting the cumulative sums of `steps`.
    pub fn from_steps(steps: &[(Rat, Rat)]) -> Result<Self> {
        let mut verts = vec![RatPoint::origin()];
        let mut cur = RatPoint::origin();
        for &(dx, dy) in steps {
            cur = cur + RatPoint::new(dx, dy);
            verts.push(cur);
        }
        PLPath::new(verts)
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.verts
    }

    pub fn start(&self) -> RatPoint {
        self.verts[0]
    }

    pub fn endpoint(&self) -> RatPoint {
        *self.verts.last().unwrap()
    }

    /// Winding numbers `(m,n)` when the endpoint is an integer point.
    pub fn winding(&self) -> Result<(i64, i64)> {
        let e = self.endpoint() - self.start();
        if !e.is_integer() {
            return Err(Error::NonIntegerEndpoint);
        }
        Ok((e.x.to_integer(), e.y.to_integer()))
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.endpoint()
    }

    pub fn translate(&self, by: RatPoint) -> PLPath {
        PLPath {
            verts: self.verts.iter().map(|&v| v + by).collect(),
        }
    }

    /// Concatenation: `other` is translated to start at the endpoint of
    /// `self`; the shared vertex is not duplicated. Collinear joins are kept
    /// as-is (see [`PLPath::canonicalize`]).
    pub fn concat(&self, other: &PLPath) -> PLPath {
        let shift = self.endpoint() - other.start();
        let mut verts = self.verts.clone();
        verts.extend(other.verts.iter().skip(1).map(|&v| v + shift));
        PLPath { verts }
    }

    /// The inverse path: vertices reversed, then translated to start at the
    /// origin. For a loop path from the origin the endpoint is negated.
    pub fn inverse(&self) -> PLPath {
        let last = self.endpoint();
        let verts = self.verts.iter().rev().map(|&v| v - last).collect();
        PLPath { verts }
    }

    /// Merge consecutive segments that are collinear and point the same way.
    pub fn canonicalize(&self) -> PLPath {
        let mut verts: Vec<RatPoint> = vec![self.verts[0]];
        for &v in &self.verts[1..] {
            if verts.len() >= 2 {
                let a = verts[verts.len() - 2];
                let b = verts[verts.len() - 1];
                let d1 = b - a;
                let d2 = v - b;
                let dot = d1.x * d2.x + d1.y * d2.y;
                if d1.cross(&d2).is_zero() && dot.is_positive() {
                    verts.pop();
                }
            }
            verts.push(v);
        }
        PLPath { verts }
    }

    /// Per-segment displacement vectors.
    pub fn displacements(&self) -> impl Iterator<Item = RatPoint> + '_ {
        self.verts.windows(2).map(|w| w[1] - w[0])
    }
}

impl fmt::Display for PLPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.verts {
            if !first {
                write!(f, " -> ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Generalized shoelace sum over a cyclic vertex sequence, i.e. the
/// winding-number-weighted area enclosed by the (possibly self-intersecting)
/// closed polyline.
fn shoelace(verts: &[RatPoint]) -> Rat {
    let n = verts.len();
    let mut twice = Rat::zero();
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        twice += a.cross(&b);
    }
    twice / rat(2, 1)
}

/// Signed area enclosed by a closed PL loop, counted with winding numbers.
/// Backtracking segments contribute zero automatically.
pub fn signed_area_loop(p: &PLPath) -> Result<Rat> {
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(shoelace(p.vertices()))
}

/// Signed area `S(p, p2)` between two paths with common start and endpoint:
/// the winding-weighted area of `p` followed by the reverse of `p2`. This is
/// the exponent of `q` relating the quantum holonomies of homotopic paths.
pub fn signed_area_between(p: &PLPath, p2: &PLPath) -> Result<Rat> {
    if p.start() != p2.start() || p.endpoint() != p2.endpoint() {
        return Err(Error::EndpointMismatch);
    }
    let mut verts: Vec<RatPoint> = p.vertices().to_vec();
    verts.extend(p2.vertices().iter().rev());
    Ok(shoelace(&verts))
}

// ---- lattice polygons and Pick's theorem ----

/// A simple closed polygon with integer vertices (last edge wraps around).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    verts: Vec<(i64, i64)>,
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let abx = (b.0 - a.0) as i128;
    let aby = (b.1 - a.1) as i128;
    let acx = (c.0 - a.0) as i128;
    let acy = (c.1 - a.1) as i128;
    abx * acy - aby * acx
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

fn segments_intersect(p1: (i64, i64), p2: (i64, i64), p3: (i64, i64), p4: (i64, i64)) -> bool {
    let d1 = orient(p3, p4, p1).signum();
    let d2 = orient(p3, p4, p2).signum();
    let d3 = orient(p1, p2, p3).signum();
    let d4 = orient(p1, p2, p4).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(p3, p4, p1))
        || (d2 == 0 && on_segment(p3, p4, p2))
        || (d3 == 0 && on_segment(p1, p2, p3))
        || (d4 == 0 && on_segment(p1, p2, p4))
}

impl LatticePolygon {
    pub fn new(verts: Vec<(i64, i64)>) -> Result<Self> {
        let n = verts.len();
        if n < 3 {
            return Err(Error::TooFewPolygonVertices);
        }
        for i in 0..n {
            if verts[i] == verts[(i + 1) % n] {
                return Err(Error::ZeroSegment(i, (i + 1) % n));
            }
        }
        // Adjacent edges may share only their common vertex; non-adjacent
        // edges may not touch at all.
        for i in 0..n {
            let (a1, a2) = (verts[i], verts[(i + 1) % n]);
            for j in (i + 1)..n {
                let (b1, b2) = (verts[j], verts[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Shared vertex is a2 == b1 (or b2 == a1 on the wrap).
                    let backtrack = if j == i + 1 {
                        orient(a1, a2, b2) == 0 && on_segment(a1, a2, b2)
                            || on_segment(b1, b2, a1)
                    } else {
                        orient(b1, b2, a2) == 0 && on_segment(b1, b2, a2)
                            || on_segment(a1, a2, b1)
                    };
                    if backtrack {
                        return Err(Error::SelfIntersecting);
                    }
                } else if segments_intersect(a1, a2, b1, b2) {
                    return Err(Error::SelfIntersecting);
                }
            }
        }
        Ok(LatticePolygon { verts })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.verts
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_points(&self) -> i64 {
        let n = self.verts.len();
        (0..n)
            .map(|i| {
                let a = self.verts[i];
                let b = self.verts[(i + 1) % n];
                (b.0 - a.0).abs().gcd(&(b.1 - a.1).abs())
            })
            .sum()
    }

    fn contains_on_boundary(&self, p: (i64, i64)) -> bool {
        let n = self.verts.len();
        (0..n).any(|i| on_segment(self.verts[i], self.verts[(i + 1) % n], p))
    }

    fn contains_strictly(&self, p: (i64, i64)) -> bool {
        if self.contains_on_boundary(p) {
            return false;
        }
        // Exact even-odd ray cast towards +x with the half-open edge rule.
        let n = self.verts.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            if (a.1 > p.1) != (b.1 > p.1) {
                // x-coordinate of the crossing compared to p.0, exactly:
                // p.0 < a.0 + (p.1-a.1)(b.0-a.0)/(b.1-a.1)
                let dy = (b.1 - a.1) as i128;
                let lhs = (p.0 - a.0) as i128 * dy;
                let rhs = (p.1 - a.1) as i128 * (b.0 - a.0) as i128;
                if (dy > 0 && lhs < rhs) || (dy < 0 && lhs > rhs) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Number of lattice points strictly inside.
    pub fn interior_points(&self) -> i64 {
        let xs: Vec<i64> = self.verts.iter().map(|v| v.0).collect();
        let ys: Vec<i64> = self.verts.iter().map(|v| v.1).collect();
        let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let mut count = 0;
        for x in x0 + 1..x1 {
            for y in y0 + 1..y1 {
                if self.contains_strictly((x, y)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Absolute shoelace area, for cross-checking against [`pick_area`].
    pub fn shoelace_area(&self) -> Rat {
        let pts: Vec<RatPoint> = self
            .verts
            .iter()
            .map(|&(x, y)| RatPoint::from_ints(x, y))
            .collect();
        let a = shoelace(&pts);
        if a.is_negative() {
            -a
        } else {
            a
        }
    }
}

/// Area of a simple lattice polygon by Pick's theorem: `I + B/2 - 1`, with
/// the interior and boundary lattice points counted directly.
pub fn pick_area(poly: &LatticePolygon) -> Rat {
    Rat::from_integer(poly.interior_points()) + rat(poly.boundary_points(), 2) - rat(1, 1)
}

// ---- fundamental reduction ----

/// Reduce the straight path `(0,0) -> (m,n)` mod Z^2 to the fundamental
/// square `[0,1]^2`. Returns the ordered segments of the reduced picture;
/// points on the square boundary belong to the outgoing segment. A reducible
/// `(m,n)` traverses the same support `gcd(m,n)` times.
pub fn fundamental_reduction(m: i64, n: i64) -> Result<Vec<(RatPoint, RatPoint)>> {
    if m == 0 && n == 0 {
        return Err(Error::ZeroLoop);
    }
    // Split the parameter interval [0,1] wherever x or y crosses an integer.
    let mut cuts: Vec<Rat> = vec![Rat::zero(), Rat::from_integer(1)];
    for (count, _) in [(m.abs(), m), (n.abs(), n)] {
        for j in 1..count {
            cuts.push(rat(j, count));
        }
    }
    cuts.sort();
    cuts.dedup();

    let dir = RatPoint::from_ints(m, n);
    let mut segs = Vec::new();
    for w in cuts.windows(2) {
        let (ta, tb) = (w[0], w[1]);
        let a = RatPoint::new(ta * dir.x, ta * dir.y);
        let b = RatPoint::new(tb * dir.x, tb * dir.y);
        let mid = (ta + tb) / rat(2, 1);
        let off = RatPoint::new((mid * dir.x).floor(), (mid * dir.y).floor());
        segs.push((a - off, b - off));
    }
    Ok(segs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: Rat, y: Rat) -> RatPoint {
        RatPoint::new(x, y)
    }

    fn ipath(coords: &[(i64, i64)]) -> PLPath {
        PLPath::new(coords.iter().map(|&(x, y)| RatPoint::from_ints(x, y)).collect()).unwrap()
    }

    #[test]
    fn endpoint_reads_last_vertex() {
        assert_eq!(ipath(&[(0, 0), (2, 1)]).endpoint(), RatPoint::from_ints(2, 1));
        assert_eq!(
            ipath(&[(0, 0), (1, 0), (1, 1), (2, 1)]).endpoint(),
            RatPoint::from_ints(2, 1)
        );
    }

    #[test]
    fn degenerate_segment_rejected() {
        let verts = vec![RatPoint::origin(), RatPoint::origin()];
        assert_eq!(PLPath::new(verts), Err(Error::ZeroSegment(0, 1)));
    }

    #[test]
    fn concat_translates_second_path() {
        let p = ipath(&[(0, 0), (1, 0)]);
        let q = ipath(&[(0, 0), (0, 1)]);
        assert_eq!(p.concat(&q), ipath(&[(0, 0), (1, 0), (1, 1)]));

        let p = ipath(&[(0, 0), (1, 2)]);
        let q = ipath(&[(0, 0), (2, 1)]);
        assert_eq!(p.concat(&q), ipath(&[(0, 0), (1, 2), (3, 3)]));
    }

    #[test]
    fn concat_with_inverse_closes_the_loop() {
        let p = ipath(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        let loop_ = p.concat(&p.inverse());
        assert!(loop_.is_closed());
        assert_eq!(loop_.endpoint(), RatPoint::origin());
    }

    #[test]
    fn inverse_reverses_and_rebases() {
        assert_eq!(ipath(&[(0, 0), (2, 1)]).inverse(), ipath(&[(0, 0), (-2, -1)]));
        assert_eq!(
            ipath(&[(0, 0), (1, 0), (1, 1)]).inverse(),
            ipath(&[(0, 0), (0, -1), (-1, -1)])
        );
    }

    #[test]
    fn inverse_is_an_involution() {
        let p = ipath(&[(0, 0), (1, 3), (2, 1), (4, 4), (3, 2)]);
        assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn unit_square_has_area_one() {
        let sq = ipath(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]);
        assert_eq!(signed_area_loop(&sq).unwrap(), rat(1, 1));
    }

    #[test]
    fn parallelogram_loop_area_is_determinant() {
        // (1,0) then (0,1), back along -(1,0) then -(0,1): area 1.
        let p = ipath(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]);
        assert_eq!(signed_area_loop(&p).unwrap(), rat(1, 1));
    }

    #[test]
    fn figure_eight_cancels() {
        // One lobe counterclockwise, the mirror lobe clockwise.
        let p = ipath(&[(0, 0), (1, 0), (1, 1), (0, 0), (-1, -1), (-1, 0), (0, 0)]);
        assert_eq!(signed_area_loop(&p).unwrap(), rat(0, 1));
    }

    #[test]
    fn open_loop_rejected() {
        let p = ipath(&[(0, 0), (1, 0)]);
        assert_eq!(signed_area_loop(&p), Err(Error::NotClosed));
    }

    #[test]
    fn area_between_fundamental_paths() {
        // p goes right then up, p' up then right: S = 1.
        let p = ipath(&[(0, 0), (1, 0), (1, 1)]);
        let p2 = ipath(&[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(signed_area_between(&p, &p2).unwrap(), rat(1, 1));
    }

    #[test]
    fn triangle_area_between_two_segments_and_chord() {
        let p = ipath(&[(0, 0), (1, 2), (3, 3)]);
        let chord = ipath(&[(0, 0), (3, 3)]);
        // (mt - ns)/2 at (1,2),(2,1) is -3/2.
        assert_eq!(signed_area_between(&p, &chord).unwrap(), rat(-3, 2));
    }

    #[test]
    fn area_between_path_and_itself_is_zero() {
        let p = ipath(&[(0, 0), (1, 2), (3, 3), (2, 5)]);
        assert_eq!(signed_area_between(&p, &p).unwrap(), rat(0, 1));
    }

    #[test]
    fn area_between_requires_matching_endpoints() {
        let p = ipath(&[(0, 0), (1, 0)]);
        let q = ipath(&[(0, 0), (0, 1)]);
        assert_eq!(signed_area_between(&p, &q), Err(Error::EndpointMismatch));
    }

    #[test]
    fn canonicalize_merges_aligned_segments() {
        let p = ipath(&[(0, 0), (1, 0), (2, 0), (2, 1)]);
        assert_eq!(p.canonicalize(), ipath(&[(0, 0), (2, 0), (2, 1)]));
        // A backtrack is not merged.
        let p = ipath(&[(0, 0), (2, 0), (1, 0)]);
        assert_eq!(p.canonicalize(), p);
    }

    #[test]
    fn pick_unit_square() {
        let p = LatticePolygon::new(vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(poly_counts(&p), (0, 4));
        assert_eq!(pick_area(&p), rat(1, 1));
    }

    #[test]
    fn pick_reglued_strip_parallelogram() {
        let p = LatticePolygon::new(vec![(1, 1), (2, 2), (4, 3), (3, 2)]).unwrap();
        assert_eq!(poly_counts(&p), (0, 4));
        assert_eq!(pick_area(&p), rat(1, 1));
        assert_eq!(p.shoelace_area(), rat(1, 1));
    }

    #[test]
    fn pick_spanned_parallelogram() {
        let p = LatticePolygon::new(vec![(0, 0), (1, 2), (3, 3), (2, 1)]).unwrap();
        assert_eq!(poly_counts(&p), (2, 4));
        assert_eq!(pick_area(&p), rat(3, 1));
        assert_eq!(p.shoelace_area(), rat(3, 1));
    }

    #[test]
    fn self_intersecting_polygon_rejected() {
        let bowtie = LatticePolygon::new(vec![(0, 0), (2, 2), (2, 0), (0, 2)]);
        assert_eq!(bowtie, Err(Error::SelfIntersecting));
    }

    fn poly_counts(p: &LatticePolygon) -> (i64, i64) {
        (p.interior_points(), p.boundary_points())
    }

    #[test]
    fn reduction_of_2_1() {
        let segs = fundamental_reduction(2, 1).unwrap();
        assert_eq!(
            segs,
            vec![
                (pt(rat(0, 1), rat(0, 1)), pt(rat(1, 1), rat(1, 2))),
                (pt(rat(0, 1), rat(1, 2)), pt(rat(1, 1), rat(1, 1))),
            ]
        );
    }

    #[test]
    fn reduction_of_minus_1_2_starts_at_1_0() {
        let segs = fundamental_reduction(-1, 2).unwrap();
        assert_eq!(segs.first().unwrap().0, RatPoint::from_ints(1, 0));
        assert_eq!(segs.last().unwrap().1, RatPoint::from_ints(0, 1));
    }

    #[test]
    fn reducible_path_repeats_its_support() {
        let single: Vec<_> = fundamental_reduction(-1, 2).unwrap();
        let double: Vec<_> = fundamental_reduction(-2, 4).unwrap();
        assert_eq!(double.len(), 2 * single.len());
        // Each segment of the double path is half of a segment of the single
        // one; the support (set of carrying lines) is identical.
        for (a, b) in &double {
            let dir = *b - *a;
            assert_eq!(dir.cross(&RatPoint::from_ints(-1, 2)), rat(0, 1));
        }
    }

    #[test]
    fn reduction_rejects_zero() {
        assert_eq!(fundamental_reduction(0, 0), Err(Error::ZeroLoop));
    }

    #[test]
    fn translation_invariance_of_signed_area() {
        let p = ipath(&[(0, 0), (1, 0), (1, 1)]);
        let q = ipath(&[(0, 0), (0, 1), (1, 1)]);
        let s = signed_area_between(&p, &q).unwrap();
        let by = pt(rat(7, 3), rat(-2, 5));
        assert_eq!(
            signed_area_between(&p.translate(by), &q.translate(by)).unwrap(),
            s
        );
    }
}
