//! Rerouted paths at intersection points and the quantum Goldman bracket in
//! its intersection/rerouting form.

use crate::error::{Error, Result};
use crate::geometry::{PLPath, RatPoint};
use crate::intersections::{enumerate_along_p1, IntersectionPoint, StraightLoop};
use crate::loop_algebra::{commutator_straight, poisson_bracket, t_of_path, AlgebraElement, QLaurent};
use crate::Rat;

/// A loop rerouted at one crossing: follow `p1` to the crossing, traverse
/// `p2` (or its inverse) once, then finish along the translate of `p1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rerouting {
    pub base1: StraightLoop,
    pub base2: StraightLoop,
    pub at: IntersectionPoint,
    pub sign: i64,
    pub path: PLPath,
}

/// Build the rerouting of `p1` along `p2^sign` at a crossing produced by
/// [`enumerate_along_p1`]. At the basepoint (`lift_param = 0`) the rerouting
/// follows `p2^sign` first and then `p1`.
pub fn reroute(
    p1: &StraightLoop,
    p2: &StraightLoop,
    at: &IntersectionPoint,
    sign: i64,
) -> Result<Rerouting> {
    if at.lift_param < Rat::from_integer(0) || at.lift_param >= Rat::from_integer(1) {
        return Err(Error::PointNotOnLift);
    }
    let (m, n) = p1.winding();
    let q_lift = RatPoint::new(
        at.lift_param * Rat::from_integer(m),
        at.lift_param * Rat::from_integer(n),
    );
    if q_lift.frac() != at.position {
        return Err(Error::PointNotOnLift);
    }
    let (s, t) = p2.winding();
    let detour = if sign >= 0 {
        RatPoint::from_ints(s, t)
    } else {
        RatPoint::from_ints(-s, -t)
    };
    let end = RatPoint::from_ints(m, n) + detour;
    let verts = if at.lift_param == Rat::from_integer(0) {
        vec![RatPoint::origin(), detour, end]
    } else {
        vec![RatPoint::origin(), q_lift, q_lift + detour, end]
    };
    Ok(Rerouting {
        base1: *p1,
        base2: *p2,
        at: *at,
        sign: if sign >= 0 { 1 } else { -1 },
        path: PLPath::new(verts)?,
    })
}

/// Trace of a rerouted loop, computed geometrically: the exact signed area
/// against the straight representative times the straight trace.
pub fn rerouting_trace(r: &Rerouting) -> AlgebraElement {
    t_of_path(&r.path).expect("rerouted path ends at an integer point")
}

/// The quantum Goldman bracket in rerouting form: the sum over lift-mode
/// crossings `Q` of
/// `(q^{e(Q)} - 1) T(p1 Q p2) + (q^{-e(Q)} - 1) T(p1 Q p2^{-1})`
/// where `e(Q)` is the signed quantum exponent of the crossing. Parallel
/// pairs have no transversal crossings and yield the zero element.
pub fn goldman_quantum(p1: &StraightLoop, p2: &StraightLoop) -> AlgebraElement {
    let points = match enumerate_along_p1(p1, p2) {
        Ok(pts) => pts,
        Err(_) => return AlgebraElement::zero(),
    };
    let mut out = AlgebraElement::zero();
    for at in &points {
        let eps = Rat::from_integer(at.index);
        let pos = reroute(p1, p2, at, 1).expect("crossing lies on the lift");
        let neg = reroute(p1, p2, at, -1).expect("crossing lies on the lift");
        let q_pos = QLaurent::q_pow_diff(eps, Rat::from_integer(0));
        let q_neg = QLaurent::q_pow_diff(-eps, Rat::from_integer(0));
        out = out + rerouting_trace(&pos).scale(&q_pos) + rerouting_trace(&neg).scale(&q_neg);
    }
    out
}

/// The classical Goldman bracket, i.e. the Poisson bracket of straight-loop
/// traces with all reroutings collapsed to their homotopy classes.
pub fn goldman_classical(p1: &StraightLoop, p2: &StraightLoop) -> AlgebraElement {
    let (m, n) = p1.winding();
    let (s, t) = p2.winding();
    poisson_bracket(m, n, s, t)
}

/// One row of the per-crossing trace table in a [`BracketReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketPointRow {
    pub at: IntersectionPoint,
    pub positive_trace: AlgebraElement,
    pub negative_trace: AlgebraElement,
}

/// Structured comparison of the two bracket forms for one pair of loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketReport {
    pub p1: StraightLoop,
    pub p2: StraightLoop,
    pub straight_form: AlgebraElement,
    pub rerouted_form: AlgebraElement,
    pub difference: AlgebraElement,
    pub equal: bool,
    pub points: Vec<BracketPointRow>,
}

/// Compute both forms of the quantum bracket and their difference, together
/// with the per-crossing trace table.
pub fn verify_bracket_equality(p1: &StraightLoop, p2: &StraightLoop) -> BracketReport {
    let (m, n) = p1.winding();
    let (s, t) = p2.winding();
    let straight_form = commutator_straight(m, n, s, t);
    let rerouted_form = goldman_quantum(p1, p2);
    let difference = straight_form.clone() - rerouted_form.clone();
    let points = enumerate_along_p1(p1, p2)
        .map(|pts| {
            pts.iter()
                .map(|at| BracketPointRow {
                    at: *at,
                    positive_trace: rerouting_trace(&reroute(p1, p2, at, 1).unwrap()),
                    negative_trace: rerouting_trace(&reroute(p1, p2, at, -1).unwrap()),
                })
                .collect()
        })
        .unwrap_or_default();
    BracketReport {
        p1: *p1,
        p2: *p2,
        equal: difference.is_zero(),
        straight_form,
        rerouted_form,
        difference,
        points,
    }
}
