//! Exact arithmetic for the quantum holonomy algebra of constant connections
//! on the torus.
//!
//! Loops on `T^2 = R^2/Z^2` are represented by piecewise-linear paths in the
//! plane from the origin to an integer point `(m,n)`. The quantum holonomy of
//! such a path is a normal-form word `q^k exp(a r1 + b r2)`, and the words of
//! homotopic paths differ by `q^S` where `S` is the exact signed area between
//! the paths. On top of this sit the trace (loop) algebra with its
//! `q`-commutator, the `SL(2,Z)` action, and the quantized Goldman bracket in
//! both its straight-path and intersection/rerouting forms.
//!
//! Everything in the production path is exact: coordinates, areas, phase
//! exponents and Laurent coefficients are `i64` rationals. Floating point
//! appears only in the optional numeric evaluation helpers.

pub mod error;
pub mod geometry;
pub mod goldman;
pub mod holonomy;
pub mod intersections;
pub mod jsonio;
pub mod latex;
pub mod loop_algebra;
pub mod modular;
pub mod sweep;

/// The scalar of the whole crate: an exact `i64` rational.
pub type Rat = num_rational::Rational64;

pub use error::Error;
pub use geometry::{
    fundamental_reduction, pick_area, signed_area_between, signed_area_loop, LatticePolygon,
    PLPath, RatPoint,
};
pub use goldman::{goldman_classical, goldman_quantum, reroute, rerouting_trace, verify_bracket_equality, BracketReport, Rerouting};
pub use holonomy::{evaluate_numeric, holonomy_of_path, segment_word, word_mul, HolonomyWord, QAngle};
pub use intersections::{
    enumerate_along_p1, enumerate_points, intersection_index_sign, total_intersection_number,
    IntersectionPoint, StraightLoop,
};
pub use loop_algebra::{
    bracket_elements, classical_limit, commutator_straight, numeric_trace, poisson_bracket,
    t_of_path, t_straight, AlgebraElement, LoopClass, QLaurent,
};
pub use modular::{act_on_holonomy, act_on_path, check_relations, dual_act, ModularMatrix};

/// Shorthand for an exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}
