//! Bulk verification sweeps over the algebraic laws of the crate. Each suite
//! runs a batch of independent cases and reports the failures; the batches run
//! on rayon when the `parallel` feature is enabled (the default) and fall back
//! to a plain sequential loop otherwise.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{signed_area_between, PLPath, RatPoint};
use crate::goldman::verify_bracket_equality;
use crate::holonomy::{holonomy_of_path, straight_word, word_mul, HolonomyWord};
use crate::intersections::StraightLoop;
use crate::loop_algebra::{
    bracket_elements, classical_limit, commutator_straight, poisson_bracket, t_straight,
    AlgebraElement,
};
use crate::modular::{act_on_holonomy, act_on_path, check_relations, ModularMatrix};
use crate::{rat, Rat};

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            write!(f, "{}: ok ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "{}: FAILED {}/{} cases; first: {}",
                self.name,
                self.failures.len(),
                self.cases,
                self.failures[0]
            )
        }
    }
}

#[cfg(feature = "parallel")]
fn run_cases<I, F>(cases: Vec<I>, check: F) -> Vec<String>
where
    I: Send + Sync,
    F: Fn(&I) -> Option<String> + Sync + Send,
{
    use rayon::prelude::*;
    cases.par_iter().filter_map(check).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_cases<I, F>(cases: Vec<I>, check: F) -> Vec<String>
where
    I: Send,
    F: Fn(&I) -> Option<String> + Sync + Send,
{
    cases.iter().filter_map(|c| check(c)).collect()
}

fn suite<I, F>(name: &'static str, cases: Vec<I>, check: F) -> SuiteResult
where
    I: Send + Sync,
    F: Fn(&I) -> Option<String> + Sync + Send,
{
    let n = cases.len();
    SuiteResult {
        name,
        cases: n,
        failures: run_cases(cases, check),
    }
}

/// A random PL path from the origin to `(m, n)` with a few rational-coordinate
/// interior vertices. Deterministic for a given RNG state.
pub fn random_path(rng: &mut ChaCha8Rng, m: i64, n: i64) -> PLPath {
    let interior = rng.gen_range(0..=4);
    let mut verts = vec![RatPoint::origin()];
    for _ in 0..interior {
        let v = RatPoint::new(
            rat(rng.gen_range(-12..=12), rng.gen_range(1..=4)),
            rat(rng.gen_range(-12..=12), rng.gen_range(1..=4)),
        );
        if v != *verts.last().unwrap() {
            verts.push(v);
        }
    }
    let end = RatPoint::from_ints(m, n);
    if end == *verts.last().unwrap() {
        if verts.len() == 1 {
            // Contractible loop with no interior draws: give it one detour.
            verts.push(RatPoint::new(rat(1, 2), rat(1, 2)));
        } else {
            verts.pop();
        }
    }
    verts.push(end);
    PLPath::new(verts).expect("random vertices are pairwise-consecutive distinct")
}

/// A random element of `SL(2, Z)` built as a word in the generators.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> ModularMatrix {
    let s = ModularMatrix::gen_s();
    let t = ModularMatrix::gen_t();
    let mut m = ModularMatrix::identity();
    for _ in 0..rng.gen_range(1..=10) {
        m = if rng.gen_bool(0.5) { m * s } else { m * t };
    }
    m
}

fn int_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in -max..=max {
        for n in -max..=max {
            out.push((m, n));
        }
    }
    out
}

fn nonzero_pairs(max: i64) -> Vec<(i64, i64)> {
    int_pairs(max).into_iter().filter(|&(m, n)| (m, n) != (0, 0)).collect()
}

/// `U_p = q^{S(p, p')} U_{p'}` for random homotopic path pairs.
pub fn area_phase_suite(seed: u64, count: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(PLPath, PLPath)> = (0..count)
        .map(|_| {
            let m = rng.gen_range(-3..=3);
            let n = rng.gen_range(-3..=3);
            (random_path(&mut rng, m, n), random_path(&mut rng, m, n))
        })
        .collect();
    suite("area-phase", cases, |(p, p2)| {
        let s = signed_area_between(p, p2).expect("same endpoints by construction");
        let lhs = holonomy_of_path(p);
        let rhs = holonomy_of_path(p2).with_phase(s);
        if lhs == rhs {
            None
        } else {
            Some(format!("paths to {:?}: {:?} != q^{} * {:?}", p.endpoint(), lhs, s, rhs))
        }
    })
}

/// The product law `U_(m,n) U_(s,t) = q^{(mt-ns)/2} U_(m+s,n+t)` and the
/// fundamental relation it specializes to.
pub fn word_relations_suite(max: i64) -> SuiteResult {
    let pairs = int_pairs(max);
    let cases: Vec<((i64, i64), (i64, i64))> = pairs
        .iter()
        .flat_map(|&a| pairs.iter().map(move |&b| (a, b)))
        .collect();
    suite("word-relations", cases, |&((m, n), (s, t))| {
        let lhs = word_mul(straight_word(m, n), straight_word(s, t));
        let rhs = straight_word(m + s, n + t).with_phase(rat(m * t - n * s, 2));
        if lhs == rhs {
            None
        } else {
            Some(format!("({m},{n})*({s},{t}): {lhs:?} != {rhs:?}"))
        }
    })
}

/// Group axioms of the word product plus functoriality of `holonomy_of_path`
/// under concatenation and inversion, on random paths.
pub fn representation_suite(seed: u64, count: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(PLPath, PLPath, PLPath)> = (0..count)
        .map(|_| {
            let mut p = || {
                let m = rng.gen_range(-3..=3);
                let n = rng.gen_range(-3..=3);
                random_path(&mut rng, m, n)
            };
            (p(), p(), p())
        })
        .collect();
    suite("representation", cases, |(a, b, c)| {
        let (wa, wb, wc) = (holonomy_of_path(a), holonomy_of_path(b), holonomy_of_path(c));
        if word_mul(word_mul(wa, wb), wc) != word_mul(wa, word_mul(wb, wc)) {
            return Some(format!("associativity broke on {wa:?}, {wb:?}, {wc:?}"));
        }
        if word_mul(wa, HolonomyWord::identity()) != wa
            || word_mul(HolonomyWord::identity(), wa) != wa
        {
            return Some(format!("identity broke on {wa:?}"));
        }
        if !word_mul(wa, wa.inverse()).is_identity() {
            return Some(format!("inverse broke on {wa:?}"));
        }
        if holonomy_of_path(&a.concat(b)) != word_mul(wa, wb) {
            return Some(format!("concat broke on {wa:?}, {wb:?}"));
        }
        if holonomy_of_path(&a.inverse()) != wa.inverse() {
            return Some(format!("path inverse broke on {wa:?}"));
        }
        None
    })
}

/// Total intersection number equals the determinant and equals the sum of
/// the geometric indices, for every non-parallel pair with entries in
/// `[-max, max]`.
pub fn determinant_suite(max: i64) -> SuiteResult {
    let loops = nonzero_pairs(max);
    let cases: Vec<((i64, i64), (i64, i64))> = loops
        .iter()
        .flat_map(|&a| loops.iter().map(move |&b| (a, b)))
        .filter(|&((m, n), (s, t))| m * t - n * s != 0)
        .collect();
    suite("determinant", cases, |&((m, n), (s, t))| {
        let p1 = StraightLoop::new(m, n).unwrap();
        let p2 = StraightLoop::new(s, t).unwrap();
        let det = m * t - n * s;
        if crate::intersections::total_intersection_number(&p1, &p2) != det {
            return Some(format!("total for ({m},{n}),({s},{t}) != {det}"));
        }
        let geo: i64 = crate::intersections::enumerate_points(&p1, &p2)
            .unwrap()
            .iter()
            .map(|p| p.index)
            .sum();
        if geo != det {
            return Some(format!("index sum for ({m},{n}),({s},{t}) = {geo} != {det}"));
        }
        None
    })
}

/// Straight-path commutator equals the rerouting form of the quantum bracket
/// for every pair with entries in `[-max, max]`.
pub fn bracket_equality_suite(max: i64) -> SuiteResult {
    let loops = nonzero_pairs(max);
    let cases: Vec<((i64, i64), (i64, i64))> = loops
        .iter()
        .flat_map(|&a| loops.iter().map(move |&b| (a, b)))
        .filter(|&((m, n), (s, t))| m * t - n * s != 0)
        .collect();
    suite("bracket-equality", cases, |&((m, n), (s, t))| {
        let report = verify_bracket_equality(
            &StraightLoop::new(m, n).unwrap(),
            &StraightLoop::new(s, t).unwrap(),
        );
        if report.equal {
            None
        } else {
            Some(format!(
                "({m},{n}),({s},{t}): difference {}",
                report.difference
            ))
        }
    })
}

type ClassTriple = ((i64, i64), (i64, i64), (i64, i64));

/// Jacobi identity for the q-commutator on straight-loop traces.
pub fn jacobi_suite(max: i64) -> SuiteResult {
    let loops = nonzero_pairs(max);
    let cases: Vec<ClassTriple> = loops
        .iter()
        .flat_map(|&a| {
            let loops = &loops;
            loops.iter().flat_map(move |&b| loops.iter().map(move |&c| (a, b, c)))
        })
        .collect();
    suite("jacobi", cases, |&(a, b, c)| {
        let (ta, tb, tc) = (
            t_straight(a.0, a.1),
            t_straight(b.0, b.1),
            t_straight(c.0, c.1),
        );
        let cycle = bracket_elements(&bracket_elements(&ta, &tb), &tc)
            + bracket_elements(&bracket_elements(&tb, &tc), &ta)
            + bracket_elements(&bracket_elements(&tc, &ta), &tb);
        if cycle.is_zero() {
            None
        } else {
            Some(format!("{a:?},{b:?},{c:?}: cyclic sum {cycle}"))
        }
    })
}

/// `SL(2, Z)` acting on paths: area invariance, functoriality of the induced
/// holonomy action, and the dual action being a left action, on random
/// matrices and paths.
pub fn modular_suite(seed: u64, count: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(ModularMatrix, ModularMatrix, PLPath, PLPath)> = (0..count)
        .map(|_| {
            let a = random_sl2(&mut rng);
            let b = random_sl2(&mut rng);
            let m = rng.gen_range(-3..=3);
            let n = rng.gen_range(-3..=3);
            let p = random_path(&mut rng, m, n);
            let p2 = random_path(&mut rng, m, n);
            (a, b, p, p2)
        })
        .collect();
    suite("modular", cases, |(a, b, p, p2)| {
        let s = signed_area_between(p, p2).unwrap();
        let s_acted = signed_area_between(&act_on_path(a, p), &act_on_path(a, p2)).unwrap();
        if s != s_acted {
            return Some(format!("area changed under {a:?}: {s} -> {s_acted}"));
        }
        if act_on_path(&(*a * *b), p) != act_on_path(a, &act_on_path(b, p)) {
            return Some(format!("composition broke for {a:?}, {b:?}"));
        }
        if act_on_holonomy(a, p) != holonomy_of_path(&act_on_path(a, p)) {
            return Some(format!("holonomy action inconsistent under {a:?}"));
        }
        None
    })
}

/// The generator relations `S^4 = 1`, `(ST)^3 = 1` on paths, plus the
/// expected images of the basis holonomies, via `check_relations`.
pub fn modular_relations_suite() -> SuiteResult {
    let cases = vec![false, true];
    suite("modular-relations", cases, |&classical| {
        let report = check_relations(classical);
        if report.all_ok {
            None
        } else {
            Some(format!("classical={classical}: {report:?}"))
        }
    })
}

/// `d/dq at q=1` of the quantum bracket reproduces the Poisson bracket.
pub fn classical_limit_suite(max: i64) -> SuiteResult {
    let loops = nonzero_pairs(max);
    let cases: Vec<((i64, i64), (i64, i64))> = loops
        .iter()
        .flat_map(|&a| loops.iter().map(move |&b| (a, b)))
        .collect();
    suite("classical-limit", cases, |&((m, n), (s, t))| {
        let limit = classical_limit(&commutator_straight(m, n, s, t));
        let target = poisson_bracket(m, n, s, t);
        if limit == target {
            None
        } else {
            Some(format!("({m},{n}),({s},{t}): {limit} != {target}"))
        }
    })
}

/// Every suite, with fixed deterministic inputs. `depth` bounds the integer
/// sweeps; randomized suites draw from `seed`.
pub fn run_all(seed: u64, depth: i64, random_count: usize) -> Vec<SuiteResult> {
    vec![
        area_phase_suite(seed, random_count),
        word_relations_suite(depth),
        representation_suite(seed.wrapping_add(1), random_count),
        determinant_suite(depth),
        bracket_equality_suite(depth),
        jacobi_suite(depth.min(3)),
        modular_suite(seed.wrapping_add(2), random_count.min(64)),
        modular_relations_suite(),
        classical_limit_suite(depth),
    ]
}

/// Sequential bracket-equality sweep for benchmarking: returns the number of
/// verified pairs.
pub fn bracket_equality_sweep_seq(max: i64) -> usize {
    let loops = nonzero_pairs(max);
    let mut checked = 0;
    for &(m, n) in &loops {
        for &(s, t) in &loops {
            if m * t - n * s == 0 {
                continue;
            }
            let report = verify_bracket_equality(
                &StraightLoop::new(m, n).unwrap(),
                &StraightLoop::new(s, t).unwrap(),
            );
            assert!(report.equal);
            checked += 1;
        }
    }
    checked
}

/// Parallel counterpart of [`bracket_equality_sweep_seq`]. Falls back to the
/// sequential sweep when the `parallel` feature is disabled.
#[cfg(feature = "parallel")]
pub fn bracket_equality_sweep_par(max: i64) -> usize {
    use rayon::prelude::*;
    let loops = nonzero_pairs(max);
    loops
        .par_iter()
        .map(|&(m, n)| {
            let mut checked = 0;
            for &(s, t) in &loops {
                if m * t - n * s == 0 {
                    continue;
                }
                let report = verify_bracket_equality(
                    &StraightLoop::new(m, n).unwrap(),
                    &StraightLoop::new(s, t).unwrap(),
                );
                assert!(report.equal);
                checked += 1;
            }
            checked
        })
        .sum()
}

#[cfg(not(feature = "parallel"))]
pub fn bracket_equality_sweep_par(max: i64) -> usize {
    bracket_equality_sweep_seq(max)
}

#[allow(unused)]
fn classical_of(e: &AlgebraElement) -> Rat {
    e.terms().map(|(_, c)| c.eval_at_one()).sum()
}
