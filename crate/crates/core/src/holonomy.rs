//! Normal-form algebra of quantum holonomy words `q^k exp(a r1 + b r2)`.
//!
//! The commutator `[r1, r2]` is a c-number, so every product of segment
//! holonomies collapses to a unique normal form with the central phase
//! factored out on the left. Two words are equal iff their three rational
//! fields are equal.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::Zero;

use crate::geometry::PLPath;
use crate::{rat, Rat};

/// Normal form `q^phase * exp(alpha r1 + beta r2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HolonomyWord {
    pub phase: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

impl HolonomyWord {
    pub fn new(phase: Rat, alpha: Rat, beta: Rat) -> Self {
        HolonomyWord { phase, alpha, beta }
    }

    pub fn identity() -> Self {
        HolonomyWord::new(Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.phase.is_zero() && self.alpha.is_zero() && self.beta.is_zero()
    }

    /// Group inverse: all three fields negated.
    pub fn inverse(&self) -> Self {
        HolonomyWord::new(-self.phase, -self.alpha, -self.beta)
    }

    /// Multiply by a central power of `q`.
    pub fn with_phase(&self, extra: Rat) -> Self {
        HolonomyWord::new(self.phase + extra, self.alpha, self.beta)
    }
}

impl Mul for HolonomyWord {
    type Output = HolonomyWord;
    fn mul(self, rhs: HolonomyWord) -> HolonomyWord {
        word_mul(self, rhs)
    }
}

impl fmt::Display for HolonomyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q^{} exp({} r1 + {} r2)",
            self.phase, self.alpha, self.beta
        )
    }
}

/// The word of a single straight segment with displacement `(a,b)`.
pub fn segment_word(a: Rat, b: Rat) -> HolonomyWord {
    HolonomyWord::new(Rat::zero(), a, b)
}

/// The word of the straight path to the integer point `(m,n)`.
pub fn straight_word(m: i64, n: i64) -> HolonomyWord {
    segment_word(Rat::from_integer(m), Rat::from_integer(n))
}

/// Normal-form product: exponents add, and the reordering contributes the
/// central phase `(a1 b2 - b1 a2)/2`. Associative with identity `(0,0,0)`.
pub fn word_mul(w1: HolonomyWord, w2: HolonomyWord) -> HolonomyWord {
    HolonomyWord::new(
        w1.phase + w2.phase + (w1.alpha * w2.beta - w1.beta * w2.alpha) / rat(2, 1),
        w1.alpha + w2.alpha,
        w1.beta + w2.beta,
    )
}

/// Holonomy of a PL path: the ordered product of its segment words. Depends
/// only on the displacement vectors, so it is translation invariant and
/// multiplicative under concatenation.
pub fn holonomy_of_path(p: &PLPath) -> HolonomyWord {
    p.displacements()
        .map(|d| segment_word(d.x, d.y))
        .fold(HolonomyWord::identity(), word_mul)
}

/// Deformation angle: `q = exp(i theta)` with `theta = -hbar sqrt(-Lambda)/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QAngle {
    pub theta: f64,
}

impl QAngle {
    pub fn new(theta: f64) -> Self {
        QAngle { theta }
    }

    pub fn classical() -> Self {
        QAngle { theta: 0.0 }
    }

    /// `q^k` for a rational exponent `k`.
    pub fn q_pow(&self, k: Rat) -> Complex64 {
        let kf = *k.numer() as f64 / *k.denom() as f64;
        Complex64::new(0.0, self.theta * kf).exp()
    }
}

/// Numeric evaluation of a word at classical parameter values:
/// `e^{i theta k} diag(e^{a r1 + b r2}, e^{-a r1 - b r2})`.
/// At `theta = 0` this is the classical diagonal holonomy. Verification aid
/// only; the symbolic algebra never calls it.
pub fn evaluate_numeric(w: &HolonomyWord, r1: f64, r2: f64, q: QAngle) -> [[Complex64; 2]; 2] {
    let to_f = |r: Rat| *r.numer() as f64 / *r.denom() as f64;
    let e = to_f(w.alpha) * r1 + to_f(w.beta) * r2;
    let ph = q.q_pow(w.phase);
    [
        [ph * e.exp(), Complex64::zero()],
        [Complex64::zero(), ph * (-e).exp()],
    ]
}
