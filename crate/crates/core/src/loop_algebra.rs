//! The observable (trace) algebra: Laurent combinations of loop-class symbols
//! `T(m,n)` with exact `q`-power coefficients, the classical Poisson bracket
//! and the straight-path quantum commutator.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::Result;
use crate::geometry::{signed_area_between, signed_area_loop, PLPath};
use crate::holonomy::QAngle;
use crate::{rat, Rat};

/// A finite Laurent combination of powers of `q` with rational exponents and
/// rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<Rat, Rat>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        QLaurent::monomial(Rat::zero(), Rat::from_integer(1))
    }

    /// `c * q^exp`.
    pub fn monomial(exp: Rat, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QLaurent { terms }
    }

    /// `q^a - q^b`.
    pub fn q_pow_diff(a: Rat, b: Rat) -> Self {
        let mut p = QLaurent::monomial(a, Rat::from_integer(1));
        p.add_term(b, Rat::from_integer(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent/coefficient pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Rat, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// First-order coefficient at `q = 1`: the sum of `exponent * coefficient`
    /// over all terms. This is the classical-limit weight of the polynomial.
    pub fn classical_derivative(&self) -> Rat {
        self.terms.iter().map(|(e, c)| *e * *c).sum()
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> Rat {
        self.terms.values().copied().sum()
    }

    /// Numeric value at `q = exp(i theta)`.
    pub fn eval(&self, q: QAngle) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| q.q_pow(*e) * (*c.numer() as f64 / *c.denom() as f64))
            .sum()
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        self + (-rhs)
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(*e1 + *e2, *c1 * *c2);
            }
        }
        out
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let sign = if c.is_zero() || *c > Rat::zero() {
                if first {
                    ""
                } else {
                    " + "
                }
            } else if first {
                "-"
            } else {
                " - "
            };
            let mag = if *c < Rat::zero() { -*c } else { *c };
            write!(f, "{sign}")?;
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else if mag == Rat::from_integer(1) {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "{mag} q^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A free homotopy class of loops, canonical under `(m,n) ~ (-m,-n)`:
/// either `n > 0`, or `n = 0` and `m >= 0`. `(0,0)` is the trivial class
/// with trace value 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopClass {
    m: i64,
    n: i64,
}

impl LoopClass {
    pub fn new(m: i64, n: i64) -> Self {
        if n < 0 || (n == 0 && m < 0) {
            LoopClass { m: -m, n: -n }
        } else {
            LoopClass { m, n }
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.m == 0 && self.n == 0
    }
}

impl fmt::Display for LoopClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.m, self.n)
    }
}

/// An element of the trace algebra: a finite sum of loop classes with
/// `QLaurent` coefficients. Zero coefficients are never stored, so equality
/// is exact map equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<LoopClass, QLaurent>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic class order.
    pub fn terms(&self) -> impl Iterator<Item = (&LoopClass, &QLaurent)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: LoopClass) -> QLaurent {
        self.terms.get(&class).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, class: LoopClass, coeff: QLaurent) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(class).or_default();
        let sum = std::mem::take(entry) + coeff;
        if sum.is_zero() {
            self.terms.remove(&class);
        } else {
            *entry = sum;
        }
    }

    pub fn scale(&self, by: &QLaurent) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (class, c) in &self.terms {
            out.add_term(*class, c.clone() * by.clone());
        }
        out
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(mut self, rhs: AlgebraElement) -> AlgebraElement {
        for (class, c) in rhs.terms {
            self.add_term(class, c);
        }
        self
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        self + (-rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (class, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {class}")?;
            first = false;
        }
        Ok(())
    }
}

/// Basis element at the canonical class of `(m,n)` with unit coefficient.
pub fn t_straight(m: i64, n: i64) -> AlgebraElement {
    let mut e = AlgebraElement::zero();
    e.add_term(LoopClass::new(m, n), QLaurent::one());
    e
}

/// Trace of an arbitrary PL path with integer endpoint `(m,n)`:
/// `q^{S(p, straight(m,n))} T(m,n)`, the signed area computed exactly.
pub fn t_of_path(p: &PLPath) -> Result<AlgebraElement> {
    let rebased = p.translate(crate::geometry::RatPoint::origin() - p.start());
    let (m, n) = rebased.winding()?;
    let phase = if m == 0 && n == 0 {
        signed_area_loop(&rebased)?
    } else {
        let straight = PLPath::straight(m, n)?;
        signed_area_between(&rebased, &straight)?
    };
    Ok(t_straight(m, n).scale(&QLaurent::monomial(phase, Rat::from_integer(1))))
}

/// Classical Goldman/Poisson bracket of straight-loop traces, with the
/// overall `{r1,r2}` normalization fixed to 1:
/// `(mt-ns) (T(m+s,n+t) - T(m-s,n-t))`.
pub fn poisson_bracket(m: i64, n: i64, s: i64, t: i64) -> AlgebraElement {
    let d = m * t - n * s;
    if d == 0 {
        return AlgebraElement::zero();
    }
    let coeff = QLaurent::monomial(Rat::zero(), Rat::from_integer(d));
    let mut e = AlgebraElement::zero();
    e.add_term(LoopClass::new(m + s, n + t), coeff.clone());
    e.add_term(LoopClass::new(m - s, n - t), -coeff);
    e
}

/// Quantum commutator of straight-loop traces:
/// `(q^{(mt-ns)/2} - q^{-(mt-ns)/2}) (T(m+s,n+t) - T(m-s,n-t))`.
pub fn commutator_straight(m: i64, n: i64, s: i64, t: i64) -> AlgebraElement {
    let d = m * t - n * s;
    if d == 0 {
        return AlgebraElement::zero();
    }
    let half = rat(d, 2);
    let coeff = QLaurent::q_pow_diff(half, -half);
    let mut e = AlgebraElement::zero();
    e.add_term(LoopClass::new(m + s, n + t), coeff.clone());
    e.add_term(LoopClass::new(m - s, n - t), -coeff);
    e
}

/// Bilinear extension of the straight-path commutator to whole algebra
/// elements. The bracket on a class is independent of the chosen
/// representative `(m,n)` vs `(-m,-n)`, so this is well defined.
pub fn bracket_elements(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (c1, f) in a.terms() {
        for (c2, g) in b.terms() {
            let base = commutator_straight(c1.m(), c1.n(), c2.m(), c2.n());
            out = out + base.scale(&(f.clone() * g.clone()));
        }
    }
    out
}

/// Classical limit: each coefficient `c(q)` is replaced by the first-order
/// term of `c(e^{i theta})` in `i theta`, i.e. the rational
/// `sum(exponent * coefficient)`. Applied to [`commutator_straight`] this
/// reproduces [`poisson_bracket`] exactly.
pub fn classical_limit(e: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (class, c) in e.terms() {
        out.add_term(
            *class,
            QLaurent::monomial(Rat::zero(), c.classical_derivative()),
        );
    }
    out
}

/// Numeric trace: `sum c(e^{i theta}) (e^{m r1 + n r2} + e^{-m r1 - n r2})`.
/// The trivial class contributes the scalar 2.
pub fn numeric_trace(e: &AlgebraElement, r1: f64, r2: f64, q: QAngle) -> Complex64 {
    e.terms()
        .map(|(class, c)| {
            let x = class.m() as f64 * r1 + class.n() as f64 * r2;
            c.eval(q) * (x.exp() + (-x).exp())
        })
        .sum()
}
