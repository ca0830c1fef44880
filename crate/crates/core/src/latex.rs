//! Deterministic LaTeX fragments for words and algebra elements.

use crate::holonomy::HolonomyWord;
use crate::loop_algebra::{AlgebraElement, LoopClass, QLaurent};
use crate::Rat;

use num_traits::{One, Signed, Zero};

/// Rational in exponent position: `3`, `-1`, `3/2`, `-3/2`.
fn exp_str(r: Rat) -> String {
    format!("{r}")
}

/// `q^{e}` with the usual abbreviations for `e = 0, 1`.
fn q_pow(e: Rat) -> String {
    if e.is_zero() {
        "1".to_string()
    } else if e.is_one() {
        "q".to_string()
    } else {
        format!("q^{{{}}}", exp_str(e))
    }
}

/// Laurent combination of `q` powers, exponents ascending.
pub fn latex_qlaurent(p: &QLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in p.terms() {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push('-');
        } else {
            out.push('+');
        }
        if e.is_zero() {
            out.push_str(&format!("{mag}"));
        } else {
            if !mag.is_one() {
                out.push_str(&format!("{mag}"));
            }
            out.push_str(&q_pow(*e));
        }
    }
    out
}

fn latex_class(class: &LoopClass) -> String {
    format!("T({},{})", class.m(), class.n())
}

/// Algebra element with deterministic ordering. A two-term element whose
/// coefficients are negatives of each other is rendered factored,
/// `(c)(T(a,b)-T(c,d))` with the lexicographically larger class first, to
/// match the usual presentation of the brackets; otherwise terms are listed
/// in ascending class order.
pub fn latex_element(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<(&LoopClass, &QLaurent)> = e.terms().collect();
    if terms.len() == 2 {
        let (c_lo, f_lo) = terms[0];
        let (c_hi, f_hi) = terms[1];
        if f_lo.clone() + f_hi.clone() == QLaurent::zero() {
            return format!(
                "({})({}-{})",
                latex_qlaurent(f_hi),
                latex_class(c_hi),
                latex_class(c_lo)
            );
        }
    }
    terms
        .iter()
        .map(|(class, coeff)| format!("({}){}", latex_qlaurent(coeff), latex_class(class)))
        .collect::<Vec<_>>()
        .join("+")
}

/// Normal-form word `q^{k}e^{a r_1 + b r_2}`.
pub fn latex_word(w: &HolonomyWord) -> String {
    let mut out = String::new();
    if !w.phase.is_zero() {
        out.push_str(&q_pow(w.phase));
    }
    if w.alpha.is_zero() && w.beta.is_zero() {
        if out.is_empty() {
            out.push('1');
        }
        return out;
    }
    let mut inner = String::new();
    if !w.alpha.is_zero() {
        if !w.alpha.abs().is_one() {
            inner.push_str(&format!("{}", w.alpha));
        } else if w.alpha.is_negative() {
            inner.push('-');
        }
        inner.push_str("r_1");
    }
    if !w.beta.is_zero() {
        if !inner.is_empty() {
            inner.push_str(if w.beta.is_negative() { "-" } else { "+" });
            if !w.beta.abs().is_one() {
                inner.push_str(&format!("{}", w.beta.abs()));
            }
        } else {
            if !w.beta.abs().is_one() {
                inner.push_str(&format!("{}", w.beta));
            } else if w.beta.is_negative() {
                inner.push('-');
            }
        }
        inner.push_str("r_2");
    }
    out.push_str(&format!("e^{{{inner}}}"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_algebra::{commutator_straight, poisson_bracket};
    use crate::{rat, Rat};

    #[test]
    fn worked_commutator_renders_factored() {
        let e = commutator_straight(1, 2, 2, 1);
        assert_eq!(latex_element(&e), "(q^{-3/2}-q^{3/2})(T(3,3)-T(-1,1))");
    }

    #[test]
    fn poisson_bracket_renders_with_integer_factor() {
        let e = poisson_bracket(1, 2, 2, 1);
        assert_eq!(latex_element(&e), "(-3)(T(3,3)-T(-1,1))");
        let e = poisson_bracket(1, 0, 0, 1);
        assert_eq!(latex_element(&e), "(1)(T(1,1)-T(-1,1))");
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(latex_element(&AlgebraElement::zero()), "0");
        assert_eq!(latex_qlaurent(&QLaurent::zero()), "0");
    }

    #[test]
    fn qlaurent_rendering() {
        assert_eq!(
            latex_qlaurent(&QLaurent::q_pow_diff(rat(2, 1), rat(-2, 1))),
            "-q^{-2}+q^{2}"
        );
        assert_eq!(
            latex_qlaurent(&QLaurent::monomial(rat(1, 1), Rat::from_integer(-3))),
            "-3q"
        );
        assert_eq!(
            latex_qlaurent(&QLaurent::monomial(rat(0, 1), rat(5, 2))),
            "5/2"
        );
    }

    #[test]
    fn word_rendering() {
        use crate::holonomy::HolonomyWord;
        let w = HolonomyWord::new(rat(-1, 2), rat(1, 1), rat(1, 1));
        assert_eq!(latex_word(&w), "q^{-1/2}e^{r_1+r_2}");
        let w = HolonomyWord::identity();
        assert_eq!(latex_word(&w), "1");
        let w = HolonomyWord::new(rat(0, 1), rat(-2, 1), rat(1, 2));
        assert_eq!(latex_word(&w), "e^{-2r_1+1/2r_2}");
    }
}
