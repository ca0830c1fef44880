//! Serde-facing representations of the public file formats. All rationals
//! travel as `[numerator, denominator]` pairs; round-trips are exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{PLPath, RatPoint};
use crate::goldman::{BracketPointRow, BracketReport};
use crate::holonomy::HolonomyWord;
use crate::intersections::IntersectionPoint;
use crate::loop_algebra::{AlgebraElement, LoopClass, QLaurent};
use crate::modular::{GeneratorImage, ModularMatrix, RelationsReport};
use crate::Rat;

pub type RatPair = [i64; 2];

pub fn rat_pair(r: Rat) -> RatPair {
    [*r.numer(), *r.denom()]
}

pub fn pair_rat(p: RatPair) -> Result<Rat> {
    if p[1] == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rat::new(p[0], p[1]))
}

fn point_pair(p: RatPoint) -> [RatPair; 2] {
    [rat_pair(p.x), rat_pair(p.y)]
}

fn pair_point(p: [RatPair; 2]) -> Result<RatPoint> {
    Ok(RatPoint::new(pair_rat(p[0])?, pair_rat(p[1])?))
}

/// A PL path as an array of `[x, y]` vertices, each coordinate `[num, den]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson(pub Vec<[RatPair; 2]>);

impl From<&PLPath> for PathJson {
    fn from(p: &PLPath) -> Self {
        PathJson(p.vertices().iter().map(|&v| point_pair(v)).collect())
    }
}

impl TryFrom<&PathJson> for PLPath {
    type Error = Error;
    fn try_from(j: &PathJson) -> Result<PLPath> {
        let verts = j.0.iter().map(|&v| pair_point(v)).collect::<Result<_>>()?;
        PLPath::new(verts)
    }
}

/// A holonomy word `{phase, alpha, beta}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub phase: RatPair,
    pub alpha: RatPair,
    pub beta: RatPair,
}

impl From<&HolonomyWord> for WordJson {
    fn from(w: &HolonomyWord) -> Self {
        WordJson {
            phase: rat_pair(w.phase),
            alpha: rat_pair(w.alpha),
            beta: rat_pair(w.beta),
        }
    }
}

impl TryFrom<&WordJson> for HolonomyWord {
    type Error = Error;
    fn try_from(j: &WordJson) -> Result<HolonomyWord> {
        Ok(HolonomyWord::new(
            pair_rat(j.phase)?,
            pair_rat(j.alpha)?,
            pair_rat(j.beta)?,
        ))
    }
}

/// One `c * q^{qexp}` term of a Laurent coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTermJson {
    pub qexp: RatPair,
    pub c: RatPair,
}

/// One loop-class term of an algebra element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementTermJson {
    pub class: [i64; 2],
    pub coeff: Vec<QTermJson>,
}

/// An algebra element: class terms in lexicographic order, exponents
/// ascending within each coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson(pub Vec<ElementTermJson>);

impl From<&AlgebraElement> for ElementJson {
    fn from(e: &AlgebraElement) -> Self {
        ElementJson(
            e.terms()
                .map(|(class, coeff)| ElementTermJson {
                    class: [class.m(), class.n()],
                    coeff: coeff
                        .terms()
                        .map(|(exp, c)| QTermJson {
                            qexp: rat_pair(*exp),
                            c: rat_pair(*c),
                        })
                        .collect(),
                })
                .collect(),
        )
    }
}

impl TryFrom<&ElementJson> for AlgebraElement {
    type Error = Error;
    fn try_from(j: &ElementJson) -> Result<AlgebraElement> {
        let mut e = AlgebraElement::zero();
        for term in &j.0 {
            let mut coeff = QLaurent::zero();
            for t in &term.coeff {
                coeff.add_term(pair_rat(t.qexp)?, pair_rat(t.c)?);
            }
            e.add_term(LoopClass::new(term.class[0], term.class[1]), coeff);
        }
        Ok(e)
    }
}

/// One intersection point `{pos, lift, index}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub pos: [RatPair; 2],
    pub lift: RatPair,
    pub index: i64,
}

impl From<&IntersectionPoint> for PointJson {
    fn from(p: &IntersectionPoint) -> Self {
        PointJson {
            pos: point_pair(p.position),
            lift: rat_pair(p.lift_param),
            index: p.index,
        }
    }
}

/// Intersection table `{points, total}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsJson {
    pub points: Vec<PointJson>,
    pub total: i64,
}

/// A modular matrix as `[[a,b],[c,d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson(pub [[i64; 2]; 2]);

impl From<&ModularMatrix> for MatrixJson {
    fn from(m: &ModularMatrix) -> Self {
        MatrixJson([[m.a, m.b], [m.c, m.d]])
    }
}

impl TryFrom<&MatrixJson> for ModularMatrix {
    type Error = Error;
    fn try_from(j: &MatrixJson) -> Result<ModularMatrix> {
        ModularMatrix::new(j.0[0][0], j.0[0][1], j.0[1][0], j.0[1][1])
    }
}

/// Per-crossing row of a bracket report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketPointJson {
    pub at: PointJson,
    pub positive_trace: ElementJson,
    pub negative_trace: ElementJson,
}

impl From<&BracketPointRow> for BracketPointJson {
    fn from(r: &BracketPointRow) -> Self {
        BracketPointJson {
            at: PointJson::from(&r.at),
            positive_trace: ElementJson::from(&r.positive_trace),
            negative_trace: ElementJson::from(&r.negative_trace),
        }
    }
}

/// Full bracket-equality report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReportJson {
    pub p1: [i64; 2],
    pub p2: [i64; 2],
    pub straight_form: ElementJson,
    pub rerouted_form: ElementJson,
    pub difference: ElementJson,
    pub equal: bool,
    pub points: Vec<BracketPointJson>,
}

impl From<&BracketReport> for BracketReportJson {
    fn from(r: &BracketReport) -> Self {
        BracketReportJson {
            p1: [r.p1.m(), r.p1.n()],
            p2: [r.p2.m(), r.p2.n()],
            straight_form: ElementJson::from(&r.straight_form),
            rerouted_form: ElementJson::from(&r.rerouted_form),
            difference: ElementJson::from(&r.difference),
            equal: r.equal,
            points: r.points.iter().map(BracketPointJson::from).collect(),
        }
    }
}

/// One generator-image check in a relations report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorImageJson {
    pub label: String,
    pub expected: WordJson,
    pub actual: WordJson,
    pub ok: bool,
}

/// Modular relations report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsJson {
    pub s4_is_identity: bool,
    pub st3_is_identity: bool,
    pub s2_inverts_paths: bool,
    pub fundamental_relation_preserved: bool,
    pub images: Vec<GeneratorImageJson>,
    pub classical_variant: bool,
    pub all_ok: bool,
}

impl From<&RelationsReport> for RelationsJson {
    fn from(r: &RelationsReport) -> Self {
        let image = |g: &GeneratorImage| GeneratorImageJson {
            label: g.label.to_string(),
            expected: WordJson::from(&g.expected),
            actual: WordJson::from(&g.actual),
            ok: g.ok,
        };
        RelationsJson {
            s4_is_identity: r.s4_is_identity,
            st3_is_identity: r.st3_is_identity,
            s2_inverts_paths: r.s2_inverts_paths,
            fundamental_relation_preserved: r.fundamental_relation_preserved,
            images: r.images.iter().map(image).collect(),
            classical_variant: r.classical_variant,
            all_ok: r.all_ok,
        }
    }
}
