//! Registry of character factorization and evaluation identities. Each
//! entry can build the left side (a direct character evaluation), the right
//! side (a signed product of smaller characters, or a closed-form value),
//! decide its applicability condition, and produce a verification report.

mod pairs;
mod roots;
mod schur_ids;
mod staircase;
mod universal;

use crate::partition::Partition;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Every identity in the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    RootsOfUnity,
    SchurFac,
    SchurK,
    SchurKS,
    UnivSpFac,
    UnivOFac,
    UnivSoFac,
    EvenFac1,
    FacX,
    FacX1,
    RelSoSp,
    RelSpOo,
    RelOOo,
    RelSomOe,
    SympXOmega,
    EvenXOmega,
    OddXOmega,
    Eqqq,
    QuoStructure,
    SpGl,
    SelParts,
    QuoeqStructure,
    OoGl,
    OSpImplication,
    OeSpPair,
    SkewTwist,
    IffCoreVanish,
    Independence,
    StaircaseSkew,
    HookEq,
    HookFac,
    StaircaseFac,
    UnivRootsSp,
    UnivRootsO,
    UnivRootsSo,
    UnivRootsSom,
    ClassRootsSp,
    ClassRootsOe,
    ClassRootsOo,
}

pub const ALL_THEOREMS: &[TheoremId] = &[
    TheoremId::RootsOfUnity,
    TheoremId::SchurFac,
    TheoremId::SchurK,
    TheoremId::SchurKS,
    TheoremId::UnivSpFac,
    TheoremId::UnivOFac,
    TheoremId::UnivSoFac,
    TheoremId::EvenFac1,
    TheoremId::FacX,
    TheoremId::FacX1,
    TheoremId::RelSoSp,
    TheoremId::RelSpOo,
    TheoremId::RelOOo,
    TheoremId::RelSomOe,
    TheoremId::SympXOmega,
    TheoremId::EvenXOmega,
    TheoremId::OddXOmega,
    TheoremId::Eqqq,
    TheoremId::QuoStructure,
    TheoremId::SpGl,
    TheoremId::SelParts,
    TheoremId::QuoeqStructure,
    TheoremId::OoGl,
    TheoremId::OSpImplication,
    TheoremId::OeSpPair,
    TheoremId::SkewTwist,
    TheoremId::IffCoreVanish,
    TheoremId::Independence,
    TheoremId::StaircaseSkew,
    TheoremId::HookEq,
    TheoremId::HookFac,
    TheoremId::StaircaseFac,
    TheoremId::UnivRootsSp,
    TheoremId::UnivRootsO,
    TheoremId::UnivRootsSo,
    TheoremId::UnivRootsSom,
    TheoremId::ClassRootsSp,
    TheoremId::ClassRootsOe,
    TheoremId::ClassRootsOo,
];

impl TheoremId {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::RootsOfUnity => "ROOTS_OF_UNITY",
            TheoremId::SchurFac => "SCHUR_FAC",
            TheoremId::SchurK => "SCHUR_K",
            TheoremId::SchurKS => "SCHUR_K_S",
            TheoremId::UnivSpFac => "UNIV_SP_FAC",
            TheoremId::UnivOFac => "UNIV_O_FAC",
            TheoremId::UnivSoFac => "UNIV_SO_FAC",
            TheoremId::EvenFac1 => "EVENFAC_1",
            TheoremId::FacX => "FACX",
            TheoremId::FacX1 => "FACX1",
            TheoremId::RelSoSp => "REL_SO_SP",
            TheoremId::RelSpOo => "REL_SP_OO",
            TheoremId::RelOOo => "REL_O_OO",
            TheoremId::RelSomOe => "REL_SOM_OE",
            TheoremId::SympXOmega => "SYMP_XOMEGA",
            TheoremId::EvenXOmega => "EVEN_XOMEGA",
            TheoremId::OddXOmega => "ODD_XOMEGA",
            TheoremId::Eqqq => "EQQQ",
            TheoremId::QuoStructure => "QUO_STRUCTURE",
            TheoremId::SpGl => "SP_GL",
            TheoremId::SelParts => "SEL_PARTS",
            TheoremId::QuoeqStructure => "QUOEQ_STRUCTURE",
            TheoremId::OoGl => "OO_GL",
            TheoremId::OSpImplication => "O_SP_IMPLICATION",
            TheoremId::OeSpPair => "OE_SP_PAIR",
            TheoremId::SkewTwist => "SKEW_TWIST",
            TheoremId::IffCoreVanish => "IFF_CORE_VANISH",
            TheoremId::Independence => "INDEPENDENCE",
            TheoremId::StaircaseSkew => "STAIRCASE_SKEW",
            TheoremId::HookEq => "HOOK_EQ",
            TheoremId::HookFac => "HOOK_FAC",
            TheoremId::StaircaseFac => "STAIRCASE_FAC",
            TheoremId::UnivRootsSp => "UNIV_ROOTS_SP",
            TheoremId::UnivRootsO => "UNIV_ROOTS_O",
            TheoremId::UnivRootsSo => "UNIV_ROOTS_SO",
            TheoremId::UnivRootsSom => "UNIV_ROOTS_SOM",
            TheoremId::ClassRootsSp => "CLASS_ROOTS_SP",
            TheoremId::ClassRootsOe => "CLASS_ROOTS_OE",
            TheoremId::ClassRootsOo => "CLASS_ROOTS_OO",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Universal or classical family selector for the variable-independence
/// identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Schur,
    UnivSp,
    UnivO,
    ClassSp,
    ClassOo,
    ClassOe,
    CompleteH,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" => Ok(Family::Schur),
            "univ-sp" => Ok(Family::UnivSp),
            "univ-o" => Ok(Family::UnivO),
            "sp" => Ok(Family::ClassSp),
            "so-odd" => Ok(Family::ClassOo),
            "o-even" => Ok(Family::ClassOe),
            "h" => Ok(Family::CompleteH),
            other => Err(Error::UnknownCharacter(other.to_string())),
        }
    }
}

/// Flat parameter record; each identity validates the fields it needs.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Block count: how many twisted copies of the base alphabet the
    /// identity's partition bound tn refers to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Number of extra variables (the m of the mixed twist), residue p,
    /// residue q, h-index r.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    /// Arity of the base alphabet X.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    /// Arity of the second alphabet Y, where one appears.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arity2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

impl Params {
    pub(crate) fn lambda(&self) -> Result<&Partition> {
        self.lambda
            .as_ref()
            .ok_or_else(|| Error::ArityViolation("missing lambda".into()))
    }

    pub(crate) fn mu(&self) -> Result<&Partition> {
        self.mu
            .as_ref()
            .ok_or_else(|| Error::ArityViolation("missing mu".into()))
    }

    pub(crate) fn t(&self) -> Result<u32> {
        match self.t {
            Some(t) if t >= 2 => Ok(t),
            Some(t) => Err(Error::ArityViolation(format!(
                "t must be at least 2, got {t}"
            ))),
            None => Err(Error::ArityViolation("missing t".into())),
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n.unwrap_or(1)
    }

    pub(crate) fn arity(&self) -> usize {
        self.arity.or(self.n).unwrap_or(1)
    }

    pub(crate) fn arity2(&self) -> usize {
        self.arity2.or(self.arity).unwrap_or(1)
    }
}

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Applicability holds and both sides agree (nonzero).
    Match,
    /// Both sides agree and are zero.
    BothZero,
    /// The identity's nonvanishing condition fails and the left side is
    /// zero, as it must be.
    #[serde(rename = "NotApplicable-LHS-Zero")]
    NotApplicableLhsZero,
    /// Disagreement; any occurrence is a failure.
    Mismatch,
}

/// Record of one verified instance.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub applicable: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_sign: Option<i32>,
    pub lhs: String,
    pub rhs: String,
}

impl VerificationReport {
    pub(crate) fn new(theorem: TheoremId, params: &Params) -> Self {
        VerificationReport {
            theorem,
            params: params.clone(),
            applicable: false,
            verdict: Verdict::Mismatch,
            epsilon: None,
            sigma_sign: None,
            lhs: String::new(),
            rhs: String::new(),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl VerificationReport {
    /// Finishes a report for an identity that asserts equality under its
    /// condition and vanishing of the left side outside it.
    pub(crate) fn conclude(
        mut self,
        applicable: bool,
        lhs: &crate::poly::LaurentPoly,
        rhs: Option<&crate::poly::LaurentPoly>,
    ) -> Self {
        self.applicable = applicable;
        self.lhs = lhs.to_string();
        if applicable {
            let rhs = rhs.expect("applicable instances carry a right side");
            self.rhs = rhs.to_string();
            self.verdict = if lhs == rhs {
                if lhs.is_zero() {
                    Verdict::BothZero
                } else {
                    Verdict::Match
                }
            } else {
                Verdict::Mismatch
            };
        } else {
            self.rhs = "0".to_string();
            self.verdict = if lhs.is_zero() {
                Verdict::NotApplicableLhsZero
            } else {
                Verdict::Mismatch
            };
        }
        self
    }

    /// Finishes a report for an unconditional identity.
    pub(crate) fn conclude_unconditional(
        self,
        lhs: &crate::poly::LaurentPoly,
        rhs: &crate::poly::LaurentPoly,
    ) -> Self {
        self.conclude(true, lhs, Some(rhs))
    }

    /// Finishes a report for a structural (boolean) biconditional.
    pub(crate) fn conclude_bool(mut self, holds: bool, lhs: String, rhs: String) -> Self {
        self.applicable = true;
        self.lhs = lhs;
        self.rhs = rhs;
        self.verdict = if holds {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        self
    }
}

/// Verifies one instance of an identity. `Err(NotApplicable)` marks
/// parameters outside a one-directional identity's hypothesis, where the
/// identity asserts nothing.
pub fn verify(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    match id {
        TheoremId::RootsOfUnity => schur_ids::roots_of_unity(params),
        TheoremId::SchurFac => schur_ids::schur_fac(params),
        TheoremId::SchurK => schur_ids::schur_k(params),
        TheoremId::SchurKS => schur_ids::schur_k_s(params),
        TheoremId::SkewTwist => schur_ids::skew_twist(params),
        TheoremId::IffCoreVanish => schur_ids::iff_core_vanish(params),
        TheoremId::UnivSpFac => universal::univ_fac(TheoremId::UnivSpFac, params),
        TheoremId::UnivOFac => universal::univ_fac(TheoremId::UnivOFac, params),
        TheoremId::UnivSoFac => universal::univ_fac(TheoremId::UnivSoFac, params),
        TheoremId::EvenFac1 => universal::even_fac_1(params),
        TheoremId::FacX => universal::fac_x(params),
        TheoremId::FacX1 => universal::fac_x1(params),
        TheoremId::RelSoSp | TheoremId::RelSpOo | TheoremId::RelOOo | TheoremId::RelSomOe => {
            universal::relations(id, params)
        }
        TheoremId::SympXOmega | TheoremId::EvenXOmega | TheoremId::OddXOmega => {
            universal::x_omega(id, params)
        }
        TheoremId::Eqqq => pairs::eqqq(params),
        TheoremId::QuoStructure => pairs::quo_structure(params),
        TheoremId::SpGl => pairs::sp_gl(params),
        TheoremId::SelParts => pairs::sel_parts(params),
        TheoremId::QuoeqStructure => pairs::quoeq_structure(params),
        TheoremId::OoGl => pairs::oo_gl(params),
        TheoremId::OSpImplication => pairs::o_sp_implication(params),
        TheoremId::OeSpPair => pairs::oe_sp_pair(params),
        TheoremId::Independence => staircase::independence(params),
        TheoremId::StaircaseSkew => staircase::staircase_skew(params),
        TheoremId::HookEq => staircase::hook_eq(params),
        TheoremId::HookFac => staircase::hook_fac(params),
        TheoremId::StaircaseFac => staircase::staircase_fac(params),
        TheoremId::UnivRootsSp
        | TheoremId::UnivRootsO
        | TheoremId::UnivRootsSo
        | TheoremId::UnivRootsSom => roots::univ_roots(id, params),
        TheoremId::ClassRootsSp | TheoremId::ClassRootsOe | TheoremId::ClassRootsOo => {
            roots::class_roots(id, params)
        }
    }
}

/// Sign exponent a factorization identity attaches to its right side,
/// exposed separately so sign bugs localize.
pub fn epsilon(id: TheoremId, params: &Params) -> Result<i64> {
    match id {
        TheoremId::UnivSpFac | TheoremId::UnivOFac | TheoremId::UnivSoFac => {
            universal::univ_fac_epsilon(id, params)
        }
        TheoremId::EvenFac1 => universal::even_fac_1_epsilon(params),
        TheoremId::SympXOmega | TheoremId::EvenXOmega | TheoremId::OddXOmega => {
            universal::x_omega_epsilon(id, params)
        }
        TheoremId::OeSpPair => pairs::oe_sp_pair_epsilons(params).map(|(a, _)| a),
        TheoremId::UnivRootsSp
        | TheoremId::UnivRootsO
        | TheoremId::UnivRootsSo
        | TheoremId::UnivRootsSom
        | TheoremId::ClassRootsSp
        | TheoremId::ClassRootsOe
        | TheoremId::ClassRootsOo => roots::epsilon(id, params),
        TheoremId::RootsOfUnity => {
            let t = params.t()? as i64;
            Ok(t * (t - 1) / 2)
        }
        TheoremId::SchurFac => {
            let t = params.t()? as i64;
            let n = params.n() as i64;
            Ok((t * (t - 1) / 2) * (n * (n + 1) / 2))
        }
        _ => Err(Error::NotApplicable(format!("{id} has no sign exponent"))),
    }
}

/// Closed-form integer value of an evaluation identity.
pub fn closed_form_value(id: TheoremId, params: &Params) -> Result<i64> {
    match id {
        TheoremId::RootsOfUnity => schur_ids::roots_of_unity_value(params),
        TheoremId::UnivRootsSp
        | TheoremId::UnivRootsO
        | TheoremId::UnivRootsSo
        | TheoremId::UnivRootsSom
        | TheoremId::ClassRootsSp
        | TheoremId::ClassRootsOe
        | TheoremId::ClassRootsOo => roots::closed_form_value(id, params),
        _ => Err(Error::NotApplicable(format!(
            "{id} has no closed-form value"
        ))),
    }
}

/// Bounds for exhaustive sweeps, reproducible bit-for-bit: enumeration is
/// deterministic and reports keep enumeration order.
#[derive(Clone, Debug, Serialize)]
pub struct SweepBounds {
    pub max_size: usize,
    pub t_set: Vec<u32>,
    pub n_set: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_size: 6,
            t_set: vec![2, 3],
            n_set: vec![1],
            arity: None,
        }
    }
}

impl FromStr for SweepBounds {
    type Err = Error;

    /// Parses `size<=8;t=2,3,4;n=1;arity=2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut bounds = SweepBounds::default();
        for piece in s.split(';').filter(|p| !p.trim().is_empty()) {
            let piece = piece.trim();
            let bad = || Error::ArityViolation(format!("bad sweep bound {piece:?}"));
            if let Some(v) = piece.strip_prefix("size<=") {
                bounds.max_size = v.trim().parse().map_err(|_| bad())?;
            } else if let Some(v) = piece.strip_prefix("t=") {
                bounds.t_set = v
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
            } else if let Some(v) = piece.strip_prefix("n=") {
                bounds.n_set = v
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
            } else if let Some(v) = piece.strip_prefix("arity=") {
                bounds.arity = Some(v.trim().parse().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        Ok(bounds)
    }
}

/// Enumerates every in-bounds instance of the identity and verifies each.
/// Instances rejected as `NotApplicable` (one-directional identities off
/// their hypothesis) are skipped; every other error propagates.
pub fn sweep(id: TheoremId, bounds: &SweepBounds) -> Result<Vec<VerificationReport>> {
    let instances = enumerate_instances(id, bounds)?;
    let reports: Vec<Option<VerificationReport>> = instances
        .par_iter()
        .map(|params| match verify(id, params) {
            Ok(report) => Ok(Some(report)),
            Err(Error::NotApplicable(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

/// Aggregate counts of a sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub matches: usize,
    pub both_zero: usize,
    pub not_applicable: usize,
    pub mismatches: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> SweepSummary {
    let mut s = SweepSummary {
        total: reports.len(),
        ..Default::default()
    };
    for r in reports {
        match r.verdict {
            Verdict::Match => s.matches += 1,
            Verdict::BothZero => s.both_zero += 1,
            Verdict::NotApplicableLhsZero => s.not_applicable += 1,
            Verdict::Mismatch => s.mismatches += 1,
        }
    }
    s
}

/// Deterministic instance enumeration per identity; see each section
/// module for the index ranges.
pub fn enumerate_instances(id: TheoremId, bounds: &SweepBounds) -> Result<Vec<Params>> {
    match id {
        TheoremId::RootsOfUnity => schur_ids::enumerate_roots_of_unity(bounds),
        TheoremId::SchurFac | TheoremId::SchurK => schur_ids::enumerate_schur(id, bounds),
        TheoremId::SchurKS => schur_ids::enumerate_schur_k_s(bounds),
        TheoremId::SkewTwist => schur_ids::enumerate_skew_twist(bounds),
        TheoremId::IffCoreVanish => schur_ids::enumerate_iff_core_vanish(bounds),
        TheoremId::UnivSpFac | TheoremId::UnivOFac | TheoremId::UnivSoFac => {
            universal::enumerate_univ_fac(bounds)
        }
        TheoremId::EvenFac1 => universal::enumerate_even_fac_1(bounds),
        TheoremId::FacX | TheoremId::FacX1 => universal::enumerate_fac_x(bounds),
        TheoremId::RelSoSp | TheoremId::RelSpOo | TheoremId::RelOOo | TheoremId::RelSomOe => {
            universal::enumerate_relations(bounds)
        }
        TheoremId::SympXOmega | TheoremId::EvenXOmega | TheoremId::OddXOmega => {
            universal::enumerate_x_omega(bounds)
        }
        TheoremId::Eqqq => pairs::enumerate_eqqq(bounds),
        TheoremId::QuoStructure
        | TheoremId::QuoeqStructure
        | TheoremId::SpGl
        | TheoremId::SelParts
        | TheoremId::OoGl
        | TheoremId::OSpImplication
        | TheoremId::OeSpPair => pairs::enumerate_mu_family(id, bounds),
        TheoremId::Independence => staircase::enumerate_independence(bounds),
        TheoremId::StaircaseSkew => staircase::enumerate_staircase_skew(bounds),
        TheoremId::HookEq => staircase::enumerate_hook_eq(bounds),
        TheoremId::HookFac => staircase::enumerate_hook_fac(bounds),
        TheoremId::StaircaseFac => staircase::enumerate_staircase_fac(bounds),
        TheoremId::UnivRootsSp
        | TheoremId::UnivRootsO
        | TheoremId::UnivRootsSo
        | TheoremId::UnivRootsSom
        | TheoremId::ClassRootsSp
        | TheoremId::ClassRootsOe
        | TheoremId::ClassRootsOo => roots::enumerate_roots(bounds),
    }
}
