//! Universal and classical characters evaluated at (1, ω, …, ω^{t−1}):
//! closed-form integer values against direct exact evaluation. Universal
//! values always lie in {0, ±1, ±2}; classical values are integer products
//! read off the t-quotient.

use super::schur_ids::parity_sign;
use super::{Params, SweepBounds, TheoremId, VerificationReport};
use crate::characters::{
    even_orth, odd_orth, symplectic, tuples, univ_o, univ_so, univ_so_minus, univ_sp,
};
use crate::enumerate::partitions_bounded;
use crate::partition::{CoreQuotient, Partition};
use crate::poly::LaurentPoly;
use crate::{Error, Result};

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn sum_binom_next(counts: &[usize], lo: i64, hi: i64) -> i64 {
    let mut s = 0;
    let mut i = lo.max(0);
    while i <= hi {
        s += binom2(counts[i as usize] as i64 + 1);
        i += 1;
    }
    s
}

fn data(params: &Params) -> Result<(Partition, u32, CoreQuotient)> {
    let lambda = params.lambda()?.clone();
    let t = params.t()?;
    if lambda.len() > t as usize {
        return Err(Error::ArityViolation(format!(
            "evaluation at {t} roots of unity needs at most {t} parts"
        )));
    }
    let cq = lambda.core_quotient(t, t as usize)?;
    Ok((lambda, t, cq))
}

fn eps_sp(cq: &CoreQuotient) -> i64 {
    let t = cq.t as i64;
    let r = cq.core.rank() as i64;
    -sum_binom_next(&cq.counts, t.div_euclid(2), t - 2) + if t % 2 == 0 { 1 + r } else { 0 }
}

fn eps_o(cq: &CoreQuotient) -> i64 {
    let t = cq.t as i64;
    let r = cq.core.rank() as i64;
    -sum_binom_next(&cq.counts, (t + 2).div_euclid(2), t - 1)
        + r
        + if t % 2 == 0 { 1 + r } else { 0 }
}

fn eps_so(cq: &CoreQuotient) -> i64 {
    let t = cq.t as i64;
    let r = cq.core.rank() as i64;
    -sum_binom_next(&cq.counts, (t + 1).div_euclid(2), t - 1) + if t % 2 == 1 { r } else { 0 }
}

pub(super) fn epsilon(id: TheoremId, params: &Params) -> Result<i64> {
    let (lambda, t, cq) = data(params)?;
    let e = match id {
        TheoremId::UnivRootsSp | TheoremId::ClassRootsSp => eps_sp(&cq),
        TheoremId::UnivRootsO | TheoremId::ClassRootsOe => eps_o(&cq),
        TheoremId::UnivRootsSo | TheoremId::ClassRootsOo => eps_so(&cq),
        TheoremId::UnivRootsSom => {
            if t % 2 == 0 {
                eps_so(&cq) + lambda.size() as i64
            } else {
                eps_so(&cq) + cq.core.size() as i64
            }
        }
        _ => unreachable!(),
    };
    Ok(e)
}

/// Closed-form integer value of the evaluation.
pub(super) fn closed_form_value(id: TheoremId, params: &Params) -> Result<i64> {
    let (lambda, t, cq) = data(params)?;
    let ti = t as i64;
    let sigma = lambda.sigma_sign(t as usize, t, None)? as i64;
    let len = |i: i64| cq.component(i).len();
    let top = |i: i64| cq.component(i).part(0) as i64;
    let second = |i: i64| cq.component(i).part(1) as i64;

    let value = match id {
        TheoremId::UnivRootsSp => {
            let mut ok = cq.core.is_symplectic_shape();
            let mut i = 0;
            while i <= (ti - 3).div_euclid(2) {
                ok &= len(i) + len(ti - 2 - i) <= 1;
                i += 1;
            }
            if !ok {
                0
            } else {
                let mag = if t % 2 == 0 && !cq.component(ti / 2 - 1).is_empty() {
                    2
                } else {
                    1
                };
                parity_sign(eps_sp(&cq)) * sigma * mag
            }
        }
        TheoremId::UnivRootsO => {
            let mut ok = cq.core.is_orthogonal_shape();
            // λ^{(0)} must be ∅ or the single box
            ok &= cq.component(0).size() <= 1;
            let mut i = 1;
            while i <= (ti - 1).div_euclid(2) {
                ok &= len(i) + len(ti - i) <= 1;
                i += 1;
            }
            if t % 2 == 0 {
                ok &= cq.component(ti / 2).is_empty();
            }
            if !ok {
                0
            } else {
                parity_sign(eps_o(&cq)) * sigma
            }
        }
        TheoremId::UnivRootsSo => {
            let mut ok = cq.core.is_self_conjugate();
            let mut i = 0;
            while i <= (ti - 2).div_euclid(2) {
                ok &= len(i) + len(ti - 1 - i) <= 1;
                i += 1;
            }
            if !ok {
                0
            } else {
                let mag = if t % 2 == 1 && !cq.component((ti - 1) / 2).is_empty() {
                    2
                } else {
                    1
                };
                parity_sign(eps_so(&cq)) * sigma * mag
            }
        }
        TheoremId::UnivRootsSom => {
            // For t even the value multiset at −1·(roots) is unchanged, so
            // this is (−1)^{|λ|} times the plain variant. For t odd the
            // middle factor becomes so⁻ at 1 and kills any nonempty middle
            // component; the surviving sign reduces to the core's size.
            let mut ok = cq.core.is_self_conjugate();
            let mut i = 0;
            while i <= (ti - 2).div_euclid(2) {
                ok &= len(i) + len(ti - 1 - i) <= 1;
                i += 1;
            }
            if t % 2 == 0 {
                if !ok {
                    0
                } else {
                    parity_sign(eps_so(&cq) + lambda.size() as i64) * sigma
                }
            } else {
                ok &= cq.component((ti - 1) / 2).is_empty();
                if !ok {
                    0
                } else {
                    parity_sign(eps_so(&cq) + cq.core.size() as i64) * sigma
                }
            }
        }
        TheoremId::ClassRootsSp => {
            if !cq.core.is_symplectic_shape() {
                0
            } else {
                let mut v = parity_sign(eps_sp(&cq)) * sigma * (top(ti - 1) + 1);
                let mut i = 0;
                while i <= (ti - 3).div_euclid(2) {
                    v *= top(i) + top(ti - 2 - i) - second(i) - second(ti - 2 - i) + 1;
                    i += 1;
                }
                if t % 2 == 0 {
                    v *= 2 * top(ti / 2 - 1) + 1;
                }
                v
            }
        }
        TheoremId::ClassRootsOe => {
            if !cq.core.is_orthogonal_shape() {
                0
            } else {
                let mut v = parity_sign(eps_o(&cq)) * sigma;
                let mut i = 1;
                while i <= (ti - 1).div_euclid(2) {
                    v *= top(i) + top(ti - i) - second(i) - second(ti - i) + 1;
                    i += 1;
                }
                if !cq.component(0).is_empty() {
                    v *= 2;
                }
                v
            }
        }
        TheoremId::ClassRootsOo => {
            if !cq.core.is_self_conjugate() {
                0
            } else {
                let mut v = parity_sign(eps_so(&cq)) * sigma;
                let mut i = 0;
                while i <= (ti - 2).div_euclid(2) {
                    v *= top(i) + top(ti - 1 - i) - second(i) - second(ti - 1 - i) + 1;
                    i += 1;
                }
                if t % 2 == 1 {
                    v *= 2 * top((ti - 1) / 2) + 1;
                }
                v
            }
        }
        _ => unreachable!(),
    };
    Ok(value)
}

/// Universal characters at (1, ω, …, ω^{t−1}) against their closed forms.
pub(super) fn univ_roots(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let (lambda, t, _) = data(params)?;
    let tuple = tuples::roots_of_unity(t);
    let lhs = match id {
        TheoremId::UnivRootsSp => univ_sp(&lambda, &tuple)?,
        TheoremId::UnivRootsO => univ_o(&lambda, &tuple),
        TheoremId::UnivRootsSo => univ_so(&lambda, &tuple),
        TheoremId::UnivRootsSom => univ_so_minus(&lambda, &tuple),
        _ => unreachable!(),
    };
    let value = closed_form_value(id, params)?;
    let rhs = LaurentPoly::from_int(0, t, value);
    let mut report = VerificationReport::new(id, params);
    report.epsilon = Some(epsilon(id, params)?);
    report.sigma_sign = Some(lambda.sigma_sign(t as usize, t, None)?);
    Ok(report.conclude(value != 0, &lhs, Some(&rhs)))
}

/// Classical characters at (1, ω, …, ω^{t−1}) against their integer
/// product closed forms.
pub(super) fn class_roots(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let (lambda, t, _) = data(params)?;
    let base = tuples::roots_of_unity(t);
    let lhs = match id {
        TheoremId::ClassRootsSp => symplectic(&lambda, &base)?,
        TheoremId::ClassRootsOe => even_orth(&lambda, &base),
        TheoremId::ClassRootsOo => odd_orth(&lambda, &base),
        _ => unreachable!(),
    };
    let value = closed_form_value(id, params)?;
    let rhs = LaurentPoly::from_int(0, t, value);
    let mut report = VerificationReport::new(id, params);
    report.epsilon = Some(epsilon(id, params)?);
    report.sigma_sign = Some(lambda.sigma_sign(t as usize, t, None)?);
    Ok(report.conclude(value != 0, &lhs, Some(&rhs)))
}

pub(super) fn enumerate_roots(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        for lam in partitions_bounded(bounds.max_size, t as usize) {
            out.push(Params {
                lambda: Some(lam),
                t: Some(t),
                ..Default::default()
            });
        }
    }
    Ok(out)
}
