//! Schur-polynomial identities: evaluation at all t-th roots of unity, the
//! twisted factorization over t-cores and t-quotients, its mixed-variable
//! refinement, the odd-power variant, and the twisted skew vanishing
//! criteria.

use super::{Params, SweepBounds, TheoremId, VerificationReport};
use crate::characters::{schur, skew_schur, tuples};
use crate::cyclotomic::CycInt;
use crate::enumerate::{partitions_bounded, subpartitions};
use crate::partition::Partition;
use crate::poly::{LaurentPoly, Monomial, ValueTuple};
use crate::{Error, Result};

fn require_len(lambda: &Partition, max: usize) -> Result<()> {
    if lambda.len() > max {
        Err(Error::ArityViolation(format!(
            "partition has {} parts, allowed at most {max}",
            lambda.len()
        )))
    } else {
        Ok(())
    }
}

/// `s_λ(1, ω, …, ω^{t−1})`: zero unless the t-core is empty, in which case
/// the value is `(−1)^{t(t−1)/2}·sgn(σ_λ)`.
pub(super) fn roots_of_unity(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    require_len(lambda, t as usize)?;
    let tuple = tuples::roots_of_unity(t);
    let lhs = schur(lambda, &tuple);
    let cq = lambda.core_quotient(t, t as usize)?;
    let applicable = cq.core.is_empty();
    let eps = (t as i64) * (t as i64 - 1) / 2;
    let sigma = lambda.sigma_sign(t as usize, t, None)?;
    let value = if applicable {
        parity_sign(eps) * sigma as i64
    } else {
        0
    };
    let rhs = LaurentPoly::from_int(0, t, value);
    let mut report = VerificationReport::new(TheoremId::RootsOfUnity, params);
    report.epsilon = Some(eps);
    report.sigma_sign = Some(sigma);
    Ok(report.conclude(applicable, &lhs, Some(&rhs)))
}

pub(super) fn roots_of_unity_value(params: &Params) -> Result<i64> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    require_len(lambda, t as usize)?;
    if !lambda.core_quotient(t, t as usize)?.core.is_empty() {
        return Ok(0);
    }
    let eps = (t as i64) * (t as i64 - 1) / 2;
    Ok(parity_sign(eps) * lambda.sigma_sign(t as usize, t, None)? as i64)
}

pub(super) fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `s_λ(X, ωX, …, ω^{t−1}X)` for λ with at most tn parts and X of arity n:
/// zero unless the t-core is empty, else a signed product of the quotient's
/// Schur polynomials in X^t.
pub(super) fn schur_fac(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let m = t as usize * n;
    require_len(lambda, m)?;

    let base = tuples::base(n, t);
    let lhs = schur(lambda, &base.twist(t));
    let cq = lambda.core_quotient(t, m)?;
    let applicable = cq.core.is_empty();
    let eps = (t as i64) * (t as i64 - 1) / 2 * (n as i64) * (n as i64 + 1) / 2;
    let sigma = lambda.sigma_sign(m, t, None)?;

    let mut report = VerificationReport::new(TheoremId::SchurFac, params);
    report.epsilon = Some(eps);
    report.sigma_sign = Some(sigma);

    let rhs = if applicable {
        let xt = base.pow(t as i32);
        let mut prod = LaurentPoly::one(n, t);
        for q in &cq.quotient {
            prod = prod.mul(&schur(q, &xt));
        }
        Some(prod.mul_int(parity_sign(eps) * sigma as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

/// `s_λ(X, ωX, …, ω^{t−1}X, y, ωy, …, ω^{m−1}y)` for 0 ≤ m ≤ t−1: nonzero
/// exactly when the t-core ν fits in an m × (t−m) box, in which case the
/// distinguished quotient components pick up the y-variable.
pub(super) fn schur_k(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let extra = params.m.unwrap_or(0);
    if extra >= t as usize {
        return Err(Error::ArityViolation(format!(
            "need m < t, got m={extra}, t={t}"
        )));
    }
    let big_m = t as usize * n + extra;
    require_len(lambda, big_m)?;

    let ambient = if extra > 0 { n + 1 } else { n };
    let x = tuples::base_range(0, n, ambient, t);
    let mut tuple = x.twist(t);
    let mut y_tuple = ValueTuple::empty(ambient, t);
    for k in 0..extra as i64 {
        tuple = tuple.push_scaled_var(n, k);
        y_tuple = y_tuple.push_scaled_var(n, k);
    }
    let lhs = schur(lambda, &tuple);

    let cq = lambda.core_quotient(t, big_m)?;
    let nu = &cq.core;
    let applicable = nu.len() <= extra && nu.first() as usize + extra <= t as usize;

    let mut report = VerificationReport::new(TheoremId::SchurK, params);
    let rhs = if applicable {
        let e: Vec<u32> = nu
            .beta_set(extra)?
            .entries
            .iter()
            .map(|&b| b as u32)
            .collect();
        let order = if e.is_empty() {
            None
        } else {
            Some(e.as_slice())
        };
        let s1 = lambda.sigma_sign(big_m, t, order)?;
        // normalized against the core's own sorting sign
        let s2 = nu.sigma_sign(big_m, t, order)?;
        report.sigma_sign = Some(s1 * s2);

        // s_ν at (y, ωy, …, ω^{m−1}y)
        let mut prod = schur(nu, &y_tuple);
        let xt = x.pow(t as i32);
        let xt_yt = if extra > 0 {
            let mut w = xt.clone();
            let unit = Monomial::var(n, ambient).pow(t as i32);
            w = w.concat(&ValueTuple::new(
                ambient,
                t,
                vec![crate::poly::Atom {
                    coeff: CycInt::one(t),
                    mono: unit,
                }],
            ));
            w
        } else {
            xt.clone()
        };
        for j in 0..t {
            let q = &cq.quotient[j as usize];
            if e.contains(&j) {
                prod = prod.mul(&schur(q, &xt_yt));
            } else {
                prod = prod.mul(&schur(q, &xt));
            }
        }
        Some(prod.mul_int((s1 * s2) as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

/// Schur polynomial at the odd-power specialization X_ω (t a multiple of
/// 4): the mixed-twist factorization at modulus t/2, twist ω², base ωX and
/// extra variable y = ω. The report also checks the closed product form of
/// the unit-evaluation factor and its nonvanishing.
pub(super) fn schur_k_s(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    if t % 4 != 0 {
        return Err(Error::ArityViolation(format!("need 4 | t, got t={t}")));
    }
    let n = params.n();
    let th = t / 2;
    let quarter = (t / 4) as usize;
    let big_m = th as usize * n + quarter;
    require_len(lambda, big_m)?;

    let base = tuples::base(n, t);
    let lhs = schur(lambda, &base.x_omega(t)?);

    let cq = lambda.core_quotient(th, big_m)?;
    let nu = &cq.core;
    let applicable = nu.len() <= quarter && nu.first() as usize <= quarter;

    let mut report = VerificationReport::new(TheoremId::SchurKS, params);
    let rhs = if applicable {
        let e: Vec<u32> = nu
            .beta_set(quarter)?
            .entries
            .iter()
            .map(|&b| b as u32)
            .collect();
        let order = if e.is_empty() {
            None
        } else {
            Some(e.as_slice())
        };
        let s1 = lambda.sigma_sign(big_m, th, order)?;
        // normalized against the core's own sorting sign
        let s2 = nu.sigma_sign(big_m, th, order)?;
        report.sigma_sign = Some(s1 * s2);

        // s_ν at (ω, ω³, …, ω^{t/2−1}) — the unit factor, y = ω folded in
        let unit_tuple = constant_tuple(n, t, (0..quarter as i64).map(|k| 2 * k + 1));
        let nu_factor = schur(nu, &unit_tuple);
        if nu_factor.is_zero() {
            // asserted nonvanishing of the unit factor fails
            return Ok(report.conclude(true, &lhs, Some(&LaurentPoly::zero(n, t))));
        }
        // closed product form of the same factor, checked multiplicatively:
        // s_ν(1, ω², …, ω^{t/2−2}) Π (ω^{a_j} − ω^{a_i}) = Π (ω^{b_j} − ω^{b_i})
        let plain = schur(
            nu,
            &constant_tuple(n, t, (0..quarter as i64).map(|k| 2 * k)),
        );
        let mut lhs_prod = plain.to_scalar().expect("constant evaluation");
        let mut rhs_prod = CycInt::one(t);
        for i in 1..=quarter as i64 {
            for j in (i + 1)..=quarter as i64 {
                let den = CycInt::omega_pow(t, th as i64 - 2 * j)
                    .sub(&CycInt::omega_pow(t, th as i64 - 2 * i));
                let num =
                    CycInt::omega_pow(t, 2 * nu.part(j as usize - 1) as i64 + th as i64 - 2 * j)
                        .sub(&CycInt::omega_pow(
                            t,
                            2 * nu.part(i as usize - 1) as i64 + th as i64 - 2 * i,
                        ));
                lhs_prod = lhs_prod.mul(&den);
                rhs_prod = rhs_prod.mul(&num);
            }
        }
        if lhs_prod != rhs_prod {
            return Ok(report.conclude(true, &lhs, Some(&LaurentPoly::zero(n, t))));
        }

        let x_hat_th = base.scale_omega(1).pow(th as i32); // (ωX)^{t/2} = −X^{t/2}
        let with_y = x_hat_th.push_omega(th as i64); // ŷ^{t/2} = ω^{t/2} = −1
        let mut prod = nu_factor;
        for j in 0..th {
            let q = &cq.quotient[j as usize];
            if e.contains(&j) {
                prod = prod.mul(&schur(q, &with_y));
            } else {
                prod = prod.mul(&schur(q, &x_hat_th));
            }
        }
        Some(prod.mul_int((s1 * s2) as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

fn constant_tuple(arity: usize, order: u32, exps: impl Iterator<Item = i64>) -> ValueTuple {
    let atoms = exps
        .map(|k| crate::poly::Atom {
            coeff: CycInt::omega_pow(order, k),
            mono: Monomial::unit(arity),
        })
        .collect();
    ValueTuple::new(arity, order, atoms)
}

/// Twisted skew Schur polynomial: vanishes when the t-cores of λ and μ
/// differ; with equal cores it factors over the componentwise skew
/// quotients.
pub(super) fn skew_twist(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let mu = params.mu()?;
    let t = params.t()?;
    let a = params.arity();
    let m = t as usize * a;
    require_len(lambda, m)?;
    require_len(mu, m)?;

    let y = tuples::base(a, t);
    let lhs = skew_schur(lambda, mu, &y.twist(t));
    let cq_l = lambda.core_quotient(t, m)?;
    let cq_m = mu.core_quotient(t, m)?;
    let applicable = cq_l.core == cq_m.core;

    let mut report = VerificationReport::new(TheoremId::SkewTwist, params);
    let rhs = if applicable {
        let s1 = lambda.sigma_sign(m, t, None)?;
        let s2 = mu.sigma_sign(m, t, None)?;
        report.sigma_sign = Some(s1 * s2);
        let yt = y.pow(t as i32);
        let mut prod = LaurentPoly::one(a, t);
        for i in 0..t as usize {
            prod = prod.mul(&skew_schur(&cq_l.quotient[i], &cq_m.quotient[i], &yt));
        }
        Some(prod.mul_int((s1 * s2) as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

/// The twisted skew polynomials `s_{λ/μ}(Y, ωY, …)` vanish for every
/// proper subshape μ exactly when λ is its own t-core.
pub(super) fn iff_core_vanish(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let a = params.arity();
    require_len(lambda, t as usize * a)?;
    let twisted = tuples::base(a, t).twist(t);
    let all_vanish = subpartitions(lambda)
        .into_iter()
        .filter(|mu| mu != lambda)
        .all(|mu| skew_schur(lambda, &mu, &twisted).is_zero());
    let is_core = lambda.is_t_core(t);
    let report = VerificationReport::new(TheoremId::IffCoreVanish, params);
    Ok(report.conclude_bool(
        all_vanish == is_core,
        format!("all-proper-subshapes-vanish: {all_vanish}"),
        format!("is-t-core: {is_core}"),
    ))
}

pub(super) fn enumerate_roots_of_unity(bounds: &SweepBounds) -> Result<Vec<Params>> {
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

pub(super) fn enumerate_schur(id: TheoremId, bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        for &n in &bounds.n_set {
            let extras: Vec<usize> = if id == TheoremId::SchurK {
                (0..t as usize).collect()
            } else {
                vec![0]
            };
            for extra in extras {
                for lam in partitions_bounded(bounds.max_size, t as usize * n + extra) {
                    out.push(Params {
                        lambda: Some(lam),
                        t: Some(t),
                        n: Some(n),
                        m: if id == TheoremId::SchurK {
                            Some(extra)
                        } else {
                            None
                        },
                        ..Default::default()
                    });
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_schur_k_s(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &t in bounds.t_set.iter().filter(|&&t| t % 4 == 0) {
        for &n in &bounds.n_set {
            for lam in partitions_bounded(bounds.max_size, (t as usize / 2) * n + t as usize / 4) {
                out.push(Params {
                    lambda: Some(lam),
                    t: Some(t),
                    n: Some(n),
                    ..Default::default()
                });
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_skew_twist(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let a = bounds.arity.unwrap_or(1);
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        let max_len = t as usize * a;
        for lam in partitions_bounded(bounds.max_size, max_len) {
            for mu in partitions_bounded(lam.size() as usize, max_len) {
                out.push(Params {
                    lambda: Some(lam.clone()),
                    mu: Some(mu),
                    t: Some(t),
                    arity: Some(a),
                    ..Default::default()
                });
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_iff_core_vanish(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let a = bounds.arity.unwrap_or(1);
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        for lam in partitions_bounded(bounds.max_size, t as usize * a) {
            out.push(Params {
                lambda: Some(lam),
                t: Some(t),
                arity: Some(a),
                ..Default::default()
            });
        }
    }
    Ok(out)
}
