//! Factorizations of universal characters twisted by roots of unity, the
//! twisted even orthogonal factorization, the self-dual GL factorizations,
//! the cross-family relation lemmas, and the odd-power specializations of
//! the classical characters.

use super::{Params, SweepBounds, TheoremId, VerificationReport};
use crate::characters::{
    even_orth, odd_orth, rs, schur, symplectic, tuples, univ_o, univ_so, univ_so_minus, univ_sp,
};
use crate::enumerate::partitions_bounded;
use crate::partition::{concat_neg, plus_minus, CoreQuotient, Partition};
use crate::poly::LaurentPoly;
use crate::{Error, Result};

use super::schur_ids::parity_sign;

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

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// Σ over `lo ≤ i ≤ hi` of C(n_i + 1, 2); empty when hi < lo.
fn sum_binom_next(counts: &[usize], lo: i64, hi: i64) -> i64 {
    let mut s = 0;
    let mut i = lo.max(0);
    while i <= hi {
        s += binom2(counts[i as usize] as i64 + 1);
        i += 1;
    }
    s
}

fn core_matches(id: TheoremId, core: &Partition) -> bool {
    match id {
        TheoremId::UnivSpFac => core.is_symplectic_shape(),
        TheoremId::UnivOFac => core.is_orthogonal_shape(),
        TheoremId::UnivSoFac => core.is_self_conjugate(),
        _ => unreachable!(),
    }
}

pub(super) fn univ_fac_epsilon_from(id: TheoremId, cq: &CoreQuotient, n: usize) -> i64 {
    let t = cq.t as i64;
    let n = n as i64;
    let r = cq.core.rank() as i64;
    match id {
        TheoremId::UnivSpFac => {
            let mut e = -sum_binom_next(&cq.counts, t.div_euclid(2), t - 2);
            if t % 2 == 0 {
                e += n * (n + 1) / 2 + n * r;
            }
            e
        }
        TheoremId::UnivOFac => {
            let mut e = -sum_binom_next(&cq.counts, (t + 2).div_euclid(2), t - 1) + r;
            if t % 2 == 0 {
                e += n * (n + 1) / 2 + n * r;
            }
            e
        }
        TheoremId::UnivSoFac => {
            let mut e = -sum_binom_next(&cq.counts, (t + 1).div_euclid(2), t - 1);
            if t % 2 == 1 {
                e += n * r;
            }
            e
        }
        _ => unreachable!(),
    }
}

pub(super) fn univ_fac_epsilon(id: TheoremId, params: &Params) -> Result<i64> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let cq = lambda.core_quotient(t, t as usize * n)?;
    if !core_matches(id, &cq.core) {
        return Err(Error::NotApplicable(format!(
            "{id} needs its core condition"
        )));
    }
    Ok(univ_fac_epsilon_from(id, &cq, n))
}

/// The universal symplectic / even orthogonal / odd orthogonal characters
/// at (V, ωV, …, ω^{t−1}V): nonzero exactly when the t-core is symplectic
/// / orthogonal / self-conjugate, in which case they factor through the
/// quotient in V^t.
pub(super) fn univ_fac(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let m = t as usize * n;
    require_len(lambda, m)?;
    let a = params.arity.unwrap_or(2);

    let v = tuples::base(a, t);
    let twisted = v.twist(t);
    let lhs = match id {
        TheoremId::UnivSpFac => univ_sp(lambda, &twisted)?,
        TheoremId::UnivOFac => univ_o(lambda, &twisted),
        TheoremId::UnivSoFac => univ_so(lambda, &twisted),
        _ => unreachable!(),
    };

    let cq = lambda.core_quotient(t, m)?;
    let applicable = core_matches(id, &cq.core);
    let mut report = VerificationReport::new(id, params);
    let rhs = if applicable {
        let eps = univ_fac_epsilon_from(id, &cq, n);
        let sigma = lambda.sigma_sign(m, t, None)?;
        report.epsilon = Some(eps);
        report.sigma_sign = Some(sigma);
        let vt = v.pow(t as i32);
        let ti = t as i64;
        let mut prod = LaurentPoly::one(a, t);
        match id {
            TheoremId::UnivSpFac => {
                prod = prod.mul(&univ_sp(cq.component(ti - 1), &vt)?);
                let mut i = 0;
                while i <= (ti - 3).div_euclid(2) {
                    prod = prod.mul(&rs(cq.component(i), cq.component(ti - 2 - i), &vt));
                    i += 1;
                }
                if t % 2 == 0 {
                    prod = prod.mul(&univ_so(cq.component((ti - 2) / 2), &vt));
                }
            }
            TheoremId::UnivOFac => {
                prod = prod.mul(&univ_o(cq.component(0), &vt));
                let mut i = 1;
                while i <= (ti - 1).div_euclid(2) {
                    prod = prod.mul(&rs(cq.component(i), cq.component(ti - i), &vt));
                    i += 1;
                }
                if t % 2 == 0 {
                    prod = prod.mul(&univ_so_minus(cq.component(ti / 2), &vt));
                }
            }
            TheoremId::UnivSoFac => {
                let mut i = 0;
                while i <= (ti - 2).div_euclid(2) {
                    prod = prod.mul(&rs(cq.component(i), cq.component(ti - 1 - i), &vt));
                    i += 1;
                }
                if t % 2 == 1 {
                    prod = prod.mul(&univ_so(cq.component((ti - 1) / 2), &vt));
                }
            }
            _ => unreachable!(),
        }
        Some(prod.mul_int(parity_sign(eps) * sigma as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

pub(super) fn even_fac_1_epsilon(params: &Params) -> Result<i64> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let m = t as usize * n + 1;
    let cq = lambda.core_quotient(t, m)?;
    Ok(even_fac_1_epsilon_from(&cq, t, n))
}

fn even_fac_1_epsilon_from(cq: &CoreQuotient, t: u32, n: usize) -> i64 {
    let ti = t as i64;
    let n = n as i64;
    let mut e = 0;
    let mut i = (ti + 2).div_euclid(2);
    while i < ti {
        let ni = cq.counts[i as usize] as i64;
        e += binom2(ni) + (ti - 1) * n * (ni - n);
        i += 1;
    }
    e
}

/// Twisted even orthogonal factorization: for λ with at most tn+1 parts
/// whose t-core is symplectic, `oe_λ(X, ωX, …, ω^{t−1}X, 1)` factors over
/// the quotient taken at padding tn+1. One-directional: parameters whose
/// core is not symplectic are rejected.
pub(super) fn even_fac_1(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let m = t as usize * n + 1;
    require_len(lambda, m)?;
    let a = n;

    let cq = lambda.core_quotient(t, m)?;
    if !cq.core.is_symplectic_shape() {
        return Err(Error::NotApplicable("the t-core is not symplectic".into()));
    }

    let x = tuples::base(a, t);
    let lhs = even_orth(lambda, &x.twist(t).push_int(1));

    let eps = even_fac_1_epsilon_from(&cq, t, n);
    // the sorting sign is normalized against the empty partition's at the
    // same padding
    let sigma = lambda.sigma_sign(m, t, None)? * Partition::empty().sigma_sign(m, t, None)?;

    let mut report = VerificationReport::new(TheoremId::EvenFac1, params);
    report.epsilon = Some(eps);
    report.sigma_sign = Some(sigma);

    let ti = t as i64;
    let xt = x.pow(t as i32);
    let mut prod = even_orth(cq.component(0), &xt.push_int(1));
    let bars = xt.with_bars();
    let mut i = 1;
    while i <= (ti - 1).div_euclid(2) {
        let composite = concat_neg(cq.component(i), cq.component(ti - i), 2 * n)?;
        prod = prod.mul(&schur(&composite, &bars));
        i += 1;
    }
    if t % 2 == 0 {
        let mid = cq.component(ti / 2);
        let factor = odd_orth(mid, &xt.neg()).mul_int(parity_sign(mid.size() as i64));
        prod = prod.mul(&factor);
    }
    let rhs = prod.mul_int(parity_sign(eps) * sigma as i64);
    Ok(report.conclude(true, &lhs, Some(&rhs)))
}

/// `s_{(±λ)_{2n}}(X, X̄) = (−1)^{|λ|} oo_λ(X) oo_λ(−X)`.
pub(super) fn fac_x(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let n = params.arity();
    require_len(lambda, n)?;
    let x = tuples::base(n, 1);
    let lhs = schur(&plus_minus(lambda, 2 * n)?, &x.with_bars());
    let rhs = odd_orth(lambda, &x)
        .mul(&odd_orth(lambda, &x.neg()))
        .mul_int(parity_sign(lambda.size() as i64));
    let report = VerificationReport::new(TheoremId::FacX, params);
    Ok(report.conclude_unconditional(&lhs, &rhs))
}

/// `s_{(±λ)_{2n+1}}(X, X̄, 1) = sp_λ(X) oe_λ(X, 1)`.
pub(super) fn fac_x1(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let n = params.arity();
    require_len(lambda, n)?;
    let x = tuples::base(n, 1);
    let lhs = schur(&plus_minus(lambda, 2 * n + 1)?, &x.with_bars().push_int(1));
    let rhs = symplectic(lambda, &x)?.mul(&even_orth(lambda, &x.push_int(1)));
    let report = VerificationReport::new(TheoremId::FacX1, params);
    Ok(report.conclude_unconditional(&lhs, &rhs))
}

/// Cross-family relations under appending −1 to a self-reciprocal tuple.
pub(super) fn relations(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let n = params.arity();
    let max_len = match id {
        TheoremId::RelSoSp | TheoremId::RelOOo => n,
        _ => n + 1,
    };
    if lambda.len() > max_len {
        return Err(Error::NotApplicable(format!(
            "{id} is stated for partitions with at most {max_len} parts"
        )));
    }
    let x = tuples::base(n, 1);
    let report = VerificationReport::new(id, params);
    let (lhs, rhs) = match id {
        TheoremId::RelSoSp => (
            univ_so(lambda, &x.with_bars().push_int(-1)),
            symplectic(lambda, &x)?,
        ),
        TheoremId::RelSpOo => (
            univ_sp(lambda, &x.with_bars().push_int(-1))?,
            odd_orth(lambda, &x.push_int(-1)),
        ),
        TheoremId::RelOOo => (
            univ_o(lambda, &x.neg().with_bars().push_int(-1)),
            odd_orth(lambda, &x).mul_int(parity_sign(lambda.size() as i64)),
        ),
        TheoremId::RelSomOe => (
            univ_so_minus(lambda, &x.neg().with_bars().push_int(-1)),
            even_orth(lambda, &x.neg().push_int(-1)),
        ),
        _ => unreachable!(),
    };
    Ok(report.conclude_unconditional(&lhs, &rhs))
}

pub(super) fn x_omega_epsilon(id: TheoremId, params: &Params) -> Result<i64> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    let n = params.n();
    let th = t / 2;
    let m = t as usize * n + th as usize;
    let cq = lambda.core_quotient(th, m)?;
    x_omega_epsilon_from(id, &cq, n)
}

fn x_omega_epsilon_from(id: TheoremId, cq: &CoreQuotient, n: usize) -> Result<i64> {
    let th = cq.t as i64;
    let n = n as i64;
    let r = cq.core.rank() as i64;
    // Σ (|λ^{(i)}| + |λ^{(th+offset−i)}|) over lo ≤ i ≤ hi
    let pair_sizes = |offset: i64, lo: i64, hi: i64| -> i64 {
        let mut s = 0;
        let mut i = lo;
        while i <= hi {
            s += cq.component(i).size() as i64 + cq.component(th + offset - i).size() as i64;
            i += 1;
        }
        s
    };
    match id {
        TheoremId::SympXOmega => Ok(-sum_binom_next(&cq.counts, th.div_euclid(2), th - 2)
            + (n + 1)
            + r
            + pair_sizes(-2, 0, th / 2 - 2)),
        TheoremId::EvenXOmega => Ok(-sum_binom_next(&cq.counts, th / 2 + 1, th - 1)
            + (n + 1)
            + cq.component(0).size() as i64
            + pair_sizes(0, 1, th / 2 - 1)),
        TheoremId::OddXOmega => {
            Ok(-sum_binom_next(&cq.counts, th / 2, th - 1) + pair_sizes(-1, 0, th / 2 - 1))
        }
        _ => unreachable!(),
    }
}

/// Classical characters at the odd-power specialization X_ω (t a multiple
/// of 4): nonzero exactly when the t/2-core is symplectic (sp), orthogonal
/// (oe), or self-conjugate (oo); the quotient is taken at padding tn+t/2.
pub(super) fn x_omega(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let t = params.t()?;
    if t % 4 != 0 {
        return Err(Error::ArityViolation(format!("need 4 | t, got t={t}")));
    }
    let n = params.n();
    let th = t / 2;
    let membership = (t as usize / 2) * n + t as usize / 4;
    require_len(lambda, membership)?;
    let m = t as usize * n + th as usize;
    let a = n;

    let x = tuples::base(a, t);
    let xo = x.x_omega(t)?;
    let lhs = match id {
        TheoremId::SympXOmega => symplectic(lambda, &xo)?,
        TheoremId::EvenXOmega => even_orth(lambda, &xo),
        TheoremId::OddXOmega => odd_orth(lambda, &xo),
        _ => unreachable!(),
    };

    let cq = lambda.core_quotient(th, m)?;
    let applicable = match id {
        TheoremId::SympXOmega => cq.core.is_symplectic_shape(),
        TheoremId::EvenXOmega => cq.core.is_orthogonal_shape(),
        TheoremId::OddXOmega => cq.core.is_self_conjugate(),
        _ => unreachable!(),
    };

    let mut report = VerificationReport::new(id, params);
    let rhs = if applicable {
        let eps = x_omega_epsilon_from(id, &cq, n)?;
        let sigma = lambda.sigma_sign(m, th, None)?;
        report.epsilon = Some(eps);
        report.sigma_sign = Some(sigma);

        let thi = th as i64;
        let xt = x.pow(th as i32); // X^{t/2}
        let neg = xt.neg();
        let bars1 = xt.with_bars().push_int(1);
        let mut prod = LaurentPoly::one(a, t);
        match id {
            TheoremId::SympXOmega => {
                prod = prod.mul(&odd_orth(cq.component(thi - 1), &neg.push_int(-1)));
                prod = prod.mul(&symplectic(cq.component(thi / 2 - 1), &neg)?);
                let mut i = 0;
                while i <= thi / 2 - 2 {
                    let composite =
                        concat_neg(cq.component(i), cq.component(thi - 2 - i), 2 * n + 1)?;
                    prod = prod.mul(&schur(&composite, &bars1));
                    i += 1;
                }
            }
            TheoremId::EvenXOmega => {
                prod = prod.mul(&odd_orth(cq.component(0), &xt));
                prod = prod.mul(&even_orth(cq.component(thi / 2), &neg.push_int(-1)));
                let mut i = 1;
                while i < thi / 2 {
                    let composite = concat_neg(cq.component(i), cq.component(thi - i), 2 * n + 1)?;
                    prod = prod.mul(&schur(&composite, &bars1));
                    i += 1;
                }
            }
            TheoremId::OddXOmega => {
                let mut i = 0;
                while i < thi / 2 {
                    let composite =
                        concat_neg(cq.component(i), cq.component(thi - 1 - i), 2 * n + 1)?;
                    prod = prod.mul(&schur(&composite, &bars1));
                    i += 1;
                }
            }
            _ => unreachable!(),
        }
        Some(prod.mul_int(parity_sign(eps) * sigma as i64))
    } else {
        None
    };
    Ok(report.conclude(applicable, &lhs, rhs.as_ref()))
}

pub(super) fn enumerate_univ_fac(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        for &n in &bounds.n_set {
            for lam in partitions_bounded(bounds.max_size, t as usize * n) {
                out.push(Params {
                    lambda: Some(lam),
                    t: Some(t),
                    n: Some(n),
                    arity: bounds.arity.or(Some(2)),
                    ..Default::default()
                });
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_even_fac_1(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &t in &bounds.t_set {
        for &n in &bounds.n_set {
            for lam in partitions_bounded(bounds.max_size, t as usize * n + 1) {
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

pub(super) fn enumerate_fac_x(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for &n in &bounds.n_set {
        for lam in partitions_bounded(bounds.max_size, n) {
            out.push(Params {
                lambda: Some(lam),
                arity: Some(n),
                ..Default::default()
            });
        }
    }
    Ok(out)
}

pub(super) fn enumerate_relations(bounds: &SweepBounds) -> Result<Vec<Params>> {
    // partitions up to length n+1 exercise both arity conventions
    let mut out = Vec::new();
    for &n in &bounds.n_set {
        for lam in partitions_bounded(bounds.max_size, n + 1) {
            out.push(Params {
                lambda: Some(lam),
                arity: Some(n),
                ..Default::default()
            });
        }
    }
    Ok(out)
}

pub(super) fn enumerate_x_omega(bounds: &SweepBounds) -> Result<Vec<Params>> {
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
