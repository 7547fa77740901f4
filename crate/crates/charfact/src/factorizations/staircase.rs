//! Independence of twisted characters from the twisted variables, staircase
//! skew symmetry, and the hook-Schur / staircase factorizations.

use super::{Family, Params, SweepBounds, TheoremId, VerificationReport};
use crate::characters::{
    even_orth, hook_schur, odd_orth, schur, skew_schur, symplectic, tuples, univ_o, univ_sp,
};
use crate::enumerate::{partitions_bounded, subpartitions};
use crate::partition::{staircase as staircase_shape, Partition};
use crate::poly::{h, LaurentPoly, ValueTuple};
use crate::{Error, Result};

fn is_staircase(lambda: &Partition) -> bool {
    *lambda == staircase_shape(lambda.len())
}

/// A universal character in k variables is unchanged by appending the
/// twisted block (Y, ωY, …, ω^{t−1}Y) exactly when λ is its own t-core.
/// The classical variants hold one direction (λ a t-core implies
/// independence); the complete homogeneous variant is independent exactly
/// for 0 ≤ r ≤ t−1.
pub(super) fn independence(params: &Params) -> Result<VerificationReport> {
    let t = params.t()?;
    let family = params
        .family
        .ok_or_else(|| Error::ArityViolation("missing family".into()))?;
    let k = params.arity();
    let yc = params.m.unwrap_or(1); // |Y|
    let ambient = k + yc;
    let x = tuples::base_range(0, k, ambient, t);
    let y = tuples::base_range(k, yc, ambient, t);
    let full = x.concat(&y.twist(t));
    let report = VerificationReport::new(TheoremId::Independence, params);

    if family == Family::CompleteH {
        let r = params
            .r
            .ok_or_else(|| Error::ArityViolation("missing r".into()))?;
        if k == 0 {
            return Err(Error::ArityViolation(
                "the h variant needs at least one x variable".into(),
            ));
        }
        let lhs = h(r, &full);
        let rhs = h(r, &x);
        let equal = lhs == rhs;
        let expected = 0 <= r && r < t as i64;
        return Ok(report.conclude_bool(
            equal == expected,
            format!("independent: {equal}"),
            format!("expected-independent: {expected}"),
        ));
    }

    let lambda = params.lambda()?;
    let is_core = lambda.is_t_core(t);
    let eval = |tuple: &ValueTuple| -> Result<LaurentPoly> {
        Ok(match family {
            Family::Schur => schur(lambda, tuple),
            Family::UnivSp => univ_sp(lambda, tuple)?,
            Family::UnivO => univ_o(lambda, tuple),
            Family::ClassSp => symplectic(lambda, tuple)?,
            Family::ClassOo => odd_orth(lambda, tuple),
            Family::ClassOe => even_orth(lambda, tuple),
            Family::CompleteH => unreachable!(),
        })
    };

    match family {
        Family::Schur | Family::UnivSp | Family::UnivO => {
            if lambda.len() > k {
                return Err(Error::ArityViolation(format!(
                    "the biconditional needs at most {k} parts, got {}",
                    lambda.len()
                )));
            }
            let equal = eval(&full)? == eval(&x)?;
            Ok(report.conclude_bool(
                equal == is_core,
                format!("independent: {equal}"),
                format!("is-t-core: {is_core}"),
            ))
        }
        _ => {
            // classical corollary: one direction, λ must be a t-core
            if !is_core {
                return Err(Error::NotApplicable(
                    "the classical variant needs a t-core".into(),
                ));
            }
            let lhs = eval(&full)?;
            let rhs = eval(&x)?;
            Ok(report.conclude_unconditional(&lhs, &rhs))
        }
    }
}

/// Skew Schur polynomials of a staircase are symmetric in the inner shape:
/// `s_{δ/μ} = s_{δ/μ'}` as symmetric functions.
pub(super) fn staircase_skew(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?; // the staircase
    let mu = params.mu()?;
    if !is_staircase(lambda) {
        return Err(Error::ArityViolation(
            "outer shape must be a staircase".into(),
        ));
    }
    // arity |δ| − |μ| separates symmetric functions of that degree
    let arity = ((lambda.size() - mu.size().min(lambda.size())) as usize).max(1);
    let v = tuples::base(arity, 1);
    let lhs = skew_schur(lambda, mu, &v);
    let rhs = skew_schur(lambda, &mu.conjugate(), &v);
    let report = VerificationReport::new(TheoremId::StaircaseSkew, params);
    Ok(report.conclude_unconditional(&lhs, &rhs))
}

/// Hook Schur polynomial versus the Schur polynomial of the joined
/// alphabets: equal for staircases with at most n+m rows, and for shapes
/// with at most n+m−2 rows equality forces a staircase.
pub(super) fn hook_eq(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let n = params.arity();
    let m = params.arity2();
    let stair = is_staircase(lambda);
    if lambda.len() > n + m || (lambda.len() > n + m - 2 && !stair) {
        return Err(Error::ArityViolation(format!(
            "needs ℓ(λ) ≤ {} (or a staircase with ℓ(λ) ≤ {})",
            n + m - 2,
            n + m
        )));
    }
    let x = tuples::base_range(0, n, n + m, 1);
    let y = tuples::base_range(n, m, n + m, 1);
    let hs = hook_schur(lambda, &x, &y);
    let s = schur(lambda, &x.concat(&y));
    let equal = hs == s;
    let report = VerificationReport::new(TheoremId::HookEq, params);
    if lambda.len() > n + m - 2 {
        // forward direction only
        return Ok(report.conclude_bool(
            equal,
            format!("equal: {equal}"),
            "expected-equal: true".into(),
        ));
    }
    Ok(report.conclude_bool(
        equal == stair,
        format!("equal: {equal}"),
        format!("is-staircase: {stair}"),
    ))
}

/// Factorization of the hook Schur polynomial when λ splits along an n×m
/// corner: `hs_λ(X/Y) = s_τ(X) s_{η'}(Y) Π (x_i + y_j)`.
pub(super) fn hook_fac(params: &Params) -> Result<VerificationReport> {
    let lambda = params.lambda()?;
    let n = params.arity();
    let m = params.arity2();
    // λ_n ≥ m ≥ λ_{n+1}, 1-based
    let cond = (n == 0 || lambda.part(n - 1) as usize >= m) && lambda.part(n) as usize <= m;
    if !cond {
        return Err(Error::NotApplicable(format!(
            "needs λ_{n} ≥ {m} ≥ λ_{}",
            n + 1
        )));
    }
    let tau = Partition::new((0..n).map(|i| lambda.part(i) as i64 - m as i64))?;
    let eta = Partition::new((n..lambda.len()).map(|i| lambda.part(i) as i64))?;
    let x = tuples::base_range(0, n, n + m, 1);
    let y = tuples::base_range(n, m, n + m, 1);
    let lhs = hook_schur(lambda, &x, &y);
    let mut rhs = schur(&tau, &x).mul(&schur(&eta.conjugate(), &y));
    for i in 0..n {
        for j in 0..m {
            let sum = LaurentPoly::var(i, n + m, 1).add(&LaurentPoly::var(n + j, n + m, 1));
            rhs = rhs.mul(&sum);
        }
    }
    let report = VerificationReport::new(TheoremId::HookFac, params);
    Ok(report.conclude_unconditional(&lhs, &rhs))
}

/// Staircase Schur polynomials in joined alphabets factor into the two
/// smaller staircases and the linear product Π (x_i + y_j); both the
/// (n+m)- and (n+m−1)-row versions are checked.
pub(super) fn staircase_fac(params: &Params) -> Result<VerificationReport> {
    let n = params.arity();
    let m = params.arity2();
    if n == 0 || m == 0 {
        return Err(Error::ArityViolation(
            "both alphabets must be nonempty".into(),
        ));
    }
    let x = tuples::base_range(0, n, n + m, 1);
    let y = tuples::base_range(n, m, n + m, 1);
    let xy = x.concat(&y);
    let mut linear = LaurentPoly::one(n + m, 1);
    for i in 0..n {
        for j in 0..m {
            linear =
                linear.mul(&LaurentPoly::var(i, n + m, 1).add(&LaurentPoly::var(n + j, n + m, 1)));
        }
    }
    let lhs1 = schur(&staircase_shape(n + m), &xy);
    let rhs1 = schur(&staircase_shape(n), &x)
        .mul(&schur(&staircase_shape(m), &y))
        .mul(&linear);
    let lhs2 = schur(&staircase_shape(n + m - 1), &xy);
    let rhs2 = schur(&staircase_shape(n - 1), &x)
        .mul(&schur(&staircase_shape(m - 1), &y))
        .mul(&linear);
    let holds = lhs1 == rhs1 && lhs2 == rhs2;
    let report = VerificationReport::new(TheoremId::StaircaseFac, params);
    Ok(report.conclude_bool(
        holds,
        format!("full: {lhs1}; short: {lhs2}"),
        format!("full: {rhs1}; short: {rhs2}"),
    ))
}

pub(super) fn enumerate_independence(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    let families = [
        Family::Schur,
        Family::UnivSp,
        Family::UnivO,
        Family::ClassSp,
        Family::ClassOo,
        Family::ClassOe,
    ];
    for &t in &bounds.t_set {
        for &k in &bounds.n_set {
            for family in families {
                for lam in partitions_bounded(bounds.max_size, k) {
                    out.push(Params {
                        lambda: Some(lam),
                        t: Some(t),
                        m: Some(1),
                        arity: Some(k),
                        family: Some(family),
                        ..Default::default()
                    });
                }
            }
            for r in 0..=(2 * t as i64 + 1) {
                out.push(Params {
                    t: Some(t),
                    m: Some(1),
                    r: Some(r),
                    arity: Some(k.max(1)),
                    family: Some(Family::CompleteH),
                    ..Default::default()
                });
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_staircase_skew(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    let mut k = 1;
    while staircase_shape(k).size() as usize <= bounds.max_size {
        let delta = staircase_shape(k);
        for mu in subpartitions(&delta) {
            out.push(Params {
                lambda: Some(delta.clone()),
                mu: Some(mu),
                ..Default::default()
            });
        }
        k += 1;
    }
    Ok(out)
}

pub(super) fn enumerate_hook_eq(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let (n, m) = (2usize, 2usize);
    let mut out = Vec::new();
    for lam in partitions_bounded(bounds.max_size, n + m) {
        if lam.len() <= n + m - 2 || is_staircase(&lam) {
            out.push(Params {
                lambda: Some(lam),
                arity: Some(n),
                arity2: Some(m),
                ..Default::default()
            });
        }
    }
    Ok(out)
}

pub(super) fn enumerate_hook_fac(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for n in 1..=2usize {
        for m in 1..=2usize {
            for lam in partitions_bounded(bounds.max_size, 4) {
                if lam.part(n.saturating_sub(1)) as usize >= m && lam.part(n) as usize <= m {
                    out.push(Params {
                        lambda: Some(lam.clone()),
                        arity: Some(n),
                        arity2: Some(m),
                        ..Default::default()
                    });
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn enumerate_staircase_fac(bounds: &SweepBounds) -> Result<Vec<Params>> {
    let cap = bounds.n_set.iter().copied().max().unwrap_or(3);
    let mut out = Vec::new();
    for n in 1..=cap {
        for m in 1..=cap {
            out.push(Params {
                arity: Some(n),
                arity2: Some(m),
                ..Default::default()
            });
        }
    }
    Ok(out)
}
