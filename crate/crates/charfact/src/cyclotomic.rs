//! Exact arithmetic in Z[ω] for ω a primitive t-th root of unity, realized
//! as integer polynomials reduced modulo the t-th cyclotomic polynomial.
//! The order t = 1 degenerates to plain integers.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Coefficients of Φ_t, ascending degree, monic. Built from the recursion
/// Φ_t(q) = (q^t − 1) / Π_{d|t, d<t} Φ_d(q) by exact division.
pub fn cyclotomic_polynomial(t: u32) -> Vec<BigInt> {
    assert!(t >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&t) {
        return hit.clone();
    }
    // q^t − 1
    let mut num = vec![BigInt::zero(); t as usize + 1];
    num[0] = -BigInt::one();
    num[t as usize] = BigInt::one();
    for d in 1..t {
        if t.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(t, num.clone());
    num
}

/// Exact quotient of monic integer polynomials; panics on a nonzero
/// remainder, which cannot occur in the cyclotomic recursion.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// An element of Z[ω], ω a primitive `order`-th root of unity, stored as
/// coefficients of 1, ω, …, ω^{φ(order)−1} after reduction mod Φ_order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    fn degree(order: u32) -> usize {
        cyclotomic_polynomial(order).len() - 1
    }

    pub fn zero(order: u32) -> Self {
        CycInt {
            order,
            coeffs: vec![BigInt::zero(); Self::degree(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_bigint(order, BigInt::from(v))
    }

    pub fn from_bigint(order: u32, v: BigInt) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = v;
        c.reduce_in_place_noop();
        c
    }

    /// ω^k with k taken mod the order.
    pub fn omega_pow(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigInt::zero(); k + 1];
        raw[k] = BigInt::one();
        Self::reduce(order, raw)
    }

    fn reduce(order: u32, mut raw: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if raw.len() > deg {
            for k in (deg..raw.len()).rev() {
                let c = std::mem::replace(&mut raw[k], BigInt::zero());
                if c.is_zero() {
                    continue;
                }
                for (i, p) in phi.iter().take(deg).enumerate() {
                    raw[k - deg + i] -= &c * p;
                }
            }
        }
        raw.resize(deg, BigInt::zero());
        CycInt { order, coeffs: raw }
    }

    fn reduce_in_place_noop(&mut self) {
        debug_assert_eq!(self.coeffs.len(), Self::degree(self.order));
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Integer value if this element lies in Z.
    pub fn to_int(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic elements of different orders cannot be mixed"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycInt {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycInt {
            order: self.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.order, raw)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Divides every coefficient by k; errors if any coefficient is not
    /// divisible in the Φ_t basis.
    pub fn exact_div_int(&self, k: i64) -> Result<Self> {
        let kk = BigInt::from(k);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if (c % &kk).is_zero() {
                coeffs.push(c / &kk);
            } else {
                return Err(Error::NonDivisible(k));
            }
        }
        Ok(CycInt {
            order: self.order,
            coeffs,
        })
    }

    /// Inverse among the torsion units ±ω^k, if this element is one.
    pub fn invert_unit(&self) -> Result<Self> {
        for k in 0..self.order as i64 {
            for sign in [1i64, -1] {
                let candidate = Self::omega_pow(self.order, k).mul_int(sign);
                if self.mul(&candidate).is_one() {
                    return Ok(candidate);
                }
            }
        }
        Err(Error::NonUnitAtom)
    }
}

impl fmt::Display for CycInt {
    /// Renders as an integer polynomial in "w", e.g. "1 - w + w^2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "w")?;
                    } else {
                        write!(f, "w^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeff_vec(c: &[i64], order: u32) -> CycInt {
        let mut acc = CycInt::zero(order);
        for (k, &v) in c.iter().enumerate() {
            acc = acc.add(&CycInt::omega_pow(order, k as i64).mul_int(v));
        }
        acc
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn omega_basics() {
        assert!(CycInt::omega_pow(5, 0).is_one());
        assert_eq!(CycInt::omega_pow(2, 1), CycInt::from_int(2, -1));
        // 1 + ω + ω² = 0 for t = 3
        let s = coeff_vec(&[1, 1, 1], 3);
        assert!(s.is_zero());
        // order-1 ring is the integers
        assert_eq!(CycInt::omega_pow(1, 0), CycInt::one(1));
        assert_eq!(CycInt::from_int(1, 7).to_int().unwrap(), BigInt::from(7));
    }

    #[test]
    fn omega_power_law_and_primitivity() {
        for t in 2u32..=12 {
            for k in 0..t as i64 {
                for j in 0..t as i64 {
                    let lhs = CycInt::omega_pow(t, k).mul(&CycInt::omega_pow(t, j));
                    assert_eq!(lhs, CycInt::omega_pow(t, k + j));
                }
            }
            assert!(CycInt::omega_pow(t, t as i64).is_one());
            for d in 1..t {
                if t % d == 0 {
                    assert!(!CycInt::omega_pow(t, d as i64).is_one(), "t={t}, d={d}");
                }
            }
        }
    }

    #[test]
    fn geometric_sums_vanish() {
        for t in 2u32..=10 {
            for j in 0..2 * t as i64 {
                let mut s = CycInt::zero(t);
                for k in 0..t as i64 {
                    s = s.add(&CycInt::omega_pow(t, j * k));
                }
                if j % t as i64 == 0 {
                    assert_eq!(s, CycInt::from_int(t, t as i64));
                } else {
                    assert!(s.is_zero(), "t={t} j={j}");
                }
            }
        }
    }

    #[test]
    fn unit_inverse_search() {
        for t in [2u32, 3, 4, 6, 8] {
            for k in 0..t as i64 {
                for sign in [1i64, -1] {
                    let u = CycInt::omega_pow(t, k).mul_int(sign);
                    assert!(u.mul(&u.invert_unit().unwrap()).is_one());
                }
            }
        }
        assert!(CycInt::from_int(3, 2).invert_unit().is_err());
    }

    #[test]
    fn exact_division() {
        let x = coeff_vec(&[2, -4, 6], 7);
        assert_eq!(x.exact_div_int(2).unwrap(), coeff_vec(&[1, -2, 3], 7));
        assert!(coeff_vec(&[1, 2], 5).exact_div_int(2).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(coeff_vec(&[1, -1, 1], 7).to_string(), "1 - w + w^2");
        assert_eq!(CycInt::zero(5).to_string(), "0");
        assert_eq!(coeff_vec(&[0, 2], 5).to_string(), "2*w");
        assert_eq!(coeff_vec(&[-3], 5).to_string(), "-3");
    }

    proptest! {
        #[test]
        fn ring_axioms(
            a in proptest::collection::vec(-6i64..6, 4),
            b in proptest::collection::vec(-6i64..6, 4),
            c in proptest::collection::vec(-6i64..6, 4),
            t in 2u32..10,
        ) {
            let (a, b, c) = (coeff_vec(&a, t), coeff_vec(&b, t), coeff_vec(&c, t));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
