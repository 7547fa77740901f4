//! Independent reference implementations used by the test suites. These
//! deliberately avoid the beta-set and Jacobi–Trudi machinery they are used
//! to cross-check: cores are computed by removing border strips from the
//! Young diagram, Schur polynomials by enumerating semistandard tableaux,
//! and determinants by the permutation sum.

use crate::cyclotomic::CycInt;
use crate::partition::Partition;
use crate::poly::{LaurentPoly, Monomial, ValueTuple};

/// Removes border strips of length `t` from the diagram until none remain.
/// A strip spanning rows i..=k leaves row j at `λ_{j+1} − 1` for i ≤ j < k
/// and row k at `λ_i + (k − i) − t`; the candidate is valid when the result
/// is still a partition.
pub fn rim_hook_core(lambda: &Partition, t: u32) -> Partition {
    let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let t = t as i64;
    'outer: loop {
        let len = parts.len();
        for i in 0..len {
            for k in i..len {
                let bottom = parts[i] + (k - i) as i64 - t;
                let below = if k + 1 < len { parts[k + 1] } else { 0 };
                if bottom < below {
                    continue;
                }
                if k > i && bottom > parts[k] - 1 {
                    continue;
                }
                for row in i..k {
                    parts[row] = parts[row + 1] - 1;
                }
                parts[k] = bottom;
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                continue 'outer;
            }
        }
        return Partition::new(parts).expect("strip removal keeps a partition");
    }
}

/// Schur polynomial by summing the content monomials of all semistandard
/// tableaux of shape λ with entries in 1..=n.
pub fn schur_by_tableaux(lambda: &Partition, n: usize, order: u32) -> LaurentPoly {
    let mut result = LaurentPoly::zero(n, order);
    if lambda.is_empty() {
        return LaurentPoly::one(n, order);
    }
    if lambda.len() > n {
        return result;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();

    fn fill(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        r: usize,
        c: usize,
        n: usize,
        order: u32,
        result: &mut LaurentPoly,
    ) {
        if r == shape.len() {
            let mut exps = vec![0i32; n];
            for row in rows.iter() {
                for &v in row {
                    exps[v - 1] += 1;
                }
            }
            let term = LaurentPoly::from_term(Monomial::new(exps), CycInt::one(order));
            *result = result.add(&term);
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let left = if c > 0 { rows[r][c - 1] } else { 1 };
            let above = if r > 0 && c < shape[r - 1] {
                rows[r - 1][c] + 1
            } else {
                1
            };
            left.max(above)
        };
        for v in lo..=n {
            rows[r][c] = v;
            fill(shape, rows, nr, nc, n, order, result);
        }
        rows[r][c] = 0;
    }

    fill(&shape, &mut rows, 0, 0, n, order, &mut result);
    result
}

/// Elementary symmetric polynomial of a value tuple, by enumerating index
/// subsets.
pub fn elementary_by_subsets(k: usize, tuple: &ValueTuple) -> LaurentPoly {
    let atoms = tuple.atoms();
    let n = atoms.len();
    if k > n {
        return LaurentPoly::zero(tuple.arity(), tuple.order());
    }
    let mut total = LaurentPoly::zero(tuple.arity(), tuple.order());
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut prod = LaurentPoly::one(tuple.arity(), tuple.order());
        for &i in &idx {
            prod = prod.mul(&tuple.atom_poly(i));
        }
        total = total.add(&prod);
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Complete homogeneous polynomial by enumerating weakly increasing index
/// multisets.
pub fn h_by_multisets(m: usize, tuple: &ValueTuple) -> LaurentPoly {
    let atoms = tuple.atoms().len();
    let mut total = LaurentPoly::zero(tuple.arity(), tuple.order());
    if m == 0 {
        return LaurentPoly::one(tuple.arity(), tuple.order());
    }
    if atoms == 0 {
        return total;
    }
    let mut pick = vec![0usize; m];
    loop {
        let mut prod = LaurentPoly::one(tuple.arity(), tuple.order());
        for &i in &pick {
            prod = prod.mul(&tuple.atom_poly(i));
        }
        total = total.add(&prod);
        let mut i = m;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if pick[i] + 1 < atoms {
                let v = pick[i] + 1;
                for item in pick.iter_mut().skip(i) {
                    *item = v;
                }
                break;
            }
        }
    }
}

/// Determinant as the signed sum over all permutations.
pub fn det_by_permutation_sum(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        panic!("permutation-sum oracle needs at least one row");
    }
    let arity = m[0][0].arity();
    let order = m[0][0].order();
    let mut total = LaurentPoly::zero(arity, order);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |perm| {
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut prod = LaurentPoly::one(arity, order);
        for (i, &j) in perm.iter().enumerate() {
            prod = prod.mul(&m[i][j]);
        }
        if inv % 2 == 1 {
            prod = prod.neg();
        }
        total = total.add(&prod);
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
