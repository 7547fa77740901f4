//! Character families as functions (partition, value tuple) → Laurent
//! polynomial, all computed from their determinant formulas in complete
//! homogeneous polynomials, plus the tuple builders for the root-of-unity
//! specializations they are evaluated at.
//!
//! The classical families take a base tuple X and augment it internally:
//! the symplectic and even orthogonal characters work over (X, X̄), the odd
//! orthogonal over (X, X̄, 1). Universal families evaluate over the tuple
//! they are given. Determinants are padded to max(ℓ(λ), 1); enlarging the
//! padding is a no-op.

use crate::cyclotomic::CycInt;
use crate::enumerate::subpartitions;
use crate::partition::Partition;
use crate::poly::{det, h_range, Atom, LaurentPoly, Monomial, ValueTuple};
use crate::{Error, Result};

/// Entry recipe for the Jacobi–Trudi style determinants: the h-index of the
/// first summand is `λ_i − i + j`; the second summand, when present, has
/// index `λ_i − i ± j + shift` with the given sign.
#[derive(Clone, Copy)]
enum Form {
    /// det(h_{λ_i−i+j})
    Plain,
    /// det(h_{λ_i−i+j} + sign·h_{λ_i−i−j+shift})
    Mirror { shift: i64, sign: i64 },
}

fn jt_det(lambda: &Partition, tuple: &ValueTuple, form: Form, size: usize) -> LaurentPoly {
    let n = size.max(lambda.len()).max(1);
    let max_idx = lambda.first() as i64 + n as i64;
    let hs = h_range(tuple, max_idx);
    let at = |idx: i64| -> LaurentPoly {
        if idx < 0 {
            LaurentPoly::zero(tuple.arity(), tuple.order())
        } else {
            hs[idx as usize].clone()
        }
    };
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let li = lambda.part(i - 1) as i64;
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let main = at(li - i as i64 + j as i64);
            let entry = match form {
                Form::Plain => main,
                Form::Mirror { shift, sign } => {
                    let second = at(li - i as i64 - j as i64 + shift);
                    if sign > 0 {
                        main.add(&second)
                    } else {
                        main.sub(&second)
                    }
                }
            };
            row.push(entry);
        }
        m.push(row);
    }
    det(&m)
}

/// Schur polynomial `s_λ` of a value tuple.
pub fn schur(lambda: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    jt_det(lambda, tuple, Form::Plain, lambda.len())
}

/// Skew Schur polynomial `s_{λ/μ}`; zero when μ ⊄ λ.
pub fn skew_schur(lambda: &Partition, mu: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    let n = lambda.len().max(mu.len()).max(1);
    let max_idx = lambda.first() as i64 + n as i64;
    let hs = h_range(tuple, max_idx);
    let at = |idx: i64| -> LaurentPoly {
        if idx < 0 {
            LaurentPoly::zero(tuple.arity(), tuple.order())
        } else {
            hs[idx as usize].clone()
        }
    };
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let row = (1..=n)
            .map(|j| at(lambda.part(i - 1) as i64 - mu.part(j - 1) as i64 - i as i64 + j as i64))
            .collect();
        m.push(row);
    }
    det(&m)
}

/// Odd orthogonal character `oo_λ`, evaluated over (X, X̄, 1).
pub fn odd_orth(lambda: &Partition, base: &ValueTuple) -> LaurentPoly {
    let t = base.with_bars().push_int(1);
    jt_det(
        lambda,
        &t,
        Form::Mirror { shift: 0, sign: -1 },
        lambda.len(),
    )
}

/// Symplectic character `sp_λ`, evaluated over (X, X̄); the determinant's
/// doubled first column is removed by an exact division by 2.
pub fn symplectic(lambda: &Partition, base: &ValueTuple) -> Result<LaurentPoly> {
    let t = base.with_bars();
    jt_det(lambda, &t, Form::Mirror { shift: 2, sign: 1 }, lambda.len()).exact_div_int(2)
}

/// Even orthogonal character `oe_λ`, evaluated over (X, X̄).
pub fn even_orth(lambda: &Partition, base: &ValueTuple) -> LaurentPoly {
    let t = base.with_bars();
    jt_det(
        lambda,
        &t,
        Form::Mirror { shift: 0, sign: -1 },
        lambda.len(),
    )
}

/// Universal even orthogonal character `o_λ` over the given tuple.
pub fn univ_o(lambda: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    jt_det(
        lambda,
        tuple,
        Form::Mirror { shift: 0, sign: -1 },
        lambda.len(),
    )
}

/// Universal symplectic character over the given tuple.
pub fn univ_sp(lambda: &Partition, tuple: &ValueTuple) -> Result<LaurentPoly> {
    jt_det(
        lambda,
        tuple,
        Form::Mirror { shift: 2, sign: 1 },
        lambda.len(),
    )
    .exact_div_int(2)
}

/// Universal odd orthogonal character over the given tuple.
pub fn univ_so(lambda: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    jt_det(
        lambda,
        tuple,
        Form::Mirror { shift: 1, sign: 1 },
        lambda.len(),
    )
}

/// Sign variant of [`univ_so`]; equals `(−1)^{|λ|}·so_λ`.
pub fn univ_so_minus(lambda: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    jt_det(
        lambda,
        tuple,
        Form::Mirror { shift: 1, sign: -1 },
        lambda.len(),
    )
}

/// Universal GL character of a mixed-tensor weight:
/// `rs_{λ,μ} = Σ_ν (−1)^{|ν|} s_{λ/ν} s_{μ/ν'}`.
pub fn rs(lambda: &Partition, mu: &Partition, tuple: &ValueTuple) -> LaurentPoly {
    let mut total = LaurentPoly::zero(tuple.arity(), tuple.order());
    for nu in subpartitions(lambda) {
        let nu_conj = nu.conjugate();
        if !mu.contains(&nu_conj) {
            continue;
        }
        let term = skew_schur(lambda, &nu, tuple).mul(&skew_schur(mu, &nu_conj, tuple));
        total = if nu.size() % 2 == 0 {
            total.add(&term)
        } else {
            total.sub(&term)
        };
    }
    total
}

/// Hook Schur polynomial `hs_λ(X/Y) = Σ_{μ⊆λ} s_μ(X) s_{λ'/μ'}(Y)`. The two
/// tuples must share an ambient arity and cyclotomic order.
pub fn hook_schur(lambda: &Partition, x: &ValueTuple, y: &ValueTuple) -> LaurentPoly {
    assert_eq!(x.arity(), y.arity(), "hook tuples share an ambient arity");
    assert_eq!(x.order(), y.order(), "hook tuples share a cyclotomic order");
    let lc = lambda.conjugate();
    let mut total = LaurentPoly::zero(x.arity(), x.order());
    for mu in subpartitions(lambda) {
        let term = schur(&mu, x).mul(&skew_schur(&lc, &mu.conjugate(), y));
        total = total.add(&term);
    }
    total
}

/// Names accepted by [`compute_character`] and the command-line interface.
pub const CHARACTER_KINDS: &[&str] = &[
    "schur",
    "skew",
    "sp",
    "so-odd",
    "o-even",
    "univ-o",
    "univ-sp",
    "univ-so",
    "univ-so-minus",
    "rs",
    "hook",
];

/// Computes a named character at a tuple described by the tuple-spec DSL.
/// Partition arguments use the comma form, with `λ/μ` for the two-partition
/// kinds; the `hook` kind takes a spec of the form `X(n) Y(m)`.
pub fn compute_character(kind: &str, lambda_spec: &str, tuple_spec: &str) -> Result<LaurentPoly> {
    let (lam, mu) = match lambda_spec.split_once('/') {
        Some((a, b)) => (a.parse::<Partition>()?, Some(b.parse::<Partition>()?)),
        None => (lambda_spec.parse::<Partition>()?, None),
    };
    let need_mu = || {
        mu.clone().ok_or_else(|| {
            Error::BadPartition(format!("kind {kind:?} needs a 'lambda/mu' argument"))
        })
    };
    match kind {
        "hook" => {
            let (x, y) = tuples::parse_hook_spec(tuple_spec)?;
            Ok(hook_schur(&lam, &x, &y))
        }
        _ => {
            let tuple = tuples::parse_spec(tuple_spec)?;
            match kind {
                "schur" => Ok(schur(&lam, &tuple)),
                "skew" => Ok(skew_schur(&lam, &need_mu()?, &tuple)),
                "sp" => symplectic(&lam, &tuple),
                "so-odd" => Ok(odd_orth(&lam, &tuple)),
                "o-even" => Ok(even_orth(&lam, &tuple)),
                "univ-o" => Ok(univ_o(&lam, &tuple)),
                "univ-sp" => univ_sp(&lam, &tuple),
                "univ-so" => Ok(univ_so(&lam, &tuple)),
                "univ-so-minus" => Ok(univ_so_minus(&lam, &tuple)),
                "rs" => Ok(rs(&lam, &need_mu()?, &tuple)),
                _ => Err(Error::UnknownCharacter(kind.to_string())),
            }
        }
    }
}

/// Builders for the specialization tuples the identities are stated at.
pub mod tuples {
    use super::*;

    /// Base variables (x_1, …, x_n).
    pub fn base(n: usize, order: u32) -> ValueTuple {
        base_range(0, n, n, order)
    }

    /// Variables (x_{start+1}, …, x_{start+count}) inside a wider ambient
    /// arity, for identities mixing disjoint alphabets.
    pub fn base_range(start: usize, count: usize, ambient: usize, order: u32) -> ValueTuple {
        let atoms = (0..count)
            .map(|i| Atom {
                coeff: CycInt::one(order),
                mono: Monomial::var(start + i, ambient),
            })
            .collect();
        ValueTuple::new(ambient, order, atoms)
    }

    /// The constant tuple (1, ω, …, ω^{t−1}) of arity 0.
    pub fn roots_of_unity(t: u32) -> ValueTuple {
        let atoms = (0..t as i64)
            .map(|k| Atom {
                coeff: CycInt::omega_pow(t, k),
                mono: Monomial::unit(0),
            })
            .collect();
        ValueTuple::new(0, t, atoms)
    }

    /// Constant tuple (ω^{e_1}, …, ω^{e_k}) of arity 0 at the given order.
    pub fn omega_powers(order: u32, exps: impl IntoIterator<Item = i64>) -> ValueTuple {
        let atoms = exps
            .into_iter()
            .map(|k| Atom {
                coeff: CycInt::omega_pow(order, k),
                mono: Monomial::unit(0),
            })
            .collect();
        ValueTuple::new(0, order, atoms)
    }

    impl ValueTuple {
        /// (V, ωV, …, ω^{t−1}V) for ω a primitive t-th root inside the
        /// tuple's cyclotomic order; t must divide the order.
        pub fn twist(&self, t: u32) -> ValueTuple {
            assert!(
                self.order().is_multiple_of(t),
                "twist order must divide the cyclotomic order"
            );
            let step = (self.order() / t) as i64;
            let mut atoms = Vec::with_capacity(self.len() * t as usize);
            for k in 0..t as i64 {
                let w = CycInt::omega_pow(self.order(), k * step);
                for a in self.atoms() {
                    atoms.push(Atom {
                        coeff: a.coeff.mul(&w),
                        mono: a.mono.clone(),
                    });
                }
            }
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// Entrywise reciprocal V̄; atom coefficients must be torsion units.
        pub fn bar(&self) -> ValueTuple {
            let atoms = self
                .atoms()
                .iter()
                .map(|a| Atom {
                    coeff: a
                        .coeff
                        .invert_unit()
                        .expect("tuple atom coefficients are units"),
                    mono: a.mono.inverse(),
                })
                .collect();
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// (V, V̄).
        pub fn with_bars(&self) -> ValueTuple {
            self.concat(&self.bar())
        }

        /// −V.
        pub fn neg(&self) -> ValueTuple {
            let atoms = self
                .atoms()
                .iter()
                .map(|a| Atom {
                    coeff: a.coeff.neg(),
                    mono: a.mono.clone(),
                })
                .collect();
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// V^k entrywise.
        pub fn pow(&self, k: i32) -> ValueTuple {
            assert!(k != 0);
            let atoms = self
                .atoms()
                .iter()
                .map(|a| {
                    let coeff = if k > 0 {
                        a.coeff.pow(k as u32)
                    } else {
                        a.coeff
                            .invert_unit()
                            .expect("unit coefficient")
                            .pow((-k) as u32)
                    };
                    Atom {
                        coeff,
                        mono: a.mono.pow(k),
                    }
                })
                .collect();
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// ω^k·V.
        pub fn scale_omega(&self, k: i64) -> ValueTuple {
            let w = CycInt::omega_pow(self.order(), k);
            let atoms = self
                .atoms()
                .iter()
                .map(|a| Atom {
                    coeff: a.coeff.mul(&w),
                    mono: a.mono.clone(),
                })
                .collect();
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        pub fn concat(&self, other: &ValueTuple) -> ValueTuple {
            assert_eq!(self.arity(), other.arity());
            assert_eq!(self.order(), other.order());
            let mut atoms = self.atoms().to_vec();
            atoms.extend_from_slice(other.atoms());
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// Appends the constant atom k (k = ±1 in practice).
        pub fn push_int(&self, k: i64) -> ValueTuple {
            let mut atoms = self.atoms().to_vec();
            atoms.push(Atom {
                coeff: CycInt::from_int(self.order(), k),
                mono: Monomial::unit(self.arity()),
            });
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// Appends the constant atom ω^k.
        pub fn push_omega(&self, k: i64) -> ValueTuple {
            let mut atoms = self.atoms().to_vec();
            atoms.push(Atom {
                coeff: CycInt::omega_pow(self.order(), k),
                mono: Monomial::unit(self.arity()),
            });
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// Appends ω^k·x_{i+1}.
        pub fn push_scaled_var(&self, i: usize, k: i64) -> ValueTuple {
            let mut atoms = self.atoms().to_vec();
            atoms.push(Atom {
                coeff: CycInt::omega_pow(self.order(), k),
                mono: Monomial::var(i, self.arity()),
            });
            ValueTuple::new(self.arity(), self.order(), atoms)
        }

        /// The odd-power specialization
        /// (ωV, ω³V, …, ω^{t−1}V, ω, ω³, …, ω^{t/2−1}); t must be a
        /// multiple of 4 and divide the cyclotomic order.
        pub fn x_omega(&self, t: u32) -> Result<ValueTuple> {
            if !t.is_multiple_of(4) {
                return Err(Error::ArityViolation(format!(
                    "the odd-power specialization needs 4 | t, got t={t}"
                )));
            }
            assert!(
                self.order().is_multiple_of(t),
                "t must divide the cyclotomic order"
            );
            let step = (self.order() / t) as i64;
            let mut out = ValueTuple::empty(self.arity(), self.order());
            let mut k = 1i64;
            while k < t as i64 {
                out = out.concat(&self.scale_omega(k * step));
                k += 2;
            }
            let mut k = 1i64;
            while k < t as i64 / 2 {
                out = out.push_omega(k * step);
                k += 2;
            }
            Ok(out)
        }
    }

    fn parse_paren(tok: &str, name: &str) -> Result<u32> {
        let inner = tok
            .strip_prefix(name)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::BadTupleSpec(format!("malformed token {tok:?}")))?;
        inner
            .parse::<u32>()
            .map_err(|e| Error::BadTupleSpec(format!("bad number in {tok:?}: {e}")))
    }

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn lcm(a: u32, b: u32) -> u32 {
        a / gcd(a, b) * b
    }

    /// Parses the tuple spec DSL: `X(n)` introduces base variables, then
    /// `bar`, `twist(t)`, `xomega(t)`, `pow(k)`, `+1`, `+(-1)` compose
    /// left-to-right. The cyclotomic order is the lcm of all twist orders.
    pub fn parse_spec(spec: &str) -> Result<ValueTuple> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::BadTupleSpec("empty tuple spec".into()));
        }
        let mut order = 1u32;
        for tok in &tokens {
            if tok.starts_with("twist(") {
                order = lcm(order, parse_paren(tok, "twist")?);
            } else if tok.starts_with("xomega(") {
                order = lcm(order, parse_paren(tok, "xomega")?);
            }
        }
        let n = parse_paren(tokens[0], "X")? as usize;
        let mut tuple = base(n, order);
        for tok in &tokens[1..] {
            tuple = match *tok {
                "bar" => tuple.with_bars(),
                "+1" => tuple.push_int(1),
                "+(-1)" => tuple.push_int(-1),
                t if t.starts_with("twist(") => tuple.twist(parse_paren(t, "twist")?),
                t if t.starts_with("xomega(") => tuple.x_omega(parse_paren(t, "xomega")?)?,
                t if t.starts_with("pow(") => tuple.pow(parse_paren(t, "pow")? as i32),
                other => return Err(Error::BadTupleSpec(format!("unknown token {other:?}"))),
            };
        }
        Ok(tuple)
    }

    /// Parses `X(n) Y(m)` into two disjoint-variable tuples of ambient
    /// arity n+m, for the hook Schur polynomial.
    pub fn parse_hook_spec(spec: &str) -> Result<(ValueTuple, ValueTuple)> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::BadTupleSpec("hook spec must be 'X(n) Y(m)'".into()));
        }
        let n = parse_paren(tokens[0], "X")? as usize;
        let m = parse_paren(tokens[1], "Y")? as usize;
        Ok((base_range(0, n, n + m, 1), base_range(n, m, n + m, 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partitions_bounded;
    use crate::oracle::{elementary_by_subsets, schur_by_tableaux};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(i: usize, arity: usize) -> LaurentPoly {
        LaurentPoly::var(i, arity, 1)
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(""), &tuples::base(2, 1)), LaurentPoly::one(2, 1));
        // s_{(2)}(x, −x) = x²
        let pm = tuples::base(1, 2).twist(2);
        let got = schur(&p("2"), &pm);
        assert_eq!(got.to_string(), "x1^2");
        // column shapes are elementary symmetric polynomials
        for k in 1..=3usize {
            for n in 1..=3usize {
                let v = tuples::base(n, 1);
                let col = Partition::new(vec![1; k].into_iter().map(|v: i32| v as i64)).unwrap();
                assert_eq!(schur(&col, &v), elementary_by_subsets(k, &v), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn schur_matches_tableau_oracle() {
        for n in 1..=3usize {
            let v = tuples::base(n, 1);
            for lam in partitions_bounded(6, 4) {
                assert_eq!(
                    schur(&lam, &v),
                    schur_by_tableaux(&lam, n, 1),
                    "{lam:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn schur_symmetric_under_variable_swap() {
        let v = tuples::base(3, 1);
        for lam in partitions_bounded(5, 3) {
            let s = schur(&lam, &v);
            assert_eq!(s.permute_vars(&[1, 0, 2]), s);
            assert_eq!(s.permute_vars(&[0, 2, 1]), s);
        }
    }

    #[test]
    fn skew_examples() {
        let v = tuples::base(2, 1);
        assert_eq!(skew_schur(&p("2,1"), &p("2,1"), &v), LaurentPoly::one(2, 1));
        for lam in partitions_bounded(4, 3) {
            assert_eq!(skew_schur(&lam, &p(""), &v), schur(&lam, &v));
        }
        // two free cells in different rows and columns
        let sum = x(0, 2).add(&x(1, 2));
        assert_eq!(skew_schur(&p("2,1"), &p("1"), &v), sum.mul(&sum));
        // vanishing when μ ⊄ λ
        assert!(skew_schur(&p("1,1"), &p("2"), &v).is_zero());
    }

    #[test]
    fn classical_small_values() {
        let x1 = tuples::base(1, 1);
        assert_eq!(symplectic(&p(""), &x1).unwrap(), LaurentPoly::one(1, 1));
        assert_eq!(even_orth(&p(""), &x1), LaurentPoly::one(1, 1));
        assert_eq!(odd_orth(&p(""), &x1), LaurentPoly::one(1, 1));
        let xbar = x(0, 1).invert_var(0);
        assert_eq!(symplectic(&p("1"), &x1).unwrap(), x(0, 1).add(&xbar));
        assert_eq!(even_orth(&p("1"), &x1), x(0, 1).add(&xbar));
        assert_eq!(odd_orth(&p("1"), &x1).to_string(), "x1 + 1 + x1^-1");
        // single-row odd orthogonal at x = 1 counts 2λ₁+1
        let one_var = tuples::base(0, 1).push_int(1);
        for a in 0..=4i64 {
            let lam = Partition::new(vec![a]).unwrap();
            assert_eq!(
                odd_orth(&lam, &one_var).to_scalar().unwrap(),
                CycInt::from_int(1, 2 * a + 1)
            );
        }
    }

    #[test]
    fn padding_is_a_no_op() {
        let v = tuples::base(2, 1);
        for lam in partitions_bounded(5, 3) {
            let n = lam.len().max(1);
            for extra in [1usize, 2] {
                assert_eq!(
                    jt_det(&lam, &v, Form::Plain, n + extra),
                    schur(&lam, &v),
                    "schur {lam:?}"
                );
                let sp_tuple = v.with_bars();
                assert_eq!(
                    jt_det(
                        &lam,
                        &sp_tuple,
                        Form::Mirror { shift: 2, sign: 1 },
                        n + extra
                    )
                    .exact_div_int(2)
                    .unwrap(),
                    symplectic(&lam, &v).unwrap(),
                    "sp {lam:?}"
                );
                assert_eq!(
                    jt_det(
                        &lam,
                        &sp_tuple,
                        Form::Mirror { shift: 0, sign: -1 },
                        n + extra
                    ),
                    even_orth(&lam, &v),
                    "oe {lam:?}"
                );
                assert_eq!(
                    jt_det(&lam, &v, Form::Mirror { shift: 1, sign: 1 }, n + extra),
                    univ_so(&lam, &v),
                    "so {lam:?}"
                );
            }
        }
    }

    #[test]
    fn laurent_symmetry_under_bar() {
        // sp/oo/oe are invariant under x_i ↔ 1/x_i
        for arity in 2..=3usize {
            let v = tuples::base(arity, 1);
            for lam in partitions_bounded(5, arity) {
                let sp = symplectic(&lam, &v).unwrap();
                let oo = odd_orth(&lam, &v);
                let oe = even_orth(&lam, &v);
                for i in 0..arity {
                    assert_eq!(sp.invert_var(i), sp, "sp {lam:?}");
                    assert_eq!(oo.invert_var(i), oo, "oo {lam:?}");
                    assert_eq!(oe.invert_var(i), oe, "oe {lam:?}");
                }
            }
        }
    }

    #[test]
    fn universal_specializes_to_classical() {
        let v = tuples::base(2, 1);
        let vb = v.with_bars();
        let vb1 = vb.push_int(1);
        for lam in partitions_bounded(5, 2) {
            assert_eq!(univ_o(&lam, &vb), even_orth(&lam, &v), "{lam:?}");
            assert_eq!(univ_o(&lam, &vb1), odd_orth(&lam, &v), "{lam:?}");
            assert_eq!(
                univ_sp(&lam, &vb).unwrap(),
                symplectic(&lam, &v).unwrap(),
                "{lam:?}"
            );
            assert_eq!(univ_so(&lam, &vb), odd_orth(&lam, &v), "{lam:?}");
        }
    }

    #[test]
    fn so_minus_sign_relation() {
        // so⁻_λ(X) = (−1)^{|λ|} so_λ(−X); degree by degree the sign variant
        // flips the parts below the top one
        for arity in 1..=2usize {
            let v = tuples::base(arity, 1);
            for lam in partitions_bounded(6, arity) {
                let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    univ_so_minus(&lam, &v),
                    univ_so(&lam, &v.neg()).mul_int(sign),
                    "{lam:?}"
                );
            }
        }
    }

    #[test]
    fn rs_examples() {
        let v1 = tuples::base(1, 1);
        assert_eq!(rs(&p(""), &p(""), &v1), LaurentPoly::one(1, 1));
        // rs_{(1),(1)} vanishes at the single value 1
        let one = tuples::base(0, 1).push_int(1);
        assert!(rs(&p("1"), &p("1"), &one).is_zero());
        assert_eq!(rs(&p("2"), &p(""), &one), LaurentPoly::one(0, 1));
        assert_eq!(rs(&p(""), &p("3"), &one), LaurentPoly::one(0, 1));
    }

    #[test]
    fn rs_matches_composite_schur() {
        // at a self-reciprocal tuple with unit product, rs_{λ,μ} is the
        // Schur polynomial of the composite weight
        use crate::partition::concat_neg;
        for arity in 1..=2usize {
            for extra_one in [false, true] {
                let mut w = tuples::base(arity, 1).with_bars();
                if extra_one {
                    w = w.push_int(1);
                }
                let n = w.len();
                for lam in partitions_bounded(3, 2) {
                    for mu in partitions_bounded(3, 2) {
                        if lam.size() + mu.size() > 6 || lam.len() + mu.len() > n {
                            continue;
                        }
                        let composite = concat_neg(&lam, &mu, n).unwrap();
                        assert_eq!(
                            rs(&lam, &mu, &w),
                            schur(&composite, &w),
                            "λ={lam:?} μ={mu:?} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn branching_rules() {
        // f_λ(X,Y) = Σ_{μ⊆λ} f_μ(X) s_{λ/μ}(Y) for f ∈ {s, o, sp}
        let ambient = 4;
        let x = tuples::base_range(0, 2, ambient, 1);
        let y = tuples::base_range(2, 2, ambient, 1);
        let xy = x.concat(&y);
        for lam in partitions_bounded(5, 3) {
            let mut s_sum = LaurentPoly::zero(ambient, 1);
            let mut o_sum = LaurentPoly::zero(ambient, 1);
            let mut sp_sum = LaurentPoly::zero(ambient, 1);
            for mu in subpartitions(&lam) {
                let skew = skew_schur(&lam, &mu, &y);
                s_sum = s_sum.add(&schur(&mu, &x).mul(&skew));
                o_sum = o_sum.add(&univ_o(&mu, &x).mul(&skew));
                sp_sum = sp_sum.add(&univ_sp(&mu, &x).unwrap().mul(&skew));
            }
            assert_eq!(schur(&lam, &xy), s_sum, "schur split {lam:?}");
            assert_eq!(univ_o(&lam, &xy), o_sum, "o split {lam:?}");
            assert_eq!(univ_sp(&lam, &xy).unwrap(), sp_sum, "sp split {lam:?}");
        }
    }

    #[test]
    fn littlewood_composite_expansion() {
        // s_{(λ,−μ)_n}(X) = (x_1⋯x_n)^{μ_1} Σ_ν (−1)^{|ν|} s_{λ/ν}(X) s_{μ/ν'}(X̄)
        use crate::partition::concat_neg;
        for n in 1..=4usize {
            let v = tuples::base(n, 1);
            let vbar = v.bar();
            for lam in partitions_bounded(3, 2) {
                for mu in partitions_bounded(3, 2) {
                    if lam.size() + mu.size() > 6 || lam.len() + mu.len() > n {
                        continue;
                    }
                    let composite = concat_neg(&lam, &mu, n).unwrap();
                    let det_power = LaurentPoly::from_term(
                        Monomial::new(vec![mu.first() as i32; n]),
                        CycInt::one(1),
                    );
                    let mut sum = LaurentPoly::zero(n, 1);
                    for nu in subpartitions(&lam) {
                        let nc = nu.conjugate();
                        if !mu.contains(&nc) {
                            continue;
                        }
                        let term = skew_schur(&lam, &nu, &v).mul(&skew_schur(&mu, &nc, &vbar));
                        sum = if nu.size() % 2 == 0 {
                            sum.add(&term)
                        } else {
                            sum.sub(&term)
                        };
                    }
                    assert_eq!(
                        schur(&composite, &v),
                        det_power.mul(&sum),
                        "λ={lam:?} μ={mu:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hook_schur_examples() {
        let (x, y) = tuples::parse_hook_spec("X(1) Y(1)").unwrap();
        assert_eq!(hook_schur(&p(""), &x, &y), LaurentPoly::one(2, 1));
        let sum = LaurentPoly::var(0, 2, 1).add(&LaurentPoly::var(1, 2, 1));
        assert_eq!(hook_schur(&p("1"), &x, &y), sum);
    }

    #[test]
    fn hook_schur_cancellation_variable() {
        // substituting x_n = u, y_m = −u leaves no u-dependence: check by
        // evaluating the last x-variable and the last y-variable as a
        // shared base variable with opposite signs, then comparing against
        // the substitution u = 0 (drop both atoms).
        let ambient = 3; // x1, y1, u
        let x_full =
            tuples::base_range(0, 1, ambient, 1).concat(&tuples::base_range(2, 1, ambient, 1));
        let y_full = tuples::base_range(1, 1, ambient, 1)
            .concat(&tuples::base_range(2, 1, ambient, 1).neg());
        let x_cut = tuples::base_range(0, 1, ambient, 1);
        let y_cut = tuples::base_range(1, 1, ambient, 1);
        for lam in partitions_bounded(5, 4) {
            assert_eq!(
                hook_schur(&lam, &x_full, &y_full),
                hook_schur(&lam, &x_cut, &y_cut),
                "{lam:?}"
            );
        }
    }

    #[test]
    fn tuple_builders() {
        let v = tuples::base(1, 1);
        assert_eq!(v.twist(1), v);
        // X_ω at t=4, n=1 is (ιx, −ιx, ι)
        let xo = tuples::base(1, 4).x_omega(4).unwrap();
        assert_eq!(xo.len(), 3);
        let iota = CycInt::omega_pow(4, 1);
        assert_eq!(xo.atoms()[0].coeff, iota);
        assert_eq!(xo.atoms()[1].coeff, iota.neg());
        assert_eq!(xo.atoms()[1].mono, Monomial::var(0, 1));
        assert_eq!(xo.atoms()[2].coeff, iota);
        assert!(xo.atoms()[2].mono.is_unit());
    }

    #[test]
    fn x_omega_pairs_into_z_blocks() {
        // (X_ω, X̄_ω) equals (Z, ω²Z, …, ω^{t−2}Z) with Z = (ωX, ωX̄, ω)
        for (t, n) in [(4u32, 1usize), (4, 2), (8, 1), (8, 2)] {
            let x = tuples::base(n, t);
            let xo = x.x_omega(t).unwrap();
            let lhs = xo.concat(&xo.bar());
            let z = x
                .scale_omega(1)
                .concat(&x.bar().scale_omega(1))
                .push_omega(1);
            let mut rhs = ValueTuple::empty(n, t);
            let mut k = 0i64;
            while k <= t as i64 - 2 {
                rhs = rhs.concat(&z.scale_omega(k));
                k += 2;
            }
            assert!(lhs.same_multiset(&rhs), "t={t} n={n}");
        }
    }

    #[test]
    fn dsl_parsing() {
        let got = compute_character("schur", "2", "X(1) twist(2)").unwrap();
        assert_eq!(got.to_string(), "x1^2");
        let got = compute_character("sp", "", "X(2)").unwrap();
        assert_eq!(got.to_string(), "1");
        let got = compute_character("so-odd", "1", "X(1)").unwrap();
        assert_eq!(got.to_string(), "x1 + 1 + x1^-1");
        assert!(compute_character("nope", "1", "X(1)").is_err());
        assert!(compute_character("schur", "1", "bar").is_err());
        assert!(tuples::parse_spec("X(1) twist(x)").is_err());
    }
}
