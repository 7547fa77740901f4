//! Python bindings: partitions with their core/quotient combinatorics,
//! character evaluation through the tuple-spec DSL, and the identity
//! verification registry.

use charfact::characters::compute_character;
use charfact::factorizations::{self, Family, Params, SweepBounds, TheoremId};
use charfact::partition as part;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::str::FromStr;

fn to_py_err(e: charfact::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An integer partition in canonical form (no trailing zeros).
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Partition {
    inner: part::Partition,
}

#[pymethods]
impl Partition {
    /// Accepts a comma-separated string like "5,2,2,1,1" or a list of
    /// parts.
    #[new]
    fn new(parts: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(s) = parts.extract::<String>() {
            s.parse().map_err(to_py_err)?
        } else {
            let v: Vec<i64> = parts.extract()?;
            part::Partition::new(v).map_err(to_py_err)?
        };
        Ok(Partition { inner })
    }

    fn __repr__(&self) -> String {
        format!("Partition(\"{}\")", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Partition) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn size(&self) -> u64 {
        self.inner.size()
    }

    fn conjugate(&self) -> Partition {
        Partition {
            inner: self.inner.conjugate(),
        }
    }

    fn is_self_conjugate(&self) -> bool {
        self.inner.is_self_conjugate()
    }

    /// Frobenius coordinates as a pair of strict partitions (alpha, beta).
    fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let f = self.inner.frobenius();
        (f.alpha, f.beta)
    }

    fn beta_set(&self, m: usize) -> PyResult<Vec<u64>> {
        Ok(self.inner.beta_set(m).map_err(to_py_err)?.entries)
    }

    fn residue_counts(&self, m: usize, t: u32) -> PyResult<Vec<usize>> {
        self.inner.residue_counts(m, t).map_err(to_py_err)
    }

    /// Sign of the permutation sorting the beta-set into residue classes.
    #[pyo3(signature = (m, t, order=None))]
    fn sigma_sign(&self, m: usize, t: u32, order: Option<Vec<u32>>) -> PyResult<i32> {
        self.inner
            .sigma_sign(m, t, order.as_deref())
            .map_err(to_py_err)
    }

    fn t_core(&self, t: u32) -> Partition {
        Partition {
            inner: self.inner.t_core(t),
        }
    }

    #[pyo3(signature = (t, m=None))]
    fn t_quotient(&self, t: u32, m: Option<usize>) -> PyResult<Vec<Partition>> {
        let m = m.unwrap_or_else(|| self.inner.default_beta_len(t));
        Ok(self
            .inner
            .t_quotient(t, m)
            .map_err(to_py_err)?
            .into_iter()
            .map(|q| Partition { inner: q })
            .collect())
    }

    fn is_t_core(&self, t: u32) -> bool {
        self.inner.is_t_core(t)
    }

    fn is_symplectic_core(&self, t: u32) -> bool {
        part::is_symplectic_core(&self.inner, t)
    }

    fn is_orthogonal_core(&self, t: u32) -> bool {
        part::is_orthogonal_core(&self.inner, t)
    }

    /// The dual weight for GL_n.
    fn dual(&self, n: usize) -> PyResult<Partition> {
        Ok(Partition {
            inner: self.inner.dual(n).map_err(to_py_err)?,
        })
    }
}

/// Rebuilds a partition from a t-core and a t-quotient.
#[pyfunction]
fn littlewood_inverse(core: &Partition, quotient: Vec<Partition>, t: u32) -> PyResult<Partition> {
    let quo: Vec<part::Partition> = quotient.into_iter().map(|q| q.inner).collect();
    Ok(Partition {
        inner: part::littlewood_inverse(&core.inner, &quo, t).map_err(to_py_err)?,
    })
}

/// The composite partition (lambda, -mu)_n.
#[pyfunction]
fn concat_neg(lambda: &Partition, mu: &Partition, n: usize) -> PyResult<Partition> {
    Ok(Partition {
        inner: part::concat_neg(&lambda.inner, &mu.inner, n).map_err(to_py_err)?,
    })
}

/// The staircase (n, n-1, ..., 1).
#[pyfunction]
fn staircase(n: usize) -> Partition {
    Partition {
        inner: part::staircase(n),
    }
}

/// Evaluates a character at a tuple-spec specialization and returns the
/// canonical polynomial rendering. Kinds: schur, skew, sp, so-odd, o-even,
/// univ-o, univ-sp, univ-so, univ-so-minus, rs, hook.
#[pyfunction]
fn character(kind: &str, lambda: &str, spec: &str) -> PyResult<String> {
    Ok(compute_character(kind, lambda, spec)
        .map_err(to_py_err)?
        .to_string())
}

#[allow(clippy::too_many_arguments)]
fn build_params(
    lambda: Option<&str>,
    mu: Option<&str>,
    t: Option<u32>,
    n: Option<usize>,
    m: Option<usize>,
    p: Option<u32>,
    q: Option<u32>,
    r: Option<i64>,
    arity: Option<usize>,
    arity2: Option<usize>,
    family: Option<&str>,
) -> PyResult<Params> {
    Ok(Params {
        lambda: lambda.map(|s| s.parse().map_err(to_py_err)).transpose()?,
        mu: mu.map(|s| s.parse().map_err(to_py_err)).transpose()?,
        t,
        n,
        m,
        p,
        q,
        r,
        arity,
        arity2,
        family: family
            .map(|f| Family::from_str(f).map_err(to_py_err))
            .transpose()?,
    })
}

/// Verifies one identity instance; returns a dict with the verdict, both
/// sides rendered, and the sign data.
#[pyfunction]
#[pyo3(signature = (theorem, *, lambda=None, mu=None, t=None, n=None, m=None, p=None, q=None, r=None, arity=None, arity2=None, family=None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    theorem: &str,
    lambda: Option<&str>,
    mu: Option<&str>,
    t: Option<u32>,
    n: Option<usize>,
    m: Option<usize>,
    p: Option<u32>,
    q: Option<u32>,
    r: Option<i64>,
    arity: Option<usize>,
    arity2: Option<usize>,
    family: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let id: TheoremId = theorem.parse().map_err(to_py_err)?;
    let params = build_params(lambda, mu, t, n, m, p, q, r, arity, arity2, family)?;
    let report = factorizations::verify(id, &params).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("theorem", id.name())?;
    out.set_item("verdict", format!("{:?}", report.verdict))?;
    out.set_item("applicable", report.applicable)?;
    out.set_item("lhs", &report.lhs)?;
    out.set_item("rhs", &report.rhs)?;
    out.set_item("epsilon", report.epsilon)?;
    out.set_item("sigma_sign", report.sigma_sign)?;
    out.set_item(
        "params",
        serde_json::to_string(&report.params).unwrap_or_default(),
    )?;
    Ok(out)
}

/// Sweeps all in-bounds instances of an identity; returns the aggregate
/// counts. `bounds` uses the CLI syntax, e.g. "size<=8;t=2,3,4;n=1".
#[pyfunction]
fn sweep<'py>(py: Python<'py>, theorem: &str, bounds: &str) -> PyResult<Bound<'py, PyDict>> {
    let id: TheoremId = theorem.parse().map_err(to_py_err)?;
    let bounds: SweepBounds = bounds.parse().map_err(to_py_err)?;
    let reports = factorizations::sweep(id, &bounds).map_err(to_py_err)?;
    let summary = factorizations::summarize(&reports);
    let out = PyDict::new(py);
    out.set_item("theorem", id.name())?;
    out.set_item("total", summary.total)?;
    out.set_item("matches", summary.matches)?;
    out.set_item("both_zero", summary.both_zero)?;
    out.set_item("not_applicable", summary.not_applicable)?;
    out.set_item("mismatches", summary.mismatches)?;
    Ok(out)
}

/// All registered identity names.
#[pyfunction]
fn theorems() -> Vec<&'static str> {
    factorizations::ALL_THEOREMS
        .iter()
        .map(|t| t.name())
        .collect()
}

#[pymodule]
fn charfact_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_function(wrap_pyfunction!(littlewood_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(concat_neg, m)?)?;
    m.add_function(wrap_pyfunction!(staircase, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    Ok(())
}
