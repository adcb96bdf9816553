use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use uqf::analytic::{asymptotic_report, class_number, kronecker_chi, l_values};
use uqf::indecomp::{enumerate_s0, is_indecomposable_fast, m_d, m_star};
use uqf::universal::{
    construct_universal_form, decompose_indecomposables, four_square_big, represent, witness_via_construction,
    UnitPoly,
};
use uqf::{CFExpansion, Error, FieldCtx, QuadInt};

fn to_py(e: Error) -> PyErr {
    if e.is_verification_failure() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// `a + b·ω` in the ring of integers of a field.
#[pyclass(name = "Elem", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyElem(QuadInt);

#[pymethods]
impl PyElem {
    #[new]
    fn new(field: &PyField, a: BigInt, b: BigInt) -> Self {
        PyElem(QuadInt::new(field.ctx, a, b))
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.0.a().clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.0.b().clone()
    }

    #[getter]
    fn d(&self) -> i64 {
        self.0.ctx().d()
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    fn trace(&self) -> BigInt {
        self.0.trace()
    }

    fn conj(&self) -> Self {
        PyElem(self.0.conj())
    }

    fn is_totally_positive(&self) -> bool {
        self.0.is_totally_positive()
    }

    fn embeddings(&self) -> ((f64, f64), (f64, f64)) {
        let (e1, e2) = self.0.embed_intervals();
        ((e1.lo, e1.hi), (e2.lo, e2.hi))
    }

    fn __add__(&self, o: &PyElem) -> PyResult<Self> {
        self.0.checked_add(&o.0).map(PyElem).map_err(to_py)
    }

    fn __sub__(&self, o: &PyElem) -> PyResult<Self> {
        self.0.checked_sub(&o.0).map(PyElem).map_err(to_py)
    }

    fn __mul__(&self, o: &PyElem) -> PyResult<Self> {
        self.0.checked_mul(&o.0).map(PyElem).map_err(to_py)
    }

    fn __neg__(&self) -> Self {
        PyElem(-&self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Elem(D={}, {})", self.0.ctx().d(), self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0)
    }
}

fn elems(v: impl IntoIterator<Item = QuadInt>) -> Vec<PyElem> {
    v.into_iter().map(PyElem).collect()
}

/// The field `Q(√D)` together with its continued fraction data.
#[pyclass(name = "Field", frozen)]
struct PyField {
    ctx: FieldCtx,
    cf: CFExpansion,
}

impl PyField {
    fn check(&self, x: &PyElem) -> PyResult<()> {
        if x.0.ctx() != self.ctx {
            return Err(to_py(Error::ContextMismatch(self.ctx.d(), x.0.ctx().d())));
        }
        Ok(())
    }
}

#[pymethods]
impl PyField {
    #[new]
    fn new(d: i64) -> PyResult<Self> {
        let ctx = FieldCtx::new(d).map_err(to_py)?;
        Ok(PyField { ctx, cf: CFExpansion::expand(ctx) })
    }

    #[getter]
    fn d(&self) -> i64 {
        self.ctx.d()
    }

    #[getter]
    fn delta(&self) -> i64 {
        self.ctx.delta()
    }

    #[getter]
    fn u0(&self) -> i64 {
        self.cf.u0()
    }

    #[getter]
    fn period(&self) -> Vec<i64> {
        self.cf.period().to_vec()
    }

    #[getter]
    fn s(&self) -> usize {
        self.cf.s()
    }

    #[getter]
    fn sum_u(&self) -> i64 {
        self.cf.sum_u()
    }

    #[getter]
    fn m_d(&self) -> i64 {
        m_d(&self.cf)
    }

    #[getter]
    fn eps0(&self) -> PyElem {
        PyElem(self.cf.eps0().clone())
    }

    #[getter]
    fn eps(&self) -> PyElem {
        PyElem(self.cf.eps().clone())
    }

    fn elem(&self, a: BigInt, b: BigInt) -> PyElem {
        PyElem(QuadInt::new(self.ctx, a, b))
    }

    fn alpha(&self, i: i64) -> PyResult<PyElem> {
        Ok(PyElem(self.cf.convergent(i).map_err(to_py)?.alpha.clone()))
    }

    fn check_invariants(&self) -> PyResult<()> {
        self.cf.check_invariants().map_err(to_py)
    }

    /// The window `S_0` of indecomposables.
    fn indecomposables(&self) -> PyResult<Vec<PyElem>> {
        let w = enumerate_s0(&self.cf).map_err(to_py)?;
        Ok(elems(w.values().cloned()))
    }

    fn is_indecomposable(&self, x: &PyElem) -> PyResult<bool> {
        self.check(x)?;
        is_indecomposable_fast(&self.cf, &x.0).map_err(to_py)
    }

    /// `(M*_a, M*_b)` for the exponent parameter `p/q`.
    fn m_star(&self, p: i64, q: i64) -> PyResult<(i64, i64)> {
        if q <= 0 {
            return Err(PyValueError::new_err("q must be positive"));
        }
        let m = m_star(&self.cf, Ratio::new(p, q)).map_err(to_py)?;
        Ok((m.a, m.b))
    }

    /// Coefficients of the constructed diagonal universal form.
    fn universal_form(&self) -> PyResult<Vec<PyElem>> {
        let f = construct_universal_form(&self.cf).map_err(to_py)?;
        Ok(elems(f.coeffs().iter().cloned()))
    }

    fn decompose(&self, x: &PyElem) -> PyResult<Vec<PyElem>> {
        self.check(x)?;
        decompose_indecomposables(&self.cf, &x.0).map(elems).map_err(to_py)
    }

    /// Values of the form's variables from the constructive pipeline.
    fn witness(&self, x: &PyElem) -> PyResult<Vec<PyElem>> {
        self.check(x)?;
        witness_via_construction(&self.cf, &x.0).map(elems).map_err(to_py)
    }

    /// Exhaustive search with the constructed form; `None` proves absence.
    fn represent(&self, x: &PyElem) -> PyResult<Option<Vec<PyElem>>> {
        self.check(x)?;
        let f = construct_universal_form(&self.cf).map_err(to_py)?;
        Ok(represent(self.ctx, &f, &x.0).map_err(to_py)?.map(elems))
    }

    /// `Σ e_k ε^k` for `terms = [(k, e_k), …]`.
    fn unit_poly(&self, terms: Vec<(i64, u64)>) -> PyElem {
        PyElem(UnitPoly::from_terms(terms).eval(&self.cf))
    }

    fn class_number(&self) -> PyResult<u64> {
        class_number(self.ctx, &self.cf).map_err(to_py)
    }

    /// The full L-value report as JSON.
    #[pyo3(signature = (cutoff = 100_000))]
    fn l_report(&self, cutoff: u64) -> PyResult<String> {
        json(&asymptotic_report(self.ctx, &self.cf, cutoff).map_err(to_py)?)
    }

    fn __repr__(&self) -> String {
        format!("Field(D={})", self.ctx.d())
    }
}

/// `(x₁, x₂, x₃, x₄)` with `n = Σ x_j²`.
#[pyfunction]
fn four_square(n: BigUint) -> (BigUint, BigUint, BigUint, BigUint) {
    let [a, b, c, d] = four_square_big(&n);
    (a, b, c, d)
}

#[pyfunction]
fn kronecker(delta: i64, n: u64) -> PyResult<i8> {
    kronecker_chi(delta, n).map_err(to_py)
}

/// `((mid, rad), (mid, rad))` for `L(1, χ)` and `L'(1, χ)`.
#[pyfunction]
#[pyo3(signature = (delta, cutoff = 100_000))]
fn lvalues(delta: i64, cutoff: u64) -> PyResult<((f64, f64), (f64, f64))> {
    let v = l_values(delta, cutoff).map_err(to_py)?;
    Ok(((v.l1.mid, v.l1.rad), (v.l1_prime.mid, v.l1_prime.rad)))
}

#[pymodule]
fn pyuqf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyElem>()?;
    m.add_function(wrap_pyfunction!(four_square, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(lvalues, m)?)?;
    Ok(())
}
