//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! on the way out; on the way in anything whose `str()` is an integer,
//! `p/q` or a decimal is accepted. Vertex indices are 1-based.

use gvpoly::arrangements::{self, build_arrangement, enumerate_regions, union_homotopy, SubspaceArrangement};
use gvpoly::cohomology::{betti, cohomology_ring, poincare_check, sr_quotient_dims, top_products};
use gvpoly::complexes::{self, cell_vector, fmt_face, generic_vector, Fan, Mode};
use gvpoly::exact::poly::{monomial_key, var_names};
use gvpoly::exact::scalar::{int, parse};
use gvpoly::exact::{MultiPoly, Scalar, Vector};
use gvpoly::fixtures;
use gvpoly::virtualpoly::{chain_volume, integrate, virtual_chain, volume_polynomial};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    parse(&obj.str()?.to_string()).map_err(value_error)
}

fn vector(objs: &[Bound<'_, PyAny>]) -> PyResult<Vector> {
    objs.iter().map(scalar).collect()
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((x.to_string(),))
}

fn fractions<'py>(py: Python<'py>, v: &[Scalar]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|x| fraction(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn one_based(f: &[usize]) -> Vec<usize> {
    f.iter().map(|v| v + 1).collect()
}

/// A simplicial sphere with a characteristic map.
#[pyclass(name = "CharacteristicPair", frozen)]
struct PyPair {
    inner: complexes::CharacteristicPair,
}

#[pymethods]
impl PyPair {
    /// Pair from a complete simplicial fan; `cones` are 1-based and
    /// `lambda` defaults to the rays.
    #[staticmethod]
    #[pyo3(signature = (dim, rays, cones, lambda_=None, mode="integer"))]
    fn from_fan(
        dim: usize,
        rays: Vec<Vec<i64>>,
        cones: Vec<Vec<usize>>,
        lambda_: Option<Vec<Vec<Bound<'_, PyAny>>>>,
        mode: &str,
    ) -> PyResult<Self> {
        let mode = match mode {
            "integer" => Mode::Integer,
            "real" => Mode::Real,
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        };
        let rays = rays.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let mut zero_based = Vec::with_capacity(cones.len());
        for c in cones {
            if c.contains(&0) {
                return Err(PyValueError::new_err("cone indices are 1-based"));
            }
            zero_based.push(c.into_iter().map(|v| v - 1).collect());
        }
        let fan = Fan::new(dim, rays, zero_based).map_err(value_error)?;
        let lambda = lambda_.map(|rows| rows.iter().map(|r| vector(r)).collect::<PyResult<Vec<_>>>()).transpose()?;
        let inner = complexes::CharacteristicPair::from_fan(fan, lambda, mode).map_err(value_error)?;
        Ok(PyPair { inner })
    }

    /// One of the built-in examples; see `fixture_names()`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::all()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, inner)| PyPair { inner })
            .ok_or_else(|| PyValueError::new_err(format!("no fixture named {name:?}")))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets().iter().map(|f| one_based(f)).collect()
    }

    /// Coefficients keyed like `"h1h2"` or `"h3^2"`.
    fn volume_polynomial<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let vol = volume_polynomial(&self.inner).map_err(value_error)?;
        let out = PyDict::new(py);
        for (m, c) in vol.terms() {
            out.set_item(monomial_key(m, vol.vars()), fraction(py, c)?)?;
        }
        Ok(out)
    }

    fn volume_polynomial_str(&self) -> PyResult<String> {
        Ok(volume_polynomial(&self.inner).map_err(value_error)?.to_string())
    }

    /// Weighted bounded regions for the support numbers `h`.
    fn chain<'py>(&self, py: Python<'py>, h: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyList>> {
        let c = virtual_chain(&self.inner, &vector(&h)?).map_err(value_error)?;
        let out = PyList::empty(py);
        for (region, weight) in &c.regions {
            let d = PyDict::new(py);
            d.set_item("signs", region.sign_string())?;
            d.set_item("weight", weight)?;
            match &region.volume {
                Some(v) => d.set_item("volume", fraction(py, v)?)?,
                None => d.set_item("volume", py.None())?,
            }
            d.set_item("witness", fractions(py, &region.witness)?)?;
            out.append(d)?;
        }
        Ok(out)
    }

    fn chain_volume<'py>(&self, py: Python<'py>, h: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        let c = virtual_chain(&self.inner, &vector(&h)?).map_err(value_error)?;
        fraction(py, &chain_volume(&c))
    }

    /// Volume polynomial evaluated at `h`.
    fn volume<'py>(&self, py: Python<'py>, h: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        let vol = volume_polynomial(&self.inner).map_err(value_error)?;
        fraction(py, &vol.eval(&vector(&h)?).map_err(value_error)?)
    }

    /// Integral of the polynomial `q` in `x1..xn` over the virtual polytope.
    fn integrate<'py>(&self, py: Python<'py>, q: &str, h: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        let q = MultiPoly::parse(q, var_names("x", self.inner.dim())).map_err(value_error)?;
        let c = virtual_chain(&self.inner, &vector(&h)?).map_err(value_error)?;
        fraction(py, &integrate(&q, &c).map_err(value_error)?)
    }

    /// Graded dimensions of the Macaulay algebra of the volume polynomial.
    fn betti(&self) -> PyResult<Vec<usize>> {
        Ok(betti(&cohomology_ring(&self.inner).map_err(value_error)?))
    }

    fn sr_dims(&self) -> PyResult<Vec<usize>> {
        sr_quotient_dims(&self.inner).map_err(value_error)
    }

    /// Cells per dimension for a generic vector, or `None` without a fan.
    fn cell_vector(&self) -> PyResult<Option<Vec<usize>>> {
        let Some(fan) = self.inner.fan() else { return Ok(None) };
        let v = generic_vector(fan).map_err(value_error)?;
        cell_vector(fan, &v).map(Some).map_err(value_error)
    }

    /// `ε(∂_I)` for every n-subset, keyed like `"{1,2}"`.
    fn top_products<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (subset, value) in top_products(&self.inner).map_err(value_error)? {
            out.set_item(fmt_face(&subset), fraction(py, &value)?)?;
        }
        Ok(out)
    }

    fn poincare_duality(&self) -> PyResult<bool> {
        Ok(poincare_check(&cohomology_ring(&self.inner).map_err(value_error)?).is_ok())
    }

    /// The hyperplane arrangement `ℓ_i(x) = h_i`.
    fn arrangement(&self, h: Vec<Bound<'_, PyAny>>) -> PyResult<PyArrangement> {
        let inner = build_arrangement(&self.inner, &vector(&h)?).map_err(value_error)?;
        Ok(PyArrangement { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacteristicPair(dim={}, vertices={}, facets={})",
            self.inner.dim(),
            self.inner.vertex_count(),
            self.inner.facets().len()
        )
    }
}

/// An arrangement of affine hyperplanes `normal · x = offset`.
#[pyclass(name = "Arrangement", frozen)]
struct PyArrangement {
    inner: SubspaceArrangement,
}

#[pymethods]
impl PyArrangement {
    #[new]
    fn new(dim: usize, hyperplanes: Vec<(Vec<Bound<'_, PyAny>>, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let forms = hyperplanes.iter().map(|(a, b)| Ok((vector(a)?, scalar(b)?))).collect::<PyResult<Vec<_>>>()?;
        let inner = SubspaceArrangement::hyperplanes(dim, forms).map_err(value_error)?;
        Ok(PyArrangement { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Regions as dicts with `signs`, `bounded` and `volume`.
    fn regions<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let out = PyList::empty(py);
        for r in enumerate_regions(&self.inner).map_err(value_error)? {
            let d = PyDict::new(py);
            d.set_item("signs", r.sign_string())?;
            d.set_item("bounded", r.bounded)?;
            match &r.volume {
                Some(v) => d.set_item("volume", fraction(py, v)?)?,
                None => d.set_item("volume", py.None())?,
            }
            out.append(d)?;
        }
        Ok(out)
    }

    fn union_homotopy<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let u = union_homotopy(&self.inner).map_err(value_error)?;
        let d = PyDict::new(py);
        d.set_item("nondegenerate", u.nondegenerate)?;
        d.set_item("wedge_dim", u.wedge_dim)?;
        d.set_item("sphere_count", u.sphere_count)?;
        d.set_item("homology_ranks", u.homology_ranks)?;
        d.set_item("region_count", u.region_count)?;
        Ok(d)
    }

    /// Facets of the nerve, 1-based.
    fn nerve(&self) -> Vec<Vec<usize>> {
        arrangements::nerve(&self.inner).facets().iter().map(|f| one_based(f)).collect()
    }

    /// Whether every nonempty intersection here is nonempty in `other`.
    fn dominates(&self, other: &PyArrangement) -> PyResult<bool> {
        arrangements::dominates(&arrangements::nerve(&self.inner), &arrangements::nerve(&other.inner))
            .map_err(value_error)
    }
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::all().into_iter().map(|(n, _)| n).collect()
}

#[pymodule]
fn pygvpoly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPair>()?;
    m.add_class::<PyArrangement>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    Ok(())
}
