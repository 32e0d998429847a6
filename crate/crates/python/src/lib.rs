use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use superplactic::exactmath::{default_q, format_rational, parse_rational, Rational};
use superplactic::freealg::{self, Specialization};
use superplactic::heckerep::{self, HeckeElement as CoreHecke, Permutation};
use superplactic::plactic::{self, RelationSet};
use superplactic::report;
use superplactic::shapes::{self, Alphabet, SignedWord, Ssyt};
use superplactic::symfunc::{self, CharacterPoly};

fn err(e: superplactic::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<shapes::Partition> {
    shapes::Partition::new(parts).map_err(err)
}

fn word(s: &str) -> PyResult<SignedWord> {
    s.parse().map_err(err)
}

fn q_value(q: Option<&str>) -> PyResult<Rational> {
    match q {
        Some(s) => parse_rational(s).map_err(err),
        None => Ok(default_q()),
    }
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializes")
}

/// Super semistandard Young tableau.
#[pyclass(name = "Tableau", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Tableau(Ssyt);

#[pymethods]
impl Tableau {
    /// Parses `"1,1'/1'"` or the JSON form.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Tableau).map_err(err)
    }

    #[staticmethod]
    fn from_rows(rows: Vec<Vec<String>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|a| a.parse().map_err(err)).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        Ssyt::new(rows).map(Tableau).map_err(err)
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().parts().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<String>> {
        self.0.rows().iter().map(|r| r.iter().map(|a| a.to_string()).collect()).collect()
    }

    fn reading_word(&self) -> String {
        self.0.reading_word().to_string()
    }

    fn weight(&self, m: usize, n: usize) -> Vec<u32> {
        self.0.weight(Alphabet::new(m, n))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tableau(\"{}\")", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Element of the Hecke algebra `H_r(q)`.
#[pyclass(name = "HeckeElement", frozen, skip_from_py_object)]
#[derive(Clone)]
struct HeckeElement(CoreHecke);

#[pymethods]
impl HeckeElement {
    #[staticmethod]
    fn basis(one_line: Vec<usize>) -> PyResult<Self> {
        Ok(Self(CoreHecke::basis(Permutation::new(one_line).map_err(err)?)))
    }

    #[staticmethod]
    fn one(r: usize) -> Self {
        Self(CoreHecke::one(r))
    }

    #[staticmethod]
    fn eulerian_idempotent_q() -> Self {
        Self(heckerep::eulerian_idempotent_q())
    }

    #[staticmethod]
    fn omega() -> Self {
        Self(heckerep::omega())
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    /// `[(one_line, coefficient)]` at `q = q0`.
    fn specialize(&self, q: &str) -> PyResult<Vec<(Vec<usize>, String)>> {
        let q0 = parse_rational(q).map_err(err)?;
        let s = self.0.specialize(&q0).map_err(err)?;
        Ok(s.terms().map(|(w, c)| (w.one_line().to_vec(), format_rational(c))).collect())
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        heckerep::hecke_mul(&self.0, &other.0).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn conjugate(shape: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(partition(shape)?.conjugate().parts().to_vec())
}

#[pyfunction]
fn in_hook(shape: Vec<usize>, m: usize, n: usize) -> PyResult<bool> {
    Ok(shapes::in_hook(&partition(shape)?, m, n))
}

#[pyfunction]
fn hook_partitions(m: usize, n: usize, r: usize) -> Vec<Vec<usize>> {
    shapes::hook_partitions(m, n, r).iter().map(|p| p.parts().to_vec()).collect()
}

#[pyfunction]
fn count_ssyt(shape: Vec<usize>, m: usize, n: usize) -> PyResult<usize> {
    Ok(shapes::count_ssyt(&partition(shape)?, m, n))
}

#[pyfunction]
fn enumerate_ssyt(shape: Vec<usize>, m: usize, n: usize) -> PyResult<Vec<Tableau>> {
    Ok(shapes::enumerate_ssyt(&partition(shape)?, m, n).into_iter().map(Tableau).collect())
}

#[pyfunction]
fn count_standard(shape: Vec<usize>) -> PyResult<u128> {
    Ok(shapes::count_standard(&partition(shape)?))
}

fn character_terms(c: &CharacterPoly) -> Vec<(Vec<u32>, String)> {
    c.poly.terms().map(|(e, x)| (e.to_vec(), format_rational(x))).collect()
}

/// Schur polynomial in `m` variables as `[(exponents, coefficient)]`.
#[pyfunction]
fn schur(shape: Vec<usize>, m: usize) -> PyResult<Vec<(Vec<u32>, String)>> {
    Ok(character_terms(&symfunc::schur(&partition(shape)?, m)))
}

/// Hook Schur polynomial; `route` is `"ssyt"` or `"factorized"`.
#[pyfunction]
#[pyo3(signature = (shape, m, n, route = "ssyt"))]
fn hook_schur(shape: Vec<usize>, m: usize, n: usize, route: &str) -> PyResult<Vec<(Vec<u32>, String)>> {
    let lambda = partition(shape)?;
    let c = match route {
        "ssyt" => symfunc::hook_schur_ssyt(&lambda, m, n),
        "factorized" => symfunc::hook_schur_factorized(&lambda, m, n),
        other => return Err(PyValueError::new_err(format!("unknown route {other:?}"))),
    };
    Ok(character_terms(&c))
}

#[pyfunction]
fn schur_identity_holds(m: usize, max_degree: u32) -> bool {
    symfunc::schur_identity_check(m, max_degree).equal
}

#[pyfunction]
fn hook_identity_holds(m: usize, n: usize, max_degree: u32) -> bool {
    symfunc::hook_identity_check(m, n, max_degree).equal
}

#[pyfunction]
fn insertion_tableau(w: &str) -> PyResult<Tableau> {
    Ok(Tableau(plactic::insertion_tableau(&word(w)?)))
}

/// `(sign, tableau)` for the super-plactic class of a word.
#[pyfunction]
fn normal_form(w: &str) -> PyResult<(i8, Tableau)> {
    let nf = plactic::normal_form(&word(w)?).map_err(err)?;
    Ok((nf.sign, Tableau(nf.tableau)))
}

#[pyfunction]
fn plactic_product(left: &Tableau, right: &Tableau, m: usize, n: usize) -> PyResult<(i8, Tableau)> {
    let nf = plactic::plactic_product(&left.0, &right.0, Alphabet::new(m, n)).map_err(err)?;
    Ok((nf.sign, Tableau(nf.tableau)))
}

#[pyfunction]
fn knuth_neighbors(w: &str) -> PyResult<Vec<(String, i8)>> {
    Ok(plactic::knuth_neighbors(&word(w)?).into_iter().map(|(v, s)| (v.to_string(), s)).collect())
}

/// JSON class report for words of length `r`.
#[pyfunction]
fn verify_class_bijection(m: usize, n: usize, r: usize) -> PyResult<String> {
    Ok(plactic::verify_class_bijection_with(m, n, r, RelationSet::Super).map_err(err)?.to_json().to_string())
}

#[pyfunction]
fn hilbert_series(m: usize, n: usize, cap: usize) -> Vec<u64> {
    freealg::hilbert_series(m, n, cap).0
}

/// Quotient dimension in degree `r`; classical when `q` is omitted.
#[pyfunction]
#[pyo3(signature = (m, n, r, q = None))]
fn quotient_dim(m: usize, n: usize, r: usize, q: Option<&str>) -> PyResult<usize> {
    let spec = match q {
        None => Specialization::Classical,
        Some(s) => Specialization::At(parse_rational(s).map_err(err)?),
    };
    freealg::quotient_dim(m, n, r, &spec).map_err(err)
}

/// `[(family, tableau, element_json)]`.
#[pyfunction]
fn gamma_elements(m: usize, n: usize) -> Vec<(u8, Tableau, String)> {
    freealg::gamma_elements(m, n)
        .into_iter()
        .map(|g| (g.family, Tableau(g.tableau), g.element.to_json().to_string()))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (m, n, q = None))]
fn idempotent_image(m: usize, n: usize, q: Option<&str>) -> PyResult<String> {
    Ok(json(&heckerep::idempotent_image(m, n, &q_value(q)?).map_err(err)?))
}

#[pyfunction]
fn verify_ybe(m: usize, n: usize) -> PyResult<String> {
    Ok(json(&heckerep::verify_ybe_hecke(m, n).map_err(err)?))
}

#[pyfunction]
fn verify_gl_relations(m: usize, n: usize) -> PyResult<String> {
    Ok(json(&heckerep::verify_gl_relations(m, n).map_err(err)?))
}

#[pyfunction]
fn verify_commutant(m: usize, n: usize, r: usize) -> PyResult<String> {
    Ok(json(&heckerep::verify_commutant(m, n, r).map_err(err)?))
}

/// Full verification report as JSON.
#[pyfunction]
#[pyo3(signature = (m, n, max_degree = 4, q = None))]
fn report_all(m: usize, n: usize, max_degree: usize, q: Option<&str>) -> PyResult<String> {
    let rep = report::report_all(m, n, max_degree, &q_value(q)?, RelationSet::Super).map_err(err)?;
    Ok(rep.to_json().to_string())
}

#[pymodule]
fn superplactic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tableau>()?;
    m.add_class::<HeckeElement>()?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(in_hook, m)?)?;
    m.add_function(wrap_pyfunction!(hook_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(count_standard, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(hook_schur, m)?)?;
    m.add_function(wrap_pyfunction!(schur_identity_holds, m)?)?;
    m.add_function(wrap_pyfunction!(hook_identity_holds, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(plactic_product, m)?)?;
    m.add_function(wrap_pyfunction!(knuth_neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(verify_class_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_dim, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_elements, m)?)?;
    m.add_function(wrap_pyfunction!(idempotent_image, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ybe, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gl_relations, m)?)?;
    m.add_function(wrap_pyfunction!(verify_commutant, m)?)?;
    m.add_function(wrap_pyfunction!(report_all, m)?)?;
    Ok(())
}
