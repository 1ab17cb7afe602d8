//! Python bindings for `gsur`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gsur::constructions::{construct as rs_construct, Method};
use gsur::gabriel;
use gsur::instances::{self, NamedInstance, Provenance};
use gsur::io::{InstanceDoc, SolutionDoc};
use gsur::model::first_uncovered;
use gsur::random_sim::{self, Model, Stat};
use gsur::solver::{self, CandidateSet, SetCoverInstance};
use gsur::{BicoloringFamily, Color, PointSet, Range};

create_exception!(gsur_py, GsurError, PyValueError);

fn err(e: gsur::Error) -> PyErr {
    GsurError::new_err(e.to_string())
}

/// A point set with a family of bicolorings.
#[pyclass(module = "gsur_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Instance {
    ps: PointSet,
    fam: BicoloringFamily,
    name: Option<String>,
    expected_optimum: Option<usize>,
    optimum_source: Option<String>,
    pair_index: Option<Vec<(usize, usize)>>,
}

impl Instance {
    fn named(inst: NamedInstance) -> Instance {
        Instance {
            name: Some(inst.name),
            expected_optimum: inst.expected_optimum.map(|(v, _)| v),
            optimum_source: inst.expected_optimum.map(|(_, src)| {
                match src {
                    Provenance::Theorem => "theorem",
                    Provenance::BruteForce => "brute-force",
                }
                .to_string()
            }),
            ps: inst.ps,
            fam: inst.fam,
            pair_index: None,
        }
    }

    fn doc(&self) -> InstanceDoc {
        let mut doc = InstanceDoc::new(&self.ps, &self.fam);
        doc.name = self.name.clone();
        doc.pair_index = self.pair_index.clone();
        doc.expected_optimum = self.expected_optimum;
        doc.optimum_source = self.optimum_source.clone();
        doc
    }
}

#[pymethods]
impl Instance {
    #[new]
    fn new(dim: usize, points: Vec<Vec<f64>>, bicolorings: Vec<String>) -> PyResult<Instance> {
        let ps = PointSet::new(dim, points).map_err(err)?;
        let fam = BicoloringFamily::parse(&bicolorings).map_err(err)?;
        let doc = InstanceDoc::new(&ps, &fam);
        doc.instance().map_err(err)?;
        Ok(Instance { ps, fam, name: None, expected_optimum: None, optimum_source: None, pair_index: None })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Instance> {
        let doc = InstanceDoc::parse(text).map_err(err)?;
        let (ps, fam) = doc.instance().map_err(err)?;
        Ok(Instance {
            ps,
            fam,
            name: doc.name,
            expected_optimum: doc.expected_optimum,
            optimum_source: doc.optimum_source,
            pair_index: doc.pair_index,
        })
    }

    fn to_json(&self) -> String {
        self.doc().render()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.ps.dim()
    }

    #[getter]
    fn n(&self) -> usize {
        self.ps.len()
    }

    #[getter]
    fn points(&self) -> Vec<Vec<f64>> {
        self.ps.to_vecs()
    }

    #[getter]
    fn bicolorings(&self) -> Vec<String> {
        self.fam.iter().map(|b| b.to_string()).collect()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.name.clone()
    }

    #[getter]
    fn expected_optimum(&self) -> Option<usize> {
        self.expected_optimum
    }

    #[getter]
    fn pair_index(&self) -> Option<Vec<(usize, usize)>> {
        self.pair_index.clone()
    }

    fn __len__(&self) -> usize {
        self.fam.len()
    }

    fn __repr__(&self) -> String {
        format!("Instance(dim={}, n={}, bicolorings={})", self.ps.dim(), self.ps.len(), self.fam.len())
    }
}

/// A set of ranges with a certifying range index per bicoloring.
#[pyclass(module = "gsur_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct GSur {
    inner: gsur::GSur,
    method: String,
    optimal: Option<bool>,
}

fn range_dict<'py>(py: Python<'py>, r: &Range) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match r {
        Range::IndexInterval { lo, hi } => {
            d.set_item("type", "index_interval")?;
            d.set_item("lo", lo)?;
            d.set_item("hi", hi)?;
        }
        Range::CoordInterval { lo, hi } => {
            d.set_item("type", "coord_interval")?;
            d.set_item("lo", lo)?;
            d.set_item("hi", hi)?;
        }
        Range::Box { lo, hi } => {
            d.set_item("type", "box")?;
            d.set_item("lo", lo.clone())?;
            d.set_item("hi", hi.clone())?;
        }
        Range::Ball { center, radius } => {
            d.set_item("type", "ball")?;
            d.set_item("center", center.clone())?;
            d.set_item("radius", radius)?;
        }
    }
    Ok(d)
}

#[pymethods]
impl GSur {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<GSur> {
        let doc = SolutionDoc::parse(text).map_err(err)?;
        Ok(GSur { inner: doc.gsur().map_err(err)?, method: doc.method, optimal: doc.optimal })
    }

    fn to_json(&self, instance: &Instance) -> PyResult<String> {
        let verified = self.inner.is_valid(&instance.ps, &instance.fam).map_err(err)?;
        let mut doc = SolutionDoc::new(&self.method, &self.inner, verified);
        doc.optimal = self.optimal;
        Ok(doc.render())
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn method(&self) -> String {
        self.method.clone()
    }

    #[getter]
    fn optimal(&self) -> Option<bool> {
        self.optimal
    }

    #[getter]
    fn certificate(&self) -> Vec<usize> {
        self.inner.certificate.clone()
    }

    #[getter]
    fn ranges<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.inner.ranges.iter().map(|r| range_dict(py, r)).collect()
    }

    /// Whether every certificate points at a balanced range.
    fn is_valid(&self, instance: &Instance) -> PyResult<bool> {
        self.inner.is_valid(&instance.ps, &instance.fam).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        format!("GSur(method={:?}, size={})", self.method, self.inner.size())
    }
}

#[pyfunction]
fn gen_prefix_family(n: usize) -> PyResult<Instance> {
    instances::gen_prefix_family(n).map(Instance::named).map_err(err)
}

#[pyfunction]
fn gen_m_restricted_family(n: usize, m: usize) -> PyResult<Instance> {
    instances::gen_m_restricted_family(n, m).map(Instance::named).map_err(err)
}

#[pyfunction]
fn gen_2k_tightness(k: usize) -> PyResult<Instance> {
    instances::gen_2k_tightness(k).map(Instance::named).map_err(err)
}

#[pyfunction]
fn gen_embedded_line(n: usize, direction: Vec<f64>) -> PyResult<Instance> {
    instances::gen_embedded_line(n, direction.len(), &direction).map(Instance::named).map_err(err)
}

fn set_cover(universe_size: usize, subsets: Vec<Vec<usize>>) -> PyResult<SetCoverInstance> {
    SetCoverInstance::new(universe_size, subsets).map_err(err)
}

/// Reduced interval instance of a set system, with its pair indices.
#[pyfunction]
fn reduce_from_set_cover(universe_size: usize, subsets: Vec<Vec<usize>>) -> PyResult<Instance> {
    let sc = set_cover(universe_size, subsets)?;
    let ro = solver::reduce_from_set_cover(&sc);
    let mut inst = Instance::named(instances::gen_from_set_cover(&sc));
    inst.pair_index = Some(ro.pair_index);
    Ok(inst)
}

/// Set indices chosen by a G-SUR of a reduced instance.
#[pyfunction]
fn extract_set_cover(instance: &Instance, gsur: &GSur) -> PyResult<Vec<usize>> {
    let pair_index = instance
        .pair_index
        .clone()
        .ok_or_else(|| GsurError::new_err("instance has no pair_index"))?;
    let ro = solver::ReductionOutput { ps: instance.ps.clone(), fam: instance.fam.clone(), pair_index };
    solver::extract_set_cover(&ro, &gsur.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (universe_size, subsets))]
fn min_set_cover_brute_force(universe_size: usize, subsets: Vec<Vec<usize>>) -> PyResult<Vec<usize>> {
    Ok(set_cover(universe_size, subsets)?.min_cover_brute_force())
}

/// Runs a direct construction: "adjacent", "size2k" (needs k),
/// "m-restricted" (needs m), "balls" or "boxes".
#[pyfunction]
#[pyo3(signature = (instance, method, k=None, m=None))]
fn construct(instance: &Instance, method: &str, k: Option<usize>, m: Option<usize>) -> PyResult<GSur> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| GsurError::new_err(format!("{method} needs {flag}")));
    let method = match method {
        "adjacent" => Method::Adjacent,
        "size2k" => Method::Size2k { k: need(k, "k")? },
        "m-restricted" => Method::MRestricted { m: need(m, "m")? },
        "balls" => Method::Balls,
        "boxes" => Method::Boxes,
        other => return Err(GsurError::new_err(format!("unknown method {other:?}"))),
    };
    let inner = rs_construct(method, &instance.ps, &instance.fam).map_err(err)?;
    Ok(GSur { inner, method: method.name().to_string(), optimal: None })
}

fn candidate_set(spec: &str) -> PyResult<CandidateSet> {
    Ok(match spec {
        "all-intervals" => CandidateSet::AllIntervals,
        "adjacent" => CandidateSet::Adjacent,
        "diametral-balls" => CandidateSet::DiametralBalls,
        _ => match spec.strip_prefix("pairs-2k=").map(str::parse) {
            Some(Ok(k)) => CandidateSet::Windows { k },
            _ => return Err(GsurError::new_err(format!("unknown candidate set {spec:?}"))),
        },
    })
}

/// Minimum (exact) or greedy G-SUR over a candidate family.
#[pyfunction]
#[pyo3(signature = (instance, exact=true, candidates="all-intervals", budget=None))]
fn solve(instance: &Instance, exact: bool, candidates: &str, budget: Option<usize>) -> PyResult<GSur> {
    let ranges = candidate_set(candidates)?.ranges(&instance.ps).map_err(err)?;
    let cm = solver::build_coverage(&instance.ps, &instance.fam, ranges).map_err(err)?;
    let budget = budget.unwrap_or(cm.rows());
    let inner = if exact {
        solver::exact_cover(&cm, budget).map_err(err)?
    } else {
        let g = solver::greedy_cover(&cm).map_err(err)?;
        if g.size() > budget {
            return Err(err(gsur::Error::BudgetExceeded(budget)));
        }
        g
    };
    let method = if exact { "exact" } else { "greedy" };
    Ok(GSur { inner, method: method.to_string(), optimal: Some(exact) })
}

/// Index of the first bicoloring with no balanced range, or None.
#[pyfunction]
fn verify(instance: &Instance, gsur: &GSur) -> PyResult<Option<usize>> {
    first_uncovered(&gsur.inner.ranges, &instance.ps, &instance.fam).map_err(err)
}

/// Gabriel graph edges `(i, j)`, `i < j`, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (points, tree=false))]
fn gabriel_graph(points: Vec<Vec<f64>>, tree: bool) -> PyResult<Vec<(usize, usize)>> {
    let dim = points.first().map_or(0, Vec::len);
    let ps = PointSet::new(dim, points).map_err(err)?;
    let g = gabriel::gabriel_graph(&ps).graph;
    let g = if tree { gabriel::spanning_tree(&g).map_err(err)? } else { g };
    Ok(g.edges().to_vec())
}

fn colors(text: &str) -> PyResult<Vec<Color>> {
    text.chars()
        .map(|c| Color::from_char(c).ok_or_else(|| GsurError::new_err(format!("bad color {c:?}"))))
        .collect()
}

/// Point counts of the smallest and largest balanced intervals of an R/B string.
#[pyfunction]
fn smallest_largest_balanced(coloring: &str) -> PyResult<(usize, usize)> {
    random_sim::smallest_largest_balanced(&colors(coloring)?).map_err(err)
}

#[pyfunction]
fn event_e(coloring: &str) -> PyResult<bool> {
    Ok(random_sim::event_e(&colors(coloring)?))
}

/// Exact P(E) as a (numerator, denominator) pair.
#[pyfunction]
fn prob_e_exact(m: usize, n: usize) -> PyResult<(BigInt, BigInt)> {
    let p = random_sim::prob_e_exact(m, n).map_err(err)?;
    Ok((p.numer().clone(), p.denom().clone()))
}

#[pyfunction]
fn prob_e_closed_form(m: usize, n: usize) -> PyResult<f64> {
    random_sim::prob_e_closed_form(m, n).map_err(err)
}

#[pyfunction]
fn prob_e_lower_bound(m: usize, n: usize) -> PyResult<f64> {
    random_sim::prob_e_lower_bound(m, n).map_err(err)
}

fn stat_dict<'py>(py: Python<'py>, s: &Stat) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("mean", s.mean)?;
    d.set_item("min", s.min)?;
    d.set_item("max", s.max)?;
    Ok(d)
}

/// Summary of `trials` seeded trials of the "discrete" or "continuous" model.
#[pyfunction]
#[pyo3(signature = (model, m, n, trials, seed=0))]
fn run_experiment<'py>(
    py: Python<'py>,
    model: &str,
    m: usize,
    n: usize,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let model = match model {
        "discrete" => Model::Discrete,
        "continuous" => Model::Continuous,
        other => return Err(GsurError::new_err(format!("unknown model {other:?}"))),
    };
    let exp = py.detach(|| random_sim::run_experiment(model, m, n, trials, seed)).map_err(err)?;
    let s = &exp.summary;
    let d = PyDict::new(py);
    d.set_item("model", s.model.name())?;
    d.set_item("m", s.m)?;
    d.set_item("n", s.n)?;
    d.set_item("trials", s.trials)?;
    d.set_item("seed", s.seed)?;
    d.set_item("t", stat_dict(py, &s.t_stat)?)?;
    d.set_item("s", stat_dict(py, &s.s_stat)?)?;
    if let Some(x) = &s.m_len {
        d.set_item("m_len", stat_dict(py, x)?)?;
    }
    if let Some(x) = &s.l_len {
        d.set_item("l_len", stat_dict(py, x)?)?;
    }
    d.set_item("p_s_eq_2", s.p_s_eq_2)?;
    d.set_item("p_e", s.p_e)?;
    d.set_item("csv", exp.to_csv(false))?;
    Ok(d)
}

#[pymodule]
fn gsur_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GsurError", m.py().get_type::<GsurError>())?;
    m.add_class::<Instance>()?;
    m.add_class::<GSur>()?;
    m.add_function(wrap_pyfunction!(gen_prefix_family, m)?)?;
    m.add_function(wrap_pyfunction!(gen_m_restricted_family, m)?)?;
    m.add_function(wrap_pyfunction!(gen_2k_tightness, m)?)?;
    m.add_function(wrap_pyfunction!(gen_embedded_line, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_from_set_cover, m)?)?;
    m.add_function(wrap_pyfunction!(extract_set_cover, m)?)?;
    m.add_function(wrap_pyfunction!(min_set_cover_brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(gabriel_graph, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_largest_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(event_e, m)?)?;
    m.add_function(wrap_pyfunction!(prob_e_exact, m)?)?;
    m.add_function(wrap_pyfunction!(prob_e_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(prob_e_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}
