#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "sparsesum/error.hpp"
#include "sparsesum/experiments.hpp"
#include "sparsesum/kernel.hpp"
#include "sparsesum/nodes.hpp"
#include "sparsesum/oracle.hpp"
#include "sparsesum/transform.hpp"
#include "sparsesum/verify.hpp"

namespace py = pybind11;
using namespace sparsesum;

namespace {

using Samples = std::map<std::int64_t, complex>;

// f is either a dict {n: value} or a callable n -> value defined on [first, last].
// Callables grab the GIL themselves so the threaded oracle can run them.
SampledFunction to_function(const py::object& f, std::int64_t first, std::int64_t last) {
  if (py::isinstance<py::dict>(f)) return SampledFunction::from_table(f.cast<Samples>());
  if (!PyCallable_Check(f.ptr())) throw py::type_error("f must be a dict or a callable");
  auto fn = std::make_shared<py::function>(f.cast<py::function>());
  return SampledFunction(
      [fn](std::int64_t n) {
        py::gil_scoped_acquire gil;
        return (*fn)(n).cast<complex>();
      },
      first, last);
}

NodeSequence to_nodes(const std::vector<std::int64_t>& nodes) { return NodeSequence(nodes); }

std::vector<std::int64_t> to_list(const NodeSequence& s) { return {s.nodes().begin(), s.nodes().end()}; }

py::dict result_dict(const TransformResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["node_count"] = r.node_count;
  d["cutoff"] = r.cutoff;
  d["efficiency"] = r.efficiency;
  return d;
}

template <class Op>
py::dict transform(Op op, const py::object& f, const std::vector<std::int64_t>& nodes) {
  const auto seq = to_nodes(nodes);
  const auto fn = to_function(f, seq.first(), seq.last());
  return result_dict(op(fn, seq));
}

py::dict curve_dict(const experiments::Curve& c) {
  py::list x, approx, exact, error;
  for (const auto& r : c.rows) {
    x.append(r.x);
    approx.append(r.approx);
    exact.append(r.exact);
    error.append(r.error);
  }
  py::dict d;
  d["x"] = x;
  d["approx"] = approx;
  d["exact"] = exact;
  d["error"] = error;
  d["node_count"] = c.node_count;
  d["cutoff"] = c.cutoff;
  return d;
}

experiments::Grid grid_of(double x_min, double x_max, std::int64_t count) {
  return {x_min, x_max, count};
}

}  // namespace

PYBIND11_MODULE(_sparsesum, m) {
  m.doc() = "Weighted sparse sums and Fourier transforms over integer nodes";

  // lives as long as the interpreter; never freed on purpose
  static auto* error_type = new py::object(py::exception<Error>(m, "SparsesumError", PyExc_ValueError));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = (*error_type)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type->ptr(), inst.ptr());
    }
  });

  // nodes
  m.def("q_sequence", [](double q, std::int64_t count) { return to_list(q_sequence({q, count})); },
        py::arg("q") = 1.15, py::arg("count") = 151);
  m.def("hybrid_nodes",
        [](std::int64_t flat_end, std::int64_t cutoff, std::int64_t count) {
          return to_list(hybrid_nodes({flat_end, cutoff, count}));
        },
        py::arg("flat_end"), py::arg("cutoff"), py::arg("count") = 151);
  m.def("lorentzian_nodes",
        [](double a, std::int64_t count) {
          return to_list(hybrid_nodes(HybridSpec::for_lorentzian(a, count)));
        },
        py::arg("a"), py::arg("count") = 151);
  m.def("resonant_segments",
        [](double a, std::int64_t count) {
          py::list out;
          for (const auto& s : split_nodes(SplitSpec::for_resonant(a, count))) {
            py::dict d;
            d["first"] = s.first;
            d["last"] = s.last;
            d["nodes"] = s.nodes ? py::cast(to_list(*s.nodes)) : py::none();
            out.append(d);
          }
          return out;
        },
        py::arg("a"), py::arg("count") = 151);

  // kernel
  m.def("panel_weights",
        [](double k, std::int64_t n1, std::int64_t n2, std::int64_t n3) {
          const auto w = panel_weights(k, {n1, n2, n3});
          return py::make_tuple(w.w1, w.w2, w.w3);
        },
        py::arg("k"), py::arg("n1"), py::arg("n2"), py::arg("n3"));
  m.def("y_triple",
        [](double k, std::int64_t span) {
          const auto t = y_triple(k, span);
          return py::make_tuple(t.y, t.y1, t.y2);
        },
        py::arg("k"), py::arg("span"));
  m.def("assemble_weights",
        [](double k, const std::vector<std::int64_t>& nodes) {
          return assemble_weights(k, to_nodes(nodes)).weights;
        },
        py::arg("k"), py::arg("nodes"));

  // transforms
  m.def("dft",
        [](const py::object& f, const std::vector<std::int64_t>& nodes, double k) {
          return transform([k](auto& fn, auto& s) { return dft(fn, s, k); }, f, nodes);
        },
        py::arg("f"), py::arg("nodes"), py::arg("k"));
  m.def("sine_transform",
        [](const py::object& f, const std::vector<std::int64_t>& nodes, double k) {
          return transform([k](auto& fn, auto& s) { return sine_transform(fn, s, k); }, f, nodes);
        },
        py::arg("f"), py::arg("nodes"), py::arg("k"));
  m.def("cosine_transform",
        [](const py::object& f, const std::vector<std::int64_t>& nodes, double k) {
          return transform([k](auto& fn, auto& s) { return cosine_transform(fn, s, k); }, f, nodes);
        },
        py::arg("f"), py::arg("nodes"), py::arg("k"));
  m.def("series_sum",
        [](const py::object& f, const std::vector<std::int64_t>& nodes) {
          return transform([](auto& fn, auto& s) { return series_sum(fn, s); }, f, nodes);
        },
        py::arg("f"), py::arg("nodes"));

  // oracle
  m.def("brute_force_dft",
        [](const py::object& f, std::int64_t first, std::int64_t last, double k, bool force) {
          const auto fn = to_function(f, first, last);
          py::gil_scoped_release release;
          return oracle::brute_force_dft(fn, first, last, k, force);
        },
        py::arg("f"), py::arg("first"), py::arg("last"), py::arg("k"), py::arg("force") = false);
  m.def("faulhaber", &oracle::faulhaber, py::arg("m"), py::arg("L"));
  m.def("exact_value",
        [](const std::string& series, double param, double x) {
          oracle::Series s;
          if (series == "zeta") {
            s = oracle::Series::Zeta;
          } else if (series == "lorentzian") {
            s = oracle::Series::Lorentzian;
          } else if (series == "resonant") {
            s = oracle::Series::Resonant;
          } else {
            throw py::value_error("series must be 'zeta', 'lorentzian' or 'resonant'");
          }
          return oracle::exact_value({s, param}, x);
        },
        py::arg("series"), py::arg("param"), py::arg("x") = 0.0);

  // experiments
  m.def("run_zeta",
        [](const std::vector<double>& p, double q, std::int64_t count) {
          py::list out;
          for (const auto& r : experiments::run_zeta(p, q, count)) {
            py::dict d;
            d["p"] = r.p;
            d["sum"] = r.sum;
            d["reference"] = r.reference ? py::cast(*r.reference) : py::none();
            d["delta"] = r.delta ? py::cast(*r.delta) : py::none();
            d["node_count"] = r.node_count;
            d["cutoff"] = r.cutoff;
            d["efficiency"] = r.efficiency;
            out.append(d);
          }
          return out;
        },
        py::arg("p") = std::vector<double>{1.4, 1.5, 1.6, 1.7, 1.8, 2.0}, py::arg("q") = 1.15,
        py::arg("count") = 151);
  m.def("example2",
        [](double a, double x_min, double x_max, std::int64_t x_count, std::int64_t count) {
          return curve_dict(experiments::run_example2(a, grid_of(x_min, x_max, x_count), count));
        },
        py::arg("a"), py::arg("x_min") = 0.01, py::arg("x_max") = 1.99, py::arg("x_count") = 199,
        py::arg("count") = 151);
  m.def("example3",
        [](double a, double x_min, double x_max, std::int64_t x_count, std::int64_t count) {
          return curve_dict(experiments::run_example3(a, grid_of(x_min, x_max, x_count), count));
        },
        py::arg("a"), py::arg("x_min") = 0.01, py::arg("x_max") = 1.99, py::arg("x_count") = 199,
        py::arg("count") = 151);

  m.def("verify",
        [](std::uint64_t seed) {
          const auto rep = verify::run_verify(seed);
          py::list out;
          for (const auto& r : rep.results) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["measured"] = r.measured;
            d["tolerance"] = r.tolerance;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("seed") = verify::kDefaultSeed);
}
