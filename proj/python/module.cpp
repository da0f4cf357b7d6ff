#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wfdim/classifier.hpp"
#include "wfdim/corpus.hpp"
#include "wfdim/io.hpp"
#include "wfdim/oracle.hpp"
#include "wfdim/verify.hpp"

namespace py = pybind11;
using namespace wfdim;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dim_report(const std::string& spec_text) {
  const InputSpec spec = parse_input_spec(spec_text);
  const WfReport rep = spec.roots ? classify(*spec.roots) : classify_coefficients(*spec.coefficients);
  return dump(report_to_json(spec, rep, Timings{}));
}

std::string zdim_report(const std::string& eta, const std::string& omega, std::size_t k, std::int64_t d) {
  const FieldDescriptor field = d == 1 ? FieldDescriptor::rational() : FieldDescriptor::quadratic(d);
  const ZProblem z(parse_inline_list(eta, field), parse_inline_list(omega, field), k);
  return dump(z_report_to_json(z, z_report(z)));
}

std::vector<std::string> kernel_basis(const std::vector<std::string>& coefficients) {
  std::vector<ExactScalar> c;
  for (const auto& s : coefficients) c.push_back(parse_inline_scalar(s, FieldDescriptor::rational()));
  std::vector<std::string> out;
  for (const auto& p : wf_kernel(Poly(std::move(c))).basis) out.push_back(p.to_string());
  return out;
}

py::list table(std::uint64_t seed) {
  py::list out;
  for (const auto& col : table_columns(seed)) {
    const WfReport rep = classify(col.witness);
    py::dict row;
    row["degree"] = col.degree;
    row["n2"] = col.n2;
    row["N3"] = col.N3;
    row["r"] = col.r;
    row["n1"] = col.n1;
    row["mu"] = col.mu;
    row["dim"] = rep.dim_oracle;
    row["routes_agree"] = rep.routes_agree;
    row["witness"] = rep.f.to_string();
    out.append(row);
  }
  return out;
}

py::list verify(std::uint64_t seed, std::size_t corpus_size, const std::string& suite) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.corpus_size = corpus_size;
  if (!suite.empty()) opts.suite = suite;
  py::list out;
  for (const auto& r : run_verify(opts)) {
    py::dict d;
    d["suite"] = r.name;
    d["passed"] = r.passed;
    d["failed"] = r.failed;
    d["failures"] = r.failures;
    d["notes"] = r.notes;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_wfdim, m) {
  m.doc() = "Exact dimension and basis of W(f)";

  static py::exception<Error> error(m, "WfdimError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("dim_report", &dim_report, py::arg("spec_json"), "report for a JSON input spec, as JSON text");
  m.def("zdim_report", &zdim_report, py::arg("eta"), py::arg("omega"), py::arg("k"), py::arg("d") = 1,
        "Z(eta, omega; s, k) report as JSON text; scalars are comma-separated, a or a:b");
  m.def("kernel_basis", &kernel_basis, py::arg("coefficients"),
        "canonical basis of W(f) for rational f given by ascending coefficients");
  m.def("table", &table, py::arg("seed") = 0);
  m.def("verify", &verify, py::arg("seed") = 0, py::arg("corpus_size") = 50, py::arg("suite") = "");
  m.def("suite_names", &suite_names);
}
