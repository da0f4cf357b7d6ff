#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "wfdim/approx.hpp"
#include "wfdim/classifier.hpp"
#include "wfdim/corpus.hpp"
#include "wfdim/io.hpp"
#include "wfdim/verify.hpp"

using namespace wfdim;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegree = 3;
constexpr int kExitRoutes = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::CoincidentPoints:
    case ErrorKind::FieldMismatch:
    case ErrorKind::InvalidArgument: return kExitParse;
    case ErrorKind::DegreeTooSmall: return kExitDegree;
    case ErrorKind::RouteDisagreement: return kExitRoutes;
    default: return kExitVerifyFailed;
  }
}

int cmd_dim(const std::string& path, bool pretty, const std::string& format) {
  const InputSpec spec = read_input_spec(path);
  const auto start = std::chrono::steady_clock::now();
  const WfReport rep = spec.roots ? classify(*spec.roots) : classify_coefficients(*spec.coefficients);
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  if (pretty || format == "text") std::cout << report_to_text(rep);
  else std::cout << dump(report_to_json(spec, rep, Timings{us.count()})) << "\n";
  if (!rep.routes_agree) {
    for (const auto& issue : rep.issues) std::cerr << "RouteDisagreement: " << issue << "\n";
    return kExitRoutes;
  }
  return 0;
}

int cmd_table(std::uint64_t seed, const std::string& format) {
  const auto cols = table_columns(seed);
  std::vector<Json> rows;
  bool ok = true;
  for (const auto& col : cols) {
    const WfReport rep = classify(col.witness);
    ok = ok && rep.routes_agree && rep.dim_oracle == col.dim;
    const RootGrouping& g = rep.grouping;
    rows.push_back({{"degree", g.n}, {"n2", g.n2}, {"N3", g.N3}, {"r", g.r}, {"n1", g.n1}, {"mu", g.mu},
                    {"dim", rep.dim_oracle}, {"witness", rep.f.to_string()}});
  }
  if (format == "json") {
    std::cout << dump(Json(rows)) << "\n";
  } else {
    std::cout << "degree,n2,N3,r,n1,mu,dim,witness\n";
    for (const auto& r : rows)
      std::cout << r["degree"] << "," << r["n2"] << "," << r["N3"] << "," << r["r"] << "," << r["n1"] << ","
                << r["mu"] << "," << r["dim"] << ",\"" << r["witness"].get<std::string>() << "\"\n";
  }
  return ok ? 0 : kExitRoutes;
}

int cmd_verify(const VerifyOptions& opts, const std::string& format) {
  const auto results = run_verify(opts);
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.failed == 0;
    j.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures},
                 {"notes", r.notes}});
  }
  if (format == "json") {
    std::cout << dump(j) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.failed == 0 ? "ok    " : "FAIL  ") << r.name << ": " << r.passed << " passed, " << r.failed
                << " failed\n";
      for (const auto& f : r.failures) std::cout << "        - " << f << "\n";
      for (const auto& n : r.notes) std::cout << "        note: " << n << "\n";
    }
  }
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_zdim(const std::string& eta, const std::string& omega, std::size_t k, std::int64_t d) {
  const FieldDescriptor field = d == 1 ? FieldDescriptor::rational() : FieldDescriptor::quadratic(d);
  const ZProblem z(parse_inline_list(eta, field), parse_inline_list(omega, field), k);
  std::cout << dump(z_report_to_json(z, z_report(z))) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension and basis of W(f) = {p : deg p <= deg f - 2, f | f''p - f'p'}"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int precision_bits = precision_bits_from_env();
  std::string format;
  app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();
  app.add_option("--precision-bits", precision_bits, "precision of the approximate backend")
      ->check(CLI::Range(kMinPrecisionBits, 1 << 20));

  auto* dim = app.add_subcommand("dim", "report W(f) for the polynomial described in a JSON file");
  std::string path;
  bool pretty = false;
  dim->add_option("file", path, "input JSON")->required();
  dim->add_flag("--pretty", pretty, "human-readable report");
  dim->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "regenerate the degree 4-6 summary table");
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run the property suites");
  VerifyOptions vopts;
  std::string suite;
  verify->add_option("--suite", suite, "run one suite")->check(CLI::IsMember(suite_names()));
  verify->add_option("--corpus-size", vopts.corpus_size, "random instances per property")->capture_default_str();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* zdim = app.add_subcommand("zdim", "dimension of Z(eta, omega; s, k)");
  std::string eta, omega;
  std::size_t k = 0;
  std::int64_t d = 1;
  zdim->add_option("--eta", eta, "comma-separated scalars, a or a:b for a + b*sqrt(d)")->required();
  zdim->add_option("--omega", omega, "comma-separated distinct scalars")->required();
  zdim->add_option("-k", k, "degree bound")->required();
  zdim->add_option("--field-d", d, "radicand d of Q(sqrt(d)); 1 means Q")->capture_default_str();

  // Subcommand options also accept the global flags after the subcommand name.
  for (auto* sub : {dim, table, verify, zdim}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*dim) return cmd_dim(path, pretty, format);
    if (*table) return cmd_table(seed, format);
    if (*verify) {
      vopts.seed = seed;
      vopts.precision_bits = precision_bits;
      if (!suite.empty()) vopts.suite = suite;
      return cmd_verify(vopts, format);
    }
    if (*zdim) return cmd_zdim(eta, omega, k, d);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
