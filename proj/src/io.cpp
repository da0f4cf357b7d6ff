#include "wfdim/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "wfdim/linalg.hpp"

namespace wfdim {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { raise(ErrorKind::ParseError, what); }

mpz_class integer_from_json(const Json& j) {
  static const std::regex kInteger("-?[0-9]+");
  if (!j.is_string()) parse_fail("expected a decimal integer string, got " + j.dump());
  const std::string& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, kInteger)) parse_fail("not a decimal integer: \"" + s + "\"");
  return mpz_class(s, 10);
}

mpq_class fraction_from_json(const Json& num, const Json& den) {
  const mpz_class d = integer_from_json(den);
  if (d == 0) parse_fail("zero denominator");
  mpq_class q(integer_from_json(num), d);
  q.canonicalize();
  return q;
}

Json fraction_pair(const mpq_class& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

mpq_class parse_fraction_text(const std::string& text) {
  static const std::regex kFraction(R"(\s*(-?[0-9]+)(?:/([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kFraction)) parse_fail("not a rational number: \"" + text + "\"");
  const mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
  if (den == 0) parse_fail("zero denominator in \"" + text + "\"");
  mpq_class q(mpz_class(m[1].str(), 10), den);
  q.canonicalize();
  return q;
}

Json grouping_to_json(const RootGrouping& g) {
  Json j;
  j["n"] = g.n;
  j["n1"] = g.n1;
  j["n2"] = g.n2;
  j["N3"] = g.N3;
  j["r"] = g.r;
  j["mu"] = g.mu;
  Json alpha = Json::array(), beta = Json::array(), gamma = Json::array();
  for (const auto& a : g.alpha) alpha.push_back(scalar_to_json(a));
  for (const auto& b : g.beta) beta.push_back(scalar_to_json(b));
  for (const auto& rm : g.gamma) gamma.push_back({{"root", scalar_to_json(rm.root)}, {"multiplicity", rm.multiplicity}});
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["gamma"] = gamma;
  return j;
}

}  // namespace

ExactScalar scalar_from_json(const Json& j, const FieldDescriptor& field) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) parse_fail("scalar must be [\"rat\", ...] or [\"quad\", ...]");
  const std::string& tag = j[0].get_ref<const std::string&>();
  if (tag == "rat") {
    if (j.size() != 3) parse_fail("rat scalar needs numerator and denominator");
    return ExactScalar(fraction_from_json(j[1], j[2]));
  }
  if (tag == "quad") {
    if (j.size() != 5) parse_fail("quad scalar needs a_num, a_den, b_num, b_den");
    if (field.is_rational()) parse_fail("quad scalar under a rational field");
    return ExactScalar(fraction_from_json(j[1], j[2]), fraction_from_json(j[3], j[4]), field);
  }
  parse_fail("unknown scalar tag \"" + tag + "\"");
}

Json scalar_to_json(const ExactScalar& x) {
  if (x.is_rational()) {
    Json j = Json::array({"rat"});
    for (auto& v : fraction_pair(x.rational_part())) j.push_back(v);
    return j;
  }
  Json j = Json::array({"quad"});
  for (auto& v : fraction_pair(x.rational_part())) j.push_back(v);
  for (auto& v : fraction_pair(x.radical_part())) j.push_back(v);
  return j;
}

FieldDescriptor field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) parse_fail("field must be an object with a kind");
  const std::string& kind = j["kind"].get_ref<const std::string&>();
  if (kind == "rational") return FieldDescriptor::rational();
  if (kind != "quadratic") parse_fail("unknown field kind \"" + kind + "\"");
  if (!j.contains("d")) parse_fail("quadratic field needs d");
  const Json& d = j["d"];
  long long value = 0;
  if (d.is_number_integer()) value = d.get<long long>();
  else if (d.is_string()) {
    const mpz_class z = integer_from_json(d);
    if (!z.fits_slong_p()) parse_fail("radicand out of range");
    value = z.get_si();
  } else {
    parse_fail("d must be an integer");
  }
  try {
    return FieldDescriptor::quadratic(value);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json field_to_json(const FieldDescriptor& field) {
  if (field.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "quadratic"}, {"d", field.d()}};
}

InputSpec parse_input_spec(const std::string& text) {
  InputSpec spec;
  try {
    spec.raw = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  const Json& j = spec.raw;
  if (!j.is_object()) parse_fail("top level must be an object");
  spec.field = j.contains("field") ? field_from_json(j["field"]) : FieldDescriptor::rational();
  if (j.contains("precision_bits")) {
    if (!j["precision_bits"].is_number_integer()) parse_fail("precision_bits must be an integer");
    spec.precision_bits = j["precision_bits"].get<int>();
    if (*spec.precision_bits < 64) parse_fail("precision_bits below 64");
  }
  const bool has_roots = j.contains("roots");
  const bool has_coeffs = j.contains("coefficients");
  if (has_roots == has_coeffs) parse_fail("exactly one of roots / coefficients is required");

  if (has_roots) {
    if (!j["roots"].is_array()) parse_fail("roots must be an array");
    std::vector<RootMultiplicity> roots;
    for (const auto& item : j["roots"]) {
      if (!item.is_object() || !item.contains("root")) parse_fail("each root needs a root scalar");
      unsigned mult = 1;
      if (item.contains("multiplicity")) {
        if (!item["multiplicity"].is_number_integer() || item["multiplicity"].get<long long>() < 1)
          parse_fail("multiplicity must be a positive integer");
        mult = item["multiplicity"].get<unsigned>();
      }
      roots.push_back({scalar_from_json(item["root"], spec.field), mult});
    }
    const ExactScalar lc =
        j.contains("leading_coefficient") ? scalar_from_json(j["leading_coefficient"], spec.field) : ExactScalar(1);
    if (lc.is_zero()) parse_fail("leading coefficient is zero");
    try {
      spec.roots = FactoredInput(std::move(roots), lc);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegreeTooSmall) throw;
      parse_fail(e.what());
    }
  } else {
    if (!j["coefficients"].is_array()) parse_fail("coefficients must be an array");
    std::vector<ExactScalar> c;
    for (const auto& item : j["coefficients"]) c.push_back(scalar_from_json(item, spec.field));
    spec.coefficients = Poly(std::move(c));
  }
  return spec;
}

InputSpec read_input_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input_spec(ss.str());
}

Json report_to_json(const InputSpec& spec, const WfReport& report, const Timings& timings) {
  Json j;
  j["input"] = spec.raw;
  j["field"] = spec.field.to_string();
  j["f"] = report.f.to_string();
  j["grouping"] = grouping_to_json(report.grouping);
  j["dim_oracle"] = report.dim_oracle;
  j["dim_structural"] = report.dim_structural ? Json(*report.dim_structural) : Json(nullptr);
  j["dim_theorem"] = report.dim_theorem ? Json(*report.dim_theorem) : Json(nullptr);
  j["degenerate"] = report.degenerate;
  j["case_tag"] = to_string(report.case_tag);
  if (report.normalization)
    j["normalization"] = {{"shape", to_string(report.normalization->shape)},
                          {"a", scalar_to_json(report.normalization->a)},
                          {"b", scalar_to_json(report.normalization->b)}};
  else
    j["normalization"] = nullptr;
  Json basis = Json::array(), coeffs = Json::array();
  for (const auto& p : report.basis) {
    basis.push_back(p.to_string());
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(scalar_to_json(x));
    coeffs.push_back(c);
  }
  j["basis"] = basis;
  j["basis_coefficients"] = coeffs;
  j["routes_agree"] = report.routes_agree;
  j["issues"] = report.issues;
  j["timings_us"] = {{"classify", timings.classify_us}};
  return j;
}

std::string report_to_text(const WfReport& report) {
  std::ostringstream os;
  const RootGrouping& g = report.grouping;
  os << "f            = " << report.f.to_string() << "\n";
  os << "n1 n2 N3     = " << g.n1 << " " << g.n2 << " " << g.N3 << "\n";
  os << "r, mu        = " << g.r << ", " << g.mu << "\n";
  os << "case         = " << to_string(report.case_tag);
  if (report.normalization) os << " (shape " << to_string(report.normalization->shape) << ")";
  os << "\n";
  os << "dim oracle   = " << report.dim_oracle << "\n";
  os << "dim bridge   = " << (report.dim_structural ? std::to_string(*report.dim_structural) : "n/a") << "\n";
  os << "dim closed   = " << (report.dim_theorem ? std::to_string(*report.dim_theorem) : "n/a") << "\n";
  os << "degenerate   = " << (report.degenerate ? "yes" : "no") << "\n";
  os << "basis:\n";
  for (const auto& p : report.basis) os << "  " << p.to_string() << "\n";
  os << "routes agree = " << (report.routes_agree ? "yes" : "NO") << "\n";
  for (const auto& issue : report.issues) os << "  ! " << issue << "\n";
  return os.str();
}

ExactScalar parse_inline_scalar(const std::string& text, const FieldDescriptor& field) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return ExactScalar(parse_fraction_text(text));
  if (field.is_rational()) parse_fail("radical part given without a quadratic field: \"" + text + "\"");
  return ExactScalar(parse_fraction_text(text.substr(0, colon)), parse_fraction_text(text.substr(colon + 1)), field);
}

std::vector<ExactScalar> parse_inline_list(const std::string& text, const FieldDescriptor& field) {
  std::vector<ExactScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_inline_scalar(item, field));
  if (out.empty()) parse_fail("empty scalar list");
  return out;
}

Json z_report_to_json(const ZProblem& z, const ZReport& report) {
  Json j;
  Json eta = Json::array(), omega = Json::array();
  for (const auto& x : z.eta()) eta.push_back(scalar_to_json(x));
  for (const auto& x : z.omega()) omega.push_back(scalar_to_json(x));
  j["eta"] = eta;
  j["omega"] = omega;
  j["s"] = z.s();
  j["k"] = z.k();
  j["field"] = z.field().to_string();
  const AssociatedMatrix a = associated_matrix(z);
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.entries.cols(); ++c) row.push_back(a.entries.at(i, c).to_string());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["rank"] = report.rank;
  j["dimension"] = report.dimension;
  j["degenerate"] = report.degenerate;
  Json basis = Json::array();
  for (const auto& p : report.basis) basis.push_back(p.to_string());
  j["basis"] = basis;
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace wfdim
