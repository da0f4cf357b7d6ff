#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "wfdim/poly.hpp"

namespace testing {

using wfdim::ExactScalar;
using wfdim::FactoredInput;
using wfdim::Poly;

inline ExactScalar q(long n, long d = 1) { return ExactScalar::rational(n, d); }

// a + b·√d
inline ExactScalar quad(long an, long ad, long bn, long bd, std::int64_t d) {
  return ExactScalar(q(an, ad).rational_part(), q(bn, bd).rational_part(), wfdim::FieldDescriptor::quadratic(d));
}

inline Poly from_oracle(const oracle::QPoly& p) {
  std::vector<ExactScalar> c(p.begin(), p.end());
  return Poly(std::move(c));
}

inline oracle::QPoly to_oracle(const Poly& p) {
  oracle::QPoly out;
  for (const auto& c : p.coeffs()) {
    REQUIRE(c.is_rational());
    out.push_back(c.rational_part());
  }
  return out;
}

inline std::vector<oracle::Root> oracle_roots(const FactoredInput& fi) {
  std::vector<oracle::Root> out;
  for (const auto& rm : fi.roots()) {
    REQUIRE(rm.root.is_rational());
    out.push_back({rm.root.rational_part(), rm.multiplicity});
  }
  return out;
}

inline std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

template <typename F>
wfdim::ErrorKind error_kind(F&& body) {
  try {
    body();
  } catch (const wfdim::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return wfdim::ErrorKind::Internal;
}

}  // namespace testing
