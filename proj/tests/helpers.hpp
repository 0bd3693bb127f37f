#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multireg/groebner.hpp"
#include "multireg/io.hpp"
#include "multireg/presentation.hpp"

namespace testing_support {

using namespace multireg;

inline Poly P(const RingSpec& R, const std::string& s) { return parse_poly(s, R); }

inline std::vector<Poly> Ps(const RingSpec& R, const std::vector<std::string>& ss) {
  std::vector<Poly> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, R));
  return out;
}

inline Vec as_vec(const Poly& f) {
  Vec v;
  for (const auto& t : f.terms()) v.push_back({t.m, 0, t.c});
  return v;
}

inline Poly as_poly(const Vec& v) {
  std::vector<Term> ts;
  for (const auto& t : v) ts.push_back({t.m, t.c});
  return Poly(ts);
}

/// A file from tests/data.
inline std::string data_file(const std::string& name) {
  std::ifstream in(std::string(MULTIREG_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModuleInput load(const std::string& name) { return parse_input(data_file(name)); }

inline MultiDegree D(std::initializer_list<int> xs) { return MultiDegree(xs); }

} // namespace testing_support
