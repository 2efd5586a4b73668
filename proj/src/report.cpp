#include "homcsa/report.hpp"

#include <algorithm>

namespace homcsa {

void AxiomReport::evaluate(const std::string& sub) {
  if (std::find(evaluated.begin(), evaluated.end(), sub) == evaluated.end())
    evaluated.push_back(sub);
}

bool AxiomReport::expect(const std::string& sub, std::vector<std::size_t> idx, const Vector& lhs,
                         const Vector& rhs) {
  evaluate(sub);
  if (lhs == rhs) return true;
  violations.push_back({sub, std::move(idx), lhs, rhs});
  return false;
}

bool AxiomReport::expect(const std::string& sub, const std::vector<std::size_t>& idx,
                         const LinearMap& lhs, const LinearMap& rhs) {
  evaluate(sub);
  if (lhs == rhs) return true;
  bool ok = true;
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    Vector l = lhs.column(j), r = rhs.column(j);
    if (l == r) continue;
    auto full = idx;
    full.push_back(j);
    violations.push_back({sub, std::move(full), std::move(l), std::move(r)});
    ok = false;
  }
  return ok;
}

void AxiomReport::absorb(const AxiomReport& other, const std::string& prefix) {
  for (const auto& e : other.evaluated) evaluate(prefix + e);
  for (auto v : other.violations) {
    v.axiom = prefix + v.axiom;
    violations.push_back(std::move(v));
  }
}

std::size_t AxiomReport::count(const std::string& sub) const {
  return std::count_if(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.axiom == sub; });
}

}  // namespace homcsa
