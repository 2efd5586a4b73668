#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcsa/linear.hpp"

namespace homcsa {

struct Violation {
  std::string axiom;  // the sub-identity that failed
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

/// Outcome of one check operation. A check may evaluate several identity
/// families; each is listed in `evaluated` (in evaluation order) and every
/// violation names the family it belongs to.
struct AxiomReport {
  std::string axiom;
  std::vector<std::string> evaluated;
  std::vector<Violation> violations;

  AxiomReport() = default;
  explicit AxiomReport(std::string name) : axiom(std::move(name)) {}

  bool passed() const { return violations.empty(); }

  /// Registers an identity family so it shows up even when it holds.
  void evaluate(const std::string& sub);

  /// Records a violation unless lhs == rhs. Returns true when they agree.
  bool expect(const std::string& sub, std::vector<std::size_t> idx, const Vector& lhs,
              const Vector& rhs);

  /// Matrix identity: compared column by column, the column index appended.
  bool expect(const std::string& sub, const std::vector<std::size_t>& idx, const LinearMap& lhs,
              const LinearMap& rhs);

  /// Pulls in another report's families and violations, renaming each as
  /// prefix + name.
  void absorb(const AxiomReport& other, const std::string& prefix);

  std::size_t count(const std::string& sub) const;
};

}  // namespace homcsa
