#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qdef {

/// One verified identity instance.
struct IdentityRecord {
  std::string identity;
  std::vector<int> colours;
  std::vector<int> dims;
  double q = 0.0;
  double residual = 0.0;
  /// Magnitude of the operands; the pass threshold is
  /// max(tol_abs, tol_rel * scale).
  double scale = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<IdentityRecord> records;

  bool all_pass() const;
  double max_residual() const;
  /// Max residual over records whose identity name starts with `prefix`.
  double max_residual(const std::string& prefix) const;
  std::size_t count(const std::string& prefix) const;
  const IdentityRecord* first_failure() const;

  void append(const VerificationReport& other);
};

nlohmann::json to_json(const IdentityRecord& record);
void to_json(nlohmann::json& j, const IdentityRecord& record);

} // namespace qdef
