#include "qdef/report.hpp"

#include <algorithm>

namespace qdef {

bool VerificationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const IdentityRecord& r) { return r.pass; });
}

double VerificationReport::max_residual() const { return max_residual(""); }

double VerificationReport::max_residual(const std::string& prefix) const {
  double worst = 0.0;
  for (const auto& r : records)
    if (r.identity.starts_with(prefix))
      worst = std::max(worst, r.residual);
  return worst;
}

std::size_t VerificationReport::count(const std::string& prefix) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const auto& r) {
        return r.identity.starts_with(prefix);
      }));
}

const IdentityRecord* VerificationReport::first_failure() const {
  for (const auto& r : records)
    if (!r.pass)
      return &r;
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

nlohmann::json to_json(const IdentityRecord& record) {
  nlohmann::json j;
  to_json(j, record);
  return j;
}

void to_json(nlohmann::json& j, const IdentityRecord& record) {
  j = nlohmann::json{{"identity", record.identity},
                     {"colours", record.colours},
                     {"dims", record.dims},
                     {"q", record.q},
                     {"residual", record.residual},
                     {"pass", record.pass}};
}

} // namespace qdef
