#ifndef CONGKIT_REPORT_HPP_
#define CONGKIT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace congkit {

  // Verdict of one property check plus the counterexamples that refute it.
  // A false verdict always carries at least one witness.
  struct CheckReport {
    std::string                  check;
    std::string                  semigroup;
    std::optional<std::uint32_t> prime;
    bool                         verdict = true;
    std::vector<nlohmann::json>  witnesses;
    std::string                  summary;
    nlohmann::json               details = nlohmann::json::object();
    double                       timing_ms = 0.0;

    bool operator==(CheckReport const&) const = default;
  };

  void to_json(nlohmann::json& j, CheckReport const& report);
  void from_json(nlohmann::json const& j, CheckReport& report);

}  // namespace congkit

#endif  // CONGKIT_REPORT_HPP_
