#include "congkit/report.hpp"

namespace congkit {

  void to_json(nlohmann::json& j, CheckReport const& report) {
    j = nlohmann::json{{"check", report.check},
                       {"semigroup", report.semigroup},
                       {"prime", nullptr},
                       {"verdict", report.verdict},
                       {"witnesses", report.witnesses},
                       {"summary", report.summary},
                       {"details", report.details},
                       {"timing_ms", report.timing_ms}};
    if (report.prime) {
      j["prime"] = *report.prime;
    }
  }

  void from_json(nlohmann::json const& j, CheckReport& report) {
    j.at("check").get_to(report.check);
    j.at("semigroup").get_to(report.semigroup);
    if (j.at("prime").is_null()) {
      report.prime.reset();
    } else {
      report.prime = j.at("prime").get<std::uint32_t>();
    }
    j.at("verdict").get_to(report.verdict);
    report.witnesses = j.at("witnesses").get<std::vector<nlohmann::json>>();
    report.summary   = j.value("summary", std::string{});
    report.details   = j.value("details", nlohmann::json::object());
    j.at("timing_ms").get_to(report.timing_ms);
  }

}  // namespace congkit
