#pragma once

#include <map>
#include <string>

#include "json.hpp"

namespace heckelab {

enum class Status { PASS, PASS_VACUOUS, FAIL, SKIP };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::PASS_VACUOUS: return "PASS-VACUOUS";
    case Status::FAIL: return "FAIL";
    case Status::SKIP: return "SKIP";
  }
  return "?";
}

// Result record of one verification; FAIL always carries a witness.
struct Report {
  std::string check;
  std::map<std::string, std::string> params;
  Status status = Status::SKIP;
  std::string witness;
  std::map<std::string, long long> counts;
  long long millis = 0;

  bool ok() const { return status != Status::FAIL; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = status_name(status);
    j["witness"] = witness;
    j["counts"] = counts;
    j["millis"] = millis;
    return j;
  }

  std::string line() const {
    std::string s = status_name(status) + "  " + check;
    for (auto& [k, v] : params) s += " " + k + "=" + v;
    if (!witness.empty()) s += "  [" + witness + "]";
    return s;
  }
};

}  // namespace heckelab
