#include "braidorder/check.hpp"

#include <nlohmann/json.hpp>

namespace braidorder {

std::string to_json_text(const CheckReport& r, int indent) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"inputs", v.inputs}, {"expected", v.expected}, {"got", v.got}});
  nlohmann::json j{{"checked", r.checked}, {"violations", violations}};
  return j.dump(indent);
}

}  // namespace braidorder
