#include "rtd/certificate.hpp"

#include "rtd/errors.hpp"

namespace rtd {

void Certificate::add_check(std::string name, nlohmann::json measured,
                            nlohmann::json bound, bool pass) {
  checks_.push_back({std::move(name), std::move(measured), std::move(bound), pass});
}

bool Certificate::passed() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

const Check* Certificate::find_check(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["status"] = passed() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"name", c.name},
                           {"measured", c.measured},
                           {"bound", c.bound},
                           {"verdict", c.pass ? "pass" : "fail"}});
  }
  j["witness"] = witness_ ? nlohmann::json(*witness_) : nlohmann::json(nullptr);
  j["params"] = params_;
  return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  try {
    Certificate c(j.at("params"));
    for (const auto& chk : j.at("checks")) {
      const auto verdict = chk.at("verdict").get<std::string>();
      if (verdict != "pass" && verdict != "fail")
        throw ArgumentError("certificate verdict must be pass or fail");
      c.add_check(chk.at("name").get<std::string>(), chk.at("measured"),
                  chk.at("bound"), verdict == "pass");
    }
    if (!j.at("witness").is_null())
      c.set_witness(j.at("witness").get<std::vector<int>>());
    const auto status = j.at("status").get<std::string>();
    if ((status == "pass") != c.passed())
      throw ArgumentError("certificate status disagrees with its checks");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace rtd
