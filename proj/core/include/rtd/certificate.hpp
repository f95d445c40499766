#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rtd {

struct Check {
  std::string name;
  nlohmann::json measured;
  nlohmann::json bound;
  bool pass = false;

  bool operator==(const Check&) const = default;
};

// Machine-checkable verdict. The status is derived from the checks, so it
// can never disagree with them.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(nlohmann::json params) : params_(std::move(params)) {}

  void add_check(std::string name, nlohmann::json measured,
                 nlohmann::json bound, bool pass);
  void set_witness(std::vector<int> witness) { witness_ = std::move(witness); }
  void set_param(const std::string& key, nlohmann::json value) {
    params_[key] = std::move(value);
  }

  bool passed() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find_check(const std::string& name) const;
  const std::optional<std::vector<int>>& witness() const { return witness_; }
  const nlohmann::json& params() const { return params_; }

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);

  bool operator==(const Certificate&) const = default;

 private:
  std::vector<Check> checks_;
  std::optional<std::vector<int>> witness_;
  nlohmann::json params_ = nlohmann::json::object();
};

}  // namespace rtd
