#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

// Structured result of a verifier or CLI command: named quantities plus a
// list of checked assertions.  Serializes to a versioned JSON object with a
// fixed field order so equal reports are byte-identical.
namespace hypercube {

struct Assertion {
    std::string name;
    double lhs = 0.0;
    std::string relation;  // "<=", ">=", "~=", "==" (bit-exact), "true"
    double rhs = 0.0;
    bool pass = false;
    std::string witness;   // serialized offending function, empty if none
};

class Report {
  public:
    explicit Report(std::string command) : command_(std::move(command)) {
        inputs_ = nlohmann::ordered_json::object();
        quantities_ = nlohmann::ordered_json::object();
        config_ = nlohmann::ordered_json::object();
    }

    const std::string& command() const { return command_; }

    void set_input(const std::string& key, const nlohmann::ordered_json& v) { inputs_[key] = v; }
    void set_config(const std::string& key, const nlohmann::ordered_json& v) { config_[key] = v; }
    void add_quantity(const std::string& name, const nlohmann::ordered_json& v) { quantities_[name] = v; }

    // lhs <= rhs up to a relative tolerance scaled by max(1, |rhs|).
    bool check_le(const std::string& name, double lhs, double rhs, double tol,
                  const std::string& witness = "");
    bool check_ge(const std::string& name, double lhs, double rhs, double tol,
                  const std::string& witness = "");
    // |lhs - rhs| <= tol * max(1, |rhs|).
    bool check_close(const std::string& name, double lhs, double rhs, double tol,
                     const std::string& witness = "");
    // Bit-exact equality (used where dyadic arithmetic guarantees it).
    bool check_exact(const std::string& name, double lhs, double rhs,
                     const std::string& witness = "");
    bool check_true(const std::string& name, bool condition,
                    const std::string& witness = "");

    bool all_pass() const;
    const std::vector<Assertion>& assertions() const { return assertions_; }

    void merge_assertions(const Report& other, const std::string& prefix = "");

    nlohmann::ordered_json to_json() const;
    void print_text(std::ostream& out) const;

  private:
    bool record(Assertion a);

    std::string command_;
    nlohmann::ordered_json inputs_;
    nlohmann::ordered_json quantities_;
    nlohmann::ordered_json config_;
    std::vector<Assertion> assertions_;
};

}  // namespace hypercube
