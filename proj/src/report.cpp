#include "hypercube/report.hpp"

#include <cmath>
#include <ostream>

namespace hypercube {

namespace {
double scale(double rhs) { return std::max(1.0, std::fabs(rhs)); }
}

bool Report::record(Assertion a) {
    bool pass = a.pass;
    if (pass) a.witness.clear();  // witnesses only accompany failures
    assertions_.push_back(std::move(a));
    return pass;
}

bool Report::check_le(const std::string& name, double lhs, double rhs, double tol,
                      const std::string& witness) {
    return record({name, lhs, "<=", rhs, lhs <= rhs + tol * scale(rhs), witness});
}

bool Report::check_ge(const std::string& name, double lhs, double rhs, double tol,
                      const std::string& witness) {
    return record({name, lhs, ">=", rhs, lhs >= rhs - tol * scale(rhs), witness});
}

bool Report::check_close(const std::string& name, double lhs, double rhs, double tol,
                         const std::string& witness) {
    return record({name, lhs, "~=", rhs, std::fabs(lhs - rhs) <= tol * scale(rhs), witness});
}

bool Report::check_exact(const std::string& name, double lhs, double rhs,
                         const std::string& witness) {
    return record({name, lhs, "==", rhs, lhs == rhs, witness});
}

bool Report::check_true(const std::string& name, bool condition,
                        const std::string& witness) {
    return record({name, condition ? 1.0 : 0.0, "true", 1.0, condition, witness});
}

bool Report::all_pass() const {
    for (const auto& a : assertions_)
        if (!a.pass) return false;
    return true;
}

void Report::merge_assertions(const Report& other, const std::string& prefix) {
    for (const auto& a : other.assertions_) {
        Assertion copy = a;
        copy.name = prefix.empty() ? a.name : prefix + a.name;
        assertions_.push_back(std::move(copy));
    }
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["quantities"] = quantities_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : assertions_) {
        nlohmann::ordered_json e;
        e["name"] = a.name;
        e["lhs"] = a.lhs;
        e["relation"] = a.relation;
        e["rhs"] = a.rhs;
        e["pass"] = a.pass;
        if (a.witness.empty())
            e["witness"] = nullptr;
        else
            e["witness"] = a.witness;
        arr.push_back(std::move(e));
    }
    j["assertions"] = arr;
    j["config"] = config_;
    j["pass"] = all_pass();
    return j;
}

void Report::print_text(std::ostream& out) const {
    out << "== " << command_ << " ==\n";
    if (!inputs_.empty()) out << "inputs: " << inputs_.dump() << "\n";
    for (auto it = quantities_.begin(); it != quantities_.end(); ++it)
        out << "  " << it.key() << " = " << it.value().dump() << "\n";
    for (const auto& a : assertions_) {
        out << (a.pass ? "  [pass] " : "  [FAIL] ") << a.name << ": " << a.lhs
            << " " << a.relation << " " << a.rhs << "\n";
        if (!a.pass && !a.witness.empty()) out << "    witness: " << a.witness << "\n";
    }
    if (!config_.empty()) out << "config: " << config_.dump() << "\n";
    out << (all_pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace hypercube
