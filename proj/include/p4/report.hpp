#pragma once

#include "p4/ratfun.hpp"

#include <string>
#include <vector>

namespace p4 {

/// One identity check. The residual is exact; the check passes iff it is the
/// zero polynomial.
struct Check {
    std::string name;
    Poly residual;

    [[nodiscard]] bool ok() const { return residual.is_zero(); }
};

/// Outcome of a verifier: every identity it evaluated plus free-form notes.
struct Report {
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add(std::string name, Poly residual) { checks.push_back({std::move(name), std::move(residual)}); }
    /// Residual of lhs - rhs (numerator of the normalized difference).
    void add_identity(std::string name, const RatFun &lhs, const RatFun &rhs) {
        add(std::move(name), (lhs - rhs).num());
    }
    void merge(const std::string &prefix, const Report &other) {
        for (const auto &c : other.checks)
            checks.push_back({prefix + c.name, c.residual});
        for (const auto &n : other.notes)
            notes.push_back(prefix + n);
    }
    [[nodiscard]] bool passed() const {
        for (const auto &c : checks)
            if (!c.ok())
                return false;
        return true;
    }
    [[nodiscard]] const Check *find(const std::string &name) const {
        for (const auto &c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

} // namespace p4
