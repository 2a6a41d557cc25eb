#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lcalg {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

/// One verified identity. Witnesses are canonical polynomial renderings of
/// whatever failed (defect polynomials, offending entries).
struct CheckResult {
    std::string id;
    Status status = Status::Pass;
    std::vector<std::string> witnesses;
    std::string detail;
};

/// Ordered list of check results. A report fails iff any check fails;
/// skipped checks never count as passes.
struct Report {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool passed() const { return count(Status::Fail) == 0; }
    std::size_t count(Status s) const;

    void pass(std::string id, std::string detail = {});
    void fail(std::string id, std::vector<std::string> witnesses, std::string detail = {});
    void skip(std::string id, std::string detail = {});
    void append(const Report& other);
};

}  // namespace lcalg
