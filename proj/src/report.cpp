#include "lcalg/report.hpp"

#include <algorithm>

namespace lcalg {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "unknown";
}

std::size_t Report::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void Report::pass(std::string id, std::string detail)
{
    checks.push_back({std::move(id), Status::Pass, {}, std::move(detail)});
}

void Report::fail(std::string id, std::vector<std::string> witnesses, std::string detail)
{
    checks.push_back({std::move(id), Status::Fail, std::move(witnesses), std::move(detail)});
}

void Report::skip(std::string id, std::string detail)
{
    checks.push_back({std::move(id), Status::Skipped, {}, std::move(detail)});
}

void Report::append(const Report& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    elapsed_ms += other.elapsed_ms;
}

}  // namespace lcalg
