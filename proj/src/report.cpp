#include "syt/report.hpp"

#include "json.hpp"

#include <algorithm>

namespace syt {

void VerificationReport::add(Check check) { checks_.push_back(std::move(check)); }

void VerificationReport::append(const VerificationReport &other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::overall() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.passed; });
}

const Check *VerificationReport::first_failure() const
{
    auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check &c) { return !c.passed; });
    return it == checks_.end() ? nullptr : &*it;
}

std::string VerificationReport::to_json(bool with_elapsed, int indent) const
{
    using nlohmann::ordered_json;
    ordered_json checks = ordered_json::array();
    for (const auto &c : checks_) {
        ordered_json entry;
        entry["name"] = c.name;
        entry["range"] = c.range;
        entry["cases"] = c.cases;
        entry["passed"] = c.passed;
        entry["counterexample"] = c.counterexample ? ordered_json(*c.counterexample) : ordered_json();
        checks.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["suite"] = suite_;
    doc["overall"] = overall();
    doc["checks"] = std::move(checks);
    if (with_elapsed)
        doc["elapsed_seconds"] = elapsed_.count();
    return doc.dump(indent);
}

} // namespace syt
