#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syt {

// One identity checked over a parameter range.
struct Check {
    std::string name;
    std::string range;
    std::size_t cases = 0;
    bool passed = true;
    std::optional<std::string> counterexample; // set iff !passed
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string &suite() const { return suite_; }
    const std::vector<Check> &checks() const { return checks_; }
    std::chrono::duration<double> elapsed() const { return elapsed_; }
    void set_elapsed(std::chrono::duration<double> d) { elapsed_ = d; }

    void add(Check check);
    void append(const VerificationReport &other);

    // Conjunction of every check; an empty report passes.
    bool overall() const;
    const Check *first_failure() const;

    // {"schema": 1, "suite": ..., "overall": ..., "checks": [...],
    //  "elapsed_seconds": ...}. Elapsed time is the only nondeterministic
    // field and is omitted when `with_elapsed` is false.
    std::string to_json(bool with_elapsed = true, int indent = 2) const;

private:
    std::string suite_;
    std::vector<Check> checks_;
    std::chrono::duration<double> elapsed_{0};
};

// Accumulates cases for a single Check, keeping only the first failure.
class CheckRecorder {
public:
    CheckRecorder(std::string name, std::string range)
    {
        check_.name = std::move(name);
        check_.range = std::move(range);
    }

    // `describe` is only invoked for the first failing case.
    template <class Describe>
    bool expect(bool ok, Describe &&describe)
    {
        ++check_.cases;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.counterexample = describe();
        }
        return ok;
    }

    void fail(std::string what)
    {
        ++check_.cases;
        if (check_.passed) {
            check_.passed = false;
            check_.counterexample = std::move(what);
        }
    }

    bool passed() const { return check_.passed; }
    Check finish() && { return std::move(check_); }

private:
    Check check_;
};

} // namespace syt
