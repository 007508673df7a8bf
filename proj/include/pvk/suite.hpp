// The verification suite: one record per checked result, with a JSON report.

#ifndef PVK_SUITE_HPP
#define PVK_SUITE_HPP

#include "pvk/fpres.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pvk {

enum class CheckStatus { Pass, Fail, Unknown, Flagged };
std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::Unknown;
    std::vector<std::string> details;
    std::optional<double> wall_time_s;
};

struct SuiteOptions {
    int nq_class = 3;             // nilpotent quotients compared against the Lie ring
    std::size_t max_degree = 3;   // Lie ring degree (enveloping algebra capped at 4)
    SearchBounds bounds;          // certificate search for the free-product rewriting
    bool timing = true;
};

struct Report {
    static constexpr int schema_version = 1;
    SuiteOptions options;
    std::vector<CheckRecord> checks;

    bool passed() const;
    std::string to_json() const;
    std::string to_text(bool verbose) const;
};

/// Accumulates the outcome of one check.
class CheckLog {
public:
    void expect(bool ok, const std::string& what);
    void skip(const std::string& what);
    void flag(const std::string& what);
    void note(const std::string& what);
    CheckStatus status() const;
    const std::vector<std::string>& lines() const { return lines_; }

private:
    std::vector<std::string> lines_;
    bool failed_ = false, unknown_ = false, flagged_ = false;
};

struct SuiteCheck {
    std::string id;
    std::string anchor;
    std::function<void(const SuiteOptions&, CheckLog&)> run;
};

/// AC1..AC10 in id order.
const std::vector<SuiteCheck>& suite_checks();
/// Runs one check; ResourceLimit becomes UNKNOWN and other exceptions FAIL.
CheckRecord run_check(const SuiteCheck& check, const SuiteOptions& options);
Report run_paper_suite(const SuiteOptions& options);

/// Word pairs used by the separation check (first three must separate, the
/// last pair is equal in the group).
struct WordPair {
    std::string first, second;
};
std::vector<WordPair> separation_pairs();

} // namespace pvk

#endif
