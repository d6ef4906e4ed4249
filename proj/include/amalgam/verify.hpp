#ifndef AMALGAM_VERIFY_HPP
#define AMALGAM_VERIFY_HPP

#include "amalgam/corpus.hpp"

#include <string>
#include <vector>

namespace amalgam {

class UnknownTheoremId : public Error {
public:
    explicit UnknownTheoremId(const std::string& id)
        : Error("unknown theorem id '" + id + "'") {}
};

enum class CheckStatus { Pass, Fail, HypothesisNotMet, InputError };

const char* status_name(CheckStatus s);

struct VerificationReport {
    std::string theorem_id;
    std::string instance;
    CheckStatus status = CheckStatus::InputError;
    std::string details;  // witness or hypothesis description
};

struct TheoremInfo {
    std::string id;
    bool takes_algebra = false;  // plain algebra instance instead of an amalgam
    std::string description;
};

const std::vector<TheoremInfo>& theorem_catalog();
bool theorem_takes_algebra(const std::string& id);  // throws UnknownTheoremId

/// Runs one theorem check; exceptions are folded into the report status
/// (hypothesis failures into HypothesisNotMet, violations into Fail).
VerificationReport run_theorem(const std::string& id, const std::string& instance_name,
                               const AmalgamResult& r);
VerificationReport run_theorem(const std::string& id, const std::string& instance_name,
                               const AlgebraPtr& a);

struct CorpusRunSummary {
    std::vector<VerificationReport> reports;  // sorted by (theorem_id, instance)
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t hypothesis_not_met = 0;
    std::size_t input_errors = 0;

    int exit_code() const;  // 0 clean, 1 any fail, 2 any input error
};

/// Every applicable theorem over every base entry and amalgam instance.
CorpusRunSummary corpus_run(const std::vector<corpus::Entry>& entries,
                            const std::vector<corpus::AmalgamEntry>& amalgams);

}  // namespace amalgam

#endif
