#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gps/model.hpp"

namespace gps {

enum class CheckStatus { Pass, Vacuous, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string instance;
    CheckStatus status = CheckStatus::Skipped;
    // Counterexample for Fail, guard reason for Skipped, summary otherwise.
    std::string detail;
    std::size_t cases = 0;    // instantiations where the statement had content
    std::size_t vacuous = 0;  // instantiations with a false hypothesis
    std::vector<std::string> notes;
    double elapsed_ms = 0;
};

struct HarnessOptions {
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    std::uint64_t seed = 20240601;
    std::size_t exhaustive_subset_limit = 12;
    std::size_t sampled_subsets = 256;
    // Evaluate checks even where their applicability guard fails.
    bool ignore_guards = false;
};

struct CheckInfo {
    std::string id;
    std::string statement;
};

// Every check id, in catalog order.
const std::vector<CheckInfo>& check_catalog();
bool is_check_id(const std::string& id);

// An empty selection runs the whole catalog. Throws InputError on an unknown id.
std::vector<CheckResult> run_checks(const Model& model, const std::string& instance,
                                    const std::vector<std::string>& selection = {},
                                    const HarnessOptions& opts = {});

struct CorpusInstance {
    std::string id;
    Model model;
};

// The instances the acceptance suite sweeps: the worked examples, Z_n for
// 2 <= n <= 36, and two-factor products Z_p x Z_q.
std::vector<CorpusInstance> standard_corpus();

}  // namespace gps
