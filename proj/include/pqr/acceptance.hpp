#pragma once

#include <string>
#include <vector>

#include "pqr/ingest.hpp"

namespace pqr {

// One verdict of the verification suite.  detail is deterministic: identical
// inputs produce identical text, so runs can be diffed.
struct CriterionResult {
    int number;
    std::string name;
    bool ok;
    std::string detail;
};

// Section names accepted by run_acceptance and the CLI --section flag.
const std::vector<std::string>& acceptance_sections();

// Criterion numbers selected by a section name ("all" = every criterion).
// Throws PreconditionError on an unknown name.
std::vector<int> section_criteria(const std::string& section);

// Runs the selected criteria against a loaded corpus, in ascending criterion
// order.  Entries without a realization are skipped by every criterion.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& criteria,
                                            const std::vector<CorpusEntry>& entries);

}  // namespace pqr
