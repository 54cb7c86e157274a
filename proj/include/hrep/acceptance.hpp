// The acceptance criteria as runnable checks, shared by the acceptance
// binary and the `verify` subcommand.
#pragma once

#include "hrep/groupring.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hrep {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::string> counterexamples;
    double seconds = 0;
    json to_json() const;
};

struct AcceptanceOptions {
    bool quick = false;
    unsigned long seed = 20240611;
};

CriterionResult criterion_rank(const AcceptanceOptions& o);
CriterionResult criterion_braid(const AcceptanceOptions& o);
CriterionResult criterion_burau(const AcceptanceOptions& o);
CriterionResult criterion_lkb(const AcceptanceOptions& o);
CriterionResult criterion_naturality(const AcceptanceOptions& o);
CriterionResult criterion_delta(const AcceptanceOptions& o);
CriterionResult criterion_diffeva(const AcceptanceOptions& o);
CriterionResult criterion_degree(const AcceptanceOptions& o);
CriterionResult criterion_moriyama(const AcceptanceOptions& o);
CriterionResult criterion_abelian(const AcceptanceOptions& o);
CriterionResult criterion_quotient(const AcceptanceOptions& o);
CriterionResult criterion_phi(const AcceptanceOptions& o);
CriterionResult criterion_snf(const AcceptanceOptions& o);
// The stored calibration equals the unique search result and its digest.
CriterionResult check_calibration(const AcceptanceOptions& o);

struct NamedCriterion {
    std::string suite;
    std::function<CriterionResult(const AcceptanceOptions&)> run;
};
// In criterion order 1..13.
const std::vector<NamedCriterion>& all_criteria();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o);
std::string format_line(const CriterionResult& r);

}  // namespace hrep
