#pragma once

#include "catalog.hpp"

namespace qpb {

struct CheckResult {
    std::string id;      // stable check identifier
    std::string anchor;  // the verified statement, cited in the report
    bool ok = true;
    std::string witness;  // first failure witness, or a short success note
};

// Ordered list of check results with deterministic text/JSON rendering.
class Report {
public:
    void add(std::string id, std::string anchor, bool ok, std::string witness = "");
    // Fold a module failure list: ok iff empty, witness = first failure.
    void add(std::string id, std::string anchor, const std::vector<std::string>& failures);

    bool ok() const;
    const std::vector<CheckResult>& results() const { return results_; }

    std::string text() const;
    std::string json() const;  // byte-deterministic given identical inputs

private:
    std::vector<CheckResult> results_;
};

// The full verification suite for a catalog example at the given bounds.
Report run_suite(const catalog::Example& ex, int max_len, int max_deg);

// The structural checks available for an arbitrary presentation: rewriting
// confluence, calculus well-definedness, Hopf axioms, and coaction
// compatibility.  Null members skip the corresponding checks.
Report run_presentation_checks(const PresentationPtr& A, const CalculusPtr& calcA,
                               const PresentationPtr& H, const StructureMapsPtr& hmaps,
                               const CalculusPtr& calcH, const CoactionPtr& coact, int max_len);

}  // namespace qpb
