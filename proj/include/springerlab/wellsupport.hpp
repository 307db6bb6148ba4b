#pragma once

#include <optional>
#include <string>

#include "springerlab/induction.hpp"

namespace springerlab {

// Diagnosis of the two support conditions: a unique dominating class whose
// attached representation occurs, and all cells below the cell of that
// class's representation.
struct SupportReport {
    std::vector<UnipotentClass> support; // distinct classes, descending order
    std::optional<UnipotentClass> o0;
    bool well_supported = false;
    bool specially = false;
    int split_components = 0;
    std::vector<std::string> failures;
};

std::vector<UnipotentClass> support(const VirtualRep& rep);

SupportReport check_well_supported(const VirtualRep& rep);

struct HarnessReport {
    std::string label;
    int checked = 0;
    int passed = 0;
    int skipped_degenerate = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Induces from every maximal dual Levi and pseudo-Levi shape every product
// of special factor representations (sign on A factors) and checks that
// the result is well supported, specially so for Levi shapes. Degenerate
// type D inputs are skipped and counted.
HarnessReport verify_theorem_bs(const GroupType& group);

// For every shape and every irreducible factor input, checks both support
// conclusions against the induced class and cell of the input's cell.
HarnessReport verify_prop_ind_supp(const GroupType& group);

} // namespace springerlab
