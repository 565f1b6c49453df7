#pragma once

#include <string>
#include <vector>

#include "crossforge/cr.hpp"
#include "crossforge/transforms.hpp"

namespace crossforge {

// Which column each V_i uses (value[i], 1-based) and which variable t[j]
// lets H_j change rows. The certificate uses the satisfying values and the
// smallest satisfying variable per clause; other choices give drawings
// that miss the budgets.
struct CrLayout {
    std::vector<bool> value;
    std::vector<int> t;
};

CrLayout certificate_layout(const CnfInstance& cnf, const Assignment& a);
Drawing layout_cr_drawing(const CrInstance& inst, const CrLayout& layout);
// Throws std::invalid_argument when a does not satisfy the formula.
Drawing generate_cr_certificate(const CrInstance& inst, const Assignment& a);

struct PathBudget {
    std::string name;  // "V_1", "H_2", "H_enf"
    Int weighted = 0;
    long unweighted = 0;
    Int expected_weighted;
    long expected_unweighted = 0;

    bool ok() const { return weighted == expected_weighted && unweighted == expected_unweighted; }
    Int delta() const { return weighted - expected_weighted; }
};

struct BudgetReport {
    std::vector<PathBudget> paths;
    long blue_blue = 0, red_red = 0;
    Int weighted_total = 0;
    long unweighted_total = 0;
    Int expected_k;
    long expected_unweighted = 0;

    bool ok() const;
    // first violated equality, empty when ok
    std::string failure() const;
    std::string text() const;
};

// Per-path crossing budgets of a drawing of inst.G. Does not throw on
// violated equalities; see BudgetReport::ok and failure.
BudgetReport check_budgets(const Drawing& d, const CrInstance& inst);

// Adds the cycle C along the boundary and the straight edge rb.
Drawing extend_to_near_planar(const Drawing& d, const NearPlanarInstance& np);

// Reflection x -> width - x; the boundary stays counterclockwise.
Drawing mirror_drawing(const Drawing& d, const Rat& width);

}  // namespace crossforge
