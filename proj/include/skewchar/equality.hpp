#pragma once

#include "skewchar/core.hpp"
#include "skewchar/lr.hpp"

#include <optional>
#include <vector>

namespace skewchar {

/// Comparison of the two diagrams after removing their first `level`
/// northwest ribbons.
struct LevelRecord {
    int level = 0;
    bool pi_nw_equal = false;
    bool k_equal = false;
    bool armleg_equal = false;
};

/// Necessary conditions checked structurally. Condition numbers:
/// 1 = equal pi_nw, 2 = equal ribbon counts k_i, 3 = equal arms and legs.
struct StructuralVerdict {
    bool pass = true;
    int level = 0;     ///< first failing level when !pass
    int condition = 0; ///< first failing condition when !pass
};

struct Discrepancy {
    Partition nu;
    Multiplicity mult_a = 0;
    Multiplicity mult_b = 0;
};

struct FullCheck {
    bool equal = false;
    std::optional<Discrepancy> first_discrepancy; ///< lexicographically largest
};

struct EqualityReport {
    std::vector<LevelRecord> levels;
    StructuralVerdict verdict;
    std::optional<FullCheck> full;
};

/// Compares pi_nw, the ribbon counts, and the ribbon arms and legs of A and
/// B after stripping t northwest ribbons, for t = 0 .. min(l(pi_nw(A)),
/// l(pi_nw(B))). A failing level proves [A] != [B]; passing every level
/// proves nothing.
EqualityReport necessary_conditions(const SkewDiagram& a, const SkewDiagram& b);

/// Term-by-term comparison of the two LR decompositions.
FullCheck full_equality(const SkewDiagram& a, const SkewDiagram& b);

} // namespace skewchar
