#pragma once

#include "skewchar/core.hpp"
#include "skewchar/lr.hpp"

#include <vector>

namespace skewchar {

/// One constituent [nu] of [A] with lexicographically maximal principal
/// hook lengths. choices[i] boxes went to row i+1 of gamma, the remaining
/// k_{i+1} - 1 - choices[i] to column i+1.
struct MaxHookWitness {
    Partition nu;
    Multiplicity mult = 0;
    std::vector<int> choices;
};

struct MaxHookReport {
    Partition hl;
    Partition gamma;
    std::vector<MaxHookWitness> witnesses; ///< lexicographically descending by nu
    Multiplicity distinct_count = 0;       ///< product of the k_i
    int min_durfee = 0;
};

/// Lexicographically largest principal hook length partition among the
/// constituents of [A]; equals pi_nw(A).
Partition hl_of_skew(const SkewDiagram& a);

/// The intersection of all maximal-hook constituents: the partition whose
/// i-th principal hook has the arm and leg of the i-th northwest ribbon.
Partition gamma_partition(const SkewDiagram& a);

MaxHookReport max_hl_characters(const SkewDiagram& a);

int min_durfee(const SkewDiagram& a);

/// Row lengths, resp. the conjugate of the column heights, sorted into a
/// partition: the lexicographically smallest and largest constituents.
Partition pi_min(const SkewDiagram& a);
Partition pi_max(const SkewDiagram& a);

/// binom(n, k) with checked arithmetic.
Multiplicity binomial(int n, int k);

} // namespace skewchar
