#pragma once

#include "skewchar/core.hpp"
#include "skewchar/lr.hpp"

#include <vector>

namespace skewchar {

struct DurfeeWitness {
    Partition nu_inverse;
    Multiplicity mult = 0;
};

/// Maximal Durfee size of a product or of a special skew character,
/// together with constituents attaining it.
///
/// Unless `exhaustive` is set the witness list is a certified subset of
/// the maximal-Durfee constituents (the complements of the maximal-hook
/// constituents of the associated diagram); it is not a complete list.
/// With `exhaustive`, every constituent of maximal Durfee size is listed
/// with its multiplicity, taken from a full LR decomposition.
struct DurfeeMaxReport {
    int m = 0;                  ///< side of the ambient square
    SkewDiagram associated;     ///< diagram whose minimal Durfee side is complementary
    int max_durfee = 0;
    std::vector<DurfeeWitness> witnesses; ///< lexicographically descending
    bool exhaustive = false;
};

/// The box complement of nu inside the k x l rectangle, rotated by 180
/// degrees: result_i = k - nu_{l+1-i}. PreconditionError if nu does not
/// fit.
Partition complement(const Partition& nu, int k, int l);

struct AssociatedDiagram {
    int m = 0;
    SkewDiagram diagram;
};

/// m = max(alpha_1 + beta_1, l(alpha) + l(beta)) and the diagram
/// complement(alpha, m, m) / beta, whose character corresponds to
/// [alpha] (x) [beta] under complementation in (m^m).
AssociatedDiagram associated_diagram(const Partition& alpha, const Partition& beta);

DurfeeMaxReport max_durfee_product(const Partition& alpha, const Partition& beta, bool exhaustive = false);

/// For lambda/mu with lambda = (lambda_1^k, lambda_{k+1}, ..., lambda_l),
/// lambda_1 = l, k >= l(mu) and mu_1 <= lambda_l. Throws
/// PreconditionError naming the failed clause otherwise.
///
/// The witnesses are complements in (l^l) of the maximal-hook constituents
/// of [mu] (x) [lambda^{-1}].
DurfeeMaxReport max_durfee_special_skew(const SkewDiagram& a, bool exhaustive = false);

/// Whether the coefficient of [alpha] in [lambda/mu] equals the coefficient
/// of the complement of alpha in the (k^l)-restricted product of mu and
/// the complement of lambda, for every alpha in the rectangle.
/// Requires mu in lambda in (k^l).
bool verify_complementation(const Partition& mu, const Partition& lambda, int k, int l);

} // namespace skewchar
