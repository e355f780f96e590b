#include "skewchar/durfee_max.hpp"

#include "skewchar/errors.hpp"
#include "skewchar/extremal.hpp"
#include "skewchar/ribbons.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace skewchar {

Partition complement(const Partition& nu, int k, int l) {
    if (k < 0 || l < 0 || nu[0] > k || static_cast<int>(nu.length()) > l)
        throw PreconditionError("partition does not fit the " + std::to_string(k) + "x" + std::to_string(l) +
                                " rectangle");
    std::vector<int> out(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        out[static_cast<std::size_t>(i)] = k - nu[static_cast<std::size_t>(l - 1 - i)];
    return Partition(std::move(out));
}

AssociatedDiagram associated_diagram(const Partition& alpha, const Partition& beta) {
    if (alpha.empty() && beta.empty())
        throw PreconditionError("associated diagram of two empty partitions");
    const int m = std::max(alpha[0] + beta[0], static_cast<int>(alpha.length() + beta.length()));
    return {m, SkewDiagram(complement(alpha, m, m), beta)};
}

namespace {

void sort_witnesses(std::vector<DurfeeWitness>& w) {
    std::sort(w.begin(), w.end(), [](const DurfeeWitness& x, const DurfeeWitness& y) {
        return x.nu_inverse > y.nu_inverse;
    });
}

std::vector<DurfeeWitness> exhaustive_witnesses(const CharacterSum& sum, int max_durfee) {
    std::vector<DurfeeWitness> out;
    for (const auto& [nu, mult] : sum)
        if (durfee(nu) == max_durfee)
            out.push_back({nu, mult});
    return out;
}

} // namespace

DurfeeMaxReport max_durfee_product(const Partition& alpha, const Partition& beta, bool exhaustive) {
    auto [m, diagram] = associated_diagram(alpha, beta);
    DurfeeMaxReport report;
    report.m = m;
    report.associated = diagram;
    report.max_durfee = m - min_durfee(diagram);
    report.exhaustive = exhaustive;
    if (exhaustive) {
        report.witnesses = exhaustive_witnesses(outer_product(alpha, beta), report.max_durfee);
    } else {
        for (const MaxHookWitness& w : max_hl_characters(diagram).witnesses)
            report.witnesses.push_back({complement(w.nu, m, m), w.mult});
    }
    sort_witnesses(report.witnesses);
    return report;
}

DurfeeMaxReport max_durfee_special_skew(const SkewDiagram& a, bool exhaustive) {
    const Partition& lambda = a.outer();
    const Partition& mu = a.inner();
    if (lambda.empty())
        throw PreconditionError("special skew shape needs a nonempty outer partition");
    const int l = static_cast<int>(lambda.length());
    if (lambda[0] != l)
        throw PreconditionError("special skew shape needs lambda_1 = l(lambda)");
    int k = 0;
    while (static_cast<std::size_t>(k) < lambda.length() && lambda[static_cast<std::size_t>(k)] == lambda[0])
        ++k;
    if (k < static_cast<int>(mu.length()))
        throw PreconditionError("special skew shape needs k >= l(mu), k the multiplicity of lambda_1");
    if (mu[0] > lambda[lambda.length() - 1])
        throw PreconditionError("special skew shape needs mu_1 <= lambda_l");

    const Partition lambda_inv = complement(lambda, l, l);
    DurfeeMaxReport report;
    report.m = l;
    report.associated = embed_disjoint(mu, lambda_inv);
    report.max_durfee = l - std::max(durfee(mu), durfee(lambda_inv));
    report.exhaustive = exhaustive;
    if (exhaustive) {
        report.witnesses = exhaustive_witnesses(decompose_skew(a), report.max_durfee);
    } else {
        for (const MaxHookWitness& w : max_hl_characters(report.associated).witnesses)
            report.witnesses.push_back({complement(w.nu, l, l), w.mult});
    }
    sort_witnesses(report.witnesses);
    return report;
}

bool verify_complementation(const Partition& mu, const Partition& lambda, int k, int l) {
    if (!contains(mu, lambda))
        throw PreconditionError("inner not contained in outer");
    if (lambda[0] > k || static_cast<int>(lambda.length()) > l)
        throw PreconditionError("outer partition does not fit the rectangle");
    const CharacterSum skew = decompose_skew(SkewDiagram(lambda, mu));
    const CharacterSum restricted = schubert_product(mu, complement(lambda, k, l), k, l);
    // Every constituent on either side lies in the rectangle, so checking
    // both key sets covers all alpha.
    for (const auto& [alpha, mult] : skew)
        if (restricted.multiplicity(complement(alpha, k, l)) != mult)
            return false;
    for (const auto& [alpha, mult] : restricted)
        if (skew.multiplicity(complement(alpha, k, l)) != mult)
            return false;
    return true;
}

} // namespace skewchar
