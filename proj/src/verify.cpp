#include "skewchar/verify.hpp"

#include "skewchar/text.hpp"

#include <algorithm>

namespace skewchar::verify {

namespace {

std::string term(const Partition& nu) {
    return "[" + format_partition(nu) + "]";
}

std::optional<std::string> compare_sums(const CharacterSum& got, const CharacterSum& want, const std::string& what) {
    if (got == want)
        return std::nullopt;
    for (const auto& [nu, mult] : want)
        if (got.multiplicity(nu) != mult)
            return what + ": " + term(nu) + " has multiplicity " + std::to_string(got.multiplicity(nu)) + ", expected " +
                   std::to_string(mult);
    for (const auto& [nu, mult] : got)
        if (want.multiplicity(nu) != mult)
            return what + ": unexpected constituent " + term(nu);
    return what + ": weights differ";
}

} // namespace

CharacterSum max_hook_subset(const CharacterSum& decomposition) {
    Partition best;
    for (const auto& [nu, mult] : decomposition)
        best = std::max(best, principal_hook_lengths(nu));
    CharacterSum out(decomposition.weight());
    for (const auto& [nu, mult] : decomposition)
        if (principal_hook_lengths(nu) == best)
            out.add(nu, mult);
    return out;
}

std::optional<std::string> decomposition(const SkewDiagram& a, const CharacterSum& sum) {
    return compare_sums(sum, decompose_skew(rotate180(a)), "rotated decomposition");
}

std::optional<std::string> product(const Partition& alpha, const Partition& beta, const CharacterSum& sum) {
    return compare_sums(sum, decompose_skew(embed_disjoint(alpha, beta)), "disjoint-diagram decomposition");
}

std::optional<std::string> schubert(const Partition& alpha, const Partition& beta, int k, int l, const CharacterSum& sum) {
    CharacterSum want(alpha.weight() + beta.weight());
    for (const auto& [nu, mult] : decompose_skew(embed_disjoint(alpha, beta)))
        if (nu[0] <= k && static_cast<int>(nu.length()) <= l)
            want.add(nu, mult);
    return compare_sums(sum, want, "restricted disjoint-diagram decomposition");
}

std::optional<std::string> hook_lengths(const SkewDiagram& a) {
    const CharacterSum subset = max_hook_subset(decompose_skew(a));
    const Partition want = principal_hook_lengths(subset.begin()->first);
    const Partition got = hl_of_skew(a);
    if (got != want)
        return "hl is " + term(got) + " but the decomposition's maximum is " + term(want);
    return std::nullopt;
}

std::optional<std::string> max_hook(const SkewDiagram& a, const MaxHookReport& report) {
    const CharacterSum oracle = decompose_skew(a);
    const CharacterSum subset = max_hook_subset(oracle);
    const Partition want_hl = principal_hook_lengths(subset.begin()->first);
    if (report.hl != want_hl)
        return "hl is " + term(report.hl) + " but the decomposition's maximum is " + term(want_hl);

    CharacterSum got(a.size());
    for (const MaxHookWitness& w : report.witnesses)
        got.add(w.nu, w.mult);
    if (auto err = compare_sums(got, subset, "maximal-hook constituents"))
        return err;
    if (report.distinct_count != subset.size())
        return "distinct count " + std::to_string(report.distinct_count) + ", expected " + std::to_string(subset.size());

    int min_d = durfee(oracle.begin()->first);
    for (const auto& [nu, mult] : oracle)
        min_d = std::min(min_d, durfee(nu));
    if (report.min_durfee != min_d)
        return "min Durfee " + std::to_string(report.min_durfee) + ", expected " + std::to_string(min_d);

    const auto& smallest = *oracle.terms().rbegin();
    const auto& largest = *oracle.terms().begin();
    if (pi_min(a) != smallest.first || smallest.second != 1)
        return "pi_min " + term(pi_min(a)) + " is not the smallest constituent " + term(smallest.first) +
               " with multiplicity 1";
    if (pi_max(a) != largest.first || largest.second != 1)
        return "pi_max " + term(pi_max(a)) + " is not the largest constituent " + term(largest.first) +
               " with multiplicity 1";
    return std::nullopt;
}

std::optional<std::string> durfee_max(const DurfeeMaxReport& report, const CharacterSum& oracle) {
    int max_d = 0;
    for (const auto& [nu, mult] : oracle)
        max_d = std::max(max_d, durfee(nu));
    if (report.max_durfee != max_d)
        return "max Durfee " + std::to_string(report.max_durfee) + ", expected " + std::to_string(max_d);
    for (const DurfeeWitness& w : report.witnesses) {
        if (durfee(w.nu_inverse) != max_d)
            return "witness " + term(w.nu_inverse) + " does not have maximal Durfee size";
        if (oracle.multiplicity(w.nu_inverse) != w.mult)
            return "witness " + term(w.nu_inverse) + " has multiplicity " + std::to_string(oracle.multiplicity(w.nu_inverse)) +
                   ", reported " + std::to_string(w.mult);
    }
    if (report.exhaustive) {
        std::size_t count = 0;
        for (const auto& [nu, mult] : oracle)
            count += durfee(nu) == max_d ? 1 : 0;
        if (count != report.witnesses.size())
            return "exhaustive list has " + std::to_string(report.witnesses.size()) + " entries, expected " +
                   std::to_string(count);
    }
    return std::nullopt;
}

std::optional<std::string> equality(const SkewDiagram& a, const SkewDiagram& b, const EqualityReport& report) {
    const FullCheck full = full_equality(a, b);
    if (!report.verdict.pass && full.equal)
        return "structural test failed but the characters are equal";
    if (report.full && report.full->equal != full.equal)
        return "full comparison disagrees with the recomputation";
    return std::nullopt;
}

} // namespace skewchar::verify
