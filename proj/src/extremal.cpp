#include "skewchar/extremal.hpp"

#include "skewchar/errors.hpp"
#include "skewchar/ribbons.hpp"

#include <algorithm>
#include <functional>

namespace skewchar {

Multiplicity binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Multiplicity r = 1;
    for (int i = 1; i <= k; ++i)
        r = checked_mul(r, static_cast<Multiplicity>(n - k + i)) / static_cast<Multiplicity>(i);
    return r;
}

Partition hl_of_skew(const SkewDiagram& a) {
    return pi_nw(a);
}

namespace {

Partition frobenius_or_bug(const std::vector<int>& arms, const std::vector<int>& legs) {
    try {
        return from_frobenius(arms, legs);
    } catch (const PreconditionError& e) {
        throw InternalError(std::string("ribbon profiles do not define a partition: ") + e.what());
    }
}

} // namespace

Partition gamma_partition(const SkewDiagram& a) {
    const RibbonLabeling lab(a);
    std::vector<int> arms, legs;
    for (const RibbonProfile& p : lab.profiles()) {
        arms.push_back(p.arm);
        legs.push_back(p.leg);
    }
    return frobenius_or_bug(arms, legs);
}

MaxHookReport max_hl_characters(const SkewDiagram& a) {
    const RibbonLabeling lab(a);
    const auto& profiles = lab.profiles();

    MaxHookReport report;
    report.hl = lab.pi_nw();
    report.min_durfee = static_cast<int>(report.hl.length());
    report.gamma = gamma_partition(a);
    report.distinct_count = 1;
    for (const RibbonProfile& p : profiles)
        report.distinct_count = checked_mul(report.distinct_count, static_cast<Multiplicity>(p.k));

    std::vector<int> choices(profiles.size(), 0);
    std::vector<int> arms(profiles.size()), legs(profiles.size());
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == profiles.size()) {
            Multiplicity mult = 1;
            for (std::size_t j = 0; j < profiles.size(); ++j)
                mult = checked_mul(mult, binomial(profiles[j].k - 1, choices[j]));
            report.witnesses.push_back({frobenius_or_bug(arms, legs), mult, choices});
            return;
        }
        const RibbonProfile& p = profiles[i];
        for (int c = 0; c < p.k; ++c) {
            choices[i] = c;
            arms[i] = p.arm + c;
            legs[i] = p.leg + (p.k - 1 - c);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const MaxHookWitness& x, const MaxHookWitness& y) { return x.nu > y.nu; });
    return report;
}

int min_durfee(const SkewDiagram& a) {
    return static_cast<int>(hl_of_skew(a).length());
}

Partition pi_min(const SkewDiagram& a) {
    auto rows = row_lengths(a);
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return Partition(std::move(rows));
}

Partition pi_max(const SkewDiagram& a) {
    auto cols = column_heights(a);
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return conjugate(Partition(std::move(cols)));
}

} // namespace skewchar
