#include "skewchar/equality.hpp"

#include "skewchar/ribbons.hpp"

#include <algorithm>

namespace skewchar {

EqualityReport necessary_conditions(const SkewDiagram& a, const SkewDiagram& b) {
    const SkewDiagram na = normalize(a), nb = normalize(b);
    const int depth = static_cast<int>(std::min(pi_nw(na).length(), pi_nw(nb).length()));

    EqualityReport report;
    for (int t = 0; t <= depth; ++t) {
        const RibbonLabeling la(strip_nw_ribbons(na, t)), lb(strip_nw_ribbons(nb, t));
        const auto& pa = la.profiles();
        const auto& pb = lb.profiles();
        LevelRecord rec;
        rec.level = t;
        rec.pi_nw_equal = la.pi_nw() == lb.pi_nw();
        rec.k_equal = pa.size() == pb.size() &&
                      std::equal(pa.begin(), pa.end(), pb.begin(), [](const auto& x, const auto& y) { return x.k == y.k; });
        rec.armleg_equal = pa.size() == pb.size() && std::equal(pa.begin(), pa.end(), pb.begin(), [](const auto& x, const auto& y) {
                               return x.arm == y.arm && x.leg == y.leg;
                           });
        if (report.verdict.pass) {
            const int failed = !rec.pi_nw_equal ? 1 : !rec.k_equal ? 2 : !rec.armleg_equal ? 3 : 0;
            if (failed != 0)
                report.verdict = {false, t, failed};
        }
        report.levels.push_back(rec);
    }
    return report;
}

FullCheck full_equality(const SkewDiagram& a, const SkewDiagram& b) {
    const CharacterSum sa = decompose_skew(a), sb = decompose_skew(b);
    FullCheck out;
    out.equal = sa == sb;
    if (out.equal)
        return out;
    // Merge the two descending term lists; the first mismatch is the
    // lexicographically largest.
    auto ia = sa.begin(), ib = sb.begin();
    while (ia != sa.end() || ib != sb.end()) {
        if (ib == sb.end() || (ia != sa.end() && ia->first > ib->first)) {
            out.first_discrepancy = Discrepancy{ia->first, ia->second, 0};
            break;
        }
        if (ia == sa.end() || ib->first > ia->first) {
            out.first_discrepancy = Discrepancy{ib->first, 0, ib->second};
            break;
        }
        if (ia->second != ib->second) {
            out.first_discrepancy = Discrepancy{ia->first, ia->second, ib->second};
            break;
        }
        ++ia;
        ++ib;
    }
    return out;
}

} // namespace skewchar
