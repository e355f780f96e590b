#pragma once

#include "skewchar/core.hpp"

#include <vector>

namespace skewchar {

/// Shape data of the i-th northwest ribbon (a weak ribbon).
struct RibbonProfile {
    int index = 0;
    int size = 0;
    int k = 0;   ///< connected ribbons it decays into
    int arm = 0; ///< columns spanned minus k
    int leg = 0; ///< rows spanned minus k

    friend bool operator==(const RibbonProfile&, const RibbonProfile&) = default;
};

/// The northwest ribbon decomposition of a skew diagram.
///
/// Box (i,j) carries label H(i,j) = length of the run of boxes
/// (i,j), (i-1,j-1), (i-2,j-2), ... inside the diagram. Boxes with label
/// t form the t-th northwest ribbon. Labels are stored aligned with
/// diagram().boxes().
class RibbonLabeling {
public:
    explicit RibbonLabeling(SkewDiagram diagram);

    const SkewDiagram& diagram() const noexcept { return diagram_; }
    const std::vector<Box>& boxes() const noexcept { return boxes_; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    /// Label of a box of the diagram; throws std::out_of_range otherwise.
    int label(Box b) const;

    const Partition& pi_nw() const noexcept { return pi_nw_; }
    const std::vector<RibbonProfile>& profiles() const noexcept { return profiles_; }

private:
    SkewDiagram diagram_;
    std::vector<Box> boxes_;
    std::vector<int> labels_;
    Partition pi_nw_;
    std::vector<RibbonProfile> profiles_;
};

RibbonLabeling nw_labeling(const SkewDiagram& a);

/// Sizes of the northwest ribbons. Throws InternalError if they are not
/// weakly decreasing.
Partition pi_nw(const SkewDiagram& a);

/// Profile of the i-th northwest ribbon, 1 <= i <= l(pi_nw(a));
/// std::out_of_range otherwise.
RibbonProfile ribbon_profile(const SkewDiagram& a, int i);

/// The normalized diagram left after removing the first t northwest
/// ribbons, 0 <= t <= l(pi_nw(a)); std::out_of_range otherwise.
SkewDiagram strip_nw_ribbons(const SkewDiagram& a, int t);

} // namespace skewchar
