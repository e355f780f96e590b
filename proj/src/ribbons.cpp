#include "skewchar/ribbons.hpp"

#include "skewchar/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace skewchar {

namespace {

// Number of edge-connected pieces of a box set (boxes sorted row-major).
int count_edge_components(const std::vector<Box>& boxes) {
    std::vector<std::size_t> parent(boxes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](Box b) -> long {
        auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
        return it != boxes.end() && *it == b ? it - boxes.begin() : -1;
    };
    int pieces = static_cast<int>(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (Box n : {Box{boxes[i].row, boxes[i].col + 1}, Box{boxes[i].row + 1, boxes[i].col}}) {
            const long j = index_of(n);
            if (j < 0)
                continue;
            const std::size_t x = find(i), y = find(static_cast<std::size_t>(j));
            if (x != y) {
                parent[x] = y;
                --pieces;
            }
        }
    }
    return pieces;
}

} // namespace

RibbonLabeling::RibbonLabeling(SkewDiagram diagram) : diagram_(std::move(diagram)), boxes_(diagram_.boxes()) {
    labels_.resize(boxes_.size());
    int max_label = 0;
    // Row-major order visits (i-1,j-1) before (i,j).
    for (std::size_t n = 0; n < boxes_.size(); ++n) {
        const Box nw{boxes_[n].row - 1, boxes_[n].col - 1};
        labels_[n] = diagram_.contains(nw) ? label(nw) + 1 : 1;
        max_label = std::max(max_label, labels_[n]);
    }

    std::vector<std::vector<Box>> classes(static_cast<std::size_t>(max_label));
    for (std::size_t n = 0; n < boxes_.size(); ++n)
        classes[static_cast<std::size_t>(labels_[n] - 1)].push_back(boxes_[n]);

    std::vector<int> sizes;
    for (std::size_t t = 0; t < classes.size(); ++t) {
        const auto& cls = classes[t];
        std::set<int> rows, cols;
        for (Box b : cls) {
            rows.insert(b.row);
            cols.insert(b.col);
        }
        RibbonProfile p;
        p.index = static_cast<int>(t) + 1;
        p.size = static_cast<int>(cls.size());
        p.k = count_edge_components(cls);
        p.arm = static_cast<int>(cols.size()) - p.k;
        p.leg = static_cast<int>(rows.size()) - p.k;
        if (p.size != p.arm + p.leg + p.k)
            throw InternalError("northwest ribbon " + std::to_string(p.index) + " is not a weak ribbon");
        if (!sizes.empty() && p.size > sizes.back())
            throw InternalError("northwest ribbon sizes are not weakly decreasing");
        sizes.push_back(p.size);
        profiles_.push_back(p);
    }
    pi_nw_ = Partition(std::move(sizes));
}

int RibbonLabeling::label(Box b) const {
    auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
    if (it == boxes_.end() || *it != b)
        throw std::out_of_range("box not in diagram");
    return labels_[static_cast<std::size_t>(it - boxes_.begin())];
}

RibbonLabeling nw_labeling(const SkewDiagram& a) {
    return RibbonLabeling(a);
}

Partition pi_nw(const SkewDiagram& a) {
    return RibbonLabeling(a).pi_nw();
}

RibbonProfile ribbon_profile(const SkewDiagram& a, int i) {
    const RibbonLabeling lab(a);
    if (i < 1 || static_cast<std::size_t>(i) > lab.profiles().size())
        throw std::out_of_range("ribbon index out of range");
    return lab.profiles()[static_cast<std::size_t>(i - 1)];
}

SkewDiagram strip_nw_ribbons(const SkewDiagram& a, int t) {
    const RibbonLabeling lab(a);
    if (t < 0 || static_cast<std::size_t>(t) > lab.profiles().size())
        throw std::out_of_range("strip count out of range");
    std::vector<Box> kept;
    for (std::size_t n = 0; n < lab.boxes().size(); ++n)
        if (lab.labels()[n] > t)
            kept.push_back(lab.boxes()[n]);
    return normalize(SkewDiagram::from_boxes(std::move(kept)));
}

} // namespace skewchar
