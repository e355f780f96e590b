#include "skewchar/core.hpp"

#include "skewchar/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace skewchar {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PreconditionError("partition parts must be non-negative and weakly decreasing");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!skewchar::contains(inner_, outer_))
        throw PreconditionError("inner not contained in outer");
}

bool SkewDiagram::contains(Box b) const noexcept {
    if (b.row < 1 || b.col < 1)
        return false;
    const auto r = static_cast<std::size_t>(b.row - 1);
    return b.col > inner_[r] && b.col <= outer_[r];
}

std::vector<Box> SkewDiagram::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t r = 0; r < outer_.length(); ++r)
        for (int c = inner_[r] + 1; c <= outer_[r]; ++c)
            out.push_back({static_cast<int>(r) + 1, c});
    return out;
}

SkewDiagram SkewDiagram::from_boxes(std::vector<Box> boxes) {
    if (boxes.empty())
        return {};
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    const int last_row = boxes.back().row;
    if (boxes.front().row < 1 || std::any_of(boxes.begin(), boxes.end(), [](Box b) { return b.col < 1; }))
        throw PreconditionError("box coordinates must be positive");

    // lo/hi column per row; 0/0 marks an empty row.
    std::vector<int> lo(static_cast<std::size_t>(last_row), 0), hi(static_cast<std::size_t>(last_row), 0);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto r = static_cast<std::size_t>(boxes[i].row - 1);
        if (hi[r] == 0) {
            lo[r] = hi[r] = boxes[i].col;
        } else {
            if (boxes[i].col != hi[r] + 1)
                throw PreconditionError("box set has a gap inside a row");
            hi[r] = boxes[i].col;
        }
    }

    std::vector<int> outer(static_cast<std::size_t>(last_row)), inner(static_cast<std::size_t>(last_row));
    for (int r = last_row - 1; r >= 0; --r) {
        const auto i = static_cast<std::size_t>(r);
        if (hi[i] != 0) {
            outer[i] = hi[i];
            inner[i] = lo[i] - 1;
        } else {
            // An empty row sits as low as the row beneath it allows.
            const int below = i + 1 < outer.size() ? outer[i + 1] : 0;
            outer[i] = inner[i] = below;
        }
    }
    for (std::size_t i = 1; i < outer.size(); ++i)
        if (outer[i] > outer[i - 1] || inner[i] > inner[i - 1])
            throw PreconditionError("box set is not a skew diagram");
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition add_partitions(const Partition& mu, const Partition& nu) {
    std::vector<int> out(std::max(mu.length(), nu.length()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mu[i] + nu[i];
    return Partition(std::move(out));
}

int durfee(const Partition& lambda) {
    int d = 0;
    while (lambda[static_cast<std::size_t>(d)] >= d + 1)
        ++d;
    return d;
}

Partition principal_hook_lengths(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    const int d = durfee(lambda);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out.push_back((lambda[k] - i - 1) + (conj[k] - i - 1) + 1);
    }
    return Partition(std::move(out));
}

Partition first_hook_strip(const Partition& lambda) {
    if (lambda.empty())
        throw PreconditionError("first_hook_strip of the empty partition");
    std::vector<int> out;
    for (std::size_t i = 1; i < lambda.length(); ++i)
        out.push_back(lambda[i] - 1);
    return Partition(std::move(out));
}

std::strong_ordering lex_compare(const Partition& mu, const Partition& nu) {
    const std::size_t n = std::max(mu.length(), nu.length());
    for (std::size_t i = 0; i < n; ++i)
        if (mu[i] != nu[i])
            return mu[i] <=> nu[i];
    return std::strong_ordering::equal;
}

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length())
        return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

Partition from_frobenius(std::span<const int> arms, std::span<const int> legs) {
    if (arms.size() != legs.size())
        throw PreconditionError("Frobenius coordinates need as many arms as legs");
    const std::size_t d = arms.size();
    for (std::size_t i = 0; i < d; ++i) {
        if (arms[i] < 0 || legs[i] < 0)
            throw PreconditionError("negative Frobenius coordinate");
        if (i > 0 && (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1]))
            throw PreconditionError("Frobenius coordinates must be strictly decreasing");
    }
    std::vector<int> rows;
    for (std::size_t i = 0; i < d; ++i)
        rows.push_back(arms[i] + static_cast<int>(i) + 1);
    // Below the Durfee square, row r meets column j iff legs[j] + j >= r (0-based).
    const int depth = d == 0 ? 0 : legs[0] + 1;
    for (int r = static_cast<int>(d); r < depth; ++r) {
        int len = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (legs[j] + static_cast<int>(j) >= r)
                ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

SkewDiagram normalize(const SkewDiagram& a) {
    auto boxes = a.boxes();
    if (boxes.empty())
        return {};
    int min_row = boxes.front().row, min_col = boxes.front().col;
    for (const Box& b : boxes)
        min_col = std::min(min_col, b.col);
    for (Box& b : boxes) {
        b.row -= min_row - 1;
        b.col -= min_col - 1;
    }
    return SkewDiagram::from_boxes(std::move(boxes));
}

SkewDiagram rotate180(const SkewDiagram& a) {
    const SkewDiagram n = normalize(a);
    auto boxes = n.boxes();
    if (boxes.empty())
        return {};
    const int rows = boxes.back().row;
    const int cols = n.outer()[0];
    for (Box& b : boxes)
        b = {rows + 1 - b.row, cols + 1 - b.col};
    return SkewDiagram::from_boxes(std::move(boxes));
}

std::vector<SkewDiagram> components(const SkewDiagram& a) {
    const auto boxes = a.boxes();
    std::vector<std::size_t> parent(boxes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y)
            parent[std::max(x, y)] = std::min(x, y);
    };
    std::map<int, std::size_t> first_in_row, first_in_col;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (auto [it, fresh] = first_in_row.try_emplace(boxes[i].row, i); !fresh)
            unite(it->second, i);
        if (auto [it, fresh] = first_in_col.try_emplace(boxes[i].col, i); !fresh)
            unite(it->second, i);
    }
    // Roots are the smallest index of their class, and boxes are row-major,
    // so root order is topmost-then-leftmost order.
    std::map<std::size_t, std::vector<Box>> groups;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        groups[find(i)].push_back(boxes[i]);
    std::vector<SkewDiagram> out;
    out.reserve(groups.size());
    for (auto& [root, group] : groups)
        out.push_back(normalize(SkewDiagram::from_boxes(std::move(group))));
    return out;
}

SkewDiagram embed_disjoint(const Partition& alpha, const Partition& beta) {
    const int shift = beta[0];
    std::vector<int> outer, inner;
    for (int part : alpha.parts()) {
        outer.push_back(shift + part);
        inner.push_back(shift);
    }
    for (int part : beta.parts())
        outer.push_back(part);
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::vector<int> row_lengths(const SkewDiagram& a) {
    std::vector<int> out;
    for (std::size_t r = 0; r < a.outer().length(); ++r)
        out.push_back(a.outer()[r] - a.inner()[r]);
    return out;
}

std::vector<int> column_heights(const SkewDiagram& a) {
    return row_lengths(SkewDiagram(conjugate(a.outer()), conjugate(a.inner())));
}

} // namespace skewchar
