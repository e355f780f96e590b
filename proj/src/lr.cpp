#include "skewchar/lr.hpp"

#include "skewchar/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewchar {

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
    Multiplicity out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("multiplicity overflow");
    return out;
}

Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
    Multiplicity out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("multiplicity overflow");
    return out;
}

LRTableau::LRTableau(SkewDiagram shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)), boxes_(shape_.boxes()) {
    if (entries_.size() != boxes_.size())
        throw PreconditionError("tableau needs one entry per box");
}

int LRTableau::at(Box b) const {
    auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
    if (it == boxes_.end() || *it != b)
        throw std::out_of_range("box not in tableau shape");
    return entries_[static_cast<std::size_t>(it - boxes_.begin())];
}

std::vector<int> LRTableau::reverse_row_word() const {
    std::vector<int> word;
    word.reserve(entries_.size());
    std::size_t start = 0;
    while (start < boxes_.size()) {
        std::size_t end = start;
        while (end < boxes_.size() && boxes_[end].row == boxes_[start].row)
            ++end;
        for (std::size_t i = end; i > start; --i)
            word.push_back(entries_[i - 1]);
        start = end;
    }
    return word;
}

void CharacterSum::add(const Partition& nu, Multiplicity mult) {
    if (mult == 0)
        return;
    if (nu.weight() != weight_)
        throw PreconditionError("character sum terms must share one weight");
    auto [it, fresh] = terms_.try_emplace(nu, mult);
    if (!fresh)
        it->second = checked_add(it->second, mult);
}

Multiplicity CharacterSum::multiplicity(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? 0 : it->second;
}

Multiplicity CharacterSum::total() const {
    Multiplicity t = 0;
    for (const auto& [nu, mult] : terms_)
        t = checked_add(t, mult);
    return t;
}

bool is_lattice_word(std::span<const int> word) {
    std::vector<int> seen;
    for (int v : word) {
        if (v < 1)
            return false;
        if (seen.size() < static_cast<std::size_t>(v) + 1)
            seen.resize(static_cast<std::size_t>(v) + 1, 0);
        ++seen[static_cast<std::size_t>(v)];
        if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)])
            return false;
    }
    return true;
}

namespace {

// Backtracking over LR fillings. Boxes are visited in reverse-row-word
// order so the lattice condition is checked incrementally: placing v > 1
// is allowed iff count[v] < count[v-1] beforehand.
class FillingSearch {
public:
    FillingSearch(const SkewDiagram& shape, const Partition* content)
        : boxes_(shape.boxes()), content_(content) {
        // Fill order: rows top to bottom, each row right to left.
        std::size_t start = 0;
        while (start < boxes_.size()) {
            std::size_t end = start;
            while (end < boxes_.size() && boxes_[end].row == boxes_[start].row)
                ++end;
            for (std::size_t i = end; i > start; --i)
                order_.push_back(i - 1);
            start = end;
        }
        std::vector<long> position(boxes_.size());
        for (std::size_t p = 0; p < order_.size(); ++p)
            position[order_[p]] = static_cast<long>(p);
        above_.assign(order_.size(), -1);
        right_.assign(order_.size(), -1);
        for (std::size_t p = 0; p < order_.size(); ++p) {
            const Box b = boxes_[order_[p]];
            if (shape.contains({b.row - 1, b.col}))
                above_[p] = position[index_of({b.row - 1, b.col})];
            if (shape.contains({b.row, b.col + 1}))
                right_[p] = position[index_of({b.row, b.col + 1})];
        }
        const std::size_t rows = shape.outer().length();
        max_value_ = content ? static_cast<int>(content->length()) : static_cast<int>(rows);
        counts_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
        values_.assign(order_.size(), 0);
    }

    template <typename Visit>
    void run(Visit&& visit) {
        step(0, visit);
    }

    // Entries aligned with shape.boxes() for the current complete filling.
    std::vector<int> entries() const {
        std::vector<int> out(boxes_.size());
        for (std::size_t p = 0; p < order_.size(); ++p)
            out[order_[p]] = values_[p];
        return out;
    }

    // Content of the current complete filling.
    Partition content() const {
        std::vector<int> c;
        for (int v = 1; v <= max_value_ && counts_[static_cast<std::size_t>(v)] > 0; ++v)
            c.push_back(counts_[static_cast<std::size_t>(v)]);
        return Partition(std::move(c));
    }

private:
    std::size_t index_of(Box b) const {
        return static_cast<std::size_t>(std::lower_bound(boxes_.begin(), boxes_.end(), b) - boxes_.begin());
    }

    template <typename Visit>
    void step(std::size_t p, Visit& visit) {
        if (p == order_.size()) {
            visit(*this);
            return;
        }
        int lo = 1, hi = max_value_;
        if (above_[p] >= 0)
            lo = values_[static_cast<std::size_t>(above_[p])] + 1;
        if (right_[p] >= 0)
            hi = std::min(hi, values_[static_cast<std::size_t>(right_[p])]);
        for (int v = lo; v <= hi; ++v) {
            const auto u = static_cast<std::size_t>(v);
            if (v > 1 && counts_[u] >= counts_[u - 1])
                continue;
            if (content_ && counts_[u] >= (*content_)[u - 1])
                continue;
            ++counts_[u];
            values_[p] = v;
            step(p + 1, visit);
            --counts_[u];
        }
    }

    std::vector<Box> boxes_;
    const Partition* content_;
    std::vector<std::size_t> order_;
    std::vector<long> above_, right_;
    std::vector<int> counts_;
    std::vector<int> values_;
    int max_value_ = 0;
};

} // namespace

std::vector<LRTableau> enumerate_lr_fillings(const SkewDiagram& shape, const Partition& content) {
    if (shape.size() != content.weight())
        throw PreconditionError("shape and content weights differ");
    std::vector<LRTableau> out;
    FillingSearch search(shape, &content);
    search.run([&](const FillingSearch& s) { out.emplace_back(shape, s.entries()); });
    return out;
}

Multiplicity count_lr_fillings(const SkewDiagram& shape, const Partition& content) {
    if (shape.size() != content.weight())
        throw PreconditionError("shape and content weights differ");
    Multiplicity n = 0;
    FillingSearch search(shape, &content);
    search.run([&](const FillingSearch&) { n = checked_add(n, 1); });
    return n;
}

Multiplicity lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(mu, lambda) || !contains(nu, lambda) || lambda.weight() != mu.weight() + nu.weight())
        return 0;
    return count_lr_fillings(SkewDiagram(lambda, mu), nu);
}

CharacterSum decompose_skew(const SkewDiagram& a) {
    CharacterSum out(a.size());
    FillingSearch search(a, nullptr);
    search.run([&](const FillingSearch& s) { out.add(s.content(), 1); });
    return out;
}

std::vector<Partition> partitions_of(int weight, int max_part, int max_length) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) >= max_length)
            return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    if (weight >= 0)
        rec(rec, weight, max_part);
    return out;
}

namespace {

// Partitions nu containing alpha with |nu/alpha| = extra, nu_1 <= max_part
// and l(nu) <= max_length, lexicographically descending.
std::vector<Partition> supersets_of(const Partition& alpha, int extra, int max_part, int max_length) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto& self, int row, int remaining, int cap) -> void {
        const int base = alpha[static_cast<std::size_t>(row)];
        if (row == max_length || (base == 0 && remaining == 0)) {
            if (remaining == 0)
                out.emplace_back(parts);
            return;
        }
        for (int p = std::min(cap, base + remaining); p >= std::max(base, 1); --p) {
            parts.push_back(p);
            self(self, row + 1, remaining - (p - base), p);
            parts.pop_back();
        }
    };
    rec(rec, 0, extra, max_part);
    return out;
}

} // namespace

CharacterSum outer_product(const Partition& alpha, const Partition& beta) {
    CharacterSum out(alpha.weight() + beta.weight());
    const int max_part = alpha[0] + beta[0];
    const int max_length = static_cast<int>(alpha.length() + beta.length());
    for (const Partition& nu : supersets_of(alpha, beta.weight(), max_part, max_length))
        out.add(nu, count_lr_fillings(SkewDiagram(nu, alpha), beta));
    return out;
}

CharacterSum schubert_product(const Partition& alpha, const Partition& beta, int k, int l) {
    CharacterSum out(alpha.weight() + beta.weight());
    for (const auto& [nu, mult] : outer_product(alpha, beta))
        if (nu[0] <= k && static_cast<int>(nu.length()) <= l)
            out.add(nu, mult);
    return out;
}

} // namespace skewchar
