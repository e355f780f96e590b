#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace skewchar {

/// A weakly decreasing sequence of positive integers. Zero parts are
/// stripped at construction, so two partitions are equal iff their part
/// lists are equal. Reading past the last part yields 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // 0-based; 0 beyond length().
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return weight_; }
    std::span<const int> parts() const noexcept { return parts_; }

    // Lexicographic order on the part lists. Zero padding makes this the
    // usual lexicographic order on partitions.
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Matrix-style, 1-based coordinates.
struct Box {
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// The set difference outer \ inner of two Young diagrams.
class SkewDiagram {
public:
    SkewDiagram() = default;
    explicit SkewDiagram(Partition outer, Partition inner = {});

    /// Rebuilds a skew diagram from an arbitrary box set, keeping its
    /// coordinates. Throws PreconditionError if the set is not the box set
    /// of any skew diagram.
    static SkewDiagram from_boxes(std::vector<Box> boxes);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    int size() const noexcept { return outer_.weight() - inner_.weight(); }
    bool empty() const noexcept { return size() == 0; }
    bool contains(Box b) const noexcept;

    /// Boxes in row-major order (top to bottom, left to right).
    std::vector<Box> boxes() const;

    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

private:
    Partition outer_;
    Partition inner_;
};

Partition conjugate(const Partition& lambda);
Partition add_partitions(const Partition& mu, const Partition& nu);
int durfee(const Partition& lambda);
Partition principal_hook_lengths(const Partition& lambda);

/// lambda with its first row and first column removed. Throws
/// PreconditionError on the empty partition.
Partition first_hook_strip(const Partition& lambda);

std::strong_ordering lex_compare(const Partition& mu, const Partition& nu);
bool contains(const Partition& mu, const Partition& lambda);

/// Builds the partition with Frobenius coordinates (arms[i] | legs[i]).
/// Arms and legs must both be strictly decreasing and non-negative;
/// otherwise PreconditionError.
Partition from_frobenius(std::span<const int> arms, std::span<const int> legs);

SkewDiagram normalize(const SkewDiagram& a);
SkewDiagram rotate180(const SkewDiagram& a);

/// Maximal groups of boxes linked by shared rows or columns, each
/// normalized, ordered by their topmost-then-leftmost box.
std::vector<SkewDiagram> components(const SkewDiagram& a);

/// alpha placed to the northeast of beta, sharing no row or column.
SkewDiagram embed_disjoint(const Partition& alpha, const Partition& beta);

/// Row lengths and column heights of a skew diagram, top/left first.
std::vector<int> row_lengths(const SkewDiagram& a);
std::vector<int> column_heights(const SkewDiagram& a);

} // namespace skewchar
