#pragma once

#include "skewchar/core.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace skewchar {

using Multiplicity = std::uint64_t;

/// Adds with overflow detection; throws OverflowError.
Multiplicity checked_add(Multiplicity a, Multiplicity b);
Multiplicity checked_mul(Multiplicity a, Multiplicity b);

/// A semistandard filling of a skew shape whose reverse row word is a
/// lattice word. entries() is aligned with shape().boxes().
class LRTableau {
public:
    LRTableau(SkewDiagram shape, std::vector<int> entries);

    const SkewDiagram& shape() const noexcept { return shape_; }
    std::span<const int> entries() const noexcept { return entries_; }

    /// Entry at a box of the shape; throws std::out_of_range otherwise.
    int at(Box b) const;

    /// Right to left, top to bottom.
    std::vector<int> reverse_row_word() const;

private:
    SkewDiagram shape_;
    std::vector<int> entries_;
    std::vector<Box> boxes_;
};

/// A virtual character sum_nu mult(nu) [nu] with positive multiplicities.
/// Iteration is in lexicographically descending order of nu.
class CharacterSum {
public:
    using Terms = std::map<Partition, Multiplicity, std::greater<>>;

    CharacterSum() = default;
    explicit CharacterSum(int weight) : weight_(weight) {}

    /// Adds mult copies of [nu]. nu must have the sum's weight.
    void add(const Partition& nu, Multiplicity mult);

    Multiplicity multiplicity(const Partition& nu) const;
    int weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }

    /// Sum of all multiplicities.
    Multiplicity total() const;

    friend bool operator==(const CharacterSum&, const CharacterSum&) = default;

private:
    int weight_ = 0;
    Terms terms_;
};

bool is_lattice_word(std::span<const int> word);

/// Every LR tableau of the given shape and content, in backtracking order
/// (boxes filled in reverse-row-word order, smallest entry first).
/// Throws PreconditionError if |shape| != |content|.
std::vector<LRTableau> enumerate_lr_fillings(const SkewDiagram& shape, const Partition& content);

/// Number of LR tableaux of shape shape with the given content, without
/// materializing them. Same precondition as enumerate_lr_fillings.
Multiplicity count_lr_fillings(const SkewDiagram& shape, const Partition& content);

/// c(lambda; mu, nu). 0 when mu is not contained in lambda or the weights
/// do not match.
Multiplicity lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The skew character [A] = sum_nu c(outer; inner, nu) [nu].
CharacterSum decompose_skew(const SkewDiagram& a);

/// [alpha] (x) [beta] = sum_nu c(nu; alpha, beta) [nu].
CharacterSum outer_product(const Partition& alpha, const Partition& beta);

/// The outer product restricted to constituents fitting in k columns and
/// l rows.
CharacterSum schubert_product(const Partition& alpha, const Partition& beta, int k, int l);

/// All partitions nu with |nu| = weight, nu_1 <= max_part and
/// l(nu) <= max_length, in lexicographically descending order.
std::vector<Partition> partitions_of(int weight, int max_part, int max_length);

} // namespace skewchar
