#pragma once

#include "skewchar/core.hpp"
#include "skewchar/durfee_max.hpp"
#include "skewchar/equality.hpp"
#include "skewchar/extremal.hpp"
#include "skewchar/lr.hpp"

#include <optional>
#include <string>

// Cross-checks of the constructive results against full LR decompositions.
// Each returns std::nullopt on agreement and a description of the first
// mismatch otherwise. All of them are exponential in the number of boxes.
namespace skewchar::verify {

/// The constituents of [A] with lexicographically maximal principal hook
/// lengths, with their multiplicities.
CharacterSum max_hook_subset(const CharacterSum& decomposition);

std::optional<std::string> decomposition(const SkewDiagram& a, const CharacterSum& sum);
std::optional<std::string> product(const Partition& alpha, const Partition& beta, const CharacterSum& sum);
std::optional<std::string> schubert(const Partition& alpha, const Partition& beta, int k, int l, const CharacterSum& sum);
std::optional<std::string> hook_lengths(const SkewDiagram& a);
std::optional<std::string> max_hook(const SkewDiagram& a, const MaxHookReport& report);

/// `oracle` is the full decomposition of the character the report is about.
std::optional<std::string> durfee_max(const DurfeeMaxReport& report, const CharacterSum& oracle);

std::optional<std::string> equality(const SkewDiagram& a, const SkewDiagram& b, const EqualityReport& report);

} // namespace skewchar::verify
