#pragma once

#include "skewchar/core.hpp"
#include "skewchar/durfee_max.hpp"
#include "skewchar/equality.hpp"
#include "skewchar/extremal.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/ribbons.hpp"

#include <string>
#include <string_view>

namespace skewchar {

// Grammar: comma-separated parts, each `n` or `n^e` (e copies of n);
// whitespace is ignored and `()` or the empty string is the empty
// partition. A skew diagram is `<outer>/<inner>`; the inner part may be
// empty or absent.

/// Throws ParseError on malformed text or parts that are not weakly decreasing.
Partition parse_partition(std::string_view text);

/// ParseError for malformed text, PreconditionError if inner is not
/// contained in outer.
SkewDiagram parse_skew(std::string_view text);

/// Exponent-compressed form, e.g. `10^2,8^4,5^2`; the empty partition is `()`.
std::string format_partition(const Partition& p);

/// `<outer>/<inner>`, with an empty inner written as nothing.
std::string format_skew(const SkewDiagram& a);

enum class RenderMode { plain, labels };

/// One text row per diagram row: `:` for boxes of the inner partition,
/// `#` for diagram boxes (plain) or their northwest ribbon label (labels).
/// Labels from 10 on are drawn as letters and explained in a legend line.
std::string render(const SkewDiagram& a, RenderMode mode);

std::string to_json(const CharacterSum& sum);
std::string to_json(const RibbonLabeling& labeling);
std::string to_json(const MaxHookReport& report);
std::string to_json(const DurfeeMaxReport& report);
std::string to_json(const EqualityReport& report);

std::string to_text(const CharacterSum& sum);
std::string to_text(const RibbonLabeling& labeling);
std::string to_text(const MaxHookReport& report);
std::string to_text(const DurfeeMaxReport& report);
std::string to_text(const EqualityReport& report);

} // namespace skewchar
