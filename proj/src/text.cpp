#include "skewchar/text.hpp"

#include "skewchar/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace skewchar {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kMaxPart = 100000;

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

int parse_number(std::string_view tok, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0 || value > kMaxPart)
        throw ParseError("bad number '" + std::string(tok) + "' in '" + std::string(whole) + "'");
    return value;
}

Partition parse_partition_compact(const std::string& s) {
    if (s.empty() || s == "()")
        return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = std::min(s.find(',', start), s.size());
        const std::string_view item(s.data() + start, comma - start);
        const std::size_t caret = item.find('^');
        const int value = parse_number(item.substr(0, caret), s);
        const int copies = caret == std::string_view::npos ? 1 : parse_number(item.substr(caret + 1), s);
        if (parts.size() + static_cast<std::size_t>(copies) > static_cast<std::size_t>(kMaxPart))
            throw ParseError("partition too long: '" + s + "'");
        parts.insert(parts.end(), static_cast<std::size_t>(copies), value);
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const PreconditionError&) {
        throw ParseError("parts are not weakly decreasing: '" + s + "'");
    }
}

Json json_parts(const Partition& p) {
    return Json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Json json_diagram(const SkewDiagram& a) {
    return Json{{"outer", json_parts(a.outer())}, {"inner", json_parts(a.inner())}};
}

char label_glyph(int label) {
    if (label < 10)
        return static_cast<char>('0' + label);
    if (label < 36)
        return static_cast<char>('a' + label - 10);
    return static_cast<char>('A' + label - 36);
}

} // namespace

Partition parse_partition(std::string_view text) {
    return parse_partition_compact(strip_spaces(text));
}

SkewDiagram parse_skew(std::string_view text) {
    const std::string s = strip_spaces(text);
    const std::size_t slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw ParseError("more than one '/' in '" + s + "'");
    Partition outer = parse_partition_compact(s.substr(0, slash));
    Partition inner = slash == std::string::npos ? Partition{} : parse_partition_compact(s.substr(slash + 1));
    return SkewDiagram(std::move(outer), std::move(inner));
}

std::string format_partition(const Partition& p) {
    if (p.empty())
        return "()";
    std::string out;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format_skew(const SkewDiagram& a) {
    return format_partition(a.outer()) + "/" + (a.inner().empty() ? "" : format_partition(a.inner()));
}

std::string render(const SkewDiagram& a, RenderMode mode) {
    const RibbonLabeling lab(a);
    const int max_label = lab.labels().empty() ? 0 : *std::max_element(lab.labels().begin(), lab.labels().end());
    const bool numeric = mode == RenderMode::labels && max_label >= 62;
    const int width = numeric ? static_cast<int>(std::to_string(max_label).size()) : 1;

    std::ostringstream out;
    for (std::size_t r = 0; r < a.outer().length(); ++r) {
        std::string line;
        auto cell = [&](const std::string& glyph) {
            if (numeric && !line.empty())
                line += ' ';
            line += std::string(static_cast<std::size_t>(width) - glyph.size(), ' ') + glyph;
        };
        for (int c = 1; c <= a.outer()[r]; ++c) {
            if (c <= a.inner()[r])
                cell(":");
            else if (mode == RenderMode::plain)
                cell("#");
            else if (numeric)
                cell(std::to_string(lab.label({static_cast<int>(r) + 1, c})));
            else
                cell(std::string(1, label_glyph(lab.label({static_cast<int>(r) + 1, c}))));
        }
        out << line << '\n';
    }
    if (mode == RenderMode::labels && !numeric && max_label >= 10) {
        out << "legend:";
        for (int t = 10; t <= max_label; ++t)
            out << ' ' << label_glyph(t) << '=' << t;
        out << '\n';
    }
    return out.str();
}

std::string to_json(const CharacterSum& sum) {
    Json terms = Json::array();
    for (const auto& [nu, mult] : sum)
        terms.push_back(Json{{"partition", json_parts(nu)}, {"mult", mult}});
    return Json{{"weight", sum.weight()}, {"terms", std::move(terms)}}.dump(2);
}

std::string to_json(const RibbonLabeling& labeling) {
    const SkewDiagram& a = labeling.diagram();
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.outer().length(); ++r) {
        Json row = Json::array();
        for (int c = a.inner()[r] + 1; c <= a.outer()[r]; ++c)
            row.push_back(labeling.label({static_cast<int>(r) + 1, c}));
        rows.push_back(std::move(row));
    }
    Json profiles = Json::array();
    for (const RibbonProfile& p : labeling.profiles())
        profiles.push_back(
            Json{{"index", p.index}, {"size", p.size}, {"k", p.k}, {"arm", p.arm}, {"leg", p.leg}});
    return Json{{"diagram", json_diagram(a)},
                {"pi_nw", json_parts(labeling.pi_nw())},
                {"profiles", std::move(profiles)},
                {"labels", std::move(rows)}}
        .dump(2);
}

std::string to_json(const MaxHookReport& report) {
    Json witnesses = Json::array();
    for (const MaxHookWitness& w : report.witnesses)
        witnesses.push_back(Json{{"nu", json_parts(w.nu)}, {"mult", w.mult}, {"choices", w.choices}});
    return Json{{"hl", json_parts(report.hl)},
                {"gamma", json_parts(report.gamma)},
                {"distinct", report.distinct_count},
                {"min_durfee", report.min_durfee},
                {"witnesses", std::move(witnesses)}}
        .dump(2);
}

std::string to_json(const DurfeeMaxReport& report) {
    Json witnesses = Json::array();
    for (const DurfeeWitness& w : report.witnesses)
        witnesses.push_back(Json{{"nu_inverse", json_parts(w.nu_inverse)}, {"mult", w.mult}});
    return Json{{"m", report.m},
                {"associated", json_diagram(report.associated)},
                {"max_durfee", report.max_durfee},
                {"witnesses", std::move(witnesses)},
                {"exhaustive", report.exhaustive}}
        .dump(2);
}

std::string to_json(const EqualityReport& report) {
    Json levels = Json::array();
    for (const LevelRecord& r : report.levels)
        levels.push_back(Json{{"level", r.level},
                              {"pi_nw_equal", r.pi_nw_equal},
                              {"k_equal", r.k_equal},
                              {"armleg_equal", r.armleg_equal}});
    Json verdict{{"pass", report.verdict.pass}};
    if (!report.verdict.pass) {
        verdict["level"] = report.verdict.level;
        verdict["condition"] = report.verdict.condition;
    }
    Json full = nullptr;
    if (report.full) {
        full = Json{{"equal", report.full->equal}, {"first_discrepancy", nullptr}};
        if (const auto& d = report.full->first_discrepancy)
            full["first_discrepancy"] = Json{{"partition", json_parts(d->nu)}, {"mult_a", d->mult_a}, {"mult_b", d->mult_b}};
    }
    return Json{{"levels", std::move(levels)}, {"structural_verdict", std::move(verdict)}, {"full_check", std::move(full)}}
        .dump(2);
}

std::string to_text(const CharacterSum& sum) {
    std::ostringstream out;
    out << "weight " << sum.weight() << ", " << sum.size() << " distinct constituents, total multiplicity "
        << sum.total() << '\n';
    for (const auto& [nu, mult] : sum)
        out << "  " << mult << " x [" << format_partition(nu) << "]\n";
    return out.str();
}

std::string to_text(const RibbonLabeling& labeling) {
    std::ostringstream out;
    out << render(labeling.diagram(), RenderMode::labels);
    out << "pi_nw = " << format_partition(labeling.pi_nw()) << '\n';
    out << "ribbon  size    k  arm  leg\n";
    for (const RibbonProfile& p : labeling.profiles())
        out << std::left << std::setw(6) << ("nw_" + std::to_string(p.index)) << std::right << std::setw(6) << p.size
            << std::setw(5) << p.k << std::setw(5) << p.arm << std::setw(5) << p.leg << '\n';
    return out.str();
}

std::string to_text(const MaxHookReport& report) {
    std::ostringstream out;
    out << "hl = " << format_partition(report.hl) << '\n';
    out << "gamma = " << format_partition(report.gamma) << '\n';
    out << "min_durfee = " << report.min_durfee << '\n';
    out << "distinct = " << report.distinct_count << '\n';
    for (const MaxHookWitness& w : report.witnesses) {
        out << "  " << w.mult << " x [" << format_partition(w.nu) << "]  choices";
        for (int c : w.choices)
            out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

std::string to_text(const DurfeeMaxReport& report) {
    std::ostringstream out;
    out << "m = " << report.m << '\n';
    out << "associated = " << format_skew(report.associated) << '\n';
    out << "max_durfee = " << report.max_durfee << '\n';
    out << (report.exhaustive ? "all constituents of maximal Durfee size:\n"
                              : "some constituents of maximal Durfee size (not exhaustive):\n");
    for (const DurfeeWitness& w : report.witnesses)
        out << "  " << w.mult << " x [" << format_partition(w.nu_inverse) << "]\n";
    return out.str();
}

std::string to_text(const EqualityReport& report) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "level  pi_nw    k  arm/leg\n";
    for (const LevelRecord& r : report.levels)
        out << std::setw(5) << r.level << std::setw(7) << yn(r.pi_nw_equal) << std::setw(5) << yn(r.k_equal)
            << std::setw(9) << yn(r.armleg_equal) << '\n';
    if (report.verdict.pass)
        out << "structural: pass (equality not excluded)\n";
    else
        out << "structural: fail at level " << report.verdict.level << ", condition " << report.verdict.condition
            << '\n';
    if (report.full) {
        if (report.full->equal) {
            out << "full: equal\n";
        } else {
            out << "full: unequal";
            if (const auto& d = report.full->first_discrepancy)
                out << ", first discrepancy [" << format_partition(d->nu) << "] " << d->mult_a << " vs " << d->mult_b;
            out << '\n';
        }
    }
    return out.str();
}

} // namespace skewchar
