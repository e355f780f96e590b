#include "skewchar/skewchar.h"

#include "skewchar/durfee_max.hpp"
#include "skewchar/equality.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/extremal.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/ribbons.hpp"
#include "skewchar/text.hpp"
#include "skewchar/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

using namespace skewchar;

struct skc_partition {
    Partition value;
};

struct skc_skew {
    SkewDiagram value;
};

namespace {

struct FromSkew {
    SkewDiagram a;
};
struct FromProduct {
    Partition alpha, beta;
};
struct FromSchubert {
    Partition alpha, beta;
    int k, l;
};

struct RibbonsData {
    RibbonLabeling labeling;
};
struct MaxHookData {
    SkewDiagram a;
    MaxHookReport report;
};
struct DurfeeProductData {
    Partition alpha, beta;
    DurfeeMaxReport report;
};
struct DurfeeSpecialData {
    SkewDiagram a;
    DurfeeMaxReport report;
};
struct EqualityData {
    SkewDiagram a, b;
    EqualityReport report;
};

thread_local std::string last_error;

skc_status fail(skc_status code, std::string message) {
    last_error = std::move(message);
    return code;
}

// Runs body, translating exceptions into status codes.
template <typename F>
skc_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const ParseError& e) {
        return fail(SKC_ERR_USAGE, e.what());
    } catch (const PreconditionError& e) {
        return fail(SKC_ERR_PRECONDITION, e.what());
    } catch (const OverflowError& e) {
        return fail(SKC_ERR_TOO_LARGE, e.what());
    } catch (const InternalError& e) {
        return fail(SKC_ERR_INTERNAL, std::string("internal error: ") + e.what());
    } catch (const std::out_of_range& e) {
        return fail(SKC_ERR_PRECONDITION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SKC_ERR_TOO_LARGE, "out of memory");
    } catch (const std::exception& e) {
        return fail(SKC_ERR_INTERNAL, std::string("internal error: ") + e.what());
    }
}

skc_status null_arg() {
    return fail(SKC_ERR_USAGE, "null argument");
}

skc_status emit_string(const std::string& s, char** out) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf)
        return fail(SKC_ERR_TOO_LARGE, "out of memory");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return SKC_OK;
}

skc_status mismatch_or_ok(const std::optional<std::string>& err) {
    return err ? fail(SKC_ERR_MISMATCH, "verification mismatch: " + *err) : SKC_OK;
}

} // namespace

struct skc_charsum {
    CharacterSum sum;
    std::variant<FromSkew, FromProduct, FromSchubert> origin;
};

struct skc_report {
    std::variant<RibbonsData, MaxHookData, DurfeeProductData, DurfeeSpecialData, EqualityData> data;
};

extern "C" {

const char* skc_version(void) {
    return "1.0.0";
}

const char* skc_last_error(void) {
    return last_error.c_str();
}

void skc_string_free(char* s) {
    std::free(s);
}

// ---------------------------------------------------------------- partitions

skc_status skc_partition_parse(const char* text, skc_partition** out) {
    if (!text || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_partition{parse_partition(text)};
        return SKC_OK;
    });
}

skc_status skc_partition_new(const int* parts, size_t n, skc_partition** out) {
    if ((!parts && n > 0) || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_partition{Partition(std::vector<int>(parts, parts + n))};
        return SKC_OK;
    });
}

void skc_partition_free(skc_partition* p) {
    delete p;
}

size_t skc_partition_length(const skc_partition* p) {
    return p ? p->value.length() : 0;
}

int skc_partition_part(const skc_partition* p, size_t i) {
    return p ? p->value[i] : 0;
}

int skc_partition_weight(const skc_partition* p) {
    return p ? p->value.weight() : 0;
}

int skc_partition_durfee(const skc_partition* p) {
    return p ? durfee(p->value) : 0;
}

skc_status skc_partition_format(const skc_partition* p, char** out) {
    if (!p || !out)
        return null_arg();
    return guarded([&] { return emit_string(format_partition(p->value), out); });
}

// ------------------------------------------------------------ skew diagrams

skc_status skc_skew_parse(const char* text, skc_skew** out) {
    if (!text || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_skew{parse_skew(text)};
        return SKC_OK;
    });
}

skc_status skc_skew_new(const skc_partition* outer, const skc_partition* inner, skc_skew** out) {
    if (!outer || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_skew{SkewDiagram(outer->value, inner ? inner->value : Partition{})};
        return SKC_OK;
    });
}

void skc_skew_free(skc_skew* a) {
    delete a;
}

int skc_skew_size(const skc_skew* a) {
    return a ? a->value.size() : 0;
}

skc_status skc_skew_outer(const skc_skew* a, skc_partition** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_partition{a->value.outer()};
        return SKC_OK;
    });
}

skc_status skc_skew_inner(const skc_skew* a, skc_partition** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_partition{a->value.inner()};
        return SKC_OK;
    });
}

skc_status skc_skew_format(const skc_skew* a, char** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] { return emit_string(format_skew(a->value), out); });
}

skc_status skc_skew_strip(const skc_skew* a, int t, skc_skew** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_skew{strip_nw_ribbons(a->value, t)};
        return SKC_OK;
    });
}

skc_status skc_skew_render(const skc_skew* a, int labels, char** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] { return emit_string(render(a->value, labels ? RenderMode::labels : RenderMode::plain), out); });
}

// ----------------------------------------------------------- character sums

skc_status skc_decompose(const skc_skew* a, skc_charsum** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_charsum{decompose_skew(a->value), FromSkew{a->value}};
        return SKC_OK;
    });
}

skc_status skc_product(const skc_partition* alpha, const skc_partition* beta, skc_charsum** out) {
    if (!alpha || !beta || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_charsum{outer_product(alpha->value, beta->value), FromProduct{alpha->value, beta->value}};
        return SKC_OK;
    });
}

skc_status skc_schubert(const skc_partition* alpha, const skc_partition* beta, int k, int l, skc_charsum** out) {
    if (!alpha || !beta || !out)
        return null_arg();
    if (k < 1 || l < 1)
        return fail(SKC_ERR_USAGE, "rectangle sides must be positive");
    return guarded([&] {
        *out = new skc_charsum{schubert_product(alpha->value, beta->value, k, l),
                               FromSchubert{alpha->value, beta->value, k, l}};
        return SKC_OK;
    });
}

skc_status skc_lr_coefficient(const skc_partition* lambda, const skc_partition* mu, const skc_partition* nu,
                              uint64_t* out) {
    if (!lambda || !mu || !nu || !out)
        return null_arg();
    return guarded([&] {
        *out = lr_coefficient(lambda->value, mu->value, nu->value);
        return SKC_OK;
    });
}

void skc_charsum_free(skc_charsum* s) {
    delete s;
}

int skc_charsum_weight(const skc_charsum* s) {
    return s ? s->sum.weight() : 0;
}

size_t skc_charsum_size(const skc_charsum* s) {
    return s ? s->sum.size() : 0;
}

skc_status skc_charsum_term(const skc_charsum* s, size_t i, skc_partition** nu, uint64_t* mult) {
    if (!s || !nu || !mult)
        return null_arg();
    if (i >= s->sum.size())
        return fail(SKC_ERR_USAGE, "term index out of range");
    return guarded([&] {
        auto it = std::next(s->sum.begin(), static_cast<long>(i));
        *nu = new skc_partition{it->first};
        *mult = it->second;
        return SKC_OK;
    });
}

skc_status skc_charsum_json(const skc_charsum* s, char** out) {
    if (!s || !out)
        return null_arg();
    return guarded([&] { return emit_string(to_json(s->sum), out); });
}

skc_status skc_charsum_text(const skc_charsum* s, char** out) {
    if (!s || !out)
        return null_arg();
    return guarded([&] { return emit_string(to_text(s->sum), out); });
}

skc_status skc_charsum_verify(const skc_charsum* s) {
    if (!s)
        return null_arg();
    return guarded([&] {
        return std::visit(
            [&](const auto& o) -> skc_status {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, FromSkew>)
                    return mismatch_or_ok(verify::decomposition(o.a, s->sum));
                else if constexpr (std::is_same_v<T, FromProduct>)
                    return mismatch_or_ok(verify::product(o.alpha, o.beta, s->sum));
                else
                    return mismatch_or_ok(verify::schubert(o.alpha, o.beta, o.k, o.l, s->sum));
            },
            s->origin);
    });
}

// ------------------------------------------------------------------ reports

skc_status skc_ribbons(const skc_skew* a, skc_report** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_report{RibbonsData{nw_labeling(a->value)}};
        return SKC_OK;
    });
}

skc_status skc_maxhook(const skc_skew* a, skc_report** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_report{MaxHookData{a->value, max_hl_characters(a->value)}};
        return SKC_OK;
    });
}

skc_status skc_durfee_product(const skc_partition* alpha, const skc_partition* beta, int exhaustive,
                              skc_report** out) {
    if (!alpha || !beta || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_report{DurfeeProductData{alpha->value, beta->value,
                                                max_durfee_product(alpha->value, beta->value, exhaustive != 0)}};
        return SKC_OK;
    });
}

skc_status skc_durfee_special(const skc_skew* a, int exhaustive, skc_report** out) {
    if (!a || !out)
        return null_arg();
    return guarded([&] {
        *out = new skc_report{DurfeeSpecialData{a->value, max_durfee_special_skew(a->value, exhaustive != 0)}};
        return SKC_OK;
    });
}

skc_status skc_eqcheck(const skc_skew* a, const skc_skew* b, int full, skc_report** out) {
    if (!a || !b || !out)
        return null_arg();
    return guarded([&] {
        EqualityReport report = necessary_conditions(a->value, b->value);
        if (full)
            report.full = full_equality(a->value, b->value);
        *out = new skc_report{EqualityData{a->value, b->value, std::move(report)}};
        return SKC_OK;
    });
}

void skc_report_free(skc_report* r) {
    delete r;
}

skc_status skc_report_json(const skc_report* r, char** out) {
    if (!r || !out)
        return null_arg();
    return guarded([&] {
        return std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RibbonsData>)
                    return emit_string(to_json(d.labeling), out);
                else
                    return emit_string(to_json(d.report), out);
            },
            r->data);
    });
}

skc_status skc_report_text(const skc_report* r, char** out) {
    if (!r || !out)
        return null_arg();
    return guarded([&] {
        return std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RibbonsData>)
                    return emit_string(to_text(d.labeling), out);
                else
                    return emit_string(to_text(d.report), out);
            },
            r->data);
    });
}

skc_status skc_report_verify(const skc_report* r) {
    if (!r)
        return null_arg();
    return guarded([&] {
        return std::visit(
            [&](const auto& d) -> skc_status {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RibbonsData>)
                    return mismatch_or_ok(verify::hook_lengths(d.labeling.diagram()));
                else if constexpr (std::is_same_v<T, MaxHookData>)
                    return mismatch_or_ok(verify::max_hook(d.a, d.report));
                else if constexpr (std::is_same_v<T, DurfeeProductData>)
                    return mismatch_or_ok(verify::durfee_max(d.report, outer_product(d.alpha, d.beta)));
                else if constexpr (std::is_same_v<T, DurfeeSpecialData>)
                    return mismatch_or_ok(verify::durfee_max(d.report, decompose_skew(d.a)));
                else
                    return mismatch_or_ok(verify::equality(d.a, d.b, d.report));
            },
            r->data);
    });
}

skc_status skc_report_outcome(const skc_report* r) {
    if (!r)
        return null_arg();
    const auto* eq = std::get_if<EqualityData>(&r->data);
    if (!eq)
        return SKC_OK;
    if (!eq->report.verdict.pass)
        return SKC_STRUCTURAL_FAIL;
    if (eq->report.full && !eq->report.full->equal)
        return SKC_UNEQUAL;
    return SKC_OK;
}

skc_status skc_report_hook_lengths(const skc_report* r, skc_partition** out) {
    if (!r || !out)
        return null_arg();
    return guarded([&] {
        if (const auto* d = std::get_if<RibbonsData>(&r->data)) {
            *out = new skc_partition{d->labeling.pi_nw()};
            return SKC_OK;
        }
        if (const auto* d = std::get_if<MaxHookData>(&r->data)) {
            *out = new skc_partition{d->report.hl};
            return SKC_OK;
        }
        return fail(SKC_ERR_USAGE, "report carries no hook lengths");
    });
}

namespace {

const DurfeeMaxReport* durfee_report(const skc_report* r) {
    if (const auto* d = std::get_if<DurfeeProductData>(&r->data))
        return &d->report;
    if (const auto* d = std::get_if<DurfeeSpecialData>(&r->data))
        return &d->report;
    return nullptr;
}

} // namespace

size_t skc_report_witness_count(const skc_report* r) {
    if (!r)
        return 0;
    if (const auto* d = std::get_if<MaxHookData>(&r->data))
        return d->report.witnesses.size();
    if (const auto* d = durfee_report(r))
        return d->witnesses.size();
    return 0;
}

skc_status skc_report_witness(const skc_report* r, size_t i, skc_partition** nu, uint64_t* mult) {
    if (!r || !nu || !mult)
        return null_arg();
    if (i >= skc_report_witness_count(r))
        return fail(SKC_ERR_USAGE, "witness index out of range");
    return guarded([&] {
        if (const auto* d = std::get_if<MaxHookData>(&r->data)) {
            *nu = new skc_partition{d->report.witnesses[i].nu};
            *mult = d->report.witnesses[i].mult;
        } else {
            const auto& w = durfee_report(r)->witnesses[i];
            *nu = new skc_partition{w.nu_inverse};
            *mult = w.mult;
        }
        return SKC_OK;
    });
}

skc_status skc_report_durfee(const skc_report* r, int* out) {
    if (!r || !out)
        return null_arg();
    if (const auto* d = std::get_if<MaxHookData>(&r->data)) {
        *out = d->report.min_durfee;
        return SKC_OK;
    }
    if (const auto* d = durfee_report(r)) {
        *out = d->max_durfee;
        return SKC_OK;
    }
    return fail(SKC_ERR_USAGE, "report carries no Durfee size");
}

skc_status skc_verify_complementation(const skc_partition* mu, const skc_partition* lambda, int k, int l,
                                      int* holds) {
    if (!mu || !lambda || !holds)
        return null_arg();
    return guarded([&] {
        *holds = verify_complementation(mu->value, lambda->value, k, l) ? 1 : 0;
        return SKC_OK;
    });
}

} // extern "C"
