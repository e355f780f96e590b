// skewchar: command-line front end over the C interface.

#include "skewchar/skewchar.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct Deleter {
    void operator()(skc_partition* p) const { skc_partition_free(p); }
    void operator()(skc_skew* p) const { skc_skew_free(p); }
    void operator()(skc_charsum* p) const { skc_charsum_free(p); }
    void operator()(skc_report* p) const { skc_report_free(p); }
    void operator()(char* p) const { skc_string_free(p); }
};

template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

// Carries a status code out of nested helpers.
struct Exit {
    int code;
};

void check(skc_status st) {
    if (st != SKC_OK) {
        std::cerr << "error: " << skc_last_error() << '\n';
        throw Exit{static_cast<int>(st)};
    }
}

Handle<skc_partition> partition(const std::string& text) {
    skc_partition* p = nullptr;
    check(skc_partition_parse(text.c_str(), &p));
    return Handle<skc_partition>(p);
}

Handle<skc_skew> skew(const std::string& text) {
    skc_skew* a = nullptr;
    check(skc_skew_parse(text.c_str(), &a));
    return Handle<skc_skew>(a);
}

Handle<skc_skew> stripped(Handle<skc_skew> a, int t) {
    if (t == 0)
        return a;
    skc_skew* out = nullptr;
    check(skc_skew_strip(a.get(), t, &out));
    return Handle<skc_skew>(out);
}

// `produce` fills in the string; it runs before the pointer is read.
template <typename F>
void print(F produce) {
    char* text = nullptr;
    check(produce(&text));
    Handle<char> owned(text);
    std::cout << owned.get();
    if (*owned && owned.get()[std::char_traits<char>::length(owned.get()) - 1] != '\n')
        std::cout << '\n';
}

struct Options {
    bool json = false;
    bool verify = false;
    bool exhaustive = false;
    bool full = false;
    bool labels = false;
    int strip = 0;
    int max_boxes = 30;
    std::string box;
    std::vector<std::string> args;
};

void guard_oracle(const Options& o, int boxes) {
    if (boxes > o.max_boxes) {
        std::cerr << "error: oracle run on " << boxes << " boxes exceeds --max-boxes " << o.max_boxes << '\n';
        throw Exit{SKC_ERR_TOO_LARGE};
    }
}

void emit_sum(const Options& o, skc_charsum* sum) {
    print([&](char** text) { return o.json ? skc_charsum_json(sum, text) : skc_charsum_text(sum, text); });
}

void emit_report(const Options& o, skc_report* r) {
    print([&](char** text) { return o.json ? skc_report_json(r, text) : skc_report_text(r, text); });
}

void verify_report(const Options& o, skc_report* r, int boxes) {
    if (!o.verify)
        return;
    guard_oracle(o, boxes);
    const skc_status st = skc_report_verify(r);
    if (st != SKC_OK) {
        std::cerr << "error: " << skc_last_error() << '\n';
        throw Exit{static_cast<int>(st)};
    }
    std::cerr << "verified against the LR decomposition\n";
}

void verify_sum(const Options& o, skc_charsum* s, int boxes) {
    if (!o.verify)
        return;
    guard_oracle(o, boxes);
    const skc_status st = skc_charsum_verify(s);
    if (st != SKC_OK) {
        std::cerr << "error: " << skc_last_error() << '\n';
        throw Exit{static_cast<int>(st)};
    }
    std::cerr << "verified by an independent decomposition\n";
}

std::pair<int, int> parse_box(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used_k = 0, used_l = 0;
        const int k = std::stoi(text.substr(0, comma), &used_k);
        const int l = std::stoi(text.substr(comma + 1), &used_l);
        if (used_k != comma || used_l != text.size() - comma - 1 || k < 1 || l < 1)
            throw std::invalid_argument(text);
        return {k, l};
    } catch (const std::exception&) {
        std::cerr << "error: --box expects k,l with positive integers, got '" << text << "'\n";
        throw Exit{SKC_ERR_USAGE};
    }
}

int run(const std::string& verb, const Options& o) {
    const auto& args = o.args;
    if (verb == "decompose") {
        auto a = skew(args[0]);
        skc_charsum* s = nullptr;
        check(skc_decompose(a.get(), &s));
        Handle<skc_charsum> sum(s);
        verify_sum(o, s, skc_skew_size(a.get()));
        emit_sum(o, s);
    } else if (verb == "product" || verb == "schubert") {
        auto alpha = partition(args[0]);
        auto beta = partition(args[1]);
        skc_charsum* s = nullptr;
        if (verb == "product") {
            check(skc_product(alpha.get(), beta.get(), &s));
        } else {
            const auto [k, l] = parse_box(o.box);
            check(skc_schubert(alpha.get(), beta.get(), k, l, &s));
        }
        Handle<skc_charsum> sum(s);
        verify_sum(o, s, skc_partition_weight(alpha.get()) + skc_partition_weight(beta.get()));
        emit_sum(o, s);
    } else if (verb == "ribbons" || verb == "maxhook") {
        auto a = stripped(skew(args[0]), o.strip);
        skc_report* r = nullptr;
        check(verb == "ribbons" ? skc_ribbons(a.get(), &r) : skc_maxhook(a.get(), &r));
        Handle<skc_report> report(r);
        verify_report(o, r, skc_skew_size(a.get()));
        emit_report(o, r);
    } else if (verb == "durfee") {
        auto a = skew(args[0]);
        if (o.exhaustive)
            guard_oracle(o, skc_skew_size(a.get()));
        skc_report* r = nullptr;
        check(skc_durfee_special(a.get(), o.exhaustive, &r));
        Handle<skc_report> report(r);
        verify_report(o, r, skc_skew_size(a.get()));
        emit_report(o, r);
    } else if (verb == "durfee-product") {
        auto alpha = partition(args[0]);
        auto beta = partition(args[1]);
        const int boxes = skc_partition_weight(alpha.get()) + skc_partition_weight(beta.get());
        if (o.exhaustive)
            guard_oracle(o, boxes);
        skc_report* r = nullptr;
        check(skc_durfee_product(alpha.get(), beta.get(), o.exhaustive, &r));
        Handle<skc_report> report(r);
        verify_report(o, r, boxes);
        emit_report(o, r);
    } else if (verb == "eqcheck") {
        auto a = skew(args[0]);
        auto b = skew(args[1]);
        skc_report* r = nullptr;
        check(skc_eqcheck(a.get(), b.get(), o.full, &r));
        Handle<skc_report> report(r);
        verify_report(o, r, std::max(skc_skew_size(a.get()), skc_skew_size(b.get())));
        emit_report(o, r);
        return static_cast<int>(skc_report_outcome(r));
    } else if (verb == "render") {
        auto a = skew(args[0]);
        print([&](char** text) { return skc_skew_render(a.get(), o.labels, text); });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew characters of symmetric groups: LR decompositions, northwest ribbons, extremal constituents"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(skc_version()));

    Options o;
    struct Verb {
        const char* name;
        const char* help;
        std::vector<const char*> operands;
    };
    const std::vector<Verb> verbs = {
        {"decompose", "LR decomposition of a skew character", {"skew"}},
        {"product", "outer product [alpha] x [beta]", {"alpha", "beta"}},
        {"schubert", "outer product restricted to the --box rectangle", {"alpha", "beta"}},
        {"ribbons", "northwest ribbon labeling, pi_nw and ribbon profiles", {"skew"}},
        {"maxhook", "constituents with maximal principal hook lengths", {"skew"}},
        {"durfee", "maximal Durfee size of a special skew character", {"skew"}},
        {"durfee-product", "maximal Durfee size of a product", {"alpha", "beta"}},
        {"eqcheck", "necessary conditions for [A] = [B]", {"A", "B"}},
        {"render", "ASCII drawing of a skew diagram", {"skew"}},
    };
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("operands", o.args, "partitions, e.g. 10^2,8^4 or skew diagrams outer/inner")
            ->required()
            ->expected(static_cast<int>(v.operands.size()));
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_flag("--verify", o.verify, "cross-check against the brute-force LR decomposition");
        sub->add_option("--max-boxes", o.max_boxes, "refuse oracle runs above this many boxes")->capture_default_str();
        const std::string name = v.name;
        if (name == "ribbons" || name == "maxhook")
            sub->add_option("--strip", o.strip, "first remove this many northwest ribbons")->check(CLI::NonNegativeNumber);
        if (name == "durfee" || name == "durfee-product")
            sub->add_flag("--exhaustive", o.exhaustive, "list every constituent of maximal Durfee size");
        if (name == "schubert")
            sub->add_option("--box", o.box, "rectangle k,l (columns,rows)")->required();
        if (name == "eqcheck")
            sub->add_flag("--full", o.full, "compare the full decompositions");
        if (name == "render")
            sub->add_flag("--labels", o.labels, "draw northwest ribbon labels instead of '#'");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return SKC_ERR_USAGE;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Exit& e) {
        return e.code;
    }
}
