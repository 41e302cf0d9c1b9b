#include "cli.hpp"

#include "bellcomb/bellpoly.hpp"
#include "bellcomb/errors.hpp"
#include "bellcomb/involutions.hpp"
#include "bellcomb/noncrossing.hpp"
#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"
#include "bellcomb/serialize.hpp"
#include "bellcomb/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <ostream>

namespace bellcomb::cli {

namespace {

using nlohmann::json;

enum class Format { table, json, csv };

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------
// numbers

const std::map<std::string, std::function<BigInt(long)>> kSequences{
    {"bell", [](long n) { return bell(n); }},
    {"catalan", [](long n) { return catalan(n); }},
    {"kdiff", [](long n) { return catalan_difference(n); }},
    {"factorial", [](long n) { return factorial(n); }},
    {"derangement", [](long n) { return derangement(n); }},
    {"a000262", [](long n) { return a000262(n); }},
};

int cmd_numbers(const std::string& kind, int max, Format format, std::ostream& out)
{
    const auto& fn = kSequences.at(kind);
    std::vector<BigInt> values;
    for (long n = 0; n <= max; ++n)
        values.push_back(fn(n));
    switch (format) {
    case Format::table:
        for (std::size_t n = 0; n < values.size(); ++n)
            out << n << '\t' << values[n].get_str() << '\n';
        break;
    case Format::csv:
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            out << n << ',' << values[n].get_str() << '\n';
        break;
    case Format::json: {
        json doc = {{"kind", kind}, {"values", json::array()}};
        for (const auto& v : values)
            doc["values"].push_back(v.get_str());
        out << doc.dump() << '\n';
        break;
    }
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

void print_report(const VerificationReport& report, Format format, std::ostream& out)
{
    switch (format) {
    case Format::table:
        out << "identity " << report.identity << "  mode " << report.mode << "  max-n " << report.max_n << "  seed "
            << report.seed << '\n';
        for (const auto& cell : report.cells) {
            out << (cell.passed ? "PASS " : "FAIL ") << cell.route << ' ' << cell.params << "  " << cell.detail << '\n';
            if (!cell.passed)
                out << "     counterexample: " << cell.counterexample << '\n';
        }
        out << (report.passed() ? "status: pass" : "status: fail") << "  (" << report.cells.size() << " cells, "
            << report.failures() << " failed, " << static_cast<long>(report.elapsed_ms) << " ms)\n";
        break;
    case Format::csv:
        out << "identity,route,params,passed,detail,counterexample\n";
        for (const auto& cell : report.cells)
            out << report.identity << ',' << cell.route << ',' << csv_field(cell.params) << ','
                << (cell.passed ? "true" : "false") << ',' << csv_field(cell.detail) << ','
                << csv_field(cell.counterexample) << '\n';
        break;
    case Format::json:
        out << to_json(report).dump() << '\n';
        break;
    }
}

// ---------------------------------------------------------------------------
// trace

std::string render_sign(int sign)
{
    return sign > 0 ? "+1" : "-1";
}

std::string render_image(const PhiResult& image)
{
    if (is_fixed(image))
        return "FIXED";
    const auto& pair = std::get<SignedPair>(image);
    return "(" + format_set(pair.subset()) + ", " + format_partition(pair.partition()) + ")";
}

std::string trace_line(const SignedPair& lambda, const PhiResult& image)
{
    return render_sign(lambda.sign()) + " | " + format_set(lambda.subset()) + " | " +
           format_partition(lambda.partition()) + " | " + render_image(image);
}

json pair_json(const SignedPair& lambda)
{
    return {{"sign", lambda.sign()}, {"S", lambda.subset()}, {"pi", to_json(lambda.partition())}};
}

json trace_json(const SignedPair& lambda, const PhiResult& image)
{
    json doc = {{"lambda", pair_json(lambda)}};
    const auto pivot = phi_pivot(lambda);
    doc["l0"] = pivot ? json(*pivot) : json(nullptr);
    doc["image"] = is_fixed(image) ? json("FIXED") : pair_json(std::get<SignedPair>(image));
    return doc;
}

int cmd_trace(int n, int j, const std::string& subset, const std::string& pi, bool all, Format format,
              std::ostream& out)
{
    if (all) {
        if (format == Format::json) {
            json doc = json::array();
            for (CarrierStream s(n, j); s.next();) {
                const auto lambda = s.current();
                doc.push_back(trace_json(lambda, phi(lambda)));
            }
            out << doc.dump() << '\n';
        } else {
            out << "sign | S | pi | image\n";
            for (CarrierStream s(n, j); s.next();) {
                const auto lambda = s.current();
                out << trace_line(lambda, phi(lambda)) << '\n';
            }
        }
        return kExitPass;
    }
    const SignedPair lambda(n, j, parse_set(subset), parse_partition(pi));
    const PhiResult image = phi(lambda);
    if (format == Format::json) {
        out << trace_json(lambda, image).dump() << '\n';
        return kExitPass;
    }
    const auto pivot = phi_pivot(lambda);
    out << "lambda  = " << render_sign(lambda.sign()) << " | " << format_set(lambda.subset()) << " | "
        << format_partition(lambda.partition()) << '\n';
    out << "l0      = " << (pivot ? std::to_string(*pivot) : std::string("FIXED")) << '\n';
    if (is_fixed(image)) {
        out << "lambda' = FIXED\n";
    } else {
        const auto& mapped = std::get<SignedPair>(image);
        out << "lambda' = " << render_sign(mapped.sign()) << " | " << format_set(mapped.subset()) << " | "
            << format_partition(mapped.partition()) << '\n';
    }
    out << trace_line(lambda, image) << '\n';
    return kExitPass;
}

// ---------------------------------------------------------------------------
// bellpoly

int cmd_bellpoly(int n, const std::vector<std::string>& weights, const std::string& method, Format format,
                 std::ostream& out, std::ostream& err)
{
    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != n) {
            err << "error: B_" << n << " needs exactly " << n << " weights, got " << weights.size() << '\n';
            return kExitUsage;
        }
        std::vector<BigInt> values;
        for (const auto& w : weights) {
            BigInt v;
            if (v.set_str(w, 10) != 0) {
                err << "error: weight '" << w << "' is not an integer\n";
                return kExitUsage;
            }
            values.push_back(v);
        }
        const WeightVector wv(std::move(values));
        // Evaluation never needs the symbolic form, so any n is fine here.
        const BigInt value = complete_bell_values(n, wv).back();
        if (format == Format::json)
            out << json{{"n", n}, {"weights", weights}, {"value", value.get_str()}}.dump() << '\n';
        else
            out << value.get_str() << '\n';
        return kExitPass;
    }
    const BellPolynomial p = method == "sum" ? complete_bell_by_sum(n) : complete_bell_by_enumeration(n);
    switch (format) {
    case Format::json:
        out << json{{"n", n}, {"terms", to_json(p)}}.dump() << '\n';
        break;
    case Format::csv:
        out << "exponents,coefficient\n";
        for (const auto& [m, c] : p.terms())
            out << to_string(m) << ',' << c.get_str() << '\n';
        break;
    case Format::table:
        out << to_string(p) << '\n';
        break;
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// rgs / list

int cmd_rgs(const std::string& pi, const std::string& word, Format format, std::ostream& out, std::ostream& err)
{
    if (pi.empty() == word.empty()) {
        err << "error: pass exactly one of --pi or --word\n";
        return kExitUsage;
    }
    if (!pi.empty()) {
        const Rgs w = to_rgs(parse_partition(pi));
        out << (format == Format::json ? to_json(w).dump() : format_word(w.word())) << '\n';
    } else {
        const SetPartition p = from_rgs(Rgs(parse_word(word)));
        out << (format == Format::json ? to_json(p).dump() : format_partition(p)) << '\n';
    }
    return kExitPass;
}

int cmd_list(int n, bool noncrossing, Format format, std::ostream& out)
{
    std::vector<std::vector<int>> words;
    if (noncrossing) {
        for (NoncrossingStream s(n); s.next();)
            words.push_back(s.word());
    } else {
        for (RgsStream s(n); s.next();)
            words.push_back(s.word());
    }
    switch (format) {
    case Format::json: {
        json doc = json::array();
        for (const auto& w : words)
            doc.push_back(w);
        out << doc.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "rgs,partition\n";
        for (const auto& w : words)
            out << csv_field(format_word(w)) << ',' << csv_field(format_partition(from_rgs(Rgs(w)))) << '\n';
        break;
    case Format::table:
        for (const auto& w : words)
            out << format_word(w) << '\t' << format_partition(from_rgs(Rgs(w))) << '\n';
        break;
    }
    return kExitPass;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Bell-number, Bell-polynomial and non-crossing partition identities"};
    app.require_subcommand(1);

    Format format = Format::table;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table, json or csv")->transform(CLI::CheckedTransformer(kFormats));
    };

    // numbers
    std::string kind;
    int max = 0;
    auto* numbers = app.add_subcommand("numbers", "Print exact sequence values 0..max");
    numbers->add_option("kind", kind, "bell, catalan, kdiff, factorial, derangement or a000262")
        ->required()
        ->check(CLI::IsMember({"bell", "catalan", "kdiff", "factorial", "derangement", "a000262"}));
    numbers->add_option("--max,--max-n", max, "Largest index")->required()->check(CLI::NonNegativeNumber);
    add_format(numbers);

    // verify
    std::string identity_text;
    std::string mode_text = "both";
    int max_n = 0;
    std::uint64_t seed = VerifyOptions{}.seed;
    unsigned threads = 0;
    bool falsify = false;
    auto* verify = app.add_subcommand("verify", "Run an identity over its full parameter grid");
    std::vector<std::string> identity_names;
    for (auto id : all_identities())
        identity_names.emplace_back(identity_name(id));
    verify->add_option("identity", identity_text, "Identity id")->required();
    verify->add_option("--max-n", max_n, "Largest n (or j) in the sweep")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--mode", mode_text, "closed-form, enumerative or both")
        ->check(CLI::IsMember({"closed-form", "enumerative", "both"}));
    verify->add_option("--seed", seed, "Seed for the random weight vectors of thm2");
    verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
    verify->add_flag("--falsify-oracle", falsify, "Shift every expected value by one (tests the failure path)")
        ->group("");
    add_format(verify);

    // trace
    int trace_n = 0, trace_j = 0;
    std::string subset, pi;
    bool all = false;
    auto* trace = app.add_subcommand("trace", "Apply the singleton-toggling involution to one pair (S, pi)");
    trace->add_option("--n", trace_n, "n")->required()->check(CLI::NonNegativeNumber);
    trace->add_option("--j", trace_j, "j")->required()->check(CLI::NonNegativeNumber);
    trace->add_option("-S,--subset", subset, "Elements of S, comma separated");
    trace->add_option("--pi", pi, "Partition of [n+1]-S, blocks split by '/', elements by ','");
    trace->add_flag("--all", all, "Trace every element of the carrier");
    add_format(trace);

    // bellpoly
    int poly_n = 0;
    std::vector<std::string> weights;
    std::string method = "enumeration";
    auto* bellpoly = app.add_subcommand("bellpoly", "Print the complete Bell polynomial B_n or evaluate it");
    bellpoly->add_option("--n", poly_n, "n")->required()->check(CLI::NonNegativeNumber);
    bellpoly->add_option("--weights", weights, "t_1..t_n, comma separated")->delimiter(',');
    bellpoly->add_option("--method", method, "enumeration or sum")->check(CLI::IsMember({"enumeration", "sum"}));
    add_format(bellpoly);

    // rgs
    std::string rgs_pi, rgs_word;
    auto* rgs = app.add_subcommand("rgs", "Convert between a partition of [n] and its restricted growth string");
    rgs->add_option("--pi", rgs_pi, "Partition in slash notation");
    rgs->add_option("--word", rgs_word, "Restricted growth string");
    add_format(rgs);

    // list
    int list_n = 0;
    bool noncrossing = false;
    auto* list = app.add_subcommand("list", "List all partitions of [n] in RGS order");
    list->add_option("--n", list_n, "n")->required()->check(CLI::Range(0, kNoncrossingCeiling));
    list->add_flag("--noncrossing", noncrossing, "Only 1212-avoiding partitions");
    add_format(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*numbers)
            return cmd_numbers(kind, max, format, out);
        if (*verify) {
            const auto id = parse_identity(identity_text);
            if (!id) {
                err << "error: unknown identity '" << identity_text << "'; expected one of";
                for (const auto& name : identity_names)
                    err << ' ' << name;
                err << '\n';
                return kExitUsage;
            }
            VerifyOptions options;
            options.identity = *id;
            options.max_n = max_n;
            options.mode = *parse_mode(mode_text);
            options.seed = seed;
            options.threads = threads;
            options.falsify_oracle = falsify;
            const auto report = run_verification(options);
            print_report(report, format, out);
            return report.passed() ? kExitPass : kExitVerificationFailed;
        }
        if (*trace)
            return cmd_trace(trace_n, trace_j, subset, pi, all, format, out);
        if (*bellpoly)
            return cmd_bellpoly(poly_n, weights, method, format, out, err);
        if (*rgs)
            return cmd_rgs(rgs_pi, rgs_word, format, out, err);
        if (*list)
            return cmd_list(list_n, noncrossing, format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"bellcomb"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace bellcomb::cli
