#include "bellcomb/verify.hpp"

#include "bellcomb/bellpoly.hpp"
#include "bellcomb/errors.hpp"
#include "bellcomb/involutions.hpp"
#include "bellcomb/noncrossing.hpp"
#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace bellcomb {

namespace {

struct IdentityInfo {
    Identity id;
    std::string_view name;
    int closed_form_ceiling; // -1 when there is no closed-form route
    int enumerative_ceiling; // -1 when there is no enumerative route
};

constexpr IdentityInfo kIdentities[] = {
    {Identity::thm1, "thm1", 300, 10},
    {Identity::cor2, "cor2", 300, 10},
    {Identity::cor3, "cor3", 300, 10},
    {Identity::cor4, "cor4", 300, 11},
    {Identity::thm2, "thm2", 12, 10},
    {Identity::nc_catalan, "nc-catalan", 300, 13},
    {Identity::nc_k, "nc-k", 300, 13},
    {Identity::nc_firstj, "nc-firstj", 300, 13},
    {Identity::involution, "involution", -1, 10},
    {Identity::psi, "psi", -1, 10},
    {Identity::bijections, "bijections", -1, 10},
};

const IdentityInfo& info(Identity id)
{
    for (const auto& entry : kIdentities)
        if (entry.id == id)
            return entry;
    throw MalformedInput("unknown identity");
}

using Task = std::function<CellResult()>;

std::string cell_params(int n, int j)
{
    return "n=" + std::to_string(n) + ",j=" + std::to_string(j);
}

CellResult compare(std::string route, std::string params, const std::string& what, const BigInt& actual,
                   const BigInt& expected)
{
    CellResult cell{std::move(route), std::move(params), actual == expected, "", ""};
    cell.detail = what + ": " + actual.get_str() + (cell.passed ? " == " : " != ") + expected.get_str();
    if (!cell.passed)
        cell.counterexample = cell.detail;
    return cell;
}

CellResult fail(CellResult cell, std::string witness)
{
    cell.passed = false;
    cell.counterexample = std::move(witness);
    return cell;
}

// Number of partitions of [m] with no singleton block inside [j], by direct filter.
BigInt count_no_singletons(int m, int j)
{
    unsigned long count = 0;
    std::vector<int> sizes(m + 2);
    for (RgsStream s(m); s.next();) {
        const auto& w = s.word();
        std::fill(sizes.begin(), sizes.end(), 0);
        for (int letter : w)
            ++sizes[letter];
        bool ok = true;
        for (int e = 0; e < j && ok; ++e)
            ok = sizes[w[e]] != 1;
        if (ok)
            ++count;
    }
    return BigInt(count);
}

// Partitions of [m] without a singleton inside [j], as sorted RGS list.
std::vector<std::vector<int>> no_singleton_words(int m, int j)
{
    std::vector<std::vector<int>> out;
    for (PartitionStream s(GroundSet::first(m)); s.next();)
        if (singletons_in(s.current(), 1, j).empty())
            out.push_back(s.word());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightVector> random_weights(std::uint64_t seed, int length)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-kRandomWeightBound, kRandomWeightBound);
    std::vector<WeightVector> out;
    for (int v = 0; v < kRandomWeightVectors; ++v) {
        std::vector<BigInt> values;
        for (int i = 0; i < length; ++i)
            values.emplace_back(dist(rng));
        out.emplace_back(std::move(values));
    }
    return out;
}

std::string format_weights(const WeightVector& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + w.values()[i].get_str();
    return out + ")";
}

// ---------------------------------------------------------------------------
// Cells

CellResult involution_cell(int n, int j, const BigInt& bias)
{
    CellResult cell{"enumerative", cell_params(n, j), true, "", ""};
    BigInt signed_sum = 0;
    unsigned long fixed = 0, total = 0;
    const bool weighted = n <= kSymbolicCarrierCeiling;
    for (CarrierStream s(n, j); s.next();) {
        ++total;
        const SignedPair lambda = s.current();
        signed_sum += lambda.sign();
        const PhiResult image = phi(lambda);
        const bool expect_fixed = lambda.subset().empty() && singletons_in(lambda.partition(), 1, j).empty();
        if (is_fixed(image) != expect_fixed)
            return fail(cell, "fixed-point set mismatch at S=" + format_set(lambda.subset()) +
                                  " pi=" + format_partition(lambda.partition()));
        if (is_fixed(image)) {
            ++fixed;
            continue;
        }
        const auto& mapped = std::get<SignedPair>(image);
        if (mapped.sign() != -lambda.sign())
            return fail(cell, "sign not reversed at S=" + format_set(lambda.subset()) +
                                  " pi=" + format_partition(lambda.partition()));
        const PhiResult back = phi(mapped);
        if (is_fixed(back) || !(std::get<SignedPair>(back) == lambda))
            return fail(cell, "phi(phi(x)) != x at S=" + format_set(lambda.subset()) +
                                  " pi=" + format_partition(lambda.partition()));
        if (weighted) {
            const auto w = weighted_weight(lambda);
            const auto wm = weighted_weight(mapped);
            if (!(wm.monomial == w.monomial) || wm.sign != -w.sign)
                return fail(cell, "weight not reversed at S=" + format_set(lambda.subset()) +
                                      " pi=" + format_partition(lambda.partition()));
        }
    }
    const BigInt expected = rhs_thm1(n, j) + bias;
    std::ostringstream detail;
    detail << "carrier " << total << ", signed sum " << signed_sum.get_str() << ", fixed " << fixed
           << ", rhs " << expected.get_str();
    cell.detail = detail.str();
    if (signed_sum != expected || BigInt(fixed) != expected)
        return fail(cell, cell.detail);
    return cell;
}

CellResult psi_cell(int n, int j, const BigInt& bias)
{
    CellResult cell{"enumerative", cell_params(n, j), true, "", ""};
    std::vector<std::vector<int>> image;
    const GroundSet upper = GroundSet::range(j + 1, n);
    const auto upper_elements = upper.elements();
    for (unsigned long mask = 0; mask < (1UL << upper.size()); ++mask) {
        std::vector<Element> T;
        for (std::size_t b = 0; b < upper.size(); ++b)
            if (mask & (1UL << b))
                T.push_back(upper_elements[b]);
        for (PartitionStream s(GroundSet::first(n).without(T)); s.next();) {
            const SetPartition p = psi_forward(n, j, T, s.current());
            if (!singletons_in(p, 1, j).empty())
                return fail(cell, "image has a singleton in [j]: " + format_partition(p));
            const PsiPreimage back = psi_inverse(n, j, p);
            if (!(back.T == T) || !(back.rho == s.current()))
                return fail(cell, "round trip failed for T=" + format_set(T) + " rho=" + format_partition(s.current()));
            image.push_back(to_rgs(p).word());
        }
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return fail(cell, "psi_forward is not injective");

    std::vector<std::vector<int>> fixed;
    for (CarrierStream s(n, j); s.next();) {
        if (!is_fixed(phi(s.current())))
            continue;
        if (!s.subset().empty())
            return fail(cell, "fixed point with nonempty S=" + format_set(s.subset()));
        fixed.push_back(to_rgs(s.partition()).word());
    }
    std::sort(fixed.begin(), fixed.end());
    if (image != fixed)
        return fail(cell, "image of psi differs from the fixed points of phi");
    return compare("enumerative", cell_params(n, j), "|image of psi|", BigInt(image.size()), rhs_thm1(n, j) + bias);
}

// cor1 (which == 2) or cor2 (which == 3) map: injective, image exactly the
// singleton-free partitions, domain size matching the closed form.
CellResult bijection_cell(int j, int which, const BigInt& bias)
{
    const std::string params = "j=" + std::to_string(j) + ",map=cor" + std::to_string(which == 2 ? 1 : 2);
    CellResult cell{"enumerative", params, true, "", ""};
    std::vector<std::vector<int>> image;
    auto push = [&](const SetPartition& out) { image.push_back(to_rgs(out).word()); };
    if (which == 2) {
        for (PartitionStream s(GroundSet::first(j)); s.next();) {
            const SetPartition out = cor1_bijection(j, s.current());
            if (!(cor1_inverse(j, out) == s.current()))
                return fail(cell, "cor1 round trip failed at " + format_partition(s.current()));
            push(out);
        }
    } else {
        for (auto origin : {Cor2Origin::partitions_of_j, Cor2Origin::partitions_of_j_plus_1}) {
            const int m = origin == Cor2Origin::partitions_of_j ? j : j + 1;
            for (PartitionStream s(GroundSet::first(m)); s.next();) {
                const Cor2Source src{origin, s.current()};
                const SetPartition out = cor2_bijection_forward(j, src);
                if (!(cor2_bijection_inverse(j, out) == src))
                    return fail(cell, "cor2 round trip failed at " + format_partition(s.current()));
                push(out);
            }
        }
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return fail(cell, "map is not injective");
    if (image != no_singleton_words(j + (which == 2 ? 1 : 2), j))
        return fail(cell, "image differs from the singleton-free partitions");
    return compare("enumerative", params, "domain size", BigInt(image.size()),
                   which == 2 ? rhs_cor(j, CorollaryEq::two) + bias : rhs_cor(j, CorollaryEq::three) + bias);
}

CellResult cd_cell(int j, const BigInt& bias)
{
    const std::string params = "j=" + std::to_string(j);
    CellResult cell{"enumerative", params, true, "", ""};
    const auto b = bell_table(j);
    if (!cd_class_members(j, {CdKind::D, 1}).empty())
        return fail(cell, "D_1 is not empty");
    for (int m = 2; m <= j - 1; ++m)
        if (cd_class_members(j, {CdKind::D, m}) != cd_class_members(j, {CdKind::C, m - 1}))
            return fail(cell, "D_" + std::to_string(m) + " != C_" + std::to_string(m - 1));
    for (int m = 1; m <= j - 1; ++m) {
        const auto total = cd_class_members(j, {CdKind::C, m}).size() + cd_class_members(j, {CdKind::D, m}).size();
        if (BigInt(total) != b[m])
            return fail(cell, "|C_" + std::to_string(m) + "| + |D_" + std::to_string(m) + "| = " +
                                  std::to_string(total) + " != b_" + std::to_string(m));
    }
    // Telescoped sum also follows from the class labels.
    BigInt telescoped = 0;
    for (int k = 0; k <= j - 2; ++k) {
        const int m = j - 1 - k;
        const auto size = cd_class_members(j, {CdKind::C, m}).size() + cd_class_members(j, {CdKind::D, m}).size();
        telescoped += (k % 2 == 0 ? 1 : -1) * BigInt(size);
    }
    const BigInt c_top(cd_class_members(j, {CdKind::C, j - 1}).size());
    if (telescoped != c_top)
        return fail(cell, "alternating class sum " + telescoped.get_str() + " != |C_{j-1}| " + c_top.get_str());
    return compare("enumerative", params, "|C_{j-1}| vs lhs", c_top, lhs_cor(j, CorollaryEq::four) + bias);
}

CellResult thm2_closed_cell(int n, int j, const std::vector<WeightVector>& weights, const BigInt& bias)
{
    CellResult cell{"closed-form", cell_params(n, j), true, "", ""};
    const BellPolynomial lhs = lhs_thm2(n, j);
    BellPolynomial rhs = rhs_thm2(n, j);
    if (bias != 0)
        rhs += BellPolynomial::constant(bias);
    if (!(lhs == rhs))
        return fail(cell, "lhs = " + to_string(lhs) + " ; rhs = " + to_string(rhs));
    for (const auto& w : weights) {
        const BigInt a = lhs_thm2_value(n, j, w);
        const BigInt c = rhs_thm2_value(n, j, w);
        const BigInt e = lhs.evaluate(w);
        if (a != c || a != e)
            return fail(cell, "numeric mismatch at t=" + format_weights(w) + ": " + a.get_str() + ", " + c.get_str() +
                                  ", " + e.get_str());
    }
    cell.detail = "symbolic equality, " + std::to_string(lhs.terms().size()) + " terms, " +
                  std::to_string(weights.size()) + " numeric weight vectors";
    return cell;
}

CellResult thm2_enum_cell(int n, int j, const std::vector<WeightVector>& weights, const BigInt& bias)
{
    CellResult cell{"enumerative", cell_params(n, j), true, "", ""};
    if (n <= kSymbolicCarrierCeiling) {
        BellPolynomial lhs = lhs_thm2(n, j);
        if (bias != 0)
            lhs += BellPolynomial::constant(bias);
        const BellPolynomial carrier = weighted_carrier_sum(n, j);
        if (!(carrier == lhs))
            return fail(cell, "carrier = " + to_string(carrier) + " ; lhs = " + to_string(lhs));
        cell.detail = "symbolic carrier sum equals lhs";
        return cell;
    }
    const auto values = weighted_carrier_values(n, j, weights);
    for (std::size_t v = 0; v < weights.size(); ++v) {
        const BigInt expected = rhs_thm2_value(n, j, weights[v]) + bias;
        if (values[v] != expected)
            return fail(cell, "carrier value " + values[v].get_str() + " != " + expected.get_str() + " at t=" +
                                  format_weights(weights[v]));
    }
    cell.detail = "numeric carrier sums at " + std::to_string(weights.size()) + " weight vectors";
    return cell;
}

BigInt catalan_by_recurrence(int n)
{
    std::vector<BigInt> c{1};
    for (int m = 1; m <= n; ++m) {
        BigInt next = 0;
        for (int i = 0; i < m; ++i)
            next += c[i] * c[m - 1 - i];
        c.push_back(next);
    }
    return c[n];
}

// ---------------------------------------------------------------------------
// Task lists

void add_tasks(Identity id, bool closed, bool enumerative, int max_n, const std::vector<WeightVector>& weights,
               const BigInt& bias, std::vector<Task>& tasks)
{
    switch (id) {
    case Identity::thm1:
        for (int n = 0; n <= max_n; ++n)
            for (int j = 0; j <= n; ++j) {
                if (closed)
                    tasks.push_back([=] {
                        return compare("closed-form", cell_params(n, j), "lhs vs rhs", lhs_thm1(n, j),
                                       rhs_thm1(n, j) + bias);
                    });
                if (enumerative && n <= info(id).enumerative_ceiling)
                    tasks.push_back([=] {
                        auto cell = compare("enumerative", cell_params(n, j), "singleton-free count vs rhs",
                                            count_no_singletons(n + 1, j), rhs_thm1(n, j) + bias);
                        if (!cell.passed)
                            return cell;
                        BigInt signed_sum = 0;
                        for (CarrierStream s(n, j); s.next();)
                            signed_sum += s.subset().size() % 2 == 0 ? 1 : -1;
                        return compare("enumerative", cell_params(n, j), "signed carrier vs lhs", signed_sum,
                                       lhs_thm1(n, j) + bias);
                    });
            }
        break;
    case Identity::cor2:
    case Identity::cor3: {
        const auto which = id == Identity::cor2 ? CorollaryEq::two : CorollaryEq::three;
        const int shift = id == Identity::cor2 ? 1 : 2;
        for (int j = 0; j <= max_n; ++j) {
            const std::string params = "j=" + std::to_string(j);
            if (closed)
                tasks.push_back([=] {
                    return compare("closed-form", params, "lhs vs rhs", lhs_cor(j, which), rhs_cor(j, which) + bias);
                });
            if (enumerative && j <= info(id).enumerative_ceiling) {
                tasks.push_back([=] {
                    return compare("enumerative", params, "singleton-free count vs rhs",
                                   count_no_singletons(j + shift, j), rhs_cor(j, which) + bias);
                });
                tasks.push_back([=] { return bijection_cell(j, shift + 1, bias); });
            }
        }
        break;
    }
    case Identity::cor4:
        for (int j = 2; j <= max_n; ++j) {
            const std::string params = "j=" + std::to_string(j);
            if (closed)
                tasks.push_back([=] {
                    return compare("closed-form", params, "lhs vs rhs", lhs_cor(j, CorollaryEq::four),
                                   rhs_cor(j, CorollaryEq::four) + bias);
                });
            if (enumerative && j <= info(id).enumerative_ceiling)
                tasks.push_back([=] { return cd_cell(j, bias); });
        }
        break;
    case Identity::thm2:
        for (int n = 0; n <= max_n; ++n)
            for (int j = 0; j <= n; ++j) {
                if (closed)
                    tasks.push_back([=, &weights] { return thm2_closed_cell(n, j, weights, bias); });
                if (enumerative && n <= info(id).enumerative_ceiling)
                    tasks.push_back([=, &weights] { return thm2_enum_cell(n, j, weights, bias); });
            }
        break;
    case Identity::nc_catalan:
        for (int n = 0; n <= max_n; ++n) {
            const std::string params = "n=" + std::to_string(n);
            if (closed)
                tasks.push_back([=] {
                    return compare("closed-form", params, "binomial form vs Segner recurrence", catalan(n),
                                   catalan_by_recurrence(n) + bias);
                });
            if (enumerative && n <= info(id).enumerative_ceiling)
                tasks.push_back([=] {
                    unsigned long count = 0;
                    for (NoncrossingStream s(n); s.next();)
                        ++count;
                    return compare("enumerative", params, "non-crossing count vs c_n", BigInt(count),
                                   catalan(n) + bias);
                });
        }
        break;
    case Identity::nc_k:
        for (int n = 0; n <= max_n; ++n) {
            const std::string params = "n=" + std::to_string(n);
            if (closed)
                tasks.push_back([=] {
                    return compare("closed-form", params, "partial sum at j=n vs K_n", catalan_partial_sum(n, n),
                                   catalan_difference(n) + bias);
                });
            if (enumerative && n <= info(id).enumerative_ceiling)
                tasks.push_back([=] {
                    return compare("enumerative", params, "cyclic-Smirnov count vs K_n", count_k_interpretation(n),
                                   catalan_difference(n) + bias);
                });
        }
        break;
    case Identity::nc_firstj:
        for (int n = 0; n <= max_n; ++n) {
            if (closed)
                tasks.push_back([=] {
                    return compare("closed-form", "n=" + std::to_string(n), "partial sum at j=0 vs c_n",
                                   catalan_partial_sum(n, 0), catalan(n) + bias);
                });
            if (enumerative && n <= info(id).enumerative_ceiling)
                for (int j = 0; j <= std::max(0, n - 1); ++j)
                    tasks.push_back([=] {
                        return compare("enumerative", cell_params(n, j), "first-j count vs partial sum",
                                       count_first_j_condition(n, j), catalan_partial_sum(n, j) + bias);
                    });
        }
        break;
    case Identity::involution:
        for (int n = 0; n <= max_n; ++n)
            for (int j = 0; j <= n; ++j)
                tasks.push_back([=] { return involution_cell(n, j, bias); });
        break;
    case Identity::psi:
        for (int n = 0; n <= max_n; ++n)
            for (int j = 0; j <= n; ++j)
                tasks.push_back([=] { return psi_cell(n, j, bias); });
        break;
    case Identity::bijections:
        for (int j = 0; j <= max_n; ++j) {
            tasks.push_back([=] { return bijection_cell(j, 2, bias); });
            tasks.push_back([=] { return bijection_cell(j, 3, bias); });
        }
        break;
    }
}

std::vector<CellResult> run_tasks(const std::vector<Task>& tasks, unsigned threads)
{
    std::vector<CellResult> results(tasks.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i] = CellResult{"error", "task " + std::to_string(i), false, e.what(), e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return results;
}

} // namespace

// ---------------------------------------------------------------------------

std::optional<Identity> parse_identity(std::string_view name)
{
    for (const auto& entry : kIdentities)
        if (entry.name == name)
            return entry.id;
    return std::nullopt;
}

std::string_view identity_name(Identity id)
{
    return info(id).name;
}

std::vector<Identity> all_identities()
{
    std::vector<Identity> out;
    for (const auto& entry : kIdentities)
        out.push_back(entry.id);
    return out;
}

std::optional<Mode> parse_mode(std::string_view name)
{
    if (name == "closed-form")
        return Mode::closed_form;
    if (name == "enumerative")
        return Mode::enumerative;
    if (name == "both")
        return Mode::both;
    return std::nullopt;
}

std::string_view mode_name(Mode mode)
{
    switch (mode) {
    case Mode::closed_form:
        return "closed-form";
    case Mode::enumerative:
        return "enumerative";
    case Mode::both:
        return "both";
    }
    return "?";
}

bool VerificationReport::passed() const
{
    return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return !c.passed; }));
}

int max_n_ceiling(Identity id, Mode route)
{
    const auto& entry = info(id);
    switch (route) {
    case Mode::closed_form:
        return entry.closed_form_ceiling >= 0 ? entry.closed_form_ceiling : entry.enumerative_ceiling;
    case Mode::enumerative:
        return entry.enumerative_ceiling >= 0 ? entry.enumerative_ceiling : entry.closed_form_ceiling;
    case Mode::both:
        return std::max(entry.closed_form_ceiling, entry.enumerative_ceiling);
    }
    return -1;
}

VerificationReport run_verification(const VerifyOptions& options)
{
    const auto& entry = info(options.identity);
    if (options.max_n < 0)
        throw NegativeIndex("max-n must be nonnegative");
    if (options.max_n > max_n_ceiling(options.identity, options.mode))
        throw SizeTooLarge(std::string(entry.name) + " accepts max-n <= " +
                           std::to_string(max_n_ceiling(options.identity, options.mode)) + " in mode " +
                           std::string(mode_name(options.mode)));

    // Identities with a single route run it whatever the mode says.
    bool closed = options.mode != Mode::enumerative;
    bool enumerative = options.mode != Mode::closed_form;
    if (entry.closed_form_ceiling < 0) {
        closed = false;
        enumerative = true;
    }
    // In "both" mode the enumerative route stops at its own ceiling.

    VerificationReport report;
    report.identity = std::string(entry.name);
    report.mode = std::string(mode_name(options.mode));
    report.max_n = options.max_n;
    report.seed = options.seed;

    const auto start = std::chrono::steady_clock::now();
    const BigInt bias = options.falsify_oracle ? 1 : 0;
    const auto weights = random_weights(options.seed, options.max_n + 1);
    std::vector<Task> tasks;
    add_tasks(options.identity, closed, enumerative, options.max_n, weights, bias, tasks);
    report.cells = run_tasks(tasks, options.threads);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace bellcomb
