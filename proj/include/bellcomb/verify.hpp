#pragma once

// Verification sweeps that drive every identity over a full parameter grid
// and collect per-cell pass/fail results.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bellcomb {

enum class Identity { thm1, cor2, cor3, cor4, thm2, nc_catalan, nc_k, nc_firstj, involution, psi, bijections };

enum class Mode { closed_form, enumerative, both };

std::optional<Identity> parse_identity(std::string_view name);
std::string_view identity_name(Identity id);
std::vector<Identity> all_identities();

std::optional<Mode> parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

struct CellResult {
    std::string route; // "closed-form" or "enumerative"
    std::string params; // e.g. "n=8,j=4"
    bool passed = true;
    std::string detail;
    std::string counterexample; // first failing witness, empty on pass
};

struct VerificationReport {
    std::string identity;
    std::string mode;
    int max_n = 0;
    std::uint64_t seed = 0;
    std::vector<CellResult> cells;
    double elapsed_ms = 0;

    bool passed() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    Identity identity = Identity::thm1;
    int max_n = 0;
    Mode mode = Mode::both;
    std::uint64_t seed = 20240611;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    // Shifts every expected value by one so every cell must fail. Used to
    // exercise the failure path end to end.
    bool falsify_oracle = false;
};

// Largest max_n accepted for the identity and route.
int max_n_ceiling(Identity id, Mode route);

// Number of pseudo-random weight vectors used by the thm2 spot checks.
inline constexpr int kRandomWeightVectors = 20;
inline constexpr int kRandomWeightBound = 3;

// Throws SizeTooLarge when max_n exceeds max_n_ceiling, NegativeIndex when
// negative. Cell order in the report is fixed regardless of thread count.
VerificationReport run_verification(const VerifyOptions& options);

} // namespace bellcomb
