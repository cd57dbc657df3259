#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "gf2collatz/maps.hpp"

namespace gf2collatz {

enum class RhoMode { Exhaustive, Sampled };

std::string_view to_string(RhoMode mode);
RhoMode rho_mode_from_string(std::string_view name);

// Average stopping time over the degree-n population {x^n + g : deg g < n}
// (exhaustive, count = 2^n) or over seeded uniform draws from it (sampled).
struct RhoRecord {
    int n = 0;
    MapKind map = MapKind::T;
    RhoMode mode = RhoMode::Exhaustive;
    std::uint64_t count = 0;
    std::uint64_t sum_tau = 0;
    double ci_halfwidth = 0.0; // 0 for exhaustive records

    double rho() const { return static_cast<double>(sum_tau) / static_cast<double>(count); }
    double rho_over_n() const { return rho() / static_cast<double>(n); }

    friend bool operator==(const RhoRecord&, const RhoRecord&) = default;
};

// Exact sum of stopping times over all 2^n degree-n polynomials, enumerated
// as lower-bit masks and partitioned into fixed chunks. The total is an
// integer sum over disjoint ranges, so it does not depend on the thread
// count. threads = 0 consults GF2_COLLATZ_THREADS and then the hardware.
// With a checkpoint path, progress is persisted after every round and a
// matching unfinished file is resumed; a finished one is returned as is.
RhoRecord rho_exhaustive(int n, MapKind kind, unsigned threads = 0,
                         const std::optional<std::filesystem::path>& checkpoint = std::nullopt);

// Mean stopping time over `samples` seeded uniform draws. The confidence
// half-width is (2 n^1.5 + 1) sqrt(ln(2/0.05) / (2 samples)): a 95% interval
// from the certified stopping-time range [0, 2 n^1.5 + 1].
RhoRecord rho_sample(int n, std::uint64_t samples, MapKind kind, std::uint64_t seed);

struct Fraction {
    std::uint64_t outside = 0;
    std::uint64_t total = 0;
    double value() const {
        return total == 0 ? 0.0 : static_cast<double>(outside) / static_cast<double>(total);
    }
};

// Fraction of degree-n inputs whose stopping time falls outside
// [(2-eps) n, (2+eps) n].
Fraction concentration(int n, double epsilon, MapKind kind);

struct PrefixLimitRow {
    int n = 0;
    StepCount tau = 0;
    double ratio = 0.0; // tau / n
};

// Draws one infinite-tail surrogate (a seeded bit stream b1, b2, ...) and
// reports the stopping time of its degree-n truncation x^n + b1 x^(n-1) +
// ... + bn for n = 1..n_max.
std::vector<PrefixLimitRow> prefix_limit_experiment(std::uint64_t seed, int n_max);
// Same with an explicit tail (tail_bits[k] is the coefficient b(k+1)).
std::vector<PrefixLimitRow> prefix_limit_with_tail(const std::vector<std::uint8_t>& tail_bits);

// CSV with header n,map,mode,count,sum_tau,rho,rho_over_n,ci_halfwidth and
// one row per record, ordered by (map, n). Doubles are printed with %.17g so
// the file parses back to equal records.
void emit_csv(std::vector<RhoRecord> records, const std::filesystem::path& out);
std::vector<RhoRecord> parse_csv(const std::filesystem::path& in);

// Requested count, or GF2_COLLATZ_THREADS, or the hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

} // namespace gf2collatz
