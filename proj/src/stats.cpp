#include "gf2collatz/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gf2collatz/rng.hpp"

namespace gf2collatz {

namespace {

constexpr int kMaxExhaustiveN = 34;       // sum_tau stays within 64 bits up to here
constexpr std::uint64_t kChunk = 1ULL << 20; // checkpoint granularity in masks

StepCount tau_of_mask(int n, std::uint64_t mask, MapKind kind, StepCount limit) {
    return fast::stopping_time_u64((1ULL << n) | mask, kind, limit);
}

std::uint64_t sum_range(int n, MapKind kind, std::uint64_t lo, std::uint64_t hi, StepCount limit) {
    std::uint64_t sum = 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) sum += tau_of_mask(n, mask, kind, limit);
    return sum;
}

struct CheckpointState {
    std::uint64_t next_mask = 0;
    std::uint64_t partial_sum = 0;
};

CheckpointState load_checkpoint(const std::filesystem::path& path, int n, MapKind kind,
                                std::uint64_t total) {
    std::ifstream is(path);
    if (!is) return {};
    nlohmann::json j;
    try {
        is >> j;
        if (j.at("version").get<int>() != 1) throw CheckpointCorrupt("unsupported checkpoint version");
        if (j.at("n").get<int>() != n) throw CheckpointCorrupt("checkpoint n does not match the request");
        if (j.at("map").get<std::string>() != to_string(kind))
            throw CheckpointCorrupt("checkpoint map does not match the request");
        CheckpointState st;
        st.next_mask = j.at("next_mask").get<std::uint64_t>();
        st.partial_sum = j.at("partial_sum").get<std::uint64_t>();
        j.at("chunk_size").get<std::uint64_t>();
        if (st.next_mask > total) throw CheckpointCorrupt("checkpoint cursor exceeds the population");
        return st;
    } catch (const CheckpointCorrupt&) {
        throw;
    } catch (const std::exception& e) {
        throw CheckpointCorrupt(std::string("unreadable checkpoint: ") + e.what());
    }
}

void store_checkpoint(const std::filesystem::path& path, int n, MapKind kind, std::uint64_t chunk,
                      const CheckpointState& st) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = n;
    j["map"] = std::string(to_string(kind));
    j["next_mask"] = st.next_mask;
    j["partial_sum"] = st.partial_sum;
    j["chunk_size"] = chunk;
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
        os << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

std::string_view to_string(RhoMode mode) {
    return mode == RhoMode::Exhaustive ? "exhaustive" : "sampled";
}

RhoMode rho_mode_from_string(std::string_view name) {
    if (name == "exhaustive") return RhoMode::Exhaustive;
    if (name == "sampled") return RhoMode::Sampled;
    throw Error("unknown mode '" + std::string(name) + "'");
}

unsigned resolve_thread_count(unsigned requested) {
    constexpr unsigned kMaxWorkers = 256;
    if (requested > 0) return std::min(requested, kMaxWorkers);
    if (const char* env = std::getenv("GF2_COLLATZ_THREADS")) {
        const unsigned long v = std::strtoul(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, kMaxWorkers));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

RhoRecord rho_exhaustive(int n, MapKind kind, unsigned threads,
                         const std::optional<std::filesystem::path>& checkpoint) {
    if (n < 1) throw Error("degree must be >= 1");
    if (n > kMaxExhaustiveN) throw DegreeTooLarge("exhaustive enumeration is limited to n <= 34");

    const std::uint64_t total = 1ULL << n;
    const StepCount limit = default_step_limit_for_degree(n);
    const unsigned t = resolve_thread_count(threads);
    const std::uint64_t chunk = std::min<std::uint64_t>(kChunk, std::max<std::uint64_t>(1, total / t));

    CheckpointState st;
    if (checkpoint && std::filesystem::exists(*checkpoint))
        st = load_checkpoint(*checkpoint, n, kind, total);

    while (st.next_mask < total) {
        const std::uint64_t round_end = std::min(total, st.next_mask + chunk * t);
        if (t == 1 || round_end - st.next_mask <= chunk) {
            st.partial_sum += sum_range(n, kind, st.next_mask, round_end, limit);
        } else {
            std::vector<std::uint64_t> partials(t, 0);
            std::vector<std::thread> workers;
            workers.reserve(t);
            for (unsigned w = 0; w < t; ++w) {
                const std::uint64_t lo = std::min(round_end, st.next_mask + w * chunk);
                const std::uint64_t hi = std::min(round_end, lo + chunk);
                workers.emplace_back(
                    [&, lo, hi, w] { partials[w] = sum_range(n, kind, lo, hi, limit); });
            }
            for (auto& th : workers) th.join();
            for (std::uint64_t p : partials) st.partial_sum += p;
        }
        st.next_mask = round_end;
        if (checkpoint) store_checkpoint(*checkpoint, n, kind, chunk, st);
    }

    RhoRecord rec;
    rec.n = n;
    rec.map = kind;
    rec.mode = RhoMode::Exhaustive;
    rec.count = total;
    rec.sum_tau = st.partial_sum;
    return rec;
}

RhoRecord rho_sample(int n, std::uint64_t samples, MapKind kind, std::uint64_t seed) {
    if (n < 1) throw Error("degree must be >= 1");
    if (n > fast::kMaxDegree) throw DegreeTooLarge("sampling is limited to n <= 61");
    if (samples < 1) throw Error("need at least one sample");

    const StepCount limit = default_step_limit_for_degree(n);
    const std::uint64_t mask = (1ULL << n) - 1;
    SplitMix64 rng(seed);
    std::uint64_t sum = 0;
    for (std::uint64_t s = 0; s < samples; ++s) sum += tau_of_mask(n, rng.next() & mask, kind, limit);

    RhoRecord rec;
    rec.n = n;
    rec.map = kind;
    rec.mode = RhoMode::Sampled;
    rec.count = samples;
    rec.sum_tau = sum;
    const double range = 2.0 * std::pow(static_cast<double>(n), 1.5) + 1.0;
    rec.ci_halfwidth = range * std::sqrt(std::log(2.0 / 0.05) / (2.0 * static_cast<double>(samples)));
    return rec;
}

Fraction concentration(int n, double epsilon, MapKind kind) {
    if (n < 1) throw Error("degree must be >= 1");
    if (n > kMaxExhaustiveN) throw DegreeTooLarge("exhaustive enumeration is limited to n <= 34");
    if (epsilon < 0) throw Error("epsilon must be >= 0");

    const StepCount limit = default_step_limit_for_degree(n);
    const double lo = (2.0 - epsilon) * n;
    const double hi = (2.0 + epsilon) * n;
    Fraction frac;
    frac.total = 1ULL << n;
    for (std::uint64_t mask = 0; mask < frac.total; ++mask) {
        const double tau = static_cast<double>(tau_of_mask(n, mask, kind, limit));
        if (tau < lo || tau > hi) ++frac.outside;
    }
    return frac;
}

std::vector<PrefixLimitRow> prefix_limit_with_tail(const std::vector<std::uint8_t>& tail_bits) {
    std::vector<PrefixLimitRow> rows;
    rows.reserve(tail_bits.size());
    Gf2Poly truncation = Gf2Poly::one(); // [x^0 r] = 1
    for (std::size_t k = 0; k < tail_bits.size(); ++k) {
        truncation = truncation.shifted_up(1);
        if (tail_bits[k] & 1) truncation += Gf2Poly::one();
        const int n = static_cast<int>(k) + 1;
        const StepCount tau = stopping_time(truncation, MapKind::T);
        rows.push_back(PrefixLimitRow{n, tau, static_cast<double>(tau) / n});
    }
    return rows;
}

std::vector<PrefixLimitRow> prefix_limit_experiment(std::uint64_t seed, int n_max) {
    if (n_max < 1) throw Error("n_max must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> tail(static_cast<std::size_t>(n_max));
    for (auto& b : tail) b = static_cast<std::uint8_t>(rng.next_bit());
    return prefix_limit_with_tail(tail);
}

void emit_csv(std::vector<RhoRecord> records, const std::filesystem::path& out) {
    std::stable_sort(records.begin(), records.end(), [](const RhoRecord& a, const RhoRecord& b) {
        if (a.map != b.map) return static_cast<int>(a.map) < static_cast<int>(b.map);
        return a.n < b.n;
    });
    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + out.string() + "' for writing");
    os << "n,map,mode,count,sum_tau,rho,rho_over_n,ci_halfwidth\n";
    char buf[64];
    for (const RhoRecord& r : records) {
        os << r.n << ',' << to_string(r.map) << ',' << to_string(r.mode) << ',' << r.count << ','
           << r.sum_tau << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", r.rho());
        os << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", r.rho_over_n());
        os << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", r.ci_halfwidth);
        os << buf << '\n';
    }
    if (!os) throw IoError("failed while writing '" + out.string() + "'");
}

std::vector<RhoRecord> parse_csv(const std::filesystem::path& in) {
    std::ifstream is(in);
    if (!is) throw IoError("cannot open '" + in.string() + "' for reading");
    std::string line;
    if (!std::getline(is, line) || line != "n,map,mode,count,sum_tau,rho,rho_over_n,ci_halfwidth")
        throw Error("unexpected CSV header in '" + in.string() + "'");
    std::vector<RhoRecord> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 8) throw Error("malformed CSV row '" + line + "'");
        RhoRecord r;
        r.n = std::stoi(fields[0]);
        r.map = map_kind_from_string(fields[1]);
        r.mode = rho_mode_from_string(fields[2]);
        r.count = std::stoull(fields[3]);
        r.sum_tau = std::stoull(fields[4]);
        r.ci_halfwidth = std::stod(fields[7]);
        records.push_back(r);
    }
    return records;
}

} // namespace gf2collatz
