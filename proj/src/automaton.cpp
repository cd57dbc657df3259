#include "gf2collatz/automaton.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "gf2collatz/rng.hpp"

namespace gf2collatz {

AutomatonMatrix AutomatonMatrix::from_seed(const std::vector<std::uint8_t>& seed_column, long m) {
    if (seed_column.empty()) throw EmptySeed("seed column must have at least one row");
    if (m < 0) throw Error("column index m must be >= 0");
    const long n = static_cast<long>(seed_column.size());
    BitMatrix grid(n, m + 1);
    for (long i = 0; i < n; ++i) grid.set(i, m, seed_column[static_cast<std::size_t>(i)] & 1);
    for (long j = m - 1; j >= 0; --j) {
        for (long i = 0; i < n; ++i) {
            const long up = (i - 1 + n) % n;
            grid.set(i, j, grid.get(i, j + 1) ^ grid.get(up, j + 1));
        }
    }
    return AutomatonMatrix(std::move(grid));
}

AutomatonMatrix AutomatonMatrix::from_seed_mask(std::uint64_t seed, long n, long m) {
    if (n < 1 || n > 64) throw Error("seed mask supports 1 <= n <= 64 rows");
    std::vector<std::uint8_t> column(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) column[static_cast<std::size_t>(i)] = (seed >> i) & 1;
    return from_seed(column, m);
}

int AutomatonMatrix::entry_wrapped(long i, long j) const {
    const long n = row_count();
    long r = i % n;
    if (r < 0) r += n;
    return grid_.get(r, j);
}

bool AutomatonMatrix::satisfies_recurrence() const {
    for (long j = 0; j + 1 < col_count(); ++j)
        for (long i = 0; i < row_count(); ++i)
            if (entry(i, j) != (entry(i, j + 1) ^ entry_wrapped(i - 1, j + 1))) return false;
    return true;
}

bool in_a1(const AutomatonMatrix& a, Cell c) {
    if (c.row < 0 || c.row >= a.row_count() || c.col < 0 || c.col >= a.col_count()) return false;
    return a.entry(c.row, c.col) == 1;
}

bool in_a1_plus(const AutomatonMatrix& a, Cell c) {
    if (!in_a1(a, c)) return false;
    if (c.col > 0) return true;
    return a.entry_wrapped(c.row - 1, 0) == 1;
}

Cell t_a_step(const AutomatonMatrix& a, Cell c) {
    if (!in_a1_plus(a, c)) throw NotInDomain("cell is not in the walk's domain");
    const long n = a.row_count();
    const long up = (c.row - 1 + n) % n;
    if (a.entry(up, c.col) == 1) return Cell{up, c.col};
    // a(i,j-1) = a(i,j) + a(i-1,j) = 1 + 0, so the left move stays on a 1.
    return Cell{c.row, c.col - 1};
}

StepCount tau_a(const AutomatonMatrix& a, Cell start, StepCount limit) {
    if (!in_a1(a, start)) throw NotInDomain("start cell must hold entry 1");
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(a.row_count() * a.col_count()), 0);
    const auto idx = [&](Cell c) { return static_cast<std::size_t>(c.row * a.col_count() + c.col); };

    Cell cur = start;
    visited[idx(cur)] = 1;
    StepCount steps = 0;
    StepCount first_at_min = 0;
    while (in_a1_plus(a, cur)) {
        const Cell next = t_a_step(a, cur);
        if (visited[idx(next)]) break; // vertical cycle; the column can no longer drop
        if (steps >= limit) throw LimitExceeded(limit);
        ++steps;
        if (next.col < cur.col) first_at_min = steps;
        cur = next;
        visited[idx(cur)] = 1;
    }
    return first_at_min;
}

SearchStrategy search_strategy_from_string(std::string_view name) {
    if (name == "exhaustive") return SearchStrategy::Exhaustive;
    if (name == "hill_climb") return SearchStrategy::HillClimb;
    if (name == "random") return SearchStrategy::Random;
    throw Error("unknown strategy '" + std::string(name) + "' (expected exhaustive|hill_climb|random)");
}

std::string_view to_string(SearchStrategy s) {
    switch (s) {
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::HillClimb: return "hill_climb";
    case SearchStrategy::Random: return "random";
    }
    return "?";
}

std::string SearchResult::to_json() const {
    char hex[19];
    std::snprintf(hex, sizeof(hex), "0x%llx", static_cast<unsigned long long>(best_seed));
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["strategy"] = std::string(to_string(strategy));
    j["seed_hex"] = hex;
    j["tau"] = best_tau;
    j["evaluations"] = evaluations;
    return j.dump();
}

namespace {

struct Evaluator {
    long n;
    long m;
    std::uint64_t evaluations = 0;

    // tau_A((n-1, m)) for the matrix grown from `seed`; walks visit at most
    // n*(m+1) distinct cells, so that is a sufficient limit.
    StepCount eval(std::uint64_t seed) {
        ++evaluations;
        const AutomatonMatrix a = AutomatonMatrix::from_seed_mask(seed, n, m);
        return tau_a(a, Cell{n - 1, m}, static_cast<StepCount>(n) * static_cast<StepCount>(m + 1) + 1);
    }
};

void consider(std::uint64_t seed, StepCount tau, std::uint64_t& best_seed, StepCount& best_tau,
              bool& any) {
    if (!any || tau > best_tau || (tau == best_tau && seed < best_seed)) {
        best_seed = seed;
        best_tau = tau;
        any = true;
    }
}

} // namespace

SearchResult search_max_tau(long n, long m, SearchStrategy strategy, std::uint64_t budget,
                            std::uint64_t rng_seed) {
    if (n < 1 || n > 64) throw Error("search supports 1 <= n <= 64");
    if (m < 0) throw Error("column index m must be >= 0");
    if (budget == 0) throw BudgetZero();
    if (strategy == SearchStrategy::Exhaustive && n > 24)
        throw NotApplicable("exhaustive search is limited to n <= 24");

    const std::uint64_t top = 1ULL << (n - 1); // seed bit of the start cell (n-1, m)
    Evaluator ev{n, m};
    std::uint64_t best_seed = 0;
    StepCount best_tau = 0;
    bool any = false;

    switch (strategy) {
    case SearchStrategy::Exhaustive: {
        const std::uint64_t count = 1ULL << n; // n <= 24 enforced above
        for (std::uint64_t seed = 0; seed < count; ++seed) {
            if (!(seed & top)) continue;
            consider(seed, ev.eval(seed), best_seed, best_tau, any);
        }
        break;
    }
    case SearchStrategy::Random: {
        SplitMix64 rng(rng_seed);
        const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
        while (ev.evaluations < budget) {
            const std::uint64_t seed = (rng.next() & mask) | top;
            consider(seed, ev.eval(seed), best_seed, best_tau, any);
        }
        break;
    }
    case SearchStrategy::HillClimb: {
        SplitMix64 rng(rng_seed);
        const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
        while (ev.evaluations < budget) {
            std::uint64_t cur = (rng.next() & mask) | top;
            StepCount cur_tau = ev.eval(cur);
            consider(cur, cur_tau, best_seed, best_tau, any);
            bool improved = true;
            while (improved && ev.evaluations < budget) {
                improved = false;
                std::uint64_t next_seed = cur;
                StepCount next_tau = cur_tau;
                for (long b = 0; b < n && ev.evaluations < budget; ++b) {
                    const std::uint64_t cand = cur ^ (1ULL << b);
                    if (!(cand & top)) continue; // start cell must stay in A1
                    const StepCount t = ev.eval(cand);
                    consider(cand, t, best_seed, best_tau, any);
                    if (t > next_tau || (t == next_tau && t > cur_tau && cand < next_seed)) {
                        next_seed = cand;
                        next_tau = t;
                    }
                }
                if (next_tau > cur_tau) {
                    cur = next_seed;
                    cur_tau = next_tau;
                    improved = true;
                }
            }
        }
        break;
    }
    }

    SearchResult res;
    res.n = n;
    res.m = m;
    res.strategy = strategy;
    res.best_seed = any ? best_seed : 0;
    res.best_tau = best_tau;
    res.evaluations = ev.evaluations;
    return res;
}

} // namespace gf2collatz
