#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf2collatz/automaton.hpp"
#include "gf2collatz/orbit_matrix.hpp"
#include "test_support.hpp"

using namespace gf2collatz;

TEST_CASE("growing a matrix from its seed column") {
    const AutomatonMatrix a = AutomatonMatrix::from_seed({1, 1}, 1);
    CHECK(a.row_count() == 2);
    CHECK(a.col_count() == 2);
    CHECK(a.entry(0, 1) == 1);
    CHECK(a.entry(1, 1) == 1);
    CHECK(a.entry(0, 0) == 0); // 1 + 1
    CHECK(a.entry(1, 0) == 0);
    CHECK(a.satisfies_recurrence());

    // single cyclic row: b + b = 0 forces every column below m to zero
    for (int b : {0, 1}) {
        const AutomatonMatrix s = AutomatonMatrix::from_seed({static_cast<std::uint8_t>(b)}, 2);
        CHECK(s.entry(0, 2) == b);
        CHECK(s.entry(0, 1) == 0);
        CHECK(s.entry(0, 0) == 0);
        CHECK(s.satisfies_recurrence());
    }

    CHECK_THROWS_AS(AutomatonMatrix::from_seed({}, 3), EmptySeed);
}

TEST_CASE("orbit matrices satisfy the membership recurrence") {
    const OrbitMatrix m = OrbitMatrix::build(Gf2Poly::parse("x^2+x+1"));
    BitMatrix grid(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) grid.set(i, j, m.entry(i, j));
    CHECK(AutomatonMatrix(grid).satisfies_recurrence());
    CHECK(AutomatonMatrix(m.u_transform(Degree(2))).satisfies_recurrence());

    BitMatrix broken = grid;
    broken.set(1, 1, 1); // the zero at (1,1) flips the recurrence
    CHECK_FALSE(AutomatonMatrix(broken).satisfies_recurrence());
}

TEST_CASE("walk steps") {
    const Gf2Poly f = Gf2Poly::parse("x^2+x+1");
    const AutomatonMatrix u(OrbitMatrix::build(f).u_transform(Degree(2)));

    // the walk from (0, deg f) replays the orbit's degree sequence
    const auto orb = orbit(f, MapKind::T);
    Cell c{0, 2};
    for (std::size_t k = 0; k + 1 < orb.size(); ++k) {
        CHECK(c.col == orb[k].degree_value());
        c = t_a_step(u, c);
    }
    CHECK(c.col == 0);

    // a cell in the leftmost column with a zero above it has no move
    BitMatrix grid(2, 1);
    grid.set(0, 0, 1);
    const AutomatonMatrix stuck(grid);
    CHECK_FALSE(in_a1_plus(stuck, Cell{0, 0}));
    CHECK_THROWS_AS(t_a_step(stuck, Cell{0, 0}), NotInDomain);

    // a full-ones column moves straight up
    const AutomatonMatrix ones = AutomatonMatrix::from_seed({1, 1, 1}, 2);
    CHECK(t_a_step(ones, Cell{1, 2}) == Cell{0, 2});
    CHECK(t_a_step(ones, Cell{0, 2}) == Cell{2, 2});
}

TEST_CASE("walk stopping time") {
    // exhaustive cross-check with the map stopping time, every f(0)=1 of degree <= 10
    for (std::uint64_t mask = 3; mask < (1ULL << 11); mask += 2) {
        const Gf2Poly f = Gf2Poly::from_mask(mask);
        if (f.degree_value() < 1) continue;
        const OrbitMatrix m = OrbitMatrix::build(f);
        const AutomatonMatrix u(m.u_transform(f.degree()));
        const StepCount limit = static_cast<StepCount>(m.rows()) * static_cast<StepCount>(m.cols()) + 1;
        CHECK(tau_a(u, Cell{0, m.deg()}, limit) == stopping_time(f, MapKind::T));
    }

    // single all-ones column: the walk cycles vertically, the column is
    // already minimal at step 0
    const AutomatonMatrix ones = AutomatonMatrix::from_seed({1, 1, 1, 1}, 0);
    CHECK(tau_a(ones, Cell{0, 0}, 100) == 0);

    // a start without any move also reports 0
    BitMatrix grid(2, 1);
    grid.set(0, 0, 1);
    CHECK(tau_a(AutomatonMatrix(grid), Cell{0, 0}, 100) == 0);

    CHECK_THROWS_AS(tau_a(AutomatonMatrix(grid), Cell{1, 0}, 100), NotInDomain);
    const AutomatonMatrix two = AutomatonMatrix::from_seed({1, 1}, 3);
    CHECK_THROWS_AS(tau_a(two, Cell{0, 3}, 0), LimitExceeded);
}

TEST_CASE("seed search") {
    // brute-force oracle over the 2^n seeds
    const auto brute = [](long n, long m) {
        StepCount best = 0;
        std::uint64_t best_seed = 0;
        bool any = false;
        for (std::uint64_t seed = 0; seed < (1ULL << n); ++seed) {
            if (!(seed >> (n - 1) & 1)) continue;
            const AutomatonMatrix a = AutomatonMatrix::from_seed_mask(seed, n, m);
            const StepCount t =
                tau_a(a, Cell{n - 1, m}, static_cast<StepCount>(n) * static_cast<StepCount>(m + 1) + 1);
            if (!any || t > best || (t == best && seed < best_seed)) {
                best = t;
                best_seed = seed;
                any = true;
            }
        }
        return std::pair{best_seed, best};
    };

    const SearchResult r = search_max_tau(2, 1, SearchStrategy::Exhaustive, 1, 0);
    CHECK(r.evaluations == 2); // seeds 0b10 and 0b11
    const auto [oracle_seed, oracle_tau] = brute(2, 1);
    CHECK(r.best_seed == oracle_seed);
    CHECK(r.best_tau == oracle_tau);

    for (long n : {3L, 5L, 7L}) {
        const SearchResult e = search_max_tau(n, n - 1, SearchStrategy::Exhaustive, 1, 0);
        const auto [seed, tau] = brute(n, n - 1);
        CHECK(e.best_seed == seed);
        CHECK(e.best_tau == tau);
    }

    // hill climbing with no improving neighbor returns its start seed
    const SearchResult h = search_max_tau(1, 2, SearchStrategy::HillClimb, 4, 7);
    CHECK(h.best_seed == 1);
    CHECK(h.evaluations == 4);

    // random search never beats the exhaustive optimum and is deterministic
    const SearchResult rnd1 = search_max_tau(6, 5, SearchStrategy::Random, 50, 3);
    const SearchResult rnd2 = search_max_tau(6, 5, SearchStrategy::Random, 50, 3);
    CHECK(rnd1.to_json() == rnd2.to_json());
    const SearchResult ex = search_max_tau(6, 5, SearchStrategy::Exhaustive, 1, 0);
    CHECK(rnd1.best_tau <= ex.best_tau);

    CHECK_THROWS_AS(search_max_tau(4, 3, SearchStrategy::Random, 0, 1), BudgetZero);
    CHECK_THROWS_AS(search_max_tau(30, 2, SearchStrategy::Exhaustive, 1, 0), NotApplicable);
}

TEST_CASE("exhaustive maxima grow with the shape") {
    StepCount prev = 0;
    for (long n : {4L, 8L, 12L}) {
        const SearchResult r = search_max_tau(n, n - 1, SearchStrategy::Exhaustive, 1, 0);
        CHECK(r.best_tau >= prev);
        prev = r.best_tau;
    }
}

TEST_CASE("column coordinate never increases along a walk") {
    SplitMix64 rng(51);
    for (int i = 0; i < 50; ++i) {
        const long n = 2 + static_cast<long>(rng.next_below(10));
        const long m = 1 + static_cast<long>(rng.next_below(10));
        const std::uint64_t seed = rng.next() | (1ULL << (n - 1));
        const AutomatonMatrix a = AutomatonMatrix::from_seed_mask(seed & ((1ULL << n) - 1), n, m);
        CHECK(a.satisfies_recurrence());
        Cell c{n - 1, m};
        long last_col = c.col;
        int steps = 0;
        std::vector<Cell> seen;
        while (in_a1_plus(a, c) && steps < 1000) {
            c = t_a_step(a, c);
            CHECK(c.col <= last_col);
            CHECK(in_a1(a, c));
            last_col = c.col;
            ++steps;
            bool repeat = false;
            for (const Cell& s : seen) repeat = repeat || (s == c);
            if (repeat) break;
            seen.push_back(c);
        }
    }
}

TEST_CASE("json result shape") {
    const SearchResult r = search_max_tau(4, 3, SearchStrategy::Exhaustive, 1, 0);
    const std::string j = r.to_json();
    CHECK(j.find("\"n\":4") != std::string::npos);
    CHECK(j.find("\"m\":3") != std::string::npos);
    CHECK(j.find("\"strategy\":\"exhaustive\"") != std::string::npos);
    CHECK(j.find("\"seed_hex\":\"0x") != std::string::npos);
    CHECK(j.find("\"tau\":") != std::string::npos);
    CHECK(j.find("\"evaluations\":8") != std::string::npos);
}
