#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gf2collatz/bit_matrix.hpp"
#include "gf2collatz/maps.hpp"

namespace gf2collatz {

// n x (m+1) bit matrix constrained by the cyclic recurrence
// a(i,j) = a(i,j+1) + a(i-1,j+1) with a(-1,j) = a(n-1,j); every such matrix
// is determined by its last column, so there are 2^n of them per shape.
class AutomatonMatrix {
public:
    // Column m = seed (seed[i] = a(i,m)), lower columns filled by the
    // recurrence. Throws EmptySeed when the seed column has no rows.
    static AutomatonMatrix from_seed(const std::vector<std::uint8_t>& seed_column, long m);
    static AutomatonMatrix from_seed_mask(std::uint64_t seed, long n, long m);

    // Adopts an arbitrary grid; use satisfies_recurrence() to test membership.
    explicit AutomatonMatrix(BitMatrix grid) : grid_(std::move(grid)) {}

    long row_count() const noexcept { return grid_.rows(); }
    long col_count() const noexcept { return grid_.cols(); } // m + 1
    long m() const noexcept { return grid_.cols() - 1; }

    int entry(long i, long j) const { return grid_.get(i, j); }
    int entry_wrapped(long i, long j) const;

    // Recurrence holds at every interior position including the wrap row.
    bool satisfies_recurrence() const;

    const BitMatrix& grid() const noexcept { return grid_; }

private:
    BitMatrix grid_;
};

struct Cell {
    long row;
    long col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

bool in_a1(const AutomatonMatrix& a, Cell c);
// A1+ = cells of entry 1 from which a move is defined: column > 0, or
// column 0 with the cell above (cyclically) also 1.
bool in_a1_plus(const AutomatonMatrix& a, Cell c);

// Move up within the column when the cell above (row - 1 mod n) holds 1,
// else one column left; the left move always lands on an entry 1. Throws
// NotInDomain for cells outside A1+.
Cell t_a_step(const AutomatonMatrix& a, Cell c);

// First step index at which the walk reaches its minimal column. The column
// coordinate never increases, so the walk is followed until it leaves A1+,
// revisits a cell (it then cycles vertically forever), or trips the limit.
// The start must be in A1 (NotInDomain otherwise); a start without a move
// returns 0.
StepCount tau_a(const AutomatonMatrix& a, Cell start, StepCount limit);

enum class SearchStrategy { Exhaustive, HillClimb, Random };

SearchStrategy search_strategy_from_string(std::string_view name);
std::string_view to_string(SearchStrategy s);

struct SearchResult {
    long n = 0;
    long m = 0;
    SearchStrategy strategy = SearchStrategy::Exhaustive;
    std::uint64_t best_seed = 0; // bit i = seed column entry a(i,m)
    StepCount best_tau = 0;
    std::uint64_t evaluations = 0;
    std::string to_json() const;
};

// Maximizes tau_A((n-1, m)) over seed columns whose top cell is 1 (others
// are outside the walk's domain and skipped). Exhaustive requires n <= 24;
// hill climbing flips single seed bits and restarts from the seeded PRNG on
// local optima; random draws seeds independently. Deterministic for a fixed
// seed and budget; ties resolve to the lowest seed value.
SearchResult search_max_tau(long n, long m, SearchStrategy strategy, std::uint64_t budget,
                            std::uint64_t rng_seed);

} // namespace gf2collatz
