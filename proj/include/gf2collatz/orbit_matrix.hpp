#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "gf2collatz/bit_matrix.hpp"
#include "gf2collatz/gf2poly.hpp"
#include "gf2collatz/maps.hpp"

namespace gf2collatz {

// The 2^n x (deg f + 1) coefficient matrix of the forward suffix-sum
// iterates of f, where n is the unique integer with 2^(n-1) <= deg f < 2^n.
// Row i holds [P^i(f)] with entry (i, j) = coefficient of x^(deg f - j), so
// column 0 is the (all-ones) leading column. Rows are cyclic: the forward
// transform of the last row is row 0 again, and consecutive rows satisfy
// a(i,j) = a(i,j+1) + a(i-1,j+1) with the wrap row included.
class OrbitMatrix {
public:
    // Requires f != 0 with f(0) = 1 (NotApplicable otherwise) and deg f >= 1.
    static OrbitMatrix build(const Gf2Poly& f);

    long deg() const noexcept { return deg_; }
    int n_log2() const noexcept { return nlog2_; }
    long rows() const noexcept { return static_cast<long>(row_polys_.size()); }
    long cols() const noexcept { return deg_ + 1; }

    int entry(long i, long j) const;
    // Rows indexed mod 2^n.
    int entry_wrapped(long i, long j) const;
    const Gf2Poly& row_poly(long i) const { return row_polys_.at(static_cast<std::size_t>(i)); }
    const Gf2Poly& source() const noexcept { return f_; }

    // U(A)(i,j) = a((deg f - i - j) mod 2^n, j). Row 2^n - 1 of the result,
    // read as coefficients of descending powers, is f(x+1). The degree
    // argument must match deg f (ShapeMismatch otherwise).
    BitMatrix u_transform(Degree d) const;

private:
    OrbitMatrix() = default;
    Gf2Poly f_;
    long deg_ = 0;
    int nlog2_ = 0;
    std::vector<Gf2Poly> row_polys_;
};

struct Mark {
    long row; // k mod 2^n
    long col; // deg T^k(f)
    friend bool operator==(const Mark&, const Mark&) = default;
};

// The cells attached to the orbit's stay at degree `col`: step indices
// first..last visited that degree, and for each step l the cells
// ((l mod 2^n), col - d) with 0 <= d <= l - first. The vertical edge carries
// entries 1 (the marks) and everything strictly left of it entries 0.
struct Triangle {
    long col;
    StepCount first;
    StepCount last;
    StepCount length() const noexcept { return last - first + 1; }
    StepCount cell_count() const noexcept { return length() * (length() + 1) / 2; }
    std::vector<std::pair<long, long>> cells(long row_modulus) const;
};

struct Decomposition {
    std::vector<Mark> marks;         // one per step 0 <= k < tau
    std::vector<Triangle> triangles; // one per visited column deg f .. 1
    StepCount tau = 0;               // equals the sum of triangle lengths
};

// Requires the same preconditions as build.
Decomposition decompose(const Gf2Poly& f);

// Certificate for tau(f) <= 2*deg(f)^1.5 + 1. For f(0) = 1 the chain is
//   sum l(l+1)/2 <= 2^n * deg,  tau^2 <= deg * sum l^2
//     <= 2*deg * sum l(l+1)/2 <= 2*deg * 2^n * deg <= 4*deg^3,
// checked in exact integers (tau <= 2*deg^1.5 iff tau^2 <= 4*deg^3). For
// f(0) = 0 the orbit is walked to the first element with constant
// coefficient 1 and the chain is applied to that tail.
struct CertifiedBound {
    long degree = 0;
    StepCount tau = 0;
    // Prefix length k+1 consumed before the constant coefficient turns 1
    // (0 when f(0) = 1 already).
    StepCount prefix_steps = 0;
    long tail_degree = 0;      // degree of the certified tail
    std::uint64_t row_count = 0;   // 2^n of the tail matrix (0 for tau = 0 tails)
    std::uint64_t sum_lengths = 0; // = tau of the tail
    std::uint64_t sum_squares = 0;
    std::uint64_t sum_cells = 0;   // sum l(l+1)/2
    bool cells_within_area = false;  // sum_cells <= 2^n * deg
    bool cauchy_schwarz_ok = false;  // tau^2 <= deg * sum_squares <= 2 deg sum_cells
    bool bound_ok = false;           // tau <= 2 deg^1.5 (+1 after the reduction)
    bool holds() const noexcept { return cells_within_area && cauchy_schwarz_ok && bound_ok; }
};

CertifiedBound certify_bound(const Gf2Poly& f);

enum class ImageFormat { PPM, PGM };

struct ImageSummary {
    long width = 0;
    long height = 0;
    std::size_t bytes = 0;
};

// Renders the matrix of f: 1-cells white, 0-cells black, marked cells orange
// (gray 200 in PGM), zero cells inside a triangle in a checkerboard stripe
// (gray 128 in PGM). Binary P6/P5, header "P6\n<w> <h>\n255\n", deterministic
// bytes. Same preconditions as build.
ImageSummary render(const Gf2Poly& f, const std::filesystem::path& out, ImageFormat format);

} // namespace gf2collatz
