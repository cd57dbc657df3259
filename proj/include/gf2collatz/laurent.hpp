#pragma once

#include <cstdint>
#include <string_view>

#include "gf2collatz/gf2poly.hpp"

namespace gf2collatz {

// Truncated formal series in descending powers of x over GF(2), exact on the
// exponent range [floor, top_exp]. Every stored coefficient equals the true
// coefficient of the represented series; coefficients below the floor are
// unknown, never assumed zero. Coefficients above top_exp are zero (top_exp
// is the degree). The suffix-sum operator only consults exponents >= z and
// its inverse is local, so both stay exact down to the floor.
class LaurentWindow {
public:
    // Zero window with the given floor.
    explicit LaurentWindow(int floor = 0) : floor_(floor) {}

    // Window representing f + tail, where tail_bits ("010...", length
    // |floor|) gives the coefficients at exponents -1, -2, ..., floor.
    static LaurentWindow from_poly(const Gf2Poly& f, int floor, std::string_view tail_bits);

    // top_exp = n with leading coefficient 1; every lower stored coefficient
    // is an independent fair bit of the splitmix64 stream for `seed`, drawn
    // as 64-bit words from the lowest exponent upward.
    static LaurentWindow sample(long n, int floor, std::uint64_t seed);

    bool is_zero() const noexcept { return coeffs_.is_zero(); }
    int floor() const noexcept { return floor_; }
    Degree top_exp() const noexcept;
    Degree degree() const noexcept { return top_exp(); }

    // Coefficient at an exponent within [floor, +inf); exponents above
    // top_exp read 0, exponents below the floor are unknown and throw.
    int coeff(long exp) const;

    // [r](1): parity of the coefficients at exponents >= 0. Requires floor <= 0.
    int poly_parity() const;

    // Forward: coefficient at z becomes the suffix parity over exponents
    // >= z. Inverse: coefficient at k becomes a(k+1) + a(k). Both keep the
    // floor and, for non-zero windows, the degree.
    LaurentWindow p_step(PDirection direction) const;

    // x^([r](1)-1) * P(r): forward transform, then all exponents shifted by
    // parity-1. Requires floor <= 0 and degree >= 0; the result again has
    // degree >= 0, and the exactness floor shifts with the window.
    LaurentWindow s_step() const;

    // Coefficients at exponents >= 0. Requires floor <= 0.
    Gf2Poly poly_part() const;

    // All exponents shifted by k (k may be negative; floor moves along).
    LaurentWindow shifted(int k) const;

    // r + f with f a polynomial (XOR on the stored range at exponents >= 0).
    LaurentWindow with_poly_added(const Gf2Poly& f) const;

    friend bool operator==(const LaurentWindow& a, const LaurentWindow& b) noexcept {
        return a.floor_ == b.floor_ && a.coeffs_ == b.coeffs_;
    }

    // True iff s = x^n r for n = deg(s) - deg(r) >= 0, compared on the
    // aligned overlap of the two exact ranges. Throws IncomparableWindows
    // when that overlap is empty.
    friend bool shift_le(const LaurentWindow& r, const LaurentWindow& s);

private:
    int floor_;
    Gf2Poly coeffs_; // bit i = coefficient at exponent floor_ + i
};

} // namespace gf2collatz
