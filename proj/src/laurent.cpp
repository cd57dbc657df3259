#include "gf2collatz/laurent.hpp"

#include <algorithm>

#include "gf2collatz/rng.hpp"

namespace gf2collatz {

LaurentWindow LaurentWindow::from_poly(const Gf2Poly& f, int floor, std::string_view tail_bits) {
    if (floor > 0) throw BadFloor("floor must be <= 0");
    if (tail_bits.size() != static_cast<std::size_t>(-floor))
        throw BadFloor("tail must supply exactly |floor| coefficients");
    LaurentWindow r(floor);
    r.coeffs_ = f.shifted_up(-floor);
    for (std::size_t i = 0; i < tail_bits.size(); ++i) {
        const char c = tail_bits[i];
        if (c != '0' && c != '1') throw BadFloor("tail bits must be '0' or '1'");
        // tail_bits[i] is the coefficient at exponent -1-i, i.e. bit -floor-1-i.
        if (c == '1') r.coeffs_ += Gf2Poly::monomial(-floor - 1 - static_cast<long>(i));
    }
    return r;
}

LaurentWindow LaurentWindow::sample(long n, int floor, std::uint64_t seed) {
    if (n < 0) throw Error("window degree must be non-negative");
    if (floor > 0) throw BadFloor("floor must be <= 0");
    LaurentWindow r(floor);
    const long free_bits = n - floor; // bits below the fixed leading 1
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> words;
    long remaining = free_bits;
    while (remaining >= 64) {
        words.push_back(rng.next());
        remaining -= 64;
    }
    if (remaining > 0) words.push_back(rng.next() & ((1ULL << remaining) - 1));
    r.coeffs_ = Gf2Poly::from_words(std::move(words)) + Gf2Poly::monomial(free_bits);
    return r;
}

Degree LaurentWindow::top_exp() const noexcept {
    const Degree d = coeffs_.degree();
    if (d.is_neg_inf()) return d;
    return Degree(d.value_or(0) + floor_);
}

int LaurentWindow::coeff(long exp) const {
    if (exp < floor_) throw Error("coefficient below the exactness floor is unknown");
    return coeffs_.coeff(exp - floor_);
}

int LaurentWindow::poly_parity() const {
    if (floor_ > 0) throw BadFloor("window must store the coefficients at exponents >= 0");
    return coeffs_.shifted_down(-floor_).eval_at(1);
}

LaurentWindow LaurentWindow::p_step(PDirection direction) const {
    LaurentWindow res(floor_);
    res.coeffs_ = coeffs_.poly_part_p(direction);
    return res;
}

LaurentWindow LaurentWindow::s_step() const {
    if (floor_ > 0) throw BadFloor("window must store the coefficients at exponents >= 0");
    if (top_exp() < Degree(0)) throw NegativeDegree("series degree must be >= 0");
    const int parity = poly_parity();
    LaurentWindow res = p_step(PDirection::Forward);
    res.floor_ += parity - 1;
    return res;
}

Gf2Poly LaurentWindow::poly_part() const {
    if (floor_ > 0) throw BadFloor("window must store the coefficients at exponents >= 0");
    return coeffs_.shifted_down(-floor_);
}

LaurentWindow LaurentWindow::shifted(int k) const {
    LaurentWindow res = *this;
    res.floor_ += k;
    return res;
}

LaurentWindow LaurentWindow::with_poly_added(const Gf2Poly& f) const {
    if (floor_ > 0) throw BadFloor("window must store the coefficients at exponents >= 0");
    LaurentWindow res = *this;
    res.coeffs_ += f.shifted_up(-floor_);
    return res;
}

bool shift_le(const LaurentWindow& r, const LaurentWindow& s) {
    if (r.is_zero() || s.is_zero()) {
        if (r.is_zero() && s.is_zero()) return true;
        return false; // no power of x maps zero to non-zero or back
    }
    const long n = s.top_exp().value() - r.top_exp().value();
    if (n < 0) return false;
    // Compare r at exponent e with s at exponent e+n on the aligned overlap.
    const long lo = std::max<long>(r.floor(), static_cast<long>(s.floor()) - n);
    const long hi = r.top_exp().value();
    if (lo > hi) throw IncomparableWindows("aligned exact ranges do not overlap");
    for (long e = lo; e <= hi; ++e) {
        if (r.coeff(e) != s.coeff(e + n)) return false;
    }
    return true;
}

} // namespace gf2collatz
