#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2collatz/errors.hpp"

namespace gf2collatz {

// Degree of a polynomial (a natural number) or of a windowed series (any
// integer), with a distinguished value for 0. A separate type so deg(0) can
// never leak into index arithmetic as -1.
class Degree {
public:
    static Degree neg_inf() noexcept { return Degree(kNegInf, Tag{}); }
    explicit Degree(long v) noexcept : v_(v) {}

    bool is_neg_inf() const noexcept { return v_ == kNegInf; }
    long value() const {
        if (is_neg_inf()) throw Error("degree of the zero polynomial has no numeric value");
        return v_;
    }
    long value_or(long fallback) const noexcept { return is_neg_inf() ? fallback : v_; }

    friend bool operator==(Degree a, Degree b) noexcept { return a.v_ == b.v_; }
    friend bool operator!=(Degree a, Degree b) noexcept { return a.v_ != b.v_; }
    // neg_inf compares below every finite degree.
    friend bool operator<(Degree a, Degree b) noexcept {
        if (a.is_neg_inf()) return !b.is_neg_inf();
        if (b.is_neg_inf()) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(Degree a, Degree b) noexcept { return a < b || a == b; }

private:
    struct Tag {};
    Degree(long v, Tag) noexcept : v_(v) {}
    static constexpr long kNegInf = std::numeric_limits<long>::min();
    long v_;
};

enum class BasicFactor { X, XPlusOne };
enum class PDirection { Forward, Inverse };

// Polynomial over GF(2), bit-packed little-endian: bit k of word k/64 is the
// coefficient of x^k. Canonical form: no trailing zero words, so the highest
// stored set bit is the degree; the zero polynomial stores nothing.
// Addition is XOR and every element is its own additive inverse.
class Gf2Poly {
public:
    Gf2Poly() = default; // zero

    static Gf2Poly one() { return from_mask(1); }
    static Gf2Poly x() { return from_mask(2); }
    static Gf2Poly monomial(long k);
    static Gf2Poly from_mask(std::uint64_t mask);
    static Gf2Poly from_words(std::vector<std::uint64_t> words);
    // (x+1)^k, expanded via (x+1)^(2^j) = x^(2^j) + 1.
    static Gf2Poly x_plus_one_pow(unsigned long k);

    // Accepts a hex coefficient mask ("0x7") or the pretty form ("x^2+x+1").
    static Gf2Poly parse(std::string_view text);
    static Gf2Poly parse_hex(std::string_view text);
    static Gf2Poly parse_pretty(std::string_view text);

    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }

    Degree degree() const noexcept;
    // Degree as a plain long; precondition: non-zero polynomial.
    long degree_value() const { return degree().value(); }

    int coeff(long k) const noexcept;
    int eval_at(int point) const;
    std::size_t weight() const noexcept;

    Gf2Poly& operator+=(const Gf2Poly& g);
    friend Gf2Poly operator+(Gf2Poly f, const Gf2Poly& g) { return f += g; }
    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) noexcept { return a.w_ == b.w_; }

    Gf2Poly mul_basic(BasicFactor factor) const;
    // Exact quotient f / factor. Throws ZeroInput for f = 0 and NotDivisible
    // when the factor does not divide f (f(0) != 0 resp. f(1) != 0).
    Gf2Poly div_exact(BasicFactor factor) const;

    Gf2Poly shifted_up(long s) const;
    Gf2Poly shifted_down(long s) const; // truncates bits below x^s

    // Forward: coefficient at x^k becomes the mod-2 suffix sum of coefficients
    // at exponents >= k (degree-preserving for f != 0). Inverse: f ^ (f >> 1).
    // The two directions compose to the identity on polynomials.
    Gf2Poly poly_part_p(PDirection direction) const;

    // Substitution automorphism f(x) -> f(x+1); an involution. Horner in the
    // ring, deg^2 bit operations; off every hot path.
    Gf2Poly subst_x_plus_one() const;

    std::string to_hex() const;
    std::string to_pretty() const;

    std::span<const std::uint64_t> words() const noexcept { return w_; }
    // Low 64 coefficient bits (mask form); exact when degree < 64.
    std::uint64_t low_word() const noexcept { return w_.empty() ? 0 : w_[0]; }

private:
    void trim() noexcept;
    std::vector<std::uint64_t> w_;
};

} // namespace gf2collatz
