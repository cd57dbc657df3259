#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gf2collatz/errors.hpp"
#include "gf2collatz/maps.hpp"

namespace gf2collatz {

bool is_prime(std::uint32_t p);

// Polynomial over Z/p for a prime modulus, coefficients indexed by exponent
// and reduced to [0, p). Canonical: non-zero leading coefficient, the zero
// polynomial stores nothing.
class FpPoly {
public:
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    static FpPoly zero(std::uint32_t p) { return FpPoly(p, {}); }
    static FpPoly constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }

    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree_value() const; // requires non-zero
    Degree degree() const noexcept;
    std::uint32_t coeff(long k) const noexcept;
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    std::uint32_t eval_at_zero() const noexcept { return coeff(0); }
    // f(-1) via the alternating coefficient sum (evaluation at p-1).
    std::uint32_t eval_at_minus_one() const noexcept;

    std::string to_string() const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

private:
    void trim() noexcept;
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

// One step of the prime-field map:
//   f(-1) = f(0) != 0  ->  (x f + f(-1)) / (x+1)
//   otherwise          ->  (f - f(-1)) / (x+1)
// Both numerators vanish at -1, so the synthetic division by (x+1) is exact
// (a non-zero remainder is an internal arithmetic bug).
FpPoly tp_step(const FpPoly& f);

// Least n <= limit with deg(T_p^n(f)) = 0; non-zero constants are fixed
// points, so 0 for them.
StepCount tau_p(const FpPoly& f, StepCount limit);
StepCount tau_p(const FpPoly& f); // guard ceil(4 p deg^1.5) + 16

struct FpSurveyRow {
    long deg = 0;
    std::uint64_t count = 0;
    std::uint64_t max_tau = 0;
    double mean_tau = 0.0;
    double c_hat = 0.0; // max_tau / deg^1.5
};

struct FpSurvey {
    std::uint32_t p = 0;
    std::vector<FpSurveyRow> rows;
    double c_hat = 0.0; // max over rows
    void write_csv(std::ostream& os) const;
    void write_csv(const std::filesystem::path& out) const;
};

// Per degree 1..max_deg: max and mean stopping time over every polynomial of
// that degree when p^(deg+1) <= 2^20, else over `samples` seeded draws with
// a non-zero leading coefficient.
FpSurvey survey_p(std::uint32_t p, long max_deg, std::uint64_t samples, std::uint64_t seed);

} // namespace gf2collatz
