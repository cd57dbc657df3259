#include "gf2collatz/maps.hpp"

#include <bit>
#include <cmath>

namespace gf2collatz {

std::string_view to_string(MapKind kind) {
    switch (kind) {
    case MapKind::T0: return "T0";
    case MapKind::T1: return "T1";
    case MapKind::T: return "T";
    case MapKind::TStar: return "Tstar";
    case MapKind::THat: return "That";
    }
    return "?";
}

MapKind map_kind_from_string(std::string_view name) {
    if (name == "T0") return MapKind::T0;
    if (name == "T1") return MapKind::T1;
    if (name == "T") return MapKind::T;
    if (name == "Tstar") return MapKind::TStar;
    if (name == "That") return MapKind::THat;
    throw Error("unknown map '" + std::string(name) + "' (expected T0|T1|T|Tstar|That)");
}

StepCount default_step_limit_for_degree(long deg) {
    if (deg <= 0) return 16;
    const double d = static_cast<double>(deg);
    return static_cast<StepCount>(std::ceil(4.0 * d * std::sqrt(d))) + 16;
}

StepCount default_step_limit(const Gf2Poly& f) {
    return default_step_limit_for_degree(f.degree().value_or(0));
}

Gf2Poly step(const Gf2Poly& f, MapKind kind) {
    if (f.is_zero()) {
        if (kind == MapKind::TStar) return f; // x*0/(x+1) = 0
        throw ZeroInput();
    }
    switch (kind) {
    case MapKind::T0:
        if (f.eval_at(0) == 0) return f.div_exact(BasicFactor::X);
        return f.mul_basic(BasicFactor::XPlusOne) + Gf2Poly::one();
    case MapKind::T1:
        if (f.eval_at(0) == 0) return f.div_exact(BasicFactor::X);
        return (f.mul_basic(BasicFactor::XPlusOne) + Gf2Poly::one()).div_exact(BasicFactor::X);
    case MapKind::T:
        if (f.eval_at(1) == 0) return f.div_exact(BasicFactor::XPlusOne);
        return (f.mul_basic(BasicFactor::X) + Gf2Poly::one()).div_exact(BasicFactor::XPlusOne);
    case MapKind::TStar: {
        if (f.eval_at(1) == 0) return f.mul_basic(BasicFactor::X).div_exact(BasicFactor::XPlusOne);
        const Gf2Poly numerator = f + Gf2Poly::one();
        return numerator.is_zero() ? numerator : numerator.div_exact(BasicFactor::XPlusOne);
    }
    case MapKind::THat: {
        const Gf2Poly c0 = f.eval_at(0) ? Gf2Poly::one() : Gf2Poly();
        if (f.poly_part_p(PDirection::Inverse).eval_at(0) == 0)
            return (f + c0).div_exact(BasicFactor::X);
        return (f.mul_basic(BasicFactor::XPlusOne) + c0).div_exact(BasicFactor::X);
    }
    }
    throw Error("unknown map kind");
}

StepCount stopping_time(const Gf2Poly& f, MapKind kind, StepCount limit) {
    if (f.is_zero()) throw ZeroInput();
    Gf2Poly cur = f;
    for (StepCount k = 0; k <= limit; ++k) {
        if (cur.is_one()) return k;
        cur = step(cur, kind);
    }
    throw LimitExceeded(limit);
}

StepCount stopping_time(const Gf2Poly& f, MapKind kind) {
    return stopping_time(f, kind, default_step_limit(f));
}

std::vector<Gf2Poly> orbit(const Gf2Poly& f, MapKind kind, StepCount limit) {
    if (f.is_zero()) throw ZeroInput();
    std::vector<Gf2Poly> out;
    Gf2Poly cur = f;
    for (StepCount k = 0; k <= limit; ++k) {
        out.push_back(cur);
        if (cur.is_one()) return out;
        cur = step(cur, kind);
    }
    throw LimitExceeded(limit);
}

std::vector<Gf2Poly> orbit(const Gf2Poly& f, MapKind kind) {
    return orbit(f, kind, default_step_limit(f));
}

Gf2Poly iterate_map(Gf2Poly f, MapKind kind, StepCount k) {
    for (StepCount i = 0; i < k; ++i) f = step(f, kind);
    return f;
}

Gf2Poly star_transform(const Gf2Poly& f) {
    if (f.is_zero() || f.eval_at(0) != 1)
        throw NotApplicable("star transform requires a non-zero constant coefficient");
    return (f + Gf2Poly::one()).shifted_down(1);
}

Gf2Poly hat_family(unsigned n) {
    constexpr unsigned kMaxN = 12; // degree 4^12 - 1 = 16,777,215
    if (n < 1) throw Error("family index must be >= 1");
    if (n > kMaxN) throw DegreeTooLarge("family degree 4^n - 1 exceeds the supported cap");
    const long two_n = 1L << n;
    const long four_n = two_n * two_n;
    Gf2Poly f;
    for (long k = 0; k < two_n; ++k) f += Gf2Poly::monomial(four_n - k * (two_n + 1) - 1);
    return f;
}

namespace fast {

namespace {

// bit k = parity of bits k..63.
inline std::uint64_t suffix_parity(std::uint64_t w) noexcept {
    w ^= w >> 1;
    w ^= w >> 2;
    w ^= w >> 4;
    w ^= w >> 8;
    w ^= w >> 16;
    w ^= w >> 32;
    return w;
}

// u/(x+1) for an even-weight mask u: suffix parities shifted down one.
inline std::uint64_t div_x_plus_one(std::uint64_t u) noexcept { return suffix_parity(u) >> 1; }

} // namespace

std::uint64_t step_u64(std::uint64_t f, MapKind kind) {
    if (f == 0) {
        if (kind == MapKind::TStar) return 0;
        throw ZeroInput();
    }
    switch (kind) {
    case MapKind::T0:
        return (f & 1) ? (f ^ (f << 1) ^ 1) : (f >> 1);
    case MapKind::T1:
        return (f & 1) ? ((f ^ (f << 1) ^ 1) >> 1) : (f >> 1);
    case MapKind::T:
        return (std::popcount(f) & 1) ? div_x_plus_one((f << 1) | 1) : div_x_plus_one(f);
    case MapKind::TStar:
        return (std::popcount(f) & 1) ? div_x_plus_one(f ^ 1) : div_x_plus_one(f << 1);
    case MapKind::THat: {
        const std::uint64_t c0 = f & 1;
        const bool odd_branch = (((f >> 1) ^ f) & 1) != 0;
        return odd_branch ? ((f ^ (f << 1) ^ c0) >> 1) : ((f ^ c0) >> 1);
    }
    }
    throw Error("unknown map kind");
}

StepCount stopping_time_u64(std::uint64_t f, MapKind kind, StepCount limit) {
    if (f == 0) throw ZeroInput();
    for (StepCount k = 0; k <= limit; ++k) {
        if (f == 1) return k;
        f = step_u64(f, kind);
    }
    throw LimitExceeded(limit);
}

} // namespace fast

} // namespace gf2collatz
