#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gf2collatz/gf2poly.hpp"

namespace gf2collatz {

// The five step maps. Branch conditions and quotients:
//   T0:    f(0)=0 -> f/x,            f(0)=1 -> (x+1)f+1
//   T1:    f(0)=0 -> f/x,            f(0)=1 -> ((x+1)f+1)/x
//   T:     f(1)=0 -> f/(x+1),        f(1)=1 -> (xf+1)/(x+1)
//   T*:    f(1)=0 -> xf/(x+1),       f(1)=1 -> (f+1)/(x+1)
//   T^:    [P^-1(f)](0)=0 -> (f+f(0))/x,  else -> ((x+1)f+f(0))/x
enum class MapKind { T0, T1, T, TStar, THat };

std::string_view to_string(MapKind kind);
MapKind map_kind_from_string(std::string_view name);

using StepCount = std::uint64_t;

// ceil(4*deg^1.5) + 16: double the certified stopping-time bound plus slack,
// so hitting it always indicates a bug rather than a slow orbit.
StepCount default_step_limit(const Gf2Poly& f);
StepCount default_step_limit_for_degree(long deg);

// One application of the chosen map. Throws ZeroInput for f = 0, except for
// TStar which is total as defined (T*(0) = 0; needed because the star
// transform sends 1 to 0).
Gf2Poly step(const Gf2Poly& f, MapKind kind);

// Least k <= limit with step^k(f) = 1; 0 for f = 1. Throws LimitExceeded
// when the guard trips.
StepCount stopping_time(const Gf2Poly& f, MapKind kind, StepCount limit);
StepCount stopping_time(const Gf2Poly& f, MapKind kind); // default limit

// [f, step(f), ..., 1]; length = stopping_time + 1.
std::vector<Gf2Poly> orbit(const Gf2Poly& f, MapKind kind, StepCount limit);
std::vector<Gf2Poly> orbit(const Gf2Poly& f, MapKind kind);

// step applied k times (no target, no guard beyond k itself).
Gf2Poly iterate_map(Gf2Poly f, MapKind kind, StepCount k);

// f* = (f+1)/x. Requires f(0) = 1 (NotApplicable otherwise). Satisfies
// T*(f*) = (T(f))* for every such f.
Gf2Poly star_transform(const Gf2Poly& f);

// The sparse family with 2^n terms at exponents 4^n - k(2^n+1) - 1 for
// k = 0..2^n-1; degree 4^n - 1. Its T^ stopping times grow roughly like
// n*4^n. Throws DegreeTooLarge when 4^n exceeds the supported cap.
Gf2Poly hat_family(unsigned n);

namespace fast {

// Hot-path steppers on mask-encoded polynomials (bit k = coefficient of
// x^k). Valid while every intermediate degree stays below 64; T0 may grow
// the degree by one, so inputs need deg <= kMaxDegree.
inline constexpr int kMaxDegree = 61;

std::uint64_t step_u64(std::uint64_t f, MapKind kind);
StepCount stopping_time_u64(std::uint64_t f, MapKind kind, StepCount limit);

} // namespace fast

} // namespace gf2collatz
