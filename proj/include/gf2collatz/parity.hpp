#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gf2collatz/gf2poly.hpp"

namespace gf2collatz {

// Finite bit sequence p0..p(n-1) with pk = T^k(f)(1). Over all inputs of a
// fixed degree n the sequences are uniform: f restricted to degree < n is in
// bijection with {0,1}^n.
class ParitySeq {
public:
    ParitySeq() = default;
    explicit ParitySeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    static ParitySeq from_string(std::string_view text); // e.g. "1100"

    std::size_t size() const noexcept { return bits_.size(); }
    int operator[](std::size_t k) const { return bits_.at(k); }
    std::size_t weight() const noexcept;
    std::string to_string() const;

    friend bool operator==(const ParitySeq& a, const ParitySeq& b) noexcept {
        return a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

// pk = (T^k(f))(1) for k < n. Defined for every f including 0 (T(0) = 0, all
// zeros) and past the arrival at 1 (T(1) = 1, trailing ones).
ParitySeq parity_seq(const Gf2Poly& f, std::size_t n);

// The unique f in {0} u {deg < n} with parity_seq(f, n) = p: start from 0 and
// fix bit k by adding (x+1)^k, which flips parity bit k and preserves all
// lower ones.
Gf2Poly invert_parity_seq(const ParitySeq& p);

// (x+1)^n + invert_parity_seq(p): a degree-n polynomial with parity sequence p.
Gf2Poly parity_class_witness(const ParitySeq& p);

} // namespace gf2collatz
