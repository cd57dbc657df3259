#include "gf2collatz/parity.hpp"

#include "gf2collatz/maps.hpp"

namespace gf2collatz {

ParitySeq ParitySeq::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw Error("parity sequence must consist of '0'/'1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ParitySeq(std::move(bits));
}

std::size_t ParitySeq::weight() const noexcept {
    std::size_t w = 0;
    for (auto b : bits_) w += b;
    return w;
}

std::string ParitySeq::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out += static_cast<char>('0' + b);
    return out;
}

ParitySeq parity_seq(const Gf2Poly& f, std::size_t n) {
    std::vector<std::uint8_t> bits;
    bits.reserve(n);
    Gf2Poly cur = f;
    for (std::size_t k = 0; k < n; ++k) {
        bits.push_back(static_cast<std::uint8_t>(cur.eval_at(1)));
        if (cur.is_zero()) {
            // T(0) = 0 via the f(1)=0 branch; the tail stays all-zero.
            bits.resize(n, 0);
            break;
        }
        if (k + 1 < n) cur = step(cur, MapKind::T);
    }
    return ParitySeq(std::move(bits));
}

Gf2Poly invert_parity_seq(const ParitySeq& p) {
    Gf2Poly f;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const ParitySeq cur = parity_seq(f, k + 1);
        if (cur[k] != p[k]) f += Gf2Poly::x_plus_one_pow(k);
    }
    return f;
}

Gf2Poly parity_class_witness(const ParitySeq& p) {
    return Gf2Poly::x_plus_one_pow(p.size()) + invert_parity_seq(p);
}

} // namespace gf2collatz
