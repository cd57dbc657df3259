#include "gf2collatz/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace gf2collatz {

namespace {

constexpr int kWordBits = 64;

// bit k of the result = parity of bits k..63 of w (parallel suffix XOR).
inline std::uint64_t suffix_parity(std::uint64_t w) noexcept {
    w ^= w >> 1;
    w ^= w >> 2;
    w ^= w >> 4;
    w ^= w >> 8;
    w ^= w >> 16;
    w ^= w >> 32;
    return w;
}

} // namespace

void Gf2Poly::trim() noexcept {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::monomial(long k) {
    if (k < 0) throw Error("monomial exponent must be non-negative");
    Gf2Poly f;
    f.w_.assign(static_cast<std::size_t>(k / kWordBits) + 1, 0);
    f.w_.back() = 1ULL << (k % kWordBits);
    return f;
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) {
    Gf2Poly f;
    if (mask != 0) f.w_.push_back(mask);
    return f;
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
    Gf2Poly f;
    f.w_ = std::move(words);
    f.trim();
    return f;
}

Gf2Poly Gf2Poly::x_plus_one_pow(unsigned long k) {
    Gf2Poly res = one();
    for (int j = 0; k >> j; ++j) {
        if ((k >> j) & 1) res += res.shifted_up(1L << j);
    }
    return res;
}

Degree Gf2Poly::degree() const noexcept {
    if (w_.empty()) return Degree::neg_inf();
    const long top = static_cast<long>(w_.size()) - 1;
    return Degree(top * kWordBits + (std::bit_width(w_.back()) - 1));
}

int Gf2Poly::coeff(long k) const noexcept {
    if (k < 0) return 0;
    const std::size_t wi = static_cast<std::size_t>(k) / kWordBits;
    if (wi >= w_.size()) return 0;
    return static_cast<int>((w_[wi] >> (k % kWordBits)) & 1);
}

int Gf2Poly::eval_at(int point) const {
    switch (point) {
    case 0: return coeff(0);
    case 1: return static_cast<int>(weight() & 1);
    default: throw Error("evaluation point must be 0 or 1");
    }
}

std::size_t Gf2Poly::weight() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& g) {
    if (g.w_.size() > w_.size()) w_.resize(g.w_.size(), 0);
    for (std::size_t i = 0; i < g.w_.size(); ++i) w_[i] ^= g.w_[i];
    trim();
    return *this;
}

Gf2Poly Gf2Poly::mul_basic(BasicFactor factor) const {
    switch (factor) {
    case BasicFactor::X: return shifted_up(1);
    case BasicFactor::XPlusOne: {
        Gf2Poly res = shifted_up(1);
        res += *this;
        return res;
    }
    }
    throw Error("unknown factor");
}

Gf2Poly Gf2Poly::div_exact(BasicFactor factor) const {
    if (is_zero()) throw ZeroInput();
    switch (factor) {
    case BasicFactor::X:
        if (coeff(0) != 0) throw NotDivisible("x does not divide a polynomial with non-zero constant term");
        return shifted_down(1);
    case BasicFactor::XPlusOne:
        if (eval_at(1) != 0) throw NotDivisible("x+1 does not divide a polynomial of odd weight");
        // f/(x+1) = suffix-parity transform of f, shifted down one exponent.
        return poly_part_p(PDirection::Forward).shifted_down(1);
    }
    throw Error("unknown factor");
}

Gf2Poly Gf2Poly::shifted_up(long s) const {
    if (s < 0) throw Error("shift must be non-negative");
    if (s == 0 || is_zero()) return *this;
    const long word_shift = s / kWordBits;
    const int bit_shift = static_cast<int>(s % kWordBits);
    Gf2Poly res;
    res.w_.assign(w_.size() + static_cast<std::size_t>(word_shift) + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(word_shift);
        res.w_[j] |= w_[i] << bit_shift;
        if (bit_shift != 0) res.w_[j + 1] |= w_[i] >> (kWordBits - bit_shift);
    }
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::shifted_down(long s) const {
    if (s < 0) throw Error("shift must be non-negative");
    if (s == 0 || is_zero()) return *this;
    const std::size_t word_shift = static_cast<std::size_t>(s) / kWordBits;
    const int bit_shift = static_cast<int>(s % kWordBits);
    if (word_shift >= w_.size()) return Gf2Poly();
    Gf2Poly res;
    res.w_.assign(w_.size() - word_shift, 0);
    for (std::size_t i = 0; i < res.w_.size(); ++i) {
        res.w_[i] = w_[i + word_shift] >> bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < w_.size())
            res.w_[i] |= w_[i + word_shift + 1] << (kWordBits - bit_shift);
    }
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::poly_part_p(PDirection direction) const {
    if (direction == PDirection::Inverse) {
        Gf2Poly res = shifted_down(1);
        res += *this;
        return res;
    }
    Gf2Poly res;
    res.w_.assign(w_.size(), 0);
    int carry = 0; // parity of all coefficients in higher words
    for (std::size_t i = w_.size(); i-- > 0;) {
        std::uint64_t s = suffix_parity(w_[i]);
        if (carry) s = ~s;
        res.w_[i] = s;
        carry ^= std::popcount(w_[i]) & 1;
    }
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::subst_x_plus_one() const {
    if (is_zero()) return Gf2Poly();
    Gf2Poly res;
    for (long k = degree_value(); k >= 0; --k) {
        res = res.mul_basic(BasicFactor::XPlusOne);
        if (coeff(k)) res += one();
    }
    return res;
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0x0";
    std::string out;
    bool leading = true;
    for (std::size_t i = w_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned d = static_cast<unsigned>((w_[i] >> (nib * 4)) & 0xf);
            if (leading && d == 0) continue;
            leading = false;
            out += "0123456789abcdef"[d];
        }
    }
    return "0x" + out;
}

std::string Gf2Poly::to_pretty() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree_value(); k >= 0; --k) {
        if (!coeff(k)) continue;
        if (!out.empty()) out += '+';
        if (k == 0) out += '1';
        else if (k == 1) out += 'x';
        else out += "x^" + std::to_string(k);
    }
    return out;
}

Gf2Poly Gf2Poly::parse_hex(std::string_view text) {
    if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
        throw Error("hex polynomial must start with 0x");
    Gf2Poly f;
    const std::string_view digits = text.substr(2);
    f.w_.assign(digits.size() / 16 + 1, 0);
    long bit = 0;
    for (std::size_t i = digits.size(); i-- > 0; bit += 4) {
        const char c = digits[i];
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
        else throw Error(std::string("invalid hex digit '") + c + "'");
        f.w_[static_cast<std::size_t>(bit / 64)] |= static_cast<std::uint64_t>(v) << (bit % 64);
    }
    f.trim();
    return f;
}

Gf2Poly Gf2Poly::parse_pretty(std::string_view text) {
    Gf2Poly f;
    std::size_t pos = 0;
    bool saw_term = false;
    while (pos <= text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string term(text.substr(pos, next - pos));
        std::erase_if(term, [](unsigned char c) { return std::isspace(c); });
        if (term.empty()) throw Error("empty term in polynomial");
        saw_term = true;
        if (term == "0") {
            // nothing to add
        } else if (term == "1") {
            f += one();
        } else if (term == "x") {
            f += x();
        } else if (term.rfind("x^", 0) == 0) {
            long k = 0;
            const char* b = term.data() + 2;
            const char* e = term.data() + term.size();
            auto [p, ec] = std::from_chars(b, e, k);
            if (ec != std::errc() || p != e || k < 0)
                throw Error("invalid exponent in term '" + term + "'");
            f += monomial(k);
        } else {
            throw Error("invalid term '" + term + "'");
        }
        if (next == text.size()) break;
        pos = next + 1;
    }
    if (!saw_term) throw Error("empty polynomial text");
    return f;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        return parse_hex(text);
    return parse_pretty(text);
}

} // namespace gf2collatz
