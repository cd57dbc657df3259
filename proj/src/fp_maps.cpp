#include "gf2collatz/fp_maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "gf2collatz/rng.hpp"
#include "gf2collatz/stats.hpp"

namespace gf2collatz {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    for (auto& c : c_) c %= p_;
    trim();
}

void FpPoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long FpPoly::degree_value() const {
    if (is_zero()) throw Error("degree of the zero polynomial has no numeric value");
    return static_cast<long>(c_.size()) - 1;
}

Degree FpPoly::degree() const noexcept {
    return is_zero() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
}

std::uint32_t FpPoly::coeff(long k) const noexcept {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

std::uint32_t FpPoly::eval_at_minus_one() const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc += (k % 2 == 0) ? c_[k] : (p_ - c_[k]) % p_;
    }
    return static_cast<std::uint32_t>(acc % p_);
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree_value(); k >= 0; --k) {
        const std::uint32_t c = coeff(k);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || c != 1) os << c;
        if (k >= 1) os << (c != 1 ? "*x" : "x");
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

namespace {

// Exact division of `num` by (x+1), i.e. synthetic division at the root -1.
FpPoly div_x_plus_one_exact(std::uint32_t p, const std::vector<std::uint32_t>& num) {
    if (num.empty()) return FpPoly::zero(p);
    const std::size_t m = num.size() - 1; // degree of the numerator
    std::vector<std::uint32_t> q(m, 0);
    std::uint32_t carry = 0; // q(k) while walking down
    for (std::size_t k = m; k >= 1; --k) {
        carry = k == m ? num[k] : (num[k] + p - carry) % p;
        q[k - 1] = carry;
    }
    const std::uint32_t remainder = (num[0] + p - carry) % p;
    if (remainder != 0) throw Error("internal: division by x+1 left a remainder");
    return FpPoly(p, std::move(q));
}

} // namespace

FpPoly tp_step(const FpPoly& f) {
    if (f.is_zero()) throw ZeroInput();
    const std::uint32_t p = f.modulus();
    const std::uint32_t at_minus_one = f.eval_at_minus_one();
    const std::uint32_t at_zero = f.eval_at_zero();
    std::vector<std::uint32_t> num;
    if (at_minus_one == at_zero && at_minus_one != 0) {
        // x f + f(-1)
        num.assign(f.coeffs().size() + 1, 0);
        for (std::size_t k = 0; k < f.coeffs().size(); ++k) num[k + 1] = f.coeffs()[k];
        num[0] = at_minus_one;
    } else {
        // f - f(-1)
        num = f.coeffs();
        if (num.empty()) num.push_back(0);
        num[0] = (num[0] + p - at_minus_one) % p;
    }
    return div_x_plus_one_exact(p, num);
}

StepCount tau_p(const FpPoly& f, StepCount limit) {
    if (f.is_zero()) throw ZeroInput();
    FpPoly cur = f;
    for (StepCount k = 0; k <= limit; ++k) {
        if (cur.degree_value() == 0) return k;
        cur = tp_step(cur);
    }
    throw LimitExceeded(limit);
}

StepCount tau_p(const FpPoly& f) {
    const long deg = f.is_zero() ? 0 : f.degree_value();
    const double d = static_cast<double>(deg < 1 ? 1 : deg);
    const StepCount guard =
        static_cast<StepCount>(std::ceil(4.0 * f.modulus() * d * std::sqrt(d))) + 16;
    return tau_p(f, guard);
}

namespace {

struct BlockStats {
    std::uint64_t sum = 0;
    std::uint64_t max = 0;
    std::uint64_t count = 0;
};

// Stopping times over the index range [lo, hi) of degree-deg polynomials,
// index i encoding lead 1 + i / p^deg and lower coefficients i % p^deg in
// base p.
BlockStats survey_block(std::uint32_t p, long deg, std::uint64_t pow_deg, std::uint64_t lo,
                        std::uint64_t hi) {
    BlockStats st;
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(deg) + 1, 0);
    for (std::uint64_t i = lo; i < hi; ++i) {
        std::uint64_t rest = i % pow_deg;
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
            coeffs[k] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        coeffs.back() = static_cast<std::uint32_t>(1 + i / pow_deg);
        const StepCount t = tau_p(FpPoly(p, coeffs));
        st.sum += t;
        st.max = std::max<std::uint64_t>(st.max, t);
        ++st.count;
    }
    return st;
}

} // namespace

FpSurvey survey_p(std::uint32_t p, long max_deg, std::uint64_t samples, std::uint64_t seed) {
    if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    if (max_deg < 1) throw Error("max_deg must be >= 1");

    FpSurvey survey;
    survey.p = p;
    SplitMix64 rng(seed);
    for (long deg = 1; deg <= max_deg; ++deg) {
        // Exhaustive while p^(deg+1) stays within the 2^20 input budget.
        double population = 1.0;
        for (long i = 0; i <= deg; ++i) population *= p;
        const bool exhaustive = population <= static_cast<double>(1 << 20);

        FpSurveyRow row;
        row.deg = deg;
        std::uint64_t sum = 0;
        if (exhaustive) {
            std::uint64_t pow_deg = 1;
            for (long i = 0; i < deg; ++i) pow_deg *= p;
            const std::uint64_t total = (p - 1) * pow_deg;
            // Disjoint index blocks, reduced in block order, so the result
            // does not depend on the worker count.
            const unsigned workers =
                total >= (1u << 14) ? std::min<unsigned>(resolve_thread_count(0), 16) : 1;
            std::vector<BlockStats> blocks(workers);
            if (workers <= 1) {
                blocks[0] = survey_block(p, deg, pow_deg, 0, total);
            } else {
                const std::uint64_t span = (total + workers - 1) / workers;
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (unsigned w = 0; w < workers; ++w) {
                    const std::uint64_t lo = std::min<std::uint64_t>(total, w * span);
                    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + span);
                    pool.emplace_back(
                        [&, w, lo, hi] { blocks[w] = survey_block(p, deg, pow_deg, lo, hi); });
                }
                for (auto& t : pool) t.join();
            }
            for (const BlockStats& b : blocks) {
                sum += b.sum;
                row.max_tau = std::max(row.max_tau, b.max);
                row.count += b.count;
            }
        } else {
            std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(deg) + 1, 0);
            for (std::uint64_t s = 0; s < samples; ++s) {
                for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
                    coeffs[k] = static_cast<std::uint32_t>(rng.next_below(p));
                coeffs.back() = static_cast<std::uint32_t>(1 + rng.next_below(p - 1));
                const StepCount t = tau_p(FpPoly(p, coeffs));
                sum += t;
                row.max_tau = std::max<std::uint64_t>(row.max_tau, t);
                ++row.count;
            }
        }
        row.mean_tau = row.count ? static_cast<double>(sum) / static_cast<double>(row.count) : 0.0;
        const double d = static_cast<double>(deg);
        row.c_hat = static_cast<double>(row.max_tau) / (d * std::sqrt(d));
        survey.c_hat = std::max(survey.c_hat, row.c_hat);
        survey.rows.push_back(row);
    }
    return survey;
}

void FpSurvey::write_csv(std::ostream& os) const {
    os << "p,deg,count,max_tau,mean_tau,c_hat\n";
    char buf[64];
    for (const FpSurveyRow& r : rows) {
        os << p << ',' << r.deg << ',' << r.count << ',' << r.max_tau << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", r.mean_tau);
        os << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", r.c_hat);
        os << buf << '\n';
    }
}

void FpSurvey::write_csv(const std::filesystem::path& out) const {
    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + out.string() + "' for writing");
    write_csv(os);
    if (!os) throw IoError("failed while writing '" + out.string() + "'");
}

} // namespace gf2collatz
