#include "gf2collatz/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gf2collatz/automaton.hpp"
#include "gf2collatz/fp_maps.hpp"
#include "gf2collatz/laurent.hpp"
#include "gf2collatz/maps.hpp"
#include "gf2collatz/orbit_matrix.hpp"
#include "gf2collatz/parity.hpp"
#include "gf2collatz/rng.hpp"
#include "gf2collatz/stats.hpp"

namespace gf2collatz {

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

CheckResult check_map_identities(long max_deg) {
    std::uint64_t mismatches = 0;
    std::uint64_t tested = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << (max_deg + 1)); ++mask) {
        const Gf2Poly f = Gf2Poly::from_mask(mask);
        const long deg = f.degree_value();
        const StepCount tau0 = stopping_time(f, MapKind::T0);
        const StepCount tau1 = stopping_time(f, MapKind::T1);
        const StepCount tau = stopping_time(f.subst_x_plus_one(), MapKind::T);
        if (tau0 + static_cast<StepCount>(deg) != 2 * tau1) ++mismatches;
        if (tau1 != tau) ++mismatches;
        ++tested;
    }
    std::ostringstream d;
    d << "tau0 = 2 tau1 - deg and tau1 = tau(sigma(f)) over " << tested
      << " polynomials of degree <= " << max_deg << ", " << mismatches << " mismatches";
    return {"map_identities", mismatches == 0, d.str()};
}

CheckResult check_stopping_bound(long max_deg) {
    std::uint64_t violations = 0;
    std::uint64_t tested = 0;
    const StepCount limit = default_step_limit_for_degree(max_deg);
    for (std::uint64_t mask = 1; mask < (1ULL << (max_deg + 1)); ++mask) {
        const auto deg = static_cast<std::uint64_t>(63 - std::countl_zero(mask));
        const StepCount tau = fast::stopping_time_u64(mask, MapKind::T, limit);
        // tau <= 2 deg^1.5 + 1 as exact integers: (tau-1)^2 <= 4 deg^3.
        if (tau > 0 && (tau - 1) * (tau - 1) > 4 * deg * deg * deg) ++violations;
        if (mask & 1) {
            const CertifiedBound cert = certify_bound(Gf2Poly::from_mask(mask));
            if (!cert.holds()) ++violations;
        }
        ++tested;
    }
    std::ostringstream d;
    d << "tau <= 2 deg^1.5 + 1 and certificate chain over " << tested
      << " polynomials of degree <= " << max_deg << ", " << violations << " violations";
    return {"stopping_bound", violations == 0, d.str()};
}

CheckResult check_parity_bijection(int max_n) {
    std::uint64_t failures = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::uint8_t> seen(1ULL << n, 0);
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const Gf2Poly f = Gf2Poly::from_mask(mask);
            const ParitySeq p = parity_seq(f, static_cast<std::size_t>(n));
            std::uint64_t key = 0;
            for (int k = 0; k < n; ++k) key |= static_cast<std::uint64_t>(p[k]) << k;
            if (seen[key]) ++failures;
            seen[key] = 1;
            if (!(invert_parity_seq(p) == f)) ++failures;
            const Gf2Poly witness = parity_class_witness(p);
            if (witness.degree() != Degree(n) || !(parity_seq(witness, n) == p)) ++failures;
        }
    }
    std::ostringstream d;
    d << "f -> parity sequence is a bijection with working inverse and witness for n <= " << max_n
      << ", " << failures << " failures";
    return {"parity_bijection", failures == 0, d.str()};
}

CheckResult check_binomial_law(int n) {
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t g = 0; g < (1ULL << n); ++g) {
        const Gf2Poly f = Gf2Poly::from_mask((1ULL << n) | g);
        ++histogram[parity_seq(f, static_cast<std::size_t>(n)).weight()];
    }
    std::uint64_t off = 0;
    for (int w = 0; w <= n; ++w)
        if (histogram[static_cast<std::size_t>(w)] != binomial(static_cast<unsigned>(n), static_cast<unsigned>(w)))
            ++off;
    std::ostringstream d;
    d << "parity-sum histogram at degree " << n << " equals C(" << n << ",w) exactly, " << off
      << " buckets off";
    return {"binomial_law", off == 0, d.str()};
}

CheckResult check_laurent_compatibility(int windows, int max_k) {
    std::uint64_t mismatches = 0;
    for (int i = 0; i < windows; ++i) {
        const long n = 1 + (i % 48);
        LaurentWindow r = LaurentWindow::sample(n, -64, 0x5eedULL + static_cast<std::uint64_t>(i));
        Gf2Poly f = r.poly_part();
        for (int k = 0; k < max_k; ++k) {
            r = r.s_step();
            f = step(f, MapKind::T);
            if (!(r.poly_part() == f)) ++mismatches;
        }
    }
    std::ostringstream d;
    d << "poly_part(S^k(r)) = T^k([r]) over " << windows << " windows, k <= " << max_k << ", "
      << mismatches << " mismatches";
    return {"laurent_compatibility", mismatches == 0, d.str()};
}

CheckResult check_matrix_certificates(int count) {
    SplitMix64 rng(0xacce55ULL);
    std::uint64_t failures = 0;
    for (int i = 0; i < count; ++i) {
        const long deg = 8 + static_cast<long>(rng.next_below(56));
        std::uint64_t mask = rng.next() & ((1ULL << deg) - 1);
        mask |= 1;
        mask |= 1ULL << deg;
        const Gf2Poly f = Gf2Poly::from_mask(mask);
        const OrbitMatrix a = OrbitMatrix::build(f);
        const Decomposition dec = decompose(f);
        const StepCount tau = stopping_time(f, MapKind::T);

        for (long r = 0; r < a.rows() && failures == 0; ++r)
            for (long j = 0; j < a.deg(); ++j)
                if (a.entry(r, j) != (a.entry(r, j + 1) ^ a.entry_wrapped(r - 1, j + 1))) {
                    ++failures;
                    break;
                }
        for (const Mark& mk : dec.marks)
            if (a.entry(mk.row, mk.col) != 1) ++failures;
        StepCount sum_len = 0;
        std::set<std::pair<long, long>> all_cells;
        std::uint64_t cell_total = 0;
        for (const Triangle& t : dec.triangles) {
            sum_len += t.length();
            const auto cells = t.cells(a.rows());
            cell_total += cells.size();
            for (const auto& c : cells) {
                all_cells.insert(c);
                if (c.second < t.col && a.entry(c.first, c.second) != 0) ++failures;
            }
        }
        if (sum_len != tau) ++failures;
        if (all_cells.size() != cell_total) ++failures; // triangles must be pairwise disjoint
        // Anti-diagonal readout of the U-transform is f(x+1).
        const BitMatrix u = a.u_transform(Degree(a.deg()));
        Gf2Poly readout;
        for (long k = 0; k <= a.deg(); ++k)
            if (u.get(a.rows() - 1, k)) readout += Gf2Poly::monomial(a.deg() - k);
        if (!(readout == f.subst_x_plus_one())) ++failures;
        // The automaton walk on U reproduces tau; it visits each cell at most once.
        const AutomatonMatrix am(a.u_transform(Degree(a.deg())));
        const StepCount walk_limit = static_cast<StepCount>(a.rows()) * static_cast<StepCount>(a.cols()) + 1;
        if (tau_a(am, Cell{0, a.deg()}, walk_limit) != tau) ++failures;
    }
    std::ostringstream d;
    d << "recurrence, marks, triangles, sigma readout and walk stopping time over " << count
      << " seeded polynomials of degree 8..63, " << failures << " failures";
    return {"matrix_certificates", failures == 0, d.str()};
}

CheckResult check_rho_exact(const std::vector<int>& identity_ns) {
    std::uint64_t failures = 0;
    const RhoRecord r1 = rho_exhaustive(1, MapKind::T, 1);
    const RhoRecord r2 = rho_exhaustive(2, MapKind::T, 1);
    if (r1.sum_tau != 3 || r2.sum_tau != 12) ++failures; // rho(1) = 1.5, rho(2) = 3.0
    for (int n : identity_ns) {
        const RhoRecord rt = rho_exhaustive(n, MapKind::T);
        const RhoRecord rt0 = rho_exhaustive(n, MapKind::T0);
        const RhoRecord rt1 = rho_exhaustive(n, MapKind::T1);
        // rho0 = 2 rho - n and rho1 = rho, exact in integer sums.
        if (rt0.sum_tau != 2 * rt.sum_tau - static_cast<std::uint64_t>(n) * rt.count) ++failures;
        if (rt1.sum_tau != rt.sum_tau) ++failures;
    }
    std::ostringstream d;
    d << "rho(1)=1.5, rho(2)=3.0 and the rho0/rho1 identities, " << failures << " failures";
    return {"rho_exact", failures == 0, d.str()};
}

CheckResult check_rho_trend(const std::vector<int>& ns) {
    std::uint64_t failures = 0;
    std::vector<double> ratios;
    std::vector<double> outside;
    for (int n : ns) {
        const RhoRecord r = rho_exhaustive(n, MapKind::T);
        ratios.push_back(r.rho_over_n());
        if (r.rho_over_n() < 1.5 || r.rho_over_n() > 2.5) ++failures;
        outside.push_back(concentration(n, 0.5, MapKind::T).value());
    }
    for (std::size_t i = 1; i < outside.size(); ++i)
        if (outside[i] > outside[i - 1]) ++failures;
    std::ostringstream d;
    d << "rho/n in [1.5,2.5] and outside-band fraction non-increasing at n in {";
    for (std::size_t i = 0; i < ns.size(); ++i) d << (i ? "," : "") << ns[i];
    d << "}; ratios";
    for (double r : ratios) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " %.4f", r);
        d << buf;
    }
    d << ", " << failures << " failures";
    return {"rho_trend", failures == 0, d.str()};
}

CheckResult check_hat_family(unsigned max_n) {
    std::uint64_t failures = 0;
    std::ostringstream d;
    d << "hat stopping times";
    StepCount prev = 0;
    for (unsigned n = 1; n <= max_n; ++n) {
        const Gf2Poly pn = hat_family(n);
        const StepCount tau = stopping_time(pn, MapKind::THat);
        if (n > 1 && tau <= prev) ++failures;
        prev = tau;
        const double ratio = static_cast<double>(tau) / (static_cast<double>(n) * std::pow(4.0, n));
        char buf[64];
        std::snprintf(buf, sizeof(buf), " n=%u tau=%llu ratio=%.3f", n,
                      static_cast<unsigned long long>(tau), ratio);
        d << buf;
    }
    d << ", " << failures << " failures";
    return {"hat_family", failures == 0, d.str()};
}

CheckResult check_fp_dynamics(long max_deg) {
    std::uint64_t failures = 0;
    FpSurvey survey;
    try {
        survey = survey_p(3, max_deg, 0, 1); // exhaustive at these sizes
    } catch (const Error&) {
        return {"fp_dynamics", false, "survey aborted (orbit exceeded its guard)"};
    }
    for (const FpSurveyRow& row : survey.rows) {
        const double bound = survey.c_hat * std::pow(static_cast<double>(row.deg), 1.5);
        if (static_cast<double>(row.max_tau) > bound + 1e-9) ++failures;
    }
    std::ostringstream d;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", survey.c_hat);
    d << "all F_3 orbits of degree <= " << max_deg << " reach a constant; fitted C_3 = " << buf
      << ", " << failures << " failures";
    return {"fp_dynamics", failures == 0, d.str()};
}

CheckResult check_determinism() {
    std::uint64_t failures = 0;
    const auto tmp = std::filesystem::temp_directory_path();

    if (!(LaurentWindow::sample(20, -64, 7) == LaurentWindow::sample(20, -64, 7))) ++failures;
    if (!(rho_sample(10, 2000, MapKind::T, 9).sum_tau == rho_sample(10, 2000, MapKind::T, 9).sum_tau))
        ++failures;

    const RhoRecord a = rho_exhaustive(12, MapKind::T, 1);
    const RhoRecord b = rho_exhaustive(12, MapKind::T, 4);
    if (a.sum_tau != b.sum_tau) ++failures;

    const auto csv1 = tmp / "gf2collatz_verify_1.csv";
    const auto csv2 = tmp / "gf2collatz_verify_2.csv";
    emit_csv({a, rho_sample(10, 100, MapKind::T1, 3)}, csv1);
    emit_csv({a, rho_sample(10, 100, MapKind::T1, 3)}, csv2);
    if (read_bytes(csv1) != read_bytes(csv2)) ++failures;

    const auto img1 = tmp / "gf2collatz_verify_1.ppm";
    const auto img2 = tmp / "gf2collatz_verify_2.ppm";
    render(Gf2Poly::parse("0x7"), img1, ImageFormat::PPM);
    render(Gf2Poly::parse("0x7"), img2, ImageFormat::PPM);
    if (read_bytes(img1) != read_bytes(img2)) ++failures;

    const SearchResult s1 = search_max_tau(8, 7, SearchStrategy::HillClimb, 200, 5);
    const SearchResult s2 = search_max_tau(8, 7, SearchStrategy::HillClimb, 200, 5);
    if (s1.to_json() != s2.to_json()) ++failures;

    for (const auto& p : {csv1, csv2, img1, img2}) std::filesystem::remove(p);

    return {"determinism", failures == 0,
            "seeded sampling, thread counts, CSV/JSON/PPM bytes; " + std::to_string(failures) +
                " failures"};
}

} // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress) {
    const bool full = level == VerifyLevel::Full;
    std::vector<CheckResult> results;
    const auto run = [&](CheckResult r) {
        if (progress) *progress << "... " << r.name << (r.pass ? " ok" : " FAILED") << "\n";
        results.push_back(std::move(r));
    };

    run(check_map_identities(full ? 12 : 10));
    run(check_stopping_bound(full ? 16 : 12));
    run(check_parity_bijection(full ? 14 : 10));
    run(check_binomial_law(full ? 12 : 10));
    run(check_laurent_compatibility(full ? 1000 : 200, full ? 64 : 32));
    run(check_matrix_certificates(full ? 200 : 50));
    run(check_rho_exact(full ? std::vector<int>{12, 16} : std::vector<int>{8, 10}));
    run(check_rho_trend(full ? std::vector<int>{12, 16, 20} : std::vector<int>{10, 12}));
    run(check_hat_family(full ? 4 : 3));
    run(check_fp_dynamics(full ? 6 : 4));
    run(check_determinism());
    return results;
}

} // namespace gf2collatz
