#include "gf2collatz/orbit_matrix.hpp"

#include <bit>
#include <fstream>

namespace gf2collatz {

namespace {

constexpr long kBuildDegreeCap = 4096; // 2^12 rows of 4 KiB bound the matrix memory

long wrap(long i, long modulus) noexcept {
    long r = i % modulus;
    return r < 0 ? r + modulus : r;
}

} // namespace

OrbitMatrix OrbitMatrix::build(const Gf2Poly& f) {
    if (f.is_zero()) throw ZeroInput();
    if (f.eval_at(0) != 1) throw NotApplicable("matrix requires a non-zero constant coefficient");
    const long deg = f.degree_value();
    if (deg < 1) throw NotApplicable("matrix requires degree >= 1");
    if (deg > kBuildDegreeCap) throw DegreeTooLarge("matrix degree cap is 4096");

    OrbitMatrix m;
    m.f_ = f;
    m.deg_ = deg;
    m.nlog2_ = static_cast<int>(std::bit_width(static_cast<unsigned long>(deg)));
    const long rows = 1L << m.nlog2_;
    m.row_polys_.reserve(static_cast<std::size_t>(rows));
    Gf2Poly cur = f;
    for (long i = 0; i < rows; ++i) {
        m.row_polys_.push_back(cur);
        cur = cur.poly_part_p(PDirection::Forward);
    }
    return m;
}

int OrbitMatrix::entry(long i, long j) const {
    if (i < 0 || i >= rows() || j < 0 || j > deg_) throw Error("matrix index out of range");
    return row_polys_[static_cast<std::size_t>(i)].coeff(deg_ - j);
}

int OrbitMatrix::entry_wrapped(long i, long j) const { return entry(wrap(i, rows()), j); }

BitMatrix OrbitMatrix::u_transform(Degree d) const {
    if (d != Degree(deg_)) throw ShapeMismatch("degree argument does not match the matrix");
    BitMatrix u(rows(), cols());
    for (long i = 0; i < rows(); ++i)
        for (long j = 0; j < cols(); ++j) u.set(i, j, entry_wrapped(deg_ - i - j, j));
    return u;
}

std::vector<std::pair<long, long>> Triangle::cells(long row_modulus) const {
    std::vector<std::pair<long, long>> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (StepCount l = first; l <= last; ++l)
        for (StepCount d = 0; d <= l - first; ++d)
            out.emplace_back(wrap(static_cast<long>(l % static_cast<StepCount>(row_modulus)), row_modulus),
                             col - static_cast<long>(d));
    return out;
}

Decomposition decompose(const Gf2Poly& f) {
    if (f.is_zero()) throw ZeroInput();
    if (f.eval_at(0) != 1) throw NotApplicable("decomposition requires a non-zero constant coefficient");
    const long deg = f.degree().value();
    if (deg < 1) throw NotApplicable("decomposition requires degree >= 1");
    if (deg > kBuildDegreeCap) throw DegreeTooLarge("matrix degree cap is 4096");

    const long rows = 1L << std::bit_width(static_cast<unsigned long>(deg));
    const std::vector<Gf2Poly> orb = orbit(f, MapKind::T);

    Decomposition d;
    d.tau = static_cast<StepCount>(orb.size()) - 1;
    d.marks.reserve(static_cast<std::size_t>(d.tau));
    for (StepCount k = 0; k < d.tau; ++k) {
        const long col = orb[static_cast<std::size_t>(k)].degree_value();
        d.marks.push_back(Mark{static_cast<long>(k % static_cast<StepCount>(rows)), col});
    }
    // Degrees along the orbit are non-increasing and step down by at most
    // one, so each visited column is one contiguous run of steps.
    StepCount k = 0;
    while (k < d.tau) {
        const long col = orb[static_cast<std::size_t>(k)].degree_value();
        StepCount end = k;
        while (end + 1 < d.tau && orb[static_cast<std::size_t>(end + 1)].degree_value() == col) ++end;
        d.triangles.push_back(Triangle{col, k, end});
        k = end + 1;
    }
    return d;
}

CertifiedBound certify_bound(const Gf2Poly& f) {
    if (f.is_zero()) throw ZeroInput();
    CertifiedBound cert;
    cert.degree = f.degree_value();

    Gf2Poly cur = f;
    const StepCount guard = default_step_limit(f);
    while (cur.eval_at(0) == 0) {
        if (cert.prefix_steps >= guard) throw LimitExceeded(guard);
        cur = step(cur, MapKind::T);
        ++cert.prefix_steps;
    }
    cert.tail_degree = cur.degree_value();

    StepCount tail_tau = 0;
    if (!cur.is_one()) {
        const Decomposition d = decompose(cur);
        tail_tau = d.tau;
        cert.row_count = 1ULL << std::bit_width(static_cast<unsigned long>(cert.tail_degree));
        for (const Triangle& t : d.triangles) {
            const std::uint64_t l = t.length();
            cert.sum_lengths += l;
            cert.sum_squares += l * l;
            cert.sum_cells += l * (l + 1) / 2;
        }
        const auto tail_deg = static_cast<std::uint64_t>(cert.tail_degree);
        cert.cells_within_area = cert.sum_cells <= cert.row_count * tail_deg;
        cert.cauchy_schwarz_ok = tail_tau * tail_tau <= tail_deg * cert.sum_squares &&
                                 tail_deg * cert.sum_squares <= 2 * tail_deg * cert.sum_cells;
    } else {
        cert.cells_within_area = true;
        cert.cauchy_schwarz_ok = true;
    }
    cert.tau = cert.prefix_steps + tail_tau;

    // tau <= 2*deg^1.5 for f(0)=1, one extra step allowed otherwise; both
    // compared exactly as squares.
    const auto deg3 = static_cast<std::uint64_t>(cert.degree) * static_cast<std::uint64_t>(cert.degree) *
                      static_cast<std::uint64_t>(cert.degree);
    if (cert.prefix_steps == 0) {
        cert.bound_ok = cert.tau * cert.tau <= 4 * deg3;
    } else {
        cert.bound_ok = cert.tau == 0 || (cert.tau - 1) * (cert.tau - 1) <= 4 * deg3;
    }
    return cert;
}

ImageSummary render(const Gf2Poly& f, const std::filesystem::path& out, ImageFormat format) {
    const OrbitMatrix m = OrbitMatrix::build(f);
    const Decomposition d = decompose(f);

    enum : std::uint8_t { kZero, kOne, kMark, kStripe };
    const long h = m.rows();
    const long w = m.cols();
    std::vector<std::uint8_t> cls(static_cast<std::size_t>(h * w));
    for (long i = 0; i < h; ++i)
        for (long j = 0; j < w; ++j)
            cls[static_cast<std::size_t>(i * w + j)] = m.entry(i, j) ? kOne : kZero;
    for (const Triangle& t : d.triangles) {
        for (const auto& [i, j] : t.cells(h)) {
            if (j < t.col) cls[static_cast<std::size_t>(i * w + j)] = kStripe;
        }
    }
    for (const Mark& mk : d.marks) cls[static_cast<std::size_t>(mk.row * w + mk.col)] = kMark;

    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + out.string() + "' for writing");
    std::string header = (format == ImageFormat::PPM ? "P6\n" : "P5\n");
    header += std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    os.write(header.data(), static_cast<std::streamsize>(header.size()));

    std::vector<std::uint8_t> payload;
    payload.reserve(static_cast<std::size_t>(h * w * (format == ImageFormat::PPM ? 3 : 1)));
    for (long i = 0; i < h; ++i) {
        for (long j = 0; j < w; ++j) {
            const std::uint8_t c = cls[static_cast<std::size_t>(i * w + j)];
            if (format == ImageFormat::PPM) {
                std::uint8_t rgb[3] = {0, 0, 0};
                switch (c) {
                case kOne: rgb[0] = rgb[1] = rgb[2] = 255; break;
                case kMark: rgb[0] = 255; rgb[1] = 165; rgb[2] = 0; break;
                case kStripe:
                    if ((i + j) % 2 == 0) rgb[0] = rgb[1] = rgb[2] = 255;
                    break;
                default: break;
                }
                payload.insert(payload.end(), rgb, rgb + 3);
            } else {
                std::uint8_t g = 0;
                switch (c) {
                case kOne: g = 255; break;
                case kMark: g = 200; break;
                case kStripe: g = 128; break;
                default: break;
                }
                payload.push_back(g);
            }
        }
    }
    os.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    if (!os) throw IoError("failed while writing '" + out.string() + "'");
    return ImageSummary{w, h, header.size() + payload.size()};
}

} // namespace gf2collatz
