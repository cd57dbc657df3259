#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "gf2collatz/automaton.hpp"
#include "gf2collatz/fp_maps.hpp"
#include "gf2collatz/laurent.hpp"
#include "gf2collatz/maps.hpp"
#include "gf2collatz/orbit_matrix.hpp"
#include "gf2collatz/parity.hpp"
#include "gf2collatz/stats.hpp"
#include "gf2collatz/verify.hpp"

namespace py = pybind11;
using namespace gf2collatz;

namespace {

MapKind kind_of(const std::string& name) { return map_kind_from_string(name); }

py::dict rho_to_dict(const RhoRecord& r) {
    py::dict d;
    d["n"] = r.n;
    d["map"] = std::string(to_string(r.map));
    d["mode"] = std::string(to_string(r.mode));
    d["count"] = r.count;
    d["sum_tau"] = r.sum_tau;
    d["rho"] = r.rho();
    d["rho_over_n"] = r.rho_over_n();
    d["ci_halfwidth"] = r.ci_halfwidth;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polynomial Collatz dynamics over GF(2)";

    py::register_exception<Error>(m, "Gf2CollatzError");

    py::class_<Gf2Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return Gf2Poly::parse(text); }),
             py::arg("text"), "Parse a hex mask (0x7) or pretty form (x^2+x+1)")
        .def_static("from_mask", &Gf2Poly::from_mask, py::arg("mask"))
        .def_static("monomial", &Gf2Poly::monomial, py::arg("k"))
        .def("degree",
             [](const Gf2Poly& f) -> std::optional<long> {
                 if (f.is_zero()) return std::nullopt;
                 return f.degree_value();
             },
             "Degree, or None for the zero polynomial")
        .def("eval_at", &Gf2Poly::eval_at, py::arg("point"))
        .def("coeff", &Gf2Poly::coeff, py::arg("k"))
        .def("weight", &Gf2Poly::weight)
        .def("is_zero", &Gf2Poly::is_zero)
        .def("is_one", &Gf2Poly::is_one)
        .def("subst_x_plus_one", &Gf2Poly::subst_x_plus_one)
        .def("suffix_transform",
             [](const Gf2Poly& f, bool inverse) {
                 return f.poly_part_p(inverse ? PDirection::Inverse : PDirection::Forward);
             },
             py::arg("inverse") = false)
        .def("to_hex", &Gf2Poly::to_hex)
        .def("__str__", &Gf2Poly::to_pretty)
        .def("__repr__", [](const Gf2Poly& f) { return "Poly('" + f.to_pretty() + "')"; })
        .def("__add__", [](const Gf2Poly& a, const Gf2Poly& b) { return a + b; })
        .def("__eq__", [](const Gf2Poly& a, const Gf2Poly& b) { return a == b; })
        .def("__hash__", [](const Gf2Poly& f) { return std::hash<std::string>{}(f.to_hex()); });

    m.def("step",
          [](const Gf2Poly& f, const std::string& map) { return step(f, kind_of(map)); },
          py::arg("f"), py::arg("map") = "T");
    m.def("stopping_time",
          [](const Gf2Poly& f, const std::string& map, std::optional<StepCount> limit) {
              const MapKind kind = kind_of(map);
              return limit ? stopping_time(f, kind, *limit) : stopping_time(f, kind);
          },
          py::arg("f"), py::arg("map") = "T", py::arg("limit") = py::none());
    m.def("orbit",
          [](const Gf2Poly& f, const std::string& map) { return orbit(f, kind_of(map)); },
          py::arg("f"), py::arg("map") = "T");
    m.def("star_transform", &star_transform, py::arg("f"));
    m.def("hat_family", &hat_family, py::arg("n"));

    m.def("parity_seq",
          [](const Gf2Poly& f, std::size_t n) { return parity_seq(f, n).to_string(); },
          py::arg("f"), py::arg("n"));
    m.def("invert_parity_seq",
          [](const std::string& bits) { return invert_parity_seq(ParitySeq::from_string(bits)); },
          py::arg("bits"));
    m.def("parity_class_witness",
          [](const std::string& bits) { return parity_class_witness(ParitySeq::from_string(bits)); },
          py::arg("bits"));

    m.def("rho_exhaustive",
          [](int n, const std::string& map, unsigned threads,
             std::optional<std::filesystem::path> checkpoint) {
              return rho_to_dict(rho_exhaustive(n, kind_of(map), threads, checkpoint));
          },
          py::arg("n"), py::arg("map") = "T", py::arg("threads") = 0,
          py::arg("checkpoint") = py::none());
    m.def("rho_sample",
          [](int n, std::uint64_t samples, const std::string& map, std::uint64_t seed) {
              return rho_to_dict(rho_sample(n, samples, kind_of(map), seed));
          },
          py::arg("n"), py::arg("samples"), py::arg("map") = "T", py::arg("seed") = 1);
    m.def("concentration",
          [](int n, double epsilon, const std::string& map) {
              const Fraction f = concentration(n, epsilon, kind_of(map));
              py::dict d;
              d["outside"] = f.outside;
              d["total"] = f.total;
              d["value"] = f.value();
              return d;
          },
          py::arg("n"), py::arg("epsilon"), py::arg("map") = "T");
    m.def("prefix_limit_experiment",
          [](std::uint64_t seed, int n_max) {
              py::list rows;
              for (const PrefixLimitRow& r : prefix_limit_experiment(seed, n_max)) {
                  py::dict d;
                  d["n"] = r.n;
                  d["tau"] = r.tau;
                  d["ratio"] = r.ratio;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("seed"), py::arg("n_max"));

    m.def("certify_bound",
          [](const Gf2Poly& f) {
              const CertifiedBound c = certify_bound(f);
              py::dict d;
              d["degree"] = c.degree;
              d["tau"] = c.tau;
              d["prefix_steps"] = c.prefix_steps;
              d["tail_degree"] = c.tail_degree;
              d["row_count"] = c.row_count;
              d["sum_lengths"] = c.sum_lengths;
              d["sum_squares"] = c.sum_squares;
              d["sum_cells"] = c.sum_cells;
              d["holds"] = c.holds();
              return d;
          },
          py::arg("f"));
    m.def("decompose",
          [](const Gf2Poly& f) {
              const Decomposition dec = decompose(f);
              py::dict d;
              d["tau"] = dec.tau;
              py::list marks;
              for (const Mark& mk : dec.marks) marks.append(py::make_tuple(mk.row, mk.col));
              d["marks"] = marks;
              py::list lengths;
              for (const Triangle& t : dec.triangles) lengths.append(t.length());
              d["triangle_lengths"] = lengths;
              return d;
          },
          py::arg("f"));
    m.def("render_matrix",
          [](const Gf2Poly& f, const std::filesystem::path& out, const std::string& format) {
              ImageFormat fmt;
              if (format == "ppm") fmt = ImageFormat::PPM;
              else if (format == "pgm") fmt = ImageFormat::PGM;
              else throw Error("format must be ppm or pgm");
              const ImageSummary s = render(f, out, fmt);
              return py::make_tuple(s.width, s.height, s.bytes);
          },
          py::arg("f"), py::arg("out"), py::arg("format") = "ppm");

    m.def("search_automaton",
          [](long n, long mm, const std::string& strategy, std::uint64_t budget, std::uint64_t seed) {
              const SearchResult r =
                  search_max_tau(n, mm, search_strategy_from_string(strategy), budget, seed);
              py::dict d;
              d["n"] = r.n;
              d["m"] = r.m;
              d["strategy"] = std::string(to_string(r.strategy));
              d["seed"] = r.best_seed;
              d["tau"] = r.best_tau;
              d["evaluations"] = r.evaluations;
              return d;
          },
          py::arg("n"), py::arg("m"), py::arg("strategy") = "exhaustive", py::arg("budget") = 1000,
          py::arg("seed") = 1);
    m.def("tau_a_from_seed",
          [](std::uint64_t seed, long n, long mm) {
              const AutomatonMatrix a = AutomatonMatrix::from_seed_mask(seed, n, mm);
              return tau_a(a, Cell{n - 1, mm},
                           static_cast<StepCount>(n) * static_cast<StepCount>(mm + 1) + 1);
          },
          py::arg("seed"), py::arg("n"), py::arg("m"));

    m.def("fp_tau",
          [](std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
              return tau_p(FpPoly(p, coeffs));
          },
          py::arg("p"), py::arg("coeffs"));
    m.def("fp_survey",
          [](std::uint32_t p, long max_deg, std::uint64_t samples, std::uint64_t seed) {
              const FpSurvey s = survey_p(p, max_deg, samples, seed);
              py::dict d;
              d["p"] = s.p;
              d["c_hat"] = s.c_hat;
              py::list rows;
              for (const FpSurveyRow& r : s.rows) {
                  py::dict row;
                  row["deg"] = r.deg;
                  row["count"] = r.count;
                  row["max_tau"] = r.max_tau;
                  row["mean_tau"] = r.mean_tau;
                  row["c_hat"] = r.c_hat;
                  rows.append(row);
              }
              d["rows"] = rows;
              return d;
          },
          py::arg("p"), py::arg("max_deg"), py::arg("samples") = 4096, py::arg("seed") = 1);

    m.def("verify",
          [](const std::string& level) {
              py::list out;
              const auto results = run_verification(level == "full" ? VerifyLevel::Full
                                                                    : VerifyLevel::Quick);
              for (const CheckResult& r : results) {
                  py::dict d;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["detail"] = r.detail;
                  out.append(d);
              }
              return out;
          },
          py::arg("level") = "quick");
}
