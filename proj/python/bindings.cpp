#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "schurforge/azumaya.hpp"
#include "schurforge/brauer.hpp"
#include "schurforge/cli.hpp"
#include "schurforge/exactfield.hpp"

namespace py = pybind11;
using namespace schurforge;

namespace {

Place parse_place(const std::string& text) {
    if (text == "inf") return Place::infinity();
    return Place::prime(mpz_class(text));
}

template <class Fn>
auto translate(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw py::value_error(std::string(e.name()) + ": " + e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Schur representation toolkit";
    m.attr("SCHEMA") = kSchemaTag;

    m.def("version", &version);
    m.def("commands", &commands);
    m.def(
        "run_job",
        [](const std::string& command, const std::string& input, std::uint64_t seed, std::int64_t norm_search,
           std::uint64_t factor, bool quiver) {
            JobOptions options;
            options.seed = seed;
            options.bounds.norm_search = norm_search;
            options.bounds.factor = factor;
            options.quiver = quiver;
            JobResult result;
            {
                py::gil_scoped_release release;
                result = run_job(command, input, options);
            }
            return py::make_tuple(result.exit_code, result.output, result.diagnostics);
        },
        py::arg("command"), py::arg("input"), py::arg("seed") = 0, py::arg("norm_search") = kDefaultNormSearchBound,
        py::arg("factor") = kDefaultFactorBound, py::arg("quiver") = false,
        "Run one job; returns (exit_code, stdout_json, stderr_json).");

    m.def(
        "hilbert_symbol",
        [](const std::string& a, const std::string& b, const std::string& place) {
            return translate([&] { return hilbert_symbol(Rational::parse(a), Rational::parse(b), parse_place(place)); });
        },
        py::arg("a"), py::arg("b"), py::arg("place"));
    m.def(
        "is_split",
        [](const std::string& a, const std::string& b) {
            return translate([&] { return is_split(Rational::parse(a), Rational::parse(b)); });
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "ramified_places",
        [](const std::string& a, const std::string& b) {
            return translate([&] {
                std::vector<std::string> out;
                for (const auto& s : ramified_places(Rational::parse(a), Rational::parse(b)))
                    out.push_back(s.place.to_string());
                return out;
            });
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "reduced_norm",
        [](const std::string& a, const std::string& b, const std::array<std::string, 4>& x) {
            return translate([&] {
                const auto h = quaternion_algebra(Rational::parse(a), Rational::parse(b));
                Quaternion q;
                for (std::size_t t = 0; t < 4; ++t) q[t] = Rational::parse(x[t]);
                return reduced_norm(h, q).to_string();
            });
        },
        py::arg("a"), py::arg("b"), py::arg("x"));
    m.def(
        "quadratic_origin_demo",
        [](const std::string& lambda, const std::string& mode) {
            return translate([&] {
                if (mode != "real-sign" && mode != "rational-square")
                    fail("InvalidMode", "expected \"real-sign\" or \"rational-square\"");
                return quadratic_origin_demo(Rational::parse(lambda),
                                             mode == "real-sign" ? DemoMode::real_sign : DemoMode::rational_square);
            });
        },
        py::arg("lambda_"), py::arg("mode") = "real-sign");
}
