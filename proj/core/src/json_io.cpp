#include "sylvester/json_io.hpp"

#include <json.hpp>

namespace sylvester {

namespace {

using Json = nlohmann::ordered_json;

Json gaussian_json(const GaussianRational& z) {
    return Json{{"re", z.real().str()}, {"im", z.imag().str()}};
}

Json poly_json(const MultiPoly& poly) {
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms()) {
        terms.push_back(Json{{"exp", e}, {"coeff", gaussian_json(c)}});
    }
    return Json{{"vars", poly.variable_count()}, {"terms", terms}};
}

}  // namespace

std::string to_json(const MultiPoly& poly) { return poly_json(poly).dump(); }

std::string to_json(const QuasiPoly1D& quasi) {
    Json terms = Json::array();
    for (const QuasiTerm1D& t : quasi.terms) {
        terms.push_back(Json{{"j", t.j}, {"shift", t.shift}, {"poly", poly_json(t.poly)}});
    }
    return Json{{"terms", terms}}.dump();
}

std::string to_json(const VectorWaveDecomposition& decomp) {
    Json matrix = Json::array();
    for (int r = 0; r < decomp.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < decomp.cols(); ++c) row.push_back(decomp.matrix_spec().matrix().at(r, c));
        matrix.push_back(std::move(row));
    }
    Json waves = Json::array();
    for (const PartialWave& w : decomp.waves()) {
        Json terms = Json::array();
        for (const VectorWaveTerm& t : w.terms) {
            terms.push_back(
                Json{{"shift", t.shift}, {"weight", t.weight.str()}, {"poly", poly_json(t.poly)}});
        }
        waves.push_back(Json{{"n", w.n}, {"j", w.j}, {"terms", terms}});
    }
    return Json{{"l", decomp.rows()}, {"m", decomp.cols()}, {"matrix", matrix}, {"waves", waves}}
        .dump();
}

std::string evaluation_report_json(std::span<const std::int64_t> s,
                                   std::span<const GaussianRational> alpha,
                                   const GaussianRational& value,
                                   std::optional<std::uint64_t> brute) {
    Json alpha_json = Json::array();
    for (const GaussianRational& a : alpha) alpha_json.push_back(gaussian_json(a));
    Json report{{"s", std::vector<std::int64_t>(s.begin(), s.end())},
                {"alpha", alpha_json},
                {"value", gaussian_json(value)}};
    report["brute"] = brute ? Json(*brute) : Json(nullptr);
    return report.dump();
}

}  // namespace sylvester
