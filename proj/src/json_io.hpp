#pragma once

// JSON encodings of scalars, matrices, presentations and representations.
// Internal to the library: the public surface is run_job in cli.hpp.

#include <json.hpp>

#include <string>
#include <variant>

#include "schurforge/azumaya.hpp"
#include "schurforge/brauer.hpp"
#include "schurforge/descent.hpp"
#include "schurforge/matrep.hpp"
#include "schurforge/quiverkit.hpp"

namespace schurforge::json_io {

using nlohmann::json;

/// Malformed input; `pointer` is a JSON pointer into the document.
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& message)
        : Error("SchemaError", message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

using AnyField = std::variant<RationalField, QuadField, PrimeField>;
using AnyRep = std::variant<MatrixRep<RationalField>, MatrixRep<QuadField>, MatrixRep<PrimeField>>;
using AnyQuiverRep = std::variant<QuiverRep<RationalField>, QuiverRep<QuadField>, QuiverRep<PrimeField>>;

/// Access helpers that report the failing path.
const json& require(const json& doc, const std::string& key, const std::string& path);
std::string child(const std::string& path, const std::string& key);
std::string child(const std::string& path, std::size_t index);

Rational parse_rational(const json& j, const std::string& path);
json to_json(const Rational& x);
json to_json(const QuadElem& x);
json to_json(const PrimeFieldElem& x);

AnyField parse_field(const json& j, const std::string& path, std::uint64_t factor_bound);
json field_to_json(const RationalField&);
json field_to_json(const QuadField& f);
json field_to_json(const PrimeField& f);

RationalField::value_type parse_scalar(const RationalField& f, const json& j, const std::string& path);
QuadField::value_type parse_scalar(const QuadField& f, const json& j, const std::string& path);
PrimeField::value_type parse_scalar(const PrimeField& f, const json& j, const std::string& path);

template <ExactField F>
MatrixOver<F> parse_matrix(const F& field, const json& j, const std::string& path, std::size_t rows,
                           std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
    auto m = zero_matrix(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        const auto row_path = child(path, r);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(row_path, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(field, row[c], child(row_path, c));
    }
    return m;
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json vector_to_json(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

NcPoly parse_poly(const json& j, const std::string& path, std::size_t generator_count);
json poly_to_json(const NcPoly& p);
FreePresentation parse_presentation(const json& j, const std::string& path);
json presentation_to_json(const FreePresentation& p);
Quiver parse_quiver(const json& j, const std::string& path);
json quiver_to_json(const Quiver& q);

/// {"presentation" | "quiver", "field", "n", "images": {name: matrix}}.
AnyRep parse_rep(const json& j, const std::string& path, std::uint64_t factor_bound);

template <ExactField F>
json rep_to_json(const MatrixRep<F>& rep) {
    json images = json::object();
    for (std::size_t g = 0; g < rep.images().size(); ++g)
        images[rep.presentation().generators()[g]] = matrix_to_json(rep.image(g));
    return {{"presentation", presentation_to_json(rep.presentation())},
            {"field", field_to_json(rep.field())},
            {"n", rep.degree()},
            {"images", std::move(images)}};
}

/// {"quiver", "field", "dims", "maps": [matrix per arrow]}.
AnyQuiverRep parse_quiver_rep(const json& j, const std::string& path, std::uint64_t factor_bound);

template <ExactField F>
json quiver_rep_to_json(const QuiverRep<F>& qr) {
    json maps = json::array();
    for (const auto& m : qr.maps()) maps.push_back(matrix_to_json(m));
    return {{"quiver", quiver_to_json(qr.quiver())},
            {"field", field_to_json(qr.field())},
            {"dims", qr.dims()},
            {"maps", std::move(maps)}};
}

template <ExactField F>
json algebra_to_json(const StructureConstantAlgebra<F>& a) {
    const std::size_t m = a.dim();
    json constants = json::array();
    for (std::size_t i = 0; i < m; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < m; ++k) cell.push_back(to_json(a.constant(i, j, k)));
            row.push_back(std::move(cell));
        }
        constants.push_back(std::move(row));
    }
    return {{"dim", m}, {"basis", a.basis_names()}, {"constants", std::move(constants)}, {"unit", vector_to_json(a.unit())}};
}

/// {"dim", "basis", "constants", "unit"} or {"quaternion": {"a", "b"}}.
RationalAlgebra parse_rational_algebra(const json& j, const std::string& path);

json cocycle_to_json(const Cocycle& c);
Cocycle parse_cocycle(const json& j, const std::string& path, std::uint64_t factor_bound);

json quaternion_class_to_json(const QuaternionClass& c);
json twisted_to_json(const TwistedRep& t);

}  // namespace schurforge::json_io
