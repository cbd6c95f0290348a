#include "json_io.hpp"

#include <limits>

namespace schurforge::json_io {

namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~')
            out += "~0";
        else if (ch == '/')
            out += "~1";
        else
            out += ch;
    }
    return out;
}

std::size_t parse_index(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

template <class Fn>
auto rethrow_with_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        if (e.name() == "InvalidScalar" || e.name() == "DivisionByZero") throw SchemaError(path, e.what());
        throw;
    }
}

}  // namespace

const json& require(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object()) throw SchemaError(path, "expected an object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(child(path, key), "missing required key '" + key + "'");
    return *it;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + escape_token(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

Rational parse_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rethrow_with_path(path, [&] { return Rational::parse(j.get<std::string>()); });
    throw SchemaError(path, "expected a rational as \"p/q\" or an integer");
}

json to_json(const Rational& x) { return x.to_string(); }
json to_json(const QuadElem& x) { return {{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"d", x.d()}}; }
json to_json(const PrimeFieldElem& x) { return x.value(); }

AnyField parse_field(const json& j, const std::string& path, std::uint64_t factor_bound) {
    if (j.is_string() && j.get<std::string>() == "Q") return RationalField{};
    if (j.is_object() && j.size() == 1) {
        if (j.contains("quadratic")) {
            const auto& d = j["quadratic"];
            if (!d.is_number_integer()) throw SchemaError(child(path, "quadratic"), "expected an integer");
            try {
                return QuadField(d.get<std::int64_t>(), factor_bound);
            } catch (const Error& e) {
                if (e.name() == "InvalidField") throw SchemaError(child(path, "quadratic"), e.what());
                throw;
            }
        }
        if (j.contains("prime")) {
            const auto& p = j["prime"];
            if (!p.is_number_unsigned() || p.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
                throw SchemaError(child(path, "prime"), "expected a prime below 2^31");
            try {
                return PrimeField(p.get<std::uint32_t>());
            } catch (const Error& e) {
                throw SchemaError(child(path, "prime"), e.what());
            }
        }
    }
    throw SchemaError(path, "expected \"Q\", {\"quadratic\": d} or {\"prime\": p}");
}

json field_to_json(const RationalField&) { return "Q"; }
json field_to_json(const QuadField& f) { return {{"quadratic", f.d()}}; }
json field_to_json(const PrimeField& f) { return {{"prime", f.p()}}; }

RationalField::value_type parse_scalar(const RationalField&, const json& j, const std::string& path) {
    return parse_rational(j, path);
}

QuadField::value_type parse_scalar(const QuadField& f, const json& j, const std::string& path) {
    if (j.is_object()) {
        if (j.contains("d")) {
            const auto& d = j["d"];
            if (!d.is_number_integer() || d.get<std::int64_t>() != f.d())
                throw SchemaError(child(path, "d"), "scalar belongs to a different quadratic field");
        }
        for (const auto& [key, value] : j.items())
            if (key != "a" && key != "b" && key != "d") throw SchemaError(child(path, key), "unexpected key");
        const Rational a = j.contains("a") ? parse_rational(j["a"], child(path, "a")) : Rational(0);
        const Rational b = j.contains("b") ? parse_rational(j["b"], child(path, "b")) : Rational(0);
        return f.element(a, b);
    }
    return f.from_rational(parse_rational(j, path));
}

PrimeField::value_type parse_scalar(const PrimeField& f, const json& j, const std::string& path) {
    const Rational q = parse_rational(j, path);
    try {
        return f.from_rational(q);
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

NcPoly parse_poly(const json& j, const std::string& path, std::size_t generator_count) {
    const auto terms_path = child(path, "terms");
    const auto& terms = require(j, "terms", path);
    if (!terms.is_array()) throw SchemaError(terms_path, "expected an array of terms");
    std::vector<Term> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto term_path = child(terms_path, t);
        const auto& term = terms[t];
        const Rational coeff = parse_rational(require(term, "coeff", term_path), child(term_path, "coeff"));
        const auto& word = require(term, "word", term_path);
        if (!word.is_array()) throw SchemaError(child(term_path, "word"), "expected an array of generator indices");
        Word w;
        for (std::size_t k = 0; k < word.size(); ++k) {
            const auto idx = parse_index(word[k], child(child(term_path, "word"), k));
            if (idx >= generator_count)
                throw SchemaError(child(child(term_path, "word"), k), "generator index out of range");
            w.push_back(idx);
        }
        out.push_back({coeff, std::move(w)});
    }
    return NcPoly(std::move(out));
}

json poly_to_json(const NcPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) terms.push_back({{"coeff", t.coeff.to_string()}, {"word", t.word}});
    return {{"terms", std::move(terms)}};
}

FreePresentation parse_presentation(const json& j, const std::string& path) {
    const auto& gens = require(j, "generators", path);
    if (!gens.is_array()) throw SchemaError(child(path, "generators"), "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (!gens[g].is_string()) throw SchemaError(child(child(path, "generators"), g), "expected a string");
        names.push_back(gens[g].get<std::string>());
    }
    std::vector<NcPoly> relations;
    if (j.contains("relations")) {
        const auto& rels = j["relations"];
        if (!rels.is_array()) throw SchemaError(child(path, "relations"), "expected an array");
        for (std::size_t r = 0; r < rels.size(); ++r)
            relations.push_back(parse_poly(rels[r], child(child(path, "relations"), r), names.size()));
    }
    try {
        return FreePresentation(std::move(names), std::move(relations));
    } catch (const Error& e) {
        throw SchemaError(child(path, "generators"), e.what());
    }
}

json presentation_to_json(const FreePresentation& p) {
    json rels = json::array();
    for (const auto& r : p.relations()) rels.push_back(poly_to_json(r));
    return {{"generators", p.generators()}, {"relations", std::move(rels)}};
}

Quiver parse_quiver(const json& j, const std::string& path) {
    const auto vertices = parse_index(require(j, "vertices", path), child(path, "vertices"));
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        const auto& arr = j["arrows"];
        const auto arr_path = child(path, "arrows");
        if (!arr.is_array()) throw SchemaError(arr_path, "expected an array");
        for (std::size_t a = 0; a < arr.size(); ++a) {
            const auto ap = child(arr_path, a);
            const auto src = parse_index(require(arr[a], "src", ap), child(ap, "src"));
            const auto dst = parse_index(require(arr[a], "dst", ap), child(ap, "dst"));
            if (vertices > 0 && src >= vertices) throw SchemaError(child(ap, "src"), "vertex index out of range");
            if (vertices > 0 && dst >= vertices) throw SchemaError(child(ap, "dst"), "vertex index out of range");
            arrows.push_back({src, dst});
        }
    }
    try {
        return Quiver(vertices, std::move(arrows));
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"src", a.source}, {"dst", a.target}});
    return {{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

AnyRep parse_rep(const json& j, const std::string& path, std::uint64_t factor_bound) {
    if (!j.is_object()) throw SchemaError(path, "expected a representation object");
    FreePresentation pres;
    if (j.contains("presentation"))
        pres = parse_presentation(j["presentation"], child(path, "presentation"));
    else if (j.contains("quiver"))
        pres = path_algebra(parse_quiver(j["quiver"], child(path, "quiver")));
    else
        throw SchemaError(child(path, "presentation"), "missing required key 'presentation'");
    const auto field = parse_field(require(j, "field", path), child(path, "field"), factor_bound);
    const auto n = parse_index(require(j, "n", path), child(path, "n"));
    if (n == 0) throw SchemaError(child(path, "n"), "degree must be positive");
    const auto& images = require(j, "images", path);
    const auto images_path = child(path, "images");
    if (!images.is_object()) throw SchemaError(images_path, "expected an object keyed by generator name");
    for (const auto& [key, value] : images.items())
        if (!pres.generator_index(key)) throw SchemaError(child(images_path, key), "unknown generator");

    return std::visit(
        [&](const auto& f) -> AnyRep {
            using F = std::decay_t<decltype(f)>;
            std::vector<MatrixOver<F>> mats;
            for (const auto& g : pres.generators())
                mats.push_back(parse_matrix(f, require(images, g, images_path), child(images_path, g), n, n));
            try {
                return MatrixRep<F>(pres, f, n, std::move(mats));
            } catch (const Error& e) {
                if (e.name() == "DimensionMismatch") throw SchemaError(images_path, e.what());
                throw;
            }
        },
        field);
}

AnyQuiverRep parse_quiver_rep(const json& j, const std::string& path, std::uint64_t factor_bound) {
    const auto quiver = parse_quiver(require(j, "quiver", path), child(path, "quiver"));
    const auto field = parse_field(require(j, "field", path), child(path, "field"), factor_bound);
    const auto& dims_json = require(j, "dims", path);
    const auto dims_path = child(path, "dims");
    if (!dims_json.is_array() || dims_json.size() != quiver.vertex_count())
        throw SchemaError(dims_path, "expected one dimension per vertex");
    DimVector dims;
    for (std::size_t i = 0; i < dims_json.size(); ++i) dims.push_back(parse_index(dims_json[i], child(dims_path, i)));
    const json empty = json::array();
    const auto& maps_json = j.contains("maps") ? j["maps"] : empty;
    const auto maps_path = child(path, "maps");
    if (!maps_json.is_array() || maps_json.size() != quiver.arrows().size())
        throw SchemaError(maps_path, "expected one matrix per arrow");
    return std::visit(
        [&](const auto& f) -> AnyQuiverRep {
            using F = std::decay_t<decltype(f)>;
            std::vector<MatrixOver<F>> maps;
            for (std::size_t a = 0; a < quiver.arrows().size(); ++a) {
                const auto& arrow = quiver.arrows()[a];
                const auto& m = maps_json[a];
                const auto mp = child(maps_path, a);
                // Empty blocks may be written as [] regardless of the other side.
                if (dims[arrow.target] == 0 || dims[arrow.source] == 0) {
                    maps.push_back(zero_matrix(f, dims[arrow.target], dims[arrow.source]));
                    continue;
                }
                maps.push_back(parse_matrix(f, m, mp, dims[arrow.target], dims[arrow.source]));
            }
            return QuiverRep<F>(quiver, f, dims, std::move(maps));
        },
        field);
}

RationalAlgebra parse_rational_algebra(const json& j, const std::string& path) {
    if (j.is_object() && j.contains("quaternion")) {
        const auto qp = child(path, "quaternion");
        const auto& q = j["quaternion"];
        const auto a = parse_rational(require(q, "a", qp), child(qp, "a"));
        const auto b = parse_rational(require(q, "b", qp), child(qp, "b"));
        try {
            return quaternion_algebra(a, b).algebra();
        } catch (const Error& e) {
            throw SchemaError(qp, e.what());
        }
    }
    const auto m = parse_index(require(j, "dim", path), child(path, "dim"));
    if (m == 0) throw SchemaError(child(path, "dim"), "dimension must be positive");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        const auto& b = j["basis"];
        if (!b.is_array() || b.size() != m) throw SchemaError(child(path, "basis"), "expected dim names");
        for (std::size_t i = 0; i < m; ++i) {
            if (!b[i].is_string()) throw SchemaError(child(child(path, "basis"), i), "expected a string");
            names.push_back(b[i].get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) names.push_back("b" + std::to_string(i));
    }
    const auto& c = require(j, "constants", path);
    const auto cp = child(path, "constants");
    std::vector<Rational> constants;
    if (!c.is_array() || c.size() != m) throw SchemaError(cp, "expected a dim x dim x dim array");
    for (std::size_t i = 0; i < m; ++i) {
        if (!c[i].is_array() || c[i].size() != m) throw SchemaError(child(cp, i), "expected dim entries");
        for (std::size_t k = 0; k < m; ++k) {
            const auto& cell = c[i][k];
            const auto cellp = child(child(cp, i), k);
            if (!cell.is_array() || cell.size() != m) throw SchemaError(cellp, "expected dim coordinates");
            for (std::size_t l = 0; l < m; ++l) constants.push_back(parse_rational(cell[l], child(cellp, l)));
        }
    }
    const auto& u = require(j, "unit", path);
    if (!u.is_array() || u.size() != m) throw SchemaError(child(path, "unit"), "expected dim coordinates");
    std::vector<Rational> unit;
    for (std::size_t i = 0; i < m; ++i) unit.push_back(parse_rational(u[i], child(child(path, "unit"), i)));
    try {
        return RationalAlgebra(RationalField{}, std::move(names), std::move(constants), std::move(unit));
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

json cocycle_to_json(const Cocycle& c) {
    return {{"S", matrix_to_json(c.S)}, {"d", c.field.d()}, {"lambda", c.lambda.to_string()}};
}

Cocycle parse_cocycle(const json& j, const std::string& path, std::uint64_t factor_bound) {
    const auto& d = require(j, "d", path);
    if (!d.is_number_integer()) throw SchemaError(child(path, "d"), "expected an integer");
    std::optional<QuadField> field;
    try {
        field.emplace(d.get<std::int64_t>(), factor_bound);
    } catch (const Error& e) {
        throw SchemaError(child(path, "d"), e.what());
    }
    const auto& s = require(j, "S", path);
    if (!s.is_array() || s.empty()) throw SchemaError(child(path, "S"), "expected a square matrix");
    const auto n = s.size();
    auto matrix = parse_matrix(*field, s, child(path, "S"), n, n);
    return make_cocycle(*field, std::move(matrix));
}

json quaternion_class_to_json(const QuaternionClass& c) { return {{"a", c.a.get_str()}, {"b", c.b.get_str()}}; }

json twisted_to_json(const TwistedRep& t) {
    json embedding = json::array();
    for (const auto& b : t.twisted.basis) embedding.push_back(matrix_to_json(b));
    json images = json::object();
    for (std::size_t g = 0; g < t.rep.images().size(); ++g)
        images[t.rep.presentation().generators()[g]] = vector_to_json(t.rep.images()[g]);
    json out = {{"twisted_algebra", algebra_to_json(t.twisted.algebra)},
                {"embedding", std::move(embedding)},
                {"twisted_rep", {{"presentation", presentation_to_json(t.rep.presentation())}, {"images", std::move(images)}}},
                {"twisted_schur", is_schur_azu(t.rep)}};
    if (t.quaternion) {
        json basis = json::array();
        for (const auto& b : t.quaternion->basis) basis.push_back(vector_to_json(b));
        const CoordinateSolver<RationalField> solver(
            RationalField{}, t.twisted.algebra.dim(),
            std::vector<VectorOver<RationalField>>(t.quaternion->basis.begin(), t.quaternion->basis.end()));
        json in_quaternion = json::object();
        for (std::size_t g = 0; g < t.rep.images().size(); ++g)
            in_quaternion[t.rep.presentation().generators()[g]] = vector_to_json(solver.solve(t.rep.images()[g]));
        out["quaternion"] = {{"a", t.quaternion->a.to_string()},
                             {"b", t.quaternion->b.to_string()},
                             {"basis", std::move(basis)},
                             {"images", std::move(in_quaternion)}};
    } else {
        out["quaternion"] = nullptr;
    }
    return out;
}

}  // namespace schurforge::json_io
