#include "schurforge/cli.hpp"

#include <functional>
#include <map>

#include "json_io.hpp"

namespace schurforge {

using namespace json_io;

namespace {

struct Context {
    const json& doc;
    const JobOptions& options;
    std::uint64_t factor() const { return options.bounds.factor; }
};

using Handler = std::function<json(const Context&)>;

QuadRep require_quadratic(const AnyRep& rep, const std::string& path) {
    if (const auto* q = std::get_if<QuadRep>(&rep)) return *q;
    throw SchemaError(child(path, "field"), "expected a quadratic field {\"quadratic\": d}");
}

template <class Fn>
auto visit_rep(const AnyRep& rep, Fn&& fn) {
    return std::visit(std::forward<Fn>(fn), rep);
}

// ---------------------------------------------------------------------------

json schur_of_matrep(const AnyRep& rep) {
    return visit_rep(rep, [](const auto& r) -> json {
        const auto comm = commutant_basis(r);
        return {{"schur", comm.dim() == 1}, {"commutant_dim", comm.dim()}, {"psi_rank", comm.psi_rank},
                {"n", r.degree()}, {"field", field_to_json(r.field())}};
    });
}

json cmd_schur(const Context& ctx) {
    if (!ctx.options.quiver) return schur_of_matrep(parse_rep(ctx.doc, "", ctx.factor()));
    const auto qr = parse_quiver_rep(ctx.doc, "", ctx.factor());
    return std::visit(
        [](const auto& q) -> json {
            const auto rep = quiver_to_matrep(q);
            const auto comm = commutant_basis(rep);
            return {{"schur", comm.dim() == 1}, {"commutant_dim", comm.dim()}, {"psi_rank", comm.psi_rank},
                    {"n", rep.degree()}, {"dims", q.dims()}, {"field", field_to_json(q.field())}};
        },
        qr);
}

json cmd_endo(const Context& ctx) {
    return visit_rep(parse_rep(ctx.doc, "", ctx.factor()), [](const auto& r) -> json {
        const auto end = endomorphism_structure_constants(r);
        json basis = json::array();
        for (const auto& m : end.basis) basis.push_back(matrix_to_json(m));
        return {{"dim", end.algebra.dim()}, {"algebra", algebra_to_json(end.algebra)}, {"basis", std::move(basis)}};
    });
}

json cmd_simple(const Context& ctx) {
    return visit_rep(parse_rep(ctx.doc, "", ctx.factor()), [](const auto& r) -> json {
        const auto span = image_span_dim(r);
        return {{"absolutely_simple", span == r.degree() * r.degree()}, {"span_dim", span}, {"n", r.degree()}};
    });
}

json cmd_intertwine(const Context& ctx) {
    const auto source = parse_rep(require(ctx.doc, "source", ""), "/source", ctx.factor());
    const auto target = parse_rep(require(ctx.doc, "target", ""), "/target", ctx.factor());
    if (source.index() != target.index()) throw SchemaError("/target/field", "source and target use different fields");
    return std::visit(
        [&](const auto& s) -> json {
            using Rep = std::decay_t<decltype(s)>;
            const auto& t = std::get<Rep>(target);
            if (!(s.field() == t.field())) throw SchemaError("/target/field", "source and target use different fields");
            if (s.degree() != t.degree()) throw SchemaError("/target/n", "source and target differ in degree");
            if (!(s.presentation() == t.presentation()))
                throw SchemaError("/target/presentation", "source and target use different presentations");
            const auto res = find_intertwiner(s, t, ctx.options.seed);
            if (res.status == IntertwinerStatus::budget_exhausted)
                throw BudgetExhausted("intertwiner space has dimension " + std::to_string(res.solution_dim) +
                                      " but no invertible element was sampled in " +
                                      std::to_string(kIntertwinerRandomBudget) + " attempts");
            json out = {{"status", to_string(res.status)},
                        {"isomorphic", res.status == IntertwinerStatus::found},
                        {"solution_dim", res.solution_dim}};
            out["intertwiner"] = res.intertwiner ? matrix_to_json(*res.intertwiner) : json(nullptr);
            return out;
        },
        source);
}

Quaternion parse_quaternion(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) throw SchemaError(path, "expected four coordinates x0 + x1 i + x2 j + x3 k");
    Quaternion q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = parse_rational(j[i], child(path, i));
    return q;
}

json cmd_quaternion(const Context& ctx) {
    const auto a = parse_rational(require(ctx.doc, "a", ""), "/a");
    const auto b = parse_rational(require(ctx.doc, "b", ""), "/b");
    if (a.is_zero()) throw SchemaError("/a", "quaternion parameters must be nonzero");
    if (b.is_zero()) throw SchemaError("/b", "quaternion parameters must be nonzero");
    const auto h = quaternion_algebra(a, b);

    json norms = json::array();
    const std::array<const char*, 4> names{"1", "i", "j", "k"};
    for (std::size_t k = 0; k < 4; ++k) {
        Quaternion e{0, 0, 0, 0};
        e[k] = 1;
        norms.push_back({{"element", names[k]}, {"norm", reduced_norm(h, e).to_string()}});
    }
    json elements = json::array();
    if (ctx.doc.contains("elements")) {
        const auto& el = ctx.doc["elements"];
        if (!el.is_array()) throw SchemaError("/elements", "expected an array of quaternions");
        for (std::size_t i = 0; i < el.size(); ++i) {
            const auto q = parse_quaternion(el[i], child("/elements", i));
            json entry = {{"element", vector_to_json(std::vector<Rational>(q.begin(), q.end()))},
                          {"norm", reduced_norm(h, q).to_string()}};
            if (reduced_norm(h, q).is_zero()) {
                entry["inverse"] = nullptr;
            } else {
                const auto inv = quaternion_inverse(h, q);
                entry["inverse"] = vector_to_json(std::vector<Rational>(inv.begin(), inv.end()));
            }
            elements.push_back(std::move(entry));
        }
    }

    json splitting;
    if (is_square_rational(a, ctx.factor())) {
        const auto emb = rational_split_embedding(h, ctx.factor());
        json images = json::array();
        for (const auto& m : emb.images) images.push_back(matrix_to_json(m));
        splitting = {{"field", "Q"}, {"sqrt_a", emb.sqrt_a.to_string()}, {"images", std::move(images)}};
    } else {
        const auto emb = split_embedding(h, ctx.factor());
        json images = json::array();
        for (const auto& m : emb.images) images.push_back(matrix_to_json(m));
        splitting = {{"field", field_to_json(emb.field)}, {"sqrt_a", to_json(emb.sqrt_a)}, {"images", std::move(images)}};
    }

    return {{"algebra", algebra_to_json(h.algebra())},
            {"norm_form", {"1", (-a).to_string(), (-b).to_string(), (a * b).to_string()}},
            {"norm_table", std::move(norms)},
            {"elements", std::move(elements)},
            {"central_simple", is_central_simple(h.algebra())},
            {"split", is_split(a, b, ctx.factor())},
            {"splitting", std::move(splitting)}};
}

std::pair<Rational, Rational> parse_pair(const Context& ctx) {
    const auto a = parse_rational(require(ctx.doc, "a", ""), "/a");
    const auto b = parse_rational(require(ctx.doc, "b", ""), "/b");
    if (a.is_zero()) throw SchemaError("/a", "Hilbert symbol arguments must be nonzero");
    if (b.is_zero()) throw SchemaError("/b", "Hilbert symbol arguments must be nonzero");
    return {a, b};
}

json symbols_to_json(const PlaceSymbols& symbols) {
    json out = json::array();
    for (const auto& s : symbols) out.push_back({{"place", s.place.to_string()}, {"symbol", s.symbol}});
    return out;
}

Place parse_place(const json& j) {
    std::string text;
    if (j.is_number_unsigned())
        text = std::to_string(j.get<std::uint64_t>());
    else if (j.is_string())
        text = j.get<std::string>();
    else
        throw SchemaError("/place", "expected \"inf\" or a prime");
    if (text == "inf") return Place::infinity();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw SchemaError("/place", "expected \"inf\" or a prime");
    try {
        return Place::prime(mpz_class(text));
    } catch (const Error& e) {
        throw SchemaError("/place", e.what());
    }
}

json cmd_hilbert(const Context& ctx) {
    const auto [a, b] = parse_pair(ctx);
    const auto cls = quaternion_class(a, b, ctx.factor());
    if (ctx.doc.contains("place")) {
        const auto place = parse_place(ctx.doc["place"]);
        return {{"place", place.to_string()}, {"symbol", hilbert_symbol(a, b, place, ctx.factor())},
                {"class", quaternion_class_to_json(cls)}};
    }
    return {{"symbols", symbols_to_json(all_symbols(a, b, ctx.factor()))}, {"class", quaternion_class_to_json(cls)}};
}

json cmd_split(const Context& ctx) {
    const auto [a, b] = parse_pair(ctx);
    const auto ramified = ramified_places(a, b, ctx.factor());
    json places = json::array();
    for (const auto& s : ramified) places.push_back(s.place.to_string());
    return {{"split", ramified.empty()},
            {"ramified", std::move(places)},
            {"class", quaternion_class_to_json(quaternion_class(a, b, ctx.factor()))}};
}

json descent_to_json(const DescentResult& d) {
    return {{"kind", "descent"}, {"rep", rep_to_json(d.rep)}, {"P", matrix_to_json(d.P)}};
}

json cmd_origin(const Context& ctx) {
    const auto rep = require_quadratic(parse_rep(ctx.doc, "", ctx.factor()), "");
    const auto report = geometric_origin_report(rep, ctx.options.seed, ctx.options.bounds);
    json witness;
    if (const auto* d = std::get_if<DescentResult>(&report.witness)) {
        witness = descent_to_json(*d);
    } else {
        witness = twisted_to_json(std::get<TwistedRep>(report.witness));
        witness["kind"] = "twist";
    }
    return {{"origin", report.origin},
            {"lambda", report.lambda.to_string()},
            {"class", quaternion_class_to_json(report.quaternion_class)},
            {"cocycle", cocycle_to_json(report.cocycle)},
            {"schur", report.schur},
            {"witness", std::move(witness)}};
}

Cocycle cocycle_for(const Context& ctx, const QuadRep& rep) {
    if (ctx.doc.contains("cocycle")) {
        auto c = parse_cocycle(ctx.doc["cocycle"], "/cocycle", ctx.factor());
        if (!(c.field == rep.field())) throw SchemaError("/cocycle/d", "cocycle and representation use different fields");
        if (c.S.rows() != rep.degree()) throw SchemaError("/cocycle/S", "cocycle size differs from the degree");
        return c;
    }
    return prepare_twist(rep, ctx.options.seed).cocycle;
}

json cmd_twist(const Context& ctx) {
    const auto rep = require_quadratic(parse_rep(require(ctx.doc, "rep", ""), "/rep", ctx.factor()), "/rep");
    const auto cocycle = cocycle_for(ctx, rep);
    const auto twisted = twist_representation(rep, cocycle);
    bool recovers = true;
    for (std::size_t g = 0; g < rep.images().size(); ++g)
        recovers = recovers && twisted.twisted.embed(twisted.rep.images()[g]) == rep.image(g);
    auto out = twisted_to_json(twisted);
    out["cocycle"] = cocycle_to_json(cocycle);
    out["dim"] = twisted.twisted.algebra.dim();
    out["reembedding_matches"] = recovers;
    return out;
}

json cmd_descend(const Context& ctx) {
    const auto rep = require_quadratic(parse_rep(require(ctx.doc, "rep", ""), "/rep", ctx.factor()), "/rep");
    const auto cocycle = cocycle_for(ctx, rep);
    QuadElem c = rep.field().zero();
    if (ctx.doc.contains("c")) {
        c = parse_scalar(rep.field(), ctx.doc["c"], "/c");
    } else {
        if (!is_split(Rational(rep.field().d()), cocycle.lambda, ctx.factor()))
            fail("NotSplit", "lambda = " + cocycle.lambda.to_string() + " is not a norm from " + rep.field().name());
        const auto found = norm_solve(rep.field(), cocycle.lambda, ctx.options.bounds.norm_search, ctx.factor());
        if (!found)
            throw BudgetExhausted("no norm solution for lambda = " + cocycle.lambda.to_string() + " with height <= " +
                                  std::to_string(ctx.options.bounds.norm_search));
        c = *found;
    }
    const auto result = descend_representation(rep, cocycle, c, ctx.options.seed);
    auto out = descent_to_json(result);
    out["c"] = to_json(c);
    out["cocycle"] = cocycle_to_json(cocycle);
    return out;
}

json cmd_quiver2rep(const Context& ctx) {
    if (ctx.doc.is_object() && ctx.doc.contains("images")) {
        // Reverse direction: a path-algebra representation back to quiver data.
        const auto quiver = parse_quiver(require(ctx.doc, "quiver", ""), "/quiver");
        return visit_rep(parse_rep(ctx.doc, "", ctx.factor()), [&](const auto& r) -> json {
            const auto dec = matrep_to_quiver(quiver, r);
            return {{"quiver_rep", quiver_rep_to_json(dec.rep)},
                    {"change_of_basis", matrix_to_json(dec.change_of_basis)},
                    {"right_ideal_dims", right_ideal_dims(quiver, r)},
                    {"schur", is_schur(r)}};
        });
    }
    return std::visit(
        [](const auto& q) -> json {
            const auto rep = quiver_to_matrep(q);
            return {{"rep", rep_to_json(rep)},
                    {"right_ideal_dims", right_ideal_dims(q.quiver(), rep)},
                    {"schur", is_schur(rep)}};
        },
        parse_quiver_rep(ctx.doc, "", ctx.factor()));
}

json cmd_demo_quadratic(const Context& ctx) {
    const auto lambda = parse_rational(require(ctx.doc, "lambda", ""), "/lambda");
    DemoMode mode = DemoMode::real_sign;
    if (ctx.doc.contains("mode")) {
        const auto& m = ctx.doc["mode"];
        if (m == "real-sign")
            mode = DemoMode::real_sign;
        else if (m == "rational-square")
            mode = DemoMode::rational_square;
        else
            throw SchemaError("/mode", "expected \"real-sign\" or \"rational-square\"");
    }
    const bool origin = quadratic_origin_demo(lambda, mode, ctx.factor());
    return {{"origin", origin},
            {"lambda", lambda.to_string()},
            {"discriminant", (lambda * lambda - Rational(4)).to_string()},
            {"mode", mode == DemoMode::real_sign ? "real-sign" : "rational-square"}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"schur", cmd_schur},         {"endo", cmd_endo},           {"simple", cmd_simple},
        {"intertwine", cmd_intertwine}, {"quaternion", cmd_quaternion}, {"hilbert", cmd_hilbert},
        {"split", cmd_split},         {"origin", cmd_origin},       {"twist", cmd_twist},
        {"descend", cmd_descend},     {"quiver2rep", cmd_quiver2rep}, {"demo-quadratic", cmd_demo_quadratic},
    };
    return table;
}

JobResult failure(int code, const std::string& name, const std::string& message, const std::string& pointer = "") {
    return {code, "", error_document(name, message, pointer)};
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"schur",  "endo",  "simple",  "intertwine", "quaternion", "hilbert",
                                                "split",  "origin", "twist",  "descend",    "quiver2rep", "demo-quadratic"};
    return names;
}

std::string version() { return SCHURFORGE_VERSION; }

std::string error_document(const std::string& name, const std::string& message, const std::string& pointer) {
    json doc = {{"schema", kSchemaTag}, {"error", name}, {"message", message}};
    if (!pointer.empty() || name == "SchemaError" || name == "ParseError") doc["pointer"] = pointer;
    return doc.dump(-1, ' ', false, json::error_handler_t::replace) + "\n";
}

JobResult run_job(const std::string& command, const std::string& input, const JobOptions& options) {
    const auto it = handlers().find(command);
    if (it == handlers().end()) return failure(kExitInvalidInput, "UnknownCommand", "unknown command '" + command + "'");
    try {
        json doc;
        try {
            doc = json::parse(input);
        } catch (const json::parse_error& e) {
            return failure(kExitInvalidInput, "ParseError", e.what(), "");
        }
        if (!doc.is_object()) throw SchemaError("", "input must be a JSON object");
        if (doc.contains("schema") && doc["schema"] != kSchemaTag)
            throw SchemaError("/schema", std::string("unsupported schema, expected \"") + kSchemaTag + "\"");

        json result = it->second(Context{doc, options});
        json report = {{"schema", kSchemaTag},
                       {"version", version()},
                       {"command", command},
                       {"seed", options.seed},
                       {"bounds", {{"norm_search", options.bounds.norm_search}, {"factor", options.bounds.factor}}}};
        for (auto& [key, value] : result.items()) report[key] = std::move(value);
        return {kExitComputed, report.dump(2, ' ', false, json::error_handler_t::replace) + "\n", ""};
    } catch (const SchemaError& e) {
        return failure(kExitInvalidInput, e.name(), e.what(), e.pointer());
    } catch (const BudgetExhausted& e) {
        return failure(kExitBudgetExhausted, e.name(), e.what());
    } catch (const Error& e) {
        if (e.name() == "FactorizationTooLarge") return failure(kExitBudgetExhausted, e.name(), e.what());
        if (e.name() == "InternalError") return failure(kExitInternal, e.name(), e.what());
        return failure(kExitInvalidInput, e.name(), e.what());
    } catch (const json::exception& e) {
        return failure(kExitInvalidInput, "SchemaError", e.what(), "");
    } catch (const std::exception& e) {
        return failure(kExitInternal, "InternalError", e.what());
    }
}

}  // namespace schurforge
