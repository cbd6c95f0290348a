#include "schurforge/ncpoly.hpp"

#include <algorithm>
#include <set>

namespace schurforge {

NcPoly::NcPoly(std::vector<Term> terms) {
    for (auto& term : terms) {
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.word == term.word; });
        if (it == terms_.end())
            terms_.push_back(std::move(term));
        else
            it->coeff += term.coeff;
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

std::size_t NcPoly::generator_bound() const {
    std::size_t bound = 0;
    for (const auto& term : terms_)
        for (auto g : term.word) bound = std::max(bound, g + 1);
    return bound;
}

NcPoly NcPoly::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return NcPoly(std::move(out));
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    std::vector<Term> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return NcPoly(std::move(out));
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    std::vector<Term> out;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            out.push_back({x.coeff * y.coeff, std::move(w)});
        }
    return NcPoly(std::move(out));
}

NcPoly operator*(const Rational& c, const NcPoly& p) {
    std::vector<Term> out = p.terms_;
    for (auto& t : out) t.coeff *= c;
    return NcPoly(std::move(out));
}

std::string NcPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::string word;
        for (std::size_t k = 0; k < t.word.size(); ++k) {
            if (k > 0) word += "*";
            word += t.word[k] < names.size() ? names[t.word[k]] : "g" + std::to_string(t.word[k]);
        }
        Rational c = t.coeff;
        if (i > 0) {
            out += c.sign() < 0 ? " - " : " + ";
            c = c.abs();
        } else if (c.sign() < 0 && !word.empty() && c == Rational(-1)) {
            out += "-";
            c = 1;
        }
        if (word.empty())
            out += c.to_string();
        else if (c == Rational(1))
            out += word;
        else
            out += c.to_string() + "*" + word;
    }
    return out;
}

FreePresentation::FreePresentation(std::vector<std::string> generators, std::vector<NcPoly> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty()) fail("InvalidGenerator", "generator names must be nonempty");
        if (!seen.insert(g).second) fail("DuplicateGenerator", "generator '" + g + "' declared twice");
    }
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].generator_bound() > generators_.size())
            fail("UnknownGenerator", "relation " + std::to_string(i) + " uses an undeclared generator");
}

std::optional<std::size_t> FreePresentation::generator_index(const std::string& name) const {
    const auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - generators_.begin());
}

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    if (vertex_count_ == 0) fail("EmptyQuiver", "a quiver needs at least one vertex");
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source >= vertex_count_ || arrows_[a].target >= vertex_count_)
            fail("InvalidQuiver", "arrow " + std::to_string(a) + " has an endpoint out of range");
}

FreePresentation path_algebra(const Quiver& quiver) {
    if (quiver.vertex_count() == 0) fail("EmptyQuiver", "a quiver needs at least one vertex");
    const std::size_t nv = quiver.vertex_count();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back("e" + std::to_string(i));
    for (std::size_t a = 0; a < quiver.arrows().size(); ++a) names.push_back("f" + std::to_string(a));

    auto e = [&](std::size_t i) { return NcPoly::generator(vertex_generator(quiver, i)); };
    auto f = [&](std::size_t a) { return NcPoly::generator(arrow_generator(quiver, a)); };

    std::vector<NcPoly> relations;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) relations.push_back(i == j ? e(i) * e(j) - e(i) : e(i) * e(j));
    for (std::size_t a = 0; a < quiver.arrows().size(); ++a)
        for (std::size_t i = 0; i < nv; ++i)
            relations.push_back(quiver.arrows()[a].source == i ? f(a) * e(i) - f(a) : f(a) * e(i));
    for (std::size_t a = 0; a < quiver.arrows().size(); ++a)
        for (std::size_t j = 0; j < nv; ++j)
            relations.push_back(quiver.arrows()[a].target == j ? e(j) * f(a) - f(a) : e(j) * f(a));
    NcPoly unit_sum;
    for (std::size_t i = 0; i < nv; ++i) unit_sum = unit_sum + e(i);
    relations.push_back(unit_sum - NcPoly::constant(1));
    return FreePresentation(std::move(names), std::move(relations));
}

}  // namespace schurforge
