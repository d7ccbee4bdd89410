#include "qmz/json.hpp"

#include "qmz/error.hpp"

namespace qmz {

json to_json(const CycloNum& c)
{
    json out = json::array();
    for (const auto& x : c.coords())
        out.push_back(to_string(x));
    return out;
}

CycloNum cyclo_from_json(const json& j, unsigned level)
{
    if (!j.is_array())
        throw DomainError("json: cyclotomic number must be an array");
    std::vector<Rational> coords;
    for (const auto& x : j) {
        if (x.is_string())
            coords.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            coords.emplace_back(x.get<long>());
        else
            throw DomainError("json: bad coordinate " + x.dump());
    }
    return CycloNum::from_coords(level, std::move(coords));
}

json to_json(const Word& w)
{
    json out = json::array();
    for (const auto& l : w)
        out.push_back({l.s, l.a});
    return out;
}

Word word_from_json(const json& j)
{
    Word w;
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2)
            throw DomainError("json: letter must be [s, alpha]");
        w.push_back({l[0].get<unsigned>(), l[1].get<unsigned>()});
    }
    return w;
}

json to_json(const MdfIndex& idx)
{
    return {{"level", idx.level}, {"s", idx.s}, {"alpha", idx.alpha}};
}

json to_json(const QSeries& f)
{
    json coeffs = json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(to_json(c));
    return {{"level", f.level()}, {"order", f.order()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j)
{
    unsigned N = j.at("level").get<unsigned>();
    unsigned M = j.at("order").get<unsigned>();
    const auto& c = j.at("coeffs");
    if (c.size() != M + 1)
        throw DomainError("json: series needs order + 1 coefficients");
    QSeries f(N, M);
    for (unsigned n = 0; n <= M; ++n)
        f.coeff(n) = cyclo_from_json(c[n], N);
    return f;
}

json to_json(const FormalSum& f)
{
    json terms = json::array();
    for (const auto& [w, c] : f.terms)
        terms.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
    return {{"level", f.level}, {"tpow", f.tpow}, {"Tpow", f.Tpow}, {"terms", terms}};
}

FormalSum formal_sum_from_json(const json& j)
{
    FormalSum f(j.at("level").get<unsigned>());
    f.tpow = j.value("tpow", 0u);
    f.Tpow = j.value("Tpow", 0u);
    for (const auto& t : j.at("terms"))
        f.add(word_from_json(t.at("word")), cyclo_from_json(t.at("coeff"), f.level));
    return f;
}

json to_json(const QmzPolynomial& p)
{
    json groups = json::array();
    for (const auto& [k, comb] : p.terms) {
        json terms = json::array();
        for (const auto& [g, c] : comb)
            terms.push_back({{"beta", g.beta}, {"word", to_json(g.word)}, {"coeff", to_json(c)}});
        groups.push_back({{"tpow", k}, {"terms", terms}});
    }
    return {{"level", p.level}, {"polynomial", groups}};
}

json to_json(const MzvSymbol& x)
{
    json out = {{"kind", x.kind == SymbolKind::zeta ? "zeta" : "gamma"}};
    if (x.kind == SymbolKind::gamma)
        out["beta"] = x.beta;
    out["s"] = x.s;
    out["alpha"] = x.alpha;
    return out;
}

json to_json(const TPolynomial& p)
{
    json coeffs = json::array();
    for (std::size_t r = 0; r < p.coeffs.size(); ++r) {
        json terms = json::array();
        for (const auto& [mono, c] : p.coeffs[r]) {
            json factors = json::array();
            for (const auto& x : mono)
                factors.push_back(to_json(x));
            terms.push_back({{"monomial", factors}, {"coeff", to_json(c)}});
        }
        coeffs.push_back({{"Tpow", r}, {"terms", terms}});
    }
    return {{"level", p.level}, {"coeffs", coeffs}};
}

json to_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(to_string(x));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const RegMatrix& m)
{
    return {{"level", m.level}, {"m", m.m}, {"entries", to_json(m.entries)}};
}

json to_json(const RelationRecord& r)
{
    json terms = json::array();
    for (const auto& [x, c] : r.terms) {
        json t = to_json(x);
        t["coeff"] = to_string(c);
        terms.push_back(t);
    }
    return {{"level", r.level},
            {"weight", r.weight},
            {"terms", terms},
            {"provenance", r.provenance},
            {"residual", static_cast<double>(r.residual)},
            {"bound", static_cast<double>(r.bound)},
            {"certified", r.certified}};
}

RelationRecord relation_from_json(const json& j)
{
    RelationRecord r;
    r.level = j.at("level").get<unsigned>();
    r.weight = j.at("weight").get<unsigned>();
    for (const auto& t : j.at("terms")) {
        MzvSymbol x;
        std::string kind = t.at("kind").get<std::string>();
        if (kind == "gamma") {
            x.kind = SymbolKind::gamma;
            x.beta = t.at("beta").get<unsigned>();
        } else if (kind != "zeta") {
            throw DomainError("json: unknown symbol kind " + kind);
        }
        x.s = t.at("s").get<std::vector<unsigned>>();
        x.alpha = t.at("alpha").get<std::vector<unsigned>>();
        x.level = r.level;
        r.terms[x] = parse_rational(t.at("coeff").get<std::string>());
    }
    r.provenance = j.value("provenance", "");
    r.residual = j.value("residual", 0.0);
    r.bound = j.value("bound", 0.0);
    r.certified = j.value("certified", false);
    return r;
}

} // namespace qmz
