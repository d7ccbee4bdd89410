#include "qmz/relations.hpp"

#include "qmz/error.hpp"
#include "qmz/stuffle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qmz {

std::string RelationRecord::to_string(bool bars) const
{
    std::string out;
    for (const auto& [x, c] : terms) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (a != 1 || x.is_one())
            out += qmz::to_string(a) + (x.is_one() ? "" : "*");
        if (!x.is_one())
            out += x.to_string(bars);
    }
    return (out.empty() ? "0" : out) + " = 0";
}

Verification verify_relation(const RelationRecord& r, long double tol, unsigned long cutoff)
{
    if (r.terms.empty())
        throw DomainError("verify_relation: empty relation");
    long double sum = 0, bound = 0;
    for (const auto& [x, c] : r.terms) {
        if (x.kind == SymbolKind::zeta && !x.s.empty() && x.s[0] < 2)
            throw DomainError("verify_relation: symbol " + x.to_string() + " is not evaluable");
        NumericValue v = symbol_numeric(x, cutoff);
        long double cd = c.get_d();
        sum += cd * v.value;
        bound += std::fabs(cd) * v.error;
    }
    Verification out;
    out.residual = std::fabs(sum);
    out.bound = bound;
    out.pass = out.residual < tol;
    return out;
}

namespace {

using Row = std::map<MzvSymbol, Rational>;

// Incremental row echelon basis keyed by pivot symbol.
struct Echelon {
    std::map<MzvSymbol, Row> pivots;

    Row reduce(Row r) const
    {
        for (const auto& [p, row] : pivots) {
            auto it = r.find(p);
            if (it == r.end())
                continue;
            Rational f = it->second;
            for (const auto& [x, c] : row) {
                Rational& y = r[x];
                y -= f * c;
            }
            for (auto jt = r.begin(); jt != r.end();)
                jt = jt->second == 0 ? r.erase(jt) : std::next(jt);
        }
        return r;
    }

    bool insert(const Row& r0)
    {
        Row r = reduce(r0);
        if (r.empty())
            return false;
        MzvSymbol p = r.begin()->first;
        Rational lead = r.begin()->second;
        for (auto& [x, c] : r)
            c /= lead;
        // keep other rows reduced against the new pivot
        for (auto& [q, row] : pivots) {
            auto it = row.find(p);
            if (it == row.end())
                continue;
            Rational f = it->second;
            for (const auto& [x, c] : r)
                row[x] -= f * c;
            for (auto jt = row.begin(); jt != row.end();)
                jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
        }
        pivots.emplace(p, std::move(r));
        return true;
    }
};

// Integer coefficients with gcd 1 and positive leading coefficient.
Row normalize(Row r)
{
    Integer l = 1, g = 0;
    for (const auto& [x, c] : r)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (auto& [x, c] : r) {
        c *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (r.empty() || g == 0)
        return r;
    bool flip = r.begin()->second < 0;
    for (auto& [x, c] : r) {
        c /= g;
        if (flip)
            c = -c;
    }
    return r;
}

void all_words(unsigned N, unsigned weight, unsigned depth_max, std::vector<Word>& out)
{
    std::function<void(Word&, unsigned)> rec = [&](Word& w, unsigned left) {
        if (left == 0) {
            out.push_back(w);
            return;
        }
        if (w.size() == depth_max)
            return;
        for (unsigned s = 1; s <= left; ++s)
            for (unsigned a = 0; a < N; ++a) {
                w.push_back({s, a});
                rec(w, left - s);
                w.pop_back();
            }
    };
    Word w;
    rec(w, weight);
}

} // namespace

std::vector<RelationRecord> emit_relations(unsigned level, unsigned w, unsigned depth_max, unsigned long cutoff,
                                           long double tol)
{
    const unsigned N = level;
    if (w < 3)
        throw DomainError("emit_relations needs weight >= 3");
    if (N == 0)
        throw DomainError("level must be >= 1");
    struct Element {
        FormalSum value;
        std::string provenance;
    };
    std::vector<Element> elements;
    for (unsigned wu = 1; wu <= w - 2; ++wu) {
        unsigned wx = w - 2 - wu;
        std::vector<Word> us;
        all_words(N, wu, depth_max, us);
        for (const auto& u : us) {
            FormalSum du = derive_formal(MdfIndex(u, N));
            std::string du_name = "D" + word_to_string(u);
            if (wx == 0) {
                elements.push_back({du, du_name});
                continue;
            }
            std::vector<Word> xs;
            all_words(N, wx, depth_max, xs);
            for (const auto& x : xs) {
                if (x.size() + u.size() > depth_max)
                    continue;
                elements.push_back({stuffle(FormalSum::word(x, N), du), word_to_string(x) + "*" + du_name});
            }
        }
    }

    Echelon basis;
    std::vector<RelationRecord> out;
    for (const auto& e : elements) {
        TPolynomial z = z_project(reduce_to_qmz(e.value), w);
        for (std::size_t r = 0; r < z.coeffs.size(); ++r) {
            Row row;
            for (const auto& [x, c] : z.linear_part(r)) {
                if (!c.is_rational())
                    throw DomainError("emit_relations: non-rational coefficient in image of " + e.provenance);
                row.emplace(x, c.rational_part());
            }
            if (row.empty() || !basis.insert(row))
                continue;
            RelationRecord rec;
            rec.level = N;
            rec.weight = w - static_cast<unsigned>(r);
            rec.terms = normalize(row);
            rec.provenance = e.provenance + (r ? " [T^" + std::to_string(r) + "]" : "");
            Verification v = verify_relation(rec, tol, cutoff);
            rec.residual = v.residual;
            rec.bound = v.bound;
            rec.certified = v.pass;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

bool relation_in_span(const std::vector<RelationRecord>& rels, const std::map<MzvSymbol, Rational>& target)
{
    Echelon e;
    for (const auto& r : rels)
        e.insert(r.terms);
    Row t;
    for (const auto& [x, c] : target)
        if (c != 0)
            t.emplace(x, c);
    return e.reduce(t).empty();
}

} // namespace qmz
