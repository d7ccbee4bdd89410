#include "qmz/error.hpp"
#include "qmz/stuffle.hpp"

namespace qmz {

FormalSum derive_formal(const MdfIndex& idx)
{
    unsigned N = idx.level, d = idx.depth();
    if (d == 0)
        throw DomainError("derivation needs depth >= 1");
    Word w = idx.word();
    auto rat = [N](long x) { return CycloNum(N, x); };

    FormalSum r = stuffle(Word{{2, 0}}, w, N);
    for (unsigned j = 0; j < d; ++j) {
        Word x = w;
        x[j].s += 1;
        r.add(x, rat(long(d - j) * w[j].s));
        x.push_back({1, 0});
        r.add(x, rat(-long(w[j].s)));
    }
    Word tail = w;
    tail.push_back({2, 0});
    r.add(tail, rat(-1));

    for (unsigned j = 0; j < d; ++j) {
        // s_j split into (a, b), color alpha_j repeated
        auto split = [&](const Word& base, unsigned total, long coeff_of_a, long scale) {
            for (unsigned a = 1; a < total; ++a) {
                Word x(base.begin(), base.begin() + j);
                x.push_back({a, w[j].a});
                x.push_back({total - a, w[j].a});
                x.insert(x.end(), base.begin() + j + 1, base.end());
                long c = coeff_of_a ? long(a) - 1 : 1;
                r.add(x, rat(-c * scale));
            }
        };
        split(w, w[j].s + 2, 1, 1);
        for (unsigned l = 0; l < j; ++l) {
            Word base = w;
            base[l].s += 1;
            split(base, w[j].s + 1, 0, w[l].s);
        }
    }
    return r;
}

FormalSum derive_formal(const FormalSum& x)
{
    if (x.tpow || x.Tpow)
        throw DomainError("derive_formal: input carries t_N or T factors");
    FormalSum r(x.level);
    for (const auto& [w, c] : x.terms)
        if (!w.empty())
            r += derive_formal(MdfIndex(w, x.level)) * c;
    return r;
}

} // namespace qmz
