#include "cli.hpp"

#include "qmz/coeffs.hpp"
#include "qmz/error.hpp"
#include "qmz/json.hpp"
#include "qmz/mzv.hpp"
#include "qmz/numeric.hpp"
#include "qmz/qseries.hpp"
#include "qmz/regularize.hpp"
#include "qmz/relations.hpp"
#include "qmz/stuffle.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace qmz::cli {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool peek(char c)
    {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }
    void expect(char c)
    {
        if (!peek(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    unsigned number()
    {
        skip_space();
        std::size_t start = pos;
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned>(text[pos] - '0');
            if (v > 1000000)
                throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a number", start);
        return static_cast<unsigned>(v);
    }
    std::vector<std::pair<unsigned, std::size_t>> list(char end)
    {
        std::vector<std::pair<unsigned, std::size_t>> out;
        skip_space();
        out.emplace_back(0, pos);
        out.back().first = number();
        while (!peek(end)) {
            expect(',');
            skip_space();
            out.emplace_back(0, pos);
            out.back().first = number();
        }
        return out;
    }
};

} // namespace

MdfIndex parse_index(const std::string& text, std::optional<unsigned> level)
{
    Cursor c{text};
    c.expect('[');
    auto s = c.list(';');
    std::size_t semi = c.pos;
    c.expect(';');
    auto a = c.list(']');
    c.expect(']');
    std::optional<unsigned> suffix;
    std::size_t at = 0;
    if (c.peek('@')) {
        at = c.pos;
        ++c.pos;
        suffix = c.number();
        if (*suffix == 0)
            throw ParseError("level must be positive", at + 1);
    }
    c.skip_space();
    if (c.pos != text.size())
        throw ParseError("trailing characters", c.pos);
    if (s.size() != a.size())
        throw ParseError("arity mismatch: " + std::to_string(s.size()) + " arguments, " +
                             std::to_string(a.size()) + " colors",
                         semi);
    if (suffix && level && *suffix != *level)
        throw ParseError("level @" + std::to_string(*suffix) + " conflicts with level " + std::to_string(*level), at);
    unsigned N = suffix ? *suffix : level ? *level : 1;
    if (N == 0)
        throw ParseError("level must be positive", 0);
    MdfIndex idx;
    idx.level = N;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j].first == 0)
            throw ParseError("argument must be positive", s[j].second);
        if (a[j].first >= N)
            throw ParseError("color " + std::to_string(a[j].first) + " not below level " + std::to_string(N),
                             a[j].second);
        idx.s.push_back(s[j].first);
        idx.alpha.push_back(a[j].first);
    }
    return idx;
}

std::string render_index(const MdfIndex& idx)
{
    std::string out = "[";
    for (std::size_t j = 0; j < idx.s.size(); ++j)
        out += (j ? "," : "") + std::to_string(idx.s[j]);
    out += ";";
    for (std::size_t j = 0; j < idx.alpha.size(); ++j)
        out += (j ? "," : "") + std::to_string(idx.alpha[j]);
    return out + "]@" + std::to_string(idx.level);
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(long double x, int digits = 20)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
    return buf;
}

std::string word_text(const Word& w, unsigned N)
{
    return N == 2 ? word_to_bar_string(w) : word_to_string(w);
}

Rational lcm_of_denominators(const RationalMatrix& m)
{
    Integer l = 1;
    for (const auto& row : m)
        for (const auto& x : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return Rational(l);
}

void print_matrix(std::ostream& out, const RationalMatrix& m)
{
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 1;
    for (const auto& row : m) {
        cells.emplace_back();
        for (const auto& x : row) {
            cells.back().push_back(to_string(x));
            width = std::max(width, cells.back().back().size());
        }
    }
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << std::string(width - row[j].size(), ' ') << row[j];
        out << '\n';
    }
}

struct Options {
    bool json = false;
    std::optional<unsigned> level;
};

MdfIndex index_arg(const std::string& text, const Options& o)
{
    try {
        return parse_index(text, o.level);
    } catch (const ParseError& e) {
        throw UsageError("bad index \"" + text + "\": " + e.what());
    }
}

QSeries series_by_route(const MdfIndex& idx, unsigned order, const std::string& route)
{
    if (route == "divisor")
        return mdf_divisor_sum(idx, order);
    if (route == "eulerian")
        return mdf_eulerian(idx, order);
    return mdf_polylog(idx, order);
}

void cmd_coeffs(const Options& o, const std::string& index, unsigned order, const std::string& route,
                std::ostream& out)
{
    MdfIndex idx = index_arg(index, o);
    QSeries f = series_by_route(idx, order, route);
    if (o.json)
        out << to_json(f).dump() << '\n';
    else
        out << word_text(idx.word(), idx.level) << " = " << f.to_string() << '\n';
}

void cmd_product(const Options& o, const std::string& left, const std::string& right, unsigned order,
                 std::ostream& out)
{
    MdfIndex a = index_arg(left, o);
    Options ob = o;
    ob.level = a.level;
    MdfIndex b;
    try {
        b = parse_index(right, ob.level);
    } catch (const ParseError& e) {
        throw UsageError("bad index \"" + right + "\": " + e.what());
    }
    unsigned N = a.level;
    FormalSum x = stuffle(a.word(), b.word(), N);
    QSeries lhs = eval_word(a.word(), N, order) * eval_word(b.word(), N, order);
    QSeries rhs = eval_to_qseries(x, order);
    if (lhs != rhs)
        throw std::logic_error("stuffle expansion of " + render_index(a) + " * " + render_index(b) +
                               " disagrees with the series product");
    if (o.json) {
        out << json{{"left", to_json(a)}, {"right", to_json(b)}, {"order", order}, {"expansion", to_json(x)}}.dump()
            << '\n';
        return;
    }
    out << word_text(a.word(), N) << " * " << word_text(b.word(), N) << " = " << x.to_string(N == 2) << '\n';
    out << "checked as q-series to O(q^" << order + 1 << ")\n";
}

void cmd_derive(const Options& o, const std::string& index, unsigned order, std::ostream& out)
{
    MdfIndex idx = index_arg(index, o);
    FormalSum d = derive_formal(idx);
    if (eval_to_qseries(d, order) != q_derive(eval_word(idx.word(), idx.level, order)))
        throw std::logic_error("derivation of " + render_index(idx) + " disagrees with q d/dq");
    if (o.json) {
        out << to_json(d).dump() << '\n';
        return;
    }
    out << "D" << word_text(idx.word(), idx.level) << " = " << d.to_string(idx.level == 2) << '\n';
    out << "checked as q-series to O(q^" << order + 1 << ")\n";
}

void cmd_reduce(const Options& o, const std::string& index, bool project, std::ostream& out)
{
    MdfIndex idx = index_arg(index, o);
    unsigned N = idx.level;
    QmzPolynomial p = reduce_to_qmz(idx);
    std::optional<TPolynomial> z;
    if (project)
        z = z_project(p, idx.weight());
    if (o.json) {
        json j = to_json(p);
        if (z)
            j["projection"] = to_json(*z);
        out << j.dump() << '\n';
        return;
    }
    out << word_text(idx.word(), N) << " = " << p.to_string(N == 2) << '\n';
    if (z)
        out << "Z_" << idx.weight() << " = " << z->to_string(N == 2) << '\n';
}

void cmd_regmatrix(const Options& o, unsigned m, bool printed, bool inclusive, std::ostream& out)
{
    unsigned N = o.level.value_or(2);
    if (N == 0)
        throw DomainError("level must be >= 1");
    RegMatrix r = printed ? reg_matrix_printed(N, m, inclusive) : reg_matrix(N, m);
    Rational det = determinant(r.entries);
    Integer formula = reg_matrix_det_formula(N, m);
    std::optional<RationalMatrix> inv;
    Rational scale = 1;
    if (det != 0) {
        inv = printed ? inverse(r.entries) : reg_matrix_inverse(N, m);
        scale = lcm_of_denominators(*inv);
        for (auto& row : *inv)
            for (auto& x : row)
                x *= scale;
    }
    if (o.json) {
        json j = to_json(r);
        j["det"] = to_string(det);
        j["det_formula"] = to_string(formula);
        if (inv) {
            j["inverse_scale"] = to_string(scale);
            j["scaled_inverse"] = to_json(*inv);
        }
        out << j.dump() << '\n';
        return;
    }
    out << "M(" << N << "," << m << ")" << (printed ? " from the E-rule" : "") << ":\n";
    print_matrix(out, r.entries);
    out << "det = " << to_string(det) << "\n";
    out << "closed formula = " << to_string(formula) << "\n";
    if (inv) {
        out << to_string(scale) << " * inverse:\n";
        print_matrix(out, *inv);
    }
}

void cmd_relations(const Options& o, unsigned weight, unsigned depth, unsigned long cutoff, std::ostream& out)
{
    unsigned N = o.level.value_or(2);
    auto rels = emit_relations(N, weight, depth ? depth : weight, cutoff);
    if (o.json) {
        json arr = json::array();
        for (const auto& r : rels)
            arr.push_back(to_json(r));
        out << arr.dump() << '\n';
        return;
    }
    for (const auto& r : rels)
        out << r.to_string(N == 2) << "    (" << r.provenance << "; residual " << fmt(r.residual, 3) << ", "
            << (r.certified ? "certified" : "NOT certified") << ")\n";
}

void cmd_zeta(const Options& o, const std::string& index, unsigned long cutoff, std::optional<unsigned> gamma,
              const std::string& branch, bool regularized, std::ostream& out)
{
    MdfIndex idx = index_arg(index, o);
    unsigned N = idx.level;
    if (regularized) {
        if (gamma)
            throw UsageError("--regularized does not combine with --gamma");
        TPolynomial z = zstar_regularized(idx.s, idx.alpha, N);
        if (o.json)
            out << to_json(z).dump() << '\n';
        else
            out << "z*" << word_text(idx.word(), N) << " = " << z.to_string(N == 2) << '\n';
        return;
    }
    NumericValue v;
    MzvSymbol x;
    x.s = idx.s;
    x.alpha = idx.alpha;
    x.level = N;
    if (gamma) {
        if (*gamma == 0 || *gamma >= N)
            throw DomainError("gamma index must satisfy 1 <= beta < N");
        x.kind = SymbolKind::gamma;
        x.beta = *gamma;
        v = gamma_numeric(*gamma, idx.s, idx.alpha, N, cutoff, default_precision(),
                          branch == "printed" ? GammaBranch::printed : GammaBranch::limit);
    } else {
        if (idx.s.empty() || idx.s[0] < 2)
            throw DomainError("zeta diverges for s_1 = 1; use --regularized");
        v = zeta_numeric(idx.s, idx.alpha, N, cutoff);
    }
    if (o.json) {
        json j = to_json(x);
        j["level"] = N;
        j["cutoff"] = cutoff;
        j["value"] = fmt(v.value);
        j["error"] = static_cast<double>(v.error);
        out << j.dump() << '\n';
        return;
    }
    out << x.to_string(N == 2) << " = " << fmt(v.value) << " +- " << fmt(v.error, 3) << '\n';
}

void cmd_omega(const Options& o, long alpha, unsigned n_max, std::ostream& out)
{
    unsigned N = o.level.value_or(2);
    OmegaTable t = omega(N, alpha, n_max);
    if (o.json) {
        json vals = json::array();
        for (const auto& c : t.values)
            vals.push_back(to_json(c));
        out << json{{"level", N}, {"alpha", t.alpha}, {"values", vals}}.dump() << '\n';
        return;
    }
    for (unsigned n = 0; n <= n_max; ++n)
        out << "omega[" << n << ";" << t.alpha << "] = " << t.values[n].to_string() << '\n';
}

int cmd_verify(const Options& o, const std::string& file, double tol, unsigned long cutoff, std::ostream& out)
{
    std::string text;
    if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(file);
        if (!in)
            throw UsageError("cannot read " + file);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad JSON: ") + e.what());
    }
    std::vector<RelationRecord> rels;
    try {
        if (j.is_array())
            for (const auto& r : j)
                rels.push_back(relation_from_json(r));
        else
            rels.push_back(relation_from_json(j));
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad relation record: ") + e.what());
    }
    bool all = true;
    json report = json::array();
    for (const auto& r : rels) {
        Verification v = verify_relation(r, tol, cutoff);
        all = all && v.pass;
        if (o.json)
            report.push_back({{"relation", to_json(r)["terms"]},
                              {"residual", static_cast<double>(v.residual)},
                              {"bound", static_cast<double>(v.bound)},
                              {"pass", v.pass}});
        else
            out << (v.pass ? "PASS " : "FAIL ") << r.to_string(r.level == 2) << "    (residual "
                << fmt(v.residual, 3) << ", bound " << fmt(v.bound, 3) << ")\n";
    }
    if (o.json)
        out << report.dump() << '\n';
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multiple divisor functions and multiple zeta values at level N", "qmz"};
    app.require_subcommand(1);
    Options o;
    unsigned level = 0;
    app.add_flag("--json", o.json, "Emit JSON");
    app.add_option("--level", level, "Level N (default from the index literal)")->check(CLI::PositiveNumber);

    std::string index, index2, route = "polylog", branch = "limit", file = "-";
    unsigned order = 12, m = 1, weight = 3, depth = 0, n_max = 10;
    unsigned long cutoff = 100000;
    long alpha = 1;
    double tol = 1e-3;
    unsigned gamma = 0;
    bool project = false, printed = false, inclusive = false, regularized = false;

    auto add_level = [&](CLI::App* s) {
        s->add_option("--level", level, "Level N")->check(CLI::PositiveNumber);
        s->add_flag("--json", o.json, "Emit JSON");
    };

    auto* coeffs = app.add_subcommand("coeffs", "q-expansion of an MDF");
    coeffs->add_option("--index,index", index, "Index literal, e.g. \"[2,1;0,1]@2\"")->required();
    coeffs->add_option("--order", order, "Truncation order");
    coeffs->add_option("--route", route, "Construction")->check(CLI::IsMember({"divisor", "polylog", "eulerian"}));
    add_level(coeffs);

    auto* product = app.add_subcommand("product", "Stuffle product of two indices, checked as q-series");
    product->add_option("left", index, "Left index")->required();
    product->add_option("right", index2, "Right index")->required();
    product->add_option("--order", order, "Check order");
    add_level(product);

    auto* derive = app.add_subcommand("derive", "Formal q d/dq of an MDF, checked as q-series");
    derive->add_option("--index,index", index, "Index literal")->required();
    derive->add_option("--order", order, "Check order");
    add_level(derive);

    auto* reduce = app.add_subcommand("reduce", "Express an MDF through qMZ generators");
    reduce->add_option("--index,index", index, "Index literal")->required();
    reduce->add_flag("--project", project, "Also print the image under Z_w");
    add_level(reduce);

    auto* regmatrix = app.add_subcommand("regmatrix", "Regularization matrix M(N,m)");
    regmatrix->add_option("--m", m, "m");
    regmatrix->add_flag("--printed", printed, "Build from the E-rule instead of the reduction system");
    regmatrix->add_flag("--inclusive", inclusive, "With --printed, read the E-rule bound as <=");
    add_level(regmatrix);

    auto* relations = app.add_subcommand("relations", "Mine and certify Q-linear MZV relations");
    relations->add_option("--weight", weight, "Weight w >= 3");
    relations->add_option("--depth", depth, "Depth bound (default w)");
    relations->add_option("--cutoff", cutoff, "Summation cutoff for certification")->check(CLI::Range(16ul, 1ul << 40));
    add_level(relations);

    auto* zeta = app.add_subcommand("zeta", "Numeric MZV or Gamma value, or symbolic regularization");
    zeta->add_option("--index,index", index, "Index literal")->required();
    zeta->add_option("--cutoff", cutoff, "Summation cutoff")->check(CLI::Range(16ul, 1ul << 40));
    zeta->add_option("--gamma", gamma, "Compute Gamma_beta instead");
    zeta->add_option("--branch", branch, "Gamma case split")->check(CLI::IsMember({"limit", "printed"}));
    zeta->add_flag("--regularized", regularized, "Print the regularized value as a polynomial in T");
    add_level(zeta);

    auto* om = app.add_subcommand("omega", "Table of omega^N_{n;alpha}");
    om->add_option("--alpha", alpha, "Color");
    om->add_option("--n", n_max, "Largest n");
    add_level(om);

    auto* verify = app.add_subcommand("verify", "Numerically verify relation records (JSON)");
    verify->add_option("--file,file", file, "JSON file, or - for stdin");
    verify->add_option("--tol", tol, "Tolerance");
    verify->add_option("--cutoff", cutoff, "Summation cutoff")->check(CLI::Range(16ul, 1ul << 40));
    add_level(verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (level)
        o.level = level;

    try {
        if (*coeffs)
            cmd_coeffs(o, index, order, route, out);
        else if (*product)
            cmd_product(o, index, index2, order, out);
        else if (*derive)
            cmd_derive(o, index, order, out);
        else if (*reduce)
            cmd_reduce(o, index, project, out);
        else if (*regmatrix)
            cmd_regmatrix(o, m, printed, inclusive, out);
        else if (*relations)
            cmd_relations(o, weight, depth, cutoff, out);
        else if (*zeta)
            cmd_zeta(o, index, cutoff, gamma ? std::optional<unsigned>(gamma) : std::nullopt, branch, regularized,
                     out);
        else if (*om)
            cmd_omega(o, alpha, n_max, out);
        else if (*verify)
            return cmd_verify(o, file, tol, cutoff, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        err << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace qmz::cli
