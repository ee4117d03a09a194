#include "brzeta/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "brzeta/errors.hpp"
#include "brzeta/hereditary.hpp"

namespace brzeta::oracle {

namespace {

// Spanning set kept in echelon-like form: row i is zero at the pivots of the
// rows inserted before it, so reducing in insertion order is exact.
class SpanBuilder {
public:
    SpanBuilder(const gfq::Field& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    // Inserts v; returns false when v was already in the span.
    bool insert(gfq::Vector v)
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const gfq::Elem f = v[pivots_[i]];
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < ambient_; ++k)
                if (rows_[i][k] != 0)
                    v[k] = field_.sub(v[k], field_.mul(f, rows_[i][k]));
        }
        std::size_t p = 0;
        while (p < ambient_ && v[p] == 0)
            ++p;
        if (p == ambient_)
            return false;
        const gfq::Elem s = field_.inv(v[p]);
        for (auto& x : v)
            x = field_.mul(x, s);
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<gfq::Vector>& rows() const { return rows_; }
    gfq::Subspace finish() const { return gfq::echelon(field_, ambient_, rows_); }

private:
    const gfq::Field& field_;
    std::size_t ambient_;
    std::vector<gfq::Vector> rows_;
    std::vector<std::size_t> pivots_;
};

gfq::Vector basis_vector(std::size_t n, std::size_t k)
{
    gfq::Vector v(n, 0);
    v[k] = 1;
    return v;
}

FiniteModuleRep blank(std::uint32_t q, std::string kind, std::size_t dim)
{
    FiniteModuleRep rep{gfq::Field::make(q)};
    rep.kind = std::move(kind);
    rep.dim = dim;
    return rep;
}

Matrix zero_matrix(std::size_t n)
{
    return Matrix(n, gfq::Vector(n, 0));
}

Matrix identity(std::size_t n)
{
    Matrix m = zero_matrix(n);
    for (std::size_t k = 0; k < n; ++k)
        m[k][k] = 1;
    return m;
}

std::vector<std::uint32_t> normalize_partition(std::vector<std::uint32_t> p)
{
    std::erase(p, 0u);
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

std::vector<std::uint32_t> conjugate_to_partition(const std::vector<std::uint32_t>& at_least)
{
    // at_least[k] = number of parts >= k+1.
    std::vector<std::uint32_t> parts;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        const std::uint32_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (std::uint32_t c = next; c < at_least[k]; ++c)
            parts.push_back(static_cast<std::uint32_t>(k + 1));
    }
    return normalize_partition(parts);
}

gfq::Subspace image(const FiniteModuleRep& m, const Matrix& a, const gfq::Subspace& x)
{
    std::vector<gfq::Vector> rows;
    for (const auto& v : x.rows())
        rows.push_back(apply(m.field, a, v));
    return gfq::echelon(m.field, m.dim, std::move(rows));
}

std::size_t classes(const FiniteModuleRep& m)
{
    return m.idempotents.size();
}

// {f : a f in x}.
gfq::Subspace preimage(const FiniteModuleRep& m, const Matrix& a, const gfq::Subspace& x)
{
    const std::size_t n = m.dim;
    std::vector<gfq::Vector> rows;
    for (std::size_t k = 0; k < n; ++k) {
        gfq::Vector r = x.reduce(m.field, a[k]);
        r.resize(2 * n, 0);
        r[n + k] = 1;
        rows.push_back(std::move(r));
    }
    const gfq::Subspace big = gfq::echelon(m.field, 2 * n, std::move(rows));
    std::vector<gfq::Vector> kernel;
    for (std::size_t i = 0; i < big.dim(); ++i)
        if (big.pivots()[i] >= n)
            kernel.emplace_back(big.rows()[i].begin() + static_cast<std::ptrdiff_t>(n), big.rows()[i].end());
    return gfq::echelon(m.field, n, std::move(kernel));
}

Matrix power(const FiniteModuleRep& m, const Matrix& a, std::uint32_t e)
{
    Matrix out = identity(m.dim);
    for (std::uint32_t i = 0; i < e; ++i)
        for (auto& col : out)
            col = apply(m.field, a, col);
    return out;
}

} // namespace

std::size_t FiniteModuleRep::generator(std::string_view name) const
{
    for (std::size_t i = 0; i < generator_names.size(); ++i)
        if (generator_names[i] == name)
            return i;
    throw StructuralError("model '" + kind + "' has no generator '" + std::string(name) + "'");
}

gfq::Vector apply(const gfq::Field& field, const Matrix& m, const gfq::Vector& v)
{
    gfq::Vector out(v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0)
            continue;
        const auto& col = m[k];
        for (std::size_t i = 0; i < out.size(); ++i)
            if (col[i] != 0)
                out[i] = field.add(out[i], field.mul(v[k], col[i]));
    }
    return out;
}

// ------------------------------------------------------------------ models

FiniteModuleRep chain_model(std::uint32_t q, const std::vector<std::uint32_t>& partition)
{
    const auto parts = normalize_partition(partition);
    const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    FiniteModuleRep rep = blank(q, "chain", n);
    Matrix t = zero_matrix(n);
    std::size_t offset = 0;
    for (auto len : parts) {
        for (std::uint32_t a = 0; a + 1 < len; ++a)
            t[offset + a][offset + a + 1] = 1;
        offset += len;
    }
    rep.generator_names = {"t"};
    rep.generators = {std::move(t)};
    rep.radical = {0};
    rep.idempotents = {identity(n)};
    rep.alphabet = single_alphabet("z", q, 1);
    return rep;
}

FiniteModuleRep chain_free_model(std::uint32_t q, std::uint32_t c, std::uint32_t rank)
{
    if (c < 1)
        throw StructuralError("chain model needs depth c >= 1");
    FiniteModuleRep rep = chain_model(q, std::vector<std::uint32_t>(rank, c));
    rep.max_colength = c - 1;
    return rep;
}

FiniteModuleRep local2d_model(std::uint32_t q, std::uint32_t c)
{
    if (c < 1)
        throw StructuralError("local2d model needs depth c >= 1");
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> idx;
    for (std::uint32_t d = 0; d < c; ++d)
        for (std::uint32_t a = 0; a <= d; ++a)
            idx.emplace(std::make_pair(a, d - a), idx.size());
    const std::size_t n = idx.size();
    FiniteModuleRep rep = blank(q, "local2d", n);
    Matrix u = zero_matrix(n);
    Matrix t = zero_matrix(n);
    for (const auto& [ab, k] : idx) {
        const auto [a, b] = ab;
        if (a + b + 1 < c) {
            u[k][idx.at({a + 1, b})] = 1;
            t[k][idx.at({a, b + 1})] = 1;
        }
    }
    rep.generator_names = {"u", "t"};
    rep.generators = {std::move(u), std::move(t)};
    rep.radical = {0, 1};
    rep.idempotents = {identity(n)};
    rep.alphabet = single_alphabet("z", q, 1);
    rep.max_colength = c - 1;
    return rep;
}

namespace {

// Rows 1..n (0-based i), columns k, pi-power offset a < c and t-power b < tdepth.
FiniteModuleRep hereditary_model(std::uint32_t q, std::uint32_t n, std::uint32_t c, std::vector<std::uint32_t> columns,
                                 std::uint32_t tdepth, std::string kind)
{
    const hereditary::OrderSpec order{q, n};
    const hereditary::ModuleSpec module(order, std::move(columns));
    if (c < 1)
        throw StructuralError(kind + " model needs depth c >= 1");
    const auto& cols = module.columns();
    const std::size_t r = cols.size();
    const std::size_t dim = static_cast<std::size_t>(n) * r * c * tdepth;
    const auto index = [&](std::size_t i, std::size_t k, std::size_t a, std::size_t b) {
        return ((i * r + k) * c + a) * tdepth + b;
    };
    // Entry (i,k) lies in pi^{shift} Delta: rows below the column type carry pi.
    const auto shift = [&](std::size_t i, std::size_t k) -> std::uint32_t { return i + 1 <= cols[k] ? 0 : 1; };

    FiniteModuleRep rep = blank(q, std::move(kind), dim);
    std::vector<Matrix> e(n, zero_matrix(dim));
    Matrix g = zero_matrix(dim);
    Matrix t = zero_matrix(dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t a = 0; a < c; ++a)
                for (std::size_t b = 0; b < tdepth; ++b) {
                    const std::size_t from = index(i, k, a, b);
                    e[i][from][from] = 1;
                    // (g x) has rows x_2, ..., x_n, pi x_1: row i moves to row
                    // i-1 keeping its absolute pi-power; row 1 moves to row n
                    // with one more power of pi.
                    const std::size_t to_row = i == 0 ? n - 1 : i - 1;
                    const std::uint32_t abs_power = static_cast<std::uint32_t>(a) + shift(i, k) + (i == 0 ? 1 : 0);
                    const std::uint32_t na = abs_power - shift(to_row, k);
                    if (na < c)
                        g[from][index(to_row, k, na, b)] = 1;
                    if (b + 1 < tdepth)
                        t[from][index(i, k, a, b + 1)] = 1;
                }
    for (std::size_t i = 0; i < n; ++i)
        rep.generator_names.push_back("e" + std::to_string(i + 1));
    rep.generators = e;
    rep.generator_names.push_back("g");
    rep.generators.push_back(std::move(g));
    rep.radical = {n};
    if (tdepth > 1) {
        rep.generator_names.push_back("t");
        rep.generators.push_back(std::move(t));
        rep.radical.push_back(n + 1);
    }
    rep.idempotents = std::move(e);
    rep.alphabet = hereditary::class_alphabet(order);
    return rep;
}

} // namespace

FiniteModuleRep triangular_model(std::uint32_t q, std::uint32_t n, std::uint32_t c,
                                 const std::vector<std::uint32_t>& columns)
{
    FiniteModuleRep rep = hereditary_model(q, n, c, columns, 1, "triangular");
    rep.max_colength = n * c - 1;
    return rep;
}

FiniteModuleRep skew_poly_model(std::uint32_t q, std::uint32_t n, std::uint32_t c,
                                const std::vector<std::uint32_t>& columns)
{
    FiniteModuleRep rep = hereditary_model(q, n, c, columns, c, "skew_poly");
    rep.max_colength = std::min(n * c, c) - 1;
    return rep;
}

FiniteModuleRep model_from_json(const nlohmann::json& j, std::optional<std::uint32_t> colength)
{
    if (!j.is_object())
        throw SchemaError("model: expected an object");
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const auto q = j.at("q").get<std::uint32_t>();
        if (q < 2)
            throw SchemaError("model: q must be at least 2");
        const auto depth = [&](std::uint32_t per_step) -> std::uint32_t {
            if (j.contains("c"))
                return j["c"].get<std::uint32_t>();
            if (!colength)
                throw SchemaError("model: \"c\" is required when no colength is given");
            return (*colength + per_step) / per_step; // least c with per_step * c >= colength + 1
        };
        const auto columns_of = [&](std::uint32_t n) {
            if (j.contains("columns"))
                return j["columns"].get<std::vector<std::uint32_t>>();
            std::vector<std::uint32_t> all(n);
            std::iota(all.begin(), all.end(), 1u);
            return all;
        };
        if (kind == "chain") {
            if (j.contains("partition"))
                return chain_model(q, j["partition"].get<std::vector<std::uint32_t>>());
            return chain_free_model(q, depth(1), j.value("rank", 1u));
        }
        if (kind == "local2d")
            return local2d_model(q, depth(1));
        if (kind == "triangular") {
            const auto n = j.at("n").get<std::uint32_t>();
            return triangular_model(q, n, depth(n), columns_of(n));
        }
        if (kind == "skew_poly") {
            const auto n = j.at("n").get<std::uint32_t>();
            return skew_poly_model(q, n, depth(1), columns_of(n));
        }
        throw SchemaError("model: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("model: ") + ex.what());
    } catch (const StructuralError& ex) {
        throw SchemaError(std::string("model: ") + ex.what());
    }
}

// ------------------------------------------------------------- submodules

gfq::Subspace closure(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    SpanBuilder span(m.field, m.dim);
    std::deque<gfq::Vector> queue;
    for (const auto& v : x.rows())
        if (span.insert(v))
            queue.push_back(v);
    while (!queue.empty()) {
        const gfq::Vector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : m.generators) {
            gfq::Vector w = apply(m.field, g, v);
            if (span.insert(w))
                queue.push_back(std::move(w));
        }
    }
    return span.finish();
}

gfq::Subspace radical_of(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    std::vector<gfq::Vector> rows;
    for (auto gi : m.radical)
        for (const auto& v : x.rows())
            rows.push_back(apply(m.field, m.generators[gi], v));
    return closure(m, gfq::echelon(m.field, m.dim, std::move(rows)));
}

gfq::Subspace whole(const FiniteModuleRep& m)
{
    return gfq::Subspace::full(m.dim);
}

bool is_submodule(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    for (const auto& g : m.generators)
        for (const auto& v : x.rows())
            if (!x.contains(m.field, apply(m.field, g, v)))
                return false;
    return true;
}

std::vector<MaximalSubmodule> maximal_submodules(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    const gfq::Subspace jx = radical_of(m, x);
    std::vector<gfq::Subspace> parts;
    for (const auto& e : m.idempotents)
        parts.push_back(image(m, e, x));

    std::vector<MaximalSubmodule> out;
    for (std::size_t i = 0; i < classes(m); ++i) {
        // X/JX splits into isotypic parts; simples are one-dimensional over
        // F_q, so every hyperplane of part i plus the other parts is a
        // maximal submodule.
        gfq::Subspace rest = jx;
        for (std::size_t o = 0; o < classes(m); ++o)
            if (o != i)
                rest = gfq::sum(m.field, rest, parts[o]);
        SpanBuilder span(m.field, m.dim);
        for (const auto& v : jx.rows())
            span.insert(v);
        std::vector<gfq::Vector> complement;
        for (const auto& v : parts[i].rows())
            if (span.insert(v))
                complement.push_back(v);
        if (complement.empty())
            continue;
        const gfq::Subspace k = gfq::Subspace::span(m.field, m.dim, complement);
        for (const auto& h : gfq::enumerate_subspaces(m.field, k, k.dim() - 1))
            out.push_back({gfq::sum(m.field, rest, h), i});
    }
    return out;
}

Lattice submodule_bfs(const FiniteModuleRep& m, std::uint32_t bound, std::uint64_t budget)
{
    if (bound > m.max_colength)
        throw ConfigError("model '" + m.kind + "' is faithful only up to colength " + std::to_string(m.max_colength)
                          + "; increase its depth c to enumerate colength " + std::to_string(bound));
    Lattice lat;
    lat.nodes.push_back({whole(m), Monomial(m.alphabet.size()), 0});
    lat.index.emplace(lat.nodes[0].space, 0);
    std::size_t level_begin = 0;
    for (std::uint32_t k = 1; k <= bound; ++k) {
        const std::size_t level_end = lat.nodes.size();
        std::map<gfq::Subspace, Monomial> found;
        for (std::size_t p = level_begin; p < level_end; ++p) {
            for (auto& ms : maximal_submodules(m, lat.nodes[p].space)) {
                if (found.contains(ms.space))
                    continue;
                Monomial cls = lat.nodes[p].quotient_class;
                ++cls[ms.simple];
                found.emplace(std::move(ms.space), std::move(cls));
                if (lat.nodes.size() + found.size() > budget)
                    throw ResourceError("submodule enumeration exceeds budget " + std::to_string(budget));
            }
        }
        for (auto& [space, cls] : found) {
            lat.index.emplace(space, lat.nodes.size());
            lat.nodes.push_back({space, std::move(cls), k});
        }
        level_begin = level_end;
        if (level_begin == lat.nodes.size())
            break;
    }
    return lat;
}

prolif::ClassVector subquotient_class(const FiniteModuleRep& m, const gfq::Subspace& a, const gfq::Subspace& b)
{
    prolif::ClassVector out;
    for (const auto& e : m.idempotents) {
        const std::size_t da = image(m, e, a).dim();
        const std::size_t db = image(m, e, b).dim();
        if (db > da)
            throw StructuralError("subquotient of a non-nested pair");
        out.push_back(static_cast<std::uint32_t>(da - db));
    }
    return out;
}

Monomial composition_class(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    return Monomial(subquotient_class(m, whole(m), x));
}

prolif::ClassVector top_class(const FiniteModuleRep& m, const gfq::Subspace& x)
{
    return subquotient_class(m, x, radical_of(m, x));
}

TruncatedSeries empirical_zeta(const FiniteModuleRep& m, std::uint32_t bound,
                               const std::optional<prolif::ClassVector>& top)
{
    const Lattice lat = submodule_bfs(m, bound);
    TruncatedSeries out(m.alphabet, bound);
    for (const auto& node : lat.nodes) {
        if (top && top_class(m, node.space) != *top)
            continue;
        out.add_term(node.quotient_class, 1);
    }
    return out;
}

TruncatedSeries empirical_two_variable(const FiniteModuleRep& m, std::uint32_t bound)
{
    const Alphabet alpha = Alphabet::concat(m.alphabet, m.alphabet.relabeled("z", "w").with_weight(0));
    const Lattice lat = submodule_bfs(m, bound);
    TruncatedSeries out(alpha, bound);
    for (const auto& node : lat.nodes) {
        std::vector<std::uint32_t> exps = node.quotient_class.exponents();
        const auto top = top_class(m, node.space);
        exps.insert(exps.end(), top.begin(), top.end());
        out.add_term(Monomial(std::move(exps)), 1);
    }
    return out;
}

// --------------------------------------------------------------- Jordan / Hall

std::vector<std::uint32_t> jordan_type(const FiniteModuleRep& m, std::size_t gen, const gfq::Subspace& x)
{
    return quotient_jordan_type(m, gen, x, gfq::Subspace::zero(m.dim));
}

std::vector<std::uint32_t> quotient_jordan_type(const FiniteModuleRep& m, std::size_t gen, const gfq::Subspace& a,
                                                const gfq::Subspace& b)
{
    // d_k = dim (t^k A + B) / B; parts >= k+1 number d_k - d_{k+1}.
    std::vector<std::uint32_t> d;
    gfq::Subspace cur = a;
    while (true) {
        const std::size_t dk = gfq::sum(m.field, cur, b).dim() - b.dim();
        d.push_back(static_cast<std::uint32_t>(dk));
        if (dk == 0)
            break;
        cur = image(m, m.generators[gen], cur);
    }
    std::vector<std::uint32_t> at_least;
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        at_least.push_back(d[k] - d[k + 1]);
    return conjugate_to_partition(at_least);
}

Integer hall_number(std::uint32_t q, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                    const std::vector<std::uint32_t>& c)
{
    const FiniteModuleRep am = chain_model(q, a);
    const auto bn = normalize_partition(b);
    const auto cn = normalize_partition(c);
    const Lattice lat = submodule_bfs(am, static_cast<std::uint32_t>(am.dim));
    Integer count = 0;
    for (const auto& node : lat.nodes)
        if (jordan_type(am, 0, node.space) == cn && quotient_jordan_type(am, 0, whole(am), node.space) == bn)
            ++count;
    return count;
}

Integer count_chains(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& tops,
                     const std::vector<std::vector<std::uint32_t>>& quotients)
{
    if (tops.empty() || tops.size() != quotients.size() + 1)
        throw StructuralError("chain needs one more module type than quotient types");
    const FiniteModuleRep am = chain_model(q, tops.back());
    const Lattice lat = submodule_bfs(am, static_cast<std::uint32_t>(am.dim));
    std::vector<std::vector<std::uint32_t>> types;
    for (const auto& node : lat.nodes)
        types.push_back(jordan_type(am, 0, node.space));

    std::function<Integer(std::size_t, std::size_t)> rec = [&](std::size_t upper, std::size_t j) -> Integer {
        // upper is C_{j+1}; choose C_j.
        Integer total = 0;
        const auto want_top = normalize_partition(tops[j]);
        const auto want_q = normalize_partition(quotients[j]);
        for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
            if (types[i] != want_top || !lat.nodes[upper].space.contains(am.field, lat.nodes[i].space))
                continue;
            if (quotient_jordan_type(am, 0, lat.nodes[upper].space, lat.nodes[i].space) != want_q)
                continue;
            total += j == 0 ? Integer(1) : rec(i, j - 1);
        }
        return total;
    };
    if (jordan_type(am, 0, whole(am)) != normalize_partition(tops.back()))
        throw StructuralError("top of the chain has the wrong type");
    return quotients.empty() ? Integer(1) : rec(0, quotients.size() - 1);
}

TruncatedSeries chain_partial_zeta(std::uint32_t q, const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& c)
{
    const FiniteModuleRep am = chain_model(q, a);
    const auto cn = normalize_partition(c);
    const auto bound = static_cast<std::uint32_t>(am.dim);
    const Lattice lat = submodule_bfs(am, bound);
    TruncatedSeries out(am.alphabet, bound);
    for (const auto& node : lat.nodes)
        if (jordan_type(am, 0, node.space) == cn)
            out.add_term(node.quotient_class, 1);
    return out;
}

// ------------------------------------------------------------------ fibres

namespace {

prolif::ChainData fiber_chain_with(const FiniteModuleRep& m, const Matrix& u, const gfq::Subspace& im,
                                   const gfq::Subspace& x)
{
    const gfq::Subspace full = whole(m);
    prolif::ChainData chain;
    gfq::Subspace prev;
    for (std::uint32_t j = 0;; ++j) {
        const gfq::Subspace y = gfq::sum(m.field, preimage(m, power(m, u, j), x), im);
        chain.tops.push_back(subquotient_class(m, y, gfq::sum(m.field, radical_of(m, y), im)));
        if (j > 0)
            chain.quotients.push_back(subquotient_class(m, y, prev));
        if (y == full)
            break;
        if (j > m.dim)
            throw StructuralError("fibre chain does not stabilize");
        prev = y;
    }
    return chain;
}

} // namespace

prolif::ChainData fiber_chain(const FiniteModuleRep& m, std::size_t igen, const gfq::Subspace& x)
{
    const Matrix& u = m.generators.at(igen);
    const gfq::Subspace im = closure(m, image(m, u, whole(m)));
    return fiber_chain_with(m, u, im, x);
}

prolif::ChainData normalize_chain(const prolif::ChainData& chain)
{
    prolif::ChainData out = chain;
    while (!out.quotients.empty() && out.tops.size() >= 2
           && std::all_of(out.quotients.back().begin(), out.quotients.back().end(), [](auto v) { return v == 0; })
           && out.tops[out.tops.size() - 2] == out.tops.back()) {
        out.quotients.pop_back();
        out.tops.pop_back();
    }
    return out;
}

std::vector<gfq::Subspace> fiber_enumerate(const FiniteModuleRep& m, std::size_t igen, const prolif::ChainData& chain,
                                           std::uint32_t bound)
{
    const auto want = normalize_chain(chain);
    const Matrix& u = m.generators.at(igen);
    const gfq::Subspace im = closure(m, image(m, u, whole(m)));
    std::vector<gfq::Subspace> out;
    for (const auto& node : submodule_bfs(m, bound).nodes) {
        const auto got = fiber_chain_with(m, u, im, node.space);
        if (got.tops == want.tops && got.quotients == want.quotients)
            out.push_back(node.space);
    }
    return out;
}

std::map<std::pair<std::vector<prolif::ClassVector>, std::vector<prolif::ClassVector>>, TruncatedSeries>
fiber_sums(const FiniteModuleRep& m, std::size_t igen, std::uint32_t bound)
{
    const Matrix& u = m.generators.at(igen);
    const gfq::Subspace im = closure(m, image(m, u, whole(m)));
    std::map<std::pair<std::vector<prolif::ClassVector>, std::vector<prolif::ClassVector>>, TruncatedSeries> out;
    for (const auto& node : submodule_bfs(m, bound).nodes) {
        auto chain = fiber_chain_with(m, u, im, node.space);
        auto key = std::make_pair(std::move(chain.tops), std::move(chain.quotients));
        auto it = out.try_emplace(std::move(key), m.alphabet, bound).first;
        it->second.add_term(node.quotient_class, 1);
    }
    return out;
}

prolif::ChainData chain_from_json(const nlohmann::json& j)
{
    prolif::ChainData out;
    try {
        out.tops = j.at("tops").get<std::vector<prolif::ClassVector>>();
        out.quotients = j.at("quotients").get<std::vector<prolif::ClassVector>>();
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("chain: ") + ex.what());
    }
    if (out.tops.size() != out.quotients.size() + 1)
        throw SchemaError("chain: \"tops\" must have one more entry than \"quotients\"");
    return out;
}

} // namespace brzeta::oracle
