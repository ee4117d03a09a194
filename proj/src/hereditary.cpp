#include "brzeta/hereditary.hpp"

#include <algorithm>

#include "brzeta/errors.hpp"
#include "brzeta/qcomb.hpp"

namespace brzeta::hereditary {

ModuleSpec::ModuleSpec(const OrderSpec& order, std::vector<std::uint32_t> columns)
    : n_(order.n), columns_(std::move(columns))
{
    if (order.n < 1)
        throw StructuralError("chain length must be at least 1");
    if (columns_.empty())
        throw StructuralError("module needs at least one column");
    for (auto c : columns_)
        if (c < 1 || c > order.n)
            throw StructuralError("column type " + std::to_string(c) + " outside 1.." + std::to_string(order.n));
    std::sort(columns_.begin(), columns_.end());
}

std::vector<std::uint32_t> ModuleSpec::flag_dims() const
{
    std::vector<std::uint32_t> out(n_, 0);
    for (std::uint32_t j = 1; j <= n_; ++j)
        out[j - 1] = static_cast<std::uint32_t>(std::count_if(columns_.begin(), columns_.end(), [&](auto c) { return c >= j; }));
    return out;
}

std::vector<std::uint32_t> ModuleSpec::row_colengths() const
{
    std::vector<std::uint32_t> out(n_, 0);
    for (std::uint32_t j = 1; j <= n_; ++j)
        out[j - 1] = static_cast<std::uint32_t>(std::count_if(columns_.begin(), columns_.end(), [&](auto c) { return c < j; }));
    return out;
}

std::vector<std::uint32_t> ModuleSpec::top() const
{
    std::vector<std::uint32_t> out(n_, 0);
    for (auto c : columns_)
        ++out[c - 1];
    return out;
}

gfq::Subspace ModuleSpec::flag_space(std::uint32_t j) const
{
    std::vector<std::size_t> coords;
    for (std::size_t k = 0; k < columns_.size(); ++k)
        if (columns_[k] >= j)
            coords.push_back(k);
    return gfq::Subspace::coordinate(columns_.size(), coords);
}

ModuleSpec ModuleSpec::from_top(const OrderSpec& order, const std::vector<std::uint32_t>& rho)
{
    if (rho.size() != order.n)
        throw StructuralError("top class has the wrong length");
    std::vector<std::uint32_t> columns;
    for (std::uint32_t j = 0; j < order.n; ++j)
        columns.insert(columns.end(), rho[j], j + 1);
    return ModuleSpec(order, std::move(columns));
}

Alphabet class_alphabet(const OrderSpec& order)
{
    std::vector<AlphabetEntry> e;
    for (std::uint32_t i = 1; i <= order.n; ++i)
        e.push_back({order.n == 1 ? std::string("z") : "z" + std::to_string(i), order.q, 1, 1});
    return Alphabet(std::move(e));
}

Alphabet doubled_alphabet(const OrderSpec& order)
{
    const Alphabet z = class_alphabet(order);
    return Alphabet::concat(z, z.relabeled("z", "w").with_weight(0));
}

Monomial class_monomial(const std::vector<std::uint32_t>& counts)
{
    return Monomial(counts);
}

SubstitutionData substitution_data(const OrderSpec& order, const ModuleSpec& module)
{
    const std::uint32_t n = order.n;
    SubstitutionData out;
    out.u = Monomial(2 * n);
    out.v = Monomial(2 * n);
    const auto lengths = module.row_colengths();
    for (std::uint32_t i = 0; i < n; ++i) {
        out.u[i] = lengths[i];
        out.v[i] = 1;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        Monomial t(2 * n);
        t[n + j] = 1;
        for (std::uint32_t i = j + 1; i < n; ++i)
            t[i] = 1;
        out.t.push_back(std::move(t));
    }
    return out;
}

gfq::FilteredSpace filtered_dims(const gfq::Field& field, const ModuleSpec& module, const gfq::Subspace& ybar)
{
    if (ybar.ambient() != module.rank())
        throw StructuralError("subspace does not live in F_q^r");
    std::vector<std::uint32_t> d;
    const std::uint32_t free_part = module.rank() - static_cast<std::uint32_t>(ybar.dim());
    for (std::uint32_t j = 1; j <= module.chain_length(); ++j)
        d.push_back(static_cast<std::uint32_t>(gfq::intersect(field, ybar, module.flag_space(j)).dim()) + free_part);
    return gfq::FilteredSpace(std::move(d));
}

Alphabet t_alphabet(std::uint32_t n)
{
    std::vector<AlphabetEntry> e;
    for (std::uint32_t j = 1; j <= n; ++j)
        e.push_back({"t" + std::to_string(j), 2, 1, 0});
    return Alphabet(std::move(e));
}

TruncatedSeries filtered_poly(const gfq::Field& field, const gfq::FilteredSpace& v, std::uint64_t budget)
{
    const Alphabet alpha = t_alphabet(static_cast<std::uint32_t>(v.length()));
    TruncatedSeries out(alpha, 0);
    for (const auto& chain : gfq::enumerate_chains(field, v, budget))
        out.add_term(Monomial(chain.degrees), 1);
    return out;
}

std::vector<Integer> hermite_Q(std::uint32_t m, std::uint32_t r, std::uint32_t q)
{
    if (m > r)
        throw StructuralError("hermite_Q needs m <= r");
    std::vector<Integer> out(r - m, 0);
    const auto tail = qcomb::cauchy_poly(m, q);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

TruncatedSeries hermite_orbit_sum(std::uint32_t m, std::uint32_t r, std::uint32_t q, std::uint32_t bound)
{
    if (m > r)
        throw StructuralError("hermite_orbit_sum needs m <= r");
    const Alphabet alpha = single_alphabet("v", q, 1);
    TruncatedSeries out = TruncatedSeries::one(alpha, bound);
    Integer qj = ipow(Integer(q), m);
    for (std::uint32_t j = m + 1; j <= r; ++j) {
        // v / (1 - q^{j-1} v)
        TruncatedSeries f(alpha, bound);
        Integer c = 1;
        for (std::uint32_t k = 1; k <= bound; ++k) {
            f.add_term(Monomial::unit(1, 0, k), Rational(c));
            c *= qj;
        }
        out *= f;
        qj *= q;
    }
    return out;
}

TruncatedSeries solomon_hey_factor(std::uint32_t r, std::uint32_t q, std::uint32_t bound)
{
    const Alphabet alpha = single_alphabet("v", q, 1);
    TruncatedSeries out = TruncatedSeries::one(alpha, bound);
    Integer qj = 1;
    for (std::uint32_t j = 0; j < r; ++j) {
        TruncatedSeries f(alpha, bound);
        Integer c = 1;
        for (std::uint32_t k = 0; k <= bound; ++k) {
            f.add_term(Monomial::unit(1, 0, k), Rational(c));
            c *= qj;
        }
        out *= f;
        qj *= q;
    }
    return out;
}

namespace {

struct ProfileGroup {
    std::uint32_t m = 0;           // dim Ybar
    gfq::FilteredSpace dims{{0}};  // filtered dimensions of M_* Y_1
    std::uint64_t count = 0;
};

// Subspaces Ybar of F_q^r grouped by (dim Ybar, filtered dimensions).
std::vector<ProfileGroup> profile_groups(const gfq::Field& field, const ModuleSpec& module, std::uint64_t budget)
{
    std::map<std::vector<std::uint32_t>, ProfileGroup> groups;
    for (const auto& y : gfq::enumerate_subspaces(field, gfq::Subspace::full(module.rank()), std::nullopt, budget)) {
        auto d = filtered_dims(field, module, y);
        std::vector<std::uint32_t> key = d.dims;
        key.push_back(static_cast<std::uint32_t>(y.dim()));
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh) {
            it->second.m = static_cast<std::uint32_t>(y.dim());
            it->second.dims = std::move(d);
        }
        ++it->second.count;
    }
    std::vector<ProfileGroup> out;
    for (auto& [k, g] : groups)
        out.push_back(std::move(g));
    return out;
}

std::vector<SubstitutionTarget> t_targets(const SubstitutionData& sd)
{
    std::vector<SubstitutionTarget> out;
    for (const auto& t : sd.t)
        out.push_back({1, t});
    return out;
}

TruncatedSeries divide_by_monomial(const TruncatedSeries& a, const Monomial& u, std::uint32_t bound, const char* what)
{
    TruncatedSeries out(a.alphabet(), bound);
    for (const auto& [m, c] : a.terms()) {
        if (!m.divisible_by(u))
            throw FormulaViolation(std::string(what) + ": term " + to_string(m, a.alphabet())
                                   + " is not divisible by u = " + to_string(u, a.alphabet()));
        out.add_term(m / u, c);
    }
    return out;
}

} // namespace

TruncatedSeries brz_two_variable(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound,
                                 std::uint64_t budget)
{
    const gfq::Field field = gfq::Field::make(order.q);
    const Alphabet alpha = doubled_alphabet(order);
    const SubstitutionData sd = substitution_data(order, module);
    const std::uint32_t work = bound + static_cast<std::uint32_t>(sd.u.total_degree());
    const auto tmap = t_targets(sd);
    const std::vector<SubstitutionTarget> vmap{{1, sd.v}};

    TruncatedSeries uz(alpha, work);
    for (const auto& g : profile_groups(field, module, budget)) {
        const TruncatedSeries p = substitute(filtered_poly(field, g.dims, budget), alpha, tmap, work);
        const TruncatedSeries h = substitute(hermite_orbit_sum(g.m, module.rank(), order.q, work / order.n), alpha,
                                             vmap, work);
        uz += (p * h) * Rational(Integer(std::to_string(g.count)));
    }
    return divide_by_monomial(uz, sd.u, bound, "two-variable zeta");
}

std::uint32_t brs_degree_bound(const OrderSpec& order, const ModuleSpec& module)
{
    const SubstitutionData sd = substitution_data(order, module);
    return module.rank() * (2 * order.n - 1) - static_cast<std::uint32_t>(sd.u.total_degree()) + 1;
}

TruncatedSeries brs_F(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound, std::uint64_t budget)
{
    const gfq::Field field = gfq::Field::make(order.q);
    const Alphabet alpha = doubled_alphabet(order);
    const SubstitutionData sd = substitution_data(order, module);
    const std::uint32_t r = module.rank();
    // Every P has z-degree <= r(n-1) after substitution and Q has v-degree <= r,
    // so this bound keeps the sum exact.
    const std::uint32_t exact = r * (2 * order.n - 1);
    const auto tmap = t_targets(sd);
    const std::vector<SubstitutionTarget> vmap{{1, sd.v}};
    const Alphabet valpha = single_alphabet("v", order.q, 1);

    TruncatedSeries sum(alpha, exact);
    for (const auto& g : profile_groups(field, module, budget)) {
        const TruncatedSeries p = substitute(filtered_poly(field, g.dims, budget), alpha, tmap, exact);
        const auto qc = hermite_Q(g.m, r, order.q);
        std::vector<Rational> qr(qc.begin(), qc.end());
        const TruncatedSeries qv = TruncatedSeries::from_coefficients(valpha, 2 * r, 0, qr);
        sum += (p * substitute(qv, alpha, vmap, exact)) * Rational(Integer(std::to_string(g.count)));
    }
    TruncatedSeries f = divide_by_monomial(sum, sd.u, exact, "BRS polynomial");
    if (auto bad = f.first_non_natural(); bad && !f.is_integral())
        throw FormulaViolation("BRS polynomial has non-integral coefficient " + bad->second.get_str() + " at "
                               + to_string(bad->first, alpha));
    if (!f.is_zero() && f.max_degree() >= bound)
        throw FormulaViolation("BRS polynomial has z-degree " + std::to_string(f.max_degree())
                               + ", which does not stabilize below the bound " + std::to_string(bound));

    // Independent path: Z(M;z,w) prod_{j<r} (1 - q^j v).
    TruncatedSeries check = brz_two_variable(order, module, bound, budget);
    const auto cauchy = qcomb::cauchy_poly(r, order.q);
    std::vector<Rational> cr(cauchy.begin(), cauchy.end());
    const std::uint32_t vb = std::max<std::uint32_t>(bound / order.n, r);
    check *= substitute(TruncatedSeries::from_coefficients(valpha, vb, 0, cr), alpha, vmap, bound);
    // f is an exact polynomial, so it may be re-truncated at any bound.
    TruncatedSeries out(alpha, bound);
    for (const auto& [m, c] : f.terms())
        out.add_term(m, c);
    const TruncatedSeries diff = check - out;
    if (!diff.is_zero()) {
        const auto& [m, c] = *diff.terms().begin();
        throw FormulaViolation("BRS factorization fails at " + to_string(m, alpha) + ": expected "
                               + out.coefficient(m).get_str() + ", got " + check.coefficient(m).get_str());
    }
    return out;
}

TruncatedSeries partial_zeta(const OrderSpec& order, const ModuleSpec& module, const TopClass& rho,
                             std::uint32_t bound, std::uint64_t budget)
{
    if (rho.size() != order.n)
        throw StructuralError("top class has the wrong length");
    const TruncatedSeries z = brz_two_variable(order, module, bound, budget);
    return slice_coefficient(z, class_alphabet(order), Monomial(rho));
}

TruncatedSeries total_zeta(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound,
                           std::uint64_t budget)
{
    const TruncatedSeries z = brz_two_variable(order, module, bound, budget);
    const Alphabet zalpha = class_alphabet(order);
    std::vector<SubstitutionTarget> map;
    for (std::uint32_t i = 0; i < order.n; ++i)
        map.push_back({1, Monomial::unit(order.n, i)});
    for (std::uint32_t i = 0; i < order.n; ++i)
        map.push_back({1, Monomial(order.n)});
    return substitute(z, zalpha, map, bound);
}

std::map<TopClass, TruncatedSeries> top_slices(const OrderSpec& order, const TruncatedSeries& two_variable)
{
    const Alphabet zalpha = class_alphabet(order);
    std::map<TopClass, TruncatedSeries> out;
    for (const auto& [m, c] : two_variable.terms()) {
        TopClass rho(m.exponents().begin() + order.n, m.exponents().end());
        if (!out.contains(rho))
            out.emplace(rho, slice_coefficient(two_variable, zalpha, Monomial(rho)));
    }
    return out;
}

std::pair<OrderSpec, ModuleSpec> spec_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw SchemaError("hereditary spec: expected an object");
    OrderSpec order;
    std::vector<std::uint32_t> columns;
    try {
        order.q = j.at("q").get<std::uint32_t>();
        order.n = j.at("n").get<std::uint32_t>();
        columns = j.at("columns").get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("hereditary spec: ") + ex.what());
    }
    if (order.q < 2)
        throw SchemaError("hereditary spec: q must be at least 2");
    try {
        (void)gfq::Field::make(order.q);
        return {order, ModuleSpec(order, std::move(columns))};
    } catch (const StructuralError& ex) {
        throw SchemaError(std::string("hereditary spec: ") + ex.what());
    }
}

nlohmann::json to_json(const OrderSpec& order, const ModuleSpec& module)
{
    return {{"q", order.q}, {"n", order.n}, {"columns", module.columns()}};
}

} // namespace brzeta::hereditary
