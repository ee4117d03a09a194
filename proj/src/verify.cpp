#include "brzeta/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "brzeta/errors.hpp"
#include "brzeta/hereditary.hpp"
#include "brzeta/hey.hpp"
#include "brzeta/oracle.hpp"
#include "brzeta/prolif.hpp"
#include "brzeta/qcomb.hpp"

namespace brzeta::verify {

namespace {

using Partition = std::vector<std::uint32_t>;

struct Ctx {
    const SuiteOptions& options;
    SuiteResult& result;

    bool check(std::optional<Mismatch> m)
    {
        ++result.checks;
        if (m && !result.mismatch)
            result.mismatch = std::move(m);
        return !m;
    }
    std::uint32_t size(std::uint32_t fallback) const
    {
        return options.max ? static_cast<std::uint32_t>(*options.max) : fallback;
    }
};

std::string rational_string(const Rational& r)
{
    return r.get_str();
}

std::string list_string(const std::vector<std::uint32_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

hey::SemisimpleData single_entry(std::uint32_t q, std::uint32_t r, std::uint32_t m)
{
    return hey::SemisimpleData{{{"z", q, r, m}}};
}

std::vector<std::pair<hereditary::OrderSpec, hereditary::ModuleSpec>> hereditary_configs()
{
    std::vector<std::pair<hereditary::OrderSpec, hereditary::ModuleSpec>> out;
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t n = 1; n <= 3; ++n) {
            const hereditary::OrderSpec order{q, n};
            std::function<void(std::vector<std::uint32_t>&)> grow = [&](std::vector<std::uint32_t>& cols) {
                if (!cols.empty())
                    out.emplace_back(order, hereditary::ModuleSpec(order, cols));
                if (cols.size() == 3)
                    return;
                for (std::uint32_t c = cols.empty() ? 1 : cols.back(); c <= n; ++c) {
                    cols.push_back(c);
                    grow(cols);
                    cols.pop_back();
                }
            };
            std::vector<std::uint32_t> cols;
            grow(cols);
        }
    return out;
}

std::string config_string(const hereditary::OrderSpec& order, const hereditary::ModuleSpec& module)
{
    return "q=" + std::to_string(order.q) + " n=" + std::to_string(order.n) + " columns="
        + list_string(module.columns());
}

std::vector<Integer> single_coefficients(const TruncatedSeries& s)
{
    std::vector<Integer> out(s.bound() + 1, 0);
    for (const auto& [m, c] : s.terms()) {
        if (c.get_den() != 1)
            throw FormulaViolation("non-integral coefficient " + c.get_str());
        out[m.exponents().at(0)] = c.get_num();
    }
    return out;
}

std::vector<Partition> partitions(std::uint32_t k)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t left, std::uint32_t largest) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t p = std::min(left, largest); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::uint32_t weight(const Partition& p)
{
    std::uint32_t s = 0;
    for (auto x : p)
        s += x;
    return s;
}

bool diagram_contains(const Partition& big, const Partition& small)
{
    if (small.size() > big.size())
        return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i])
            return false;
    return true;
}

std::optional<Mismatch> natural(const std::string& where, const TruncatedSeries& s)
{
    if (auto bad = s.first_non_natural())
        return Mismatch{where, to_string(bad->first, s.alphabet()), "nonnegative integer", rational_string(bad->second)};
    return std::nullopt;
}

std::optional<Mismatch> natural(const std::string& where, const DirichletTable& t)
{
    for (const auto& [n, c] : t.coeffs)
        if (c.get_den() != 1 || c < 0)
            return Mismatch{where, "n=" + std::to_string(n), "nonnegative integer", rational_string(c)};
    return std::nullopt;
}

// ------------------------------------------------------------------ suites

void hey_oracle(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(4);
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const auto model = oracle::chain_free_model(q, b + 1, m);
            ctx.check(compare("free rank " + std::to_string(m) + " over F_" + std::to_string(q) + "[t]/(t^"
                                  + std::to_string(b + 1) + ")",
                              oracle::empirical_zeta(model, b, std::nullopt),
                              hey::hey_product(single_entry(q, 1, m), b)));
        }
}

void moebius(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(8);
    std::mt19937_64 rng(ctx.options.seed);
    const std::uint32_t qs[] = {2, 3, 4, 5, 7, 9};
    const auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };
    for (int t = 0; t < 20; ++t) {
        hey::SemisimpleData data;
        const std::uint32_t k = pick(1, 3);
        std::string where = "data";
        for (std::uint32_t i = 0; i < k; ++i) {
            hey::SemisimpleEntry e{"z" + std::to_string(i + 1), qs[pick(0, 5)], pick(1, 2), pick(0, 4)};
            where += " (" + std::to_string(e.q) + "," + std::to_string(e.r) + "," + std::to_string(e.m) + ")";
            data.entries.push_back(e);
        }
        const auto prod = hey::hey_product(data, b) * hey::moebius_inverse_series(data, b);
        ctx.check(compare(where, TruncatedSeries::one(data.alphabet(), b), prod));
    }
}

void hereditary_oracle(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(3);
    for (const auto& [order, module] : hereditary_configs()) {
        const std::uint32_t c = (b + order.n) / order.n;
        const auto model = oracle::triangular_model(order.q, order.n, c, module.columns());
        if (!ctx.check(compare(config_string(order, module), oracle::empirical_two_variable(model, b),
                               hereditary::brz_two_variable(order, module, b))))
            return;
    }
}

void brs(Ctx& ctx)
{
    for (const auto& [order, module] : hereditary_configs()) {
        const std::string where = config_string(order, module);
        const std::uint32_t b0 = hereditary::brs_degree_bound(order, module);
        const auto f0 = hereditary::brs_F(order, module, b0);
        const auto f1 = hereditary::brs_F(order, module, b0 + 2);
        for (const auto* f : {&f0, &f1})
            for (const auto& [m, c] : f->terms())
                if (c.get_den() != 1) {
                    ctx.check(Mismatch{where, to_string(m, f->alphabet()), "integer", rational_string(c)});
                    return;
                }
        if (f1.max_degree() >= b0) {
            ctx.check(Mismatch{where, "z-degree", "< " + std::to_string(b0), std::to_string(f1.max_degree())});
            return;
        }
        if (!ctx.check(compare(where + " (degree stabilization)", f0, f1.truncated(b0))))
            return;
    }
}

void q_partition(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(10);
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t r = 0; r <= 6; ++r) {
            std::vector<Integer> total(r + 1, 0);
            for (std::uint32_t m = 0; m <= r; ++m) {
                const Integer g = qcomb::gaussian_binomial(r, m, q);
                const auto qm = hereditary::hermite_Q(m, r, q);
                for (std::size_t i = 0; i < qm.size(); ++i)
                    total.at(i) += g * qm[i];
            }
            std::vector<Integer> one(r + 1, 0);
            one[0] = 1;
            const std::string where = "q=" + std::to_string(q) + " r=" + std::to_string(r);
            if (!ctx.check(compare(where + " sum of Q", one, total, "v^")))
                return;
            const Alphabet v = single_alphabet("v", q, 1);
            const auto solomon = hereditary::solomon_hey_factor(r, q, b);
            for (std::uint32_t m = 0; m <= r; ++m) {
                const auto qm = hereditary::hermite_Q(m, r, q);
                const std::vector<Rational> qr(qm.begin(), qm.end());
                const auto qs = TruncatedSeries::from_coefficients(v, b, 0, qr);
                if (!ctx.check(compare(where + " m=" + std::to_string(m) + " orbit sum", qs * solomon,
                                       hereditary::hermite_orbit_sum(m, r, q, b))))
                    return;
            }
        }
}

void lustig(Ctx& ctx)
{
    const std::uint32_t i_max = ctx.size(12);
    for (std::uint32_t q : {2u, 3u}) {
        const std::string where = "q=" + std::to_string(q);
        const auto res = prolif::lustig_coeffs(q, i_max);
        if (!ctx.check(compare(where + " product vs partition formula", res.partition, res.product, "x^")))
            return;
        const std::uint32_t ob = std::min<std::uint32_t>(4, i_max);
        const auto counts = single_coefficients(oracle::empirical_zeta(oracle::local2d_model(q, ob + 1), ob, std::nullopt));
        const std::vector<Integer> head(res.partition.begin(), res.partition.begin() + ob + 1);
        if (!ctx.check(compare(where + " oracle ideal counts", head, counts, "x^")))
            return;
    }
}

void rossmann(Ctx& ctx)
{
    const auto res = prolif::rossmann_coeffs(ctx.options.max.value_or(64));
    ctx.check(compare("zeta product vs Euler product", res.zeta_product, res.euler_product));
}

void lifted(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(6);
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const std::string where = "DVR q=" + std::to_string(q) + " m=" + std::to_string(m);
            const auto base = prolif::SliceBase::dvr(q, m);
            const auto sum = prolif::proliferation_sum(base, b);
            if (!ctx.check(compare(where + " single sliver", sum, prolif::single_sliver(base, b))))
                return;
            if (!ctx.check(compare(where + " lifted Hey", sum, prolif::lifted_hey(single_entry(q, 1, m), {0}, b))))
                return;
        }
}

void voll(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(5);
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const auto data = single_entry(q, 1, m);
            if (!ctx.check(compare("semisimple q=" + std::to_string(q) + " m=" + std::to_string(m),
                                   hey::hey_product(data, b),
                                   prolif::proliferation_sum(prolif::SliceBase::semisimple(data), b))))
                return;
        }
}

std::vector<prolif::ChainData> dvr_chains(std::uint32_t bound, std::uint32_t max_steps)
{
    std::vector<prolif::ChainData> out;
    std::vector<std::uint32_t> qs;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
        if (qs.empty() || qs.back() != 0) {
            prolif::ChainData c;
            c.tops.assign(qs.size() + 1, {1});
            for (auto x : qs)
                c.quotients.push_back({x});
            out.push_back(std::move(c));
        }
        if (qs.size() == max_steps)
            return;
        const auto j = static_cast<std::uint32_t>(qs.size());
        for (std::uint32_t x = 0; used + (j + 1) * x <= bound; ++x) {
            qs.push_back(x);
            rec(used + (j + 1) * x);
            qs.pop_back();
        }
    };
    rec(0);
    return out;
}

void fiber(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(3);
    const auto model = oracle::local2d_model(2, b + 1);
    const std::size_t u = model.generator("u");
    const auto base = prolif::SliceBase::dvr(2, 1);
    TruncatedSeries total(model.alphabet, b);
    for (const auto& chain : dvr_chains(b, 2)) {
        std::string where = "chain quotients";
        for (const auto& q : chain.quotients)
            where += " " + std::to_string(q[0]);
        TruncatedSeries actual(model.alphabet, b);
        for (const auto& x : oracle::fiber_enumerate(model, u, chain, b))
            actual.add_term(oracle::composition_class(model, x), 1);
        if (!ctx.check(compare(where, prolif::fundamental_fiber_product(base, chain, b), actual)))
            return;
    }
    for (const auto& [key, s] : oracle::fiber_sums(model, u, b))
        total += s;
    ctx.check(compare("union of fibres", oracle::empirical_zeta(model, b, std::nullopt), total));
}

void skew_poly(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(3);
    const hereditary::OrderSpec order{2, 2};
    const auto base = prolif::SliceBase::hereditary(order, hereditary::ModuleSpec(order, {1, 2}));
    const auto sum = prolif::proliferation_sum(base, b);
    const auto model = oracle::skew_poly_model(2, 2, b + 1, {1, 2});
    if (!ctx.check(compare("oracle over the skew polynomial model", sum, oracle::empirical_zeta(model, b, std::nullopt))))
        return;
    const hey::SemisimpleData slice{{{"z1", 2, 1, 1}, {"z2", 2, 1, 1}}};
    ctx.check(compare("lifted Hey with the 2-cycle", sum, prolif::lifted_hey(slice, {1, 0}, b)));
}

void brs_prolif(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(3);
    const hereditary::OrderSpec order{2, 2};
    const auto base = prolif::SliceBase::hereditary(order, hereditary::ModuleSpec(order, {1, 2}));
    const auto f = prolif::brs_factored_prolif(base, b);
    ctx.check(compare("prefactor * remainder", prolif::proliferation_sum(base, b), f.prefactor * f.remainder));
}

void integrality(Ctx& ctx)
{
    const std::uint32_t b = ctx.size(4);
    std::mt19937_64 rng(ctx.options.seed);
    for (int t = 0; t < 5; ++t) {
        hey::SemisimpleData data;
        for (std::uint32_t i = 0; i < 2; ++i)
            data.entries.push_back({"z" + std::to_string(i + 1), static_cast<std::uint32_t>(2 + rng() % 4), 1,
                                    static_cast<std::uint32_t>(rng() % 4)});
        if (!ctx.check(natural("hey product", hey::hey_product(data, b))))
            return;
        if (!ctx.check(natural("lifted Hey (2-cycle)", prolif::lifted_hey(data, {1, 0}, b))))
            return;
        if (!ctx.check(natural("proliferation over a semisimple base (2-cycle)",
                               prolif::proliferation_sum(prolif::SliceBase::semisimple(data, {1, 0}), b))))
            return;
    }
    for (const auto& [order, module] : hereditary_configs()) {
        if (order.n > 2)
            continue;
        const std::string where = config_string(order, module);
        if (!ctx.check(natural(where + " two-variable", hereditary::brz_two_variable(order, module, b))))
            return;
        if (!ctx.check(natural(where + " total", hereditary::total_zeta(order, module, b))))
            return;
        for (const auto& [top, s] : hereditary::top_slices(order, hereditary::brz_two_variable(order, module, b)))
            if (!ctx.check(natural(where + " partial " + list_string(top),
                                   hereditary::partial_zeta(order, module, top, b))))
                return;
        const auto base = prolif::SliceBase::hereditary(order, module);
        if (!ctx.check(natural(where + " proliferation", prolif::proliferation_sum(base, std::min(b, 3u)))))
            return;
    }
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const auto base = prolif::SliceBase::dvr(q, m);
            if (!ctx.check(natural("DVR single sliver", prolif::single_sliver(base, b))))
                return;
            if (!ctx.check(natural("hom-slice Dirichlet", prolif::hom_slice_dirichlet(q, 1, m, 1, 256))))
                return;
        }
    const auto model = oracle::local2d_model(2, b + 1);
    for (const auto& chain : dvr_chains(b, 2))
        if (!ctx.check(natural("fibre product", prolif::fundamental_fiber_product(prolif::SliceBase::dvr(2, 1), chain, b))))
            return;
    for (const auto& v : {prolif::lustig_coeffs(3, 12).product, prolif::rossmann_coeffs(256).zeta_product})
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 0 && !ctx.check(Mismatch{"counting function", "n=" + std::to_string(i), ">= 0", v[i].get_str()}))
                return;
}

void hall(Ctx& ctx)
{
    std::map<std::tuple<std::uint32_t, Partition, Partition, Partition>, Integer> cache;
    const auto hall_at = [&](std::uint32_t q, const Partition& a, const Partition& b, const Partition& c) {
        auto key = std::make_tuple(q, a, b, c);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, oracle::hall_number(q, a, b, c)).first;
        return it->second;
    };

    const std::vector<std::pair<std::uint32_t, Partition>> instances = {
        {2, {1, 1}}, {2, {2, 1}}, {2, {2, 2}}, {2, {3, 1}}, {2, {2, 1, 1}}, {3, {1, 1}}, {3, {2, 1}}};
    for (const auto& [q, a] : instances) {
        const std::uint32_t na = weight(a);
        const Alphabet z = single_alphabet("z", q, 1);
        const std::string where = "q=" + std::to_string(q) + " A=" + list_string(a);
        for (std::uint32_t k = 0; k <= na; ++k)
            for (const auto& c : partitions(k)) {
                TruncatedSeries summed(z, na);
                for (const auto& bq : partitions(na - k))
                    summed.add_term(Monomial(std::vector<std::uint32_t>{na - k}), Rational(hall_at(q, a, bq, c)));
                if (!ctx.check(compare(where + " C=" + list_string(c), oracle::chain_partial_zeta(q, a, c), summed)))
                    return;
            }

        // Chains T_0 < ... < T_s = A with s <= 3 and prescribed quotient types.
        std::vector<Partition> tops{a};
        std::vector<Partition> quots;
        std::function<bool()> rec = [&]() -> bool {
            if (!quots.empty()) {
                std::vector<std::vector<std::uint32_t>> t(tops.rbegin(), tops.rend());
                std::vector<std::vector<std::uint32_t>> qv(quots.rbegin(), quots.rend());
                Integer product = 1;
                for (std::size_t j = 0; j < qv.size(); ++j)
                    product *= hall_at(q, t[j + 1], qv[j], t[j]);
                std::string w = where + " chain";
                for (const auto& p : t)
                    w += " " + list_string(p);
                if (!ctx.check(compare(w, {product}, {oracle::count_chains(q, t, qv)}, "count")))
                    return false;
            }
            if (quots.size() == 3)
                return true;
            const Partition upper = tops.back();
            const std::uint32_t nu = weight(upper);
            for (std::uint32_t k = 0; k < nu; ++k)
                for (const auto& lower : partitions(k)) {
                    if (!diagram_contains(upper, lower))
                        continue;
                    for (const auto& bq : partitions(nu - k)) {
                        if (!diagram_contains(upper, bq))
                            continue;
                        tops.push_back(lower);
                        quots.push_back(bq);
                        const bool ok = rec();
                        tops.pop_back();
                        quots.pop_back();
                        if (!ok)
                            return false;
                    }
                }
            return true;
        };
        if (!rec())
            return;
    }
}

struct Entry {
    SuiteInfo info;
    void (*run)(Ctx&);
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = {
        {{1, "hey-oracle", "Hey product vs submodule counts of free modules over F_q[t]/(t^c)"}, hey_oracle},
        {{2, "moebius", "Hey product times its Moebius inverse is 1"}, moebius},
        {{3, "hereditary-oracle", "two-variable zeta vs enumeration over the triangular model"}, hereditary_oracle},
        {{4, "brs", "BRS F is an integer polynomial of stable degree"}, brs},
        {{5, "q-partition", "Gaussian-weighted Q sums to 1; orbit sum = Q times Solomon-Hey factor"}, q_partition},
        {{6, "lustig", "ideal counts of F_q[[u,t]]: product, partition formula, oracle"}, lustig},
        {{7, "rossmann", "ideal counts of Z[[t]]: zeta product vs Euler product"}, rossmann},
        {{8, "lifted-hey", "single sliver = lifted Hey = proliferation sum over DVR bases"}, lifted},
        {{9, "voll", "proliferation over a semisimple base vs Hey product"}, voll},
        {{10, "fiber", "fibre product vs oracle fibres over F_2[[u,t]]"}, fiber},
        {{11, "skew-poly", "proliferation over the hereditary base vs oracle and lifted Hey"}, skew_poly},
        {{12, "brs-prolif", "BRS-factored proliferation vs proliferation sum"}, brs_prolif},
        {{13, "integrality", "engine outputs have nonnegative integer coefficients"}, integrality},
        {{14, "hall", "Hall numbers and chain counts vs direct enumeration"}, hall},
    };
    return entries;
}

} // namespace

const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options)
{
    for (const auto& e : registry()) {
        if (e.info.name != name)
            continue;
        SuiteResult result;
        result.id = e.info.id;
        result.name = e.info.name;
        Ctx ctx{options, result};
        try {
            e.run(ctx);
        } catch (const std::exception& ex) {
            result.error = ex.what();
        }
        return result;
    }
    throw SchemaError("unknown verify suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const SuiteOptions& options)
{
    std::vector<SuiteResult> out;
    for (const auto& e : registry())
        out.push_back(run_suite(e.info.name, options));
    return out;
}

std::optional<Mismatch> compare(const std::string& where, const TruncatedSeries& expected,
                                const TruncatedSeries& actual)
{
    if (expected.alphabet().size() != actual.alphabet().size())
        return Mismatch{where, "alphabet size", std::to_string(expected.alphabet().size()),
                        std::to_string(actual.alphabet().size())};
    const std::uint32_t bound = std::min(expected.bound(), actual.bound());
    std::map<Monomial, std::pair<Rational, Rational>> joint;
    for (const auto& [m, c] : expected.terms())
        if (m.weighted_degree(expected.alphabet()) <= bound)
            joint[m].first = c;
    for (const auto& [m, c] : actual.terms())
        if (m.weighted_degree(expected.alphabet()) <= bound)
            joint[m].second = c;
    for (const auto& [m, cs] : joint)
        if (cs.first != cs.second)
            return Mismatch{where, to_string(m, expected.alphabet()), rational_string(cs.first),
                            rational_string(cs.second)};
    return std::nullopt;
}

std::optional<Mismatch> compare(const std::string& where, const std::vector<Integer>& expected,
                                const std::vector<Integer>& actual, std::string_view index_name)
{
    const std::size_t n = std::max(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Integer e = i < expected.size() ? expected[i] : Integer(0);
        const Integer a = i < actual.size() ? actual[i] : Integer(0);
        if (e != a)
            return Mismatch{where, std::string(index_name) + (index_name.ends_with('^') ? "" : "=") + std::to_string(i),
                            e.get_str(), a.get_str()};
    }
    return std::nullopt;
}

nlohmann::json to_json(const SuiteResult& result)
{
    nlohmann::json j{{"id", result.id}, {"suite", result.name}, {"passed", result.passed()}, {"checks", result.checks}};
    if (result.mismatch)
        j["mismatch"] = {{"where", result.mismatch->where},
                         {"monomial", result.mismatch->monomial},
                         {"expected", result.mismatch->expected},
                         {"actual", result.mismatch->actual}};
    if (!result.error.empty())
        j["error"] = result.error;
    return j;
}

std::string to_line(const SuiteResult& result)
{
    std::string s = std::string(result.passed() ? "PASS" : "FAIL") + "  " + std::to_string(result.id) + " "
        + result.name + " (" + std::to_string(result.checks) + " checks)";
    if (result.mismatch)
        s += ": " + result.mismatch->where + " at " + result.mismatch->monomial + ": expected "
            + result.mismatch->expected + ", got " + result.mismatch->actual;
    if (!result.error.empty())
        s += ": error: " + result.error;
    return s;
}

} // namespace brzeta::verify
