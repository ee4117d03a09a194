#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brzeta/errors.hpp"
#include "brzeta/hereditary.hpp"
#include "brzeta/hey.hpp"
#include "brzeta/oracle.hpp"
#include "brzeta/qcomb.hpp"
#include "support.hpp"

using namespace brzeta;
using hereditary::ModuleSpec;
using hereditary::OrderSpec;
using support::mono;

TEST_CASE("module shape")
{
    const OrderSpec order{2, 3};
    const ModuleSpec m(order, {3, 1, 2, 2});
    CHECK(m.columns() == std::vector<std::uint32_t>{1, 2, 2, 3});
    CHECK(m.flag_dims() == std::vector<std::uint32_t>{4, 3, 1});
    CHECK(m.row_colengths() == std::vector<std::uint32_t>{0, 1, 3});
    CHECK(m.top() == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(ModuleSpec::from_top(order, {1, 2, 1}).columns() == m.columns());
    CHECK_THROWS_AS(ModuleSpec(order, {4}), StructuralError);
    CHECK_THROWS_AS(ModuleSpec(order, {}), StructuralError);
}

TEST_CASE("chain length one reduces to the Hey product")
{
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t r = 1; r <= 3; ++r) {
            const OrderSpec order{q, 1};
            const auto total = hereditary::total_zeta(order, ModuleSpec(order, std::vector<std::uint32_t>(r, 1)), 4);
            CHECK(support::coeffs(total) == support::coeffs(hey::hey_product({{{"z", q, 1, r}}}, 4)));
        }
    const OrderSpec order{2, 1};
    const auto z = hereditary::brz_two_variable(order, ModuleSpec(order, {1, 1}), 3);
    CHECK(z.coefficient(mono({0, 2})) == 1);
    CHECK(z.coefficient(mono({3, 2})) == 15);
    CHECK(z.coefficient(mono({1, 1})) == 0);
}

TEST_CASE("two-variable zeta matches enumeration in the triangular model")
{
    const std::vector<std::pair<OrderSpec, std::vector<std::uint32_t>>> cases = {
        {{2, 2}, {1, 2}}, {{2, 2}, {2, 2}}, {{3, 2}, {1, 1, 2}}, {{2, 3}, {1, 3}}, {{2, 3}, {2}}};
    for (const auto& [order, cols] : cases) {
        const ModuleSpec m(order, cols);
        const std::uint32_t c = (3 + order.n) / order.n;
        const auto model = oracle::triangular_model(order.q, order.n, c, cols);
        CHECK(oracle::empirical_two_variable(model, 3) == hereditary::brz_two_variable(order, m, 3));
    }
}

TEST_CASE("two-variable zeta of the basic order of chain length two")
{
    const OrderSpec order{2, 2};
    const auto z = hereditary::brz_two_variable(order, ModuleSpec(order, {1, 2}), 3);
    CHECK(z.coefficient(mono({0, 0, 1, 1})) == 1);
    CHECK(z.coefficient(mono({0, 1, 2, 0})) == 1);
    CHECK(z.coefficient(mono({1, 0, 0, 2})) == 1);
    CHECK(z.coefficient(mono({1, 1, 1, 1})) == 5);
    CHECK(z.coefficient(mono({1, 2, 2, 0})) == 3);
    CHECK(z.coefficient(mono({2, 1, 0, 2})) == 3);
    CHECK(z.terms().size() == 6);
    CHECK(z.is_nonnegative_integral());
}

TEST_CASE("partial zeta selects one top class")
{
    const OrderSpec order{2, 2};
    const ModuleSpec m(order, {1, 2});
    const auto p = hereditary::partial_zeta(order, m, {1, 1}, 3);
    CHECK(p.coefficient(mono({0, 0})) == 1);
    CHECK(p.coefficient(mono({1, 1})) == 5);
    CHECK(p.terms().size() == 2);
    const auto model = oracle::triangular_model(2, 2, 2, {1, 2});
    CHECK(oracle::empirical_zeta(model, 3, std::vector<std::uint32_t>{1, 1}) == p);
    // Sum over all tops is the total zeta.
    TruncatedSeries sum(hereditary::class_alphabet(order), 3);
    for (const auto& [top, s] : hereditary::top_slices(order, hereditary::brz_two_variable(order, m, 3)))
        sum += hereditary::partial_zeta(order, m, top, 3);
    CHECK(sum == hereditary::total_zeta(order, m, 3));
}

TEST_CASE("chain polynomials of small filtrations")
{
    const auto f2 = gfq::Field::make(2);
    const auto full = hereditary::filtered_poly(f2, gfq::FilteredSpace({2, 2}));
    CHECK(full.coefficient(mono({2, 0})) == 1);
    CHECK(full.coefficient(mono({1, 1})) == 3);
    CHECK(full.coefficient(mono({0, 2})) == 1);
    const auto flag = hereditary::filtered_poly(f2, gfq::FilteredSpace({2, 1}));
    CHECK(flag.coefficient(mono({2, 0})) == 1);
    CHECK(flag.coefficient(mono({1, 1})) == 1);
    CHECK(flag.coefficient(mono({0, 2})) == 0);
    CHECK(hereditary::filtered_poly(f2, gfq::FilteredSpace({3})).coefficient(mono({3})) == 1);
}

TEST_CASE("orbit sums and the Q polynomials")
{
    const Alphabet v = single_alphabet("v", 2);
    CHECK(support::coeffs(hereditary::hermite_orbit_sum(0, 1, 2, 2)) == support::ints({0, 1, 1}));
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t r = 1; r <= 6; ++r) {
            std::vector<Integer> total(r + 1, 0);
            for (std::uint32_t m = 0; m <= r; ++m) {
                const auto qm = hereditary::hermite_Q(m, r, q);
                for (std::size_t i = 0; i < qm.size(); ++i)
                    total[i] += qcomb::gaussian_binomial(r, m, q) * qm[i];
            }
            std::vector<Integer> one(r + 1, 0);
            one[0] = 1;
            CHECK(total == one);
            for (std::uint32_t m = 0; m <= r; ++m) {
                const auto qm = hereditary::hermite_Q(m, r, q);
                const std::vector<Rational> qr(qm.begin(), qm.end());
                const Alphabet vq = single_alphabet("v", q);
                CHECK(TruncatedSeries::from_coefficients(vq, 10, 0, qr) * hereditary::solomon_hey_factor(r, q, 10)
                      == hereditary::hermite_orbit_sum(m, r, q, 10));
            }
        }
}

TEST_CASE("BRS polynomial times the rank factor gives the zeta function")
{
    for (const auto& [order, cols] : std::vector<std::pair<OrderSpec, std::vector<std::uint32_t>>>{
             {{2, 2}, {1, 2}}, {{3, 2}, {1, 2, 2}}, {{2, 3}, {1, 2, 3}}, {{2, 1}, {1, 1}}}) {
        const ModuleSpec m(order, cols);
        const std::uint32_t b0 = hereditary::brs_degree_bound(order, m);
        const auto f = hereditary::brs_F(order, m, b0);
        CHECK(f.is_integral());
        CHECK(f.max_degree() < b0);
        const std::uint32_t b = 4;
        const Alphabet doubled = hereditary::doubled_alphabet(order);
        // v -> z_1 ... z_n
        Monomial all(doubled.size());
        for (std::uint32_t i = 0; i < order.n; ++i)
            all[i] = 1;
        const std::vector<SubstitutionTarget> map{{1, all}};
        const auto rank_factor = substitute(hereditary::solomon_hey_factor(m.rank(), order.q, b), doubled, map, b);
        const auto fb = hereditary::brs_F(order, m, std::max(b0, b)).truncated(b);
        CHECK(rank_factor * fb == hereditary::brz_two_variable(order, m, b));
    }
    const OrderSpec order{2, 2};
    const auto f = hereditary::brs_F(order, ModuleSpec(order, {1, 2}), 6);
    CHECK(f.coefficient(mono({1, 1, 1, 1})) == 2);
    CHECK(f.terms().size() == 4);
}

TEST_CASE("module documents")
{
    const auto [order, m] = hereditary::spec_from_json(nlohmann::json::parse(R"({"q":3,"n":2,"columns":[2,1]})"));
    CHECK(order.q == 3);
    CHECK(m.columns() == std::vector<std::uint32_t>{1, 2});
    const auto back = hereditary::spec_from_json(hereditary::to_json(order, m));
    CHECK(back.second.columns() == m.columns());
    CHECK_THROWS_AS(hereditary::spec_from_json(nlohmann::json::parse(R"({"q":3,"n":2,"columns":[3]})")), SchemaError);
    CHECK_THROWS_AS(hereditary::spec_from_json(nlohmann::json::parse(R"({"q":3})")), SchemaError);
}
