#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brzeta/errors.hpp"
#include "brzeta/oracle.hpp"
#include "brzeta/prolif.hpp"
#include "support.hpp"

using namespace brzeta;
using hereditary::ModuleSpec;
using hereditary::OrderSpec;
using prolif::SliceBase;
using support::mono;

namespace {

// Ideals of colength k in a two-dimensional regular local ring with residue
// field F_q: sum over partitions of k of q^{k - greatest part}.
Integer local_ideals(std::uint32_t q, std::uint32_t k)
{
    Integer total = 0;
    for (const auto& p : support::partitions(k, k))
        total += support::power(q, k - (p.empty() ? 0 : p.front()));
    return total;
}

SliceBase basic_order_base(std::vector<std::uint32_t> sigma = {})
{
    const OrderSpec order{2, 2};
    return SliceBase::hereditary(order, ModuleSpec(order, {1, 2}), std::move(sigma));
}

} // namespace

TEST_CASE("hom counts and the change of variable")
{
    const auto dvr = SliceBase::dvr(3, 2);
    CHECK(prolif::hom_count(dvr, {2}, {1}) == 9);
    CHECK(prolif::hom_count(dvr, {2}, {0}) == 1);
    // Constant sequence over a DVR slice: z -> q^{-m} (q^m)^{j+1} z^{j+1}.
    const auto map = prolif::change_of_variable(dvr, {{2}, {2}}, 1);
    REQUIRE(map.size() == 1);
    CHECK(map[0].scalar == 9);
    CHECK(map[0].target == mono({2}));
    const auto swap = SliceBase::semisimple({{{"a", 2, 1, 1}, {"b", 2, 1, 1}}}, {1, 0});
    CHECK(swap.sigma_power(0, 1) == 1);
    CHECK(swap.sigma_power(0, 2) == 0);
}

TEST_CASE("change of variable over the basic order with the transposition")
{
    const auto base = basic_order_base({1, 0});
    const auto map = prolif::change_of_variable(base, {{1, 1}, {1, 1}}, 1);
    REQUIRE(map.size() == 2);
    CHECK(map[0].scalar == 2);
    CHECK(map[0].target == mono({1, 1}));
    const auto id = prolif::change_of_variable(base, {{1, 1}}, 0);
    CHECK(id[1].scalar == 1);
    CHECK(id[1].target == mono({0, 1}));
}

TEST_CASE("semisimple partial zeta is a Gaussian binomial times a monomial")
{
    const Alphabet z = single_alphabet("z", 2);
    CHECK(support::coeffs(prolif::semisimple_partial_zeta(2, 1, 2, z, 0, 3)) == support::ints({0, 3, 0, 0}));
    CHECK(support::coeffs(prolif::semisimple_partial_zeta(3, 1, 2, z, 0, 3)) == support::ints({0, 0, 7, 0}));
}

TEST_CASE("fibres of slice classes")
{
    CHECK(SliceBase::dvr(2, 3).fibre() == std::vector<prolif::ClassVector>{{3}});
    const auto ss = SliceBase::semisimple({{{"a", 2, 1, 1}, {"b", 3, 1, 2}}});
    CHECK(ss.fibre().size() == 2 * 3);
    for (const auto& c : basic_order_base().fibre())
        CHECK(c[0] + c[1] == 2);
}

TEST_CASE("DVR slices: one sliver, the lifted Hey product and the full sum agree")
{
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const auto base = SliceBase::dvr(q, m);
            const auto sum = prolif::proliferation_sum(base, 5);
            CHECK(prolif::single_sliver(base, 5) == sum);
            CHECK(prolif::lifted_hey({{{"z", q, 1, m}}}, {0}, 5) == sum);
        }
    // Rank one: ideals of a two-dimensional regular local ring.
    const auto rank_one = support::coeffs(prolif::single_sliver(SliceBase::dvr(2, 1), 6));
    for (std::uint32_t k = 0; k <= 6; ++k)
        CHECK(rank_one[k] == local_ideals(2, k));
    CHECK(support::coeffs(prolif::single_sliver(SliceBase::dvr(2, 2), 4)) == support::ints({1, 3, 19, 99, 563}));
}

TEST_CASE("rank-two DVR slice against enumeration")
{
    // Free rank-two modules over F_2[[u,t]] are not covered by the finite
    // models; the rank-one case is, through the two-variable local model.
    const auto model = oracle::local2d_model(2, 5);
    CHECK(support::coeffs(oracle::empirical_zeta(model, 4, std::nullopt))
          == support::coeffs(prolif::single_sliver(SliceBase::dvr(2, 1), 4)));
}

TEST_CASE("proliferation over a semisimple base recovers the Hey product of the lift")
{
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 3; ++m)
            CHECK(support::coeffs(prolif::proliferation_sum(SliceBase::semisimple({{{"z", q, 1, m}}}), 5))
                  == support::coeffs(hey::hey_product({{{"z", q, 1, m}}}, 5)));
}

TEST_CASE("basic hereditary base: proliferation, enumeration and the lifted product")
{
    const auto sum = prolif::proliferation_sum(basic_order_base(), 3);
    const auto model = oracle::skew_poly_model(2, 2, 4, {1, 2});
    CHECK(oracle::empirical_zeta(model, 3, std::nullopt) == sum);
    const auto lifted = prolif::lifted_hey({{{"z1", 2, 1, 1}, {"z2", 2, 1, 1}}}, {1, 0}, 3);
    for (const auto& [m, c] : sum.terms())
        CHECK(lifted.coefficient(m) == c);
    CHECK(lifted.terms().size() == sum.terms().size());
    CHECK(sum.coefficient(mono({1, 1})) == 5);
    CHECK(sum.coefficient(mono({2, 1})) == 9);
}

TEST_CASE("factored proliferation")
{
    const auto f = prolif::brs_factored_prolif(basic_order_base(), 3);
    CHECK(f.prefactor * f.remainder == prolif::proliferation_sum(basic_order_base(), 3));
    CHECK(f.prefactor.coefficient(mono({1, 1})) == 3);
}

TEST_CASE("fibre products match enumerated fibres")
{
    const auto model = oracle::local2d_model(2, 4);
    const auto u = model.generator("u");
    const auto base = SliceBase::dvr(2, 1);
    const std::vector<prolif::ChainData> chains = {
        {{{1}}, {}},
        {{{1}, {1}}, {{1}}},
        {{{1}, {1}}, {{2}}},
        {{{1}, {1}, {1}}, {{0}, {1}}},
        {{{1}, {1}, {1}}, {{1}, {1}}},
    };
    for (const auto& chain : chains) {
        TruncatedSeries enumerated(model.alphabet, 3);
        for (const auto& x : oracle::fiber_enumerate(model, u, chain, 3))
            enumerated.add_term(oracle::composition_class(model, x), 1);
        CHECK(prolif::fundamental_fiber_product(base, chain, 3) == enumerated);
    }
    CHECK_THROWS_AS(prolif::fundamental_fiber_product(base, {{{2}}, {}}, 3), StructuralError);
}

TEST_CASE("Lustig counts")
{
    const auto res = prolif::lustig_coeffs(2, 8);
    CHECK(res.partition == res.product);
    for (std::uint32_t k = 0; k <= 8; ++k)
        CHECK(res.partition[k] == local_ideals(2, k));
    CHECK(std::vector<Integer>(res.partition.begin(), res.partition.begin() + 6) == support::ints({1, 1, 3, 7, 19, 43}));
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const auto r = prolif::lustig_coeffs(q, 6);
        for (std::uint32_t k = 0; k <= 6; ++k)
            CHECK(r.product[k] == local_ideals(q, k));
    }
}

TEST_CASE("Rossmann counts are multiplicative over local factors")
{
    const auto res = prolif::rossmann_coeffs(200);
    CHECK(res.zeta_product == res.euler_product);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        Integer expected = 1;
        std::uint64_t rest = n;
        for (std::uint64_t p = 2; p <= rest; ++p) {
            std::uint32_t k = 0;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            if (k > 0)
                expected *= local_ideals(static_cast<std::uint32_t>(p), k);
        }
        CHECK(res.zeta_product[n] == expected);
    }
    CHECK(res.zeta_product[4] == 3);
    CHECK(res.zeta_product[64] == 115);
    CHECK_THROWS_AS(prolif::rossmann_coeffs(2'000'000), ResourceError);
}

TEST_CASE("Dirichlet coefficients over a hom-slice")
{
    const auto d = prolif::hom_slice_dirichlet(2, 1, 1, 1, 64);
    for (std::uint32_t k = 0; k <= 6; ++k)
        CHECK(d.at(std::uint64_t{1} << k) == local_ideals(2, k));
    CHECK(d.at(3) == 0);
    // Two equal residue fields double every factor.
    const auto two = prolif::hom_slice_dirichlet(3, 1, 1, 2, 27);
    CHECK(two.at(3) == 2);
}

TEST_CASE("factor of a rank-one slice fixed by the permutation")
{
    // (1 - q^{j l} v^{j+1})^{-1} for l = 1.
    CHECK(support::coeffs(prolif::zjv_factor(1, 2, 1, 4)) == support::ints({1, 0, 2, 0, 4}));
    CHECK(support::coeffs(prolif::zjv_factor(1, 3, 0, 3)) == support::ints({1, 1, 1, 1}));
}

TEST_CASE("proliferation documents")
{
    const auto spec = prolif::spec_from_json(nlohmann::json::parse(
        R"({"base":{"kind":"hereditary","q":2,"n":2,"columns":[1,2]},"sigma":[2,1],"truncate":4})"));
    CHECK(spec.truncate == 4u);
    CHECK(spec.base.sigma() == std::vector<std::uint32_t>{1, 0});
    CHECK(spec.base.kind() == prolif::BaseKind::hereditary);
    CHECK(prolif::spec_from_json(nlohmann::json::parse(R"({"base":{"kind":"dvr","q":3,"m":2}})")).base.kind()
          == prolif::BaseKind::dvr);
    CHECK_THROWS_AS(prolif::sigma_from_json(nlohmann::json::parse("[1,1]"), 2), SchemaError);
    CHECK_THROWS_AS(prolif::sigma_from_json(nlohmann::json::parse("[0,1]"), 2), SchemaError);
    CHECK_THROWS_AS(prolif::spec_from_json(nlohmann::json::parse(R"({"base":{"kind":"torus"}})")), SchemaError);
}
