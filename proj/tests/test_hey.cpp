#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brzeta/errors.hpp"
#include "brzeta/hey.hpp"
#include "brzeta/oracle.hpp"
#include "support.hpp"

using namespace brzeta;

TEST_CASE("Hey product of one simple is a product of geometric series")
{
    for (std::uint32_t q : {2u, 3u, 5u})
        for (std::uint32_t m = 0; m <= 4; ++m) {
            std::vector<Integer> expected{1};
            for (std::uint32_t j = 0; j < m; ++j)
                expected = support::mul(expected, support::geometric(support::power(q, j), 1, 7), 7);
            expected.resize(8, 0);
            CHECK(support::coeffs(hey::hey_product({{{"z", q, 1, m}}}, 7)) == expected);
        }
    CHECK(support::coeffs(hey::hey_product({{{"z", 2, 1, 1}}}, 2)) == support::ints({1, 1, 1}));
    CHECK(support::coeffs(hey::hey_product({{{"z", 2, 1, 2}}}, 3)) == support::ints({1, 3, 7, 15}));
}

TEST_CASE("Hey product counts submodules of free modules over truncated polynomial rings")
{
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t m = 1; m <= 2; ++m) {
            const auto model = oracle::chain_free_model(q, 4, m);
            CHECK(support::coeffs(oracle::empirical_zeta(model, 3, std::nullopt))
                  == support::coeffs(hey::hey_product({{{"z", q, 1, m}}}, 3)));
        }
}

TEST_CASE("several simples factor independently")
{
    const hey::SemisimpleData data{{{"a", 2, 1, 2}, {"b", 3, 2, 1}}};
    const auto p = hey::hey_product(data, 4);
    const auto a = hey::hey_product({{{"a", 2, 1, 2}}}, 4);
    const auto b = hey::hey_product({{{"b", 3, 2, 1}}}, 4);
    for (std::uint32_t i = 0; i <= 4; ++i)
        for (std::uint32_t j = 0; i + j <= 4; ++j)
            CHECK(p.coefficient(support::mono({i, j}))
                  == a.coefficient(support::mono({i})) * b.coefficient(support::mono({j})));
    CHECK(data.alphabet()[1].norm() == 9);
}

TEST_CASE("Moebius inverse cancels the Hey product")
{
    std::mt19937 rng(9);
    for (int t = 0; t < 15; ++t) {
        hey::SemisimpleData data;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i)
            data.entries.push_back({"z" + std::to_string(i + 1), static_cast<std::uint32_t>(2 + rng() % 4), 1,
                                    static_cast<std::uint32_t>(rng() % 4)});
        const auto inv = hey::moebius_inverse_series(data, 8);
        CHECK(hey::hey_product(data, 8) * inv == TruncatedSeries::one(data.alphabet(), 8));
        CHECK(inv.max_degree() <= 9);
    }
    CHECK(support::coeffs(hey::moebius_inverse_series({{{"z", 2, 1, 2}}}, 3)) == support::ints({1, -3, 2, 0}));
}

TEST_CASE("semisimple data documents")
{
    const auto one = hey::data_from_json(nlohmann::json::parse(R"({"entries":[{"q":2,"r":1,"m":1}]})"));
    CHECK(one.entries.at(0).label == "z");
    const auto two = hey::data_from_json(nlohmann::json::parse(R"({"entries":[{"q":2,"m":1},{"q":3,"m":2}]})"));
    CHECK(two.entries.at(0).label == "z1");
    CHECK(two.entries.at(1).label == "z2");
    CHECK(two.entries.at(1).r == 1);
    CHECK(hey::data_from_json(hey::to_json(two)).entries.size() == 2);
    CHECK_THROWS_AS(hey::data_from_json(nlohmann::json::parse(R"({"entries":[{"m":1}]})")), SchemaError);
    CHECK_THROWS_AS(hey::data_from_json(nlohmann::json::parse(R"([1,2])")), SchemaError);
}
