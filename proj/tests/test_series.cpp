#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brzeta/errors.hpp"
#include "support.hpp"

using namespace brzeta;
using support::mono;

namespace {

Alphabet two_vars()
{
    return Alphabet({{"x", 2, 1, 1}, {"y", 3, 1, 1}});
}

TruncatedSeries random_series(const Alphabet& a, std::uint32_t bound, std::mt19937& rng, bool unit)
{
    TruncatedSeries s(a, bound);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (std::uint32_t i = 0; i <= bound; ++i)
        for (std::uint32_t j = 0; i + j <= bound; ++j)
            s.add_term(mono({i, j}), Rational(coef(rng), 1 + (rng() % 3)));
    if (unit)
        s.add_term(Monomial(2), Rational(1) - s.constant_term());
    return s;
}

// Plain dense multiplication over (i,j) pairs.
std::map<std::pair<unsigned, unsigned>, Rational> dense_product(const TruncatedSeries& a, const TruncatedSeries& b,
                                                                unsigned bound)
{
    std::map<std::pair<unsigned, unsigned>, Rational> out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (ma[0] + mb[0] + ma[1] + mb[1] <= bound)
                out[{ma[0] + mb[0], ma[1] + mb[1]}] += ca * cb;
    return out;
}

} // namespace

TEST_CASE("product agrees with dense multiplication")
{
    std::mt19937 rng(7);
    const Alphabet a = two_vars();
    for (int t = 0; t < 10; ++t) {
        const auto x = random_series(a, 5, rng, false);
        const auto y = random_series(a, 5, rng, false);
        const auto xy = x * y;
        const auto dense = dense_product(x, y, 5);
        for (const auto& [ij, c] : dense)
            CHECK(xy.coefficient(mono({ij.first, ij.second})) == c);
        for (const auto& [m, c] : xy.terms())
            CHECK(dense.at({m[0], m[1]}) == c);
    }
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(11);
    const Alphabet a = two_vars();
    for (int t = 0; t < 5; ++t) {
        const auto x = random_series(a, 4, rng, false);
        const auto y = random_series(a, 4, rng, false);
        const auto z = random_series(a, 4, rng, false);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x - x).is_zero());
        CHECK(x * TruncatedSeries::one(a, 4) == x);
    }
}

TEST_CASE("inverse is two-sided")
{
    std::mt19937 rng(3);
    const Alphabet a = two_vars();
    for (int t = 0; t < 5; ++t) {
        const auto x = random_series(a, 6, rng, true);
        const auto inv = invert(x);
        CHECK(x * inv == TruncatedSeries::one(a, 6));
        CHECK(inv * x == TruncatedSeries::one(a, 6));
    }
    TruncatedSeries c = TruncatedSeries::constant(a, 3, Rational(2, 3));
    CHECK(invert(c).constant_term() == Rational(3, 2));
    CHECK_THROWS_AS(invert(TruncatedSeries::term(a, 3, mono({1, 0}))), NonUnitError);
}

TEST_CASE("terms above the bound are dropped")
{
    const Alphabet a = single_alphabet("z", 2);
    TruncatedSeries s(a, 2);
    s.add_term(mono({3}), 5);
    CHECK(s.is_zero());
    const auto z = TruncatedSeries::term(a, 2, mono({1}));
    CHECK((z * z * z).is_zero());
    CHECK(s.truncated(1).bound() == 1);
    CHECK_THROWS_AS(s.truncated(3), StructuralError);
}

TEST_CASE("mixing alphabets is rejected")
{
    const auto a = TruncatedSeries::one(single_alphabet("z", 2), 2);
    const auto b = TruncatedSeries::one(single_alphabet("z", 3), 2);
    CHECK_THROWS_AS(a + b, StructuralError);
    CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("weight-zero entries do not count toward the bound")
{
    const Alphabet a = Alphabet::concat(single_alphabet("z", 2), single_alphabet("w", 2).with_weight(0));
    // w / (1 - z)
    TruncatedSeries s(a, 3);
    for (std::uint32_t k = 0; k <= 3; ++k)
        s.add_term(mono({k, 1}), 1);
    const auto slice = slice_coefficient(s, a.prefix(1), mono({1}));
    CHECK(support::coeffs(slice) == support::ints({1, 1, 1, 1}));
    CHECK(slice_coefficient(s, a.prefix(1), mono({0})).is_zero());
}

TEST_CASE("substitution is an algebra map")
{
    std::mt19937 rng(5);
    const Alphabet a = two_vars();
    const Alphabet t = single_alphabet("v", 2);
    // x -> 2v, y -> v^2 / 3
    const std::vector<SubstitutionTarget> map = {{2, mono({1})}, {Rational(1, 3), mono({2})}};
    for (int k = 0; k < 5; ++k) {
        const auto x = random_series(a, 4, rng, false);
        const auto y = random_series(a, 4, rng, false);
        const auto lhs = substitute(x * y, t, map, 4);
        const auto rhs = substitute(x, t, map, 4) * substitute(y, t, map, 4);
        CHECK(lhs == rhs);
    }
    const auto x = TruncatedSeries::term(a, 4, mono({1, 0}));
    CHECK_THROWS_AS(substitute(x, t, map, 6), StructuralError);
}

TEST_CASE("infinite product of geometric factors counts partitions")
{
    const Alphabet a = single_alphabet("z", 2);
    const std::uint32_t bound = 12;
    const auto p = product_eval(
        [&](std::uint32_t n) {
            TruncatedSeries f(a, bound);
            for (std::uint32_t k = 0; k * (n + 1) <= bound; ++k)
                f.add_term(mono({k * (n + 1)}), 1);
            return f;
        },
        [](std::uint32_t n) { return n + 1; }, a, bound);
    const auto c = support::coeffs(p);
    for (std::uint32_t n = 0; n <= bound; ++n)
        CHECK(c[n] == support::partitions(n, n).size());
}

TEST_CASE("a product whose factors never approach 1 is rejected")
{
    const Alphabet a = single_alphabet("z", 2);
    const auto one_plus_z = TruncatedSeries::one(a, 3) + TruncatedSeries::term(a, 3, mono({1}));
    CHECK_THROWS_AS(product_eval([&](std::uint32_t) { return one_plus_z; }, [](std::uint32_t) { return 1u; }, a, 3, 50),
                    PseudoConvergenceError);
}

TEST_CASE("Dirichlet specialization multiplies norms")
{
    const Alphabet a = two_vars();
    TruncatedSeries s(a, 3);
    s.add_term(mono({0, 0}), 1);
    s.add_term(mono({1, 0}), 2);
    s.add_term(mono({1, 1}), 5);
    s.add_term(mono({0, 2}), 7);
    const auto d = dirichlet_coeffs(s, 10);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 2);
    CHECK(d.at(6) == 5);
    CHECK(d.at(9) == 7);
    CHECK(d.at(4) == 0);
    CHECK(d.complete);
    const auto far = dirichlet_coeffs(s, 100);
    CHECK_FALSE(far.complete);
    CHECK_FALSE(far.warning.empty());
}

TEST_CASE("JSON round trip keeps exact rationals")
{
    const Alphabet a = two_vars();
    TruncatedSeries s(a, 4);
    s.add_term(mono({1, 2}), Rational(-7, 3));
    s.add_term(mono({0, 0}), Rational(1));
    s.add_term(mono({4, 0}), Rational(Integer("123456789012345678901234567890")));
    const auto back = series_from_json(to_json(s));
    CHECK(back == s);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"alphabet":[]})")), SchemaError);
}

TEST_CASE("monomial arithmetic")
{
    const auto m = mono({2, 1});
    CHECK(m.divisible_by(mono({1, 1})));
    CHECK_FALSE(m.divisible_by(mono({0, 2})));
    CHECK(m / mono({1, 0}) == mono({1, 1}));
    CHECK_THROWS_AS(m / mono({3, 0}), StructuralError);
    CHECK(m.pow(3) == mono({6, 3}));
    CHECK(m.norm(two_vars()) == 12);
    CHECK(to_string(TruncatedSeries::one(two_vars(), 2) + TruncatedSeries::term(two_vars(), 2, m, 1)) == "1");
}
