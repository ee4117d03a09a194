#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "brzeta/errors.hpp"
#include "brzeta/gfq.hpp"
#include "brzeta/qcomb.hpp"

using namespace brzeta;
using gfq::Field;
using gfq::Subspace;
using gfq::Vector;

namespace {

Vector random_vector(const Field& f, std::size_t n, std::mt19937& rng)
{
    Vector v(n);
    for (auto& x : v)
        x = static_cast<gfq::Elem>(rng() % f.q());
    return v;
}

} // namespace

TEST_CASE("field axioms")
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
        const Field f = Field::make(q);
        CAPTURE(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
    CHECK_THROWS_AS(Field::make(6), StructuralError);
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), StructuralError); // x^2 + 1 = (x+1)^2
    CHECK(Field::with_modulus(5, {2, 0, 1}).q() == 25);
}

TEST_CASE("echelon form is canonical")
{
    std::mt19937 rng(1);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const Field f = Field::make(q);
        for (int t = 0; t < 20; ++t) {
            std::vector<Vector> gens;
            for (int i = 0; i < 3; ++i)
                gens.push_back(random_vector(f, 6, rng));
            const Subspace a = Subspace::span(f, 6, gens);
            // Same space from shuffled combinations.
            std::vector<Vector> mixed;
            for (int i = 0; i < 5; ++i) {
                Vector v(6, 0);
                for (const auto& g : gens) {
                    const auto c = static_cast<gfq::Elem>(rng() % q);
                    for (std::size_t k = 0; k < 6; ++k)
                        v[k] = f.add(v[k], f.mul(c, g[k]));
                }
                mixed.push_back(v);
            }
            mixed.insert(mixed.end(), gens.rbegin(), gens.rend());
            CHECK(Subspace::span(f, 6, mixed) == a);
            for (const auto& g : gens)
                CHECK(a.contains(f, g));
        }
    }
}

TEST_CASE("meet and join satisfy the dimension formula")
{
    std::mt19937 rng(2);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const Field f = Field::make(q);
        for (int t = 0; t < 30; ++t) {
            std::vector<Vector> ga, gb;
            for (int i = 0; i < 3; ++i) {
                ga.push_back(random_vector(f, 5, rng));
                gb.push_back(random_vector(f, 5, rng));
            }
            const Subspace a = Subspace::span(f, 5, ga);
            const Subspace b = Subspace::span(f, 5, gb);
            const auto [meet, join] = gfq::lattice_ops(f, a, b);
            CHECK(a.dim() + b.dim() == meet.dim() + join.dim());
            CHECK(a.contains(f, meet));
            CHECK(b.contains(f, meet));
            CHECK(join.contains(f, a));
            CHECK(join.contains(f, b));
        }
    }
}

TEST_CASE("subspace enumeration is exhaustive and duplicate-free")
{
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const Field f = Field::make(q);
        for (std::size_t m = 0; m <= 4; ++m)
            for (std::size_t d = 0; d <= m; ++d) {
                const auto all = gfq::enumerate_subspaces(f, Subspace::full(m), d);
                const std::set<Subspace> distinct(all.begin(), all.end());
                CHECK(distinct.size() == all.size());
                CHECK(Integer(static_cast<unsigned long>(all.size())) == qcomb::gaussian_binomial(m, d, q));
                for (const auto& s : all)
                    CHECK(s.dim() == d);
            }
    }
}

TEST_CASE("enumeration inside a proper subspace stays inside it")
{
    const Field f = Field::make(3);
    const Subspace amb = Subspace::span(f, 5, std::vector<Vector>{{1, 2, 0, 0, 1}, {0, 1, 1, 2, 0}, {0, 0, 0, 1, 1}});
    const auto lines = gfq::enumerate_subspaces(f, amb, 1);
    CHECK(lines.size() == 13);
    for (const auto& l : lines)
        CHECK(amb.contains(f, l));
    CHECK(gfq::enumerate_subspaces(f, amb).size() == 1 + 13 + 13 + 1);
    CHECK_THROWS_AS(gfq::enumerate_subspaces(f, Subspace::full(8), std::nullopt, 1000), ResourceError);
    CHECK(gfq::subspace_count(4, std::nullopt, 2) == 1 + 15 + 35 + 15 + 1);
}

TEST_CASE("chains inside a coordinate filtration")
{
    const Field f = Field::make(2);
    // W_1 = F^3 >= W_2 with W_2 <= V_2 = span(e1, e2): one chain per subspace of V_2.
    const auto two = gfq::enumerate_chains(f, gfq::FilteredSpace({3, 2}));
    CHECK(two.size() == 1 + 3 + 1);
    for (const auto& c : two) {
        CHECK(c.spaces.size() == 2);
        CHECK(c.degrees[0] + c.degrees[1] == 3);
        CHECK(c.degrees[1] == c.spaces[1].dim());
    }
    // Three steps: sum over W_2 <= V_2 of the subspaces of W_2 meet V_3.
    const auto three = gfq::enumerate_chains(f, gfq::FilteredSpace({3, 2, 1}));
    std::size_t expected = 0;
    for (const auto& w2 : gfq::enumerate_subspaces(f, gfq::FilteredSpace({3, 2, 1}).level(1)))
        expected += gfq::enumerate_subspaces(f, gfq::intersect(f, w2, gfq::FilteredSpace({3, 2, 1}).level(2))).size();
    CHECK(three.size() == expected);
    CHECK_THROWS_AS(gfq::FilteredSpace({1, 2}), StructuralError);
}
