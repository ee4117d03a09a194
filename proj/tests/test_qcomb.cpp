#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "brzeta/qcomb.hpp"
#include "support.hpp"

using namespace brzeta;

namespace {

// Subspaces of F_p^m of dimension d counted by brute force: ordered bases
// over ordered bases of F_p^d.
Integer brute_subspaces(unsigned p, unsigned m, unsigned d)
{
    const auto independent_tuples = [p](unsigned dim, unsigned len) {
        // vectors of F_p^dim as integers; rank checked by span size
        unsigned total = 1;
        for (unsigned i = 0; i < dim; ++i)
            total *= p;
        Integer count = 0;
        std::vector<unsigned> pick(len, 0);
        const auto add = [&](unsigned a, unsigned b) {
            unsigned out = 0, scale = 1;
            for (unsigned i = 0; i < dim; ++i, a /= p, b /= p, scale *= p)
                out += ((a % p + b % p) % p) * scale;
            return out;
        };
        const auto times = [&](unsigned a, unsigned c) {
            unsigned out = 0;
            for (unsigned k = 0; k < c; ++k)
                out = add(out, a);
            return out;
        };
        std::function<void(unsigned, std::set<unsigned>)> rec = [&](unsigned i, std::set<unsigned> span) {
            if (i == len) {
                ++count;
                return;
            }
            for (unsigned v = 0; v < total; ++v) {
                if (span.contains(v))
                    continue;
                std::set<unsigned> next;
                for (unsigned s : span)
                    for (unsigned c = 0; c < p; ++c)
                        next.insert(add(s, times(v, c)));
                rec(i + 1, next);
            }
        };
        rec(0, {0});
        return count;
    };
    return independent_tuples(m, d) / independent_tuples(d, d);
}

} // namespace

TEST_CASE("Gaussian binomials count subspaces")
{
    for (unsigned p : {2u, 3u})
        for (unsigned m = 0; m <= 3; ++m)
            for (unsigned d = 0; d <= m; ++d)
                CHECK(qcomb::gaussian_binomial(m, d, p) == brute_subspaces(p, m, d));
    CHECK(qcomb::gaussian_binomial(2, 1, 2) == 3);
    CHECK(qcomb::gaussian_binomial(4, 2, 2) == 35);
    CHECK(qcomb::gaussian_binomial(3, 4, 2) == 0);
    CHECK(qcomb::gaussian_binomial(3, -1, 2) == 0);
}

TEST_CASE("Gaussian binomials satisfy the q-Pascal rule and symmetry")
{
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u})
        for (std::int64_t m = 1; m <= 9; ++m)
            for (std::int64_t d = 0; d <= m; ++d) {
                CHECK(qcomb::gaussian_binomial(m, d, q)
                      == qcomb::gaussian_binomial(m - 1, d - 1, q)
                          + ipow(Integer(static_cast<unsigned long>(q)), d) * qcomb::gaussian_binomial(m - 1, d, q));
                CHECK(qcomb::gaussian_binomial(m, d, q) == qcomb::gaussian_binomial(m, m - d, q));
            }
}

TEST_CASE("Moebius values of the subspace lattice sum to zero over an interval")
{
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::uint32_t m = 1; m <= 7; ++m) {
            Integer s = 0;
            for (std::uint32_t d = 0; d <= m; ++d)
                s += qcomb::gaussian_binomial(m, d, q) * qcomb::subspace_moebius(d, q);
            CHECK(s == 0);
        }
    CHECK(qcomb::subspace_moebius(0, 2) == 1);
    CHECK(qcomb::subspace_moebius(1, 2) == -1);
    CHECK(qcomb::subspace_moebius(2, 3) == 3);
}

TEST_CASE("Cauchy product polynomial expands by the q-binomial theorem")
{
    for (std::uint64_t q : {2u, 3u})
        for (std::uint32_t m = 0; m <= 6; ++m) {
            std::vector<Integer> direct{1};
            for (std::uint32_t j = 0; j < m; ++j)
                direct = support::mul(direct, {Integer(1), Integer(-support::power(q, j))}, m);
            CHECK(qcomb::cauchy_poly(m, q) == direct);
        }
}

TEST_CASE("partition counts by greatest part")
{
    for (std::uint32_t i = 0; i <= 12; ++i) {
        std::vector<Integer> by_largest(i + 1, 0);
        for (const auto& p : support::partitions(i, i))
            ++by_largest[p.empty() ? 0 : p.front()];
        for (std::uint32_t j = 0; j <= i; ++j)
            CHECK(qcomb::partition_count(i, j) == by_largest[j]);
    }
    CHECK(qcomb::partition_count(5, 6) == 0);
}

TEST_CASE("Euler's two-variable table matches partitions by greatest part")
{
    const auto t = qcomb::euler_coeffs(10);
    CHECK(t[0][0] == 1);
    for (std::uint32_t j = 1; j <= 10; ++j)
        CHECK(t[0][j] == 0);
    for (std::uint32_t i = 1; i <= 10; ++i)
        for (std::uint32_t j = 0; j <= 10; ++j)
            CHECK(t[i][j] == qcomb::partition_count(i, j));
}
