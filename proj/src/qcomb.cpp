#include "brzeta/qcomb.hpp"

#include "brzeta/errors.hpp"

namespace brzeta::qcomb {

Integer gaussian_binomial(std::int64_t m, std::int64_t d, std::uint64_t q)
{
    if (m < 0 || d < 0 || d > m)
        return 0;
    if (d > m - d)
        d = m - d;
    // prod_{i<d} (q^{m-i} - 1) / (q^{i+1} - 1); each partial quotient is an integer.
    const Integer Q(std::to_string(q));
    Integer num = 1;
    Integer den = 1;
    for (std::int64_t i = 0; i < d; ++i) {
        num *= ipow(Q, static_cast<std::uint64_t>(m - i)) - 1;
        den *= ipow(Q, static_cast<std::uint64_t>(i + 1)) - 1;
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Integer subspace_moebius(std::uint32_t d, std::uint64_t q)
{
    const std::uint64_t e = static_cast<std::uint64_t>(d) * (d == 0 ? 0 : d - 1) / 2;
    Integer v = ipow(Integer(std::to_string(q)), e);
    return d % 2 == 0 ? v : Integer(-v);
}

std::vector<Integer> cauchy_poly(std::uint32_t m, std::uint64_t q)
{
    std::vector<Integer> coeffs{1};
    const Integer Q(std::to_string(q));
    for (std::uint32_t j = 0; j < m; ++j) {
        const Integer qj = ipow(Q, j);
        std::vector<Integer> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k];
            next[k + 1] -= qj * coeffs[k];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

namespace {

// table[i][j] = partitions of i with every part <= j.
std::vector<std::vector<Integer>> bounded_part_table(std::uint32_t n)
{
    std::vector<std::vector<Integer>> t(n + 1, std::vector<Integer>(n + 1, 0));
    for (std::uint32_t j = 0; j <= n; ++j)
        t[0][j] = 1;
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            t[i][j] = t[i][j - 1] + (j <= i ? t[i - j][j] : Integer(0));
    return t;
}

} // namespace

Integer partition_count(std::uint32_t i, std::uint32_t j)
{
    if (j == 0 || j > i)
        return i == 0 && j == 0 ? 1 : 0;
    // Remove one greatest part j; the rest is a partition of i-j with parts <= j.
    const auto t = bounded_part_table(i);
    return t[i - j][std::min(j, i - j)];
}

std::vector<std::vector<Integer>> euler_coeffs(std::uint32_t bound)
{
    // c[i][j] = number of multisets of parts in {1..n} with sum i and count j,
    // built one part size at a time.  Counting by number of parts equals
    // counting by greatest part under conjugation.  Parts of size 0 are
    // excluded: they would put 1 at every (0, j).
    std::vector<std::vector<Integer>> c(bound + 1, std::vector<Integer>(bound + 1, 0));
    c[0][0] = 1;
    for (std::uint32_t n = 1; n <= bound; ++n)
        for (std::uint32_t i = n; i <= bound; ++i)
            for (std::uint32_t j = 1; j <= bound; ++j)
                c[i][j] += c[i - n][j - 1];
    return c;
}

} // namespace brzeta::qcomb
