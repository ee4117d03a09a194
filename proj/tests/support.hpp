#pragma once

#include <map>
#include <vector>

#include "brzeta/series.hpp"

namespace support {

using brzeta::Integer;
using brzeta::Monomial;
using brzeta::Rational;
using brzeta::TruncatedSeries;

// Coefficients of a single-variable series, z^0 .. z^bound.
inline std::vector<Integer> coeffs(const TruncatedSeries& s)
{
    std::vector<Integer> out(s.bound() + 1, 0);
    for (const auto& [m, c] : s.terms())
        out.at(m[0]) = c.get_num();
    return out;
}

inline std::vector<Integer> ints(std::initializer_list<long> xs)
{
    std::vector<Integer> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

inline Monomial mono(std::initializer_list<std::uint32_t> e)
{
    return Monomial(std::vector<std::uint32_t>(e));
}

// Dense univariate product truncated at degree n.
inline std::vector<Integer> mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n)
{
    std::vector<Integer> out(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// (1 - c z^d)^{-1} up to degree n.
inline std::vector<Integer> geometric(const Integer& c, std::size_t d, std::size_t n)
{
    std::vector<Integer> out(n + 1, 0);
    Integer p = 1;
    for (std::size_t k = 0; k * d <= n; ++k, p *= c)
        out[k * d] = p;
    return out;
}

// All partitions of n, parts non-increasing.
inline std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n, std::uint32_t largest)
{
    if (n == 0)
        return {{}};
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t p = std::min(n, largest); p >= 1; --p)
        for (auto rest : partitions(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(std::move(rest));
        }
    return out;
}

inline Integer power(long base, unsigned e)
{
    Integer out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= base;
    return out;
}

} // namespace support
