#pragma once

// Truncated commutative formal series over the free commutative monoid on a
// finite alphabet of simple-module classes.  Truncation is by weighted total
// degree: every entry carries a weight (1 for ordinary classes, 0 for
// bookkeeping variables with finite support such as the w-copy of a
// two-variable zeta function).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace brzeta {

using Integer = mpz_class;
using Rational = mpq_class;

struct AlphabetEntry {
    std::string label;
    std::uint32_t q = 2;
    std::uint32_t r = 1;
    std::uint32_t weight = 1;

    /// |S| = q^r.
    Integer norm() const;

    bool operator==(const AlphabetEntry&) const = default;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<AlphabetEntry> entries);

    std::size_t size() const { return entries_.size(); }
    const AlphabetEntry& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const AlphabetEntry> entries() const { return entries_; }
    std::optional<std::size_t> find(std::string_view label) const;

    /// Concatenation; the labels of the two parts must stay distinct.
    static Alphabet concat(const Alphabet& first, const Alphabet& second);
    /// First `count` entries.
    Alphabet prefix(std::size_t count) const;
    /// Same entries with every weight replaced.
    Alphabet with_weight(std::uint32_t weight) const;
    /// Same entries with labels re-prefixed (used to build the w-copy).
    Alphabet relabeled(std::string_view old_prefix, std::string_view new_prefix) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<AlphabetEntry> entries_;
};

/// Exponent vector indexed by alphabet entry.  Lexicographic order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t size) : exps_(size, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t size, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const;
    std::uint64_t weighted_degree(const Alphabet& alphabet) const;
    Integer norm(const Alphabet& alphabet) const;
    bool is_one() const;
    /// True when every exponent of `other` is at most ours.
    bool divisible_by(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    Monomial& operator*=(const Monomial& other);
    /// Exact quotient; throws StructuralError if not divisible.
    Monomial operator/(const Monomial& other) const;
    Monomial pow(std::uint32_t e) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

class TruncatedSeries {
public:
    using TermMap = std::map<Monomial, Rational>;

    TruncatedSeries() = default;
    TruncatedSeries(Alphabet alphabet, std::uint32_t bound);

    static TruncatedSeries one(const Alphabet& alphabet, std::uint32_t bound);
    static TruncatedSeries constant(const Alphabet& alphabet, std::uint32_t bound, const Rational& c);
    static TruncatedSeries term(const Alphabet& alphabet, std::uint32_t bound, const Monomial& m,
                                const Rational& c = 1);
    /// Single-variable helper: coefficients of z_index^0, z_index^1, ...
    static TruncatedSeries from_coefficients(const Alphabet& alphabet, std::uint32_t bound, std::size_t index,
                                             std::span<const Rational> coeffs);

    const Alphabet& alphabet() const { return *alphabet_; }
    std::uint32_t bound() const { return bound_; }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    /// Adds c to the coefficient of m; silently drops m above the bound.
    void add_term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    std::optional<std::uint64_t> lowest_degree() const;
    std::uint64_t max_degree() const;
    bool is_integral() const;
    bool is_nonnegative_integral() const;
    /// First term with a non-integral or negative coefficient, if any.
    std::optional<std::pair<Monomial, Rational>> first_non_natural() const;

    TruncatedSeries truncated(std::uint32_t new_bound) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const Rational& c) const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);

    /// Same alphabet, same bound and same coefficients.
    bool operator==(const TruncatedSeries& other) const;

    bool same_alphabet(const TruncatedSeries& other) const;

private:
    void require_same_alphabet(const TruncatedSeries& other, const char* what) const;

    std::shared_ptr<const Alphabet> alphabet_ = std::make_shared<const Alphabet>();
    std::uint32_t bound_ = 0;
    TermMap terms_;
};

/// Coefficient-wise equality on every monomial of weighted degree <= bound.
bool agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::uint32_t bound);

/// Two-sided inverse up to the bound.  Throws NonUnitError.
TruncatedSeries invert(const TruncatedSeries& a);

/// Image of generator i is scalar_i * target_i.
struct SubstitutionTarget {
    Rational scalar = 1;
    Monomial target;
};

/// Algebra map extending a generator assignment.  `out_bound` must not exceed
/// what the input bound determines: (bound + 1) * (least target degree) - 1.
TruncatedSeries substitute(const TruncatedSeries& a, const Alphabet& target_alphabet,
                           std::span<const SubstitutionTarget> map, std::uint32_t out_bound);
TruncatedSeries substitute(const TruncatedSeries& a, std::span<const SubstitutionTarget> map);

/// Truncated infinite product.  Factor k must have constant term 1 and agree
/// with 1 below weighted degree floor(k); factors are multiplied while
/// floor(k) <= bound.  A floor that decreases, or repeats more than
/// `max_stall` times in a row, raises PseudoConvergenceError.
TruncatedSeries product_eval(const std::function<TruncatedSeries(std::uint32_t)>& factor,
                             const std::function<std::uint32_t(std::uint32_t)>& floor, const Alphabet& alphabet,
                             std::uint32_t bound, std::uint32_t max_stall = 4096);

struct DirichletTable {
    std::map<std::uint64_t, Rational> coeffs;
    bool complete = true;
    std::string warning;

    Rational at(std::uint64_t n) const;
};

/// Specialization z_i -> q_i^{-r_i s}: coefficient of n^{-s} for n <= n_max.
DirichletTable dirichlet_coeffs(const TruncatedSeries& a, std::uint64_t n_max);

/// Coefficient of h (an exponent vector over the trailing entries) in a
/// series over `first` ++ trailing entries.
TruncatedSeries slice_coefficient(const TruncatedSeries& a, const Alphabet& first, const Monomial& h);

nlohmann::json to_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

std::string to_string(const Monomial& m, const Alphabet& alphabet);
std::string to_string(const TruncatedSeries& s);

/// Single-entry alphabet {label, q, r}.
Alphabet single_alphabet(std::string label, std::uint32_t q, std::uint32_t r = 1);

Integer ipow(const Integer& base, std::uint64_t e);
Rational rpow(const Rational& base, std::int64_t e);

} // namespace brzeta
