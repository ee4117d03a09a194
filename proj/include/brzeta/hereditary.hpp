#pragma once

// Two-variable submodule zeta functions of projective modules over the basic
// hereditary order of chain length n (matrices over a discrete valuation ring
// that are upper triangular modulo the uniformiser).
//
// A module is a multiset of column types c_1..c_r in 1..n.  Row j of the
// module modulo pi times row 1 is the coordinate subspace m_j of F_q^r spanned
// by the columns of type >= j.

#include <map>
#include <vector>

#include <json.hpp>

#include "brzeta/gfq.hpp"
#include "brzeta/series.hpp"

namespace brzeta::hereditary {

struct OrderSpec {
    std::uint32_t q = 2;
    std::uint32_t n = 1;
};

class ModuleSpec {
public:
    ModuleSpec() = default;
    /// Validates 1 <= c <= n and r >= 1; stores the columns sorted.
    ModuleSpec(const OrderSpec& order, std::vector<std::uint32_t> columns);

    const std::vector<std::uint32_t>& columns() const { return columns_; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(columns_.size()); }
    std::uint32_t chain_length() const { return n_; }
    /// dim m_j for j = 1..n (index j-1).
    std::vector<std::uint32_t> flag_dims() const;
    /// length(M_1/M_j) = #{columns of type < j} for j = 1..n.
    std::vector<std::uint32_t> row_colengths() const;
    /// Class vector of M/JM: rho_j = #{columns of type j}.
    std::vector<std::uint32_t> top() const;
    /// Coordinates of m_j (index j-1).
    gfq::Subspace flag_space(std::uint32_t j) const;

    /// Module whose top has class vector rho (columns of type j repeated rho_j times).
    static ModuleSpec from_top(const OrderSpec& order, const std::vector<std::uint32_t>& rho);

private:
    std::uint32_t n_ = 1;
    std::vector<std::uint32_t> columns_;
};

using TopClass = std::vector<std::uint32_t>;

/// z_1..z_n (weight 1, norm q) followed by w_1..w_n (weight 0).  For n = 1 the
/// labels are z and w.
Alphabet doubled_alphabet(const OrderSpec& order);
/// The first half of doubled_alphabet.
Alphabet class_alphabet(const OrderSpec& order);
/// Monomial of the class vector over class_alphabet.
Monomial class_monomial(const std::vector<std::uint32_t>& counts);

struct SubstitutionData {
    Monomial u;              // prod z_i^{length(M_1/M_i)}
    Monomial v;              // prod z_i
    std::vector<Monomial> t; // t_j = w_j prod_{i>j} z_i
};

/// Targets over the doubled alphabet.
SubstitutionData substitution_data(const OrderSpec& order, const ModuleSpec& module);

/// d_j = dim(Ybar meet m_j) + r - dim Ybar.
gfq::FilteredSpace filtered_dims(const gfq::Field& field, const ModuleSpec& module, const gfq::Subspace& ybar);

/// t_1..t_n, weight 0 (the filtered-space polynomial is finite).
Alphabet t_alphabet(std::uint32_t n);

/// Sum over subspace chains W_1 = V_1 >= W_2 >= ... >= W_n, W_j <= V_j, of
/// prod t_j^{dim W_j/W_{j+1}}, over t_alphabet(n).
TruncatedSeries filtered_poly(const gfq::Field& field, const gfq::FilteredSpace& v,
                              std::uint64_t budget = gfq::kDefaultBudget);

/// v^{r-m} prod_{i=1}^m (1 - q^{i-1} v), coefficients lowest degree first.
std::vector<Integer> hermite_Q(std::uint32_t m, std::uint32_t r, std::uint32_t q);

/// prod_{j=m+1}^r v / (1 - q^{j-1} v) over single_alphabet("v", q, 1).
TruncatedSeries hermite_orbit_sum(std::uint32_t m, std::uint32_t r, std::uint32_t q, std::uint32_t bound);

/// prod_{j<r} (1 - q^j v)^{-1} over single_alphabet("v", q, 1).
TruncatedSeries solomon_hey_factor(std::uint32_t r, std::uint32_t q, std::uint32_t bound);

/// Z(M; z, w) over doubled_alphabet: sum over submodules X of finite
/// colength of z^{[M/X]} w^{[X/JX]}, up to z-degree `bound`.
TruncatedSeries brz_two_variable(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound,
                                 std::uint64_t budget = gfq::kDefaultBudget);

/// The polynomial F with Z(M;z,w) = Z(M_1;v) F(M;z,w), computed exactly and
/// checked against Z(M;z,w) prod_{j<r} (1 - q^j v) up to `bound`.  Throws
/// FormulaViolation when F is not integral, not a polynomial, or its degree
/// does not stay below `bound`.
TruncatedSeries brs_F(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound,
                      std::uint64_t budget = gfq::kDefaultBudget);

/// Least bound at which brs_F is guaranteed to see the whole polynomial.
std::uint32_t brs_degree_bound(const OrderSpec& order, const ModuleSpec& module);

/// Sum of [M/X] over X with top class rho, over class_alphabet.
TruncatedSeries partial_zeta(const OrderSpec& order, const ModuleSpec& module, const TopClass& rho,
                             std::uint32_t bound, std::uint64_t budget = gfq::kDefaultBudget);

/// Z(M; z) over class_alphabet (every w_i set to 1).
TruncatedSeries total_zeta(const OrderSpec& order, const ModuleSpec& module, std::uint32_t bound,
                           std::uint64_t budget = gfq::kDefaultBudget);

/// Every top class occurring in a two-variable series, with its slice.
std::map<TopClass, TruncatedSeries> top_slices(const OrderSpec& order, const TruncatedSeries& two_variable);

/// {"q":2,"n":2,"columns":[1,2]}
std::pair<OrderSpec, ModuleSpec> spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OrderSpec& order, const ModuleSpec& module);

} // namespace brzeta::hereditary
