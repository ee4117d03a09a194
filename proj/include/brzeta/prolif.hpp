#pragma once

// Proliferation of a slice M/IM by an invertible ideal I: sums over class
// sequences of substituted partial zeta functions of the slice, the infinite
// product forms that arise when the slice has a single submodule class, and
// their Dirichlet specializations.

#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "brzeta/hereditary.hpp"
#include "brzeta/hey.hpp"
#include "brzeta/series.hpp"

namespace brzeta::prolif {

/// Class vector over the simple classes of the base (top multiplicities for a
/// projective class, composition multiplicities for a finite-length class).
using ClassVector = std::vector<std::uint32_t>;

struct DvrBase {
    std::uint32_t q = 2;
    std::uint32_t m = 0; // rank of the slice
};

enum class BaseKind { semisimple, dvr, hereditary };

class SliceBase {
public:
    using Data = std::variant<hey::SemisimpleData, DvrBase, std::pair<hereditary::OrderSpec, hereditary::ModuleSpec>>;

    /// sigma is 0-based; empty means the identity.
    SliceBase(Data data, std::vector<std::uint32_t> sigma = {});

    static SliceBase semisimple(hey::SemisimpleData data, std::vector<std::uint32_t> sigma = {});
    static SliceBase dvr(std::uint32_t q, std::uint32_t m);
    static SliceBase hereditary(const hereditary::OrderSpec& order, const hereditary::ModuleSpec& module,
                                std::vector<std::uint32_t> sigma = {});

    BaseKind kind() const;
    const Data& data() const { return data_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::uint32_t>& sigma() const { return sigma_; }
    std::size_t size() const { return alphabet_.size(); }
    /// Projective class of the slice M/IM.
    const ClassVector& slice_class() const { return slice_; }
    /// Projective classes that can occur in a class sequence.
    std::vector<ClassVector> fibre() const;
    /// sigma^k applied to entry i.
    std::size_t sigma_power(std::size_t i, std::uint32_t k) const;

private:
    Data data_;
    Alphabet alphabet_;
    std::vector<std::uint32_t> sigma_;
    ClassVector slice_;
};

/// |Hom(P, F)| = prod_i q_i^{rho_i l_i}.
Integer hom_count(const SliceBase& base, const ClassVector& rho, const ClassVector& ell);

/// The change of variable attached to a class sequence at position j:
/// z_i -> |Hom(P_j,S_i)|^{-1} prod_{k<=j} |Hom(P_{j-k}, S_{sigma^k i})| z_{sigma^k i}.
/// `seq` must hold P_0..P_j.
std::vector<SubstitutionTarget> change_of_variable(const SliceBase& base, const std::vector<ClassVector>& seq,
                                                   std::uint32_t j);

/// Sum of [A/X] over submodules X of A isomorphic to C, for projective
/// classes A and C over the base, over base.alphabet().
TruncatedSeries base_partial_zeta(const SliceBase& base, const ClassVector& a, const ClassVector& c,
                                  std::uint32_t bound);

/// gaussian(a, b, q) z_entry^{a-b}.
TruncatedSeries semisimple_partial_zeta(std::uint32_t a, std::uint32_t b, std::uint32_t q, const Alphabet& alphabet,
                                        std::size_t entry, std::uint32_t bound);

/// A chain Y_0 <= Y_1 <= ... of submodules of M/IM, recorded by the
/// projective classes of Y_j and the classes of Y_{j+1}/Y_j.  The chain is
/// constant at M/IM after the recorded part.
struct ChainData {
    std::vector<ClassVector> tops;      // classes of Y_0 .. Y_s (Y_s = M/IM)
    std::vector<ClassVector> quotients; // classes of Y_{j+1}/Y_j, j < s
};

/// prod_j |Hom(Y_j, Ybar_j)|^{-1} prod_{k<=j} |Hom(Y_{j-k}, I^k Ybar_j)| [I^k Ybar_j].
TruncatedSeries fundamental_fiber_product(const SliceBase& base, const ChainData& chain, std::uint32_t bound);

using PartialFn = std::function<TruncatedSeries(const ClassVector&, const ClassVector&, std::uint32_t)>;

/// sum over class sequences P of prod_j Z(P_{j+1}, P_j; <P,->_j).
TruncatedSeries proliferation_sum(const SliceBase& base, std::uint32_t bound);

/// The same sum with a caller-supplied partial zeta (used for the factored form).
TruncatedSeries sequence_sum(const SliceBase& base, std::uint32_t bound, const PartialFn& partial);

/// prod_j Z(M/IM; <M/IM,->_j); requires a slice whose finite-colength
/// submodules are all isomorphic (DVR, chain length 1, or zero slice).
TruncatedSeries single_sliver(const SliceBase& base, std::uint32_t bound);

/// prod_{n>=0} prod_i prod_{j<m_i} (1 - q_i^{j-m_i} prod_{k<=n} w_{sigma^k i})^{-1}
/// with w_i = q_i^{m_i} z_i.
TruncatedSeries lifted_hey(const hey::SemisimpleData& data, const std::vector<std::uint32_t>& sigma,
                           std::uint32_t bound);

/// Dirichlet coefficients of prod_{n>=0} prod_{j<m} (1 - q^{j+mn} q^{-r(n+1)s})^{-count}.
DirichletTable hom_slice_dirichlet(std::uint32_t q, std::uint32_t r, std::uint32_t m, std::uint32_t count,
                                   std::uint64_t n_max);

struct LustigResult {
    std::vector<Integer> partition; // sum_j p(i,j) q^{i-j}
    std::vector<Integer> product;   // coefficients of prod_{n>=0} (1 - q^n x^{n+1})^{-1}
};

/// Ideal counts of a two-dimensional regular local ring by colength, two
/// ways; throws FormulaViolation when they differ.
LustigResult lustig_coeffs(std::uint32_t q, std::uint32_t i_max);

struct RossmannResult {
    std::vector<Integer> zeta_product; // index n, from prod_j zeta(js - j + 1)
    std::vector<Integer> euler_product; // from local ideal counts prime by prime
};

/// Ideal counts of Z[[t]] by index up to n_max; throws FormulaViolation when
/// the two expansions differ.
RossmannResult rossmann_coeffs(std::uint64_t n_max);

/// Z(V; <P,->_j) for Z(V) = prod_{i<l} (1 - q^i v)^{-1}, where v is fixed by
/// sigma and |Hom(P_j, v)| = q^l, over single_alphabet("v", q).
TruncatedSeries zjv_factor(std::uint32_t ell, std::uint32_t q, std::uint32_t j, std::uint32_t bound);

struct FactoredProliferation {
    TruncatedSeries prefactor;
    TruncatedSeries remainder;
};

/// prod_j Z_j(V) times the sequence sum of substituted BRS polynomials;
/// checked against proliferation_sum.
FactoredProliferation brs_factored_prolif(const SliceBase& base, std::uint32_t bound);

/// {"base":{"kind":"hereditary","q":2,"n":2,"columns":[1,2]},"sigma":[2,1],"truncate":4}
/// kind "semisimple" takes "entries"; kind "dvr" takes "q" and "m".
struct ProliferationSpec {
    SliceBase base;
    std::optional<std::uint32_t> truncate;
};
ProliferationSpec spec_from_json(const nlohmann::json& j);
/// 1-based permutation array -> 0-based, validated.
std::vector<std::uint32_t> sigma_from_json(const nlohmann::json& j, std::size_t size);

} // namespace brzeta::prolif
