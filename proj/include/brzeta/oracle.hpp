#pragma once

// Brute-force ground truth: explicit finite modules over F_q given by
// generator actions, enumeration of submodules by descent through maximal
// submodules, composition and top classes, Hall numbers, and the fibres of
// the map X -> (Y_0 <= Y_1 <= ...) attached to an ideal I.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brzeta/gfq.hpp"
#include "brzeta/prolif.hpp"
#include "brzeta/series.hpp"

namespace brzeta::oracle {

/// Column k is the image of basis vector e_k.
using Matrix = std::vector<gfq::Vector>;

struct FiniteModuleRep {
    gfq::Field field;
    std::string kind;
    std::size_t dim = 0;
    std::vector<std::string> generator_names;
    std::vector<Matrix> generators;
    std::vector<std::size_t> radical;  // generators spanning the radical as a two-sided ideal
    std::vector<Matrix> idempotents;   // orthogonal, summing to 1; one per simple class
    Alphabet alphabet;                 // one entry per simple class
    /// Largest colength for which submodules of this quotient model agree
    /// with those of the module it stands for (unbounded for finite modules).
    std::uint32_t max_colength = UINT32_MAX;

    std::size_t generator(std::string_view name) const;
};

gfq::Vector apply(const gfq::Field& field, const Matrix& m, const gfq::Vector& v);

/// Finite module F_q[t]/(t^l_1) + ... (Jordan type l); generator "t".
FiniteModuleRep chain_model(std::uint32_t q, const std::vector<std::uint32_t>& partition);
/// (F_q[t]/(t^c))^rank standing for a free F_q[[t]]-module.
FiniteModuleRep chain_free_model(std::uint32_t q, std::uint32_t c, std::uint32_t rank);
/// F_q[u,t]/m^c standing for F_q[[u,t]]; generators "u", "t".
FiniteModuleRep local2d_model(std::uint32_t q, std::uint32_t c);
/// The projective module with the given columns over the hereditary order of
/// chain length n, modulo pi^c; generators e1..en and the standard radical
/// generator "g".
FiniteModuleRep triangular_model(std::uint32_t q, std::uint32_t n, std::uint32_t c,
                                 const std::vector<std::uint32_t>& columns);
/// The same module tensored with F_q[[t]], modulo (t^c, pi^c); adds "t".
FiniteModuleRep skew_poly_model(std::uint32_t q, std::uint32_t n, std::uint32_t c,
                                const std::vector<std::uint32_t>& columns);

/// {"kind":"chain","q":2,"c":5,"rank":2} | {"kind":"chain","q":2,"partition":[2,1]}
/// | {"kind":"local2d","q":2,"c":4} | {"kind":"triangular","q":2,"n":2,"c":2,"columns":[1,2]}
/// | {"kind":"skew_poly",...}.  A missing "c" is chosen as the least depth
/// that is faithful up to `colength`.
FiniteModuleRep model_from_json(const nlohmann::json& j, std::optional<std::uint32_t> colength = std::nullopt);

/// Submodule generated by the given subspace.
gfq::Subspace closure(const FiniteModuleRep& m, const gfq::Subspace& x);
/// JX.
gfq::Subspace radical_of(const FiniteModuleRep& m, const gfq::Subspace& x);
/// M itself.
gfq::Subspace whole(const FiniteModuleRep& m);
bool is_submodule(const FiniteModuleRep& m, const gfq::Subspace& x);

struct MaximalSubmodule {
    gfq::Subspace space;
    std::size_t simple = 0; // class of X / space
};

/// Kernels of the surjections from X onto simple modules.
std::vector<MaximalSubmodule> maximal_submodules(const FiniteModuleRep& m, const gfq::Subspace& x);

struct LatticeNode {
    gfq::Subspace space;
    Monomial quotient_class; // [M/X], accumulated along the descent
    std::uint32_t colength = 0;
};

struct Lattice {
    std::vector<LatticeNode> nodes; // ordered by colength, then canonical basis
    std::map<gfq::Subspace, std::size_t> index;
};

/// Every submodule of colength <= bound exactly once.  Throws ConfigError when
/// the model is not faithful up to `bound`, ResourceError past `budget` nodes.
Lattice submodule_bfs(const FiniteModuleRep& m, std::uint32_t bound, std::uint64_t budget = gfq::kDefaultBudget);

/// Composition multiplicities of A/B (B <= A submodules), from idempotent ranks.
prolif::ClassVector subquotient_class(const FiniteModuleRep& m, const gfq::Subspace& a, const gfq::Subspace& b);
/// [M/X] as a monomial over m.alphabet.
Monomial composition_class(const FiniteModuleRep& m, const gfq::Subspace& x);
/// Class vector of X/JX.
prolif::ClassVector top_class(const FiniteModuleRep& m, const gfq::Subspace& x);

/// sum of [M/X] over X of colength <= bound (only X with the given top in partial mode).
TruncatedSeries empirical_zeta(const FiniteModuleRep& m, std::uint32_t bound,
                               const std::optional<prolif::ClassVector>& top = std::nullopt);
/// sum of z^{[M/X]} w^{[X/JX]} over the alphabet followed by its weight-0 w-copy.
TruncatedSeries empirical_two_variable(const FiniteModuleRep& m, std::uint32_t bound);

/// Jordan type of the nilpotent generator `gen` on X (parts in decreasing order).
std::vector<std::uint32_t> jordan_type(const FiniteModuleRep& m, std::size_t gen, const gfq::Subspace& x);
/// Jordan type on A/B.
std::vector<std::uint32_t> quotient_jordan_type(const FiniteModuleRep& m, std::size_t gen, const gfq::Subspace& a,
                                                const gfq::Subspace& b);

/// Number of D <= A with D of Jordan type c and A/D of Jordan type b, for the
/// finite F_q[t]-module A of Jordan type a.
Integer hall_number(std::uint32_t q, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                    const std::vector<std::uint32_t>& c);

/// Number of chains C_0 <= C_1 <= ... <= C_s = A (A of type tops.back()) with
/// C_j of type tops[j] and C_{j+1}/C_j of type quotients[j], by direct search.
Integer count_chains(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& tops,
                     const std::vector<std::vector<std::uint32_t>>& quotients);

/// Submodules of X of a Jordan type, sum of z^{dim X/D}: the partial zeta of a
/// finite F_q[t]-module, by direct enumeration.
TruncatedSeries chain_partial_zeta(std::uint32_t q, const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& c);

/// The chain Y_j = ((M meet I^{-j} X) + IM)/IM for the ideal generated by the
/// central generator `igen`, recorded by classes over M/IM and cut at the
/// first j with Y_j = M/IM.
prolif::ChainData fiber_chain(const FiniteModuleRep& m, std::size_t igen, const gfq::Subspace& x);

/// Drops trailing constant entries so that equal chains compare equal.
prolif::ChainData normalize_chain(const prolif::ChainData& chain);

/// All X of colength <= bound whose chain equals `chain` at class level.
std::vector<gfq::Subspace> fiber_enumerate(const FiniteModuleRep& m, std::size_t igen, const prolif::ChainData& chain,
                                           std::uint32_t bound);

/// sum of [M/X] over each fibre, for every chain that occurs.
std::map<std::pair<std::vector<prolif::ClassVector>, std::vector<prolif::ClassVector>>, TruncatedSeries>
fiber_sums(const FiniteModuleRep& m, std::size_t igen, std::uint32_t bound);

prolif::ChainData chain_from_json(const nlohmann::json& j);

} // namespace brzeta::oracle
