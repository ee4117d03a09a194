#pragma once

// Exact linear algebra over small finite fields (q <= 256): canonical
// (reduced row-echelon) subspaces, lattice operations, subspace enumeration,
// and enumeration of subspace chains inside a model filtration.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace brzeta::gfq {

using Elem = std::uint8_t;
using Vector = std::vector<Elem>;

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// F_q with q = p^e.  Elements are 0..q-1; for e > 1 an element is the
/// base-p digit string of its coefficients modulo the defining polynomial.
class Field {
public:
    /// Prime q, or a prime power q <= 16 with a built-in modulus.
    static Field make(std::uint32_t q);
    /// Prime power field from a monic irreducible modulus (low degree first).
    static Field with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return e_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Inverse of a nonzero element.
    Elem inv(Elem a) const;

    bool operator==(const Field& other) const { return q_ == other.q_ && modulus_ == other.modulus_; }

private:
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

bool is_prime(std::uint32_t n);

/// Subspace of F_q^ambient stored in reduced row-echelon form; two subspaces
/// are equal exactly when their stored rows are equal.
class Subspace;
Subspace echelon(const Field& field, std::size_t ambient, std::vector<Vector> rows);

class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Span of arbitrary vectors, canonicalized.
    static Subspace span(const Field& field, std::size_t ambient, std::span<const Vector> vectors);
    /// Span of standard basis vectors.
    static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> coords);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after elimination against the basis (zero iff v is inside).
    Vector reduce(const Field& field, Vector v) const;
    bool contains(const Field& field, const Vector& v) const;
    bool contains(const Field& field, const Subspace& other) const;

    auto operator<=>(const Subspace& other) const
    {
        if (auto c = ambient_ <=> other.ambient_; c != 0)
            return c;
        return rows_ <=> other.rows_;
    }
    bool operator==(const Subspace& other) const { return ambient_ == other.ambient_ && rows_ == other.rows_; }

private:
    friend Subspace echelon(const Field& field, std::size_t ambient, std::vector<Vector> rows);

    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row-reduces in place and returns the canonical subspace.
Subspace echelon(const Field& field, std::size_t ambient, std::vector<Vector> rows);

struct LatticeResult {
    Subspace meet;
    Subspace join;
};

/// Intersection and sum; dim a + dim b = dim meet + dim join.
LatticeResult lattice_ops(const Field& field, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& field, const Subspace& a, const Subspace& b);
Subspace sum(const Field& field, const Subspace& a, const Subspace& b);

/// Number of subspaces of F_q^m of dimension d (all dimensions when d is empty).
std::uint64_t subspace_count(std::size_t m, std::optional<std::size_t> d, std::uint32_t q);

/// Every subspace of `ambient` (optionally of one dimension), each exactly
/// once, canonical in the surrounding F_q^n.  Throws ResourceError when the
/// count exceeds `budget`.
std::vector<Subspace> enumerate_subspaces(const Field& field, const Subspace& ambient,
                                          std::optional<std::size_t> dim = std::nullopt,
                                          std::uint64_t budget = kDefaultBudget);

/// Filtration V_1 >= V_2 >= ... >= V_n >= 0 of F_q^{d_1} by leading
/// coordinates: V_j = span(e_1, ..., e_{d_j}).
struct FilteredSpace {
    std::vector<std::uint32_t> dims;

    /// Validates weak decrease.
    explicit FilteredSpace(std::vector<std::uint32_t> d);
    std::size_t length() const { return dims.size(); }
    Subspace level(std::size_t j) const; // 0-based: level(0) = V_1
};

/// W_1 = V_1 >= W_2 >= ... >= W_n >= W_{n+1} = 0 with W_j <= V_j.
struct SubspaceChain {
    std::vector<Subspace> spaces;        // W_1 .. W_n
    std::vector<std::uint32_t> degrees;  // dim(W_j / W_{j+1}), j = 1..n
};

std::vector<SubspaceChain> enumerate_chains(const Field& field, const FilteredSpace& v,
                                            std::uint64_t budget = kDefaultBudget);

} // namespace brzeta::gfq
