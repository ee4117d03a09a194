#include "brzeta/gfq.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "brzeta/errors.hpp"
#include "brzeta/qcomb.hpp"

namespace brzeta::gfq {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, std::uint32_t e)
{
    std::vector<std::uint32_t> d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p)
{
    std::uint32_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        x = x * p + d[i];
    return x;
}

} // namespace

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus))
{
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i)
        q_ *= p;
    if (q_ > 256)
        throw StructuralError("fields larger than 256 elements are not supported");
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const auto da = digits(a, p, e);
        std::vector<std::uint32_t> n(e);
        for (std::uint32_t i = 0; i < e; ++i)
            n[i] = (p - da[i]) % p;
        neg_[a] = static_cast<Elem>(undigits(n, p));
        for (std::uint32_t b = 0; b < q_; ++b) {
            const auto db = digits(b, p, e);
            std::vector<std::uint32_t> s(e);
            for (std::uint32_t i = 0; i < e; ++i)
                s[i] = (da[i] + db[i]) % p;
            add_[a * q_ + b] = static_cast<Elem>(undigits(s, p));
            // Schoolbook product, then reduce by the monic modulus from the top.
            std::vector<std::uint32_t> prod(2 * e, 0);
            for (std::uint32_t i = 0; i < e; ++i)
                for (std::uint32_t j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (std::size_t k = prod.size(); k-- > e;) {
                const std::uint32_t c = prod[k];
                if (c == 0)
                    continue;
                for (std::uint32_t i = 0; i <= e; ++i)
                    prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus_[i]) % p;
            }
            prod.resize(e);
            mul_[a * q_ + b] = static_cast<Elem>(undigits(prod, p));
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
        if (inv_[a] == 0)
            throw StructuralError("modulus is not irreducible: element " + std::to_string(a) + " has no inverse");
    }
}

Field Field::make(std::uint32_t q)
{
    if (is_prime(q)) {
        if (q > 256)
            throw StructuralError("fields larger than 256 elements are not supported");
        return Field(q, 1, {0, 1});
    }
    switch (q) {
    case 4:
        return Field(2, 2, {1, 1, 1});
    case 8:
        return Field(2, 3, {1, 1, 0, 1});
    case 9:
        return Field(3, 2, {1, 0, 1});
    case 16:
        return Field(2, 4, {1, 1, 0, 0, 1});
    default:
        throw StructuralError("no built-in modulus for q = " + std::to_string(q) + "; supply one");
    }
}

Field Field::with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus)
{
    if (!is_prime(p))
        throw StructuralError("characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw StructuralError("modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p)
            throw StructuralError("modulus coefficients must be reduced mod p");
    return Field(p, static_cast<std::uint32_t>(modulus.size() - 1), modulus);
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw NonUnitError("zero has no inverse");
    return inv_[a];
}

// ---------------------------------------------------------------- subspaces

Subspace Subspace::zero(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    std::vector<std::size_t> all(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        all[i] = i;
    return coordinate(ambient, all);
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> coords)
{
    std::vector<std::size_t> sorted(coords.begin(), coords.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Subspace s;
    s.ambient_ = ambient;
    for (auto c : sorted) {
        if (c >= ambient)
            throw StructuralError("coordinate outside ambient space");
        Vector v(ambient, 0);
        v[c] = 1;
        s.rows_.push_back(std::move(v));
        s.pivots_.push_back(c);
    }
    return s;
}

Subspace Subspace::span(const Field& field, std::size_t ambient, std::span<const Vector> vectors)
{
    return echelon(field, ambient, std::vector<Vector>(vectors.begin(), vectors.end()));
}

Subspace echelon(const Field& field, std::size_t ambient, std::vector<Vector> rows)
{
    for (const auto& r : rows)
        if (r.size() != ambient)
            throw StructuralError("vector length does not match ambient dimension");
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < ambient && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && rows[pick][col] == 0)
            ++pick;
        if (pick == rows.size())
            continue;
        std::swap(rows[rank], rows[pick]);
        const Elem scale = field.inv(rows[rank][col]);
        if (scale != 1)
            for (auto& x : rows[rank])
                x = field.mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            const Elem f = rows[i][col];
            for (std::size_t k = col; k < ambient; ++k)
                if (rows[rank][k] != 0)
                    rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[rank][k]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    Subspace s = Subspace::zero(ambient);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

Vector Subspace::reduce(const Field& field, Vector v) const
{
    if (v.size() != ambient_)
        throw StructuralError("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem f = v[pivots_[i]];
        if (f == 0)
            continue;
        for (std::size_t k = pivots_[i]; k < ambient_; ++k)
            if (rows_[i][k] != 0)
                v[k] = field.sub(v[k], field.mul(f, rows_[i][k]));
    }
    return v;
}

bool Subspace::contains(const Field& field, const Vector& v) const
{
    const Vector r = reduce(field, v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Field& field, const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw StructuralError("ambient mismatch");
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(field, v); });
}

// ------------------------------------------------------------ lattice ops

LatticeResult lattice_ops(const Field& field, const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw StructuralError("ambient mismatch");
    // Zassenhaus: echelonize [a | a] over [b | 0]; rows with zero left half
    // carry the intersection in their right half.
    const std::size_t n = a.ambient();
    std::vector<Vector> rows;
    for (const auto& r : a.rows()) {
        Vector v(2 * n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        rows.push_back(std::move(v));
    }
    for (const auto& r : b.rows()) {
        Vector v(2 * n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rows.push_back(std::move(v));
    }
    const Subspace big = echelon(field, 2 * n, std::move(rows));
    std::vector<Vector> join;
    std::vector<Vector> meet;
    for (std::size_t i = 0; i < big.dim(); ++i) {
        const auto& r = big.rows()[i];
        if (big.pivots()[i] < n)
            join.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        else
            meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    }
    return {echelon(field, n, std::move(meet)), echelon(field, n, std::move(join))};
}

Subspace intersect(const Field& field, const Subspace& a, const Subspace& b)
{
    return lattice_ops(field, a, b).meet;
}

Subspace sum(const Field& field, const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw StructuralError("ambient mismatch");
    std::vector<Vector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return echelon(field, a.ambient(), std::move(rows));
}

std::uint64_t subspace_count(std::size_t m, std::optional<std::size_t> d, std::uint32_t q)
{
    const auto one = [&](std::size_t k) {
        const Integer g = qcomb::gaussian_binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k), q);
        if (!g.fits_ulong_p())
            throw ResourceError("subspace count overflows 64 bits");
        return static_cast<std::uint64_t>(g.get_ui());
    };
    if (d)
        return one(*d);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= m; ++k) {
        const std::uint64_t c = one(k);
        if (total + c < total)
            throw ResourceError("subspace count overflows 64 bits");
        total += c;
    }
    return total;
}

std::vector<Subspace> enumerate_subspaces(const Field& field, const Subspace& ambient,
                                          std::optional<std::size_t> dim, std::uint64_t budget)
{
    const std::size_t m = ambient.dim();
    if (dim && *dim > m)
        return {};
    std::uint64_t expected = 0;
    try {
        expected = subspace_count(m, dim, field.q());
    } catch (const ResourceError&) {
        throw ResourceError("subspace enumeration exceeds budget");
    }
    if (expected > budget)
        throw ResourceError("subspace enumeration of " + std::to_string(expected) + " spaces exceeds budget "
                            + std::to_string(budget));

    // Every k-dimensional subspace of F_q^m has a unique RREF basis: pick the
    // pivot columns, fill the free entries to the right of each pivot that do
    // not sit over another pivot.  The coordinates are mapped through the
    // basis of `ambient` and re-canonicalized in the surrounding space.
    std::vector<Subspace> out;
    out.reserve(expected);
    const std::uint32_t q = field.q();
    const std::size_t lo = dim ? *dim : 0;
    const std::size_t hi = dim ? *dim : m;
    for (std::size_t k = lo; k <= hi; ++k) {
        std::vector<std::size_t> piv(k);
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
            if (idx == k) {
                std::vector<char> is_pivot(m, 0);
                for (auto p : piv)
                    is_pivot[p] = 1;
                std::vector<std::pair<std::size_t, std::size_t>> free;
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t c = piv[i] + 1; c < m; ++c)
                        if (!is_pivot[c])
                            free.emplace_back(i, c);
                std::vector<Elem> vals(free.size(), 0);
                while (true) {
                    std::vector<Vector> rows;
                    rows.reserve(k);
                    for (std::size_t i = 0; i < k; ++i) {
                        Vector coords(m, 0);
                        coords[piv[i]] = 1;
                        rows.push_back(std::move(coords));
                    }
                    for (std::size_t f = 0; f < free.size(); ++f)
                        rows[free[f].first][free[f].second] = vals[f];
                    std::vector<Vector> mapped;
                    mapped.reserve(k);
                    for (const auto& c : rows) {
                        Vector v(ambient.ambient(), 0);
                        for (std::size_t j = 0; j < m; ++j) {
                            if (c[j] == 0)
                                continue;
                            const auto& b = ambient.rows()[j];
                            for (std::size_t t = 0; t < v.size(); ++t)
                                if (b[t] != 0)
                                    v[t] = field.add(v[t], field.mul(c[j], b[t]));
                        }
                        mapped.push_back(std::move(v));
                    }
                    out.push_back(echelon(field, ambient.ambient(), std::move(mapped)));
                    std::size_t f = 0;
                    while (f < vals.size() && ++vals[f] == q) {
                        vals[f] = 0;
                        ++f;
                    }
                    if (f == vals.size())
                        break;
                }
                return;
            }
            for (std::size_t c = start; c + (k - idx) <= m; ++c) {
                piv[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

FilteredSpace::FilteredSpace(std::vector<std::uint32_t> d) : dims(std::move(d))
{
    if (dims.empty())
        throw StructuralError("filtered space needs at least one level");
    for (std::size_t j = 1; j < dims.size(); ++j)
        if (dims[j] > dims[j - 1])
            throw StructuralError("filtration dimensions must weakly decrease");
}

Subspace FilteredSpace::level(std::size_t j) const
{
    std::vector<std::size_t> coords(dims.at(j));
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = i;
    return Subspace::coordinate(dims[0], coords);
}

std::vector<SubspaceChain> enumerate_chains(const Field& field, const FilteredSpace& v, std::uint64_t budget)
{
    std::vector<SubspaceChain> out;
    SubspaceChain cur;
    cur.spaces.push_back(v.level(0));
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == v.length()) {
            SubspaceChain done = cur;
            done.degrees.resize(v.length());
            for (std::size_t i = 0; i < v.length(); ++i) {
                const std::size_t next = i + 1 < v.length() ? done.spaces[i + 1].dim() : 0;
                done.degrees[i] = static_cast<std::uint32_t>(done.spaces[i].dim() - next);
            }
            out.push_back(std::move(done));
            if (out.size() > budget)
                throw ResourceError("chain enumeration exceeds budget " + std::to_string(budget));
            return;
        }
        const Subspace room = intersect(field, v.level(j), cur.spaces.back());
        for (auto& w : enumerate_subspaces(field, room, std::nullopt, budget)) {
            cur.spaces.push_back(std::move(w));
            rec(j + 1);
            cur.spaces.pop_back();
        }
    };
    rec(1);
    return out;
}

} // namespace brzeta::gfq
