#include "brzeta/prolif.hpp"

#include <algorithm>
#include <numeric>

#include "brzeta/errors.hpp"
#include "brzeta/qcomb.hpp"

namespace brzeta::prolif {

namespace {

Alphabet base_alphabet(const SliceBase::Data& data)
{
    if (const auto* s = std::get_if<hey::SemisimpleData>(&data))
        return s->alphabet();
    if (const auto* d = std::get_if<DvrBase>(&data))
        return single_alphabet("z", d->q, 1);
    return hereditary::class_alphabet(std::get<2>(data).first);
}

ClassVector base_slice(const SliceBase::Data& data)
{
    if (const auto* s = std::get_if<hey::SemisimpleData>(&data)) {
        ClassVector out;
        for (const auto& e : s->entries)
            out.push_back(e.m);
        return out;
    }
    if (const auto* d = std::get_if<DvrBase>(&data))
        return {d->m};
    return std::get<2>(data).second.top();
}

// Exact polynomial re-truncated at any bound.
TruncatedSeries rebound(const TruncatedSeries& a, std::uint32_t bound)
{
    TruncatedSeries out(a.alphabet(), bound);
    for (const auto& [m, c] : a.terms())
        out.add_term(m, c);
    return out;
}

// (1 - c * mono)^{-1} up to the bound; mono has positive weighted degree.
TruncatedSeries geometric_in(const Alphabet& alpha, std::uint32_t bound, const Monomial& mono, const Rational& c)
{
    const std::uint64_t d = mono.weighted_degree(alpha);
    if (d == 0)
        throw StructuralError("geometric series in a degree-0 monomial does not truncate");
    TruncatedSeries out(alpha, bound);
    Monomial power(alpha.size());
    Rational coeff = 1;
    for (std::uint64_t k = 0; k * d <= bound; ++k) {
        out.add_term(power, coeff);
        power *= mono;
        coeff *= c;
    }
    return out;
}

std::string class_string(const ClassVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

// ------------------------------------------------------------------ base

SliceBase::SliceBase(Data data, std::vector<std::uint32_t> sigma)
    : data_(std::move(data)), alphabet_(base_alphabet(data_)), sigma_(std::move(sigma)), slice_(base_slice(data_))
{
    if (sigma_.empty()) {
        sigma_.resize(alphabet_.size());
        std::iota(sigma_.begin(), sigma_.end(), 0u);
    }
    if (sigma_.size() != alphabet_.size())
        throw StructuralError("sigma must permute the " + std::to_string(alphabet_.size()) + " simple classes");
    std::vector<char> seen(sigma_.size(), 0);
    for (auto s : sigma_) {
        if (s >= sigma_.size() || seen[s])
            throw StructuralError("sigma is not a permutation");
        seen[s] = 1;
    }
}

SliceBase SliceBase::semisimple(hey::SemisimpleData data, std::vector<std::uint32_t> sigma)
{
    return SliceBase(Data(std::move(data)), std::move(sigma));
}

SliceBase SliceBase::dvr(std::uint32_t q, std::uint32_t m)
{
    if (q < 2)
        throw StructuralError("residue field size must be at least 2");
    return SliceBase(Data(DvrBase{q, m}));
}

SliceBase SliceBase::hereditary(const hereditary::OrderSpec& order, const hereditary::ModuleSpec& module,
                                std::vector<std::uint32_t> sigma)
{
    return SliceBase(Data(std::in_place_index<2>, order, module), std::move(sigma));
}

BaseKind SliceBase::kind() const
{
    switch (data_.index()) {
    case 0:
        return BaseKind::semisimple;
    case 1:
        return BaseKind::dvr;
    default:
        return BaseKind::hereditary;
    }
}

std::vector<ClassVector> SliceBase::fibre() const
{
    std::vector<ClassVector> out;
    switch (kind()) {
    case BaseKind::semisimple: {
        // Every submodule of a semisimple slice is a sum of simples: all
        // vectors a <= m componentwise.
        ClassVector a(slice_.size(), 0);
        while (true) {
            out.push_back(a);
            std::size_t i = 0;
            while (i < a.size() && a[i] == slice_[i]) {
                a[i] = 0;
                ++i;
            }
            if (i == a.size())
                break;
            ++a[i];
        }
        break;
    }
    case BaseKind::dvr:
        out.push_back(slice_);
        break;
    case BaseKind::hereditary: {
        // Vectors with the same generic length as the slice.
        const std::uint32_t r = std::accumulate(slice_.begin(), slice_.end(), 0u);
        ClassVector rho(slice_.size(), 0);
        std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
            if (i + 1 == rho.size()) {
                rho[i] = left;
                out.push_back(rho);
                return;
            }
            for (std::uint32_t k = 0; k <= left; ++k) {
                rho[i] = k;
                rec(i + 1, left - k);
            }
        };
        rec(0, r);
        break;
    }
    }
    return out;
}

std::size_t SliceBase::sigma_power(std::size_t i, std::uint32_t k) const
{
    for (std::uint32_t s = 0; s < k; ++s)
        i = sigma_[i];
    return i;
}

Integer hom_count(const SliceBase& base, const ClassVector& rho, const ClassVector& ell)
{
    if (rho.size() != base.size() || ell.size() != base.size())
        throw StructuralError("class vector length does not match the base");
    Integer out = 1;
    for (std::size_t i = 0; i < rho.size(); ++i)
        out *= ipow(Integer(base.alphabet()[i].q), static_cast<std::uint64_t>(rho[i]) * ell[i]);
    return out;
}

std::vector<SubstitutionTarget> change_of_variable(const SliceBase& base, const std::vector<ClassVector>& seq,
                                                   std::uint32_t j)
{
    if (seq.size() <= j)
        throw StructuralError("class sequence is shorter than the requested position");
    const std::size_t n = base.size();
    std::vector<SubstitutionTarget> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer q = base.alphabet()[i].q;
        Rational scalar(1, 1);
        scalar /= Rational(ipow(q, seq[j][i]));
        Monomial target(n);
        for (std::uint32_t k = 0; k <= j; ++k) {
            const std::size_t s = base.sigma_power(i, k);
            scalar *= Rational(ipow(Integer(base.alphabet()[s].q), seq[j - k][s]));
            ++target[s];
        }
        scalar.canonicalize();
        out.push_back({scalar, std::move(target)});
    }
    return out;
}

TruncatedSeries semisimple_partial_zeta(std::uint32_t a, std::uint32_t b, std::uint32_t q, const Alphabet& alphabet,
                                        std::size_t entry, std::uint32_t bound)
{
    TruncatedSeries out(alphabet, bound);
    if (b > a)
        return out;
    out.add_term(Monomial::unit(alphabet.size(), entry, a - b), Rational(qcomb::gaussian_binomial(a, b, q)));
    return out;
}

TruncatedSeries base_partial_zeta(const SliceBase& base, const ClassVector& a, const ClassVector& c,
                                  std::uint32_t bound)
{
    const Alphabet& alpha = base.alphabet();
    switch (base.kind()) {
    case BaseKind::semisimple: {
        TruncatedSeries out = TruncatedSeries::one(alpha, bound);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            out *= semisimple_partial_zeta(a[i], c[i], alpha[i].q, alpha, i, bound);
        return out;
    }
    case BaseKind::dvr: {
        // Finite-colength submodules of a free module over a DVR are free of
        // the same rank.
        if (a != c)
            return TruncatedSeries(alpha, bound);
        const hey::SemisimpleData d{{{alpha[0].label, alpha[0].q, 1, a[0]}}};
        return hey::hey_product(d, bound);
    }
    case BaseKind::hereditary: {
        const auto& order = std::get<2>(base.data()).first;
        const std::uint32_t ra = std::accumulate(a.begin(), a.end(), 0u);
        const std::uint32_t rc = std::accumulate(c.begin(), c.end(), 0u);
        if (ra != rc || ra == 0)
            return TruncatedSeries(alpha, bound);
        return hereditary::partial_zeta(order, hereditary::ModuleSpec::from_top(order, a), c, bound);
    }
    }
    throw StructuralError("unsupported base kind");
}

TruncatedSeries fundamental_fiber_product(const SliceBase& base, const ChainData& chain, std::uint32_t bound)
{
    const Alphabet& alpha = base.alphabet();
    if (chain.tops.empty() || chain.tops.size() != chain.quotients.size() + 1)
        throw StructuralError("chain needs one more submodule class than quotient classes");
    if (chain.tops.back() != base.slice_class())
        throw StructuralError("chain does not stabilize at the slice class " + class_string(base.slice_class()));
    TruncatedSeries out = TruncatedSeries::one(alpha, bound);
    for (std::uint32_t j = 0; j < chain.quotients.size(); ++j) {
        const ClassVector& ybar = chain.quotients[j];
        if (std::all_of(ybar.begin(), ybar.end(), [](auto x) { return x == 0; }))
            continue;
        Rational scalar(1, 1);
        scalar /= Rational(hom_count(base, chain.tops[j], ybar));
        Monomial m(alpha.size());
        for (std::uint32_t k = 0; k <= j; ++k) {
            // I^k (x) Ybar_j has the class of Ybar_j moved by sigma^k.
            ClassVector moved(ybar.size(), 0);
            for (std::size_t i = 0; i < ybar.size(); ++i)
                moved[base.sigma_power(i, k)] += ybar[i];
            scalar *= Rational(hom_count(base, chain.tops[j - k], moved));
            for (std::size_t i = 0; i < moved.size(); ++i)
                m[i] += moved[i];
        }
        scalar.canonicalize();
        out *= TruncatedSeries::term(alpha, bound, m, scalar);
    }
    return out;
}

TruncatedSeries sequence_sum(const SliceBase& base, std::uint32_t bound, const PartialFn& partial)
{
    const Alphabet& alpha = base.alphabet();
    const auto fibre = base.fibre();
    std::map<std::pair<ClassVector, ClassVector>, TruncatedSeries> cache;
    const auto partial_at = [&](const ClassVector& a, const ClassVector& c) -> const TruncatedSeries& {
        auto key = std::make_pair(a, c);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(std::move(key), partial(a, c, bound)).first;
        return it->second;
    };

    // Positions 0..bound-1 are free; P_bound onwards is the slice class.  A
    // jump at position j whose partial zeta starts in degree d contributes
    // degree >= (j+1) d, which is the pruning budget.
    std::vector<ClassVector> seq(bound + 1);
    seq[bound] = base.slice_class();
    TruncatedSeries total(alpha, bound);
    std::function<void(std::int64_t, std::uint64_t)> rec = [&](std::int64_t j, std::uint64_t spent) {
        if (j < 0) {
            TruncatedSeries term = TruncatedSeries::one(alpha, bound);
            for (std::uint32_t p = 0; p < bound && !term.is_zero(); ++p) {
                const TruncatedSeries z = partial_at(seq[p + 1], seq[p]).truncated(bound / (p + 1));
                const auto map = change_of_variable(base, seq, p);
                term *= substitute(z, alpha, map, bound);
            }
            total += term;
            return;
        }
        const auto pos = static_cast<std::uint32_t>(j);
        for (const auto& c : fibre) {
            const TruncatedSeries z = partial_at(seq[pos + 1], c).truncated(bound / (pos + 1));
            const auto low = z.lowest_degree();
            if (!low)
                continue;
            const std::uint64_t cost = spent + (pos + 1) * *low;
            if (cost > bound)
                continue;
            seq[pos] = c;
            rec(j - 1, cost);
        }
    };
    rec(static_cast<std::int64_t>(bound) - 1, 0);
    return total;
}

TruncatedSeries proliferation_sum(const SliceBase& base, std::uint32_t bound)
{
    return sequence_sum(base, bound, [&](const ClassVector& a, const ClassVector& c, std::uint32_t b) {
        return base_partial_zeta(base, a, c, b);
    });
}

TruncatedSeries single_sliver(const SliceBase& base, std::uint32_t bound)
{
    const Alphabet& alpha = base.alphabet();
    const ClassVector& slice = base.slice_class();
    TruncatedSeries zeta;
    switch (base.kind()) {
    case BaseKind::dvr:
        zeta = base_partial_zeta(base, slice, slice, bound);
        break;
    case BaseKind::hereditary: {
        const auto& [order, module] = std::get<2>(base.data());
        if (order.n != 1)
            throw StructuralError("single sliver needs a slice whose finite-colength submodules are all isomorphic");
        zeta = hereditary::total_zeta(order, module, bound);
        break;
    }
    case BaseKind::semisimple:
        if (std::any_of(slice.begin(), slice.end(), [](auto x) { return x != 0; }))
            throw StructuralError("single sliver needs a slice whose finite-colength submodules are all isomorphic");
        return TruncatedSeries::one(alpha, bound);
    }
    const std::vector<ClassVector> constant(bound + 1, slice);
    return product_eval(
        [&](std::uint32_t j) {
            return substitute(zeta.truncated(bound / (j + 1)), alpha, change_of_variable(base, constant, j), bound);
        },
        [](std::uint32_t j) { return j + 1; }, alpha, bound);
}

TruncatedSeries lifted_hey(const hey::SemisimpleData& data, const std::vector<std::uint32_t>& sigma,
                           std::uint32_t bound)
{
    const SliceBase base = SliceBase::semisimple(data, sigma);
    const Alphabet& alpha = base.alphabet();
    const auto& e = data.entries;
    return product_eval(
        [&](std::uint32_t n) {
            TruncatedSeries layer = TruncatedSeries::one(alpha, bound);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i].m == 0)
                    continue;
                // prod_{k<=n} w_{sigma^k i} with w = q^m z.
                Monomial mono(alpha.size());
                Rational w(1, 1);
                for (std::uint32_t k = 0; k <= n; ++k) {
                    const std::size_t s = base.sigma_power(i, k);
                    ++mono[s];
                    w *= Rational(ipow(Integer(e[s].q), e[s].m));
                }
                for (std::uint32_t j = 0; j < e[i].m; ++j)
                    layer *= geometric_in(alpha, bound, mono,
                                          w * rpow(Rational(e[i].q), static_cast<std::int64_t>(j) - e[i].m));
            }
            return layer;
        },
        [](std::uint32_t n) { return n + 1; }, alpha, bound);
}

DirichletTable hom_slice_dirichlet(std::uint32_t q, std::uint32_t r, std::uint32_t m, std::uint32_t count,
                                   std::uint64_t n_max)
{
    // One variable x with norm q^r stands for q^{-rs}; layer n is
    // prod_{j<m} (1 - q^{j+mn} x^{n+1})^{-count}.
    const Alphabet alpha = single_alphabet("x", q, r);
    const Integer norm = alpha[0].norm();
    std::uint32_t bound = 0;
    for (Integer p = norm; p <= Integer(std::to_string(n_max)); p *= norm)
        ++bound;
    const TruncatedSeries z = product_eval(
        [&](std::uint32_t n) {
            TruncatedSeries layer = TruncatedSeries::one(alpha, bound);
            const Monomial mono = Monomial::unit(1, 0, n + 1);
            for (std::uint32_t j = 0; j < m; ++j) {
                const TruncatedSeries g = geometric_in(alpha, bound, mono,
                                                       Rational(ipow(Integer(q), j + static_cast<std::uint64_t>(m) * n)));
                for (std::uint32_t c = 0; c < count; ++c)
                    layer *= g;
            }
            return layer;
        },
        [](std::uint32_t n) { return n + 1; }, alpha, bound);
    return dirichlet_coeffs(z, n_max);
}

LustigResult lustig_coeffs(std::uint32_t q, std::uint32_t i_max)
{
    LustigResult out;
    const Integer Q = q;
    for (std::uint32_t i = 0; i <= i_max; ++i) {
        Integer a = i == 0 ? Integer(1) : Integer(0);
        for (std::uint32_t j = 1; j <= i; ++j)
            a += qcomb::partition_count(i, j) * ipow(Q, i - j);
        out.partition.push_back(a);
    }
    const Alphabet alpha = single_alphabet("x", q, 1);
    const TruncatedSeries prod = product_eval(
        [&](std::uint32_t n) {
            return geometric_in(alpha, i_max, Monomial::unit(1, 0, n + 1), Rational(ipow(Q, n)));
        },
        [](std::uint32_t n) { return n + 1; }, alpha, i_max);
    for (std::uint32_t i = 0; i <= i_max; ++i) {
        const Rational c = prod.coefficient(Monomial::unit(1, 0, i));
        out.product.push_back(c.get_num());
        if (c != Rational(out.partition[i]))
            throw FormulaViolation("Lustig counts disagree at colength " + std::to_string(i) + ": partition formula "
                                   + out.partition[i].get_str() + ", product " + c.get_str());
    }
    return out;
}

namespace {

std::vector<Integer> dirichlet_mul(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> out(a.size(), 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 1; i * j < a.size(); ++j)
            if (b[j] != 0)
                out[i * j] += a[i] * b[j];
    }
    return out;
}

} // namespace

RossmannResult rossmann_coeffs(std::uint64_t n_max)
{
    if (n_max > 1'000'000)
        throw ResourceError("Rossmann expansion is limited to n_max <= 1000000");
    const std::size_t size = n_max + 1;
    RossmannResult out;

    // zeta(js - j + 1) = sum_k k^{j-1} (k^j)^{-s}.
    std::vector<Integer> zp(size, 0);
    zp[1] = 1;
    for (std::uint64_t j = 1; (std::uint64_t{1} << j) <= n_max; ++j) {
        std::vector<Integer> f(size, 0);
        for (std::uint64_t k = 1;; ++k) {
            const Integer kj = ipow(Integer(std::to_string(k)), j);
            if (kj > Integer(std::to_string(n_max)))
                break;
            f[kj.get_ui()] = ipow(Integer(std::to_string(k)), j - 1);
        }
        zp = dirichlet_mul(zp, f);
    }
    out.zeta_product = zp;

    // Local factors sum_i a_i(p) p^{-is} with Lustig's counts a_i(p).
    std::vector<Integer> ep(size, 0);
    ep[1] = 1;
    for (std::uint64_t p = 2; p <= n_max; ++p) {
        if (!gfq::is_prime(static_cast<std::uint32_t>(p)))
            continue;
        std::uint32_t imax = 0;
        for (std::uint64_t pp = p; pp <= n_max; pp *= p)
            ++imax;
        std::vector<Integer> local(size, 0);
        const auto counts = lustig_coeffs(static_cast<std::uint32_t>(p), imax).partition;
        std::uint64_t pp = 1;
        for (std::uint32_t i = 0; i <= imax; ++i, pp *= p)
            local[pp] = counts[i];
        ep = dirichlet_mul(ep, local);
    }
    out.euler_product = ep;

    for (std::size_t k = 1; k < size; ++k)
        if (zp[k] != ep[k])
            throw FormulaViolation("Rossmann coefficients disagree at n = " + std::to_string(k) + ": zeta product "
                                   + zp[k].get_str() + ", Euler product " + ep[k].get_str());
    return out;
}

TruncatedSeries zjv_factor(std::uint32_t ell, std::uint32_t q, std::uint32_t j, std::uint32_t bound)
{
    const Alphabet alpha = single_alphabet("v", q, 1);
    // <P, v>_j = q^{-l} prod_{k<=j} q^l v = q^{jl} v^{j+1}.
    const std::vector<SubstitutionTarget> map{
        {Rational(ipow(Integer(q), static_cast<std::uint64_t>(j) * ell)), Monomial::unit(1, 0, j + 1)}};
    const TruncatedSeries out = substitute(hereditary::solomon_hey_factor(ell, q, bound / (j + 1)), alpha, map, bound);

    TruncatedSeries closed = TruncatedSeries::one(alpha, bound);
    for (std::uint32_t i = 0; i < ell; ++i)
        closed *= geometric_in(alpha, bound, Monomial::unit(1, 0, j + 1),
                               Rational(ipow(Integer(q), i + static_cast<std::uint64_t>(j) * ell)));
    if (!(closed == out)) {
        const TruncatedSeries diff = closed - out;
        const auto& m = diff.terms().begin()->first;
        throw FormulaViolation("Z_j(V) closed form disagrees at " + to_string(m, alpha) + ": expected "
                               + closed.coefficient(m).get_str() + ", got " + out.coefficient(m).get_str());
    }
    return out;
}

FactoredProliferation brs_factored_prolif(const SliceBase& base, std::uint32_t bound)
{
    if (base.kind() != BaseKind::hereditary)
        throw StructuralError("the factored proliferation needs an indecomposable hereditary base");
    const auto& [order, module] = std::get<2>(base.data());
    const Alphabet& alpha = base.alphabet();
    const std::uint32_t ell = module.rank();

    Monomial v(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        v[i] = 1;
    const std::vector<SubstitutionTarget> vmap{{1, v}};
    FactoredProliferation out{TruncatedSeries::one(alpha, bound), TruncatedSeries()};
    for (std::uint32_t j = 0; j < bound; ++j)
        out.prefactor *= substitute(zjv_factor(ell, order.q, j, bound / order.n), alpha, vmap, bound);

    std::map<ClassVector, TruncatedSeries> brs_cache;
    out.remainder = sequence_sum(base, bound, [&](const ClassVector& a, const ClassVector& c, std::uint32_t b) {
        const std::uint32_t ra = std::accumulate(a.begin(), a.end(), 0u);
        const std::uint32_t rc = std::accumulate(c.begin(), c.end(), 0u);
        if (ra != rc || ra == 0)
            return TruncatedSeries(alpha, b);
        auto it = brs_cache.find(a);
        if (it == brs_cache.end()) {
            const auto mod = hereditary::ModuleSpec::from_top(order, a);
            it = brs_cache.emplace(a, hereditary::brs_F(order, mod, hereditary::brs_degree_bound(order, mod))).first;
        }
        const TruncatedSeries f = it->second;
        return rebound(slice_coefficient(f, alpha, Monomial(c)), b);
    });

    const TruncatedSeries direct = proliferation_sum(base, bound);
    const TruncatedSeries product = out.prefactor * out.remainder;
    if (!(product == direct)) {
        const TruncatedSeries diff = product - direct;
        const auto& m = diff.terms().begin()->first;
        throw FormulaViolation("factored proliferation disagrees at " + to_string(m, alpha) + ": expected "
                               + direct.coefficient(m).get_str() + ", got " + product.coefficient(m).get_str());
    }
    return out;
}

std::vector<std::uint32_t> sigma_from_json(const nlohmann::json& j, std::size_t size)
{
    std::vector<std::uint32_t> one_based;
    try {
        one_based = j.get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("sigma: ") + ex.what());
    }
    if (one_based.size() != size)
        throw SchemaError("sigma must list " + std::to_string(size) + " images");
    std::vector<std::uint32_t> out;
    std::vector<char> seen(size, 0);
    for (auto s : one_based) {
        if (s < 1 || s > size || seen[s - 1])
            throw SchemaError("sigma is not a permutation of 1.." + std::to_string(size));
        seen[s - 1] = 1;
        out.push_back(s - 1);
    }
    return out;
}

ProliferationSpec spec_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("base") || !j["base"].is_object())
        throw SchemaError("proliferation spec: expected an object with a \"base\" object");
    const auto& b = j["base"];
    const std::string kind = b.value("kind", "");
    SliceBase::Data data;
    if (kind == "semisimple") {
        data = hey::data_from_json(b);
    } else if (kind == "dvr") {
        try {
            data = DvrBase{b.at("q").get<std::uint32_t>(), b.at("m").get<std::uint32_t>()};
        } catch (const nlohmann::json::exception& ex) {
            throw SchemaError(std::string("proliferation spec: dvr base: ") + ex.what());
        }
        if (std::get<DvrBase>(data).q < 2)
            throw SchemaError("proliferation spec: q must be at least 2");
    } else if (kind == "hereditary") {
        auto [order, module] = hereditary::spec_from_json(b);
        data = SliceBase::Data(std::in_place_index<2>, order, module);
    } else {
        throw SchemaError("proliferation spec: unknown base kind '" + kind + "'");
    }
    const std::size_t size = base_alphabet(data).size();
    std::vector<std::uint32_t> sigma;
    if (j.contains("sigma"))
        sigma = sigma_from_json(j["sigma"], size);
    std::optional<std::uint32_t> truncate;
    if (j.contains("truncate")) {
        try {
            truncate = j["truncate"].get<std::uint32_t>();
        } catch (const nlohmann::json::exception& ex) {
            throw SchemaError(std::string("proliferation spec: truncate: ") + ex.what());
        }
    }
    try {
        return {SliceBase(std::move(data), std::move(sigma)), truncate};
    } catch (const StructuralError& ex) {
        throw SchemaError(std::string("proliferation spec: ") + ex.what());
    }
}

} // namespace brzeta::prolif
