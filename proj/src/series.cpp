#include "brzeta/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brzeta/errors.hpp"

namespace brzeta {

Integer ipow(const Integer& base, std::uint64_t e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational rpow(const Rational& base, std::int64_t e)
{
    if (e < 0) {
        if (base == 0)
            throw NonUnitError("negative power of zero");
        Rational inv = 1 / base;
        return rpow(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------- Alphabet

Integer AlphabetEntry::norm() const
{
    return ipow(Integer(q), r);
}

Alphabet::Alphabet(std::vector<AlphabetEntry> entries) : entries_(std::move(entries))
{
    std::set<std::string> seen;
    for (const auto& e : entries_) {
        if (e.label.empty())
            throw StructuralError("alphabet entry with empty label");
        if (!seen.insert(e.label).second)
            throw StructuralError("duplicate alphabet label '" + e.label + "'");
        if (e.q < 2)
            throw StructuralError("alphabet entry '" + e.label + "' has q < 2");
        if (e.r < 1)
            throw StructuralError("alphabet entry '" + e.label + "' has r < 1");
        if (e.weight > 1)
            throw StructuralError("alphabet weights are 0 or 1");
    }
}

std::optional<std::size_t> Alphabet::find(std::string_view label) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].label == label)
            return i;
    return std::nullopt;
}

Alphabet Alphabet::concat(const Alphabet& first, const Alphabet& second)
{
    std::vector<AlphabetEntry> all(first.entries_);
    all.insert(all.end(), second.entries_.begin(), second.entries_.end());
    return Alphabet(std::move(all));
}

Alphabet Alphabet::prefix(std::size_t count) const
{
    if (count > entries_.size())
        throw StructuralError("alphabet prefix longer than alphabet");
    return Alphabet(std::vector<AlphabetEntry>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(count)));
}

Alphabet Alphabet::with_weight(std::uint32_t weight) const
{
    auto copy = entries_;
    for (auto& e : copy)
        e.weight = weight;
    return Alphabet(std::move(copy));
}

Alphabet Alphabet::relabeled(std::string_view old_prefix, std::string_view new_prefix) const
{
    auto copy = entries_;
    for (auto& e : copy) {
        if (e.label.starts_with(old_prefix))
            e.label = std::string(new_prefix) + e.label.substr(old_prefix.size());
        else
            e.label = std::string(new_prefix) + e.label;
    }
    return Alphabet(std::move(copy));
}

Alphabet single_alphabet(std::string label, std::uint32_t q, std::uint32_t r)
{
    return Alphabet({AlphabetEntry{std::move(label), q, r, 1}});
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t size, std::size_t index, std::uint32_t power)
{
    Monomial m(size);
    m.exps_.at(index) = power;
    return m;
}

std::uint64_t Monomial::total_degree() const
{
    std::uint64_t d = 0;
    for (auto e : exps_)
        d += e;
    return d;
}

std::uint64_t Monomial::weighted_degree(const Alphabet& alphabet) const
{
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += static_cast<std::uint64_t>(exps_[i]) * alphabet[i].weight;
    return d;
}

Integer Monomial::norm(const Alphabet& alphabet) const
{
    Integer n = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0)
            n *= ipow(alphabet[i].norm(), exps_[i]);
    return n;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divisible_by(const Monomial& other) const
{
    if (other.size() != size())
        throw StructuralError("monomial size mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (other.exps_[i] > exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out(*this);
    out *= other;
    return out;
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    if (other.size() != size())
        throw StructuralError("monomial size mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps_[i] += other.exps_[i];
    return *this;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    if (!divisible_by(other))
        throw StructuralError("monomial is not divisible");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] -= other.exps_[i];
    return out;
}

Monomial Monomial::pow(std::uint32_t e) const
{
    Monomial out(*this);
    for (auto& x : out.exps_)
        x *= e;
    return out;
}

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(Alphabet alphabet, std::uint32_t bound)
    : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))), bound_(bound)
{
}

TruncatedSeries TruncatedSeries::one(const Alphabet& alphabet, std::uint32_t bound)
{
    return constant(alphabet, bound, 1);
}

TruncatedSeries TruncatedSeries::constant(const Alphabet& alphabet, std::uint32_t bound, const Rational& c)
{
    return term(alphabet, bound, Monomial(alphabet.size()), c);
}

TruncatedSeries TruncatedSeries::term(const Alphabet& alphabet, std::uint32_t bound, const Monomial& m,
                                      const Rational& c)
{
    if (m.size() != alphabet.size())
        throw StructuralError("monomial does not match alphabet");
    TruncatedSeries s(alphabet, bound);
    s.add_term(m, c);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(const Alphabet& alphabet, std::uint32_t bound, std::size_t index,
                                                   std::span<const Rational> coeffs)
{
    TruncatedSeries s(alphabet, bound);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.add_term(Monomial::unit(alphabet.size(), index, static_cast<std::uint32_t>(k)), coeffs[k]);
    return s;
}

Rational TruncatedSeries::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const
{
    return coefficient(Monomial(alphabet_->size()));
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c)
{
    if (m.size() != alphabet_->size())
        throw StructuralError("monomial does not match alphabet");
    if (c == 0 || m.weighted_degree(*alphabet_) > bound_)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize(); // callers may hand in an unreduced num/den pair
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<std::uint64_t> TruncatedSeries::lowest_degree() const
{
    std::optional<std::uint64_t> low;
    for (const auto& [m, c] : terms_) {
        auto d = m.weighted_degree(*alphabet_);
        if (!low || d < *low)
            low = d;
    }
    return low;
}

std::uint64_t TruncatedSeries::max_degree() const
{
    std::uint64_t high = 0;
    for (const auto& [m, c] : terms_)
        high = std::max(high, m.weighted_degree(*alphabet_));
    return high;
}

bool TruncatedSeries::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

bool TruncatedSeries::is_nonnegative_integral() const
{
    return !first_non_natural().has_value();
}

std::optional<std::pair<Monomial, Rational>> TruncatedSeries::first_non_natural() const
{
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1 || c < 0)
            return std::make_pair(m, c);
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t new_bound) const
{
    if (new_bound > bound_)
        throw StructuralError("cannot raise the truncation bound");
    TruncatedSeries out(*this);
    out.bound_ = new_bound;
    std::erase_if(out.terms_, [&](const auto& t) { return t.first.weighted_degree(*alphabet_) > new_bound; });
    return out;
}

bool TruncatedSeries::same_alphabet(const TruncatedSeries& other) const
{
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
}

void TruncatedSeries::require_same_alphabet(const TruncatedSeries& other, const char* what) const
{
    if (!same_alphabet(other))
        throw StructuralError(std::string("alphabet mismatch in ") + what);
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const
{
    TruncatedSeries out(*this);
    out += other;
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    require_same_alphabet(other, "addition");
    if (other.bound_ < bound_)
        *this = truncated(other.bound_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const
{
    return *this + (-other);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    require_same_alphabet(other, "multiplication");
    const std::uint32_t bound = std::min(bound_, other.bound_);
    TruncatedSeries out(*alphabet_, bound);
    out.alphabet_ = alphabet_;

    struct Entry {
        std::uint64_t degree;
        const Monomial* m;
        const Rational* c;
    };
    auto sorted = [&](const TermMap& terms) {
        std::vector<Entry> v;
        v.reserve(terms.size());
        for (const auto& [m, c] : terms)
            v.push_back({m.weighted_degree(*alphabet_), &m, &c});
        std::stable_sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.degree < b.degree; });
        return v;
    };
    const auto left = sorted(terms_);
    const auto right = sorted(other.terms_);
    for (const auto& a : left) {
        if (a.degree > bound)
            break;
        for (const auto& b : right) {
            if (a.degree + b.degree > bound)
                break;
            out.add_term(*a.m * *b.m, *a.c * *b.c);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const
{
    TruncatedSeries out(*alphabet_, bound_);
    out.alphabet_ = alphabet_;
    if (c == 0)
        return out;
    for (const auto& [m, x] : terms_)
        out.terms_.emplace(m, x * c);
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other)
{
    *this = *this * other;
    return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const
{
    return same_alphabet(other) && bound_ == other.bound_ && terms_ == other.terms_;
}

bool agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::uint32_t bound)
{
    if (!a.same_alphabet(b))
        throw StructuralError("alphabet mismatch in comparison");
    if (bound > a.bound() || bound > b.bound())
        throw StructuralError("comparison bound exceeds a series bound");
    return a.truncated(bound).terms() == b.truncated(bound).terms();
}

// ---------------------------------------------------------------- inverse

TruncatedSeries invert(const TruncatedSeries& a)
{
    const Rational c0 = a.constant_term();
    if (c0 == 0)
        throw NonUnitError("series has zero constant term");
    const Monomial one(a.alphabet().size());
    TruncatedSeries x(a.alphabet(), a.bound());
    for (const auto& [m, c] : a.terms()) {
        if (m == one)
            continue;
        if (m.weighted_degree(a.alphabet()) == 0)
            throw NonUnitError("non-constant part of degree 0 is not nilpotent under truncation");
        x.add_term(m, -c / c0);
    }
    // 1/(1 - x) = 1 + x(1 + x(1 + ...)), B nested steps suffice since x has no degree-0 part.
    TruncatedSeries r = TruncatedSeries::one(a.alphabet(), a.bound());
    if (!x.is_zero()) {
        const auto low = *x.lowest_degree();
        for (std::uint64_t k = 0; k * low < a.bound() + 1ULL; ++k)
            r = TruncatedSeries::one(a.alphabet(), a.bound()) + x * r;
    }
    return r * (1 / c0);
}

// ---------------------------------------------------------------- substitution

TruncatedSeries substitute(const TruncatedSeries& a, const Alphabet& target_alphabet,
                           std::span<const SubstitutionTarget> map, std::uint32_t out_bound)
{
    const Alphabet& src = a.alphabet();
    if (map.size() != src.size())
        throw StructuralError("substitution map does not cover the alphabet");
    std::optional<std::uint64_t> least;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i].target.size() != target_alphabet.size())
            throw StructuralError("substitution target does not match the target alphabet");
        if (map[i].scalar <= 0)
            throw StructuralError("substitution scalars must be positive");
        const auto d = map[i].target.weighted_degree(target_alphabet);
        if (src[i].weight == 0)
            continue;
        if (d == 0)
            throw StructuralError("substitution sends '" + src[i].label + "' to a degree-0 target");
        least = least ? std::min(*least, d) : d;
    }
    if (least && out_bound > (static_cast<std::uint64_t>(a.bound()) + 1) * *least - 1)
        throw StructuralError("output bound exceeds what the input truncation determines");

    TruncatedSeries out(target_alphabet, out_bound);
    for (const auto& [m, c] : a.terms()) {
        Monomial image(target_alphabet.size());
        Rational scale = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            image *= map[i].target.pow(m[i]);
            scale *= rpow(map[i].scalar, m[i]);
        }
        out.add_term(image, scale);
    }
    return out;
}

TruncatedSeries substitute(const TruncatedSeries& a, std::span<const SubstitutionTarget> map)
{
    return substitute(a, a.alphabet(), map, a.bound());
}

// ---------------------------------------------------------------- products

TruncatedSeries product_eval(const std::function<TruncatedSeries(std::uint32_t)>& factor,
                             const std::function<std::uint32_t(std::uint32_t)>& floor, const Alphabet& alphabet,
                             std::uint32_t bound, std::uint32_t max_stall)
{
    TruncatedSeries acc = TruncatedSeries::one(alphabet, bound);
    std::optional<std::uint32_t> previous;
    std::uint32_t stall = 0;
    for (std::uint32_t k = 0;; ++k) {
        const std::uint32_t f = floor(k);
        if (previous) {
            if (f < *previous)
                throw PseudoConvergenceError("product floor decreased at factor " + std::to_string(k));
            stall = f == *previous ? stall + 1 : 0;
            if (stall > max_stall)
                throw PseudoConvergenceError("product floor stalled at " + std::to_string(f));
        }
        previous = f;
        if (f > bound)
            break;
        TruncatedSeries fk = factor(k);
        if (!fk.same_alphabet(acc))
            throw StructuralError("product factor over a different alphabet");
        if (fk.constant_term() != 1)
            throw PseudoConvergenceError("factor " + std::to_string(k) + " has constant term != 1");
        const auto nontrivial = fk - TruncatedSeries::one(alphabet, fk.bound());
        if (auto low = nontrivial.lowest_degree(); low && *low < f)
            throw PseudoConvergenceError("factor " + std::to_string(k) + " differs from 1 below its floor");
        acc *= fk.bound() < bound ? fk : fk.truncated(bound);
        if (acc.bound() < bound)
            throw StructuralError("product factor truncated below the requested bound");
    }
    return acc;
}

// ---------------------------------------------------------------- Dirichlet

Rational DirichletTable::at(std::uint64_t n) const
{
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Rational(0) : it->second;
}

DirichletTable dirichlet_coeffs(const TruncatedSeries& a, std::uint64_t n_max)
{
    DirichletTable table;
    const Alphabet& alpha = a.alphabet();
    std::optional<Integer> least_norm;
    for (const auto& e : alpha.entries()) {
        if (e.weight == 0) {
            table.complete = false;
            table.warning = "alphabet has ungraded entries; completeness cannot be certified";
            continue;
        }
        const Integer n = e.norm();
        if (!least_norm || n < *least_norm)
            least_norm = n;
    }
    if (least_norm && table.warning.empty()) {
        const Integer reach = ipow(*least_norm, static_cast<std::uint64_t>(a.bound()) + 1);
        if (reach <= Integer(std::to_string(n_max))) {
            table.complete = false;
            table.warning = "truncation bound " + std::to_string(a.bound()) + " does not determine coefficients up to " +
                            std::to_string(n_max) + " (need least norm^(bound+1) > n_max)";
        }
    }
    const Integer limit(std::to_string(n_max));
    for (const auto& [m, c] : a.terms()) {
        const Integer n = m.norm(alpha);
        if (n > limit)
            continue;
        table.coeffs[n.get_ui()] += c;
    }
    std::erase_if(table.coeffs, [](const auto& kv) { return kv.second == 0; });
    return table;
}

// ---------------------------------------------------------------- slicing

TruncatedSeries slice_coefficient(const TruncatedSeries& a, const Alphabet& first, const Monomial& h)
{
    const Alphabet& full = a.alphabet();
    if (first.size() > full.size() || full.prefix(first.size()) != first)
        throw StructuralError("slice alphabet is not a prefix of the series alphabet");
    const std::size_t k = first.size();
    if (h.size() != full.size() - k)
        throw StructuralError("slice monomial does not match the trailing alphabet");
    std::uint64_t hdeg = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        hdeg += static_cast<std::uint64_t>(h[i]) * full[k + i].weight;
    if (hdeg > a.bound())
        throw StructuralError("slice monomial lies above the truncation bound");
    TruncatedSeries out(first, static_cast<std::uint32_t>(a.bound() - hdeg));
    for (const auto& [m, c] : a.terms()) {
        bool match = true;
        for (std::size_t i = 0; i < h.size() && match; ++i)
            match = m[k + i] == h[i];
        if (!match)
            continue;
        std::vector<std::uint32_t> head(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(k));
        out.add_term(Monomial(std::move(head)), c);
    }
    return out;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Alphabet& alphabet)
{
    auto arr = nlohmann::json::array();
    for (const auto& e : alphabet.entries()) {
        nlohmann::json j = {{"label", e.label}, {"q", e.q}, {"r", e.r}};
        if (e.weight != 1)
            j["weight"] = e.weight;
        arr.push_back(std::move(j));
    }
    return arr;
}

Alphabet alphabet_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw SchemaError("alphabet must be an array");
    std::vector<AlphabetEntry> entries;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("label") || !e.contains("q"))
            throw SchemaError("alphabet entries need label and q");
        AlphabetEntry entry;
        entry.label = e.at("label").get<std::string>();
        entry.q = e.at("q").get<std::uint32_t>();
        entry.r = e.value("r", 1u);
        entry.weight = e.value("weight", 1u);
        entries.push_back(std::move(entry));
    }
    try {
        return Alphabet(std::move(entries));
    } catch (const StructuralError& err) {
        throw SchemaError(err.what());
    }
}

nlohmann::json to_json(const TruncatedSeries& s)
{
    auto terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back({{"exp", m.exponents()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return {{"alphabet", to_json(s.alphabet())}, {"bound", s.bound()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    try {
        Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
        TruncatedSeries s(alphabet, j.at("bound").get<std::uint32_t>());
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exp").get<std::vector<std::uint32_t>>();
            if (exps.size() != alphabet.size())
                throw SchemaError("term exponent vector does not match alphabet");
            auto text = [](const nlohmann::json& v) {
                return v.is_string() ? v.get<std::string>() : v.dump();
            };
            Rational c(Integer(text(t.at("num"))), Integer(text(t.value("den", nlohmann::json("1")))));
            c.canonicalize();
            s.add_term(Monomial(std::move(exps)), c);
        }
        return s;
    } catch (const nlohmann::json::exception& err) {
        throw SchemaError(std::string("series document: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw SchemaError(std::string("series document: ") + err.what());
    }
}

std::string to_string(const Monomial& m, const Alphabet& alphabet)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += alphabet[i].label;
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const TruncatedSeries& s)
{
    if (s.is_zero())
        return "0";
    // Ascending degree reads better than lexicographic exponent order.
    std::vector<std::pair<const Monomial*, const Rational*>> order;
    for (const auto& [m, c] : s.terms())
        order.emplace_back(&m, &c);
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return a.first->weighted_degree(s.alphabet()) < b.first->weighted_degree(s.alphabet());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : order) {
        const bool neg = *c < 0;
        const Rational mag = neg ? Rational(-*c) : *c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (m->is_one())
            os << mag.get_str();
        else if (mag == 1)
            os << to_string(*m, s.alphabet());
        else
            os << mag.get_str() << '*' << to_string(*m, s.alphabet());
    }
    return os.str();
}

} // namespace brzeta
