#include "brzeta/brzeta.h"

#include <cstring>
#include <string>

#include "brzeta/errors.hpp"
#include "brzeta/hereditary.hpp"
#include "brzeta/hey.hpp"
#include "brzeta/oracle.hpp"
#include "brzeta/prolif.hpp"
#include "brzeta/verify.hpp"

struct brz_series {
    brzeta::TruncatedSeries value;
};

struct brz_table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string warning;
};

namespace {

using namespace brzeta;

thread_local std::string last_error;

template <class F>
brz_status guarded(F&& f)
{
    last_error.clear();
    try {
        f();
        return BRZ_OK;
    } catch (const SchemaError& e) {
        last_error = e.what();
        return BRZ_SCHEMA;
    } catch (const FormulaViolation& e) {
        last_error = e.what();
        return BRZ_FORMULA;
    } catch (const ResourceError& e) {
        last_error = e.what();
        return BRZ_RESOURCE;
    } catch (const PseudoConvergenceError& e) {
        last_error = e.what();
        return BRZ_FORMULA;
    } catch (const StructuralError& e) {
        last_error = e.what();
        return BRZ_STRUCTURE;
    } catch (const Error& e) {
        // ConfigError, NonUnitError: the request itself is unusable.
        last_error = e.what();
        return BRZ_INVALID_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return BRZ_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BRZ_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return BRZ_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (p == nullptr)
        throw std::invalid_argument(std::string(what) + " must not be NULL");
}

nlohmann::json parse(const char* text, const char* what)
{
    require(text, what);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

std::vector<std::uint32_t> class_vector(const char* text, std::size_t size)
{
    const auto j = parse(text, "top class");
    std::vector<std::uint32_t> v;
    try {
        v = j.get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("top class: ") + e.what());
    }
    if (v.size() != size)
        throw SchemaError("top class has " + std::to_string(v.size()) + " entries, expected " + std::to_string(size));
    return v;
}

void emit(brz_series** out, TruncatedSeries s)
{
    if (out != nullptr)
        *out = new brz_series{std::move(s)};
}

char* copy(const std::string& s)
{
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

brz_table* table_of(std::vector<std::string> columns)
{
    auto* t = new brz_table;
    t->columns = std::move(columns);
    return t;
}

std::size_t ideal_generator(const oracle::FiniteModuleRep& m)
{
    if (m.kind == "local2d")
        return m.generator("u");
    if (m.kind == "triangular")
        return m.generator("g");
    return m.generator("t");
}

} // namespace

extern "C" {

const char* brz_version(void)
{
    return "1.0.0";
}

const char* brz_last_error(void)
{
    return last_error.c_str();
}

brz_status brz_hey(const char* data_json, uint32_t bound, int inverse, brz_series** out)
{
    return guarded([&] {
        require(out, "out");
        const auto data = hey::data_from_json(parse(data_json, "semisimple data"));
        emit(out, inverse ? hey::moebius_inverse_series(data, bound) : hey::hey_product(data, bound));
    });
}

brz_status brz_hereditary(const char* spec_json, uint32_t bound, brz_hereditary_mode mode, const char* top_json,
                          brz_series** out)
{
    return guarded([&] {
        require(out, "out");
        const auto [order, module] = hereditary::spec_from_json(parse(spec_json, "hereditary module"));
        if (top_json != nullptr) {
            emit(out, hereditary::partial_zeta(order, module, class_vector(top_json, order.n), bound));
            return;
        }
        switch (mode) {
        case BRZ_HEREDITARY_TWO_VARIABLE:
            emit(out, hereditary::brz_two_variable(order, module, bound));
            return;
        case BRZ_HEREDITARY_TOTAL:
            emit(out, hereditary::total_zeta(order, module, bound));
            return;
        case BRZ_HEREDITARY_BRS: {
            // F is only certified at a bound past its degree.
            const std::uint32_t full = std::max(bound, hereditary::brs_degree_bound(order, module));
            auto f = hereditary::brs_F(order, module, full);
            emit(out, full == bound ? std::move(f) : f.truncated(bound));
            return;
        }
        }
        throw std::invalid_argument("unknown hereditary mode");
    });
}

brz_status brz_lifted_hey(const char* data_json, const char* sigma_json, uint32_t bound, brz_series** out)
{
    return guarded([&] {
        require(out, "out");
        const auto data = hey::data_from_json(parse(data_json, "semisimple data"));
        std::vector<std::uint32_t> sigma;
        if (sigma_json != nullptr)
            sigma = prolif::sigma_from_json(parse(sigma_json, "sigma"), data.entries.size());
        else
            for (std::uint32_t i = 0; i < data.entries.size(); ++i)
                sigma.push_back(i);
        emit(out, prolif::lifted_hey(data, sigma, bound));
    });
}

brz_status brz_prolif(const char* spec_json, int64_t bound, brz_prolif_mode mode, brz_series** out,
                      brz_series** prefactor, brz_series** remainder)
{
    return guarded([&] {
        require(out, "out");
        const auto spec = prolif::spec_from_json(parse(spec_json, "proliferation spec"));
        std::uint32_t b = 0;
        if (bound >= 0)
            b = static_cast<std::uint32_t>(bound);
        else if (spec.truncate)
            b = *spec.truncate;
        else
            throw SchemaError("proliferation spec: no truncation bound given");
        switch (mode) {
        case BRZ_PROLIF_SUM:
            emit(out, prolif::proliferation_sum(spec.base, b));
            return;
        case BRZ_PROLIF_SLIVER:
            emit(out, prolif::single_sliver(spec.base, b));
            return;
        case BRZ_PROLIF_FACTORED: {
            auto f = prolif::brs_factored_prolif(spec.base, b);
            emit(out, f.prefactor * f.remainder);
            emit(prefactor, std::move(f.prefactor));
            emit(remainder, std::move(f.remainder));
            return;
        }
        }
        throw std::invalid_argument("unknown proliferation mode");
    });
}

brz_status brz_oracle(const char* model_json, uint32_t colength, const char* top_json, const char* chain_json,
                      int two_variable, brz_series** out)
{
    return guarded([&] {
        require(out, "out");
        const auto model = oracle::model_from_json(parse(model_json, "model"), colength);
        const int selectors = (top_json != nullptr) + (chain_json != nullptr) + (two_variable != 0);
        if (selectors > 1)
            throw std::invalid_argument("choose at most one of top class, fibre chain and two-variable output");
        if (top_json != nullptr) {
            emit(out, oracle::empirical_zeta(model, colength, class_vector(top_json, model.idempotents.size())));
        } else if (chain_json != nullptr) {
            const auto chain = oracle::chain_from_json(parse(chain_json, "chain"));
            TruncatedSeries s(model.alphabet, colength);
            for (const auto& x : oracle::fiber_enumerate(model, ideal_generator(model), chain, colength))
                s.add_term(oracle::composition_class(model, x), 1);
            emit(out, std::move(s));
        } else if (two_variable) {
            emit(out, oracle::empirical_two_variable(model, colength));
        } else {
            emit(out, oracle::empirical_zeta(model, colength, std::nullopt));
        }
    });
}

brz_status brz_lustig(uint32_t q, uint32_t i_max, brz_table** out)
{
    return guarded([&] {
        require(out, "out");
        const auto res = prolif::lustig_coeffs(q, i_max);
        auto* t = table_of({"i", "a_i"});
        for (std::size_t i = 0; i < res.partition.size(); ++i)
            t->rows.push_back({std::to_string(i), res.partition[i].get_str()});
        *out = t;
    });
}

brz_status brz_rossmann(uint64_t n_max, brz_table** out)
{
    return guarded([&] {
        require(out, "out");
        const auto res = prolif::rossmann_coeffs(n_max);
        auto* t = table_of({"n", "a_n"});
        for (std::size_t n = 1; n < res.zeta_product.size(); ++n)
            t->rows.push_back({std::to_string(n), res.zeta_product[n].get_str()});
        *out = t;
    });
}

namespace {

brz_table* dirichlet_table(const DirichletTable& d, std::uint64_t n_max)
{
    auto* t = table_of({"n", "a_n"});
    for (std::uint64_t n = 1; n <= n_max; ++n)
        t->rows.push_back({std::to_string(n), d.at(n).get_str()});
    t->warning = d.warning;
    return t;
}

} // namespace

brz_status brz_hom_slice(uint32_t q, uint32_t r, uint32_t m, uint32_t count, uint64_t n_max, brz_table** out)
{
    return guarded([&] {
        require(out, "out");
        *out = dirichlet_table(prolif::hom_slice_dirichlet(q, r, m, count, n_max), n_max);
    });
}

brz_status brz_series_dirichlet(const brz_series* s, uint64_t n_max, brz_table** out)
{
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = dirichlet_table(dirichlet_coeffs(s->value, n_max), n_max);
    });
}

brz_status brz_series_check_natural(const brz_series* s)
{
    return guarded([&] {
        require(s, "series");
        if (auto bad = s->value.first_non_natural())
            throw FormulaViolation("coefficient of " + to_string(bad->first, s->value.alphabet()) + " is "
                                   + bad->second.get_str() + ", not a nonnegative integer");
    });
}

brz_status brz_series_json(const brz_series* s, char** out)
{
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = copy(to_json(s->value).dump());
    });
}

brz_status brz_series_csv(const brz_series* s, char** out)
{
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        const Alphabet& alpha = s->value.alphabet();
        std::string text;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            text += csv_escape(alpha[i].label) + ",";
        text += "coefficient\n";
        for (const auto& [m, c] : s->value.terms()) {
            for (auto e : m.exponents())
                text += std::to_string(e) + ",";
            text += c.get_str() + "\n";
        }
        *out = copy(text);
    });
}

brz_status brz_series_text(const brz_series* s, char** out)
{
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = copy(to_string(s->value));
    });
}

brz_status brz_table_json(const brz_table* t, char** out)
{
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        nlohmann::json j{{"columns", t->columns}, {"rows", t->rows}};
        if (!t->warning.empty())
            j["warning"] = t->warning;
        *out = copy(j.dump());
    });
}

brz_status brz_table_csv(const brz_table* t, char** out)
{
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        std::string text;
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                text += (i ? "," : "") + csv_escape(cells[i]);
            text += "\n";
        };
        line(t->columns);
        for (const auto& r : t->rows)
            line(r);
        *out = copy(text);
    });
}

const char* brz_table_warning(const brz_table* t)
{
    return t == nullptr ? "" : t->warning.c_str();
}

brz_status brz_verify(const char* suite, int64_t max, char** json_out, int* all_passed)
{
    return guarded([&] {
        require(json_out, "json_out");
        verify::SuiteOptions options;
        if (max >= 0)
            options.max = static_cast<std::uint64_t>(max);
        std::vector<verify::SuiteResult> results;
        if (suite == nullptr)
            results = verify::run_all(options);
        else
            results.push_back(verify::run_suite(suite, options));
        auto j = nlohmann::json::array();
        bool ok = true;
        for (const auto& r : results) {
            j.push_back(verify::to_json(r));
            ok = ok && r.passed();
        }
        if (all_passed != nullptr)
            *all_passed = ok ? 1 : 0;
        *json_out = copy(j.dump());
    });
}

brz_status brz_verify_suites(char** json_out)
{
    return guarded([&] {
        require(json_out, "json_out");
        auto j = nlohmann::json::array();
        for (const auto& s : verify::suites())
            j.push_back({{"id", s.id}, {"name", s.name}, {"summary", s.summary}});
        *json_out = copy(j.dump());
    });
}

void brz_series_free(brz_series* s)
{
    delete s;
}

void brz_table_free(brz_table* t)
{
    delete t;
}

void brz_string_free(char* s)
{
    delete[] s;
}

} // extern "C"
