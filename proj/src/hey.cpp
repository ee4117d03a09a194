#include "brzeta/hey.hpp"

#include "brzeta/errors.hpp"
#include "brzeta/qcomb.hpp"

namespace brzeta::hey {

Alphabet SemisimpleData::alphabet() const
{
    std::vector<AlphabetEntry> out;
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back({e.label, e.q, e.r, 1});
    return Alphabet(std::move(out));
}

TruncatedSeries geometric(const Alphabet& alphabet, std::uint32_t bound, std::size_t index, const Integer& c)
{
    if (alphabet[index].weight == 0)
        throw StructuralError("geometric series in a weight-0 variable does not truncate");
    TruncatedSeries out(alphabet, bound);
    Integer power = 1;
    for (std::uint32_t k = 0; k <= bound; ++k) {
        out.add_term(Monomial::unit(alphabet.size(), index, k), Rational(power));
        power *= c;
    }
    return out;
}

TruncatedSeries hey_product(const SemisimpleData& data, std::uint32_t bound)
{
    const Alphabet alpha = data.alphabet();
    TruncatedSeries out = TruncatedSeries::one(alpha, bound);
    for (std::size_t i = 0; i < data.entries.size(); ++i) {
        const Integer q = data.entries[i].q;
        Integer qj = 1;
        for (std::uint32_t j = 0; j < data.entries[i].m; ++j) {
            out *= geometric(alpha, bound, i, qj);
            qj *= q;
        }
    }
    return out;
}

TruncatedSeries moebius_inverse_series(const SemisimpleData& data, std::uint32_t bound)
{
    const Alphabet alpha = data.alphabet();
    TruncatedSeries out = TruncatedSeries::one(alpha, bound);
    for (std::size_t i = 0; i < data.entries.size(); ++i) {
        const auto& e = data.entries[i];
        TruncatedSeries f(alpha, bound);
        for (std::uint32_t d = 0; d <= e.m; ++d)
            f.add_term(Monomial::unit(alpha.size(), i, d),
                       Rational(qcomb::gaussian_binomial(e.m, d, e.q) * qcomb::subspace_moebius(d, e.q)));
        out *= f;
    }
    return out;
}

SemisimpleData data_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw SchemaError("semisimple data: expected an object with an \"entries\" array");
    SemisimpleData data;
    const auto& arr = j["entries"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& e = arr[i];
        if (!e.is_object())
            throw SchemaError("semisimple data: entry " + std::to_string(i) + " is not an object");
        SemisimpleEntry out;
        try {
            out.q = e.at("q").get<std::uint32_t>();
            out.r = e.value("r", 1u);
            out.m = e.at("m").get<std::uint32_t>();
            out.label = e.contains("label") ? e["label"].get<std::string>()
                                            : (arr.size() == 1 ? std::string("z") : "z" + std::to_string(i + 1));
        } catch (const nlohmann::json::exception& ex) {
            throw SchemaError("semisimple data: entry " + std::to_string(i) + ": " + ex.what());
        }
        if (out.q < 2)
            throw SchemaError("semisimple data: q must be at least 2");
        if (out.r < 1)
            throw SchemaError("semisimple data: r must be at least 1");
        data.entries.push_back(std::move(out));
    }
    try {
        (void)data.alphabet();
    } catch (const StructuralError& ex) {
        throw SchemaError(std::string("semisimple data: ") + ex.what());
    }
    return data;
}

nlohmann::json to_json(const SemisimpleData& data)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : data.entries)
        arr.push_back({{"label", e.label}, {"q", e.q}, {"r", e.r}, {"m", e.m}});
    return {{"entries", arr}};
}

} // namespace brzeta::hey
