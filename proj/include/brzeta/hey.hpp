#pragma once

// Submodule zeta functions of modules over a semisimple top: the product
// prod_i prod_{j<m_i} (1 - q_i^j z_i)^{-1} and its polynomial inverse.

#include <string>
#include <vector>

#include <json.hpp>

#include "brzeta/series.hpp"

namespace brzeta::hey {

struct SemisimpleEntry {
    std::string label;
    std::uint32_t q = 2;
    std::uint32_t r = 1;
    std::uint32_t m = 0; // multiplicity of this simple in the top
};

struct SemisimpleData {
    std::vector<SemisimpleEntry> entries;

    /// Alphabet with one entry per simple (norm q^r).
    Alphabet alphabet() const;
};

/// Geometric series (1 - c z_index)^{-1}.
TruncatedSeries geometric(const Alphabet& alphabet, std::uint32_t bound, std::size_t index, const Integer& c);

TruncatedSeries hey_product(const SemisimpleData& data, std::uint32_t bound);

/// prod_i sum_d gaussian(m_i, d, q_i) (-1)^d q_i^{d(d-1)/2} z_i^d.
TruncatedSeries moebius_inverse_series(const SemisimpleData& data, std::uint32_t bound);

/// {"entries":[{"label":"z","q":2,"r":1,"m":2}, ...]}; labels default to z
/// (single entry) or z1, z2, ...
SemisimpleData data_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SemisimpleData& data);

} // namespace brzeta::hey
