#pragma once

#include "mwlab/bigint.hpp"
#include "mwlab/codes.hpp"
#include "mwlab/enumerators.hpp"
#include "mwlab/field.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwlab {

using Json = nlohmann::ordered_json;

// Code file schema:
//   {"q": 2, "n": 3, "generators": [[1,1,1]]}
// with an optional "modulus" (ascending coefficients of the defining
// polynomial) for extension fields.
inline LinearCode code_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("code file: top level must be an object");
    for (const char* key : {"q", "n", "generators"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("code file: missing field '") + key + "'");

    if (!j["q"].is_number_unsigned())
        throw std::invalid_argument("code file: 'q' must be a positive integer");
    std::uint64_t q = j["q"].get<std::uint64_t>();

    FieldPtr field;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array())
            throw std::invalid_argument("code file: 'modulus' must be an array of coefficients");
        std::vector<fq_t> modulus;
        for (const Json& c : j["modulus"]) {
            if (!c.is_number_unsigned())
                throw std::invalid_argument("code file: modulus coefficients must be nonnegative integers");
            modulus.push_back(c.get<fq_t>());
        }
        field = Field::make(q, modulus);
    } else {
        field = Field::make(q);
    }

    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw std::invalid_argument("code file: 'n' must be a positive integer");
    std::uint32_t n = j["n"].get<std::uint32_t>();

    if (!j["generators"].is_array())
        throw std::invalid_argument("code file: 'generators' must be an array of rows");
    std::vector<Word> rows;
    for (const Json& row : j["generators"]) {
        if (!row.is_array())
            throw std::invalid_argument("code file: each generator row must be an array");
        Word w;
        for (const Json& v : row) {
            if (!v.is_number_unsigned())
                throw std::invalid_argument("code file: entries must be integers in [0, q)");
            std::uint64_t x = v.get<std::uint64_t>();
            if (x >= q)
                throw std::invalid_argument("code file: entry " + std::to_string(x) +
                                            " is not a label below q");
            w.push_back(static_cast<fq_t>(x));
        }
        rows.push_back(std::move(w));
    }
    return LinearCode::from_generator(std::move(field), n, rows);
}

inline LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("code file '" + path + "': " + e.what());
    }
    return code_from_json(j);
}

// Enumerator schema: {"n": 3, "coeffs": ["1", "0", "0", "1"]} with decimal
// strings, so arbitrarily large counts survive the round trip.
inline Json enumerator_to_json(const WeightEnumerator& w) {
    Json j;
    j["n"] = w.n();
    Json coeffs = Json::array();
    for (const BigInt& c : w.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline WeightEnumerator enumerator_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
        throw std::invalid_argument("enumerator: expected object with 'n' and 'coeffs'");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw std::invalid_argument("enumerator: 'n' must be a positive integer");
    std::uint32_t n = j["n"].get<std::uint32_t>();
    if (!j["coeffs"].is_array())
        throw std::invalid_argument("enumerator: 'coeffs' must be an array");
    std::vector<BigInt> coeffs;
    for (const Json& c : j["coeffs"]) {
        if (!c.is_string())
            throw std::invalid_argument("enumerator: coefficients must be decimal strings");
        try {
            coeffs.emplace_back(c.get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("enumerator: malformed coefficient '" +
                                        c.get<std::string>() + "'");
        }
    }
    if (coeffs.size() != std::size_t(n) + 1)
        throw std::invalid_argument("enumerator: need exactly n+1 coefficients");
    return WeightEnumerator(n, std::move(coeffs));
}

} // namespace mwlab
