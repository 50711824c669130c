#ifndef EISCONG_JSON_IO_HPP
#define EISCONG_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "criteria.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "errors.hpp"
#include "reduction.hpp"

namespace eiscong {

using json = nlohmann::json;

// {"order": m, "coeffs": ["p/q", ...]}
inline json cyclotomic_to_json(const Cyclotomic& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    return json{{"order", x.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    unsigned order = j.at("order").get<unsigned>();
    std::vector<mpq_class> coeffs;
    for (const auto& s : j.at("coeffs")) {
        mpq_class c(s.get<std::string>());
        c.canonicalize();
        coeffs.push_back(c);
    }
    return Cyclotomic::from_poly(order, std::move(coeffs));
}

// {"modulus": q, "order": n, "values": [e|null, ...]} (index a-1)
inline json character_to_json(const DirichletCharacter& chi) {
    json values = json::array();
    for (long long e : chi.exponents()) {
        if (e < 0)
            values.push_back(nullptr);
        else
            values.push_back(e);
    }
    return json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"values", values}};
}

inline DirichletCharacter character_from_json(const json& j) {
    long long q = j.at("modulus").get<long long>();
    long long n = j.at("order").get<long long>();
    std::vector<long long> values;
    for (const auto& v : j.at("values"))
        values.push_back(v.is_null() ? -1 : v.get<long long>());
    return DirichletCharacter::from_value_table(q, n, std::move(values));
}

// {"ell": l, "m": m, "min_poly": [c0, ..., 1]}
inline json place_to_json(const Place& w) {
    json poly = json::array();
    for (auto c : w.min_poly) poly.push_back(c);
    return json{{"ell", w.ell}, {"m", w.m}, {"min_poly", poly}};
}

// {"level": L, "weight": k, "coeffs": [cyclotomic...]}
inline json qexp_to_json(const QExpansion& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(cyclotomic_to_json(c));
    return json{{"level", f.level}, {"weight", f.weight}, {"coeffs", coeffs}};
}

inline json ffelem_to_json(const FFElem& e) {
    json coeffs = json::array();
    for (auto c : e.coeffs) coeffs.push_back(c);
    return coeffs;
}

inline json decision_to_json(const Decision& d) {
    json euler = json::array();
    for (auto& [p, v] : d.euler_values)
        euler.push_back(json{{"p", p}, {"value", ffelem_to_json(v)}});
    json out{{"verdict", d.verdict},
             {"condition", condition_name(d.condition)},
             {"place", place_to_json(d.place)},
             {"exact_values",
              json{{"bernoulli_reduced", ffelem_to_json(d.bernoulli_reduced)},
                   {"euler_factors", euler}}}};
    if (d.witness)
        out["witness"] = *d.witness;
    else
        out["witness"] = nullptr;
    return out;
}

// Inline character shorthand: "trivial", "quad:q", "gen:q:e:r" (canonical
// generator of a cyclic (Z/q)^x mapped to zeta_r^e), or a JSON file path.
inline DirichletCharacter parse_character(const std::string& spec) {
    if (spec == "trivial") return DirichletCharacter::trivial(1);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        size_t start = 0;
        while (true) {
            size_t pos = s.find(sep, start);
            parts.push_back(s.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return parts;
    };
    auto parts = split(spec, ':');
    if (parts[0] == "quad" && parts.size() == 2) {
        long long q = std::stoll(parts[1]);
        DirichletCharacter chi = DirichletCharacter::trivial(1);
        for (auto& [p, e] : factorize(q)) {
            long long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            std::vector<GeneratorImage> images;
            if (p == 2) {
                if (pe == 4)
                    images.push_back({3, 1, 2});
                else if (pe == 8)
                    images.push_back({5, 1, 2}); // chi_8: 5 -> -1, -1 -> 1
                else
                    throw domain_error("invalid-character",
                                       "no primitive quadratic character of conductor " + parts[1]);
            } else {
                if (e != 1)
                    throw domain_error("invalid-character",
                                       "no primitive quadratic character of conductor " + parts[1]);
                images.push_back({primitive_root(pe), 1, 2});
            }
            chi = chi * DirichletCharacter::from_generator_images(pe, images);
        }
        if (chi.conductor() != q)
            throw domain_error("invalid-character",
                               "no primitive quadratic character of conductor " + parts[1]);
        return chi;
    }
    if (parts[0] == "gen" && parts.size() == 4) {
        long long q = std::stoll(parts[1]);
        long long e = std::stoll(parts[2]);
        long long r = std::stoll(parts[3]);
        auto gens = canonical_generators(q);
        if (gens.size() != 1)
            throw domain_error("invalid-generator",
                               "gen shorthand requires a cyclic unit group; use --char-file");
        return DirichletCharacter::from_generator_images(q, {{gens[0].first, e, r}});
    }
    // otherwise treat as a path to a JSON character file
    std::ifstream in(spec);
    if (!in)
        throw domain_error("invalid-character", "cannot parse shorthand or open file: " + spec);
    json j;
    in >> j;
    return character_from_json(j);
}

} // namespace eiscong

#endif
