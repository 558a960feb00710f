#include "galdef/congruence.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "json.hpp"

#include "galdef/errors.hpp"
#include "galdef/nt.hpp"

namespace galdef {

std::optional<std::uint32_t> Newform::an_residue(std::uint32_t n, std::uint32_t ell) const {
    if (n == 0)
        return std::nullopt;
    if (!an_int.empty()) {
        if (n > an_int.size())
            return std::nullopt;
        std::int64_t v = an_int[n - 1] % static_cast<std::int64_t>(ell);
        if (v < 0)
            v += ell;
        return static_cast<std::uint32_t>(v);
    }
    auto it = an_mod.find(ell);
    if (it == an_mod.end() || n > it->second.size())
        return std::nullopt;
    return it->second[n - 1];
}

std::size_t Newform::coeff_count(std::uint32_t ell) const {
    if (!an_int.empty())
        return an_int.size();
    auto it = an_mod.find(ell);
    return it == an_mod.end() ? 0 : it->second.size();
}

std::uint64_t sturm_bound(std::uint64_t N, std::uint32_t k) {
    if (N < 1)
        throw invalid_parameters("sturm_bound: N must be positive");
    if (k < 2 || k % 2 != 0)
        throw invalid_parameters("sturm_bound: weight must be a positive even integer");
    std::uint64_t mu = N;
    for (std::uint64_t p : prime_divisors(N))
        mu = mu / p * (p + 1);
    std::uint64_t b = k * mu / 12;
    return b < 1 ? 1 : b;
}

namespace {

using nlohmann::json;

const json& need(const json& obj, const std::string& where, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw data_error(where + "." + field + ": missing");
    return *it;
}

Newform parse_form(const json& jf, const std::string& where) {
    if (!jf.is_object())
        throw data_error(where + ": expected an object");
    Newform f;

    const json& jl = need(jf, where, "label");
    if (!jl.is_string())
        throw data_error(where + ".label: expected a string");
    f.label = jl.get<std::string>();

    const json& jn = need(jf, where, "level");
    if (!jn.is_number_unsigned() || jn.get<std::uint64_t>() < 1)
        throw data_error(where + ".level: expected a positive integer");
    f.level = jn.get<std::uint64_t>();

    const json& jw = need(jf, where, "weight");
    if (!jw.is_number_unsigned())
        throw data_error(where + ".weight: expected a positive even integer");
    f.weight = jw.get<std::uint32_t>();
    if (f.weight < 2 || f.weight % 2 != 0)
        throw data_error(where + ".weight: expected a positive even integer");

    const json& jo = need(jf, where, "orbit_id");
    if (!jo.is_string() || jo.get<std::string>().empty())
        throw data_error(where + ".orbit_id: expected a nonempty string");
    f.orbit_id = jo.get<std::string>();

    bool have_coeffs = false;
    if (auto it = jf.find("an_int"); it != jf.end()) {
        if (!it->is_array() || it->empty())
            throw data_error(where + ".an_int: expected a nonempty array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& v = (*it)[i];
            if (!v.is_number_integer())
                throw data_error(where + ".an_int[" + std::to_string(i) +
                                 "]: expected an integer");
            f.an_int.push_back(v.get<std::int64_t>());
        }
        if (f.an_int[0] != 1)
            throw data_error(where + ".an_int[0]: a_1 must be 1 (form " + f.label + ")");
        have_coeffs = true;
    }
    if (auto it = jf.find("an_mod"); it != jf.end()) {
        if (!it->is_object())
            throw data_error(where + ".an_mod: expected an object keyed by primes");
        for (auto& [key, col] : it->items()) {
            std::uint32_t ell = 0;
            try {
                std::size_t pos = 0;
                unsigned long v = std::stoul(key, &pos);
                if (pos != key.size() || v < 2 || v > 1000000)
                    throw std::invalid_argument("range");
                ell = static_cast<std::uint32_t>(v);
            } catch (const std::exception&) {
                throw data_error(where + ".an_mod." + key + ": key must be a prime");
            }
            if (!is_prime(ell))
                throw data_error(where + ".an_mod." + key + ": key must be a prime");
            if (!col.is_array() || col.empty())
                throw data_error(where + ".an_mod." + key + ": expected a nonempty array");
            std::vector<std::uint32_t> res;
            for (std::size_t i = 0; i < col.size(); ++i) {
                const json& v = col[i];
                if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= ell)
                    throw data_error(where + ".an_mod." + key + "[" + std::to_string(i) +
                                     "]: expected a residue below " + key);
                res.push_back(v.get<std::uint32_t>());
            }
            if (res[0] != 1 % ell)
                throw data_error(where + ".an_mod." + key + "[0]: a_1 must be 1 (form " +
                                 f.label + ")");
            f.an_mod.emplace(ell, std::move(res));
        }
        have_coeffs = have_coeffs || !f.an_mod.empty();
    }
    if (!have_coeffs)
        throw data_error(where + ": needs an_int or an_mod");

    if (auto it = jf.find("modular_degree"); it != jf.end()) {
        if (!it->is_number_unsigned() || it->get<std::uint64_t>() < 1)
            throw data_error(where + ".modular_degree: expected a positive integer");
        f.modular_degree = it->get<std::uint64_t>();
    }
    return f;
}

} // namespace

LoadResult load_newforms(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw data_error("load_newforms: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw data_error("load_newforms: " + path + ": " + e.what());
    }
    if (!doc.is_object())
        throw data_error("load_newforms: top level must be an object");
    const json& forms = need(doc, "$", "forms");
    if (!forms.is_array())
        throw data_error("forms: expected an array");

    LoadResult out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        Newform f = parse_form(forms[i], "forms[" + std::to_string(i) + "]");
        std::uint64_t bound = sturm_bound(f.level, f.weight);
        if (!f.an_int.empty() && f.an_int.size() < bound)
            out.warnings.push_back(f.label + ": " + std::to_string(f.an_int.size()) +
                                   " coefficients, below the Sturm bound " +
                                   std::to_string(bound) + " at level " +
                                   std::to_string(f.level));
        for (const auto& [ell, col] : f.an_mod)
            if (col.size() < bound)
                out.warnings.push_back(f.label + ": mod-" + std::to_string(ell) + " column has " +
                                       std::to_string(col.size()) +
                                       " coefficients, below the Sturm bound " +
                                       std::to_string(bound) + " at level " +
                                       std::to_string(f.level));
        out.forms.push_back(std::move(f));
    }
    return out;
}

CongruenceResult congruent_mod(const Newform& f, const Newform& g, std::uint32_t ell) {
    if (!is_prime(ell))
        throw invalid_parameters("congruent_mod: ell must be prime");
    CongruenceResult out;
    if (f.orbit_id == g.orbit_id) {
        out.status = CongruenceStatus::NotComparable;
        out.reason = "same Galois orbit (" + f.orbit_id + ")";
        return out;
    }
    if (f.weight != g.weight) {
        out.status = CongruenceStatus::NotComparable;
        out.reason = "different weights";
        return out;
    }
    for (const Newform* h : {&f, &g}) {
        if (!h->has_rational_an() && h->an_mod.find(ell) == h->an_mod.end()) {
            out.status = CongruenceStatus::NotComparable;
            out.reason = h->label + " has no coefficient data mod " + std::to_string(ell);
            return out;
        }
    }
    std::uint64_t L = std::lcm(f.level, g.level);
    std::uint64_t bound = sturm_bound(L, f.weight);
    out.checked_up_to = bound;
    for (const Newform* h : {&f, &g}) {
        if (h->coeff_count(ell) < bound)
            throw data_error("congruent_mod: " + h->label + " has " +
                             std::to_string(h->coeff_count(ell)) +
                             " coefficients, need the Sturm bound " + std::to_string(bound) +
                             " at level lcm = " + std::to_string(L));
    }
    for (std::uint32_t n = 1; n <= bound; ++n) {
        if (std::gcd<std::uint64_t>(n, L * ell) != 1)
            continue;
        std::uint32_t a = *f.an_residue(n, ell);
        std::uint32_t b = *g.an_residue(n, ell);
        if (a != b) {
            out.status = CongruenceStatus::NotCongruent;
            out.witness_n = n;
            return out;
        }
    }
    out.status = CongruenceStatus::Congruent;
    return out;
}

std::vector<CongruenceFinding> strict_congruence_primes(const Newform& f,
                                                        const std::vector<Newform>& pool,
                                                        std::uint32_t ell_max) {
    std::vector<CongruenceFinding> findings;
    for (std::uint32_t ell = 2; ell <= ell_max; ++ell) {
        if (!is_prime(ell))
            continue;
        for (const Newform& g : pool) {
            if (g.level != f.level || g.orbit_id == f.orbit_id)
                continue;
            CongruenceResult r = congruent_mod(f, g, ell);
            if (r.status == CongruenceStatus::Congruent)
                findings.push_back({ell, f.label, g.label, f.level, r.checked_up_to});
        }
    }
    std::sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
        return a.ell != b.ell ? a.ell < b.ell : a.g_label < b.g_label;
    });
    return findings;
}

ArsPrimes ars_congruence_primes(std::uint64_t N, std::uint64_t m_deg) {
    if (N < 1 || m_deg < 1)
        throw invalid_parameters("ars_congruence_primes: N and m_deg must be positive");
    ArsPrimes out;
    out.full = prime_divisors(N * m_deg);
    out.refined = prime_divisors(m_deg);
    return out;
}

} // namespace galdef
