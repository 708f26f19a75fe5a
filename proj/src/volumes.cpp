#include "stratavol/volumes.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "stratavol/errors.hpp"
#include "stratavol/npoint.hpp"

namespace stratavol::volumes {

std::string PiValue::to_string() const {
    if (is_zero())
        return "0";
    std::string s = stratavol::to_string(coeff);
    if (pi_power != 0)
        s += " · π^" + std::to_string(pi_power);
    return s;
}

long double PiValue::to_double() const {
    long double pi = 3.141592653589793238462643383279503L;
    return static_cast<long double>(coeff.get_d()) * powl(pi, pi_power);
}

std::string StratumKey::to_string() const {
    return "H(" + mu.to_string() + "," + rho.to_string() + ")";
}

Rational a_value(const TPoly& poly, const Partition& rho) {
    return poly.coeff(rho) * rho.aut_order();
}

PiValue volume(const StratumKey& key, const Rational& a) {
    if (key.mu.is_empty())
        throw DomainError("volume: mu must have at least one part");
    if (key.empty_stratum()) {
        if (sgn(a) != 0)
            throw InvariantError("nonzero a for empty stratum " + key.to_string());
        return PiValue{0, 0};
    }
    if (sgn(a) == 0)
        return PiValue{0, 0};
    int g = key.two_g() / 2;

    Rational denom = factorial(key.mu.weight() - 1);
    for (int k : key.mu.parts())
        denom *= k;
    mpz_class four_g;
    mpz_ui_pow_ui(four_g.get_mpz_t(), 4, g);
    Rational coeff = a * 2 * Rational(four_g) / denom;
    if (g % 2 != 0)
        coeff = -coeff;
    if (sgn(coeff) <= 0)
        throw InvariantError("sign law violated at " + key.to_string() + ": a = " +
                             stratavol::to_string(a) + " but genus is " + std::to_string(g));
    return PiValue{coeff, 2 * g};
}

PiValue volume_of(const Partition& mu, const Partition& rho,
                  const minimal::MinimalTable& table) {
    StratumKey key{mu, rho};
    if (key.empty_stratum())
        return PiValue{0, 0};
    if (rho.weight() > table.weight_cap())
        throw ConfigError("volume_of(" + key.to_string() + ") needs weight cap >= " +
                          std::to_string(rho.weight()) + ", have " +
                          std::to_string(table.weight_cap()));
    TPoly poly = mu.length() == 1 ? table.at(mu.max_part()) : npoint::a_poly(mu, table);
    return volume(key, a_value(poly, rho));
}

PiValue sv_constant(const Partition& mu, const minimal::MinimalTable& table) {
    PiValue with_pair = volume_of(mu, Partition({2}), table);
    PiValue plain = volume_of(mu, Partition::empty(), table);
    if (with_pair.is_zero() || plain.is_zero())
        throw DomainError("sv_constant(" + mu.to_string() +
                          "): both volumes must be nonzero");
    return PiValue{with_pair.coeff / plain.coeff / 4,
                   with_pair.pi_power - plain.pi_power - 2};
}

Rational genus0_count(int k, const std::vector<int>& poles) {
    int m = static_cast<int>(poles.size());
    if (m < 2)
        throw DomainError("genus0_count: at least two poles required");
    int sum = 0;
    for (int p : poles) {
        if (p < 0)
            throw DomainError("genus0_count: pole orders must be >= 0");
        sum += p;
    }
    if (k != sum + m - 1)
        throw DomainError("genus0_count: degree condition k = sum + m - 1 fails (k=" +
                          std::to_string(k) + ", sum=" + std::to_string(sum) +
                          ", m=" + std::to_string(m) + ")");
    Rational out = factorial(m - 2);
    for (int i = 0; i < m - 2; ++i)
        out *= poles[i];
    return out;
}

std::vector<AsymptoticsRow> asymptotics_report(const Partition& rho, int k_max,
                                               const minimal::MinimalTable& table) {
    if (k_max > table.max_k())
        throw ConfigError("asymptotics_report needs table max_k >= " + std::to_string(k_max));
    std::vector<AsymptoticsRow> rows;
    int m = rho.weight();
    for (int k = 1; k <= k_max; ++k) {
        StratumKey key{Partition({k}), rho};
        if (key.empty_stratum())
            continue;
        int g = key.two_g() / 2;
        if (g == 0 && m > 0)
            continue;
        PiValue vol = volume(key, a_value(table.at(k), rho));
        if (vol.is_zero())
            continue;
        long double norm = vol.to_double() * k / 4.0L;
        for (int i = 0; i < m; ++i)
            norm /= 2 * g;
        rows.push_back(AsymptoticsRow{k, g, vol, norm});
    }
    return rows;
}

std::vector<Fixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open fixture file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("fixture file " + path + ": " + e.what());
    }
    if (!doc.is_array())
        throw DomainError("fixture file must hold an array");
    std::vector<Fixture> out;
    for (const auto& item : doc) {
        Partition mu(item.at("mu").get<std::vector<int>>());
        Partition rho(item.at("rho").get<std::vector<int>>());
        PiValue vol{rational_from_string(item.at("vol_coeff").get<std::string>()),
                    item.at("pi_power").get<int>()};
        out.push_back(Fixture{StratumKey{std::move(mu), std::move(rho)}, std::move(vol)});
    }
    return out;
}

} // namespace stratavol::volumes
