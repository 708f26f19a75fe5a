#pragma once

#include <string>
#include <vector>

#include "stratavol/minimal.hpp"
#include "stratavol/partition.hpp"

namespace stratavol::volumes {

// Exact value coeff * pi^pi_power. Volumes carry pi_power = 2g >= 0;
// Siegel-Veech ratios may carry negative powers. Decimal rendering happens
// only at presentation time.
struct PiValue {
    Rational coeff;
    int pi_power = 0;

    bool is_zero() const { return sgn(coeff) == 0; }
    std::string to_string() const; // "1/120 · π^4", "2", "5/3 · π^-4", "0"
    long double to_double() const;
    bool operator==(const PiValue&) const = default;
};

// Stratum data (mu, rho): n zeros of orders k_i - 1, m = |rho| simple poles
// grouped by the residue profile. The genus satisfies
// |mu| = 2g - 2 + n + m; keys whose 2g comes out odd or negative, and
// profiles containing a part 1, denote empty strata.
struct StratumKey {
    Partition mu;
    Partition rho;

    int two_g() const { return mu.weight() - mu.length() - rho.weight() + 2; }
    bool empty_stratum() const {
        return rho.contains(1) || two_g() < 0 || two_g() % 2 != 0;
    }
    std::string to_string() const; // "H((3),(2))"
};

// a(mu,rho) from the generating polynomial: the rho-coefficient times
// |Aut(rho)|.
Rational a_value(const TPoly& poly, const Partition& rho);

// Vol(mu,rho) = (-1)^g a * 2 * 4^g / ((|mu|-1)! prod k_i) * pi^{2g}.
// Empty-stratum keys give the zero value (their a must be zero); a nonzero
// a whose sign differs from (-1)^g is an invariant failure.
PiValue volume(const StratumKey& key, const Rational& a);

// Convenience: a(mu,rho) via the one-zero table or the n-point recursion,
// then the volume. mu with a single part reads the table directly.
PiValue volume_of(const Partition& mu, const Partition& rho,
                  const minimal::MinimalTable& table);

// c0(mu) = (1/(4 pi^2)) Vol(mu,(2)) / Vol(mu,()).
PiValue sv_constant(const Partition& mu, const minimal::MinimalTable& table);

// Genus-0 count with one zero of order k-1 and poles of the given orders:
// (m-2)! times the product of all pole orders except the last two. Requires
// m >= 2 and the degree condition k = sum(poles) + m - 1.
Rational genus0_count(int k, const std::vector<int>& poles);

// One row per nonempty one-zero stratum (k, rho), k <= k_max: the exact
// volume and the scale-free column (2g)^{-m} Vol k / 4 rendered numerically.
// Rows with g = 0 are skipped when m > 0 (the normalizer vanishes).
struct AsymptoticsRow {
    int k;
    int g;
    PiValue vol;
    long double normalized;
};

std::vector<AsymptoticsRow> asymptotics_report(const Partition& rho, int k_max,
                                               const minimal::MinimalTable& table);

// Reference volumes shipped as data: [{mu, rho, vol_coeff: "p/q", pi_power}].
struct Fixture {
    StratumKey key;
    PiValue vol;
};

std::vector<Fixture> load_fixtures(const std::string& path);

} // namespace stratavol::volumes
