#include "stratavol/npoint.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "stratavol/errors.hpp"

namespace stratavol::npoint {

Kernel2 two_point_kernel(int d1, int d2) {
    if (d1 < 1 || d2 < 1)
        throw DomainError("two_point_kernel: caps must be >= 1");
    HPoly hzero;
    ZSeries<HPoly> num({d1, d2}, hzero);     // z1 z2 A
    ZSeries<HPoly> denom({d1, d2}, hzero);   // 1 - (1/2) z1 z2 B
    denom.add_term({0, 0}, HPoly::constant(1));
    for (int a = 0; a + 1 <= d1; ++a) {
        for (int b = 0; b + 1 <= d2; ++b) {
            int k = a + b + 1; // s_k contributes z1^a z2^b
            num.add_term({a + 1, b + 1}, HPoly::variable(k).scaled(k + 1));
            denom.add_term({a + 1, b + 1}, HPoly::variable(k).scaled(Rational(-1, 2)));
        }
    }
    return Kernel2{num * zseries_reciprocal(denom)};
}

NPointSeries one_point_series(int index, int cap, OnePointConvention conv) {
    ZSeries<HPoly> s({cap}, HPoly{});
    if (conv == OnePointConvention::literal) {
        for (int k = 1; k <= cap + 1; ++k)
            s.add_term({k - 1}, HPoly::variable(k));
    } else {
        for (int k = 1; k <= cap; ++k)
            s.add_term({k}, HPoly::variable(k).scaled(Rational(1, 2)));
    }
    return NPointSeries{{index}, std::move(s)};
}

namespace {

// Distinct h-indices appearing anywhere in the series' coefficients.
std::set<int> h_indices(const ZSeries<HPoly>& s) {
    std::set<int> out;
    for (const auto& [key, c] : s.terms())
        for (const auto& [mono, q] : c.terms())
            for (int part : mono.parts())
                out.insert(part);
    return out;
}

// Coefficient-wise d/dh_k; drops coefficients that die.
ZSeries<HPoly> dh_series(const ZSeries<HPoly>& s, int k) {
    ZSeries<HPoly> out(s.caps(), s.zero_proto());
    for (const auto& [key, c] : s.terms())
        out.add_term(key, c.dh(k));
    return out;
}

} // namespace

NPointSeries d2_pair(const NPointSeries& f, const NPointSeries& g, const Kernel2& kernel) {
    for (int i : f.indices)
        if (std::find(g.indices.begin(), g.indices.end(), i) != g.indices.end())
            throw DomainError("d2_pair: index sets overlap at " + std::to_string(i));

    // Merged variable list and the position each operand variable lands on.
    std::vector<int> indices = f.indices;
    indices.insert(indices.end(), g.indices.begin(), g.indices.end());
    std::sort(indices.begin(), indices.end());
    auto position = [&](int idx) {
        return static_cast<std::size_t>(
            std::lower_bound(indices.begin(), indices.end(), idx) - indices.begin());
    };
    std::vector<std::size_t> fpos, gpos;
    for (int i : f.indices)
        fpos.push_back(position(i));
    for (int i : g.indices)
        gpos.push_back(position(i));

    std::vector<int> caps(indices.size());
    for (std::size_t p = 0; p < f.indices.size(); ++p)
        caps[fpos[p]] = f.series.caps()[p];
    for (std::size_t p = 0; p < g.indices.size(); ++p)
        caps[gpos[p]] = g.series.caps()[p];

    ZSeries<HPoly> out(caps, HPoly{});
    std::set<int> fk = h_indices(f.series), gk = h_indices(g.series);
    for (int k1 : fk) {
        if (k1 > kernel.series.caps()[0])
            throw ConfigError("d2_pair: kernel cap " + std::to_string(kernel.series.caps()[0]) +
                              " < needed h-index " + std::to_string(k1));
        ZSeries<HPoly> df = dh_series(f.series, k1);
        if (df.is_zero_series())
            continue;
        for (int k2 : gk) {
            if (k2 > kernel.series.caps()[1])
                throw ConfigError("d2_pair: kernel cap " + std::to_string(kernel.series.caps()[1]) +
                                  " < needed h-index " + std::to_string(k2));
            HPoly c = kernel.coeff(k1, k2);
            if (c.is_zero())
                continue;
            ZSeries<HPoly> dg = dh_series(g.series, k2);
            std::vector<int> key(indices.size());
            for (const auto& [kf, cf] : df.terms()) {
                for (const auto& [kg, cg] : dg.terms()) {
                    for (std::size_t p = 0; p < kf.size(); ++p)
                        key[fpos[p]] = kf[p];
                    for (std::size_t p = 0; p < kg.size(); ++p)
                        key[gpos[p]] = kg[p];
                    out.add_term(key, c * cf * cg);
                }
            }
        }
    }
    return NPointSeries{std::move(indices), std::move(out)};
}

namespace {

class SubsetBuilder {
public:
    SubsetBuilder(const std::vector<int>& indices, const std::vector<int>& caps,
                  OnePointConvention conv)
        : indices_(indices), caps_(caps), conv_(conv), kernel_(make_kernel(caps)) {}

    // Kernel caps of the cap total cover every h-index any subset series
    // can produce within its z-truncation.
    static Kernel2 make_kernel(const std::vector<int>& caps) {
        int total = 0;
        for (int c : caps)
            total += c;
        return two_point_kernel(std::max(total, 1), std::max(total, 1));
    }

    const NPointSeries& at(std::uint32_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end())
            return it->second;
        return memo_.emplace(mask, build(mask)).first->second;
    }

private:
    NPointSeries build(std::uint32_t mask) {
        std::vector<std::size_t> members;
        for (std::size_t p = 0; p < indices_.size(); ++p)
            if (mask & (1u << p))
                members.push_back(p);
        std::size_t n = members.size();

        if (n == 1)
            return one_point_series(indices_[members[0]], caps_[members[0]], conv_);
        if (n == 2) {
            // The kernel itself, restricted to the pair's caps.
            int c1 = caps_[members[0]], c2 = caps_[members[1]];
            ZSeries<HPoly> s({c1, c2}, HPoly{});
            for (int k1 = 1; k1 <= c1; ++k1)
                for (int k2 = 1; k2 <= c2; ++k2)
                    s.add_term({k1, k2}, kernel_.coeff(k1, k2));
            return NPointSeries{{indices_[members[0]], indices_[members[1]]}, std::move(s)};
        }

        // Ordered splits into nonempty (I', I''), scanned as proper nonzero
        // submasks; the 1/(2(n-1)) prefactor absorbs the double count.
        NPointSeries total{{}, ZSeries<HPoly>(std::vector<int>(n, 0), HPoly{})};
        bool started = false;
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
            NPointSeries part = d2_pair(at(sub), at(mask ^ sub), kernel_);
            if (!started) {
                total = std::move(part);
                started = true;
            } else {
                total.series = total.series + part.series;
            }
        }
        total.series = total.series.scaled(Rational(1, 2 * (static_cast<int>(n) - 1)));
        return total;
    }

    const std::vector<int>& indices_;
    const std::vector<int>& caps_;
    OnePointConvention conv_;
    Kernel2 kernel_;
    std::map<std::uint32_t, NPointSeries> memo_;
};

} // namespace

NPointSeries npoint_series(const std::vector<int>& indices, const std::vector<int>& caps,
                           OnePointConvention conv) {
    if (indices.empty())
        throw DomainError("npoint_series: empty index set");
    if (indices.size() != caps.size())
        throw DomainError("npoint_series: one cap per index required");
    if (indices.size() > 31)
        throw DomainError("npoint_series: index sets beyond 31 are unsupported");
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("npoint_series: duplicate index");
    if (sorted != indices)
        throw DomainError("npoint_series: indices must be strictly increasing");

    SubsetBuilder builder(indices, caps, conv);
    std::uint32_t full = (indices.size() == 31)
                             ? 0x7fffffffu
                             : ((1u << indices.size()) - 1u);
    return builder.at(full);
}

TPoly EvMap::apply(const HPoly& p) const {
    int cap = table_.weight_cap();
    TPoly out(cap);
    for (const auto& [mono, c] : p.terms()) {
        TPoly factor = TPoly::constant(c, cap);
        for (int j : mono.parts()) {
            if (j > table_.max_k())
                throw ConfigError("ev needs a((" + std::to_string(j) +
                                  ")); table holds k <= " + std::to_string(table_.max_k()));
            factor = factor * table_.at(j).scaled(2 * j);
        }
        out += factor;
    }
    return out;
}

TPoly a_poly(const Partition& mu, const minimal::MinimalTable& table,
             OnePointConvention conv) {
    if (mu.is_empty())
        throw DomainError("a_poly: mu must have at least one part");
    int n = mu.length();
    if (n == 1)
        return table.at(mu.max_part());

    if (table.max_k() < mu.weight() - 1)
        throw ConfigError("a_poly(" + mu.to_string() + ") needs table max_k >= " +
                          std::to_string(mu.weight() - 1) + ", have " +
                          std::to_string(table.max_k()));

    std::vector<int> indices(n), caps(mu.parts().rbegin(), mu.parts().rend());
    for (int i = 0; i < n; ++i)
        indices[i] = i + 1;
    NPointSeries h = npoint_series(indices, caps, conv);
    HPoly target = h.series.coeff(caps);
    return EvMap(table).apply(target).scaled(Rational(1, 2 * mu.weight()));
}

CalibrationResult calibrate_one_point(const minimal::MinimalTable& table) {
    Partition mu({2, 2, 2});
    // Reference row: 3 a((3,2)) + a((1)) a((2,1)). Pair values come from the
    // kernel alone, so the reference does not depend on the convention
    // under test.
    CalibrationResult r{a_poly(Partition({3, 2}), table).scaled(3) +
                            table.at(1) * a_poly(Partition({2, 1}), table),
                        a_poly(mu, table, OnePointConvention::literal),
                        a_poly(mu, table, OnePointConvention::half)};
    r.literal_matches = r.literal_value == r.target;
    r.half_matches = r.half_value == r.target;
    r.chosen = (r.literal_matches && !r.half_matches) ? OnePointConvention::literal
                                                      : OnePointConvention::half;
    return r;
}

} // namespace stratavol::npoint
