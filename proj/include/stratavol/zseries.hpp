#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratavol/errors.hpp"
#include "stratavol/rational.hpp"

namespace stratavol {

// Coefficient-ring hooks looked up unqualified from the template below, so
// each ring supplies a prototype-based unit and a zero test. Rational here,
// TPoly and HPoly next to their classes.
inline Rational one_like(const Rational&) { return Rational(1); }

// Truncated formal power series in n variables z_1..z_n with coefficients in
// a ring R (Rational, TPoly or HPoly). Per-variable degree caps bound every
// exponent; terms beyond a cap are dropped by all operations, so a ZSeries
// is exact modulo the stated truncation. A zero-prototype coefficient is
// carried so rings whose values need construction data (TPoly's weight cap)
// can produce compatible zeros for missing coefficients.
template <typename R>
class ZSeries {
public:
    using Key = std::vector<int>; // one exponent per variable

    ZSeries(std::vector<int> caps, R zero_proto)
        : caps_(std::move(caps)), zero_(std::move(zero_proto)) {
        if (caps_.empty())
            throw ConfigError("ZSeries needs at least one variable");
        for (int d : caps_)
            if (d < 0)
                throw ConfigError("ZSeries degree caps must be >= 0");
    }

    int nvars() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    const R& zero_proto() const { return zero_; }
    const std::map<Key, R>& terms() const { return terms_; }

    R coeff(const Key& exps) const {
        check_key(exps, false);
        auto it = terms_.find(exps);
        return it == terms_.end() ? zero_ : it->second;
    }

    // Adds value to the named coefficient; exponents beyond caps are dropped.
    ZSeries& add_term(const Key& exps, const R& value) {
        if (!check_key(exps, true) || is_zero(value))
            return *this;
        auto [it, inserted] = terms_.emplace(exps, value);
        if (!inserted) {
            it->second += value;
            if (is_zero(it->second))
                terms_.erase(it);
        }
        return *this;
    }

    bool is_zero_series() const { return terms_.empty(); }

    ZSeries operator+(const ZSeries& other) const {
        require_compatible(other, "ZSeries add");
        ZSeries out = *this;
        for (const auto& [k, v] : other.terms_)
            out.add_term(k, v);
        return out;
    }

    ZSeries operator-(const ZSeries& other) const {
        require_compatible(other, "ZSeries sub");
        ZSeries out = *this;
        for (const auto& [k, v] : other.terms_)
            out.add_term(k, negate(v));
        return out;
    }

    ZSeries operator*(const ZSeries& other) const {
        require_compatible(other, "ZSeries mul");
        ZSeries out(caps_, zero_);
        Key sum(caps_.size());
        for (const auto& [ka, va] : terms_) {
            for (const auto& [kb, vb] : other.terms_) {
                bool in_range = true;
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    sum[i] = ka[i] + kb[i];
                    if (sum[i] > caps_[i]) {
                        in_range = false;
                        break;
                    }
                }
                if (in_range)
                    out.add_term(sum, va * vb);
            }
        }
        return out;
    }

    ZSeries scaled(const Rational& c) const {
        ZSeries out(caps_, zero_);
        if (sgn(c) == 0)
            return out;
        for (const auto& [k, v] : terms_)
            out.terms_.emplace(k, scale_value(v, c));
        return out;
    }

    // n-th power by repeated multiplication; n >= 1.
    ZSeries pow(int n) const {
        if (n < 1)
            throw DomainError("ZSeries pow exponent must be >= 1");
        ZSeries out = *this;
        for (int i = 1; i < n; ++i)
            out = out * *this;
        return out;
    }

    bool operator==(const ZSeries& other) const {
        return caps_ == other.caps_ && terms_ == other.terms_;
    }

private:
    // Returns false when the key is beyond caps (caller drops the term).
    bool check_key(const Key& exps, bool allow_drop) const {
        if (exps.size() != caps_.size())
            throw DomainError("ZSeries key has " + std::to_string(exps.size()) +
                              " exponents, series has " + std::to_string(caps_.size()) +
                              " variables");
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0)
                throw DomainError("negative exponent in ZSeries key");
            if (exps[i] > caps_[i]) {
                if (allow_drop)
                    return false;
                throw DomainError("ZSeries coefficient request beyond cap");
            }
        }
        return true;
    }

    void require_compatible(const ZSeries& other, const char* op) const {
        if (caps_ != other.caps_)
            throw ConfigError(std::string(op) + ": degree caps differ");
    }

    static R negate(const R& v) { return scale_value(v, Rational(-1)); }

    template <typename T>
    static T scale_value(const T& v, const Rational& c) { return v.scaled(c); }
    static Rational scale_value(const Rational& v, const Rational& c) { return v * c; }

    std::vector<int> caps_;
    R zero_;
    std::map<Key, R> terms_; // no zero coefficients stored
};

// Multiplicative inverse up to caps. Requires the constant coefficient to be
// the ring unit; with s = 1 + u the inverse is the geometric series in -u,
// which terminates because u has no constant term and total degree is capped.
template <typename R>
ZSeries<R> zseries_reciprocal(const ZSeries<R>& s) {
    typename ZSeries<R>::Key origin(s.caps().size(), 0);
    R one = one_like(s.zero_proto());
    if (!(s.coeff(origin) == one))
        throw DomainError("zseries_reciprocal: constant coefficient is not the unit");

    ZSeries<R> one_series(s.caps(), s.zero_proto());
    one_series.add_term(origin, one);

    ZSeries<R> neg_u = one_series - s;
    ZSeries<R> result = one_series;
    ZSeries<R> term = one_series;
    int max_total = 0;
    for (int d : s.caps())
        max_total += d;
    for (int j = 1; j <= max_total; ++j) {
        term = term * neg_u;
        if (term.is_zero_series())
            break;
        result = result + term;
    }
    return result;
}

} // namespace stratavol
