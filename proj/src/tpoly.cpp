#include "stratavol/tpoly.hpp"

#include <sstream>

#include "stratavol/errors.hpp"

namespace stratavol {

namespace {

void require_same_cap(const TPoly& a, const TPoly& b, const char* op) {
    if (a.weight_cap() != b.weight_cap())
        throw ConfigError(std::string(op) + ": weight caps differ (" +
                          std::to_string(a.weight_cap()) + " vs " +
                          std::to_string(b.weight_cap()) + ")");
}

void require_t_index(int m) {
    if (m < 2)
        throw DomainError("t-variable index must be >= 2, got " + std::to_string(m));
}

} // namespace

TPoly::TPoly(int weight_cap) : weight_cap_(weight_cap) {
    if (weight_cap < 0)
        throw ConfigError("TPoly weight cap must be >= 0");
}

TPoly TPoly::constant(const Rational& c, int weight_cap) {
    TPoly p(weight_cap);
    p.add_term(Partition::empty(), c);
    return p;
}

TPoly TPoly::variable(int m, int weight_cap) {
    require_t_index(m);
    TPoly p(weight_cap);
    p.add_term(Partition::single(m), 1);
    return p;
}

Rational TPoly::coeff(const Partition& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

TPoly& TPoly::add_term(const Partition& mono, const Rational& c) {
    if (mono.weight() > weight_cap_ || sgn(c) == 0)
        return *this;
    if (!mono.is_empty() && mono.min_part() < 2)
        throw DomainError("t-monomial with part < 2: " + mono.to_string());
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly out(weight_cap_);
    for (const auto& [mono, c] : terms_)
        out.terms_.emplace(mono, -c);
    return out;
}

TPoly TPoly::operator+(const TPoly& other) const {
    TPoly out = *this;
    out += other;
    return out;
}

TPoly TPoly::operator-(const TPoly& other) const {
    TPoly out = *this;
    out -= other;
    return out;
}

TPoly& TPoly::operator+=(const TPoly& other) {
    require_same_cap(*this, other, "TPoly add");
    for (const auto& [mono, c] : other.terms_)
        add_term(mono, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    require_same_cap(*this, other, "TPoly sub");
    for (const auto& [mono, c] : other.terms_)
        add_term(mono, -c);
    return *this;
}

TPoly TPoly::operator*(const TPoly& other) const {
    require_same_cap(*this, other, "TPoly mul");
    TPoly out(weight_cap_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            if (ma.weight() + mb.weight() > weight_cap_)
                continue;
            out.add_term(ma.merged(mb), ca * cb);
        }
    }
    return out;
}

TPoly TPoly::scaled(const Rational& c) const {
    TPoly out(weight_cap_);
    if (sgn(c) == 0)
        return out;
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, coeff * c);
    return out;
}

TPoly TPoly::derivative(int m) const {
    require_t_index(m);
    if (m > weight_cap_)
        throw ConfigError("TPoly derivative by t" + std::to_string(m) +
                          " needs weight cap >= " + std::to_string(m));
    TPoly out(weight_cap_ - m);
    for (const auto& [mono, c] : terms_) {
        int mult = mono.multiplicity(m);
        if (mult == 0)
            continue;
        out.add_term(mono.without_part(m), c * mult);
    }
    return out;
}

TPoly TPoly::truncated(int new_cap) const {
    if (new_cap > weight_cap_)
        throw ConfigError("TPoly truncated: cap can only shrink");
    TPoly out(new_cap);
    for (const auto& [mono, c] : terms_)
        out.add_term(mono, c);
    return out;
}

TPoly TPoly::with_cap(int new_cap) const {
    TPoly out(new_cap);
    for (const auto& [mono, c] : terms_) {
        if (mono.weight() > new_cap)
            throw ConfigError("TPoly with_cap: existing term above new cap");
        out.add_term(mono, c);
    }
    return out;
}

std::string TPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << '-';
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        // Monomial rendering: group equal parts into powers, e.g. t2^2*t3.
        // Partition parts are descending, so emit smaller indices first for
        // the conventional look (t2 before t3).
        std::string mono_str;
        const auto& parts = mono.parts();
        for (auto it = parts.rbegin(); it != parts.rend();) {
            int p = *it;
            int count = 0;
            while (it != parts.rend() && *it == p) {
                ++count;
                ++it;
            }
            if (!mono_str.empty())
                mono_str += '*';
            mono_str += "t" + std::to_string(p);
            if (count > 1)
                mono_str += "^" + std::to_string(count);
        }
        if (mono_str.empty()) {
            os << stratavol::to_string(abs_c);
        } else if (abs_c == 1) {
            os << mono_str;
        } else {
            bool fraction = abs_c.get_den() != 1;
            if (fraction)
                os << '(' << stratavol::to_string(abs_c) << ')';
            else
                os << stratavol::to_string(abs_c);
            os << '*' << mono_str;
        }
    }
    return os.str();
}

} // namespace stratavol
