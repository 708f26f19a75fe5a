#include "stratavol/hpoly.hpp"

#include <sstream>

#include "stratavol/errors.hpp"

namespace stratavol {

HPoly HPoly::constant(const Rational& c) {
    HPoly p;
    p.add_term(Partition::empty(), c);
    return p;
}

HPoly HPoly::variable(int k) {
    if (k < 1)
        throw DomainError("h-variable index must be >= 1, got " + std::to_string(k));
    HPoly p;
    p.add_term(Partition::single(k), 1);
    return p;
}

Rational HPoly::coeff(const Partition& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

int HPoly::max_index() const {
    int m = 0;
    for (const auto& [mono, c] : terms_)
        if (!mono.is_empty() && mono.max_part() > m)
            m = mono.max_part();
    return m;
}

HPoly& HPoly::add_term(const Partition& mono, const Rational& c) {
    if (sgn(c) == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
    return *this;
}

HPoly HPoly::operator-() const {
    HPoly out;
    for (const auto& [mono, c] : terms_)
        out.terms_.emplace(mono, -c);
    return out;
}

HPoly HPoly::operator+(const HPoly& other) const {
    HPoly out = *this;
    out += other;
    return out;
}

HPoly HPoly::operator-(const HPoly& other) const {
    HPoly out = *this;
    out -= other;
    return out;
}

HPoly& HPoly::operator+=(const HPoly& other) {
    for (const auto& [mono, c] : other.terms_)
        add_term(mono, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
    for (const auto& [mono, c] : other.terms_)
        add_term(mono, -c);
    return *this;
}

HPoly HPoly::operator*(const HPoly& other) const {
    HPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma.merged(mb), ca * cb);
    return out;
}

HPoly HPoly::scaled(const Rational& c) const {
    HPoly out;
    if (sgn(c) == 0)
        return out;
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, coeff * c);
    return out;
}

HPoly HPoly::dh(int k) const {
    if (k < 1)
        throw DomainError("dh index must be >= 1, got " + std::to_string(k));
    HPoly out;
    for (const auto& [mono, c] : terms_) {
        int mult = mono.multiplicity(k);
        if (mult == 0)
            continue;
        out.add_term(mono.without_part(k), c * mult);
    }
    return out;
}

bool HPoly::is_weighted_homogeneous(int degree) const {
    for (const auto& [mono, c] : terms_)
        if (mono.weight() + mono.length() != degree)
            return false;
    return true;
}

std::string HPoly::to_string() const {
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
            mono_str += "h" + std::to_string(p);
            if (count > 1)
                mono_str += "^" + std::to_string(count);
        }
        if (mono_str.empty()) {
            os << stratavol::to_string(abs_c);
        } else if (abs_c == 1) {
            os << mono_str;
        } else {
            if (abs_c.get_den() != 1)
                os << '(' << stratavol::to_string(abs_c) << ')';
            else
                os << stratavol::to_string(abs_c);
            os << '*' << mono_str;
        }
    }
    return os.str();
}

} // namespace stratavol
