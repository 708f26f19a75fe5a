#include "stratavol/rational.hpp"

#include <cctype>

namespace stratavol {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw DomainError("empty rational literal");
    // Validate by hand; mpq_class's string constructor aborts on garbage.
    auto check_digits = [](std::string_view part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!check_digits(s)) throw DomainError("malformed rational literal: " + std::string(s));
        return Rational(mpz_class(std::string(s)));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!check_digits(num) || !check_digits(den))
        throw DomainError("malformed rational literal: " + std::string(s));
    mpz_class d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in rational literal: " + std::string(s));
    Rational q(mpz_class(std::string(num)), d);
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

} // namespace stratavol
