#include <doctest.h>

#include <vector>

#include "stratavol/errors.hpp"
#include "stratavol/hpoly.hpp"
#include "stratavol/partition.hpp"
#include "stratavol/rational.hpp"
#include "stratavol/tpoly.hpp"
#include "stratavol/zseries.hpp"

using namespace stratavol;

namespace {

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Counts partitions of exactly w into parts >= lo, by recursing on the
// smallest part in non-decreasing order. Deliberately a different scheme
// than the descending-part generator it cross-checks.
long count_exact(int w, int lo) {
    if (w == 0)
        return 1;
    long total = 0;
    for (int p = lo; p <= w; ++p)
        total += count_exact(w - p, p);
    return total;
}

} // namespace

TEST_CASE("rational string round-trip and helpers") {
    CHECK(to_string(q(-1, 24)) == "-1/24");
    CHECK(to_string(q(7)) == "7");
    CHECK(to_string(q(0)) == "0");
    CHECK(rational_from_string("-1/24") == q(-1, 24));
    CHECK(rational_from_string("7") == q(7));
    CHECK(rational_from_string("6/4") == q(3, 2));
    CHECK(rational_from_string("-0/5") == q(0));
    CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rational_from_string("x"), DomainError);
    CHECK_THROWS_AS(rational_from_string(""), DomainError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), DomainError);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("partition canonical form and ordering") {
    Partition p({2, 3, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "(3,2,2)");
    CHECK(Partition::empty().to_string() == "()");
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.aut_order() == 2);
    CHECK(Partition({2, 2, 2, 3, 3}).aut_order() == 12); // 3! * 2!
    CHECK(Partition::empty().aut_order() == 1);

    // Weight before part-lex: (4) < (2,2) despite longer weight tie.
    CHECK(Partition({3}) < Partition({4}));
    CHECK(Partition({4}) < Partition({2, 2}));
    CHECK(Partition({2, 2}) < Partition({5}));
    CHECK(Partition({3, 2}) < Partition({2, 2, 1}));

    CHECK(p.without_part(3) == Partition({2, 2}));
    CHECK_THROWS_AS(p.without_part(5), DomainError);
    CHECK(Partition({2}).merged(Partition({3, 2})) == Partition({3, 2, 2}));
    CHECK_THROWS_AS(Partition({0, 2}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
}

TEST_CASE("partition enumeration order and membership") {
    auto list = partitions_up_to(4, 2);
    std::vector<Partition> expected = {
        Partition::empty(), Partition({2}), Partition({3}),
        Partition({4}), Partition({2, 2})};
    CHECK(list == expected);

    CHECK(partitions_up_to(1, 2) == std::vector<Partition>{Partition::empty()});

    auto upto5 = partitions_up_to(5, 2);
    auto has = [&](const Partition& p) {
        return std::find(upto5.begin(), upto5.end(), p) != upto5.end();
    };
    CHECK(has(Partition({3, 2})));
    CHECK(has(Partition({5})));
    CHECK(!has(Partition({4, 1})));

    // The list respects the canonical order globally.
    for (std::size_t i = 1; i < upto5.size(); ++i)
        CHECK(upto5[i - 1] < upto5[i]);
}

TEST_CASE("partition enumeration count matches an independent counter") {
    for (int min_part : {1, 2, 3}) {
        for (int cap : {0, 5, 17, 30}) {
            long expected = 0;
            for (int w = 0; w <= cap; ++w)
                expected += count_exact(w, min_part);
            CHECK(static_cast<long>(partitions_up_to(cap, min_part).size()) == expected);
        }
    }
}

TEST_CASE("tpoly products") {
    TPoly t2 = TPoly::variable(2, 6);
    CHECK((t2 * t2).coeff(Partition({2, 2})) == 1);
    CHECK((t2 * t2).term_count() == 1);

    // (-1/24 + t2)^2 = 1/576 - t2/12 + t2^2
    TPoly a1 = TPoly::constant(q(-1, 24), 6);
    a1.add_term(Partition({2}), 1);
    TPoly sq = a1 * a1;
    CHECK(sq.constant_term() == q(1, 576));
    CHECK(sq.coeff(Partition({2})) == q(-1, 12));
    CHECK(sq.coeff(Partition({2, 2})) == 1);
    CHECK(sq.term_count() == 3);

    TPoly t3 = TPoly::variable(3, 6);
    CHECK(t3 * TPoly::constant(1, 6) == t3);

    CHECK_THROWS_AS(t3 * TPoly::variable(3, 5), ConfigError);
    CHECK_THROWS_AS(t3 + TPoly::variable(3, 5), ConfigError);
}

TEST_CASE("tpoly truncation and derivative") {
    // Cap 3 drops the weight-4 part of t2^2 during multiplication.
    TPoly t2 = TPoly::variable(2, 3);
    CHECK((t2 * t2).is_zero());

    TPoly p(6);
    p.add_term(Partition::empty(), q(-1, 24));
    p.add_term(Partition({2}), 1);
    p.add_term(Partition({2, 2}), q(1, 2));
    p.add_term(Partition({4}), 2);
    TPoly d = p.derivative(2);
    CHECK(d.weight_cap() == 4);
    CHECK(d.constant_term() == 1);
    CHECK(d.coeff(Partition({2})) == 1);
    CHECK(d.term_count() == 2);

    TPoly trunc = p.truncated(2);
    CHECK(trunc.weight_cap() == 2);
    CHECK(trunc.term_count() == 2);
    CHECK_THROWS_AS(p.truncated(7), ConfigError);
    CHECK(trunc.with_cap(6).weight_cap() == 6);

    CHECK(p.to_string() == "-1/24 + t2 + 2*t4 + (1/2)*t2^2");
    CHECK(TPoly(4).to_string() == "0");
    CHECK_THROWS_AS(TPoly::variable(1, 4), DomainError);
}

TEST_CASE("hpoly arithmetic and formal derivative") {
    HPoly h1 = HPoly::variable(1);
    HPoly h3 = HPoly::variable(3);
    HPoly p = h3.scaled(4) + h1 * h1; // 4h3 + h1^2
    CHECK(p.coeff(Partition({3})) == 4);
    CHECK(p.coeff(Partition({1, 1})) == 1);
    CHECK(p.is_weighted_homogeneous(4));
    CHECK(!(p + h1).is_weighted_homogeneous(4));

    CHECK(p.dh(1) == h1.scaled(2));
    CHECK(p.dh(3) == HPoly::constant(4));
    CHECK(p.dh(2).is_zero());
    CHECK(HPoly::constant(q(5)).dh(1).is_zero());
    CHECK(p.to_string() == "h1^2 + 4*h3");
    CHECK(p.max_index() == 3);
}

TEST_CASE("zseries basics") {
    ZSeries<Rational> s({5}, q(0));
    s.add_term({0}, 1);
    s.add_term({1}, 1); // 1 + z
    auto r = zseries_reciprocal(s);
    for (int j = 0; j <= 5; ++j)
        CHECK(r.coeff({j}) == (j % 2 ? q(-1) : q(1)));
    CHECK((s * r).coeff({0}) == 1);
    for (int j = 1; j <= 5; ++j)
        CHECK((s * r).coeff({j}) == 0);

    // Over-cap terms are dropped on entry.
    s.add_term({9}, 1);
    CHECK_THROWS_AS(s.coeff({9}), DomainError);
    CHECK_THROWS_AS(s.add_term({1, 1}, q(1)), DomainError);
}

TEST_CASE("zseries reciprocal of the even seed series") {
    // 1 + z^2/24 + z^4/1920 inverts to 1 - z^2/24 + 7z^4/5760.
    ZSeries<Rational> s({4}, q(0));
    s.add_term({0}, 1);
    s.add_term({2}, q(1, 24));
    s.add_term({4}, q(1, 1920));
    auto r = zseries_reciprocal(s);
    CHECK(r.coeff({0}) == 1);
    CHECK(r.coeff({1}) == 0);
    CHECK(r.coeff({2}) == q(-1, 24));
    CHECK(r.coeff({3}) == 0);
    CHECK(r.coeff({4}) == q(7, 5760));

    ZSeries<Rational> bad({3}, q(0));
    bad.add_term({0}, 2);
    CHECK_THROWS_AS(zseries_reciprocal(bad), DomainError);
}

TEST_CASE("zseries two-variable reciprocal") {
    // (1 - z1 z2)^{-1} = sum (z1 z2)^m within caps.
    ZSeries<Rational> s({3, 3}, q(0));
    s.add_term({0, 0}, 1);
    s.add_term({1, 1}, -1);
    auto r = zseries_reciprocal(s);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            CHECK(r.coeff({i, j}) == (i == j ? q(1) : q(0)));
}

TEST_CASE("zseries with tpoly coefficients") {
    // (1 + t2 z)^2 = 1 + 2 t2 z + t2^2 z^2, with the weight cap honored on
    // the coefficients themselves.
    TPoly zero(4);
    ZSeries<TPoly> f({2}, zero);
    f.add_term({0}, TPoly::constant(1, 4));
    f.add_term({1}, TPoly::variable(2, 4));
    auto sq = f.pow(2);
    CHECK(sq.coeff({0}) == TPoly::constant(1, 4));
    CHECK(sq.coeff({1}) == TPoly::variable(2, 4).scaled(2));
    CHECK(sq.coeff({2}) == TPoly::variable(2, 4) * TPoly::variable(2, 4));
}
