#include <doctest.h>

#include "stratavol/errors.hpp"
#include "stratavol/npoint.hpp"

using namespace stratavol;
using namespace stratavol::npoint;

namespace {

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

HPoly hp(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    HPoly p;
    for (const auto& [parts, c] : terms)
        p.add_term(Partition(parts), c);
    return p;
}

} // namespace

TEST_CASE("kernel coefficients in closed form") {
    Kernel2 k = two_point_kernel(6, 6);
    CHECK(k.coeff(1, 1) == hp({{{1}, 2}}));
    CHECK(k.coeff(2, 1) == hp({{{2}, 3}}));
    CHECK(k.coeff(3, 1) == hp({{{3}, 4}}));
    CHECK(k.coeff(2, 2) == hp({{{3}, 4}, {{1, 1}, 1}}));
    CHECK(k.coeff(3, 2) == hp({{{4}, 5}, {{2, 1}, q(5, 2)}}));
    CHECK(k.coeff(4, 2) == hp({{{5}, 6}, {{3, 1}, 3}, {{2, 2}, q(3, 2)}}));
    CHECK(k.coeff(3, 3) == hp({{{5}, 6}, {{3, 1}, 3}, {{2, 2}, 3}, {{1, 1, 1}, q(1, 2)}}));
    CHECK_THROWS_AS(two_point_kernel(0, 3), DomainError);
}

TEST_CASE("kernel symmetry and weighted homogeneity") {
    Kernel2 k = two_point_kernel(7, 7);
    for (int k1 = 1; k1 <= 7; ++k1) {
        for (int k2 = 1; k2 <= 7; ++k2) {
            CHECK(k.coeff(k1, k2) == k.coeff(k2, k1));
            CHECK(!k.coeff(k1, k2).is_zero());
            CHECK(k.coeff(k1, k2).is_weighted_homogeneous(k1 + k2));
            // Only h_1..h_{k1+k2-1} may appear.
            CHECK(k.coeff(k1, k2).max_index() <= k1 + k2 - 1);
        }
        CHECK(k.coeff(k1, 0).is_zero());
        CHECK(k.coeff(0, k1).is_zero());
    }
}

TEST_CASE("pair derivative operator") {
    Kernel2 k = two_point_kernel(6, 6);

    // Constants in h have no derivative.
    NPointSeries cf{{1}, ZSeries<HPoly>({2}, HPoly{})};
    cf.series.add_term({1}, HPoly::constant(q(5)));
    NPointSeries cg{{2}, ZSeries<HPoly>({2}, HPoly{})};
    cg.series.add_term({2}, HPoly::constant(q(7)));
    CHECK(d2_pair(cf, cg, k).series.is_zero_series());

    // Symmetric in its arguments: the merged variable list is sorted, so
    // both orders build the identical series.
    NPointSeries f = one_point_series(1, 3, OnePointConvention::half);
    NPointSeries g = one_point_series(2, 3, OnePointConvention::half);
    NPointSeries fg = d2_pair(f, g, k);
    NPointSeries gf = d2_pair(g, f, k);
    CHECK(fg.indices == gf.indices);
    CHECK(fg.series == gf.series);

    NPointSeries clash = one_point_series(1, 3, OnePointConvention::half);
    CHECK_THROWS_AS(d2_pair(f, clash, k), DomainError);
}

TEST_CASE("two-zero rows from the kernel") {
    minimal::MinimalTable table = minimal::solve_minimal(6, 6);
    const TPoly &a1 = table.at(1), &a2 = table.at(2), &a3 = table.at(3),
                &a4 = table.at(4), &a5 = table.at(5);

    CHECK(a_poly(Partition({1, 1}), table) == a1);
    CHECK(a_poly(Partition({2, 1}), table) == a2.scaled(2));
    CHECK(a_poly(Partition({2, 2}), table) == a3.scaled(3) + (a1 * a1).scaled(q(1, 2)));
    CHECK(a_poly(Partition({3, 2}), table) == a4.scaled(4) + (a2 * a1).scaled(2));
    CHECK(a_poly(Partition({4, 2}), table) ==
          a5.scaled(5) + (a3 * a1).scaled(3) + (a2 * a2).scaled(2));
    CHECK(a_poly(Partition({3, 3}), table) ==
          a5.scaled(5) + (a3 * a1).scaled(3) + (a2 * a2).scaled(4) +
              (a1 * a1 * a1).scaled(q(1, 3)));

    // One zero delegates to the solved table.
    CHECK(a_poly(Partition({4}), table) == a4);
    CHECK_THROWS_AS(a_poly(Partition::empty(), table), DomainError);
    CHECK_THROWS_AS(a_poly(Partition({7, 1}), table), ConfigError);
}

TEST_CASE("three-zero calibration records both conventions") {
    minimal::MinimalTable table = minimal::solve_minimal(6, 6);
    const TPoly &a1 = table.at(1), &a2 = table.at(2), &a3 = table.at(3),
                &a4 = table.at(4), &a5 = table.at(5);

    CalibrationResult r = calibrate_one_point(table);
    CHECK(r.target == a4.scaled(12) + (a1 * a2).scaled(8));
    CHECK(r.half_value == a4.scaled(10) + (a1 * a2).scaled(8));
    CHECK(r.literal_value == a5.scaled(30) + (a1 * a3).scaled(30) +
                                 (a2 * a2).scaled(24) + (a1 * a1 * a1).scaled(2));
    CHECK(!r.half_matches);
    CHECK(!r.literal_matches);
    CHECK(r.chosen == OnePointConvention::half);
    CHECK(a_poly(Partition({2, 2, 2}), table) == r.half_value);
}

TEST_CASE("series symmetry under variable permutation") {
    // H over three variables with asymmetric caps: the coefficient at a
    // permuted key must not depend on which variable carries which cap.
    NPointSeries a = npoint_series({1, 2, 3}, {1, 2, 3});
    NPointSeries b = npoint_series({1, 2, 3}, {3, 2, 1});
    CHECK(a.series.coeff({1, 2, 3}) == b.series.coeff({3, 2, 1}));
    NPointSeries c = npoint_series({1, 2, 3}, {2, 3, 1});
    CHECK(a.series.coeff({1, 2, 3}) == c.series.coeff({2, 3, 1}));

    // Uniform caps: the series itself is symmetric key-by-key.
    NPointSeries u = npoint_series({1, 2, 3}, {2, 2, 2});
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int l = 0; l <= 2; ++l) {
                CHECK(u.series.coeff({i, j, l}) == u.series.coeff({j, i, l}));
                CHECK(u.series.coeff({i, j, l}) == u.series.coeff({l, j, i}));
            }

    CHECK_THROWS_AS(npoint_series({2, 1}, {1, 1}), DomainError);
    CHECK_THROWS_AS(npoint_series({1, 1}, {1, 1}), DomainError);
    CHECK_THROWS_AS(npoint_series({1, 2}, {1}), DomainError);
    CHECK_THROWS_AS(npoint_series({}, {}), DomainError);
}

TEST_CASE("all-ones strata against a hand reduction") {
    // With every cap 1, all kernel lookups collapse onto c_{1,1} = 2 h1 and
    // the recursion is checkable by hand:
    //   H_{ij}[1,1] = 2 h1
    //   H_{ijk}[1,1,1] = (1/4) * 6 splits * (2 h1 * 2 * 1/2) = 3 h1
    //   H_{1234}[1^4] = (1/6) * (8 * 3 h1 + 6 * 8 h1) = 12 h1
    // so a(1,1,1) = (1/6) ev(3 h1) = a((1)) and
    // a(1,1,1,1) = (1/8) ev(12 h1) = 3 a((1)).
    minimal::MinimalTable table = minimal::solve_minimal(6, 6);
    CHECK(a_poly(Partition({1, 1, 1}), table) == table.at(1));
    CHECK(a_poly(Partition({1, 1, 1, 1}), table) == table.at(1).scaled(3));
}

TEST_CASE("parity of retained monomials across small strata") {
    minimal::MinimalTable table = minimal::solve_minimal(8, 8);
    for (const Partition& mu : {Partition({2, 2}), Partition({3, 2}), Partition({4, 2}),
                                Partition({3, 3}), Partition({2, 2, 2}), Partition({3, 2, 1}),
                                Partition({2, 2, 1, 1})}) {
        TPoly v = a_poly(mu, table);
        for (const auto& [rho, coeff] : v.terms()) {
            int two_g = mu.weight() - mu.length() - rho.weight() + 2;
            CHECK(two_g >= 0);
            CHECK(two_g % 2 == 0);
            int g = two_g / 2;
            CHECK(sgn(coeff) == (g % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("ev morphism is multiplicative on samples") {
    minimal::MinimalTable table = minimal::solve_minimal(5, 6);
    EvMap ev(table);
    HPoly f = hp({{{3}, 4}, {{1, 1}, 1}});
    HPoly g = hp({{{2}, q(5, 2)}, {{}, 1}});
    CHECK(ev.apply(f * g) == ev.apply(f) * ev.apply(g));
    CHECK(ev.apply(HPoly::constant(q(3, 7))) == TPoly::constant(q(3, 7), 6));
    CHECK(ev.apply(HPoly::variable(2)) == table.at(2).scaled(4));
    CHECK_THROWS_AS(ev.apply(HPoly::variable(6)), ConfigError);
}
