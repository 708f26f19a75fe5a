#include "stratavol/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>

#include "stratavol/errors.hpp"
#include "stratavol/flows.hpp"
#include "stratavol/npoint.hpp"
#include "stratavol/volumes.hpp"

namespace stratavol::cli {

namespace {

std::string describe(const Rational& v) { return stratavol::to_string(v); }
std::string describe(const TPoly& v) { return v.to_string(); }
std::string describe(const volumes::PiValue& v) { return v.to_string(); }

// Accumulates comparisons for one suite; every failure keeps both sides.
class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void require(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) {
            r_.passed = false;
            r_.failures.push_back(what);
        }
    }

    template <typename T>
    void equal(const T& got, const T& want, const std::string& what) {
        require(got == want,
                what + ": got " + describe(got) + ", want " + describe(want));
    }

    nlohmann::ordered_json& detail() { return r_.detail; }
    SuiteResult finish() { return std::move(r_); }

private:
    SuiteResult r_;
};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

TPoly poly(int cap, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    TPoly p(cap);
    for (const auto& [parts, c] : terms)
        p.add_term(Partition(parts), c);
    return p;
}

std::string decimal(long double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

struct CheckContext {
    const Config& config;
    const minimal::MinimalTable& table;
};

SuiteResult suite_seed(const CheckContext&) {
    Suite s("seed");
    minimal::BSeed seed = minimal::b_numbers(6);
    const Rational want[] = {1,          0, Rational(-1, 24),     0,
                             Rational(7, 5760), 0, Rational(-31, 967680)};
    for (int j = 0; j <= 6; ++j)
        s.equal(seed.at(j), want[j], "seed coefficient of z^" + std::to_string(j));
    return s.finish();
}

SuiteResult suite_bpoly(const CheckContext&) {
    Suite s("bpoly");
    s.equal(minimal::b_poly(0, 6), poly(6, {{{}, 1}}), "b-polynomial, 2g=0");
    s.equal(minimal::b_poly(1, 6), TPoly(6), "b-polynomial, 2g=1");
    s.equal(minimal::b_poly(2, 6), poly(6, {{{}, Rational(-1, 24)}, {{2}, 1}}),
            "b-polynomial, 2g=2");
    s.equal(minimal::b_poly(3, 6), poly(6, {{{3}, 1}}), "b-polynomial, 2g=3");
    s.equal(minimal::b_poly(4, 6),
            poly(6, {{{}, Rational(7, 5760)},
                     {{2}, Rational(-1, 24)},
                     {{4}, 1},
                     {{2, 2}, Rational(1, 2)}}),
            "b-polynomial, 2g=4");
    s.equal(minimal::b_poly(5, 6),
            poly(6, {{{3}, Rational(-1, 24)}, {{5}, 1}, {{3, 2}, 1}}),
            "b-polynomial, 2g=5");
    // The 2g=6 polynomial is displayed only through its weight-4 terms; pin
    // those and the full form separately.
    TPoly b6 = minimal::b_poly(6, 6);
    s.equal(b6.coeff(Partition::empty()), Rational(-31, 967680), "2g=6 constant");
    s.equal(b6.coeff(P({2})), Rational(7, 5760), "2g=6 t2 coefficient");
    s.equal(b6.coeff(P({4})), Rational(-1, 24), "2g=6 t4 coefficient");
    s.equal(b6.coeff(P({2, 2})), Rational(-1, 48), "2g=6 t2^2 coefficient");
    s.equal(b6,
            poly(6, {{{}, Rational(-31, 967680)},
                     {{2}, Rational(7, 5760)},
                     {{4}, Rational(-1, 24)},
                     {{2, 2}, Rational(-1, 48)},
                     {{6}, 1},
                     {{4, 2}, 1},
                     {{3, 3}, Rational(1, 2)},
                     {{2, 2, 2}, Rational(1, 6)}}),
            "b-polynomial, 2g=6, all terms");
    return s.finish();
}

SuiteResult suite_minimal_rows(const CheckContext& ctx) {
    Suite s("minimal-rows");
    auto row = [&](int k) { return ctx.table.at(k).truncated(6); };
    s.equal(row(1), poly(6, {{{}, Rational(-1, 24)}, {{2}, 1}}), "a((1))");
    s.equal(row(2), poly(6, {{{3}, 1}}), "a((2))");
    s.equal(row(3),
            poly(6, {{{}, Rational(1, 640)},
                     {{2}, Rational(-1, 24)},
                     {{4}, 2},
                     {{2, 2}, Rational(1, 2)}}),
            "a((3))");
    s.equal(row(4), poly(6, {{{3}, Rational(-1, 6)}, {{5}, 6}, {{3, 2}, 4}}),
            "a((4))");
    s.equal(row(5),
            poly(6, {{{}, Rational(-305, 580608)},
                     {{2}, Rational(91, 5760)},
                     {{4}, Rational(-3, 4)},
                     {{2, 2}, Rational(-11, 48)},
                     {{6}, 24},
                     {{4, 2}, 18},
                     {{3, 3}, 10},
                     {{2, 2, 2}, Rational(11, 6)}}),
            "a((5))");

    TPoly a1 = row(1), a2 = row(2), a3 = row(3), a4 = row(4), a5 = row(5);
    s.equal(minimal::b_poly(2, 6), a1, "relation at 2g=2");
    s.equal(minimal::b_poly(3, 6), a2, "relation at 2g=3");
    s.equal(minimal::b_poly(4, 6).scaled(2), a3 + (a1 * a1).scaled(Rational(1, 2)),
            "relation at 2g=4");
    s.equal(minimal::b_poly(5, 6).scaled(6), a4 + (a2 * a1).scaled(2),
            "relation at 2g=5");
    TPoly cube = a1 * a1 * a1;
    s.equal(minimal::b_poly(6, 6).scaled(24),
            a5 + (a3 * a1).scaled(3) + (a2 * a2).scaled(2) + cube.scaled(Rational(2, 3)),
            "relation at 2g=6, cube coefficient 2/3");
    // The displayed 1/6 variant must stay wrong, else the errata entry is stale.
    s.require(minimal::b_poly(6, 6).scaled(24) !=
                  a5 + (a3 * a1).scaled(3) + (a2 * a2).scaled(2) +
                      cube.scaled(Rational(1, 6)),
              "cube coefficient 1/6 must disagree at 2g=6");

    for (int m = 2; m <= std::min(ctx.config.max_k, 6) + 1; ++m)
        s.require(minimal::solve_residual(ctx.table, m).is_zero(),
                  "induction residual at step " + std::to_string(m));
    return s.finish();
}

SuiteResult suite_fixtures(const CheckContext& ctx) {
    Suite s("fixtures");
    auto start = std::chrono::steady_clock::now();
    auto fixtures = volumes::load_fixtures(ctx.config.resolved_data_dir() +
                                           "/volume_fixtures.json");
    s.require(fixtures.size() == 4, "expected 4 fixtures, found " +
                                        std::to_string(fixtures.size()));
    for (const auto& f : fixtures)
        s.equal(volumes::volume_of(f.key.mu, f.key.rho, ctx.table), f.vol,
                "volume of " + f.key.to_string());
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    s.detail()["elapsed_ms"] = elapsed.count();
    return s.finish();
}

SuiteResult suite_flows(const CheckContext& ctx) {
    Suite s("flows");
    flows::FlowContext fctx(ctx.table);
    flows::FlowReport report = flows::verify_flows(fctx);
    int pairs = ctx.config.max_k * (ctx.config.max_weight - 1);
    s.require(report.ok, "flow values must match formal derivatives everywhere");
    s.detail()["result"] = nlohmann::ordered_json::parse(flows::to_json(report));
    s.detail()["pairs_checked"] = pairs;
    return s.finish();
}

SuiteResult suite_two_zero_rows(const CheckContext& ctx) {
    Suite s("two-zero-rows");
    const minimal::MinimalTable& t = ctx.table;
    const TPoly &a1 = t.at(1), &a2 = t.at(2), &a3 = t.at(3), &a4 = t.at(4),
                &a5 = t.at(5);
    s.equal(npoint::a_poly(P({2, 2}), t), a3.scaled(3) + (a1 * a1).scaled(Rational(1, 2)),
            "a(2,2)");
    s.equal(npoint::a_poly(P({3, 2}), t), a4.scaled(4) + (a2 * a1).scaled(2),
            "a(3,2)");
    TPoly got42 = npoint::a_poly(P({4, 2}), t);
    s.equal(got42, a5.scaled(5) + (a3 * a1).scaled(3) + (a2 * a2).scaled(2),
            "a(4,2), form in force");
    s.require(got42 != a5.scaled(5) + (a2 * a2).scaled(4),
              "displayed a(4,2) row must disagree");
    TPoly got33 = npoint::a_poly(P({3, 3}), t);
    TPoly cube = a1 * a1 * a1;
    s.equal(got33,
            a5.scaled(5) + (a3 * a1).scaled(3) + (a2 * a2).scaled(4) +
                cube.scaled(Rational(1, 3)),
            "a(3,3), form in force");
    s.require(got33 != a5.scaled(5) + (a2 * a2).scaled(4) + cube.scaled(Rational(1, 3)),
              "displayed a(3,3) row must disagree");
    return s.finish();
}

SuiteResult suite_calibration(const CheckContext& ctx) {
    Suite s("calibration");
    npoint::CalibrationResult cal = npoint::calibrate_one_point(ctx.table);
    bool lock_ok = cal.chosen == (cal.literal_matches && !cal.half_matches
                                      ? npoint::OnePointConvention::literal
                                      : npoint::OnePointConvention::half);
    s.require(lock_ok, "locked convention must follow the calibration rule");
    TPoly chosen_value = cal.chosen == npoint::OnePointConvention::half
                             ? cal.half_value
                             : cal.literal_value;
    s.equal(npoint::a_poly(P({2, 2, 2}), ctx.table, cal.chosen), chosen_value,
            "a(2,2,2) under the locked convention");
    s.detail()["state"] = cal.literal_matches || cal.half_matches
                              ? "match"
                              : "documented-fail";
    s.detail()["target"] = cal.target.to_string();
    s.detail()["literal"] = cal.literal_value.to_string();
    s.detail()["half"] = cal.half_value.to_string();
    s.detail()["literal_matches"] = cal.literal_matches;
    s.detail()["half_matches"] = cal.half_matches;
    s.detail()["chosen"] =
        cal.chosen == npoint::OnePointConvention::half ? "half" : "literal";
    return s.finish();
}

SuiteResult suite_invariants(const CheckContext& ctx) {
    Suite s("invariants");
    // Parity and sign law over every stored one-zero coefficient: the key
    // ((k), rho) has 2g = k + 1 - |rho|; stored coefficients must sit at
    // even nonnegative 2g and carry sign (-1)^g.
    for (int k = 1; k <= ctx.config.max_k; ++k) {
        for (const auto& [rho, c] : ctx.table.at(k).terms()) {
            int two_g = k + 1 - rho.weight();
            std::string where =
                "((" + std::to_string(k) + ")," + rho.to_string() + ")";
            s.require(two_g >= 0 && two_g % 2 == 0,
                      "parity violated at " + where);
            if (two_g >= 0 && two_g % 2 == 0) {
                int want = two_g / 2 % 2 == 0 ? 1 : -1;
                s.require(sgn(c) == want, "sign law violated at " + where +
                                              ": coefficient " + describe(c));
            }
        }
    }
    // Kernel symmetry sample.
    npoint::Kernel2 kernel = npoint::two_point_kernel(4, 4);
    for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = k1; k2 <= 4; ++k2)
            s.require(kernel.coeff(k1, k2) == kernel.coeff(k2, k1),
                      "kernel coefficient symmetry at (" + std::to_string(k1) +
                          "," + std::to_string(k2) + ")");
    // Variable-permutation symmetry sample of the three-point series.
    npoint::NPointSeries s223 = npoint::npoint_series({1, 2, 3}, {2, 2, 3});
    npoint::NPointSeries s232 = npoint::npoint_series({1, 2, 3}, {2, 3, 2});
    npoint::NPointSeries s322 = npoint::npoint_series({1, 2, 3}, {3, 2, 2});
    s.require(s223.series.coeff({2, 2, 3}) == s232.series.coeff({2, 3, 2}),
              "series symmetric under swapping the last two variables");
    s.require(s223.series.coeff({2, 2, 3}) == s322.series.coeff({3, 2, 2}),
              "series symmetric under moving the large cap first");
    return s.finish();
}

SuiteResult suite_asymptotics(const CheckContext& ctx) {
    Suite s("asymptotics");
    minimal::MinimalTable deep = minimal::solve_minimal(13, 4);
    s.detail()["reports"] = nlohmann::ordered_json::array();
    for (const Partition& rho : {P({}), P({2}), P({3})}) {
        auto rows = volumes::asymptotics_report(rho, 13, deep);
        s.require(!rows.empty(), "no rows for rho = " + rho.to_string());
        nlohmann::ordered_json rep;
        rep["rho"] = rho.parts();
        rep["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            s.require(r.normalized > 0.0L && r.normalized < 2.0L,
                      "normalized volume outside (0,2) at k = " +
                          std::to_string(r.k) + ", rho = " + rho.to_string() +
                          ": " + decimal(r.normalized, ctx.config.digits));
            nlohmann::ordered_json row;
            row["k"] = r.k;
            row["g"] = r.g;
            row["vol"] = r.vol.to_string();
            row["normalized"] = decimal(r.normalized, ctx.config.digits);
            rep["rows"].push_back(std::move(row));
        }
        s.detail()["reports"].push_back(std::move(rep));
    }
    s.detail()["bound"] = "(0, 2)";
    return s.finish();
}

SuiteResult suite_prediction(const CheckContext& ctx) {
    Suite s("prediction");
    volumes::PiValue got = volumes::volume_of(P({3, 3}), P({}), ctx.table);
    s.equal(got, volumes::PiValue{Rational(17, 50400), 6}, "volume at mu=(3,3)");
    s.equal(npoint::a_poly(P({3, 3}), ctx.table).constant_term(),
            Rational(-51, 17920), "constant a-value at mu=(3,3)");
    return s.finish();
}

SuiteResult suite_cache(const CheckContext& ctx) {
    Suite s("cache");
    ATableFile snap = snapshot(ctx.table);
    std::string text = to_json_text(snap, ctx.config.content_hash());
    ATableFile parsed = parse_atable(text);
    s.require(parsed == snap, "parse must invert serialization");
    minimal::MinimalTable back = restore(parsed);
    for (int k = 1; k <= ctx.table.max_k(); ++k)
        s.require(back.at(k) == ctx.table.at(k),
                  "restored row differs at k = " + std::to_string(k));
    s.require(to_json_text(snapshot(back), ctx.config.content_hash()) == text,
              "rebuilt file must be byte-identical");

    Config disk = ctx.config;
    if (disk.cache_dir.empty())
        disk.cache_dir = (std::filesystem::temp_directory_path() /
                          "stratavol-check-cache")
                             .string();
    store_cached(disk, snap);
    auto loaded = load_cached(disk);
    s.require(loaded.has_value() && *loaded == snap, "on-disk cache round trip");
    minimal::MinimalTable via_cache = obtain_table(disk);
    for (int k = 1; k <= ctx.table.max_k(); ++k)
        s.require(via_cache.at(k) == ctx.table.at(k),
                  "cached table differs from recomputation at k = " +
                      std::to_string(k));
    return s.finish();
}

using SuiteFn = SuiteResult (*)(const CheckContext&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"seed", suite_seed},
        {"bpoly", suite_bpoly},
        {"minimal-rows", suite_minimal_rows},
        {"fixtures", suite_fixtures},
        {"flows", suite_flows},
        {"two-zero-rows", suite_two_zero_rows},
        {"calibration", suite_calibration},
        {"invariants", suite_invariants},
        {"asymptotics", suite_asymptotics},
        {"prediction", suite_prediction},
        {"cache", suite_cache},
    };
    return reg;
}

} // namespace

bool CheckReport::ok() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed; });
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["status"] = ok() ? "pass" : "fail";
    doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["passed"] = s.passed;
        js["checks"] = s.checks;
        js["failures"] = s.failures;
        if (!s.detail.is_null())
            js["detail"] = s.detail;
        doc["suites"].push_back(std::move(js));
    }
    doc["errata"] = nlohmann::ordered_json::array();
    for (const ErrataEntry& e : errata) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["printed"] = e.printed;
        je["implemented"] = e.implemented;
        je["evidence"] = e.evidence;
        doc["errata"].push_back(std::move(je));
    }
    doc["predictions"] = predictions;
    doc["notes"] = notes;
    return doc;
}

std::string CheckReport::text_summary() const {
    std::string out;
    for (const SuiteResult& s : suites) {
        out += s.name;
        out.append(s.name.size() < 14 ? 14 - s.name.size() : 1, ' ');
        out += s.passed ? "pass" : "FAIL";
        out += " (" + std::to_string(s.checks) + " checks)\n";
        for (const std::string& f : s.failures)
            out += "    " + f + "\n";
    }
    out += "errata entries: " + std::to_string(errata.size()) + "\n";
    out += std::string("status: ") + (ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

const std::vector<ErrataEntry>& errata_ledger() {
    static const std::vector<ErrataEntry> ledger = {
        {"seed-series-closed-form",
         "S(z) = sinh(z/2)/(z/2) = 1 - z^2/24 + 7z^4/5760 - 31z^6/967680 + ...",
         "the seed numbers are the coefficients of the reciprocal, "
         "b_g = [z^{2g}] (z/2)/sinh(z/2)",
         "sinh(z/2)/(z/2) expands with all-positive coefficients "
         "(1 + z^2/24 + z^4/1920 + ...); only the reciprocal matches the "
         "displayed numbers and yields the row b_1 = -1/24 + t2"},
        {"a-polynomial-monomial-range",
         "a(mu) = sum_{l>=0} sum_{rho=(rho_1..rho_l)} (1/l!) a(mu,rho) "
         "prod_{i=2}^{l} t_{rho_i}",
         "the monomial is the full product over i = 1..l; equivalently "
         "a(mu) = sum over partitions rho of a(mu,rho)/|Aut(rho)| "
         "prod_i t_{rho_i}",
         "with the product starting at i = 2 the variable t_{rho_1} never "
         "occurs and none of the displayed polynomial rows can hold"},
        {"genus-induction-index",
         "b_{2g} = [z^{2g}] F(z)^{2g}/(2g)! with "
         "F(z) = 1 + sum_k k a((k)) z^{k+1}",
         "the left side is the b-polynomial at genus g itself: with m = 2g, "
         "m! b_{m/2} = [z^m] F^m",
         "the displayed relations 0! b_1 = a((1)) through 4! b_3 = ... hold "
         "only under this indexing, and the solved table reproduces "
         "Vol H(2) = pi^4/120"},
        {"genus-induction-row-form",
         "(2g)! b_{g'}/|Aut(rho)| = sum_{r>=1} C(2g,r) "
         "sum_{k_1+..+k_r=2g-r, rho^1+..+rho^r=rho} "
         "prod_i a((k_i),rho^i)/|Aut(rho^i)|",
         "each factor carries its k_i multiplier, prod_i k_i "
         "a((k_i),rho^i)/|Aut(rho^i)|, as the z-expansion of F^{2g} dictates",
         "without the k_i factors the 2g = 4, rho = () instance gives "
         "4 a((3)) + 6 a((1))^2 for 24 b_2, contradicting the displayed "
         "2! b_2 = a((3)) + (1/2) a((1))^2; with them it gives "
         "12 a((3)) + 6 a((1))^2, which matches"},
        {"genus3-cube-coefficient",
         "4! b_3 = a((5)) + 3 a((3)) a((1)) + (4/2) a((2))^2 + "
         "(1/6) a((1))^3",
         "the cube coefficient is 2/3",
         "the multinomial count C(6,3) = 20 in [z^6] F^6 forces 20·24/720 = "
         "2/3, and only 2/3 reproduces Vol H(4) = 61 pi^6/108864"},
        {"two-point-closed-form",
         "H_{ij} = (z_i H_i' - z_j H_j')/(H_j - H_i) - 1 with "
         "H_i = z_i^{-1} sum_k h_k z_i^k",
         "K(z1,z2) = z1 z2 A/(1 - (1/2) z1 z2 B) with "
         "A = sum_k (k+1) h_k s_k, B = sum_k h_k s_k, "
         "s_k = sum_{a+b=k-1} z1^a z2^b",
         "the displayed quotient is not polynomial in the h_k; the "
         "implemented kernel is the unique rescaling of "
         "z1 z2 A/(1 - z1 z2 B) that reproduces both displayed rows a(2,2), "
         "a(3,2) and the volumes pi^4/135 (H(1,1)) and 16 pi^6/42525 "
         "(H(3,1))"},
        {"row-4-2",
         "a(4,2) = 5 a((5)) + (8/2) a((2))^2",
         "a(4,2) = 5 a((5)) + 3 a((3)) a((1)) + 2 a((2))^2",
         "the constant term of the form in force gives "
         "Vol H(3,1) = 16 pi^6/42525; the displayed row does not"},
        {"row-3-3",
         "a(3,3) = 5 a((5)) + (8/2) a((2))^2 + (2/6) a((1))^3",
         "a(3,3) = 5 a((5)) + 3 a((3)) a((1)) + 4 a((2))^2 + "
         "(1/3) a((1))^3",
         "the kernel expansion validated on a(2,2), a(3,2) and on the four "
         "classical volumes produces the extra mixed term 3 a((3)) a((1))"},
        {"one-point-convention",
         "a(2,2,2) = 3 a((3,2)) + a((1)) a((2,1))",
         "one-point series (1/2) sum_{k<=cap} h_k z^k (the locked default); "
         "neither it nor the literal sum_{k<=cap+1} h_k z^{k-1} reproduces "
         "the displayed row",
         "the displayed right side evaluates to 12 a((4)) + 8 a((1)) a((2)); "
         "the half convention gives 10 a((4)) + 8 a((1)) a((2)), the literal "
         "convention a parity-violating polynomial; both candidates are "
         "recorded by the calibration suite"},
        {"flow-t2-term-range",
         "d a((k))/dt_2 = sum_{r>=1} sum_{k_1+..+k_r=k-r-1} "
         "prod_i k_i^2 a((k_i))",
         "the outer sum starts at r = 0; the empty product contributes 1 "
         "exactly when k = 1",
         "a((1)) = -1/24 + t2 has t2-derivative 1, which no r >= 1 term "
         "can produce"},
        {"flow-m-summation-range",
         "a((k),rho)/|Aut(rho')| = sum_{r>=0} sum_{k_0+..+k_r=k-r} "
         "(k_0 a((k_0),rho^0+(rho_l-1))/|Aut(rho^0)|) "
         "prod_{i>=1} k_i^2 a((k_i),rho^i)/|Aut(rho^i)|",
         "the degree constraint is k_0 + ... + k_r = k - r - 1",
         "d a((2))/dt_3 = 1 needs the single term r = 0, k_0 = 1, admissible "
         "only under k - r - 1; under k - r the value would be "
         "2 d a((2))/dt_2 = 0"},
        {"flow-m-derivative-index",
         "d a((k))/dt_m = sum_{r>=0} sum_{k_0+..+k_r=k-r} k_0 "
         "(d a((k_0))/dt_m) prod_i k_i^2 a((k_i))",
         "the inner derivative acts at index m - 1: k_0 d a((k_0))/dt_{m-1}, "
         "matching the rho^0 + (rho_l - 1) residue insertion of the "
         "coefficient form",
         "d a((4))/dt_3 = -1/6 + 4 t2 arises as 3 d a((3))/dt_2 + a((1)); "
         "with inner index m = 3 every candidate term vanishes and the "
         "identity fails"},
        {"flow-pde-compact",
         "du/dt_2 = 1/(1 - u'' + u') and du/dt_m = du/dt_2 · "
         "d(-u' + u)/dt_{m-1} with u(x) = sum_k a((k)) x^{1-k}",
         "the coefficient recursions above; equivalently du/dt_2 = "
         "sum_{r>=0} v^r with v = sum_k k^2 a((k)) x^{-k-1}",
         "under either d/dx or x d/dx readings of the primes the x^{-2} "
         "coefficient of the displayed first equation yields a((2)) where "
         "the recursion, verified against formal t-derivatives of the solved "
         "table for every k <= 12 and m <= 10, requires a((1))"},
        {"volume-sign",
         "Vol(mu,rho) = -2 (2 i pi)^{2g} / ((|mu|-1)! prod_i k_i) · "
         "a(mu,rho)",
         "Vol(mu,rho) = (-1)^g · 2 · 4^g / ((|mu|-1)! prod_i k_i) · "
         "a(mu,rho) · pi^{2g}, positivity enforced as an invariant",
         "the displayed prefactor gives -pi^4/120 at mu=(3), rho=() where "
         "the classical value is +pi^4/120; every verifiable case flips the "
         "same way"},
    };
    return ledger;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry())
        names.push_back(name);
    return names;
}

CheckReport run_checks(const Config& config, const std::vector<std::string>& only) {
    config.validate();
    auto known = suite_names();
    for (const std::string& name : only)
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::string list;
            for (const auto& n : known)
                list += (list.empty() ? "" : ", ") + n;
            throw DomainError("unknown suite '" + name + "'; known: " + list);
        }
    auto wanted = [&](const std::string& name) {
        return only.empty() ||
               std::find(only.begin(), only.end(), name) != only.end();
    };

    CheckReport report;
    report.errata = errata_ledger();
    report.notes = {
        "c0((3)) evaluates to 5/(3 pi^4); the classical area constant of the "
        "corresponding holomorphic stratum is 10/(3 pi^2); the 2 pi^2 ratio "
        "is a normalization convention left open here",
        "no derivative convention was found under which the compact flow "
        "equations hold literally; the coefficient recursions are the "
        "contract"};
    report.predictions = nlohmann::ordered_json::array();
    {
        nlohmann::ordered_json p;
        p["mu"] = std::vector<int>{3, 3};
        p["rho"] = std::vector<int>{};
        p["volume"] = "17/50400 · π^6";
        p["status"] = "prediction — printed row conflicts";
        report.predictions.push_back(std::move(p));
    }

    minimal::MinimalTable table =
        minimal::solve_minimal(config.max_k, config.max_weight);
    CheckContext ctx{config, table};
    for (const auto& [name, fn] : suite_registry()) {
        if (!wanted(name))
            continue;
        try {
            report.suites.push_back(fn(ctx));
        } catch (const std::exception& e) {
            SuiteResult r;
            r.name = name;
            r.passed = false;
            r.checks = 1;
            r.failures.push_back(std::string("aborted: ") + e.what());
            report.suites.push_back(std::move(r));
        }
    }
    return report;
}

} // namespace stratavol::cli
