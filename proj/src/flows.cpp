#include "stratavol/flows.hpp"

#include <json.hpp>

#include "stratavol/errors.hpp"

namespace stratavol::flows {

FlowContext::FlowContext(const minimal::MinimalTable& table, int max_k, int weight_cap)
    : table_(table),
      max_k_(max_k < 0 ? table.max_k() : max_k),
      weight_cap_(weight_cap < 0 ? table.weight_cap() : weight_cap) {
    if (max_k_ > table.max_k() || weight_cap_ > table.weight_cap())
        throw ConfigError("FlowContext caps exceed the table's caps");
    if (max_k_ < 1)
        throw ConfigError("FlowContext needs max_k >= 1");
}

const TPoly& FlowContext::value(int k) const { return table_.at(k); }

const TPoly& FlowContext::tail(int n) {
    auto it = tails_.find(n);
    if (it != tails_.end())
        return it->second;
    TPoly t(weight_cap_);
    if (n == 0) {
        t.add_term(Partition::empty(), 1);
    } else {
        // First tuple entry j consumes j+1 of the degree budget.
        for (int j = 1; j + 1 <= n && j <= max_k_; ++j)
            t += value(j).truncated(weight_cap_).scaled(Rational(j) * j) * tail(n - j - 1);
    }
    return tails_.emplace(n, std::move(t)).first->second;
}

TPoly FlowContext::t2_flow(int k) {
    if (k < 1 || k > max_k_)
        throw DomainError("t2_flow: k must be in [1," + std::to_string(max_k_) + "]");
    if (weight_cap_ < 2)
        throw ConfigError("t2_flow needs weight cap >= 2");
    return flow_full(k, 2).truncated(weight_cap_ - 2);
}

TPoly FlowContext::tm_flow(int k, int m) {
    if (k < 1 || k > max_k_)
        throw DomainError("tm_flow: k must be in [1," + std::to_string(max_k_) + "]");
    if (m < 3 || m > weight_cap_)
        throw DomainError("tm_flow: m must be in [3," + std::to_string(weight_cap_) + "]");
    return flow_full(k, m).truncated(weight_cap_ - m);
}

const TPoly& FlowContext::flow_full(int k, int m) {
    auto key = std::make_pair(k, m);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    TPoly f(weight_cap_);
    if (m == 2) {
        f = tail(k - 1);
    } else {
        // k_0 and the r weighted factors consume k-1 of the degree budget,
        // so the tail argument is k-1-k_0.
        for (int k0 = 1; k0 <= k - 1 && k0 <= max_k_; ++k0)
            f += flow_full(k0, m - 1).scaled(k0) * tail(k - 1 - k0);
    }
    return memo_.emplace(key, std::move(f)).first->second;
}

FlowReport verify_flows(FlowContext& ctx) {
    FlowReport report;
    for (int k = 1; k <= ctx.max_k(); ++k) {
        for (int m = 2; m <= ctx.weight_cap(); ++m) {
            TPoly got = m == 2 ? ctx.t2_flow(k) : ctx.tm_flow(k, m);
            // The formal derivative of a cap-W entry is trusted to W - m,
            // matching the flow's cap even when ctx caps undercut the table.
            TPoly expected =
                ctx.table().at(k).derivative(m).truncated(ctx.weight_cap() - m);
            if (got == expected)
                continue;
            TPoly diff = expected - got;
            for (const auto& [profile, c] : diff.terms()) {
                report.mismatches.push_back({k, m, profile,
                                             expected.coeff(profile),
                                             got.coeff(profile)});
            }
        }
    }
    report.ok = report.mismatches.empty();
    return report;
}

std::string to_json(const FlowReport& report) {
    nlohmann::ordered_json j;
    j["status"] = report.ok ? "ok" : "mismatch";
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& mm : report.mismatches) {
        nlohmann::ordered_json e;
        e["k"] = mm.k;
        e["m"] = mm.m;
        e["profile"] = mm.profile.parts();
        e["expected"] = to_string(mm.expected);
        e["got"] = to_string(mm.got);
        j["mismatches"].push_back(std::move(e));
    }
    return j.dump(2);
}

} // namespace stratavol::flows
