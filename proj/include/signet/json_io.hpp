#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "signet/balance.hpp"
#include "signet/behavior.hpp"
#include "signet/connectivity.hpp"
#include "signet/graph.hpp"
#include "signet/sim.hpp"
#include "signet/spectral.hpp"

namespace signet {

using nlohmann::json;

// Graph JSON: {"n": int, "edges": [[src, dst, weight], ...], "labels": [...]}.
// Node ids are 1-based (as in the text format). Weights are JSON numbers when
// the weight is a plain decimal, and "p/q" strings otherwise; from_json
// accepts both.
json graph_to_json(const SignedDigraph& g);
SignedDigraph graph_from_json(const json& j);

// Node ids 1-based; scc/component ids are 0-based indices into their arrays.
json connectivity_to_json(const ConnectivityReport& rep);

// {"balanced", "sigma" | null, "witness_cycle" | null, "node_balance"}.
json balance_to_json(const BalanceVerdict& verdict, const std::vector<bool>& node_balance);

// {"xi", "eta", "det_L", "inner", "residuals": {"right", "left"},
//  "condition": "C1|C2|C3" | null, "orchestrated"}. The double instantiation
// emits numbers, the rational one exact "p" / "p/q" strings.
json certificate_to_json(const Certificate<double>& cert);
json certificate_to_json(const Certificate<Rational>& cert);

json behavior_to_json(const BehaviorReport& rep);
json verification_to_json(const VerificationResult& result);

// "t,x1,...,xn" header, one row per stored sample, shortest round-trip floats.
std::string trajectory_csv(const Trajectory& traj);

// {"metadata": {"graph_hash", "dt", "seed" | null, ...}, "t", "x",
//  "final_state"}.
json trajectory_to_json(const Trajectory& traj, const std::string& graph_hash, double dt,
                        std::optional<std::uint64_t> seed = std::nullopt);

// FNV-1a (64-bit, hex) of the canonical edge-list serialization.
std::string graph_hash(const SignedDigraph& g);

// Writes via a sibling temp file + rename, so failures never leave a partial
// file at `path`.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace signet
