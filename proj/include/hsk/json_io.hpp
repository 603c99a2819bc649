#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsk/certify.hpp"
#include "hsk/connectivity.hpp"
#include "hsk/cycle.hpp"
#include "hsk/domination.hpp"
#include "hsk/error.hpp"
#include "hsk/gf2.hpp"

namespace hsk {

using json = nlohmann::json;

inline json code_to_json(const LinearCode& code) {
    return json{{"n", code.n}, {"dim", code.dim}, {"codewords", code.codewords}};
}

inline json vertex_set_to_json(const VertexSet& s) {
    return json{{"n", s.n}, {"members", s.members}};
}

inline VertexSet vertex_set_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("members"))
        throw argument_error("vertex set JSON needs fields n and members");
    return {j.at("n").get<int>(), j.at("members").get<std::vector<vertex>>()};
}

inline json shell_to_json(const Shell& shell) {
    return json{{"n", shell.n}, {"members", shell.survivors()}, {"removed", shell.removed.members}};
}

// Cycle certificate, consumed and re-verified by `verify cert`.
inline json cycle_cert_to_json(const Shell& shell, const Cycle& c,
                               const std::optional<Edge>& edge, int length) {
    json j{{"n", shell.n},
           {"removed", shell.removed.members},
           {"length", length},
           {"cycle", c.verts}};
    if (edge)
        j["edge"] = json::array({edge->u, edge->v});
    else
        j["edge"] = nullptr;
    return j;
}

// Rebuild the instance named by a cycle certificate and re-run the validator.
inline Verdict verify_cycle_cert_json(const json& j) {
    for (const char* key : {"n", "removed", "length", "cycle"})
        if (!j.contains(key)) return Verdict::bad(std::string("missing field ") + key);
    const int n = j.at("n").get<int>();
    Shell shell(n, VertexSet(n, j.at("removed").get<std::vector<vertex>>()));
    Cycle c(j.at("cycle").get<std::vector<vertex>>());
    std::optional<Edge> edge;
    if (j.contains("edge") && !j.at("edge").is_null()) {
        const auto e = j.at("edge").get<std::vector<vertex>>();
        if (e.size() != 2) return Verdict::bad("edge field must hold two labels");
        if (hamming_distance(e[0], e[1]) != 1) return Verdict::bad("edge field is not an edge");
        edge = Edge(e[0], e[1]);
    }
    return validate_cycle(shell, c, edge, j.at("length").get<int>());
}

inline json witness_cut_to_json(const WitnessCut& cut) {
    return json{{"k_claimed", cut.k_claimed},
                {"separator", cut.separator},
                {"components_sample", cut.components_sample}};
}

inline json sweep_report_to_json(const SweepReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(json{{"edge", json::array({f.edge.u, f.edge.v})},
                                {"length", f.length},
                                {"reason", f.reason}});
    return json{{"edges", report.edges},
                {"lengths_per_edge", report.lengths_per_edge},
                {"failures", failures}};
}

}  // namespace hsk
