#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lct/cycle.hpp"
#include "lct/lemma.hpp"

namespace lct {

namespace detail {

inline nlohmann::ordered_json set_json(VertexSet s) { return s.to_vector(); }

inline nlohmann::ordered_json optional_json(const std::optional<int>& x) {
  return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

/// One report line; keys always appear in schema order, absent values as null.
inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["k"] = detail::optional_json(r.k);
  j["omega"] = detail::optional_json(r.omega);
  j["tw"] = detail::optional_json(r.tw);
  j["L"] = detail::optional_json(r.L);
  j["lct"] = detail::optional_json(r.lct);
  j["verdict"] = r.verdict();
  if (r.witness) {
    nlohmann::ordered_json w;
    w["note"] = r.witness->note;
    w["transversal"] = detail::set_json(r.witness->transversal);
    auto& cycles = w["cycles"] = nlohmann::ordered_json::array();
    for (const auto& c : r.witness->cycles) cycles.push_back(c.sequence());
    auto& sets = w["sets"] = nlohmann::ordered_json::array();
    for (VertexSet s : r.witness->sets) sets.push_back(detail::set_json(s));
    auto& edges = w["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : r.edges) edges.push_back({u, v});
    j["witness"] = std::move(w);
  }
  return j;
}

inline std::string report_line(const CheckReport& r) { return to_json(r).dump(); }

}  // namespace lct
