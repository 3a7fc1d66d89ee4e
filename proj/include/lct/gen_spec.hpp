#pragma once

#include <cstdint>
#include <string>

#include "lct/errors.hpp"
#include "lct/fixtures.hpp"
#include "lct/generators.hpp"

namespace lct {

enum class Family { ktree, partial_ktree, chordal, series_parallel, random_2connected, named };

inline Family parse_family(const std::string& s) {
  if (s == "ktree") return Family::ktree;
  if (s == "partial-ktree") return Family::partial_ktree;
  if (s == "chordal") return Family::chordal;
  if (s == "series-parallel") return Family::series_parallel;
  if (s == "random-2connected") return Family::random_2connected;
  if (s == "named") return Family::named;
  throw precondition_error("unknown family '" + s + "'");
}

inline std::string to_string(Family f) {
  switch (f) {
    case Family::ktree: return "ktree";
    case Family::partial_ktree: return "partial-ktree";
    case Family::chordal: return "chordal";
    case Family::series_parallel: return "series-parallel";
    case Family::random_2connected: return "random-2connected";
    case Family::named: return "named";
  }
  return "?";
}

struct GenSpec {
  Family family = Family::random_2connected;
  int n = 10;
  int k = 2;
  double p = 0.8;
  std::uint64_t seed = 0;
  std::string name;  // for Family::named
};

/// Same spec, same output.
inline Generated generate(const GenSpec& s) {
  switch (s.family) {
    case Family::ktree: return gen_ktree(s.n, s.k, s.seed);
    case Family::partial_ktree: return gen_partial_ktree(s.n, s.k, s.p, s.seed);
    case Family::chordal: return gen_chordal(s.n, s.k, s.seed);
    case Family::series_parallel: return gen_series_parallel(s.n, s.p, s.seed);
    case Family::random_2connected: return gen_random_2connected(s.n, s.p, s.seed);
    case Family::named: return {fixtures::named(s.name), std::nullopt};
  }
  throw precondition_error("unknown family");
}

}  // namespace lct
