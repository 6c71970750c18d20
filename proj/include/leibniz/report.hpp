#pragma once

#include <string>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/chains.hpp"
#include "leibniz/derivations.hpp"

namespace leibniz {

inline constexpr const char* kToolName = "leibniz";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

/// Rationals are serialized as "p" / "p/q" strings; no float tokens anywhere.
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Subspace& s);
Json to_json(const SeriesReport& report);
Json to_json(const Classification& c);
Json to_json(const VerifyReport& report);
Json to_json(const SimplicityVerdict& verdict);
Json to_json(const ChainWitness& witness);

/// Report envelope: {"tool": {...}, "algebra": {...}, "results": {...}}.
Json make_report(const LeibnizAlgebra& g);

}  // namespace leibniz
