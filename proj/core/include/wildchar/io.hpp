#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

#include "wildchar/groupoid.hpp"
#include "wildchar/orbit.hpp"
#include "wildchar/tame.hpp"
#include "wildchar/wild.hpp"

namespace wildchar {

using json = nlohmann::ordered_json;

/// Backend named by the "backend" key (exact when absent).
Backend json_backend(const json& j);

template <class F>
json scalar_to_json(const F& x) {
  return format_scalar(x);
}
template <class F>
F scalar_from_json(const json& j);

/// Row-major array of four scalar strings.
template <class F>
json matrix_to_json(const Mat2<F>& m);
template <class F>
Mat2<F> matrix_from_json(const json& j);

template <class F>
json to_json(const TamePoint<F>& p);
template <class F>
json to_json(const TameTriple<F>& t);
template <class F>
json to_json(const WildPoint<F>& p);
template <class F>
json to_json(const WildRep<F>& r);
template <class F>
json to_json(const WildInvariants<F>& v);
template <class F>
json to_json(const Representation<F>& rep);
template <class F>
json to_json(const OrbitRecord<F>& o);
template <class F>
json to_json(const Point<F>& p);
json to_json(const Presentation& p);

template <class F>
TamePoint<F> tame_point_from_json(const json& j);
template <class F>
TameTriple<F> tame_triple_from_json(const json& j);
template <class F>
WildPoint<F> wild_point_from_json(const json& j);
template <class F>
WildRep<F> wild_rep_from_json(const json& j);
/// Builds a representation of `presentation` from {"assignment": {...}}.
template <class F>
Representation<F> representation_from_json(const json& j, PresentationPtr presentation);
/// User-supplied finite presentation.
PresentationPtr presentation_from_json(const json& j);

/// What a JSON document holds, decided from its keys.
enum class PayloadKind { tame_point, tame_triple, wild_point, wild_rep };
PayloadKind detect_payload(const json& j);

/// Runtime-typed values for the CLI.
using AnyPoint = std::variant<Point<GaussRational>, Point<Complexd>>;
AnyPoint point_from_json(const json& j);

/// Parses text, mapping JSON syntax errors to parse_error.
json parse_json(const std::string& text);
/// Deterministic text form (two-space indent, trailing newline).
std::string dump_json(const json& j);

}  // namespace wildchar
