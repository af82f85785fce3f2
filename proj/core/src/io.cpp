#include "wildchar/io.hpp"

namespace wildchar {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::parse_error, std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

const json& array_field(const json& j, const char* key, std::size_t size) {
  const json& a = field(j, key);
  if (!a.is_array() || a.size() != size) {
    throw Error(ErrorCode::parse_error, std::string("\"") + key + "\" must be an array of " +
                                            std::to_string(size) + " scalars");
  }
  return a;
}

template <class F>
json with_backend(json j) {
  j["backend"] = std::string(backend_name(FieldTraits<F>::backend));
  return j;
}

}  // namespace

Backend json_backend(const json& j) {
  if (!j.is_object() || !j.contains("backend")) return Backend::exact;
  const json& b = j.at("backend");
  if (!b.is_string()) throw Error(ErrorCode::parse_error, "\"backend\" must be a string");
  return parse_backend(b.get<std::string>());
}

template <class F>
F scalar_from_json(const json& j) {
  if (j.is_string()) return FieldTraits<F>::parse(j.get<std::string>());
  if (j.is_number_integer()) return F(j.get<long>());
  if constexpr (std::is_same_v<F, Complexd>) {
    if (j.is_number()) return {j.get<double>(), 0.0};
  }
  throw Error(ErrorCode::parse_error, "scalar must be a string, got " + j.dump());
}

template <class F>
json matrix_to_json(const Mat2<F>& m) {
  return json::array({format_scalar(m.m11), format_scalar(m.m12), format_scalar(m.m21),
                      format_scalar(m.m22)});
}

template <class F>
Mat2<F> matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorCode::parse_error, "matrix must be an array of 4 scalars (row-major)");
  }
  return {scalar_from_json<F>(j[0]), scalar_from_json<F>(j[1]), scalar_from_json<F>(j[2]),
          scalar_from_json<F>(j[3])};
}

template <class F>
json to_json(const TamePoint<F>& p) {
  json j;
  j["a"] = json::array({format_scalar(p.a1), format_scalar(p.a2), format_scalar(p.a3),
                        format_scalar(p.a4)});
  j["x"] = json::array({format_scalar(p.x12), format_scalar(p.x23), format_scalar(p.x31)});
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const TameTriple<F>& t) {
  json j;
  j["M1"] = matrix_to_json(t.m1);
  j["M2"] = matrix_to_json(t.m2);
  j["M3"] = matrix_to_json(t.m3);
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const WildPoint<F>& p) {
  json j;
  j["lambda"] = format_scalar(p.lambda);
  j["t0"] = format_scalar(p.t0);
  j["t1"] = format_scalar(p.t1);
  j["s"] = format_scalar(p.s);
  j["x"] = format_scalar(p.x);
  j["y"] = format_scalar(p.y);
  j["chart"] = std::string(chart_name(p.chart));
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const WildRep<F>& r) {
  json j;
  j["M0"] = matrix_to_json(r.m0);
  j["u1"] = format_scalar(r.u1);
  j["u2"] = format_scalar(r.u2);
  j["lambda"] = format_scalar(r.lambda);
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const WildInvariants<F>& v) {
  json j;
  j["lambda"] = format_scalar(v.lambda);
  j["u1u2"] = format_scalar(v.u1u2);
  j["u1c0"] = format_scalar(v.u1c0);
  j["u2b0"] = format_scalar(v.u2b0);
  j["a0"] = format_scalar(v.a0);
  j["d0"] = format_scalar(v.d0);
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const Representation<F>& rep) {
  json j;
  j["presentation"] = rep.presentation().name();
  json assignment = json::object();
  for (const GeneratorSpec& g : rep.presentation().generators()) {
    assignment[g.name] = matrix_to_json(rep.at(g.name));
  }
  j["assignment"] = std::move(assignment);
  return with_backend<F>(std::move(j));
}

template <class F>
json to_json(const Point<F>& p) {
  return std::visit([](const auto& q) { return to_json(q); }, p);
}

template <class F>
json to_json(const OrbitRecord<F>& o) {
  json j;
  j["word"] = o.word.to_string();
  j["steps"] = o.visited.size() - 1;
  j["initial"] = to_json(o.initial);
  json visited = json::array();
  for (const auto& p : o.visited) {
    json e = to_json(p);
    e.erase("backend");
    visited.push_back(std::move(e));
  }
  j["visited"] = std::move(visited);
  json residuals = json::array();
  for (const F& r : o.residuals) residuals.push_back(format_scalar(r));
  j["residuals"] = std::move(residuals);
  if (!o.charts.empty()) {
    json charts = json::array();
    for (Chart c : o.charts) charts.push_back(std::string(chart_name(c)));
    j["charts"] = std::move(charts);
  }
  j["period"] = o.period ? json(*o.period) : json(nullptr);
  j["residual_drift"] = residual_drift(o);
  return with_backend<F>(std::move(j));
}

json to_json(const Presentation& p) {
  json j;
  j["name"] = p.name();
  j["objects"] = p.objects();
  json gens = json::array();
  for (const GeneratorSpec& g : p.generators()) {
    gens.push_back({{"name", g.name}, {"source", g.source}, {"target", g.target}});
  }
  j["generators"] = std::move(gens);
  json rels = json::array();
  for (const Relation& r : p.relations()) {
    rels.push_back({{"name", r.name}, {"word", r.word.to_string()}});
  }
  j["relations"] = std::move(rels);
  j["base"] = p.base_object();
  json gauge = json::object();
  for (const auto& o : p.objects()) {
    if (p.gauge_class(o) == GaugeClass::diagonal) gauge[o] = "diagonal";
  }
  j["diagonal_gauge"] = std::move(gauge);
  json named = json::object();
  for (const auto& [name, w] : p.named_words()) named[name] = w.to_string();
  j["named_words"] = std::move(named);
  return j;
}

template <class F>
TamePoint<F> tame_point_from_json(const json& j) {
  const json& a = array_field(j, "a", 4);
  const json& x = array_field(j, "x", 3);
  return {scalar_from_json<F>(a[0]), scalar_from_json<F>(a[1]), scalar_from_json<F>(a[2]),
          scalar_from_json<F>(a[3]), scalar_from_json<F>(x[0]), scalar_from_json<F>(x[1]),
          scalar_from_json<F>(x[2])};
}

template <class F>
TameTriple<F> tame_triple_from_json(const json& j) {
  return {matrix_from_json<F>(field(j, "M1")), matrix_from_json<F>(field(j, "M2")),
          matrix_from_json<F>(field(j, "M3"))};
}

template <class F>
WildPoint<F> wild_point_from_json(const json& j) {
  WildPoint<F> p{scalar_from_json<F>(field(j, "lambda")), scalar_from_json<F>(field(j, "t0")),
                 scalar_from_json<F>(field(j, "t1")),     scalar_from_json<F>(field(j, "s")),
                 scalar_from_json<F>(field(j, "x")),      scalar_from_json<F>(field(j, "y")),
                 Chart::plus};
  if (j.contains("chart")) p.chart = parse_chart(j.at("chart").get<std::string>());
  return p;
}

template <class F>
WildRep<F> wild_rep_from_json(const json& j) {
  return {matrix_from_json<F>(field(j, "M0")), scalar_from_json<F>(field(j, "u1")),
          scalar_from_json<F>(field(j, "u2")), scalar_from_json<F>(field(j, "lambda"))};
}

template <class F>
Representation<F> representation_from_json(const json& j, PresentationPtr presentation) {
  const json& a = field(j, "assignment");
  if (!a.is_object()) throw Error(ErrorCode::parse_error, "\"assignment\" must be an object");
  std::map<std::string, Mat2<F>> assignment;
  for (const auto& [name, m] : a.items()) assignment.emplace(name, matrix_from_json<F>(m));
  return Representation<F>(std::move(presentation), std::move(assignment));
}

PresentationPtr presentation_from_json(const json& j) {
  std::vector<GeneratorSpec> gens;
  for (const json& g : field(j, "generators")) {
    gens.push_back({field(g, "name").get<std::string>(), field(g, "source").get<std::string>(),
                    field(g, "target").get<std::string>()});
  }
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    for (const json& r : j.at("relations")) {
      rels.push_back({field(r, "name").get<std::string>(),
                      Word::parse(field(r, "word").get<std::string>())});
    }
  }
  std::map<std::string, GaugeClass> gauge;
  if (j.contains("diagonal_gauge")) {
    for (const auto& [o, v] : j.at("diagonal_gauge").items()) {
      (void)v;
      gauge.emplace(o, GaugeClass::diagonal);
    }
  }
  std::map<std::string, Word> named;
  if (j.contains("named_words")) {
    for (const auto& [name, w] : j.at("named_words").items()) {
      named.emplace(name, Word::parse(w.get<std::string>()));
    }
  }
  return std::make_shared<const Presentation>(
      j.value("name", std::string("user")), field(j, "objects").get<std::vector<std::string>>(),
      std::move(gens), std::move(rels), field(j, "base").get<std::string>(), std::move(gauge),
      std::move(named));
}

PayloadKind detect_payload(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "expected a JSON object");
  if (j.contains("a") && j.contains("x")) return PayloadKind::tame_point;
  if (j.contains("M1")) return PayloadKind::tame_triple;
  if (j.contains("M0")) return PayloadKind::wild_rep;
  if (j.contains("lambda") && j.contains("t0")) return PayloadKind::wild_point;
  throw Error(ErrorCode::parse_error,
              "cannot tell the payload kind (expected a tame/wild point or triple/rep)");
}

namespace {

template <class F>
Point<F> typed_point(const json& j) {
  switch (detect_payload(j)) {
    case PayloadKind::tame_point: return tame_point_from_json<F>(j);
    case PayloadKind::wild_point: return wild_point_from_json<F>(j);
    default: break;
  }
  throw Error(ErrorCode::parse_error, "expected a tame or wild point");
}

}  // namespace

AnyPoint point_from_json(const json& j) {
  if (json_backend(j) == Backend::exact) return typed_point<GaussRational>(j);
  return typed_point<Complexd>(j);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

#define WILDCHAR_INSTANTIATE(F)                                                          \
  template F scalar_from_json<F>(const json&);                                           \
  template json matrix_to_json(const Mat2<F>&);                                          \
  template Mat2<F> matrix_from_json<F>(const json&);                                     \
  template json to_json(const TamePoint<F>&);                                            \
  template json to_json(const TameTriple<F>&);                                           \
  template json to_json(const WildPoint<F>&);                                            \
  template json to_json(const WildRep<F>&);                                              \
  template json to_json(const WildInvariants<F>&);                                       \
  template json to_json(const Representation<F>&);                                       \
  template json to_json(const OrbitRecord<F>&);                                          \
  template json to_json(const Point<F>&);                                                \
  template TamePoint<F> tame_point_from_json<F>(const json&);                            \
  template TameTriple<F> tame_triple_from_json<F>(const json&);                          \
  template WildPoint<F> wild_point_from_json<F>(const json&);                            \
  template WildRep<F> wild_rep_from_json<F>(const json&);                                \
  template Representation<F> representation_from_json<F>(const json&, PresentationPtr);

WILDCHAR_INSTANTIATE(GaussRational)
WILDCHAR_INSTANTIATE(Complexd)

#undef WILDCHAR_INSTANTIATE

}  // namespace wildchar
