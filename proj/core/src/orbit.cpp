#include "wildchar/orbit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace wildchar {

namespace {

constexpr std::pair<BraidGen, std::string_view> kGenNames[] = {
    {BraidGen::h1, "h1"},     {BraidGen::h2, "h2"},     {BraidGen::h3, "h3"},
    {BraidGen::pure, "pure"}, {BraidGen::full, "full"}, {BraidGen::swap, "swap"},
};

std::string valid_tags() {
  std::string out;
  for (const auto& [g, name] : kGenNames) {
    (void)g;
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

std::string_view braid_gen_name(BraidGen g) {
  for (const auto& [gen, name] : kGenNames) {
    if (gen == g) return name;
  }
  return "?";
}

bool is_tame_gen(BraidGen g) {
  return g == BraidGen::h1 || g == BraidGen::h2 || g == BraidGen::h3;
}

BraidWord::BraidWord(std::vector<BraidStep> steps) : steps_(std::move(steps)) {
  bool tame = false;
  bool wild = false;
  for (const BraidStep& s : steps_) {
    if (s.exponent != 1 && s.exponent != -1) {
      throw Error(ErrorCode::malformed_word, "exponent must be +1 or -1");
    }
    (is_tame_gen(s.gen) ? tame : wild) = true;
  }
  if (tame && wild) {
    throw Error(ErrorCode::malformed_word,
                "word mixes tame tags (h1, h2, h3) with wild tags (pure, full, swap)");
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  std::string normalized(text);
  std::replace_if(
      normalized.begin(), normalized.end(), [](char c) { return c == ',' || c == '*'; }, ' ');
  std::istringstream in(normalized);
  std::vector<BraidStep> steps;
  std::string token;
  while (in >> token) {
    int exponent = 1;
    std::string name = token;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const std::string power = token.substr(caret + 1);
      if (power == "-1") {
        exponent = -1;
      } else if (power != "1" && power != "+1") {
        throw Error(ErrorCode::malformed_word, "bad exponent in \"" + token + "\"");
      }
      name = token.substr(0, caret);
    }
    const auto it = std::find_if(std::begin(kGenNames), std::end(kGenNames),
                                 [&](const auto& e) { return e.second == name; });
    if (it == std::end(kGenNames)) {
      throw Error(ErrorCode::malformed_word,
                  "unknown generator \"" + name + "\"; valid tags: " + valid_tags());
    }
    steps.push_back({it->first, exponent});
  }
  if (steps.empty()) throw Error(ErrorCode::malformed_word, "empty word; valid tags: " + valid_tags());
  return BraidWord(std::move(steps));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const BraidStep& s : steps_) {
    if (!out.empty()) out += ' ';
    out += braid_gen_name(s.gen);
    if (s.exponent == -1) out += "^-1";
  }
  return out;
}

bool BraidWord::is_tame() const {
  return !steps_.empty() && is_tame_gen(steps_.front().gen);
}

bool BraidWord::is_wild() const {
  return !steps_.empty() && !is_tame_gen(steps_.front().gen);
}

std::size_t BraidWord::toggles() const {
  return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const auto& s) {
    return s.gen == BraidGen::full || s.gen == BraidGen::swap;
  }));
}

template <class F>
F point_residual(const Point<F>& p) {
  if (const auto* t = std::get_if<TamePoint<F>>(&p)) return fricke_residual(*t);
  return wild_residual(std::get<WildPoint<F>>(p));
}

template <class F>
bool point_on_surface(const Point<F>& p, double tol) {
  if (const auto* t = std::get_if<TamePoint<F>>(&p)) return on_fricke_surface(*t, tol);
  return on_wild_surface(std::get<WildPoint<F>>(p), tol);
}

namespace {

template <class F>
TamePoint<F> step_tame(const TamePoint<F>& p, const BraidStep& s) {
  const int i = s.gen == BraidGen::h1 ? 1 : s.gen == BraidGen::h2 ? 2 : 3;
  return s.exponent == 1 ? braid_coord_action(i, p) : braid_coord_action_inverse(i, p);
}

template <class F>
WildPoint<F> step_wild(const WildPoint<F>& p, const BraidStep& s) {
  switch (s.gen) {
    case BraidGen::pure:
      return s.exponent == 1 ? pure_braid_coords(p) : pure_braid_coords_inverse(p);
    case BraidGen::swap:
      return chart_swap(p);
    case BraidGen::full:
      if (s.exponent == -1) {
        throw Error(ErrorCode::no_inverse, "full^-1 has no implemented inverse");
      }
      return full_braid_coords(p);
    default:
      break;
  }
  throw Error(ErrorCode::malformed_word, "tame tag in a wild word");
}

void check_word_kind(const BraidWord& w, bool tame_point) {
  for (const BraidStep& s : w.steps()) {
    if (s.gen == BraidGen::full && s.exponent == -1) {
      throw Error(ErrorCode::no_inverse, "full^-1 has no implemented inverse");
    }
  }
  if (w.empty()) return;
  if (tame_point && !w.is_tame()) {
    throw Error(ErrorCode::malformed_word, "wild word \"" + w.to_string() + "\" on a tame point");
  }
  if (!tame_point && !w.is_wild()) {
    throw Error(ErrorCode::malformed_word, "tame word \"" + w.to_string() + "\" on a wild point");
  }
}

template <class F>
Point<F> apply_checked(const Point<F>& p, const BraidWord& w) {
  if (const auto* t = std::get_if<TamePoint<F>>(&p)) {
    TamePoint<F> q = *t;
    for (const BraidStep& s : w.steps()) q = step_tame(q, s);
    return q;
  }
  WildPoint<F> q = std::get<WildPoint<F>>(p);
  for (const BraidStep& s : w.steps()) q = step_wild(q, s);
  return q;
}

template <class F>
std::vector<F> coordinates(const Point<F>& p) {
  return std::visit(
      [](const auto& q) {
        const auto c = q.coords();
        return std::vector<F>(c.begin(), c.end());
      },
      p);
}

template <class F>
std::optional<Chart> chart_of(const Point<F>& p) {
  if (const auto* w = std::get_if<WildPoint<F>>(&p)) return w->chart;
  return std::nullopt;
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <class F>
std::size_t point_hash(const Point<F>& p) {
  std::size_t h = p.index();
  for (const F& c : coordinates(p)) h = mix(h, scalar_hash(c));
  if (const auto chart = chart_of(p)) h = mix(h, static_cast<std::size_t>(*chart));
  return h;
}

std::optional<std::size_t> exact_cycle(const std::vector<Point<GaussRational>>& visited) {
  std::unordered_multimap<std::size_t, std::size_t> seen;
  for (std::size_t k = 0; k < visited.size(); ++k) {
    const std::size_t h = point_hash(visited[k]);
    const auto [lo, hi] = seen.equal_range(h);
    std::optional<std::size_t> earliest;
    for (auto it = lo; it != hi; ++it) {
      if (visited[it->second] == visited[k]) {
        earliest = earliest ? std::min(*earliest, it->second) : it->second;
      }
    }
    if (earliest) return k - *earliest;
    seen.emplace(h, k);
  }
  return std::nullopt;
}

std::optional<std::size_t> float_cycle(const std::vector<Point<Complexd>>& visited, double tol) {
  // Candidates are found through the coordinate sum: points that agree
  // coordinatewise within delta_i have sums within sum(2 delta_i).
  std::multimap<double, std::size_t> by_sum;
  for (std::size_t k = 0; k < visited.size(); ++k) {
    const auto coords = coordinates(visited[k]);
    double key = 0.0;
    double radius = 0.0;
    std::vector<double> delta;
    for (const Complexd& c : coords) {
      key += c.real() + c.imag();
      delta.push_back(tol * std::max(1.0, std::abs(c)));
      radius += 2.0 * delta.back();
    }
    radius *= 1.0 + 1e-12;
    std::optional<std::size_t> earliest;
    for (auto it = by_sum.lower_bound(key - radius); it != by_sum.end() && it->first <= key + radius;
         ++it) {
      const auto& other = visited[it->second];
      if (other.index() != visited[k].index() || chart_of(other) != chart_of(visited[k])) continue;
      const auto oc = coordinates(other);
      bool close = true;
      for (std::size_t i = 0; close && i < oc.size(); ++i) {
        close = std::abs(oc[i] - coords[i]) <= delta[i];
      }
      if (close) earliest = earliest ? std::min(*earliest, it->second) : it->second;
    }
    if (earliest) return k - *earliest;
    by_sum.emplace(key, k);
  }
  return std::nullopt;
}

}  // namespace

template <class F>
Point<F> apply_word(const Point<F>& p, const BraidWord& w) {
  check_word_kind(w, std::holds_alternative<TamePoint<F>>(p));
  return apply_checked(p, w);
}

template <class F>
OrbitRecord<F> iterate(const Point<F>& start, const BraidWord& w, std::size_t n,
                       const IterateOptions& options) {
  check_word_kind(w, std::holds_alternative<TamePoint<F>>(start));
  OrbitRecord<F> out{start, w, {}, {}, {}, std::nullopt};
  F r = point_residual(start);
  if (options.require_on_surface && !point_on_surface(start, options.tol)) {
    throw Error(ErrorCode::off_surface,
                "start point is off the surface (residual " + format_scalar(r) + ")");
  }
  out.visited.reserve(n + 1);
  out.residuals.reserve(n + 1);
  Point<F> current = start;
  for (std::size_t k = 0;; ++k) {
    out.visited.push_back(current);
    out.residuals.push_back(std::move(r));
    if (const auto chart = chart_of(current)) out.charts.push_back(*chart);
    if (k == n) break;
    current = apply_checked(current, w);
    r = point_residual(current);
  }
  out.period = detect_cycle(out, options.tol);
  return out;
}

template <class F>
std::optional<std::size_t> detect_cycle(const OrbitRecord<F>& o, double tol) {
  if constexpr (std::is_same_v<F, GaussRational>) {
    (void)tol;
    return exact_cycle(o.visited);
  } else {
    return float_cycle(o.visited, tol);
  }
}

template <class F>
double residual_drift(const OrbitRecord<F>& o) {
  double out = 0.0;
  for (const F& r : o.residuals) out = std::max(out, magnitude(r));
  return out;
}

template <class F>
std::string orbit_to_csv(const OrbitRecord<F>& o) {
  std::ostringstream out;
  const bool tame = std::holds_alternative<TamePoint<F>>(o.initial);
  out << (tame ? "step,a1,a2,a3,a4,x12,x23,x31,residual\n"
               : "step,lambda,t0,t1,s,x,y,residual,chart\n");
  for (std::size_t k = 0; k < o.visited.size(); ++k) {
    out << k;
    for (const F& c : coordinates(o.visited[k])) out << ',' << format_scalar(c);
    out << ',' << format_scalar(o.residuals[k]);
    if (const auto chart = chart_of(o.visited[k])) out << ',' << chart_name(*chart);
    out << '\n';
  }
  return out.str();
}

#define WILDCHAR_INSTANTIATE(F)                                                               \
  template F point_residual(const Point<F>&);                                                 \
  template bool point_on_surface(const Point<F>&, double);                                    \
  template Point<F> apply_word(const Point<F>&, const BraidWord&);                            \
  template OrbitRecord<F> iterate(const Point<F>&, const BraidWord&, std::size_t,             \
                                  const IterateOptions&);                                     \
  template std::optional<std::size_t> detect_cycle(const OrbitRecord<F>&, double);            \
  template double residual_drift(const OrbitRecord<F>&);                                      \
  template std::string orbit_to_csv(const OrbitRecord<F>&);

WILDCHAR_INSTANTIATE(GaussRational)
WILDCHAR_INSTANTIATE(Complexd)

#undef WILDCHAR_INSTANTIATE

}  // namespace wildchar
