#include "wildchar_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wildchar/tame.hpp"
#include "wildchar/wild.hpp"

namespace wildchar::cli {

namespace {

// Exact samples are drawn once and lifted to the backend under test.
template <class F>
struct Lift;

template <>
struct Lift<GaussRational> {
  template <class T>
  static const T& to(const T& v) {
    return v;
  }
};

template <>
struct Lift<Complexd> {
  template <class T>
  static auto to(const T& v) {
    return to_float(v);
  }
  static Complexd to(const GaussRational& v) { return to_complex(v); }
};

template <class F>
bool agree(const F& a, const F& b, double tol) {
  if constexpr (std::is_same_v<F, GaussRational>) {
    (void)tol;
    return a == b;
  } else {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

template <class F, std::size_t N>
bool agree(const std::array<F, N>& a, const std::array<F, N>& b, double tol) {
  for (std::size_t k = 0; k < N; ++k) {
    if (!agree(a[k], b[k], tol)) return false;
  }
  return true;
}

template <class F>
bool agree(const Mat2<F>& a, const Mat2<F>& b, double tol) {
  return agree(a.m11, b.m11, tol) && agree(a.m12, b.m12, tol) && agree(a.m21, b.m21, tol) &&
         agree(a.m22, b.m22, tol);
}

template <class F>
bool agree(const TamePoint<F>& a, const TamePoint<F>& b, double tol) {
  return agree(a.coords(), b.coords(), tol);
}

template <class F>
bool agree(const WildPoint<F>& a, const WildPoint<F>& b, double tol) {
  return a.chart == b.chart && agree(a.coords(), b.coords(), tol);
}

template <class F>
bool agree(const TameTriple<F>& a, const TameTriple<F>& b, double tol) {
  return agree(a.m1, b.m1, tol) && agree(a.m2, b.m2, tol) && agree(a.m3, b.m3, tol);
}

template <class F>
bool agree(const WildRep<F>& a, const WildRep<F>& b, double tol) {
  return agree(a.m0, b.m0, tol) && agree(a.u1, b.u1, tol) && agree(a.u2, b.u2, tol) &&
         agree(a.lambda, b.lambda, tol);
}

template <class F>
bool agree(const WildInvariants<F>& a, const WildInvariants<F>& b, double tol) {
  return agree(std::array<F, 6>{a.lambda, a.u1u2, a.u1c0, a.u2b0, a.a0, a.d0},
               std::array<F, 6>{b.lambda, b.u1u2, b.u1c0, b.u2b0, b.a0, b.d0}, tol);
}

/// Runs `count` samples, keeping the first counterexample. A sample returns
/// a null json when it passes.
SuiteResult run_samples(const std::string& name, const SuiteOptions& o,
                        const std::function<json(Rng&, int)>& sample) {
  SuiteResult out{name, 0, 0, nullptr};
  Rng rng(o.seed);
  for (int k = 0; k < o.count; ++k) {
    json failure;
    try {
      failure = sample(rng, k);
    } catch (const Error& e) {
      failure = {{"error", std::string(e.code_name())}, {"message", e.what()}};
    }
    ++out.samples;
    if (!failure.is_null()) {
      if (out.failures == 0) {
        failure["sample"] = k;
        out.counterexample = std::move(failure);
      }
      ++out.failures;
    }
  }
  return out;
}

template <class F>
SuiteResult fricke(const SuiteOptions& o) {
  return run_samples("fricke", o, [&](Rng& rng, int) -> json {
    const TameTriple<F> t = Lift<F>::to(random_tame_triple(rng));
    const F x123 = (t.m1 * t.m2 * t.m3).trace();
    const F x132 = (t.m1 * t.m3 * t.m2).trace();
    const TamePoint<F> p = tame_traces(t);
    auto [pp, q] = fricke_pq(p);
    if (o.inject_sign_error) pp = pp + F(2) * p.a1 * p.a2 * p.a3;
    if (agree(x123 + x132, pp, o.tol) && agree(x123 * x132, q, o.tol)) return nullptr;
    return {{"triple", to_json(t)},
            {"x123+x132", format_scalar(x123 + x132)},
            {"P", format_scalar(pp)},
            {"x123*x132", format_scalar(x123 * x132)},
            {"Q", format_scalar(q)}};
  });
}

template <class F>
SuiteResult extended_fricke(const SuiteOptions& o) {
  return run_samples("extended-fricke", o, [&](Rng& rng, int) -> json {
    const TameTriple<F> t = Lift<F>::to(random_tame_triple(rng));
    const auto [m1, m2] = extended_traces(t);
    const auto [f1, f2] = extended_traces_formula(tame_traces(t));
    if (agree(m1, f1, o.tol) && agree(m2, f2, o.tol)) return nullptr;
    return {{"triple", to_json(t)},
            {"matrix", {format_scalar(m1), format_scalar(m2)}},
            {"formula", {format_scalar(f1), format_scalar(f2)}}};
  });
}

template <class F>
SuiteResult tame_oracle(const SuiteOptions& o) {
  return run_samples("tame-oracle", o, [&](Rng& rng, int) -> json {
    const TameTriple<F> t = Lift<F>::to(random_tame_triple(rng));
    const TamePoint<F> p = tame_traces(t);
    for (int i = 1; i <= 3; ++i) {
      const TamePoint<F> coords = braid_coord_action(i, p);
      const TamePoint<F> matrix = tame_traces(braid_matrix_action(i, t));
      if (!agree(coords, matrix, o.tol)) {
        return {{"generator", "h" + std::to_string(i)},
                {"triple", to_json(t)},
                {"coords", to_json(coords)},
                {"matrix", to_json(matrix)}};
      }
    }
    return nullptr;
  });
}

template <class F>
SuiteResult wild_oracle(const SuiteOptions& o) {
  return run_samples("wild-oracle", o, [&](Rng& rng, int) -> json {
    const WildRep<F> r = Lift<F>::to(random_wild_rep(rng));
    const WildPoint<F> p = wild_traces(r);
    const WildPoint<F> pure_c = pure_braid_coords(p);
    const WildPoint<F> pure_m = wild_traces(pure_braid_matrix(r));
    if (!agree(pure_c, pure_m, o.tol)) {
      return {{"generator", "pure"}, {"rep", to_json(r)}, {"coords", to_json(pure_c)},
              {"matrix", to_json(pure_m)}};
    }
    const WildPoint<F> full_c = full_braid_coords(p);
    const WildPoint<F> full_m = wild_traces(full_braid_matrix(r), Chart::minus);
    if (!agree(full_c, full_m, o.tol)) {
      return {{"generator", "full"}, {"rep", to_json(r)}, {"coords", to_json(full_c)},
              {"matrix", to_json(full_m)}};
    }
    return nullptr;
  });
}

template <class F>
SuiteResult roundtrips(const SuiteOptions& o) {
  return run_samples("roundtrips", o, [&](Rng& rng, int) -> json {
    GaussRational alpha = random_nonzero_rational(rng, 7);
    while (alpha == GaussRational(1) || alpha == GaussRational(-1)) {
      alpha = random_nonzero_rational(rng, 7);
    }
    const TameTriple<F> t = Lift<F>::to(random_tame_triple_with_eigenvalue(rng, alpha));
    const TamePoint<F> p = tame_traces(t);
    const TamePoint<F> back = tame_traces(tame_reconstruct(p, Lift<F>::to(alpha), o.tol));
    if (!agree(p, back, o.tol)) {
      return {{"kind", "tame"}, {"point", to_json(p)}, {"roundtrip", to_json(back)}};
    }
    const WildRep<F> r = Lift<F>::to(random_wild_rep(rng));
    const WildPoint<F> q = wild_traces(r);
    const WildRep<F> rebuilt = wild_reconstruct(q, o.tol);
    const WildPoint<F> q_back = wild_traces(rebuilt);
    if (!agree(q, q_back, o.tol) ||
        !agree(wild_equiv_invariants(r), wild_equiv_invariants(rebuilt), o.tol)) {
      return {{"kind", "wild"}, {"rep", to_json(r)}, {"rebuilt", to_json(rebuilt)},
              {"point", to_json(q)}, {"roundtrip", to_json(q_back)}};
    }
    return nullptr;
  });
}

template <class F>
SuiteResult involution(const SuiteOptions& o) {
  return run_samples("involution", o, [&](Rng& rng, int) -> json {
    const WildPoint<F> p = Lift<F>::to(wild_traces(random_wild_rep(rng)));
    const WildPoint<F> once = chart_swap(p);
    const WildPoint<F> twice = chart_swap(once);
    const F r = wild_residual(once);
    if (agree(p, twice, o.tol) && on_wild_surface(once, o.tol)) return nullptr;
    return {{"point", to_json(p)}, {"swapped", to_json(once)}, {"twice", to_json(twice)},
            {"residual", format_scalar(r)}};
  });
}

template <class F>
SuiteResult full_squared(const SuiteOptions& o) {
  return run_samples("full-squared", o, [&](Rng& rng, int) -> json {
    const WildPoint<F> p = Lift<F>::to(wild_traces(random_wild_rep(rng)));
    const WildPoint<F> ff = full_braid_coords(full_braid_coords(p));
    const WildPoint<F> pure = pure_braid_coords(p);
    if (agree(ff, pure, o.tol)) return nullptr;
    return {{"point", to_json(p)}, {"full_full", to_json(ff)}, {"pure", to_json(pure)}};
  });
}

template <class F>
SuiteResult groupoid_oracle(const SuiteOptions& o) {
  return run_samples("groupoid-oracle", o, [&](Rng& rng, int) -> json {
    const TameTriple<F> t = Lift<F>::to(random_tame_triple(rng));
    const auto h1 = braid_automorphism_tame(1);
    const auto tame_rep = normalize(apply_automorphism(h1, tame_to_groupoid(t), o.tol), tame_tree());
    const TameTriple<F> via_groupoid = tame_from_groupoid(tame_rep.rep);
    const TameTriple<F> direct = braid_matrix_action(1, t);
    if (!agree(via_groupoid, direct, o.tol)) {
      return {{"kind", "tame h1"}, {"triple", to_json(t)}, {"groupoid", to_json(via_groupoid)},
              {"matrix", to_json(direct)}};
    }
    const WildRep<F> r = Lift<F>::to(random_wild_rep(rng));
    const auto pure = braid_automorphism_wild(WildBraid::pure);
    const auto wild_rep = normalize(apply_automorphism(pure, wild_to_groupoid(r), o.tol), wild_tree());
    const WildRep<F> via = wild_from_groupoid(wild_rep.rep);
    const WildRep<F> expected = pure_braid_matrix(r);
    if (!agree(via, expected, o.tol)) {
      return {{"kind", "wild pure"}, {"rep", to_json(r)}, {"groupoid", to_json(via)},
              {"matrix", to_json(expected)}};
    }
    return nullptr;
  });
}

template <class F>
using SuiteFn = SuiteResult (*)(const SuiteOptions&);

template <class F>
const std::map<std::string, SuiteFn<F>>& suite_table() {
  static const std::map<std::string, SuiteFn<F>> table = {
      {"fricke", &fricke<F>},
      {"extended-fricke", &extended_fricke<F>},
      {"tame-oracle", &tame_oracle<F>},
      {"wild-oracle", &wild_oracle<F>},
      {"roundtrips", &roundtrips<F>},
      {"involution", &involution<F>},
      {"full-squared", &full_squared<F>},
      {"groupoid-oracle", &groupoid_oracle<F>},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "fricke",     "extended-fricke", "tame-oracle",  "wild-oracle",
      "roundtrips", "involution",      "full-squared", "groupoid-oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    std::string valid;
    for (const auto& n : suite_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::unknown_suite,
                "unknown suite \"" + name + "\"; valid suites: " + valid);
  }
  if (options.backend == Backend::exact) return suite_table<GaussRational>().at(name)(options);
  return suite_table<Complexd>().at(name)(options);
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

json VerifyReport::to_json(const SuiteOptions& options) const {
  json j;
  j["backend"] = std::string(backend_name(options.backend));
  j["seed"] = options.seed;
  j["count"] = options.count;
  if (options.backend == Backend::floating) j["tol"] = options.tol;
  json list = json::array();
  for (const SuiteResult& s : suites) {
    json e;
    e["name"] = s.name;
    e["passed"] = s.passed();
    e["samples"] = s.samples;
    e["failures"] = s.failures;
    e["counterexample"] = s.counterexample;
    list.push_back(std::move(e));
  }
  j["suites"] = std::move(list);
  j["passed"] = passed();
  return j;
}

VerifyReport run_verify(const std::vector<std::string>& suites, const SuiteOptions& options) {
  const std::vector<std::string>& names = suites.empty() ? suite_names() : suites;
  for (const auto& n : names) {
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
      run_suite(n, options);  // throws unknown_suite
    }
  }
  VerifyReport report;
  for (const auto& n : names) report.suites.push_back(run_suite(n, options));
  return report;
}

}  // namespace wildchar::cli
