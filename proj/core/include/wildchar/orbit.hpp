#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wildchar/tame.hpp"
#include "wildchar/wild.hpp"

namespace wildchar {

enum class BraidGen { h1, h2, h3, pure, full, swap };

std::string_view braid_gen_name(BraidGen g);
bool is_tame_gen(BraidGen g);

struct BraidStep {
  BraidGen gen = BraidGen::h1;
  int exponent = 1;
  friend bool operator==(const BraidStep&, const BraidStep&) = default;
};

/// A word in the dynamics generators. Tame words use h1 h2 h3, wild words
/// use pure full swap; the two alphabets never mix.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidStep> steps);

  /// Tokens separated by spaces, commas or '*', each optionally followed by
  /// "^-1". Throws malformed_word, listing the valid tags on unknown input.
  static BraidWord parse(std::string_view text);
  std::string to_string() const;

  const std::vector<BraidStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  bool is_tame() const;
  bool is_wild() const;
  /// Number of chart-toggling steps (full, swap).
  std::size_t toggles() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidStep> steps_;
};

template <class F>
using Point = std::variant<TamePoint<F>, WildPoint<F>>;

template <class F>
F point_residual(const Point<F>& p);

/// Scaled surface membership (see on_fricke_surface).
template <class F>
bool point_on_surface(const Point<F>& p, double tol);

/// Applies every step of w once, first token first.
template <class F>
Point<F> apply_word(const Point<F>& p, const BraidWord& w);

struct IterateOptions {
  double tol = 1e-9;
  bool require_on_surface = true;
};

template <class F>
struct OrbitRecord {
  Point<F> initial;
  BraidWord word;
  std::vector<Point<F>> visited;  // visited[0] is the start
  std::vector<F> residuals;       // one per visited point
  std::vector<Chart> charts;      // wild orbits only
  std::optional<std::size_t> period;
};

template <class F>
OrbitRecord<F> iterate(const Point<F>& start, const BraidWord& w, std::size_t n,
                       const IterateOptions& options = {});

/// Exact: first recurrence found by hashing canonical coordinates.
/// Float: first point within relative distance tol of an earlier one.
template <class F>
std::optional<std::size_t> detect_cycle(const OrbitRecord<F>& o, double tol = 1e-9);

/// max |residual| over the orbit.
template <class F>
double residual_drift(const OrbitRecord<F>& o);

/// One row per visited point: step, coordinates, residual[, chart].
template <class F>
std::string orbit_to_csv(const OrbitRecord<F>& o);

}  // namespace wildchar
