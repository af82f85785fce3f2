#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildchar/mat2.hpp"

namespace wildchar {

/// Which gauge matrices an object accepts during normalization.
enum class GaugeClass { unrestricted, diagonal };

struct Letter {
  std::string generator;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A path word. Stored freely reduced: adjacent g g^-1 pairs never survive.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters);  // NOLINT(google-explicit-constructor)
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// Space separated generator names, each optionally suffixed by "^-1".
  static Word parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Single-letter word helper: gen("g12"), gen("g12", -1).
Word gen(std::string name, int exponent = 1);

struct GeneratorSpec {
  std::string name;
  std::string source;
  std::string target;
};

struct Relation {
  std::string name;
  Word word;
};

class Presentation {
 public:
  /// Validates endpoints and relation loops; throws invalid_presentation.
  Presentation(std::string name, std::vector<std::string> objects,
               std::vector<GeneratorSpec> generators, std::vector<Relation> relations,
               std::string base_object, std::map<std::string, GaugeClass> gauge_classes = {},
               std::map<std::string, Word> named_words = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<GeneratorSpec>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::string& base_object() const noexcept { return base_; }
  const std::map<std::string, Word>& named_words() const noexcept { return named_words_; }

  bool has_object(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  const GeneratorSpec& generator(const std::string& name) const;
  GaugeClass gauge_class(const std::string& object) const;
  const Word& named_word(const std::string& name) const;

  /// (source, target) of a nonempty word; throws not_composable or
  /// unknown_generator. Empty words have no intrinsic endpoints.
  std::optional<std::pair<std::string, std::string>> endpoints(const Word& w) const;
  bool is_loop(const Word& w) const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<GeneratorSpec> generators_;
  std::vector<Relation> relations_;
  std::string base_;
  std::map<std::string, GaugeClass> gauge_;
  std::map<std::string, Word> named_words_;
  std::map<std::string, std::size_t> generator_index_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Generator-wise matrix assignment; evaluation composes left to right.
template <class F>
class Representation {
 public:
  /// Every generator must be assigned an invertible matrix.
  Representation(PresentationPtr presentation, std::map<std::string, Mat2<F>> assignment);

  static Representation identity(PresentationPtr presentation);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const PresentationPtr& presentation_ptr() const noexcept { return presentation_; }
  const std::map<std::string, Mat2<F>>& assignment() const noexcept { return assignment_; }
  const Mat2<F>& at(const std::string& generator) const;
  Representation with(const std::string& generator, Mat2<F> value) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.presentation_ == b.presentation_ && a.assignment_ == b.assignment_;
  }

 private:
  PresentationPtr presentation_;
  std::map<std::string, Mat2<F>> assignment_;
};

template <class F>
Mat2<F> evaluate(const Representation<F>& rep, const Word& w);

template <class F>
struct RelationResidual {
  std::string relation;
  Mat2<F> residual;
  bool satisfied = false;
};

/// Evaluates every relation. Exact: satisfied iff residual == I.
/// Float: satisfied iff every entry of residual - I is within tol.
template <class F>
std::vector<RelationResidual<F>> check_relations(const Representation<F>& rep, double tol = 1e-9);

template <class F>
bool satisfies_relations(const Representation<F>& rep, double tol = 1e-9);

/// Morphism of a presentation to itself, possibly permuting objects.
/// Generators without an explicit image map to themselves.
class Automorphism {
 public:
  /// Validates that each image runs between the images of the generator's
  /// endpoints; throws endpoint_mismatch.
  Automorphism(std::string name, PresentationPtr presentation, std::map<std::string, Word> images,
               std::map<std::string, std::string> object_map = {});

  const std::string& name() const noexcept { return name_; }
  const Presentation& presentation() const noexcept { return *presentation_; }
  const PresentationPtr& presentation_ptr() const noexcept { return presentation_; }
  const std::string& map_object(const std::string& object) const;
  Word image(const std::string& generator) const;
  /// Letterwise image of a word, freely reduced.
  Word apply(const Word& w) const;

 private:
  std::string name_;
  PresentationPtr presentation_;
  std::map<std::string, Word> images_;
  std::map<std::string, std::string> object_map_;
};

/// rho -> rho o h. When the input satisfies its relations the output is
/// checked to satisfy them too (invalid_presentation otherwise).
template <class F>
Representation<F> apply_automorphism(const Automorphism& h, const Representation<F>& rep,
                                     double tol = 1e-9);

/// Object -> N_i. Unlisted objects carry the identity.
template <class F>
using GaugeAssignment = std::map<std::string, Mat2<F>>;

/// rho'(g) = N_src rho(g) N_tgt^-1. Diagonal-only objects must receive
/// diagonal det-1 matrices (gauge_constraint_violated).
template <class F>
Representation<F> apply_gauge(const Representation<F>& rep, const GaugeAssignment<F>& gauge);

template <class F>
struct Normalized {
  Representation<F> rep;
  GaugeAssignment<F> gauge;
};

/// Gauge-fixes rep so that every tree generator evaluates to I, with
/// N_base = I. Throws tree_not_spanning or gauge_constraint_violated.
template <class F>
Normalized<F> normalize(const Representation<F>& rep, const std::vector<std::string>& tree);

// Built-in presentations and morphisms.

PresentationPtr tame_presentation();
PresentationPtr wild_presentation();

/// Tree {g12, g23, g34}.
const std::vector<std::string>& tame_tree();
/// Tree {g0inf, ginf1, rinf, r1m, r1p, r2m, r2p, alphah1, alphah2, betah1m,
/// betah1p, betah2m}.
const std::vector<std::string>& wild_tree();

/// h_1 and its cyclic index shifts h_2, h_3.
Automorphism braid_automorphism_tame(int i);

enum class WildBraid { pure, full };
Automorphism braid_automorphism_wild(WildBraid kind);

/// Identity automorphism of any presentation.
Automorphism identity_automorphism(PresentationPtr presentation);

extern template class Representation<GaussRational>;
extern template class Representation<Complexd>;

}  // namespace wildchar
