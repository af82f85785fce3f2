#include "wildchar/groupoid.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace wildchar {

// --- Word -------------------------------------------------------------------

Word::Word(std::vector<Letter> letters) {
  for (Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw Error(ErrorCode::malformed_word, "exponent must be +1 or -1");
    }
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(std::move(l));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const std::string power = token.substr(caret + 1);
      if (power == "-1") {
        exponent = -1;
      } else if (power != "1" && power != "+1") {
        throw Error(ErrorCode::malformed_word, "bad exponent in \"" + token + "\"");
      }
      token.resize(caret);
    }
    if (token.empty()) throw Error(ErrorCode::malformed_word, "empty generator name");
    out.push_back({token, exponent});
  }
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->generator, -it->exponent});
  }
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word gen(std::string name, int exponent) { return Word({Letter{std::move(name), exponent}}); }

// --- Presentation -----------------------------------------------------------

Presentation::Presentation(std::string name, std::vector<std::string> objects,
                           std::vector<GeneratorSpec> generators, std::vector<Relation> relations,
                           std::string base_object, std::map<std::string, GaugeClass> gauge_classes,
                           std::map<std::string, Word> named_words)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      base_(std::move(base_object)),
      gauge_(std::move(gauge_classes)),
      named_words_(std::move(named_words)) {
  const std::set<std::string> object_set(objects_.begin(), objects_.end());
  if (object_set.size() != objects_.size()) {
    throw Error(ErrorCode::invalid_presentation, "duplicate object name");
  }
  if (!object_set.count(base_)) {
    throw Error(ErrorCode::invalid_presentation, "base object \"" + base_ + "\" is not declared");
  }
  for (const auto& [object, cls] : gauge_) {
    (void)cls;
    if (!object_set.count(object)) {
      throw Error(ErrorCode::invalid_presentation, "gauge class for undeclared object " + object);
    }
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const GeneratorSpec& g = generators_[k];
    if (!object_set.count(g.source) || !object_set.count(g.target)) {
      throw Error(ErrorCode::invalid_presentation,
                  "generator " + g.name + " has an undeclared endpoint");
    }
    if (!generator_index_.emplace(g.name, k).second) {
      throw Error(ErrorCode::invalid_presentation, "duplicate generator " + g.name);
    }
  }
  for (const Relation& r : relations_) {
    try {
      if (!r.word.empty() && !is_loop(r.word)) {
        throw Error(ErrorCode::invalid_presentation, "relation " + r.name + " is not a loop");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_presentation) throw;
      throw Error(ErrorCode::invalid_presentation, "relation " + r.name + ": " + e.what());
    }
  }
  for (const auto& [word_name, w] : named_words_) {
    try {
      endpoints(w);
    } catch (const Error& e) {
      throw Error(ErrorCode::invalid_presentation, "named word " + word_name + ": " + e.what());
    }
  }
}

bool Presentation::has_object(const std::string& name) const {
  for (const auto& o : objects_) {
    if (o == name) return true;
  }
  return false;
}

bool Presentation::has_generator(const std::string& name) const {
  return generator_index_.count(name) != 0;
}

const GeneratorSpec& Presentation::generator(const std::string& name) const {
  const auto it = generator_index_.find(name);
  if (it == generator_index_.end()) {
    throw Error(ErrorCode::unknown_generator, "unknown generator \"" + name + "\"");
  }
  return generators_[it->second];
}

GaugeClass Presentation::gauge_class(const std::string& object) const {
  const auto it = gauge_.find(object);
  if (it != gauge_.end()) return it->second;
  if (!has_object(object)) throw Error(ErrorCode::unknown_object, "unknown object " + object);
  return GaugeClass::unrestricted;
}

const Word& Presentation::named_word(const std::string& name) const {
  const auto it = named_words_.find(name);
  if (it == named_words_.end()) {
    throw Error(ErrorCode::unknown_generator, "no named word \"" + name + "\"");
  }
  return it->second;
}

std::optional<std::pair<std::string, std::string>> Presentation::endpoints(const Word& w) const {
  if (w.empty()) return std::nullopt;
  std::string source;
  std::string current;
  for (const Letter& l : w.letters()) {
    const GeneratorSpec& g = generator(l.generator);
    const std::string& from = l.exponent == 1 ? g.source : g.target;
    const std::string& to = l.exponent == 1 ? g.target : g.source;
    if (current.empty()) {
      source = from;
    } else if (current != from) {
      throw Error(ErrorCode::not_composable, "word \"" + w.to_string() + "\" breaks at " +
                                                 l.generator + " (at " + current + ", needs " +
                                                 from + ")");
    }
    current = to;
  }
  return std::make_pair(source, current);
}

bool Presentation::is_loop(const Word& w) const {
  const auto ends = endpoints(w);
  return !ends || ends->first == ends->second;
}

// --- Representation ---------------------------------------------------------

template <class F>
Representation<F>::Representation(PresentationPtr presentation,
                                  std::map<std::string, Mat2<F>> assignment)
    : presentation_(std::move(presentation)), assignment_(std::move(assignment)) {
  for (const auto& [name, m] : assignment_) {
    presentation_->generator(name);
    if (is_zero(m.det())) {
      throw Error(ErrorCode::singular_matrix, "generator " + name + " assigned a singular matrix");
    }
  }
  for (const GeneratorSpec& g : presentation_->generators()) {
    if (!assignment_.count(g.name)) {
      throw Error(ErrorCode::unknown_generator, "generator " + g.name + " has no assigned matrix");
    }
  }
}

template <class F>
Representation<F> Representation<F>::identity(PresentationPtr presentation) {
  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : presentation->generators()) {
    assignment.emplace(g.name, Mat2<F>::identity());
  }
  return Representation(std::move(presentation), std::move(assignment));
}

template <class F>
const Mat2<F>& Representation<F>::at(const std::string& generator) const {
  const auto it = assignment_.find(generator);
  if (it == assignment_.end()) {
    throw Error(ErrorCode::unknown_generator, "unknown generator \"" + generator + "\"");
  }
  return it->second;
}

template <class F>
Representation<F> Representation<F>::with(const std::string& generator, Mat2<F> value) const {
  auto assignment = assignment_;
  presentation_->generator(generator);
  assignment[generator] = std::move(value);
  return Representation(presentation_, std::move(assignment));
}

template <class F>
Mat2<F> evaluate(const Representation<F>& rep, const Word& w) {
  rep.presentation().endpoints(w);
  Mat2<F> out = Mat2<F>::identity();
  for (const Letter& l : w.letters()) {
    const Mat2<F>& m = rep.at(l.generator);
    out = out * (l.exponent == 1 ? m : mat_inv(m));
  }
  return out;
}

template <class F>
std::vector<RelationResidual<F>> check_relations(const Representation<F>& rep, double tol) {
  std::vector<RelationResidual<F>> out;
  for (const Relation& r : rep.presentation().relations()) {
    Mat2<F> residual = evaluate(rep, r.word);
    const bool ok = nearly_identity(residual, tol);
    out.push_back({r.name, std::move(residual), ok});
  }
  return out;
}

template <class F>
bool satisfies_relations(const Representation<F>& rep, double tol) {
  for (const auto& r : check_relations(rep, tol)) {
    if (!r.satisfied) return false;
  }
  return true;
}

// --- Automorphism -----------------------------------------------------------

Automorphism::Automorphism(std::string name, PresentationPtr presentation,
                           std::map<std::string, Word> images,
                           std::map<std::string, std::string> object_map)
    : name_(std::move(name)),
      presentation_(std::move(presentation)),
      images_(std::move(images)),
      object_map_(std::move(object_map)) {
  const Presentation& p = *presentation_;
  std::set<std::string> targets;
  for (const auto& [from, to] : object_map_) {
    if (!p.has_object(from) || !p.has_object(to)) {
      throw Error(ErrorCode::unknown_object, "object map " + from + " -> " + to);
    }
    targets.insert(to);
  }
  if (targets.size() != object_map_.size()) {
    throw Error(ErrorCode::endpoint_mismatch, "object map is not injective");
  }
  for (const auto& [g, w] : images_) {
    p.generator(g);
    for (const Letter& l : w.letters()) p.generator(l.generator);
  }
  for (const GeneratorSpec& g : p.generators()) {
    const Word w = image(g.name);
    const std::string& src = map_object(g.source);
    const std::string& tgt = map_object(g.target);
    const auto ends = p.endpoints(w);
    const bool ok = ends ? (ends->first == src && ends->second == tgt) : src == tgt;
    if (!ok) {
      throw Error(ErrorCode::endpoint_mismatch,
                  name_ + ": image of " + g.name + " does not run " + src + " -> " + tgt);
    }
  }
}

const std::string& Automorphism::map_object(const std::string& object) const {
  const auto it = object_map_.find(object);
  return it == object_map_.end() ? object : it->second;
}

Word Automorphism::image(const std::string& generator) const {
  const auto it = images_.find(generator);
  if (it != images_.end()) return it->second;
  presentation_->generator(generator);
  return gen(generator);
}

Word Automorphism::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word img = image(l.generator);
    out = out * (l.exponent == 1 ? img : img.inverse());
  }
  return out;
}

Automorphism identity_automorphism(PresentationPtr presentation) {
  return Automorphism("identity", std::move(presentation), {});
}

template <class F>
Representation<F> apply_automorphism(const Automorphism& h, const Representation<F>& rep,
                                     double tol) {
  if (h.presentation_ptr() != rep.presentation_ptr() &&
      h.presentation().name() != rep.presentation().name()) {
    throw Error(ErrorCode::endpoint_mismatch,
                "automorphism " + h.name() + " acts on a different presentation");
  }
  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : rep.presentation().generators()) {
    assignment.emplace(g.name, evaluate(rep, h.image(g.name)));
  }
  Representation<F> out(rep.presentation_ptr(), std::move(assignment));
  if (satisfies_relations(rep, tol) && !satisfies_relations(out, tol)) {
    throw Error(ErrorCode::invalid_presentation,
                "automorphism " + h.name() + " does not preserve the relations");
  }
  return out;
}

// --- Gauge and normalization ------------------------------------------------

namespace {

template <class F>
void check_gauge_entry(const Presentation& p, const std::string& object, const Mat2<F>& n) {
  if (p.gauge_class(object) == GaugeClass::diagonal && !(n.is_diagonal() && is_sl2(n))) {
    throw Error(ErrorCode::gauge_constraint_violated,
                "object " + object + " only admits diagonal det-1 gauge, got " + format_matrix(n));
  }
}

template <class F>
const Mat2<F>& gauge_at(const GaugeAssignment<F>& gauge, const std::string& object) {
  static const Mat2<F> one = Mat2<F>::identity();
  const auto it = gauge.find(object);
  return it == gauge.end() ? one : it->second;
}

}  // namespace

template <class F>
Representation<F> apply_gauge(const Representation<F>& rep, const GaugeAssignment<F>& gauge) {
  const Presentation& p = rep.presentation();
  for (const auto& [object, n] : gauge) {
    if (!p.has_object(object)) throw Error(ErrorCode::unknown_object, "unknown object " + object);
    if (is_zero(n.det())) throw Error(ErrorCode::singular_matrix, "singular gauge at " + object);
    check_gauge_entry(p, object, n);
  }
  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : p.generators()) {
    assignment.emplace(g.name, gauge_at(gauge, g.source) * rep.at(g.name) *
                                   mat_inv(gauge_at(gauge, g.target)));
  }
  return Representation<F>(rep.presentation_ptr(), std::move(assignment));
}

template <class F>
Normalized<F> normalize(const Representation<F>& rep, const std::vector<std::string>& tree) {
  const Presentation& p = rep.presentation();
  if (tree.size() + 1 != p.objects().size()) {
    throw Error(ErrorCode::tree_not_spanning,
                "tree has " + std::to_string(tree.size()) + " edges for " +
                    std::to_string(p.objects().size()) + " objects");
  }
  const std::set<std::string> tree_set(tree.begin(), tree.end());
  if (tree_set.size() != tree.size()) {
    throw Error(ErrorCode::tree_not_spanning, "tree lists a generator twice");
  }
  for (const auto& t : tree) p.generator(t);

  // Walk outward from the base. A forward edge g: src -> tgt fixes
  // N_tgt = N_src rho(g); a backward one fixes N_src = N_tgt rho(g)^-1.
  GaugeAssignment<F> gauge;
  gauge.emplace(p.base_object(), Mat2<F>::identity());
  std::deque<std::string> frontier{p.base_object()};
  std::set<std::string> used;
  while (!frontier.empty()) {
    const std::string object = frontier.front();
    frontier.pop_front();
    for (const auto& t : tree) {
      if (used.count(t)) continue;
      const GeneratorSpec& g = p.generator(t);
      std::string next;
      Mat2<F> n;
      if (g.source == object) {
        next = g.target;
        n = gauge.at(object) * rep.at(t);
      } else if (g.target == object) {
        next = g.source;
        n = gauge.at(object) * mat_inv(rep.at(t));
      } else {
        continue;
      }
      used.insert(t);
      if (gauge.count(next)) {
        throw Error(ErrorCode::tree_not_spanning, "tree contains a cycle through " + next);
      }
      check_gauge_entry(p, next, n);
      gauge.emplace(next, std::move(n));
      frontier.push_back(next);
    }
  }
  if (gauge.size() != p.objects().size()) {
    for (const auto& o : p.objects()) {
      if (!gauge.count(o)) throw Error(ErrorCode::tree_not_spanning, "tree misses object " + o);
    }
  }

  std::map<std::string, Mat2<F>> assignment;
  for (const GeneratorSpec& g : p.generators()) {
    if (tree_set.count(g.name)) {
      assignment.emplace(g.name, Mat2<F>::identity());
    } else {
      assignment.emplace(g.name, gauge.at(g.source) * rep.at(g.name) * mat_inv(gauge.at(g.target)));
    }
  }
  return {Representation<F>(rep.presentation_ptr(), std::move(assignment)), std::move(gauge)};
}

// --- Built-in presentations -------------------------------------------------

namespace {

std::string tame_gen(int i, int j) { return "g" + std::to_string(i) + std::to_string(j); }

int wrap4(int i) { return ((i - 1) % 4 + 4) % 4 + 1; }

}  // namespace

PresentationPtr tame_presentation() {
  static const PresentationPtr instance = [] {
    std::vector<std::string> objects = {"s1", "s2", "s3", "s4"};
    std::vector<GeneratorSpec> generators;
    for (int i = 1; i <= 4; ++i) {
      generators.push_back({tame_gen(i, i), "s" + std::to_string(i), "s" + std::to_string(i)});
    }
    for (int i = 1; i <= 4; ++i) {
      const int j = wrap4(i + 1);
      generators.push_back({tame_gen(i, j), "s" + std::to_string(i), "s" + std::to_string(j)});
    }
    std::vector<Relation> relations = {
        {"r_ext", Word::parse("g12 g23 g34 g41")},
        {"r_int", Word::parse("g11 g12 g22 g23 g33 g34 g44 g41")},
    };
    return std::make_shared<const Presentation>("tame", std::move(objects), std::move(generators),
                                                std::move(relations), "s1");
  }();
  return instance;
}

const std::vector<std::string>& tame_tree() {
  static const std::vector<std::string> tree = {"g12", "g23", "g34"};
  return tree;
}

PresentationPtr wild_presentation() {
  static const PresentationPtr instance = [] {
    std::vector<std::string> objects = {"s0",     "s1",     "sinf",   "tauh1", "tauh2",
                                        "sigh1m", "sigh1p", "sigh2m", "sigh2p", "sig1m",
                                        "sig1p",  "sig2m",  "sig2p"};
    std::vector<GeneratorSpec> generators = {
        {"g00", "s0", "s0"},          {"g11", "s1", "s1"},          {"g0inf", "s0", "sinf"},
        {"ginf1", "sinf", "s1"},      {"g10", "s1", "s0"},          {"ginfinf", "sinf", "sinf"},
        {"rinf", "tauh1", "sinf"},    {"r1m", "sigh1m", "sig1m"},   {"r1p", "sigh1p", "sig1p"},
        {"r2m", "sigh2m", "sig2m"},   {"r2p", "sigh2p", "sig2p"},   {"alpha1", "sig1m", "sig1p"},
        {"alpha2", "sig2m", "sig2p"}, {"alphah1", "sigh1m", "sigh1p"},
        {"alphah2", "sigh2m", "sigh2p"}, {"betah1m", "tauh1", "sigh1m"},
        {"betah1p", "sigh1p", "tauh2"},  {"betah2m", "tauh2", "sigh2m"},
        {"betah2p", "sigh2p", "tauh1"},
    };
    std::vector<Relation> relations = {
        {"r_int", Word::parse("g00 g0inf ginfinf ginf1 g11 g10")},
        {"r_ext", Word::parse("g0inf ginf1 g10")},
        {"r_wild", Word::parse("rinf^-1 betah1m r1m alpha1 r1p^-1 betah1p betah2m r2m alpha2 "
                               "r2p^-1 betah2p rinf ginfinf^-1")},
    };
    std::map<std::string, GaugeClass> gauge;
    for (const auto& o : objects) {
      if (o != "s0" && o != "s1" && o != "sinf") gauge.emplace(o, GaugeClass::diagonal);
    }
    std::map<std::string, Word> named = {
        {"st1", Word::parse("r1m alpha1 r1p^-1 alphah1^-1")},
        {"st2", Word::parse("r2m alpha2 r2p^-1 alphah2^-1")},
        {"formal_loop", Word::parse("betah1m alphah1 betah1p betah2m alphah2 betah2p")},
    };
    return std::make_shared<const Presentation>("wild", std::move(objects), std::move(generators),
                                                std::move(relations), "tauh1", std::move(gauge),
                                                std::move(named));
  }();
  return instance;
}

const std::vector<std::string>& wild_tree() {
  static const std::vector<std::string> tree = {
      "g0inf", "ginf1",   "rinf",    "r1m",     "r1p",     "r2m",
      "r2p",   "alphah1", "alphah2", "betah1m", "betah1p", "betah2m"};
  return tree;
}

namespace {

// Shifts every index of a tame generator name by `shift` (mod 4).
Word shift_tame_word(const Word& w, int shift) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const int i = l.generator[1] - '0';
    const int j = l.generator[2] - '0';
    out.push_back({tame_gen(wrap4(i + shift), wrap4(j + shift)), l.exponent});
  }
  return Word(std::move(out));
}

}  // namespace

Automorphism braid_automorphism_tame(int i) {
  if (i < 1 || i > 3) {
    throw Error(ErrorCode::usage, "tame braid index must be 1, 2 or 3");
  }
  // h_1: g32 -> g32 g21 g11 g12 g22, i.e. g23 -> its formal inverse; g41 is
  // forced by keeping the exterior relation fixed.
  const std::map<std::string, Word> h1 = {
      {"g23", Word::parse("g22^-1 g12^-1 g11^-1 g12 g23")},
      {"g41", Word::parse("g34^-1 g23^-1 g12^-1 g11 g12 g22 g23 g34 g41")},
  };
  const int shift = i - 1;
  std::map<std::string, Word> images;
  for (const auto& [g, w] : h1) {
    images.emplace(shift_tame_word(gen(g), shift).letters().front().generator,
                   shift_tame_word(w, shift));
  }
  return Automorphism("h" + std::to_string(i), tame_presentation(), std::move(images));
}

Automorphism braid_automorphism_wild(WildBraid kind) {
  const PresentationPtr p = wild_presentation();
  if (kind == WildBraid::pure) {
    return Automorphism("pure", p, {{"rinf", Word::parse("rinf ginfinf^-1")}});
  }
  // Exchange the two Stokes directions, then re-attach r_inf through the
  // first half of the formal loop.
  const std::map<std::string, std::string> objects = {
      {"tauh1", "tauh2"},   {"tauh2", "tauh1"},   {"sigh1m", "sigh2m"}, {"sigh2m", "sigh1m"},
      {"sigh1p", "sigh2p"}, {"sigh2p", "sigh1p"}, {"sig1m", "sig2m"},   {"sig2m", "sig1m"},
      {"sig1p", "sig2p"},   {"sig2p", "sig1p"},
  };
  std::map<std::string, Word> images;
  const std::vector<std::pair<std::string, std::string>> swaps = {
      {"r1m", "r2m"},         {"r1p", "r2p"},         {"alpha1", "alpha2"},
      {"alphah1", "alphah2"}, {"betah1m", "betah2m"}, {"betah1p", "betah2p"},
  };
  for (const auto& [a, b] : swaps) {
    images.emplace(a, gen(b));
    images.emplace(b, gen(a));
  }
  images.emplace("rinf", Word::parse("betah1m r1m alpha1 r1p^-1 betah1p").inverse() * gen("rinf"));
  return Automorphism("full", p, std::move(images), objects);
}

// --- Instantiations ---------------------------------------------------------

template class Representation<GaussRational>;
template class Representation<Complexd>;

#define WILDCHAR_INSTANTIATE(F)                                                              \
  template Mat2<F> evaluate(const Representation<F>&, const Word&);                         \
  template std::vector<RelationResidual<F>> check_relations(const Representation<F>&, double); \
  template bool satisfies_relations(const Representation<F>&, double);                      \
  template Representation<F> apply_automorphism(const Automorphism&, const Representation<F>&, \
                                                double);                                    \
  template Representation<F> apply_gauge(const Representation<F>&, const GaugeAssignment<F>&); \
  template Normalized<F> normalize(const Representation<F>&, const std::vector<std::string>&);

WILDCHAR_INSTANTIATE(GaussRational)
WILDCHAR_INSTANTIATE(Complexd)

#undef WILDCHAR_INSTANTIATE

}  // namespace wildchar
