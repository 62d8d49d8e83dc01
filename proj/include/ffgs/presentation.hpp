#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffgs/hopf.hpp"

namespace ffgs {

// A word in the generators, by index.  The empty word is 1.
using Word = std::vector<std::uint32_t>;

// Degree first, then lexicographic with earlier generators larger
// (y > z when y is listed before z): a monomial order compatible with
// concatenation.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// R-linear combination of words; no zero coefficients are stored.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rat, DegLexLess>;

  NCPoly() = default;
  static NCPoly constant(const Rat& c);
  static NCPoly generator(std::uint32_t g);
  static NCPoly term(const Rat& c, Word w);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  // Largest word in deg-lex order and its coefficient.
  std::pair<Word, Rat> leading() const;

  NCPoly& add_term(const Word& w, const Rat& c);
  std::uint32_t max_generator() const;  // 0 when constant; otherwise max index + 1

  NCPoly renamed(const std::vector<std::uint32_t>& gen_map) const;
  // Coefficient-wise map into the base (mod p for the residue field).
  NCPoly mapped(Base base, const RingSpec& ring) const;

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rat& c, const NCPoly& a);
  bool operator==(const NCPoly& o) const = default;

 private:
  TermMap terms_;
};

// Deterministic text form: terms in descending deg-lex order, words as
// dot-separated generator names, e.g. "(3)*y + (-9)*z".
std::string ncpoly_to_string(const NCPoly& p, const std::vector<std::string>& gens);

// R<X; S>: generators and relations (each meaning s = 0).  Scalars commute
// with the generators; two generators commute only if a relation says so.
struct Presentation {
  Base base = Base::R;
  RingSpec ring;
  std::vector<std::string> gens;
  std::vector<NCPoly> relations;

  Presentation(Base b, RingSpec r) : base(b), ring(r) {}
  void validate() const;  // indices in range, coefficients in base
  bool operator==(const Presentation& o) const = default;
};

struct FreeProductResult {
  Presentation p;
  std::vector<std::uint32_t> include_left;   // generator map from P1
  std::vector<std::uint32_t> include_right;  // generator map from P2
};

// Disjoint union of generators (renamed apart when names clash) and union
// of relations: the coproduct over R.
FreeProductResult free_product(const Presentation& p1, const Presentation& p2);

struct PushoutPresentationResult {
  Presentation p;
  std::vector<std::uint32_t> include_left, include_right;
  std::size_t dropped_zero_relations = 0;
};

// free_product(P1, P2) plus one relation u(f(x)) - v(g(x)) per generator x
// of P0; zero relations are dropped but counted.
PushoutPresentationResult pushout_presentation(const Presentation& p0, const Presentation& p1,
                                               const Presentation& p2,
                                               const std::vector<NCPoly>& f,
                                               const std::vector<NCPoly>& g);

// free_product plus the commutators zy - yz for z in X1, y in X2.
FreeProductResult tensor_presentation(const Presentation& p1, const Presentation& p2);

struct BaseChangeResult {
  Presentation p;
  std::size_t dropped_zero_relations = 0;
};

BaseChangeResult base_change_presentation(const Presentation& p, Base target);

struct S4Result {
  std::vector<NCPoly> relations;
  std::size_t dropped = 0;
};

// For each R-linear relation s, the relation s / p^v where v is the least
// coefficient valuation, so that some coefficient becomes a unit.  The
// p-adic valuation is used, never an integer gcd.
S4Result s4_relations(const std::vector<NCPoly>& s3, const RingSpec& ring);

struct NormalFormResult {
  NCPoly poly;
  bool complete = true;  // false: only "reduces to zero" claims are sound
};

// Bounded rewriting by unit-led relations oriented along deg-lex.
NormalFormResult normal_form(const NCPoly& q, const Presentation& p, std::size_t degree_cap);

struct MapVerification {
  bool relations_hold = false;
  std::vector<std::size_t> failing_relations;
  bool surjective = false;
  std::size_t reached_rank = 0;
  bool ok() const { return relations_hold && surjective; }
};

// Checks that the generator images kill every relation of P and that,
// together with 1, they generate H as an algebra (the generated lattice
// reaches the full rank with unimodular index).
MapVerification verify_map_to_model(const Presentation& p, const FiniteFlatHopf& h,
                                    const std::vector<std::vector<Rat>>& images,
                                    std::size_t degree_cap);

// Equality up to a bijective renaming of generators.
bool alpha_equivalent(const Presentation& a, const Presentation& b);

}  // namespace ffgs
