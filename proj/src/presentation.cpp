#include "ffgs/presentation.hpp"

#include <algorithm>

#include "ffgs/lattice.hpp"

namespace ffgs {

NCPoly NCPoly::constant(const Rat& c) {
  NCPoly p;
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::generator(std::uint32_t g) {
  NCPoly p;
  p.add_term({g}, Rat(1));
  return p;
}

NCPoly NCPoly::term(const Rat& c, Word w) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

std::pair<Word, Rat> NCPoly::leading() const {
  if (terms_.empty()) throw ValidationError("leading term of zero polynomial");
  return *terms_.rbegin();
}

NCPoly& NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return *this;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

std::uint32_t NCPoly::max_generator() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_)
    for (auto g : w) m = std::max(m, g + 1);
  return m;
}

NCPoly NCPoly::renamed(const std::vector<std::uint32_t>& gen_map) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    Word nw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= gen_map.size()) throw ValidationError("renamed: generator out of range");
      nw[i] = gen_map[w[i]];
    }
    out.add_term(nw, c);
  }
  return out;
}

NCPoly NCPoly::mapped(Base base, const RingSpec& ring) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, normalize_in(c, base, ring));
  return out;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

NCPoly operator*(const Rat& c, const NCPoly& a) {
  NCPoly out;
  for (const auto& [w, cc] : a.terms_) out.add_term(w, c * cc);
  return out;
}

std::string ncpoly_to_string(const NCPoly& p, const std::vector<std::string>& gens) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + rat_to_string(it->second) + ")*";
    if (it->first.empty()) {
      out += "1";
    } else {
      bool first = true;
      for (auto g : it->first) {
        if (!first) out += ".";
        first = false;
        out += g < gens.size() ? gens[g] : "g" + std::to_string(g);
      }
    }
  }
  return out;
}

void Presentation::validate() const {
  for (const auto& rel : relations) {
    if (rel.max_generator() > gens.size())
      throw ValidationError("presentation: relation mentions unknown generator");
    for (const auto& [w, c] : rel.terms())
      if (!in_base(c, base, ring))
        throw LocationError("presentation: coefficient " + rat_to_string(c) + " outside " +
                            to_string(base));
  }
}

namespace {

// Disjoint generator names: clashes from the right get primes appended.
std::vector<std::string> merge_names(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    std::string candidate = name;
    while (std::find(out.begin(), out.end(), candidate) != out.end()) candidate += "'";
    out.push_back(candidate);
  }
  return out;
}

}  // namespace

FreeProductResult free_product(const Presentation& p1, const Presentation& p2) {
  if (p1.base != p2.base || !(p1.ring == p2.ring))
    throw LocationError("free_product: bases differ");
  p1.validate();
  p2.validate();
  FreeProductResult out{Presentation(p1.base, p1.ring), {}, {}};
  out.p.gens = merge_names(p1.gens, p2.gens);
  for (std::uint32_t i = 0; i < p1.gens.size(); ++i) out.include_left.push_back(i);
  for (std::uint32_t i = 0; i < p2.gens.size(); ++i)
    out.include_right.push_back(static_cast<std::uint32_t>(p1.gens.size()) + i);
  out.p.relations = p1.relations;
  for (const auto& rel : p2.relations) out.p.relations.push_back(rel.renamed(out.include_right));
  return out;
}

PushoutPresentationResult pushout_presentation(const Presentation& p0, const Presentation& p1,
                                               const Presentation& p2,
                                               const std::vector<NCPoly>& f,
                                               const std::vector<NCPoly>& g) {
  if (f.size() != p0.gens.size() || g.size() != p0.gens.size())
    throw ValidationError("pushout_presentation: one image per generator of the apex");
  for (const auto& img : f)
    if (img.max_generator() > p1.gens.size())
      throw ValidationError("pushout_presentation: f image mentions unknown generator");
  for (const auto& img : g)
    if (img.max_generator() > p2.gens.size())
      throw ValidationError("pushout_presentation: g image mentions unknown generator");
  FreeProductResult fp = free_product(p1, p2);
  PushoutPresentationResult out{std::move(fp.p), std::move(fp.include_left),
                                std::move(fp.include_right), 0};
  for (std::size_t x = 0; x < p0.gens.size(); ++x) {
    NCPoly rel = f[x].renamed(out.include_left) - g[x].renamed(out.include_right);
    if (rel.is_zero())
      ++out.dropped_zero_relations;
    else
      out.p.relations.push_back(std::move(rel));
  }
  return out;
}

FreeProductResult tensor_presentation(const Presentation& p1, const Presentation& p2) {
  FreeProductResult out = free_product(p1, p2);
  for (auto z : out.include_left)
    for (auto y : out.include_right) {
      NCPoly commutator = NCPoly::term(Rat(1), {z, y}) - NCPoly::term(Rat(1), {y, z});
      out.p.relations.push_back(std::move(commutator));
    }
  return out;
}

BaseChangeResult base_change_presentation(const Presentation& p, Base target) {
  if (p.base != Base::R && p.base != target)
    throw LocationError("base_change_presentation: source must live over R");
  BaseChangeResult out{Presentation(target, p.ring), 0};
  out.p.gens = p.gens;
  for (const auto& rel : p.relations) {
    NCPoly mapped = rel.mapped(target, p.ring);
    if (mapped.is_zero())
      ++out.dropped_zero_relations;
    else
      out.p.relations.push_back(std::move(mapped));
  }
  return out;
}

S4Result s4_relations(const std::vector<NCPoly>& s3, const RingSpec& ring) {
  S4Result out;
  for (const auto& s : s3) {
    if (s.is_zero()) {
      ++out.dropped;
      continue;
    }
    Valuation v = Valuation::infinity();
    for (const auto& [w, c] : s.terms()) {
      if (w.size() > 1)
        throw ValidationError("s4_relations: relation is not linear in the generators");
      Valuation vc = valuation(c, ring);
      if (vc < v) v = vc;
    }
    out.relations.push_back(pow_p(ring, -v.value()) * s);
  }
  return out;
}

namespace {

bool unit_led(const NCPoly& rel, Base base, const RingSpec& ring) {
  const Rat& c = rel.leading().second;
  if (base == Base::R) return valuation(c, ring) == Valuation::of(0);
  return c != 0;
}

// First occurrence of `pattern` as a contiguous subword of `w`.
std::optional<std::size_t> find_subword(const Word& w, const Word& pattern) {
  if (pattern.size() > w.size()) return std::nullopt;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < pattern.size(); ++j)
      if (w[i + j] != pattern[j]) {
        hit = false;
        break;
      }
    if (hit) return i;
  }
  return std::nullopt;
}

}  // namespace

NormalFormResult normal_form(const NCPoly& q, const Presentation& p, std::size_t degree_cap) {
  if (q.degree() > degree_cap)
    throw ValidationError("normal_form: degree cap below the input degree");
  p.validate();
  NormalFormResult out{q.mapped(p.base, p.ring), true};
  std::vector<NCPoly> usable;
  for (const auto& rel : p.relations) {
    if (rel.is_zero()) continue;
    if (unit_led(rel, p.base, p.ring))
      usable.push_back(rel);
    else
      out.complete = false;
  }
  struct Step {
    Word word;
    Rat coeff;
    std::size_t rel;
    std::size_t pos;
  };
  while (true) {
    // find one reducible term (largest first), then rewrite outside the scan
    std::optional<Step> step;
    for (auto it = out.poly.terms().rbegin(); it != out.poly.terms().rend() && !step; ++it)
      for (std::size_t r = 0; r < usable.size(); ++r) {
        auto pos = find_subword(it->first, usable[r].leading().first);
        if (pos) {
          step = Step{it->first, it->second, r, *pos};
          break;
        }
      }
    if (!step) break;
    const NCPoly& rel = usable[step->rel];
    auto [lead, lc] = rel.leading();
    Word prefix(step->word.begin(), step->word.begin() + static_cast<long>(step->pos));
    Word suffix(step->word.begin() + static_cast<long>(step->pos + lead.size()),
                step->word.end());
    NCPoly replacement = NCPoly::term(Rat(1), prefix) * rel * NCPoly::term(Rat(1), suffix);
    out.poly = (out.poly - (step->coeff / lc) * replacement).mapped(p.base, p.ring);
  }
  return out;
}

MapVerification verify_map_to_model(const Presentation& p, const FiniteFlatHopf& h,
                                    const std::vector<std::vector<Rat>>& images,
                                    std::size_t degree_cap) {
  if (h.base() == Base::k)
    throw ValidationError("verify_map_to_model: residue-located models are not supported");
  if (images.size() != p.gens.size())
    throw ValidationError("verify_map_to_model: one image per generator");
  for (const auto& img : images) {
    if (img.size() != h.rank()) throw ValidationError("verify_map_to_model: bad image size");
    for (const auto& c : img)
      if (!in_base(c, h.base(), h.ring()))
        throw LocationError("verify_map_to_model: image outside the ring location");
  }
  for (const auto& rel : p.relations)
    if (rel.degree() > degree_cap)
      throw ValidationError("verify_map_to_model: degree cap below a relation degree");

  MapVerification out;
  auto eval_word = [&](const Word& w) {
    std::vector<Rat> acc = h.unit();
    for (auto g : w) acc = h.product(acc, images[g]);
    return acc;
  };
  out.relations_hold = true;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    std::vector<Rat> value(h.rank());
    for (const auto& [w, c] : p.relations[r].terms()) {
      auto wv = eval_word(w);
      for (std::size_t i = 0; i < h.rank(); ++i) value[i] += c * wv[i];
    }
    bool zero = std::all_of(value.begin(), value.end(), [](const Rat& x) { return x == 0; });
    if (!zero) {
      out.relations_hold = false;
      out.failing_relations.push_back(r);
    }
  }

  // Lattice generated by 1 and the images, closed under multiplication by
  // the images on both sides; an ascending chain in the ambient module.
  QMat seed(h.rank(), 1 + images.size());
  seed.set_col(0, h.unit());
  for (std::size_t i = 0; i < images.size(); ++i) seed.set_col(i + 1, images[i]);
  Lattice l = hermite_form(seed, h.ring());
  while (true) {
    QMat more = l.basis;
    for (std::size_t j = 0; j < l.basis.cols(); ++j)
      for (const auto& img : images) {
        more = more.hcat(QMat::column(h.product(l.basis.col(j), img)));
        more = more.hcat(QMat::column(h.product(img, l.basis.col(j))));
      }
    Lattice next = hermite_form(more, h.ring());
    if (next == l) break;
    l = next;
  }
  out.reached_rank = l.rank();
  out.surjective = l.basis == QMat::identity(h.rank());
  return out;
}

bool alpha_equivalent(const Presentation& a, const Presentation& b) {
  if (a.base != b.base || !(a.ring == b.ring)) return false;
  if (a.gens.size() != b.gens.size() || a.relations.size() != b.relations.size()) return false;
  std::vector<std::uint32_t> perm(a.gens.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto canonical_multiset = [](const std::vector<NCPoly>& rels) {
    std::vector<NCPoly> sorted = rels;
    std::sort(sorted.begin(), sorted.end(), [](const NCPoly& x, const NCPoly& y) {
      return x.terms() < y.terms();
    });
    return sorted;
  };
  std::vector<NCPoly> target = canonical_multiset(b.relations);
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<NCPoly> renamed;
    renamed.reserve(a.relations.size());
    for (const auto& rel : a.relations) renamed.push_back(rel.renamed(perm));
    if (canonical_multiset(renamed) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ffgs
