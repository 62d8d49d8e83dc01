#include "ffgs/hopf.hpp"

#include <string>

namespace ffgs {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

FiniteFlatHopf::FiniteFlatHopf(Base base, RingSpec ring, std::size_t rank, std::vector<Rat> mult,
                               std::vector<Rat> unit, std::vector<Rat> comult,
                               std::vector<Rat> counit, QMat antipode)
    : base_(base),
      ring_(ring),
      rank_(rank),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  std::size_t n3 = rank_ * rank_ * rank_;
  if (rank_ == 0) throw ValidationError("hopf algebra of rank 0");
  if (mult_.size() != n3 || comult_.size() != n3 || unit_.size() != rank_ ||
      counit_.size() != rank_ || antipode_.rows() != rank_ || antipode_.cols() != rank_)
    throw ValidationError("hopf structure tensors have inconsistent shapes");
}

bool FiniteFlatHopf::commutative() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        if (normalize_in(mult(i, j, k) - mult(j, i, k), base_, ring_) != 0) return false;
  return true;
}

bool FiniteFlatHopf::cocommutative() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < j; ++k)
        if (normalize_in(comult(i, j, k) - comult(i, k, j), base_, ring_) != 0) return false;
  return true;
}

std::vector<Rat> FiniteFlatHopf::product(const std::vector<Rat>& x,
                                         const std::vector<Rat>& y) const {
  if (x.size() != rank_ || y.size() != rank_) throw ValidationError("product: bad vector size");
  std::vector<Rat> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      for (std::size_t k = 0; k < rank_; ++k) {
        if (mult(i, j, k) == 0) continue;
        out[k] += c * mult(i, j, k);
      }
    }
  }
  if (base_ == Base::k)
    for (auto& v : out) v = reduce_mod_p(v, ring_);
  return out;
}

QMat FiniteFlatHopf::comult_of(const std::vector<Rat>& x) const {
  if (x.size() != rank_) throw ValidationError("comult_of: bad vector size");
  QMat out(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k) {
        if (comult(i, j, k) == 0) continue;
        out.at(j, k) += x[i] * comult(i, j, k);
      }
  }
  return base_ == Base::k ? normalize_entries(out, base_, ring_) : out;
}

Rat FiniteFlatHopf::counit_of(const std::vector<Rat>& x) const {
  Rat out(0);
  for (std::size_t i = 0; i < rank_; ++i) out += x[i] * counit_[i];
  return normalize_in(out, base_, ring_);
}

std::vector<Rat> FiniteFlatHopf::antipode_of(const std::vector<Rat>& x) const {
  auto out = mat_vec(antipode_, x);
  if (base_ == Base::k)
    for (auto& v : out) v = reduce_mod_p(v, ring_);
  return out;
}

bool FiniteFlatHopf::operator==(const FiniteFlatHopf& o) const {
  return base_ == o.base_ && ring_ == o.ring_ && rank_ == o.rank_ && mult_ == o.mult_ &&
         unit_ == o.unit_ && comult_ == o.comult_ && counit_ == o.counit_ &&
         antipode_ == o.antipode_;
}

CheckReport check_hopf_axioms(const FiniteFlatHopf& h) {
  const std::size_t n = h.rank();
  const Base base = h.base();
  const RingSpec& ring = h.ring();
  auto zero = [&](const Rat& x) { return normalize_in(x, base, ring) == 0; };
  CheckReport rep;

  {  // associativity
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        for (std::size_t k = 0; ok && k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            Rat lhs(0), rhs(0);
            for (std::size_t m = 0; m < n; ++m) {
              if (h.mult(i, j, m) != 0) lhs += h.mult(i, j, m) * h.mult(m, k, l);
              if (h.mult(j, k, m) != 0) rhs += h.mult(j, k, m) * h.mult(i, m, l);
            }
            if (!zero(lhs - rhs)) {
              ok = false;
              where = triple(i, j, k);
              break;
            }
          }
    rep.add("assoc", ok, where);
  }

  {  // unit law on both sides
    bool ok = true;
    std::string where;
    for (std::size_t j = 0; ok && j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rat left(0), right(0);
        for (std::size_t i = 0; i < n; ++i) {
          left += h.unit()[i] * h.mult(i, j, k);
          right += h.unit()[i] * h.mult(j, i, k);
        }
        Rat expect = j == k ? Rat(1) : Rat(0);
        if (!zero(left - expect) || !zero(right - expect)) {
          ok = false;
          where = "at basis " + std::to_string(j);
          break;
        }
      }
    rep.add("unit", ok, where);
  }

  {  // coassociativity
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t x = 0; ok && x < n; ++x)
        for (std::size_t y = 0; ok && y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Rat lhs(0), rhs(0);
            for (std::size_t a = 0; a < n; ++a) {
              if (h.comult(i, a, z) != 0) lhs += h.comult(i, a, z) * h.comult(a, x, y);
              if (h.comult(i, x, a) != 0) rhs += h.comult(i, x, a) * h.comult(a, y, z);
            }
            if (!zero(lhs - rhs)) {
              ok = false;
              where = triple(i, x, y);
              break;
            }
          }
    rep.add("coassoc", ok, where);
  }

  {  // counit law on both legs
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Rat left(0), right(0);
        for (std::size_t j = 0; j < n; ++j) {
          left += h.comult(i, j, k) * h.counit()[j];
          right += h.comult(i, k, j) * h.counit()[j];
        }
        Rat expect = i == k ? Rat(1) : Rat(0);
        if (!zero(left - expect) || !zero(right - expect)) {
          ok = false;
          where = "at basis " + std::to_string(i);
          break;
        }
      }
    rep.add("counit", ok, where);
  }

  {  // Delta and epsilon are algebra morphisms; Delta(1)=1x1, eps(1)=1
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j) {
        QMat lhs(n, n);
        for (std::size_t k = 0; k < n; ++k) {
          if (h.mult(i, j, k) == 0) continue;
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
              if (h.comult(k, x, y) != 0) lhs.at(x, y) += h.mult(i, j, k) * h.comult(k, x, y);
        }
        QMat rhs(n, n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (h.comult(i, a, b) == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
              for (std::size_t d = 0; d < n; ++d) {
                if (h.comult(j, c, d) == 0) continue;
                Rat coeff = h.comult(i, a, b) * h.comult(j, c, d);
                for (std::size_t x = 0; x < n; ++x) {
                  if (h.mult(a, c, x) == 0) continue;
                  for (std::size_t y = 0; y < n; ++y) {
                    if (h.mult(b, d, y) == 0) continue;
                    rhs.at(x, y) += coeff * h.mult(a, c, x) * h.mult(b, d, y);
                  }
                }
              }
          }
        Rat eps_lhs(0);
        for (std::size_t k = 0; k < n; ++k) eps_lhs += h.mult(i, j, k) * h.counit()[k];
        if (!zero(eps_lhs - h.counit()[i] * h.counit()[j])) {
          ok = false;
          where = "counit multiplicativity at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
        for (std::size_t x = 0; ok && x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (!zero(lhs.at(x, y) - rhs.at(x, y))) {
              ok = false;
              where = triple(i, j, x);
              break;
            }
      }
    if (ok) {
      QMat d1 = h.comult_of(h.unit());
      for (std::size_t x = 0; ok && x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (!zero(d1.at(x, y) - h.unit()[x] * h.unit()[y])) {
            ok = false;
            where = "Delta(1) != 1x1";
            break;
          }
      if (ok && !zero(h.counit_of(h.unit()) - Rat(1))) {
        ok = false;
        where = "eps(1) != 1";
      }
    }
    rep.add("bialgebra", ok, where);
  }

  {  // antipode laws
    bool left_ok = true, right_ok = true;
    std::string lwhere, rwhere;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rat> left(n), right(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (h.comult(i, j, k) == 0) continue;
          for (std::size_t a = 0; a < n; ++a) {
            if (h.antipode().at(a, j) != 0) {
              Rat c = h.comult(i, j, k) * h.antipode().at(a, j);
              for (std::size_t l = 0; l < n; ++l)
                if (h.mult(a, k, l) != 0) left[l] += c * h.mult(a, k, l);
            }
            if (h.antipode().at(a, k) != 0) {
              Rat c = h.comult(i, j, k) * h.antipode().at(a, k);
              for (std::size_t l = 0; l < n; ++l)
                if (h.mult(j, a, l) != 0) right[l] += c * h.mult(j, a, l);
            }
          }
        }
      for (std::size_t l = 0; l < n; ++l) {
        Rat expect = h.counit()[i] * h.unit()[l];
        if (left_ok && !zero(left[l] - expect)) {
          left_ok = false;
          lwhere = "at basis " + std::to_string(i);
        }
        if (right_ok && !zero(right[l] - expect)) {
          right_ok = false;
          rwhere = "at basis " + std::to_string(i);
        }
      }
    }
    rep.add("antipode-left", left_ok, lwhere);
    rep.add("antipode-right", right_ok, rwhere);
  }

  {  // all entries live where the object claims to live
    bool ok = true;
    std::string where;
    auto check = [&](const Rat& x, const std::string& w) {
      if (ok && !in_base(x, base, ring)) {
        ok = false;
        where = w;
      }
    };
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          check(h.mult(i, j, k), "mult " + triple(i, j, k));
          check(h.comult(i, j, k), "comult " + triple(i, j, k));
          if (!ok) break;
        }
    for (std::size_t i = 0; i < n && ok; ++i) {
      check(h.unit()[i], "unit at " + std::to_string(i));
      check(h.counit()[i], "counit at " + std::to_string(i));
      for (std::size_t j = 0; j < n && ok; ++j)
        check(h.antipode().at(i, j), "antipode at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    rep.add("entries-in-ring", ok, where);
  }

  return rep;
}

void require_hopf(const FiniteFlatHopf& h, const std::string& who) {
  CheckReport rep = check_hopf_axioms(h);
  if (!rep.all_pass()) {
    std::string msg = who + ": hopf axioms failed\n" + rep.to_string();
    throw ValidationError(msg);
  }
}

FiniteFlatHopf dualize(const FiniteFlatHopf& h) {
  const std::size_t n = h.rank();
  std::vector<Rat> mult(n * n * n), comult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // e^j e^k picks out the e_j tensor e_k component of Delta.
        mult[(j * n + k) * n + i] = h.comult(i, j, k);
        comult[(k * n + i) * n + j] = h.mult(i, j, k);
      }
  return FiniteFlatHopf(h.base(), h.ring(), n, std::move(mult), h.counit(), std::move(comult),
                        h.unit(), h.antipode().transpose());
}

namespace {

CheckReport check_morphism_impl(const FiniteFlatHopf& s, const FiniteFlatHopf& t, const QMat& m,
                                Base entry_base) {
  CheckReport rep;
  if (m.rows() != t.rank() || m.cols() != s.rank()) {
    rep.add("shape", false,
            "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return rep;
  }
  if (!(s.ring() == t.ring())) {
    rep.add("shape", false, "ring mismatch");
    return rep;
  }
  const RingSpec& ring = s.ring();
  auto zero = [&](const Rat& x) { return normalize_in(x, entry_base, ring) == 0; };

  if (!entries_in_base(m, entry_base, ring)) {
    rep.add("entries-in-ring", false, "matrix entry outside " + to_string(entry_base));
  } else {
    rep.add("entries-in-ring", true);
  }

  {  // T(xy) = T(x)T(y) on basis pairs
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j) {
        std::vector<Rat> prod(s.rank());
        for (std::size_t k = 0; k < s.rank(); ++k) prod[k] = s.mult(i, j, k);
        auto lhs = mat_vec(m, prod);
        auto rhs = t.product(m.col(i), m.col(j));
        for (std::size_t k = 0; k < t.rank(); ++k)
          if (!zero(lhs[k] - rhs[k])) {
            ok = false;
            where = "at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
        if (!ok) break;
      }
    rep.add("algebra-map", ok, where);
  }

  {  // unit preserved
    auto img = mat_vec(m, s.unit());
    bool ok = true;
    for (std::size_t k = 0; k < t.rank(); ++k)
      if (!zero(img[k] - t.unit()[k])) {
        ok = false;
        break;
      }
    rep.add("unit", ok);
  }

  {  // (T tensor T) Delta = Delta T
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; ok && i < s.rank(); ++i) {
      QMat ds(s.rank(), s.rank());
      for (std::size_t j = 0; j < s.rank(); ++j)
        for (std::size_t k = 0; k < s.rank(); ++k) ds.at(j, k) = s.comult(i, j, k);
      QMat lhs = m * ds * m.transpose();
      QMat rhs = t.comult_of(m.col(i));
      for (std::size_t x = 0; ok && x < t.rank(); ++x)
        for (std::size_t y = 0; y < t.rank(); ++y)
          if (!zero(lhs.at(x, y) - rhs.at(x, y))) {
            ok = false;
            where = "at basis " + std::to_string(i);
            break;
          }
    }
    rep.add("coalgebra-map", ok, where);
  }

  {  // counit preserved
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (!zero(t.counit_of(m.col(i)) - s.counit()[i])) {
        ok = false;
        where = "at basis " + std::to_string(i);
        break;
      }
    rep.add("counit", ok, where);
  }

  return rep;
}

}  // namespace

CheckReport check_morphism(const HopfMorphism& m) {
  if (m.source.base() != m.target.base()) {
    CheckReport rep;
    rep.add("shape", false, "source and target bases differ");
    return rep;
  }
  return check_morphism_impl(m.source, m.target, m.matrix, m.source.base());
}

CheckReport check_generic_morphism(const GenericHopfMorphism& m) {
  FiniteFlatHopf s = m.source.base() == Base::K ? m.source : base_change(m.source, Base::K);
  FiniteFlatHopf t = m.target.base() == Base::K ? m.target : base_change(m.target, Base::K);
  return check_morphism_impl(s, t, m.matrix, Base::K);
}

void require_morphism(const HopfMorphism& m, const std::string& who) {
  CheckReport rep = check_morphism(m);
  if (!rep.all_pass()) throw ValidationError(who + ": not a hopf morphism\n" + rep.to_string());
}

bool is_model_map(const HopfMorphism& m) {
  if (m.source.rank() != m.target.rank()) return false;
  return m.matrix.det() != 0;
}

HopfMorphism compose(const HopfMorphism& second, const HopfMorphism& first) {
  if (!(first.target == second.source))
    throw ValidationError("compose: middle objects differ");
  return HopfMorphism{first.source, second.target, second.matrix * first.matrix};
}

HopfMorphism dual_morphism(const HopfMorphism& m) {
  return HopfMorphism{dualize(m.target), dualize(m.source), m.matrix.transpose()};
}

TensorHopf tensor_hopf(const FiniteFlatHopf& b, const FiniteFlatHopf& c) {
  if (b.base() != c.base() || !(b.ring() == c.ring()))
    throw LocationError("tensor_hopf: bases differ");
  const std::size_t nb = b.rank(), nc = c.rank(), n = nb * nc;
  auto idx = [nc](std::size_t i, std::size_t j) { return i * nc + j; };
  std::vector<Rat> mult(n * n * n), comult(n * n * n), unit(n), counit(n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t bb = 0; bb < nc; ++bb) {
      unit[idx(a, bb)] = normalize_in(b.unit()[a] * c.unit()[bb], b.base(), b.ring());
      counit[idx(a, bb)] = normalize_in(b.counit()[a] * c.counit()[bb], b.base(), b.ring());
    }
  for (std::size_t i1 = 0; i1 < nb; ++i1)
    for (std::size_t i2 = 0; i2 < nc; ++i2)
      for (std::size_t j1 = 0; j1 < nb; ++j1)
        for (std::size_t j2 = 0; j2 < nc; ++j2)
          for (std::size_t k1 = 0; k1 < nb; ++k1) {
            if (b.mult(i1, j1, k1) == 0 && b.comult(i1, j1, k1) == 0) continue;
            for (std::size_t k2 = 0; k2 < nc; ++k2) {
              if (b.mult(i1, j1, k1) != 0 && c.mult(i2, j2, k2) != 0)
                mult[(idx(i1, i2) * n + idx(j1, j2)) * n + idx(k1, k2)] = normalize_in(
                    b.mult(i1, j1, k1) * c.mult(i2, j2, k2), b.base(), b.ring());
              if (b.comult(i1, j1, k1) != 0 && c.comult(i2, j2, k2) != 0)
                comult[(idx(i1, i2) * n + idx(j1, j2)) * n + idx(k1, k2)] = normalize_in(
                    b.comult(i1, j1, k1) * c.comult(i2, j2, k2), b.base(), b.ring());
            }
          }
  QMat antipode = kronecker(b.antipode(), c.antipode());
  FiniteFlatHopf prod(b.base(), b.ring(), n, std::move(mult), std::move(unit), std::move(comult),
                      std::move(counit), normalize_entries(antipode, b.base(), b.ring()));
  HopfMorphism left{b, prod, kronecker(QMat::identity(nb), QMat::column(c.unit()))};
  HopfMorphism right{c, prod, kronecker(QMat::column(b.unit()), QMat::identity(nc))};
  return TensorHopf{std::move(prod), std::move(left), std::move(right)};
}

FiniteFlatHopf base_change(const FiniteFlatHopf& h, Base target) {
  if (h.base() == target) return h;
  if (h.base() != Base::R)
    throw LocationError("base_change: only R-located objects can move to " + to_string(target));
  auto map_vec = [&](const std::vector<Rat>& v) {
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = normalize_in(v[i], target, h.ring());
    return out;
  };
  return FiniteFlatHopf(target, h.ring(), h.rank(), map_vec(h.mult_tensor()), map_vec(h.unit()),
                        map_vec(h.comult_tensor()), map_vec(h.counit()),
                        normalize_entries(h.antipode(), target, h.ring()));
}

HopfMorphism base_change(const HopfMorphism& m, Base target) {
  return HopfMorphism{base_change(m.source, target), base_change(m.target, target),
                      normalize_entries(m.matrix, target, m.source.ring())};
}

}  // namespace ffgs
