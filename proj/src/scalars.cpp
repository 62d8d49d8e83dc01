#include "ffgs/scalars.hpp"

#include <cctype>

namespace ffgs {

std::string to_string(Base b) {
  switch (b) {
    case Base::R: return "R";
    case Base::K: return "K";
    case Base::k: return "k";
  }
  return "?";
}

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

RingSpec::RingSpec(unsigned long p) : p_(p) {
  if (!is_prime(p)) throw ValidationError("RingSpec: " + std::to_string(p) + " is not prime");
}

long Valuation::value() const {
  if (inf_) throw Error("Valuation: value() on +infinity");
  return v_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& o) const {
  if (inf_ && o.inf_) return std::strong_ordering::equal;
  if (inf_) return std::strong_ordering::greater;
  if (o.inf_) return std::strong_ordering::less;
  return v_ <=> o.v_;
}

Valuation valuation(const Rat& x, const RingSpec& ring) {
  if (x == 0) return Valuation::infinity();
  mpz_class p(static_cast<long>(ring.p()));
  mpz_class tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return Valuation::of(vn - vd);
}

bool in_R(const Rat& x, const RingSpec& ring) {
  if (x == 0) return true;
  return mpz_divisible_ui_p(x.get_den().get_mpz_t(), ring.p()) == 0;
}

bool in_base(const Rat& x, Base base, const RingSpec& ring) {
  switch (base) {
    case Base::R: return in_R(x, ring);
    case Base::K: return true;
    case Base::k:
      return x.get_den() == 1 && x.get_num() >= 0 && x.get_num() < static_cast<long>(ring.p());
  }
  return false;
}

Rat reduce_mod_p(const Rat& x, const RingSpec& ring) {
  if (!in_R(x, ring)) throw LocationError("reduce_mod_p: element has negative valuation");
  mpz_class p(static_cast<long>(ring.p()));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw LocationError("reduce_mod_p: denominator not invertible");
  mpz_class r = (num * inv) % p;
  return Rat(r);
}

Rat normalize_in(const Rat& x, Base base, const RingSpec& ring) {
  return base == Base::k ? reduce_mod_p(x, ring) : x;
}

Rat pow_p(const RingSpec& ring, long e) {
  Rat p = ring.p_rat();
  Rat out(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= p;
  if (e < 0) out = 1 / out;
  return out;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  auto check_integer = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!check_integer(num) || !check_integer(den))
    throw ParseError("malformed rational '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar Scalar::in_ring(Rat value, const RingSpec& ring) {
  if (!in_R(value, ring))
    throw LocationError("scalar " + rat_to_string(value) + " is not in Z_(" +
                        std::to_string(ring.p()) + ")");
  return Scalar(std::move(value), Base::R);
}

Scalar Scalar::in_field(Rat value) { return Scalar(std::move(value), Base::K); }

namespace {
Base join(Base a, Base b) {
  if (a == Base::k || b == Base::k) throw LocationError("residue scalars need ring context");
  return (a == Base::K || b == Base::K) ? Base::K : Base::R;
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.value() + b.value(), join(a.loc(), b.loc()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.value() - b.value(), join(a.loc(), b.loc()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.value() * b.value(), join(a.loc(), b.loc()));
}

Scalar div(const Scalar& a, const Scalar& b, const RingSpec& ring) {
  if (b.value() == 0) throw ValidationError("scalar division by zero");
  Rat v = a.value() / b.value();
  Base loc = join(a.loc(), b.loc());
  if (loc == Base::R && !in_R(v, ring)) loc = Base::K;
  return loc == Base::K ? Scalar::in_field(v) : Scalar::in_ring(v, ring);
}

}  // namespace ffgs
