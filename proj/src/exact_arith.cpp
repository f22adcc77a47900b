#include "helix/exact_arith.hpp"

#include <cctype>
#include <string>

#include "helix/errors.hpp"

namespace helix {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Shared radicand for a binary operation, canonicalizing only when the
// stored radicands disagree.
struct Aligned {
  QuadNum x;
  QuadNum y;
  Int n;
};

bool irrational_part(const QuadNum& v) { return !v.b().is_zero() && v.radicand() != 0; }

Aligned align(const QuadNum& x, const QuadNum& y) {
  if (x.radicand() == y.radicand()) return {x, y, x.radicand()};
  if (!irrational_part(x)) return {QuadNum(x.a(), 0, y.radicand()), y, y.radicand()};
  if (!irrational_part(y)) return {x, QuadNum(y.a(), 0, x.radicand()), x.radicand()};
  QuadNum cx = canonicalize(x);
  QuadNum cy = canonicalize(y);
  if (!irrational_part(cx)) return {QuadNum(cx.a(), 0, cy.radicand()), cy, cy.radicand()};
  if (!irrational_part(cy)) return {cx, QuadNum(cy.a(), 0, cx.radicand()), cx.radicand()};
  if (cx.radicand() != cy.radicand()) {
    throw DomainError("incompatible radicands: sqrt(" + cx.radicand().get_str() + ") vs sqrt(" +
                      cy.radicand().get_str() + ")");
  }
  return {cx, cy, cx.radicand()};
}

// floor(p + q*sqrt(n)) for rationals p, q and n >= 0.
Int quad_floor(const QuadNum& v) {
  const Rat& p = v.a();
  const Rat& q = v.b();
  if (q.is_zero() || v.radicand() == 0) return p.floor();
  Rat q2n = q * q * Rat(v.radicand());
  Int uv = q2n.num() * q2n.den();
  Rat root_est(isqrt(uv), q2n.den());
  Rat est = q.sign() > 0 ? p + root_est : p - root_est;
  Int m = est.floor() - 2;
  while (quad_sign(v - QuadNum(Rat(Int(m + 1)))) >= 0) ++m;
  while (quad_sign(v - QuadNum(Rat(m))) < 0) --m;
  return m;
}

}  // namespace

Int parse_int(std::string_view text) {
  auto s = trim(text);
  std::string buf(s);
  if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
  if (buf.empty() || buf == "-") throw InputError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = (buf.front() == '-') ? 1 : 0; i < buf.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(buf[i]))) {
      throw InputError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return Int(buf, 10);
}

int sign(const Int& v) { return sgn(v); }

Int abs_int(const Int& v) { return abs(v); }

Int gcd_int(const Int& a, const Int& b) { return gcd(a, b); }

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), Int(abs(m)).get_mpz_t());
  return r;
}

Int isqrt(const Int& v) {
  if (sgn(v) < 0) throw DomainError("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& v) {
  return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Bezout ext_gcd(const Int& a, const Int& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

SquareFreeSplit square_free_split(const Int& v) {
  if (sgn(v) < 0) throw DomainError("square-free split of negative integer");
  if (v == 0) return {0, 0};
  Int rest = v;
  Int square = 1;
  Int core = 1;
  auto strip = [&](const Int& p) {
    Int pp = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      square *= p;
    }
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      core *= p;
    }
  };
  strip(2);
  for (Int p = 3; p * p <= rest; p += 2) strip(p);
  // Whatever survives trial division is 1 or a single prime.
  core *= rest;
  return {square, core};
}

// ---- Rat ----

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat parse_rat(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  auto den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  Int den = parse_int(den_text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

// ---- QuadNum ----

QuadNum::QuadNum(Rat a, Rat b, Int radicand) : a_(std::move(a)), b_(std::move(b)), n_(std::move(radicand)) {
  if (sgn(n_) < 0) throw DomainError("negative radicand");
}

bool QuadNum::is_rational() const {
  return b_.is_zero() || n_ == 0 || is_perfect_square(n_);
}

std::string QuadNum::str() const {
  QuadNum c = canonicalize(*this);
  bool has_irr = !c.b().is_zero() && c.radicand() != 0;
  std::string out;
  if (!c.a().is_zero() || !has_irr) {
    out = c.a().is_integer() ? c.a().num().get_str() : c.a().num().get_str() + "/" + c.a().den().get_str();
  }
  if (!has_irr) return out;
  Rat mag = c.b().sign() < 0 ? -c.b() : c.b();
  std::string coef = mag == Rat(1) ? std::string()
                     : mag.is_integer() ? mag.num().get_str() + "*"
                                        : mag.num().get_str() + "/" + mag.den().get_str() + "*";
  std::string term = coef + "sqrt(" + c.radicand().get_str() + ")";
  if (out.empty()) return (c.b().sign() < 0 ? "-" : "") + term;
  return out + (c.b().sign() < 0 ? " - " : " + ") + term;
}

QuadNum canonicalize(const QuadNum& x) {
  if (x.radicand() == 0) return QuadNum(x.a(), 0, 0);
  auto [square, core] = square_free_split(x.radicand());
  Rat b = x.b() * Rat(square);
  if (core == 1) return QuadNum(x.a() + b, 0, 0);
  return QuadNum(x.a(), b, core);
}

int quad_sign(const QuadNum& x) {
  int sa = x.a().sign();
  int sb = (x.radicand() == 0) ? 0 : x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 N.
  Rat a2 = x.a() * x.a();
  Rat b2n = x.b() * x.b() * Rat(x.radicand());
  auto c = a2 <=> b2n;
  if (c == 0) return 0;
  return (c > 0) ? sa : sb;
}

QuadNum quad_add(const QuadNum& x, const QuadNum& y) {
  auto [cx, cy, n] = align(x, y);
  return QuadNum(cx.a() + cy.a(), cx.b() + cy.b(), n);
}

QuadNum quad_sub(const QuadNum& x, const QuadNum& y) { return quad_add(x, quad_neg(y)); }

QuadNum quad_neg(const QuadNum& x) { return QuadNum(-x.a(), -x.b(), x.radicand()); }

QuadNum quad_mul(const QuadNum& x, const QuadNum& y) {
  auto [cx, cy, n] = align(x, y);
  Rat a = cx.a() * cy.a() + cx.b() * cy.b() * Rat(n);
  Rat b = cx.a() * cy.b() + cx.b() * cy.a();
  // A product of two surds that lands in Q leaves the field: sqrt(6)^2 = (6, 0, 0).
  if (b.is_zero() && irrational_part(cx) && irrational_part(cy)) return QuadNum(std::move(a), 0, 0);
  return QuadNum(std::move(a), std::move(b), n);
}

QuadNum quad_inv(const QuadNum& x) {
  Rat norm = x.a() * x.a() - x.b() * x.b() * Rat(x.radicand());
  if (norm.is_zero()) {
    // Zero norm with a nonzero value means the radicand is a perfect square.
    QuadNum c = canonicalize(x);
    if (c.a().is_zero() && (c.b().is_zero() || c.radicand() == 0)) throw DomainError("inverse of zero");
    return quad_inv(c);
  }
  return QuadNum(x.a() / norm, -x.b() / norm, x.radicand());
}

QuadNum quad_div(const QuadNum& x, const QuadNum& y) {
  auto [cx, cy, n] = align(x, y);
  return quad_mul(cx, quad_inv(cy));
}

QuadNum quad_pow(const QuadNum& x, long exponent) {
  QuadNum base = exponent < 0 ? quad_inv(x) : x;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                 : static_cast<unsigned long>(exponent);
  QuadNum result(Rat(1), Rat(0), x.radicand());
  while (e > 0) {
    if (e & 1UL) result = quad_mul(result, base);
    e >>= 1;
    if (e > 0) base = quad_mul(base, base);
  }
  return result;
}

QuadNum quad_abs(const QuadNum& x) { return quad_sign(x) < 0 ? quad_neg(x) : x; }

bool operator==(const QuadNum& x, const QuadNum& y) {
  if (x.radicand() == y.radicand()) return x.a() == y.a() && x.b() == y.b();
  QuadNum cx = canonicalize(x);
  QuadNum cy = canonicalize(y);
  if (cx.a() != cy.a() || cx.b() != cy.b()) return false;
  return cx.b().is_zero() || cx.radicand() == cy.radicand();
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  return quad_sign(quad_sub(x, y)) <=> 0;
}

QuadNum quad_sqrt(const Int& n) { return canonicalize(QuadNum(0, 1, n)); }

std::string to_decimal(const QuadNum& x, int digits) {
  if (digits < 0) digits = 0;
  int s = quad_sign(x);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  QuadNum scaled = quad_mul(quad_abs(x), QuadNum(Rat(scale)));
  std::string body = quad_floor(scaled).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (s < 0 ? "-" : "") + body;
}

std::string to_decimal(const Rat& x, int digits) { return to_decimal(QuadNum(x), digits); }

}  // namespace helix
