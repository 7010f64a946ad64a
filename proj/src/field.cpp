#include "rbwb/field.hpp"

#include <cctype>

namespace rbwb {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_ctx(const Scalar& a, const Scalar& b) {
  if (a.ctx() != b.ctx())
    throw Error(Err::MixedFieldContexts,
                "operands come from different field contexts (" + a.ctx().name() + " vs " +
                    b.ctx().name() + ")");
}

}  // namespace

FieldCtx FieldCtx::gf(uint32_t p) {
  if (!is_prime(p))
    throw Error(Err::InvalidField, "GF(p) requires a prime characteristic, got " + std::to_string(p));
  return FieldCtx(p);
}

FieldCtx FieldCtx::of_characteristic(uint32_t c) {
  return c == 0 ? rationals() : gf(c);
}

std::string FieldCtx::name() const {
  return char_ == 0 ? "Q" : "GF(" + std::to_string(char_) + ")";
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  if (a == 0) throw Error(Err::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid on (a, p)
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

Scalar Scalar::of_int(FieldCtx ctx, long v) {
  Scalar s(ctx);
  if (ctx.is_rational()) {
    s.q_ = mpq_class(v);
  } else {
    int64_t p = ctx.characteristic();
    int64_t r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<uint64_t>(r);
  }
  return s;
}

Scalar Scalar::of_fraction(FieldCtx ctx, long num, long den) {
  if (den == 0) throw Error(Err::DivisionByZero, "fraction with zero denominator");
  if (ctx.is_rational()) {
    Scalar s(ctx);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  return of_int(ctx, num) / of_int(ctx, den);
}

bool Scalar::is_zero() const {
  return ctx_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return ctx_.is_rational() ? q_ == 1 : r_ == 1;
}

uint64_t Scalar::residue() const {
  if (ctx_.is_rational()) throw Error(Err::InvalidField, "residue() on a rational scalar");
  return r_;
}

const mpq_class& Scalar::rational() const {
  if (!ctx_.is_rational()) throw Error(Err::InvalidField, "rational() on a GF(p) scalar");
  return q_;
}

std::string Scalar::str() const {
  if (ctx_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

Scalar Scalar::parse(FieldCtx ctx, const std::string& text) {
  std::string body = text;
  // strip surrounding whitespace
  auto l = body.find_first_not_of(" \t");
  auto r = body.find_last_not_of(" \t");
  if (l == std::string::npos) throw Error(Err::ParseError, "empty scalar");
  body = body.substr(l, r - l + 1);

  if (!ctx.is_rational()) {
    // accept both "4" and "4 mod 5"
    auto mod_pos = body.find(" mod ");
    if (mod_pos != std::string::npos) {
      const std::string mod_part = body.substr(mod_pos + 5);
      if (mod_part != std::to_string(ctx.characteristic()))
        throw Error(Err::ParseError,
                    "scalar \"" + text + "\" declares modulus " + mod_part + " but context is " +
                        ctx.name());
      body = body.substr(0, mod_pos);
    }
  }

  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  auto slash = body.find('/');
  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw Error(Err::ParseError, "malformed scalar \"" + text + "\"");

  mpz_class n(num), d(den);
  if (d == 0) throw Error(Err::ParseError, "zero denominator in \"" + text + "\"");

  if (ctx.is_rational()) {
    Scalar s(ctx);
    s.q_ = mpq_class(n, d);
    s.q_.canonicalize();
    return s;
  }
  const uint64_t p = ctx.characteristic();
  mpz_class np = n % p, dp = d % p;
  if (np < 0) np += p;
  if (dp < 0) dp += p;
  Scalar sn = of_int(ctx, 0), sd = of_int(ctx, 0);
  sn.r_ = np.get_ui();
  sd.r_ = dp.get_ui();
  return sn / sd;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ctx(a, b);
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational())
    s.q_ = a.q_ + b.q_;
  else
    s.r_ = (a.r_ + b.r_) % a.ctx_.characteristic();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_ctx(a, b);
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational())
    s.q_ = a.q_ - b.q_;
  else
    s.r_ = (a.r_ + a.ctx_.characteristic() - b.r_) % a.ctx_.characteristic();
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ctx(a, b);
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational())
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = (a.r_ * b.r_) % a.ctx_.characteristic();  // p <= 2^31, no overflow
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
  Scalar s(ctx_);
  if (ctx_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, ctx_.characteristic());
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_ctx(a, b);
  if (b.is_zero()) throw Error(Err::DivisionByZero, "division by zero");
  return a * b.inv();
}

Scalar operator-(const Scalar& a) {
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational())
    s.q_ = -a.q_;
  else
    s.r_ = a.r_ == 0 ? 0 : a.ctx_.characteristic() - a.r_;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_ctx(a, b);
  return a.ctx_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace rbwb
