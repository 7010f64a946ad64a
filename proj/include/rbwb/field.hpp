#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rbwb {

enum class Err {
  DivisionByZero,
  MixedFieldContexts,
  DimensionMismatch,
  KTooLarge,
  OrderTooLarge,
  SpaceTooLarge,
  UnknownGenerator,
  ConstraintViolated,
  WrongCharacteristic,
  HypothesisViolated,
  CandidateFails,
  NotAnRBOperator,
  SubgroupCheckFailed,
  ParseError,
  UnknownCheck,
  FlavorMismatch,
  InvalidField,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

/// Ground field selected at runtime: Q (characteristic 0) or GF(p) for a
/// prime p <= 2^31. All arithmetic in the workbench is exact over one of
/// these contexts; mixing contexts is an error, never a silent coercion.
class FieldCtx {
public:
  static FieldCtx rationals() noexcept { return FieldCtx(0); }
  static FieldCtx gf(uint32_t p);
  static FieldCtx of_characteristic(uint32_t c);

  uint32_t characteristic() const noexcept { return char_; }
  bool is_rational() const noexcept { return char_ == 0; }
  std::string name() const;

  friend bool operator==(FieldCtx a, FieldCtx b) noexcept = default;

private:
  explicit FieldCtx(uint32_t c) noexcept : char_(c) {}
  uint32_t char_;
};

/// Exact field element. Over Q the value is an arbitrary-precision rational
/// kept in lowest terms with positive denominator; over GF(p) it is the
/// canonical residue in [0, p).
class Scalar {
public:
  Scalar() : ctx_(FieldCtx::rationals()) {}

  static Scalar zero(FieldCtx ctx) { return of_int(ctx, 0); }
  static Scalar one(FieldCtx ctx) { return of_int(ctx, 1); }
  static Scalar of_int(FieldCtx ctx, long v);
  static Scalar of_fraction(FieldCtx ctx, long num, long den);
  static Scalar parse(FieldCtx ctx, const std::string& text);

  FieldCtx ctx() const noexcept { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over GF(p).
  uint64_t residue() const;
  /// Rational payload; only valid over Q.
  const mpq_class& rational() const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

private:
  explicit Scalar(FieldCtx ctx) : ctx_(ctx) {}

  FieldCtx ctx_;
  mpq_class q_;      // payload when ctx is Q
  uint64_t r_ = 0;   // payload when ctx is GF(p)
};

/// GF(p) modular inverse, 0 < a < p. Throws DivisionByZero for a = 0.
uint64_t mod_inverse(uint64_t a, uint64_t p);

}  // namespace rbwb
