#ifndef HOPFALG_SCALAR_HPP
#define HOPFALG_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace hopfalg {

struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of a prime field F_p for a machine-word prime p. A value with
// modulus 0 is an integer literal not yet bound to a field (this is what
// Eigen's Scalar(0) / Scalar(1) produce); it adopts the modulus of the
// other operand on first contact.
class Fp {
 public:
  Fp() = default;
  Fp(long v) : v_(v) {}
  Fp(std::int64_t v, std::uint64_t p);

  static Fp parse(std::string_view text, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::int64_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  // Only for ordered containers; not a field order.
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

 private:
  static std::uint64_t common(const Fp& a, const Fp& b);
  void bind(std::uint64_t p);

  std::uint64_t p_ = 0;
  std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

bool is_prime_u64(std::uint64_t n);

// Runtime description of the ground field, used by parsers and the CLI.
struct Field {
  std::uint64_t p = 0;  // 0 = rationals
  bool rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "q" : "fp:" + std::to_string(p); }
  static Field parse(std::string_view text);
};

template <class S> struct ScalarIO;

template <> struct ScalarIO<Rational> {
  static Rational parse(std::string_view text, const Field&) { return Rational::parse(text); }
  static Rational from_int(long v, const Field&) { return Rational(v); }
};

template <> struct ScalarIO<Fp> {
  static Fp parse(std::string_view text, const Field& f) { return Fp::parse(text, f.p); }
  static Fp from_int(long v, const Field& f) { return Fp(v, f.p); }
};

}  // namespace hopfalg

namespace Eigen {

template <> struct NumTraits<hopfalg::Rational> : GenericNumTraits<hopfalg::Rational> {
  typedef hopfalg::Rational Real;
  typedef hopfalg::Rational NonInteger;
  typedef hopfalg::Rational Literal;
  typedef hopfalg::Rational Nested;
  enum {
    IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
    ReadCost = 1, AddCost = 8, MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <> struct NumTraits<hopfalg::Fp> : GenericNumTraits<hopfalg::Fp> {
  typedef hopfalg::Fp Real;
  typedef hopfalg::Fp NonInteger;
  typedef hopfalg::Fp Literal;
  typedef hopfalg::Fp Nested;
  enum {
    IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
    ReadCost = 1, AddCost = 2, MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HOPFALG_SCALAR_HPP
