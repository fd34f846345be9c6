#include "hopfalg/scalar.hpp"

#include <charconv>

namespace hopfalg {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class parse_integer(const std::string& s) {
  mpz_class z;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty() || z.set_str(t, 10) != 0)
    throw std::invalid_argument("not an integer: '" + s + "'");
  return z;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t pp = static_cast<std::int64_t>(p);
  std::int64_t r = v % pp;
  return r < 0 ? r + pp : r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(mpq_class(parse_integer(t)));
  mpz_class n = parse_integer(trim(t.substr(0, slash)));
  mpz_class d = parse_integer(trim(t.substr(slash + 1)));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p), v_(v) {
  if (p != 0) {
    if (p > static_cast<std::uint64_t>(INT64_MAX) || !is_prime_u64(p))
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a machine-word prime");
    v_ = reduce(v, p);
  }
}

Fp Fp::parse(std::string_view text, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("prime field requires a modulus");
  std::string t = trim(text);
  auto slash = t.find('/');
  auto to_fp = [p](const std::string& s) {
    mpz_class z = parse_integer(s);
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return Fp(static_cast<std::int64_t>(std::stoull(m.get_str())), p);
  };
  if (slash == std::string::npos) return to_fp(t);
  Fp d = to_fp(trim(t.substr(slash + 1)));
  if (d.is_zero()) throw std::invalid_argument("denominator vanishes mod p in '" + t + "'");
  return to_fp(trim(t.substr(0, slash))) / d;
}

std::uint64_t Fp::common(const Fp& a, const Fp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
  throw FieldMismatch("scalar field mismatch: F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
}

void Fp::bind(std::uint64_t p) {
  if (p_ == 0 && p != 0) {
    p_ = p;
    v_ = reduce(v_, p);
  }
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (p_ == 0) {
    if (v_ == INT64_MIN) throw std::overflow_error("literal overflow");
    r.v_ = -v_;
  } else if (v_ != 0) {
    r.v_ = static_cast<std::int64_t>(p_) - v_;
  }
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  Fp b = o;
  bind(p);
  b.bind(p);
  if (p == 0) {
    if (__builtin_add_overflow(v_, b.v_, &v_)) throw std::overflow_error("literal overflow");
  } else {
    unsigned __int128 s = static_cast<unsigned __int128>(v_) + static_cast<unsigned __int128>(b.v_);
    v_ = static_cast<std::int64_t>(s % p);
  }
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  Fp b = o;
  bind(p);
  b.bind(p);
  if (p == 0) {
    if (__builtin_mul_overflow(v_, b.v_, &v_)) throw std::overflow_error("literal overflow");
  } else {
    v_ = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(v_), static_cast<std::uint64_t>(b.v_), p));
  }
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero");
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw FieldMismatch("inverse of an unbound literal");
  }
  return Fp(static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(v_), p_ - 2, p_)), p_);
}

Fp& Fp::operator/=(const Fp& o) {
  std::uint64_t p = common(*this, o);
  Fp b = o;
  bind(p);
  b.bind(p);
  return *this *= b.inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  std::uint64_t p = Fp::common(a, b);
  if (p == 0) return a.v_ == b.v_;
  return reduce(a.v_, p) == reduce(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

Field Field::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "q" || t == "Q") return Field{};
  if (t.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    auto s = t.substr(3);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad field modulus '" + s + "'");
    if (p > static_cast<std::uint64_t>(INT64_MAX) || !is_prime_u64(p))
      throw std::invalid_argument("field modulus " + s + " is not a machine-word prime");
    return Field{p};
  }
  throw std::invalid_argument("unknown field '" + t + "' (expected q or fp:<p>)");
}

}  // namespace hopfalg
