#ifndef ARITHSURF_EXACTNUM_HPP
#define ARITHSURF_EXACTNUM_HPP

// Exact arithmetic kernel: GMP-backed integers and rationals, valuations,
// square detection, arithmetic modulo small primes, CRT and normalized
// projective points.

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arithsurf/error.hpp"

namespace arithsurf {

using Integer = mpz_class;
/// Always kept canonical: denominator > 0 and gcd(num, den) = 1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::kPrecondition, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (decimal).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return make_rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kPrecondition, "not a rational number: '" + s + "'");
  }
}

inline Integer parse_integer(std::string_view text) {
  try {
    return Integer(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kPrecondition, "not an integer: '" + std::string(text) + "'");
  }
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::size_t decimal_digits(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 10); }

inline Integer abs_value(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational pow(const Rational& base, unsigned long exp) {
  return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

// ---------------------------------------------------------------------------
// Valuations and squares

/// Valuation of zero.
inline constexpr long kInfiniteValuation = LONG_MAX;

inline long padic_valuation(const Integer& n, const Integer& p) {
  if (p < 2) throw Error(ErrorKind::kPrecondition, "valuation base must be a prime");
  if (n == 0) return kInfiniteValuation;
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline long padic_valuation(const Rational& q, const Integer& p) {
  if (q == 0) return kInfiniteValuation;
  return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

inline std::optional<Integer> integer_sqrt_if_square(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Nonnegative square root when q is the square of a rational.
inline std::optional<Rational> square_root_if_square(const Rational& q) {
  auto num = integer_sqrt_if_square(q.get_num());
  if (!num) return std::nullopt;
  auto den = integer_sqrt_if_square(q.get_den());
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

inline bool is_rational_square(const Rational& q) { return square_root_if_square(q).has_value(); }

/// The squarefree d with n = d*k^2 and sign(d) = sign(n). Trial division runs
/// up to the cube root of the unfactored cofactor; what remains then has at
/// most two prime factors, so a perfect-square test finishes the job.
inline Integer squarefree_part(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::kPrecondition, "squarefree_part of zero");
  Integer rest = abs_value(n);
  Integer result = 1;
  auto strip = [&](const Integer& p) {
    long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
    if (e % 2 == 1) result *= p;
  };
  strip(2);
  for (Integer p = 3; p * p * p <= rest; p += 2) {
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) strip(p);
  }
  if (rest > 1 && !integer_sqrt_if_square(rest)) result *= rest;
  return n < 0 ? Integer(-result) : result;
}

/// Factor refinement: pairwise coprime integers > 1 such that every nonzero
/// input is, up to sign, a product of powers of them. No factoring needed.
inline std::vector<Integer> coprime_base(std::span<const Integer> values) {
  std::vector<Integer> base;
  for (const auto& v : values) {
    Integer a = abs_value(v);
    if (a > 1) base.push_back(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto* x : {&a, &b, &g}) {
          if (*x > 1) base.push_back(*x);
        }
        changed = true;
      }
    }
  }
  return base;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(std::to_string(n), 10);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// An element of the prime field F_p. Values are kept in [0, p).
class Residue {
 public:
  /// Checked constructor: validates primality of the modulus.
  Residue(const Integer& value, std::uint64_t modulus) : modulus_(modulus) {
    if (!is_prime(modulus)) {
      throw Error(ErrorKind::kPrecondition, "residue modulus " + std::to_string(modulus) + " is not prime");
    }
    Integer m(std::to_string(modulus), 10);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    value_ = r.get_ui();
  }

  Residue(long value, std::uint64_t modulus) : Residue(Integer(value), modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    std::uint64_t s = a.value_ + b.value_;
    return unchecked(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Residue operator-(const Residue& a) { return unchecked(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_); }
  friend Residue operator-(const Residue& a, const Residue& b) { return a + (-b); }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    return unchecked(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inverse(); }

  Residue inverse() const {
    if (value_ == 0) throw Error(ErrorKind::kPrecondition, "inverse of zero residue");
    return unchecked(pow_mod(value_, modulus_ - 2, modulus_), modulus_);
  }

  Residue pow(std::uint64_t exp) const { return unchecked(pow_mod(value_, exp, modulus_), modulus_); }

  /// Same modulus, new value; skips the primality check.
  Residue with_value(long long v) const {
    long long m = static_cast<long long>(modulus_);
    long long r = v % m;
    return unchecked(static_cast<std::uint64_t>(r < 0 ? r + m : r), modulus_);
  }

 private:
  Residue() = default;

  static Residue unchecked(std::uint64_t value, std::uint64_t modulus) {
    Residue r;
    r.value_ = value;
    r.modulus_ = modulus;
    return r;
  }

  static void check_same(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) throw Error(ErrorKind::kPrecondition, "residues with different moduli");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

/// Legendre symbol via Euler's criterion: 1, -1 (as p-1) or 0.
inline int legendre(const Residue& a) {
  if (a.is_zero()) return 0;
  if (a.modulus() == 2) return 1;
  return a.pow((a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

/// A square root of a modulo an odd prime, the smaller representative of the
/// two. Uses the (p+1)/4 exponent when p = 3 mod 4, Tonelli-Shanks otherwise.
inline std::optional<Residue> sqrt_mod(const Residue& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return a;
  if (p == 2) return a;
  if (legendre(a) != 1) return std::nullopt;

  Residue root = a;
  if (p % 4 == 3) {
    root = a.pow((p + 1) / 4);
  } else {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Residue z = a.with_value(2);
    while (legendre(z) != -1) z = z.with_value(static_cast<long long>(z.value()) + 1);
    Residue c = z.pow(q);
    Residue t = a.pow(q);
    root = a.pow((q + 1) / 2);
    unsigned m = s;
    const Residue one = a.with_value(1);
    while (!(t == one)) {
      unsigned i = 0;
      Residue t2 = t;
      while (!(t2 == one)) {
        t2 = t2 * t2;
        ++i;
      }
      Residue b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
      m = i;
      c = b * b;
      t = t * c;
      root = root * b;
    }
  }
  Residue other = -root;
  return other.value() < root.value() ? other : root;
}

/// Least nonnegative integer congruent to every residue. Moduli must be
/// pairwise distinct primes.
inline Integer crt(std::span<const Residue> residues) {
  Integer x = 0;
  Integer modulus = 1;
  std::vector<std::uint64_t> seen;
  for (const auto& r : residues) {
    if (std::find(seen.begin(), seen.end(), r.modulus()) != seen.end()) {
      throw Error(ErrorKind::kPrecondition, "crt: repeated modulus " + std::to_string(r.modulus()));
    }
    seen.push_back(r.modulus());
    Integer p(std::to_string(r.modulus()), 10);
    // x + modulus * k = r (mod p)
    Integer x_mod;
    mpz_fdiv_r(x_mod.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    Residue diff = Residue(Integer(std::to_string(r.value()), 10) - x_mod, r.modulus());
    Residue k = diff / Residue(modulus, r.modulus());
    x += modulus * Integer(std::to_string(k.value()), 10);
    modulus *= p;
  }
  return x;
}

/// Reduction of a rational modulo p; absent when p divides the denominator.
inline std::optional<Residue> reduce(const Rational& q, std::uint64_t p) {
  Residue den(q.get_den(), p);
  if (den.is_zero()) return std::nullopt;
  return Residue(q.get_num(), p) / den;
}

inline Integer to_integer(std::uint64_t v) { return Integer(std::to_string(v), 10); }

// ---------------------------------------------------------------------------
// Projective points

/// A point of P^n(Q) as coprime integers whose first nonzero entry is positive.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Integer> coords) : coords_(std::move(coords)) { normalize(); }

  ProjectivePoint(std::initializer_list<long> coords) {
    for (long c : coords) coords_.emplace_back(c);
    normalize();
  }

  static ProjectivePoint from_rationals(std::span<const Rational> coords) {
    if (coords.empty()) throw Error(ErrorKind::kPrecondition, "empty coordinate list");
    Integer common = 1;
    for (const auto& c : coords) common = lcm(common, c.get_den());
    std::vector<Integer> ints;
    ints.reserve(coords.size());
    for (const auto& c : coords) ints.push_back(c.get_num() * (common / c.get_den()));
    return ProjectivePoint(std::move(ints));
  }

  static ProjectivePoint from_rationals(std::initializer_list<Rational> coords) {
    std::vector<Rational> v(coords);
    return from_rationals(std::span<const Rational>(v));
  }

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  /// Coordinates divided by coordinate `index` (which must be nonzero).
  std::vector<Rational> dehomogenize(std::size_t index) const {
    if (coords_.at(index) == 0) throw Error(ErrorKind::kPrecondition, "dehomogenizing at a zero coordinate");
    std::vector<Rational> out;
    for (const auto& c : coords_) out.push_back(make_rational(c, coords_[index]));
    return out;
  }

  std::size_t max_digits() const {
    std::size_t d = 0;
    for (const auto& c : coords_) d = std::max(d, decimal_digits(c));
    return d;
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ":";
      s += coords_[i].get_str(10);
    }
    return s + ")";
  }

 private:
  void normalize() {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    if (g == 0) throw Error(ErrorKind::kPrecondition, "all-zero projective point");
    auto first = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
    if (*first < 0) g = -g;
    if (g != 1) {
      for (auto& c : coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::vector<Integer> coords_;
};

inline ProjectivePoint normalize_projective(std::span<const Rational> coords) {
  return ProjectivePoint::from_rationals(coords);
}

/// Reduction of a projective point modulo p (coordinates as residues).
inline std::vector<Residue> reduce(const ProjectivePoint& pt, std::uint64_t p) {
  std::vector<Residue> out;
  for (const auto& c : pt.coords()) out.emplace_back(c, p);
  return out;
}

}  // namespace arithsurf

#endif  // ARITHSURF_EXACTNUM_HPP
