#ifndef ARITHSURF_FORMS_HPP
#define ARITHSURF_FORMS_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "arithsurf/exactnum.hpp"

namespace arithsurf {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q. Used to build defining equations
/// symbolically and to check polynomial identities exactly.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    Polynomial p(nvars);
    p.add_term(e, 1);
    return p;
  }

  /// All variables of a ring with `nvars` generators.
  static std::vector<Polynomial> variables(std::size_t nvars) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < nvars; ++i) v.push_back(variable(nvars, i));
    return v;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::kArityMismatch, "exponent tuple length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Total degrees present; a homogeneous polynomial has exactly one.
  std::vector<unsigned> degrees() const {
    std::vector<unsigned> d;
    for (const auto& [e, c] : terms_) {
      unsigned s = std::accumulate(e.begin(), e.end(), 0u);
      if (std::find(d.begin(), d.end(), s) == d.end()) d.push_back(s);
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::kArityMismatch, "point dimension differs from variable count");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i]) term *= arithsurf::pow(point[i], e[i]);
      }
      sum += term;
    }
    return sum;
  }

  /// Substitutes polynomial `images[i]` (all in a common ring) for variable i.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw Error(ErrorKind::kArityMismatch, "compose needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
      }
      result = result + term;
    }
    return result;
  }

  Polynomial derivative(std::size_t index) const {
    Polynomial d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(index) == 0) continue;
      Exponents f = e;
      --f[index];
      d.add_term(f, c * e[index]);
    }
    return d;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    return constant(p.nvars_, s) * p;
  }

  Polynomial pow(unsigned exp) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < exp; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::kArityMismatch, "polynomials over different rings");
  }

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// A nonzero homogeneous form with coprime integer coefficients. Built from a
/// homogeneous rational polynomial by clearing denominators and content;
/// the zero locus is unchanged.
class HomogeneousForm {
 public:
  explicit HomogeneousForm(const Polynomial& p) : nvars_(p.nvars()) {
    auto degs = p.degrees();
    if (degs.empty()) throw Error(ErrorKind::kPrecondition, "zero form");
    if (degs.size() != 1) throw Error(ErrorKind::kPrecondition, "polynomial is not homogeneous");
    degree_ = degs.front();
    Integer den = 1;
    for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
    Integer content = 0;
    for (const auto& [e, c] : p.terms()) {
      Integer v = c.get_num() * (den / c.get_den());
      content = gcd(content, v);
      coeffs_.emplace(e, v);
    }
    for (auto& [e, c] : coeffs_) c /= content;
  }

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const std::map<Exponents, Integer>& coefficients() const { return coeffs_; }

  Polynomial to_polynomial() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : coeffs_) p.add_term(e, Rational(c));
    return p;
  }

  Integer evaluate(std::span<const Integer> x) const {
    if (x.size() != nvars_) throw Error(ErrorKind::kArityMismatch, "form arity differs from point dimension");
    Integer sum = 0;
    for (const auto& [e, c] : coeffs_) {
      Integer term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i]) term *= pow(x[i], e[i]);
      }
      sum += term;
    }
    return sum;
  }

  /// Gradient at an integer vector.
  std::vector<Integer> gradient(std::span<const Integer> x) const {
    if (x.size() != nvars_) throw Error(ErrorKind::kArityMismatch, "form arity differs from point dimension");
    std::vector<Integer> g(nvars_, 0);
    for (const auto& [e, c] : coeffs_) {
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        Integer term = c * e[k];
        for (std::size_t i = 0; i < nvars_; ++i) {
          unsigned ex = e[i] - (i == k ? 1 : 0);
          if (ex) term *= pow(x[i], ex);
        }
        g[k] += term;
      }
    }
    return g;
  }

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  std::size_t nvars_;
  unsigned degree_ = 0;
  std::map<Exponents, Integer> coeffs_;
};

/// Exact value of the form at the normalized coordinates of p.
inline Integer evaluate_form(const HomogeneousForm& f, const ProjectivePoint& p) {
  return f.evaluate(p.coords());
}

}  // namespace arithsurf

#endif  // ARITHSURF_FORMS_HPP
