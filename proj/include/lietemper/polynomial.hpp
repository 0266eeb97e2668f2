#pragma once

#include <string>
#include <vector>

#include "lietemper/rational.hpp"

namespace lietemper {

/// Dense univariate polynomial over Q, coefficients low degree first,
/// no trailing zeros (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly monomial(const Rat& c, std::size_t degree);
  /// x - root
  static Poly linear(const Rat& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& lead() const { return coeffs_.back(); }
  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
PolyDivision divide(const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);
/// Product of the distinct irreducible factors, monic.
Poly squarefree_part(const Poly& p);

/// Characteristic polynomial det(tI - A), via similarity to Hessenberg form.
Poly characteristic_polynomial(const Matrix& a);

/// Distinct rational roots (ascending) and the monic cofactor free of rational roots.
struct RationalRoots {
  std::vector<Rat> roots;
  Poly residual;
};
RationalRoots rational_roots(const Poly& squarefree);

/// Number of distinct real roots, by Sturm sequence sign changes at +-infinity.
int count_real_roots(const Poly& p);

}  // namespace lietemper
