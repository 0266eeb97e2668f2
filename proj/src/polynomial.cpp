#include "lietemper/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lietemper/error.hpp"

namespace lietemper {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rat& root) { return Poly({-root, Rat(1)}); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / lead();
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c *= inv;
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rat& c = coeffs_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (d == 0 || mag != 1) os << mag.get_str() << (d > 0 ? "*" : "");
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

PolyDivision divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= b.degree(); --d) {
    const Rat c = rem[static_cast<std::size_t>(d)] / b.lead();
    const std::size_t shift = static_cast<std::size_t>(d - b.degree());
    quo[shift] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= c * bc[i];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

Poly characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  // Reduce to upper Hessenberg form by elementary similarities.
  for (std::size_t row = 1; row + 1 < n; ++row) {
    const std::size_t c = row - 1;
    std::size_t i = row;
    while (i < n && sgn(a(i, c)) == 0) ++i;
    if (i == n) continue;
    if (i != row) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(row, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, row));
    }
    const Rat t = a(row, c);
    for (std::size_t j = row + 1; j < n; ++j) {
      if (sgn(a(j, c)) == 0) continue;
      const Rat u = a(j, c) / t;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a(row, k)) != 0) a(j, k) -= u * a(row, k);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a(k, j)) != 0) a(k, row) += u * a(k, j);
    }
  }
  // p_m = (t - h_kk) p_{m-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i,  k = m-1.
  std::vector<Poly> p(n + 1);
  p[0] = Poly({Rat(1)});
  for (std::size_t mm = 1; mm <= n; ++mm) {
    const std::size_t k = mm - 1;
    Poly acc = Poly({-a(k, k), Rat(1)}) * p[k];
    Rat sub = 1;
    for (std::size_t step = 0; step < k; ++step) {
      const std::size_t i = k - 1 - step;
      sub *= a(i + 1, i);
      if (sgn(sub) == 0) break;
      if (sgn(a(i, k)) != 0) acc = acc - Poly({a(i, k) * sub}) * p[i];
    }
    p[mm] = std::move(acc);
  }
  return p[n];
}

namespace {

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  for (unsigned long d = 2; d <= 1000000; ++d) {
    if (n == 1) return out;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d;
    }
    if (mpz_class(d) * d > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      fail(ErrorCode::Internal, "rational root search: cannot factor " + n.get_str());
    out.push_back(n);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::vector<mpz_class> divs{1};
  for (const auto& p : prime_factors(n)) {
    mpz_class rest = n;
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 2000000) fail(ErrorCode::Internal, "rational root search: too many divisor candidates");
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalRoots rational_roots(const Poly& squarefree) {
  RationalRoots out;
  Poly rest = squarefree.monic();
  if (rest.degree() <= 0) {
    out.residual = rest;
    return out;
  }
  if (sgn(rest.coeffs()[0]) == 0) {
    out.roots.push_back(0);
    rest = divide(rest, Poly::linear(0)).quotient;
  }
  if (rest.degree() >= 1) {
    // q(y) = D^n p(y / D) is monic with integer coefficients; roots of p are y / D
    // with y an integer divisor of q(0).
    mpz_class denom = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    const int n = rest.degree();
    Rat dpow = 1;
    std::vector<Rat> scaled(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) {  // coefficient of y^k is a_k * D^(n-k)
      scaled[static_cast<std::size_t>(k)] = rest.coeffs()[static_cast<std::size_t>(k)] * dpow;
      dpow *= denom;
    }
    Poly q(scaled);
    for (const auto& d : divisors(q.coeffs()[0].get_num())) {
      for (int s : {-1, 1}) {
        if (q.degree() < 1) break;
        Rat y = Rat(d * s);
        if (sgn(q(y)) == 0) {
          q = divide(q, Poly::linear(y)).quotient;
          out.roots.push_back(y / Rat(denom));
        }
      }
    }
    // Residual back in the original variable: p_rest(x) = q(D x) / D^deg.
    std::vector<Rat> back(q.coeffs().size());
    Rat dp = 1;
    for (std::size_t k = 0; k < back.size(); ++k) {
      back[k] = q.coeffs()[k] * dp;
      dp *= denom;
    }
    rest = Poly(back).monic();
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rest;
  return out;
}

int count_real_roots(const Poly& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(Poly() - r);
  }
  auto changes = [&seq](bool at_plus_inf) {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      int sign = sgn(s.lead());
      if (!at_plus_inf && s.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace lietemper
