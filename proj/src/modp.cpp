#include "lietemper/modp.hpp"

#include "lietemper/error.hpp"

namespace lietemper::modp {

Elem pow(Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

namespace {

Elem from_mpz(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return static_cast<Elem>(r.get_ui());
}

}  // namespace

Elem from_rat(const Rat& q) {
  Elem den = from_mpz(q.get_den());
  if (den == 0) fail(ErrorCode::Internal, "denominator divisible by the sampling prime");
  return mul(from_mpz(q.get_num()), inv(den));
}

ModVec from_vec(const Vec& v) {
  ModVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = sgn(v[i]) == 0 ? 0 : from_rat(v[i]);
  return out;
}

ModVec ModMatrix::apply(const ModVec& v) const {
  ModVec out(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      Elem a = data[r * n + c];
      if (a) out[r] = add(out[r], mul(a, v[c]));
    }
  }
  return out;
}

ModMatrix from_matrix(const Matrix& m) {
  ModMatrix out;
  out.n = m.rows();
  out.data.resize(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.data[r * out.n + c] = sgn(m(r, c)) == 0 ? 0 : from_rat(m(r, c));
  return out;
}

std::size_t rank(std::vector<ModVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Elem inv_pivot = inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Elem f = mul(rows[i][c], inv_pivot);
      for (std::size_t k = c; k < cols; ++k)
        if (rows[r][k]) rows[i][k] = sub(rows[i][k], mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

}  // namespace lietemper::modp
