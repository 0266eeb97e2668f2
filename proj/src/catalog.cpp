#include "lietemper/catalog.hpp"

#include <functional>
#include <regex>
#include <sstream>

#include "lietemper/error.hpp"

namespace lietemper {

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

struct Basis {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  void add(std::string l, Matrix m) {
    labels.push_back(std::move(l));
    mats.push_back(std::move(m));
  }
  std::size_t index(const std::string& l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    fail(ErrorCode::Internal, "catalog label " + l + " missing");
  }
};

Basis sl_basis(std::size_t n) {
  Basis b;
  for (std::size_t i = 0; i + 1 < n; ++i) b.add("H" + idx(i), unit(n, i, i) - unit(n, i + 1, i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.add("E" + idx(i) + idx(j), unit(n, i, j));
  return b;
}

Basis sp_basis(std::size_t n) {
  Basis b;
  const std::size_t s = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add("A" + idx(i) + idx(j), unit(s, i, j) - unit(s, n + j, n + i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix up = unit(s, i, n + j), down = unit(s, n + i, j);
      if (i != j) {
        up = up + unit(s, j, n + i);
        down = down + unit(s, n + j, i);
      }
      b.add("B" + idx(i) + idx(j), up);
      b.add("C" + idx(i) + idx(j), down);
    }
  return b;
}

Basis so_basis(std::size_t p, std::size_t q) {
  Basis b;
  const std::size_t n = p + q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = (i < p) == (j < p);
      if (same)
        b.add("R" + idx(i) + idx(j), unit(n, i, j) - unit(n, j, i));
      else
        b.add("B" + idx(i) + idx(j), unit(n, i, j) + unit(n, j, i));
    }
  return b;
}

Matrix realify(const Matrix& re, const Matrix& im) {
  const std::size_t n = re.rows();
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = re(i, j);
      r(n + i, n + j) = re(i, j);
      r(i, n + j) = -im(i, j);
      r(n + i, j) = im(i, j);
    }
  return r;
}

Basis su_basis(std::size_t p, std::size_t q) {
  Basis b;
  const std::size_t n = p + q;
  const Matrix zero(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) b.add("D" + idx(k), realify(zero, unit(n, k, k) - unit(n, k + 1, k + 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix sym = unit(n, i, j) + unit(n, j, i), skew = unit(n, i, j) - unit(n, j, i);
      if ((i < p) == (j < p)) {
        b.add("R" + idx(i) + idx(j), realify(skew, zero));
        b.add("S" + idx(i) + idx(j), realify(zero, sym));
      } else {
        b.add("B" + idx(i) + idx(j), realify(sym, zero));
        b.add("C" + idx(i) + idx(j), realify(zero, skew));
      }
    }
  return b;
}

AlgebraBlock finish(const std::string& name, Basis b) {
  AlgebraBlock out;
  out.defining_size = b.mats.empty() ? 0 : b.mats[0].rows();
  out.algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_matrices(name, b.labels, b.mats));
  return out;
}

Vec unit_at(const LieAlgebra& g, const std::string& label) {
  auto i = g.index_of(label);
  if (!i) fail(ErrorCode::Internal, "catalog label " + label + " missing");
  return unit_vec(g.dim(), *i);
}

// Complex matrix algebra from a real basis of its split real form, realified.
AlgebraBlock complex_realified(const std::string& name, const Basis& real) {
  Basis b;
  const std::size_t m = real.mats.size();
  const Matrix zero(real.mats[0].rows(), real.mats[0].cols());
  for (std::size_t k = 0; k < m; ++k) b.add(real.labels[k], realify(real.mats[k], zero));
  for (std::size_t k = 0; k < m; ++k) b.add("i" + real.labels[k], realify(zero, real.mats[k]));
  auto out = finish(name, std::move(b));
  LieAlgebra g = *out.algebra;
  Matrix J(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    J(m + k, k) = 1;
    J(k, m + k) = -1;
  }
  g.set_complex_structure(std::move(J));
  out.algebra = std::make_shared<const LieAlgebra>(std::move(g));
  out.defining_size = real.mats[0].rows();
  out.realified = true;
  return out;
}

AlgebraBlock simple_algebra(const std::string& token) {
  static const std::regex re(R"(^(sl|su|so|sp|slc|soc|spc)(\d+)(?:_(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) fail(ErrorCode::UnsupportedParams, "unknown algebra token '" + token + "'");
  const std::string kind = m[1];
  const std::size_t a = std::stoul(m[2]);
  const bool has_q = m[3].matched;
  const std::size_t q = has_q ? std::stoul(m[3]) : 0;
  auto range = [&](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::UnsupportedParams, token + ": " + what);
  };
  if (kind != "so" && kind != "su") range(!has_q, "this kind takes a single parameter");
  AlgebraBlock out;
  if (kind == "sl") {
    range(a >= 2 && a <= 6, "sl<n> needs 2 <= n <= 6");
    out = finish(token, sl_basis(a));
    for (std::size_t i = 0; i + 1 < a; ++i) out.split_torus.push_back(unit_at(*out.algebra, "H" + idx(i)));
  } else if (kind == "sp") {
    range(a >= 1 && a <= 4, "sp<n> needs 1 <= n <= 4");
    out = finish(token, sp_basis(a));
    for (std::size_t i = 0; i < a; ++i) out.split_torus.push_back(unit_at(*out.algebra, "A" + idx(i) + idx(i)));
  } else if (kind == "so") {
    range(a + q >= 2 && a + q <= 8, "so<p>_<q> needs 2 <= p+q <= 8");
    out = finish(token, so_basis(a, q));
    const std::size_t r = std::min(a, q);
    for (std::size_t i = 0; i < r; ++i) out.split_torus.push_back(unit_at(*out.algebra, "B" + idx(i) + idx(a + i)));
    for (std::size_t i = r; i + 1 < a; i += 2) out.compact_cartan.push_back(unit_at(*out.algebra, "R" + idx(i) + idx(i + 1)));
    for (std::size_t i = a + r; i + 1 < a + q; i += 2)
      out.compact_cartan.push_back(unit_at(*out.algebra, "R" + idx(i) + idx(i + 1)));
  } else if (kind == "su") {
    range(a + q >= 2 && a + q <= 8, "su<p>_<q> needs 2 <= p+q <= 8");
    out = finish(token, su_basis(a, q));
    out.realified = true;
    out.defining_size = a + q;
    const LieAlgebra& g = *out.algebra;
    const std::size_t n = a + q, r = std::min(a, q);
    for (std::size_t i = 0; i < r; ++i) out.split_torus.push_back(unit_at(g, "B" + idx(i) + idx(a + i)));
    // i * diag, constant on each boost pair, traceless
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < r; ++i) groups.push_back({i, a + i});
    for (std::size_t i = r; i < a; ++i) groups.push_back({i});
    for (std::size_t i = a + r; i < n; ++i) groups.push_back({i});
    for (std::size_t gi = 0; gi + 1 < groups.size(); ++gi) {
      // diagonal entries d with sum 0; D_k = i(E_kk - E_{k+1,k+1}) so d = sum_k c_k (e_k - e_{k+1})
      Vec d(n);
      const Rat s1 = static_cast<long>(groups[gi].size()), s2 = static_cast<long>(groups[gi + 1].size());
      for (auto k : groups[gi]) d[k] = s2;
      for (auto k : groups[gi + 1]) d[k] = -s1;
      Vec coeff(g.dim());
      Rat running = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        running += d[k];
        coeff[*g.index_of("D" + idx(k))] = running;
      }
      out.compact_cartan.push_back(std::move(coeff));
    }
  } else {
    range(a >= (kind == "soc" ? 3u : kind == "spc" ? 1u : 2u), "parameter too small");
    range(kind == "spc" ? a <= 2 : a <= 4, "complex algebras are limited to dimension 30");
    Basis real = kind == "slc" ? sl_basis(a) : kind == "spc" ? sp_basis(a) : so_basis(a, 0);
    out = complex_realified(token, real);
    const LieAlgebra& g = *out.algebra;
    if (kind == "slc")
      for (std::size_t i = 0; i + 1 < a; ++i) {
        out.split_torus.push_back(unit_at(g, "H" + idx(i)));
        out.compact_cartan.push_back(unit_at(g, "iH" + idx(i)));
      }
    else if (kind == "spc")
      for (std::size_t i = 0; i < a; ++i) {
        out.split_torus.push_back(unit_at(g, "A" + idx(i) + idx(i)));
        out.compact_cartan.push_back(unit_at(g, "iA" + idx(i) + idx(i)));
      }
    else
      for (std::size_t i = 0; i + 1 < a; i += 2) {
        out.split_torus.push_back(unit_at(g, "iR" + idx(i) + idx(i + 1)));
        out.compact_cartan.push_back(unit_at(g, "R" + idx(i) + idx(i + 1)));
      }
  }
  return out;
}

Vec embed(const Vec& v, std::size_t offset, std::size_t total) {
  Vec out(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

AlgebraBlock direct_sum(const std::string& name, const std::vector<AlgebraBlock>& parts) {
  if (parts.size() == 1) return parts[0];
  std::size_t n = 0;
  for (const auto& p : parts) n += p.algebra->dim();
  std::vector<std::string> labels;
  std::vector<Rat> c(n * n * n);
  std::vector<Matrix> mats;
  bool all_real = true, all_complex = true;
  std::size_t msize = 0;
  for (const auto& p : parts) {
    all_real = all_real && p.algebra->realization().has_value();
    all_complex = all_complex && p.algebra->complex_structure().has_value();
    if (p.algebra->realization()) msize += (*p.algebra->realization())[0].rows();
  }
  Matrix J(n, n);
  AlgebraBlock out;
  std::size_t off = 0, moff = 0;
  for (std::size_t f = 0; f < parts.size(); ++f) {
    const LieAlgebra& a = *parts[f].algebra;
    const std::size_t d = a.dim();
    for (const auto& l : a.labels()) labels.push_back(l + "." + std::to_string(f + 1));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& t : a.bracket_terms(i, j)) c[((off + i) * n + off + j) * n + off + t.index] = t.coeff;
    if (all_real) {
      const auto& real = *a.realization();
      const std::size_t s = real[0].rows();
      for (const auto& m : real) {
        Matrix big(msize, msize);
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t k = 0; k < s; ++k) big(moff + r, moff + k) = m(r, k);
        mats.push_back(std::move(big));
      }
      moff += s;
    }
    if (all_complex) {
      const Matrix& j = *a.complex_structure();
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) J(off + r, off + k) = j(r, k);
    }
    for (const auto& v : parts[f].split_torus) out.split_torus.push_back(embed(v, off, n));
    for (const auto& v : parts[f].compact_cartan) out.compact_cartan.push_back(embed(v, off, n));
    off += d;
  }
  LieAlgebra g(name, std::move(labels), std::move(c));
  if (all_real) g.set_realization(std::move(mats));
  if (all_complex) g.set_complex_structure(std::move(J));
  out.algebra = std::make_shared<const LieAlgebra>(std::move(g));
  out.defining_size = msize;
  out.simple_token = false;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    fail(ErrorCode::UnsupportedParams, what + " must be a small non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

const char* kTorusNote = "torus_h is asserted maximal split in h (greedy extension used only as a sanity check)";
const char* kCompactNote = "compact factors lie in every minimal parabolic; Ad-words use only unipotent letters";

Pair group_case(const std::string& spec, const AlgebraBlock& a) {
  std::optional<ComplexificationData> cx = ComplexificationData{a.compact_cartan};
  Pair p = make_pair(spec, "catalog family (group with h = 0)", a.algebra, {}, {}, a.split_torus, cx);
  p.notes = {"h = 0: the pair describes L^2(G); group-case sphericity is better posed as diagonal_pair", kCompactNote};
  return p;
}

Pair diagonal(const std::string& spec, const AlgebraBlock& a, std::size_t copies) {
  std::vector<AlgebraBlock> parts(copies, a);
  AlgebraBlock big = direct_sum(spec, parts);
  const std::size_t d = a.algebra->dim(), n = big.algebra->dim();
  auto delta = [&](const Vec& v) {
    Vec out(n);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < d; ++i) out[c * d + i] = v[i];
    return out;
  };
  std::vector<Vec> h, th;
  for (std::size_t i = 0; i < d; ++i) h.push_back(delta(unit_vec(d, i)));
  for (const auto& t : a.split_torus) th.push_back(delta(t));
  Pair p = make_pair(spec, copies == 2 ? "catalog family (group case as (G x G)/diag G)" : "catalog family (triple space)",
                     big.algebra, std::move(h), std::move(th), big.split_torus, ComplexificationData{big.compact_cartan});
  p.notes = {kTorusNote, kCompactNote};
  return p;
}

Pair symmetric(const std::string& spec, const AlgebraBlock& a, const std::string& involution) {
  if (!a.simple_token) fail(ErrorCode::UnsupportedParams, "symmetric_pair_fixed_points needs a single algebra token");
  const LieAlgebra& g = *a.algebra;
  const auto& real = *g.realization();
  const std::size_t s = real[0].rows(), n = g.dim();
  std::function<Matrix(const Matrix&)> theta;
  if (involution == "transpose") {
    theta = [](const Matrix& x) { return Rat(-1) * x.transpose(); };
  } else if (involution.rfind("eta:", 0) == 0) {
    const std::size_t k = parse_count(involution.substr(4), "eta block size");
    if (k == 0 || k >= a.defining_size) fail(ErrorCode::UnsupportedParams, "eta:k needs 0 < k < " + std::to_string(a.defining_size));
    Matrix eta = Matrix::identity(s);
    for (std::size_t i = 0; i < s; ++i)
      if (i % a.defining_size >= k) eta(i, i) = -1;
    theta = [eta](const Matrix& x) { return eta * x * eta; };
  } else {
    fail(ErrorCode::UnsupportedParams, "unknown involution '" + involution + "' (transpose | eta:<k>)");
  }
  std::vector<Vec> flat;
  auto flatten = [s](const Matrix& m) {
    Vec v(s * s);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) v[r * s + c] = m(r, c);
    return v;
  };
  for (const auto& m : real) flat.push_back(flatten(m));
  BasisCoordinates coords(flat, s * s);
  Matrix T(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto c = coords.coordinates(flatten(theta(real[j])));
    if (!c) fail(ErrorCode::UnsupportedParams, "involution " + involution + " does not preserve " + g.name());
    for (std::size_t i = 0; i < n; ++i) T(i, j) = (*c)[i];
  }
  if (!(T * T == Matrix::identity(n))) fail(ErrorCode::UnsupportedParams, "map is not an involution on " + g.name());
  auto h_rows = kernel(T - Matrix::identity(n));
  auto h = std::make_shared<const SubalgebraEmbedding>(a.algebra, h_rows);
  std::vector<Vec> pool;
  for (const auto& y : a.split_torus) pool.push_back(scale(Rat(1, 2), add(y, T.apply(y))));
  for (const auto& y : h->basis()) pool.push_back(y);
  SplitTorus th = extend_torus_greedily(validate_torus({}, h), h, pool);
  Pair p = make_pair(spec, "catalog family (fixed points of an involution)", a.algebra, h_rows, th.basis(),
                     a.split_torus, ComplexificationData{a.compact_cartan});
  p.notes = {kTorusNote, "torus_h found greedily from the projected split torus of g, then the basis of h", kCompactNote};
  return p;
}

Pair whittaker(const std::string& spec, const AlgebraBlock& a) {
  auto whole = std::make_shared<const SubalgebraEmbedding>(a.algebra, [&] {
    std::vector<Vec> u;
    for (std::size_t i = 0; i < a.algebra->dim(); ++i) u.push_back(unit_vec(a.algebra->dim(), i));
    return u;
  }());
  SplitTorus tg = validate_torus(a.split_torus, whole);
  auto par = minimal_parabolic(tg, std::nullopt, 0);
  Pair p = make_pair(spec, "catalog family (maximal unipotent subgroup)", a.algebra, par.positive_root_vectors, {},
                     a.split_torus, ComplexificationData{a.compact_cartan});
  p.notes = {"n is nilpotent (ad E is nilpotent for every E in n), so its maximal split torus is 0", kCompactNote};
  return p;
}

Pair torus_pair(const std::string& spec, const AlgebraBlock& a) {
  std::vector<Vec> h = a.split_torus;
  h.insert(h.end(), a.compact_cartan.begin(), a.compact_cartan.end());
  Pair p = make_pair(spec, "catalog family (Cartan subgroup)", a.algebra, h, a.split_torus, a.split_torus,
                     ComplexificationData{a.compact_cartan});
  p.notes = {kTorusNote, kCompactNote};
  return p;
}

Pair block_sl(const std::string& spec, const std::string& token, const std::string& m_text) {
  static const std::regex re(R"(^(sl|slc)(\d+)$)");
  std::smatch mm;
  if (!std::regex_match(token, mm, re)) fail(ErrorCode::UnsupportedParams, "block_sl needs sl<n> or slc<n>");
  const std::size_t n = std::stoul(mm[2]), m = parse_count(m_text, "block size");
  if (m < 2 || m >= n) fail(ErrorCode::UnsupportedParams, "block_sl needs 2 <= m < n");
  AlgebraBlock a = build_algebra(token);
  const LieAlgebra& g = *a.algebra;
  const bool complex = mm[1] == "slc";
  std::vector<Vec> h, th;
  for (const auto& label : sl_basis(m).labels) {
    h.push_back(unit_at(g, label));
    if (complex) h.push_back(unit_at(g, "i" + label));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) th.push_back(unit_at(g, "H" + idx(i)));
  Pair p = make_pair(spec, "catalog family (upper-left block embedding)", a.algebra, h, th, a.split_torus,
                     ComplexificationData{a.compact_cartan});
  p.notes = {kTorusNote, kCompactNote};
  return p;
}

}  // namespace

AlgebraBlock build_algebra(const std::string& token) {
  auto factors = split(token, '+');
  if (factors.empty() || factors.size() > 3) fail(ErrorCode::UnsupportedParams, "algebra needs 1 to 3 factors: '" + token + "'");
  std::vector<AlgebraBlock> parts;
  for (const auto& f : factors) parts.push_back(simple_algebra(f));
  return direct_sum(token, parts);
}

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {"sl_n_R", "<n>  (2 <= n <= 6)", "SL(n,R) itself: g = sl(n,R), h = 0", "sl_n_R:3"},
      {"so_p_q", "<p>:<q>  (2 <= p+q <= 8)", "SO(p,q) itself: g = so(p,q), h = 0", "so_p_q:2:1"},
      {"su_p_q", "<p>:<q>  (2 <= p+q <= 8)", "SU(p,q) itself, realified: g = su(p,q), h = 0", "su_p_q:1:1"},
      {"sp_n_R", "<n>  (1 <= n <= 4)", "Sp(n,R) itself: g = sp(n,R), h = 0", "sp_n_R:2"},
      {"complex_simple_realified", "<sl|so|sp>:<n>", "a complex simple group viewed as a real group, h = 0",
       "complex_simple_realified:sl:2"},
      {"direct_sum", "<alg>  (tokens joined by '+')", "a direct sum of catalog algebras, h = 0", "direct_sum:sl2+so3"},
      {"diagonal_pair", "<alg>", "group case (G x G)/diag G", "diagonal_pair:sl2"},
      {"triple_diagonal", "<alg>", "triple space (G x G x G)/diag G", "triple_diagonal:sl2"},
      {"symmetric_pair_fixed_points", "<alg>:<transpose|eta:k>",
       "h = fixed points of X -> -X^T or X -> eta X eta with eta = diag(1^k, -1^(n-k))",
       "symmetric_pair_fixed_points:sl3:transpose"},
      {"whittaker_nilradical", "<alg>", "h = nilradical n of a minimal parabolic (G/N)", "whittaker_nilradical:sl3"},
      {"torus_pair", "<alg>", "h = a Cartan subalgebra a_g + t_c (G/T)", "torus_pair:sl2"},
      {"block_sl", "<sl<n>|slc<n>>:<m>  (2 <= m < n)", "h = sl(m) in the upper-left block of sl(n)", "block_sl:sl3:2"},
  };
  return table;
}

const FamilyInfo* find_family(const std::string& id) {
  for (const auto& f : family_table())
    if (f.id == id) return &f;
  return nullptr;
}

Pair construct(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty() || !find_family(parts[0])) fail(ErrorCode::UnsupportedParams, "unknown family in '" + spec + "'");
  const std::string& id = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1)
      fail(ErrorCode::UnsupportedParams, id + " expects " + find_family(id)->schema + ", got '" + spec + "'");
  };
  if (id == "sl_n_R") {
    need(1);
    return group_case(spec, build_algebra("sl" + std::to_string(parse_count(parts[1], "n"))));
  }
  if (id == "sp_n_R") {
    need(1);
    return group_case(spec, build_algebra("sp" + std::to_string(parse_count(parts[1], "n"))));
  }
  if (id == "so_p_q" || id == "su_p_q") {
    need(2);
    const auto p = parse_count(parts[1], "p"), q = parse_count(parts[2], "q");
    return group_case(spec, build_algebra(id.substr(0, 2) + std::to_string(p) + "_" + std::to_string(q)));
  }
  if (id == "complex_simple_realified") {
    need(2);
    if (parts[1] != "sl" && parts[1] != "so" && parts[1] != "sp")
      fail(ErrorCode::UnsupportedParams, "complex_simple_realified type must be sl, so or sp");
    return group_case(spec, build_algebra(parts[1] + "c" + std::to_string(parse_count(parts[2], "n"))));
  }
  if (id == "direct_sum") {
    need(1);
    return group_case(spec, build_algebra(parts[1]));
  }
  if (id == "diagonal_pair" || id == "triple_diagonal") {
    need(1);
    return diagonal(spec, build_algebra(parts[1]), id == "diagonal_pair" ? 2 : 3);
  }
  if (id == "symmetric_pair_fixed_points") {
    if (parts.size() == 4 && parts[2] == "eta") return symmetric(spec, build_algebra(parts[1]), "eta:" + parts[3]);
    need(2);
    return symmetric(spec, build_algebra(parts[1]), parts[2]);
  }
  if (id == "whittaker_nilradical") {
    need(1);
    return whittaker(spec, build_algebra(parts[1]));
  }
  if (id == "torus_pair") {
    need(1);
    return torus_pair(spec, build_algebra(parts[1]));
  }
  need(2);
  return block_sl(spec, parts[1], parts[2]);
}

}  // namespace lietemper
