#include "knotscope/invariants.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "knotscope/error.hpp"
#include "union_find.hpp"

namespace knotscope {

LaurentPoly AlexanderPolynomial::to_laurent() const {
  LaurentPoly p;
  for (int i = -g; i <= g; ++i) p += LaurentPoly::monomial(a(i), i);
  return p;
}

BigInt AlexanderPolynomial::determinant() const {
  BigInt v = to_laurent().evaluate_at_unit(-1);
  return v < 0 ? BigInt(-v) : v;
}

Matrix<LaurentPoly> alexander_matrix(const Diagram& d) {
  const auto n = d.crossing_count();
  detail::UnionFind uf(d.arcs().size());
  for (const auto& x : d.crossings()) uf.unite(x.arcs[1], x.arcs[3]);
  std::map<std::size_t, std::size_t> column;
  for (const auto& arc : d.arcs()) column.emplace(uf.find(arc.id), 0);
  std::size_t next = 0;
  for (auto& [root, col] : column) col = next++;
  auto gen = [&](int arc) { return column.at(uf.find(arc)); };

  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly one_minus_t = LaurentPoly(1) - t;
  Matrix<LaurentPoly> m(n, std::vector<LaurentPoly>(column.size()));
  for (const auto& x : d.crossings()) {
    auto& row = m[static_cast<std::size_t>(x.id)];
    row[gen(x.arcs[1])] += one_minus_t;
    row[gen(x.arcs[kUnderIn])] += x.sign > 0 ? t : LaurentPoly(-1);
    row[gen(x.arcs[kUnderOut])] += x.sign > 0 ? LaurentPoly(-1) : t;
  }
  return m;
}

LaurentPoly alexander_raw(const Diagram& d) {
  if (d.crossing_count() == 0) return LaurentPoly(1);
  auto m = alexander_matrix(d);
  // A component that never passes under can be lifted off the rest.
  if (m.front().size() != m.size()) return LaurentPoly();
  m.pop_back();
  for (auto& row : m) row.pop_back();
  auto det = bareiss_determinant(std::move(m), [](const LaurentPoly& a, const LaurentPoly& b) { return a.exact_div(b); });
  if (det.is_zero() && d.component_count() == 1)
    throw Error(ErrorCode::ZeroDeterminantUnexpected, "Alexander determinant of a knot vanished");
  return det;
}

AlexanderPolynomial normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::NotSymmetrizable, "zero polynomial");
  const int span = p.max_degree() - p.min_degree();
  if (span % 2 != 0) throw Error(ErrorCode::NotSymmetrizable, "odd span " + std::to_string(span));
  const int g = span / 2;
  auto q = p.shifted(-p.min_degree() - g);
  const BigInt at_one = q.evaluate_at_unit(1);
  if (at_one != 1 && at_one != -1)
    throw Error(ErrorCode::NotSymmetrizable, "value at 1 is " + at_one.str() + ", not a unit");
  if (at_one == -1) q = -q;
  AlexanderPolynomial out;
  out.g = g;
  out.coeffs.clear();
  for (int i = -g; i <= g; ++i) {
    if (q.coeff(i) != q.coeff(-i)) throw Error(ErrorCode::NotSymmetrizable, to_string(p) + " is not symmetric");
    out.coeffs.push_back(q.coeff(i));
  }
  return out;
}

AlexanderPolynomial alexander_polynomial(const Diagram& d) { return normalize(alexander_raw(d)); }

int genus_alternating(const AlexanderPolynomial& a) { return a.g; }

bool is_fibered_alternating(const AlexanderPolynomial& a) { return a.top() == 1 || a.top() == -1; }

int matrix_signature(const Matrix<BigInt>& m) {
  const std::size_t n = m.size();
  Matrix<BigRational> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // Zero diagonal: a[i][i] + 2 a[i][j] + a[j][j] after adding j to i.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }
    swap_index(p, k);
    const BigRational pivot = a[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const BigRational f = a[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  return sig;
}

namespace {

struct Coloring {
  std::vector<bool> white;  // by face id
  std::vector<int> index;   // position among white faces, -1 for black
  int white_count = 0;
};

Coloring color_faces(const Diagram& d, bool face0_white) {
  const auto f = d.faces().size();
  std::vector<int> color(f, -1);
  std::vector<std::vector<int>> adj(f);
  for (const auto& arc : d.arcs()) {
    adj[static_cast<std::size_t>(d.left_face(arc.id))].push_back(d.right_face(arc.id));
    adj[static_cast<std::size_t>(d.right_face(arc.id))].push_back(d.left_face(arc.id));
  }
  if (d.crossing_count() == 0) adj = {{1}, {0}};
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      auto& cv = color[static_cast<std::size_t>(v)];
      if (cv == -1) {
        cv = 1 - color[static_cast<std::size_t>(u)];
        stack.push_back(v);
      } else if (cv == color[static_cast<std::size_t>(u)]) {
        throw Error(ErrorCode::ImproperColoring, "faces " + std::to_string(u) + " and " + std::to_string(v) +
                                                     " share an arc and a color");
      }
    }
  }
  Coloring c;
  c.white.resize(f);
  c.index.assign(f, -1);
  for (std::size_t i = 0; i < f; ++i) {
    c.white[i] = (color[i] == 0) == face0_white;
    if (c.white[i]) c.index[i] = c.white_count++;
  }
  return c;
}

// First white corner at a crossing (0 or 1); the other is opposite.
int white_corner(const Diagram& d, const Coloring& c, const Crossing& x) {
  return c.white[static_cast<std::size_t>(d.corner_face(x.id, 0))] ? 0 : 1;
}

int incidence(int white_corner) { return white_corner == 1 ? -1 : +1; }

}  // namespace

Matrix<BigInt> goeritz_matrix(const Diagram& d, bool face0_white) {
  const auto c = color_faces(d, face0_white);
  const auto w = static_cast<std::size_t>(c.white_count);
  Matrix<BigInt> g(w, std::vector<BigInt>(w));
  for (const auto& x : d.crossings()) {
    const int k = white_corner(d, c, x);
    const auto i = static_cast<std::size_t>(c.index[static_cast<std::size_t>(d.corner_face(x.id, k))]);
    const auto j = static_cast<std::size_t>(c.index[static_cast<std::size_t>(d.corner_face(x.id, k + 2))]);
    if (i == j) continue;
    const int eta = incidence(k);
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  if (w == 0) return g;
  g.erase(g.begin());
  for (auto& row : g) row.erase(row.begin());
  return g;
}

int gordon_litherland_mu(const Diagram& d, bool face0_white) {
  const auto c = color_faces(d, face0_white);
  int mu = 0;
  for (const auto& x : d.crossings()) {
    const int k = white_corner(d, c, x);
    // Black corners merged by the oriented smoothing.
    if (!x.corner_is_merged(k)) mu += incidence(k);
  }
  return mu;
}

int signature(const Diagram& d, bool face0_white) {
  return matrix_signature(goeritz_matrix(d, face0_white)) - gordon_litherland_mu(d, face0_white);
}

int tau_alternating(const Diagram& d) { return -signature(d) / 2; }

bool is_sqp_fibered(const Diagram& d) {
  const auto a = alexander_polynomial(d);
  return is_fibered_alternating(a) && tau_alternating(d) == genus_alternating(a);
}

InvariantReport invariant_report(const Diagram& d) {
  if (d.component_count() != 1)
    throw Error(ErrorCode::NotKnot, "diagram has " + std::to_string(d.component_count()) + " components");
  if (!is_alternating(d)) throw Error(ErrorCode::NotAlternating, "diagram is not alternating");
  InvariantReport r;
  r.alexander = alexander_polynomial(d);
  r.genus = genus_alternating(r.alexander);
  r.fibered = is_fibered_alternating(r.alexander);
  r.signature = signature(d);
  r.tau_alternating = -r.signature / 2;
  r.sqp_fibered = r.fibered && r.tau_alternating == r.genus;
  r.determinant = r.alexander.determinant();
  return r;
}

}  // namespace knotscope
