#include "conjgen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <iomanip>

#include "conjgen/error.hpp"

namespace conjgen {

const char* to_string(MatrixKind k) { return k == MatrixKind::adjacency ? "adjacency" : "laplacian"; }

const char* to_string(EigenMethod m) {
  switch (m) {
    case EigenMethod::dense:
      return "dense";
    case EigenMethod::iterative:
      return "iterative";
    case EigenMethod::automatic:
      return "automatic";
  }
  return "automatic";
}

std::vector<std::pair<double, std::size_t>> SpectrumReport::grouped(double gap) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) < gap)
      ++out.back().second;
    else
      out.push_back({v, 1});
  }
  return out;
}

std::string SpectrumReport::to_csv(double gap) const {
  std::ostringstream os;
  os << "kind,k,eigenvalue,multiplicity,residual\n";
  std::size_t i = 0, idx = 0;
  for (const auto& [v, mult] : grouped(gap)) {
    double res = 0;
    for (std::size_t j = 0; j < mult; ++j) res = std::max(res, residuals[idx + j]);
    idx += mult;
    os << to_string(kind) << ',' << ++i << ',' << std::fixed << std::setprecision(10)
       << (std::abs(v) < 5e-11 ? 0.0 : v) << ',' << mult << ',' << std::scientific << std::setprecision(2)
       << res << std::defaultfloat << '\n';
  }
  return os.str();
}

DenseEigen jacobi_eigen(std::vector<std::vector<double>> a, double tol) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  double scale = 0;
  for (const auto& row : a)
    for (double x : row) scale = std::max(scale, std::abs(x));
  if (scale == 0) scale = 1;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (std::sqrt(off) <= tol * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });
  DenseEigen out;
  for (std::size_t j : order) {
    out.values.push_back(a[j][j]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][j];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

namespace {

using Vec = std::vector<double>;

void apply(const SimpleGraph& g, MatrixKind kind, const Vec& x, Vec& y) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    double s = 0;
    for (std::size_t w : g.neighbors(u)) s += x[w];
    y[u] = kind == MatrixKind::adjacency ? s : static_cast<double>(g.degree(u)) * x[u] - s;
  }
}

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

// Modified Gram-Schmidt against `locked` and then within `block`.
void orthonormalize(std::vector<Vec>& block, const std::vector<Vec>& locked, std::mt19937_64& rng) {
  for (std::size_t j = 0; j < block.size(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& q : locked) {
        const double c = dot(q, block[j]);
        for (std::size_t i = 0; i < q.size(); ++i) block[j][i] -= c * q[i];
      }
      for (std::size_t k = 0; k < j; ++k) {
        const double c = dot(block[k], block[j]);
        for (std::size_t i = 0; i < block[j].size(); ++i) block[j][i] -= c * block[k][i];
      }
    }
    double nv = norm(block[j]);
    if (nv < 1e-12) {
      for (double& x : block[j]) x = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
      --j;  // retry this column with a fresh vector
      continue;
    }
    for (double& x : block[j]) x /= nv;
  }
}

SpectrumReport dense_spectrum(const SimpleGraph& g, MatrixKind kind, std::size_t k, double tol) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w : g.neighbors(u)) m[u][w] = kind == MatrixKind::adjacency ? 1.0 : -1.0;
    if (kind == MatrixKind::laplacian) m[u][u] = static_cast<double>(g.degree(u));
  }
  const DenseEigen e = jacobi_eigen(m);
  SpectrumReport r{kind, EigenMethod::dense, tol, {}, {}, 0};
  Vec y(n);
  for (std::size_t j = 0; j < std::min(k, n); ++j) {
    apply(g, kind, e.vectors[j], y);
    for (std::size_t i = 0; i < n; ++i) y[i] -= e.values[j] * e.vectors[j][i];
    r.values.push_back(e.values[j]);
    r.residuals.push_back(norm(y) / norm(e.vectors[j]));
  }
  return r;
}

SpectrumReport iterative_spectrum(const SimpleGraph& g, MatrixKind kind, std::size_t k, double tol,
                                  bool deflate) {
  const std::size_t n = g.vertex_count();
  std::size_t maxdeg = 0;
  for (std::size_t u = 0; u < n; ++u) maxdeg = std::max(maxdeg, g.degree(u));
  // A + dI (or L itself) is positive semidefinite, so the dominant invariant
  // subspace belongs to the largest eigenvalues.
  const double shift = kind == MatrixKind::adjacency ? static_cast<double>(maxdeg) : 0.0;

  SpectrumReport r{kind, EigenMethod::iterative, tol, {}, {}, 0};
  std::vector<Vec> locked;
  const long long d = regular_degree(g);
  if (deflate && kind == MatrixKind::adjacency && d >= 0 && is_connected(g)) {
    Vec ones(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    apply(g, kind, ones, y);
    for (std::size_t i = 0; i < n; ++i) y[i] -= static_cast<double>(d) * ones[i];
    locked.push_back(std::move(ones));
    r.values.push_back(static_cast<double>(d));
    r.residuals.push_back(norm(y));
  }
  if (r.values.size() >= k) return r;
  const std::size_t want = std::min(k, n) - r.values.size();
  const std::size_t p = std::min(n - locked.size(), want + 8);

  std::mt19937_64 rng(0x5eedULL);
  std::vector<Vec> block(p, Vec(n));
  for (auto& v : block)
    for (double& x : v) x = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
  orthonormalize(block, locked, rng);

  std::vector<Vec> ab(p, Vec(n));
  std::vector<double> ritz(p), res(p);
  for (std::size_t it = 1; it <= iteration_cap; ++it) {
    for (std::size_t j = 0; j < p; ++j) {
      apply(g, kind, block[j], ab[j]);
      for (std::size_t i = 0; i < n; ++i) ab[j][i] += shift * block[j][i];
    }
    // Rayleigh-Ritz on span(block).
    std::vector<std::vector<double>> h(p, std::vector<double>(p));
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a; b < p; ++b) h[a][b] = h[b][a] = dot(block[a], ab[b]);
    const DenseEigen small = jacobi_eigen(h, 1e-15);
    std::vector<Vec> nb(p, Vec(n, 0.0)), nab(p, Vec(n, 0.0));
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t a = 0; a < p; ++a) {
        const double c = small.vectors[j][a];
        for (std::size_t i = 0; i < n; ++i) {
          nb[j][i] += c * block[a][i];
          nab[j][i] += c * ab[a][i];
        }
      }
    bool done = true;
    for (std::size_t j = 0; j < p; ++j) {
      ritz[j] = small.values[j];
      Vec rv(n);
      for (std::size_t i = 0; i < n; ++i) rv[i] = nab[j][i] - ritz[j] * nb[j][i];
      res[j] = norm(rv) / norm(nb[j]);
      if (j < want && res[j] > tol) done = false;
    }
    if (done) {
      for (std::size_t j = 0; j < want; ++j) {
        r.values.push_back(ritz[j] - shift);
        r.residuals.push_back(res[j]);
      }
      r.iterations = it;
      return r;
    }
    block = std::move(nab);  // next power step: (M + shift) applied to the Ritz vectors
    orthonormalize(block, locked, rng);
  }
  std::ostringstream os;
  os << "subspace iteration did not converge in " << iteration_cap << " steps; worst residual "
     << *std::max_element(res.begin(), res.begin() + static_cast<std::ptrdiff_t>(want));
  throw NonConvergence(os.str());
}

}  // namespace

SpectrumReport spectrum_topk(const SimpleGraph& g, MatrixKind kind, std::size_t k, double tol,
                             EigenMethod method, bool deflate) {
  if (k < 1) throw RangeError("k must be >= 1");
  if (g.vertex_count() == 0) throw RangeError("empty graph has no spectrum");
  if (method == EigenMethod::automatic)
    method = g.vertex_count() <= dense_limit ? EigenMethod::dense : EigenMethod::iterative;
  SpectrumReport r = method == EigenMethod::dense ? dense_spectrum(g, kind, k, tol)
                                                  : iterative_spectrum(g, kind, k, tol, deflate);
  for (double res : r.residuals)
    if (!(res <= tol)) throw NonConvergence("eigenpair residual " + std::to_string(res) + " above tolerance");
  return r;
}

RegularSpectrumCheck check_regular_spectrum(const SimpleGraph& g, double tol) {
  RegularSpectrumCheck c{regular_degree(g), 0, 0, false, ""};
  if (c.degree < 0) {
    c.detail = "graph is not regular";
    return c;
  }
  if (!is_connected(g)) {
    c.detail = "graph is not connected";
    return c;
  }
  const auto r = spectrum_topk(g, MatrixKind::adjacency, 2, tol);
  c.lambda1 = r.values[0];
  c.lambda2 = r.values.size() > 1 ? r.values[1] : r.values[0];
  const bool top = std::abs(c.lambda1 - static_cast<double>(c.degree)) <= tol;
  const bool gap = g.vertex_count() == 1 || c.lambda2 < c.lambda1 - tol;
  c.ok = top && gap;
  std::ostringstream os;
  os << "lambda1=" << c.lambda1 << " degree=" << c.degree << " lambda2=" << c.lambda2;
  if (!top) os << "; lambda1 differs from the degree";
  if (!gap) os << "; lambda2 is not below lambda1";
  c.detail = os.str();
  return c;
}

}  // namespace conjgen
