#include "hypcox/qspace.hpp"

#include <utility>

namespace hypcox {

bool QVector::is_zero() const {
  for (const auto& x : coords) {
    if (!x.is_zero()) return false;
  }
  return true;
}

QVector operator+(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) throw LinearAlgebraError("vector length mismatch");
  QVector r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
  return r;
}

QVector operator-(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) throw LinearAlgebraError("vector length mismatch");
  QVector r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= v[i];
  return r;
}

QVector operator*(const FieldScalar& s, const QVector& v) {
  QVector r = v;
  for (auto& x : r.coords) x *= s;
  return r;
}

QSpace::QSpace(std::vector<FieldScalar> diag) : diag_(std::move(diag)) {
  if (diag_.empty()) throw LinearAlgebraError("empty quadratic space");
  for (const auto& x : diag_) {
    const int s = x.sign();
    if (s == 0) throw LinearAlgebraError("degenerate diagonal form");
    if (s < 0) ++negatives_;
    if (x.d() != 0) {
      if (d_ != 0 && d_ != x.d()) throw FieldError("quadratic form mixes fields");
      d_ = x.d();
    }
  }
  if (negatives_ > 1) {
    throw LinearAlgebraError("form must be Lorentzian or positive definite");
  }
}

QSpace QSpace::lorentzian(std::size_t n) {
  std::vector<FieldScalar> diag(n + 1, FieldScalar(1));
  diag[0] = FieldScalar(-1);
  return QSpace(std::move(diag));
}

QSpace QSpace::euclidean(std::size_t n) { return QSpace(std::vector<FieldScalar>(n, FieldScalar(1))); }

FieldScalar inner(const QSpace& space, const QVector& u, const QVector& v) {
  if (u.size() != space.dim() || v.size() != space.dim()) {
    throw LinearAlgebraError("dimension mismatch: space " + std::to_string(space.dim()) +
                             ", vectors " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
  }
  FieldScalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    acc += space.diag()[i] * u[i] * v[i];
  }
  return acc;
}

QVector reflect(const QSpace& space, const QVector& root, const QVector& v) {
  const FieldScalar rr = norm(space, root);
  if (rr.sign() <= 0) throw LinearAlgebraError("reflection in a root of nonpositive norm");
  const FieldScalar rv = inner(space, root, v);
  if (rv.is_zero()) return v;
  return v - (FieldScalar(2) * rv / rr) * root;
}

Matrix gram(const QSpace& space, std::span<const QVector> vectors) {
  const std::size_t n = vectors.size();
  Matrix g(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      FieldScalar x = inner(space, vectors[i], vectors[j]);
      g(i, j) = x;
      if (j != i) g(j, i) = std::move(x);
    }
  }
  return g;
}

std::vector<FieldScalar> solve(const Matrix& a, std::span<const FieldScalar> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw LinearAlgebraError("solve: shape mismatch");
  Matrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  // Bareiss elimination: every division below is exact.
  FieldScalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) throw LinearAlgebraError("singular system");
    if (p != k) {
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(p, j), m(k, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = FieldScalar();
    }
    prev = m(k, k);
  }
  std::vector<FieldScalar> x(n);
  for (std::size_t i = n; i-- > 0;) {
    FieldScalar acc = m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  return x;
}

QVector span_project(const QSpace& space, std::span<const QVector> span, const QVector& v) {
  QVector out{std::vector<FieldScalar>(space.dim())};
  if (span.empty()) return out;
  const Matrix g = gram(space, span);
  std::vector<FieldScalar> rhs;
  rhs.reserve(span.size());
  for (const auto& s : span) rhs.push_back(inner(space, s, v));
  std::vector<FieldScalar> c;
  try {
    c = solve(g, rhs);
  } catch (const LinearAlgebraError&) {
    throw LinearAlgebraError("degenerate Gram matrix for the projection span");
  }
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (!c[i].is_zero()) out = out + c[i] * span[i];
  }
  return out;
}

QVector orth_project(const QSpace& space, std::span<const QVector> span, const QVector& v) {
  return v - span_project(space, span, v);
}

std::vector<QVector> null_space(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const FieldScalar inv = FieldScalar(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldScalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v{std::vector<FieldScalar>(cols)};
    v[free] = FieldScalar(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

QVector clear_denominators(const QVector& v) {
  mpz_class l = 1;
  for (const auto& x : v.coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.c().get_mpz_t());
  QVector r = FieldScalar(l) * v;
  mpz_class g = 0;
  for (const auto& x : r.coords) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.a().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.b().get_mpz_t());
  }
  if (g > 1) r = FieldScalar(mpq_class(1, g)) * r;
  return r;
}

std::vector<QVector> orthogonal_basis(const QSpace& space, std::vector<QVector> basis) {
  std::vector<QVector> out;
  while (!basis.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < basis.size() && !pick; ++i) {
      if (!norm(space, basis[i]).is_zero()) pick = i;
    }
    if (!pick) {
      // Every remaining vector is isotropic; combine a non-orthogonal pair.
      for (std::size_t i = 0; i < basis.size() && !pick; ++i) {
        for (std::size_t j = i + 1; j < basis.size() && !pick; ++j) {
          if (!inner(space, basis[i], basis[j]).is_zero()) {
            basis[i] = basis[i] + basis[j];
            pick = i;
          }
        }
      }
    }
    if (!pick) throw LinearAlgebraError("orthogonal_basis: degenerate subspace");
    QVector e = basis[*pick];
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(*pick));
    const FieldScalar ee = norm(space, e);
    for (auto& v : basis) {
      const FieldScalar ve = inner(space, v, e);
      if (!ve.is_zero()) v = v - (ve / ee) * e;
    }
    out.push_back(clear_denominators(e));
  }
  return out;
}

bool positively_proportional(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) return false;
  std::optional<FieldScalar> ratio;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return false;
    if (u[i].is_zero()) continue;
    FieldScalar r = v[i] / u[i];
    if (!ratio) {
      if (r.sign() <= 0) return false;
      ratio = std::move(r);
    } else if (r != *ratio) {
      return false;
    }
  }
  return ratio.has_value();
}

GramRealization realize_gram(const Matrix& g) {
  const std::size_t k = g.rows();
  auto bilinear = [&](const std::vector<FieldScalar>& x, const std::vector<FieldScalar>& y) {
    FieldScalar acc;
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (y[j].is_zero() || g(i, j).is_zero()) continue;
        acc += x[i] * g(i, j) * y[j];
      }
    }
    return acc;
  };
  std::vector<std::vector<FieldScalar>> pending;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<FieldScalar> e(k);
    e[i] = FieldScalar(1);
    pending.push_back(std::move(e));
  }
  std::vector<std::vector<FieldScalar>> frame;
  std::vector<FieldScalar> norms;
  while (!pending.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < pending.size() && !pick; ++i) {
      if (!bilinear(pending[i], pending[i]).is_zero()) pick = i;
    }
    for (std::size_t i = 0; i < pending.size() && !pick; ++i) {
      for (std::size_t j = i + 1; j < pending.size() && !pick; ++j) {
        if (!bilinear(pending[i], pending[j]).is_zero()) {
          for (std::size_t t = 0; t < k; ++t) pending[i][t] += pending[j][t];
          pick = i;
        }
      }
    }
    if (!pick) break;  // the rest lies in the radical
    auto f = pending[*pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(*pick));
    const FieldScalar ff = bilinear(f, f);
    for (auto& v : pending) {
      const FieldScalar c = bilinear(v, f) / ff;
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < k; ++t) v[t] -= c * f[t];
    }
    frame.push_back(std::move(f));
    norms.push_back(ff);
  }
  GramRealization out{QSpace(norms), {}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<FieldScalar> e(k);
    e[i] = FieldScalar(1);
    QVector v{std::vector<FieldScalar>(frame.size())};
    for (std::size_t j = 0; j < frame.size(); ++j) v[j] = bilinear(e, frame[j]) / norms[j];
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace hypcox
