#include "qlorentz/matrix.hpp"

namespace qlorentz {

LMatrix l_identity(std::size_t n) {
  LMatrix m(n, n, Laurent());
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Laurent(1);
  return m;
}

LMatrix l_diag(const std::vector<Laurent>& d) {
  LMatrix m(d.size(), d.size(), Laurent());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Laurent trace(const LMatrix& m) {
  Laurent t;
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
  return t;
}

NCPoly trace(const NCMatrix& m) {
  NCPoly t = m(0, 0);
  for (std::size_t k = 1; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
  return t;
}

namespace {

LMatrix minor_of(const LMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  LMatrix out(n - 1, n - 1, Laurent());
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

Laurent determinant(const LMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Laurent det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Laurent cof = m(0, c) * determinant(minor_of(m, 0, c));
    if (c % 2) det -= cof; else det += cof;
  }
  return det;
}

LMatrix inverse(const LMatrix& m) {
  const std::size_t n = m.rows();
  Laurent det = determinant(m);
  if (!det.is_monomial()) throw std::domain_error("matrix is not invertible over the Laurent ring: det = " + det.to_string());
  Laurent det_inv = det.inverse_monomial();
  if (n == 1) return LMatrix(1, 1, det_inv);
  LMatrix inv(n, n, Laurent());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Laurent cof = determinant(minor_of(m, c, r));
      inv(r, c) = ((r + c) % 2 ? -cof : cof) * det_inv;
    }
  return inv;
}

NCMatrix nc_identity(const AlgebraPtr& alg, std::size_t n) { return lift(l_identity(n), alg); }

NCMatrix lift(const LMatrix& m, const AlgebraPtr& alg) {
  return m.map([&](const Laurent& x) { return NCPoly(alg, x); });
}

NCMatrix generator_matrix(const AlgebraPtr& alg, const std::vector<std::string>& names, std::size_t rows,
                          std::size_t cols) {
  std::vector<NCPoly> entries;
  for (const auto& n : names) entries.push_back(NCPoly::generator(alg, n));
  return NCMatrix(rows, cols, std::move(entries));
}

NCMatrix operator*(const LMatrix& x, const NCMatrix& y) { return lift(x, y(0, 0).algebra()) * y; }
NCMatrix operator*(const NCMatrix& x, const LMatrix& y) { return x * lift(y, x(0, 0).algebra()); }

NCMatrix dagger(const NCMatrix& m) { return m.map([](const NCPoly& p) { return star(p); }).transpose(); }

NCMatrix reduce_unimodular(const NCMatrix& m) {
  return m.map([](const NCPoly& p) { return reduce_unimodular(p); });
}

bool is_zero(const NCMatrix& m) {
  for (const auto& p : m.data())
    if (!p.is_zero()) return false;
  return true;
}

bool is_numeric(const NCMatrix& m) {
  for (const auto& p : m.data())
    if (!p.is_scalar()) return false;
  return true;
}

namespace {

template <class M>
std::string render(const M& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",\n [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += m(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const LMatrix& m) { return render(m); }
std::string to_string(const NCMatrix& m) { return render(m); }

}  // namespace qlorentz
