#pragma once

#include "numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hochkit {

// Power series in x, y, z truncated at fixed maximal exponents, with exact coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0, 0, 0) {}
  TruncatedSeries(int nx, int ny, int nz) : nx_(nx), ny_(ny), nz_(nz), c_((nx + 1) * (ny + 1) * (nz + 1), 0) {
    if (nx < 0 || ny < 0 || nz < 0) throw std::invalid_argument("negative truncation order");
  }

  static TruncatedSeries constant(const Rational& v, int nx, int ny, int nz) {
    TruncatedSeries s(nx, ny, nz);
    s.c_[0] = v;
    return s;
  }
  static TruncatedSeries monomial(int i, int j, int k, const Rational& v, int nx, int ny, int nz) {
    TruncatedSeries s(nx, ny, nz);
    if (i <= nx && j <= ny && k <= nz) s.at(i, j, k) = v;
    return s;
  }

  int order_x() const { return nx_; }
  int order_y() const { return ny_; }
  int order_z() const { return nz_; }

  const Rational& coeff(int i, int j, int k) const {
    static const Rational zero = 0;
    if (i < 0 || j < 0 || k < 0 || i > nx_ || j > ny_ || k > nz_) return zero;
    return c_[idx(i, j, k)];
  }
  Rational& at(int i, int j, int k) { return c_[idx(i, j, k)]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& v) {
    for (auto& x : c_) x *= v;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& v) { return a *= v; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_shape(b);
    TruncatedSeries r(a.nx_, a.ny_, a.nz_);
    for (int i = 0; i <= a.nx_; ++i)
      for (int j = 0; j <= a.ny_; ++j)
        for (int k = 0; k <= a.nz_; ++k) {
          const Rational& u = a.coeff(i, j, k);
          if (u == 0) continue;
          for (int p = 0; p + i <= a.nx_; ++p)
            for (int q = 0; q + j <= a.ny_; ++q)
              for (int s = 0; s + k <= a.nz_; ++s) {
                const Rational& w = b.coeff(p, q, s);
                if (w != 0) r.at(i + p, j + q, k + s) += u * w;
              }
        }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.nz_ == b.nz_ && a.c_ == b.c_;
  }

  // 1 / s for a series with nonzero constant term: (1/c) * sum of (1 - s/c)^k.
  TruncatedSeries inverse() const {
    if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    Rational c = c_[0];
    TruncatedSeries u = constant(1, nx_, ny_, nz_) - *this * (Rational(1) / c);
    TruncatedSeries sum = constant(1, nx_, ny_, nz_), pw = sum;
    for (int k = 1; k <= nx_ + ny_ + nz_; ++k) {
      pw *= u;
      sum += pw;
    }
    return sum * (Rational(1) / c);
  }

  // Coefficients with no y factor must vanish before substituting this series for y.
  bool y_free_part_is_zero() const {
    for (int i = 0; i <= nx_; ++i)
      for (int k = 0; k <= nz_; ++k)
        if (coeff(i, 0, k) != 0) return false;
    return true;
  }

  // this(x, g, z): substitute g for y.
  TruncatedSeries compose_y(const TruncatedSeries& g) const {
    same_shape(g);
    if (!g.y_free_part_is_zero()) throw std::domain_error("composition needs a substituted series without y-free terms");
    TruncatedSeries r(nx_, ny_, nz_), pw = constant(1, nx_, ny_, nz_);
    for (int j = 0; j <= ny_; ++j) {
      TruncatedSeries a(nx_, ny_, nz_);
      for (int i = 0; i <= nx_; ++i)
        for (int k = 0; k <= nz_; ++k) a.at(i, 0, k) = coeff(i, j, k);
      r += a * pw;
      pw *= g;
    }
    return r;
  }

 private:
  int idx(int i, int j, int k) const { return (i * (ny_ + 1) + j) * (nz_ + 1) + k; }
  void same_shape(const TruncatedSeries& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_ || nz_ != o.nz_) throw std::invalid_argument("series shapes differ");
  }
  int nx_, ny_, nz_;
  std::vector<Rational> c_;
};

// Root with zero constant term of a*S^2 + b*S + c = 0 by Newton iteration; b must be invertible.
inline TruncatedSeries solve_quadratic(const TruncatedSeries& a, const TruncatedSeries& b, const TruncatedSeries& c) {
  TruncatedSeries s(a.order_x(), a.order_y(), a.order_z());
  const int total = a.order_x() + a.order_y() + a.order_z();
  for (int step = 1; step <= total + 1; step *= 2) {
    TruncatedSeries f = a * s * s + b * s + c;
    TruncatedSeries df = a * s * Rational(2) + b;
    s -= f * df.inverse();
  }
  // Newton doubles the precision each step; one more pass to be safe.
  TruncatedSeries f = a * s * s + b * s + c;
  s -= f * (a * s * Rational(2) + b).inverse();
  return s;
}

namespace gf {

inline TruncatedSeries y(int ny, int nz) { return TruncatedSeries::monomial(0, 1, 0, 1, 0, ny, nz); }
inline TruncatedSeries z(int ny, int nz) { return TruncatedSeries::monomial(0, 0, 1, 1, 0, ny, nz); }
inline TruncatedSeries one(int ny, int nz) { return TruncatedSeries::constant(1, 0, ny, nz); }

// Catalan series C = y + C^2 (by leaves).
inline TruncatedSeries catalan(int ny) {
  auto Y = y(ny, 0);
  return solve_quadratic(one(ny, 0), one(ny, 0) * Rational(-1), Y);
}

// C^(i) = C(C^(i-1)), i >= 1.
inline TruncatedSeries catalan_iterate(int i, int ny) {
  if (i < 1) throw std::invalid_argument("iterate index starts at 1");
  auto C = catalan(ny);
  TruncatedSeries r = C;
  for (int k = 2; k <= i; ++k) r = C.compose_y(r);
  return r;
}

// Schroeder series: (z+1) S^2 - (1+yz) S + y = 0 (y counts leaves, z counts rank).
inline TruncatedSeries schroeder(int ny, int nz) {
  auto Y = y(ny, nz), Z = z(ny, nz), I = one(ny, nz);
  return solve_quadratic(Z + I, (I + Y * Z) * Rational(-1), Y);
}

// S~^(0) = y, S~^(1) = (1+z) S - yz, S~^(i+1) = S~^(i)(S~^(1)).
inline TruncatedSeries schroeder_tilde(int i, int ny, int nz) {
  auto Y = y(ny, nz), Z = z(ny, nz), I = one(ny, nz);
  if (i == 0) return Y;
  TruncatedSeries t1 = (I + Z) * schroeder(ny, nz) - Y * Z;
  TruncatedSeries r = t1;
  for (int k = 2; k <= i; ++k) r = r.compose_y(t1);
  return r;
}

// For fixed m: sum_k S(S~^(k), z) Surj(m,k) z^(m-k). Coefficient of y^(n+1) z^p counts
// rank-p painted trees with n+1 leaves.
inline TruncatedSeries painted_faces(int m, int ny, int nz) {
  auto S = schroeder(ny, nz);
  const TruncatedSeries t1 = schroeder_tilde(1, ny, nz);
  TruncatedSeries r(0, ny, nz), tk = gf::y(ny, nz);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) tk = tk.compose_y(t1);
    BigInt s = surjections(m, k);
    if (s == 0) continue;
    r += S.compose_y(tk) * TruncatedSeries::monomial(0, 0, m - k, Rational(s), 0, ny, nz);
  }
  return r;
}

// For fixed m: sum_k (1-y)^k (1-y(z+1)) / (1-y(z+2))^(k+1) Surj(m,k) z^(m-k).
inline TruncatedSeries shade_faces(int m, int ny, int nz) {
  auto Y = y(ny, nz), Z = z(ny, nz), I = one(ny, nz);
  TruncatedSeries inv = (I - Y * (Z + I * Rational(2))).inverse();
  TruncatedSeries base = (I - Y * (Z + I)) * inv;
  TruncatedSeries r(0, ny, nz), factor = base;
  for (int k = 0; k <= m; ++k) {
    BigInt s = surjections(m, k);
    if (s != 0) r += factor * TruncatedSeries::monomial(0, 0, m - k, Rational(s), 0, ny, nz);
    factor *= (I - Y) * inv;
  }
  return r;
}

}  // namespace gf

}  // namespace hochkit
