// Exact linear algebra over the localization of Q at a prime p:
// valuations, small matrices, column reduction, Cartan decomposition,
// relative position of lattices. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lps {

using Q = mpq_class;
using Z = mpz_class;

// +infinity sentinel for valuation(0).
inline constexpr int VAL_INF = INT_MAX;

// p^e as an exact rational (e may be negative).
inline Q pow_q(int p, int e) {
  Z num = 1;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e < 0 ? -e : e));
  Q out;
  if (e >= 0)
    out = Q(num);
  else
    out = Q(1) / Q(num);
  out.canonicalize();
  return out;
}

inline Z pow_z(int p, int e) {
  if (e < 0) throw std::invalid_argument("pow_z: negative exponent");
  Z out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return out;
}

// p-adic valuation of an exact rational; valuation(0) = VAL_INF.
inline int valuation(const Q& x, int p) {
  if (x == 0) return VAL_INF;
  Z junk;
  Z pz = p;
  unsigned long vn = mpz_remove(junk.get_mpz_t(), x.get_num().get_mpz_t(),
                                pz.get_mpz_t());
  unsigned long vd = mpz_remove(junk.get_mpz_t(), x.get_den().get_mpz_t(),
                                pz.get_mpz_t());
  return static_cast<int>(vn) - static_cast<int>(vd);
}

// Dense n x n matrix of exact rationals, n in {2, 3}.
struct Mat {
  int n = 0;
  std::vector<Q> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, Q(0)) {}

  Q& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Q& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

inline Mat mul(const Mat& A, const Mat& B) {
  if (A.n != B.n) throw std::invalid_argument("mul: dimension mismatch");
  Mat C(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      Q acc = 0;
      for (int t = 0; t < A.n; ++t) acc += A.at(i, t) * B.at(t, j);
      C.at(i, j) = acc;
    }
  return C;
}

inline Q det(const Mat& A) {
  if (A.n == 2) return A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
  if (A.n == 3) {
    return A.at(0, 0) * (A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1)) -
           A.at(0, 1) * (A.at(1, 0) * A.at(2, 2) - A.at(1, 2) * A.at(2, 0)) +
           A.at(0, 2) * (A.at(1, 0) * A.at(2, 1) - A.at(1, 1) * A.at(2, 0));
  }
  throw std::invalid_argument("det: unsupported dimension");
}

struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Mat inverse(const Mat& A) {
  Q d = det(A);
  if (d == 0) throw singular_matrix_error("inverse: singular matrix");
  Mat B(A.n);
  if (A.n == 2) {
    B.at(0, 0) = A.at(1, 1) / d;
    B.at(0, 1) = -A.at(0, 1) / d;
    B.at(1, 0) = -A.at(1, 0) / d;
    B.at(1, 1) = A.at(0, 0) / d;
    return B;
  }
  // 3x3 adjugate.
  const Q &a = A.at(0, 0), &b = A.at(0, 1), &c = A.at(0, 2);
  const Q &e = A.at(1, 0), &f = A.at(1, 1), &g = A.at(1, 2);
  const Q &h = A.at(2, 0), &i = A.at(2, 1), &j = A.at(2, 2);
  B.at(0, 0) = (f * j - g * i) / d;
  B.at(0, 1) = (c * i - b * j) / d;
  B.at(0, 2) = (b * g - c * f) / d;
  B.at(1, 0) = (g * h - e * j) / d;
  B.at(1, 1) = (a * j - c * h) / d;
  B.at(1, 2) = (c * e - a * g) / d;
  B.at(2, 0) = (e * i - f * h) / d;
  B.at(2, 1) = (b * h - a * i) / d;
  B.at(2, 2) = (a * f - b * e) / d;
  return B;
}

// Do the columns of A and B span the same O-lattice?  True iff both
// change-of-basis matrices are integral at p.
inline bool lattice_equal(const Mat& A, const Mat& B, int p) {
  Mat X = mul(inverse(A), B);
  Mat Y = mul(inverse(B), A);
  for (const Q& x : X.a)
    if (valuation(x, p) < 0) return false;
  for (const Q& y : Y.a)
    if (valuation(y, p) < 0) return false;
  return true;
}

// Upper-triangularize by O-linear column operations, preserving the column
// span. Working rows bottom-to-top; pivot = minimal-valuation entry in the
// working row among active columns, ties broken leftmost.
inline Mat column_reduce_upper(Mat M, int p) {
  const int n = M.n;
  for (int i = n - 1; i >= 0; --i) {
    int piv = -1;
    long pv = static_cast<long>(VAL_INF) + 1;
    for (int j = 0; j <= i; ++j) {
      long v = valuation(M.at(i, j), p);
      if (v < pv) {
        pv = v;
        piv = j;
      }
    }
    if (piv < 0 || pv >= VAL_INF)
      throw singular_matrix_error("column_reduce_upper: singular matrix");
    if (piv != i)
      for (int r = 0; r < n; ++r) std::swap(M.at(r, piv), M.at(r, i));
    for (int j = 0; j < i; ++j) {
      if (M.at(i, j) != 0) {
        Q t = M.at(i, j) / M.at(i, i);  // valuation >= 0 by pivot choice
        for (int r = 0; r < n; ++r) M.at(r, j) -= t * M.at(r, i);
      }
    }
  }
  return M;
}

struct Cartan {
  Mat k1, t, k2;  // N = k1 * t * k2
};

// Cartan decomposition of an invertible 2x2 matrix: N = k1 t k2 with
// k1, k2 in GL2(O) (entries in O, unit determinant) and t = diag(t1, t2),
// v(t1) >= v(t2).
inline Cartan cartan2(const Mat& N, int p) {
  if (N.n != 2) throw std::invalid_argument("cartan2: need 2x2");
  if (det(N) == 0) throw singular_matrix_error("cartan2: singular matrix");
  // Locate the global minimal-valuation entry.
  int bi = 0, bj = 0;
  long bv = static_cast<long>(VAL_INF) + 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long v = valuation(N.at(i, j), p);
      if (v < bv) {
        bv = v;
        bi = i;
        bj = j;
      }
    }
  Mat w(2);
  w.at(0, 1) = 1;
  w.at(1, 0) = 1;
  Mat A = N, k1 = Mat::identity(2), k2 = Mat::identity(2);
  if (bi == 1) {
    A = mul(w, A);
    k1 = w;
  }
  if (bj == 1) {
    A = mul(A, w);
    k2 = w;
  }
  // Pivot at (0,0) has minimal valuation; eliminate below and to the right.
  Q t21 = A.at(1, 0) / A.at(0, 0);  // in O
  Mat L = Mat::identity(2);
  L.at(1, 0) = t21;
  // A = L * A'  =>  absorb L into k1.
  A.at(1, 0) -= t21 * A.at(0, 0);
  A.at(1, 1) -= t21 * A.at(0, 1);
  k1 = mul(k1, L);
  Q t12 = A.at(0, 1) / A.at(0, 0);  // in O
  Mat R = Mat::identity(2);
  R.at(0, 1) = t12;
  A.at(0, 1) -= t12 * A.at(0, 0);
  k2 = mul(R, k2);
  // A = diag(x, y) with v(x) <= v(y); swap so v(t1) >= v(t2).
  Cartan out;
  out.t = Mat(2);
  out.t.at(0, 0) = A.at(1, 1);
  out.t.at(1, 1) = A.at(0, 0);
  out.k1 = mul(k1, w);
  out.k2 = mul(w, k2);
  return out;
}

// Elementary-divisor exponents of L2 relative to L1, sorted descending.
// Computed from valuations of gcds of i x i minors of L1^{-1} L2.
inline std::vector<int> relative_position(const Mat& L1, const Mat& L2,
                                          int p) {
  if (L1.n != L2.n) throw std::invalid_argument("relative_position: dims");
  Mat A = mul(inverse(L1), L2);
  const int n = A.n;
  // dvals[i] = min valuation over (i+1)x(i+1) minors.
  std::vector<long> dvals(n, VAL_INF);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dvals[0] = std::min(dvals[0], static_cast<long>(valuation(A.at(i, j), p)));
  if (n == 2) {
    dvals[1] = valuation(det(A), p);
  } else {
    // 2x2 minors.
    for (int i1 = 0; i1 < 3; ++i1)
      for (int i2 = i1 + 1; i2 < 3; ++i2)
        for (int j1 = 0; j1 < 3; ++j1)
          for (int j2 = j1 + 1; j2 < 3; ++j2) {
            Q m = A.at(i1, j1) * A.at(i2, j2) - A.at(i1, j2) * A.at(i2, j1);
            dvals[1] = std::min(dvals[1], static_cast<long>(valuation(m, p)));
          }
    dvals[2] = valuation(det(A), p);
  }
  std::vector<int> out(n);
  long prev = 0;
  // Smallest exponent first from successive minor gcds, then reverse.
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(dvals[i] - prev);
    prev = dvals[i];
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

}  // namespace lps
