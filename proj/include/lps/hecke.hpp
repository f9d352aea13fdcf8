// The dual-torus character ring, the five-generator spherical Hecke algebra,
// the Satake transform on generators, the torus-side degree-6 polynomial, and
// the explicit Hecke polynomial with coefficients in the Hecke algebra.
#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lps/qpoly.hpp"

namespace lps {

// Exponent vector (a1,a2,a3; b1,b2) for x1^a1 x2^a2 x3^a3 y1^b1 y2^b2
// (torus side), or (e1..e5) for t_g1^e1 t_g2^e2 t_g3^e3 t_h1^e4 t_h2^e5
// (Hecke side).
using Expo5 = std::array<int, 5>;

template <class Tag>
struct MonomialAlgebra {
  std::map<Expo5, QPoly> c;

  static MonomialAlgebra one() {
    MonomialAlgebra out;
    out.c[{0, 0, 0, 0, 0}] = QPoly::constant(1);
    return out;
  }
  static MonomialAlgebra monomial(const Expo5& e, QPoly coeff) {
    MonomialAlgebra out;
    if (!coeff.is_zero()) out.c[e] = std::move(coeff);
    return out;
  }

  bool is_zero() const { return c.empty(); }
  bool operator==(const MonomialAlgebra& o) const { return c == o.c; }

  MonomialAlgebra& operator+=(const MonomialAlgebra& o) {
    for (const auto& [e, v] : o.c) {
      auto it = c.find(e);
      if (it == c.end()) {
        c.emplace(e, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
      }
    }
    return *this;
  }
  friend MonomialAlgebra operator+(MonomialAlgebra a,
                                   const MonomialAlgebra& b) {
    return a += b;
  }
  MonomialAlgebra operator-() const {
    MonomialAlgebra out;
    for (const auto& [e, v] : c) out.c[e] = -v;
    return out;
  }
  friend MonomialAlgebra operator-(MonomialAlgebra a,
                                   const MonomialAlgebra& b) {
    return a += -b;
  }
  MonomialAlgebra& operator-=(const MonomialAlgebra& o) { return *this += -o; }
  friend MonomialAlgebra operator*(const MonomialAlgebra& a,
                                   const MonomialAlgebra& b) {
    MonomialAlgebra out;
    for (const auto& [e1, v1] : a.c)
      for (const auto& [e2, v2] : b.c) {
        Expo5 e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3],
                e1[4] + e2[4]};
        QPoly prod = v1 * v2;
        auto it = out.c.find(e);
        if (it == out.c.end()) {
          out.c.emplace(e, std::move(prod));
        } else {
          it->second += prod;
          if (it->second.is_zero()) out.c.erase(it);
        }
      }
    return out;
  }
  MonomialAlgebra& operator*=(const MonomialAlgebra& o) {
    return *this = *this * o;
  }
  MonomialAlgebra pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MonomialAlgebra acc = one(), base = *this;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
};

struct TorusTag {};
struct HeckeTag {};
using TorusElement = MonomialAlgebra<TorusTag>;
using HeckeElement = MonomialAlgebra<HeckeTag>;

// ---------------------------------------------------------------------------
// Torus side.
// ---------------------------------------------------------------------------

inline TorusElement torus_x(int i, int e = 1) {
  Expo5 v{0, 0, 0, 0, 0};
  v[static_cast<size_t>(i)] = e;
  return TorusElement::monomial(v, QPoly::constant(1));
}
inline TorusElement torus_y(int j, int e = 1) {
  Expo5 v{0, 0, 0, 0, 0};
  v[static_cast<size_t>(3 + j)] = e;
  return TorusElement::monomial(v, QPoly::constant(1));
}

// Elementary symmetric combinations used throughout:
// s_{1,0} = x1+x2+x3, s_{-1,0} = x1^-1+x2^-1+x3^-1, s_{0,+-1} likewise in y,
// u_V = x1x2x3, u_W = y1y2.
inline TorusElement torus_s(int a, int b) {
  TorusElement out;
  if (a != 0) {
    for (int i = 0; i < 3; ++i) out += torus_x(i, a);
  } else {
    for (int j = 0; j < 2; ++j) out += torus_y(j, b);
  }
  return out;
}
inline TorusElement torus_uV(int e = 1) {
  return TorusElement::monomial({e, e, e, 0, 0}, QPoly::constant(1));
}
inline TorusElement torus_uW(int e = 1) {
  return TorusElement::monomial({0, 0, 0, e, e}, QPoly::constant(1));
}

// Is a torus element invariant under all 3! x 2! permutations of the x- and
// y-exponents?
inline bool weyl_invariant(const TorusElement& t) {
  static const int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& px : perms3)
    for (int sy = 0; sy < 2; ++sy) {
      TorusElement im;
      for (const auto& [e, v] : t.c) {
        Expo5 f{e[px[0]], e[px[1]], e[px[2]], e[sy ? 4 : 3], e[sy ? 3 : 4]};
        im += TorusElement::monomial(f, v);
      }
      if (!(im == t)) return false;
    }
  return true;
}

// The degree-6 torus-side polynomial prod_{i,j} (z - q^{3/2} x_i^-1 y_j^-1),
// returned as its coefficient list [z^0 .. z^6].
inline std::vector<TorusElement> torus_hecke_polynomial() {
  std::vector<TorusElement> poly{TorusElement::one()};  // constant 1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      Expo5 e{0, 0, 0, 0, 0};
      e[static_cast<size_t>(i)] = -1;
      e[static_cast<size_t>(3 + j)] = -1;
      TorusElement root =
          TorusElement::monomial(e, QPoly::monomial(mpz_class(1), 3));
      // Multiply poly by (z - root).
      std::vector<TorusElement> next(poly.size() + 1);
      for (size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] += poly[t];
        next[t] -= root * poly[t];
      }
      poly = std::move(next);
    }
  return poly;
}

// ---------------------------------------------------------------------------
// Hecke side.
// ---------------------------------------------------------------------------

enum class Gen { g1, g2, g3, h1, h2 };  // t_{g'}, t_{g''}, t_{g'''}, t_{h'}, t_{h''}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::g1: return "t_g1";
    case Gen::g2: return "t_g2";
    case Gen::g3: return "t_g3";
    case Gen::h1: return "t_h1";
    case Gen::h2: return "t_h2";
  }
  return "?";
}

inline HeckeElement hecke_gen(Gen g, int e = 1) {
  Expo5 v{0, 0, 0, 0, 0};
  v[static_cast<size_t>(g)] = e;
  if ((g == Gen::g1 || g == Gen::g2 || g == Gen::h1) && e < 0)
    throw std::invalid_argument("hecke_gen: only t_g3 and t_h2 are invertible");
  return HeckeElement::monomial(v, QPoly::constant(1));
}

// Satake images of the generators:
//   t_g1 -> q * s_{1,0}
//   t_g2 -> q * u_V * s_{-1,0}
//   t_g3 -> u_V
//   t_h1 -> q^{1/2} * s_{0,1}
//   t_h2 -> u_W
inline TorusElement satake_of_generator(Gen g, int e = 1) {
  TorusElement base;
  switch (g) {
    case Gen::g1:
      base = torus_s(1, 0) * TorusElement::monomial({0, 0, 0, 0, 0},
                                                    QPoly::monomial(1, 2));
      break;
    case Gen::g2:
      base = torus_uV() * torus_s(-1, 0) *
             TorusElement::monomial({0, 0, 0, 0, 0}, QPoly::monomial(1, 2));
      break;
    case Gen::g3:
      base = torus_uV(e);
      return base;  // monomial: handles negative e directly
    case Gen::h1:
      base = torus_s(0, 1) * TorusElement::monomial({0, 0, 0, 0, 0},
                                                    QPoly::monomial(1, 1));
      break;
    case Gen::h2:
      return torus_uW(e);
  }
  if (e < 0)
    throw std::invalid_argument("satake_of_generator: non-invertible inverse");
  return base.pow(e);
}

// Multiplicative extension of satake_of_generator to the whole algebra.
inline TorusElement satake(const HeckeElement& h) {
  TorusElement out;
  for (const auto& [e, v] : h.c) {
    TorusElement term =
        TorusElement::monomial({0, 0, 0, 0, 0}, v);  // QPoly scalar
    term *= satake_of_generator(Gen::g1, 0);         // = 1
    if (e[0]) term *= satake_of_generator(Gen::g1).pow(e[0]);
    if (e[1]) term *= satake_of_generator(Gen::g2).pow(e[1]);
    if (e[2]) term *= satake_of_generator(Gen::g3, e[2]);
    if (e[3]) term *= satake_of_generator(Gen::h1).pow(e[3]);
    if (e[4]) term *= satake_of_generator(Gen::h2, e[4]);
    out += term;
  }
  return out;
}

// Coset degree of a generator as a polynomial in q:
// deg t_g1 = deg t_g2 = q^2+q+1, deg t_h1 = q+1, deg t_g3 = deg t_h2 = 1.
inline QPoly generator_degree(Gen g) {
  switch (g) {
    case Gen::g1:
    case Gen::g2: {
      QPoly d = QPoly::constant(1);
      d += QPoly::q_to(1);
      d += QPoly::q_to(2);
      return d;
    }
    case Gen::h1: {
      QPoly d = QPoly::constant(1);
      d += QPoly::q_to(1);
      return d;
    }
    default:
      return QPoly::constant(1);
  }
}

// Augmentation: extend generator_degree multiplicatively.
inline QPoly augmentation(const HeckeElement& h) {
  QPoly out;
  for (const auto& [e, v] : h.c) {
    QPoly term = v;
    for (int g = 0; g < 5; ++g) {
      QPoly dg = generator_degree(static_cast<Gen>(g));
      for (int t = 0; t < e[static_cast<size_t>(g)]; ++t) term *= dg;
      // Central inverses have degree 1; nothing to do for negative e.
    }
    out += term;
  }
  return out;
}

// The explicit Hecke polynomial: coefficients C0..C6 (of z^0..z^6) in the
// Hecke algebra. The z^3 coefficient carries the sign correction recorded in
// the typo ledger (id "hecke-polynomial-z3-signs"); with it, satake(C_i)
// equals the z^i coefficient of torus_hecke_polynomial() identically.
inline std::array<HeckeElement, 7> hecke_polynomial() {
  auto mono = [](int e1, int e2, int e3, int e4, int e5, long coeff,
                 int qexp) {
    return HeckeElement::monomial(
        {e1, e2, e3, e4, e5}, QPoly::monomial(mpz_class(coeff), 2 * qexp));
  };
  std::array<HeckeElement, 7> C;
  C[6] = HeckeElement::one();
  C[5] = mono(0, 1, -1, 1, -1, -1, 0);
  C[4] = mono(1, 0, -1, 2, -2, 1, 1) + mono(0, 2, -2, 0, -1, 1, 1) +
         mono(1, 0, -1, 0, -1, -2, 2);
  C[3] = mono(1, 1, -2, 1, -2, -1, 2) + mono(0, 0, -1, 3, -3, -1, 3) +
         mono(0, 0, -1, 1, -2, 3, 4);
  C[2] = mono(0, 1, -2, 2, -3, 1, 4) + mono(2, 0, -2, 0, -2, 1, 4) +
         mono(0, 1, -2, 0, -2, -2, 5);
  C[1] = mono(1, 0, -2, 1, -3, -1, 6);
  C[0] = mono(0, 0, -2, 0, -3, 1, 9);
  return C;
}

inline std::string to_string(const Expo5& e) {
  std::ostringstream os;
  os << "(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ","
     << e[4] << ")";
  return os.str();
}

}  // namespace lps
