// Laurent polynomials in q^{1/2} with exact integer coefficients.
// Exponents are stored in half-units: key = 2 * exponent.
#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lps {

struct QPoly {
  // key: twice the q-exponent; value: nonzero integer coefficient.
  std::map<int, mpz_class> c;

  QPoly() = default;
  // Monomial coeff * q^{twice_exp / 2}.
  static QPoly monomial(mpz_class coeff, int twice_exp) {
    QPoly out;
    if (coeff != 0) out.c[twice_exp] = std::move(coeff);
    return out;
  }
  static QPoly constant(long v) { return monomial(mpz_class(v), 0); }
  static QPoly q_to(int e) { return monomial(mpz_class(1), 2 * e); }

  bool is_zero() const { return c.empty(); }
  bool operator==(const QPoly& o) const { return c == o.c; }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, v] : o.c) {
      auto it = c.find(e);
      if (it == c.end()) {
        c.emplace(e, v);
      } else {
        it->second += v;
        if (it->second == 0) c.erase(it);
      }
    }
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }

  QPoly operator-() const {
    QPoly out;
    for (const auto& [e, v] : c) out.c[e] = -v;
    return out;
  }
  QPoly& operator-=(const QPoly& o) { return *this += (-o); }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [e1, v1] : a.c)
      for (const auto& [e2, v2] : b.c) {
        mpz_class prod = v1 * v2;
        auto it = out.c.find(e1 + e2);
        if (it == out.c.end()) {
          out.c.emplace(e1 + e2, std::move(prod));
        } else {
          it->second += prod;
          if (it->second == 0) out.c.erase(it);
        }
      }
    return out;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  // Only integer powers of q present?
  bool integer_exponents() const {
    for (const auto& [e, v] : c)
      if (e % 2 != 0) return false;
    return true;
  }

  // Evaluate at an integer q; requires integer exponents >= some bound.
  // Negative exponents are allowed only when q^{-e} divides exactly is not
  // needed: we evaluate as an exact rational and require integrality.
  mpq_class eval(long q) const {
    mpq_class acc = 0;
    for (const auto& [e, v] : c) {
      if (e % 2 != 0)
        throw std::invalid_argument("QPoly::eval: half-integer exponent");
      int ex = e / 2;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(ex < 0 ? -ex : ex));
      mpq_class term(v);
      if (ex >= 0)
        term *= mpq_class(pw);
      else
        term /= mpq_class(pw);
      acc += term;
    }
    return acc;
  }

  mpz_class eval_int(long q) const {
    mpq_class v = eval(q);
    if (v.get_den() != 1)
      throw std::logic_error("QPoly::eval_int: non-integral value");
    return v.get_num();
  }

  // True iff every coefficient (as element of Z[q^{+-1}]) is divisible by
  // (q - 1): equivalent to vanishing at q = 1.
  bool divisible_by_q_minus_1() const {
    mpz_class acc = 0;
    for (const auto& [e, v] : c) {
      if (e % 2 != 0) return false;
      acc += v;
    }
    return acc == 0;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const auto& [e, v] = *it;
      if (!first) os << (v > 0 ? " + " : " - ");
      if (first && v < 0) os << "-";
      first = false;
      mpz_class av = abs(v);
      bool unit = (av == 1) && e != 0;
      if (!unit) os << av.get_str();
      if (e != 0) {
        if (!unit) os << "*";
        os << "q";
        if (e != 2) {
          os << "^";
          if (e % 2 == 0)
            os << (e / 2);
          else
            os << "(" << e << "/2)";
        }
      }
    }
    return os.str();
  }
};

}  // namespace lps
