// Verification suites shared by the CLI `verify` subcommand and the
// acceptance binary. Each suite returns a structured report; suites are
// deterministic and exact (no tolerances).
#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lps/action.hpp"
#include "lps/building.hpp"
#include "lps/hecke.hpp"
#include "lps/invariants.hpp"
#include "lps/json_io.hpp"
#include "lps/stabilizer_oracle.hpp"

namespace lps {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // human-readable; empty if nothing to add
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }
  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

// ---------------------------------------------------------------------------
// Suite: satake. The seven coefficient identities + integrality + Weyl
// invariance of the torus side.
// ---------------------------------------------------------------------------
inline Report verify_satake() {
  Report r{"satake", {}};
  auto hp = hecke_polynomial();
  auto tp = torus_hecke_polynomial();
  for (int i = 0; i <= 6; ++i) {
    bool eq = satake(hp[i]) == tp[i];
    bool integral = true;
    for (const auto& [e, c] : hp[i].c)
      integral = integral && c.integer_exponents();
    bool weyl = weyl_invariant(tp[i]);
    r.add("z^" + std::to_string(i) + " coefficient: satake(C_i) == torus side",
          eq);
    r.add("z^" + std::to_string(i) + " coefficient: integer q-exponents",
          integral);
    r.add("z^" + std::to_string(i) + " coefficient: torus side Weyl-invariant",
          weyl);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suite: cosets. Symbolic action == enumeration oracle at q = p on the full
// grid, plus coset degree counts. (Acceptance criterion grid.)
// ---------------------------------------------------------------------------
inline std::vector<InvTuple> canonical_grid(int krs_lo, int krs_hi,
                                            int dmn_hi) {
  std::vector<InvTuple> out;
  for (int k = krs_lo; k <= krs_hi; ++k)
    for (int s = krs_lo; s <= krs_hi; ++s)
      for (int r = krs_lo; r <= krs_hi; ++r)
        for (int d = 0; d <= dmn_hi; ++d)
          for (int m = 0; m <= dmn_hi; ++m)
            for (int n = 0; n <= dmn_hi; ++n) {
              InvTuple t{k, s, r, d, m, n};
              if (is_canonical(t)) out.push_back(t);
            }
  return out;
}

inline Report verify_cosets(int p) {
  Report r{"cosets", {}};
  if (p != 2 && p != 3) {
    r.add("p in {2,3}", false, "oracle suites require p = 2 or 3");
    return r;
  }
  static const Gen kGens[] = {Gen::g1, Gen::g2, Gen::g3, Gen::h1, Gen::h2};
  // Coset degree counts.
  for (Gen g : kGens) {
    long got = static_cast<long>(coset_reps(g, p).size());
    mpq_class want = generator_degree(g).eval(p);
    std::ostringstream os;
    os << "p=" << p << " " << gen_name(g) << ": " << got << " cosets";
    r.add(os.str(), Q(got) == want);
  }
  // Symbolic-vs-oracle over the grid.
  auto grid = canonical_grid(-1, 1, 3);
  long mismatches = 0;
  std::string first;
  for (Gen g : kGens)
    for (const auto& t : grid) {
      InvSum sym = act_generator(g, t);
      InvCount orc = oracle_act(g, t, p);
      InvCount sym_at_p;
      for (const auto& [u, c] : sym) {
        mpq_class v = c.eval(p);
        if (v.get_den() != 1) {
          ++mismatches;
          continue;
        }
        if (v != 0) sym_at_p[u] = v.get_num();
      }
      if (!(sym_at_p == orc)) {
        ++mismatches;
        if (first.empty())
          first = std::string(gen_name(g)) + " at " + to_string(t);
      }
    }
  std::ostringstream os;
  os << "p=" << p << " symbolic action == oracle on " << grid.size()
     << " canonical tuples x 5 generators";
  r.add(os.str(), mismatches == 0,
        mismatches ? ("mismatches: " + std::to_string(mismatches) +
                      ", first at " + first)
                   : "");
  return r;
}

// ---------------------------------------------------------------------------
// Suite: conductor. Formula == stabilizer determinant-image oracle.
// ---------------------------------------------------------------------------
inline Report verify_conductor(int p) {
  Report r{"conductor", {}};
  if (p != 2 && p != 3) {
    r.add("p in {2,3}", false, "oracle suites require p = 2 or 3");
    return r;
  }
  long bad = 0;
  std::string first;
  for (int d = 0; d <= 4; ++d)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        int f = conductor({0, 0, 0, d, m, n});
        int o = stabilizer_conductor_oracle(d, m, n, p);
        if (f != o) {
          ++bad;
          if (first.empty()) {
            std::ostringstream os;
            os << "(d,m,n)=(" << d << "," << m << "," << n << ") formula=" << f
               << " oracle=" << o;
            first = os.str();
          }
        }
      }
  std::ostringstream os;
  os << "p=" << p << " conductor formula == stabilizer oracle on 125 tuples";
  r.add(os.str(), bad == 0, bad ? first : "");
  // Anchor values.
  r.add("conductor(0,0,-1,2,1,0) == 1", conductor({0, 0, -1, 2, 1, 0}) == 1);
  r.add("conductor(5,-2,7,5,3,1) == 2", conductor({5, -2, 7, 5, 3, 1}) == 2);
  return r;
}

// ---------------------------------------------------------------------------
// Suite: retraction. Hexagon and preimage counts at p.
// ---------------------------------------------------------------------------
inline Report verify_retraction(int p) {
  Report r{"retraction", {}};
  const auto l1 = bldg::ref_l1();
  const auto P6 = bldg::ref_P6(p);
  auto hexes = bldg::hexagons_containing_chamber(l1, P6, p);
  long q = p;
  r.add("p=" + std::to_string(p) + " hexagon total == q^3",
        static_cast<long>(hexes.size()) == q * q * q);
  // Per-type counts of hexagons through one neighbor of each type 2..5.
  const long expect_through[7] = {0, q * q * q, q * q, q, q, q * q, q * q * q};
  for (int ty = 2; ty <= 5; ++ty) {
    // Find one neighbor of this type and count.
    bldg::Subspace pick{};
    bool found = false;
    for (const auto& x : bldg::neighbors(p))
      if (bldg::neighbor_type(x, l1, P6, p) == ty) {
        pick = x;
        found = true;
        break;
      }
    long through =
        found ? bldg::hexagons_through_neighbor(pick, ty, l1, P6, p) : -1;
    r.add("p=" + std::to_string(p) + " type " + std::to_string(ty) +
              ": hexagons through one vertex",
          found && through == expect_through[ty],
          "got " + std::to_string(through) + ", want " +
              std::to_string(expect_through[ty]));
  }
  auto counts = bldg::retraction_preimage_counts(l1, P6, p);
  const long expect_pre[7] = {0, 1, q, q * q, q * q, q, 1};
  for (int ty = 1; ty <= 6; ++ty)
    r.add("p=" + std::to_string(p) + " type " + std::to_string(ty) +
              ": retraction preimage count",
          counts.count(ty) && counts[ty] == expect_pre[ty],
          "want " + std::to_string(expect_pre[ty]));
  return r;
}

// ---------------------------------------------------------------------------
// Suite: distrel. (q-1)-divisibility, conductor support, oracle recompute at
// q in {2,3}, and the sixteen-term fixture comparison.
// ---------------------------------------------------------------------------
inline Report verify_distrel(const std::string& fixtures_dir) {
  Report r{"distrel", {}};
  const InvTuple nu0{0, 0, 0, 0, 0, 0};
  InvSum rel = distribution_relation(nu0);
  // Strip exact zeros.
  for (auto it = rel.begin(); it != rel.end();)
    it = it->second.is_zero() ? rel.erase(it) : std::next(it);

  bool div = true, intexp = true;
  for (const auto& [t, c] : rel) {
    intexp = intexp && c.integer_exponents();
    div = div && c.divisible_by_q_minus_1();
  }
  r.add("all coefficients lie in Z[q]", intexp);
  r.add("all coefficients divisible by (q-1)", div);

  std::vector<InvTuple> cond1;
  bool cond_ok = true;
  for (const auto& [t, c] : rel) {
    int cd = conductor(t);
    if (cd == 1)
      cond1.push_back(t);
    else if (cd != 0)
      cond_ok = false;
  }
  r.add("support has conductor in {0,1}", cond_ok);
  const InvTuple expect1{0, -2, -4, 2, 1, 0};
  r.add("unique conductor-1 class (0,-2,-4,2,1,0)",
        cond1.size() == 1 && cond1[0] == expect1,
        "s,r normalized by 3s+k=-6, k+d+2r=-6; see typo ledger "
        "expansion-sr-entries");

  // Full recomputation by pure coset enumeration at q = 2, 3.
  for (int p : {2, 3}) {
    InvCount orc = distribution_relation_oracle(nu0, p);
    bool ok = true;
    for (const auto& [t, c] : rel) {
      mpq_class ev = c.eval(p);
      mpz_class o = orc.count(t) ? orc.at(t) : mpz_class(0);
      if (ev != Q(o)) ok = false;
    }
    for (const auto& [t, o] : orc)
      if (!rel.count(t) && o != 0) ok = false;
    r.add("relation == coset-enumeration recomputation at q=" +
              std::to_string(p),
          ok);
  }

  // Fixture comparison.
  json fx;
  try {
    std::ifstream in(fixtures_dir + "/distrel_printed.json");
    if (!in) throw std::runtime_error("cannot open distrel_printed.json");
    in >> fx;
  } catch (const std::exception& e) {
    r.add("fixture distrel_printed.json loads", false, e.what());
    return r;
  }
  r.add("fixture distrel_printed.json loads", true);

  // Computed block sums keyed by (k,d).
  std::map<std::pair<int, int>, QPoly> blocks;
  for (const auto& [t, c] : rel) blocks[{t.k, t.d}] += c;

  std::map<std::pair<int, int>, QPoly> fx_blocks;
  bool exact_ok = true, corr_ok = true;
  std::string exact_fail;
  int n_exact = 0;
  for (const auto& term : fx["terms"]) {
    InvTuple pinv = inv_from_json(term["printed_inv"]);
    QPoly cc = qpoly_from_json(term["coeff_corrected"]);
    fx_blocks[{pinv.k, pinv.d}] += cc;
    // Every display correction must carry a ledger id.
    if (term.contains("display_corrections") &&
        term["display_corrections"].empty())
      corr_ok = false;
    if (term["match"] == "exact") {
      ++n_exact;
      InvTuple ci = inv_from_json(term["corrected_inv"]);
      QPoly got = rel.count(ci) ? rel.at(ci) : QPoly{};
      if (!(got == cc)) {
        exact_ok = false;
        if (exact_fail.empty())
          exact_fail = "term " + std::to_string(term["index"].get<int>());
      }
      // The corrected tuple must satisfy the determinant identities and
      // agree with the printed one in (k,d,m,n).
      if (3 * ci.s + ci.k != -6 || ci.k + ci.d + 2 * ci.r != -6 ||
          ci.k != pinv.k || ci.d != pinv.d || ci.m != pinv.m ||
          ci.n != pinv.n)
        exact_ok = false;
    }
  }
  r.add("fixture exact-match terms (" + std::to_string(n_exact) +
            ") reproduced termwise",
        exact_ok, exact_fail);
  r.add("all fixture display corrections carry typo-ledger ids", corr_ok);

  bool blocks_ok = fx_blocks.size() == blocks.size();
  std::string bf;
  for (const auto& [kd, sum] : fx_blocks) {
    bool m = blocks.count(kd) && blocks.at(kd) == sum;
    if (!m) {
      blocks_ok = false;
      if (bf.empty())
        bf = "(k,d)=(" + std::to_string(kd.first) + "," +
             std::to_string(kd.second) + ")";
    }
  }
  r.add("all six (k,d) block sums match the corrected fixture", blocks_ok, bf);

  // Typo-ledger coverage: the ids cited by the fixture must exist.
  try {
    std::ifstream in(fixtures_dir + "/typo_ledger.json");
    if (!in) throw std::runtime_error("cannot open typo_ledger.json");
    json ledger;
    in >> ledger;
    std::set<std::string> ids;
    for (const auto& e : ledger["entries"]) ids.insert(e["id"]);
    bool cover = true;
    for (const auto& term : fx["terms"])
      if (term.contains("display_corrections"))
        for (const auto& c : term["display_corrections"])
          cover = cover && ids.count(c.get<std::string>()) > 0;
    // Block-level-only matches rely on these documented entries.
    for (const char* need :
         {"expansion-sr-entries", "expansion-d0-merges",
          "expansion-boundary-redistribution", "expansion-sign-markers",
          "expansion-term2-coefficient"})
      cover = cover && ids.count(need) > 0;
    r.add("every fixture discrepancy is covered by a typo-ledger entry",
          cover);
  } catch (const std::exception& e) {
    r.add("typo ledger loads", false, e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suite: invariance. Randomized orbit invariance, delta-shift, round-trip.
// (Acceptance criterion 5; deterministic seed.)
// ---------------------------------------------------------------------------
inline Mat random_unit_h0(std::mt19937_64& rng, int p) {
  // A random element of H_0 = GL2(O): integral entries, unit determinant.
  std::uniform_int_distribution<int> entry(-6, 6);
  for (;;) {
    Mat h(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) h.at(i, j) = entry(rng);
    Q dt = det(h);
    if (dt != 0 && valuation(dt, p) == 0) return h;
  }
}

// Embed h in GL3 x GL2 as (diag(h,1), h) acting by right multiplication.
inline Report verify_invariance(int p, int trials = 120) {
  Report r{"invariance", {}};
  std::mt19937_64 rng(20240915u + static_cast<unsigned>(p));
  std::uniform_int_distribution<int> small(-2, 2);
  auto grid = canonical_grid(-1, 1, 2);
  std::uniform_int_distribution<size_t> pick(0, grid.size() - 1);
  long bad_inv = 0, bad_delta = 0;
  for (int it = 0; it < trials; ++it) {
    InvTuple t = grid[pick(rng)];
    auto [M0, N0] = canonical_rep(t, p);
    // Randomize the pair away from the canonical representative first, then
    // act by a second random unit; the invariants must not move.
    auto embed3 = [](const Mat& h) {
      Mat h3 = Mat::identity(3);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h3.at(i, j) = h.at(i, j);
      return h3;
    };
    Mat ha = random_unit_h0(rng, p), hb = random_unit_h0(rng, p);
    Mat M = mul(embed3(ha), M0), N = mul(ha, N0);
    if (!(invariants(M, N, p) == t) ||
        !(invariants(mul(embed3(hb), M), mul(hb, N), p) == t))
      ++bad_inv;
    // delta = (diag(p,1,1), diag(p,1)) shifts k by +1 (inverse of Frobenius).
    Mat dV = Mat::identity(3);
    dV.at(0, 0) = p;
    Mat dW = Mat::identity(2);
    dW.at(0, 0) = p;
    InvTuple shifted = invariants(mul(dV, M), mul(dW, N), p);
    InvTuple want = t;
    want.k += 1;
    if (!(shifted == want)) ++bad_delta;
  }
  r.add("p=" + std::to_string(p) + " orbit invariance under " +
            std::to_string(trials) + " random h in H_0",
        bad_inv == 0, bad_inv ? std::to_string(bad_inv) + " failures" : "");
  r.add("p=" + std::to_string(p) + " delta-shift changes exactly k by +1",
        bad_delta == 0,
        bad_delta ? std::to_string(bad_delta) + " failures" : "");
  // Round-trip over the full grid.
  long bad_rt = 0;
  for (int k = -2; k <= 2; ++k)
    for (int s = -2; s <= 2; ++s)
      for (int rr = -2; rr <= 2; ++rr)
        for (int d = 0; d <= 4; ++d)
          for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
              InvTuple t{k, s, rr, d, m, n};
              if (!is_canonical(t)) continue;
              auto [M, N] = canonical_rep(t, p);
              if (!(invariants(M, N, p) == t)) ++bad_rt;
            }
  r.add("p=" + std::to_string(p) +
            " round-trip invariants(canonical_rep(t)) == t on full grid",
        bad_rt == 0, bad_rt ? std::to_string(bad_rt) + " failures" : "");
  return r;
}

// ---------------------------------------------------------------------------
// Suite: commutation. Frobenius-Hecke commutation + mass conservation.
// ---------------------------------------------------------------------------
inline Report verify_commutation() {
  Report r{"commutation", {}};
  static const Gen kGens[] = {Gen::g1, Gen::g2, Gen::g3, Gen::h1, Gen::h2};
  auto grid = canonical_grid(-1, 1, 3);
  long bad_comm = 0, bad_mass = 0;
  for (Gen g : kGens)
    for (const auto& t : grid) {
      InvSum a = act_generator(g, t);
      // Fr then generator.
      InvTuple tf = t;
      tf.k -= 1;
      InvSum b = act_generator(g, tf);
      // Generator then Fr.
      InvSum a_f;
      for (const auto& [u, c] : a) {
        InvTuple uf = u;
        uf.k -= 1;
        a_f[uf] += c;
      }
      for (auto it = a_f.begin(); it != a_f.end();)
        it = it->second.is_zero() ? a_f.erase(it) : std::next(it);
      for (auto it = b.begin(); it != b.end();)
        it = it->second.is_zero() ? b.erase(it) : std::next(it);
      if (!(a_f == b)) ++bad_comm;
      // Mass conservation: total mass == degree of the generator.
      QPoly mass;
      for (const auto& [u, c] : a) mass += c;
      if (!(mass == generator_degree(g))) ++bad_mass;
    }
  r.add("Frobenius commutes with all five generators on the grid",
        bad_comm == 0, bad_comm ? std::to_string(bad_comm) + " failures" : "");
  r.add("mass conservation: total mass == generator degree on the grid",
        bad_mass == 0, bad_mass ? std::to_string(bad_mass) + " failures" : "");
  return r;
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------
inline json report_to_json(const Report& r) {
  json o = json::object();
  o["suite"] = r.suite;
  o["pass"] = r.pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = json::object();
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  o["checks"] = checks;
  return o;
}

inline std::string report_pretty(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace lps
