// Command-line surface for the lattice-pair invariant library.
//
// Subcommands:
//   inv        read {"p":..,"M":[[..]],"N":[[..]]} (stdin or --input), print
//              {"inv":[k,s,r,d,m,n],"conductor":c}
//   rep        print the canonical representative pair of a tuple
//   conductor  print the conductor of a tuple
//   act        apply a named generator to a canonical tuple (symbolic);
//              --at-q runs the enumeration oracle and reports match/mismatch
//   distrel    print the distribution-relation expansion of a conductor-0
//              canonical tuple
//   verify     run a verification suite: satake | cosets | retraction |
//              conductor | distrel | invariance | commutation | all
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
//             3 singular input matrix.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lps/action.hpp"
#include "lps/json_io.hpp"
#include "lps/verify.hpp"

namespace {

using lps::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSingular = 3;

struct Config {
  int p = 2;
  std::string format = "json";
  std::string fixtures = "fixtures";
};

void emit(const json& j, const Config& cfg) {
  if (cfg.format == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json read_input_json(const std::string& path) {
  json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    in >> j;
  }
  return j;
}

lps::InvTuple parse_tuple_arg(const std::string& s) {
  // Accept "[k,s,r,d,m,n]" or "k,s,r,d,m,n".
  std::string t = s;
  std::erase(t, '[');
  std::erase(t, ']');
  std::erase(t, ' ');
  std::vector<int> v;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ','))
    v.push_back(std::stoi(item));
  if (v.size() != 6)
    throw std::invalid_argument("expected 6 comma-separated integers");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::optional<lps::Gen> parse_gen(const std::string& name) {
  using lps::Gen;
  if (name == "t_g1") return Gen::g1;
  if (name == "t_g2") return Gen::g2;
  if (name == "t_g3") return Gen::g3;
  if (name == "t_h1") return Gen::h1;
  if (name == "t_h2") return Gen::h2;
  return std::nullopt;
}

int cmd_inv(const Config& cfg, const std::string& input) {
  json in;
  try {
    in = read_input_json(input);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    int p = in.contains("p") ? in["p"].get<int>() : cfg.p;
    lps::Mat M = lps::mat_from_json(in.at("M"), 3);
    lps::Mat N = lps::mat_from_json(in.at("N"), 2);
    lps::InvTuple t = lps::invariants(M, N, p);
    json out = json::object();
    out["inv"] = lps::inv_to_json(t);
    out["conductor"] = lps::conductor(t);
    emit(out, cfg);
    return kExitOk;
  } catch (const lps::singular_matrix_error& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_rep(const Config& cfg, const std::string& tuple_arg) {
  try {
    lps::InvTuple t = parse_tuple_arg(tuple_arg);
    if (!lps::is_canonical(t)) {
      std::cerr << "input error: tuple is not canonical; canonicalization is "
                << lps::to_string(lps::canonicalize(t)) << "\n";
      return kExitInputError;
    }
    auto [M, N] = lps::canonical_rep(t, cfg.p);
    json out = json::object();
    out["inv"] = lps::inv_to_json(t);
    out["p"] = cfg.p;
    out["M"] = lps::mat_to_json(M);
    out["N"] = lps::mat_to_json(N);
    emit(out, cfg);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_conductor(const Config& cfg, const std::string& tuple_arg) {
  try {
    lps::InvTuple t = parse_tuple_arg(tuple_arg);
    json out = json::object();
    out["inv"] = lps::inv_to_json(t);
    out["conductor"] = lps::conductor(t);
    emit(out, cfg);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_act(const Config& cfg, const std::string& gen_name,
            const std::string& tuple_arg, int at_q) {
  auto g = parse_gen(gen_name);
  if (!g) {
    std::cerr << "input error: unknown generator '" << gen_name
              << "' (expected t_g1, t_g2, t_g3, t_h1, t_h2)\n";
    return kExitInputError;
  }
  lps::InvTuple t{};
  try {
    t = parse_tuple_arg(tuple_arg);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!lps::is_canonical(t)) {
    std::cerr << "input error: tuple " << lps::to_string(t)
              << " is not canonical; its canonicalization is "
              << lps::to_string(lps::canonicalize(t)) << "\n";
    return kExitInputError;
  }
  lps::InvSum sum = lps::act_generator(*g, t);
  json out = json::object();
  out["generator"] = gen_name;
  out["inv"] = lps::inv_to_json(t);
  out["result"] = lps::invsum_to_json(sum);
  if (at_q > 0) {
    if (at_q != 2 && at_q != 3) {
      std::cerr << "input error: --at-q requires q in {2,3} (oracle range)\n";
      return kExitInputError;
    }
    lps::InvCount orc = lps::oracle_act(*g, t, at_q);
    mpz_class mass = 0;
    bool match = true;
    for (const auto& [u, c] : orc) mass += c;
    for (const auto& [u, c] : sum) {
      mpq_class ev = c.eval(at_q);
      mpz_class o = orc.count(u) ? orc.at(u) : mpz_class(0);
      if (ev != lps::Q(o)) match = false;
    }
    for (const auto& [u, o] : orc)
      if (!sum.count(u) && o != 0) match = false;
    out["oracle"] = json::object();
    out["oracle"]["q"] = at_q;
    out["oracle"]["mass"] = mass.get_str();
    out["oracle"]["terms"] = lps::invcount_to_json(orc);
    out["oracle"]["match"] = match;
    emit(out, cfg);
    return match ? kExitOk : kExitVerifyFail;
  }
  emit(out, cfg);
  return kExitOk;
}

int cmd_distrel(const Config& cfg, const std::string& tuple_arg) {
  lps::InvTuple t{};
  try {
    t = parse_tuple_arg(tuple_arg);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    lps::InvSum rel = lps::distribution_relation(t);
    json out = json::object();
    out["base"] = lps::inv_to_json(t);
    out["result"] = lps::invsum_to_json(rel);
    json conds = json::array();
    for (const auto& [u, c] : rel)
      if (!c.is_zero() && lps::conductor(u) == 1)
        conds.push_back(lps::inv_to_json(u));
    out["conductor_one_classes"] = conds;
    emit(out, cfg);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  std::vector<lps::Report> reports;
  auto run = [&](const std::string& name) {
    if (name == "satake") {
      reports.push_back(lps::verify_satake());
    } else if (name == "cosets") {
      reports.push_back(lps::verify_cosets(cfg.p));
    } else if (name == "retraction") {
      reports.push_back(lps::verify_retraction(cfg.p));
    } else if (name == "conductor") {
      reports.push_back(lps::verify_conductor(cfg.p));
    } else if (name == "distrel") {
      reports.push_back(lps::verify_distrel(cfg.fixtures));
    } else if (name == "invariance") {
      reports.push_back(lps::verify_invariance(cfg.p));
    } else if (name == "commutation") {
      reports.push_back(lps::verify_commutation());
    } else {
      return false;
    }
    return true;
  };
  if (suite == "all") {
    for (const char* s : {"satake", "cosets", "retraction", "conductor",
                          "distrel", "invariance", "commutation"})
      run(s);
  } else if (!run(suite)) {
    std::cerr << "input error: unknown suite '" << suite
              << "' (satake|cosets|retraction|conductor|distrel|invariance|"
                 "commutation|all)\n";
    return kExitInputError;
  }
  bool all_pass = true;
  if (cfg.format == "pretty") {
    for (const auto& r : reports) {
      std::cout << lps::report_pretty(r);
      all_pass = all_pass && r.pass();
    }
  } else {
    json out = json::array();
    for (const auto& r : reports) {
      out.push_back(lps::report_to_json(r));
      all_pass = all_pass && r.pass();
    }
    emit(out, cfg);
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact local invariants of lattice pairs, Hecke actions, and the "
      "distribution relation"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--p", cfg.p, "residue characteristic (default 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format: json | pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--fixtures", cfg.fixtures,
                 "fixture directory (default ./fixtures)");

  std::string input, tuple_arg, gen, suite;
  int at_q = 0;

  auto* c_inv = app.add_subcommand(
      "inv", "invariants + conductor of a lattice pair (JSON on stdin)");
  c_inv->add_option("--input", input, "input file (default stdin)");

  auto* c_rep = app.add_subcommand(
      "rep", "canonical representative pair of a canonical tuple");
  c_rep->add_option("tuple", tuple_arg, "[k,s,r,d,m,n]")->required();

  auto* c_cond =
      app.add_subcommand("conductor", "local conductor of a tuple");
  c_cond->add_option("tuple", tuple_arg, "[k,s,r,d,m,n]")->required();

  auto* c_act =
      app.add_subcommand("act", "apply a Hecke generator to a canonical tuple");
  c_act->add_option("generator", gen, "t_g1 | t_g2 | t_g3 | t_h1 | t_h2")
      ->required();
  c_act->add_option("tuple", tuple_arg, "[k,s,r,d,m,n]")->required();
  c_act->add_option("--at-q", at_q,
                    "also run the enumeration oracle at q (2 or 3)");

  auto* c_dist = app.add_subcommand(
      "distrel", "distribution-relation expansion of a conductor-0 tuple");
  c_dist->add_option("tuple", tuple_arg, "[k,s,r,d,m,n]")->required();

  auto* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("suite", suite,
                    "satake|cosets|retraction|conductor|distrel|invariance|"
                    "commutation|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*c_inv) return cmd_inv(cfg, input);
    if (*c_rep) return cmd_rep(cfg, tuple_arg);
    if (*c_cond) return cmd_conductor(cfg, tuple_arg);
    if (*c_act) return cmd_act(cfg, gen, tuple_arg, at_q);
    if (*c_dist) return cmd_distrel(cfg, tuple_arg);
    if (*c_ver) return cmd_verify(cfg, suite);
  } catch (const lps::singular_matrix_error& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
