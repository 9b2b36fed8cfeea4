// Command-line front end: enumeration, bijection tracing, growth-diagram
// rendering, and identity verification.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "osctab/growth.hpp"
#include "osctab/json_io.hpp"
#include "osctab/oscillating.hpp"
#include "osctab/partition.hpp"
#include "osctab/rs.hpp"
#include "osctab/sundaram.hpp"
#include "osctab/symfunc.hpp"
#include "osctab/tableau.hpp"

using nlohmann::json;
using namespace osctab;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open file " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("invalid JSON: " + arg);
  return j;
}

Partition parse_shape(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("invalid shape JSON: " + text);
  return partition_from_json(j);
}

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  for (int k : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(k);
  }
  return out + "}";
}

std::string word_to_string(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(w[i]);
  }
  return out;
}

std::string tableau_to_string(const PartialTableau& t) {
  return to_json(t).dump();
}

std::string involution_to_string(const PartialInvolution& iota) {
  std::string out;
  for (auto [a, b] : iota.pairs())
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out.empty() ? "()" : out;
}

int run_enumerate(int n, int r, const std::string& shape_text,
                  const std::string& inner_text, const std::string& family,
                  const std::string& format, int limit, int vars) {
  Partition shape = parse_shape(shape_text);
  bool as_json = format == "json";
  long long count = 0;
  auto emit = [&](const json& item, const std::string& line) {
    if (limit >= 0 && count >= limit) return;
    if (as_json)
      std::cout << item.dump() << "\n";
    else
      std::cout << line << "\n";
  };
  if (family == "osc") {
    for (const OscillatingTableau& t : enumerate_oscillating(r, n, shape)) {
      emit(to_json(t), to_json(t).dump() + "  Des=" + set_to_string(descents(t)));
      ++count;
    }
  } else if (family == "syt") {
    for (const PartialTableau& t : enumerate_syt(shape)) {
      emit(to_json(t), tableau_to_string(t));
      ++count;
    }
  } else if (family == "ssyt") {
    for (const SemistandardTableau& t : enumerate_ssyt(shape, vars)) {
      emit(to_json(t), to_json(t).dump());
      ++count;
    }
  } else if (family == "king") {
    for (const KingTableau& t : enumerate_king(shape, n)) {
      emit(to_json(t), to_json(t).dump());
      ++count;
    }
  } else if (family == "lr") {
    // n-symplectic LR tableaux of shape --shape / --inner over all
    // even-column weights of the right size
    Partition inner = parse_shape(inner_text);
    if (!shape.contains(inner))
      throw UsageError("--inner must be contained in --shape");
    for (const Partition& beta : partitions_of(shape.size() - inner.size())) {
      if (!has_even_columns(beta)) continue;
      for (const SkewTableau& s :
           enumerate_skew_ssyt(shape, inner, beta.parts())) {
        if (!is_n_symplectic_lr(s, n)) continue;
        emit(to_json(s), to_json(s).dump() + "  weight=" + beta.to_string());
        ++count;
      }
    }
  } else {
    throw UsageError("unknown family " + family);
  }
  if (as_json)
    std::cout << json{{"count", count}}.dump() << "\n";
  else
    std::cout << "count: " << count << "\n";
  return 0;
}

int run_sundaram(const std::string& input, int n, const std::string& format) {
  OscillatingTableau t = oscillating_from_json(parse_json_arg(input));
  if (n == 0)
    for (const Partition& p : t.shapes()) n = std::max(n, p.length());
  n = std::max(n, 1);
  if (!is_n_symplectic(t, n)) {
    for (int k = 0; k <= t.length(); ++k)
      if (t.shape(k).length() > n)
        throw UsageError("tableau is not " + std::to_string(n) +
                         "-symplectic: shape at step " + std::to_string(k) +
                         " has " + std::to_string(t.shape(k).length()) +
                         " rows");
  }
  CrystalWord w = tableau_to_word(t, n);
  SunResult res = sun(t, n);
  std::vector<Sun1Step> steps = sun1_trace(t);
  bool as_json = format == "json";
  if (as_json) {
    std::vector<std::pair<int, int>> pairs_so_far;
    for (const Sun1Step& s : steps) {
      if (s.pair_added) pairs_so_far.push_back(*s.pair_added);
      json line{{"k", s.k},
                {"step", s.expansion ? "expansion" : "contraction"},
                {"box", json::array({s.box.row, s.box.col})},
                {"iota", to_json(PartialInvolution(pairs_so_far))},
                {"tableau", to_json(s.tableau_after)}};
      if (s.pair_added)
        line["pair"] = json::array({s.pair_added->first, s.pair_added->second});
      std::cout << line.dump() << "\n";
    }
    json out{{"word", to_json(w)},
             {"descents", to_json(descents(t))},
             {"iota", to_json(res.intermediate.iota)},
             {"t", to_json(res.intermediate.tableau)},
             {"i", to_json(res.i)},
             {"q", to_json(res.q)},
             {"s", to_json(res.s)},
             {"descents_q", to_json(descents(res.q))}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "word: " << word_to_string(w.letters) << "\n";
    std::cout << "Des(T) = " << set_to_string(descents(t)) << "\n";
    for (const Sun1Step& s : steps) {
      std::cout << "step " << s.k << " "
                << (s.expansion ? "expansion  " : "contraction") << " box ("
                << s.box.row << "," << s.box.col << ")";
      if (s.pair_added)
        std::cout << " pair (" << s.pair_added->first << ","
                  << s.pair_added->second << ")";
      std::cout << " T_k=" << tableau_to_string(s.tableau_after) << "\n";
    }
    std::cout << "iota = " << involution_to_string(res.intermediate.iota) << "\n";
    std::cout << "T = " << tableau_to_string(res.intermediate.tableau) << "\n";
    std::cout << "I = " << tableau_to_string(res.i) << "\n";
    std::cout << "Q = " << tableau_to_string(res.q) << "\n";
    std::cout << "S = " << to_json(res.s).dump() << "\n";
    std::cout << "Des(Q) = " << set_to_string(descents(res.q)) << "\n";
  }
  return 0;
}

int run_roby(const std::string& input, const std::string& format,
             bool render_only, bool second, const std::string& seed_text) {
  OscillatingTableau t = oscillating_from_json(parse_json_arg(input));
  RobyResult res = roby(t);
  bool as_json = format == "json";
  if (!seed_text.empty()) {
    json j = json::parse(seed_text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw UsageError("--seed must be a JSON array of letters");
    std::set<int> des = descent_visualization(t, j.get<std::vector<int>>());
    if (as_json)
      std::cout << json{{"descents", to_json(des)}}.dump() << "\n";
    else
      std::cout << "descents from stacked crosses: " << set_to_string(des)
                << "\n";
    return 0;
  }
  if (render_only) {
    if (as_json) {
      std::cout << to_json(second ? res.second_diagram : res.diagram).dump()
                << "\n";
    } else {
      std::cout << render_ascii(second ? res.second_diagram : res.diagram);
    }
    return 0;
  }
  if (as_json) {
    json out{{"a", json(res.a)},
             {"iota", to_json(res.iota)},
             {"t", to_json(res.t)},
             {"q", to_json(res.q)},
             {"i", to_json(res.i)},
             {"kappa", to_json(res.diagram).at("corners").at(0)},
             {"diagram", to_json(res.diagram)},
             {"second_diagram", to_json(res.second_diagram)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << render_ascii(res.diagram);
    std::cout << "A = " << set_to_string(res.a) << "\n";
    std::cout << "iota = " << involution_to_string(res.iota) << "\n";
    std::cout << "T = " << tableau_to_string(res.t) << "\n";
    std::cout << "Q = " << tableau_to_string(res.q) << "\n";
    std::cout << "second diagram:\n" << render_ascii(res.second_diagram);
    std::cout << "I = " << tableau_to_string(res.i) << "\n";
  }
  return 0;
}

struct VerifyReport {
  int failures = 0;
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << "  counterexample: " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

// Schur expansion when one exists, raw monomials otherwise.
std::string polynomial_summary(const LaurentPoly& p) {
  if (auto expansion = schur_expand(p)) {
    if (expansion->empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : *expansion) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += std::to_string(c) + "*";
      out += "s(" + lambda.to_string() + ")";
    }
    return out;
  }
  return p.to_string();
}

int run_verify(const std::string& identity, int n, int r,
               const std::string& shape_text, int vars) {
  VerifyReport report;
  auto bound = [&](bool ok, const std::string& msg) {
    if (!ok) throw UsageError("bounds outside desk scale: " + msg);
  };
  if (identity == "descents" || identity == "roby") {
    bound(n >= 1 && n <= 3 && r >= 0 && r <= 8, "need 1<=n<=3, 0<=r<=8");
    for (int len = 0; len <= r; ++len) {
      long long checked = 0;
      bool ok = true;
      std::string detail;
      for (int m = len % 2; m <= len && ok; m += 2)
        for (const Partition& mu : partitions_of(m)) {
          if (mu.length() > n) continue;
          for (const OscillatingTableau& t : enumerate_oscillating(len, n, mu)) {
            ++checked;
            if (identity == "descents") {
              SunResult s = sun(t, n);
              if (descents(t) != descents(s.q)) {
                ok = false;
                detail = to_json(t).dump();
                break;
              }
            } else {
              SunResult s = sun(t, n);
              RobyResult rb = roby(t);
              if (!(rb.iota == s.intermediate.iota &&
                    rb.t == s.intermediate.tableau && rb.q == s.q &&
                    rb.i == s.i)) {
                ok = false;
                detail = to_json(t).dump();
                break;
              }
            }
          }
          if (!ok) break;
        }
      report.check(identity + " n=" + std::to_string(n) +
                       " r=" + std::to_string(len) + " (" +
                       std::to_string(checked) + " tableaux)",
                   ok, detail);
    }
  } else if (identity == "schur-qsym" || identity == "eq5") {
    int cap = identity == "eq5" ? 5 : 6;
    bound(r >= 0 && r <= cap, "need 0<=r<=" + std::to_string(cap));
    for (int m = 0; m <= r; ++m)
      for (const Partition& mu : partitions_of(m)) {
        int k = vars > 0 ? vars : std::max(m, 1);
        bool ok = identity == "schur-qsym" ? schur_qsym_identity(mu, k)
                                           : eq5_identity(mu, k);
        report.check(identity + " mu=" + mu.to_string() +
                         " k=" + std::to_string(k),
                     ok);
      }
  } else if (identity == "frobenius") {
    bound(n >= 1 && n <= 2 && r >= 0 && r <= 7, "need 1<=n<=2, 0<=r<=7");
    Partition mu = parse_shape(shape_text);
    int k = vars > 0 ? vars : std::max(r, 1);
    LaurentPoly lhs = frobenius_via_lr(r, mu, n, k);
    LaurentPoly rhs = frobenius_via_descents(r, mu, n, k);
    bool ok = lhs == rhs;
    report.check("frobenius r=" + std::to_string(r) + " mu=" + mu.to_string() +
                     " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     (ok ? ", both sides " + polynomial_summary(lhs) : ""),
                 ok, lhs.to_string() + " vs " + rhs.to_string());
  } else if (identity == "invariant") {
    bound(n >= 1 && n <= 2 && r >= 0 && r <= 7, "need 1<=n<=2, 0<=r<=7");
    int k = vars > 0 ? vars : std::max(r, 1);
    LaurentPoly lhs = frobenius_via_descents(r, Partition(), n, k);
    LaurentPoly rhs = invariant_character(r, n, k);
    bool ok = lhs == rhs;
    report.check("invariant r=" + std::to_string(r) + " n=" + std::to_string(n) +
                     (ok ? ", both sides " + polynomial_summary(lhs) : ""),
                 ok, lhs.to_string() + " vs " + rhs.to_string());
  } else if (identity == "berele") {
    bound(n >= 1 && n <= 2 && r >= 0 && r <= 7, "need 1<=n<=2, 0<=r<=7");
    report.check("berele r=" + std::to_string(r) + " n=" + std::to_string(n),
                 berele_identity(r, n));
  } else if (identity == "rs-lemmas") {
    bound(r >= 0 && r <= 6, "need 0<=r<=6");
    for (int len = 1; len <= r; ++len) {
      bool des_ok = true, invol_ok = true;
      std::string detail;
      std::vector<int> perm(len);
      for (int i = 0; i < len; ++i) perm[i] = i + 1;
      do {
        auto [p, q] = rs_insert_word(perm);
        if (descents_word(perm) != descents(q)) {
          des_ok = false;
          detail = word_to_string(perm);
        }
        bool fpf = true;
        for (int i = 0; i < len; ++i)
          if (perm[perm[i] - 1] != i + 1 || perm[i] == i + 1) fpf = false;
        bool image_fpf = p.rows() == q.rows() &&
                         has_even_columns(q.shape());
        if (fpf != image_fpf) {
          invol_ok = false;
          detail = word_to_string(perm);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      report.check("rs-lemmas descents r=" + std::to_string(len), des_ok, detail);
      report.check("rs-lemmas involution-criterion r=" + std::to_string(len),
                   invol_ok, detail);
    }
  } else {
    throw UsageError("unknown identity " + identity);
  }
  return report.failures == 0 ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscillating tableaux, Sundaram's bijection, growth diagrams"};
  app.require_subcommand(1);

  // OSC_THREADS caps worker parallelism; everything currently runs on one
  // worker, so any positive cap is honored trivially.
  if (const char* threads = std::getenv("OSC_THREADS")) {
    if (std::atoi(threads) < 1) {
      std::cerr << "OSC_THREADS must be a positive integer\n";
      return kExitUsage;
    }
  }

  int n = 0, r = 0, vars = 0, limit = -1;
  std::string shape = "[]", inner = "[]", format = "ascii", family = "osc";
  std::string input, identity, seed;
  bool second = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list combinatorial families");
  enumerate->add_option("--n", n, "symplectic rank");
  enumerate->add_option("--r", r, "length");
  enumerate->add_option("--shape", shape, "shape as JSON, e.g. [2,1]");
  enumerate->add_option("--inner", inner, "inner shape for the lr family");
  enumerate->add_option("--family", family, "osc|syt|ssyt|king|lr");
  enumerate->add_option("--format", format, "json|ascii");
  enumerate->add_option("--limit", limit,
                        "print at most this many items (the count line still "
                        "reports the whole family)");
  enumerate->add_option("--vars", vars, "entry bound for ssyt");

  CLI::App* sundaram_cmd = app.add_subcommand("sundaram", "trace Sun on a tableau");
  sundaram_cmd->add_option("input", input, "oscillating tableau JSON ('-' for stdin, '@file')")
      ->required();
  sundaram_cmd->add_option("--n", n, "symplectic rank (default: minimal)");
  sundaram_cmd->add_option("--format", format, "json|ascii");

  CLI::App* roby_cmd = app.add_subcommand("roby", "growth-diagram form of Sun");
  roby_cmd->add_option("input", input, "oscillating tableau JSON")->required();
  roby_cmd->add_option("--format", format, "json|ascii");

  CLI::App* render = app.add_subcommand("render-growth", "render the growth diagram");
  render->add_option("input", input, "oscillating tableau JSON")->required();
  render->add_option("--format", format, "json|ascii");
  render->add_flag("--second", second, "render the second (I) diagram");
  render->add_option("--seed", seed,
                     "seed word (JSON array) whose insertion tableau is T^t; "
                     "prints the stacked-cross descent reading");

  CLI::App* verify = app.add_subcommand("verify", "verify the character and bijection identities");
  verify->add_option("identity", identity,
                     "descents|roby|schur-qsym|eq5|frobenius|invariant|berele|rs-lemmas")
      ->required();
  verify->add_option("--n", n, "symplectic rank");
  verify->add_option("--r", r, "length / degree bound");
  verify->add_option("--shape", shape, "weight mu as JSON");
  verify->add_option("--vars", vars, "variable count (default r)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (enumerate->parsed())
      return run_enumerate(n, r, shape, inner, family, format, limit,
                           vars > 0 ? vars : std::max(r, 1));
    if (sundaram_cmd->parsed()) return run_sundaram(input, n, format);
    if (roby_cmd->parsed()) return run_roby(input, format, false, false, "");
    if (render->parsed()) return run_roby(input, format, true, second, seed);
    if (verify->parsed()) return run_verify(identity, n, r, shape, vars);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
