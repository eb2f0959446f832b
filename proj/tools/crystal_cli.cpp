// crystal: command-line front end for the crystal library.
//
// Subcommands: enum, tensor, verify, trop, character, schubert.
// Exit codes: 0 ok, 2 usage/validation error, 3 internal invariant
// violation (positivity or route-mismatch errors).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystals/crystal_io.hpp"
#include "crystals/geom_crystal.hpp"
#include "crystals/parse.hpp"
#include "crystals/trop_crystal.hpp"

namespace {

using crystals::kash::FiniteCrystal;
using crystals::kash::Weight;

std::vector<int64_t> parse_tuple(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad tuple: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty tuple");
  return out;
}

std::vector<int> parse_word(const std::string& s, int n) {
  std::vector<int> w;
  for (int64_t v : parse_tuple(s)) {
    if (v < 1 || v >= n)
      throw std::invalid_argument("word letters must be in 1.." +
                                  std::to_string(n - 1));
    w.push_back(static_cast<int>(v));
  }
  return w;
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s;
}

std::string render(const FiniteCrystal& B, const std::string& fmt) {
  if (fmt == "json") return crystals::kash::to_json(B);
  if (fmt == "dot") return crystals::kash::to_dot(B);
  if (fmt == "csv") return crystals::kash::to_csv(B);
  throw std::invalid_argument("unknown format: " + fmt);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << text;
}

std::string q_poly_str(const std::map<int64_t, int64_t>& p) {
  if (p.empty()) return "0";
  std::string s;
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (it != p.begin()) s += " + ";
    if (it->second != 1 || it->first == 0) s += std::to_string(it->second);
    if (it->first != 0) {
      if (it->second != 1) s += "*";
      s += "q";
      if (it->first != 1) s += "^" + std::to_string(it->first);
    }
  }
  return s;
}

struct Config {
  int n = 3;
  std::string lambda_s, mu_s, word_s;
  std::string fmt = "json";
  std::string out_path;  // empty = stdout
  uint64_t seed = 1;
  int trials = 100;
  int64_t height_bound = 3;
  bool with_q = false;
  std::string expr_file;
  std::vector<std::string> covectors;
};

std::vector<int> word_of(const Config& cfg) {
  return cfg.word_s.empty() ? crystals::tc::default_word(cfg.n)
                            : parse_word(cfg.word_s, cfg.n);
}

int cmd_enum(const Config& cfg) {
  Weight lambda = parse_tuple(cfg.lambda_s);
  if (static_cast<int>(lambda.size()) != cfg.n)
    throw std::invalid_argument("--lambda must have " +
                                std::to_string(cfg.n) + " entries");
  auto X = crystals::geom::build_chart(cfg.n, word_of(cfg));
  auto T = crystals::tc::tropicalize_chart(X);
  FiniteCrystal B = crystals::tc::enumerate_Blambda(T, lambda);
  B.validate();
  // Summary goes to stderr; stdout carries only the rendered crystal.
  std::cerr << "elements: " << B.size() << "\n";
  for (int id : crystals::kash::highest_weight_elements(B))
    std::cerr << "highest: id=" << id << " weight=("
              << weight_str(B.elements[id].weight) << ")\n";
  emit(render(B, cfg.fmt), cfg.out_path);
  return 0;
}

int cmd_tensor(const Config& cfg) {
  Weight lambda = parse_tuple(cfg.lambda_s);
  Weight mu = parse_tuple(cfg.mu_s);
  if (static_cast<int>(lambda.size()) != cfg.n ||
      static_cast<int>(mu.size()) != cfg.n)
    throw std::invalid_argument("--lambda/--mu must have " +
                                std::to_string(cfg.n) + " entries");
  auto td = crystals::tc::tensor_decompose(cfg.n, word_of(cfg), lambda, mu,
                                           cfg.with_q);
  std::ostringstream os;
  os << "nu,multiplicity" << (cfg.with_q ? ",q_polynomial" : "") << "\n";
  for (const auto& c : td.components) {
    os << "(" << weight_str(c.nu) << ")," << c.multiplicity;
    if (cfg.with_q) os << "," << q_poly_str(c.q_poly);
    os << "\n";
  }
  emit(os.str(), cfg.out_path);
  return 0;
}

int cmd_verify(const Config& cfg) {
  auto X = crystals::geom::build_chart(cfg.n, word_of(cfg));
  auto rep = crystals::geom::verify_geometric_axioms(X, cfg.trials, cfg.seed);
  std::cout << "geometric axioms: " << rep.trials << " trials, "
            << rep.failures << " failures -> "
            << (rep.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& m : rep.messages) std::cout << "  " << m << "\n";

  // Normality of a small enumerated crystal as a downstream sanity check.
  Weight lambda(cfg.n, 0);
  for (int k = 0; k < cfg.n; ++k) lambda[k] = cfg.n - 1 - k;
  auto T = crystals::tc::tropicalize_chart(X);
  FiniteCrystal B = crystals::tc::enumerate_Blambda(T, lambda);
  B.validate();
  auto nr = crystals::kash::is_normal(B);
  std::cout << "normality of B^(" << weight_str(lambda)
            << "): " << (nr.normal() ? "pass" : "FAIL") << "\n";
  for (const auto& m : nr.violations) std::cout << "  " << m << "\n";
  return (rep.ok() && nr.normal()) ? 0 : 1;
}

int cmd_trop(const Config& cfg) {
  std::ifstream is(cfg.expr_file);
  if (!is)
    throw std::invalid_argument("cannot read expression file: " +
                                cfg.expr_file);
  std::stringstream buf;
  buf << is.rdbuf();
  auto ctx = crystals::alg::make_ctx();
  crystals::alg::RF f = crystals::alg::parse_rf(buf.str(), ctx);
  auto tf = crystals::trop::trop(crystals::alg::certify_positive(f));
  for (const auto& cs : cfg.covectors) {
    std::vector<int64_t> cov = parse_tuple(cs);
    if (static_cast<int>(cov.size()) != ctx->size())
      throw std::invalid_argument(
          "covector needs " + std::to_string(ctx->size()) +
          " entries (variables in order of first appearance)");
    std::cout << tf.eval(cov) << "\n";
  }
  return 0;
}

int cmd_character(const Config& cfg) {
  Weight lambda = parse_tuple(cfg.lambda_s);
  if (static_cast<int>(lambda.size()) != cfg.n)
    throw std::invalid_argument("--lambda must have " +
                                std::to_string(cfg.n) + " entries");
  auto X = crystals::geom::build_chart(cfg.n, word_of(cfg));
  auto T = crystals::tc::tropicalize_chart(X);
  FiniteCrystal B = crystals::tc::enumerate_Blambda(T, lambda);
  std::ostringstream os;
  os << "weight,multiplicity\n";
  for (const auto& [wt, mult] : crystals::kash::character(B))
    os << "(" << weight_str(wt) << ")," << mult << "\n";
  emit(os.str(), cfg.out_path);
  return 0;
}

int cmd_schubert(const Config& cfg) {
  auto word = word_of(cfg);
  FiniteCrystal B =
      crystals::tc::schubert_crystal(cfg.n, word, cfg.height_bound);
  std::cerr << "elements: " << B.size() << "\n";
  emit(render(B, cfg.fmt), cfg.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decorated geometric crystals, tropicalized"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool need_lambda) {
    sub->add_option("--gl", cfg.n, "rank n of GL_n")->required();
    if (need_lambda)
      sub->add_option("--lambda", cfg.lambda_s, "weight tuple a,b,...")
          ->required();
    sub->add_option("--word", cfg.word_s,
                    "reduced word i1,i2,... (default 1,21,321,...)");
    sub->add_option("--output", cfg.out_path, "output file (default stdout)");
  };

  auto* se = app.add_subcommand("enum", "enumerate B^lambda");
  add_common(se, true);
  se->add_option("--out", cfg.fmt, "format: json|dot|csv");

  auto* st = app.add_subcommand("tensor", "decompose B^lambda x B^mu");
  add_common(st, true);
  st->add_option("--mu", cfg.mu_s, "second weight tuple")->required();
  st->add_flag("--q", cfg.with_q, "include central-charge q-polynomials");

  auto* sv = app.add_subcommand("verify", "verify geometric crystal axioms");
  add_common(sv, false);
  sv->add_option("--trials", cfg.trials, "number of random trials");
  sv->add_option("--seed", cfg.seed, "RNG seed");

  auto* sp = app.add_subcommand("trop", "tropicalize a positive expression");
  sp->add_option("expr_file", cfg.expr_file, "file with the expression")
      ->required();
  sp->add_option("--at", cfg.covectors,
                 "covector a,b,... (repeatable; variable order = first "
                 "appearance)")
      ->required();

  auto* sc = app.add_subcommand("character", "weight multiplicity table");
  add_common(sc, true);

  auto* ss = app.add_subcommand("schubert", "truncated Schubert-cell crystal");
  add_common(ss, false);
  ss->add_option("--out", cfg.fmt, "format: json|dot|csv");
  ss->add_option("--height-bound", cfg.height_bound,
                 "coroot height truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (se->parsed()) return cmd_enum(cfg);
    if (st->parsed()) return cmd_tensor(cfg);
    if (sv->parsed()) return cmd_verify(cfg);
    if (sp->parsed()) return cmd_trop(cfg);
    if (sc->parsed()) return cmd_character(cfg);
    if (ss->parsed()) return cmd_schubert(cfg);
  } catch (const crystals::alg::positivity_error& e) {
    std::cerr << "positivity error: " << e.what() << "\n";
    return 3;
  } catch (const crystals::alg::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const crystals::alg::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
