// crystal-poly: batch front-end for the polyhedral realization library.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "crystal_poly/inequality_engine.hpp"
#include "crystal_poly/oracle.hpp"
#include "crystal_poly/shapes.hpp"

namespace cp = crystal_poly;
using nlohmann::json;

namespace {

int support_periods(const cp::Context& ctx, const cp::ZVector& x) {
  const int p = ctx.period();
  return (x.max_pos() + p - 1) / p;
}

json forms_json(const std::vector<cp::LinearForm>& forms, const cp::Context& ctx) {
  json arr = json::array();
  for (const auto& f : forms) arr.push_back(cli::form_json(f, ctx.seq()));
  return arr;
}

json header(const cli::Config& cfg) {
  return {{"type", cp::display_name(cfg.type)}, {"family", cp::family_name(cfg.type.family)},
          {"n", cfg.type.n}, {"iota_word", cfg.word}, {"lambda", cfg.lambda.str()}};
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << "\n";
}

int cmd_gen_ineq(const cli::Config& cfg, const std::string& mode, int window, int k, const std::string& out) {
  cp::Context ctx(cfg.type, cfg.word);
  const int R = window * ctx.period();
  json j = header(cfg);
  j["mode"] = mode;
  j["window"] = window;
  j["max_position"] = R;
  j["sets"] = json::array();
  bool ok = true;
  std::vector<int> ks;
  for (int i = 1; i <= ctx.n(); ++i)
    if (k == 0 || k == i) ks.push_back(i);
  auto add_gen = [&](const std::string& tag, int kk, const cp::GenResult& g) {
    ok = ok && g.converged;
    j["sets"].push_back({{"tag", tag}, {"k", kk}, {"converged", g.converged}, {"pruned", g.pruned},
                         {"count", g.forms.size()}, {"forms", forms_json(g.forms, ctx)}});
  };
  auto add_comb = [&](const cp::ShapeFunctionSet& s, int kk) {
    ok = ok && s.complete;
    auto forms = s.forms();
    j["sets"].push_back({{"tag", s.tag}, {"k", kk}, {"converged", s.complete},
                         {"count", forms.size()}, {"forms", forms_json(forms, ctx)}});
  };
  if (mode == "sprime") {
    if (k == 0)
      add_gen("Xi'[inf]", 0, cp::generate_xi_infinity(ctx, R));
    else
      add_gen("Xi'^(" + std::to_string(k) + ")", k, cp::generate_xi_k(ctx, k, R));
  } else if (mode == "shat") {
    if (cfg.lambda.infinity) throw std::invalid_argument("--mode shat needs a finite lambda in the config");
    for (int kk : ks)
      add_gen("Xi[lambda]^(" + std::to_string(kk) + ")", kk, cp::generate_xi_lambda_k(ctx, cfg.lambda, kk, R));
  } else {
    if (k == 0) add_comb(cp::comb_infinity(ctx, R), 0);
    if (!cfg.lambda.infinity)
      for (int kk : ks) add_comb(cp::comb_lambda(ctx, kk, cfg.lambda, R), kk);
  }
  emit(j, out);
  return ok ? 0 : 2;
}

int cmd_check(const cli::Config& cfg, const std::string& vec, bool as_json) {
  cp::Context ctx(cfg.type, cfg.word);
  auto x = cp::parse_zvector(vec, ctx.seq());
  const int R = (support_periods(ctx, x) + 2) * ctx.period();
  bool complete = true;
  auto forms = cp::comb_all(ctx, cfg.lambda, R, &complete);
  auto m = cp::membership(x, forms);
  const bool reach = cp::in_image(cp::Crystal(ctx, cfg.lambda), x);
  if (as_json) {
    json j = header(cfg);
    j["vector"] = cp::format_pairs(x, ctx.seq());
    j["member"] = m.member;
    j["violated"] = m.witness ? json(cli::form_json(*m.witness, ctx.seq())) : json(nullptr);
    j["oracle_member"] = reach;
    j["forms_checked"] = forms.size();
    j["forms_complete"] = complete;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vector  " << cp::format_pairs(x, ctx.seq()) << "\n";
    std::cout << "verdict " << (m.member ? "member" : "not a member") << "\n";
    if (m.witness) {
      std::cout << "violated " << cp::to_string(*m.witness, ctx.seq()) << " = " << m.witness->eval(x) << "\n";
    }
    std::cout << "oracle  " << (reach ? "member" : "not a member") << "\n";
  }
  return m.member == reach ? 0 : 1;
}

int cmd_enumerate(const cli::Config& cfg, int depth, bool as_json) {
  cp::Context ctx(cfg.type, cfg.word);
  cp::Crystal c(ctx, cfg.lambda);
  auto levels = cp::image_levels(c, depth);
  std::map<std::vector<long>, long> by_weight;
  for (const auto& level : levels)
    for (const auto& z : level) ++by_weight[c.wt(z).alpha];
  if (as_json) {
    json j = header(cfg);
    j["depth"] = depth;
    json lv = json::array();
    for (const auto& level : levels) lv.push_back(level.size());
    j["per_depth"] = lv;
    json w = json::array();
    for (const auto& [alpha, count] : by_weight) w.push_back({{"alpha", alpha}, {"count", count}});
    j["per_weight"] = w;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << cp::display_name(cfg.type) << "  lambda = " << cfg.lambda.str() << "\n";
  long total = 0;
  for (std::size_t d = 0; d < levels.size(); ++d) {
    std::cout << "depth " << std::setw(3) << d << "  " << std::setw(8) << levels[d].size() << "\n";
    total += static_cast<long>(levels[d].size());
  }
  std::cout << "total     " << std::setw(8) << total << "\n\nweight (lambda - sum c_i alpha_i), c =\n";
  for (const auto& [alpha, count] : by_weight) {
    std::ostringstream a;
    for (std::size_t i = 1; i < alpha.size(); ++i) a << (i > 1 ? " " : "") << alpha[i];
    std::cout << "  (" << a.str() << ")" << std::setw(8) << count << "\n";
  }
  return 0;
}

int cmd_epsilon_star(const cli::Config& cfg, const std::string& vec, const std::string& method) {
  cp::Context ctx(cfg.type, cfg.word);
  auto x = cp::parse_zvector(vec, ctx.seq());
  const bool forms = method != "oracle";
  const bool oracle = method != "forms";
  bool agree = true;
  std::vector<long> values;
  for (int k = 1; k <= ctx.n(); ++k) {
    std::cout << "eps*_" << k << " =";
    long a = 0, b = 0;
    if (forms) {
      a = cp::epsilon_star_forms(ctx, x, k);
      std::cout << " " << a;
    }
    if (oracle) {
      b = cp::epsilon_star_oracle(ctx, x, k);
      if (!forms) a = b;
      std::cout << (forms ? " (oracle " : " ") << b << (forms ? ")" : "");
    }
    if (forms && oracle && a != b) {
      agree = false;
      std::cout << "  MISMATCH";
    }
    std::cout << "\n";
    values.push_back(a);
  }
  std::cout << "eps* =";
  for (long v : values) std::cout << " " << v;
  std::cout << "\n";
  return agree ? 0 : 1;
}

json form_list(const std::vector<cp::LinearForm>& forms, const cp::Context& ctx) {
  json arr = json::array();
  for (const auto& f : forms) arr.push_back(cp::to_string(f, ctx.seq()));
  return arr;
}

int cmd_crosscheck(const cli::Config& cfg, int depth, int window, const std::string& out) {
  cp::Context ctx(cfg.type, cfg.word);
  auto rep = cp::crosscheck_membership(ctx, cfg.lambda, depth, window);
  json mism = json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"vector", cp::format_flat(m.vector)}, {"kind", m.kind}});
  json j = header(cfg);
  j["checked"] = rep.checked;
  j["mismatches"] = mism;
  j["depth"] = rep.depth;
  j["window"] = rep.form_window / ctx.period();
  j["vector_window"] = rep.vector_window;
  j["closure_size"] = rep.closure_size;
  j["feasible_size"] = rep.feasible_size;
  j["forms_used"] = rep.forms_used;
  j["forms_complete"] = rep.forms_complete;
  j["window_sensitive"] = rep.window_sensitive;
  bool ok = rep.mismatches.empty() && rep.forms_complete;

  json proc = json::array();
  for (const auto& p : cp::procedure_vs_closed(ctx, cfg.lambda, rep.form_window)) {
    ok = ok && p.ok();
    proc.push_back({{"k", p.k}, {"bfs_size", p.bfs_size}, {"comb_size", p.comb_size},
                    {"bfs_converged", p.bfs_converged}, {"comb_complete", p.comb_complete},
                    {"zero_in_bfs", p.zero_in_bfs}, {"only_bfs", form_list(p.only_bfs, ctx)},
                    {"only_comb", form_list(p.only_comb, ctx)}});
  }
  j["procedure_vs_closed"] = proc;
  j["runtime"] = rep.runtime_s;
  emit(j, out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral realizations of affine crystal bases"};
  app.require_subcommand(1);

  std::string config, mode = "comb", out, vec, method = "both";
  int window = 3, k = 0, depth = 5, xwindow = 0;
  bool as_json = false;

  auto* gen = app.add_subcommand("gen-ineq", "Generate a windowed inequality set");
  gen->add_option("config", config, "Config JSON")->required()->check(CLI::ExistingFile);
  gen->add_option("--mode", mode, "sprime | shat | comb")->check(CLI::IsMember({"sprime", "shat", "comb"}));
  gen->add_option("--window", window, "Window in periods of the iota word")->check(CLI::PositiveNumber);
  gen->add_option("--k", k, "Restrict to one index");
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* chk = app.add_subcommand("check", "Membership of a vector in the realization");
  chk->add_option("config", config)->required()->check(CLI::ExistingFile);
  chk->add_option("--vector", vec, "a1 a2 ..., [a1,a2,...] or {(s,k):v,...}")->required();
  chk->add_flag("--json", as_json);

  auto* en = app.add_subcommand("enumerate", "Element counts of the crystal by depth and weight");
  en->add_option("config", config)->required()->check(CLI::ExistingFile);
  en->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  en->add_flag("--json", as_json);

  auto* eps = app.add_subcommand("epsilon-star", "eps*_k of a vector for every k");
  eps->add_option("config", config)->required()->check(CLI::ExistingFile);
  eps->add_option("--vector", vec)->required();
  eps->add_option("--method", method, "forms | oracle | both")->check(CLI::IsMember({"forms", "oracle", "both"}));

  auto* cc = app.add_subcommand("crosscheck", "Compare inequality sets with the operator closure");
  cc->add_option("config", config)->required()->check(CLI::ExistingFile);
  cc->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  cc->add_option("--window", xwindow, "Form window in periods (default depth)");
  cc->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);
  try {
    auto cfg = cli::load_config(config);
    if (gen->parsed()) {
      if (k < 0 || k > cfg.type.n) throw std::invalid_argument("--k out of range");
      return cmd_gen_ineq(cfg, mode, window, k, out);
    }
    if (chk->parsed()) return cmd_check(cfg, vec, as_json);
    if (en->parsed()) return cmd_enumerate(cfg, depth, as_json);
    if (eps->parsed()) return cmd_epsilon_star(cfg, vec, method);
    if (cc->parsed()) return cmd_crosscheck(cfg, depth, xwindow, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
