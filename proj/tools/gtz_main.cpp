#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtz/errors.hpp"
#include "gtz/report.hpp"

namespace {

using gtz::Algebra;
using gtz::HighestWeight;
using ordered_json = nlohmann::ordered_json;

HighestWeight make_weight(const std::string& algebra, int n, const std::string& weight_text) {
  const std::vector<int> entries2 = gtz::parse_weight_entries2(weight_text);
  if (n != 0 && n != static_cast<int>(entries2.size())) {
    throw gtz::InvalidWeight("--n is " + std::to_string(n) + " but the weight has " +
                             std::to_string(entries2.size()) + " entries");
  }
  return algebra == "gl" ? HighestWeight::gl(entries2) : HighestWeight::b(entries2);
}

int parse_max2(const std::string& text) {
  const std::vector<int> entries2 = gtz::parse_weight_entries2(text);
  if (entries2.size() != 1) throw gtz::InvalidWeight("--max-weight takes a single entry");
  if (entries2[0] < 0) throw gtz::InvalidWeight("--max-weight must be >= 0");
  return entries2[0];
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw gtz::Error("cannot open output file: " + out_path);
  file << text;
}

ordered_json grading_json(const std::map<gtz::WeightVec2, int, std::greater<gtz::WeightVec2>>& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& [weight2, dim] : g) {
    ordered_json e;
    e["weight2"] = weight2;
    e["dim"] = dim;
    arr.push_back(e);
  }
  return arr;
}

std::string render_row2(const std::vector<int>& row2) {
  return gtz::format_weight_entries2(row2);
}

int run_solve(const std::string& algebra, int n, const std::string& weight_text,
              const std::string& sign, std::optional<int> bound, const std::string& format,
              const std::string& out_path) {
  const HighestWeight w = make_weight(algebra, n, weight_text);
  std::vector<int> signs;
  if (w.algebra == Algebra::GL) {
    signs = {0};
  } else if (sign == "plus") {
    signs = {+1};
  } else if (sign == "minus") {
    signs = {-1};
  } else {
    signs = {+1, -1};
  }

  ordered_json systems = ordered_json::array();
  std::ostringstream text;
  for (const int s : signs) {
    const gtz::IndicatorSystem sys = w.algebra == Algebra::B
                                         ? gtz::build_indicator_b(w, s)
                                         : gtz::build_indicator_gl(w);
    gtz::KernelResult ker;
    try {
      ker = gtz::solve_kernel(sys, bound, true);
    } catch (const gtz::NotStabilized& e) {
      std::cerr << "error: " << e.what() << " (weight " << w.str() << ")\n";
      return 3;
    }
    const std::vector<gtz::EulerOp> eulers = gtz::euler_family(w);
    const std::string sign_text = s == 0 ? "" : (s > 0 ? "+" : "-");

    if (format == "json") {
      ordered_json sj;
      sj["sign"] = sign_text;
      ordered_json kernel;
      kernel["dim"] = ker.dimension;
      kernel["stabilized"] = ker.stabilized;
      kernel["pair_bound"] = ker.pair_bound_used;
      kernel["single_bound"] = ker.single_bound_used;
      kernel["grading"] = grading_json(ker.grading);
      sj["kernel"] = kernel;
      ordered_json basis = ordered_json::array();
      for (std::size_t i = 0; i < ker.basis.size(); ++i) {
        ordered_json e;
        e["weight2"] = ker.basis_weights2[i];
        e["poly"] = ker.basis[i].str();
        basis.push_back(e);
      }
      sj["basis"] = basis;
      systems.push_back(sj);
    } else {
      text << "system: algebra " << gtz::algebra_name(w.algebra) << ", weight " << w.str()
           << " (n = " << w.n << ")";
      if (!sign_text.empty()) text << ", sign " << sign_text;
      text << "\nequations:";
      for (const auto& equation : sys.equations) {
        text << " " << equation.op.name << "^" << equation.power;
      }
      text << "\nkernel: dim " << ker.dimension << ", pair bound " << ker.pair_bound_used
           << ", single bound " << ker.single_bound_used << ", "
           << (ker.stabilized ? "stabilized" : "NOT STABILIZED") << "\n";
      for (std::size_t i = 0; i < ker.basis.size(); ++i) {
        text << "  weight2 [" << [&] {
          std::string joined;
          for (std::size_t j = 0; j < ker.basis_weights2[i].size(); ++j) {
            if (j) joined += ",";
            joined += std::to_string(ker.basis_weights2[i][j]);
          }
          return joined;
        }() << "]  " << ker.basis[i].str() << "\n";
      }
      text << "\n";
    }
  }

  if (format == "json") {
    ordered_json j;
    j["tool"] = "gtzlab";
    j["command"] = "solve";
    j["algebra"] = gtz::algebra_name(w.algebra);
    j["n"] = w.n;
    j["weight"] = w.str();
    j["weight2"] = w.entries2;
    j["parity"] = w.half_integer() ? "half_integer" : "integer";
    j["r"] = gtz::exponents_r(w);
    j["systems"] = systems;
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit(text.str(), out_path);
  }
  return 0;
}

int run_tableaux(const std::string& algebra, int n, const std::string& weight_text,
                 const std::string& format, const std::string& out_path) {
  const HighestWeight w = make_weight(algebra, n, weight_text);
  std::ostringstream text;
  ordered_json rows = ordered_json::array();
  std::size_t count = 0;

  if (w.algebra == Algebra::B) {
    const std::vector<gtz::BTableau> tabs = gtz::enumerate_b_tableaux(w);
    count = tabs.size();
    for (const gtz::BTableau& t : tabs) {
      if (format == "json") {
        ordered_json e;
        e["middle"] = render_row2(t.middle2);
        e["middle2"] = t.middle2;
        e["bottom"] = render_row2(t.bottom2);
        e["bottom2"] = t.bottom2;
        e["sigma"] = t.sigma;
        rows.push_back(e);
      } else {
        text << "  middle " << render_row2(t.middle2) << "  bottom " << render_row2(t.bottom2)
             << "  sigma " << t.sigma << "\n";
      }
    }
  } else {
    std::vector<int> top2 = w.entries2;
    top2.push_back(0);
    const std::vector<gtz::GlTableau> tabs = gtz::enumerate_gl_tableaux(top2);
    count = tabs.size();
    for (const gtz::GlTableau& t : tabs) {
      if (format == "json") {
        ordered_json e;
        e["middle"] = render_row2(t.middle2);
        e["middle2"] = t.middle2;
        e["bottom"] = render_row2(t.bottom2);
        e["bottom2"] = t.bottom2;
        rows.push_back(e);
      } else {
        text << "  middle " << render_row2(t.middle2) << "  bottom " << render_row2(t.bottom2)
             << "\n";
      }
    }
  }

  if (format == "json") {
    ordered_json j;
    j["tool"] = "gtzlab";
    j["command"] = "tableaux";
    j["algebra"] = gtz::algebra_name(w.algebra);
    j["n"] = w.n;
    j["weight"] = w.str();
    j["weight2"] = w.entries2;
    j["parity"] = w.half_integer() ? "half_integer" : "integer";
    j["count"] = count;
    j["tableaux"] = rows;
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream head;
    head << "tableaux: algebra " << gtz::algebra_name(w.algebra) << ", weight " << w.str()
         << ", count " << count << "\n";
    emit(head.str() + text.str(), out_path);
  }
  return 0;
}

int run_branch(int n, const std::string& weight_text, const std::string& format,
               const std::string& out_path) {
  const HighestWeight w = make_weight("b", n, weight_text);
  const std::vector<gtz::BTableau> tabs = gtz::enumerate_b_tableaux(w);
  const long long expected = gtz::weyl_dim_b(w.entries2);
  long long total = 0;
  ordered_json rows = ordered_json::array();
  std::ostringstream lines;
  for (const gtz::BTableau& t : tabs) {
    const long long dim = gtz::weyl_dim_b(t.bottom2);
    total += dim;
    if (format == "json") {
      ordered_json e;
      e["bottom"] = render_row2(t.bottom2);
      e["bottom2"] = t.bottom2;
      e["sigma"] = t.sigma;
      e["dim"] = dim;
      rows.push_back(e);
    } else {
      lines << "  bottom " << render_row2(t.bottom2) << "  sigma " << t.sigma << "  dim " << dim
            << "\n";
    }
  }
  if (format == "json") {
    ordered_json j;
    j["tool"] = "gtzlab";
    j["command"] = "branch";
    j["algebra"] = "b";
    j["n"] = w.n;
    j["weight"] = w.str();
    j["weight2"] = w.entries2;
    j["parity"] = w.half_integer() ? "half_integer" : "integer";
    j["rows"] = rows;
    j["total"] = total;
    j["expected"] = expected;
    j["pass"] = total == expected;
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream head;
    head << "branching: weight " << w.str() << ", dimension " << expected << "\n";
    lines << "total " << total << " = " << expected << " "
          << (total == expected ? "PASS" : "FAIL") << "\n";
    emit(head.str() + lines.str(), out_path);
  }
  return total == expected ? 0 : 1;
}

std::vector<HighestWeight> collect_weights(const std::string& algebra, int n,
                                           const std::string& weight_text,
                                           const std::string& max_weight_text) {
  if (!weight_text.empty()) return {make_weight(algebra, n, weight_text)};
  if (max_weight_text.empty()) {
    throw gtz::InvalidWeight("give either --weight or --max-weight");
  }
  if (n == 0) throw gtz::InvalidWeight("--max-weight sweeps need --n");
  const int max2 = parse_max2(max_weight_text);
  return algebra == "gl" ? gtz::sweep_weights_gl(n, max2) : gtz::sweep_weights_b(n, max2);
}

int emit_report(const gtz::Report& report, const std::string& format, const std::string& check,
                const std::string& out_path) {
  const std::string filter = check == "all" ? "" : check;
  if (format == "json") {
    emit(gtz::report_json(report, filter), out_path);
  } else if (format == "csv") {
    emit(gtz::report_csv(report, filter), out_path);
  } else {
    emit(gtz::report_text(report, filter), out_path);
  }
  return report.all_required_pass ? 0 : 1;
}

int run_verify(const std::string& algebra, int n, const std::string& weight_text,
               const std::string& max_weight_text, std::optional<int> bound,
               const std::string& check, const std::string& format,
               const std::string& out_path) {
  const std::vector<HighestWeight> weights =
      collect_weights(algebra, n, weight_text, max_weight_text);
  const auto& registry = algebra == "gl" ? gtz::check_registry_gl() : gtz::check_registry_b();
  if (check != "all" &&
      std::find(registry.begin(), registry.end(), check) == registry.end()) {
    throw gtz::Error("unknown check id for algebra " + algebra + ": " + check);
  }
  gtz::VerifyOptions opts;
  opts.pair_bound = bound;
  const gtz::Report report = algebra == "gl" ? gtz::run_verify_gl(weights, opts)
                                             : gtz::run_verify_b(weights, opts);
  return emit_report(report, format, check, out_path);
}

int run_report(const std::string& algebra, int n, const std::string& max_weight_text,
               const std::string& format, const std::string& check,
               const std::string& out_path) {
  gtz::VerifyOptions opts;
  gtz::Report report;
  if (algebra == "gl") {
    const int rank = n == 0 ? 2 : n;
    const int max2 = max_weight_text.empty() ? 6 : parse_max2(max_weight_text);
    report = gtz::run_verify_gl(gtz::sweep_weights_gl(rank, max2), opts);
  } else if (n != 0 || !max_weight_text.empty()) {
    const int rank = n == 0 ? 2 : n;
    const int max2 = max_weight_text.empty() ? (rank == 2 ? 6 : 4) : parse_max2(max_weight_text);
    report = gtz::run_verify_b(gtz::sweep_weights_b(rank, max2), opts);
  } else {
    // default aggregate: the full desk-scale sweep
    std::vector<HighestWeight> weights = gtz::sweep_weights_b(2, 6);
    const std::vector<HighestWeight> extra = gtz::sweep_weights_b(3, 4);
    weights.insert(weights.end(), extra.begin(), extra.end());
    report = gtz::run_verify_b(weights, opts);
  }
  return emit_report(report, format, check, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for the o(2n+1) -> o(2n-1) and "
               "gl(n+1) -> gl(n-1) restriction problems"};
  app.require_subcommand(1);

  const auto algebra_values = CLI::IsMember({"b", "gl"});
  const auto sign_values = CLI::IsMember({"plus", "minus", "both"});
  const auto form_values = CLI::IsMember({"paper", "plain", "both"});

  auto* solve = app.add_subcommand("solve", "solve one indicator system and print its kernel");
  std::string s_algebra = "b", s_weight, s_sign = "plus", s_format = "text", s_out;
  int s_n = 0;
  std::optional<int> s_bound;
  solve->add_option("--algebra", s_algebra, "problem family")->check(algebra_values);
  solve->add_option("--n", s_n, "rank (verified against the weight length)");
  solve->add_option("--weight", s_weight, "weight entries, e.g. 1,1 or 1/2,1/2")->required();
  solve->add_option("--sign", s_sign, "sign convention of the k = 2 operator (b only)")
      ->check(sign_values);
  solve->add_option("--bound", s_bound, "pair degree bound override (raised to the default)");
  solve->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--out", s_out, "write to a file instead of stdout");

  auto* tableaux = app.add_subcommand("tableaux", "enumerate the tableaux of a weight");
  std::string t_algebra = "b", t_weight, t_format = "text", t_out;
  int t_n = 0;
  tableaux->add_option("--algebra", t_algebra)->check(algebra_values);
  tableaux->add_option("--n", t_n);
  tableaux->add_option("--weight", t_weight)->required();
  tableaux->add_option("--format", t_format)->check(CLI::IsMember({"text", "json"}));
  tableaux->add_option("--out", t_out);

  auto* branch = app.add_subcommand("branch", "restriction dimension table for a b weight");
  std::string b_weight, b_format = "text", b_out;
  int b_n = 0;
  branch->add_option("--n", b_n);
  branch->add_option("--weight", b_weight)->required();
  branch->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));
  branch->add_option("--out", b_out);

  auto* verify = app.add_subcommand(
      "verify", "run the full check registry for one weight or a sweep");
  std::string v_algebra = "b", v_weight, v_max_weight, v_check = "all", v_format = "text", v_out;
  std::string v_sign = "both", v_form = "both";
  int v_n = 0;
  std::optional<int> v_bound;
  verify->add_option("--algebra", v_algebra)->check(algebra_values);
  verify->add_option("--n", v_n);
  verify->add_option("--weight", v_weight, "single weight");
  verify->add_option("--max-weight", v_max_weight, "sweep all dominant weights up to this entry");
  verify->add_option("--sign", v_sign, "accepted for symmetry; verification covers both signs")
      ->check(sign_values);
  verify
      ->add_option("--basis-form", v_form,
                   "accepted for symmetry; verification covers both basis forms")
      ->check(form_values);
  verify->add_option("--bound", v_bound, "pair degree bound override");
  verify->add_option("--check", v_check, "emit one check id only, or 'all'");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", v_out);

  auto* report = app.add_subcommand("report", "aggregate verification over the standard sweep");
  std::string r_algebra = "b", r_max_weight, r_check = "all", r_format = "json", r_out;
  int r_n = 0;
  report->add_option("--algebra", r_algebra)->check(algebra_values);
  report->add_option("--n", r_n, "restrict to one rank");
  report->add_option("--max-weight", r_max_weight, "override the sweep bound");
  report->add_option("--check", r_check);
  report->add_option("--format", r_format)->check(CLI::IsMember({"text", "json", "csv"}));
  report->add_option("--out", r_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(s_algebra, s_n, s_weight, s_sign, s_bound, s_format, s_out);
    }
    if (tableaux->parsed()) {
      return run_tableaux(t_algebra, t_n, t_weight, t_format, t_out);
    }
    if (branch->parsed()) {
      return run_branch(b_n, b_weight, b_format, b_out);
    }
    if (verify->parsed()) {
      return run_verify(v_algebra, v_n, v_weight, v_max_weight, v_bound, v_check, v_format,
                        v_out);
    }
    if (report->parsed()) {
      return run_report(r_algebra, r_n, r_max_weight, r_format, r_check, r_out);
    }
  } catch (const gtz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
