#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "cyclotome/errors.hpp"
#include "cyclotome/literal.hpp"
#include "cyclotome/report.hpp"
#include "cyclotome/serre_dims.hpp"

using namespace cyclotome;

namespace {

constexpr const char* kGrammar = R"txt(
Quiver:
  --type T           ADE type: A<n>, D<n> (n >= 4), E6, E7, E8
  --orientation O    linear | alternating | file:<path>
  quiver file        "vertices: n" then one "arrow: s t" per arrow (1-based)

Sparse-vector literal (--w, --wtilde, --v):
  literal := "0" | entry ("," entry)*
  entry   := point ["=" m]           m defaults to 1, repeats add up
  point   := i ":" a                 vertex i (1-based), height a mod 2h
           | name                    S1, P2, I3, t1P2, SigmaS1, Sigma^2P1, ...
           | "sigma(" name ")"       the point of I-hat below name
  W vectors live on I-hat (sigma(...) or i:a with a = xi(i) mod 2),
  V vectors on sigma(I-hat).

Pair literal (--pair):  "v=<literal>;w=<literal>"

Exit codes: 0 success, 1 verification failure or internal error, 2 usage error.
)txt";

struct Source {
  std::string type;
  std::string orientation = "linear";

  void attach(CLI::App* app) {
    app->add_option("--type", type, "ADE type, e.g. A3");
    app->add_option("--orientation", orientation, "linear | alternating | file:<path>");
    app->footer(kGrammar);
  }
  Quiver quiver() const {
    if (type.empty() && orientation.rfind("file:", 0) != 0) throw ParseError("--type is required");
    return Quiver::load(type, orientation);
  }
};

std::string orientation_line(const Quiver& q) {
  return q.type().name() + " [" + (!q.arrows().empty() ? q.orientation_label() : std::string("no arrows")) + "]";
}

int cmd_describe(const CycIndex& ci) {
  const Quiver& q = ci.quiver();
  const auto& cat = ci.category();
  const int n = q.rank();
  std::cout << "quiver " << orientation_line(q) << "\n";
  std::cout << "rank " << n << ", h = " << ci.h() << ", heights mod " << ci.period() << "\n";
  std::cout << "|I-hat| = " << ci.hat_vertices().size() << ", |sigma(I-hat)| = " << ci.sigma_hat_vertices().size()
            << "\n";
  std::cout << "positive roots " << q.positive_roots().size() << ", indecomposables " << cat.modules().size() << "\n";
  std::cout << "height function xi:";
  for (int i = 0; i < n; ++i) std::cout << " " << ci.xi()(i);
  std::cout << "\n\nCartan matrix\n";
  const IntMatrix c = q.cartan_matrix();
  for (int i = 0; i < n; ++i) {
    std::cout << " ";
    for (int j = 0; j < n; ++j) std::cout << " " << std::setw(2) << c.at(i, j);
    std::cout << "\n";
  }
  std::cout << "\nsigma(I-hat)\n";
  for (const auto& x : ci.sigma_hat_vertices())
    std::cout << "  " << x.vertex + 1 << ":" << x.height << "  " << ci.name(x) << "\n";
  std::cout << "\ngenerators\n";
  for (int i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    const DerivedObject s{cat.simple(i), 0}, ss{cat.simple(i), 1};
    std::cout << "  E_" << k << "  = L(0, " << to_string(ci, ci.e_sigma(s)) << ")\n";
    std::cout << "  K'_" << k << " = L" << to_string(ci, VWPair{v_f(ci, i), w_f(ci, i)}) << "\n";
    std::cout << "  K_" << k << "  = L" << to_string(ci, VWPair{v_sigma_f(ci, i), w_f(ci, i)}) << "\n";
    std::cout << "  F_" << k << "  = L(0, " << to_string(ci, ci.e_sigma(ss)) << ")\n";
  }
  return 0;
}

int cmd_ar_quiver(const CycIndex& ci, bool dot) {
  const auto& cat = ci.category();
  if (dot) {
    std::cout << cat.ar_quiver_dot();
    return 0;
  }
  std::cout << "window of " << orientation_line(ci.quiver()) << "\n";
  for (const auto& w : cat.window()) {
    std::cout << "  " << w.position.vertex + 1 << "," << w.position.step << "  " << cat.name(w.object) << "  "
              << w.signed_class.to_string();
    if (!w.middle.empty()) {
      std::cout << "  <-";
      for (const auto& m : w.middle) std::cout << " (" << m.vertex + 1 << "," << m.step << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_rep_space(const CycIndex& ci, bool dot, const std::string& v_lit, const std::string& w_lit) {
  const Quiver& q = ci.quiver();
  const VVector v = v_lit.empty() ? VVector() : parse_v_literal(ci, v_lit);
  const WVector w = w_lit.empty() ? WVector() : parse_w_literal(ci, w_lit);
  const bool dims = !v_lit.empty() || !w_lit.empty();
  const int n = q.rank(), period = ci.period();
  auto point = [&](int i, int a) { return ci.make(i, a); };
  auto node_id = [](int i, int a) { return "n" + std::to_string(i + 1) + "_" + std::to_string(a); };
  auto label = [&](int i, int a) {
    const CycVertex x = point(i, a);
    const bool hat = ci.in_hat(x);
    std::string s = std::string(hat ? "W(" : "V(") + ci.name(x) + ")";
    if (dims) s += " = " + std::to_string(hat ? w.at(x) : v.at(x));
    return s;
  };
  struct Edge {
    std::string from, to, label, color;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int a = 1; a <= period; ++a) {
      if (ci.in_hat(point(i, a))) {
        edges.push_back({node_id(i, a), node_id(i, a - 1), "alpha" + std::to_string(i + 1), "red"});
      } else {
        edges.push_back({node_id(i, a), node_id(i, a - 1), "beta" + std::to_string(i + 1), "blue"});
        for (const auto& arrow : q.arrows()) {
          int j = -1;
          std::string name;
          if (arrow.source == i) {
            j = arrow.target;
            name = "h";
          } else if (arrow.target == i) {
            j = arrow.source;
            name = "hbar";
          }
          if (j < 0) continue;
          name += "(" + std::to_string(arrow.source + 1) + "->" + std::to_string(arrow.target + 1) + ")";
          edges.push_back({node_id(i, a), node_id(j, a - 1), name, "black"});
        }
      }
    }
  if (!dot) {
    for (int a = 0; a <= period; ++a) {
      std::cout << "height " << a << ":";
      for (int i = 0; i < n; ++i) std::cout << "  " << label(i, a);
      std::cout << "\n";
    }
    for (const auto& e : edges) std::cout << "  " << e.from << " -> " << e.to << "  " << e.label << "\n";
    return 0;
  }
  std::cout << "digraph rep_space {\n";
  std::cout << "  graph [label=\"Rep(" << orientation_line(q) << ")\", layout=neato, splines=true];\n";
  std::cout << "  node [shape=plaintext];\n";
  for (int a = 0; a <= period; ++a)
    std::cout << "  h" << a << " [label=\"eps^" << a << "\", fontcolor=blue, pos=\"" << 2 * a << ",1!\"];\n";
  for (int i = 0; i < n; ++i)
    for (int a = 0; a <= period; ++a)
      std::cout << "  " << node_id(i, a) << " [label=\"" << label(i, a) << "\""
                << (ci.in_hat(point(i, a)) ? ", fontcolor=blue" : "") << ", pos=\"" << 2 * a << "," << -i << "!\"];\n";
  for (const auto& e : edges)
    std::cout << "  " << e.from << " -> " << e.to << " [label=\"" << e.label << "\", color=" << e.color << "];\n";
  std::cout << "}\n";
  return 0;
}

int cmd_enumerate(const CycIndex& ci, const std::string& w_lit, bool brute, bool json) {
  const WVector w = parse_w_literal(ci, w_lit);
  std::vector<VVector> vs;
  if (brute) {
    auto r = enumerate_l_dominant_bruteforce(ci, w);
    if (!r) throw Error("brute-force search exceeded its node budget");
    vs = *r;
  } else {
    vs = enumerate_l_dominant(ci, w);
  }
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["type"] = ci.quiver().type().name();
    j["orientation"] = ci.quiver().orientation_label();
    j["w"] = to_string(ci, w);
    j["count"] = vs.size();
    j["v"] = nlohmann::ordered_json::array();
    for (const auto& v : vs) j["v"].push_back(to_string(ci, v));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "w = " << to_string(ci, w) << "\n";
  for (const auto& v : vs) std::cout << "  v = " << to_string(ci, v) << "\n";
  std::cout << vs.size() << " l-dominant pairs\n";
  return 0;
}

int cmd_lift(const CycIndex& ci, const std::string& lit) {
  const WVector wt = parse_w_literal(ci, lit);
  std::cout << to_string(ci, solve_w_tilde(ci, wt)) << "\n";
  return 0;
}

int cmd_forms(const CycIndex& ci, const std::vector<std::string>& pairs, bool json) {
  if (pairs.size() != 2) throw ParseError("forms needs exactly two --pair options");
  const VWPair m1 = parse_pair_literal(ci, pairs[0]);
  const VWPair m2 = parse_pair_literal(ci, pairs[1]);
  const std::string out = forms_json(ci, m1, m2);
  if (json) {
    std::cout << out;
    return 0;
  }
  const auto j = nlohmann::ordered_json::parse(out);
  for (const auto& [k, val] : j.items()) {
    if (k == "schema") continue;
    std::cout << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }
  return 0;
}

int cmd_verify(const Source& src, const std::string& which, const std::string& format, bool verbose, int cap,
               bool all_orientations) {
  std::vector<Quiver> quivers;
  if (all_orientations)
    quivers = Quiver::all_orientations(src.quiver().type());
  else
    quivers.push_back(src.quiver());
  bool ok = true;
  for (const auto& q : quivers) {
    const CycIndex ci = CycIndex::build(q);
    const auto reports = verify_suite(ci, which, cap);
    for (const auto& r : reports) ok = ok && r.pass();
    if (format == "json")
      std::cout << render_json(reports);
    else if (format == "markdown")
      std::cout << render_markdown(reports);
    else
      std::cout << render_text(reports, verbose);
  }
  return ok ? 0 : 1;
}

int cmd_serre_dims(const Quiver& q, int maxdeg, bool json) {
  const auto dims = serre_quotient_dims(q, maxdeg);
  nlohmann::ordered_json j;
  if (json) {
    j["schema"] = 1;
    j["type"] = q.type().name();
    j["maxdeg"] = maxdeg;
    j["dims"] = nlohmann::ordered_json::array();
  }
  bool ok = true;
  for (const auto& [beta, d] : dims) {
    const auto k = kostant_partitions(q, beta);
    ok = ok && d == k;
    if (json)
      j["dims"].push_back({{"beta", beta.coords()}, {"dim", d}, {"kostant", k}});
    else
      std::cout << beta.to_string() << "  " << d << "  (Kostant " << k << ")\n";
  }
  if (json) std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of cyclic quiver varieties at roots of unity."};
  app.footer(kGrammar);
  app.require_subcommand(1);

  Source src;
  bool dot = false, json = false, markdown = false, brute = false, verbose = false, all_orientations = false;
  std::string w_lit, v_lit, which;
  std::vector<std::string> pairs;
  int cap = 3, maxdeg = 3;

  auto* describe = app.add_subcommand("describe", "Index sets, Cartan matrix and Chevalley generators");
  src.attach(describe);

  auto* ar = app.add_subcommand("ar-quiver", "AR quiver window of D^b(Q)");
  src.attach(ar);
  ar->add_flag("--dot", dot, "emit a DOT digraph");

  auto* rep = app.add_subcommand("rep-space", "Ladder diagram of the graded representation space");
  src.attach(rep);
  rep->add_flag("--dot", dot, "emit a DOT digraph");
  rep->add_option("--v", v_lit, "V dimension vector literal");
  rep->add_option("--w", w_lit, "W dimension vector literal");

  auto* en = app.add_subcommand("enumerate", "All l-dominant (v, w) for a fixed w");
  src.attach(en);
  en->add_option("--w", w_lit, "W vector literal")->required();
  en->add_flag("--bruteforce", brute, "use the capped exhaustive search");
  en->add_flag("--json", json);

  auto* lift = app.add_subcommand("lift", "The l-dominant pair in V+ x W^S with w - Cv = wtilde");
  src.attach(lift);
  lift->add_option("--wtilde", w_lit, "W+ vector literal")->required();

  auto* forms = app.add_subcommand("forms", "Form values for an ordered pair");
  src.attach(forms);
  forms->add_option("--pair", pairs, "pair literal, given twice")->required();
  forms->add_flag("--json", json);

  auto* ver = app.add_subcommand("verify", "Check the generator relations");
  src.attach(ver);
  ver->add_option("which", which, "all | ek | ef | kk | serre | same-form | same-n | exponent-table")
      ->required()
      ->check(CLI::IsMember({"all", "ek", "ef", "kk", "serre", "same-form", "same-n", "exponent-table"}));
  auto* jf = ver->add_flag("--json", json);
  auto* mf = ver->add_flag("--markdown", markdown);
  jf->excludes(mf);
  ver->add_flag("--verbose,-v", verbose, "list every check");
  ver->add_option("--same-n-mass", cap, "mass cap for same-n")->check(CLI::PositiveNumber);
  ver->add_flag("--all-orientations", all_orientations, "run over every orientation of the type");

  auto* sd = app.add_subcommand("serre-dims", "Graded dimensions of the Serre quotient against Kostant counts");
  src.attach(sd);
  sd->add_option("--maxdeg", maxdeg, "maximal total degree")->check(CLI::PositiveNumber);
  sd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sd) return cmd_serre_dims(src.quiver(), maxdeg, json);
    if (*ver) return cmd_verify(src, which, json ? "json" : markdown ? "markdown" : "text", verbose, cap, all_orientations);
    const CycIndex ci = CycIndex::build(src.quiver());
    if (*describe) return cmd_describe(ci);
    if (*ar) return cmd_ar_quiver(ci, dot);
    if (*rep) return cmd_rep_space(ci, dot, v_lit, w_lit);
    if (*en) return cmd_enumerate(ci, w_lit, brute, json);
    if (*lift) return cmd_lift(ci, w_lit);
    if (*forms) return cmd_forms(ci, pairs, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotADE& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotATree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotSimplyLaced& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
