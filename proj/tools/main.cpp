#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "hochbracket/bracket.hpp"
#include "hochbracket/errors.hpp"
#include "hochbracket/hecke.hpp"
#include "hochbracket/io.hpp"
#include "hochbracket/verify.hpp"

using namespace hb;

namespace {

struct Session {
  std::string group_path;
  std::vector<std::string> cocycles;
  int degree = -1;
  int poly_degree = -1;
  std::string format = "text";
  int jobs = 1;
  int verbosity = 0;
  size_t cap = Group::kDefaultCap;
  std::string method = "det";
  std::string strategy = "full";
  std::string left, right;
  std::vector<std::string> standard_for;
  uint64_t seed = 1;
  int samples = 12;
};

void common(CLI::App* cmd, Session& s) {
  cmd->add_option("--group", s.group_path, "group JSON file")->required();
  cmd->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--verbosity", s.verbosity, "0, 1 or 2")->check(CLI::Range(0, 2));
  cmd->add_option("--cap", s.cap, "closure size limit");
}

void bracket_flags(CLI::App* cmd, Session& s) {
  cmd->add_option("--method", s.method, "det or direct")->check(CLI::IsMember({"det", "direct"}));
  cmd->add_option("--strategy", s.strategy, "full or equivariant")
      ->check(CLI::IsMember({"full", "equivariant"}));
  cmd->add_option("--standard-basis", s.standard_for, "use the standard basis as B_g for this element (repeatable)");
}

BracketOptions bracket_options(const Group& G, const Session& s) {
  BracketOptions o;
  o.jobs = s.jobs;
  o.method = s.method == "direct" ? CircMethod::direct : CircMethod::det;
  o.strategy = s.strategy == "equivariant" ? BracketStrategy::equivariant : BracketStrategy::full;
  if (s.verbosity >= 2) o.log = [](const std::string& line) { std::cerr << line << "\n"; };
  for (const auto& word : s.standard_for) {
    int g = G.parse_element(word);
    o.bases.custom[g] = G.custom_eigen(g, Matrix::identity(G.dim()), "standard");
  }
  return o;
}

std::string eigen_list(const Group& G, int g) {
  std::string out;
  for (const auto& e : G.eigen(g)->eigenvalues) {
    if (!out.empty()) out += ", ";
    out += format_scalar(e, G.conductor());
  }
  return out;
}

void print(const Session& s, const json& j, const std::string& text) {
  if (s.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

Cochain load_cocycle(const Group& G, const std::string& path, const char* what, bool project) {
  Cochain c = cochain_from_json(G, load_json_file(path));
  if (project && !in_H(G, c)) {
    std::cerr << "warning: " << what << " is not in H; using its projection\n";
    c = proj_H(G, c);
  }
  return c;
}

int cmd_group_info(const Session& s, const Group& G) {
  const auto& cls = G.classes();
  json classes = json::array();
  std::string text = "order " + std::to_string(G.order()) + "\nexponent " + std::to_string(G.exponent()) +
                     "\nconductor " + std::to_string(G.conductor()) + "\nclasses " +
                     std::to_string(cls.representatives.size()) + "\n";
  for (size_t c = 0; c < cls.representatives.size(); ++c) {
    int g = cls.representatives[c];
    int codim = G.eigen(g)->perp_count;
    classes.push_back({{"representative", G.word(g)},
                       {"size", cls.members[c].size()},
                       {"centralizer_order", G.centralizer(g).size()},
                       {"codim", codim},
                       {"eigenvalues", eigen_list(G, g)}});
    text += "  " + G.word(g) + "  size " + std::to_string(cls.members[c].size()) + "  codim " +
            std::to_string(codim) + "  eigenvalues [" + eigen_list(G, g) + "]\n";
  }
  json kernel = json::array();
  std::string ktext;
  for (int k : cls.kernel) {
    kernel.push_back(G.word(k));
    ktext += (ktext.empty() ? "" : ", ") + G.word(k);
  }
  text += "kernel {" + ktext + "}";
  print(s, {{"order", G.order()}, {"exponent", G.exponent()}, {"conductor", G.conductor()},
            {"classes", classes}, {"kernel", kernel}},
        text);
  return 0;
}

int cmd_cohomology_basis(const Session& s, const Group& G) {
  if (s.degree < 0 || s.poly_degree < 0) throw PreconditionError("--degree and --poly-degree must be >= 0");
  auto basis = invariant_basis(G, s.degree, s.poly_degree);
  json list = json::array();
  std::string text = "dimension " + std::to_string(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    list.push_back(cochain_to_json(G, basis[i]));
    text += "\n#" + std::to_string(i + 1) + "\n" + render_cochain(G, basis[i]);
  }
  print(s, {{"degree", s.degree}, {"poly_degree", s.poly_degree}, {"dimension", basis.size()}, {"basis", list}},
        text);
  return 0;
}

int cmd_bracket(const Session& s, const Group& G) {
  if (s.cocycles.size() != 2) throw ParseError("bracket needs exactly two --cocycle files");
  Cochain a = load_cocycle(G, s.cocycles[0], "first cocycle", true);
  Cochain b = load_cocycle(G, s.cocycles[1], "second cocycle", true);
  bool class_level = !is_invariant(G, a) || !is_invariant(G, b);
  Cochain r = gerstenhaber_bracket(G, a, b, bracket_options(G, s));
  std::string text = render_cochain(G, r) + "\nzero in cohomology: " + (r.is_zero() ? "true" : "false");
  if (class_level) text += "\nnote: non-invariant input; the result is class-level only";
  if (s.verbosity >= 1) {
    std::string sup;
    for (int t : r.support()) sup += (sup.empty() ? "" : ", ") + G.word(t);
    text += "\nsupport {" + sup + "}";
  }
  print(s, {{"bracket", cochain_to_json(G, r)}, {"is_zero", r.is_zero()}, {"class_level_only", class_level}},
        text);
  return 0;
}

int cmd_square(const Session& s, const Group& G) {
  if (s.cocycles.size() != 1) throw ParseError("square needs exactly one --cocycle file");
  Cochain a = load_cocycle(G, s.cocycles[0], "cocycle", true);
  PoissonReport r = poisson_check(G, a, bracket_options(G, s));
  std::string text = render_cochain(G, r.square) + "\npoisson: " + (r.poisson ? "true" : "false");
  if (r.averaged) text += "\nnote: input was averaged over G";
  print(s, {{"square", cochain_to_json(G, r.square)}, {"poisson", r.poisson}, {"averaged", r.averaged}}, text);
  return 0;
}

int cmd_poisson_scan(const Session& s, const Group& G) {
  if (s.poly_degree < 0) throw PreconditionError("--poly-degree must be >= 0");
  auto basis = invariant_basis(G, 2, s.poly_degree);
  BracketOptions o = bracket_options(G, s);
  std::mt19937_64 rng(s.seed);
  json rows = json::array();
  std::string text;
  auto scan = [&](const std::string& label, const Cochain& c) {
    bool on_k = false;
    for (int t : c.support()) on_k = on_k || G.in_kernel(t);
    bool zero = gerstenhaber_bracket(G, c, c, o).is_zero();
    rows.push_back({{"label", label}, {"cocycle", cochain_to_json(G, c)}, {"square_zero", zero},
                    {"support", on_k ? "meets K" : "off K"}});
    text += label + "  " + (on_k ? "meets K" : "off K") + "  square " + (zero ? "0" : "nonzero") + "\n";
  };
  for (size_t i = 0; i < basis.size(); ++i) scan("#" + std::to_string(i + 1), basis[i]);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int k = 0; k < s.samples && basis.size() > 1; ++k) {
    Cochain c(2, G.dim());
    std::string label = "mix";
    for (size_t i = 0; i < basis.size(); ++i) {
      int x = coeff(rng);
      if (x) c += basis[i].scaled(CycNum(x));
      label += " " + std::to_string(x);
    }
    if (!c.is_zero()) scan(label, c);
  }
  print(s, {{"poly_degree", s.poly_degree}, {"rows", rows}}, text.empty() ? "no degree-2 classes" : text);
  return 0;
}

int cmd_hecke_params(const Session& s, const Group& G) {
  HeckeReport r = hecke_parameter_space(G);
  auto space = constant_cocycle_space(G);
  json classes = json::array();
  std::string text = "class        size  codim  summand       dim\n";
  for (const auto& c : r.classes) {
    classes.push_back({{"representative", G.word(c.representative)}, {"size", c.class_size}, {"codim", c.codim},
                       {"summand", summand_name(c.summand)}, {"dimension", c.dimension}, {"reason", c.reason}});
    std::string w = G.word(c.representative);
    std::string sm = summand_name(c.summand);
    text += w + std::string(w.size() < 13 ? 13 - w.size() : 1, ' ') + std::to_string(c.class_size) +
            std::string(6 - std::min<size_t>(5, std::to_string(c.class_size).size()), ' ') + std::to_string(c.codim) +
            "      " + sm + std::string(sm.size() < 14 ? 14 - sm.size() : 1, ' ') + std::to_string(c.dimension) + "\n";
  }
  text += "total " + std::to_string(r.total) + " (basis of constant invariant cocycles: " +
          std::to_string(space.size()) + ")";
  json rels = json::array();
  for (size_t i = 0; i < space.size(); ++i) {
    json one = json::array();
    if (s.verbosity >= 1) text += "\n#" + std::to_string(i + 1);
    for (const auto& rel : pbw_relations(G, space[i])) {
      std::string line = relation_string(G, rel);
      one.push_back(line);
      if (s.verbosity >= 1) text += "\n  " + line;
    }
    rels.push_back({{"cocycle", cochain_to_json(G, space[i])}, {"relations", one}});
  }
  print(s, {{"classes", classes}, {"total", r.total}, {"basis_size", space.size()}, {"parameters", rels}}, text);
  return r.total == static_cast<int>(space.size()) ? 0 : 5;
}

int cmd_mu1(const Session& s, const Group& G) {
  if (s.cocycles.size() != 1) throw ParseError("mu1 needs exactly one --cocycle file");
  if (s.left.empty() || s.right.empty()) throw ParseError("mu1 needs --left and --right");
  Cochain a = load_cocycle(G, s.cocycles[0], "cocycle", false);
  Mu1Result r = mu1(G, a, parse_algebra_element(G, s.left), parse_algebra_element(G, s.right));
  std::string text = render_alg_elem(G, r.value) + "\ndegree shift " + std::to_string(r.degree_shift) +
                     (r.constant ? " (constant cocycle)" : "");
  print(s, {{"value", alg_elem_to_json(G, r.value)}, {"degree_shift", r.degree_shift}, {"constant", r.constant}},
        text);
  return 0;
}

int cmd_verify(const Session& s, const Group& G) {
  VerifyOptions o;
  o.poly_degree = s.poly_degree < 0 ? 1 : s.poly_degree;
  o.seed = s.seed;
  o.jobs = s.jobs;
  o.samples = s.samples;
  auto suites = run_verify(G, o);
  bool ok = true;
  json rows = json::array();
  std::string text;
  for (const auto& r : suites) {
    ok = ok && r.failed == 0;
    rows.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"first_failure", r.first_failure}});
    text += (r.failed ? "FAIL " : "ok   ") + r.name + "  " + std::to_string(r.passed) + " passed, " +
            std::to_string(r.failed) + " failed" + (r.first_failure.empty() ? "" : " (" + r.first_failure + ")") +
            "\n";
  }
  print(s, {{"suites", rows}, {"ok", ok}}, text);
  return ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology and Gerstenhaber brackets for S(V)#G"};
  app.require_subcommand(1);
  Session s;

  auto* info = app.add_subcommand("group-info", "order, classes, kernel and eigen-data");
  common(info, s);

  auto* basis = app.add_subcommand("cohomology-basis", "basis of (H^p)^G up to a polynomial degree");
  common(basis, s);
  basis->add_option("--degree", s.degree, "cohomological degree p")->required();
  basis->add_option("--poly-degree", s.poly_degree, "polynomial degree bound d")->required();

  auto* bracket = app.add_subcommand("bracket", "Gerstenhaber bracket of two cocycles");
  common(bracket, s);
  bracket_flags(bracket, s);
  bracket->add_option("--cocycle", s.cocycles, "cocycle JSON file (twice)")->required();

  auto* square = app.add_subcommand("square", "square bracket and Poisson check");
  common(square, s);
  bracket_flags(square, s);
  square->add_option("--cocycle", s.cocycles, "cocycle JSON file")->required();

  auto* scan = app.add_subcommand("poisson-scan", "square brackets over a basis of (H^2)^G");
  common(scan, s);
  bracket_flags(scan, s);
  scan->add_option("--poly-degree", s.poly_degree, "polynomial degree bound d")->required();
  scan->add_option("--seed", s.seed, "seed for random combinations");
  scan->add_option("--samples", s.samples, "number of random combinations");

  auto* hecke = app.add_subcommand("hecke-params", "graded Hecke parameter space");
  common(hecke, s);

  auto* m1 = app.add_subcommand("mu1", "first multiplication map of the deformation");
  common(m1, s);
  m1->add_option("--cocycle", s.cocycles, "invariant cocycle JSON file")->required();
  m1->add_option("--left", s.left, "poly@word")->required();
  m1->add_option("--right", s.right, "poly@word")->required();

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  common(verify, s);
  verify->add_option("--poly-degree", s.poly_degree, "polynomial degree bound d");
  verify->add_option("--seed", s.seed, "random seed");
  verify->add_option("--samples", s.samples, "cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto G = group_from_json(load_json_file(s.group_path), s.cap);
    auto* cmd = app.get_subcommands().front();
    if (cmd == info) return cmd_group_info(s, *G);
    if (cmd == basis) return cmd_cohomology_basis(s, *G);
    if (cmd == bracket) return cmd_bracket(s, *G);
    if (cmd == square) return cmd_square(s, *G);
    if (cmd == scan) return cmd_poisson_scan(s, *G);
    if (cmd == hecke) return cmd_hecke_params(s, *G);
    if (cmd == m1) return cmd_mu1(s, *G);
    if (cmd == verify) return cmd_verify(s, *G);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    std::cerr << "group error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
