#include "hochbracket/io.hpp"

#include <fstream>
#include <sstream>

#include "hochbracket/errors.hpp"

namespace hb {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

CycNum scalar(const json& v, int conductor) {
  if (v.is_number_integer()) return CycNum(v.get<long>());
  if (v.is_string()) return parse_cyclotomic(v.get<std::string>(), conductor);
  throw ParseError("matrix entries must be strings or integers");
}

int element_ref(const Group& G, const json& v) {
  if (v.is_number_integer()) {
    int idx = v.get<int>();
    if (idx < 0 || idx >= G.order()) throw GroupError("element index " + std::to_string(idx) + " is not in the group");
    return idx;
  }
  if (v.is_string()) return G.parse_element(v.get<std::string>());
  throw ParseError("support must be a generator word or an element index");
}

BasisRef basis_named(const Group& G, int tag, const json& term, const char* key) {
  std::string name = term.contains(key) ? term.at(key).get<std::string>() : "standard";
  if (name == "standard") return standard_basis(G.dim());
  if (name == "eigen") return G.eigen(tag)->basis;
  throw ParseError(std::string("field '") + key + "' must be \"standard\" or \"eigen\"");
}

}  // namespace

std::unique_ptr<Group> group_from_json(const json& j, size_t cap) {
  int conductor = int_field(j, "conductor");
  int dim = int_field(j, "dim");
  if (conductor < 1) throw ParseError("conductor must be positive");
  if (dim < 1 || dim > 8) throw ParseError("dim must lie in 1..8");
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("generators must be a list of matrices");
  auto read_matrix = [conductor](const json& g, int size, const char* what) {
    if (!g.is_array() || static_cast<int>(g.size()) != size)
      throw ParseError(std::string(what) + " has the wrong number of rows");
    Matrix m(size, size);
    for (int r = 0; r < size; ++r) {
      if (!g[r].is_array() || static_cast<int>(g[r].size()) != size)
        throw ParseError(std::string(what) + " row has the wrong length");
      for (int c = 0; c < size; ++c) m(r, c) = scalar(g[r][c], conductor);
    }
    return m;
  };
  std::vector<Matrix> mats;
  for (const auto& g : gens) mats.push_back(read_matrix(g, dim, "generator"));
  std::vector<Matrix> labels;
  if (j.contains("labels")) {
    const json& ls = j.at("labels");
    if (!ls.is_array() || ls.size() != mats.size()) throw ParseError("labels and generators differ in length");
    for (const auto& l : ls) labels.push_back(read_matrix(l, l.is_array() ? static_cast<int>(l.size()) : 0, "label"));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : j.at("names")) names.push_back(n.get<std::string>());
    if (names.size() != mats.size()) throw ParseError("names and generators differ in length");
  }
  return std::make_unique<Group>(std::move(mats), conductor, std::move(names), cap, std::move(labels));
}

Cochain cochain_from_json(const Group& G, const json& j) {
  const json* terms = &j;
  int degree = -1;
  if (j.is_object()) {
    degree = int_field(j, "degree");
    terms = &field(j, "terms");
  }
  if (!terms->is_array()) throw ParseError("a cocycle is a list of term records");
  if (degree < 0) {
    if (terms->empty()) throw ParseError("an empty term list needs an explicit degree");
    degree = static_cast<int>(field((*terms)[0], "wedge").size());
  }
  Cochain c(degree, G.dim());
  try {
    for (const auto& t : *terms) {
      int tag = element_ref(G, field(t, "support"));
      const json& w = field(t, "wedge");
      if (!w.is_array() || static_cast<int>(w.size()) != degree)
        throw ParseError("all wedges must have length " + std::to_string(degree));
      std::vector<int> idx;
      for (const auto& x : w) {
        int i = x.get<int>();
        if (i < 1 || i > G.dim()) throw ParseError("wedge index " + std::to_string(i) + " out of range");
        idx.push_back(i - 1);
      }
      BasisRef wb = basis_named(G, tag, t, "wedge_basis");
      basis_named(G, tag, t, "poly_basis");  // validated; x and w variables are both accepted
      Poly f = parse_poly(field(t, "poly").get<std::string>(), G.conductor(), wb, G.eigen(tag)->basis);
      int s = wedge_sort_sign(idx);
      if (s == 0) continue;
      c.add(tag, wedge_from_indices(idx), s < 0 ? -f : f);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed cocycle record: ") + e.what());
  }
  return c;
}

json cochain_to_json(const Group& G, const Cochain& c) {
  json terms = json::array();
  Cochain s = to_standard(canonical(G, c));
  for (const auto& [tag, form] : s.terms())
    for (const auto& [w, f] : form.comps) {
      json wedge = json::array();
      for (int i : wedge_indices(w)) wedge.push_back(i + 1);
      terms.push_back({{"support", G.word(tag)},
                       {"poly", f.to_string("x", G.conductor())},
                       {"poly_basis", "standard"},
                       {"wedge", wedge},
                       {"wedge_basis", "standard"}});
    }
  return {{"degree", c.degree()}, {"terms", terms}};
}

std::string wedge_string(Wedge w, const std::string& prefix) {
  std::string s;
  for (int i : wedge_indices(w)) s += (s.empty() ? "d" : "^d") + prefix + std::to_string(i + 1);
  return s.empty() ? "1" : s;
}

std::string render_cochain(const Group& G, const Cochain& c) {
  Cochain s = to_standard(canonical(G, c));
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [tag, form] : s.terms())
    for (const auto& [w, f] : form.comps) {
      if (!out.empty()) out += "\n";
      out += "[" + G.word(tag) + "] (" + f.to_string("x", G.conductor()) + ") " + wedge_string(w);
    }
  return out;
}

std::pair<Poly, int> parse_algebra_element(const Group& G, const std::string& text) {
  auto at = text.rfind('@');
  std::string poly = at == std::string::npos ? text : text.substr(0, at);
  int tag = at == std::string::npos ? G.identity() : G.parse_element(text.substr(at + 1));
  return {parse_poly(poly, G.conductor(), standard_basis(G.dim())), tag};
}

json alg_elem_to_json(const Group& G, const AlgElem& x) {
  json out = json::array();
  for (const auto& [tag, f] : x) out.push_back({{"element", G.word(tag)}, {"poly", f.to_string("x", G.conductor())}});
  return out;
}

std::string render_alg_elem(const Group& G, const AlgElem& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [tag, f] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + f.to_string("x", G.conductor()) + ")*[" + G.word(tag) + "]";
  }
  return out;
}

}  // namespace hb
