// JSON records for groups and cochains, and text rendering.

#ifndef HOCHBRACKET_IO_HPP_
#define HOCHBRACKET_IO_HPP_

#include <memory>
#include <string>
#include <utility>

#include <json.hpp>

#include "hochbracket/cochain.hpp"
#include "hochbracket/conversion.hpp"

namespace hb {

using json = nlohmann::json;

json load_json_file(const std::string& path);
json parse_json_text(const std::string& text);

// {"conductor": N, "dim": n, "generators": [[[entry, ...], ...], ...]} with optional
// "names" and "labels" (faithful matrices telling apart elements that act alike).
std::unique_ptr<Group> group_from_json(const json& j, size_t cap = Group::kDefaultCap);

// A list of {support, poly, poly_basis, wedge, wedge_basis} records, or
// {"degree": p, "terms": [...]} when the list may be empty.
Cochain cochain_from_json(const Group& G, const json& j);
// Canonical record in standard coordinates; re-parses to an equal cochain.
json cochain_to_json(const Group& G, const Cochain& c);
std::string render_cochain(const Group& G, const Cochain& c);

// "poly@word", e.g. "x1^2@g*h"; a missing tag means the identity.
std::pair<Poly, int> parse_algebra_element(const Group& G, const std::string& text);
json alg_elem_to_json(const Group& G, const AlgElem& x);
std::string render_alg_elem(const Group& G, const AlgElem& x);

std::string wedge_string(Wedge w, const std::string& prefix = "x");

}  // namespace hb

#endif  // HOCHBRACKET_IO_HPP_
