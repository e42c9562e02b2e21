#pragma once

#include <string>
#include <string_view>

#include "hexad/cone.hpp"
#include "hexad/diff_cochain.hpp"

namespace hexad {

// Text formats. Blank lines and '#' comments are ignored everywhere.
//
//   complex:       name <id> / vertices <n> / facet v0 v1 ...
//   cochain:       [cochain] / degree <k> / ring Z|Q|QmodZ / value (v0,v1,...) p/q
//   form:          whitney-form / degree <k> / [ring Q] / value ...
//   diff-cochain:  diff-cochain / level <q> / degree <k> / section c|T|omega / value ...
//   cone-cochain:  cone-cochain / degree <k> / section u|v / value ...
//
// A value line may also list the vertices bare: `value 0 1 1/2`. Simplices
// that are not mentioned get the value 0. Errors carry line and column.

enum class ElementKind { Cochain, Form, DiffCochain, ConeCochain };

std::string_view element_kind_name(ElementKind k);

std::string read_file(const std::string& path);

SimplicialComplex parse_complex(std::string_view text, const std::string& source);
SimplicialComplex load_complex(const std::string& path);

ElementKind detect_element(std::string_view text, const std::string& source);
Cochain parse_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source);
WhitneyForm parse_form(const SimplicialComplex& x, std::string_view text, const std::string& source);
DiffCochain parse_diff_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source);
ConeCochain parse_cone_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source);

std::string format_complex(const SimplicialComplex& x);
std::string format_cochain(const SimplicialComplex& x, const Cochain& c);
std::string format_form(const SimplicialComplex& x, const WhitneyForm& w);
std::string format_diff_cochain(const SimplicialComplex& x, const DiffCochain& d);
std::string format_cone_cochain(const SimplicialComplex& x, const ConeCochain& e);

}  // namespace hexad
