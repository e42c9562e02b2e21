#include "hexad/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hexad/errors.hpp"

namespace hexad {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (raw[i] == '(') {
        while (i < raw.size() && raw[i] != ')') ++i;
        if (i < raw.size()) ++i;
      } else {
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      }
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const Line& l, std::size_t column, const std::string& msg) const {
    throw ParseError(source_, l.number, column, msg);
  }

  long integer(const Line& l, const Token& t) const {
    long v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail(l, t.column, "expected an integer, got '" + t.text + "'");
    return v;
  }

  Rational rational(const Line& l, const Token& t) const {
    try {
      return parse_rational(t.text);
    } catch (const std::exception&) {
      fail(l, t.column, "expected a rational p or p/q, got '" + t.text + "'");
    }
  }

  void arity(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n)
      fail(l, l.tokens.front().column, "'" + l.tokens.front().text + "' expects " + std::to_string(n - 1) + " argument(s)");
  }

  Simplex simplex(const Line& l, const std::vector<Token>& tokens) const {
    Simplex s;
    if (tokens.size() == 1 && tokens[0].text.front() == '(') {
      const Token& t = tokens[0];
      if (t.text.back() != ')') fail(l, t.column, "unterminated simplex tuple");
      std::string inner = t.text.substr(1, t.text.size() - 2);
      std::size_t offset = 0;
      std::stringstream in(inner);
      std::string part;
      while (std::getline(in, part, ',')) {
        std::size_t a = part.find_first_not_of(" \t");
        std::size_t b = part.find_last_not_of(" \t");
        if (a == std::string::npos) fail(l, t.column + 1 + offset, "empty vertex in simplex tuple");
        s.push_back(static_cast<int>(integer(l, Token{part.substr(a, b - a + 1), t.column + 1 + offset + a})));
        offset += part.size() + 1;
      }
    } else {
      for (const auto& t : tokens) s.push_back(static_cast<int>(integer(l, t)));
    }
    if (s.empty()) fail(l, tokens.empty() ? 0 : tokens[0].column, "empty simplex");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] >= s[i]) fail(l, tokens[0].column, "simplex vertices must be strictly increasing in " + to_string(s));
    return s;
  }

  // `value <simplex> <rational>` lines into a vector indexed by the k-simplices of x.
  RatVector values(const SimplicialComplex& x, int degree, const std::vector<const Line*>& lines) const {
    RatVector v(x.count(degree), Rational(0));
    std::vector<bool> seen(v.size(), false);
    for (const Line* l : lines) {
      if (l->tokens.size() < 3) fail(*l, l->tokens.front().column, "'value' expects a simplex and a rational");
      const std::vector<Token> mid(l->tokens.begin() + 1, l->tokens.end() - 1);
      const Simplex s = simplex(*l, mid);
      if (static_cast<int>(s.size()) != degree + 1)
        fail(*l, mid.front().column, to_string(s) + " is not a " + std::to_string(degree) + "-simplex");
      const auto idx = x.index_of(s);
      if (!idx) fail(*l, mid.front().column, "simplex " + to_string(s) + " is not in complex '" + x.name() + "'");
      if (seen[*idx]) fail(*l, mid.front().column, "duplicate value for " + to_string(s));
      seen[*idx] = true;
      v[*idx] = rational(*l, l->tokens.back());
    }
    return v;
  }

  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
};

const std::map<std::string, ElementKind, std::less<>> kind_headers{
    {"cochain", ElementKind::Cochain},
    {"whitney-form", ElementKind::Form},
    {"diff-cochain", ElementKind::DiffCochain},
    {"cone-cochain", ElementKind::ConeCochain},
};

// Splits an element file into header keys (once each), value lines by section and the kind line.
struct ElementText {
  std::vector<Line> lines;
  std::map<std::string, const Line*> keys;
  std::map<std::string, std::vector<const Line*>> sections;
};

ElementText split(const Parser& p, std::string_view text, ElementKind expected, const std::vector<std::string>& allowed_keys,
                  const std::vector<std::string>& allowed_sections) {
  ElementText e;
  e.lines = tokenize(text);
  if (e.lines.empty()) throw ParseError(p.source(), 1, 0, "empty element file");
  std::size_t first = 0;
  const auto header = kind_headers.find(e.lines[0].tokens[0].text);
  if (header != kind_headers.end()) {
    if (header->second != expected)
      p.fail(e.lines[0], 1, "expected a " + std::string(element_kind_name(expected)) + " file, found '" + header->first + "'");
    p.arity(e.lines[0], 1);
    first = 1;
  } else if (expected != ElementKind::Cochain) {
    p.fail(e.lines[0], 1, "missing '" + std::string(element_kind_name(expected)) + "' header");
  }
  std::string section = allowed_sections.empty() ? "" : "-";
  for (std::size_t i = first; i < e.lines.size(); ++i) {
    const Line& l = e.lines[i];
    const std::string& key = l.tokens[0].text;
    if (key == "value") {
      if (section == "-") p.fail(l, 1, "value line before any 'section'");
      e.sections[section].push_back(&l);
    } else if (key == "section" && !allowed_sections.empty()) {
      p.arity(l, 2);
      section = l.tokens[1].text;
      if (std::find(allowed_sections.begin(), allowed_sections.end(), section) == allowed_sections.end())
        p.fail(l, l.tokens[1].column, "unknown section '" + section + "'");
      if (e.sections.count(section)) p.fail(l, l.tokens[1].column, "duplicate section '" + section + "'");
      e.sections[section];
    } else if (std::find(allowed_keys.begin(), allowed_keys.end(), key) != allowed_keys.end()) {
      if (!e.sections.empty()) p.fail(l, 1, "'" + key + "' must precede the sections");
      p.arity(l, 2);
      if (!e.keys.emplace(key, &l).second) p.fail(l, 1, "duplicate '" + key + "'");
    } else {
      p.fail(l, 1, "unknown keyword '" + key + "'");
    }
  }
  return e;
}

int required_int(const Parser& p, const ElementText& e, const std::string& key) {
  auto it = e.keys.find(key);
  if (it == e.keys.end()) throw ParseError(p.source(), e.lines.back().number, 0, "missing '" + key + "' line");
  return static_cast<int>(p.integer(*it->second, it->second->tokens[1]));
}

std::vector<const Line*> section_lines(const ElementText& e, const std::string& name) {
  auto it = e.sections.find(name);
  return it == e.sections.end() ? std::vector<const Line*>{} : it->second;
}

Cochain cochain_of(const Parser& p, const SimplicialComplex& x, int degree, Ring ring, const std::vector<const Line*>& lines) {
  const RatVector v = p.values(x, degree, lines);
  if (ring == Ring::Integer) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Rational r = p.rational(*lines[i], lines[i]->tokens.back());
      if (!is_integral(r)) p.fail(*lines[i], lines[i]->tokens.back().column, "integer cochain with value " + to_string(r));
    }
  }
  return Cochain(degree, ring, v);
}

void append_values(std::ostringstream& out, const SimplicialComplex& x, int degree, const RatVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out << "value " << to_string(x.simplices(degree)[i]) << " " << to_string(v[i]) << "\n";
}

}  // namespace

std::string_view element_kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Cochain: return "cochain";
    case ElementKind::Form: return "whitney-form";
    case ElementKind::DiffCochain: return "diff-cochain";
    case ElementKind::ConeCochain: return "cone-cochain";
  }
  return "?";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SimplicialComplex parse_complex(std::string_view text, const std::string& source) {
  const Parser p(source);
  std::optional<std::string> name;
  std::optional<std::size_t> vertices;
  std::vector<Simplex> facets;
  const auto lines = tokenize(text);
  for (const auto& l : lines) {
    const std::string& key = l.tokens[0].text;
    if (key == "name") {
      p.arity(l, 2);
      if (name) p.fail(l, 1, "duplicate 'name'");
      name = l.tokens[1].text;
    } else if (key == "vertices") {
      p.arity(l, 2);
      if (vertices) p.fail(l, 1, "duplicate 'vertices'");
      const long n = p.integer(l, l.tokens[1]);
      if (n < 0) p.fail(l, l.tokens[1].column, "vertex count must be non-negative");
      vertices = static_cast<std::size_t>(n);
    } else if (key == "facet") {
      if (l.tokens.size() < 2) p.fail(l, 1, "'facet' expects at least one vertex");
      Simplex f;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const long v = p.integer(l, l.tokens[i]);
        if (v < 0) p.fail(l, l.tokens[i].column, "negative vertex index");
        f.push_back(static_cast<int>(v));
      }
      facets.push_back(std::move(f));
    } else {
      p.fail(l, 1, "unknown keyword '" + key + "'");
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!name) throw ParseError(source, last, 0, "missing 'name' line");
  if (!vertices) throw ParseError(source, last, 0, "missing 'vertices' line");
  return SimplicialComplex::from_facets(*name, *vertices, facets);
}

SimplicialComplex load_complex(const std::string& path) { return parse_complex(read_file(path), path); }

ElementKind detect_element(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(source, 1, 0, "empty element file");
  const auto it = kind_headers.find(lines[0].tokens[0].text);
  return it == kind_headers.end() ? ElementKind::Cochain : it->second;
}

Cochain parse_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source) {
  const Parser p(source);
  const ElementText e = split(p, text, ElementKind::Cochain, {"degree", "ring"}, {});
  const int degree = required_int(p, e, "degree");
  auto it = e.keys.find("ring");
  if (it == e.keys.end()) throw ParseError(source, e.lines.back().number, 0, "missing 'ring' line");
  Ring ring;
  try {
    ring = parse_ring(it->second->tokens[1].text);
  } catch (const std::exception& err) {
    p.fail(*it->second, it->second->tokens[1].column, err.what());
  }
  return cochain_of(p, x, degree, ring, section_lines(e, ""));
}

WhitneyForm parse_form(const SimplicialComplex& x, std::string_view text, const std::string& source) {
  const Parser p(source);
  const ElementText e = split(p, text, ElementKind::Form, {"degree", "ring"}, {});
  if (auto it = e.keys.find("ring"); it != e.keys.end() && it->second->tokens[1].text != "Q")
    p.fail(*it->second, it->second->tokens[1].column, "forms have ring Q");
  const int degree = required_int(p, e, "degree");
  return WhitneyForm{degree, p.values(x, degree, section_lines(e, ""))};
}

DiffCochain parse_diff_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source) {
  const Parser p(source);
  const ElementText e = split(p, text, ElementKind::DiffCochain, {"level", "degree"}, {"c", "T", "omega"});
  DiffCochain d = DiffCochain::zero(x, required_int(p, e, "level"), required_int(p, e, "degree"));
  d.c = cochain_of(p, x, d.degree, Ring::Integer, section_lines(e, "c"));
  d.T = cochain_of(p, x, d.degree - 1, Ring::Rational, section_lines(e, "T"));
  if (e.sections.count("omega")) {
    if (!d.has_form()) p.fail(*e.keys.at("degree"), 1, "degree below level: the element has no form slot");
    d.omega = WhitneyForm{d.degree, p.values(x, d.degree, section_lines(e, "omega"))};
  }
  return d;
}

ConeCochain parse_cone_cochain(const SimplicialComplex& x, std::string_view text, const std::string& source) {
  const Parser p(source);
  const ElementText e = split(p, text, ElementKind::ConeCochain, {"degree"}, {"u", "v"});
  const int degree = required_int(p, e, "degree");
  return ConeCochain{degree, cochain_of(p, x, degree + 1, Ring::Integer, section_lines(e, "u")),
                     cochain_of(p, x, degree, Ring::Rational, section_lines(e, "v"))};
}

std::string format_complex(const SimplicialComplex& x) {
  std::ostringstream out;
  out << "name " << x.name() << "\nvertices " << x.vertex_count() << "\n";
  for (const auto& f : x.facets()) {
    if (f.size() == 1) continue;
    out << "facet";
    for (int v : f) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string format_cochain(const SimplicialComplex& x, const Cochain& c) {
  std::ostringstream out;
  out << "cochain\ndegree " << c.degree() << "\nring " << ring_name(c.ring()) << "\n";
  append_values(out, x, c.degree(), c.values());
  return out.str();
}

std::string format_form(const SimplicialComplex& x, const WhitneyForm& w) {
  std::ostringstream out;
  out << "whitney-form\ndegree " << w.degree << "\nring Q\n";
  append_values(out, x, w.degree, w.coefficients);
  return out.str();
}

std::string format_diff_cochain(const SimplicialComplex& x, const DiffCochain& d) {
  std::ostringstream out;
  out << "diff-cochain\nlevel " << d.level << "\ndegree " << d.degree << "\nsection c\n";
  append_values(out, x, d.degree, d.c.values());
  out << "section T\n";
  append_values(out, x, d.degree - 1, d.T.values());
  if (d.omega) {
    out << "section omega\n";
    append_values(out, x, d.degree, d.omega->coefficients);
  }
  return out.str();
}

std::string format_cone_cochain(const SimplicialComplex& x, const ConeCochain& e) {
  std::ostringstream out;
  out << "cone-cochain\ndegree " << e.degree << "\nsection u\n";
  append_values(out, x, e.degree + 1, e.u.values());
  out << "section v\n";
  append_values(out, x, e.degree, e.v.values());
  return out.str();
}

}  // namespace hexad
