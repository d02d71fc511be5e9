#include "psbck/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "psbck/error.hpp"
#include "psbck/limits.hpp"

namespace psbck {
namespace {

struct Token {
  std::string text;
  SourcePos pos;
};
using TokenLine = std::vector<Token>;

const std::vector<std::string_view> kHeaders = {"algebra", "map", "valuation", "subset", "hom", "classes"};
const std::vector<std::string_view> kFields = {"elements", "one", "zero", "arrow", "squig", "odot"};

bool is_table_field(std::string_view f) { return f == "arrow" || f == "squig" || f == "odot"; }

struct Field {
  std::string name;
  SourcePos pos;
  TokenLine inline_tokens;
  std::vector<TokenLine> lines;
};

struct Block {
  std::string kind;
  SourcePos pos;
  TokenLine header;  // tokens before the colon, keyword excluded
  TokenLine inline_tokens;  // tokens after the colon on the header line
  std::vector<TokenLine> lines;
  std::vector<Field> fields;  // algebra blocks only
};

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  Document run();

 private:
  [[noreturn]] void fail(SourcePos pos, const std::string& msg, ErrorCode code = ErrorCode::kParseError) const {
    throw WorkbenchError(code, source_ + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                   ": " + msg);
  }

  std::vector<Block> split_blocks();
  void split_header(Block& b, const TokenLine& line);
  void build_algebra(const Block& b);
  void build_dependent(const Block& b);
  void claim(const std::string& name, SourcePos pos);

  const AlgebraEntry& algebra_ref(const Token& t) const;
  Element element(const FiniteAlgebra& a, const Token& t) const;
  Element raw_element(const std::map<std::string, Element>& ids, const Token& t, const std::string& alg) const;
  std::vector<std::vector<Element>> table(const Field& f, const std::vector<std::string>& names,
                                          const std::map<std::string, Element>& ids, const std::string& alg) const;

  std::string_view text_;
  std::string source_;
  Document doc_;
  std::map<std::string, SourcePos> defined_;
};

TokenLine tokenize(std::string_view line, std::size_t lineno) {
  TokenLine out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({std::string(line.substr(i, j - i)), {lineno, i + 1}});
    i = j;
  }
  return out;
}

// "elements:" -> "elements"; anything else -> "".
std::string field_keyword(const Token& t) {
  if (t.text.size() < 2 || t.text.back() != ':') return {};
  std::string head = t.text.substr(0, t.text.size() - 1);
  return std::find(kFields.begin(), kFields.end(), head) != kFields.end() ? head : std::string{};
}

std::vector<Block> Parser::split_blocks() {
  std::vector<Block> blocks;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text_.size()) {
    std::size_t end = text_.find('\n', start);
    if (end == std::string_view::npos) end = text_.size();
    const std::string_view line = text_.substr(start, end - start);
    ++lineno;
    start = end + 1;

    TokenLine toks = tokenize(line, lineno);
    if (toks.empty()) {
      if (end == text_.size()) break;
      continue;
    }
    const bool indented = toks.front().pos.column > 1;
    std::string head = toks.front().text;
    if (!head.empty() && head.back() == ':') head.pop_back();

    if (!indented && std::find(kHeaders.begin(), kHeaders.end(), head) != kHeaders.end()) {
      Block b;
      b.kind = head;
      b.pos = toks.front().pos;
      split_header(b, toks);
      blocks.push_back(std::move(b));
    } else if (const std::string f = field_keyword(toks.front()); !f.empty()) {
      if (blocks.empty() || blocks.back().kind != "algebra")
        fail(toks.front().pos, "field '" + f + ":' outside an algebra block");
      Field field{f, toks.front().pos, TokenLine(toks.begin() + 1, toks.end()), {}};
      blocks.back().fields.push_back(std::move(field));
    } else {
      if (blocks.empty()) fail(toks.front().pos, "expected a block header, found '" + toks.front().text + "'");
      Block& b = blocks.back();
      if (b.kind == "algebra") {
        if (b.fields.empty() || (!is_table_field(b.fields.back().name) && b.fields.back().name != "elements"))
          fail(toks.front().pos, "unexpected '" + toks.front().text + "' in algebra block");
        b.fields.back().lines.push_back(std::move(toks));
      } else {
        b.lines.push_back(std::move(toks));
      }
    }
    if (end == text_.size()) break;
  }
  return blocks;
}

void Parser::split_header(Block& b, const TokenLine& line) {
  bool after = false;
  for (std::size_t i = 1; i < line.size(); ++i) {
    Token t = line[i];
    if (after) {
      b.inline_tokens.push_back(t);
      continue;
    }
    if (t.text == ":") {
      after = true;
      continue;
    }
    const auto colon = t.text.find(':');
    if (colon != std::string::npos) {
      if (colon != t.text.size() - 1) fail(t.pos, "unexpected ':' inside '" + t.text + "'");
      t.text.pop_back();
      b.header.push_back(t);
      after = true;
      continue;
    }
    b.header.push_back(t);
  }
  if (b.kind != "algebra" && !after) fail(b.pos, "missing ':' after " + b.kind + " header");
}

void Parser::claim(const std::string& name, SourcePos pos) {
  auto [it, fresh] = defined_.emplace(name, pos);
  if (!fresh)
    fail(pos, "duplicate definition of '" + name + "' (first defined at " + std::to_string(it->second.line) + ":" +
                  std::to_string(it->second.column) + ")");
}

Element Parser::raw_element(const std::map<std::string, Element>& ids, const Token& t, const std::string& alg) const {
  auto it = ids.find(t.text);
  if (it == ids.end()) fail(t.pos, "unknown element '" + t.text + "' in algebra '" + alg + "'");
  return it->second;
}

Element Parser::element(const FiniteAlgebra& a, const Token& t) const {
  auto id = a.find(t.text);
  if (!id) fail(t.pos, "unknown element '" + t.text + "' in algebra '" + a.label() + "'");
  return *id;
}

std::vector<std::vector<Element>> Parser::table(const Field& f, const std::vector<std::string>& names,
                                                const std::map<std::string, Element>& ids,
                                                const std::string& alg) const {
  std::vector<TokenLine> rows;
  if (!f.inline_tokens.empty()) rows.push_back(f.inline_tokens);
  rows.insert(rows.end(), f.lines.begin(), f.lines.end());
  const std::size_t n = names.size();
  if (rows.size() != n)
    fail(f.pos, f.name + " table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  std::vector<std::vector<Element>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    TokenLine row = rows[i];
    // optional row label: "x | ..."
    if (row.size() >= 2 && row[1].text == "|") {
      if (row[0].text != names[i])
        fail(row[0].pos, "row " + std::to_string(i + 1) + " of " + f.name + " is labelled '" + row[0].text +
                             "', expected '" + names[i] + "'");
      row.erase(row.begin(), row.begin() + 2);
    }
    if (row.size() != n)
      fail(rows[i].front().pos, "ragged row in " + f.name + " table: " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(n));
    for (const Token& t : row) out[i].push_back(raw_element(ids, t, alg));
  }
  return out;
}

void Parser::build_algebra(const Block& b) {
  if (b.header.size() != 1 || !b.inline_tokens.empty()) fail(b.pos, "expected 'algebra <name>'");
  const Token& name = b.header[0];
  claim(name.text, name.pos);

  std::map<std::string, const Field*> fields;
  for (const Field& f : b.fields) {
    if (!fields.emplace(f.name, &f).second) fail(f.pos, "duplicate field '" + f.name + ":'");
  }
  auto need = [&](const char* f) -> const Field& {
    auto it = fields.find(f);
    if (it == fields.end()) fail(b.pos, "algebra '" + name.text + "' has no '" + f + ":' field");
    return *it->second;
  };

  const Field& el = need("elements");
  TokenLine el_tokens = el.inline_tokens;
  for (const auto& l : el.lines) el_tokens.insert(el_tokens.end(), l.begin(), l.end());
  if (el_tokens.empty()) fail(el.pos, "empty carrier");
  if (el_tokens.size() > limits().carrier)
    fail(el.pos,
         "carrier has " + std::to_string(el_tokens.size()) + " elements, cap is " + std::to_string(limits().carrier),
         ErrorCode::kCarrierTooLarge);

  RawAlgebra raw;
  raw.name = name.text;
  std::map<std::string, Element> ids;
  for (const Token& t : el_tokens) {
    if (t.text.find_first_of(":=|") != std::string::npos || t.text == "|")
      fail(t.pos, "invalid element name '" + t.text + "'");
    if (!ids.emplace(t.text, static_cast<Element>(raw.element_names.size())).second)
      fail(t.pos, "duplicate element '" + t.text + "'");
    raw.element_names.push_back(t.text);
  }

  auto single = [&](const Field& f) -> const Token& {
    if (f.inline_tokens.size() != 1 || !f.lines.empty()) fail(f.pos, "'" + f.name + ":' takes exactly one element");
    return f.inline_tokens[0];
  };
  raw.one = raw_element(ids, single(need("one")), name.text);
  if (auto it = fields.find("zero"); it != fields.end()) raw.zero = raw_element(ids, single(*it->second), name.text);
  raw.arrow = table(need("arrow"), raw.element_names, ids, name.text);
  raw.squig = table(need("squig"), raw.element_names, ids, name.text);

  AlgebraEntry entry;
  entry.name = name.text;
  entry.pos = b.pos;
  if (auto it = fields.find("odot"); it != fields.end())
    entry.declared_product = table(*it->second, raw.element_names, ids, name.text);
  entry.validation = validate(raw);
  entry.raw = std::move(raw);
  doc_.algebras.push_back(std::move(entry));
}

const AlgebraEntry& Parser::algebra_ref(const Token& t) const {
  for (const auto& e : doc_.algebras) {
    if (e.name != t.text) continue;
    if (!e.validation.ok())
      fail(t.pos, "algebra '" + t.text + "' is not a pseudo-BCK algebra", ErrorCode::kInvalidAlgebra);
    return e;
  }
  fail(t.pos, "unknown algebra '" + t.text + "'");
}

void Parser::build_dependent(const Block& b) {
  auto expect = [&](std::initializer_list<const char*> shape) {
    // shape uses "" for a name slot and a literal for keywords
    bool ok = b.header.size() == shape.size();
    std::size_t i = 0;
    for (const char* s : shape) {
      if (!ok) break;
      if (*s && b.header[i].text != s) ok = false;
      ++i;
    }
    if (!ok) {
      std::string usage = b.kind;
      for (const char* s : shape) usage += *s ? std::string(" ") + s : std::string(" <name>");
      fail(b.pos, "expected '" + usage + ":'");
    }
  };
  TokenLine values = b.inline_tokens;
  if (b.kind != "classes")
    for (const auto& l : b.lines) values.insert(values.end(), l.begin(), l.end());

  if (b.kind == "map" || b.kind == "subset" || b.kind == "valuation") {
    expect({"", "on", ""});
    const Token& name = b.header[0];
    claim(name.text, name.pos);
    const AlgebraEntry& e = algebra_ref(b.header[2]);
    const AlgebraRef& a = e.validation.algebra;
    if (b.kind == "map") {
      if (values.size() != a->size())
        fail(b.pos, "map '" + name.text + "' has " + std::to_string(values.size()) + " entries, expected " +
                        std::to_string(a->size()));
      std::vector<Element> image;
      for (const Token& t : values) image.push_back(element(*a, t));
      doc_.maps.push_back({name.text, e.name, name.pos, make_map(a, std::move(image))});
    } else if (b.kind == "subset") {
      Subset s = a->empty_set();
      for (const Token& t : values) s.insert(element(*a, t));
      doc_.subsets.push_back({name.text, e.name, name.pos, s});
    } else {
      std::vector<std::optional<Rational>> vals(a->size());
      for (const Token& t : values) {
        const auto eq = t.text.rfind('=');
        if (eq == std::string::npos) fail(t.pos, "expected '<element>=<rational>', found '" + t.text + "'");
        const Element x = element(*a, Token{t.text.substr(0, eq), t.pos});
        if (vals[x]) fail(t.pos, "second value for '" + a->name(x) + "'");
        try {
          vals[x] = parse_rational(std::string_view(t.text).substr(eq + 1));
        } catch (const WorkbenchError& err) {
          fail({t.pos.line, t.pos.column + eq + 1}, err.what());
        }
      }
      std::vector<Rational> out;
      for (Element x = 0; x < a->size(); ++x) {
        if (!vals[x]) fail(b.pos, "valuation '" + name.text + "' has no value for '" + a->name(x) + "'");
        out.push_back(*vals[x]);
      }
      doc_.valuations.push_back({name.text, e.name, name.pos, make_valuation(a, std::move(out))});
    }
    return;
  }

  if (b.kind == "hom") {
    expect({"", "from", "", "to", ""});
    const Token& name = b.header[0];
    claim(name.text, name.pos);
    const AlgebraEntry& src = algebra_ref(b.header[2]);
    const AlgebraEntry& dst = algebra_ref(b.header[4]);
    const AlgebraRef& a = src.validation.algebra;
    if (values.size() != a->size())
      fail(b.pos, "hom '" + name.text + "' has " + std::to_string(values.size()) + " entries, expected " +
                      std::to_string(a->size()));
    std::vector<Element> image;
    for (const Token& t : values) image.push_back(element(*dst.validation.algebra, t));
    doc_.homs.push_back({name.text, src.name, name.pos, make_hom(a, dst.validation.algebra, std::move(image))});
    return;
  }

  // classes <quotient> of <source>:
  //   [x] = x y ...
  expect({"", "of", ""});
  const AlgebraEntry& q = algebra_ref(b.header[0]);
  const AlgebraEntry& src = algebra_ref(b.header[2]);
  for (const ClassMap& c : doc_.class_maps)
    if (c.quotient == q.name) fail(b.pos, "second class map for '" + q.name + "'");
  if (!b.inline_tokens.empty()) fail(b.inline_tokens.front().pos, "class lines go below the header");
  const FiniteAlgebra& qa = *q.validation.algebra;
  const FiniteAlgebra& sa = *src.validation.algebra;
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> class_of(sa.size(), kUnset);
  std::vector<bool> seen(qa.size(), false);
  for (const TokenLine& line : b.lines) {
    if (line.size() < 3 || line[1].text != "=")
      fail(line.front().pos, "expected '<class> = <members...>'");
    const Element cls = element(qa, line[0]);
    if (seen[cls]) fail(line[0].pos, "class '" + qa.name(cls) + "' listed twice");
    seen[cls] = true;
    for (std::size_t i = 2; i < line.size(); ++i) {
      const Element x = element(sa, line[i]);
      if (class_of[x] != kUnset) fail(line[i].pos, "'" + sa.name(x) + "' belongs to two classes");
      class_of[x] = cls;
    }
  }
  for (Element c = 0; c < qa.size(); ++c)
    if (!seen[c]) fail(b.pos, "class '" + qa.name(c) + "' has no members");
  for (Element x = 0; x < sa.size(); ++x)
    if (class_of[x] == kUnset) fail(b.pos, "'" + sa.name(x) + "' is in no class");
  const Homomorphism proj = make_hom(src.validation.algebra, q.validation.algebra, class_of);
  if (const Verdict v = is_hom(proj); !v)
    fail(b.pos, "class map is not a homomorphism: " + describe(v, sa), ErrorCode::kInvalidMap);
  doc_.class_maps.push_back({q.name, src.name, b.pos, std::move(class_of)});
}

Document Parser::run() {
  doc_.source_name = source_;
  const std::vector<Block> blocks = split_blocks();
  for (const Block& b : blocks)
    if (b.kind == "algebra") build_algebra(b);
  if (doc_.algebras.empty()) fail({1, 1}, "no algebra defined");
  // every algebra is certified before any dependent object is checked
  for (const Block& b : blocks)
    if (b.kind != "algebra") build_dependent(b);
  return std::move(doc_);
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string table_text(const FiniteAlgebra& a, const std::vector<std::vector<Element>>& t) {
  std::size_t w = 0;
  for (const auto& n : a.names()) w = std::max(w, n.size());
  std::string out;
  for (Element x = 0; x < a.size(); ++x) {
    out += "    " + pad(a.name(x), w) + " |";
    for (Element y = 0; y < a.size(); ++y) out += " " + pad(a.name(t[x][y]), w);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

template <class T>
const Named<T>* find_named(const std::vector<Named<T>>& v, std::string_view name) {
  for (const auto& n : v)
    if (n.name == name) return &n;
  return nullptr;
}

[[noreturn]] void unknown(const char* what, std::string_view name) {
  throw WorkbenchError(ErrorCode::kUsage, std::string("no ") + what + " named '" + std::string(name) + "'");
}

}  // namespace

Document parse_document(std::string_view text, std::string source_name) {
  return Parser(text, std::move(source_name)).run();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkbenchError(ErrorCode::kUsage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

const AlgebraEntry& Document::entry(std::string_view name) const {
  for (const auto& e : algebras)
    if (e.name == name) return e;
  unknown("algebra", name);
}

AlgebraRef Document::algebra(std::string_view name) const {
  const AlgebraEntry& e = entry(name);
  if (!e.validation.ok())
    throw WorkbenchError(ErrorCode::kInvalidAlgebra, "algebra '" + e.name + "' is not a pseudo-BCK algebra");
  return e.validation.algebra;
}

AlgebraRef Document::algebra_or_first(std::string_view name) const {
  if (!name.empty()) return algebra(name);
  return algebra(algebras.front().name);
}

const UnaryMap& Document::map(std::string_view name) const {
  if (const auto* n = find_named(maps, name)) return n->value;
  unknown("map", name);
}

const PseudoValuation& Document::valuation(std::string_view name) const {
  if (const auto* n = find_named(valuations, name)) return n->value;
  unknown("valuation", name);
}

const Named<Subset>& Document::subset(std::string_view name) const {
  if (const auto* n = find_named(subsets, name)) return *n;
  unknown("subset", name);
}

const Homomorphism& Document::hom(std::string_view name) const {
  if (const auto* n = find_named(homs, name)) return n->value;
  unknown("hom", name);
}

std::string sanitize_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_-./[]'<>+*~^").find(c) != std::string_view::npos;
    out += keep ? c : '_';
  }
  return out.empty() ? std::string("_") : out;
}

std::string serialize_algebra(const FiniteAlgebra& a, const std::string& name) {
  std::string out = "algebra " + sanitize_name(name) + "\n  elements:";
  for (const auto& n : a.names()) out += " " + n;
  out += "\n  one: " + a.name(a.one()) + "\n";
  if (a.zero()) out += "  zero: " + a.name(*a.zero()) + "\n";
  std::vector<std::vector<Element>> arrow(a.size()), squig(a.size());
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      arrow[x].push_back(a.arrow(x, y));
      squig[x].push_back(a.squig(x, y));
    }
  out += "  arrow:\n" + table_text(a, arrow);
  out += "  squig:\n" + table_text(a, squig);
  return out;
}

std::string serialize_map(const UnaryMap& m, const std::string& name, const std::string& on) {
  std::string out = "map " + sanitize_name(name) + " on " + sanitize_name(on) + ":";
  for (Element x : m.image) out += " " + m.parent->name(x);
  return out + "\n";
}

std::string serialize_subset(const FiniteAlgebra& a, const Subset& s, const std::string& name,
                             const std::string& on) {
  std::string out = "subset " + sanitize_name(name) + " on " + sanitize_name(on) + ":";
  for (Element x : s.elements()) out += " " + a.name(x);
  return out + "\n";
}

std::string serialize_valuation(const PseudoValuation& phi, const std::string& name, const std::string& on) {
  std::string out = "valuation " + sanitize_name(name) + " on " + sanitize_name(on) + ":";
  for (Element x = 0; x < phi.values.size(); ++x)
    out += " " + phi.parent->name(x) + "=" + format_rational(phi.values[x]);
  return out + "\n";
}

std::string serialize_hom(const Homomorphism& h, const std::string& name, const std::string& from,
                          const std::string& to) {
  std::string out = "hom " + sanitize_name(name) + " from " + sanitize_name(from) + " to " + sanitize_name(to) + ":";
  for (Element y : h.map) out += " " + h.target->name(y);
  return out + "\n";
}

std::string serialize_quotient(const Quotient& q, const std::string& name, const std::string& source) {
  std::string out = serialize_algebra(*q.algebra, name);
  out += "classes " + sanitize_name(name) + " of " + sanitize_name(source) + ":\n";
  for (Element c = 0; c < q.class_count(); ++c) {
    out += "  " + q.algebra->name(c) + " =";
    for (Element x : q.members(c).elements()) out += " " + q.source->name(x);
    out += "\n";
  }
  return out;
}

}  // namespace psbck
