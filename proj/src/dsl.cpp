#include "nilchar/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "nilchar/errors.hpp"

namespace nilchar {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  std::string identifier(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail(std::string("expected ") + what + found());
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  bool at_identifier() { return is_ident_start(peek()); }
  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c));
  }
  Rational unsigned_rational() {
    skip_ws();
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ > b;
    };
    if (!digits()) fail("expected a rational number" + found());
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("malformed rational '" + std::string(s_.substr(start, pos_ - start)) + "'");
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || is_ident_char(s_[pos_])))
      fail("malformed rational near '" + std::string(s_.substr(start, pos_ + 1 - start)) + "'");
    const std::string text(s_.substr(start, pos_ - start));
    try {
      return Rational::parse(text);
    } catch (const MathError&) {
      error_at(start, "malformed rational '" + text + "'");
    }
  }
  Rational signed_rational() {
    const bool neg = accept('-');
    if (!neg) accept('+');
    const Rational r = unsigned_rational();
    return neg ? -r : r;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text" + found());
  }
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    error_at(pos_, msg);
  }
  [[noreturn]] void error_at(std::size_t pos, const std::string& msg) const { throw ParseError(line_, pos + 1, msg); }

 private:
  std::string found() {
    skip_ws();
    if (pos_ >= s_.size()) return ", found end of line";
    return ", found '" + std::string(1, s_[pos_]) + "'";
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct Builder {
  std::optional<std::string> name;
  std::vector<std::string> basis;
  std::map<std::string, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, QVector> brackets;
  bool basis_declared = false;

  std::size_t lookup(Cursor& cur, const std::string& id, std::size_t col) const {
    auto it = index.find(id);
    if (it == index.end()) cur.error_at(col - 1, "unknown identifier '" + id + "'");
    return it->second;
  }

  QVector lin_comb(Cursor& cur) const {
    QVector v(basis.size());
    bool first = true;
    for (;;) {
      Rational sign = Rational::one();
      if (cur.accept('-')) sign = -sign;
      else if (!cur.accept('+') && !first) break;
      if (!first && cur.accept('-')) sign = -sign;
      first = false;
      Rational c = Rational::one();
      if (cur.at_number()) {
        c = cur.unsigned_rational();
        if (!cur.accept('*')) {
          if (!c.is_zero()) cur.fail("constant term in a linear combination (expected '*')");
          continue;
        }
      }
      const std::size_t col = cur.column();
      const std::string id = cur.identifier("basis identifier");
      v[lookup(cur, id, col)] += sign * c;
      const char n = cur.peek();
      if (n != '+' && n != '-') break;
    }
    return v;
  }

  QVector assignments(Cursor& cur) const {
    QVector v(basis.size());
    std::set<std::size_t> seen;
    do {
      const std::size_t col = cur.column();
      const std::string id = cur.identifier("basis identifier");
      const std::size_t i = lookup(cur, id, col);
      if (!seen.insert(i).second) cur.error_at(col - 1, "duplicate value for '" + id + "'");
      cur.expect('=');
      v[i] = cur.signed_rational();
    } while (cur.accept(','));
    return v;
  }
};

std::string rational_coefficient(const Rational& c) { return c.to_string(); }

std::string lin_comb_text(const LieAlgebra& g, const QVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool neg = v[i].sign() < 0;
    const Rational a = neg ? -v[i] : v[i];
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (!a.is_one()) out += rational_coefficient(a) + "*";
    out += g.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

std::string assignments_text(const LieAlgebra& g, const QVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += g.basis_names()[i] + "=" + v[i].to_string();
  }
  // An all-zero form still needs one assignment to be well formed.
  return out.empty() ? g.basis_names().at(0) + "=0" : out;
}

Builder builder_for(const LieAlgebra& g) {
  Builder b;
  b.basis = g.basis_names();
  for (std::size_t i = 0; i < b.basis.size(); ++i) b.index.emplace(b.basis[i], i);
  b.basis_declared = true;
  return b;
}

}  // namespace

std::vector<QVector> parse_vector_list(const LieAlgebra& g, std::string_view text) {
  const Builder b = builder_for(g);
  Cursor cur(text, 1);
  std::vector<QVector> out;
  do {
    out.push_back(b.lin_comb(cur));
  } while (cur.accept(';'));
  cur.expect_end();
  return out;
}

LinearForm parse_form(const LieAlgebra& g, std::string_view text) {
  const Builder b = builder_for(g);
  Cursor cur(text, 1);
  QVector v = b.assignments(cur);
  cur.expect_end();
  return LinearForm(std::move(v));
}

const Subalgebra& AlgebraFile::subalgebra(const std::string& name) const {
  for (const auto& [n, s] : subalgebras)
    if (n == name) return s;
  throw MathError("no subalgebra named '" + name + "'");
}

const NamedCharacter& AlgebraFile::character(const std::string& name) const {
  for (const auto& c : characters)
    if (c.name == name) return c;
  throw MathError("no character named '" + name + "'");
}

const LinearForm& AlgebraFile::form(const std::string& name) const {
  for (const auto& [n, f] : forms)
    if (n == name) return f;
  throw MathError("no form named '" + name + "'");
}

AlgebraFile parse_algebra(std::string_view text) {
  Builder b;
  AlgebraFile file;
  std::set<std::string> names;
  bool algebra_built = false;

  auto build_algebra = [&](Cursor& cur) {
    if (algebra_built) return;
    if (!b.basis_declared) cur.fail("'basis' must be declared first");
    LieAlgebra g(b.name.value_or("g"), b.basis);
    for (const auto& [ij, v] : b.brackets) g.set_bracket(ij.first, ij.second, v);
    file.algebra = std::move(g);
    algebra_built = true;
  };
  auto fresh = [&](Cursor& cur, const std::string& name, std::size_t col) {
    if (!names.insert(name).second) cur.error_at(col - 1, "name '" + name + "' already defined");
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t kw_col = cur.column();
    const std::string kw = cur.identifier("keyword");
    if (kw == "algebra") {
      if (b.name || b.basis_declared) cur.error_at(kw_col - 1, "'algebra' must come first and only once");
      b.name = cur.identifier("algebra name");
      cur.expect_end();
    } else if (kw == "basis") {
      if (b.basis_declared) cur.error_at(kw_col - 1, "basis declared twice");
      while (!cur.at_end()) {
        const std::size_t col = cur.column();
        const std::string id = cur.identifier("basis identifier");
        if (b.index.contains(id)) cur.error_at(col - 1, "duplicate basis identifier '" + id + "'");
        b.index.emplace(id, b.basis.size());
        b.basis.push_back(id);
        cur.accept(',');
      }
      if (b.basis.empty()) cur.fail("basis needs at least one identifier");
      b.basis_declared = true;
    } else if (kw == "bracket") {
      if (!b.basis_declared) cur.error_at(kw_col - 1, "'basis' must be declared before brackets");
      if (algebra_built) cur.error_at(kw_col - 1, "brackets must precede subalgebras, forms and characters");
      cur.expect('[');
      const std::size_t ca = cur.column();
      const std::size_t i = b.lookup(cur, cur.identifier("basis identifier"), ca);
      cur.expect(',');
      const std::size_t cb = cur.column();
      const std::size_t j = b.lookup(cur, cur.identifier("basis identifier"), cb);
      cur.expect(']');
      cur.expect('=');
      const QVector v = b.lin_comb(cur);
      cur.expect_end();
      if (i == j) {
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (!zero)
          cur.error_at(kw_col - 1, "bracket [" + b.basis[i] + "," + b.basis[i] + "] must vanish (antisymmetry)");
        continue;
      }
      QVector neg = v;
      for (auto& x : neg) x = -x;
      const auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
      const QVector& stored = i < j ? v : neg;
      if (auto it = b.brackets.find(key); it != b.brackets.end()) {
        if (it->second != stored)
          cur.error_at(kw_col - 1, "bracket [" + b.basis[i] + "," + b.basis[j] +
                                       "] contradicts an earlier declaration (antisymmetry)");
      } else {
        b.brackets.emplace(key, stored);
      }
    } else if (kw == "subalgebra") {
      build_algebra(cur);
      const std::size_t col = cur.column();
      const std::string name = cur.identifier("subalgebra name");
      fresh(cur, name, col);
      cur.expect('=');
      std::vector<QVector> vectors;
      do {
        vectors.push_back(b.lin_comb(cur));
      } while (cur.accept(';'));
      cur.expect_end();
      const std::size_t n = b.basis.size();
      std::optional<Subspace> space;
      try {
        space.emplace(n, vectors);
      } catch (const MathError& e) {
        cur.error_at(col - 1, "subalgebra '" + name + "': " + e.what());
      }
      try {
        file.subalgebras.emplace_back(name, Subalgebra(file.algebra, *space));
      } catch (const MathError& e) {
        throw MathError("subalgebra '" + name + "': " + e.what());
      }
    } else if (kw == "form") {
      build_algebra(cur);
      const std::size_t col = cur.column();
      const std::string name = cur.identifier("form name");
      fresh(cur, name, col);
      cur.expect(':');
      const QVector v = b.assignments(cur);
      cur.expect_end();
      file.forms.emplace_back(name, LinearForm(v));
    } else if (kw == "character") {
      build_algebra(cur);
      const std::size_t col = cur.column();
      const std::string name = cur.identifier("character name");
      fresh(cur, name, col);
      const std::size_t on_col = cur.column();
      if (cur.identifier("'on'") != "on") cur.error_at(on_col - 1, "expected 'on'");
      const std::size_t sc = cur.column();
      const std::string sub = cur.identifier("subalgebra name");
      const Subalgebra* h = nullptr;
      for (const auto& [n, s] : file.subalgebras)
        if (n == sub) h = &s;
      if (!h) cur.error_at(sc - 1, "unknown subalgebra '" + sub + "'");
      cur.expect(':');
      const LinearForm form(b.assignments(cur));
      cur.expect_end();
      QVector values;
      for (const auto& v : h->space().basis()) values.push_back(form(v));
      try {
        file.characters.push_back({name, sub, CharacterFunctional(file.algebra, *h, values)});
      } catch (const MathError& e) {
        throw MathError("character '" + name + "': " + e.what());
      }
    } else {
      cur.error_at(kw_col - 1, "unknown keyword '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  if (!b.basis_declared) throw ParseError(line_no, 1, "no basis declared");
  if (!algebra_built) {
    LieAlgebra g(b.name.value_or("g"), b.basis);
    for (const auto& [ij, v] : b.brackets) g.set_bracket(ij.first, ij.second, v);
    file.algebra = std::move(g);
  }
  return file;
}

std::string format_algebra(const AlgebraFile& file) {
  const LieAlgebra& g = file.algebra;
  std::string out = "algebra " + g.name() + "\nbasis";
  for (const auto& n : g.basis_names()) out += " " + n;
  out += "\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const QVector v = g.bracket(g.unit(i), g.unit(j));
      bool zero = true;
      for (const auto& x : v) zero = zero && x.is_zero();
      if (zero) continue;
      out += "bracket [" + g.basis_names()[i] + "," + g.basis_names()[j] + "] = " + lin_comb_text(g, v) + "\n";
    }
  for (const auto& [name, h] : file.subalgebras) {
    out += "subalgebra " + name + " =";
    for (std::size_t k = 0; k < h.dim(); ++k) out += (k ? "; " : " ") + lin_comb_text(g, h[k]);
    out += "\n";
  }
  for (const auto& [name, f] : file.forms) out += "form " + name + ": " + assignments_text(g, f.values()) + "\n";
  for (const auto& c : file.characters)
    out += "character " + c.name + " on " + c.subalgebra + ": " +
           assignments_text(g, c.lambda.extension(g).values()) + "\n";
  return out;
}

bool same_payload(const AlgebraFile& a, const AlgebraFile& b) {
  const LieAlgebra& g = a.algebra;
  if (g.name() != b.algebra.name() || g.basis_names() != b.algebra.basis_names()) return false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (g.bracket_basis(i, j) != b.algebra.bracket_basis(i, j)) return false;
  if (a.subalgebras.size() != b.subalgebras.size() || a.forms.size() != b.forms.size() ||
      a.characters.size() != b.characters.size())
    return false;
  for (std::size_t k = 0; k < a.subalgebras.size(); ++k)
    if (a.subalgebras[k].first != b.subalgebras[k].first ||
        a.subalgebras[k].second.space().basis() != b.subalgebras[k].second.space().basis())
      return false;
  for (std::size_t k = 0; k < a.forms.size(); ++k)
    if (a.forms[k].first != b.forms[k].first || !(a.forms[k].second == b.forms[k].second)) return false;
  for (std::size_t k = 0; k < a.characters.size(); ++k)
    if (a.characters[k].name != b.characters[k].name || a.characters[k].subalgebra != b.characters[k].subalgebra ||
        a.characters[k].lambda.values() != b.characters[k].lambda.values())
      return false;
  return true;
}

namespace {

constexpr std::string_view kExample5 = R"(algebra example5
basis X U V E Z
bracket [U,V] = E
bracket [X,U] = V
bracket [X,V] = Z
subalgebra h = X; E
character lambda on h: E=1
form f: E=1, V=2, Z=3
)";

constexpr std::string_view kHeisenberg3 = R"(algebra heisenberg3
basis X Y Z
bracket [X,Y] = Z
subalgebra h = Y
subalgebra hz = Y; Z
character lambda on h: Y=1
character mu on hz: Z=1
form f: Y=1, Z=2
)";

}  // namespace

AlgebraFile builtin(const std::string& name) {
  if (name == "example5") return parse_algebra(kExample5);
  if (name == "heisenberg3") return parse_algebra(kHeisenberg3);
  if (name.starts_with("abelian:")) {
    const std::string count = name.substr(8);
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(count, &used);
      if (used != count.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n == 0 || n > 12) throw MathError("abelian:N needs 1 <= N <= 12, got '" + count + "'");
    std::string text = "algebra abelian" + std::to_string(n) + "\nbasis";
    for (std::size_t i = 1; i <= n; ++i) text += " x" + std::to_string(i);
    text += "\nsubalgebra h = x1\ncharacter lambda on h: x1=1\n";
    return parse_algebra(text);
  }
  throw MathError("unknown builtin '" + name + "' (known: example5, heisenberg3, abelian:N)");
}

std::vector<std::string> builtin_names() { return {"example5", "heisenberg3", "abelian:2"}; }

}  // namespace nilchar
