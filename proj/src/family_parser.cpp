#include "paramgb/family_parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace paramgb {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, bool at_end)
    : std::runtime_error(at_end ? "syntax error at end of input: " + message
                                : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                      message),
      line_(line),
      column_(column),
      at_end_(at_end) {}

namespace {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen, equals, colon, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t start = i, l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(start, j - start)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::number, std::string(src.substr(start, j - start)), l, cc});
      advance(j - i);
      continue;
    }
    static const std::map<char, Tok> punct{{'+', Tok::plus},   {'-', Tok::minus},  {'*', Tok::star},
                                           {'^', Tok::caret},  {'(', Tok::lparen}, {')', Tok::rparen},
                                           {'=', Tok::equals}, {':', Tok::colon},  {',', Tok::comma}};
    auto it = punct.find(c);
    if (it == punct.end()) throw ParseError(std::string("unexpected character '") + c + "'", l, cc, false);
    out.push_back({it->second, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  FamilySpec parse() {
    keyword("vars");
    std::vector<std::string> vars = id_list(true);
    keyword("params");
    std::vector<std::string> params = id_list(false);
    ctx_ = VariableContext::make(vars, params);

    while (peek().kind == Tok::ident && peek().text == "let" && peek(1).kind == Tok::ident) {
      next();
      const Token name = expect(Tok::ident, "binding name");
      if (name.text == "let") error("'let' is a reserved word", name);
      expect(Tok::equals, "'='");
      Polynomial value = expr();
      if (declared_.count(name.text)) error("identifier '" + name.text + "' already declared", name);
      declared_.insert(name.text);
      bindings_.emplace(name.text, std::move(value));
    }

    std::vector<std::string> names;
    std::vector<Polynomial> polys;
    do {
      const Token name = expect(Tok::ident, "equation name");
      expect(Tok::equals, "'='");
      if (std::find(names.begin(), names.end(), name.text) != names.end()) {
        error("duplicate equation name '" + name.text + "'", name);
      }
      names.push_back(name.text);
      polys.push_back(expr());
    } while (peek().kind != Tok::end);
    return FamilySpec::make(ctx_, std::move(polys), std::move(names));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void error(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column, at.kind == Tok::end);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) error("expected " + what + ", found " + describe(peek()), peek());
    return next();
  }

  void keyword(const std::string& word) {
    if (peek().kind != Tok::ident || peek().text != word) {
      error("expected '" + word + ":', found " + describe(peek()), peek());
    }
    next();
    expect(Tok::colon, "':'");
  }

  // An identifier directly followed by '=' starts an equation, not a list.
  std::vector<std::string> id_list(bool required) {
    std::vector<std::string> ids;
    if (!required && !(peek().kind == Tok::ident && peek(1).kind != Tok::equals && peek(1).kind != Tok::colon &&
                       !(peek().text == "let" && peek(1).kind == Tok::ident && peek(2).kind == Tok::equals))) {
      return ids;
    }
    auto take = [&] {
      const Token& t = expect(Tok::ident, "identifier");
      if (t.text == "let") error("'let' is a reserved word", t);
      if (!declared_.insert(t.text).second) error("identifier '" + t.text + "' declared twice", t);
      ids.push_back(t.text);
    };
    take();
    while (peek().kind == Tok::comma) {
      next();
      take();
    }
    return ids;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Tok::star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (peek().kind == Tok::minus) {
      next();
      return -factor();
    }
    Polynomial b = base();
    if (peek().kind == Tok::caret) {
      next();
      const Token& e = expect(Tok::number, "exponent");
      if (e.text.find('/') != std::string::npos || e.text.size() > 6) error("invalid exponent " + describe(e), e);
      b = b.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return b;
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        next();
        try {
          return Polynomial::constant(ctx_, Rational::parse(t.text));
        } catch (const std::domain_error&) {
          error("zero denominator in " + describe(t), t);
        }
      case Tok::ident: {
        next();
        if (auto it = bindings_.find(t.text); it != bindings_.end()) return it->second;
        if (ctx_->index_of(t.text)) return Polynomial::variable(ctx_, t.text);
        error("undeclared identifier '" + t.text + "'", t);
      }
      case Tok::lparen: {
        next();
        Polynomial inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        error("expected an expression, found " + describe(t), t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Context ctx_;
  std::set<std::string> declared_;
  std::map<std::string, Polynomial> bindings_;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

FamilySpec parse_family(std::string_view text) { return Parser(text).parse(); }

std::string format_family(const FamilySpec& family) {
  std::string out = "vars: " + join(family.context->x_vars()) + "\n";
  out += "params:";
  if (!family.context->p_vars().empty()) out += " " + join(family.context->p_vars());
  out += "\n";
  for (std::size_t i = 0; i < family.polynomials.size(); ++i) {
    out += family.names[i] + " = " + family.polynomials[i].to_string() + "\n";
  }
  return out;
}

ParameterPoint parse_parameter_point(std::string_view text, const VariableContext& ctx) {
  ParameterPoint q;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected name=value in '" + std::string(item) + "'");
    }
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    std::string name(trim(item.substr(0, eq)));
    auto idx = ctx.index_of(name);
    if (!idx || !ctx.is_parameter(*idx)) throw std::invalid_argument("'" + name + "' is not a parameter");
    if (q.count(name)) throw std::invalid_argument("parameter '" + name + "' assigned twice");
    try {
      q.emplace(name, Rational::parse(trim(item.substr(eq + 1))));
    } catch (const std::domain_error&) {
      throw std::invalid_argument("zero denominator in the value of '" + name + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const auto& p : ctx.p_vars()) {
    if (!q.count(p)) throw std::invalid_argument("no value for parameter '" + p + "'");
  }
  return q;
}

}  // namespace paramgb
