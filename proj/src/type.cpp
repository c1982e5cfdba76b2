#include "ftgen/type.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace ftgen {

namespace {

TypePtr make(TypeKind kind, TypePtr arg = nullptr, TypePtr res = nullptr) {
  auto t = std::make_shared<Type>();
  t->kind = kind;
  t->arg = std::move(arg);
  t->res = std::move(res);
  return t;
}

}  // namespace

TypePtr type_var() {
  static const TypePtr t = make(TypeKind::Var);
  return t;
}

TypePtr type_bool() {
  static const TypePtr t = make(TypeKind::Bool);
  return t;
}

TypePtr type_int() {
  static const TypePtr t = make(TypeKind::Int);
  return t;
}

TypePtr type_list(TypePtr elem) { return make(TypeKind::List, std::move(elem)); }

TypePtr type_maybe(TypePtr elem) { return make(TypeKind::Maybe, std::move(elem)); }

TypePtr type_arrow(TypePtr arg, TypePtr res) {
  return make(TypeKind::Arrow, std::move(arg), std::move(res));
}

bool equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Var:
    case TypeKind::Bool:
    case TypeKind::Int:
      return true;
    case TypeKind::List:
    case TypeKind::Maybe:
      return equal(a->arg, b->arg);
    case TypeKind::Arrow:
      return equal(a->arg, b->arg) && equal(a->res, b->res);
  }
  return false;
}

int arrow_count(const TypePtr& t) {
  int n = 0;
  for (TypePtr cur = t; cur->kind == TypeKind::Arrow; cur = cur->res) ++n;
  return n;
}

TypeParseError::TypeParseError(int column, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Arrow, LParen, RParen, LBracket, RBracket, LowerIdent, UpperIdent, End };
  Kind kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", col});
      ++i;
    } else if (c == '[') {
      out.push_back({Token::Kind::LBracket, "[", col});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::Kind::RBracket, "]", col});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", col});
      i += 2;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_' || text[i] == '\'')) {
        ++i;
      }
      std::string word = text.substr(start, i - start);
      bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
      out.push_back({upper ? Token::Kind::UpperIdent : Token::Kind::LowerIdent, word, col});
    } else {
      throw TypeParseError(col, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

class TypeParser {
public:
  explicit TypeParser(const std::string& text) : tokens_(lex(text)) {}

  TypePtr parse() {
    TypePtr t = parse_type();
    if (peek().kind != Token::Kind::End) {
      throw TypeParseError(peek().column, "expected end of input, found '" + peek().text + "'");
    }
    return t;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  TypePtr parse_type() {
    TypePtr lhs = parse_atype();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      return type_arrow(std::move(lhs), parse_type());
    }
    return lhs;
  }

  TypePtr parse_atype() {
    if (peek().kind == Token::Kind::UpperIdent && peek().text == "Maybe") {
      take();
      return type_maybe(parse_primary("a type argument for Maybe"));
    }
    return parse_primary("a type");
  }

  // Everything atomic. A bare "Maybe x" is not allowed here, so the argument
  // of Maybe and a nested Maybe both have to be parenthesized.
  TypePtr parse_primary(const std::string& expected) {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::UpperIdent: {
        if (tok.text == "Bool") {
          take();
          return type_bool();
        }
        if (tok.text == "Int") {
          take();
          return type_int();
        }
        if (tok.text == "Maybe") {
          throw TypeParseError(tok.column, "'Maybe' here needs parentheses: (Maybe ...)");
        }
        throw TypeParseError(tok.column, "unknown constructor '" + tok.text + "'");
      }
      case Token::Kind::LowerIdent: {
        Token word = take();
        if (!var_name_) {
          var_name_ = word.text;
        } else if (*var_name_ != word.text) {
          throw TypeParseError(word.column, "multiple type variables ('" + *var_name_ + "' and '" +
                                                word.text + "')");
        }
        return type_var();
      }
      case Token::Kind::LBracket: {
        take();
        TypePtr elem = parse_type();
        if (peek().kind != Token::Kind::RBracket) {
          throw TypeParseError(peek().column, "expected ']', found '" + describe(peek()) + "'");
        }
        take();
        return type_list(std::move(elem));
      }
      case Token::Kind::LParen: {
        take();
        TypePtr inner = parse_type();
        if (peek().kind != Token::Kind::RParen) {
          throw TypeParseError(peek().column, "expected ')', found '" + describe(peek()) + "'");
        }
        take();
        return inner;
      }
      default:
        throw TypeParseError(tok.column, "expected " + expected + ", found '" + describe(tok) + "'");
    }
  }

  static std::string describe(const Token& tok) {
    return tok.kind == Token::Kind::End ? "end of input" : tok.text;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::optional<std::string> var_name_;
};

// Parenthesized when it appears left of an arrow.
std::string render_arrow_arg(const TypePtr& t);

std::string render(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Var:
      return "alpha";
    case TypeKind::Bool:
      return "Bool";
    case TypeKind::Int:
      return "Int";
    case TypeKind::List:
      return "[" + render(t->arg) + "]";
    case TypeKind::Maybe: {
      const TypePtr& a = t->arg;
      bool parens = a->kind == TypeKind::Arrow || a->kind == TypeKind::Maybe;
      return parens ? "Maybe (" + render(a) + ")" : "Maybe " + render(a);
    }
    case TypeKind::Arrow:
      return render_arrow_arg(t->arg) + " -> " + render(t->res);
  }
  return "";
}

std::string render_arrow_arg(const TypePtr& t) {
  if (t->kind == TypeKind::Arrow) return "(" + render(t) + ")";
  return render(t);
}

}  // namespace

TypePtr parse_type(const std::string& text) { return TypeParser(text).parse(); }

std::string render_type(const TypePtr& t) { return render(t); }

}  // namespace ftgen
