#include "pasp/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pasp {

ParseError::ParseError(const std::string& msg, SourceLocation loc)
    : std::runtime_error("line " + std::to_string(loc.line) + ", col " +
                         std::to_string(loc.col) + ": " + msg),
      where(loc) {}

namespace {

enum class Tok {
  word,     // identifier, decimal, or digit-led mixed word
  colon,    // :
  arrow,    // :-
  dot,
  comma,
  semi,
  pipe,
  minus,
  less,
  lbrace,
  rbrace,
  lparen,
  rparen,
  end
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceLocation loc;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_shaped(const std::string& s) {
  return !s.empty() &&
         (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_blank();
    tok_.loc = {line_, pos_ - line_start_ + 1};
    if (pos_ >= text_.size()) {
      tok_ = {Tok::end, "", tok_.loc};
      return;
    }
    const char c = text_[pos_];
    if (word_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
      // a dot continues the word only inside a decimal literal
      if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) &&
          all_digits(start, pos_)) {
        ++pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
      tok_.kind = Tok::word;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    ++pos_;
    switch (c) {
      case ':':
        if (pos_ < text_.size() && text_[pos_] == '-') {
          ++pos_;
          tok_ = {Tok::arrow, ":-", tok_.loc};
        } else {
          tok_ = {Tok::colon, ":", tok_.loc};
        }
        return;
      case '.': tok_ = {Tok::dot, ".", tok_.loc}; return;
      case ',': tok_ = {Tok::comma, ",", tok_.loc}; return;
      case ';': tok_ = {Tok::semi, ";", tok_.loc}; return;
      case '|': tok_ = {Tok::pipe, "|", tok_.loc}; return;
      case '-': tok_ = {Tok::minus, "-", tok_.loc}; return;
      case '<': tok_ = {Tok::less, "<", tok_.loc}; return;
      case '{': tok_ = {Tok::lbrace, "{", tok_.loc}; return;
      case '}': tok_ = {Tok::rbrace, "}", tok_.loc}; return;
      case '(': tok_ = {Tok::lparen, "(", tok_.loc}; return;
      case ')': tok_ = {Tok::rparen, ")", tok_.loc}; return;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          tok_.loc);
    }
  }

  bool all_digits(std::size_t from, std::size_t to) const {
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text_[i]))) return false;
    return true;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  PossProgram run() {
    PossProgram p;
    p.lattice = parse_lattice_block();
    while (lex_.peek().kind != Tok::end) parse_rule(p);
    return p;
  }

private:
  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind)
      throw SyntaxError(std::string("expected ") + what + " before '" +
                            (lex_.peek().kind == Tok::end ? "end of input"
                                                          : lex_.peek().text) +
                            "'",
                        lex_.peek().loc);
    return lex_.take();
  }

  std::string expect_element() {
    Token t = expect(Tok::word, "a lattice element");
    return t.text;
  }

  LatticePtr parse_lattice_block() {
    Token kw = expect(Tok::word, "'lattice'");
    if (kw.text != "lattice")
      throw SyntaxError("program must start with a lattice block", kw.loc);
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> edges;
    if (lex_.peek().kind == Tok::word && lex_.peek().text == "chain") {
      lex_.take();
      expect(Tok::lbrace, "'{'");
      elements.push_back(expect_element());
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        elements.push_back(expect_element());
      }
      expect(Tok::rbrace, "'}'");
      for (std::size_t i = 0; i + 1 < elements.size(); ++i)
        edges.emplace_back(elements[i], elements[i + 1]);
    } else {
      expect(Tok::lbrace, "'{'");
      Token elems = expect(Tok::word, "'elements'");
      if (elems.text != "elements")
        throw SyntaxError("lattice block must declare 'elements:' first",
                          elems.loc);
      expect(Tok::colon, "':'");
      elements.push_back(expect_element());
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        elements.push_back(expect_element());
      }
      expect(Tok::semi, "';'");
      if (lex_.peek().kind == Tok::word) {
        Token order = lex_.take();
        if (order.text != "order")
          throw SyntaxError("expected 'order:' or '}'", order.loc);
        expect(Tok::colon, "':'");
        while (lex_.peek().kind != Tok::rbrace) {
          // tolerate repeated 'order:' section headers
          if (lex_.peek().kind == Tok::word && lex_.peek().text == "order") {
            lex_.take();
            expect(Tok::colon, "':'");
            continue;
          }
          std::string lo = expect_element();
          expect(Tok::less, "'<'");
          std::string hi = expect_element();
          edges.emplace_back(std::move(lo), std::move(hi));
          if (lex_.peek().kind == Tok::semi || lex_.peek().kind == Tok::comma)
            lex_.take();
          else
            break;
        }
      }
      expect(Tok::rbrace, "'}'");
    }
    try {
      return build_lattice(elements, edges);
    } catch (const LatticeError& e) {
      throw SyntaxError(std::string("invalid lattice: ") + e.what(), kw.loc);
    }
  }

  /// An atom: `ident`, `ident(arg, ...)` (one flat name, no nesting), or
  /// with a leading '-' the strong-negation rename thereof.
  std::string parse_atom(PossProgram& p) {
    bool strong_neg = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      strong_neg = true;
    }
    Token t = expect(Tok::word, "an atom");
    if (!ident_shaped(t.text))
      throw SyntaxError("atom must start with a letter or '_'", t.loc);
    if (t.text == "not") throw SyntaxError("'not' is reserved", t.loc);
    std::string name = t.text;
    if (lex_.peek().kind == Tok::lparen) {
      lex_.take();
      name += '(';
      name += expect(Tok::word, "an argument").text;
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        name += ',';
        name += expect(Tok::word, "an argument").text;
      }
      expect(Tok::rparen, "')'");
      name += ')';
    }
    if (strong_neg) {
      std::string base = name;
      name += '\'';
      p.atoms.try_emplace(name, Atom{name, base});
    } else {
      p.atoms.try_emplace(name, Atom{name, std::nullopt});
    }
    return name;
  }

  void parse_rule(PossProgram& p) {
    const SourceLocation start = lex_.peek().loc;
    std::optional<std::string> label;
    SourceLocation label_loc = start;

    // LABEL ':' applies only when a word is directly followed by ':'
    if (lex_.peek().kind == Tok::word) {
      Token w = lex_.take();
      if (lex_.peek().kind == Tok::colon) {
        lex_.take();
        label = w.text;
        label_loc = w.loc;
      } else {
        pushback_ = w;  // it was the first head atom
      }
    }

    PossClause clause;
    AtomSet head, pos, neg;

    if (peek_kind() != Tok::arrow && peek_kind() != Tok::dot) {
      atomset_insert(head, take_atom(p));
      while (peek_kind() == Tok::pipe) {
        take_token();
        atomset_insert(head, take_atom(p));
      }
    }
    if (peek_kind() == Tok::arrow) {
      take_token();
      while (peek_kind() != Tok::dot) {
        if (peek_kind() == Tok::word && peek_text() == "not") {
          take_token();
          atomset_insert(neg, take_atom(p));
        } else {
          atomset_insert(pos, take_atom(p));
        }
        if (peek_kind() == Tok::comma)
          take_token();
        else
          break;
      }
    }
    Token dot = take_token();
    if (dot.kind != Tok::dot)
      throw SyntaxError("expected '.' at end of rule", dot.loc);

    if (head.empty() && pos.empty() && neg.empty())
      throw EmptyRule("rule has no head and no body", start);

    const Lattice& lat = *p.lattice;
    if (head.empty()) {
      // constraint: necessity is the top of the lattice
      if (label && lat.contains(*label) &&
          lat.index_of(*label) != lat.top())
        throw NonTopConstraintLabel(
            "constraint label '" + *label + "' is not the top of the lattice",
            label_loc);
      if (label && !lat.contains(*label))
        throw UnknownLabel("unknown necessity label '" + *label + "'",
                           label_loc);
      clause.necessity = lat.top();
    } else if (label) {
      if (!lat.contains(*label))
        throw UnknownLabel("unknown necessity label '" + *label + "'",
                           label_loc);
      clause.necessity = lat.index_of(*label);
    } else {
      clause.necessity = lat.top();
    }
    clause.head = std::move(head);
    clause.pos_body = std::move(pos);
    clause.neg_body = std::move(neg);
    p.clauses.push_back(std::move(clause));
  }

  // one-token pushback so the label lookahead can hand a word back
  Tok peek_kind() { return pushback_ ? pushback_->kind : lex_.peek().kind; }
  const std::string& peek_text() {
    return pushback_ ? pushback_->text : lex_.peek().text;
  }
  Token take_token() {
    if (pushback_) {
      Token t = *pushback_;
      pushback_.reset();
      return t;
    }
    return lex_.take();
  }
  std::string take_atom(PossProgram& p) {
    if (pushback_) {
      Token t = *pushback_;
      pushback_.reset();
      if (!ident_shaped(t.text))
        throw SyntaxError("atom must start with a letter or '_'", t.loc);
      if (t.text == "not") throw SyntaxError("'not' is reserved", t.loc);
      std::string name = t.text;
      // the pushed-back word may still be a predicate-style atom
      if (lex_.peek().kind == Tok::lparen) {
        lex_.take();
        name += '(';
        name += expect(Tok::word, "an argument").text;
        while (lex_.peek().kind == Tok::comma) {
          lex_.take();
          name += ',';
          name += expect(Tok::word, "an argument").text;
        }
        expect(Tok::rparen, "')'");
        name += ')';
      }
      p.atoms.try_emplace(name, Atom{name, std::nullopt});
      return name;
    }
    return parse_atom(p);
  }

  Lexer lex_;
  std::optional<Token> pushback_;
};

}  // namespace

PossProgram parse(std::string_view text) { return Parser(text).run(); }

PossProgram parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string display_atom(const PossProgram& p, const std::string& name) {
  auto it = p.atoms.find(name);
  if (it != p.atoms.end() && it->second.strong_neg_of)
    return "-" + *it->second.strong_neg_of;
  return name;
}

std::string unparse(const PossProgram& p) {
  const Lattice& lat = *p.lattice;
  std::ostringstream out;
  out << "lattice {\n  elements: ";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (i) out << ", ";
    out << lat.label(i);
  }
  out << ";\n";
  auto edges = lat.hasse_edges();
  if (!edges.empty()) {
    out << "  order: ";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) out << ' ';
      out << lat.label(edges[i].first) << " < " << lat.label(edges[i].second)
          << ';';
    }
    out << '\n';
  }
  out << "}\n\n";

  for (const auto& c : p.clauses) {
    if (!c.is_constraint()) out << lat.label(c.necessity) << ": ";
    for (std::size_t i = 0; i < c.head.size(); ++i) {
      if (i) out << " | ";
      out << display_atom(p, c.head[i]);
    }
    if (!c.pos_body.empty() || !c.neg_body.empty()) {
      out << (c.head.empty() ? ":- " : " :- ");
      bool first = true;
      for (const auto& a : c.pos_body) {
        if (!first) out << ", ";
        out << display_atom(p, a);
        first = false;
      }
      for (const auto& a : c.neg_body) {
        if (!first) out << ", ";
        out << "not " << display_atom(p, a);
        first = false;
      }
    }
    out << ".\n";
  }
  return out.str();
}

bool same_program(const PossProgram& a, const PossProgram& b) {
  if (!a.lattice->same_structure(*b.lattice)) return false;
  if (a.clauses.size() != b.clauses.size()) return false;
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    const auto& ca = a.clauses[i];
    const auto& cb = b.clauses[i];
    if (canonical_label(a.lattice->label(ca.necessity)) !=
        canonical_label(b.lattice->label(cb.necessity)))
      return false;
    if (ca.head != cb.head || ca.pos_body != cb.pos_body ||
        ca.neg_body != cb.neg_body)
      return false;
  }
  return a.atoms == b.atoms;
}

}  // namespace pasp
