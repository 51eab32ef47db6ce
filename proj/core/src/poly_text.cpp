#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {
namespace {

struct Node {
  enum Kind { coeff, var, add, sub, mul, neg, pow } kind = coeff;
  Elem value;          // coeff
  long index = 0;      // var: -1 for y, i >= 1 for xi
  unsigned exp = 1;    // pow
  std::vector<Node> kids;
};

/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := power ('*' power)*
/// power  := atom ['^' integer]
/// atom   := integer | '[' integer (',' integer)* ']' | 'y' | 'x' ['_'] integer | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const Field& field) : s_(text), f_(field) {}

  Node parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Node e = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  std::uint64_t integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }

  Node expr() {
    skip();
    Node acc;
    if (peek() == '-' || peek() == '+') {
      const bool negative = get() == '-';
      Node t = term();
      if (negative) {
        acc.kind = Node::neg;
        acc.kids.push_back(std::move(t));
      } else {
        acc = std::move(t);
      }
    } else {
      acc = term();
    }
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Node next;
      next.kind = c == '+' ? Node::add : Node::sub;
      next.kids.push_back(std::move(acc));
      next.kids.push_back(term());
      acc = std::move(next);
    }
    return acc;
  }

  Node term() {
    Node acc = power();
    while (true) {
      skip();
      if (peek() != '*') break;
      get();
      Node next;
      next.kind = Node::mul;
      next.kids.push_back(std::move(acc));
      next.kids.push_back(power());
      acc = std::move(next);
    }
    return acc;
  }

  Node power() {
    Node base = atom();
    skip();
    if (peek() != '^') return base;
    get();
    const auto e = integer();
    if (e > 65535) fail("exponent too large");
    Node p;
    p.kind = Node::pow;
    p.exp = static_cast<unsigned>(e);
    p.kids.push_back(std::move(base));
    return p;
  }

  Node atom() {
    skip();
    Node r;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      r.value = f_.from_int(static_cast<std::int64_t>(integer() % f_.characteristic()));
      return r;
    }
    if (c == '[') {
      get();
      std::vector<std::uint32_t> res;
      while (true) {
        res.push_back(static_cast<std::uint32_t>(integer() % f_.characteristic()));
        skip();
        const char d = pos_ < s_.size() ? get() : '\0';
        if (d == ']') break;
        if (d != ',') fail("expected ',' or ']' in field element");
      }
      if (res.size() > f_.degree()) fail("field element has too many residues");
      r.value = f_.from_residues(res);
      return r;
    }
    if (c == '(') {
      get();
      Node inner = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      get();
      return inner;
    }
    r.kind = Node::var;
    if (c == 'y') {
      get();
      r.index = -1;
    } else if (c == 'x') {
      get();
      if (peek() == '_') get();
      const auto idx = integer();
      if (idx == 0) fail("variable indices start at x1");
      if (idx > ExpVec::kMaxVars) fail("too many variables");
      r.index = static_cast<long>(idx);
    } else {
      fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
    }
    return r;
  }

  const std::string& s_;
  const Field& f_;
  std::size_t pos_ = 0;
};

void scan_vars(const Node& n, bool& has_y, long& max_x) {
  if (n.kind == Node::var) {
    if (n.index == -1) has_y = true;
    max_x = std::max(max_x, n.index);
  }
  for (const auto& k : n.kids) scan_vars(k, has_y, max_x);
}

SparsePoly build(const Node& n, const Field& field, std::size_t nvars, VarStyle style) {
  switch (n.kind) {
    case Node::coeff:
      return SparsePoly::constant(field, nvars, n.value);
    case Node::var: {
      const std::size_t idx = n.index == -1                 ? 0
                              : style == VarStyle::y_first ? static_cast<std::size_t>(n.index)
                                                           : static_cast<std::size_t>(n.index) - 1;
      return SparsePoly::variable(field, nvars, idx);
    }
    case Node::add:
      return build(n.kids[0], field, nvars, style) + build(n.kids[1], field, nvars, style);
    case Node::sub:
      return build(n.kids[0], field, nvars, style) - build(n.kids[1], field, nvars, style);
    case Node::mul:
      return build(n.kids[0], field, nvars, style) * build(n.kids[1], field, nvars, style);
    case Node::neg:
      return -build(n.kids[0], field, nvars, style);
    case Node::pow:
      return build(n.kids[0], field, nvars, style).pow(n.exp);
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace

ParsedPoly parse_polynomial(const std::string& text, const Field& field, std::size_t min_vars,
                            std::optional<VarStyle> force_style) {
  const Node tree = Parser(text, field).parse();
  bool has_y = false;
  long max_x = 0;
  scan_vars(tree, has_y, max_x);
  VarStyle style = has_y ? VarStyle::y_first : VarStyle::x_only;
  if (force_style) {
    if (*force_style == VarStyle::x_only && has_y) throw ParseError("variable y is not allowed here");
    style = *force_style;
  }
  std::size_t n = style == VarStyle::y_first ? static_cast<std::size_t>(max_x) + 1
                                             : static_cast<std::size_t>(max_x);
  n = std::max(n, min_vars);
  if (n > ExpVec::kMaxVars) throw ParseError("too many variables");
  return {build(tree, field, n, style), style};
}

std::string format_polynomial(const SparsePoly& f, VarStyle style) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      if (style == VarStyle::y_first) mono += i == 0 ? std::string("y") : "x" + std::to_string(i);
      else mono += "x" + std::to_string(i + 1);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) out += f.field().format(t.coeff);
    else if (t.coeff == f.field().one()) out += mono;
    else out += f.field().format(t.coeff) + "*" + mono;
  }
  return out;
}

}  // namespace sparsefac
