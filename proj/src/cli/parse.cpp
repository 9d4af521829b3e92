#include "pfano/parse.hpp"

#include <cctype>
#include <optional>

namespace pfano {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string name = trim(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!name.empty()) out.push_back(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Parsed value: a rational function until a derivative shows up.
struct Value {
  bool is_op = false;
  RationalFunction f;
  WeylOperator op;
};

class Parser {
 public:
  Parser(const std::string& src, WeylRingPtr ring) : src_(src), ring_(std::move(ring)) {
    pr_ = ring_->coefficient_ring();
  }

  Value run() {
    skip();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (pos_ < src_.size()) {
      if (starts_factor()) throw ParseError("juxtaposition is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    }
    return v;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool starts_factor() const {
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Value expr() {
    Value v = term();
    while (true) {
      skip();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        const char op = src_[pos_++];
        Value r = term();
        v = op == '+' ? add(v, r) : add(v, negate(r));
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      skip();
      if (pos_ < src_.size() && (src_[pos_] == '*' || src_[pos_] == '/')) {
        const char op = src_[pos_];
        const std::size_t at = pos_++;
        Value r = unary();
        v = op == '*' ? mul(v, r, at) : div(v, r, at);
      } else {
        if (starts_factor()) throw ParseError("juxtaposition is not allowed; use '*'", pos_);
        return v;
      }
    }
  }

  Value unary() {
    skip();
    if (pos_ < src_.size() && src_[pos_] == '-') {
      ++pos_;
      return negate(unary());
    }
    if (pos_ < src_.size() && src_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    skip();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError("exponent must be a non-negative integer", at);
      }
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      if (end - pos_ > 6) throw ParseError("exponent too large", at);
      const unsigned e = static_cast<unsigned>(std::stoul(src_.substr(pos_, end - pos_)));
      pos_ = end;
      Value r = constant(1);
      for (unsigned i = 0; i < e; ++i) r = mul(r, base, at);
      return r;
    }
    return base;
  }

  Value atom() {
    skip();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      skip();
      if (pos_ >= src_.size() || src_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      Integer z(src_.substr(pos_, end - pos_));
      pos_ = end;
      Value v;
      v.f = RationalFunction::from_polynomial(Polynomial::constant(pr_, Rational(z)));
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      const std::string name = src_.substr(pos_, end - pos_);
      pos_ = end;
      if (const int i = ring_->index_of(name); i >= 0) {
        Value v;
        v.f = RationalFunction::from_polynomial(Polynomial::variable(pr_, i));
        return v;
      }
      if (name.size() > 1 && name[0] == 'd') {
        if (const int i = ring_->index_of(name.substr(1)); i >= 0) {
          Value v;
          v.is_op = true;
          v.op = WeylOperator::d(ring_, i);
          return v;
        }
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Value constant(long c) {
    Value v;
    v.f = RationalFunction::from_polynomial(Polynomial::constant(pr_, c));
    return v;
  }

  WeylOperator as_op(const Value& v, std::size_t at) const {
    if (v.is_op) return v.op;
    if (!v.f.den().is_constant()) {
      throw ParseError("a rational function with a denominator cannot be combined with operators", at);
    }
    const Rational s = Rational(1) / v.f.den().leading_term().c;
    return WeylOperator::from_polynomial(ring_, v.f.num() * s);
  }

  Value add(const Value& a, const Value& b) {
    if (!a.is_op && !b.is_op) return Value{false, a.f + b.f, {}};
    return Value{true, {}, as_op(a, pos_) + as_op(b, pos_)};
  }

  Value negate(const Value& a) {
    if (!a.is_op) return Value{false, -a.f, {}};
    return Value{true, {}, -a.op};
  }

  Value mul(const Value& a, const Value& b, std::size_t at) {
    if (!a.is_op && !b.is_op) return Value{false, a.f * b.f, {}};
    return Value{true, {}, as_op(a, at) * as_op(b, at)};
  }

  Value div(const Value& a, const Value& b, std::size_t at) {
    if (b.is_op) throw ParseError("cannot divide by an operator", at);
    if (b.f.is_zero()) throw ParseError("division by zero", at);
    if (!a.is_op) return Value{false, a.f / b.f, {}};
    if (!b.f.num().is_constant() || !b.f.den().is_constant()) {
      throw ParseError("an operator can only be divided by a constant", at);
    }
    const Rational s = b.f.den().leading_term().c / b.f.num().leading_term().c;
    return Value{true, {}, a.op * s};
  }

  const std::string& src_;
  WeylRingPtr ring_;
  PolyRingPtr pr_;
  std::size_t pos_ = 0;
};

}  // namespace

VariableDecl parse_variable_decl(const std::string& text) {
  VariableDecl d;
  const auto bar = text.find('|');
  if (bar == std::string::npos) {
    d.names = split_names(text);
  } else {
    d.names = split_names(text.substr(0, bar));
    d.split = static_cast<int>(d.names.size());
    for (auto& s : split_names(text.substr(bar + 1))) d.names.push_back(s);
  }
  if (d.names.empty()) throw ParseError("no variables declared", 0);
  for (std::size_t i = 0; i < d.names.size(); ++i) {
    if (!valid_name(d.names[i])) throw ParseError("invalid variable name '" + d.names[i] + "'", 0);
    for (std::size_t j = 0; j < i; ++j) {
      if (d.names[i] == d.names[j]) throw ParseError("duplicate variable '" + d.names[i] + "'", 0);
    }
  }
  return d;
}

Expression parse_expression(const std::string& src, const WeylRingPtr& ring) {
  Value v = Parser(src, ring).run();
  Expression e;
  e.is_operator = v.is_op;
  if (v.is_op) {
    e.op = std::move(v.op);
  } else {
    e.function = std::move(v.f);
  }
  return e;
}

RationalFunction parse_function(const std::string& src, const WeylRingPtr& ring) {
  Expression e = parse_expression(src, ring);
  if (e.is_operator) throw ParseError("expected a rational function, found an operator", 0);
  return e.function;
}

RationalFunction parse_function(const std::string& src, const PolyRingPtr& ring) {
  RationalFunction f = parse_function(src, WeylRing::make(ring->names()));
  return RationalFunction(Polynomial(ring, f.num().terms()), Polynomial(ring, f.den().terms()));
}

Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring) {
  RationalFunction f = parse_function(src, ring);
  if (!f.den().is_constant()) throw ParseError("expected a polynomial", 0);
  // Re-home into the caller's ring object.
  const Rational s = Rational(1) / f.den().leading_term().c;
  return Polynomial(ring, f.num().terms()) * s;
}

WeylOperator parse_operator(const std::string& src, const WeylRingPtr& ring) {
  Expression e = parse_expression(src, ring);
  if (e.is_operator) return e.op;
  Value v{false, e.function, {}};
  if (!v.f.den().is_constant()) throw ParseError("expected an operator, found a rational function", 0);
  const Rational s = Rational(1) / v.f.den().leading_term().c;
  return WeylOperator::from_polynomial(ring, v.f.num() * s);
}

}  // namespace pfano
