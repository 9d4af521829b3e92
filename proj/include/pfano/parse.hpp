#pragma once

#include <string>
#include <vector>

#include "pfano/rational_function.hpp"
#include "pfano/weyl.hpp"

namespace pfano {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// "t1,t2|x1,x2" declares integration variables before the bar. Without a
/// bar the split is 0.
struct VariableDecl {
  std::vector<std::string> names;
  int split = 0;
};
VariableDecl parse_variable_decl(const std::string& text);

/// Either a rational function (no d<name> occurs) or an operator.
struct Expression {
  bool is_operator = false;
  RationalFunction function;
  WeylOperator op;
};

/// Grammar: + - * / ^ (non-negative integer exponents), parentheses,
/// integers and identifiers [a-zA-Z][a-zA-Z0-9_]*. An identifier d<name>
/// is the derivative by <name> unless <name> itself is declared as
/// "d<name>". Juxtaposition is rejected.
Expression parse_expression(const std::string& src, const WeylRingPtr& ring);
RationalFunction parse_function(const std::string& src, const WeylRingPtr& ring);
RationalFunction parse_function(const std::string& src, const PolyRingPtr& ring);
Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring);
WeylOperator parse_operator(const std::string& src, const WeylRingPtr& ring);

}  // namespace pfano
