// Text front end: polynomial and ordering grammars, canonical printing, and
// line-oriented session files bundling a ring, an algebra presentation,
// named orderings and ideal generators.
#ifndef ORDFAN_SESSION_HPP
#define ORDFAN_SESSION_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordfan/algebra.hpp"
#include "ordfan/ordering.hpp"
#include "ordfan/polynomial.hpp"

namespace ordfan {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Grammar: poly := ['-'] term (('+'|'-') term)*;
//          term := coeff ('*' powprod)? | powprod;
//          coeff := integer ('/' positive-integer)?;
//          powprod := var ('^' nat)? ('*' var ('^' nat)?)*.
// Whitespace is insignificant. With normal_order required (noncommutative
// sessions) the variables of a power product must appear in nondecreasing
// declaration order.
Polynomial parse_polynomial(const std::string& text, const Signature& sig,
                            bool normal_order = false, int line = 1);

// Power product with '*' optional between factors: "y^2*z", "yz", "x".
Monomial parse_monomial(const std::string& text, const Signature& sig, int line = 1);

// "lex" | "grlex" | "grevlex" | "matrix [[1,1],[1,0]]" |
// "weighted w=(2,1) tie=lex" |
// "table D=2 deg1=(y,z) deg2=(yz,y^2,z^2) fallback=grlex".
OrderingSpec parse_ordering(const std::string& text, const Signature& sig, int line = 1);

struct Session {
    Signature sig;
    AlgebraPresentation algebra;
    std::map<std::string, OrderingSpec> orderings;
    std::vector<Polynomial> generators;
};

// Line-oriented format; '#' starts a comment. The ring line comes first:
//   ring x, y
//   relations weyl pairs=(x:dx)
//   ordering default grlex
//   gen x^2 - y
// 'relations' defaults to commutative; solvable tables add one line per
// noncommuting pair: rel <v_j> <v_i>: c=<rational> p=<poly>.
Session parse_session(std::istream& in);
Session parse_session_file(const std::string& path);

// Canonical printing: terms sorted descending in the canonical monomial
// order, explicit '*' and '^'.
std::string to_string(const Polynomial& p);
std::string to_string(const OrderingSpec& ord, const RingSignature& sig);
std::string to_string(const MatrixOrdering& ord);
std::string to_string(const OrderingClassification& c, const RingSignature& sig);

}  // namespace ordfan

#endif
