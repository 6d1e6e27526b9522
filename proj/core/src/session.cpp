#include "ordfan/session.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ordfan {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, static_cast<int>(pos) + 1);
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_identifier(Cursor& c) {
    if (!ident_start(c.peek())) c.fail("expected identifier");
    size_t start = c.pos;
    while (!c.done() && ident_char(c.s[c.pos])) ++c.pos;
    return c.s.substr(start, c.pos - start);
}

Integer read_unsigned_integer(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected number");
    size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    return Integer(c.s.substr(start, c.pos - start));
}

int read_nat(Cursor& c, const std::string& what) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("malformed " + what);
    Integer n = read_unsigned_integer(c);
    if (!n.fits_sint_p()) c.fail(what + " out of range");
    return static_cast<int>(n.get_si());
}

long read_long(Cursor& c) {
    bool neg = c.eat('-');
    Integer n = read_unsigned_integer(c);
    if (neg) n = -n;
    if (!n.fits_slong_p()) c.fail("integer out of range");
    return n.get_si();
}

Rational read_coefficient(Cursor& c) {
    bool neg = c.eat('-');
    Integer num = read_unsigned_integer(c);
    if (neg) num = -num;
    c.skip_ws();
    if (c.eat('/')) {
        c.skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(c.peek())))
            c.fail("expected denominator");
        Integer den = read_unsigned_integer(c);
        if (sgn(den) == 0) c.fail("zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

// var ('^' nat)? ('*' var ('^' nat)?)*, explicit '*' between factors.
Monomial read_power_product(Cursor& c, const Signature& sig, bool normal_order) {
    std::vector<int> e(static_cast<size_t>(sig->t), 0);
    int last_index = -1;
    while (true) {
        c.skip_ws();
        size_t at = c.pos;
        std::string name = read_identifier(c);
        int idx = sig->index_of(name);
        if (idx < 0) {
            c.pos = at;
            c.fail("unknown variable '" + name + "'");
        }
        if (normal_order && idx < last_index) {
            c.pos = at;
            c.fail("variable '" + name +
                   "' out of normal order; write factors in declaration order");
        }
        last_index = idx;
        int power = 1;
        c.skip_ws();
        if (c.eat('^')) {
            c.skip_ws();
            power = read_nat(c, "exponent");
        }
        e[static_cast<size_t>(idx)] += power;
        c.skip_ws();
        size_t mark = c.pos;
        if (c.eat('*')) {
            c.skip_ws();
            if (ident_start(c.peek())) continue;
            c.pos = mark;  // the '*' belongs to an enclosing context
        }
        break;
    }
    return Monomial(std::move(e));
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Signature& sig, bool normal_order,
                            int line) {
    Cursor c{text, 0, line};
    Polynomial out = Polynomial::zero(sig);
    c.skip_ws();
    if (c.done()) c.fail("empty polynomial");
    bool negative = c.eat('-');
    while (true) {
        c.skip_ws();
        Rational coeff(negative ? -1 : 1);
        Monomial mon = Monomial::one(sig->t);
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Rational v = read_coefficient(c);
            coeff = negative ? -v : v;
            c.skip_ws();
            size_t mark = c.pos;
            if (c.eat('*')) {
                c.skip_ws();
                if (!ident_start(c.peek())) {
                    c.pos = mark;
                } else {
                    mon = read_power_product(c, sig, normal_order);
                }
            }
        } else if (ident_start(c.peek())) {
            mon = read_power_product(c, sig, normal_order);
        } else {
            c.fail("expected term");
        }
        out = out + Polynomial::term(sig, mon, coeff);
        c.skip_ws();
        if (c.done()) break;
        if (c.eat('+')) {
            negative = false;
        } else if (c.eat('-')) {
            negative = true;
        } else {
            c.fail("expected '+' or '-'");
        }
    }
    return out;
}

Monomial parse_monomial(const std::string& text, const Signature& sig, int line) {
    Cursor c{text, 0, line};
    c.skip_ws();
    if (c.eat('1')) {
        c.skip_ws();
        if (!c.done()) c.fail("trailing input after monomial");
        return Monomial::one(sig->t);
    }
    std::vector<int> e(static_cast<size_t>(sig->t), 0);
    bool any = false;
    while (!c.done()) {
        c.skip_ws();
        if (c.done()) break;
        if (any && c.eat('*')) c.skip_ws();
        // Longest declared name matching at this position; juxtaposition
        // like "yz" is allowed in monomial-only contexts.
        int idx = -1;
        size_t best = 0;
        for (int i = 0; i < sig->t; ++i) {
            const std::string& n = sig->var_names[static_cast<size_t>(i)];
            if (n.size() > best && c.s.compare(c.pos, n.size(), n) == 0) {
                best = n.size();
                idx = i;
            }
        }
        if (idx < 0) c.fail("unknown variable");
        c.pos += best;
        int power = 1;
        if (c.eat('^')) power = read_nat(c, "exponent");
        e[static_cast<size_t>(idx)] += power;
        any = true;
    }
    if (!any) c.fail("empty monomial");
    return Monomial(std::move(e));
}

namespace {

std::vector<std::vector<long>> read_matrix_literal(Cursor& c) {
    c.skip_ws();
    c.expect('[', "to open the matrix");
    std::vector<std::vector<long>> rows;
    while (true) {
        c.skip_ws();
        c.expect('[', "to open a row");
        std::vector<long> row;
        while (true) {
            c.skip_ws();
            row.push_back(read_long(c));
            c.skip_ws();
            if (c.eat(',')) continue;
            break;
        }
        c.expect(']', "to close the row");
        rows.push_back(std::move(row));
        c.skip_ws();
        if (c.eat(',')) continue;
        break;
    }
    c.expect(']', "to close the matrix");
    return rows;
}

// Splits "key=value" groups on whitespace, keeping (), [] balanced.
std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (std::isspace(static_cast<unsigned char>(ch)) && depth == 0) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// "key=(...)" -> inner text; throws when the wrapper does not match.
std::string paren_value(const std::string& field, const std::string& key, int line) {
    std::string prefix = key + "=(";
    if (field.rfind(prefix, 0) != 0 || field.back() != ')')
        throw ParseError("expected " + key + "=(...)", line, 1);
    return field.substr(prefix.size(), field.size() - prefix.size() - 1);
}

}  // namespace

OrderingSpec parse_ordering(const std::string& text, const Signature& sig, int line) {
    std::string trimmed = strip(text);
    int t = sig->t;
    if (trimmed == "lex") return OrderingSpec(MatrixOrdering::lex(t));
    if (trimmed == "grlex") return OrderingSpec(MatrixOrdering::grlex(t));
    if (trimmed == "grevlex") return OrderingSpec(MatrixOrdering::grevlex(t));

    if (trimmed.rfind("matrix", 0) == 0) {
        Cursor c{trimmed, 6, line};
        auto rows = read_matrix_literal(c);
        c.skip_ws();
        if (!c.done()) c.fail("trailing input after matrix");
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != t)
                throw ParseError("matrix row length differs from the ring arity", line, 1);
        }
        return OrderingSpec(MatrixOrdering::from_rows(t, rows));
    }

    auto fields = split_fields(trimmed);
    if (!fields.empty() && fields[0] == "weighted") {
        std::vector<long> w;
        OrderingSpec tie(MatrixOrdering::lex(t));
        bool have_w = false;
        for (size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].rfind("w=", 0) == 0) {
                for (const auto& part : split_list(paren_value(fields[i], "w", line), ','))
                    w.push_back(std::stol(strip(part)));
                have_w = true;
            } else if (fields[i].rfind("tie=", 0) == 0) {
                tie = parse_ordering(fields[i].substr(4), sig, line);
            } else {
                throw ParseError("unknown weighted field '" + fields[i] + "'", line, 1);
            }
        }
        if (!have_w) throw ParseError("weighted ordering needs w=(...)", line, 1);
        if (!tie.is_matrix())
            throw ParseError("weighted tie-break must be a matrix ordering", line, 1);
        return OrderingSpec(MatrixOrdering::weighted(std::move(w), tie.matrix()));
    }

    if (!fields.empty() && fields[0] == "table") {
        int depth = -1;
        std::map<int, std::vector<Monomial>> slices;
        OrderingSpec fallback(MatrixOrdering::grlex(t));
        for (size_t i = 1; i < fields.size(); ++i) {
            const std::string& f = fields[i];
            if (f.rfind("D=", 0) == 0) {
                depth = std::stoi(f.substr(2));
            } else if (f.rfind("deg", 0) == 0) {
                size_t eq = f.find('=');
                if (eq == std::string::npos)
                    throw ParseError("malformed table field '" + f + "'", line, 1);
                int d = std::stoi(f.substr(3, eq - 3));
                std::string key = "deg" + std::to_string(d);
                std::vector<Monomial> slice;
                for (const auto& part : split_list(paren_value(f, key, line), ','))
                    slice.push_back(parse_monomial(strip(part), sig, line));
                slices[d] = std::move(slice);
            } else if (f.rfind("fallback=", 0) == 0) {
                fallback = parse_ordering(f.substr(9), sig, line);
            } else {
                throw ParseError("unknown table field '" + f + "'", line, 1);
            }
        }
        if (depth < 1) throw ParseError("table ordering needs D=<depth>", line, 1);
        if (!fallback.is_matrix())
            throw ParseError("table fallback must be a matrix ordering", line, 1);
        std::vector<std::vector<Monomial>> all;
        all.push_back({Monomial::one(t)});
        for (int d = 1; d <= depth; ++d) {
            auto it = slices.find(d);
            if (it == slices.end())
                throw ParseError("missing slice deg" + std::to_string(d), line, 1);
            all.push_back(it->second);
        }
        try {
            return OrderingSpec(GradedTableOrdering(t, std::move(all), fallback.matrix()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line, 1);
        }
    }

    throw ParseError("unknown ordering '" + trimmed + "'", line, 1);
}

Session parse_session(std::istream& in) {
    std::string raw;
    int lineno = 0;

    Signature sig;
    bool have_ring = false;
    enum class RelKind { Commutative, Weyl, Solvable } relkind = RelKind::Commutative;
    std::vector<std::pair<int, int>> weyl_pairs;
    std::map<std::pair<int, int>, PairRelation> table;
    bool have_relations = false;
    bool have_gens = false;
    std::map<std::string, OrderingSpec> orderings;
    std::vector<std::pair<std::string, int>> gen_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string text = raw;
        size_t hash = text.find('#');
        if (hash != std::string::npos) text = text.substr(0, hash);
        text = strip(text);
        if (text.empty()) continue;

        std::istringstream ls(text);
        std::string head;
        ls >> head;
        std::string rest = strip(text.substr(head.size()));

        if (head == "ring") {
            if (have_ring) throw ParseError("duplicate ring line", lineno, 1);
            std::vector<std::string> names;
            for (const auto& chunk : split_list(rest, ',')) {
                std::istringstream ws(chunk);
                std::string n;
                while (ws >> n) names.push_back(n);
            }
            try {
                sig = make_signature(std::move(names));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, 1);
            }
            have_ring = true;
            continue;
        }
        if (!have_ring) throw ParseError("expected a ring line first", lineno, 1);

        if (head == "relations") {
            if (have_relations) throw ParseError("duplicate relations line", lineno, 1);
            if (have_gens)
                throw ParseError("relations must come before generators", lineno, 1);
            have_relations = true;
            auto fields = split_fields(rest);
            if (fields.empty()) throw ParseError("missing relations kind", lineno, 1);
            if (fields[0] == "commutative") {
                relkind = RelKind::Commutative;
            } else if (fields[0] == "weyl") {
                relkind = RelKind::Weyl;
                if (fields.size() != 2 || fields[1].rfind("pairs=", 0) != 0)
                    throw ParseError("weyl relations need pairs=(x:dx,...)", lineno, 1);
                for (const auto& item : split_list(paren_value(fields[1], "pairs", lineno), ',')) {
                    auto parts = split_list(item, ':');
                    if (parts.size() != 2)
                        throw ParseError("bad pair '" + item + "'", lineno, 1);
                    int u = sig->index_of(strip(parts[0]));
                    int v = sig->index_of(strip(parts[1]));
                    if (u < 0 || v < 0)
                        throw ParseError("pair names an undeclared variable", lineno, 1);
                    weyl_pairs.emplace_back(u, v);
                }
            } else if (fields[0] == "solvable") {
                relkind = RelKind::Solvable;
            } else {
                throw ParseError("unknown relations kind '" + fields[0] + "'", lineno, 1);
            }
            continue;
        }

        if (head == "rel") {
            if (relkind != RelKind::Solvable)
                throw ParseError("rel lines belong to 'relations solvable'", lineno, 1);
            size_t colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError("rel line needs 'rel <v_j> <v_i>: c=... p=...'", lineno, 1);
            std::istringstream names(rest.substr(0, colon));
            std::string nj, ni, extra;
            names >> nj >> ni;
            if (ni.empty() || (names >> extra))
                throw ParseError("rel line needs exactly two variables", lineno, 1);
            int j = sig->index_of(nj), i = sig->index_of(ni);
            if (i < 0 || j < 0)
                throw ParseError("rel names an undeclared variable", lineno, 1);
            if (i >= j)
                throw ParseError(
                    "rel must rewrite a later variable past an earlier one (j after i)",
                    lineno, 1);
            PairRelation rel{Rational(1), Polynomial::zero(sig)};
            bool have_c = false, have_p = false;
            for (const auto& f : split_fields(strip(rest.substr(colon + 1)))) {
                if (f.rfind("c=", 0) == 0) {
                    Cursor c{f, 2, lineno};
                    rel.c = read_coefficient(c);
                    if (!c.done()) c.fail("trailing input after scalar");
                    have_c = true;
                } else if (f == "p=0") {
                    rel.p = Polynomial::zero(sig);
                    have_p = true;
                } else if (f.rfind("p=", 0) == 0) {
                    rel.p = parse_polynomial(f.substr(2), sig, true, lineno);
                    have_p = true;
                } else {
                    throw ParseError("unknown rel field '" + f + "'", lineno, 1);
                }
            }
            if (!have_c || !have_p)
                throw ParseError("rel line needs both c= and p=", lineno, 1);
            if (rel.c.is_zero()) throw ParseError("relation scalar must be nonzero", lineno, 1);
            table.insert_or_assign({i, j}, std::move(rel));
            continue;
        }

        if (head == "ordering") {
            std::istringstream os(rest);
            std::string name;
            os >> name;
            if (name.empty()) throw ParseError("ordering line needs a name", lineno, 1);
            std::string spec = strip(rest.substr(name.size()));
            orderings.emplace(name, parse_ordering(spec, sig, lineno));
            continue;
        }

        if (head == "gen") {
            have_gens = true;
            gen_lines.emplace_back(rest, lineno);
            continue;
        }

        throw ParseError("unknown directive '" + head + "'", lineno, 1);
    }

    if (!have_ring) throw ParseError("session has no ring line", lineno ? lineno : 1, 1);

    AlgebraPresentation algebra = AlgebraPresentation::commutative(sig);
    switch (relkind) {
        case RelKind::Commutative: break;
        case RelKind::Weyl: algebra = AlgebraPresentation::weyl(sig, weyl_pairs); break;
        case RelKind::Solvable: algebra = AlgebraPresentation::solvable(sig, table); break;
    }

    std::vector<Polynomial> gens;
    bool normal_order = relkind != RelKind::Commutative;
    for (const auto& [text, ln] : gen_lines)
        gens.push_back(parse_polynomial(text, sig, normal_order, ln));

    return Session{sig, std::move(algebra), std::move(orderings), std::move(gens)};
}

Session parse_session_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open session file: " + path);
    return parse_session(in);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const RingSignature& sig = *p.signature();
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += to_string(m, sig);
        } else {
            out += mag.str() + "*" + to_string(m, sig);
        }
    }
    return out;
}

std::string to_string(const MatrixOrdering& ord) {
    std::string s = "matrix[";
    for (size_t r = 0; r < ord.rows().size(); ++r) {
        if (r) s += ",";
        s += "[";
        for (size_t c = 0; c < ord.rows()[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(ord.rows()[r][c]);
        }
        s += "]";
    }
    return s + "]";
}

std::string to_string(const OrderingSpec& ord, const RingSignature& sig) {
    if (ord.is_matrix()) return to_string(ord.matrix());
    const auto& g = ord.table();
    std::string s = "table D=" + std::to_string(g.depth());
    for (int d = 1; d <= g.depth(); ++d) {
        s += " deg" + std::to_string(d) + "=(";
        const auto& slice = g.slices()[static_cast<size_t>(d)];
        for (size_t i = 0; i < slice.size(); ++i) {
            if (i) s += ",";
            s += to_string(slice[i], sig);
        }
        s += ")";
    }
    s += " fallback=" + to_string(g.fallback());
    return s;
}

std::string to_string(const OrderingClassification& c, const RingSignature& sig) {
    std::string s = "founded_at_one=" + std::string(c.founded_at_one ? "yes" : "no") +
                    " compatible=" + to_string(c.compatible) +
                    " degree=" + std::string(c.degree ? "yes" : "no") +
                    " admissible=" + to_string(c.admissible) + " well=" + to_string(c.well);
    if (c.witness) {
        s += "\nwitness: " + to_string(c.witness->u, sig) + " <= " + to_string(c.witness->v, sig) +
             " but " + to_string(c.witness->u * c.witness->g, sig) + " > " +
             to_string(c.witness->v * c.witness->g, sig);
    }
    return s;
}

}  // namespace ordfan
