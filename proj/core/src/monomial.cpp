#include "ordfan/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ordfan {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

}  // namespace

int RingSignature::index_of(const std::string& name) const {
    for (int i = 0; i < t; ++i) {
        if (var_names[static_cast<size_t>(i)] == name) return i;
    }
    return -1;
}

Signature make_signature(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_identifier(n)) throw std::invalid_argument("bad variable name: " + n);
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    }
    auto sig = std::make_shared<RingSignature>();
    sig->t = static_cast<int>(names.size());
    sig->var_names = std::move(names);
    return sig;
}

Signature make_signature(int t) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(t));
    for (int i = 1; i <= t; ++i) names.push_back("x" + std::to_string(i));
    return make_signature(std::move(names));
}

bool same_signature(const Signature& a, const Signature& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("negative exponent in monomial");
    }
}

Monomial Monomial::variable(int t, int i, int power) {
    std::vector<int> e(static_cast<size_t>(t), 0);
    e.at(static_cast<size_t>(i)) = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) return false;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > o.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial arity mismatch");
    std::vector<int> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("inexact monomial quotient");
    std::vector<int> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - o.e_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial arity mismatch");
    std::vector<int> e(static_cast<size_t>(a.num_vars()));
    for (int i = 0; i < a.num_vars(); ++i) e[static_cast<size_t>(i)] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = a.num_vars() - 1; i >= 0; --i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0;
    }
    return false;
}

namespace {

void fill_degree(int t, int d, int pos, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == t - 1) {
        cur[static_cast<size_t>(pos)] = d;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[static_cast<size_t>(pos)] = e;
        fill_degree(t, d - e, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int t, int d) {
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<size_t>(t), 0);
    fill_degree(t, d, 0, cur, out);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<Monomial> monomials_up_to(int t, int s) {
    std::vector<Monomial> out;
    for (int d = 0; d <= s; ++d) {
        auto part = monomials_of_degree(t, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string to_string(const Monomial& m, const RingSignature& sig) {
    std::string s;
    for (int i = 0; i < m.num_vars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += sig.var_names[static_cast<size_t>(i)];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

}  // namespace ordfan
