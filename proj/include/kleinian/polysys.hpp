#pragma once
// Multivariate polynomial ideals over Q: Buchberger's algorithm with the
// product criterion, reduced bases, Krull dimension from the leading-term
// staircase, elimination to a single variable, and zero-dimensional solving
// into exact algebraic coordinates.  Coefficients stay rational throughout;
// a step budget guards runaway computations and surfaces as ResourceError.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kleinian/algnum.hpp"

namespace kleinian {

using ExpVec = std::vector<unsigned>;

enum class MonomialOrder { lex, grevlex };

// Compare exponent vectors; `perm` maps priority position -> variable index,
// so elimination orders are expressed by permuting variables.
struct OrderFn {
  MonomialOrder type = MonomialOrder::lex;
  std::vector<int> perm;  // empty = identity

  int var_at(std::size_t pos, std::size_t nvars) const {
    return perm.empty() ? (int)pos : perm[pos];
  }

  // returns true if a < b in the order
  bool less(const ExpVec& a, const ExpVec& b) const {
    std::size_t n = a.size();
    if (type == MonomialOrder::grevlex) {
      unsigned long da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) da += a[i];
      for (std::size_t i = 0; i < n; ++i) db += b[i];
      if (da != db) return da < db;
      for (std::size_t pos = n; pos-- > 0;) {
        int v = var_at(pos, n);
        if (a[(std::size_t)v] != b[(std::size_t)v])
          return a[(std::size_t)v] > b[(std::size_t)v];
        if (pos == 0) break;
      }
      return false;
    }
    for (std::size_t pos = 0; pos < n; ++pos) {
      int v = var_at(pos, n);
      if (a[(std::size_t)v] != b[(std::size_t)v]) return a[(std::size_t)v] < b[(std::size_t)v];
    }
    return false;
  }
};

class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t idx) {
    MultiPoly p(nvars);
    ExpVec e(nvars, 0);
    e[idx] = 1;
    p.terms_[e] = Rat(1);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend MultiPoly operator*(const Rat& s, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly mul_term(const ExpVec& e, const Rat& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [et, ct] : terms_) {
      ExpVec ne(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) ne[i] = et[i] + e[i];
      r.terms_[ne] = c * ct;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // leading term with respect to an order (scan; term maps are stored in a
  // fixed canonical order independent of the Groebner order)
  std::pair<ExpVec, Rat> leading_term(const OrderFn& ord) const {
    if (is_zero()) throw DomainError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  MultiPoly monic(const OrderFn& ord) const {
    if (is_zero()) return *this;
    auto [e, c] = leading_term(ord);
    return (Rat(1) / c) * (*this);
  }

  // interval evaluation at boxed coordinates
  Box eval_box(const std::vector<Box>& coords, unsigned prec) const {
    Box acc = Box::point(Rat(0), Rat(0));
    for (const auto& [e, c] : terms_) {
      Box t = Box::point(c, Rat(0));
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = dyadic_outward(t * coords[i], prec);
      acc = dyadic_outward(acc + t, prec);
    }
    return acc;
  }

  // exact evaluation at algebraic coordinates (power-cached)
  AlgNum eval_alg(const std::vector<AlgNum>& coords) const {
    std::vector<std::vector<AlgNum>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(AlgNum::one());
    auto power = [&](std::size_t i, unsigned k) -> const AlgNum& {
      while (powers[i].size() <= k) powers[i].push_back(mul(powers[i].back(), coords[i]));
      return powers[i][k];
    };
    AlgNum acc = AlgNum::zero();
    for (const auto& [e, c] : terms_) {
      AlgNum t(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) t = mul(t, power(i, e[i]));
      acc = add(acc, t);
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    // print highest lex term first for readability
    std::vector<std::pair<ExpVec, Rat>> ts(terms_.begin(), terms_.end());
    std::reverse(ts.begin(), ts.end());
    std::string out;
    for (const auto& [e, c] : ts) {
      Rat a = abs(c);
      if (out.empty())
        out += sign(c) < 0 ? "-" : "";
      else
        out += sign(c) < 0 ? " - " : " + ";
      bool printed_coeff = false;
      bool has_var = false;
      for (auto v : e)
        if (v) has_var = true;
      if (!has_var || a != 1) {
        out += a.get_str();
        printed_coeff = true;
      }
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (printed_coeff || out.back() != ' ') {
          if (printed_coeff) out += "*";
          else if (!out.empty() && out.back() != ' ' && out.back() != '-') out += "*";
        }
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
        printed_coeff = true;
      }
    }
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<ExpVec, Rat> terms_;
};

struct Ideal {
  std::size_t nvars = 0;
  std::vector<MultiPoly> generators;  // nonzero
  OrderFn order;                      // defaults to lex
};

namespace polydetail {

inline bool divides_exp(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec lcm_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

inline ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

// Normal form of p modulo basis; counts work against the budget.
inline MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                        const OrderFn& ord, long& budget) {
  MultiPoly rem(p.nvars());
  MultiPoly cur = p;
  while (!cur.is_zero()) {
    if (--budget < 0) throw ResourceError("groebner: step budget exhausted");
    auto [e, c] = cur.leading_term(ord);
    bool reduced = false;
    for (const auto& g : basis) {
      auto [ge, gc] = g.leading_term(ord);
      if (divides_exp(ge, e)) {
        cur = cur - g.mul_term(sub_exp(e, ge), c / gc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(e, c);
      MultiPoly lt(cur.nvars());
      lt.add_term(e, c);
      cur = cur - lt;
    }
  }
  return rem;
}

}  // namespace polydetail

// Reduced Groebner basis of the ideal under its own order.
inline Ideal groebner(const Ideal& ideal, long step_budget = 200000) {
  const OrderFn& ord = ideal.order;
  std::vector<MultiPoly> basis;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(g.monic(ord));
  long budget = step_budget;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [ei, ci] = basis[i].leading_term(ord);
    auto [ej, cj] = basis[j].leading_term(ord);
    ExpVec l = polydetail::lcm_exp(ei, ej);
    // product criterion: coprime leading monomials reduce to zero
    bool coprime = true;
    for (std::size_t k = 0; k < l.size(); ++k)
      if (ei[k] > 0 && ej[k] > 0) coprime = false;
    if (coprime) continue;
    MultiPoly s = basis[i].mul_term(polydetail::sub_exp(l, ei), Rat(1) / ci) -
                  basis[j].mul_term(polydetail::sub_exp(l, ej), Rat(1) / cj);
    MultiPoly r = polydetail::reduce(s, basis, ord, budget);
    if (!r.is_zero()) {
      basis.push_back(r.monic(ord));
      for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.push_back({k, basis.size() - 1});
    }
  }

  // inter-reduce to the reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<MultiPoly> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      MultiPoly r = polydetail::reduce(basis[i], others, ord, budget);
      if (!(r == basis[i])) changed = true;
      if (r.is_zero()) {
        basis.erase(basis.begin() + (long)i);
        --i;
      } else {
        basis[i] = r.monic(ord);
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  Ideal out = ideal;
  out.generators = std::move(basis);
  return out;
}

// Ideal membership via reduction against a Groebner basis.
inline bool reduces_to_zero(const MultiPoly& p, const Ideal& gb, long step_budget = 200000) {
  long budget = step_budget;
  return polydetail::reduce(p, gb.generators, gb.order, budget).is_zero();
}

// Krull dimension: -1 for the unit ideal, else the size of the largest
// variable subset S such that no leading monomial is supported inside S.
inline int dimension(const Ideal& ideal, long step_budget = 200000) {
  if (ideal.generators.empty()) return (int)ideal.nvars;
  Ideal work = ideal;
  work.order = OrderFn{MonomialOrder::grevlex, {}};
  Ideal gb = groebner(work, step_budget);
  for (const auto& g : gb.generators) {
    bool constant = true;
    for (const auto& [e, c] : g.terms())
      for (auto v : e)
        if (v) constant = false;
    if (constant && !g.is_zero()) return -1;
  }
  std::size_t n = ideal.nvars;
  std::vector<ExpVec> lts;
  for (const auto& g : gb.generators) lts.push_back(g.leading_term(gb.order).first);
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& e : lts) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

// Generator of the elimination ideal in the single kept variable.  The ideal
// must be zero-dimensional.
inline Poly eliminate(const Ideal& ideal, std::size_t keep, long step_budget = 200000) {
  int dim = dimension(ideal, step_budget);
  if (dim != 0) throw DomainError("eliminate: ideal is not zero-dimensional");
  // lex order with `keep` last
  OrderFn ord{MonomialOrder::lex, {}};
  ord.perm.clear();
  for (std::size_t i = 0; i < ideal.nvars; ++i)
    if (i != keep) ord.perm.push_back((int)i);
  ord.perm.push_back((int)keep);
  Ideal work = ideal;
  work.order = ord;
  Ideal gb = groebner(work, step_budget);
  std::optional<Poly> best;
  for (const auto& g : gb.generators) {
    bool univ = true;
    unsigned maxdeg = 0;
    for (const auto& [e, c] : g.terms()) {
      for (std::size_t i = 0; i < ideal.nvars; ++i)
        if (i != keep && e[i] > 0) univ = false;
      maxdeg = std::max(maxdeg, e[keep]);
    }
    if (!univ) continue;
    std::vector<Rat> coeffs(maxdeg + 1, Rat(0));
    for (const auto& [e, c] : g.terms()) coeffs[e[keep]] = c;
    Poly p = Poly::from_coeffs(std::move(coeffs)).canonical();
    if (!best || p.degree() < best->degree()) best = p;
  }
  if (!best) throw DomainError("eliminate: no univariate generator found");
  return *best;
}

// Solutions of a zero-dimensional ideal as exact coordinate tuples: the
// candidate product set from the per-variable elimination polynomials,
// filtered by exact evaluation of every generator.
inline std::vector<std::vector<AlgNum>> solve_zero_dim(const Ideal& ideal,
                                                       long step_budget = 200000,
                                                       long grid_cap = 65536) {
  int dim = dimension(ideal, step_budget);
  if (dim != 0) throw DomainError("solve_zero_dim: ideal is not zero-dimensional");
  std::size_t n = ideal.nvars;
  std::vector<std::vector<AlgNum>> coords(n);
  long grid = 1;
  for (std::size_t v = 0; v < n; ++v) {
    Poly pv = eliminate(ideal, v, step_budget);
    coords[v] = isolate_roots(pv);
    grid *= (long)coords[v].size();
    if (grid > grid_cap) throw ResourceError("solve_zero_dim: candidate grid exceeds cap");
    if (coords[v].empty()) return {};
  }
  std::vector<std::vector<AlgNum>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<AlgNum> tuple;
    tuple.reserve(n);
    for (std::size_t v = 0; v < n; ++v) tuple.push_back(coords[v][idx[v]]);
    // interval prefilter, then exact evaluation
    bool good = true;
    std::vector<Box> boxes;
    for (auto& t : tuple) boxes.push_back(t.refined(pow2(-32)).box());
    for (const auto& g : ideal.generators) {
      if (!g.eval_box(boxes, 96).contains_zero()) {
        good = false;
        break;
      }
    }
    if (good) {
      for (const auto& g : ideal.generators) {
        if (!g.eval_alg(tuple).is_zero()) {
          good = false;
          break;
        }
      }
    }
    if (good) out.push_back(std::move(tuple));
    // next grid point
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (++idx[v] < coords[v].size()) break;
      idx[v] = 0;
    }
    if (v == n) break;
  }
  return out;
}

// ---- plain-text ideal format ----
//
//   vars: x y z
//   x^2 - 2
//   y - x
//
// Infix with integer or rational coefficients, '*' products, '^' powers.

namespace polydetail {

struct PolyParser {
  const std::string& src;
  std::size_t pos = 0;
  const std::vector<std::string>& names;
  std::size_t nvars;

  void skip() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term(parse_sign());
    while (true) {
      skip();
      if (pos >= src.size()) break;
      if (src[pos] == '+') {
        ++pos;
        acc = acc + parse_term(1);
      } else if (src[pos] == '-') {
        ++pos;
        acc = acc + parse_term(-1);
      } else {
        break;
      }
    }
    return acc;
  }

  int parse_sign() {
    skip();
    if (pos < src.size() && src[pos] == '-') {
      ++pos;
      return -1;
    }
    if (pos < src.size() && src[pos] == '+') ++pos;
    return 1;
  }

  MultiPoly parse_term(int sgn) {
    MultiPoly acc = MultiPoly::constant(nvars, Rat(sgn));
    bool first = true;
    while (true) {
      skip();
      if (pos >= src.size()) break;
      char c = src[pos];
      if (!first && c == '*') {
        ++pos;
        skip();
        if (pos >= src.size()) throw ParseError("dangling '*'");
        c = src[pos];
      } else if (!first && !(std::isalpha((unsigned char)c) || std::isdigit((unsigned char)c) ||
                             c == '(')) {
        break;
      }
      acc = acc * parse_factor();
      first = false;
    }
    return acc;
  }

  MultiPoly parse_factor() {
    skip();
    if (pos >= src.size()) throw ParseError("unexpected end of polynomial");
    char c = src[pos];
    MultiPoly base(nvars);
    if (c == '(') {
      ++pos;
      base = parse_expr();
      if (!eat(')')) throw ParseError("missing ')'");
    } else if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < src.size() && (std::isdigit((unsigned char)src[pos]) || src[pos] == '/')) ++pos;
      base = MultiPoly::constant(nvars, rat_from_string(src.substr(start, pos - start)));
    } else if (std::isalpha((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum((unsigned char)src[pos]) || src[pos] == '_' || src[pos] == ','))
        ++pos;
      std::string name = src.substr(start, pos - start);
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown variable '" + name + "'");
      base = MultiPoly::variable(nvars, (std::size_t)(it - names.begin()));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
    }
    skip();
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
      if (start == pos) throw ParseError("missing exponent");
      unsigned e = (unsigned)std::stoul(src.substr(start, pos - start));
      MultiPoly r = MultiPoly::constant(nvars, Rat(1));
      for (unsigned k = 0; k < e; ++k) r = r * base;
      base = r;
    }
    return base;
  }
};

}  // namespace polydetail

inline MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& names) {
  polydetail::PolyParser p{text, 0, names, names.size()};
  MultiPoly r = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) throw ParseError("trailing input in polynomial: '" + text + "'");
  return r;
}

struct NamedIdeal {
  std::vector<std::string> names;
  Ideal ideal;
};

inline NamedIdeal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  NamedIdeal out;
  bool have_vars = false;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_vars) {
      if (first != "vars:") throw ParseError("ideal text must start with 'vars:'");
      std::string name;
      while (ls >> name) out.names.push_back(name);
      if (out.names.empty()) throw ParseError("no variables declared");
      out.ideal.nvars = out.names.size();
      have_vars = true;
    } else {
      MultiPoly p = parse_multipoly(line, out.names);
      if (!p.is_zero()) out.ideal.generators.push_back(p);
    }
  }
  if (!have_vars) throw ParseError("empty ideal text");
  return out;
}

}  // namespace kleinian
