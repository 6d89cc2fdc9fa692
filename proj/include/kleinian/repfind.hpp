#pragma once
// Candidate representations: the representation variety as a polynomial ideal
// in 4n variables, the two-generator normalization constraints, and the
// extraction of the finite candidate list from zero-dimensional slices.

#include <optional>
#include <string>
#include <vector>

#include "kleinian/geom.hpp"
#include "kleinian/polysys.hpp"
#include "kleinian/words.hpp"

namespace kleinian {

struct Representation {
  std::vector<MatrixSL2> images;  // one per generator

  const MatrixSL2& image_of_generator(int g) const {
    if (g < 1 || (std::size_t)g > images.size()) throw DomainError("generator index out of range");
    return images[(std::size_t)(g - 1)];
  }

  MatrixSL2 evaluate(const Word& w) const {
    MatrixSL2 acc = MatrixSL2::identity();
    for (int letter : w) {
      const MatrixSL2& m = image_of_generator(letter > 0 ? letter : -letter);
      acc = acc * (letter > 0 ? m : m.inverse());
    }
    return acc;
  }

  bool satisfies_relators(const Presentation& p) const {
    for (const auto& r : p.relators)
      if (!is_identity(evaluate(r))) return false;
    return true;
  }
};

inline bool equals(const Representation& x, const Representation& y) {
  if (x.images.size() != y.images.size()) return false;
  for (std::size_t i = 0; i < x.images.size(); ++i)
    if (!equals(x.images[i], y.images[i])) return false;
  return true;
}

namespace repdetail {

// z_{1,i}..z_{4,i} are the four entries of generator i's image.
inline std::size_t var_index(int gen, int entry) { return (std::size_t)(4 * (gen - 1) + entry); }

struct SymMatrix {
  MultiPoly a, b, c, d;
};

inline SymMatrix sym_identity(std::size_t nvars) {
  return {MultiPoly::constant(nvars, Rat(1)), MultiPoly::constant(nvars, Rat(0)),
          MultiPoly::constant(nvars, Rat(0)), MultiPoly::constant(nvars, Rat(1))};
}

inline SymMatrix sym_generator(std::size_t nvars, int gen, bool inverse) {
  MultiPoly z1 = MultiPoly::variable(nvars, var_index(gen, 0));
  MultiPoly z2 = MultiPoly::variable(nvars, var_index(gen, 1));
  MultiPoly z3 = MultiPoly::variable(nvars, var_index(gen, 2));
  MultiPoly z4 = MultiPoly::variable(nvars, var_index(gen, 3));
  if (!inverse) return {z1, z2, z3, z4};
  // adjugate: exact inverse on the determinant-one variety
  MultiPoly zero = MultiPoly::constant(nvars, Rat(0));
  return {z4, zero - z2, zero - z3, z1};
}

inline SymMatrix sym_mul(const SymMatrix& x, const SymMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

}  // namespace repdetail

// Variable naming for the ideal text format: z1_i .. z4_i.
inline std::vector<std::string> variety_variable_names(int ngens) {
  std::vector<std::string> names;
  for (int g = 1; g <= ngens; ++g)
    for (int e = 1; e <= 4; ++e)
      names.push_back("z" + std::to_string(e) + "_" + std::to_string(g));
  return names;
}

// The ideal whose vanishing set is the representation variety: one
// determinant equation per generator plus the four entries of rho(w) - I per
// relator.
inline Ideal variety_equations(const Presentation& p) {
  std::size_t nvars = 4 * (std::size_t)p.ngens();
  Ideal ideal;
  ideal.nvars = nvars;
  MultiPoly one = MultiPoly::constant(nvars, Rat(1));
  for (int g = 1; g <= p.ngens(); ++g) {
    MultiPoly z1 = MultiPoly::variable(nvars, repdetail::var_index(g, 0));
    MultiPoly z2 = MultiPoly::variable(nvars, repdetail::var_index(g, 1));
    MultiPoly z3 = MultiPoly::variable(nvars, repdetail::var_index(g, 2));
    MultiPoly z4 = MultiPoly::variable(nvars, repdetail::var_index(g, 3));
    ideal.generators.push_back(z1 * z4 - z2 * z3 - one);
  }
  for (const auto& rel : p.relators) {
    repdetail::SymMatrix acc = repdetail::sym_identity(nvars);
    for (int letter : rel) {
      int g = letter > 0 ? letter : -letter;
      acc = repdetail::sym_mul(acc, repdetail::sym_generator(nvars, g, letter < 0));
    }
    MultiPoly ea = acc.a - one;
    MultiPoly ed = acc.d - one;
    for (const auto& e : {ea, acc.b, acc.c, ed})
      if (!e.is_zero()) ideal.generators.push_back(e);
  }
  return ideal;
}

// Adjoin the normalization equations of the pair (k, l):
// upper-right of rho(g_k) is 1, lower-left is 0, upper-right of rho(g_l) is 0.
inline Ideal constrain_pair(const Ideal& ideal, int k, int l) {
  if (k == l) throw DomainError("constrain_pair: k == l");
  Ideal out = ideal;
  std::size_t nvars = ideal.nvars;
  MultiPoly one = MultiPoly::constant(nvars, Rat(1));
  out.generators.push_back(MultiPoly::variable(nvars, repdetail::var_index(k, 1)) - one);
  out.generators.push_back(MultiPoly::variable(nvars, repdetail::var_index(k, 2)));
  out.generators.push_back(MultiPoly::variable(nvars, repdetail::var_index(l, 1)));
  return out;
}

enum class CandidateWarning { no_generator_pairs, positive_dimensional_component };

struct CandidateList {
  std::vector<Representation> representations;
  std::vector<CandidateWarning> warnings;
  bool complete() const {
    for (auto w : warnings)
      if (w == CandidateWarning::positive_dimensional_component) return false;
    return true;
  }
};

struct CandidateBudget {
  long groebner_steps = 200000;
  long grid_cap = 65536;
};

// All ordered generator pairs (k, l), k != l: constrain, solve the
// zero-dimensional slices, verify every relator by exact matrix arithmetic,
// deduplicate.  Positive-dimensional slices raise a completeness warning; the
// empty (unit-ideal) slices contribute nothing and no warning.
inline CandidateList candidate_reps(const Presentation& p,
                                    const CandidateBudget& budget = CandidateBudget{}) {
  CandidateList out;
  if (p.ngens() < 2) {
    out.warnings.push_back(CandidateWarning::no_generator_pairs);
    return out;
  }
  Ideal base = variety_equations(p);
  bool warned_positive = false;
  for (int k = 1; k <= p.ngens(); ++k) {
    for (int l = 1; l <= p.ngens(); ++l) {
      if (k == l) continue;
      Ideal slice = constrain_pair(base, k, l);
      int dim = dimension(slice, budget.groebner_steps);
      if (dim == -1) continue;  // empty slice
      if (dim > 0) {
        if (!warned_positive) {
          out.warnings.push_back(CandidateWarning::positive_dimensional_component);
          warned_positive = true;
        }
        continue;
      }
      auto sols = solve_zero_dim(slice, budget.groebner_steps, budget.grid_cap);
      for (const auto& sol : sols) {
        Representation rep;
        rep.images.reserve((std::size_t)p.ngens());
        bool det_ok = true;
        for (int g = 1; g <= p.ngens(); ++g) {
          const AlgNum& a = sol[repdetail::var_index(g, 0)];
          const AlgNum& b = sol[repdetail::var_index(g, 1)];
          const AlgNum& c = sol[repdetail::var_index(g, 2)];
          const AlgNum& d = sol[repdetail::var_index(g, 3)];
          if (!is_one(sub(mul(a, d), mul(b, c)))) {
            det_ok = false;
            break;
          }
          MatrixSL2 m;
          m.a = a;
          m.b = b;
          m.c = c;
          m.d = d;
          rep.images.push_back(m);
        }
        if (!det_ok || !rep.satisfies_relators(p)) continue;
        bool dup = false;
        for (const auto& existing : out.representations)
          if (equals(existing, rep)) dup = true;
        if (!dup) out.representations.push_back(std::move(rep));
      }
    }
  }
  return out;
}

}  // namespace kleinian
