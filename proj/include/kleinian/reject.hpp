#pragma once
// The incremental rejection procedure: detect that a representation is not
// discrete and faithful with torsion-free image, by finding one of four
// witnesses — reducibility, a kernel element, a nontrivial elliptic or
// parabolic, or a pair of noncommuting elements below the Margulis-style
// norm threshold.  Every rejection carries a re-checkable witness.

#include <optional>
#include <utility>
#include <vector>

#include "kleinian/geom.hpp"
#include "kleinian/repfind.hpp"
#include "kleinian/wordproblem.hpp"

namespace kleinian {

// The exact threshold: ||A||^2 < 2 + 2^-58.
inline const AlgNum& margulis_norm_threshold() {
  static const AlgNum t(Rat(2) + rat_of(1, pow_int(2, 58)));
  return t;
}

// True iff all generator images share a common eigenvector; +-I images impose
// no constraint, and an all-+-I representation is reducible by convention.
inline bool is_reducible(const Representation& rep) {
  std::optional<std::vector<Eigenvector>> common;
  for (const auto& m : rep.images) {
    if (is_plus_minus_identity(m)) continue;
    auto evs = eigenvectors(m);
    if (!common) {
      common = evs;
      continue;
    }
    std::vector<Eigenvector> next;
    for (const auto& u : *common)
      for (const auto& v : evs)
        if (equals(u, v)) next.push_back(u);
    common = next;
    if (common->empty()) return false;
  }
  return true;  // nonempty intersection, or no constraints at all
}

enum class RejectReason { reducible, kernel, torsion, elliptic_or_parabolic, small_noncommuting };

struct RejectWitness {
  RejectReason reason;
  Word word;        // kernel/torsion element, or the elliptic/parabolic word
  Word second_word; // second element of a noncommuting pair
};

struct RejectState {
  Representation rep;
  OraclePtr oracle;
  WordEnumerator enumerator;
  std::vector<std::pair<Word, MatrixSL2>> matrices;  // P = rho(W) \ {+-I}, in order
  std::vector<std::size_t> small_indices;            // indices into `matrices` below threshold
  std::size_t words_enumerated = 0;
  bool checked_reducible = false;
  std::optional<RejectWitness> verdict;

  RejectState(Representation r, OraclePtr o)
      : rep(std::move(r)), oracle(std::move(o)), enumerator((int)rep.images.size()) {}

  bool rejected() const { return verdict.has_value(); }
};

// First elliptic or parabolic (enumeration order) in a matrix list.
inline std::optional<std::size_t> find_elliptic_or_parabolic(const std::vector<MatrixSL2>& P) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    IsometryClass c = classify(P[i]);
    if (c == IsometryClass::elliptic || c == IsometryClass::parabolic) return i;
  }
  return std::nullopt;
}

// First pair below the norm threshold with a nonzero commutator (exact).
inline std::optional<std::pair<std::size_t, std::size_t>> find_small_noncommuting(
    const std::vector<MatrixSL2>& P) {
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (compare_real(norm_sq(P[i]), margulis_norm_threshold()) == Ordering::less) {
      for (std::size_t j : small)
        if (!equals(P[i] * P[j], P[j] * P[i])) return std::make_pair(j, i);
      small.push_back(i);
    }
  }
  return std::nullopt;
}

// A word in `words` mapping to the exact identity that the oracle says is not
// the identity of the group.
inline std::optional<Word> find_kernel_witness(const Representation& rep,
                                               const std::vector<Word>& words,
                                               WordOracle& oracle) {
  for (const auto& w : words) {
    if (w.empty()) continue;
    if (is_identity(rep.evaluate(w)) && !oracle.is_trivial(w)) return w;
  }
  return std::nullopt;
}

// Enumerate `batch` more freely reduced words (inverse-closed), extend P, and
// run the witness finders incrementally; the verdict is monotone.
inline void reject_step(RejectState& state, std::size_t batch = 8) {
  if (state.rejected()) return;
  if (!state.checked_reducible) {
    state.checked_reducible = true;
    if (is_reducible(state.rep)) {
      state.verdict = RejectWitness{RejectReason::reducible, {}, {}};
      return;
    }
  }
  auto words = state.enumerator.next_batch(batch);
  state.words_enumerated += words.size();
  for (const auto& w : words) {
    if (w.empty()) continue;
    MatrixSL2 m = state.rep.evaluate(w);
    if (is_identity(m)) {
      if (!state.oracle->is_trivial(w)) {
        state.verdict = RejectWitness{RejectReason::kernel, w, {}};
        return;
      }
      continue;
    }
    if (is_minus_identity(m)) {
      // rho(w) = -I forces w != 1 in the group (relators map to I exactly),
      // so this is always a torsion witness; a trivial oracle answer would
      // contradict the presentation
      if (state.oracle->is_trivial(w))
        throw DomainError("oracle claims trivial but the image is -I");
      state.verdict = RejectWitness{RejectReason::torsion, w, {}};
      return;
    }
    state.matrices.push_back({w, m});
    IsometryClass cls = classify(m);
    if (cls == IsometryClass::elliptic || cls == IsometryClass::parabolic) {
      state.verdict = RejectWitness{RejectReason::elliptic_or_parabolic, w, {}};
      return;
    }
    if (compare_real(norm_sq(m), margulis_norm_threshold()) == Ordering::less) {
      std::size_t self = state.matrices.size() - 1;
      for (std::size_t j : state.small_indices) {
        const MatrixSL2& other = state.matrices[j].second;
        if (!equals(m * other, other * m)) {
          state.verdict = RejectWitness{RejectReason::small_noncommuting,
                                        state.matrices[j].first, w};
          return;
        }
      }
      state.small_indices.push_back(self);
    }
  }
}

// Re-check a rejection witness from scratch against the representation.
inline bool verify_reject_witness(const Representation& rep, const RejectWitness& w,
                                  WordOracle& oracle) {
  switch (w.reason) {
    case RejectReason::reducible:
      return is_reducible(rep);
    case RejectReason::kernel:
      return is_identity(rep.evaluate(w.word)) && !oracle.is_trivial(w.word);
    case RejectReason::torsion:
      return is_minus_identity(rep.evaluate(w.word)) && !oracle.is_trivial(w.word);
    case RejectReason::elliptic_or_parabolic: {
      IsometryClass c = classify(rep.evaluate(w.word));
      return c == IsometryClass::elliptic || c == IsometryClass::parabolic;
    }
    case RejectReason::small_noncommuting: {
      MatrixSL2 a = rep.evaluate(w.word), b = rep.evaluate(w.second_word);
      return compare_real(norm_sq(a), margulis_norm_threshold()) == Ordering::less &&
             compare_real(norm_sq(b), margulis_norm_threshold()) == Ordering::less &&
             !equals(a * b, b * a);
    }
  }
  return false;
}

}  // namespace kleinian
