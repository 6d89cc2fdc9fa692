#pragma once
// Pluggable word-problem oracles.  The pipeline treats a solution to the word
// problem as a supplied component; reference oracles cover free groups, free
// abelian groups and finite groups through permutation representations, and a
// line-protocol subprocess adapter lets external solvers plug in without
// recompiling.

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "kleinian/words.hpp"

namespace kleinian {

struct WordOracle {
  virtual ~WordOracle() = default;
  virtual std::string name() const = 0;
  // true iff w represents the identity of the presented group
  virtual bool is_trivial(const Word& w) = 0;
  virtual bool concurrent_safe() const { return true; }
};

using OraclePtr = std::shared_ptr<WordOracle>;

// Free group: trivial iff the free reduction is empty.
struct FreeOracle final : WordOracle {
  std::string name() const override { return "free"; }
  bool is_trivial(const Word& w) override { return freely_reduced(w).empty(); }
};

// Free abelian group: trivial iff every exponent sum vanishes.
struct FreeAbelianOracle final : WordOracle {
  int ngens;
  explicit FreeAbelianOracle(int n) : ngens(n) {}
  std::string name() const override { return "abelian"; }
  bool is_trivial(const Word& w) override {
    std::vector<long> sums((std::size_t)ngens, 0);
    for (int letter : w) {
      int g = letter > 0 ? letter : -letter;
      if (g < 1 || g > ngens) throw DomainError("oracle: letter out of range");
      sums[(std::size_t)(g - 1)] += letter > 0 ? 1 : -1;
    }
    for (long s : sums)
      if (s) return false;
    return true;
  }
};

// Finite group via a permutation representation: each generator is a
// permutation of {0..n-1}; a word is trivial iff the composite is identity.
struct PermutationOracle final : WordOracle {
  std::vector<std::vector<int>> perms;  // one per generator, one-line notation
  std::size_t degree;

  explicit PermutationOracle(std::vector<std::vector<int>> ps)
      : perms(std::move(ps)), degree(perms.empty() ? 0 : perms[0].size()) {
    for (const auto& p : perms) {
      if (p.size() != degree) throw DomainError("permutation degrees differ");
      std::vector<char> seen(degree, 0);
      for (int v : p) {
        if (v < 0 || (std::size_t)v >= degree || seen[(std::size_t)v])
          throw DomainError("not a permutation");
        seen[(std::size_t)v] = 1;
      }
    }
  }

  std::string name() const override { return "permutation"; }

  bool is_trivial(const Word& w) override {
    std::vector<int> acc((std::size_t)degree);
    std::iota(acc.begin(), acc.end(), 0);
    for (int letter : w) {
      int g = letter > 0 ? letter : -letter;
      if (g < 1 || (std::size_t)g > perms.size()) throw DomainError("oracle: letter out of range");
      const auto& p = perms[(std::size_t)(g - 1)];
      std::vector<int> next(degree);
      if (letter > 0) {
        for (std::size_t i = 0; i < degree; ++i) next[i] = p[(std::size_t)acc[i]];
      } else {
        std::vector<int> pinv(degree);
        for (std::size_t i = 0; i < degree; ++i) pinv[(std::size_t)p[i]] = (int)i;
        for (std::size_t i = 0; i < degree; ++i) next[i] = pinv[(std::size_t)acc[i]];
      }
      acc = std::move(next);
    }
    for (std::size_t i = 0; i < degree; ++i)
      if (acc[i] != (int)i) return false;
    return true;
  }
};

// Adapter for ad-hoc oracles (fixtures wrap exact matrix evaluation of a
// representation that is faithful by construction).
struct FunctionOracle final : WordOracle {
  std::string label;
  std::function<bool(const Word&)> fn;
  FunctionOracle(std::string name, std::function<bool(const Word&)> f)
      : label(std::move(name)), fn(std::move(f)) {}
  std::string name() const override { return label; }
  bool is_trivial(const Word& w) override { return fn(w); }
};

// Line-protocol subprocess: one word per line out (space-separated generator
// tokens, capitalized = inverse), one verdict per line back ("trivial" or
// "nontrivial").  Queries are serialized.
class SubprocessOracle final : public WordOracle {
 public:
  SubprocessOracle(const std::string& command, Presentation presentation)
      : presentation_(std::move(presentation)) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw DomainError("subprocess oracle: pipe failed");
    pid_ = fork();
    if (pid_ < 0) throw DomainError("subprocess oracle: fork failed");
    if (pid_ == 0) {
      dup2(to_child[0], 0);
      dup2(from_child[1], 1);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    out_ = fdopen(to_child[1], "w");
    in_ = fdopen(from_child[0], "r");
    if (!out_ || !in_) throw DomainError("subprocess oracle: fdopen failed");
  }

  ~SubprocessOracle() override {
    if (out_) fclose(out_);
    if (in_) fclose(in_);
    if (pid_ > 0) {
      int status = 0;
      waitpid(pid_, &status, 0);
    }
  }

  std::string name() const override { return "subprocess"; }
  bool concurrent_safe() const override { return false; }

  bool is_trivial(const Word& w) override {
    std::string line = word_to_string(w, presentation_);
    fprintf(out_, "%s\n", line.c_str());
    fflush(out_);
    char buf[256];
    if (!fgets(buf, sizeof buf, in_))
      throw ResourceError("subprocess oracle: no reply");
    std::string reply(buf);
    while (!reply.empty() && (reply.back() == '\n' || reply.back() == '\r')) reply.pop_back();
    if (reply == "trivial") return true;
    if (reply == "nontrivial") return false;
    throw ParseError("subprocess oracle: bad verdict '" + reply + "'");
  }

 private:
  Presentation presentation_;
  pid_t pid_ = -1;
  FILE* out_ = nullptr;
  FILE* in_ = nullptr;
};

}  // namespace kleinian
