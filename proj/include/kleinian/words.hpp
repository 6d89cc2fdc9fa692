#pragma once
// Words over a finite generating set, free reduction, the deterministic
// breadth-first enumeration used by both decision loops, and finite group
// presentations with their text format.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kleinian/rational.hpp"

namespace kleinian {

// A word is a sequence of nonzero letters: +k is generator k (1-based), -k
// its inverse.
using Word = std::vector<int>;

inline Word freely_reduced(const Word& w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) throw DomainError("word contains a zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return freely_reduced(out);
}

// Letter order: g1 < g1^-1 < g2 < g2^-1 < ...; inverses adjacent.
inline int letter_rank(int letter, int ngens) {
  int g = letter > 0 ? letter : -letter;
  if (g < 1 || g > ngens) throw DomainError("letter out of range");
  return 2 * (g - 1) + (letter < 0 ? 1 : 0);
}

inline int letter_from_rank(int rank) { return rank % 2 == 0 ? rank / 2 + 1 : -(rank / 2 + 1); }

// Breadth-first by length, lexicographic within a length, and inverse-closed:
// when a word is emitted its inverse is emitted immediately after (when
// distinct), and later skipped at its own lexicographic slot.
class WordEnumerator {
 public:
  explicit WordEnumerator(int ngens) : ngens_(ngens) {
    if (ngens < 1) throw DomainError("WordEnumerator needs at least one generator");
    current_.clear();  // empty word comes first
  }

  // next `count` fresh freely-reduced words (paired with inverses)
  std::vector<Word> next_batch(std::size_t count) {
    std::vector<Word> out;
    while (out.size() < count) {
      Word w = advance();
      if (seen_.count(w)) continue;
      seen_.insert(w);
      out.push_back(w);
      Word iw = inverse_word(w);
      if (!(iw == w)) {
        seen_.insert(iw);
        out.push_back(iw);
      }
    }
    return out;
  }

  std::size_t emitted() const { return seen_.size(); }

 private:
  // lexicographically next freely reduced word, growing by length
  Word advance() {
    while (true) {
      if (!started_) {
        started_ = true;
        return {};  // the empty word
      }
      // increment current_ as a number in base 2*ngens, lexicographic order
      if (!increment()) {
        current_.assign(current_.size() + 1, 0);
        fill_lowest_from(0);
      }
      Word w;
      w.reserve(current_.size());
      for (int r : current_) w.push_back(letter_from_rank(r));
      if (is_reduced(w)) return w;
    }
  }

  bool increment() {
    for (std::size_t i = current_.size(); i-- > 0;) {
      if (current_[i] + 1 < 2 * ngens_) {
        ++current_[i];
        for (std::size_t j = i + 1; j < current_.size(); ++j) current_[j] = 0;
        return true;
      }
      if (i == 0) break;
    }
    return false;
  }

  void fill_lowest_from(std::size_t i) {
    for (std::size_t j = i; j < current_.size(); ++j) current_[j] = 0;
  }

  static bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] == -w[i - 1]) return false;
    return true;
  }

  int ngens_;
  std::vector<int> current_;
  bool started_ = false;
  std::set<Word> seen_;
};

// ---- presentations ----

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced

  int ngens() const { return (int)generators.size(); }
};

// Token to letter: a generator name maps to +k; the name with its first
// letter capitalized maps to -k.
inline int token_to_letter(const std::string& token, const Presentation& p) {
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (token == p.generators[i]) return (int)i + 1;
    std::string inv = p.generators[i];
    inv[0] = (char)std::toupper((unsigned char)inv[0]);
    if (token == inv) return -(int)(i + 1);
  }
  throw ParseError("unknown generator token '" + token + "'");
}

inline std::string letter_to_token(int letter, const Presentation& p) {
  int g = letter > 0 ? letter : -letter;
  if (g < 1 || g > p.ngens()) throw DomainError("letter out of range");
  std::string t = p.generators[(std::size_t)(g - 1)];
  if (letter < 0) t[0] = (char)std::toupper((unsigned char)t[0]);
  return t;
}

inline Word parse_word(const std::string& text, const Presentation& p) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) w.push_back(token_to_letter(tok, p));
  return freely_reduced(w);
}

inline std::string word_to_string(const Word& w, const Presentation& p) {
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += letter_to_token(letter, p);
  }
  return out;
}

// Presentation text format:
//   gens: a b
//   rel: a b A B
inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      if (have_gens) throw ParseError("line " + std::to_string(lineno) + ": duplicate gens:");
      std::string name;
      while (ls >> name) {
        if (!std::islower((unsigned char)name[0]))
          throw ParseError("line " + std::to_string(lineno) +
                           ": generator names must start lowercase: '" + name + "'");
        p.generators.push_back(name);
      }
      if (p.generators.empty())
        throw ParseError("line " + std::to_string(lineno) + ": no generators");
      have_gens = true;
    } else if (head == "rel:") {
      if (!have_gens)
        throw ParseError("line " + std::to_string(lineno) + ": rel: before gens:");
      std::string tok;
      Word w;
      bool any = false;
      while (ls >> tok) {
        any = true;
        w.push_back(token_to_letter(tok, p));
      }
      if (!any) throw ParseError("line " + std::to_string(lineno) + ": empty relator");
      p.relators.push_back(freely_reduced(w));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'gens:' or 'rel:', got '" +
                       head + "'");
    }
  }
  if (!have_gens) throw ParseError("presentation has no gens: line");
  return p;
}

inline std::string presentation_to_string(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += "rel: " + word_to_string(r, p) + "\n";
  return out;
}

}  // namespace kleinian
