#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plmap.hpp"

namespace cg {

struct WordFactor {
  int index;
  long long exponent;
  bool operator==(const WordFactor& o) const = default;
};

// Freely reduced word over an indexed alphabet, stored in run-length form
// (adjacent factors have distinct indices, exponents are nonzero).
class Word {
public:
  Word() = default;
  explicit Word(std::vector<WordFactor> factors);

  static Word empty() { return Word(); }
  static Word generator(int index, long long exponent = 1) {
    return Word({{index, exponent}});
  }

  const std::vector<WordFactor>& factors() const { return factors_; }
  bool is_empty() const { return factors_.empty(); }
  // Sum of |exponent| over factors.
  long long length() const;
  int max_index() const;

  Word concat(const Word& o) const;
  Word inverse() const;
  Word conjugated_by(const Word& u) const { return u.concat(*this).concat(u.inverse()); }
  static Word commutator(const Word& x, const Word& y) {
    return x.concat(y).concat(x.inverse()).concat(y.inverse());
  }
  Word pow(long long n) const;

  bool operator==(const Word& o) const { return factors_ == o.factors_; }
  std::string str(const std::vector<std::string>& names = {}) const;

private:
  std::vector<WordFactor> factors_;
};

// Composition with the rightmost factor applied first.
PLMap evaluate_word(const Word& w, const std::vector<PLMap>& assignment);

std::vector<long long> exponent_sum(const Word& w, int alphabet_size);

enum class RelatorFamilyKind { thompson_f, higman_thompson_fn, lamplighter };

struct RelatorFamily {
  RelatorFamilyKind kind;
  // thompson_f: no parameters.
  // higman_thompson_fn: n >= 2 and index bound >= n.
  // lamplighter: translation step N >= 1 and kmax >= 1.
  int n = 0;
  int bound = 0;
};

std::vector<Word> relators(const RelatorFamily& family);

struct RelatorOutcome {
  Word relator;
  bool holds;
  // A point moved by the evaluated relator, when it is not the identity.
  Rational witness_x;
  Rational witness_fx;
};

struct RelatorReport {
  std::vector<RelatorOutcome> outcomes;
  bool all_hold;
};

RelatorReport check_relators(const std::vector<Word>& rels, const std::vector<PLMap>& assignment);

}  // namespace cg
