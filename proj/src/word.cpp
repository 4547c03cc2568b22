#include "word.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cg {

Word::Word(std::vector<WordFactor> factors) {
  for (const auto& f : factors) {
    if (f.index < 0) fail(Errc::index_out_of_range, "negative generator index");
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().index == f.index) {
      factors_.back().exponent += f.exponent;
      if (factors_.back().exponent == 0) factors_.pop_back();
    } else {
      factors_.push_back(f);
    }
  }
}

long long Word::length() const {
  long long n = 0;
  for (const auto& f : factors_) n += f.exponent < 0 ? -f.exponent : f.exponent;
  return n;
}

int Word::max_index() const {
  int m = -1;
  for (const auto& f : factors_) m = std::max(m, f.index);
  return m;
}

Word Word::concat(const Word& o) const {
  std::vector<WordFactor> all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  return Word(std::move(all));
}

Word Word::inverse() const {
  std::vector<WordFactor> rev(factors_.rbegin(), factors_.rend());
  for (auto& f : rev) f.exponent = -f.exponent;
  return Word(std::move(rev));
}

Word Word::pow(long long n) const {
  Word acc;
  Word base = n >= 0 ? *this : inverse();
  long long reps = n >= 0 ? n : -n;
  for (long long i = 0; i < reps; ++i) acc = acc.concat(base);
  return acc;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " ";
    std::string name = f.index < static_cast<int>(names.size())
                           ? names[f.index]
                           : "g" + std::to_string(f.index);
    out += name;
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

PLMap evaluate_word(const Word& w, const std::vector<PLMap>& assignment) {
  PLMap acc = PLMap::identity();
  for (const auto& f : w.factors()) {
    if (f.index >= static_cast<int>(assignment.size()))
      fail(Errc::index_out_of_range,
           "word uses generator " + std::to_string(f.index) + " but only " +
               std::to_string(assignment.size()) + " maps were given");
    acc = compose(acc, power(assignment[static_cast<size_t>(f.index)], f.exponent));
  }
  return acc;
}

std::vector<long long> exponent_sum(const Word& w, int alphabet_size) {
  if (w.max_index() >= alphabet_size)
    fail(Errc::index_out_of_range, "word index exceeds alphabet size");
  std::vector<long long> sums(static_cast<size_t>(alphabet_size), 0);
  for (const auto& f : w.factors()) sums[static_cast<size_t>(f.index)] += f.exponent;
  return sums;
}

std::vector<Word> relators(const RelatorFamily& family) {
  std::vector<Word> out;
  switch (family.kind) {
    case RelatorFamilyKind::thompson_f: {
      // [b^-1 a, a^k b a^-k] for k = 1, 2 over the alphabet (a, b)
      Word u({{1, -1}, {0, 1}});
      for (int k = 1; k <= 2; ++k) {
        Word v({{0, k}, {1, 1}, {0, -k}});
        out.push_back(Word::commutator(u, v));
      }
      break;
    }
    case RelatorFamilyKind::higman_thompson_fn: {
      if (family.n < 2 || family.bound < family.n)
        fail(Errc::bad_parameters, "need n >= 2 and index bound >= n");
      for (int i = 0; i <= family.bound; ++i) {
        for (int j = i + 1; j <= family.bound; ++j) {
          // g_i^-1 g_j g_i g_{j+n-1}^-1
          out.push_back(Word({{i, -1}, {j, 1}, {i, 1}, {j + family.n - 1, -1}}));
        }
      }
      break;
    }
    case RelatorFamilyKind::lamplighter: {
      if (family.n < 1 || family.bound < 1)
        fail(Errc::bad_parameters, "need translation step >= 1 and kmax >= 1");
      long long step = family.n;
      for (int i = 0; i <= family.bound; ++i) {
        for (int j = i + 1; j <= family.bound; ++j) {
          Word yi = i == 0 ? Word::generator(1)
                           : Word({{0, i * step}, {1, 1}, {0, -i * step}});
          Word yj({{0, j * step}, {1, 1}, {0, -j * step}});
          out.push_back(Word::commutator(yi, yj));
        }
      }
      break;
    }
  }
  return out;
}

RelatorReport check_relators(const std::vector<Word>& rels,
                             const std::vector<PLMap>& assignment) {
  RelatorReport report;
  report.all_hold = true;
  for (const auto& rel : rels) {
    PLMap value = evaluate_word(rel, assignment);
    RelatorOutcome outcome{rel, value.is_identity(), Rational(0), Rational(0)};
    if (!outcome.holds) {
      // any point in the support witnesses the failure
      IntervalSet supp = support(value);
      const Interval& iv = supp.components().front();
      Rational x;
      if (iv.lo.is_finite() && iv.hi.is_finite())
        x = midpoint(iv.lo.finite(), iv.hi.finite());
      else if (iv.lo.is_finite())
        x = iv.lo.finite() + Rational(1);
      else if (iv.hi.is_finite())
        x = iv.hi.finite() - Rational(1);
      outcome.witness_x = x;
      outcome.witness_fx = value.evaluate(x);
      report.all_hold = false;
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace cg
