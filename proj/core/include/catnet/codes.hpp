#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace catnet {

using Word = std::vector<std::uint8_t>;

/// Pointed code: a multiset of length-n words over {0..q-1} that contains the
/// zero word exactly once. Word instances are indexed, so repeated words may
/// carry different weights.
class Code {
 public:
  Code(int length, int alphabet, std::vector<Word> words);

  /// The zero object {c_0} at the given length.
  static Code zero(int length, int alphabet = 2);
  /// Parse words written as digit strings ("0110").
  static Code from_strings(int alphabet, const std::vector<std::string>& words);

  int length() const noexcept { return length_; }
  int alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& word(std::size_t i) const { return words_.at(i); }
  std::size_t zero_index() const noexcept { return zero_index_; }
  bool is_binary() const noexcept { return alphabet_ == 2; }

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int length_;
  int alphabet_;
  std::vector<Word> words_;
  std::size_t zero_index_ = 0;
};

/// b(c): number of nonzero digits.
std::size_t nonzero_count(const Word& w);
std::size_t hamming(const Word& a, const Word& b);
std::string to_string(const Word& w);
Word parse_word(const std::string& digits);

/// Minimum Hamming distance over distinct instances with distinct words;
/// 0 when fewer than two distinct words exist.
std::size_t min_distance(const Code& c);

/// Code plus a real weight per word instance; weight(c_0) = 0.
struct WeightedCode {
  Code code;
  std::vector<double> weight;

  WeightedCode(Code c, std::vector<double> w, bool nonnegative = false);

  static WeightedCode zero(int length, int alphabet = 2);

  std::size_t size() const noexcept { return code.size(); }
  friend bool operator==(const WeightedCode&, const WeightedCode&) = default;
};

Code wedge_sum(const Code& a, const Code& b);
WeightedCode wedge_sum(const WeightedCode& a, const WeightedCode& b);

/// Concatenation sum: all (c, c') of length n + n'.
Code concat_sum(const Code& a, const Code& b);

/// Per-instance probability P_C: b(w)/(n(|C|-1)) off c_0, remainder on c_0.
std::vector<double> probability(const Code& c);

/// Binary reduction p = sum_c b(c)/(n |C|).
double binary_firing_probability(const Code& c);

struct MixLaw {
  double lambda = 0.0;
  double deviation = 0.0;
};

/// Checks P_{C + C'} = lambda P_C + (1 - lambda) P_{C'} for the concatenation
/// sum, with lambda = n/(n + n').
MixLaw mix_law_check(const Code& c1, const Code& c2);

/// k i.i.d. Bernoulli(p) words of length n, plus the zero word if absent.
Code gen_bernoulli_code(int length, std::size_t count, double p, std::uint64_t seed);

/// alpha(C, w) = sum of weights.
double total_weight(const WeightedCode& wc);

/// f maps instance i of `a` to instance f[i] of `b`. True iff c_0 goes to
/// c_0 and Hamming distances never increase.
bool is_code_morphism(std::span<const std::size_t> f, const Code& a, const Code& b);

/// Diagnostic pair (delta, 1 - delta), delta = d_min / n.
std::pair<double, double> relative_distance_pair(const Code& c);
/// q-ary entropy H_q(delta), 0 < delta < 1.
double qary_entropy(double delta, int q);

/// Canonical form of a weighted code: (word, summed weight) per distinct
/// nonzero word, sorted by word, exact-zero totals dropped.
std::vector<std::pair<Word, double>> canonical_form(const WeightedCode& wc);

/// One instance per distinct word carrying the summed weight; zero totals
/// dropped. Same canonical form, fewer instances.
WeightedCode compact(const WeightedCode& wc);

/// Canonical forms agree entrywise within tol.
bool equivalent(const WeightedCode& a, const WeightedCode& b, double tol);

}  // namespace catnet
