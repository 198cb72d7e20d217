#include "catnet/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "catnet/error.hpp"
#include "catnet/rng.hpp"

namespace catnet {

namespace {

bool is_zero_word(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](std::uint8_t d) { return d == 0; });
}

void require_same_shape(const Code& a, const Code& b) {
  if (a.length() != b.length()) throw Error(Errc::LengthMismatch, "codes have different lengths");
  if (a.alphabet() != b.alphabet()) throw Error(Errc::AlphabetMismatch, "codes have different alphabets");
}

}  // namespace

Code::Code(int length, int alphabet, std::vector<Word> words)
    : length_(length), alphabet_(alphabet), words_(std::move(words)) {
  if (length_ <= 0) throw Error(Errc::InvalidArgument, "code length must be positive");
  if (alphabet_ < 2) throw Error(Errc::InvalidArgument, "alphabet size must be >= 2");
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (static_cast<int>(w.size()) != length_) {
      throw Error(Errc::LengthMismatch, "word " + to_string(w) + " has wrong length");
    }
    for (std::uint8_t d : w) {
      if (d >= alphabet_) throw Error(Errc::InvalidArgument, "digit outside alphabet");
    }
    if (is_zero_word(w)) {
      ++zeros;
      zero_index_ = i;
    }
  }
  if (zeros != 1) throw Error(Errc::InvalidArgument, "code must contain the zero word exactly once");
}

Code Code::zero(int length, int alphabet) {
  return Code(length, alphabet, {Word(static_cast<std::size_t>(length), 0)});
}

Code Code::from_strings(int alphabet, const std::vector<std::string>& words) {
  if (words.empty()) throw Error(Errc::InvalidArgument, "empty word list");
  std::vector<Word> ws;
  ws.reserve(words.size());
  for (const auto& s : words) ws.push_back(parse_word(s));
  const int length = static_cast<int>(ws.front().size());
  return Code(length, alphabet, std::move(ws));
}

std::size_t nonzero_count(const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint8_t d) { return d != 0; }));
}

std::size_t hamming(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (std::uint8_t d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

Word parse_word(const std::string& digits) {
  Word w;
  w.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error(Errc::ParseError, "bad digit in word '" + digits + "'");
    w.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return w;
}

std::size_t min_distance(const Code& c) {
  std::size_t best = 0;
  const auto& ws = c.words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const std::size_t d = hamming(ws[i], ws[j]);
      if (d > 0 && (best == 0 || d < best)) best = d;
    }
  }
  return best;
}

WeightedCode::WeightedCode(Code c, std::vector<double> w, bool nonnegative)
    : code(std::move(c)), weight(std::move(w)) {
  if (weight.size() != code.size()) throw Error(Errc::DimensionMismatch, "one weight per word instance");
  if (weight[code.zero_index()] != 0.0) throw Error(Errc::InvalidArgument, "weight of the zero word must be 0");
  if (nonnegative) {
    for (double x : weight)
      if (x < 0.0) throw Error(Errc::InvalidArgument, "negative weight in non-negative mode");
  }
}

WeightedCode WeightedCode::zero(int length, int alphabet) {
  return WeightedCode(Code::zero(length, alphabet), {0.0});
}

Code wedge_sum(const Code& a, const Code& b) {
  require_same_shape(a, b);
  std::vector<Word> ws = a.words();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (i != b.zero_index()) ws.push_back(b.word(i));
  return Code(a.length(), a.alphabet(), std::move(ws));
}

WeightedCode wedge_sum(const WeightedCode& a, const WeightedCode& b) {
  require_same_shape(a.code, b.code);
  std::vector<Word> ws = a.code.words();
  std::vector<double> wt = a.weight;
  ws.reserve(a.size() + b.size());
  wt.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i == b.code.zero_index()) continue;
    ws.push_back(b.code.word(i));
    wt.push_back(b.weight[i]);
  }
  return WeightedCode(Code(a.code.length(), a.code.alphabet(), std::move(ws)), std::move(wt));
}

Code concat_sum(const Code& a, const Code& b) {
  if (a.alphabet() != b.alphabet()) throw Error(Errc::AlphabetMismatch, "concat_sum: alphabets differ");
  std::vector<Word> ws;
  ws.reserve(a.size() * b.size());
  for (const Word& x : a.words()) {
    for (const Word& y : b.words()) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      ws.push_back(std::move(w));
    }
  }
  return Code(a.length() + b.length(), a.alphabet(), std::move(ws));
}

std::vector<double> probability(const Code& c) {
  if (c.size() < 2) throw Error(Errc::DegenerateCode, "probability needs at least two words");
  const double denom = static_cast<double>(c.length()) * static_cast<double>(c.size() - 1);
  std::vector<double> p(c.size(), 0.0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == c.zero_index()) continue;
    const std::size_t b = nonzero_count(c.word(i));
    total += b;
    p[i] = static_cast<double>(b) / denom;
  }
  // remainder <= 0 iff every nonzero instance is the all-nonzero word
  const std::size_t denom_int = static_cast<std::size_t>(c.length()) * (c.size() - 1);
  if (total >= denom_int) {
    throw Error(Errc::DegenerateCode, "no probability mass left on the zero word");
  }
  p[c.zero_index()] = static_cast<double>(denom_int - total) / denom;
  return p;
}

double binary_firing_probability(const Code& c) {
  std::size_t ones = 0;
  for (const Word& w : c.words()) ones += nonzero_count(w);
  return static_cast<double>(ones) / (static_cast<double>(c.length()) * static_cast<double>(c.size()));
}

MixLaw mix_law_check(const Code& c1, const Code& c2) {
  if (!c1.is_binary() || !c2.is_binary()) throw Error(Errc::NonBinary, "mix law is stated for binary codes");
  const Code sum = concat_sum(c1, c2);
  MixLaw out;
  const double n = c1.length(), n2 = c2.length();
  out.lambda = n / (n + n2);
  const double p = binary_firing_probability(c1);
  const double p2 = binary_firing_probability(c2);
  const double ps = binary_firing_probability(sum);
  const double mixed = out.lambda * p + (1.0 - out.lambda) * p2;
  const double mixed_complement = out.lambda * (1.0 - p) + (1.0 - out.lambda) * (1.0 - p2);
  out.deviation = std::max(std::abs(ps - mixed), std::abs((1.0 - ps) - mixed_complement));
  return out;
}

Code gen_bernoulli_code(int length, std::size_t count, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::InvalidProbability, "firing probability must lie in (0,1)");
  if (length <= 0) throw Error(Errc::InvalidArgument, "length must be positive");
  Rng rng(seed);
  std::vector<Word> ws;
  ws.reserve(count + 1);
  bool have_zero = false;
  for (std::size_t k = 0; k < count; ++k) {
    Word w(static_cast<std::size_t>(length), 0);
    for (auto& d : w) d = rng.bernoulli(p) ? 1 : 0;
    if (is_zero_word(w)) {
      if (have_zero) continue;
      have_zero = true;
    }
    ws.push_back(std::move(w));
  }
  if (!have_zero) ws.emplace_back(static_cast<std::size_t>(length), 0);
  return Code(length, 2, std::move(ws));
}

double total_weight(const WeightedCode& wc) {
  return std::accumulate(wc.weight.begin(), wc.weight.end(), 0.0);
}

bool is_code_morphism(std::span<const std::size_t> f, const Code& a, const Code& b) {
  if (f.size() != a.size()) throw Error(Errc::DimensionMismatch, "map must be total on the source code");
  for (std::size_t x : f)
    if (x >= b.size()) throw Error(Errc::InvalidArgument, "map target out of range");
  if (f[a.zero_index()] != b.zero_index()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (hamming(b.word(f[i]), b.word(f[j])) > hamming(a.word(i), a.word(j))) return false;
    }
  }
  return true;
}

std::pair<double, double> relative_distance_pair(const Code& c) {
  const double delta = static_cast<double>(min_distance(c)) / c.length();
  return {delta, 1.0 - delta};
}

double qary_entropy(double delta, int q) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::InvalidArgument, "delta must lie in (0,1)");
  const double lq = std::log(static_cast<double>(q));
  return delta * std::log(q - 1.0) / lq - delta * std::log(delta) / lq -
         (1.0 - delta) * std::log(1.0 - delta) / lq;
}

std::vector<std::pair<Word, double>> canonical_form(const WeightedCode& wc) {
  std::map<Word, double> acc;
  for (std::size_t i = 0; i < wc.size(); ++i) {
    if (i == wc.code.zero_index()) continue;
    acc[wc.code.word(i)] += wc.weight[i];
  }
  std::vector<std::pair<Word, double>> out;
  for (auto& [w, x] : acc)
    if (x != 0.0) out.emplace_back(w, x);
  return out;
}

WeightedCode compact(const WeightedCode& wc) {
  std::vector<Word> ws{wc.code.word(wc.code.zero_index())};
  std::vector<double> wt{0.0};
  for (auto& [w, x] : canonical_form(wc)) {
    ws.push_back(w);
    wt.push_back(x);
  }
  return WeightedCode(Code(wc.code.length(), wc.code.alphabet(), std::move(ws)), std::move(wt));
}

bool equivalent(const WeightedCode& a, const WeightedCode& b, double tol) {
  if (a.code.length() != b.code.length() || a.code.alphabet() != b.code.alphabet()) return false;
  std::map<Word, double> diff;
  for (const auto& [w, x] : canonical_form(a)) diff[w] += x;
  for (const auto& [w, x] : canonical_form(b)) diff[w] -= x;
  return std::all_of(diff.begin(), diff.end(), [&](const auto& kv) { return std::abs(kv.second) <= tol; });
}

}  // namespace catnet
