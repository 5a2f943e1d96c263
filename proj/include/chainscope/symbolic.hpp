#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chainscope {

/// Eventually-constant infinite binary word: a finite prefix followed by one
/// symbol repeated forever. Symbols are the characters '0' and '1'.
///
/// The stored form is canonical (the prefix never ends with the tail symbol),
/// so two words are equal iff their canonical forms are equal.
class Word {
 public:
  Word() : tail_('0') {}
  Word(std::string prefix, char tail);

  static Word constant(char symbol) { return Word({}, symbol); }

  /// Parses the run-length notation produced by label(), e.g. "1^3 0^3 1^inf",
  /// as well as compact forms such as "101inf" or "0inf". Only "^" introduces a
  /// repeat count; whitespace separates runs.
  static Word parse(std::string_view text);

  const std::string& prefix() const noexcept { return prefix_; }
  char tail() const noexcept { return tail_; }

  /// Symbol at 0-based position i.
  char at(std::size_t i) const noexcept { return i < prefix_.size() ? prefix_[i] : tail_; }

  Word shifted() const;

  /// Finite string that decides every factor property: the prefix plus one tail symbol.
  std::string horizon() const { return prefix_ + tail_; }

  /// Run-length label, e.g. "1^3 0^3 1^inf" or "1 0 1^inf".
  std::string label() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string prefix_;
  char tail_;
};

/// The shift map: drops the first symbol.
inline Word word_shift(const Word& w) { return w.shifted(); }

/// 0 if u == v, else 2^-(n-1) where n is the 1-based index of the first difference.
double word_dist(const Word& u, const Word& v);

/// 1-based index of the first differing symbol; 0 when the words are equal.
std::size_t first_difference(const Word& u, const Word& v);

enum class SubshiftId { Sigma1, Sigma2 };

/// The two subshifts of eventually-constant words built from the generators
///   Sigma1: w_k = 1^k 0^k 1^inf
///   Sigma2: w_k = 1^k 0^k 1 0^inf
/// Forbidden factors are 0 1^j 0 (j >= 1 for Sigma1, j >= 2 for Sigma2) and a
/// block 1^j 0^h closed by a 1 with j > h.
class Subshift {
 public:
  explicit Subshift(SubshiftId id) : id_(id) {}

  SubshiftId id() const noexcept { return id_; }
  std::string name() const { return id_ == SubshiftId::Sigma1 ? "sigma1" : "sigma2"; }

  /// Generator w_k, k >= 1.
  Word generator(std::size_t k) const;

  /// Fixed point reached by every generator orbit (1^inf for Sigma1, 0^inf for Sigma2).
  Word absorbing_point() const { return Word::constant(id_ == SubshiftId::Sigma1 ? '1' : '0'); }

  /// True if the finite binary string contains a forbidden factor.
  bool forbidden(std::string_view s) const;

  bool admissible(const Word& w) const { return !forbidden(w.horizon()); }

  /// All distinct sigma^j(w_k) for 1 <= k <= truncation, k-major then j,
  /// followed by the fixed points 1^inf and 0^inf.
  std::vector<Word> universe(std::size_t truncation) const;

 private:
  SubshiftId id_;
};

}  // namespace chainscope
