#include "chainscope/symbolic.hpp"

#include "chainscope/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace chainscope {

namespace {

void check_symbol(char c) {
  if (c != '0' && c != '1') {
    throw ArgumentError(std::string("word symbol must be '0' or '1', got '") + c + "'");
  }
}

}  // namespace

Word::Word(std::string prefix, char tail) : prefix_(std::move(prefix)), tail_(tail) {
  check_symbol(tail_);
  for (char c : prefix_) check_symbol(c);
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Word Word::shifted() const {
  if (prefix_.empty()) return *this;
  return Word(prefix_.substr(1), tail_);
}

std::string Word::label() const {
  std::string out;
  auto emit = [&out](char symbol, std::string count) {
    if (!out.empty()) out += ' ';
    out += symbol;
    if (!count.empty()) out += "^" + count;
  };
  std::size_t i = 0;
  while (i < prefix_.size()) {
    std::size_t j = i;
    while (j < prefix_.size() && prefix_[j] == prefix_[i]) ++j;
    emit(prefix_[i], j - i > 1 ? std::to_string(j - i) : std::string{});
    i = j;
  }
  emit(tail_, "inf");
  return out;
}

Word Word::parse(std::string_view text) {
  auto bad = [&] { return ArgumentError("cannot parse word '" + std::string(text) + "'"); };
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::string prefix;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    char symbol = text[i++];
    if (symbol != '0' && symbol != '1') throw bad();
    bool power = i < text.size() && text[i] == '^';
    if (power) ++i;
    if (text.substr(i, 3) == "inf") {
      i += 3;
      while (i < text.size() && is_space(text[i])) ++i;
      if (i != text.size()) throw ArgumentError("word '" + std::string(text) + "': tail must come last");
      return Word(prefix, symbol);
    }
    std::size_t count = 1;
    if (power) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw bad();
      count = std::stoul(std::string(text.substr(start, i - start)));
    }
    prefix.append(count, symbol);
  }
  throw ArgumentError("word '" + std::string(text) + "' has no repeated tail (expected e.g. '1inf')");
}

std::size_t first_difference(const Word& u, const Word& v) {
  if (u == v) return 0;
  // Canonical forms differ within max(prefix length) + 1 symbols.
  std::size_t horizon = std::max(u.prefix().size(), v.prefix().size()) + 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (u.at(i) != v.at(i)) return i + 1;
  }
  return horizon + 1;  // unreachable for canonical words
}

double word_dist(const Word& u, const Word& v) {
  std::size_t n = first_difference(u, v);
  if (n == 0) return 0.0;
  return std::ldexp(1.0, -static_cast<int>(n - 1));
}

Word Subshift::generator(std::size_t k) const {
  if (k == 0) throw ArgumentError("generator index k must be >= 1");
  std::string prefix(k, '1');
  prefix.append(k, '0');
  if (id_ == SubshiftId::Sigma1) return Word(prefix, '1');
  prefix += '1';
  return Word(prefix, '0');
}

bool Subshift::forbidden(std::string_view s) const {
  const std::size_t min_inner_ones = id_ == SubshiftId::Sigma1 ? 1 : 2;
  // Decompose into runs.
  struct Run {
    char symbol;
    std::size_t length;
  };
  std::vector<Run> runs;
  for (char c : s) {
    if (!runs.empty() && runs.back().symbol == c) {
      ++runs.back().length;
    } else {
      runs.push_back({c, 1});
    }
  }
  // Runs alternate, so runs[r + 2] (when present) closes runs[r + 1].
  for (std::size_t r = 0; r + 2 < runs.size(); ++r) {
    // 0 1^j 0
    if (runs[r].symbol == '0' && runs[r + 1].length >= min_inner_ones) return true;
    // 1^j 0^h 1 with j > h; an unterminated zero block has no finite length yet.
    if (runs[r].symbol == '1' && runs[r + 1].length < runs[r].length) return true;
  }
  return false;
}

std::vector<Word> Subshift::universe(std::size_t truncation) const {
  if (truncation == 0) throw ArgumentError("truncation K must be >= 1");
  const Word ones = Word::constant('1');
  const Word zeros = Word::constant('0');
  std::vector<Word> out;
  std::set<Word> seen{ones, zeros};
  for (std::size_t k = 1; k <= truncation; ++k) {
    Word w = generator(k);
    while (!seen.contains(w)) {
      seen.insert(w);
      out.push_back(w);
      w = w.shifted();
    }
  }
  out.push_back(ones);
  out.push_back(zeros);
  for (const Word& w : out) {
    if (!admissible(w)) {
      throw std::logic_error("universe element " + w.label() + " contains a forbidden factor");
    }
  }
  return out;
}

}  // namespace chainscope
