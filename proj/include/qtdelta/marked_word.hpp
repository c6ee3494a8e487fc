#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qtdelta {

/// Entry of a diagonal word. The default ordering gives c < •c < c+1.
struct MarkedEntry {
  int label = 0;
  bool decorated = false;
  auto operator<=>(const MarkedEntry&) const = default;
};

using Run = std::vector<MarkedEntry>;

/// A diagonal word: runs rho_l, ..., rho_0 stored top run first.
class MarkedWord {
 public:
  MarkedWord() = default;
  /// Runs given top run first; each run is sorted into canonical order.
  explicit MarkedWord(std::vector<Run> runs_top_first);

  /// l, the index of the top run; -1 for the empty word.
  int top() const { return static_cast<int>(runs_.size()) - 1; }
  bool empty() const { return runs_.empty(); }
  /// rho_i for 0 <= i <= top(); the empty run outside that range.
  const Run& run(int i) const;
  const std::vector<Run>& runs_top_first() const { return runs_; }
  /// Concatenation rho_l ... rho_0.
  std::vector<MarkedEntry> sequence() const;
  int size() const;

  bool operator==(const MarkedWord&) const = default;
  auto operator<=>(const MarkedWord&) const = default;

  /// Text form "1 2 4 | 3 | 1* 4 | 1 1*".
  std::string to_string() const;
  /// Parses the text form; throws ParseError.
  static MarkedWord parse(std::string_view text);

 private:
  std::vector<Run> runs_;
};

/// Major index of the concatenated word under c < •c < c+1.
int maj(const MarkedWord& z);

}  // namespace qtdelta
