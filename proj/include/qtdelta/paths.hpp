#pragma once

#include <climits>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtdelta/marked_word.hpp"

namespace qtdelta {

/// Area word (a_1, ..., a_n); row i is 1-based throughout.
using AreaWord = std::vector<int>;

/// Label standing for a zero before it is pushed (see push_zeros).
inline constexpr int kInfinityLabel = INT_MAX;

enum class DecorationKind { none, valley, rise };
enum class Family { LSQ, LD, LSQprime };

struct DecoratedPath {
  AreaWord area_word;
  std::vector<int> labels;
  DecorationKind kind = DecorationKind::none;
  /// Decorated rows, 1-based, increasing.
  std::vector<int> decorations;

  int size() const { return static_cast<int>(area_word.size()); }
  bool operator==(const DecoratedPath&) const = default;
  auto operator<=>(const DecoratedPath&) const = default;
};

bool is_valid_area_word(const AreaWord& a);
/// Column-strictness, the first-row rule and a positive label on the base diagonal.
bool is_valid_labelling(const AreaWord& a, const std::vector<int>& w);
/// Full validity including the decoration set.
bool is_valid(const DecoratedPath& p);

/// -min a_i, or 0.
int shift(const AreaWord& a);
std::vector<int> contractible_valleys(const AreaWord& a, const std::vector<int>& w);
std::vector<int> rises(const AreaWord& a);

/// Sum of a_i + shift over rows that are not decorated rises.
int area(const DecoratedPath& p);

struct DinvParts {
  int primary = 0;
  int secondary = 0;
  int bonus = 0;
  int decorated = 0;
  int total() const { return primary + secondary + bonus - decorated; }
};
/// Inversions (i, j) whose lower row i is undecorated, plus positive labels below the main
/// diagonal, minus the number of decorated valleys. Rise decorations are ignored.
DinvParts dinv_parts(const DecoratedPath& p);
int dinv(const DecoratedPath& p);

/// #{i not decorated : a_i = -shift, w_i > 0}.
int touching(const DecoratedPath& p);

/// Labels grouped by diagonal a_i + shift; decorated valleys are marked.
/// Works on any area word and labelling, valid or not.
MarkedWord diagonal_word(const DecoratedPath& p);

/// "N"/"E" step string; the i-th north step starts at column i - 1 - a_i.
std::string area_word_to_steps(const AreaWord& a);
/// Inverse of area_word_to_steps; throws InvalidParams on a non square path.
AreaWord area_word_from_steps(std::string_view steps);

/// All area words of the given size, lexicographically increasing.
std::vector<AreaWord> area_words(int size, bool dyck_only = false);

struct EnumSpec {
  Family family = Family::LSQ;
  DecorationKind kind = DecorationKind::valley;
  int m = 0;
  int n = 0;
  int k = 0;
  std::optional<int> touching;
  /// Largest positive label; 0 means n.
  int alphabet_max = 0;
  /// Exact multiplicities of labels 1, 2, ...; overrides alphabet_max.
  std::optional<std::vector<int>> content;
};

/// Visits every path of the family once, ordered by (area word, labels,
/// decorations). Throws InvalidParams on inconsistent parameters.
void enumerate(const EnumSpec& spec, const std::function<void(const DecoratedPath&)>& visit);
std::vector<DecoratedPath> enumerate_all(const EnumSpec& spec);

/// Pushes every infinity-labelled row one step right, relabelling it 0.
/// Throws InvalidEncoding for rows on the base diagonal, rows followed by a
/// rise, a last row on the main diagonal, or explicit zero labels.
DecoratedPath push_zeros(const DecoratedPath& p);
/// Inverse of push_zeros.
DecoratedPath pull_zeros(const DecoratedPath& p);

/// "areaword=[0,-1]; labels=[2,1]; kind=valley; dec=[2]"; infinity prints as inf.
std::string to_line(const DecoratedPath& p);
DecoratedPath parse_line(std::string_view line);
/// {"areaword":[..],"labels":[..],"kind":"valley","dec":[..]}; infinity is "inf".
std::string to_json(const DecoratedPath& p);
DecoratedPath path_from_json(std::string_view text);

std::string to_string(Family f);
std::string to_string(DecorationKind k);
Family parse_family(std::string_view s);
DecorationKind parse_kind(std::string_view s);

}  // namespace qtdelta
