#include "qtdelta/paths.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "qtdelta/errors.hpp"

#include <json.hpp>

namespace qtdelta {

bool is_valid_area_word(const AreaWord& a) {
  if (a.empty()) return true;
  if (a.front() > 0 || a.back() < 0) return false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[i - 1] + 1) return false;
  }
  return true;
}

bool is_valid_labelling(const AreaWord& a, const std::vector<int>& w) {
  if (a.size() != w.size()) return false;
  if (a.empty()) return true;
  if (a[0] == 0 && w[0] <= 0) return false;
  const int s = shift(a);
  bool base_positive = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (w[i] < 0) return false;
    if (i > 0 && a[i] > a[i - 1] && w[i] <= w[i - 1]) return false;
    if (a[i] == -s && w[i] > 0) base_positive = true;
  }
  return base_positive;
}

bool is_valid(const DecoratedPath& p) {
  if (!is_valid_area_word(p.area_word) || !is_valid_labelling(p.area_word, p.labels)) return false;
  const auto& d = p.decorations;
  if (!std::is_sorted(d.begin(), d.end()) || std::adjacent_find(d.begin(), d.end()) != d.end()) {
    return false;
  }
  std::vector<int> legal;
  switch (p.kind) {
    case DecorationKind::none:
      return d.empty();
    case DecorationKind::valley:
      legal = contractible_valleys(p.area_word, p.labels);
      break;
    case DecorationKind::rise:
      legal = rises(p.area_word);
      break;
  }
  return std::includes(legal.begin(), legal.end(), d.begin(), d.end());
}

int shift(const AreaWord& a) {
  if (a.empty()) return 0;
  return std::max(0, -*std::min_element(a.begin(), a.end()));
}

std::vector<int> contractible_valleys(const AreaWord& a, const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool valley;
    if (i == 0) {
      valley = a[0] < -1 || (a[0] == -1 && w[0] > 0);
    } else {
      valley = a[i] < a[i - 1] || (a[i] == a[i - 1] && w[i] > w[i - 1]);
    }
    if (valley) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::vector<int> rises(const AreaWord& a) {
  std::vector<int> out;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[i - 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

namespace {

std::vector<char> row_mask(const DecoratedPath& p, DecorationKind kind) {
  std::vector<char> mask(p.area_word.size(), 0);
  if (p.kind != kind) return mask;
  for (int r : p.decorations) mask[static_cast<std::size_t>(r - 1)] = 1;
  return mask;
}

}  // namespace

int area(const DecoratedPath& p) {
  const int s = shift(p.area_word);
  const std::vector<char> dr = row_mask(p, DecorationKind::rise);
  int total = 0;
  for (std::size_t i = 0; i < p.area_word.size(); ++i) {
    if (!dr[i]) total += p.area_word[i] + s;
  }
  return total;
}

DinvParts dinv_parts(const DecoratedPath& p) {
  const auto& a = p.area_word;
  const auto& w = p.labels;
  const std::vector<char> dv = row_mask(p, DecorationKind::valley);
  DinvParts out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 && w[i] > 0 && w[i] != kInfinityLabel) ++out.bonus;
    if (dv[i]) {
      ++out.decorated;
      continue;
    }
    // Only the lower row of a pair is required to be undecorated.
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] && w[i] < w[j]) ++out.primary;
      if (a[i] == a[j] + 1 && w[i] > w[j]) ++out.secondary;
    }
  }
  return out;
}

int dinv(const DecoratedPath& p) { return dinv_parts(p).total(); }

int touching(const DecoratedPath& p) {
  const int s = shift(p.area_word);
  const std::vector<char> dv = row_mask(p, DecorationKind::valley);
  int r = 0;
  for (std::size_t i = 0; i < p.area_word.size(); ++i) {
    if (!dv[i] && p.area_word[i] == -s && p.labels[i] > 0) ++r;
  }
  return r;
}

MarkedWord diagonal_word(const DecoratedPath& p) {
  if (p.area_word.empty()) return MarkedWord();
  const int s = shift(p.area_word);
  const int top = *std::max_element(p.area_word.begin(), p.area_word.end()) + s;
  const std::vector<char> dv = row_mask(p, DecorationKind::valley);
  std::vector<Run> runs(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < p.area_word.size(); ++i) {
    const int d = p.area_word[i] + s;
    runs[static_cast<std::size_t>(top - d)].push_back({p.labels[i], dv[i] != 0});
  }
  return MarkedWord(std::move(runs));
}

std::string area_word_to_steps(const AreaWord& a) {
  std::string out;
  int col = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    const int x = i - a[static_cast<std::size_t>(i)];
    while (col < x) {
      out += 'E';
      ++col;
    }
    out += 'N';
  }
  while (col < n) {
    out += 'E';
    ++col;
  }
  return out;
}

AreaWord area_word_from_steps(std::string_view steps) {
  AreaWord a;
  int col = 0;
  int row = 0;
  for (char c : steps) {
    if (c == 'N') {
      a.push_back(row - col);
      ++row;
    } else if (c == 'E') {
      ++col;
    } else {
      throw InvalidParams("step must be N or E");
    }
  }
  if (row != col || (!steps.empty() && steps.back() != 'E')) {
    throw InvalidParams("not a square path ending with an east step");
  }
  return a;
}

namespace {

void area_words_rec(int n, bool dyck, AreaWord& cur, std::vector<AreaWord>& out) {
  const int i = static_cast<int>(cur.size());  // 0-based row about to be placed
  if (i == n) {
    if (n == 0 || cur.back() >= 0) out.push_back(cur);
    return;
  }
  // Row i+1 must satisfy a >= (i+1) - n to be able to end on or above the diagonal.
  const int lo = dyck ? 0 : i + 1 - n;
  const int hi = i == 0 ? 0 : cur.back() + 1;
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    area_words_rec(n, dyck, cur, out);
    cur.pop_back();
  }
}

struct Enumerator {
  Enumerator(const EnumSpec& sp, const std::function<void(const DecoratedPath&)>& v) : spec(sp), visit(v) {}

  const EnumSpec& spec;
  const std::function<void(const DecoratedPath&)>& visit;
  int alphabet = 0;
  std::vector<int> remaining;  // content mode: counts of labels 1..alphabet
  AreaWord a;
  std::vector<int> w;
  int zeros_left = 0;
  int positives_left = 0;
  int s = 0;

  void labels_rec(std::size_t i) {
    if (i == a.size()) {
      finish();
      return;
    }
    const bool rise = i > 0 && a[i] > a[i - 1];
    const int floor = rise ? w[i - 1] + 1 : 0;
    if (floor == 0 && zeros_left > 0 && !(i == 0 && a[0] == 0)) {
      --zeros_left;
      w[i] = 0;
      labels_rec(i + 1);
      ++zeros_left;
    }
    if (positives_left == 0) return;
    for (int c = std::max(floor, 1); c <= alphabet; ++c) {
      if (!remaining.empty()) {
        if (remaining[static_cast<std::size_t>(c - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(c - 1)];
      }
      --positives_left;
      w[i] = c;
      labels_rec(i + 1);
      ++positives_left;
      if (!remaining.empty()) ++remaining[static_cast<std::size_t>(c - 1)];
    }
  }

  void finish() {
    bool base_positive = a.empty();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == -s && w[i] > 0) base_positive = true;
    }
    if (!base_positive) return;
    std::vector<int> legal;
    if (spec.kind == DecorationKind::valley) legal = contractible_valleys(a, w);
    if (spec.kind == DecorationKind::rise) legal = rises(a);
    const int k = spec.k;
    if (k > static_cast<int>(legal.size())) return;
    DecoratedPath p{a, w, spec.kind, {}};
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
    const int L = static_cast<int>(legal.size());
    while (true) {
      p.decorations.clear();
      for (int j : idx) p.decorations.push_back(legal[static_cast<std::size_t>(j)]);
      emit(p);
      int j = k - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == L - k + j) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int r = j + 1; r < k; ++r) idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
    }
  }

  void emit(const DecoratedPath& p) {
    if (spec.family == Family::LSQprime || spec.touching) {
      const int r = touching(p);
      if (spec.family == Family::LSQprime && r == 0) return;
      if (spec.touching && r != *spec.touching) return;
    }
    visit(p);
  }

  void run() {
    const int size = spec.m + spec.n;
    for (const AreaWord& word : area_words(size, spec.family == Family::LD)) {
      a = word;
      w.assign(a.size(), 0);
      s = shift(a);
      zeros_left = spec.m;
      positives_left = spec.n;
      labels_rec(0);
    }
  }
};

}  // namespace

std::vector<AreaWord> area_words(int size, bool dyck_only) {
  if (size < 0) throw InvalidParams("negative size");
  std::vector<AreaWord> out;
  AreaWord cur;
  area_words_rec(size, dyck_only, cur, out);
  return out;
}

void enumerate(const EnumSpec& spec, const std::function<void(const DecoratedPath&)>& visit) {
  if (spec.m < 0 || spec.n < 0 || spec.k < 0) throw InvalidParams("m, n, k must be non-negative");
  if (spec.touching && *spec.touching < 0) throw InvalidParams("touching must be non-negative");
  if (spec.kind == DecorationKind::rise && spec.family == Family::LSQprime) {
    throw InvalidParams("the LSQprime family is defined for valley decorations only");
  }
  if (spec.kind == DecorationKind::none && spec.k != 0) {
    throw InvalidParams("undecorated paths need k = 0");
  }
  Enumerator e(spec, visit);
  if (spec.content) {
    int total = 0;
    for (int c : *spec.content) {
      if (c < 0) throw InvalidParams("negative content entry");
      total += c;
    }
    if (total != spec.n) throw InvalidParams("content must sum to n");
    e.remaining = *spec.content;
    e.alphabet = static_cast<int>(e.remaining.size());
    if (e.alphabet == 0) e.remaining.clear();
  } else {
    e.alphabet = spec.alphabet_max > 0 ? spec.alphabet_max : spec.n;
    if (spec.alphabet_max < 0) throw InvalidParams("alphabet_max must be non-negative");
  }
  e.run();
}

std::vector<DecoratedPath> enumerate_all(const EnumSpec& spec) {
  std::vector<DecoratedPath> out;
  enumerate(spec, [&](const DecoratedPath& p) { out.push_back(p); });
  return out;
}

DecoratedPath push_zeros(const DecoratedPath& p) {
  const int s = shift(p.area_word);
  const int n = p.size();
  DecoratedPath out = p;
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (p.labels[ui] == 0) throw InvalidEncoding("explicit zero label in infinity encoding");
    if (p.labels[ui] != kInfinityLabel) continue;
    if (p.area_word[ui] == -s) throw InvalidEncoding("infinity label on the base diagonal");
    if (i + 1 < n && p.area_word[ui + 1] > p.area_word[ui]) {
      throw InvalidEncoding("infinity label followed by a rise");
    }
    if (i + 1 == n && p.area_word[ui] == 0) {
      throw InvalidEncoding("infinity label in the last row on the main diagonal");
    }
    out.area_word[ui] -= 1;
    out.labels[ui] = 0;
  }
  return out;
}

DecoratedPath pull_zeros(const DecoratedPath& p) {
  DecoratedPath out = p;
  for (std::size_t i = 0; i < p.area_word.size(); ++i) {
    if (p.labels[i] != 0) continue;
    out.area_word[i] += 1;
    out.labels[i] = kInfinityLabel;
  }
  return out;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::LSQ:
      return "lsq";
    case Family::LD:
      return "ld";
    case Family::LSQprime:
      return "lsqprime";
  }
  return "";
}

std::string to_string(DecorationKind k) {
  switch (k) {
    case DecorationKind::none:
      return "none";
    case DecorationKind::valley:
      return "valley";
    case DecorationKind::rise:
      return "rise";
  }
  return "";
}

Family parse_family(std::string_view s) {
  if (s == "lsq") return Family::LSQ;
  if (s == "ld") return Family::LD;
  if (s == "lsqprime") return Family::LSQprime;
  throw ParseError("unknown family '" + std::string(s) + "'");
}

DecorationKind parse_kind(std::string_view s) {
  if (s == "none") return DecorationKind::none;
  if (s == "valley") return DecorationKind::valley;
  if (s == "rise") return DecorationKind::rise;
  throw ParseError("unknown decoration kind '" + std::string(s) + "'");
}

namespace {

std::string int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += v[i] == kInfinityLabel ? "inf" : std::to_string(v[i]);
  }
  return out + "]";
}

std::vector<int> parse_int_list(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [..] list");
  s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  if (s.empty()) return out;
  while (true) {
    const std::size_t comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    if (tok == "inf") {
      out.push_back(kInfinityLabel);
    } else {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad integer '" + std::string(tok) + "'");
      }
      out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string to_line(const DecoratedPath& p) {
  return "areaword=" + int_list(p.area_word) + "; labels=" + int_list(p.labels) +
         "; kind=" + to_string(p.kind) + "; dec=" + int_list(p.decorations);
}

DecoratedPath parse_line(std::string_view line) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!line.empty()) {
    const std::size_t semi = line.find(';');
    std::string_view item = line.substr(0, semi);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value in path line");
      fields[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
    if (semi == std::string_view::npos) break;
    line.remove_prefix(semi + 1);
  }
  for (const char* key : {"areaword", "labels", "kind", "dec"}) {
    if (!fields.count(key)) throw ParseError(std::string("path line is missing ") + key);
  }
  DecoratedPath p;
  p.area_word = parse_int_list(fields["areaword"]);
  p.labels = parse_int_list(fields["labels"]);
  p.kind = parse_kind(fields["kind"]);
  p.decorations = parse_int_list(fields["dec"]);
  if (p.labels.size() != p.area_word.size()) throw ParseError("labels and area word differ in length");
  return p;
}

namespace {

nlohmann::ordered_json label_array(const std::vector<int>& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int x : v) {
    if (x == kInfinityLabel) {
      out.push_back("inf");
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> read_labels(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (x.is_string() && x.get<std::string>() == "inf") {
      out.push_back(kInfinityLabel);
    } else if (x.is_number_integer()) {
      out.push_back(x.get<int>());
    } else {
      throw ParseError("expected an integer or \"inf\"");
    }
  }
  return out;
}

}  // namespace

std::string to_json(const DecoratedPath& p) {
  nlohmann::ordered_json j;
  j["areaword"] = label_array(p.area_word);
  j["labels"] = label_array(p.labels);
  j["kind"] = to_string(p.kind);
  j["dec"] = label_array(p.decorations);
  return j.dump();
}

DecoratedPath path_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad path JSON: ") + e.what());
  }
  for (const char* key : {"areaword", "labels", "kind", "dec"}) {
    if (!j.contains(key)) throw ParseError(std::string("path JSON is missing ") + key);
  }
  if (!j["kind"].is_string()) throw ParseError("path kind must be a string");
  DecoratedPath p;
  p.area_word = read_labels(j["areaword"]);
  p.labels = read_labels(j["labels"]);
  p.kind = parse_kind(j["kind"].get<std::string>());
  p.decorations = read_labels(j["dec"]);
  if (p.labels.size() != p.area_word.size()) throw ParseError("labels and area word differ in length");
  return p;
}

}  // namespace qtdelta
