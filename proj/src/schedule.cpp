#include "qtdelta/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtdelta/errors.hpp"
#include "qtdelta/q_analogues.hpp"

namespace qtdelta {

int RunMultiplicity::z(int c) const {
  auto it = undecorated.find(c);
  return it == undecorated.end() ? 0 : it->second;
}

int RunMultiplicity::z_dec(int c) const {
  auto it = decorated.find(c);
  return it == decorated.end() ? 0 : it->second;
}

std::vector<RunMultiplicity> run_multiplicities(const MarkedWord& z) {
  std::vector<RunMultiplicity> out(static_cast<std::size_t>(z.top() + 1));
  for (int i = 0; i <= z.top(); ++i) {
    RunMultiplicity& r = out[static_cast<std::size_t>(i)];
    for (const MarkedEntry& e : z.run(i)) {
      if (e.decorated) {
        ++r.decorated[e.label];
      } else {
        ++r.undecorated[e.label];
        ++r.undecorated_size;
        if (e.label > 0) ++r.positive_size;
      }
    }
  }
  return out;
}

namespace {

using Runs = std::vector<RunMultiplicity>;

int count_less(const Runs& rm, int i, int c) {
  if (i < 0 || i >= static_cast<int>(rm.size())) return 0;
  int n = 0;
  for (const auto& [d, k] : rm[static_cast<std::size_t>(i)].undecorated) {
    if (d < c) n += k;
  }
  return n;
}

int count_greater(const Runs& rm, int i, int c) {
  if (i < 0 || i >= static_cast<int>(rm.size())) return 0;
  int n = 0;
  for (const auto& [d, k] : rm[static_cast<std::size_t>(i)].undecorated) {
    if (d > c) n += k;
  }
  return n;
}

ScheduleNumbers numbers(const Runs& rm, int s, int i, int c) {
  ScheduleNumbers out;
  if (i > s) {
    out.w = count_greater(rm, i, c) + count_less(rm, i - 1, c);
  } else if (i == s) {
    out.w = count_greater(rm, i, c) + (c == 0 ? 0 : 1);
  } else {
    out.w = count_less(rm, i, c) + count_greater(rm, i + 1, c);
  }
  out.w_dec = count_less(rm, i, c) + count_greater(rm, i + 1, c) - (c == 0 && i == s - 1 ? 1 : 0);
  return out;
}

int b_from_runs(const Runs& rm, int s) {
  int b = 0;
  const int top = static_cast<int>(rm.size()) - 1;
  for (int i = 0; i < s; ++i) {
    if (i <= top) b += rm[static_cast<std::size_t>(i)].positive_size;
    if (i >= 1 && i - 1 <= top) b -= rm[static_cast<std::size_t>(i - 1)].z_dec(0);
  }
  return b;
}

}  // namespace

ScheduleNumbers schedule_numbers(const MarkedWord& z, int s, int i, int c) {
  if (i < 0 || i > z.top() || s < 0 || s > z.top()) {
    throw IndexOutOfRange("schedule numbers need 0 <= i, s <= " + std::to_string(z.top()));
  }
  return numbers(run_multiplicities(z), s, i, c);
}

int b_exponent(const MarkedWord& z, int s) { return b_from_runs(run_multiplicities(z), s); }

QTPoly schedule_product(const MarkedWord& z, int s) {
  if (s < 0) throw IndexOutOfRange("negative shift");
  if (z.empty()) return s == 0 ? QTPoly(1L) : QTPoly();
  if (s > z.top()) return {};
  const Runs rm = run_multiplicities(z);
  QTPoly out = QTPoly::monomial(b_from_runs(rm, s), maj(z));
  for (int i = 0; i <= z.top(); ++i) {
    const RunMultiplicity& r = rm[static_cast<std::size_t>(i)];
    for (const auto& [c, k] : r.undecorated) {
      const ScheduleNumbers w = numbers(rm, s, i, c);
      out *= q_binomial(w.w + k - 1, k);
      if (out.is_zero()) return out;
    }
    for (const auto& [c, k] : r.decorated) {
      const ScheduleNumbers w = numbers(rm, s, i, c);
      out *= q_binomial(w.w_dec, k).shifted(k * (k - 1) / 2, 0);
      if (out.is_zero()) return out;
    }
  }
  return out;
}

std::vector<int> positive_content(const MarkedWord& z) {
  std::vector<int> out;
  for (const MarkedEntry& e : z.sequence()) {
    if (e.label <= 0) continue;
    if (static_cast<int>(out.size()) < e.label) out.resize(static_cast<std::size_t>(e.label), 0);
    ++out[static_cast<std::size_t>(e.label - 1)];
  }
  return out;
}

int zero_count(const MarkedWord& z) {
  int n = 0;
  for (const MarkedEntry& e : z.sequence()) n += e.label == 0 ? 1 : 0;
  return n;
}

int decorated_count(const MarkedWord& z) {
  int n = 0;
  for (const MarkedEntry& e : z.sequence()) n += e.decorated ? 1 : 0;
  return n;
}

namespace {

struct Row {
  int diag;
  int label;
  bool dec;
  bool operator==(const Row&) const = default;
};
using Seq = std::vector<Row>;

DecoratedPath to_path(const Seq& seq, int s) {
  DecoratedPath p;
  p.kind = DecorationKind::valley;
  for (std::size_t r = 0; r < seq.size(); ++r) {
    p.area_word.push_back(seq[r].diag - s);
    p.labels.push_back(seq[r].label);
    if (seq[r].dec) p.decorations.push_back(static_cast<int>(r) + 1);
  }
  return p;
}

bool valid_with_shift(const Seq& seq, int s) {
  const DecoratedPath p = to_path(seq, s);
  return is_valid(p) && shift(p.area_word) == s;
}

enum class Phase { main_diagonal, above, below, decorated };

struct Step {
  Phase phase;
  int diag;
  int label;
  int count;
};

class Inserter {
 public:
  Inserter(std::vector<Step> steps, int s) : steps_(std::move(steps)), s_(s) {}

  std::vector<Seq> run() {
    Seq seq;
    rec(0, seq);
    return std::move(results_);
  }

 private:
  void rec(std::size_t k, Seq& seq) {
    if (k == steps_.size()) {
      results_.push_back(seq);
      return;
    }
    const Step& st = steps_[k];
    if (st.phase == Phase::decorated) {
      decorated_step(k, seq);
      return;
    }
    // Anchors: -1 stands for the front of the path.
    std::vector<int> anchors;
    for (int r = 0; r < static_cast<int>(seq.size()); ++r) {
      const Row& row = seq[static_cast<std::size_t>(r)];
      bool ok = false;
      switch (st.phase) {
        case Phase::main_diagonal:
          ok = true;
          break;
        case Phase::above:
          ok = (row.diag == st.diag && row.label > st.label) || (row.diag == st.diag - 1 && row.label < st.label);
          break;
        case Phase::below:
          ok = (row.diag == st.diag + 1 && row.label > st.label) || (row.diag == st.diag && row.label < st.label);
          break;
        case Phase::decorated:
          break;
      }
      if (ok) anchors.push_back(r);
    }
    if (st.phase == Phase::main_diagonal && st.label != 0) anchors.insert(anchors.begin(), -1);
    std::vector<int> mult(anchors.size(), 0);
    distribute(k, seq, anchors, mult, 0, st.count);
  }

  void distribute(std::size_t k, Seq& seq, const std::vector<int>& anchors, std::vector<int>& mult, std::size_t a,
                  int left) {
    if (a == anchors.size()) {
      if (left != 0) return;
      Seq next = place(steps_[k], seq, anchors, mult);
      rec(k + 1, next);
      return;
    }
    for (int c = left; c >= 0; --c) {
      mult[a] = c;
      distribute(k, seq, anchors, mult, a + 1, left - c);
    }
    mult[a] = 0;
  }

  Seq place(const Step& st, const Seq& seq, const std::vector<int>& anchors, const std::vector<int>& mult) const {
    std::vector<int> at(seq.size() + 1, 0);  // copies to place around row r
    int front = 0;
    for (std::size_t a = 0; a < anchors.size(); ++a) {
      if (anchors[a] < 0) {
        front += mult[a];
      } else {
        at[static_cast<std::size_t>(anchors[a])] += mult[a];
      }
    }
    const Row fresh{st.diag, st.label, false};
    Seq out;
    out.insert(out.end(), static_cast<std::size_t>(front), fresh);
    for (std::size_t r = 0; r < seq.size(); ++r) {
      if (st.phase == Phase::below) out.insert(out.end(), static_cast<std::size_t>(at[r]), fresh);
      out.push_back(seq[r]);
      if (st.phase != Phase::below) out.insert(out.end(), static_cast<std::size_t>(at[r]), fresh);
    }
    return out;
  }

  struct Item {
    int diag;
    int label;
    int lo;  // allowed gaps, counted in undecorated rows before the item
    int hi;
  };

  // Chooses T inside S_{i,c} for each decorated step; the undecorated rows are final here.
  void decorated_step(std::size_t k, Seq& seq) {
    if (k == steps_.size()) {
      place_all(seq);
      return;
    }
    const Step& st = steps_[k];
    std::vector<int> S;
    for (int r = 0; r < static_cast<int>(seq.size()); ++r) {
      const Row& row = seq[static_cast<std::size_t>(r)];
      if ((row.diag == st.diag + 1 && row.label > st.label) || (row.diag == st.diag && row.label < st.label)) {
        S.push_back(r);
      }
    }
    const bool above = st.diag >= s_;
    // A zero just under the main diagonal cannot precede every element of S.
    const std::size_t first = (!above && st.label == 0 && st.diag == s_ - 1) ? 1 : 0;
    if (S.size() < first) return;
    const int choices = static_cast<int>(S.size() - first);
    if (st.count > choices) return;
    std::vector<int> idx(static_cast<std::size_t>(st.count));
    for (int j = 0; j < st.count; ++j) idx[static_cast<std::size_t>(j)] = j;
    while (true) {
      const std::size_t mark = items_.size();
      for (int j : idx) {
        const std::size_t pos = first + static_cast<std::size_t>(j);
        if (above) {
          items_.push_back({st.diag, st.label, S[pos] + 1, pos + 1 < S.size() ? S[pos + 1] : static_cast<int>(seq.size())});
        } else {
          items_.push_back({st.diag, st.label, pos > 0 ? S[pos - 1] + 1 : 0, S[pos]});
        }
      }
      decorated_step(k + 1, seq);
      items_.resize(mark);
      int j = st.count - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == choices - st.count + j) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int r = j + 1; r < st.count; ++r) idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
    }
  }

  // Every item sits in its gap; the valid arrangement must be unique.
  void place_all(const Seq& undecorated) {
    std::vector<Seq> found;
    Seq seq = undecorated;
    place_rec(0, seq, found);
    if (found.empty()) return;
    if (found.size() > 1) throw std::logic_error("decorated valley insertion is not unique");
    results_.push_back(std::move(found.front()));
  }

  void place_rec(std::size_t j, Seq& seq, std::vector<Seq>& found) {
    if (j == items_.size()) {
      if (valid_with_shift(seq, s_) && std::find(found.begin(), found.end(), seq) == found.end()) {
        found.push_back(seq);
      }
      return;
    }
    const Item& it = items_[j];
    int undecorated_before = 0;
    for (std::size_t at = 0; at <= seq.size(); ++at) {
      if (undecorated_before >= it.lo && undecorated_before <= it.hi) {
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), Row{it.diag, it.label, true});
        place_rec(j + 1, seq, found);
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at));
      }
      if (at < seq.size() && !seq[at].dec) ++undecorated_before;
    }
  }

  std::vector<Step> steps_;
  int s_;
  std::vector<Seq> results_;
  std::vector<Item> items_;
};

}  // namespace

std::vector<DecoratedPath> insertion_generate(const MarkedWord& z, int s) {
  if (s < 0) throw IndexOutOfRange("negative shift");
  if (z.empty()) {
    if (s != 0) throw UnrealizableWord("the empty word only has shift 0");
    return {DecoratedPath{{}, {}, DecorationKind::valley, {}}};
  }
  if (s > z.top()) throw UnrealizableWord("shift exceeds the number of runs");
  const Runs rm = run_multiplicities(z);
  std::vector<Step> steps;
  const auto& main_run = rm[static_cast<std::size_t>(s)].undecorated;
  for (auto it = main_run.rbegin(); it != main_run.rend(); ++it) {
    steps.push_back({Phase::main_diagonal, s, it->first, it->second});
  }
  for (int i = s + 1; i <= z.top(); ++i) {
    const auto& run = rm[static_cast<std::size_t>(i)].undecorated;
    for (auto it = run.rbegin(); it != run.rend(); ++it) steps.push_back({Phase::above, i, it->first, it->second});
  }
  for (int i = s - 1; i >= 0; --i) {
    for (const auto& [c, k] : rm[static_cast<std::size_t>(i)].undecorated) steps.push_back({Phase::below, i, c, k});
  }
  for (int i = 0; i <= z.top(); ++i) {
    for (const auto& [c, k] : rm[static_cast<std::size_t>(i)].decorated) steps.push_back({Phase::decorated, i, c, k});
  }
  std::vector<DecoratedPath> out;
  for (const Seq& seq : Inserter(std::move(steps), s).run()) {
    DecoratedPath p = to_path(seq, s);
    if (!is_valid(p) || shift(p.area_word) != s || diagonal_word(p) != z) {
      throw UnrealizableWord("word " + z.to_string() + " is not realizable at shift " + std::to_string(s));
    }
    out.push_back(std::move(p));
  }
  if (out.empty()) {
    throw UnrealizableWord("word " + z.to_string() + " is not realizable at shift " + std::to_string(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecoratedPath> class_paths_bruteforce(const MarkedWord& z, int s) {
  EnumSpec spec;
  spec.family = Family::LSQ;
  spec.kind = DecorationKind::valley;
  spec.m = zero_count(z);
  spec.n = z.size() - spec.m;
  spec.k = decorated_count(z);
  spec.content = positive_content(z);
  std::vector<DecoratedPath> out;
  enumerate(spec, [&](const DecoratedPath& p) {
    if (shift(p.area_word) == s && diagonal_word(p) == z) out.push_back(p);
  });
  return out;
}

QTPoly qt_enumerator(const std::vector<DecoratedPath>& paths) {
  std::vector<QTPoly::Term> terms;
  terms.reserve(paths.size());
  for (const DecoratedPath& p : paths) terms.push_back({{dinv(p), area(p)}, 1});
  return QTPoly::from_terms(std::move(terms));
}

}  // namespace qtdelta
