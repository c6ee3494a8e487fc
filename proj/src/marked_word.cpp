#include "qtdelta/marked_word.hpp"

#include <algorithm>
#include <charconv>

#include "qtdelta/errors.hpp"

namespace qtdelta {

namespace {
const Run kEmptyRun;

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}
}  // namespace

MarkedWord::MarkedWord(std::vector<Run> runs_top_first) : runs_(std::move(runs_top_first)) {
  for (Run& r : runs_) std::sort(r.begin(), r.end());
}

const Run& MarkedWord::run(int i) const {
  if (i < 0 || i > top()) return kEmptyRun;
  return runs_[static_cast<std::size_t>(top() - i)];
}

std::vector<MarkedEntry> MarkedWord::sequence() const {
  std::vector<MarkedEntry> out;
  for (const Run& r : runs_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

int MarkedWord::size() const {
  int n = 0;
  for (const Run& r : runs_) n += static_cast<int>(r.size());
  return n;
}

std::string MarkedWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < runs_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(runs_[i][j].label);
      if (runs_[i][j].decorated) out += '*';
    }
  }
  return out;
}

MarkedWord MarkedWord::parse(std::string_view text) {
  std::vector<Run> runs;
  if (trim(text).empty()) return MarkedWord();
  while (true) {
    const std::size_t bar = text.find('|');
    std::string_view part = trim(text.substr(0, bar));
    Run run;
    while (!part.empty()) {
      const std::size_t sp = part.find(' ');
      std::string_view tok = part.substr(0, sp);
      MarkedEntry e;
      if (!tok.empty() && tok.back() == '*') {
        e.decorated = true;
        tok.remove_suffix(1);
      }
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e.label);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || e.label < 0) {
        throw ParseError("bad marked word entry '" + std::string(tok) + "'");
      }
      run.push_back(e);
      part = sp == std::string_view::npos ? std::string_view() : trim(part.substr(sp + 1));
    }
    if (run.empty()) throw ParseError("empty run in marked word");
    runs.push_back(std::move(run));
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return MarkedWord(std::move(runs));
}

int maj(const MarkedWord& z) {
  const std::vector<MarkedEntry> seq = z.sequence();
  int total = 0;
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
    if (seq[p + 1] < seq[p]) total += static_cast<int>(p) + 1;
  }
  return total;
}

}  // namespace qtdelta
