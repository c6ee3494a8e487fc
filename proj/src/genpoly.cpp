#include "qtdelta/genpoly.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "qtdelta/errors.hpp"
#include "qtdelta/partition.hpp"

namespace qtdelta {

void GenPoly::add(const Content& content, const QTPoly& value) {
  if (value.is_zero()) return;
  auto it = terms_.find(content);
  if (it == terms_.end()) {
    terms_.emplace(content, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

QTPoly GenPoly::at(const Content& content) const {
  auto it = terms_.find(content);
  return it == terms_.end() ? QTPoly() : it->second;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [c, v] : o.terms_) add(c, v);
  return *this;
}

GenPoly& GenPoly::operator*=(const QTPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [content, v] : terms_) v *= c;
  return *this;
}

std::string GenPoly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [content, poly] : terms_) {
    for (const auto& term : poly.terms()) {
      nlohmann::ordered_json entry;
      entry["content"] = content;
      entry["q"] = term.exp.q;
      entry["t"] = term.exp.t;
      entry["coeff"] = rational_to_string(term.coeff);
      terms.push_back(entry);
    }
  }
  nlohmann::ordered_json doc;
  doc["terms"] = terms;
  return doc.dump();
}

GenPoly GenPoly::from_json(std::string_view text) {
  GenPoly out;
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    for (const auto& term : doc.at("terms")) {
      Rational c(term.at("coeff").get<std::string>());
      c.canonicalize();
      out.add(term.at("content").get<Content>(),
              QTPoly::monomial(term.at("q").get<int>(), term.at("t").get<int>(), c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad GenPoly JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad GenPoly coefficient: ") + e.what());
  }
  return out;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [content, poly] : terms_) {
    if (!out.empty()) out += "; ";
    out += "m[";
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(content[i]);
    }
    out += "]: " + poly.to_string();
  }
  return out;
}

namespace {

GenPoly::Content sorted_content(const std::vector<int>& v) {
  GenPoly::Content c;
  for (int x : v) {
    if (x > 0) c.push_back(x);
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

QTPoly to_poly(const std::map<std::pair<int, int>, long>& counts) {
  std::vector<QTPoly::Term> terms;
  for (const auto& [exp, n] : counts) {
    if (exp.first < 0 || exp.second < 0) throw Error("negative statistic in generating polynomial");
    terms.push_back({{exp.first, exp.second}, Rational(n)});
  }
  return QTPoly::from_terms(std::move(terms));
}

// Number of distinct rearrangements of a length-N vector with the given parts.
long long rearrangements(const GenPoly::Content& parts, int alphabet) {
  std::vector<int> v = parts;
  v.resize(static_cast<std::size_t>(alphabet), 0);
  std::sort(v.begin(), v.end());
  long long count = 0;
  do {
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

}  // namespace

void ContentSeries::add_path(const DecoratedPath& p, int alphabet) {
  std::vector<int> v(static_cast<std::size_t>(alphabet), 0);
  for (int w : p.labels) {
    if (w > 0 && w <= alphabet) ++v[static_cast<std::size_t>(w - 1)];
  }
  add(v, dinv(p), area(p));
}

void ContentSeries::add(const std::vector<int>& content_vector, int dinv_value, int area_value, long count) {
  counts_[content_vector][{dinv_value, area_value}] += count;
}

GenPoly ContentSeries::symmetrize(int alphabet) const {
  std::map<GenPoly::Content, std::pair<QTPoly, long long>> seen;
  for (const auto& [vec, counts] : counts_) {
    const QTPoly value = to_poly(counts);
    const GenPoly::Content c = sorted_content(vec);
    auto it = seen.find(c);
    if (it == seen.end()) {
      seen.emplace(c, std::make_pair(value, 1LL));
    } else if (it->second.first != value) {
      throw NotSymmetric("coefficient of content vector differs from a rearrangement");
    } else {
      ++it->second.second;
    }
  }
  GenPoly out;
  for (const auto& [c, entry] : seen) {
    if (entry.second != rearrangements(c, alphabet)) {
      throw NotSymmetric("content rearrangement missing from the series");
    }
    out.add(c, entry.first);
  }
  return out;
}

GenPoly ContentSeries::collapse() const {
  GenPoly out;
  for (const auto& [vec, counts] : counts_) {
    if (std::is_sorted(vec.begin(), vec.end(), std::greater<>())) out.add(sorted_content(vec), to_poly(counts));
  }
  return out;
}

GenPoly generating_polynomial(const EnumSpec& spec) {
  const int alphabet = spec.alphabet_max > 0 ? spec.alphabet_max : spec.n;
  ContentSeries series;
  EnumSpec s = spec;
  s.content.reset();
  enumerate(s, [&](const DecoratedPath& p) { series.add_path(p, alphabet); });
  return series.symmetrize(alphabet);
}

GenPoly generating_polynomial_by_content(const EnumSpec& spec) {
  GenPoly out;
  for (const Partition& lambda : partitions_of(spec.n)) {
    EnumSpec s = spec;
    s.content = lambda.parts;
    ContentSeries series;
    const int alphabet = lambda.length();
    enumerate(s, [&](const DecoratedPath& p) { series.add_path(p, alphabet); });
    out += series.collapse();
  }
  return out;
}

GenPoly generating_polynomial(const std::vector<DecoratedPath>& paths) {
  ContentSeries series;
  for (const DecoratedPath& p : paths) {
    int alphabet = 0;
    for (int w : p.labels) {
      if (w != kInfinityLabel) alphabet = std::max(alphabet, w);
    }
    std::vector<int> v(static_cast<std::size_t>(alphabet), 0);
    for (int w : p.labels) {
      if (w > 0 && w != kInfinityLabel) ++v[static_cast<std::size_t>(w - 1)];
    }
    series.add(v, dinv(p), area(p));
  }
  return series.collapse();
}

}  // namespace qtdelta
