#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qtdelta/paths.hpp"
#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

/// Generating polynomial: content partition (weakly decreasing positive
/// multiplicities) to its q,t coefficient. Zero coefficients are not stored.
class GenPoly {
 public:
  using Content = std::vector<int>;

  void add(const Content& content, const QTPoly& value);
  QTPoly at(const Content& content) const;
  const std::map<Content, QTPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator*=(const QTPoly& c);
  bool operator==(const GenPoly&) const = default;

  /// {"terms":[{"content":[1,1],"q":1,"t":0,"coeff":"1"},...]}
  std::string to_json() const;
  static GenPoly from_json(std::string_view text);
  /// "m[1,1]: 1 + q + t; m[2]: 1"
  std::string to_string() const;

 private:
  std::map<Content, QTPoly> terms_;
};

/// Accumulates q^dinv t^area per raw content vector (multiplicities of 1..N).
class ContentSeries {
 public:
  void add_path(const DecoratedPath& p, int alphabet);
  void add(const std::vector<int>& content_vector, int dinv, int area, long count = 1);
  /// Collapses to sorted contents; throws NotSymmetric unless every
  /// rearrangement of a content is present with the same coefficient.
  GenPoly symmetrize(int alphabet) const;
  /// Reads off the coefficients of the dominant monomials x_1^{l_1} x_2^{l_2} ...
  /// without the symmetry check.
  GenPoly collapse() const;

 private:
  std::map<std::vector<int>, std::map<std::pair<int, int>, long>> counts_;
};

/// Full enumeration over the alphabet {0..N} with the symmetry check.
GenPoly generating_polynomial(const EnumSpec& spec);
/// One enumeration per partition of n, restricted to that exact content.
GenPoly generating_polynomial_by_content(const EnumSpec& spec);
/// Dominant-monomial coefficients of the sum of q^dinv t^area x^w over a path list.
GenPoly generating_polynomial(const std::vector<DecoratedPath>& paths);

}  // namespace qtdelta
