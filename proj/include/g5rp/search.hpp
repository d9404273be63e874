#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g5rp/diagonal5.hpp"

namespace g5rp {

// t = m/n with gcd(m,n) = 1, |m| <= N, 1 <= n <= N, plus infinity.
struct HeightBound {
  long N = 1000;
  explicit HeightBound(long n);
  bool contains(const TValue& t) const;
  // Number of finite t in the box plus one for infinity.
  long long size() const;
};

struct FoundPoint {
  TValue t;
  std::vector<QuadElem> witnesses;  // square roots: y_i for a rational system, z for a quotient
  Rational delta = 1;
  int s3 = 0, s4 = 0;  // 0 when not a quotient point
  std::string provenance;
};

struct SearchOptions {
  long height = 1000;
  int workers = 1;
};

// All t in the box with every polys[i](t) a rational square. Polynomials are homogenized to even degree,
// so t = infinity uses the leading coefficients (zero when the degree is odd).
std::vector<FoundPoint> simultaneous_squares(const std::vector<QPoly>& polys, const SearchOptions& opt);

std::vector<FoundPoint> rational_points_biquartic(const BiquarticModel& model, const SearchOptions& opt);

struct HCase {
  Rational delta;
  int s3 = 1, s4 = 1;
};

struct HSearchResult {
  HCase hcase;
  std::vector<FoundPoint> points;
};

// For each case: all t in P^1(Q) of bounded height with p3s(t) p4s(t) / delta a square in L.
std::vector<HSearchResult> points_on_H_over_L(const CoveringCase& cc, const std::vector<HCase>& cases,
                                              const SearchOptions& opt);

// Exact re-check of a quotient witness.
bool verify_quotient_point(const CoveringCase& cc, const FoundPoint& P);

// Rational point of C over t in original coordinates (sign-orbit representative), verified on the original matrix.
std::optional<Coords> pullback_to_C(const DiagonalGenus5& C, const TValue& t);

}  // namespace g5rp
