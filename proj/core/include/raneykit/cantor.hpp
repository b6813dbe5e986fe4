#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raneykit/error.hpp"

namespace raneykit::cantor {

using Rational = boost::multiprecision::cpp_rational;

enum class Tail : std::uint8_t { Zeros, Twos };

/// A point 0.d1 d2 ... of the Cantor set whose ternary digits are eventually
/// constant. Stored canonically: the prefix never ends in the tail digit.
class CantorPoint {
 public:
  CantorPoint() = default;  // 0
  /// Throws `ParseError` on digits other than '0' and '2'.
  CantorPoint(std::string prefix, Tail tail);

  static CantorPoint bottom() { return {}; }
  static CantorPoint top() { return CantorPoint("", Tail::Twos); }
  /// Accepts "0.<digits>(<d>)", plus "0" and "1". Throws `ParseError`.
  static CantorPoint parse(std::string_view text);

  const std::string& prefix() const { return prefix_; }
  Tail tail() const { return tail_; }
  char tail_digit() const { return tail_ == Tail::Twos ? '2' : '0'; }
  /// Digit at 0-based position i of the infinite expansion.
  char digit(std::size_t i) const { return i < prefix_.size() ? prefix_[i] : tail_digit(); }

  bool is_bottom() const { return prefix_.empty() && tail_ == Tail::Zeros; }
  bool is_top() const { return prefix_.empty() && tail_ == Tail::Twos; }

  std::string to_string() const;
  Rational value() const;

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
  friend std::strong_ordering operator<=>(const CantorPoint& x, const CantorPoint& y);

 private:
  std::string prefix_;
  Tail tail_ = Tail::Zeros;
};

enum class Order { LT, EQ, GT };
Order compare(const CantorPoint& x, const CantorPoint& y);

/// Throws `EmptySet`.
CantorPoint min_of(std::span<const CantorPoint> s);
CantorPoint max_of(std::span<const CantorPoint> s);

/// Tail of 2s and not the top point.
bool is_left_endpoint(const CantorPoint& x);
/// (p0, 2s) -> (p2, 0s). Throws `NotLeftEndpoint`.
CantorPoint cover_of(const CantorPoint& x);

/// Sends each left endpoint to its cover and fixes everything else.
CantorPoint nucleus_j(const CantorPoint& x);
/// True when x lies in the sublocale of j-fixpoints.
inline bool in_fixpoints(const CantorPoint& x) { return !is_left_endpoint(x); }

/// Relative pseudocomplement in the chain: top if a ≤ b, else b.
CantorPoint heyting(const CantorPoint& a, const CantorPoint& b);

/// x ∈ O(a) ∩ C(b), i.e. x is top, or b ≤ x < a.
bool in_open_cap_closed(const CantorPoint& x, const CantorPoint& a, const CantorPoint& b);

/// A left endpoint x with b ≤ x < a, searched in order of prefix length up
/// to max(|a|, |b|) + 2, then lexicographically. Requires b < a
/// (`PreconditionUnmet`); `NoWitnessFound` would indicate a bug.
CantorPoint witness_left_endpoint(const CantorPoint& a, const CantorPoint& b);

/// j(min S) = min j[S]. Throws `EmptySet`.
bool check_j_meet_preservation(std::span<const CantorPoint> s);

/// x_k = (first k digits of x, 2s) for k = 1..n; a descending chain with infimum x.
std::vector<CantorPoint> truncation_chain(const CantorPoint& x, std::size_t n);
/// Infimum of the full (infinite) truncation chain of x: x itself.
CantorPoint truncation_infimum(const CantorPoint& x);
/// Infimum of j applied to the truncation chain: attained at j(x) when x has
/// a tail of 2s; otherwise the covers decrease to x without reaching it.
CantorPoint truncation_j_infimum(const CantorPoint& x);
/// j(inf chain) = inf j[chain] for the truncation chain of x.
bool check_j_truncation(const CantorPoint& x);

/// All canonical points with prefix length ≤ depth, in increasing order.
std::vector<CantorPoint> points_up_to_depth(std::size_t depth);

}  // namespace raneykit::cantor
