#include "raneykit/cantor.hpp"

#include <algorithm>

namespace raneykit::cantor {

CantorPoint::CantorPoint(std::string prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {
  for (char d : prefix_)
    if (d != '0' && d != '2') throw Error(ErrorCode::ParseError, "digit '" + std::string(1, d) + "' is not 0 or 2");
  const char t = tail_digit();
  while (!prefix_.empty() && prefix_.back() == t) prefix_.pop_back();
}

CantorPoint CantorPoint::parse(std::string_view text) {
  if (text == "0") return bottom();
  if (text == "1") return top();
  auto bad = [&] { return Error(ErrorCode::ParseError, "expected 0.<digits>(<0|2>), got '" + std::string(text) + "'"); };
  if (text.size() < 5 || text.substr(0, 2) != "0." || text.back() != ')') throw bad();
  const auto open = text.find('(');
  if (open == std::string_view::npos || open + 3 != text.size()) throw bad();
  const char t = text[open + 1];
  if (t != '0' && t != '2') throw bad();
  return CantorPoint(std::string(text.substr(2, open - 2)), t == '2' ? Tail::Twos : Tail::Zeros);
}

std::string CantorPoint::to_string() const { return "0." + prefix_ + "(" + tail_digit() + ")"; }

Rational CantorPoint::value() const {
  Rational v = 0;
  Rational scale = 1;
  for (char d : prefix_) {
    scale /= 3;
    if (d == '2') v += 2 * scale;
  }
  // 0.00...0(2) with n leading zeros equals 3^-n.
  if (tail_ == Tail::Twos) v += scale;
  return v;
}

std::strong_ordering operator<=>(const CantorPoint& x, const CantorPoint& y) {
  const std::size_t n = std::max(x.prefix_.size(), y.prefix_.size()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const char a = x.digit(i), b = y.digit(i);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Order compare(const CantorPoint& x, const CantorPoint& y) {
  const auto c = x <=> y;
  return c < 0 ? Order::LT : c > 0 ? Order::GT : Order::EQ;
}

CantorPoint min_of(std::span<const CantorPoint> s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "minimum of an empty set");
  return *std::min_element(s.begin(), s.end());
}

CantorPoint max_of(std::span<const CantorPoint> s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "maximum of an empty set");
  return *std::max_element(s.begin(), s.end());
}

bool is_left_endpoint(const CantorPoint& x) { return x.tail() == Tail::Twos && !x.is_top(); }

CantorPoint cover_of(const CantorPoint& x) {
  if (!is_left_endpoint(x)) throw Error(ErrorCode::NotLeftEndpoint, x.to_string() + " is not a left endpoint");
  std::string p = x.prefix();  // canonical, so it ends in '0'
  p.back() = '2';
  return CantorPoint(std::move(p), Tail::Zeros);
}

CantorPoint nucleus_j(const CantorPoint& x) { return is_left_endpoint(x) ? cover_of(x) : x; }

CantorPoint heyting(const CantorPoint& a, const CantorPoint& b) { return a <= b ? CantorPoint::top() : b; }

bool in_open_cap_closed(const CantorPoint& x, const CantorPoint& a, const CantorPoint& b) {
  return x.is_top() || (b < a && b <= x && x < a);
}

CantorPoint witness_left_endpoint(const CantorPoint& a, const CantorPoint& b) {
  if (!(b < a)) throw Error(ErrorCode::PreconditionUnmet, "witness needs b < a");
  const std::size_t limit = std::max(a.prefix().size(), b.prefix().size()) + 2;
  for (std::size_t len = 1; len <= limit; ++len) {
    // Canonical left endpoints of this prefix length end in '0'.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (len - 1)); ++bits) {
      std::string p(len, '0');
      for (std::size_t i = 0; i + 1 < len; ++i)
        if (bits >> (len - 2 - i) & 1U) p[i] = '2';
      CantorPoint x(std::move(p), Tail::Twos);
      if (b <= x && x < a) return x;
    }
  }
  throw Error(ErrorCode::NoWitnessFound, "no left endpoint in [" + b.to_string() + ", " + a.to_string() + ")");
}

bool check_j_meet_preservation(std::span<const CantorPoint> s) {
  const CantorPoint lhs = nucleus_j(min_of(s));
  std::vector<CantorPoint> images;
  images.reserve(s.size());
  for (const auto& x : s) images.push_back(nucleus_j(x));
  return lhs == min_of(images);
}

std::vector<CantorPoint> truncation_chain(const CantorPoint& x, std::size_t n) {
  std::vector<CantorPoint> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::string p;
    for (std::size_t i = 0; i < k; ++i) p.push_back(x.digit(i));
    out.emplace_back(std::move(p), Tail::Twos);
  }
  return out;
}

CantorPoint truncation_infimum(const CantorPoint& x) { return x; }

CantorPoint truncation_j_infimum(const CantorPoint& x) {
  // A tail of 2s means the chain is eventually constant at x.
  return x.tail() == Tail::Twos ? nucleus_j(x) : x;
}

bool check_j_truncation(const CantorPoint& x) { return nucleus_j(truncation_infimum(x)) == truncation_j_infimum(x); }

std::vector<CantorPoint> points_up_to_depth(std::size_t depth) {
  std::vector<CantorPoint> out;
  for (std::size_t len = 0; len <= depth; ++len)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string p(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if (bits >> (len - 1 - i) & 1U) p[i] = '2';
      for (Tail t : {Tail::Zeros, Tail::Twos}) {
        const char td = t == Tail::Twos ? '2' : '0';
        if (!p.empty() && p.back() == td) continue;  // not canonical
        out.emplace_back(p, t);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace raneykit::cantor
