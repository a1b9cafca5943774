#include "weblog/ratio.hpp"

#include <algorithm>

#include "weblog/errors.hpp"

namespace weblog {

namespace {
using u128 = unsigned __int128;
}

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) : num_(numerator), den_(denominator) {
  if (denominator == 0) throw DomainError("ratio with zero denominator");
}

bool operator==(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num_) * b.den_ == static_cast<u128>(b.num_) * a.den_;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num_) * b.den_ <=> static_cast<u128>(b.num_) * a.den_;
}

std::string Ratio::to_string(int digits) const {
  if (digits < 1) throw DomainError("need at least one significant digit");
  if (num_ == 0) return "0";

  std::uint64_t rem = num_ % den_;
  auto next_fraction_digit = [&] {
    u128 t = static_cast<u128>(rem) * 10;
    rem = static_cast<std::uint64_t>(t % den_);
    return static_cast<char>('0' + static_cast<int>(t / den_));
  };

  // sig holds significant digits; `point` is how many of them precede the
  // decimal point (negative: zeros between the point and the first digit).
  std::string sig;
  int point = 0;
  const std::uint64_t whole = num_ / den_;
  if (whole != 0) {
    sig = std::to_string(whole);
    point = static_cast<int>(sig.size());
  } else {
    char d;
    while ((d = next_fraction_digit()) == '0') --point;
    sig.push_back(d);
  }
  const auto want = static_cast<std::size_t>(digits);
  while (sig.size() < want + 1) sig.push_back(next_fraction_digit());

  const int dropped = sig[want] - '0';
  const bool sticky =
      rem != 0 || std::any_of(sig.begin() + static_cast<std::ptrdiff_t>(want) + 1, sig.end(), [](char c) { return c != '0'; });
  sig.resize(want);

  bool round_up = dropped > 5 || (dropped == 5 && (sticky || (sig.back() - '0') % 2 == 1));
  if (round_up) {
    std::size_t i = sig.size();
    while (i > 0 && sig[i - 1] == '9') sig[--i] = '0';
    if (i > 0) {
      ++sig[i - 1];
    } else {
      sig.insert(sig.begin(), '1');
      sig.pop_back();
      ++point;
    }
  }

  std::string int_digits;
  std::string frac_digits;
  if (point <= 0) {
    int_digits = "0";
    frac_digits = std::string(static_cast<std::size_t>(-point), '0') + sig;
  } else if (static_cast<std::size_t>(point) >= sig.size()) {
    int_digits = sig + std::string(static_cast<std::size_t>(point) - sig.size(), '0');
  } else {
    int_digits = sig.substr(0, static_cast<std::size_t>(point));
    frac_digits = sig.substr(static_cast<std::size_t>(point));
  }
  while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();
  return frac_digits.empty() ? int_digits : int_digits + "." + frac_digits;
}

}  // namespace weblog
