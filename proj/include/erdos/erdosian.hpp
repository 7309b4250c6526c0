#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace erdos {

// A period-q sign assignment: f(a) = +-1 for q not dividing a, f(q) = 0,
// extended q-periodically. L(1,f) converges exactly when the period sum
// vanishes ("balanced").
class ErdosianFunction {
 public:
  ErdosianFunction(std::uint64_t q, std::vector<std::int8_t> signs)
      : q_(q), signs_(std::move(signs)) {
    if (q < 2)
      throw std::domain_error("ErdosianFunction: period must be >= 2");
    if (signs_.size() != q - 1)
      throw std::invalid_argument("ErdosianFunction: expected " +
                                  std::to_string(q - 1) + " signs, got " +
                                  std::to_string(signs_.size()));
    for (std::int8_t s : signs_)
      if (s != 1 && s != -1)
        throw std::invalid_argument("ErdosianFunction: signs must be +-1");
  }

  // "+--+" -> f(1)=+1, f(2)=-1, f(3)=-1, f(4)=+1 (period 5).
  static ErdosianFunction from_string(std::uint64_t q, std::string_view s) {
    std::vector<std::int8_t> signs;
    signs.reserve(s.size());
    for (char c : s) {
      if (c == '+')
        signs.push_back(1);
      else if (c == '-')
        signs.push_back(-1);
      else
        throw std::invalid_argument(
            "ErdosianFunction: sign string may contain only '+' and '-'");
    }
    return ErdosianFunction(q, std::move(signs));
  }

  std::uint64_t period() const { return q_; }

  int at(std::uint64_t n) const {
    std::uint64_t r = n % q_;
    return r == 0 ? 0 : signs_[r - 1];
  }

  std::int64_t period_sum() const {
    return std::accumulate(signs_.begin(), signs_.end(), std::int64_t{0});
  }

  bool balanced() const { return period_sum() == 0; }

  std::string sign_string() const {
    std::string s;
    s.reserve(signs_.size());
    for (std::int8_t v : signs_) s.push_back(v > 0 ? '+' : '-');
    return s;
  }

  ErdosianFunction negated() const {
    std::vector<std::int8_t> neg(signs_);
    for (auto& v : neg) v = static_cast<std::int8_t>(-v);
    return ErdosianFunction(q_, std::move(neg));
  }

 private:
  std::uint64_t q_;
  std::vector<std::int8_t> signs_;
};

}  // namespace erdos
