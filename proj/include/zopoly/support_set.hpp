#pragma once

#include <string>
#include <vector>

namespace zopoly {

/// Exponent set of a 0,1-polynomial: strictly increasing nonnegative
/// integers, always containing 0.  {0, n_1, ..., n_k} induces
/// 1 + x^{n_1} + ... + x^{n_k}.
class SupportSet {
  public:
    SupportSet();                                      // {0}
    explicit SupportSet(std::vector<long long> exps);  // sorts, validates

    std::size_t size() const { return exps_.size(); }  // k+1 terms
    int k() const { return static_cast<int>(exps_.size()) - 1; }
    long long max_exponent() const { return exps_.back(); }
    long long operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<long long>& exponents() const { return exps_; }
    bool contains(long long e) const;

    bool operator==(const SupportSet& o) const { return exps_ == o.exps_; }
    bool operator!=(const SupportSet& o) const { return exps_ != o.exps_; }
    bool operator<(const SupportSet& o) const { return exps_ < o.exps_; }

  private:
    std::vector<long long> exps_;
};

SupportSet parse_support(const std::string& text);
std::string to_string(const SupportSet& s);

} // namespace zopoly
