#include "zopoly/support_set.hpp"

#include <algorithm>
#include <sstream>

#include "zopoly/errors.hpp"

namespace zopoly {

SupportSet::SupportSet() : exps_{0} {}

SupportSet::SupportSet(std::vector<long long> exps) : exps_(std::move(exps)) {
    if (exps_.empty())
        throw DomainError("support set must be non-empty");
    std::sort(exps_.begin(), exps_.end());
    if (exps_.front() < 0)
        throw DomainError("support set exponents must be nonnegative");
    if (exps_.front() != 0)
        throw DomainError("support set must contain 0");
    for (std::size_t i = 1; i < exps_.size(); ++i)
        if (exps_[i] == exps_[i - 1])
            throw DomainError("support set exponents must be distinct");
}

bool SupportSet::contains(long long e) const {
    return std::binary_search(exps_.begin(), exps_.end(), e);
}

SupportSet parse_support(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (ch == '{' || ch == '}' || ch == '[' || ch == ']')
            continue;
        t.push_back(ch == ',' ? ' ' : ch);
    }
    std::istringstream in(t);
    std::vector<long long> exps;
    long long v;
    while (in >> v)
        exps.push_back(v);
    if (!in.eof())
        throw ParseError("bad support list: " + text);
    if (exps.empty())
        throw ParseError("empty support list: " + text);
    return SupportSet(std::move(exps));
}

std::string to_string(const SupportSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

} // namespace zopoly
