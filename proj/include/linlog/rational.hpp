#ifndef LINLOG_RATIONAL_HPP
#define LINLOG_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace linlog {

using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string rat_to_string(const Rat &r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "3/4", "1", "0".
inline Rat rat_from_string(const std::string &s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::exception &) {
    throw std::runtime_error("bad rational literal: " + s);
  }
}

inline Rat rat_min(const Rat &a, const Rat &b) { return a < b ? a : b; }
inline Rat rat_max(const Rat &a, const Rat &b) { return a < b ? b : a; }

} // namespace linlog

#endif
