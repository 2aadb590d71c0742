#pragma once

#include <boost/rational.hpp>

#include <string>

namespace dqa {

using Fraction = boost::rational<long long>;

inline double to_double(const Fraction& f) { return boost::rational_cast<double>(f); }

/// "3/4", or "2" when the denominator is one.
inline std::string to_string(const Fraction& f) {
    if (f.denominator() == 1) {
        return std::to_string(f.numerator());
    }
    return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

}  // namespace dqa
