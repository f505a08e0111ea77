#ifndef NETCTRL_RATIONAL_HPP
#define NETCTRL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace netctrl {

// Exact arithmetic substrate. mpq_class is kept canonical (reduced, positive
// denominator) by GMP as long as values are produced by arithmetic operators;
// anything built from raw parts must call canonicalize() first.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string int_str(const Integer& z) { return z.get_str(); }

// "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string rat_vec_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + "]";
}

} // namespace netctrl

#endif
