#ifndef TORICMON_LINEXPR_HPP
#define TORICMON_LINEXPR_HPP

#include <map>
#include <string>
#include <vector>

#include "toricmon/intlin.hpp"

namespace toricmon {

/// Integer affine expression in named parameters, e.g. 2l+1 or l2+l3.
/// Used wherever a Demazure root is carried with its series parameter
/// left symbolic instead of substituted.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(const Int& c) : c_(c) {}
    LinExpr(long c) : c_(c) {}
    static LinExpr symbol(const std::string& name);

    const Int& constant() const { return c_; }
    const std::map<std::string, Int>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && c_ == 0; }

    LinExpr operator+(const LinExpr& o) const;
    LinExpr operator-(const LinExpr& o) const;
    LinExpr operator-() const;
    LinExpr operator*(const Int& c) const;
    bool operator==(const LinExpr& o) const = default;
    bool operator<(const LinExpr& o) const;

    Int substitute(const std::map<std::string, Int>& values) const;

    /// "2l+1", "l3-1", "-l", "0", ...
    std::string to_string() const;

private:
    Int c_ = 0;
    std::map<std::string, Int> terms_;  // no zero coefficients stored
};

using LinVec = std::vector<LinExpr>;

LinExpr dot(const Vec& a, const LinVec& b);
LinVec linvec_add(const LinVec& a, const LinVec& b);
LinVec linvec_scale(const Int& c, const LinVec& v);
bool linvec_less(const LinVec& a, const LinVec& b);
std::string to_string(const LinVec& v);

/// Parses one affine expression: terms like "3", "l", "-2l", "l3", joined
/// by + or -.  Whitespace is not allowed.  Throws on malformed input.
LinExpr parse_linexpr(const std::string& text);

}  // namespace toricmon

#endif
