#include "toricmon/linexpr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toricmon {

LinExpr LinExpr::symbol(const std::string& name) {
    LinExpr e;
    e.terms_[name] = 1;
    return e;
}

LinExpr LinExpr::operator+(const LinExpr& o) const {
    LinExpr r = *this;
    r.c_ += o.c_;
    for (const auto& [s, c] : o.terms_) {
        Int& t = r.terms_[s];
        t += c;
        if (t == 0) r.terms_.erase(s);
    }
    return r;
}

LinExpr LinExpr::operator-(const LinExpr& o) const { return *this + (-o); }

LinExpr LinExpr::operator-() const {
    LinExpr r;
    r.c_ = -c_;
    for (const auto& [s, c] : terms_) r.terms_[s] = -c;
    return r;
}

LinExpr LinExpr::operator*(const Int& c) const {
    LinExpr r;
    if (c == 0) return r;
    r.c_ = c_ * c;
    for (const auto& [s, k] : terms_) r.terms_[s] = k * c;
    return r;
}

bool LinExpr::operator<(const LinExpr& o) const {
    if (terms_ != o.terms_) return terms_ < o.terms_;
    return c_ < o.c_;
}

Int LinExpr::substitute(const std::map<std::string, Int>& values) const {
    Int r = c_;
    for (const auto& [s, c] : terms_) {
        auto it = values.find(s);
        if (it == values.end()) throw std::invalid_argument("LinExpr: no value for parameter " + s);
        r += c * it->second;
    }
    return r;
}

std::string LinExpr::to_string() const {
    if (terms_.empty()) return c_.get_str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c;
        os << s;
        first = false;
    }
    if (c_ > 0) os << "+" << c_;
    if (c_ < 0) os << c_;
    return os.str();
}

LinExpr dot(const Vec& a, const LinVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    LinExpr s;
    for (std::size_t i = 0; i < a.size(); ++i) s = s + b[i] * a[i];
    return s;
}

LinVec linvec_add(const LinVec& a, const LinVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("linvec_add: length mismatch");
    LinVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LinVec linvec_scale(const Int& c, const LinVec& v) {
    LinVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

bool linvec_less(const LinVec& a, const LinVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return a[i] < b[i];
    return false;
}

std::string to_string(const LinVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].to_string();
    }
    os << ")";
    return os.str();
}

LinExpr parse_linexpr(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty expression");
    LinExpr result;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            if (pos == text.size()) throw std::invalid_argument("dangling sign in expression");
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
        std::string name;
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            // a symbol is a letter optionally followed by digits, e.g. l, l2
            name += text[pos++];
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) name += text[pos++];
        }
        if (digits.empty() && name.empty())
            throw std::invalid_argument("malformed expression: " + text);
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) coeff = -coeff;
        if (name.empty())
            result = result + LinExpr(coeff);
        else
            result = result + LinExpr::symbol(name) * coeff;
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
            throw std::invalid_argument("malformed expression: " + text);
    }
    return result;
}

}  // namespace toricmon
