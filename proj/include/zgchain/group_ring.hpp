#pragma once

// Exact arithmetic in the integral group ring ZG and its omega-twisted
// involution  sum n_g g  |->  sum omega(g) n_g g^{-1}.

#include <map>
#include <stdexcept>
#include <string>

#include "zgchain/group.hpp"
#include "zgchain/int_matrix.hpp"

namespace zgc {

class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }

    static GroupRingElement term(const Int& coeff, std::size_t elem) {
        GroupRingElement e;
        if (coeff != 0) e.coeffs_[elem] = coeff;
        return e;
    }

    static GroupRingElement one() { return term(1, 0); }

    // Canonical form: no zero coefficients stored.
    const std::map<std::size_t, Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(std::size_t elem) const {
        auto it = coeffs_.find(elem);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add_term(const Int& c, std::size_t elem) {
        if (c == 0) return;
        Int& v = coeffs_[elem];
        v += c;
        if (v == 0) coeffs_.erase(elem);
    }

    GroupRingElement operator+(const GroupRingElement& o) const {
        GroupRingElement r = *this;
        for (const auto& [g, c] : o.coeffs_) r.add_term(c, g);
        return r;
    }

    GroupRingElement operator-(const GroupRingElement& o) const {
        GroupRingElement r = *this;
        for (const auto& [g, c] : o.coeffs_) r.add_term(-c, g);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r;
        for (const auto& [g, c] : coeffs_) r.coeffs_[g] = -c;
        return r;
    }

    GroupRingElement scaled(const Int& c) const {
        GroupRingElement r;
        if (c == 0) return r;
        for (const auto& [g, v] : coeffs_) r.coeffs_[g] = v * c;
        return r;
    }

    bool operator==(const GroupRingElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    // +-g for a single group element g, the units used for pivoting.
    bool is_unit_monomial() const {
        if (coeffs_.size() != 1) return false;
        const Int& c = coeffs_.begin()->second;
        return c == 1 || c == -1;
    }

    std::string to_string(const GroupData& g) const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty()) s += c >= 0 ? "+" : "";
            s += c.get_str();
            s += "*" + g.element_name(e);
        }
        return s;
    }

private:
    std::map<std::size_t, Int> coeffs_;
};

// Convolution product in ZG.
inline GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b, const GroupData& g) {
    GroupRingElement r;
    for (const auto& [x, cx] : a.coeffs()) {
        if (x >= g.order()) throw std::out_of_range("gr_mul: element index out of range");
        for (const auto& [y, cy] : b.coeffs()) {
            if (y >= g.order()) throw std::out_of_range("gr_mul: element index out of range");
            r.add_term(cx * cy, g.mult(x, y));
        }
    }
    return r;
}

// sum n_g g  |->  sum omega(g) n_g g^{-1}
inline GroupRingElement involute(const GroupRingElement& a, const GroupData& g) {
    GroupRingElement r;
    for (const auto& [x, c] : a.coeffs()) {
        if (x >= g.order()) throw std::out_of_range("involute: element index out of range");
        r.add_term(c * g.omega(x), g.inverse(x));
    }
    return r;
}

// |G| x |G| integer matrix of left multiplication by a on the basis G,
// L(a)[h', h] = coefficient of h' in a*h.
inline IntMatrix left_multiplication_matrix(const GroupRingElement& a, const GroupData& g) {
    const std::size_t n = g.order();
    IntMatrix m(n, n);
    for (const auto& [x, c] : a.coeffs()) {
        if (x >= n) throw std::out_of_range("flatten: element index out of range");
        for (std::size_t h = 0; h < n; ++h) m(g.mult(x, h), h) += c;
    }
    return m;
}

}  // namespace zgc
