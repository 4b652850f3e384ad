#pragma once

// Finite groups given by multiplication tables, with the orientation
// character omega: G -> {+1,-1}. Element 0 is always the identity.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace zgc {

class GroupData {
public:
    GroupData() = default;

    GroupData(std::string name, std::vector<std::string> elements,
              std::vector<std::vector<int>> table, std::vector<int> omega)
        : name_(std::move(name)),
          elements_(std::move(elements)),
          table_(std::move(table)),
          omega_(std::move(omega)) {
        finish_init();
    }

    // Synthesize a group from permutation generators (permutations of
    // {0..n-1} in one-line notation) by closure under composition.
    // Elements are ordered identity-first, then in BFS discovery order.
    static GroupData from_permutation_generators(std::string name,
                                                 const std::vector<std::vector<int>>& gens,
                                                 std::vector<int> omega = {}) {
        if (gens.empty()) {
            GroupData g(std::move(name), {"e"}, {{0}}, omega.empty() ? std::vector<int>{1} : omega);
            return g;
        }
        const std::size_t deg = gens[0].size();
        for (const auto& p : gens)
            if (p.size() != deg) throw std::invalid_argument("group: permutation generators of unequal degree");
        std::vector<int> id(deg);
        std::iota(id.begin(), id.end(), 0);
        std::vector<std::vector<int>> elems{id};
        std::map<std::vector<int>, int> index{{id, 0}};
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : gens) {
                // compose: (x then g), x = elems[head]
                std::vector<int> c(deg);
                for (std::size_t i = 0; i < deg; ++i) c[i] = g[elems[head][i]];
                if (!index.count(c)) {
                    index[c] = static_cast<int>(elems.size());
                    elems.push_back(c);
                }
            }
            if (elems.size() > 4096) throw std::invalid_argument("group: closure exceeds supported size");
        }
        const std::size_t n = elems.size();
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<int> c(deg);
                for (std::size_t i = 0; i < deg; ++i) c[i] = elems[a][elems[b][i]];
                table[a][b] = index.at(c);
            }
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
        names[0] = "e";
        if (omega.empty()) omega.assign(n, 1);
        return GroupData(std::move(name), std::move(names), std::move(table), std::move(omega));
    }

    static GroupData trivial() { return GroupData("triv", {"e"}, {{0}}, {1}); }

    static GroupData cyclic(int n, std::vector<int> omega = {}) {
        std::vector<std::string> names(n);
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i) {
            names[i] = (i == 0) ? "e" : "t" + std::string(i == 1 ? "" : std::to_string(i));
            for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
        }
        if (omega.empty()) omega.assign(n, 1);
        return GroupData("C" + std::to_string(n), std::move(names), std::move(table), std::move(omega));
    }

    // Direct product, element (a,b) at index a*|H| + b.
    static GroupData product(const GroupData& g, const GroupData& h) {
        const std::size_t n = g.order(), m = h.order();
        std::vector<std::string> names(n * m);
        std::vector<int> omega(n * m);
        std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                names[a * m + b] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
                omega[a * m + b] = g.omega(a) * h.omega(b);
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < m; ++d)
                        table[a * m + b][c * m + d] =
                            static_cast<int>(g.mult(a, c) * m + h.mult(b, d));
        return GroupData(g.name() + "x" + h.name(), std::move(names), std::move(table), std::move(omega));
    }

    std::size_t order() const { return elements_.size(); }
    const std::string& name() const { return name_; }
    const std::string& element_name(std::size_t i) const { return elements_.at(i); }
    const std::vector<std::string>& element_names() const { return elements_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<int>& omega_values() const { return omega_; }

    std::size_t mult(std::size_t a, std::size_t b) const {
        check_index(a);
        check_index(b);
        return static_cast<std::size_t>(table_[a][b]);
    }
    std::size_t inverse(std::size_t a) const {
        check_index(a);
        return inverse_[a];
    }
    int omega(std::size_t a) const {
        check_index(a);
        return omega_[a];
    }

    // Exhaustive validation: associativity, two-sided identity and
    // inverses, omega a homomorphism to {+1,-1}. Returns the first
    // failure description, or nullopt when the data is a group.
    std::optional<std::string> validate() const {
        const std::size_t n = order();
        if (table_.size() != n) return "table row count != order";
        for (std::size_t i = 0; i < n; ++i) {
            if (table_[i].size() != n) return "table row " + std::to_string(i) + " has wrong length";
            for (std::size_t j = 0; j < n; ++j)
                if (table_[i][j] < 0 || static_cast<std::size_t>(table_[i][j]) >= n)
                    return "table entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        for (std::size_t i = 0; i < n; ++i)
            if (mult(0, i) != i || mult(i, 0) != i) return "element 0 is not a two-sided identity";
        for (std::size_t a = 0; a < n; ++a) {
            bool has_inv = false;
            for (std::size_t b = 0; b < n; ++b)
                if (mult(a, b) == 0 && mult(b, a) == 0) has_inv = true;
            if (!has_inv) return "element " + std::to_string(a) + " has no two-sided inverse";
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                        return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")";
        if (omega_.size() != n) return "omega has wrong length";
        for (std::size_t a = 0; a < n; ++a)
            if (omega_[a] != 1 && omega_[a] != -1) return "omega value not in {+1,-1}";
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (omega_[mult(a, b)] != omega_[a] * omega_[b]) return "omega is not a homomorphism";
        return std::nullopt;
    }

    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = a + 1; b < order(); ++b)
                if (mult(a, b) != mult(b, a)) return false;
        return true;
    }

    std::size_t element_order(std::size_t a) const {
        std::size_t x = a, k = 1;
        while (x != 0) {
            x = mult(x, a);
            ++k;
        }
        return k;
    }

    // Structural key used for registry lookups: order, abelian flag and
    // the sorted multiset of element orders. Distinguishes every group
    // shipped in the registry without a full isomorphism test.
    std::string structural_key() const {
        std::vector<std::size_t> ords(order());
        for (std::size_t a = 0; a < order(); ++a) ords[a] = element_order(a);
        std::sort(ords.begin(), ords.end());
        std::string s = std::to_string(order());
        s += is_abelian() ? ":a:" : ":n:";
        for (std::size_t o : ords) s += std::to_string(o) + ",";
        return s;
    }

    // All subgroups, as sorted element-index sets, found by closure.
    std::vector<std::vector<std::size_t>> subgroups() const {
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> work{{0}};
        seen.insert({0});
        for (std::size_t head = 0; head < work.size(); ++head) {
            for (std::size_t g = 1; g < order(); ++g) {
                std::set<std::size_t> s(work[head].begin(), work[head].end());
                s.insert(g);
                // close under products
                bool grew = true;
                while (grew) {
                    grew = false;
                    std::vector<std::size_t> cur(s.begin(), s.end());
                    for (std::size_t a : cur)
                        for (std::size_t b : cur)
                            if (s.insert(mult(a, b)).second) grew = true;
                }
                std::vector<std::size_t> v(s.begin(), s.end());
                if (seen.insert(v).second) work.push_back(v);
            }
        }
        return {seen.begin(), seen.end()};
    }

    // One Sylow p-subgroup for each prime p dividing |G| (any
    // representative; conjugates give the same Tate fingerprints).
    std::vector<std::vector<std::size_t>> sylow_subgroups() const {
        std::vector<std::size_t> primes;
        std::size_t n = order();
        for (std::size_t p = 2; p <= n; ++p) {
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        }
        auto subs = subgroups();
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t p : primes) {
            std::size_t pk = 1, m = order();
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            for (const auto& s : subs)
                if (s.size() == pk) {
                    out.push_back(s);
                    break;
                }
        }
        return out;
    }

private:
    void finish_init() {
        if (elements_.empty()) throw std::invalid_argument("group: empty element list");
        if (auto err = validate()) throw std::invalid_argument("group '" + name_ + "': " + *err);
        inverse_.resize(order());
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < order(); ++b)
                if (mult(a, b) == 0) inverse_[a] = b;
    }

    void check_index(std::size_t a) const {
        if (a >= elements_.size()) throw std::out_of_range("group: element index out of range");
    }

    std::string name_;
    std::vector<std::string> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<int> omega_;
    std::vector<std::size_t> inverse_;
};

// Two groups are interchangeable for arithmetic when the tables agree.
inline bool same_group(const GroupData& a, const GroupData& b) {
    return a.order() == b.order() && a.table() == b.table() && a.omega_values() == b.omega_values();
}

}  // namespace zgc
