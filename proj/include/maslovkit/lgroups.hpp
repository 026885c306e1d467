#pragma once

#include <string>
#include <vector>

namespace maslovkit {

/// Z/n_1 + ... + Z/n_k in invariant-factor form n_1 | n_2 | ... (empty = 0).
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    /// Any list of cyclic orders; orders 1 are dropped and the rest brought to invariant factors.
    static FiniteAbelianGroup from_cyclic(const std::vector<long long>& orders);

    const std::vector<long long>& invariant_factors() const noexcept { return factors_; }
    bool is_trivial() const noexcept { return factors_.empty(); }
    long long order() const;
    FiniteAbelianGroup operator+(const FiniteAbelianGroup& o) const;
    bool operator==(const FiniteAbelianGroup& o) const noexcept { return factors_ == o.factors_; }

    /// "0", "Z/4", "Z/2+Z/2", ...
    std::string to_string() const;

private:
    std::vector<long long> factors_;
};

/// W+(F_p): Z/2+Z/2 for p = 1 mod 4, Z/4 for p = 3 mod 4.
FiniteAbelianGroup witt_group(long long p);
/// L_0(F_p) = W+(F_p), L_1 = L_2 = L_3 = 0.
FiniteAbelianGroup lgroup_base(int n, long long p);

struct LGroupResult {
    FiniteAbelianGroup group;
    /// False for d > 4, where the recursion is unrolled but not established.
    bool validated;
};
/// L_n(F_p^d) = L_n(F_p^{d-1}) + L_{n-1}(F_p^{d-1}), indices mod 4.
LGroupResult lgroup(int n, int d, long long p);

/// I(F_p^d): Z/2 for d <= 3, Z/2 + W+(F_p) for d = 4.
FiniteAbelianGroup fundamental_ideal_group(int d, long long p);
/// Loops modulo shifts and zero-dimensional loops: 0 for d <= 3, W+(F_p) for d = 4.
FiniteAbelianGroup classify_loops(int d, long long p);

}  // namespace maslovkit
