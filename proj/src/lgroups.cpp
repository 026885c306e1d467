#include "maslovkit/lgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "maslovkit/errors.hpp"
#include "maslovkit/ring.hpp"

namespace maslovkit {

namespace {

void require_p(long long p) {
    if (p == 2 || !is_prime(p)) fail(ErrorCode::DomainError, "p must be an odd prime, got " + std::to_string(p));
}

void require_d(int d) {
    if (d < 0) fail(ErrorCode::DomainError, "dimension d must be >= 0");
    if (d > 4) fail(ErrorCode::UnsupportedRing, "only d <= 4 is covered, got d = " + std::to_string(d));
}

std::map<long long, int> factorize(long long n) {
    std::map<long long, int> out;
    for (long long q = 2; q * q <= n; ++q)
        while (n % q == 0) {
            ++out[q];
            n /= q;
        }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic(const std::vector<long long>& orders) {
    // Split into primary parts, then recombine the largest powers of each prime.
    std::map<long long, std::vector<long long>> primary;
    for (long long n : orders) {
        if (n < 1) fail(ErrorCode::DomainError, "cyclic order must be positive");
        for (auto [q, e] : factorize(n)) {
            long long pe = 1;
            for (int i = 0; i < e; ++i) pe *= q;
            primary[q].push_back(pe);
        }
    }
    std::size_t len = 0;
    for (auto& [q, v] : primary) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    std::vector<long long> f(len, 1);
    for (auto& [q, v] : primary)
        for (std::size_t i = 0; i < v.size(); ++i) f[i] *= v[i];
    std::reverse(f.begin(), f.end());
    FiniteAbelianGroup g;
    g.factors_ = std::move(f);
    return g;
}

long long FiniteAbelianGroup::order() const {
    return std::accumulate(factors_.begin(), factors_.end(), 1LL, std::multiplies<>());
}

FiniteAbelianGroup FiniteAbelianGroup::operator+(const FiniteAbelianGroup& o) const {
    std::vector<long long> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return from_cyclic(all);
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "+Z/" : "Z/") + std::to_string(factors_[i]);
    return s;
}

FiniteAbelianGroup witt_group(long long p) {
    require_p(p);
    return p % 4 == 1 ? FiniteAbelianGroup::from_cyclic({2, 2}) : FiniteAbelianGroup::from_cyclic({4});
}

FiniteAbelianGroup lgroup_base(int n, long long p) {
    require_p(p);
    n = ((n % 4) + 4) % 4;
    return n == 0 ? witt_group(p) : FiniteAbelianGroup();
}

LGroupResult lgroup(int n, int d, long long p) {
    require_p(p);
    if (d < 0) fail(ErrorCode::DomainError, "dimension d must be >= 0");
    if (d == 0) return {lgroup_base(n, p), true};
    const auto a = lgroup(n, d - 1, p), b = lgroup(n - 1, d - 1, p);
    return {a.group + b.group, d <= 4};
}

FiniteAbelianGroup fundamental_ideal_group(int d, long long p) {
    require_p(p);
    require_d(d);
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::from_cyclic({2});
    return d <= 3 ? z2 : z2 + witt_group(p);
}

FiniteAbelianGroup classify_loops(int d, long long p) {
    require_p(p);
    require_d(d);
    return d <= 3 ? FiniteAbelianGroup() : witt_group(p);
}

}  // namespace maslovkit
