#pragma once

// Congruence classes of nondegenerate symmetric n x n matrices over F_p found
// by breadth-first search under M -> A^T M A for generators A of GL_n(F_p).
// Uses no discriminant or square-class reasoning.

#include <cstdint>
#include <deque>
#include <vector>

namespace witt_oracle {

struct Orbits {
    int64_t p;
    int n;
    std::vector<int> label;  // per encoded symmetric matrix; -1 when degenerate
    int count = 0;

    using Mat = std::vector<std::vector<int64_t>>;

    int64_t encode(const Mat& m) const {
        int64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) code = code * p + m[i][j];
        return code;
    }
    Mat decode(int64_t code) const {
        Mat m(n, std::vector<int64_t>(n, 0));
        for (int i = n - 1; i >= 0; --i)
            for (int j = n - 1; j >= i; --j) {
                m[i][j] = m[j][i] = code % p;
                code /= p;
            }
        return m;
    }
    int of(const Mat& m) const { return label[encode(m)]; }
};

inline int64_t det_mod(std::vector<std::vector<int64_t>> m, int64_t p) {
    const int n = static_cast<int>(m.size());
    int64_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = (p - det) % p;
        }
        det = det * m[c][c] % p;
        int64_t inv = 1;
        for (int64_t e = p - 2, b = m[c][c]; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (int r = c + 1; r < n; ++r) {
            const int64_t f = m[r][c] * inv % p;
            for (int k = c; k < n; ++k) m[r][k] = ((m[r][k] - f * m[c][k]) % p + p) % p;
        }
    }
    return det;
}

inline Orbits build(int64_t p, int n) {
    using Mat = Orbits::Mat;
    Orbits o{p, n, {}, 0};
    int64_t total = 1;
    for (int k = 0; k < n * (n + 1) / 2; ++k) total *= p;
    o.label.assign(static_cast<std::size_t>(total), -1);

    int64_t g = 2;  // a primitive root
    for (;; ++g) {
        int order = 1;
        for (int64_t x = g % p; x != 1; x = x * g % p) ++order;
        if (order == p - 1) break;
    }

    std::vector<Mat> gens;
    auto identity = [n] {
        Mat a(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 1;
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                Mat a = identity();
                a[i][j] = 1;
                gens.push_back(a);
            }
    {
        Mat a = identity();
        if (n > 0) a[0][0] = g;
        gens.push_back(a);
    }

    auto act = [&](const Mat& m, const Mat& a) {
        Mat r(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int64_t s = 0;
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) s += a[k][i] * m[k][l] % p * a[l][j];
                r[i][j] = s % p;
            }
        return r;
    };

    for (int64_t code = 0; code < total; ++code) {
        if (o.label[code] != -1) continue;
        Mat m = o.decode(code);
        if (det_mod(m, p) == 0) continue;
        const int id = o.count++;
        std::deque<int64_t> queue{code};
        o.label[code] = id;
        while (!queue.empty()) {
            Mat cur = o.decode(queue.front());
            queue.pop_front();
            for (const auto& a : gens) {
                const int64_t next = o.encode(act(cur, a));
                if (o.label[next] == -1) {
                    o.label[next] = id;
                    queue.push_back(next);
                }
            }
        }
    }
    return o;
}

}  // namespace witt_oracle
