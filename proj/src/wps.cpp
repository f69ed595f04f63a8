#include "qfano/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qfano {

namespace {
int mod(long a, int r) {
    long m = a % r;
    return static_cast<int>(m < 0 ? m + r : m);
}
}  // namespace

bool WeightSystem::well_formed() const {
    for (int skip = 0; skip < size(); ++skip) {
        int g = 0;
        for (int i = 0; i < size(); ++i)
            if (i != skip) g = std::gcd(g, weights[static_cast<std::size_t>(i)]);
        if (g != 1) return false;
    }
    return true;
}

std::string QuotientSing::str() const {
    return "1/" + std::to_string(r) + "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
           std::to_string(a[2]) + ")";
}

QuotientSing make_sing(int r, int a0, int a1, int a2) {
    if (r < 1) throw std::invalid_argument("quotient index must be positive");
    return QuotientSing{r, {mod(a0, r), mod(a1, r), mod(a2, r)}};
}

NormalizedSing normalize(const QuotientSing& q) {
    NormalizedSing out;
    if (q.r == 1) {
        out.type = QuotientSing{1, {0, 0, 0}};
        out.terminal = true;
        return out;
    }
    // Brute force over units: r <= 20 in every use here.
    bool found_terminal = false;
    std::array<int, 3> best{};
    int best_unit = 1;
    for (int u = 1; u < q.r; ++u) {
        if (std::gcd(u, q.r) != 1) continue;
        std::array<int, 3> v{mod(long(u) * q.a[0], q.r), mod(long(u) * q.a[1], q.r), mod(long(u) * q.a[2], q.r)};
        std::sort(v.begin(), v.end());
        bool term = false;
        std::array<int, 3> cand{};
        // Looking for {1, a, r-a} with gcd(a, r) = 1.
        for (int i = 0; i < 3 && !term; ++i) {
            if (v[i] != 1) continue;
            int b = v[(i + 1) % 3], c = v[(i + 2) % 3];
            if (b + c == q.r && std::gcd(b, q.r) == 1) {
                int a = std::min(b, c);
                cand = {1, a, q.r - a};
                term = true;
            }
        }
        if (term) {
            if (!found_terminal || cand < best) { best = cand; best_unit = u; }
            found_terminal = true;
        } else if (!found_terminal && (u == 1 || v < best)) {
            best = v;
            best_unit = u;
        }
    }
    out.type = QuotientSing{q.r, best};
    out.terminal = found_terminal;
    out.unit = best_unit;
    return out;
}

bool equivalent(const QuotientSing& a, const QuotientSing& b) {
    return a.r == b.r && normalize(a).type == normalize(b).type;
}

std::vector<Stratum> singular_strata(const WeightSystem& w) {
    std::vector<Stratum> out;
    int n = w.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Stratum s;
        int g = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                s.coords.push_back(i);
                g = std::gcd(g, w.weights[static_cast<std::size_t>(i)]);
            }
        if (g > 1) {
            s.r = g;
            out.push_back(std::move(s));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        return a.coords < b.coords;
    });
    return out;
}

IsolationNumbers isolation_numbers(const WeightSystem& w) {
    int n = w.size();
    auto a = [&](int i) { return w.weights[static_cast<std::size_t>(i)]; };
    IsolationNumbers out;
    out.a_j.assign(static_cast<std::size_t>(n), 0);
    out.a_jm.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    out.b_m.assign(static_cast<std::size_t>(n), 0);
    out.a_tilde = n == 1 ? a(0) : 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            int l = std::lcm(a(j), a(k));
            out.a_j[static_cast<std::size_t>(j)] = std::max(out.a_j[static_cast<std::size_t>(j)], l);
            out.a_tilde = std::max(out.a_tilde, l);
            for (int m = 0; m < n; ++m)
                if (m != j && m != k)
                    out.a_jm[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                        std::max(out.a_jm[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)], l);
            for (int m = 0; m < n; ++m)
                if (m != j && m != k)
                    out.b_m[static_cast<std::size_t>(m)] = std::max(out.b_m[static_cast<std::size_t>(m)], l);
        }
    return out;
}

}  // namespace qfano
