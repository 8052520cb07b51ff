#include "bell/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace bell {
namespace {

// Working state during enumeration: wstate = -1 when some site factor
// |a|+|b| is zero (W = 0), otherwise the count j of sites with |a|+|b| = 2
// (W = 2^(j-n)).  (re, im) is the Gaussian-integer product.
struct Acc {
    int wstate;
    int re;
    int im;
};

// The 9 per-site outcome pairs.
constexpr std::array<std::pair<int, int>, 9> kSiteAlphabet = {{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

struct DedupGrid {
    int n;
    int bound;      // |re|,|im| <= bound
    int side;
    std::vector<uint8_t> seen;
    std::vector<uint32_t> touched;

    explicit DedupGrid(int n_)
        : n(n_),
          bound(1 << ((n_ + 1) / 2)),
          side(2 * bound + 1),
          seen(static_cast<size_t>(n_ + 2) * side * side, 0) {}

    uint32_t index(const Acc& a) const {
        return static_cast<uint32_t>(
            (static_cast<size_t>(a.wstate + 1) * side + (a.re + bound)) * side + (a.im + bound));
    }

    bool insert(const Acc& a) {
        uint32_t i = index(a);
        if (seen[i]) return false;
        seen[i] = 1;
        touched.push_back(i);
        return true;
    }

    void clear() {
        for (uint32_t i : touched) seen[i] = 0;
        touched.clear();
    }
};

void enumerate_direct(int n, int depth, Acc acc, DedupGrid& grid, std::vector<Acc>& out) {
    if (depth == n) {
        if (grid.insert(acc)) out.push_back(acc);
        return;
    }
    for (auto [a, b] : kSiteAlphabet) {
        int s = (a != 0 ? 1 : 0) + (b != 0 ? 1 : 0);
        Acc next;
        next.wstate = (acc.wstate < 0 || s == 0) ? -1 : acc.wstate + (s == 2 ? 1 : 0);
        next.re = acc.re * a - acc.im * b;
        next.im = acc.re * b + acc.im * a;
        enumerate_direct(n, depth + 1, next, grid, out);
    }
}

MomentPoint to_point(int n, const Acc& a) {
    MomentPoint p;
    if (a.wstate < 0) {
        p.w = Rational(0);
    } else {
        p.w = Rational(1, 1LL << (n - a.wstate));
    }
    p.re_z = a.re;
    p.im_z = a.im;
    return p;
}

bool point_less(const MomentPoint& x, const MomentPoint& y) {
    if (x.w != y.w) return x.w < y.w;
    if (x.re_z != y.re_z) return x.re_z < y.re_z;
    return x.im_z < y.im_z;
}

}  // namespace

MomentPoint moment_of(const DeterministicStrategy& s) {
    s.validate();
    Acc acc{0, 1, 0};
    for (auto [a, b] : s.assignments) {
        int f = (a != 0 ? 1 : 0) + (b != 0 ? 1 : 0);
        acc.wstate = (acc.wstate < 0 || f == 0) ? -1 : acc.wstate + (f == 2 ? 1 : 0);
        int re = acc.re * a - acc.im * b;
        int im = acc.re * b + acc.im * a;
        acc.re = re;
        acc.im = im;
    }
    return to_point(s.sites(), acc);
}

bool MomentPointSet::contains(const MomentPoint& p) const {
    return std::binary_search(points.begin(), points.end(), p, point_less);
}

MomentPointSet enumerate_moment_points(SiteCount sc, EnumerationMode mode) {
    const int n = sc.n;
    if (mode == EnumerationMode::Direct && n > 8)
        throw capacity_error("direct enumeration supports n <= 8");
    if (n > 16) throw capacity_error("dp enumeration supports n <= 16");

    DedupGrid grid(n);
    std::vector<Acc> states;

    if (mode == EnumerationMode::Direct) {
        enumerate_direct(n, 0, Acc{0, 1, 0}, grid, states);
    } else {
        states.push_back(Acc{0, 1, 0});
        for (int site = 0; site < n; ++site) {
            std::vector<Acc> next;
            next.reserve(states.size() * 4);
            grid.clear();
            for (const Acc& acc : states) {
                for (auto [a, b] : kSiteAlphabet) {
                    int s = (a != 0 ? 1 : 0) + (b != 0 ? 1 : 0);
                    Acc t;
                    t.wstate = (acc.wstate < 0 || s == 0) ? -1 : acc.wstate + (s == 2 ? 1 : 0);
                    t.re = acc.re * a - acc.im * b;
                    t.im = acc.re * b + acc.im * a;
                    if (grid.insert(t)) next.push_back(t);
                }
            }
            states = std::move(next);
        }
    }

    MomentPointSet result;
    result.n = n;
    result.points.reserve(states.size());
    for (const Acc& a : states) result.points.push_back(to_point(n, a));
    std::sort(result.points.begin(), result.points.end(), point_less);
    return result;
}

}  // namespace bell
