#include "delpezzo/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace delpezzo {

namespace {

using std::int64_t;

std::vector<std::vector<int64_t>> diag_gram(int rho) {
    std::vector<std::vector<int64_t>> g(rho, std::vector<int64_t>(rho, 0));
    g[0][0] = 1;
    for (int i = 1; i < rho; ++i)
        g[i][i] = -1;
    return g;
}

// Recursive search over the m_i for blow-up surfaces: the stored-coordinate
// Gram form is diag(1, -1, ..., -1), so the two conditions reduce to
// sum(m_i) = 3d - 1 and sum(m_i^2) = d^2 + 1.
void search_m(int n, int depth, int64_t sum_left, int64_t sq_left,
              const LatticeBox& box, CurveClass& cur,
              std::vector<CurveClass>& out) {
    const int slots = n - depth;
    if (slots == 0) {
        if (sum_left == 0 && sq_left == 0)
            out.push_back(cur);
        return;
    }
    if (sq_left < 0)
        return;
    // Range and Cauchy-Schwarz pruning.
    if (sum_left < slots * box.m_min || sum_left > slots * box.m_max)
        return;
    if (sum_left * sum_left > sq_left * slots)
        return;
    for (int64_t m = box.m_min; m <= box.m_max; ++m) {
        if (m * m > sq_left)
            continue;
        cur.coords[depth + 1] = m;
        search_m(n, depth + 1, sum_left - m, sq_left - m * m, box, cur, out);
    }
    cur.coords[depth + 1] = 0;
}

} // namespace

bool CurveClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](int64_t v) { return v == 0; });
}

CurveClass operator+(const CurveClass& x, const CurveClass& y) {
    CurveClass out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] += y.coords[i];
    return out;
}

CurveClass operator-(const CurveClass& x, const CurveClass& y) {
    CurveClass out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] -= y.coords[i];
    return out;
}

CurveClass operator*(int64_t k, const CurveClass& x) {
    CurveClass out = x;
    for (auto& v : out.coords)
        v *= k;
    return out;
}

std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
    os << "(";
    for (int i = 0; i < c.rank(); ++i)
        os << (i ? "," : "") << c.coords[i];
    return os << ")";
}

Surface Surface::projective_plane() {
    Surface s;
    s.kind_ = SurfaceKind::projective_plane;
    s.rho_ = 1;
    s.gram_ = {{1}};
    s.canonical_ = CurveClass{{-3}};
    s.mori_rays_ = {CurveClass{{1}}};
    s.nef_gens_ = {CurveClass{{1}}};
    s.name_ = "P2";
    return s;
}

Surface Surface::quadric_product() {
    Surface s;
    s.kind_ = SurfaceKind::quadric_product;
    s.rho_ = 2;
    s.gram_ = {{0, 1}, {1, 0}};
    s.canonical_ = CurveClass{{-2, -2}};
    s.mori_rays_ = {CurveClass{{1, 0}}, CurveClass{{0, 1}}};
    s.nef_gens_ = s.mori_rays_;
    s.name_ = "P1xP1";
    return s;
}

Surface Surface::blow_up(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("blow-up count must lie in 1..8");
    Surface s;
    s.kind_ = SurfaceKind::blow_up;
    s.n_ = n;
    s.rho_ = n + 1;
    s.gram_ = diag_gram(n + 1);

    s.canonical_ = CurveClass{std::vector<int64_t>(n + 1, -1)};
    s.canonical_.coords[0] = -3;

    s.nef_gens_.push_back(CurveClass{std::vector<int64_t>(n + 1, 0)});
    s.nef_gens_.back().coords[0] = 1; // H
    for (int i = 1; i <= n; ++i) {    // H - E_i
        CurveClass g{std::vector<int64_t>(n + 1, 0)};
        g.coords[0] = 1;
        g.coords[i] = 1;
        s.nef_gens_.push_back(g);
    }

    s.minus_one_ = minus_one_class_search(s, LatticeBox{}).classes;

    if (n == 1) {
        // E and H - E; the single (-1)-class does not span the cone.
        s.mori_rays_ = {CurveClass{{0, -1}}, CurveClass{{1, 1}}};
    } else {
        // Degree <= 7: the cone of curves is spanned by the (-1)-classes.
        s.mori_rays_ = s.minus_one_;
    }

    s.name_ = "dP:" + std::to_string(n);
    return s;
}

int64_t intersect(const Surface& s, const CurveClass& d1,
                  const CurveClass& d2) {
    if (d1.rank() != s.rho() || d2.rank() != s.rho())
        throw DimensionMismatch("curve class length does not match rho=" +
                                std::to_string(s.rho()));
    int64_t acc = 0;
    const auto& g = s.gram();
    for (int i = 0; i < s.rho(); ++i) {
        if (d1.coords[i] == 0)
            continue;
        for (int j = 0; j < s.rho(); ++j)
            acc += d1.coords[i] * g[i][j] * d2.coords[j];
    }
    return acc;
}

MinusOneSearch minus_one_class_search(const Surface& s, const LatticeBox& box) {
    MinusOneSearch result;
    switch (s.kind()) {
    case SurfaceKind::projective_plane:
        // d^2 = -1 has no integer solution.
        for (int64_t d = box.d_min; d <= box.d_max; ++d) {
            CurveClass c{{d}};
            if (intersect(s, c, c) == -1 &&
                intersect(s, c, s.canonical()) == -1)
                result.classes.push_back(c);
        }
        break;
    case SurfaceKind::quadric_product:
        // 2ab = -1 has no integer solution.
        for (int64_t a = box.d_min; a <= box.d_max; ++a)
            for (int64_t b = box.m_min; b <= box.m_max; ++b) {
                CurveClass c{{a, b}};
                if (intersect(s, c, c) == -1 &&
                    intersect(s, c, s.canonical()) == -1)
                    result.classes.push_back(c);
            }
        break;
    case SurfaceKind::blow_up: {
        const int n = s.blown_up_points();
        for (int64_t d = box.d_min; d <= box.d_max; ++d) {
            CurveClass cur{std::vector<int64_t>(n + 1, 0)};
            cur.coords[0] = d;
            // E.K = -1  <=>  sum m_i = 3d - 1;  E^2 = -1  <=>  sum m_i^2 = d^2 + 1.
            search_m(n, 0, 3 * d - 1, d * d + 1, box, cur, result.classes);
        }
        break;
    }
    }

    for (const CurveClass& c : result.classes) {
        if (c.coords[0] == box.d_min || c.coords[0] == box.d_max)
            result.touches_boundary = true;
        for (int i = 1; i < c.rank(); ++i)
            if (c.coords[i] == box.m_min || c.coords[i] == box.m_max)
                result.touches_boundary = true;
    }
    std::sort(result.classes.begin(), result.classes.end());
    return result;
}

std::vector<CurveClass> minus_one_classes(const Surface& s) {
    if (s.kind() == SurfaceKind::blow_up)
        return s.minus_one_cache();
    return minus_one_class_search(s, LatticeBox{}).classes;
}

bool is_nef(const Surface& s, const CurveClass& d) {
    for (const CurveClass& ray : s.mori_rays())
        if (intersect(s, d, ray) < 0)
            return false;
    return true;
}

bool is_ample(const Surface& s, const CurveClass& d) {
    for (const CurveClass& ray : s.mori_rays())
        if (intersect(s, d, ray) <= 0)
            return false;
    return intersect(s, d, d) > 0;
}

int64_t h0(const Surface& s, const CurveClass& d) {
    if (d.rank() != s.rho())
        throw DimensionMismatch("curve class length does not match rho=" +
                                std::to_string(s.rho()));
    const CurveClass anti_k = -1 * s.canonical();
    CurveClass cur = d;
    for (;;) {
        // D.(-K) drops by one per reduction step, so this terminates.
        if (intersect(s, cur, anti_k) < 0)
            return 0;
        const CurveClass* fixed = nullptr;
        for (const CurveClass& e : s.minus_one_cache()) {
            if (intersect(s, cur, e) < 0) {
                fixed = &e;
                break;
            }
        }
        if (!fixed)
            break;
        cur = cur - *fixed;
    }
    if (!is_nef(s, cur))
        return 0;
    const int64_t dd = intersect(s, cur, cur - s.canonical());
    return dd / 2 + 1;
}

int64_t dim_linear_system(const Surface& s, const CurveClass& d) {
    return h0(s, d) - 1;
}

int64_t arithmetic_genus(const Surface& s, const CurveClass& beta) {
    const int64_t prod = intersect(s, beta, beta + s.canonical());
    if (prod % 2 != 0)
        throw HalfIntegerGenus("beta(beta+K) is odd; not an honest curve class");
    return prod / 2 + 1;
}

} // namespace delpezzo
