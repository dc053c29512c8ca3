#include "delpezzo/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace delpezzo {

namespace {

using std::int64_t;

// Enumerates candidate summands beta1 with 0 <= beta1 . N <= beta . N for
// every nef generator N, calling fn on each. For blow-ups the generators
// {H, H - E_i} translate to d in [0, beta.H] and m_i in [d - beta.(H-E_i), d].
template <typename Fn>
void for_each_candidate(const Surface& s, const CurveClass& beta, Fn&& fn) {
    switch (s.kind()) {
    case SurfaceKind::projective_plane: {
        const int64_t d = beta.coords[0];
        for (int64_t a = 0; a <= d; ++a)
            fn(CurveClass{{a}});
        break;
    }
    case SurfaceKind::quadric_product: {
        for (int64_t a = 0; a <= beta.coords[0]; ++a)
            for (int64_t b = 0; b <= beta.coords[1]; ++b)
                fn(CurveClass{{a, b}});
        break;
    }
    case SurfaceKind::blow_up: {
        const int n = s.blown_up_points();
        const int64_t d_top = beta.coords[0];
        std::vector<int64_t> slack(n);
        for (int i = 0; i < n; ++i)
            slack[i] = beta.coords[0] - beta.coords[i + 1]; // beta.(H-E_i)
        CurveClass cur{std::vector<int64_t>(n + 1, 0)};
        for (int64_t d = 0; d <= d_top; ++d) {
            cur.coords[0] = d;
            // depth-first over m_1..m_n
            std::vector<int64_t> m(n);
            auto rec = [&](auto&& self, int depth) -> void {
                if (depth == n) {
                    fn(cur);
                    return;
                }
                const int64_t lo = d - slack[depth];
                for (int64_t v = lo; v <= d; ++v) {
                    cur.coords[depth + 1] = v;
                    self(self, depth + 1);
                }
            };
            rec(rec, 0);
        }
        break;
    }
    }
}

} // namespace

CodimResult integral_complement_codim(const Surface& s, const CurveClass& beta) {
    if (!is_ample(s, beta))
        throw NotAmple("class is not ample");
    const int64_t dim_beta = dim_linear_system(s, beta);
    if (dim_beta < 1)
        throw EmptyLinearSystem("dim|beta| must be at least 1");

    CodimResult best;
    int64_t best_sum = -1;
    for_each_candidate(s, beta, [&](const CurveClass& beta1) {
        if (beta1.is_zero())
            return;
        const CurveClass beta2 = beta - beta1;
        if (beta2.is_zero())
            return;
        if (beta2 < beta1)
            return; // unordered pairs once, beta1 <= beta2 lexicographically
        const int64_t h1 = h0(s, beta1);
        if (h1 <= 0)
            return;
        const int64_t h2 = h0(s, beta2);
        if (h2 <= 0)
            return;
        const int64_t sum = (h1 - 1) + (h2 - 1);
        if (sum > best_sum) {
            best_sum = sum;
            best.beta1 = beta1;
            best.beta2 = beta2;
        }
    });

    if (best_sum < 0)
        return best; // no decomposition: Infinite
    best.value = dim_beta - best_sum;
    if (*best.value < 1)
        throw std::logic_error(
            "codimension below 1 for an ample class; pairing data is broken");
    return best;
}

std::optional<int64_t> n1(const Surface& s, const CurveClass& beta) {
    const CodimResult c = integral_complement_codim(s, beta);
    if (c.infinite())
        return std::nullopt;
    return 2 * *c.value - 2;
}

std::int64_t n2(const Surface& s, const CurveClass& beta) {
    if (!is_ample(s, beta))
        throw NotAmple("class is not ample");
    const int64_t pairing_bound = -intersect(s, beta, s.canonical()) - 1;
    const auto first = n1(s, beta);
    if (!first)
        return pairing_bound;
    return std::min(*first, pairing_bound);
}

std::int64_t n_bound(const Surface& s, const CurveClass& beta) {
    const int64_t genus_bound = intersect(s, beta, beta + s.canonical()) + 2;
    return std::min(n2(s, beta), genus_bound);
}

} // namespace delpezzo
