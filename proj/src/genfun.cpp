#include "delpezzo/genfun.hpp"

#include <stdexcept>
#include <string>

namespace delpezzo {

namespace {

void check_rho(int rho) {
    if (rho < 1 || rho > 9)
        throw InvalidRho("rho must lie in 1..9, got " + std::to_string(rho));
}

void check_cap(int cap) {
    if (cap < 0)
        throw std::invalid_argument("series cap must be nonnegative");
    if (cap > max_series_cap)
        throw std::invalid_argument("series cap exceeds the limit " +
                                    std::to_string(max_series_cap));
}

} // namespace

ProductForm t_form(int rho, int cap) {
    check_rho(rho);
    check_cap(cap);
    ProductForm form;
    form.degree_cap = cap;
    for (int k = 2; k <= cap; k += 2)
        form.factors.push_back({Monomial{k, 0}, -(rho + 1)});
    for (int k = 4; k <= cap; k += 2)
        form.factors.push_back({Monomial{k, 0}, -1});
    return form;
}

ProductForm h_form(int rho, int cap) {
    check_rho(rho);
    check_cap(cap);
    ProductForm form;
    form.degree_cap = cap;
    if (rho >= 2 && cap >= 2)
        form.factors.push_back({Monomial{1, 1}, -(rho - 1)});
    for (int i = 0; 2 * i + 2 <= cap; ++i) {
        form.factors.push_back({Monomial{i + 2, i}, -1});   // (qt)^i q^2
        form.factors.push_back({Monomial{i, i + 2}, -1});   // (qt)^i t^2
    }
    for (int i = 0; 2 * i + 4 <= cap; ++i)
        form.factors.push_back({Monomial{i + 2, i + 2}, -rho}); // (qt)^{i+2}
    return form;
}

namespace {

ProductForm g_form_factors(int rho, int cap) {
    ProductForm form;
    form.degree_cap = cap;
    for (int i = 1; 3 * i - 2 <= cap; ++i)
        form.factors.push_back({Monomial{2 * i - 2, i}, -1});
    for (int i = 1; 3 * i <= cap; ++i)
        form.factors.push_back({Monomial{2 * i, i}, -rho});
    for (int i = 1; 3 * i + 2 <= cap; ++i)
        form.factors.push_back({Monomial{2 * i + 2, i}, -1});
    return form;
}

} // namespace

ProductForm g_form(int rho, int cap) {
    check_rho(rho);
    check_cap(cap);
    return g_form_factors(rho, cap);
}

BiSeries t_series(int rho, int cap) { return expand(t_form(rho, cap), cap); }
BiSeries h_series(int rho, int cap) { return expand(h_form(rho, cap), cap); }
BiSeries g_series(int rho, int cap) { return expand(g_form(rho, cap), cap); }

ProductForm g_change_of_variables_form(int rho, int cap) {
    check_rho(rho);
    check_cap(cap);
    // A (z,w)-factor z^s w^m substitutes to q^m t^{s-m} of total degree s.
    // Within the three factor families, s + m <= (3s + 2) / 2, so every
    // substituted factor of degree <= cap comes from a source factor of
    // degree <= 3*cap/2 + 2. Materialize that far before substituting.
    const int source_cap = (3 * cap) / 2 + 2;
    ProductForm g = g_form_factors(rho, source_cap);
    g.factors.push_back({Monomial{0, 1}, +1});  // * (1 - w)
    g.factors.push_back({Monomial{2, 0}, -1});  // / (1 - z^2)
    ProductForm sub = substitute_factorwise(normalized(g));
    sub.degree_cap = cap;
    return trimmed(sub, cap);
}

ProductForm h_over_one_minus_qt_form(int rho, int cap) {
    ProductForm form = h_form(rho, cap);
    if (cap >= 2)
        form.factors.push_back({Monomial{1, 1}, -1});
    return normalized(form);
}

std::string route_name(Route r) {
    switch (r) {
    case Route::formula:
        return "formula";
    case Route::extraction:
        return "extraction";
    case Route::chern_count:
        return "chern-count";
    }
    return "unknown";
}

const Int& BpsTable::at(int i, int j) const {
    const auto it = entries.find({i, j});
    if (it == entries.end())
        throw OutOfStableRange("no entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") within bound " +
                               std::to_string(bound));
    return it->second;
}

Int refined_bps(const Surface& s, const CurveClass& beta, int i, int j) {
    if (!is_ample(s, beta))
        throw NotAmple("class is not ample");
    if (i < 0 || j < 0)
        throw std::invalid_argument("indices must be nonnegative");
    const std::int64_t bound = n_bound(s, beta);
    if (i + j > bound)
        throw OutOfStableRange("i+j = " + std::to_string(i + j) +
                               " exceeds N(beta) = " + std::to_string(bound));
    return coeff(h_series(s.rho(), i + j), i, j);
}

Int stable_ih_betti(const Surface& s, const CurveClass& beta, int k) {
    if (!is_ample(s, beta))
        throw NotAmple("class is not ample");
    if (k < 0)
        throw std::invalid_argument("degree must be nonnegative");
    const std::int64_t bound = n_bound(s, beta);
    if (k > bound)
        throw OutOfStableRange("k = " + std::to_string(k) +
                               " exceeds N(beta) = " + std::to_string(bound));
    return coeff(t_series(s.rho(), k), k, 0);
}

Int hilb_betti(const Surface& s, int n, int degree) {
    if (n < 0 || degree < 0)
        throw std::invalid_argument("hilb_betti arguments must be nonnegative");
    return coeff(g_series(s.rho(), degree + n), degree, n);
}

Int relhilb_betti(const Surface& s, const CurveClass& beta, int k, int i) {
    if (k < 0 || i < 0)
        throw std::invalid_argument("relhilb_betti arguments must be "
                                    "nonnegative");
    const auto first = n1(s, beta);
    if (first && i > *first)
        throw OutOfStableRange("Betti degree exceeds N1(beta)");
    if (k > n2(s, beta))
        throw OutOfStableRange("point count exceeds N2(beta)");
    const std::int64_t fiber_dim = dim_linear_system(s, beta) - k;
    if (fiber_dim < 0)
        throw OutOfStableRange("point count exceeds dim|beta|");

    // Betti numbers of S^[k] x P^{fiber_dim}.
    const BiSeries g = g_series(s.rho(), i + k);
    Int acc = 0;
    for (std::int64_t j = 0; j <= fiber_dim && 2 * j <= i; ++j)
        acc += coeff(g, static_cast<int>(i - 2 * j), k);
    return acc;
}

std::int64_t relhilb_dim(const Surface& s, const CurveClass& beta, int k) {
    return dim_linear_system(s, beta) + k;
}

BpsTable bps_table(const Surface& s, const CurveClass& beta) {
    if (!is_ample(s, beta))
        throw NotAmple("class is not ample");
    BpsTable table;
    table.surface = s.name();
    table.beta = beta;
    table.bound = n_bound(s, beta);
    table.route = Route::formula;
    const int cap = static_cast<int>(table.bound);
    const BiSeries h = h_series(s.rho(), cap);
    for (int d = 0; d <= cap; ++d)
        for (int j = 0; j <= d; ++j)
            table.entries[{d - j, j}] = h.raw(d - j, j);
    return table;
}

} // namespace delpezzo
