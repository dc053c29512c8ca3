#include "delpezzo/extract.hpp"

#include <algorithm>
#include <string>

namespace delpezzo {

namespace {

const Int& input_cell(const BettiInput& input, int k, int m) {
    const auto it = input.b.find({k, m});
    if (it == input.b.end())
        throw IncompleteInput("missing Betti cell (k=" + std::to_string(k) +
                              ", m=" + std::to_string(m) + ")");
    return it->second;
}

} // namespace

BettiInput betti_input_from_formula(const Surface& s, const CurveClass& beta) {
    const std::int64_t bound = n_bound(s, beta);
    BettiInput input;
    input.k_max = static_cast<int>(std::min(bound, n2(s, beta)));
    const auto first = n1(s, beta);
    input.m_max =
        static_cast<int>(first ? std::min(bound, *first) : bound);
    for (int k = 0; k <= input.k_max; ++k)
        for (int m = 0; m <= input.m_max; ++m)
            input.b[{k, m}] = relhilb_betti(s, beta, k, m);
    return input;
}

ExtractionResult extract_bps(const BettiInput& input) {
    ExtractionResult result;
    result.table.bound = std::min(input.k_max, input.m_max);
    result.table.route = Route::extraction;

    // rows[l] holds n^{l, j} for j = m - l >= 0, indexed by j.
    std::vector<std::vector<Int>> rows(input.k_max + 1);

    for (int l = 0; l <= input.k_max; ++l) {
        rows[l].assign(std::max(0, input.m_max - l + 1), Int(0));
        for (int m = l; m <= input.m_max; ++m) {
            Int value = input_cell(input, l, m);
            if (l > 0)
                value -= input_cell(input, l - 1, m);
            // Subtract the lower rows' contributions n^{i, m+i-2l}.
            for (int i = 0; i < l; ++i) {
                const int jj = m + i - 2 * l;
                if (jj >= 0)
                    value -= rows[i][jj];
            }
            if (sgn(value) < 0)
                throw NegativeInvariant(
                    "extracted n^{" + std::to_string(l) + "," +
                    std::to_string(m - l) +
                    "} is negative; the Betti input is inconsistent");
            rows[l][m - l] = value;
            const int i = l, j = m - l;
            if (i + j <= result.table.bound)
                result.table.entries[{i, j}] = value;
            else
                result.unverified[{i, j}] = value;
        }
    }
    return result;
}

RoundtripReport roundtrip_verify_input(const Surface& s, const CurveClass& beta,
                                       const BettiInput& input) {
    const std::int64_t bound = n_bound(s, beta);
    const ExtractionResult extracted = extract_bps(input);

    RoundtripReport report;
    report.bound = bound;
    const int cap = static_cast<int>(bound);
    const BiSeries h = h_series(s.rho(), cap);
    for (const auto& [key, value] : extracted.table.entries) {
        const auto [i, j] = key;
        if (i + j > cap)
            continue;
        RoundtripCell cell;
        cell.i = i;
        cell.j = j;
        cell.expected = h.raw(i, j);
        cell.actual = value;
        cell.ok = (cell.expected == cell.actual);
        if (!cell.ok)
            report.all_ok = false;
        report.cells.push_back(cell);
    }
    return report;
}

RoundtripReport roundtrip_verify(const Surface& s, const CurveClass& beta) {
    return roundtrip_verify_input(s, beta, betti_input_from_formula(s, beta));
}

} // namespace delpezzo
