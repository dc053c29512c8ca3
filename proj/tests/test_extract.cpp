#include <doctest.h>

#include <random>

#include "delpezzo/extract.hpp"

using namespace delpezzo;

namespace {

// Reapply the defining relation to an extracted table:
// b_m(C^[k]) = sum over i+j <= k, j >= 0 of n^{i, m-i-2j}.
Int reconstruct_betti(const ExtractionResult& result, int k, int m) {
    auto lookup = [&](int i, int j) -> Int {
        const auto in_table = result.table.entries.find({i, j});
        if (in_table != result.table.entries.end())
            return in_table->second;
        const auto extra = result.unverified.find({i, j});
        if (extra != result.unverified.end())
            return extra->second;
        return 0;
    };
    Int acc = 0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) {
            const int second = m - i - 2 * j;
            if (second >= 0)
                acc += lookup(i, second);
        }
    return acc;
}

} // namespace

TEST_CASE("worked rows over the plane sextic") {
    const Surface p2 = Surface::projective_plane();
    const CurveClass beta{{6}};
    const BettiInput input = betti_input_from_formula(p2, beta);
    CHECK(input.k_max == 8);
    CHECK(input.m_max == 8);

    // Base row: C^[0] is a projective space.
    CHECK(input.b.at({0, 2}) == 1);
    CHECK(input.b.at({0, 3}) == 0);

    const ExtractionResult result = extract_bps(input);

    // l = 0: n^{0,m} = b_m(C^[0]).
    for (int m = 0; m <= 8; ++m)
        CHECK(result.table.at(0, m) == (m % 2 == 0 ? 1 : 0));

    // l = 1, m = 2: b_2(C^[1]) - b_2(C^[0]) - n^{0,0} = 2 - 1 - 1 = 0.
    CHECK(input.b.at({1, 2}) == 2);
    CHECK(result.table.at(1, 1) == 0);

    // l = 2, m = 2: b_2(C^[2]) - b_2(C^[1]) = 3 - 2 = 1; lower-row
    // corrections vanish because their second index is negative.
    CHECK(input.b.at({2, 2}) == 3);
    CHECK(result.table.at(2, 0) == 1);
}

TEST_CASE("extraction errors") {
    BettiInput input;
    input.k_max = 1;
    input.m_max = 2;
    input.b[{0, 0}] = 1;
    input.b[{0, 1}] = 0;
    input.b[{0, 2}] = 1;
    input.b[{1, 2}] = 2;
    // (1, 1) missing but required for the l = 1 row
    CHECK_THROWS_AS(extract_bps(input), IncompleteInput);

    input.b[{1, 1}] = 0;
    CHECK_NOTHROW(extract_bps(input));

    // A drop from row 0 to row 1 forces a negative invariant.
    input.b[{1, 2}] = 0;
    CHECK_THROWS_AS(extract_bps(input), NegativeInvariant);
}

TEST_CASE("roundtrip against the formula route") {
    const Surface p2 = Surface::projective_plane();
    {
        const RoundtripReport report = roundtrip_verify(p2, CurveClass{{6}});
        CHECK(report.bound == 8);
        CHECK(report.all_ok);
        CHECK(report.cells.size() == 45); // all (i,j) with i+j <= 8
    }
    {
        const RoundtripReport report =
            roundtrip_verify(Surface::quadric_product(), CurveClass{{4, 4}});
        CHECK(report.bound == 6);
        CHECK(report.all_ok);
    }
    {
        // N(2H) = 0: the single cell (0,0) with value 1.
        const RoundtripReport report = roundtrip_verify(p2, CurveClass{{2}});
        CHECK(report.bound == 0);
        REQUIRE(report.cells.size() == 1);
        CHECK(report.cells[0].expected == 1);
        CHECK(report.all_ok);
    }
}

TEST_CASE("property: roundtrip holds on random small ample classes") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<std::int64_t> small(1, 5);
    const Surface quad = Surface::quadric_product();
    const Surface bl1 = Surface::blow_up(1);
    int done = 0;
    while (done < 10) {
        const bool on_quad = (done % 2 == 0);
        const Surface& s = on_quad ? quad : bl1;
        CurveClass beta;
        if (on_quad)
            beta.coords = {small(rng), small(rng)};
        else
            beta.coords = {small(rng) + 2, small(rng) % 3};
        if (!is_ample(s, beta))
            continue;
        ++done;
        CHECK(roundtrip_verify(s, beta).all_ok);
    }
}

TEST_CASE("property: extracted values telescope back to the input") {
    const Surface quad = Surface::quadric_product();
    const CurveClass beta{{3, 5}};
    const BettiInput input = betti_input_from_formula(quad, beta);
    const ExtractionResult result = extract_bps(input);
    for (const auto& [key, value] : input.b) {
        const auto [k, m] = key;
        CHECK(reconstruct_betti(result, k, m) == value);
        (void)value;
    }
}

TEST_CASE("property: order of columns within a row does not matter") {
    const Surface p2 = Surface::projective_plane();
    const BettiInput input = betti_input_from_formula(p2, CurveClass{{5}});
    const ExtractionResult result = extract_bps(input);

    // Recompute every row with the column order reversed.
    for (int l = 0; l <= input.k_max; ++l) {
        for (int m = input.m_max; m >= l; --m) {
            Int value = input.b.at({l, m});
            if (l > 0)
                value -= input.b.at({l - 1, m});
            for (int i = 0; i < l; ++i) {
                const int jj = m + i - 2 * l;
                if (jj < 0)
                    continue;
                const auto in_table = result.table.entries.find({i, jj});
                value -= in_table != result.table.entries.end()
                             ? in_table->second
                             : result.unverified.at({i, jj});
            }
            const auto in_table = result.table.entries.find({l, m - l});
            const Int& stored = in_table != result.table.entries.end()
                                    ? in_table->second
                                    : result.unverified.at({l, m - l});
            CHECK(stored == value);
        }
    }
}
