// Del Pezzo surfaces as Picard-lattice data: intersection pairing, canonical
// class, (-1)-classes, nef/ample tests, and section counts h^0.
//
// Coordinate convention for blow-ups of the plane: a class is stored as
// (d, m_1, ..., m_n) and means d*H - sum_i m_i E_i. The exceptional curve
// E_i itself therefore has m_i = -1. All stability bounds downstream depend
// on this sign choice.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "delpezzo/errors.hpp"

namespace delpezzo {

enum class SurfaceKind { projective_plane, blow_up, quadric_product };

struct CurveClass {
    std::vector<std::int64_t> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    auto operator<=>(const CurveClass&) const = default;
};

CurveClass operator+(const CurveClass& x, const CurveClass& y);
CurveClass operator-(const CurveClass& x, const CurveClass& y);
CurveClass operator*(std::int64_t k, const CurveClass& x);
std::ostream& operator<<(std::ostream& os, const CurveClass& c);

class Surface {
public:
    static Surface projective_plane();
    static Surface blow_up(int n); // 1 <= n <= 8
    static Surface quadric_product();

    SurfaceKind kind() const { return kind_; }
    int blown_up_points() const { return n_; }
    int rho() const { return rho_; }

    const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
    const CurveClass& canonical() const { return canonical_; }
    const std::vector<CurveClass>& mori_rays() const { return mori_rays_; }

    // Nef classes {H} / {H, H-E_i} / {H_1, H_2} that bound every effective
    // class from below; used to cut out finite enumeration boxes.
    const std::vector<CurveClass>& nef_generators() const { return nef_gens_; }

    // Cached (-1)-classes; empty for the plane and the quadric product.
    const std::vector<CurveClass>& minus_one_cache() const { return minus_one_; }

    // Spec string "P2" | "P1xP1" | "dP:<n>".
    const std::string& name() const { return name_; }

private:
    Surface() = default;

    SurfaceKind kind_ = SurfaceKind::projective_plane;
    int n_ = 0;
    int rho_ = 1;
    std::vector<std::vector<std::int64_t>> gram_;
    CurveClass canonical_;
    std::vector<CurveClass> mori_rays_;
    std::vector<CurveClass> nef_gens_;
    std::vector<CurveClass> minus_one_;
    std::string name_;
};

// Gram-form pairing D1 . D2. Throws DimensionMismatch if a coordinate
// length differs from rho.
std::int64_t intersect(const Surface& s, const CurveClass& d1,
                       const CurveClass& d2);

// Search window for the (-1)-class enumeration, in stored coordinates.
struct LatticeBox {
    std::int64_t d_min = 0, d_max = 7;   // H coefficient
    std::int64_t m_min = -1, m_max = 7;  // each m_i
};

struct MinusOneSearch {
    std::vector<CurveClass> classes;
    // True when some solution has a coordinate on the box boundary; a clean
    // enlarged-box run certifies that the default window misses nothing.
    bool touches_boundary = false;
};

// Exhaustive search for classes E with E^2 = -1 and E.K = -1 inside the box.
MinusOneSearch minus_one_class_search(const Surface& s, const LatticeBox& box);

// All (-1)-classes, from the default search window.
std::vector<CurveClass> minus_one_classes(const Surface& s);

// D nef: D.C >= 0 for every Mori ray; ample additionally needs strict
// positivity and D^2 > 0.
bool is_nef(const Surface& s, const CurveClass& d);
bool is_ample(const Surface& s, const CurveClass& d);

// h^0(O_S(D)) by fixed-part reduction: subtract (-1)-classes that pair
// negatively until none does, then evaluate Riemann-Roch on the nef result.
// Total function: classes with no sections return 0.
std::int64_t h0(const Surface& s, const CurveClass& d);

// dim |D| = h^0(D) - 1; -1 means the linear system is empty.
std::int64_t dim_linear_system(const Surface& s, const CurveClass& d);

// Arithmetic genus beta(beta+K)/2 + 1. Throws HalfIntegerGenus when the
// product is odd.
std::int64_t arithmetic_genus(const Surface& s, const CurveClass& beta);

} // namespace delpezzo
