#pragma once

// Wedge powers of the cotangent complex of a graded hypersurface A = S/(f).
//
// L_{A/k} is the two-term complex (f)/(f^2) -> Omega^1_S (x) A sending f to df.
// Trivializing Gamma^i((f)/(f^2)) by gamma_i(f), wedge^n L[-n] is the complex
//
//     Gamma^n(L) -> Gamma^{n-1}(L) (x) E -> ... -> Gamma^{n-j}(L) (x) wedge^j E -> ...
//
// in degrees 0..min(n, V), with E = A(-1)^V and differential w -> w ^ df.
// Term j is free on the j-subsets of {0..V-1}, all of weight (n-j)d + j.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "crysalite/komplex.hpp"
#include "crysalite/polyring.hpp"

namespace crysalite {

/// A hypothesis of the hypersurface wedge-power theorems that does not hold.
class HypothesisError : public std::runtime_error {
public:
    enum class Kind { NotSmooth, CharacteristicDividesDegree, IndexTooSmall, NotSingular };

    HypothesisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

std::string to_string(HypothesisError::Kind kind);

GradedFreeComplex wedge_complex(const HypersurfaceRing& r, int n);

/// Weight cutoff that contains every finite-support piece n <= n_max:
/// n_max*d + (d-2)V + d.
int default_weight_cutoff(const HypersurfaceRing& r, int n_max);

/// Cohomology of wedge_complex(r, n) in wedge^n L[-n] indexing (degrees 0..V).
/// Use .shifted(-n) for wedge^n L indexing. When r is smooth with p not
/// dividing d and n > V-1, the cohomology is a pair of twists of the Jacobian
/// ring, and every degree is flagged complete once w_max >= n*d + d.
CohomologyTable wedge_cohomology(const HypersurfaceRing& r, int n, std::optional<int> w_max = std::nullopt);

/// M(V(d-1) - nd) in degree V plus M(V(d-1) - nd - d) in degree V-1.
/// Throws HypothesisError unless r is smooth, p does not divide d and n >= V.
CohomologyTable closed_form_wedge(const HypersurfaceRing& r, int n);

/// Cohomology dimensions of wedge^n L (x)_A k for an lci ring of embedding
/// dimension embdim and relation rank r.
struct SpecialFiberProfile {
    int embdim = 0;
    int relation_rank = 1;
    int n = 0;
    std::map<int, std::uint64_t> dims;  // degree -n+a -> C(embdim, a) * C(n-a+r-1, r-1), nonzero only

    friend bool operator==(const SpecialFiberProfile&, const SpecialFiberProfile&) = default;
};

SpecialFiberProfile special_fiber_dims(int embdim, int relation_rank, int n);

struct WedgeFlags {
    int n = 0;
    int embdim = 0;
    bool top_nonzero = false;         // H^{-n+V}(wedge^n L) != 0
    std::optional<int> second_index;  // smallest 0 < i <= V with H^{-n+V-i} != 0
    bool bottom_vanishes = false;     // H^{-n}(wedge^n L) == 0
};

/// Requires n > V and d >= 2.
WedgeFlags wedge_flags(const HypersurfaceRing& r, int n, std::optional<int> w_max = std::nullopt);

}  // namespace crysalite
