#pragma once

// Conjugate-filtration bookkeeping for H^*_crys(Spec A / k).
//
// gr_n of the conjugate filtration is wedge^n L[-n]; when the filtration
// splits, H^i_crys is the direct sum over n of H^i(wedge^n L[-n]). The
// splitting is never constructed here. It is licensed either by a Frobenius
// lift (f a monomial, so A is toric) or, for n > dim A, by the weight
// disjointness available for low-degree cones. Everything else is reported
// as conditional.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crysalite/cotangent.hpp"
#include "crysalite/komplex.hpp"
#include "crysalite/polyring.hpp"

namespace crysalite {

/// N(d-2) < d+2, with N the dimension of the projective space P^N.
bool low_degree_check(long long N, long long d);

/// Whether M' and M'((n+1-j)d) can share a weight, i.e. (n+1-j)d <= (d-2)(N+1).
/// Throws std::invalid_argument when j >= n.
bool weight_overlap(long long N, long long d, long long n, long long j);

struct SplittingLicense {
    enum class Kind { FrobeniusLiftToric, LowDegreeCone, Unverified };

    Kind kind = Kind::Unverified;
    std::string witness;
    int projective_dim = 0;  // N = V - 1
    int degree = 0;
    bool smooth = false;
    bool p_divides_d = false;
    bool low_degree = false;

    friend bool operator==(const SplittingLicense&, const SplittingLicense&) = default;
};

std::string to_string(SplittingLicense::Kind kind);
std::optional<SplittingLicense::Kind> license_kind_from_string(const std::string& s);

SplittingLicense splitting_license(const HypersurfaceRing& r);

struct ConjugatePiece {
    int n = 0;
    CohomologyTable table;  // wedge^n L[-n]
    bool below_threshold = false;

    friend bool operator==(const ConjugatePiece&, const ConjugatePiece&) = default;
};

struct ConjugateReport {
    std::uint32_t prime = 0;
    std::vector<std::string> vars;
    std::string poly;
    int degree = 0;
    int embdim = 0;
    int krull_dim = 0;
    int n_max = 0;
    int w_max = 0;
    SplittingLicense license;
    bool conditional = true;
    std::vector<ConjugatePiece> pieces;                     // n = 0..n_max
    std::map<int, HilbertTable> totals;                     // cohdeg -> weights, summed over pieces
    std::map<int, std::vector<std::uint64_t>> cumulative;  // cohdeg -> running total after piece n

    friend bool operator==(const ConjugateReport&, const ConjugateReport&) = default;
};

/// Requires n_max >= V. w_max defaults to default_weight_cutoff(r, n_max).
ConjugateReport crys_dimensions(const HypersurfaceRing& r, int n_max, std::optional<int> w_max = std::nullopt);

struct GrowthCertificate {
    int top_degree = 0;     // V
    int second_degree = 0;  // V - i
    int second_index = 0;   // i
    int first_n = 0;        // increments cover n = first_n..n_max
    int n_max = 0;
    int w_max = 0;
    std::vector<std::uint64_t> top_increments;
    std::vector<std::uint64_t> second_increments;
    bool top_strictly_increasing = false;
    bool second_strictly_increasing = false;
    std::optional<std::uint64_t> milnor;
    std::optional<bool> increments_equal_milnor;  // smooth, p not dividing d
    SplittingLicense license;
    bool conditional = true;  // license is Unverified: graded-piece data only

    friend bool operator==(const GrowthCertificate&, const GrowthCertificate&) = default;
};

/// Growth of the cumulative dimensions in degrees V and V-i for V-1 < n <= n_max.
/// Throws HypothesisError(NotSingular) for d = 1 and IndexTooSmall for n_max <= V.
GrowthCertificate infinite_generation_certificate(const HypersurfaceRing& r, int n_max);

}  // namespace crysalite
