#pragma once

// Bounded complexes of free graded modules over a QuotientRing, Koszul
// complexes, and per-weight cohomology.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crysalite/fieldlin.hpp"
#include "crysalite/polyring.hpp"

namespace crysalite {

/// Matrix of polynomials; column c maps to sum_r entry(r, c) * target_r.
class PolyMatrix {
public:
    PolyMatrix(Prime p, std::size_t nvars, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, MultiPoly value) { entries_.at(r * cols_ + c) = std::move(value); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MultiPoly> entries_;
};

/// Cohomological indexing: the differential of degree i maps term i to term i+1.
/// A generator of weight v in degree i is sent to sum_u entry * (generator of
/// weight u), so each nonzero entry is homogeneous of degree v - u.
class GradedFreeComplex {
public:
    GradedFreeComplex(std::shared_ptr<const QuotientRing> ring, std::map<int, std::vector<int>> terms,
                      std::map<int, PolyMatrix> differentials);

    const QuotientRing& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const QuotientRing>& ring_ptr() const noexcept { return ring_; }
    const std::map<int, std::vector<int>>& terms() const noexcept { return terms_; }
    std::span<const int> generator_weights(int degree) const;
    /// nullptr when the differential out of `degree` is absent (zero).
    const PolyMatrix* differential(int degree) const;

    /// Copy with one differential entry replaced.
    GradedFreeComplex with_entry(int degree, std::size_t row, std::size_t col, MultiPoly value) const;

    /// dim_k of term `degree` at `weight`.
    std::uint64_t term_dim(int degree, int weight) const;
    std::optional<int> max_generator_weight() const;

private:
    std::shared_ptr<const QuotientRing> ring_;
    std::map<int, std::vector<int>> terms_;
    std::map<int, PolyMatrix> differentials_;
};

/// The k-element subsets of {0..n-1}, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

/// Koszul complex on equal-degree homogeneous elements, in degrees [-r, 0].
/// Zero generators are allowed when `degree` supplies their common degree.
GradedFreeComplex koszul(std::span<const MultiPoly> gens, std::shared_ptr<const QuotientRing> ring,
                         std::optional<int> degree = std::nullopt);

struct ComplexCheck {
    bool ok = true;
    std::vector<std::string> problems;
    explicit operator bool() const noexcept { return ok; }
};

/// d o d == 0 in the ring, and every entry has the degree its weights demand.
ComplexCheck complex_check(const GradedFreeComplex& c);

/// (cohomological degree, weight) -> dim_k H.
struct CohomologyTable {
    std::map<std::pair<int, int>, std::uint64_t> entries;  // nonzero only
    int w_max = -1;
    std::map<int, bool> complete;  // per degree: no support beyond w_max

    std::uint64_t at(int degree, int weight) const;
    HilbertTable degree(int degree) const;
    std::uint64_t total(int degree) const;
    bool has_degree(int degree) const;
    bool empty() const noexcept { return entries.empty(); }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    /// Reindex: degree i becomes i + s.
    CohomologyTable shifted(int s) const;

    bool same_entries(const CohomologyTable& o) const { return entries == o.entries; }
    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// The F_p matrix of the degree-`degree` differential restricted to weight w.
FpMatrix weight_block(const GradedFreeComplex& c, int degree, int w);

/// The same block as sparse columns, one per source basis element.
std::vector<SparseVector> weight_block_columns(const GradedFreeComplex& c, int degree, int w);

/// Largest per-weight term dimension cohomology_table will work with.
constexpr std::uint64_t kMaxWeightDim = std::uint64_t{1} << 20;

/// Per-weight cohomology for weights in [0, w_max]. Throws
/// std::invalid_argument when complex_check fails and std::length_error when a
/// term exceeds kMaxWeightDim at some weight.
CohomologyTable cohomology_table(const GradedFreeComplex& c, int w_max);

/// Per weight, sum (-1)^i dim H^i == sum (-1)^i dim C^i, for all w <= table.w_max.
bool euler_balanced(const GradedFreeComplex& c, const CohomologyTable& t);

}  // namespace crysalite
