#include "crysalite/cotangent.hpp"

#include <algorithm>

namespace crysalite {

std::string to_string(HypothesisError::Kind kind) {
    switch (kind) {
        case HypothesisError::Kind::NotSmooth: return "NotSmooth";
        case HypothesisError::Kind::CharacteristicDividesDegree: return "CharacteristicDividesDegree";
        case HypothesisError::Kind::IndexTooSmall: return "IndexTooSmall";
        case HypothesisError::Kind::NotSingular: return "NotSingular";
    }
    return "Unknown";
}

GradedFreeComplex wedge_complex(const HypersurfaceRing& r, int n) {
    if (n < 0) throw std::invalid_argument("wedge power index must be nonnegative");
    const auto V = r.nvars();
    const int d = r.degree();
    const Prime p = r.prime();
    const int top = std::min<int>(n, static_cast<int>(V));
    const auto df = partials(r.f());

    std::map<int, std::vector<std::vector<std::size_t>>> bases;
    std::map<int, std::vector<int>> terms;
    for (int j = 0; j <= top; ++j) {
        bases[j] = index_subsets(V, static_cast<std::size_t>(j));
        terms[j] = std::vector<int>(bases[j].size(), (n - j) * d + j);
    }
    std::map<int, PolyMatrix> diffs;
    for (int j = 0; j < top; ++j) {
        const auto& from = bases[j];
        const auto& to = bases[j + 1];
        PolyMatrix m(p, V, to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            for (std::size_t k = 0; k < V; ++k) {
                if (std::binary_search(from[c].begin(), from[c].end(), k)) continue;
                // dx_I ^ dx_k = (-1)^{#{i in I : i > k}} dx_{I+k}
                const auto after = std::count_if(from[c].begin(), from[c].end(), [k](std::size_t i) { return i > k; });
                auto merged = from[c];
                merged.insert(std::upper_bound(merged.begin(), merged.end(), k), k);
                const auto row =
                    static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), merged) - to.begin());
                m.set(row, c, after % 2 == 0 ? df[k] : df[k].scaled(p.neg(1)));
            }
        }
        diffs.emplace(j, std::move(m));
    }
    return GradedFreeComplex(r.ring(), std::move(terms), std::move(diffs));
}

int default_weight_cutoff(const HypersurfaceRing& r, int n_max) {
    const int d = r.degree();
    const int V = static_cast<int>(r.nvars());
    return std::max(n_max, 0) * d + std::max(0, (d - 2) * V) + d;
}

CohomologyTable wedge_cohomology(const HypersurfaceRing& r, int n, std::optional<int> w_max) {
    const int cutoff = w_max.value_or(default_weight_cutoff(r, n));
    auto table = cohomology_table(wedge_complex(r, n), cutoff);
    const int V = static_cast<int>(r.nvars());
    if (n >= V && !r.p_divides_d() && cutoff >= n * r.degree() + r.degree()) {
        if (jacobian_profile(r).smooth)
            for (auto& [deg, complete] : table.complete) complete = true;
    }
    return table;
}

CohomologyTable closed_form_wedge(const HypersurfaceRing& r, int n) {
    const int V = static_cast<int>(r.nvars());
    const int d = r.degree();
    if (r.p_divides_d())
        throw HypothesisError(HypothesisError::Kind::CharacteristicDividesDegree,
                              "closed form needs p not dividing d (p=" + std::to_string(r.prime().value()) +
                                  ", d=" + std::to_string(d) + ")");
    if (n <= V - 1)
        throw HypothesisError(HypothesisError::Kind::IndexTooSmall,
                              "closed form needs n > N = V-1 (n=" + std::to_string(n) + ", V=" + std::to_string(V) + ")");
    const auto prof = jacobian_profile(r);
    if (!prof.smooth || !prof.finite_length)
        throw HypothesisError(HypothesisError::Kind::NotSmooth,
                              "closed form needs f to define a smooth projective hypersurface");

    const int base = V * (d - 1) - n * d;
    CohomologyTable t;
    t.w_max = n * d + d;
    for (const auto& [w, dim] : prof.m_table.twist(base).dims) t.entries.emplace(std::make_pair(V, w), dim);
    for (const auto& [w, dim] : prof.m_table.twist(base - d).dims) t.entries.emplace(std::make_pair(V - 1, w), dim);
    for (int deg = 0; deg <= std::min(n, V); ++deg) t.complete[deg] = true;
    return t;
}

SpecialFiberProfile special_fiber_dims(int embdim, int relation_rank, int n) {
    if (embdim < 0 || n < 0) throw std::invalid_argument("embedding dimension and n must be nonnegative");
    if (relation_rank < 1) throw std::invalid_argument("relation rank must be at least 1");
    SpecialFiberProfile prof{embdim, relation_rank, n, {}};
    for (int a = 0; a <= std::min(embdim, n); ++a) {
        const std::uint64_t dim = binomial(embdim, a) * binomial(n - a + relation_rank - 1, relation_rank - 1);
        if (dim) prof.dims.emplace(-n + a, dim);
    }
    return prof;
}

WedgeFlags wedge_flags(const HypersurfaceRing& r, int n, std::optional<int> w_max) {
    const int V = static_cast<int>(r.nvars());
    if (r.degree() < 2)
        throw HypothesisError(HypothesisError::Kind::NotSingular, "f is linear; the origin is a smooth point");
    if (n <= V)
        throw HypothesisError(HypothesisError::Kind::IndexTooSmall,
                              "needs n > embedding dimension (n=" + std::to_string(n) + ", V=" + std::to_string(V) + ")");
    const auto table = wedge_cohomology(r, n, w_max);
    WedgeFlags flags;
    flags.n = n;
    flags.embdim = V;
    flags.top_nonzero = table.has_degree(V);
    for (int i = 1; i <= V; ++i) {
        if (table.has_degree(V - i)) {
            flags.second_index = i;
            break;
        }
    }
    flags.bottom_vanishes = !table.has_degree(0);
    return flags;
}

}  // namespace crysalite
