#include "crysalite/komplex.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "crysalite/parallel.hpp"

namespace crysalite {

PolyMatrix::PolyMatrix(Prime p, std::size_t nvars, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(p, nvars)) {}

GradedFreeComplex::GradedFreeComplex(std::shared_ptr<const QuotientRing> ring,
                                     std::map<int, std::vector<int>> terms,
                                     std::map<int, PolyMatrix> differentials)
    : ring_(std::move(ring)), terms_(std::move(terms)), differentials_(std::move(differentials)) {
    if (!ring_) throw std::invalid_argument("complex needs a ring");
    if (!terms_.empty()) {
        const int lo = terms_.begin()->first, hi = terms_.rbegin()->first;
        if (static_cast<std::size_t>(hi - lo + 1) != terms_.size())
            throw std::invalid_argument("complex degrees must form an interval");
    }
    for (const auto& [deg, weights] : terms_)
        for (int w : weights)
            if (w < 0) throw std::invalid_argument("generator weights must be nonnegative");
    for (const auto& [deg, m] : differentials_) {
        const auto src = generator_weights(deg), dst = generator_weights(deg + 1);
        if (m.cols() != src.size() || m.rows() != dst.size()) {
            std::ostringstream os;
            os << "differential in degree " << deg << " has shape " << m.rows() << "x" << m.cols()
               << ", expected " << dst.size() << "x" << src.size();
            throw std::invalid_argument(os.str());
        }
    }
}

std::span<const int> GradedFreeComplex::generator_weights(int degree) const {
    auto it = terms_.find(degree);
    if (it == terms_.end()) return {};
    return it->second;
}

const PolyMatrix* GradedFreeComplex::differential(int degree) const {
    auto it = differentials_.find(degree);
    return it == differentials_.end() ? nullptr : &it->second;
}

GradedFreeComplex GradedFreeComplex::with_entry(int degree, std::size_t row, std::size_t col,
                                                MultiPoly value) const {
    auto diffs = differentials_;
    auto it = diffs.find(degree);
    if (it == diffs.end()) {
        PolyMatrix zero(ring_->prime(), ring_->nvars(), generator_weights(degree + 1).size(),
                        generator_weights(degree).size());
        it = diffs.emplace(degree, std::move(zero)).first;
    }
    it->second.set(row, col, std::move(value));
    return GradedFreeComplex(ring_, terms_, std::move(diffs));
}

std::uint64_t GradedFreeComplex::term_dim(int degree, int weight) const {
    std::uint64_t total = 0;
    for (int g : generator_weights(degree)) total += ring_->dim(weight - g);
    return total;
}

std::optional<int> GradedFreeComplex::max_generator_weight() const {
    std::optional<int> top;
    for (const auto& [deg, ws] : terms_)
        for (int w : ws) top = top ? std::max(*top, w) : w;
    return top;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

GradedFreeComplex koszul(std::span<const MultiPoly> gens, std::shared_ptr<const QuotientRing> ring,
                         std::optional<int> degree) {
    const Prime p = ring->prime();
    const std::size_t nv = ring->nvars();
    for (const auto& g : gens) {
        if (!(g.prime() == p) || g.nvars() != nv)
            throw PolyError(PolyError::Kind::Mismatch, "Koszul generators over a different ring");
        if (g.is_zero()) continue;
        const auto e = g.homogeneous_degree();
        if (!e) throw PolyError(PolyError::Kind::NotHomogeneous, "Koszul generators must be homogeneous");
        if (!degree) degree = *e;
        if (*degree != *e) throw std::invalid_argument("Koszul generators must share one degree");
    }
    if (!degree) {
        if (!gens.empty()) throw std::invalid_argument("degree of all-zero Koszul generators must be given");
        degree = 0;
    }
    const std::size_t r = gens.size();
    std::map<int, std::vector<int>> terms;
    std::map<int, std::vector<std::vector<std::size_t>>> bases;
    for (std::size_t j = 0; j <= r; ++j) {
        const int deg = -static_cast<int>(j);
        bases[deg] = index_subsets(r, j);
        terms[deg] = std::vector<int>(bases[deg].size(), static_cast<int>(j) * *degree);
    }
    std::map<int, PolyMatrix> diffs;
    for (std::size_t j = 1; j <= r; ++j) {
        const int src = -static_cast<int>(j);
        const auto& from = bases[src];
        const auto& to = bases[src + 1];
        PolyMatrix m(p, nv, to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            for (std::size_t t = 0; t < from[c].size(); ++t) {
                auto face = from[c];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
                const auto row = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), face) - to.begin());
                const auto& g = gens[from[c][t]];
                m.set(row, c, t % 2 == 0 ? g : g.scaled(p.neg(1)));
            }
        }
        diffs.emplace(src, std::move(m));
    }
    return GradedFreeComplex(std::move(ring), std::move(terms), std::move(diffs));
}

ComplexCheck complex_check(const GradedFreeComplex& c) {
    ComplexCheck result;
    const auto& ring = c.ring();
    auto report = [&](const std::string& msg) {
        result.ok = false;
        result.problems.push_back(msg);
    };
    for (const auto& [deg, ws] : c.terms()) {
        const PolyMatrix* d = c.differential(deg);
        if (!d) continue;
        const auto src = c.generator_weights(deg);
        const auto dst = c.generator_weights(deg + 1);
        for (std::size_t r = 0; r < d->rows(); ++r) {
            for (std::size_t col = 0; col < d->cols(); ++col) {
                const auto& e = d->at(r, col);
                if (e.is_zero()) continue;
                const auto hd = e.homogeneous_degree();
                if (!hd || *hd != src[col] - dst[r]) {
                    std::ostringstream os;
                    os << "degree " << deg << " entry (" << r << "," << col << ") is not homogeneous of degree "
                       << src[col] - dst[r];
                    report(os.str());
                }
            }
        }
        const PolyMatrix* next = c.differential(deg + 1);
        if (!next) continue;
        for (std::size_t r = 0; r < next->rows(); ++r) {
            for (std::size_t col = 0; col < d->cols(); ++col) {
                MultiPoly sum(ring.prime(), ring.nvars());
                for (std::size_t k = 0; k < d->rows(); ++k) {
                    const auto& a = next->at(r, k);
                    const auto& b = d->at(k, col);
                    if (!a.is_zero() && !b.is_zero()) sum += a * b;
                }
                if (!ring.is_zero(sum)) {
                    std::ostringstream os;
                    os << "composite of degrees " << deg << "," << deg + 1 << " is nonzero at (" << r << "," << col
                       << ")";
                    report(os.str());
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

std::uint64_t CohomologyTable::at(int degree, int weight) const {
    auto it = entries.find({degree, weight});
    return it == entries.end() ? 0 : it->second;
}

HilbertTable CohomologyTable::degree(int deg) const {
    HilbertTable t;
    for (auto it = entries.lower_bound({deg, INT_MIN}); it != entries.end() && it->first.first == deg; ++it)
        t.add(it->first.second, it->second);
    t.computed_up_to = w_max;
    auto c = complete.find(deg);
    t.finite_support = c != complete.end() && c->second;
    return t;
}

std::uint64_t CohomologyTable::total(int deg) const { return degree(deg).total(); }

bool CohomologyTable::has_degree(int deg) const {
    auto it = entries.lower_bound({deg, INT_MIN});
    return it != entries.end() && it->first.first == deg;
}

std::optional<int> CohomologyTable::min_degree() const {
    if (entries.empty()) return std::nullopt;
    return entries.begin()->first.first;
}

std::optional<int> CohomologyTable::max_degree() const {
    if (entries.empty()) return std::nullopt;
    return entries.rbegin()->first.first;
}

CohomologyTable CohomologyTable::shifted(int s) const {
    CohomologyTable out;
    out.w_max = w_max;
    for (const auto& [k, v] : entries) out.entries.emplace(std::make_pair(k.first + s, k.second), v);
    for (const auto& [d, v] : complete) out.complete.emplace(d + s, v);
    return out;
}

std::vector<SparseVector> weight_block_columns(const GradedFreeComplex& c, int degree, int w) {
    const auto& ring = c.ring();
    const auto src = c.generator_weights(degree);
    const auto dst = c.generator_weights(degree + 1);
    std::vector<std::size_t> row_off(dst.size() + 1, 0);
    for (std::size_t i = 0; i < dst.size(); ++i) row_off[i + 1] = row_off[i] + ring.dim(w - dst[i]);
    std::vector<SparseVector> cols;
    const PolyMatrix* d = c.differential(degree);
    for (std::size_t g = 0; g < src.size(); ++g) {
        if (w - src[g] < 0) continue;
        const auto& mons = ring.basis(w - src[g]).monomials;
        const std::size_t first = cols.size();
        cols.resize(first + mons.size());
        if (!d || row_off.back() == 0) continue;
        for (std::size_t h = 0; h < dst.size(); ++h) {
            const auto& entry = d->at(h, g);
            if (entry.is_zero() || w - dst[h] < 0) continue;
            const auto& target = ring.basis(w - dst[h]);
            for (std::size_t k = 0; k < mons.size(); ++k) {
                const MultiPoly image = ring.normal_form(entry.times_monomial(mons[k], 1));
                auto& col = cols[first + k];
                for (const auto& [e, coeff] : image.terms())
                    col.emplace_back(static_cast<std::uint32_t>(row_off[h] + target.index.at(e)), coeff);
            }
        }
    }
    for (auto& col : cols) std::sort(col.begin(), col.end());
    return cols;
}

FpMatrix weight_block(const GradedFreeComplex& c, int degree, int w) {
    const auto cols = weight_block_columns(c, degree, w);
    FpMatrix m(c.ring().prime(), c.term_dim(degree + 1, w), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, x] : cols[j]) m.set(i, j, x);
    return m;
}

CohomologyTable cohomology_table(const GradedFreeComplex& c, int w_max) {
    if (const auto check = complex_check(c); !check) {
        std::string msg = "not a complex of graded modules:";
        for (const auto& p : check.problems) msg += "\n  " + p;
        throw std::invalid_argument(msg);
    }
    CohomologyTable table;
    table.w_max = w_max;
    if (c.terms().empty() || w_max < 0) return table;

    const int lo = c.terms().begin()->first, hi = c.terms().rbegin()->first;
    const std::size_t nweights = static_cast<std::size_t>(w_max) + 1;
    const std::size_t ndeg = static_cast<std::size_t>(hi - lo + 1);
    // Warm the basis cache so workers only read it.
    for (int w = 0; w <= w_max; ++w) c.ring().basis(w);
    for (int deg = lo; deg <= hi; ++deg) {
        for (int w = 0; w <= w_max; ++w) {
            if (c.term_dim(deg, w) > kMaxWeightDim) {
                std::ostringstream os;
                os << "term " << deg << " has dimension " << c.term_dim(deg, w) << " at weight " << w
                   << ", over the limit; lower the weight cutoff";
                throw std::length_error(os.str());
            }
        }
    }
    std::vector<std::uint64_t> ranks(ndeg * nweights, 0);
    parallel_for(ndeg * nweights, [&](std::size_t task) {
        const int deg = lo + static_cast<int>(task / nweights);
        const int w = static_cast<int>(task % nweights);
        if (c.differential(deg))
            ranks[task] = sparse_rank(c.ring().prime(), c.term_dim(deg + 1, w), weight_block_columns(c, deg, w));
    });
    auto rank_at = [&](int deg, int w) -> std::uint64_t {
        if (deg < lo || deg > hi) return 0;
        return ranks[static_cast<std::size_t>(deg - lo) * nweights + static_cast<std::size_t>(w)];
    };
    const auto top = c.ring().top_weight();
    for (int deg = lo; deg <= hi; ++deg) {
        for (int w = 0; w <= w_max; ++w) {
            const std::uint64_t dim = c.term_dim(deg, w) - rank_at(deg, w) - rank_at(deg - 1, w);
            if (dim) table.entries.emplace(std::make_pair(deg, w), dim);
        }
        const auto ws = c.generator_weights(deg);
        bool complete = ws.empty();
        if (!complete && top) complete = *std::max_element(ws.begin(), ws.end()) + *top <= w_max;
        table.complete[deg] = complete;
    }
    return table;
}

bool euler_balanced(const GradedFreeComplex& c, const CohomologyTable& t) {
    for (int w = 0; w <= t.w_max; ++w) {
        std::int64_t chain = 0, coh = 0;
        for (const auto& [deg, ws] : c.terms()) {
            const auto sign = deg % 2 == 0 ? 1 : -1;
            chain += sign * static_cast<std::int64_t>(c.term_dim(deg, w));
            coh += sign * static_cast<std::int64_t>(t.at(deg, w));
        }
        if (chain != coh) return false;
    }
    return true;
}

}  // namespace crysalite
