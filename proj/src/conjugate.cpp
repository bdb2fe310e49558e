#include "crysalite/conjugate.hpp"

#include <set>
#include <stdexcept>

namespace crysalite {

bool low_degree_check(long long N, long long d) { return N * (d - 2) < d + 2; }

bool weight_overlap(long long N, long long d, long long n, long long j) {
    if (j >= n) throw std::invalid_argument("weight_overlap needs j < n");
    return (n + 1 - j) * d <= (d - 2) * (N + 1);
}

std::string to_string(SplittingLicense::Kind kind) {
    switch (kind) {
        case SplittingLicense::Kind::FrobeniusLiftToric: return "FrobeniusLiftToric";
        case SplittingLicense::Kind::LowDegreeCone: return "LowDegreeCone";
        case SplittingLicense::Kind::Unverified: return "Unverified";
    }
    return "Unverified";
}

std::optional<SplittingLicense::Kind> license_kind_from_string(const std::string& s) {
    for (auto k : {SplittingLicense::Kind::FrobeniusLiftToric, SplittingLicense::Kind::LowDegreeCone,
                   SplittingLicense::Kind::Unverified})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

SplittingLicense splitting_license(const HypersurfaceRing& r) {
    const auto prof = jacobian_profile(r);
    SplittingLicense lic;
    lic.projective_dim = static_cast<int>(r.nvars()) - 1;
    lic.degree = r.degree();
    lic.smooth = prof.smooth;
    lic.p_divides_d = prof.p_divides_d;
    lic.low_degree = low_degree_check(lic.projective_dim, lic.degree);
    const std::string ineq = std::to_string(lic.projective_dim) + "*(" + std::to_string(lic.degree) + "-2) < " +
                             std::to_string(lic.degree) + "+2";
    if (r.f().is_monomial()) {
        lic.kind = SplittingLicense::Kind::FrobeniusLiftToric;
        lic.witness = "monomial " + r.poly_text();
    } else if (lic.smooth && !lic.p_divides_d && lic.low_degree) {
        lic.kind = SplittingLicense::Kind::LowDegreeCone;
        lic.witness = ineq + " holds; smooth; p does not divide d";
    } else {
        lic.kind = SplittingLicense::Kind::Unverified;
        std::string why;
        if (!lic.smooth) why += "; not smooth";
        if (lic.p_divides_d) why += "; p divides d";
        if (!lic.low_degree) why += "; " + ineq + " fails";
        lic.witness = "no splitting hypothesis verified" + why;
    }
    return lic;
}

ConjugateReport crys_dimensions(const HypersurfaceRing& r, int n_max, std::optional<int> w_max) {
    const int V = static_cast<int>(r.nvars());
    if (n_max < V)
        throw std::invalid_argument("n_max must be at least the variable count " + std::to_string(V));
    ConjugateReport rep;
    rep.prime = r.prime().value();
    rep.vars = r.vars();
    rep.poly = r.poly_text();
    rep.degree = r.degree();
    rep.embdim = r.embdim();
    rep.krull_dim = r.krull_dim();
    rep.n_max = n_max;
    rep.w_max = w_max.value_or(default_weight_cutoff(r, n_max));
    rep.license = splitting_license(r);
    rep.conditional = rep.license.kind == SplittingLicense::Kind::Unverified;

    std::set<int> degrees;
    for (int n = 0; n <= n_max; ++n) {
        ConjugatePiece piece{n, wedge_cohomology(r, n, rep.w_max), false};
        piece.below_threshold = rep.license.kind == SplittingLicense::Kind::LowDegreeCone && n <= rep.krull_dim;
        for (const auto& [key, dim] : piece.table.entries) {
            rep.totals[key.first].add(key.second, dim);
            degrees.insert(key.first);
        }
        rep.pieces.push_back(std::move(piece));
    }
    for (auto& [deg, t] : rep.totals) {
        t.computed_up_to = rep.w_max;
        t.finite_support = false;
    }
    for (int deg : degrees) {
        auto& run = rep.cumulative[deg];
        std::uint64_t acc = 0;
        for (const auto& piece : rep.pieces) {
            acc += piece.table.total(deg);
            run.push_back(acc);
        }
    }
    return rep;
}

GrowthCertificate infinite_generation_certificate(const HypersurfaceRing& r, int n_max) {
    const int V = static_cast<int>(r.nvars());
    if (r.degree() < 2)
        throw HypothesisError(HypothesisError::Kind::NotSingular, "f is linear; the origin is a smooth point");
    if (n_max <= V)
        throw HypothesisError(HypothesisError::Kind::IndexTooSmall,
                              "certificate needs n_max > V (n_max=" + std::to_string(n_max) +
                                  ", V=" + std::to_string(V) + ")");
    const auto rep = crys_dimensions(r, n_max);

    GrowthCertificate cert;
    cert.top_degree = V;
    cert.n_max = n_max;
    cert.w_max = rep.w_max;
    cert.license = rep.license;
    cert.conditional = rep.conditional;
    cert.first_n = V;

    const auto& probe = rep.pieces.at(static_cast<std::size_t>(V + 1)).table;
    cert.second_index = V;
    for (int i = 1; i <= V; ++i) {
        if (probe.has_degree(V - i)) {
            cert.second_index = i;
            break;
        }
    }
    cert.second_degree = V - cert.second_index;

    auto increments = [&](int deg) {
        std::vector<std::uint64_t> inc;
        auto it = rep.cumulative.find(deg);
        for (int n = cert.first_n; n <= n_max; ++n) {
            if (it == rep.cumulative.end()) {
                inc.push_back(0);
                continue;
            }
            const auto& run = it->second;
            inc.push_back(run[static_cast<std::size_t>(n)] - (n > 0 ? run[static_cast<std::size_t>(n - 1)] : 0));
        }
        return inc;
    };
    auto positive = [](const std::vector<std::uint64_t>& v) {
        for (auto x : v)
            if (x == 0) return false;
        return !v.empty();
    };
    cert.top_increments = increments(cert.top_degree);
    cert.second_increments = increments(cert.second_degree);
    cert.top_strictly_increasing = positive(cert.top_increments);
    cert.second_strictly_increasing = positive(cert.second_increments);

    const auto prof = jacobian_profile(r);
    cert.milnor = prof.milnor;
    if (prof.smooth && prof.finite_length && !prof.p_divides_d) {
        bool equal = true;
        for (auto x : cert.top_increments) equal = equal && x == *prof.milnor;
        for (auto x : cert.second_increments) equal = equal && x == *prof.milnor;
        cert.increments_equal_milnor = equal;
    }
    return cert;
}

}  // namespace crysalite
