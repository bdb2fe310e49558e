#include "crysalite/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "crysalite/conjugate.hpp"
#include "crysalite/cotangent.hpp"
#include "crysalite/parallel.hpp"
#include "crysalite/report_io.hpp"

namespace crysalite::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::uint32_t prime = 0;
    std::string vars;
    std::string poly;
    int n_max = 0;
    std::optional<int> w_max;
    int n = -1;
    long long big_n = 0;
    long long d = 0;
    std::string format = "json";
};

void add_ring_flags(CLI::App* app, Flags& f) {
    app->add_option("--prime", f.prime, "prime characteristic p")->required();
    app->add_option("--vars", f.vars, "comma-separated variable names")->required();
    app->add_option("--poly", f.poly, "homogeneous polynomial f")->required();
}

void add_format_flag(CLI::App* app, Flags& f) {
    app->add_option("--format", f.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

HypersurfaceRing make_ring(const Flags& f) {
    const Prime p(f.prime);
    return HypersurfaceRing::parse(p, split_var_list(f.vars), f.poly);
}

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    return Format::Json;
}

RingSummary summary(const HypersurfaceRing& r) {
    return RingSummary{r.prime().value(), r.vars(), r.poly_text(), r.degree()};
}

int do_analyze(const Flags& f, std::ostream& out) {
    const auto ring = make_ring(f);
    if (f.n_max < 1) throw InputError("--nmax must be at least 1");
    if (f.n_max < static_cast<int>(ring.nvars()))
        throw InputError("--nmax must be at least the number of variables (" + std::to_string(ring.nvars()) + ")");
    if (f.w_max && *f.w_max < 0) throw InputError("--wmax must be nonnegative");
    const auto rep = crys_dimensions(ring, f.n_max, f.w_max);
    switch (parse_format(f.format)) {
        case Format::Json: out << report_to_json(rep).dump(2) << '\n'; break;
        case Format::Csv: out << report_to_csv(rep); break;
        case Format::Table: out << report_to_table(rep); break;
    }
    return kExitOk;
}

int do_closed_form(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto ring = make_ring(f);
    if (f.n < 0) throw InputError("--n must be nonnegative");
    const auto closed = closed_form_wedge(ring, f.n);
    const auto direct = wedge_cohomology(ring, f.n, closed.w_max);
    if (direct.same_entries(closed)) {
        out << "MATCH\n";
        return kExitOk;
    }
    out << "MISMATCH\n";
    err << "direct and closed-form tables differ for n=" << f.n << '\n';
    return kExitHypothesis;
}

int do_koszul(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto ring = make_ring(f);
    if (ring.p_divides_d())
        throw HypothesisError(HypothesisError::Kind::CharacteristicDividesDegree,
                              "Koszul splitting needs p not dividing d");
    const auto prof = jacobian_profile(ring);
    if (!prof.smooth || !prof.finite_length)
        throw HypothesisError(HypothesisError::Kind::NotSmooth, "Koszul splitting needs a smooth hypersurface");
    const int d = ring.degree();
    const int V = static_cast<int>(ring.nvars());
    const auto table = cohomology_table(koszul(partials(ring.f()), ring.ring(), d - 1),
                                        std::max(0, (d - 2) * V) + d + V * (d - 1));
    const bool ok = table.degree(0).dims == prof.m_table.dims &&
                    table.degree(-1).dims == prof.m_table.twist(-d).dims &&
                    table.min_degree().value_or(0) >= -1;
    out << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) err << "Koszul cohomology differs from M + M(-d)[1]\n";
    return ok ? kExitOk : kExitHypothesis;
}

int do_euler(const Flags& f, std::ostream& out) {
    const auto ring = make_ring(f);
    out << (euler_identity_check(ring.f()) ? "true" : "false") << '\n';
    return kExitOk;
}

int do_special_fiber(const Flags& f, bool have_poly, std::ostream& out, std::ostream& err) {
    if (f.n < 0) throw InputError("--n is required and must be nonnegative");
    if (!have_poly) {
        if (f.big_n < 0) throw InputError("--N must be nonnegative");
        const auto prof = special_fiber_dims(static_cast<int>(f.big_n), 1, f.n);
        for (const auto& [deg, dim] : prof.dims) out << deg << ' ' << dim << '\n';
        return kExitOk;
    }
    const auto ring = make_ring(f);
    const auto C = wedge_complex(ring, f.n);
    const auto fiber = special_fiber_dims(static_cast<int>(ring.nvars()), 1, f.n);
    std::map<int, std::uint64_t> ranks;
    for (const auto& [deg, ws] : C.terms())
        if (!ws.empty()) ranks[deg - f.n] = ws.size();
    bool ok = ranks == fiber.dims;
    if (ring.degree() >= 2) {
        for (const auto& [deg, ws] : C.terms()) {
            const auto* m = C.differential(deg);
            if (!m) continue;
            for (std::size_t r = 0; r < m->rows(); ++r)
                for (std::size_t c = 0; c < m->cols(); ++c)
                    if (!m->at(r, c).is_zero() && m->at(r, c).homogeneous_degree() != ring.degree() - 1) ok = false;
        }
    }
    out << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) err << "term ranks differ from the special fiber dimensions\n";
    return ok ? kExitOk : kExitHypothesis;
}

int do_certificate(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto ring = make_ring(f);
    if (f.n_max < 1) throw InputError("--nmax must be at least 1");
    const auto cert = infinite_generation_certificate(ring, f.n_max);
    if (cert.conditional)
        err << "warning: conditional certificate: " << cert.license.witness
            << "; growth is graded-piece lower-bound data only\n";
    const auto s = summary(ring);
    switch (parse_format(f.format)) {
        case Format::Json: out << certificate_to_json(s, cert).dump(2) << '\n'; break;
        case Format::Csv: out << certificate_to_csv(s, cert); break;
        case Format::Table: out << certificate_to_table(s, cert); break;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conjugate-filtration crystalline cohomology dimensions of graded hypersurface germs over F_p",
                 "crysalite"};
    app.require_subcommand(1);
    Flags f;

    auto* analyze = app.add_subcommand("analyze", "per-piece and total dimension tables");
    add_ring_flags(analyze, f);
    analyze->add_option("--nmax", f.n_max, "largest conjugate piece n")->required();
    analyze->add_option("--wmax", f.w_max, "largest weight (default: derived)");
    add_format_flag(analyze, f);

    auto* verify = app.add_subcommand("verify", "individual checks");
    verify->require_subcommand(1);
    auto* closed = verify->add_subcommand("wedge-closed-form", "direct wedge^n L against the Jacobian-ring closed form");
    add_ring_flags(closed, f);
    closed->add_option("--n", f.n, "wedge power")->required();
    auto* low = verify->add_subcommand("low-degree", "N(d-2) < d+2");
    low->add_option("--N", f.big_n, "projective dimension N")->required();
    low->add_option("--d", f.d, "degree d")->required();
    auto* kos = verify->add_subcommand("koszul", "Koszul complex on the partials is M + M(-d)[1]");
    add_ring_flags(kos, f);
    auto* euler = verify->add_subcommand("euler", "d*f == sum x_i df/dx_i");
    add_ring_flags(euler, f);
    auto* fiber = verify->add_subcommand("special-fiber", "term ranks against wedge^n L (x) k");
    auto* fiber_prime = fiber->add_option("--prime", f.prime, "prime characteristic p");
    auto* fiber_vars = fiber->add_option("--vars", f.vars, "comma-separated variable names");
    auto* fiber_poly = fiber->add_option("--poly", f.poly, "homogeneous polynomial f");
    fiber_poly->needs(fiber_prime)->needs(fiber_vars);
    auto* fiber_big_n = fiber->add_option("--N", f.big_n, "embedding dimension (without --poly)");
    fiber_big_n->excludes(fiber_poly);
    fiber->add_option("--n", f.n, "wedge power")->required();

    auto* report = app.add_subcommand("report", "reports");
    report->require_subcommand(1);
    auto* cert = report->add_subcommand("certificate", "infinite-generation certificate");
    add_ring_flags(cert, f);
    cert->add_option("--nmax", f.n_max, "largest conjugate piece n")->required();
    add_format_flag(cert, f);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        worker_count();
        if (*analyze) return do_analyze(f, out);
        if (*closed) return do_closed_form(f, out, err);
        if (*low) {
            if (f.big_n < 1 || f.d < 1) throw InputError("--N and --d must be positive");
            out << (low_degree_check(f.big_n, f.d) ? "true" : "false") << '\n';
            return kExitOk;
        }
        if (*kos) return do_koszul(f, out, err);
        if (*euler) return do_euler(f, out);
        if (*fiber) {
            if (!*fiber_poly && !*fiber_big_n) throw InputError("special-fiber needs --poly or --N");
            return do_special_fiber(f, static_cast<bool>(*fiber_poly), out, err);
        }
        if (*cert) return do_certificate(f, out, err);
    } catch (const HypothesisError& e) {
        err << "hypothesis violated (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const PolyError& e) {
        err << "error in --poly/--vars: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    err << "error: no command\n";
    return kExitInput;
}

}  // namespace crysalite::cli
