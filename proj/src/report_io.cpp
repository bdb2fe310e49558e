#include "crysalite/report_io.hpp"

#include <climits>
#include <iomanip>
#include <sstream>

namespace crysalite {

const char* const kCoefficientNote =
    "All dimensions are over k = F_p. W-coefficient groups and their p-torsion are not computed; "
    "mod-p crystalline cohomology is what these tables certify.";

namespace {

ordered_json weights_object(const HilbertTable& t) {
    ordered_json o = ordered_json::object();
    for (const auto& [w, d] : t.dims) o[std::to_string(w)] = d;
    return o;
}

int parse_int_key(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer key '" + s + "'");
    return v;
}

}  // namespace

ordered_json report_to_json(const ConjugateReport& rep) {
    ordered_json j;
    j["prime"] = rep.prime;
    j["vars"] = rep.vars;
    j["poly"] = rep.poly;
    j["degree"] = rep.degree;
    j["embdim"] = rep.embdim;
    j["krull_dim"] = rep.krull_dim;
    j["n_max"] = rep.n_max;
    j["w_max"] = rep.w_max;
    j["license"] = to_string(rep.license.kind);
    j["license_witness"] = rep.license.witness;

    ordered_json pieces = ordered_json::array();
    for (const auto& piece : rep.pieces) {
        ordered_json pj;
        pj["n"] = piece.n;
        pj["below_threshold"] = piece.below_threshold;
        ordered_json complete = ordered_json::object();
        for (const auto& [deg, c] : piece.table.complete) complete[std::to_string(deg)] = c;
        pj["complete"] = complete;
        ordered_json entries = ordered_json::array();
        for (const auto& [key, dim] : piece.table.entries)
            entries.push_back({{"cohdeg", key.first}, {"weight", key.second}, {"dim", dim}});
        pj["entries"] = entries;
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;

    ordered_json totals = ordered_json::array();
    for (const auto& [deg, t] : rep.totals) {
        ordered_json tj;
        tj["cohdeg"] = deg;
        tj["weights"] = weights_object(t);
        auto it = rep.cumulative.find(deg);
        tj["cumulative"] = it == rep.cumulative.end() ? std::vector<std::uint64_t>{} : it->second;
        totals.push_back(tj);
    }
    j["totals"] = totals;

    j["flags"] = {{"conditional", rep.conditional},
                  {"smooth", rep.license.smooth},
                  {"p_divides_d", rep.license.p_divides_d},
                  {"low_degree", rep.license.low_degree}};
    j["note"] = kCoefficientNote;
    return j;
}

ConjugateReport report_from_json(const ordered_json& j) {
    ConjugateReport rep;
    rep.prime = j.at("prime").get<std::uint32_t>();
    rep.vars = j.at("vars").get<std::vector<std::string>>();
    rep.poly = j.at("poly").get<std::string>();
    rep.degree = j.at("degree").get<int>();
    rep.embdim = j.at("embdim").get<int>();
    rep.krull_dim = j.at("krull_dim").get<int>();
    rep.n_max = j.at("n_max").get<int>();
    rep.w_max = j.at("w_max").get<int>();

    const auto kind = license_kind_from_string(j.at("license").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown license kind");
    rep.license.kind = *kind;
    rep.license.witness = j.at("license_witness").get<std::string>();
    rep.license.projective_dim = static_cast<int>(rep.vars.size()) - 1;
    rep.license.degree = rep.degree;
    const auto& flags = j.at("flags");
    rep.license.smooth = flags.at("smooth").get<bool>();
    rep.license.p_divides_d = flags.at("p_divides_d").get<bool>();
    rep.license.low_degree = flags.at("low_degree").get<bool>();
    rep.conditional = flags.at("conditional").get<bool>();

    for (const auto& pj : j.at("pieces")) {
        ConjugatePiece piece;
        piece.n = pj.at("n").get<int>();
        piece.below_threshold = pj.at("below_threshold").get<bool>();
        piece.table.w_max = rep.w_max;
        for (const auto& [k, v] : pj.at("complete").items()) piece.table.complete[parse_int_key(k)] = v.get<bool>();
        for (const auto& e : pj.at("entries"))
            piece.table.entries[{e.at("cohdeg").get<int>(), e.at("weight").get<int>()}] =
                e.at("dim").get<std::uint64_t>();
        rep.pieces.push_back(std::move(piece));
    }
    for (const auto& tj : j.at("totals")) {
        const int deg = tj.at("cohdeg").get<int>();
        HilbertTable t;
        t.computed_up_to = rep.w_max;
        t.finite_support = false;
        for (const auto& [k, v] : tj.at("weights").items()) t.add(parse_int_key(k), v.get<std::uint64_t>());
        rep.totals[deg] = std::move(t);
        rep.cumulative[deg] = tj.at("cumulative").get<std::vector<std::uint64_t>>();
    }
    return rep;
}

std::string report_to_csv(const ConjugateReport& rep) {
    std::ostringstream os;
    os << "section,n,cohdeg,weight,value\n";
    for (const auto& piece : rep.pieces)
        for (const auto& [key, dim] : piece.table.entries)
            os << "piece," << piece.n << ',' << key.first << ',' << key.second << ',' << dim << '\n';
    for (const auto& [deg, t] : rep.totals)
        for (const auto& [w, dim] : t.dims) os << "total,," << deg << ',' << w << ',' << dim << '\n';
    for (const auto& [deg, run] : rep.cumulative)
        for (std::size_t n = 0; n < run.size(); ++n) os << "cumulative," << n << ',' << deg << ",," << run[n] << '\n';
    return os.str();
}

std::string report_to_table(const ConjugateReport& rep) {
    std::ostringstream os;
    os << "f = " << rep.poly << " over F_" << rep.prime << "  (d=" << rep.degree << ", embdim=" << rep.embdim
       << ", dim=" << rep.krull_dim << ")\n";
    os << "license: " << to_string(rep.license.kind) << " (" << rep.license.witness << ")\n";
    os << "weights 0.." << rep.w_max << ", pieces n=0.." << rep.n_max
       << (rep.conditional ? "  [totals CONDITIONAL on an unverified splitting]" : "") << "\n\n";
    for (const auto& piece : rep.pieces) {
        os << "gr_" << piece.n << (piece.below_threshold ? " (below splitting threshold)" : "") << ":\n";
        if (piece.table.empty()) os << "  0\n";
        int last = INT_MIN;
        for (const auto& [key, dim] : piece.table.entries) {
            if (key.first != last) {
                if (last != INT_MIN) os << '\n';
                os << "  H^" << key.first << ":";
                last = key.first;
            }
            os << ' ' << key.second << ':' << dim;
        }
        if (last != INT_MIN) os << '\n';
    }
    os << "\ncumulative dimension by n:\n";
    for (const auto& [deg, run] : rep.cumulative) {
        os << "  H^" << std::setw(2) << deg << ":";
        for (auto v : run) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

ordered_json certificate_to_json(const RingSummary& ring, const GrowthCertificate& cert) {
    ordered_json j;
    j["prime"] = ring.prime;
    j["vars"] = ring.vars;
    j["poly"] = ring.poly;
    j["degree"] = ring.degree;
    j["license"] = to_string(cert.license.kind);
    j["license_witness"] = cert.license.witness;
    j["conditional"] = cert.conditional;
    j["degrees"] = {cert.top_degree, cert.second_degree};
    j["second_index"] = cert.second_index;
    j["first_n"] = cert.first_n;
    j["n_max"] = cert.n_max;
    j["w_max"] = cert.w_max;
    j["top_increments"] = cert.top_increments;
    j["second_increments"] = cert.second_increments;
    j["top_strictly_increasing"] = cert.top_strictly_increasing;
    j["second_strictly_increasing"] = cert.second_strictly_increasing;
    j["milnor"] = cert.milnor ? ordered_json(*cert.milnor) : ordered_json(nullptr);
    j["increments_equal_milnor"] =
        cert.increments_equal_milnor ? ordered_json(*cert.increments_equal_milnor) : ordered_json(nullptr);
    j["thresholds"] = {{"projective_dim", cert.license.projective_dim},
                       {"degree", cert.license.degree},
                       {"low_degree", cert.license.low_degree},
                       {"smooth", cert.license.smooth},
                       {"p_divides_d", cert.license.p_divides_d}};
    j["note"] = kCoefficientNote;
    return j;
}

std::string certificate_to_csv(const RingSummary&, const GrowthCertificate& cert) {
    std::ostringstream os;
    os << "cohdeg,n,increment\n";
    for (std::size_t k = 0; k < cert.top_increments.size(); ++k)
        os << cert.top_degree << ',' << cert.first_n + static_cast<int>(k) << ',' << cert.top_increments[k] << '\n';
    for (std::size_t k = 0; k < cert.second_increments.size(); ++k)
        os << cert.second_degree << ',' << cert.first_n + static_cast<int>(k) << ',' << cert.second_increments[k]
           << '\n';
    return os.str();
}

std::string certificate_to_table(const RingSummary& ring, const GrowthCertificate& cert) {
    std::ostringstream os;
    os << "f = " << ring.poly << " over F_" << ring.prime << '\n';
    os << "license: " << to_string(cert.license.kind) << (cert.conditional ? " (CONDITIONAL)" : "") << '\n';
    os << "degrees " << cert.top_degree << " and " << cert.second_degree << " (i=" << cert.second_index << ")\n";
    auto line = [&](int deg, const std::vector<std::uint64_t>& inc, bool strict) {
        os << "  H^" << deg << " increments for n=" << cert.first_n << ".." << cert.n_max << ":";
        for (auto v : inc) os << ' ' << v;
        os << (strict ? "  strictly increasing" : "  NOT strictly increasing") << '\n';
    };
    line(cert.top_degree, cert.top_increments, cert.top_strictly_increasing);
    line(cert.second_degree, cert.second_increments, cert.second_strictly_increasing);
    if (cert.milnor) os << "  dim_k M = " << *cert.milnor << '\n';
    return os.str();
}

}  // namespace crysalite
