#pragma once

// Graded polynomial arithmetic over F_p, the graded rings S = F_p[x_0..x_{V-1}]
// and A = S/(f), and Jacobian-ring Hilbert functions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crysalite/fieldlin.hpp"

namespace crysalite {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded reverse lexicographic order with x0 > x1 > ...; true when a > b.
struct GrevlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree w in nvars variables, descending in grevlex.
std::vector<Exponent> monomials(std::size_t nvars, int w);

/// C(w + nvars - 1, nvars - 1); zero for w < 0.
std::uint64_t monomial_count(std::size_t nvars, int w);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

class PolyError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownVariable, ZeroPolynomial, NotHomogeneous, Mismatch };

    PolyError(Kind kind, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Kind kind_;
    std::optional<std::size_t> position_;
};

class MultiPoly {
public:
    using Terms = std::map<Exponent, std::uint32_t, GrevlexGreater>;

    MultiPoly(Prime p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static MultiPoly monomial(Prime p, Exponent e, std::int64_t coeff = 1);
    static MultiPoly variable(Prime p, std::size_t nvars, std::size_t index);

    Prime prime() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::uint32_t coeff(const Exponent& e) const;

    /// Total degree when all terms share it; nullopt for zero or mixed degrees.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    const Exponent& leading_exponent() const;
    std::uint32_t leading_coeff() const;

    void add_term(const Exponent& e, std::uint32_t c);

    MultiPoly scaled(std::uint32_t c) const;
    MultiPoly times_monomial(const Exponent& e, std::uint32_t c) const;
    MultiPoly partial(std::size_t index) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    std::string to_string(std::span<const std::string> vars) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const MultiPoly& o) const;

    Prime p_;
    std::size_t nvars_;
    Terms terms_;
};

/// Parses the polynomial grammar: '+'/'-' separated terms, each a '*'-separated
/// product of integers and powers "name^e". Throws PolyError; a polynomial that
/// reduces to zero mod p is reported as Kind::ZeroPolynomial.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars, Prime p);

std::vector<std::string> split_var_list(std::string_view list);

/// (df/dx_0, ..., df/dx_{V-1}).
std::vector<MultiPoly> partials(const MultiPoly& f);

/// Whether d*f == sum_i x_i * df/dx_i over F_p. Throws for non-homogeneous f.
bool euler_identity_check(const MultiPoly& f);

/// dim_k (S/I)_w for I generated by homogeneous gens, by elimination on
/// the span of {g * m} inside the monomial basis of S_w.
std::uint64_t quotient_hilbert(Prime p, std::size_t nvars, std::span<const MultiPoly> gens, int w);

/// Weight -> dimension record of a graded vector space.
struct HilbertTable {
    std::map<int, std::uint64_t> dims;  // nonzero entries only
    int computed_up_to = -1;
    bool finite_support = false;

    std::uint64_t at(int w) const;
    std::uint64_t total() const;
    std::optional<int> top_weight() const;
    void add(int w, std::uint64_t dim);

    /// M(a), with M(a)_i = M_{i+a}; M(-j) is generated in weight j.
    HilbertTable twist(int a) const;

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

/// A graded quotient S/(f) of a polynomial ring, or S itself. Normal forms are
/// taken modulo the principal ideal, for which {f} is already a Groebner basis.
class QuotientRing {
public:
    struct WeightBasis {
        std::vector<Exponent> monomials;  // standard monomials, grevlex descending
        std::map<Exponent, std::size_t> index;
    };

    static std::shared_ptr<const QuotientRing> polynomial(Prime p, std::size_t nvars);
    /// f must be nonzero and homogeneous.
    static std::shared_ptr<const QuotientRing> hypersurface(const MultiPoly& f);

    Prime prime() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::optional<MultiPoly>& relation() const noexcept { return relation_; }

    const WeightBasis& basis(int w) const;
    std::size_t dim(int w) const { return w < 0 ? 0 : basis(w).monomials.size(); }

    /// Top nonzero weight when the ring is finite dimensional over k.
    std::optional<int> top_weight() const;

    MultiPoly normal_form(const MultiPoly& g) const;
    bool is_zero(const MultiPoly& g) const { return normal_form(g).is_zero(); }

    QuotientRing(Prime p, std::size_t nvars, std::optional<MultiPoly> relation);

private:
    Prime p_;
    std::size_t nvars_;
    std::optional<MultiPoly> relation_;  // monic
    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::unique_ptr<WeightBasis>> cache_;
};

/// The graded hypersurface A = S/(f), f homogeneous of degree d >= 1.
class HypersurfaceRing {
public:
    HypersurfaceRing(std::vector<std::string> vars, MultiPoly f);

    static HypersurfaceRing parse(Prime p, std::vector<std::string> vars, std::string_view text);

    Prime prime() const noexcept { return f_.prime(); }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const MultiPoly& f() const noexcept { return f_; }
    int degree() const noexcept { return degree_; }
    int krull_dim() const noexcept { return static_cast<int>(vars_.size()) - 1; }
    /// dim m/m^2: V, or V - 1 when f is linear.
    int embdim() const noexcept { return static_cast<int>(vars_.size()) - (degree_ == 1 ? 1 : 0); }
    bool p_divides_d() const noexcept { return degree_ % static_cast<int>(prime().value()) == 0; }
    std::string poly_text() const { return f_.to_string(vars_); }

    const std::shared_ptr<const QuotientRing>& ring() const noexcept { return ring_; }
    const std::shared_ptr<const QuotientRing>& ambient() const noexcept { return ambient_; }

private:
    std::vector<std::string> vars_;
    MultiPoly f_;
    int degree_;
    std::shared_ptr<const QuotientRing> ring_;
    std::shared_ptr<const QuotientRing> ambient_;
};

struct JacobianProfile {
    HilbertTable m_table;  // M = S/J(f)
    bool finite_length = false;
    std::optional<std::uint64_t> milnor;
    bool smooth = false;
    bool p_divides_d = false;
    bool euler_member = false;  // f in J(f)
};

/// Smallest weight cutoff that certifies finite length of S/J(f) and S/(J(f)+(f)).
int jacobian_cutoff(const HypersurfaceRing& r);

/// Computes M = S/J(f) weight by weight up to the cutoff (raised to
/// jacobian_cutoff(r) if smaller) together with the smoothness test.
JacobianProfile jacobian_profile(const HypersurfaceRing& r, std::optional<int> w_cutoff = std::nullopt);

}  // namespace crysalite
