#include "crysalite/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace crysalite {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

void enumerate(std::size_t pos, int remaining, Exponent& current, std::vector<Exponent>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[pos] = e;
        enumerate(pos + 1, remaining - e, current, out);
    }
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<Exponent> monomials(std::size_t nvars, int w) {
    std::vector<Exponent> out;
    if (w < 0) return out;
    if (nvars == 0) {
        if (w == 0) out.emplace_back();
        return out;
    }
    Exponent current(nvars, 0);
    enumerate(0, w, current, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<unsigned __int128>(n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
    return static_cast<std::uint64_t>(r);
}

std::uint64_t monomial_count(std::size_t nvars, int w) {
    if (w < 0) return 0;
    if (nvars == 0) return w == 0 ? 1 : 0;
    return binomial(w + static_cast<std::int64_t>(nvars) - 1, static_cast<std::int64_t>(nvars) - 1);
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::monomial(Prime p, Exponent e, std::int64_t coeff) {
    MultiPoly m(p, e.size());
    m.add_term(e, p.reduce(coeff));
    return m;
}

MultiPoly MultiPoly::variable(Prime p, std::size_t nvars, std::size_t index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(p, std::move(e));
}

std::uint32_t MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

const Exponent& MultiPoly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

std::uint32_t MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponent& e, std::uint32_t c) {
    if (e.size() != nvars_) throw PolyError(PolyError::Kind::Mismatch, "exponent length mismatch");
    c %= p_.value();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = p_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (!(p_ == o.p_) || nvars_ != o.nvars_)
        throw PolyError(PolyError::Kind::Mismatch, "polynomials over different rings");
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
    MultiPoly r(p_, nvars_);
    c %= p_.value();
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, p_.mul(v, c));
    return r;
}

MultiPoly MultiPoly::times_monomial(const Exponent& m, std::uint32_t c) const {
    MultiPoly r(p_, nvars_);
    c %= p_.value();
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) {
        Exponent s = e;
        for (std::size_t i = 0; i < nvars_; ++i) s[i] += m[i];
        // Multiplying by a monomial preserves the order.
        r.terms_.emplace_hint(r.terms_.end(), std::move(s), p_.mul(v, c));
    }
    return r;
}

MultiPoly MultiPoly::partial(std::size_t index) const {
    MultiPoly r(p_, nvars_);
    for (const auto& [e, v] : terms_) {
        if (e[index] == 0) continue;
        Exponent s = e;
        s[index] -= 1;
        r.add_term(s, p_.mul(v, p_.reduce(e[index])));
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, v] : o.terms_) add_term(e, p_.neg(v));
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.p_, a.nvars_);
    for (const auto& [e, v] : b.terms_) r += a.times_monomial(e, v);
    return r;
}

std::string MultiPoly::to_string(std::span<const std::string> vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << '+';
        first = false;
        bool wrote = false;
        if (c != 1 || total_degree(e) == 0) {
            os << c;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << vars[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars, Prime p)
        : text_(text), vars_(vars), p_(p) {}

    MultiPoly parse() {
        MultiPoly result(p_, vars_.size());
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (auto s = sign_here()) {
                sign = *s;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip_ws();
            result += parse_term().scaled(p_.reduce(sign));
            skip_ws();
            if (at_end()) break;
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyError(PolyError::Kind::Syntax,
                        "syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    // Accepts '+', '-' and U+2212.
    std::optional<int> sign_here() {
        if (at_end()) return std::nullopt;
        if (text_[pos_] == '+') {
            ++pos_;
            return 1;
        }
        if (text_[pos_] == '-') {
            ++pos_;
            return -1;
        }
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return -1;
        }
        return std::nullopt;
    }

    std::uint64_t parse_integer() {
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (1ULL << 60)) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return v;
    }

    MultiPoly parse_term() {
        MultiPoly term = MultiPoly::monomial(p_, Exponent(vars_.size(), 0));
        while (true) {
            skip_ws();
            if (at_end()) fail("expected factor");
            term = term * parse_factor();
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            return term;
        }
    }

    MultiPoly parse_factor() {
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = parse_integer() % p_.value();
            return MultiPoly::monomial(p_, Exponent(vars_.size(), 0), static_cast<std::int64_t>(v));
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("unexpected character");
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw PolyError(PolyError::Kind::UnknownVariable,
                            "unknown variable '" + name + "' at position " + std::to_string(start), start);
        Exponent e(vars_.size(), 0);
        int power = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            const auto v = parse_integer();
            if (v > 10000) fail("exponent too large");
            power = static_cast<int>(v);
        }
        e[static_cast<std::size_t>(it - vars_.begin())] = power;
        return MultiPoly::monomial(p_, std::move(e));
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    Prime p_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars, Prime p) {
    if (vars.empty()) throw PolyError(PolyError::Kind::Mismatch, "no variables given");
    MultiPoly f = Parser(text, vars, p).parse();
    if (f.is_zero())
        throw PolyError(PolyError::Kind::ZeroPolynomial,
                        "polynomial is zero modulo " + std::to_string(p.value()));
    return f;
}

std::vector<std::string> split_var_list(std::string_view list) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        if (current.empty()) throw PolyError(PolyError::Kind::Syntax, "empty variable name in list");
        if (std::find(out.begin(), out.end(), current) != out.end())
            throw PolyError(PolyError::Kind::Syntax, "duplicate variable '" + current + "'");
        out.push_back(current);
        current.clear();
    };
    for (char c : list) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_') ||
                (current.empty() && std::isdigit(static_cast<unsigned char>(c))))
                throw PolyError(PolyError::Kind::Syntax, std::string("invalid character '") + c + "' in variable list");
            current.push_back(c);
        }
    }
    flush();
    return out;
}

// ---------------------------------------------------------------------------

std::vector<MultiPoly> partials(const MultiPoly& f) {
    std::vector<MultiPoly> out;
    out.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.partial(i));
    return out;
}

bool euler_identity_check(const MultiPoly& f) {
    const auto d = f.homogeneous_degree();
    if (!d) {
        if (f.is_zero()) return true;
        throw PolyError(PolyError::Kind::NotHomogeneous, "Euler identity needs a homogeneous polynomial");
    }
    MultiPoly rhs(f.prime(), f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i)
        rhs += MultiPoly::variable(f.prime(), f.nvars(), i) * f.partial(i);
    return f.scaled(f.prime().reduce(*d)) == rhs;
}

std::uint64_t quotient_hilbert(Prime p, std::size_t nvars, std::span<const MultiPoly> gens, int w) {
    if (w < 0) return 0;
    for (const auto& g : gens) {
        if (!(g.prime() == p) || g.nvars() != nvars)
            throw PolyError(PolyError::Kind::Mismatch, "generators over different rings");
        if (!g.is_homogeneous())
            throw PolyError(PolyError::Kind::NotHomogeneous, "ideal generators must be homogeneous");
    }
    const auto basis = monomials(nvars, w);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<std::pair<const MultiPoly*, Exponent>> products;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int e = *g.homogeneous_degree();
        if (e > w) continue;
        for (auto& m : monomials(nvars, w - e)) products.emplace_back(&g, std::move(m));
    }
    if (products.empty()) return basis.size();
    FpMatrix span(p, products.size(), basis.size());
    for (std::size_t r = 0; r < products.size(); ++r) {
        const auto prod = products[r].first->times_monomial(products[r].second, 1);
        for (const auto& [e, c] : prod.terms()) span.set(r, index.at(e), c);
    }
    return basis.size() - rank(span);
}

// ---------------------------------------------------------------------------
// HilbertTable

std::uint64_t HilbertTable::at(int w) const {
    auto it = dims.find(w);
    return it == dims.end() ? 0 : it->second;
}

std::uint64_t HilbertTable::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, d] : dims) t += d;
    return t;
}

std::optional<int> HilbertTable::top_weight() const {
    if (dims.empty()) return std::nullopt;
    return dims.rbegin()->first;
}

void HilbertTable::add(int w, std::uint64_t dim) {
    if (dim == 0) return;
    dims[w] += dim;
}

HilbertTable HilbertTable::twist(int a) const {
    HilbertTable out;
    for (const auto& [w, d] : dims) out.dims.emplace(w - a, d);
    out.computed_up_to = computed_up_to - a;
    out.finite_support = finite_support;
    return out;
}

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(Prime p, std::size_t nvars, std::optional<MultiPoly> relation)
    : p_(p), nvars_(nvars), relation_(std::move(relation)) {}

std::shared_ptr<const QuotientRing> QuotientRing::polynomial(Prime p, std::size_t nvars) {
    if (nvars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
    return std::make_shared<const QuotientRing>(p, nvars, std::nullopt);
}

std::shared_ptr<const QuotientRing> QuotientRing::hypersurface(const MultiPoly& f) {
    if (f.is_zero()) throw PolyError(PolyError::Kind::ZeroPolynomial, "relation is the zero polynomial");
    if (!f.homogeneous_degree())
        throw PolyError(PolyError::Kind::NotHomogeneous, "relation must be homogeneous");
    MultiPoly monic = f.scaled(f.prime().inv(f.leading_coeff()));
    return std::make_shared<const QuotientRing>(f.prime(), f.nvars(), std::move(monic));
}

const QuotientRing::WeightBasis& QuotientRing::basis(int w) const {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return *it->second;
    auto b = std::make_unique<WeightBasis>();
    for (auto& m : monomials(nvars_, w)) {
        if (relation_ && divides(relation_->leading_exponent(), m)) continue;
        b->index.emplace(m, b->monomials.size());
        b->monomials.push_back(std::move(m));
    }
    return *cache_.emplace(w, std::move(b)).first->second;
}

std::optional<int> QuotientRing::top_weight() const {
    if (relation_ && nvars_ == 1) return *relation_->homogeneous_degree() - 1;
    return std::nullopt;
}

MultiPoly QuotientRing::normal_form(const MultiPoly& g) const {
    if (!relation_ || g.is_zero()) return g;
    const auto& lead = relation_->leading_exponent();
    MultiPoly work = g;
    MultiPoly out(p_, nvars_);
    while (!work.is_zero()) {
        const Exponent e = work.terms().begin()->first;
        const std::uint32_t c = work.terms().begin()->second;
        if (divides(lead, e)) {
            Exponent q = e;
            for (std::size_t i = 0; i < nvars_; ++i) q[i] -= lead[i];
            work -= relation_->times_monomial(q, c);
        } else {
            out.add_term(e, c);
            work.add_term(e, p_.neg(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// HypersurfaceRing

HypersurfaceRing::HypersurfaceRing(std::vector<std::string> vars, MultiPoly f)
    : vars_(std::move(vars)), f_(std::move(f)), degree_(0) {
    if (vars_.size() != f_.nvars()) throw PolyError(PolyError::Kind::Mismatch, "variable count mismatch");
    if (f_.is_zero()) throw PolyError(PolyError::Kind::ZeroPolynomial, "hypersurface equation is zero");
    const auto d = f_.homogeneous_degree();
    if (!d) throw PolyError(PolyError::Kind::NotHomogeneous, "hypersurface equation must be homogeneous");
    if (*d < 1) throw PolyError(PolyError::Kind::NotHomogeneous, "hypersurface equation must have degree >= 1");
    degree_ = *d;
    ring_ = QuotientRing::hypersurface(f_);
    ambient_ = QuotientRing::polynomial(f_.prime(), f_.nvars());
}

HypersurfaceRing HypersurfaceRing::parse(Prime p, std::vector<std::string> vars, std::string_view text) {
    MultiPoly f = parse_poly(text, vars, p);
    return HypersurfaceRing(std::move(vars), std::move(f));
}

// ---------------------------------------------------------------------------
// Jacobian profile

int jacobian_cutoff(const HypersurfaceRing& r) {
    // A finite-length quotient by an ideal generated in degrees <= d vanishes
    // above V(d-1).
    return static_cast<int>(r.nvars()) * (r.degree() - 1) + 1;
}

namespace {

// Hilbert function of S/I up to the cutoff, stopping at the first zero weight
// (S_w inside I forces S_{w+1} inside I).
HilbertTable hilbert_until_zero(const HypersurfaceRing& r, std::span<const MultiPoly> gens, int cutoff) {
    HilbertTable t;
    for (int w = 0; w <= cutoff; ++w) {
        const auto dim = quotient_hilbert(r.prime(), r.nvars(), gens, w);
        t.computed_up_to = w;
        if (dim == 0) {
            t.finite_support = true;
            break;
        }
        t.add(w, dim);
    }
    return t;
}

}  // namespace

JacobianProfile jacobian_profile(const HypersurfaceRing& r, std::optional<int> w_cutoff) {
    const int cutoff = std::max(w_cutoff.value_or(0), jacobian_cutoff(r));
    const auto jac = partials(r.f());

    JacobianProfile prof;
    prof.p_divides_d = r.p_divides_d();
    prof.m_table = hilbert_until_zero(r, jac, cutoff);
    prof.finite_length = prof.m_table.finite_support;
    if (prof.finite_length) prof.milnor = prof.m_table.total();

    auto with_f = jac;
    with_f.push_back(r.f());
    prof.smooth = hilbert_until_zero(r, with_f, cutoff).finite_support;

    const int d = r.degree();
    prof.euler_member = !prof.p_divides_d ||
                        quotient_hilbert(r.prime(), r.nvars(), jac, d) ==
                            quotient_hilbert(r.prime(), r.nvars(), with_f, d);
    return prof;
}

}  // namespace crysalite
