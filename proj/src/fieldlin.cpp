#include "crysalite/fieldlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace crysalite {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (1ULL << 31) || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t Prime::reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Prime::add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t Prime::sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
}

std::uint32_t Prime::mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
}

std::uint32_t Prime::neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

std::uint32_t Prime::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("zero has no inverse mod p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (auto v : row) data_.push_back(p_.reduce(v));
    }
}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    data_.at(r * cols_ + c) = p_.reduce(value);
}

void FpMatrix::accumulate(std::size_t r, std::size_t c, std::uint32_t value) {
    auto& e = data_.at(r * cols_ + c);
    e = p_.add(e, value % p_.value());
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

namespace {

// row[target] -= factor * row[source], from column `from` onward.
void eliminate(std::uint32_t* target, const std::uint32_t* source, std::uint32_t factor,
               std::size_t from, std::size_t cols, std::uint64_t p) {
    const std::uint64_t neg = p - factor;
    for (std::size_t c = from; c < cols; ++c) {
        if (source[c] == 0) continue;
        target[c] = static_cast<std::uint32_t>((target[c] + neg * source[c]) % p);
    }
}

void scale(std::uint32_t* row, std::uint32_t factor, std::size_t from, std::size_t cols, std::uint64_t p) {
    for (std::size_t c = from; c < cols; ++c) row[c] = static_cast<std::uint32_t>(row[c] * std::uint64_t{factor} % p);
}

}  // namespace

EchelonForm row_reduce(FpMatrix m) {
    const std::uint64_t p = m.p_.value();
    const std::size_t rows = m.rows_, cols = m.cols_;
    auto row = [&](std::size_t r) { return m.data_.data() + r * cols; };
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t pr = next;
        while (pr < rows && row(pr)[c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != next)
            std::swap_ranges(row(pr), row(pr) + cols, row(next));
        scale(row(next), m.p_.inv(row(next)[c]), c, cols, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || row(r)[c] == 0) continue;
            eliminate(row(r), row(next), row(r)[c], c, cols, p);
        }
        pivots.push_back(c);
        ++next;
    }
    return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMatrix& input) {
    if (input.rows_ == 0 || input.cols_ == 0) return 0;
    // Forward elimination only; work on whichever orientation has fewer columns.
    FpMatrix m = input.cols_ > input.rows_ ? input.transposed() : input;
    const std::uint64_t p = m.p_.value();
    const std::size_t rows = m.rows_, cols = m.cols_;
    auto row = [&](std::size_t r) { return m.data_.data() + r * cols; };
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t pr = next;
        while (pr < rows && row(pr)[c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != next) std::swap_ranges(row(pr), row(pr) + cols, row(next));
        scale(row(next), m.p_.inv(row(next)[c]), c, cols, p);
        for (std::size_t r = next + 1; r < rows; ++r) {
            if (row(r)[c] == 0) continue;
            eliminate(row(r), row(next), row(r)[c], c, cols, p);
        }
        ++next;
    }
    return next;
}

std::size_t kernel_dim(const FpMatrix& m) { return m.cols() - rank(m); }

std::size_t sparse_rank(Prime p, std::size_t dim, std::vector<SparseVector> vectors) {
    const std::uint64_t q = p.value();
    // Short vectors first keeps the pivot rows short.
    std::stable_sort(vectors.begin(), vectors.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
    std::vector<SparseVector> pivot(dim);
    std::vector<std::uint32_t> acc(dim, 0);
    std::size_t rank = 0;
    for (const auto& v : vectors) {
        if (v.empty()) continue;
        std::size_t nnz = 0;
        for (const auto& [i, x] : v) {
            if (i >= dim) throw std::invalid_argument("sparse vector index out of range");
            acc[i] = x % p.value();
            nnz += acc[i] != 0;
        }
        std::size_t c = v.front().first;
        while (nnz) {
            while (acc[c] == 0) ++c;
            if (pivot[c].empty()) {
                const std::uint32_t s = p.inv(acc[c]);
                SparseVector row;
                for (std::size_t j = c; nnz; ++j) {
                    if (!acc[j]) continue;
                    row.emplace_back(static_cast<std::uint32_t>(j), p.mul(acc[j], s));
                    acc[j] = 0;
                    --nnz;
                }
                pivot[c] = std::move(row);
                ++rank;
                break;
            }
            const std::uint64_t factor = q - acc[c];
            for (const auto& [j, x] : pivot[c]) {
                const bool was = acc[j] != 0;
                acc[j] = static_cast<std::uint32_t>((acc[j] + factor * x) % q);
                const bool now = acc[j] != 0;
                if (was != now) now ? ++nnz : --nnz;
            }
        }
    }
    return rank;
}

std::vector<SparseVector> sparse_columns(const FpMatrix& m) {
    std::vector<SparseVector> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) out[c].emplace_back(static_cast<std::uint32_t>(r), m.at(r, c));
    return out;
}

}  // namespace crysalite
