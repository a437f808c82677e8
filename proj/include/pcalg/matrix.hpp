#pragma once

// Dense square matrices over an exact scalar domain. Linear transformations act
// on the left: column j is the image of basis vector j.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcalg/domain.hpp"
#include "pcalg/errors.hpp"

namespace pcalg {

template <class T>
class Matrix {
public:
    Matrix() : n_(0) {}
    Matrix(size_t n, const T& fill) : n_(n), a_(n * n, fill) {}
    Matrix(size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw Error("matrix entry count mismatch");
    }

    static Matrix identity(size_t n, const typename domain_traits<T>::ctx_type& ctx) {
        Matrix m(n, domain_traits<T>::zero(ctx));
        for (size_t i = 0; i < n; ++i) m.at(i, i) = domain_traits<T>::one(ctx);
        return m;
    }

    size_t n() const { return n_; }
    T& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const T& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    typename domain_traits<T>::ctx_type ctx() const {
        // zero entries of some domains (sparse polynomials) carry no context;
        // scan for the first entry that does
        for (const auto& x : a_) {
            auto c = domain_traits<T>::ctx_of(x);
            if (domain_traits<T>::ctx_valid(c)) return c;
        }
        throw Error("matrix has no context-carrying entry");
    }

    Matrix operator+(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        require_same(o);
        T zero = a_[0] - a_[0];
        Matrix r(n_, zero);
        for (size_t i = 0; i < n_; ++i) {
            for (size_t k = 0; k < n_; ++k) {
                const T& aik = at(i, k);
                if (aik == zero) continue;
                for (size_t j = 0; j < n_; ++j) {
                    r.at(i, j) += aik * o.at(k, j);
                }
            }
        }
        return r;
    }

    Matrix scale(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r = *this;
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != n_) throw Error("vector size mismatch");
        T zero = a_[0] - a_[0];
        std::vector<T> r(n_, zero);
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) {
                if (v[j] == zero) continue;
                r[i] += at(i, j) * v[j];
            }
        }
        return r;
    }

    Matrix pow(uint64_t e) const {
        Matrix acc = Matrix::identity(n_, ctx());
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_identity() const {
        auto c = ctx();
        T zero = domain_traits<T>::zero(c);
        T one = domain_traits<T>::one(c);
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) {
                if (!(at(i, j) == (i == j ? one : zero))) return false;
            }
        }
        return true;
    }

    // row-major dump, entries as domain strings
    std::string dump() const {
        std::ostringstream os;
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) {
                if (j) os << "  ";
                os << at(i, j).str();
            }
            os << "\n";
        }
        return os.str();
    }

private:
    void require_same(const Matrix& o) const {
        if (n_ != o.n_) throw Error("matrix size mismatch");
    }

    size_t n_;
    std::vector<T> a_;
};

// ---------- field elimination: rref, rank, kernel, inverse ----------

// reduced row echelon form of an arbitrary (rows x cols) array over a field
template <class T>
struct Echelon {
    std::vector<std::vector<T>> rows;  // nonzero rows of the rref
    std::vector<size_t> pivots;        // pivot column per row
    size_t cols = 0;
};

template <class T>
Echelon<T> rref(std::vector<std::vector<T>> rows, size_t cols) {
    Echelon<T> ech;
    ech.cols = cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        T inv = rows[r][c].inverse();
        for (size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            T f = rows[i][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ech.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    ech.rows = std::move(rows);
    return ech;
}

template <class T>
Echelon<T> rref_of(const Matrix<T>& m) {
    std::vector<std::vector<T>> rows;
    rows.reserve(m.n());
    for (size_t i = 0; i < m.n(); ++i) {
        std::vector<T> row;
        row.reserve(m.n());
        for (size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rref(std::move(rows), m.n());
}

template <class T>
size_t rank(const Matrix<T>& m) {
    return rref_of(m).rows.size();
}

// reduced echelon as a full square matrix (zero rows at the bottom)
template <class T>
Matrix<T> echelon(const Matrix<T>& m) {
    auto ech = rref_of(m);
    Matrix<T> r(m.n(), domain_traits<T>::zero(m.ctx()));
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        for (size_t j = 0; j < m.n(); ++j) r.at(i, j) = ech.rows[i][j];
    }
    return r;
}

// basis of the right kernel {v : m v = 0}
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
    auto ech = rref_of(m);
    auto ctx = m.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    std::vector<bool> is_pivot(m.n(), false);
    for (size_t p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (size_t free_col = 0; free_col < m.n(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(m.n(), zero);
        v[free_col] = one;
        for (size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.rows[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    size_t n = m.n();
    auto ctx = m.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    std::vector<std::vector<T>> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<T> row(2 * n, zero);
        for (size_t j = 0; j < n; ++j) row[j] = m.at(i, j);
        row[n + i] = one;
        rows.push_back(std::move(row));
    }
    auto ech = rref(std::move(rows), 2 * n);
    if (ech.pivots.size() < n || ech.pivots[n - 1] >= n) throw Singular("matrix not invertible");
    Matrix<T> r(n, zero);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) r.at(i, j) = ech.rows[i][n + j];
    }
    return r;
}

// ---------- multiplicative order ----------

struct OrderResult {
    bool exceeded = false;
    uint64_t order = 0;  // valid when !exceeded
};

template <class T>
bool order_divides(const Matrix<T>& m, uint64_t k) {
    return m.pow(k).is_identity();
}

inline std::vector<uint64_t> prime_divisors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// exact order when some annihilating exponent k is known: strip primes from k
template <class T>
uint64_t exact_order_dividing(const Matrix<T>& m, uint64_t k) {
    if (!order_divides(m, k)) throw Error("claimed exponent does not annihilate");
    uint64_t ord = k;
    for (uint64_t p : prime_divisors_u64(k)) {
        while (ord % p == 0 && order_divides(m, ord / p)) ord /= p;
    }
    return ord;
}

// least k <= cutoff with m^k = I, by iteration; Exceeded otherwise
template <class T>
OrderResult element_order(const Matrix<T>& m, uint64_t cutoff = 10000) {
    auto ctx = m.ctx();
    Matrix<T> id = Matrix<T>::identity(m.n(), ctx);
    // singular matrices have no order
    {
        bool invertible = true;
        try {
            (void)inverse(m);
        } catch (const Singular&) {
            invertible = false;
        }
        if (!invertible) throw Singular("element_order of a singular matrix");
    }
    Matrix<T> acc = m;
    for (uint64_t k = 1; k <= cutoff; ++k) {
        if (acc == id) return {false, k};
        acc = acc * m;
    }
    return {true, 0};
}

}  // namespace pcalg
