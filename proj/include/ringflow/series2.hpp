// Dense truncated bivariate power series with total-degree truncation.
//
// A Series2D of order N stores coefficients c[i][j] for i + j <= N in a
// triangular layout and represents a function known modulo total degree N+1.
// Ring operations follow the same min-order rule as Series1D; composition
// claims min(inner.order, (outer.order + 1) * val(inner) - 1).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "series1.hpp"

namespace ringflow {

template <class R>
class Series2D {
  public:
    explicit Series2D(int order) : order_(order) {
        if (order < 0) throw std::domain_error("Series2D: negative order");
        c_.assign(tri_size(order), R(0));
    }

    struct Term {
        int i, j;
        R value;
    };

    static Series2D polynomial(const std::vector<Term>& terms, int order) {
        Series2D s(order);
        for (const auto& t : terms) s.set(t.i, t.j, t.value);
        return s;
    }

    int order() const { return order_; }

    const R& get(int i, int j) const { return c_[index(i, j)]; }

    void set(int i, int j, R value) { c_[index(i, j)] = std::move(value); }

    // Smallest total degree with a nonzero coefficient, or -1 if all vanish.
    int valuation() const {
        for (int d = 0; d <= order_; ++d)
            for (int i = 0; i <= d; ++i)
                if (!(get(i, d - i) == R(0))) return d;
        return -1;
    }

    Series2D truncated(int new_order) const {
        if (new_order > order_) throw std::domain_error("Series2D::truncated: cannot raise order");
        Series2D s(new_order);
        for (int i = 0; i <= new_order; ++i)
            for (int j = 0; i + j <= new_order; ++j) s.set(i, j, get(i, j));
        return s;
    }

    Series2D diff_first() const {
        if (order_ == 0) throw std::domain_error("Series2D::diff_first: order-0 series");
        Series2D s(order_ - 1);
        for (int i = 1; i <= order_; ++i)
            for (int j = 0; i + j <= order_; ++j) s.set(i - 1, j, R(i) * get(i, j));
        return s;
    }

    Series2D diff_second() const {
        if (order_ == 0) throw std::domain_error("Series2D::diff_second: order-0 series");
        Series2D s(order_ - 1);
        for (int i = 0; i < order_; ++i)
            for (int j = 1; i + j <= order_; ++j) s.set(i, j - 1, R(j) * get(i, j));
        return s;
    }

    // Restriction to first variable = 0, as a series in the second variable.
    Series1D<R> column_first0() const {
        std::vector<R> col(static_cast<size_t>(order_) + 1);
        for (int j = 0; j <= order_; ++j) col[static_cast<size_t>(j)] = get(0, j);
        return Series1D<R>::from_coeffs(std::move(col));
    }

    // Restriction to second variable = 0, as a series in the first variable.
    Series1D<R> column_second0() const {
        std::vector<R> col(static_cast<size_t>(order_) + 1);
        for (int i = 0; i <= order_; ++i) col[static_cast<size_t>(i)] = get(i, 0);
        return Series1D<R>::from_coeffs(std::move(col));
    }

    // Coefficient of (second variable)^j as a series in the first variable.
    Series1D<R> coeff_poly_second(int j) const {
        if (j < 0 || j > order_) throw std::out_of_range("Series2D::coeff_poly_second");
        std::vector<R> row(static_cast<size_t>(order_ - j) + 1);
        for (int i = 0; i + j <= order_; ++i) row[static_cast<size_t>(i)] = get(i, j);
        return Series1D<R>::from_coeffs(std::move(row));
    }

    friend Series2D operator+(const Series2D& a, const Series2D& b) {
        Series2D s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i)
            for (int j = 0; i + j <= s.order_; ++j) s.set(i, j, a.get(i, j) + b.get(i, j));
        return s;
    }

    friend Series2D operator-(const Series2D& a, const Series2D& b) {
        Series2D s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i)
            for (int j = 0; i + j <= s.order_; ++j) s.set(i, j, a.get(i, j) - b.get(i, j));
        return s;
    }

    friend Series2D operator-(const Series2D& a) {
        Series2D s(a.order_);
        for (size_t k = 0; k < a.c_.size(); ++k) s.c_[k] = -a.c_[k];
        return s;
    }

    friend Series2D operator*(const Series2D& a, const Series2D& b) {
        Series2D s(std::min(a.order_, b.order_));
        const int cap1 = std::min(a.order_, s.order_);
        for (int i1 = 0; i1 <= cap1; ++i1) {
            for (int j1 = 0; i1 + j1 <= cap1; ++j1) {
                const R& av = a.get(i1, j1);
                if (av == R(0)) continue;
                const int cap2 = std::min(b.order_, s.order_ - i1 - j1);
                for (int i2 = 0; i2 <= cap2; ++i2) {
                    for (int j2 = 0; i2 + j2 <= cap2; ++j2) {
                        const R& bv = b.get(i2, j2);
                        if (bv == R(0)) continue;
                        s.c_[index_of(s.order_, i1 + i2, j1 + j2)] += av * bv;
                    }
                }
            }
        }
        return s;
    }

    friend Series2D operator*(const R& s, const Series2D& a) {
        Series2D r(a.order_);
        for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }
    friend Series2D operator*(const Series2D& a, const R& s) { return s * a; }

    friend Series2D operator+(const Series2D& a, const R& s) {
        Series2D r = a;
        r.c_[0] += s;
        return r;
    }
    friend Series2D operator+(const R& s, const Series2D& a) { return a + s; }
    friend Series2D operator-(const Series2D& a, const R& s) { return a + (-s); }
    friend Series2D operator-(const R& s, const Series2D& a) { return (-a) + s; }

    friend bool operator==(const Series2D& a, const Series2D& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    template <class S>
    Series2D<S> convert() const {
        Series2D<S> out(order_);
        for (int i = 0; i <= order_; ++i)
            for (int j = 0; i + j <= order_; ++j) out.set(i, j, static_cast<S>(to_double(get(i, j))));
        return out;
    }

    double eval(double x, double y) const {
        double acc = 0.0;
        for (int i = order_; i >= 0; --i) {
            double row = 0.0;
            for (int j = order_ - i; j >= 0; --j) row = row * y + to_double(get(i, j));
            acc = acc * x + row;
        }
        return acc;
    }

    // Value plus a truncation-error estimate from the top-degree terms.
    std::pair<double, double> eval_with_error(double x, double y) const {
        double err = 0.0;
        for (int i = 0; i <= order_; ++i)
            err += std::abs(to_double(get(i, order_ - i)) * std::pow(x, i) * std::pow(y, order_ - i));
        return {eval(x, y), err};
    }

  private:
    static size_t tri_size(int order) {
        const size_t n = static_cast<size_t>(order) + 1;
        return n * (n + 1) / 2;
    }

    static size_t index_of(int order, int i, int j) {
        const size_t ui = static_cast<size_t>(i);
        return ui * static_cast<size_t>(order + 1) - ui * (ui + 1) / 2 + ui + static_cast<size_t>(j);
    }

    size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("Series2D: coefficient index");
        return index_of(order_, i, j);
    }

    int order_;
    std::vector<R> c_;
};

namespace detail {

// Zero-pad a 1D series into the first variable of an order-m container.
// Callers must justify the claimed order; the compose routines below do.
template <class R>
Series2D<R> pad_first(const Series1D<R>& f, int m) {
    Series2D<R> s(m);
    for (int i = 0; i <= std::min(f.order(), m); ++i) s.set(i, 0, f[i]);
    return s;
}

template <class R>
int compose_result_order(int outer_order, const Series2D<R>& inner) {
    const int v = inner.valuation();
    int m = inner.order();
    if (v >= 1) {
        const long full = static_cast<long>(outer_order + 1) * v - 1;
        m = static_cast<int>(std::min<long>(m, full));
    }
    return m;
}

}  // namespace detail

// Substitute a bivariate inner series (zero constant term) for the variable of
// a univariate outer series.
template <class R>
Series2D<R> compose(const Series1D<R>& outer, const Series2D<R>& inner) {
    if (!(inner.get(0, 0) == R(0)))
        throw std::domain_error("compose: inner series must have zero constant term");
    const int m = detail::compose_result_order(outer.order(), inner);
    const Series2D<R> g = inner.truncated(m);
    Series2D<R> acc(m);
    acc.set(0, 0, outer[outer.order()]);
    for (int k = outer.order() - 1; k >= 0; --k) acc = acc * g + outer[k];
    return acc;
}

// Substitute inner(X, Y) (zero constant term) for the second variable of
// outer(X, A); the first variable is shared between outer and inner.
template <class R>
Series2D<R> compose_second(const Series2D<R>& outer, const Series2D<R>& inner) {
    if (!(inner.get(0, 0) == R(0)))
        throw std::domain_error("compose_second: inner series must have zero constant term");
    const int m = detail::compose_result_order(outer.order(), inner);
    const Series2D<R> g = inner.truncated(m);
    Series2D<R> acc = detail::pad_first(outer.coeff_poly_second(outer.order()), m);
    for (int j = outer.order() - 1; j >= 0; --j)
        acc = acc * g + detail::pad_first(outer.coeff_poly_second(j), m);
    return acc;
}

}  // namespace ringflow
