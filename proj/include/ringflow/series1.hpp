// Dense truncated power series in one variable with explicit order tracking.
//
// A Series1D of order N stores coefficients c[0..N] and represents a function
// known modulo O(x^{N+1}). Ring operations return the minimum of the operand
// orders; no operation ever claims knowledge it does not have.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ringflow {

template <class R>
class Series1D {
  public:
    explicit Series1D(int order) : order_(order), c_(static_cast<size_t>(order) + 1, R(0)) {
        if (order < 0) throw std::domain_error("Series1D: negative order");
    }

    // Coefficients c[0..size-1]; order = size-1.
    static Series1D from_coeffs(std::vector<R> coeffs) {
        if (coeffs.empty()) throw std::domain_error("Series1D: empty coefficient list");
        Series1D s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    // A polynomial is exact, so it may be carried at any requested order.
    static Series1D polynomial(const std::vector<R>& coeffs, int order) {
        Series1D s(order);
        if (static_cast<int>(coeffs.size()) - 1 > order)
            throw std::domain_error("Series1D::polynomial: degree exceeds requested order");
        std::copy(coeffs.begin(), coeffs.end(), s.c_.begin());
        return s;
    }

    static Series1D constant(const R& value, int order) { return polynomial({value}, order); }

    int order() const { return order_; }

    const R& operator[](int k) const {
        if (k < 0 || k > order_) throw std::out_of_range("Series1D: coefficient index");
        return c_[static_cast<size_t>(k)];
    }

    void set(int k, R value) {
        if (k < 0 || k > order_) throw std::out_of_range("Series1D: coefficient index");
        c_[static_cast<size_t>(k)] = std::move(value);
    }

    const std::vector<R>& coeffs() const { return c_; }

    // Smallest k with c[k] != 0, or -1 if every stored coefficient vanishes.
    int valuation() const {
        for (int k = 0; k <= order_; ++k)
            if (!(c_[static_cast<size_t>(k)] == R(0))) return k;
        return -1;
    }

    Series1D truncated(int new_order) const {
        if (new_order > order_) throw std::domain_error("Series1D::truncated: cannot raise order");
        Series1D s(new_order);
        std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
        return s;
    }

    Series1D derivative() const {
        if (order_ == 0) throw std::domain_error("Series1D::derivative: order-0 series");
        Series1D s(order_ - 1);
        for (int k = 1; k <= order_; ++k) s.c_[static_cast<size_t>(k - 1)] = R(k) * c_[static_cast<size_t>(k)];
        return s;
    }

    friend Series1D operator+(const Series1D& a, const Series1D& b) {
        Series1D s(std::min(a.order_, b.order_));
        for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }

    friend Series1D operator-(const Series1D& a, const Series1D& b) {
        Series1D s(std::min(a.order_, b.order_));
        for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
        return s;
    }

    friend Series1D operator-(const Series1D& a) {
        Series1D s(a.order_);
        for (int k = 0; k <= s.order_; ++k) s.c_[k] = -a.c_[k];
        return s;
    }

    friend Series1D operator*(const Series1D& a, const Series1D& b) {
        Series1D s(std::min(a.order_, b.order_));
        for (int i = 0; i <= std::min(a.order_, s.order_); ++i) {
            const R& ai = a.c_[static_cast<size_t>(i)];
            if (ai == R(0)) continue;
            const int jmax = std::min(b.order_, s.order_ - i);
            for (int j = 0; j <= jmax; ++j) {
                const R& bj = b.c_[static_cast<size_t>(j)];
                if (bj == R(0)) continue;
                s.c_[static_cast<size_t>(i + j)] += ai * bj;
            }
        }
        return s;
    }

    friend Series1D operator*(const R& s, const Series1D& a) {
        Series1D r(a.order_);
        for (int k = 0; k <= a.order_; ++k) r.c_[k] = s * a.c_[k];
        return r;
    }
    friend Series1D operator*(const Series1D& a, const R& s) { return s * a; }

    friend Series1D operator+(const Series1D& a, const R& s) {
        Series1D r = a;
        r.c_[0] += s;
        return r;
    }
    friend Series1D operator+(const R& s, const Series1D& a) { return a + s; }
    friend Series1D operator-(const Series1D& a, const R& s) { return a + (-s); }
    friend Series1D operator-(const R& s, const Series1D& a) { return (-a) + s; }

    // Multiplicative inverse; requires a unit constant term.
    Series1D inverse() const {
        if (c_[0] == R(0)) throw std::domain_error("Series1D::inverse: zero constant term");
        Series1D q(order_);
        q.c_[0] = R(1) / c_[0];
        for (int n = 1; n <= order_; ++n) {
            R acc(0);
            for (int k = 1; k <= n; ++k) {
                if (c_[static_cast<size_t>(k)] == R(0)) continue;
                acc += c_[static_cast<size_t>(k)] * q.c_[static_cast<size_t>(n - k)];
            }
            q.c_[static_cast<size_t>(n)] = -acc / c_[0];
        }
        return q;
    }

    friend Series1D operator/(const Series1D& a, const Series1D& b) {
        const int n = std::min(a.order_, b.order_);
        return a.truncated(n) * b.truncated(n).inverse();
    }
    friend Series1D operator/(const Series1D& a, const R& s) {
        if (s == R(0)) throw std::domain_error("Series1D: division by zero scalar");
        return a * (R(1) / s);
    }

    friend bool operator==(const Series1D& a, const Series1D& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    template <class S>
    Series1D<S> convert() const {
        std::vector<S> out(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) out[k] = static_cast<S>(to_double(c_[k]));
        return Series1D<S>::from_coeffs(std::move(out));
    }

    double eval(double x) const {
        double acc = 0.0;
        for (int k = order_; k >= 0; --k) acc = acc * x + to_double(c_[static_cast<size_t>(k)]);
        return acc;
    }

    // Value plus a truncation-error estimate from the last retained term.
    std::pair<double, double> eval_with_error(double x) const {
        return {eval(x), std::abs(to_double(c_[static_cast<size_t>(order_)]) * std::pow(x, order_))};
    }

  private:
    int order_;
    std::vector<R> c_;
};

// Substitute inner (valuation >= 1) into outer. The result order reflects both
// truncations: min(inner.order, (outer.order + 1) * val(inner) - 1).
template <class R>
Series1D<R> compose(const Series1D<R>& outer, const Series1D<R>& inner) {
    if (!(inner[0] == R(0)))
        throw std::domain_error("compose: inner series must have zero constant term");
    const int v = inner.valuation();
    int m = inner.order();
    if (v >= 1) {
        const long full = static_cast<long>(outer.order() + 1) * v - 1;
        m = static_cast<int>(std::min<long>(m, full));
    }
    const Series1D<R> g = inner.truncated(m);
    Series1D<R> acc = Series1D<R>::constant(outer[outer.order()], m);
    for (int k = outer.order() - 1; k >= 0; --k) acc = acc * g + outer[k];
    return acc;
}

}  // namespace ringflow
