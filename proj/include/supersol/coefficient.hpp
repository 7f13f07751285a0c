#pragma once

#include <cmath>
#include <string>

#include "supersol/rational.hpp"

namespace supersol {

// Exact scalar q * pi^(pi_half/2): a rational times a half-integer power of
// pi. Addition is only defined between equal pi powers; multiplication adds
// them. Zero is canonicalized to pi_half = 0 so it can absorb anything.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(Rational q) : q_(std::move(q)) {}  // NOLINT: intentionally implicit
    Coefficient(long q) : q_(q) {}                 // NOLINT
    Coefficient(Rational q, int pi_half) : q_(std::move(q)), pi_half_(pi_half) {
        if (q_.is_zero()) pi_half_ = 0;
    }

    const Rational& q() const { return q_; }
    int pi_half() const { return pi_half_; }
    bool is_zero() const { return q_.is_zero(); }

    Coefficient operator-() const { return Coefficient(-q_, pi_half_); }

    Coefficient& operator+=(const Coefficient& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (pi_half_ != o.pi_half_)
            throw PiPowerMismatchError("Coefficient: added pi^" + pi_string() +
                                       " to pi^" + o.pi_string());
        q_ += o.q_;
        if (q_.is_zero()) pi_half_ = 0;
        return *this;
    }
    Coefficient& operator-=(const Coefficient& o) { return *this += -o; }

    Coefficient& operator*=(const Coefficient& o) {
        q_ *= o.q_;
        pi_half_ = q_.is_zero() ? 0 : pi_half_ + o.pi_half_;
        return *this;
    }
    Coefficient& operator/=(const Coefficient& o) {
        if (o.is_zero()) throw Error("Coefficient: division by zero");
        q_ /= o.q_;
        pi_half_ = q_.is_zero() ? 0 : pi_half_ - o.pi_half_;
        return *this;
    }

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return a.q_ == b.q_ && a.pi_half_ == b.pi_half_;
    }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    double value() const {
        return q_.to_double() * std::pow(M_PI, 0.5 * pi_half_);
    }

    std::string pi_string() const {
        if (pi_half_ % 2 == 0) return std::to_string(pi_half_ / 2);
        return std::to_string(pi_half_) + "/2";
    }

    // e.g. "-1/2 pi^-1", "4/1" when the pi power is zero.
    std::string to_string() const {
        std::string s = q_.to_string();
        if (pi_half_ != 0) s += " pi^" + pi_string();
        return s;
    }

private:
    Rational q_;
    int pi_half_ = 0;  // power of pi in half units; 0 whenever q_ == 0
};

}  // namespace supersol
