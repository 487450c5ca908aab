#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "horochow/errors.hpp"

namespace horochow {

/// Exact rational number.
///
/// Thin value wrapper around GMP's `mpq_class` with plain (non-lazy)
/// operators, so it can serve as an Eigen scalar without interference from
/// GMP's own expression templates.  Always kept in canonical form.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rat(int num, int den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parse "a", "-a" or "a/b".  Throws Error on malformed input.
    static Rat parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Value as a machine long; precondition: integral and in range.
    long to_long() const;

    const mpq_class& raw() const { return v_; }

    /// Canonical text form: "a" for integers, "a/b" otherwise.
    std::string str() const;

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

/// Exact power with integer exponent >= 0.
Rat pow(const Rat& base, int exp);

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

}  // namespace horochow

namespace Eigen {

template <>
struct NumTraits<horochow::Rat> : GenericNumTraits<horochow::Rat> {
    using Real = horochow::Rat;
    using NonInteger = horochow::Rat;
    using Nested = horochow::Rat;
    using Literal = long;

    static inline Real epsilon() { return horochow::Rat(0); }
    static inline Real dummy_precision() { return horochow::Rat(0); }
    static inline int digits10() { return 0; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 60,
    };
};

}  // namespace Eigen
