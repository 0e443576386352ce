#pragma once

// Exact scalar types: arbitrary-precision integers and rationals (GMP via
// Boost.Multiprecision, expression templates off so they drop into Eigen),
// the group Q/Z, and the dense Eigen aliases used across the library.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delsarte {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using RowVectorQ = RowVectorX<Rational>;
using MatrixZ = MatrixX<Integer>;
using IntegerVector = VectorX<Integer>;

inline Integer numerator(const Rational& q) { return bmp::numerator(q); }
inline Integer denominator(const Rational& q) { return bmp::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// q^e for any integer exponent; negative exponents need q != 0.
Rational pow(const Rational& q, long e);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Renders integers as "n" and everything else as "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n" or "p/q" (optional sign, no decimal point). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// An element of Q/Z, stored by its representative in [0, 1).
class QmodZ {
public:
    QmodZ() = default;
    explicit QmodZ(const Rational& q);
    QmodZ(long num, long den) : QmodZ(Rational(num) / Rational(den)) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(value_ + o.value_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(value_ - o.value_); }
    QmodZ operator-() const { return QmodZ(-value_); }
    QmodZ operator*(const Integer& k) const { return QmodZ(value_ * Rational(k)); }
    QmodZ operator*(long k) const { return QmodZ(value_ * k); }

    bool operator==(const QmodZ& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const QmodZ& o) const {
        if (value_ < o.value_) return std::strong_ordering::less;
        if (value_ > o.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

/// The representative of q in [0, 1).
QmodZ frac_part(const Rational& q);

/// Smallest k > 0 with k*q in Z (the reduced denominator).
Integer ord_plus(const QmodZ& q);

}  // namespace delsarte
