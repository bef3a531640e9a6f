#ifndef SHAFORGE_RATIONAL_HPP
#define SHAFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shaforge {

using Int = mpz_class;

// Exact rational; always canonical (gcd(|num|,den)=1, den>=1).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    static Rat from_string(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    // "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad integer '" + s + "'");
        return Rat(n);
    }
    mpz_class n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("Rat: bad rational '" + s + "'");
    return Rat(n, d);
}

// Field-object for Q; shares the interface of NumberField so pencil and
// section code can run over either.
struct QQ {
    using Elem = Rat;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat neg(const Rat& a) const { return -a; }
    Rat inv(const Rat& a) const { return a.inv(); }
    bool is_zero(const Rat& a) const { return a.is_zero(); }
    bool eq(const Rat& a, const Rat& b) const { return a == b; }
};

}  // namespace shaforge

#endif
