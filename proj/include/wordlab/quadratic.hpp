#pragma once

#include <string>

#include "wordlab/numeric.hpp"

namespace wordlab {

// Exact element of Q(sqrt(d)): value a + b*sqrt(d) with rational a, b.
// Invariants: b == 0 implies d == 0; otherwise d >= 2 with square factors
// removed, so sqrt(d) is irrational. Two values can be combined when their
// radicands match or either side is rational.
class Quad {
  public:
    Quad() : a_(0), b_(0), d_(0) {}
    explicit Quad(const Rat& rational) : a_(rational), b_(0), d_(0) {}

    static Quad surd(const Rat& a, const Rat& b, const Int& d);
    // (1 + sqrt(5)) / 2, the growth ratio used by the density limits.
    static Quad golden_ratio();

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    // Requires is_rational().
    const Rat& rational_value() const;

    int sign() const;
    Int floor() const;
    Int ceil() const;

    Quad operator-() const;
    Quad operator+(const Quad& o) const;
    Quad operator-(const Quad& o) const;
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;

    bool operator==(const Quad& o) const;
    bool operator<(const Quad& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Quad& o) const { return (*this - o).sign() <= 0; }

    // Canonical exact form "(p+q*sqrt(d))/r" over integers, e.g.
    // "(3-sqrt(5))/4", falling back to "p/q" for rationals.
    std::string exact_string() const;

    // Fixed-point decimal with half-to-even rounding, exact in all cases.
    std::string decimal(int places = 9) const;

    // Integer form (p + q*sqrt(d)) / r with r > 0, used by floor and printing.
    void integer_form(Int& p, Int& q, Int& r) const;

  private:
    static Int normalize_radicand(Rat& b, Int d);
    void merge_radicand(const Quad& o, Int& d) const;

    Rat a_, b_;
    Int d_;
};

}  // namespace wordlab
