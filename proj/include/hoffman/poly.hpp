#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hoffman {

// Integer polynomial, constant term first. The zero polynomial has an empty
// coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(long v) { return IntPoly({mpz_class(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](int i) const { return c_[i]; }
    const mpz_class& leading() const { return c_.back(); }

    IntPoly derivative() const;
    IntPoly primitive_part() const;       // content removed, leading coefficient positive
    IntPoly negate_argument() const;      // p(-t)
    // (m)^degree * p(t/m): integer polynomial whose roots are m * (roots of p)
    IntPoly scale_roots(const mpz_class& m) const;

    mpz_class eval(const mpz_class& x) const;
    // sign of p at rational u/v (v > 0): 0, +1 or -1
    int sign_at(const mpq_class& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    std::string to_string() const; // decimal coefficient list, constant first

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

IntPoly poly_gcd(IntPoly a, IntPoly b);      // primitive, positive leading coefficient
IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
// Yun decomposition: result[i] collects the factors of multiplicity i+1
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

struct RationalInterval {
    mpq_class lo, hi;
    mpq_class width() const { return hi - lo; }
    double mid_double() const { return (lo.get_d() + hi.get_d()) / 2; }
};

// distinct real roots of p in (iv.lo, iv.hi], exact
int count_roots(const IntPoly& p, const RationalInterval& iv);

// Sturm chain of the squarefree part; counts distinct real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    // distinct roots in the half-open interval (lo, hi]
    int count(const mpq_class& lo, const mpq_class& hi) const;
    int count_all() const;
    // distinct roots in (lo, +inf)
    int count_above(const mpq_class& lo) const;
    int count_below_or_at(const mpq_class& hi) const; // roots in (-inf, hi]
    // a bound B with all real roots in (-B, B)
    mpq_class root_bound() const;

    // Isolating interval of width <= width for the largest (or smallest) real
    // root; the returned interval (lo, hi] contains exactly that one root.
    RationalInterval isolate_extreme(bool largest, const mpq_class& width) const;

private:
    int variations_at(const mpq_class& x) const;
    int variations_neg_inf() const;
    std::vector<IntPoly> chain_;
};

} // namespace hoffman
