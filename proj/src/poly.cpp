#include "hoffman/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoffman {

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(leading()) < 0) g = -g;
    std::vector<mpz_class> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
    return IntPoly(std::move(d));
}

IntPoly IntPoly::negate_argument() const {
    std::vector<mpz_class> d(c_);
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::scale_roots(const mpz_class& m) const {
    // q(t) = m^deg * p(t/m): q_k = p_k * m^(deg-k)
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> d(c_.size());
    mpz_class pw = 1;
    for (int k = degree(); k >= 0; --k) {
        d[k] = c_[k] * pw;
        pw *= m;
    }
    return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // homogeneous evaluation: sum c_k u^k v^(d-k) with x = u/v, v > 0
    const mpz_class& u = x.get_num();
    const mpz_class& v = x.get_den();
    mpz_class acc = 0, upow = 1;
    std::vector<mpz_class> vpow(c_.size());
    vpow[c_.size() - 1] = 1;
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) vpow[i] = vpow[i + 1] * v;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc += c_[k] * upow * vpow[k];
        upow *= u;
    }
    return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? sgn(leading()) : -sgn(leading());
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += " ";
        s += c_[i].get_str();
    }
    return s;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(d));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i < a.c_.size()) d[i] += a.c_[i];
        if (i < b.c_.size()) d[i] -= b.c_[i];
    }
    return IntPoly(std::move(d));
}

namespace {

// pseudo-remainder of a by b scaled by a positive power of b's leading
// coefficient, so that the sign pattern of the remainder is meaningful
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(a.coeffs());
    const auto& bc = b.coeffs();
    int db = b.degree();
    const mpz_class& lb = b.leading();
    int steps = static_cast<int>(r.size()) - 1 - db;
    if (steps < 0) return a;
    int e = steps + 1;
    if (e % 2 == 1 && sgn(lb) < 0) ++e; // keep the overall multiplier positive
    int used = 0;
    while (static_cast<int>(r.size()) - 1 >= db && !(r.size() == 1 && r[0] == 0)) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < db || r.empty()) break;
        mpz_class q = r.back();
        int shift = static_cast<int>(r.size()) - 1 - db;
        for (auto& x : r) x *= lb;
        ++used;
        for (int i = 0; i <= db; ++i) r[i + shift] -= q * bc[i];
    }
    IntPoly rem{std::vector<mpz_class>(r)};
    // pad multiplier up to lb^e (e chosen even or lb positive)
    for (; used < e; ++used) {
        std::vector<mpz_class> d(rem.coeffs());
        for (auto& x : d) x *= lb;
        rem = IntPoly(std::move(d));
    }
    return rem;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = signed_prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.coeffs());
    int db = b.degree();
    std::vector<mpz_class> q(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        mpz_class t = r[k + db];
        if (t == 0) {
            q[k] = 0;
            continue;
        }
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), t.get_mpz_t(), b.leading().get_mpz_t());
        if (rr != 0) throw std::runtime_error("inexact polynomial division");
        q[k] = qq;
        for (int i = 0; i <= db; ++i) r[k + i] -= qq * b.coeffs()[i];
    }
    for (const auto& x : r)
        if (x != 0) throw std::runtime_error("inexact polynomial division (remainder)");
    return IntPoly(std::move(q));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.primitive_part();
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return poly_divide_exact(p.primitive_part(), g).primitive_part();
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    IntPoly a = p.primitive_part();
    if (a.degree() <= 0) return out;
    IntPoly g = poly_gcd(a, a.derivative());
    IntPoly c = poly_divide_exact(a, g);
    IntPoly d = poly_divide_exact(a.derivative(), g) - c.derivative();
    while (true) {
        if (c.degree() <= 0) break;
        IntPoly f = poly_gcd(c, d);
        out.push_back(f.primitive_part());
        c = poly_divide_exact(c, f);
        d = poly_divide_exact(d, f) - c.derivative();
    }
    return out;
}

int count_roots(const IntPoly& p, const RationalInterval& iv) {
    if (p.is_zero()) throw std::invalid_argument("root counting needs a nonzero polynomial");
    return SturmChain(p).count(iv.lo, iv.hi);
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly s0 = squarefree_part(p);
    chain_.push_back(s0);
    if (s0.degree() >= 1) {
        chain_.push_back(s0.derivative().primitive_part());
        while (chain_.back().degree() >= 1) {
            IntPoly r = signed_prem(chain_[chain_.size() - 2], chain_.back());
            if (r.is_zero()) break;
            std::vector<mpz_class> neg(r.coeffs());
            for (auto& x : neg) x = -x;
            chain_.push_back(IntPoly(std::move(neg)).primitive_part());
        }
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_neg_inf() const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at_neg_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count(const mpq_class& lo, const mpq_class& hi) const {
    if (chain_[0].degree() <= 0) return 0;
    if (lo >= hi) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const {
    if (chain_[0].degree() <= 0) return 0;
    int var_pos = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at_pos_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var_pos;
        prev = s;
    }
    return variations_neg_inf() - var_pos;
}

int SturmChain::count_above(const mpq_class& lo) const {
    if (chain_[0].degree() <= 0) return 0;
    int var_pos = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at_pos_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var_pos;
        prev = s;
    }
    return variations_at(lo) - var_pos;
}

int SturmChain::count_below_or_at(const mpq_class& hi) const {
    if (chain_[0].degree() <= 0) return 0;
    return variations_neg_inf() - variations_at(hi);
}

mpq_class SturmChain::root_bound() const {
    const IntPoly& p = chain_[0];
    if (p.degree() <= 0) return 1;
    mpz_class maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpz_class a = abs(p[i]);
        if (a > maxc) maxc = a;
    }
    mpz_class lc = abs(p.leading());
    mpq_class b(maxc, lc);
    b.canonicalize();
    return b + 2;
}

RationalInterval SturmChain::isolate_extreme(bool largest, const mpq_class& width) const {
    if (chain_[0].degree() < 1 || count_all() == 0)
        throw std::runtime_error("no real roots to isolate");
    mpq_class b = root_bound();
    mpq_class lo = -b, hi = b;
    // invariant: the extreme root lies in (lo, hi]; for largest, no root above
    // hi; for smallest we track (lo, hi] containing the least root only at the
    // end, using counts below
    while (true) {
        int inside = count(lo, hi);
        if (inside == 1 && hi - lo <= width) break;
        mpq_class mid = (lo + hi) / 2;
        if (largest) {
            if (count(mid, hi) >= 1)
                lo = mid;
            else
                hi = mid;
        } else {
            if (count(lo, mid) >= 1)
                hi = mid;
            else
                lo = mid;
        }
    }
    return {lo, hi};
}

} // namespace hoffman
