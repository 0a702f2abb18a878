#include "hoffman/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hoffman {

namespace {

std::string graph_raw(const Graph& g) {
    std::string s;
    s.push_back(static_cast<char>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        Mask r = g.row(v);
        s.append(reinterpret_cast<const char*>(&r), sizeof r);
    }
    return s;
}

std::mutex cp_mutex;
std::unordered_map<std::string, IntPoly> cp_cache;

IntPoly char_poly_compute(const Graph& g) {
    int n = g.n();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    if (n == 0) return IntPoly({mpz_class(1)});
    std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = g.adj(i, j) ? 1 : 0;
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += M[i][i];
    c[n - 1] = -tr;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
        std::vector<std::vector<mpz_class>> N(n, std::vector<mpz_class>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                mpz_class acc = 0;
                Mask row = g.row(i);
                for (Mask m = row; m; m &= m - 1) acc += M[lowest_bit(m)][j];
                N[i][j] = acc;
            }
        }
        M = std::move(N);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += M[i][i];
        mpz_class ck = -tr / k;
        c[n - k] = ck;
    }
    return IntPoly(std::move(c));
}

} // namespace

IntPoly char_poly(const Graph& g) {
    std::string raw = graph_raw(g);
    {
        std::lock_guard<std::mutex> lock(cp_mutex);
        auto it = cp_cache.find(raw);
        if (it != cp_cache.end()) return it->second;
    }
    IntPoly p = char_poly_compute(g);
    std::lock_guard<std::mutex> lock(cp_mutex);
    cp_cache.emplace(std::move(raw), p);
    return p;
}

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

mpz_class det_xi_minus_a(const Graph& g, const mpz_class& x) {
    int n = g.n();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j) ? x : (g.adj(i, j) ? mpz_class(-1) : mpz_class(0));
    return det_bareiss(std::move(m));
}

int multiplicity_at(const Graph& g, const mpq_class& r) {
    int n = g.n();
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class a = g.adj(i, j) ? 1 : 0;
            m[i][j] = a * den - (i == j ? num : mpz_class(0));
        }
    return n - rank_bareiss(std::move(m));
}

bool lambda_min_geq(const Graph& g, const mpq_class& bound) {
    if (g.n() == 0) return true;
    IntPoly p = char_poly(g);
    SturmChain chain(p);
    int below_or_at = chain.count_below_or_at(bound);
    int at = squarefree_part(p).sign_at(bound) == 0 ? 1 : 0;
    return below_or_at - at == 0;
}

namespace {
std::atomic<int> isolation_exponent{30};
}

void set_isolation_exponent(int k) { isolation_exponent.store(k < 1 ? 1 : k); }

mpq_class default_isolation_width() {
    mpq_class w(1, 1);
    w /= (mpz_class(1) << isolation_exponent.load());
    return w;
}

RationalInterval extreme_eigenvalue_interval(const Graph& g, Extreme which, const mpq_class& width) {
    if (g.n() == 0) throw std::invalid_argument("empty graph has no eigenvalues");
    SturmChain chain(char_poly(g));
    return chain.isolate_extreme(which == Extreme::Max, width);
}

bool integer_radius_certify(const Graph& g, long t) {
    if (g.n() == 0) return false;
    IntPoly p = char_poly(g);
    if (p.eval(mpz_class(t)) != 0) return false;
    SturmChain chain(p);
    return chain.count_above(mpq_class(t)) == 0;
}

std::optional<long> integer_lambda_max(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    auto ev = eigenvalues_double(g);
    long cand = std::lround(ev.back());
    for (long t : {cand, cand - 1, cand + 1})
        if (integer_radius_certify(g, t)) return t;
    return std::nullopt;
}

std::optional<long> integer_lambda_min(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    auto ev = eigenvalues_double(g);
    long cand = std::lround(ev.front());
    IntPoly p = char_poly(g);
    SturmChain chain(p);
    for (long t : {cand, cand - 1, cand + 1}) {
        if (p.eval(mpz_class(t)) != 0) continue;
        int below_or_at = chain.count_below_or_at(mpq_class(t));
        if (below_or_at == 1) return t;
    }
    return std::nullopt;
}

std::vector<mpq_class> perron_vector_rational(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("perron vector needs a connected graph");
    auto lm = integer_lambda_max(g);
    if (!lm) throw std::invalid_argument("perron vector needs an integer largest eigenvalue");
    long t = *lm;
    int n = g.n();
    // solve (A - tI) x = 0 by rational elimination
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = mpq_class(g.adj(i, j) ? 1 : 0) - (i == j ? mpq_class(t) : mpq_class(0));
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        mpq_class lead = m[rank][col];
        for (int j = 0; j < n; ++j) m[rank][j] /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != n - 1) throw std::runtime_error("largest-eigenvalue eigenspace is not one-dimensional");
    // free column = the one that is no pivot
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col = c;
    std::vector<mpq_class> x(n, 0);
    x[free_col] = 1;
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -m[r][free_col];
    // verify A x = t x exactly and positivity
    mpq_class mn = x[0];
    for (const auto& xi : x) {
        if (xi <= 0) throw std::runtime_error("eigenvector is not positive");
        if (xi < mn) mn = xi;
    }
    for (auto& xi : x) xi /= mn;
    for (int i = 0; i < n; ++i) {
        mpq_class acc = 0;
        for (Mask mm = g.row(i); mm; mm &= mm - 1) acc += x[lowest_bit(mm)];
        if (acc != mpq_class(t) * x[i]) throw std::runtime_error("eigenvector verification failed");
    }
    return x;
}

bool negated_radius_is_eigenvalue(const Graph& g) {
    if (g.n() == 0) return false;
    IntPoly p = char_poly(g);
    IntPoly q = p.negate_argument();
    IntPoly common = poly_gcd(p, q);
    if (common.degree() < 1) return false;
    SturmChain chain(p);
    RationalInterval iv = chain.isolate_extreme(true, default_isolation_width());
    return SturmChain(common).count(iv.lo, iv.hi) >= 1;
}

bool scaled_radius_relation(const Graph& g, long m) {
    if (g.n() == 0 || m < 2) return false;
    IntPoly p = char_poly(g);
    IntPoly s = p.negate_argument().scale_roots(mpz_class(m - 1));
    SturmChain cp(p), cs(s);
    RationalInterval i1 = cp.isolate_extreme(true, default_isolation_width());
    RationalInterval i2 = cs.isolate_extreme(true, default_isolation_width());
    mpq_class lo = std::max(i1.lo, i2.lo), hi = std::min(i1.hi, i2.hi);
    if (lo >= hi) return false;
    IntPoly common = poly_gcd(p, s);
    if (common.degree() < 1) return false;
    return SturmChain(common).count(lo, hi) >= 1;
}

namespace {

void isolate_all(const SturmChain& chain, mpq_class lo, mpq_class hi, const mpq_class& width,
                 std::vector<RationalInterval>& out) {
    int k = chain.count(lo, hi);
    if (k == 0) return;
    if (k == 1 && hi - lo <= width) {
        out.push_back({lo, hi});
        return;
    }
    mpq_class mid = (lo + hi) / 2;
    isolate_all(chain, lo, mid, width, out);
    isolate_all(chain, mid, hi, width, out);
}

std::string display_value(double v) {
    // match integers and simple quadratic surds for presentation
    double r = std::round(v);
    if (std::abs(v - r) < 1e-6) return std::to_string(static_cast<long>(r));
    for (int a = -8; a <= 8; ++a)
        for (int k = 2; k <= 60; ++k) {
            double s = std::sqrt(static_cast<double>(k));
            if (std::abs(s - std::round(s)) < 1e-9) continue;
            for (int den : {1, 2}) {
                for (int sg : {1, -1}) {
                    double cand = (a + sg * s) / den;
                    if (std::abs(v - cand) < 1e-6) {
                        std::string core = (a == 0 ? std::string() : std::to_string(a)) +
                                           (sg > 0 ? (a == 0 ? "" : "+") : "-") + "sqrt" + std::to_string(k);
                        if (den == 2) return "(" + core + ")/2";
                        return core;
                    }
                }
            }
        }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

SpectrumFingerprint spectrum_fingerprint(const Graph& g) {
    SpectrumFingerprint fp;
    fp.poly = char_poly(g);
    if (g.n() == 0) return fp;
    auto factors = squarefree_decomposition(fp.poly);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        SturmChain chain(factors[i]);
        mpq_class b = chain.root_bound();
        std::vector<RationalInterval> roots;
        isolate_all(chain, -b, b, default_isolation_width(), roots);
        for (auto& iv : roots)
            fp.entries.push_back({iv, static_cast<int>(i + 1), display_value(iv.mid_double())});
    }
    std::sort(fp.entries.begin(), fp.entries.end(),
              [](const FingerprintEntry& a, const FingerprintEntry& b) { return a.interval.lo > b.interval.lo; });
    return fp;
}

std::vector<double> eigenvalues_double(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.adj(i, j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-15) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace hoffman
