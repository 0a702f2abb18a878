#include "hoffman/cliques.hpp"

namespace hoffman {

namespace {

using Words = std::vector<std::uint64_t>;

int count_words(const Words& w) {
    int c = 0;
    for (auto x : w) c += popcount(x);
    return c;
}

bool any_words(const Words& w) {
    for (auto x : w) if (x) return true;
    return false;
}

void bk(const BitGraph& g, Words& P, Words& X, std::vector<int>& R,
        const std::function<void(const std::vector<int>&)>& report) {
    if (!any_words(P) && !any_words(X)) {
        report(R);
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    int pivot = -1, best = -1;
    for (int pass = 0; pass < 2; ++pass) {
        const Words& src = pass == 0 ? P : X;
        for (int w = 0; w < g.words(); ++w)
            for (std::uint64_t m = src[w]; m; m &= m - 1) {
                int v = (w << 6) + lowest_bit(m);
                int cnt = 0;
                const std::uint64_t* row = g.row(v);
                for (int ww = 0; ww < g.words(); ++ww) cnt += popcount(P[ww] & row[ww]);
                if (cnt > best) {
                    best = cnt;
                    pivot = v;
                }
            }
    }
    Words cand(P);
    if (pivot >= 0) {
        const std::uint64_t* prow = g.row(pivot);
        for (int w = 0; w < g.words(); ++w) cand[w] &= ~prow[w];
    }
    for (int w = 0; w < g.words(); ++w)
        for (std::uint64_t m = cand[w]; m; m &= m - 1) {
            int v = (w << 6) + lowest_bit(m);
            const std::uint64_t* row = g.row(v);
            Words P2(g.words()), X2(g.words());
            for (int ww = 0; ww < g.words(); ++ww) {
                P2[ww] = P[ww] & row[ww];
                X2[ww] = X[ww] & row[ww];
            }
            R.push_back(v);
            bk(g, P2, X2, R, report);
            R.pop_back();
            P[w] &= ~(std::uint64_t{1} << (v & 63));
            X[w] |= std::uint64_t{1} << (v & 63);
        }
}

void all_rec(const BitGraph& g, Words& allowed, std::vector<int>& R, int min_size,
             const std::function<void(const std::vector<int>&)>& report) {
    for (int w = 0; w < g.words(); ++w)
        for (std::uint64_t m = allowed[w]; m; m &= m - 1) {
            int v = (w << 6) + lowest_bit(m);
            R.push_back(v);
            if (static_cast<int>(R.size()) >= min_size) report(R);
            const std::uint64_t* row = g.row(v);
            Words next(g.words(), 0);
            // only candidates with index > v
            for (int ww = 0; ww < g.words(); ++ww) next[ww] = allowed[ww] & row[ww];
            next[w] &= ~((std::uint64_t{2} << (v & 63)) - 1);
            for (int ww = 0; ww < w; ++ww) next[ww] = 0;
            all_rec(g, next, R, min_size, report);
            R.pop_back();
        }
}

} // namespace

void maximal_cliques(const BitGraph& g, const std::function<void(const std::vector<int>&)>& report) {
    Words P(g.words(), 0), X(g.words(), 0);
    for (int v = 0; v < g.n(); ++v) P[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> R;
    bk(g, P, X, R, report);
}

void all_cliques(const BitGraph& g, int min_size, const std::function<void(const std::vector<int>&)>& report) {
    Words allowed(g.words(), 0);
    for (int v = 0; v < g.n(); ++v) allowed[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> R;
    all_rec(g, allowed, R, min_size, report);
}

namespace {

void bk_mask(const std::vector<Mask>& rows, Mask P, Mask X, Mask R, std::vector<Mask>& out) {
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    Mask PX = P | X;
    int pivot = -1, best = -1;
    for (Mask m = PX; m; m &= m - 1) {
        int v = lowest_bit(m);
        int cnt = popcount(P & rows[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    Mask cand = P & ~rows[pivot];
    for (Mask m = cand; m; m &= m - 1) {
        int v = lowest_bit(m);
        bk_mask(rows, P & rows[v], X & rows[v], R | bit(v), out);
        P &= ~bit(v);
        X |= bit(v);
    }
}

} // namespace

std::vector<Mask> maximal_cliques_mask(const std::vector<Mask>& rows, int n) {
    std::vector<Mask> out;
    if (n == 0) return out;
    bk_mask(rows, all_mask(n), 0, 0, out);
    return out;
}

std::vector<Mask> maximal_cocliques(const Graph& g) {
    std::vector<Mask> rows(g.n());
    for (int v = 0; v < g.n(); ++v) rows[v] = ~g.row(v) & ~bit(v) & g.vertices();
    return maximal_cliques_mask(rows, g.n());
}

namespace {

void cocliques_rec(const Graph& g, Mask cand, Mask cur, int want, std::vector<Mask>& out) {
    int have = popcount(cur);
    if (have == want) {
        out.push_back(cur);
        return;
    }
    if (have + popcount(cand) < want) return;
    while (cand) {
        int v = lowest_bit(cand);
        cand &= ~bit(v);
        Mask next = cand & ~g.row(v);
        cocliques_rec(g, next, cur | bit(v), want, out);
        if (popcount(cur) + 1 + popcount(cand) < want) return;
    }
}

} // namespace

std::vector<Mask> cocliques_of_size(const Graph& g, int size) {
    std::vector<Mask> out;
    if (size == 0) {
        out.push_back(0);
        return out;
    }
    cocliques_rec(g, g.vertices(), 0, size, out);
    return out;
}

} // namespace hoffman
