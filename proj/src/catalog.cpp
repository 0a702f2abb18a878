#include "hoffman/catalog.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hoffman {

double SpectrumEntry::value() const { return (p + q * std::sqrt(static_cast<double>(r))) / s; }

namespace {

SpectrumEntry ev(long v, int mult) { return {v, 0, 0, 1, mult, std::to_string(v)}; }
SpectrumEntry quad(long p, long q, long r, long s, int mult, std::string display) {
    return {p, q, r, s, mult, std::move(display)};
}

std::vector<int> degs(std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> out;
    for (auto [d, c] : runs)
        for (int i = 0; i < c; ++i) out.push_back(d);
    return out;
}

std::vector<MaximalRow> build_catalog() {
    std::vector<MaximalRow> rows;
    auto add = [&](std::string id, int order, int chi, std::vector<std::vector<int>> shapes,
                   std::vector<int> degrees, std::vector<SpectrumEntry> spec, std::string route) {
        rows.push_back({std::move(id), order, chi, std::move(shapes), std::move(degrees), std::move(spec),
                        std::move(route)});
    };
    auto sqrt2p = quad(0, 1, 2, 1, 2, "sqrt2");
    auto sqrt2m = quad(0, -1, 2, 1, 2, "-sqrt2");
    add("M1", 11, 3, {{5, 3, 3}}, degs({{6, 2}, {4, 2}, {3, 4}, {2, 3}}),
        {ev(4, 1), sqrt2p, ev(1, 2), ev(0, 1), sqrt2m, ev(-2, 3)}, "coclique");
    add("M2", 11, 3, {{5, 3, 3}}, degs({{6, 2}, {4, 2}, {3, 4}, {2, 3}}),
        {ev(4, 1), ev(2, 1), ev(1, 2), ev(0, 3), ev(-2, 4)}, "coclique");
    add("M3", 13, 3, {{5, 5, 3}}, degs({{6, 1}, {4, 8}, {2, 4}}),
        {ev(4, 1), ev(2, 2), ev(1, 2), ev(0, 3), ev(-2, 5)}, "coclique");
    add("M4", 15, 4, {{6, 3, 3, 3}}, degs({{8, 1}, {7, 4}, {6, 6}, {3, 4}}),
        {ev(6, 1), ev(3, 2), ev(1, 2), ev(0, 3), ev(-2, 7)}, "coclique");
    add("M5", 16, 5, {{4, 3, 3, 3, 3}}, degs({{12, 1}, {8, 12}, {4, 3}}),
        {ev(8, 1), ev(2, 5), ev(0, 1), ev(-2, 9)}, "hat");
    add("M6", 18, 5, {{6, 3, 3, 3, 3}}, degs({{9, 8}, {8, 6}, {4, 4}}),
        {ev(8, 1), ev(4, 1), ev(2, 4), ev(0, 2), ev(-2, 10)}, "coclique");
    for (const char* id : {"M7", "M8", "M9"})
        add(id, 18, 5, {{6, 3, 3, 3, 3}}, degs({{9, 8}, {8, 6}, {4, 4}}),
            {ev(8, 1), quad(2, 1, 2, 1, 2, "2+sqrt2"), ev(2, 2), quad(2, -1, 2, 1, 2, "2-sqrt2"), ev(0, 1),
             ev(-2, 10)},
            "coclique");
    add("M10", 20, 7, {{5, 5, 2, 2, 2, 2, 2}}, degs({{14, 10}, {13, 2}, {7, 4}, {6, 4}}),
        {ev(12, 1), ev(3, 1), ev(2, 4), ev(1, 1), ev(0, 1), ev(-2, 12)}, "coclique");
    for (const char* id : {"M11", "M12", "M13", "M14", "M15", "M16", "M17", "M18", "M19"})
        add(id, 21, 6, {{4, 4, 4, 4, 4, 1}}, degs({{20, 1}, {9, 20}}),
            {ev(10, 1), quad(5, 1, 5, 2, 2, "2+phi"), ev(3, 2), quad(5, -1, 5, 2, 2, "3-phi"), ev(0, 1),
             ev(-2, 13)},
            "cone");
    add("M20", 21, 7, {{3, 3, 3, 3, 3, 3, 3}}, degs({{12, 21}}),
        {ev(12, 1), ev(4, 1), ev(3, 4), ev(0, 1), ev(-2, 14)}, "regular");
    add("M21", 22, 8, {{5, 5, 2, 2, 2, 2, 2, 2}, {8, 2, 2, 2, 2, 2, 2, 2}}, degs({{16, 14}, {7, 8}}),
        {ev(14, 1), ev(2, 7), ev(-2, 14)}, "coclique");
    for (const char* id : {"M22", "M23"})
        add(id, 22, 7, {{4, 3, 3, 3, 3, 3, 3}}, degs({{18, 1}, {12, 18}, {6, 3}}),
            {ev(12, 1), ev(4, 1), ev(3, 4), ev(0, 2), ev(-2, 14)}, "hat");
    add("M24", 27, 9, {{3, 3, 3, 3, 3, 3, 3, 3, 3}}, degs({{16, 27}}),
        {ev(16, 1), ev(4, 6), ev(-2, 20)}, "regular");
    add("M25", 28, 9, {{4, 3, 3, 3, 3, 3, 3, 3, 3}}, degs({{24, 1}, {16, 24}, {8, 3}}),
        {ev(16, 1), ev(4, 6), ev(0, 1), ev(-2, 20)}, "hat");
    for (const char* id : {"M26", "M27", "M28", "M29"})
        add(id, 29, 8, {{4, 4, 4, 4, 4, 4, 4, 1}}, degs({{28, 1}, {13, 28}}),
            {ev(14, 1), ev(4, 7), ev(-2, 21)}, "cone");
    return rows;
}

} // namespace

const std::vector<MaximalRow>& maximal_catalog() {
    static std::vector<MaximalRow> rows = build_catalog();
    return rows;
}

const MaximalRow& catalog_row(const std::string& id) {
    for (const auto& r : maximal_catalog())
        if (r.id == id) return r;
    throw std::invalid_argument("no catalog row " + id);
}

IntPoly expected_char_poly(const MaximalRow& row) {
    IntPoly p = IntPoly::constant(1);
    std::map<std::pair<long, long>, bool> quad_done; // keyed by (2p/s?, ...) handled below
    for (const auto& en : row.spectrum) {
        if (en.q == 0) {
            if (en.s != 1) throw std::logic_error("non-integer rational eigenvalue in catalog");
            IntPoly lin({mpz_class(-en.p), mpz_class(1)});
            for (int k = 0; k < en.mult; ++k) p = p * lin;
        } else if (en.q > 0) {
            // pair with the conjugate entry; minimal polynomial
            // s^2 x^2 - 2 p s x + (p^2 - q^2 r), divided by s^2
            mpz_class s2 = mpz_class(en.s) * en.s;
            mpz_class b = mpz_class(-2) * en.p * en.s;
            mpz_class c = mpz_class(en.p) * en.p - mpz_class(en.q) * en.q * en.r;
            if (b % s2 != 0 || c % s2 != 0) throw std::logic_error("non-integral quadratic factor in catalog");
            IntPoly q2({c / s2, b / s2, mpz_class(1)});
            for (int k = 0; k < en.mult; ++k) p = p * q2;
        }
        // q < 0: covered by the conjugate entry
    }
    return p;
}

std::string spectrum_string(const MaximalRow& row) {
    std::string s;
    for (const auto& en : row.spectrum) {
        if (!s.empty()) s += ",";
        s += en.display;
        if (en.mult > 1) s += "^" + std::to_string(en.mult);
    }
    return s;
}

std::string class_shapes_string(const MaximalRow& row) {
    std::string s;
    for (std::size_t i = 0; i < row.class_shapes.size(); ++i) {
        if (i) s += " or ";
        const auto& shape = row.class_shapes[i];
        for (std::size_t j = 0; j < shape.size();) {
            std::size_t k = j;
            while (k < shape.size() && shape[k] == shape[j]) ++k;
            if (j) s += ",";
            s += std::to_string(shape[j]);
            if (k - j > 1) s += "^" + std::to_string(k - j);
            j = k;
        }
    }
    return s;
}

const std::vector<BucketRow>& bucket_catalog() {
    static std::vector<BucketRow> rows = {
        {{3}, 17, 2},      {{4}, 70, 0},       {{1, 4}, 87, 13}, {{3, 4}, 35, 4},
        {{2, 5}, 17, 1},   {{2, 5, 8}, 6, 1},  {{3, 5}, 3, 3},   {{3, 6}, 10, 5},
    };
    return rows;
}

std::string bucket_name(const std::vector<int>& sizes) {
    std::string s = "{";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes[i]);
    }
    return s + "}";
}

} // namespace hoffman
