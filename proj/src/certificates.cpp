#include "hoffman/certificates.hpp"

#include "hoffman/canon.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/genline.hpp"
#include "hoffman/roots.hpp"
#include "hoffman/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace hoffman {

namespace {

std::vector<std::string> a_names(std::initializer_list<int> pairs) {
    std::vector<std::string> out;
    for (int p : pairs) out.push_back("a" + std::to_string(p));
    return out;
}

void add_names(std::vector<std::string>& dst, const char* type, std::initializer_list<int> idx) {
    for (int p : idx) dst.push_back(type + std::to_string(p));
}

struct HatRow {
    const char* label; // maximal id or ""
    const char* g;
    const char* g_del_c;
    std::initializer_list<int> a;
    std::initializer_list<int> b;
};

const HatRow hat_rows[] = {
    {"", "L(K33)", "C6", {36, 37, 45, 47, 58, 68}, {12, 35, 46, 78}},
    {"", "164", "C6", {13, 24, 35, 36, 45, 47, 68, 78}, {12, 34}},
    {"", "L(K3xK2)", "C6", {36, 37, 45, 48, 57, 68}, {12, 35, 46, 78}},
    {"", "166", "L(K33)", {13, 24, 35, 36, 37, 45, 46, 47, 58, 68, 78}, {12, 34}},
    {"", "166", "164", {34, 35, 36, 45, 47, 68, 78}, {12, 13, 24, 37, 46, 58}},
    {"", "170", "164", {14, 23, 35, 36, 37, 45, 48, 67, 68}, {12, 13, 26, 34}},
    {"", "167", "164", {34, 35, 37, 45, 46, 68, 78}, {12, 13, 24, 36, 48, 57}},
    {"", "167", "L(K3xK2)", {13, 24, 35, 36, 37, 45, 46, 48, 57, 68, 78}, {12, 34}},
    {"", "L(CP3)", "L(K3xK2)", {35, 36, 37, 45, 46, 48, 57, 68, 78}, {12, 38, 47, 56}},
    {"", "174", "166", {14, 23, 35, 36, 37, 38, 45, 46, 47, 58, 68, 78}, {12, 13, 28, 34}},
    {"", "174", "170", {34, 35, 36, 38, 45, 47, 68, 78}, {12, 13, 14, 23, 28, 37, 46, 58}},
    {"", "176", "166", {15, 24, 34, 35, 36, 47, 58, 67}, {12, 13, 14, 16, 23, 25, 27, 45}},
    {"", "176", "170", {14, 23, 35, 36, 45, 47, 58, 67}, {12, 13, 15, 16, 24, 25, 27, 34}},
    {"", "176", "167", {15, 23, 34, 36, 45, 47, 58, 67}, {12, 13, 14, 16, 24, 25, 27, 35}},
    {"", "173", "170", {34, 35, 37, 38, 46, 47, 56, 58}, {12, 13, 14, 23, 25, 36, 45, 78}},
    {"", "173", "167", {14, 23, 35, 36, 37, 38, 45, 46, 47, 56, 58, 78}, {12, 13, 25, 34}},
    {"", "172", "167", {14, 26, 34, 35, 36, 37, 45, 48, 57, 58, 67, 68}, {12, 13, 25, 46}},
    {"", "171", "167", {34, 35, 36, 37, 45, 46, 48, 57, 68, 78}, {12, 13, 24, 38, 47, 56}},
    {"", "171", "L(CP3)", {13, 24, 35, 36, 37, 38, 45, 46, 47, 48, 56, 57, 68, 78}, {12, 34}},
    {"M5", "L(K6)", "L(CP3)", {35, 36, 37, 38, 45, 46, 47, 48, 56, 57, 68, 78}, {12, 34, 58, 67}},
    {"", "179", "174", {15, 24, 34, 35, 36, 37, 38, 46, 47, 48, 56, 57, 58}, {12, 13, 14, 23, 25, 45}},
    {"", "180", "174", {35, 36, 37, 45, 46, 48, 78}, {12, 13, 14, 15, 16, 23, 24, 27, 28, 34, 57, 68}},
    {"", "180", "176", {14, 28, 34, 35, 36, 37, 45, 46, 57, 68, 78}, {12, 13, 15, 16, 23, 24, 27, 48}},
    {"", "180", "173", {15, 27, 34, 35, 36, 37, 45, 46, 48, 68, 78}, {12, 13, 14, 16, 23, 24, 28, 57}},
    {"", "178", "173", {15, 28, 34, 35, 36, 37, 45, 46, 48, 57, 67, 68, 78}, {12, 13, 14, 26, 27, 58}},
    {"", "177", "173", {34, 36, 37, 38, 45, 46, 48, 56, 57, 58, 67}, {12, 13, 14, 25, 26, 35, 47, 68}},
    {"", "177", "172", {34, 35, 36, 37, 45, 46, 48, 57, 58, 67, 68}, {12, 13, 14, 25, 26, 38, 47, 56}},
    {"", "177", "171", {14, 25, 34, 35, 36, 37, 38, 46, 47, 48, 56, 57, 58, 67, 68}, {12, 13, 26, 45}},
    {"", "182", "179", {35, 36, 37, 38, 45, 46, 47, 48, 56, 78},
     {12, 13, 14, 15, 16, 23, 24, 27, 28, 34, 57, 68}},
    {"", "182", "180", {34, 35, 36, 37, 45, 46, 48, 57, 68, 78},
     {12, 13, 14, 15, 16, 23, 24, 27, 28, 38, 47, 56}},
    {"", "182", "178", {14, 23, 35, 36, 37, 38, 45, 46, 47, 48, 56, 57, 68, 78},
     {12, 13, 15, 16, 24, 27, 28, 34}},
    {"M22", "181", "178", {34, 35, 36, 37, 45, 46, 48, 57, 58, 67, 68, 78},
     {12, 13, 14, 15, 26, 27, 28, 38, 47, 56}},
    {"M23", "181", "177", {35, 36, 37, 38, 45, 46, 47, 48, 57, 58, 67, 68},
     {12, 13, 14, 15, 26, 27, 28, 34, 56, 78}},
    {"", "183", "182", {16, 25, 34, 35, 36, 37, 38, 45, 46, 47, 48, 57, 58, 67, 68},
     {12, 13, 14, 15, 17, 23, 24, 26, 28, 56}},
    {"M25", "184", "183", {18, 27, 34, 35, 36, 37, 38, 45, 46, 47, 48, 56, 57, 58, 67, 68},
     {12, 13, 14, 15, 16, 17, 23, 24, 25, 26, 28, 78}},
};

struct ABRow {
    const char* label;
    std::initializer_list<int> a;
    std::initializer_list<int> b;
};

// one color class of size five, the remaining classes of size two
const ABRow t25_one[] = {
    {"", {12, 13, 24, 34}, {}},
    {"", {12, 13, 24, 34}, {56, 78}},
    {"", {12, 13, 14, 23, 24, 34}, {}},
    {"", {12, 13, 24, 34}, {56, 57, 68, 78}},
    {"", {12, 13, 14, 23, 24, 34}, {56, 78}},
    {"", {12, 13, 14, 23, 24, 34}, {56, 57, 68, 78}},
    {"", {12, 13, 14, 23, 24, 34}, {56, 57, 58, 67, 68, 78}},
};

const ABRow t258[] = {
    {"", {12, 13, 24, 34}, {}},
    {"", {12, 13, 24, 34}, {58, 67}},
    {"", {12, 13, 14, 23, 24, 34}, {}},
    {"", {12, 13, 14, 23, 24, 34}, {56, 78}},
    {"", {12, 13, 14, 23, 24, 34}, {56, 57, 68, 78}},
    {"M21", {12, 13, 14, 23, 24, 34}, {56, 57, 58, 67, 68, 78}},
};

const ABRow t36[] = {
    {"", {15, 24, 34, 36}, {37, 48}},
    {"", {13, 24, 34, 56}, {37, 48}},
    {"", {13, 15, 24, 26, 36, 45, 56}, {58, 67}},
    {"", {14, 15, 23, 26, 34, 36, 56}, {37, 68}},
    {"", {13, 14, 23, 26, 34, 45, 56}, {38, 47}},
    {"M4", {12, 14, 23, 34, 36, 45, 56}, {37, 48}},
    {"M6", {13, 15, 24, 26, 34, 36, 45, 56}, {38, 47, 58, 67}},
    {"M7", {13, 15, 24, 26, 34, 36, 45, 56}, {38, 47, 57, 68}},
    {"M8", {13, 14, 23, 26, 34, 36, 45, 56}, {37, 38, 47, 68}},
    {"M9", {13, 14, 15, 23, 24, 26, 34, 36, 45, 56}, {37, 48}},
};

// two color classes of size five; five vector choices, each with and without
// the pair a12, a34
const std::initializer_list<int> t25_two_b[] = {
    {56, 78}, {56, 57, 68, 78}, {57, 58, 67, 68}, {56, 57, 58, 67, 68, 78}, {56, 57, 58, 67, 68, 78},
};

// the 27 maximal E7-representable cone graphs: e plus a/b on all pairs
// {i,j}, i in 1..4, j in 5..8, with these choices represented by a-vectors
const std::vector<std::vector<int>> e7a_choices = {
    {},
    {15},
    {15, 16},
    {15, 26},
    {15, 16, 17},
    {15, 16, 27},
    {15, 16, 25},
    {15, 26, 37},
    {15, 16, 17, 25},
    {15, 16, 17, 28},
    {15, 16, 25, 27},
    {15, 16, 27, 28},
    {15, 16, 25, 37},
    {15, 16, 27, 38},
    {15, 16, 27, 37},
    {15, 26, 37, 48},
    {15, 16, 17, 25, 28},
    {15, 16, 17, 25, 35},
    {15, 16, 17, 25, 36},
    {15, 16, 17, 28, 38},
    {15, 16, 25, 27, 36},
    {15, 16, 25, 27, 38},
    {15, 16, 27, 37, 48},
    {15, 16, 17, 25, 36, 47},
    {15, 16, 17, 28, 38, 48},
    {15, 16, 25, 27, 36, 37},
    {15, 16, 17, 18, 25, 35, 45},
};

struct E7BRow {
    std::vector<int> a, c, d;
};

const std::vector<E7BRow> e7b_choices = {
    {{15, 16, 17, 18}, {12, 13, 14}, {}},
    {{15, 16, 25, 26}, {}, {3478}},
    {{15, 16, 17, 18, 25}, {13, 14}, {}},
    {{15, 16, 17, 25, 26}, {}, {3478}},
    {{15, 16, 17, 18, 25, 35}, {14}, {}},
    {{15, 16, 17, 25, 26, 27}, {}, {3458, 3468, 3478}},
    {{15, 16, 17, 25, 26, 28}, {}, {3478}},
    {{15, 16, 17, 25, 26, 35}, {}, {3478}},
    {{15, 16, 17, 18, 25, 26, 27}, {13, 14}, {3458, 3468, 3478}},
    {{15, 16, 17, 18, 25, 26, 27, 28}, {13, 14, 23, 24}, {3456, 3457, 3458, 3467, 3468, 3478}},
};

std::vector<Certificate> build_certificates() {
    std::vector<Certificate> out;
    int idx = 0;
    for (const auto& row : hat_rows) {
        Certificate c;
        c.id = "t34-" + std::to_string(++idx);
        c.bucket = "{3,4}";
        c.maximal_id = row.label;
        c.lattice_g = row.g;
        c.lattice_g_del_c = row.g_del_c;
        add_names(c.vectors, "a", row.a);
        add_names(c.vectors, "b", row.b);
        out.push_back(std::move(c));
    }
    idx = 0;
    for (const auto& row : t25_one) {
        Certificate c;
        c.id = "t25a-" + std::to_string(++idx);
        c.bucket = "{2,5}";
        c.maximal_id = row.label;
        c.vectors = a_names({15, 26, 37, 48});
        c.vectors.push_back("d5678");
        add_names(c.vectors, "a", row.a);
        add_names(c.vectors, "b", row.b);
        out.push_back(std::move(c));
    }
    for (int choice = 0; choice < 5; ++choice)
        for (int with_pair = 0; with_pair < 2; ++with_pair) {
            Certificate c;
            c.id = "t25b-" + std::to_string(choice + 1) + (with_pair ? "p" : "");
            c.bucket = "{2,5}";
            if (choice == 4 && with_pair) c.maximal_id = "M10";
            c.vectors = {"a13", "a26", "c26", "a47", "c47", "a23", "a15", "c15", "a48", "c48"};
            if (choice == 4) {
                c.vectors.push_back("d5678");
                c.vectors.push_back("e");
            }
            for (int b : t25_two_b[choice]) c.vectors.push_back("b" + std::to_string(b));
            if (with_pair) {
                c.vectors.push_back("a12");
                c.vectors.push_back("a34");
            }
            out.push_back(std::move(c));
        }
    idx = 0;
    for (const auto& row : t258) {
        Certificate c;
        c.id = "t258-" + std::to_string(++idx);
        c.bucket = "{2,5,8}";
        c.maximal_id = row.label;
        c.vectors = {"a15", "c15", "a26", "c26", "a37", "c37", "a48", "c48", "d5678", "e"};
        add_names(c.vectors, "a", row.a);
        add_names(c.vectors, "b", row.b);
        out.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "t35-1";
        c.bucket = "{3,5}";
        c.maximal_id = "M1";
        c.vectors = a_names({12, 15, 17, 26, 28, 35, 38, 46, 47});
        c.vectors.push_back("b56");
        c.vectors.push_back("d5678");
        out.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "t35-2";
        c.bucket = "{3,5}";
        c.maximal_id = "M2";
        c.vectors = a_names({12, 15, 17, 26, 28, 35, 37, 46, 48});
        c.vectors.push_back("b56");
        c.vectors.push_back("d5678");
        out.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "t35-3";
        c.bucket = "{3,5}";
        c.maximal_id = "M3";
        c.vectors = a_names({12, 13, 14, 23, 24, 35, 46, 57, 68});
        c.vectors.push_back("b34");
        c.vectors.push_back("c57");
        c.vectors.push_back("c68");
        c.vectors.push_back("d3478");
        out.push_back(std::move(c));
    }
    idx = 0;
    for (const auto& row : t36) {
        Certificate c;
        c.id = "t36-" + std::to_string(++idx);
        c.bucket = "{3,6}";
        c.maximal_id = row.label;
        c.vectors = {"a17", "c17", "a28", "c28", "a35", "a46"};
        add_names(c.vectors, "a", row.a);
        add_names(c.vectors, "b", row.b);
        out.push_back(std::move(c));
    }
    // maximal E7-representable graphs; types (a)/(b) orthogonal to d1234,
    // type (c) orthogonal to e
    std::vector<int> cross_pairs;
    for (int i = 1; i <= 4; ++i)
        for (int j = 5; j <= 8; ++j) cross_pairs.push_back(10 * i + j);
    idx = 0;
    for (const auto& a_set : e7a_choices) {
        Certificate c;
        c.id = "e7a-" + std::to_string(++idx);
        c.bucket = "e7a";
        c.vectors.push_back("e");
        for (int p : cross_pairs) {
            bool in_a = std::find(a_set.begin(), a_set.end(), p) != a_set.end();
            c.vectors.push_back((in_a ? "a" : "b") + std::to_string(p));
        }
        out.push_back(std::move(c));
    }
    idx = 0;
    for (const auto& row : e7b_choices) {
        Certificate c;
        c.id = "e7b-" + std::to_string(++idx);
        c.bucket = "e7b";
        c.vectors.push_back("e");
        for (int p : cross_pairs) {
            bool in_a = std::find(row.a.begin(), row.a.end(), p) != row.a.end();
            c.vectors.push_back((in_a ? "a" : "b") + std::to_string(p));
        }
        for (int p : row.c) c.vectors.push_back("c" + std::to_string(p));
        for (int p : row.d) c.vectors.push_back("d" + std::to_string(p));
        out.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "e7c-1";
        c.bucket = "e7c";
        for (int i = 1; i <= 7; ++i) c.vectors.push_back("c" + std::to_string(i) + "8");
        for (int t : {145, 167, 246, 257, 347, 356, 456, 457, 467, 567})
            c.vectors.push_back("d" + std::to_string(t) + "8");
        out.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "e7c-2";
        c.bucket = "e7c";
        for (int i = 1; i <= 7; ++i) c.vectors.push_back("c" + std::to_string(i) + "8");
        // lines of the Fano plane
        for (int t : {123, 145, 167, 246, 257, 347, 356}) c.vectors.push_back("d" + std::to_string(t) + "8");
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

const std::vector<Certificate>& load_certificates() {
    static std::vector<Certificate> certs = build_certificates();
    return certs;
}

namespace {

bool multiset_eq(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

CertReport verify_certificate(const Certificate& cert) {
    CertReport rep;
    rep.id = cert.id;
    Graph g;
    try {
        g = decode_representation(cert.vectors);
    } catch (const std::exception& ex) {
        rep.fail(std::string("decode: ") + ex.what());
        return rep;
    }
    const RootTable& t = e8();
    if (cert.bucket == "e7a" || cert.bucket == "e7b" || cert.bucket == "e7c") {
        // subsystem membership
        std::string axis = cert.bucket == "e7c" ? "e" : "d1234";
        int ax = t.by_name(axis);
        for (const auto& name : cert.vectors)
            if (t.inner(t.by_name(name), ax) != 0) rep.fail("vector " + name + " not orthogonal to " + axis);
        if (cert.bucket == "e7a") {
            if (g.n() != 17) rep.fail("type (a) graphs have 17 vertices");
            if (!has_universal_vertex(g)) rep.fail("type (a) graphs are cones");
        } else if (cert.bucket == "e7b") {
            if (g.n() <= 17) rep.fail("type (b) graphs have more than 17 vertices");
            if (g.degree_sequence().front() != 16)
                rep.fail("type (b) graphs have maximal degree 16");
        } else {
            if (g.degree_sequence().front() >= 16)
                rep.fail("type (c) graphs have maximal degree below 16");
        }
        if (!is_connected(g)) rep.fail("not connected");
        return rep;
    }
    // Hoffman colorable exceptional graph certificates
    if (!is_connected(g)) rep.fail("not connected");
    if (!lambda_min_geq(g, mpq_class(-2))) rep.fail("smallest eigenvalue below -2");
    if (rep.pass && recognize_glg(g)) rep.fail("graph is a generalized line graph");
    if (!rep.pass) return rep;
    HoffmanReport hr = hoffman_report(g);
    if (!hr.colorable) rep.fail("not Hoffman colorable");
    if (is_trivially_colorable(g)) rep.fail("only trivially colorable");
    if (!rep.pass) return rep;
    auto sizes = class_size_set(g);
    std::string got = "{";
    for (auto it = sizes.begin(); it != sizes.end(); ++it)
        got += (it == sizes.begin() ? "" : ",") + std::to_string(*it);
    got += "}";
    if (got != cert.bucket) rep.fail("class sizes " + got + ", claimed " + cert.bucket);
    if (!cert.maximal_id.empty()) {
        const MaximalRow& row = catalog_row(cert.maximal_id);
        if (g.n() != row.order) rep.fail("order mismatch vs " + row.id);
        if (hr.chi != row.chi) rep.fail("chromatic number mismatch vs " + row.id);
        if (!multiset_eq(g.degree_sequence(), row.degrees)) rep.fail("degree sequence mismatch vs " + row.id);
        if (!(char_poly(g) == expected_char_poly(row))) rep.fail("spectrum mismatch vs " + row.id);
        // class size shapes over all Hoffman colorings
        auto colorings = enumerate_hoffman_colorings(g);
        std::vector<std::vector<int>> shapes;
        for (const auto& col : colorings) {
            std::vector<int> shape;
            for (Mask c : col) shape.push_back(popcount(c));
            std::sort(shape.rbegin(), shape.rend());
            if (std::find(shapes.begin(), shapes.end(), shape) == shapes.end()) shapes.push_back(shape);
        }
        for (const auto& shape : row.class_shapes)
            if (std::find(shapes.begin(), shapes.end(), shape) == shapes.end())
                rep.fail("missing coloring shape vs " + row.id);
        if (shapes.size() != row.class_shapes.size()) rep.fail("extra coloring shapes vs " + row.id);
    }
    return rep;
}

std::string export_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << cert.id << '\t' << cert.bucket << '\t';
    for (std::size_t i = 0; i < cert.vectors.size(); ++i) os << (i ? " " : "") << cert.vectors[i];
    os << '\t';
    std::vector<std::string> claims;
    if (!cert.maximal_id.empty()) claims.push_back("maximal=" + cert.maximal_id);
    if (!cert.lattice_g.empty()) claims.push_back("g=" + cert.lattice_g);
    if (!cert.lattice_g_del_c.empty()) claims.push_back("gdelc=" + cert.lattice_g_del_c);
    for (std::size_t i = 0; i < claims.size(); ++i) os << (i ? ";" : "") << claims[i];
    return os.str();
}

Certificate parse_certificate(const std::string& line) {
    Certificate c;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == '\t') {
            fields.push_back(cur);
            cur.clear();
        } else
            cur.push_back(ch);
    }
    fields.push_back(cur);
    if (fields.size() != 4) throw std::invalid_argument("certificate record needs 4 tab fields");
    c.id = fields[0];
    c.bucket = fields[1];
    std::istringstream vs(fields[2]);
    std::string tok;
    while (vs >> tok) c.vectors.push_back(tok);
    std::istringstream cs(fields[3]);
    while (std::getline(cs, tok, ';')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "maximal") c.maximal_id = v;
        if (k == "g") c.lattice_g = v;
        if (k == "gdelc") c.lattice_g_del_c = v;
    }
    return c;
}

} // namespace hoffman
