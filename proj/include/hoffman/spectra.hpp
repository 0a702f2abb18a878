#pragma once

#include "hoffman/graph.hpp"
#include "hoffman/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hoffman {

// det(tI - A) with exact integer coefficients (Faddeev-LeVerrier); cached.
IntPoly char_poly(const Graph& g);

// Independent oracle: det(xI - A) by fraction-free elimination.
mpz_class det_xi_minus_a(const Graph& g, const mpz_class& x);

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m);
int rank_bareiss(std::vector<std::vector<mpz_class>> m);

// dimension of the r-eigenspace: n - rank(A - rI)
int multiplicity_at(const Graph& g, const mpq_class& r);

// exact: no eigenvalue strictly below bound
bool lambda_min_geq(const Graph& g, const mpq_class& bound);

enum class Extreme { Min, Max };
RationalInterval extreme_eigenvalue_interval(const Graph& g, Extreme which, const mpq_class& width);

// default isolation width 2^-30; adjustable for the command line override
mpq_class default_isolation_width();
void set_isolation_exponent(int k);

// true iff t is an eigenvalue and no eigenvalue exceeds t; certifies
// lambda_max(g) = t exactly (g connected, non-empty)
bool integer_radius_certify(const Graph& g, long t);

// certified integer lambda_max when it exists
std::optional<long> integer_lambda_max(const Graph& g);
std::optional<long> integer_lambda_min(const Graph& g);

// strictly positive rational eigenvector for integer lambda_max, normalized
// so the minimum entry is 1
std::vector<mpq_class> perron_vector_rational(const Graph& g);

// -lambda_max(g) is an eigenvalue of g
bool negated_radius_is_eigenvalue(const Graph& g);

// lambda_max(g) = -(m-1) * lambda_min(g), decided exactly
bool scaled_radius_relation(const Graph& g, long m);

struct FingerprintEntry {
    RationalInterval interval;
    int multiplicity;
    std::string display;
};

struct SpectrumFingerprint {
    IntPoly poly;
    std::vector<FingerprintEntry> entries; // sorted descending
};

SpectrumFingerprint spectrum_fingerprint(const Graph& g);

// floating-point eigenvalues (Jacobi), ascending; used only to pick
// candidates that are then certified exactly
std::vector<double> eigenvalues_double(const Graph& g);

} // namespace hoffman
