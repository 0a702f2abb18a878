#pragma once

#include "hoffman/poly.hpp"

#include <string>
#include <vector>

namespace hoffman {

// An exact eigenvalue (p + q*sqrt(r))/s with multiplicity; q = 0 for
// rationals. Quadratic entries appear together with their conjugates.
struct SpectrumEntry {
    long p = 0, q = 0, r = 0, s = 1;
    int mult = 1;
    std::string display;
    double value() const;
};

// One row of the maximal-graph tables: order, chromatic number, the possible
// Hoffman color class size multisets, degree sequence and spectrum.
struct MaximalRow {
    std::string id; // M1..M29
    int order = 0;
    int chi = 0;
    std::vector<std::vector<int>> class_shapes; // descending multisets
    std::vector<int> degrees;                   // descending
    std::vector<SpectrumEntry> spectrum;        // descending
    std::string route;                          // regular | cone | hat | coclique
};

const std::vector<MaximalRow>& maximal_catalog();
const MaximalRow& catalog_row(const std::string& id);

// characteristic polynomial implied by the spectrum column
IntPoly expected_char_poly(const MaximalRow& row);

std::string spectrum_string(const MaximalRow& row);
std::string class_shapes_string(const MaximalRow& row);

struct BucketRow {
    std::vector<int> sizes; // the class-size set
    int total = 0;
    int maximal = 0;
};

const std::vector<BucketRow>& bucket_catalog();
std::string bucket_name(const std::vector<int>& sizes);

} // namespace hoffman
