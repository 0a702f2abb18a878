#pragma once

#include "hoffman/catalog.hpp"
#include "hoffman/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hoffman {

// A machine-checkable representation certificate: a list of E8 root names
// whose decoded graph is claimed to lie in a class, together with the table
// claims attached to the named maximal graphs.
struct Certificate {
    std::string id;
    std::string bucket;               // {3,4} {2,5} {2,5,8} {3,5} {3,6} e7a e7b e7c
    std::vector<std::string> vectors; // root names
    std::string maximal_id;           // M1..M29 when the row is a named maximal graph
    // hat-route certificates also name the regular graph and its class
    // complement in the ratio-3 hierarchy
    std::string lattice_g, lattice_g_del_c;
};

const std::vector<Certificate>& load_certificates();

struct CertReport {
    std::string id;
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

CertReport verify_certificate(const Certificate& cert);

// serialization: one record per line, fields separated by tabs:
// id <tab> bucket <tab> vectors (space separated) <tab> claims (k=v;...)
std::string export_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& line);

} // namespace hoffman
