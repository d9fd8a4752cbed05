#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/curve.hpp"
#include "steinitz/pseudo_module.hpp"

namespace steinitz {

/// One record of a dataset file.  The format is line-based:
///
///   # comment
///   field D=10 d=5
///
///   begin cm_lattice label=ok_lattice
///   sigma = [[1,0],[0,-1]]
///   S = [[0,-10],[1,0]]
///   expect_steinitz = principal
///   end
///
/// Rationals are written p/q, K-numbers a+b*w on the integral basis (for
/// example 1/2+3w), tower elements as 4-component rational vectors
/// [c0,c1,c2,c3] on (1, sqrt d, sqrt -D, sqrt -dD), matrices as row lists.
struct DatasetEntry {
    enum class Kind { Triple, Involution, CMLatticeRec, PseudoModuleRec, CurveRec };
    Kind kind;
    std::string label;
    std::size_t index = 0;

    // triple
    unsigned l = 0;
    Int h1{1}, idx{1};

    // involution / cm_lattice
    ZMat sigma, s;

    // pseudo_module
    std::size_t n = 0;
    std::vector<std::vector<KNum>> gens;

    // curve
    TowerElem a2, a4, a6;
    std::vector<CurvePoint> seeds_plus, seeds_minus;
    std::optional<CMMapData> maps;
    std::optional<ZMat> expect_sigma, expect_s;
    unsigned bound = 3;
    unsigned samples = 50;

    /// Free-form expectations (expect_steinitz, expect_t, expect_h1, ...).
    std::map<std::string, std::string> expect;
};

struct Dataset {
    Int D{1};
    Int d{1};
    std::vector<DatasetEntry> entries;
};

Dataset parse_dataset(std::istream& in);          // throws ParseError
Dataset load_dataset(const std::string& path);    // throws ParseError

// exposed for tests
Rat parse_rat(const std::string& tok);
KNum parse_knum(const std::string& tok);
ZMat parse_matrix(const std::string& tok);

} // namespace steinitz
