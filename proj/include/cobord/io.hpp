#ifndef COBORD_IO_HPP
#define COBORD_IO_HPP

#include <string>
#include <vector>

#include "cobord/chern_vector.hpp"
#include "cobord/icis.hpp"
#include "cobord/series.hpp"
#include "cobord/tower.hpp"

namespace cobord {

// All formats are line-oriented text with a versioned header line; '#' starts
// a comment. Grammars are documented in docs/formats.md.

// "cobord-chern-vector v1" header, "signature n s r1 ..." line, then one
// "monomial value" line per Chern monomial of the signature.
ChernVector parse_chern_vector(const std::string& text);
std::string format_chern_vector(const ChernVector& v);

// A tower with divisor classes and split bundles on it:
//   stage proj <m> | stage bundle <expr>, <expr>, ...
//   divisor <expr or 0>
//   bundle <expr>, <expr>, ...        (one summand expression per line bundle)
// Generators are named g1, g2, ... in stage order.
struct GeometryData {
    TowerVariety tower;
    std::vector<GradedPoly> divisor_classes;
    std::vector<BundleSpec> bundles;

    ChernVector to_chern_vector() const {
        return chern_vector(tower, divisor_classes, bundles);
    }
};

GeometryData parse_geometry(const std::string& text);

// Four geometry blocks [Y0]..[Y3] sharing one signature.
struct DegenerationFile {
    GeometryData pieces[4];
};

DegenerationFile parse_dpr_file(const std::string& text);

// "cobord-coeff-table v1", "signature ...", then
//   entry ( <beta labels> | <delta labels> ) <polynomial in Chern symbols>
CoeffTable parse_coeff_table(const std::string& text);
std::string format_coeff_table(const CoeffTable& table);

// "cobord-singularities v1", then "label | vars | germ | tau det length".
std::vector<SingularityRecord> parse_singularity_table(const std::string& text);
std::string format_singularity_table(const std::vector<SingularityRecord>& records);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cobord

#endif
