#ifndef HOMHOPF_IO_HPP
#define HOMHOPF_IO_HPP

#include <optional>
#include <string>

#include "homhopf/maschke.hpp"

namespace homhopf {

// A structure file: one carrier holding a Hom-Hopf algebra, optionally with
// a coaction block making it a comodule algebra over itself. Scalars are
// canonical strings ("n", "n/d" with d > 1 and gcd 1, or a residue); sparse
// blocks omit zero entries; unknown keys are rejected.
struct StructureFile {
    HomHopfAlgebra hopf;
    std::optional<Tensor3> coaction;
    Convention convention = Convention::categorical;

    ComoduleAlgebra comodule_algebra() const; // throws if no coaction block
};

StructureFile parse_structure_file(const std::string& bytes);
// Canonical form: sorted keys, two-space indent, canonical scalar strings,
// sparse entries in index order, trailing newline. Parse o serialize is the
// identity on canonical bytes.
std::string serialize_structure_file(const StructureFile& s);

// Sequence-plus-integral bundle consumed by the splitting command.
struct MaschkeBundleFile {
    StructureFile algebra;
    ShortExactSequence sequence;
    Matrix phi;
};
MaschkeBundleFile parse_maschke_bundle(const std::string& bytes);
std::string serialize_maschke_bundle(const MaschkeBundleFile& b);

// Comodule-extension bundle: colinear f : V -> M, inclusion V -> W.
struct ExtendBundleFile {
    StructureFile algebra;
    RelativeHopfModule m;
    HomComodule v, w;
    Matrix incl, f, phi;
};
ExtendBundleFile parse_extend_bundle(const std::string& bytes);

// Certificates and solution sets.
std::string serialize_integral(const Matrix& phi);
Matrix parse_integral(const std::string& bytes, const FieldSpec& field);
std::string serialize_matrix_file(const Matrix& m);
Matrix parse_matrix_file(const std::string& bytes, const FieldSpec& field);
std::string serialize_normalized(const Tensor3& theta);
Tensor3 parse_normalized(const std::string& bytes, const FieldSpec& field);
std::string serialize_integral_solutions(const AffineSolutionSet& s, std::size_t rows,
                                         std::size_t cols);
std::string serialize_normalized_solutions(const AffineSolutionSet& s, std::size_t dh,
                                           std::size_t da);
std::string serialize_splitting(const MaschkeSplitting& s);

std::string report_to_json(const AxiomReport& r);
std::string report_to_text(const AxiomReport& r);

} // namespace homhopf

#endif
