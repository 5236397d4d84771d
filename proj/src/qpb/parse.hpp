#pragma once

#include <optional>

#include "calculus.hpp"
#include "comodule.hpp"

namespace qpb {

struct SyntaxError : std::runtime_error {
    size_t pos;
    SyntaxError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct UnknownGenerator : std::runtime_error {
    size_t pos;
    UnknownGenerator(const std::string& name, size_t p)
        : std::runtime_error("unknown generator '" + name + "' at position " + std::to_string(p)),
          pos(p) {}
};

// Parse an expression over the alphabet of P. Grammar: `^` binds tighter
// than `*` and `/\`, which bind tighter than `+`/`-`; juxtaposition
// multiplies; `q`, `l` and rationals are coefficient atoms; parentheses
// group. When a calculus is supplied (and P is its omega presentation),
// `d(...)` applies its differential and `/\` its wedge. The result is
// normal-formed under P.
NcPoly parse_expression(const std::string& src, const PresentationPtr& P,
                        const CalculusPtr& calc = nullptr);

// Sum of products of scalar factors and tensor atoms `(e_1|...|e_n)` with
// one leg expression per component presentation. A calculus whose omega
// presentation matches a leg makes `d(...)` available on that leg.
TensorElement parse_tensor(const std::string& src, const std::vector<PresentationPtr>& comps,
                           const std::vector<CalculusPtr>& calcs = {});

// A bundle description read from a presentation file: the total-space
// algebra with its optional calculus, the structure Hopf algebra with its
// maps and optional calculus, and coaction/cleaving blocks.
struct BundleFile {
    PresentationPtr A;
    CalculusPtr calcA;  // null when the algebra section has no form block
    PresentationPtr H;  // null when the file has no hopf section
    StructureMapsPtr hmaps;
    CalculusPtr calcH;
    CoactionPtr coact;  // null when there is no coact block
    std::map<std::string, NcPoly> cleave, cleave_inv;  // generator images in A
};

// One `keyword ... ;` declaration per statement. Sections open with
// `algebra;` / `hopf;`; `gen x [inv] [weight k];` and `form dx [weight k];`
// declare letters, `rule`/`rmul`/`wedge` oriented rewrite rules,
// `dmap x -> ...;` the differential, `maxdeg k;` the truncation,
// `coproduct t -> (t|t);`, `counit t -> 1;`, `antipode t -> t^-1;` the Hopf
// structure, and `coact u -> (u|t);`, `cleave t -> u;`, `cleave_inv t -> u^-1;`
// the bundle data.
BundleFile read_bundle_file(const std::string& text);
std::string write_bundle_file(const BundleFile& f);

}  // namespace qpb
