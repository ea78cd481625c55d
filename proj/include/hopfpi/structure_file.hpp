#pragma once

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

#include "hopfpi/subquotients.hpp"

namespace hopfpi {

/// Errors raised while reading a structure document, one class per failure
/// kind so callers can map each to its own diagnostic.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Malformed JSON; the message carries the parser's line and column.
struct ParseError : StructureError {
  using StructureError::StructureError;
};
/// A name that does not resolve to an entry of the expected kind.
struct ReferenceError : StructureError {
  using StructureError::StructureError;
};
/// A dimension, matrix or scalar contradicting the declared shapes.
struct ShapeError : StructureError {
  using StructureError::StructureError;
};

/// One document: a coefficient field, a group table, and named structures
/// wired together by name. Entries are keyed in sorted order so emission
/// is deterministic.
struct StructureFile {
  FieldSpec field;
  GroupPtr group;

  std::map<std::string, HopfPiCoalgebra> hopfs;

  struct PairEntry {
    std::string hopf;      // ambient family
    std::string quotient;  // Hopf entry presenting C, or empty when inline
    SubgroupPair pair;
  };
  std::map<std::string, PairEntry> pairs;

  struct ComoduleEntry {
    std::string pair;
    Matrix matrix;  // (dV * dC_1) x dV identity-component coaction
  };
  std::map<std::string, ComoduleEntry> comodules;

  struct CoidealEntry {
    std::string hopf;
    SubspaceFamily spans;
  };
  std::map<std::string, CoidealEntry> coideals;

  struct SectionEntry {
    std::string pair;
    SectionFamily family;
  };
  std::map<std::string, SectionEntry> sections;

  struct CosectionEntry {
    std::string hopf;
    MatrixFamily maps;
  };
  std::map<std::string, CosectionEntry> cosections;
};

/// Parses and cross-validates a document; every reference is resolved and
/// every matrix checked against the declared dimensions before returning.
/// When the document has no "field" key the HOPFPI_FIELD environment
/// variable ("rationals" or a prime) decides, defaulting to the rationals.
StructureFile load_structure_text(const std::string& text);

/// load_structure_text on the contents of a file.
StructureFile load_structure(const std::string& path);

/// Serializes back to the document format. Reloading the result
/// reproduces every structure exactly.
std::string emit_structure(const StructureFile& s);

/// Matrix as row-major nested arrays: prime-field entries as residues,
/// small integer rationals as numbers, everything else as fraction strings.
nlohmann::ordered_json matrix_json(const Matrix& m);

/// Inverse of matrix_json. A negative expected dimension defers to the
/// document (rows must still agree with each other); throws ShapeError,
/// prefixing ctx, on any mismatch.
Matrix matrix_from_json(const nlohmann::ordered_json& j, FieldSpec f, int rows, int cols,
                        const std::string& ctx = "matrix");

}  // namespace hopfpi
