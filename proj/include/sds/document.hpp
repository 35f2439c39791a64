#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/designs.hpp"
#include "sds/finite_field.hpp"
#include "sds/group_ring.hpp"

namespace sds {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field presentation pinned inside a document so class-based constructions
/// are reproducible: modulus coefficients ascending, generator as coordinates.
struct FieldDescriptor {
    Int p = 0;
    int n = 0;
    std::vector<Int> modulus;
    std::vector<Int> w_coords;
};

FieldDescriptor field_descriptor(const FiniteField& F);
FiniteField field_from_descriptor(const FieldDescriptor& d);

/// On-disk form of a signed set (or general group-ring element): an explicit
/// group presentation, coordinate tuples for the positive and negative
/// supports (repeated tuples encode coefficients of larger magnitude; a tuple
/// never appears on both sides), and optional declared parameters.
struct SignedSetDocument {
    AbelianGroup group;
    std::optional<FieldDescriptor> field;
    GroupRingElement element;
    std::optional<SdsParams> declared;
};

/// "cyclic" for one factor, "elementary" when all factors are one prime,
/// "product" otherwise.
std::string group_type_name(const AbelianGroup& G);

SignedSetDocument document_from_ring(GroupRingElement element,
                                     std::optional<FieldDescriptor> field = {},
                                     std::optional<SdsParams> declared = {});

std::string serialize_document(const SignedSetDocument& doc);
SignedSetDocument parse_document(const std::string& text);  // throws ParseError

} // namespace sds
