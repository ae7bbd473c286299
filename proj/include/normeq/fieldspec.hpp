// fieldspec.hpp — the textual description of a field: the characteristic
// and the defining polynomial, in a small key = value file format.
#pragma once

#include "normeq/field.hpp"
#include "normeq/polyparse.hpp"

namespace normeq {

struct FieldSpec {
    uint32_t q = 0;
    std::vector<Poly> f;
};

// accepts lines "q = 5" and "f = \"t^3 + ...\"", blank lines and # comments;
// errors carry the line they were found on
FieldSpec parse_field_text(const std::string& text);
FieldSpec parse_field_file(const std::string& path);

std::shared_ptr<const FunctionField> load_field(const FieldSpec& spec);

}  // namespace normeq
