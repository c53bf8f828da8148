#include "schurlab/family.hpp"

#include <string>

#include "schurlab/error.hpp"

namespace schurlab {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Hook: return "hook";
    case Family::Kk1: return "kk1";
    case Family::Conj: return "conj";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  if (text == "hook") return Family::Hook;
  if (text == "kk1") return Family::Kk1;
  if (text == "conj") return Family::Conj;
  throw SchurError(ErrorCode::ParseError, "unknown family '" + std::string(text) + "'");
}

void check_family_params(Family family, int k, int l) {
  if (k < 3 || (family == Family::Hook && l < 3))
    throw SchurError(ErrorCode::BadParams, std::string(to_string(family)) + " needs k" +
                                               (family == Family::Hook ? ", l" : "") + " >= 3");
}

Partition family_shape(Family family, int k, int l) {
  check_family_params(family, k, l);
  switch (family) {
    case Family::Hook: return hook(k, l);
    case Family::Kk1: return Partition({k, k, 1});
    case Family::Conj: return from_blocks({{3, 1}, {2, k - 1}});
  }
  throw SchurError(ErrorCode::InternalInvariant, "unhandled family");
}

std::vector<Partition> special_partitions(Family family, int k, int l) {
  check_family_params(family, k, l);
  switch (family) {
    case Family::Hook: return {from_blocks({{k, 2}, {2, l - 2}})};
    case Family::Kk1: return {Partition({2 * k, k, k}), rectangle(k, 4)};
    case Family::Conj: return {from_blocks({{3, k}, {1, k}}), rectangle(4, k)};
  }
  throw SchurError(ErrorCode::InternalInvariant, "unhandled family");
}

}  // namespace schurlab
