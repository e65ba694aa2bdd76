#pragma once

#include <string>

#include <json.hpp>

#include "msm/assignment.hpp"
#include "msm/l1_multiset.hpp"
#include "msm/multiset.hpp"
#include "msm/quotient.hpp"
#include "msm/signed_multiset.hpp"

namespace msm {

// Insertion-ordered JSON keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

// Parsers throw ValidationError naming the offending field; unknown extra
// fields are ignored.  `where` is the context prefix used in error messages.
//
// Wire formats:
//   element        coordinate array [x1,...,xd] or label string
//   space          {"kind":"euclidean"|"l1"|"discrete"|"finite_matrix",
//                   "dimension":n, "basepoint":element,
//                   "matrix":[[...]], "labels":[...]}
//   multiset       {"entries":[{"element":e,"multiplicity":k},...]}
//   signed         {"entries":[{"element":e,"coefficient":c},...]}, c nonzero
//   l1 multiset    {"head":multiset, "tail_mass":t}
//   quotient space {"space":space, "H":[element,...]}
//   cost matrix    [[...],...] or {"matrix":[[...],...]}
Element parse_element(const Json& j, const std::string& where);
GroundSpacePtr parse_space(const Json& j);
Multiset parse_multiset(const Json& j, GroundSpacePtr space);
SignedMultiset parse_signed_multiset(const Json& j, GroundSpacePtr space);
TruncatedL1Multiset parse_l1_multiset(const Json& j, GroundSpacePtr space);
QuotientSpace parse_quotient_space(const Json& j);
CostMatrix parse_cost_matrix(const Json& j);

Json to_json(const Element& e);
Json to_json(const GroundSpace& space);
Json to_json(const Multiset& a);
Json to_json(const SignedMultiset& x);
Json to_json(const TruncatedL1Multiset& a);
Json to_json(const QuotientSpace& qs);

// Reads and parses a file, reporting the path in any error message.
Json load_json_file(const std::string& path);

}  // namespace msm
