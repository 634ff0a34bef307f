#pragma once

#include <json.hpp>

#include "checker/canonical.hpp"
#include "checker/convolution.hpp"
#include "checker/dessin.hpp"
#include "checker/ik.hpp"
#include "checker/perm.hpp"
#include "checker/rational.hpp"
#include "checker/spherical.hpp"
#include "checker/surface.hpp"

// JSON schemas. All points are 1-based on the wire.
//
//   Permutation   {"deg": n, "images": [..]}  or a cycle string "(1 2 3)(4 5)"
//   Triple        {"n": n, "blue": P, "red": P, "yellow": P}, P as above or a bare image list
//   Surface       Triple + {"alpha", "beta"} (labeled) + "components", "chi", "genus", "vertices"
//   Tensor3       {"dims": [db, dr, dy], "re": [..], "im": [..]}, row-major in (i, j, k)
//   IKElement     [{"surface": Triple, "coefficient": "a/b"}, ...]
namespace checker::json_io {

using json = nlohmann::json;

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j, std::size_t degree = 0);

json to_json(const Triple& t);
Triple triple_from_json(const json& j);

/// Triple plus per-component topology.
json surface_report(const Triple& t);

json to_json(const LabeledSurface& s);
/// Reads a Triple with optional "alpha"/"beta" (defaulting to the given values)
/// and canonicalizes it.
LabeledSurface labeled_from_json(const json& j, std::size_t alpha = 0, std::size_t beta = 0);

json to_json(const CheckerSurface& s);

json rational_json(const Rational& r);

json to_json(const IKElement& x);
/// Accepts an IKElement list, or a single Triple (read as u_p with coefficient 1).
IKElement ik_from_json(const json& j);

json to_json(const Tensor3& t);
Tensor3 tensor_from_json(const json& j);

json to_json(const Dessin& d);

json to_json(const GroupAlgebraElement& f);

}  // namespace checker::json_io
