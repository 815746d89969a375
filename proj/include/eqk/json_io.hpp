#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "eqk/abgroup.hpp"
#include "eqk/ahss.hpp"
#include "eqk/amalgam.hpp"
#include "eqk/bredon.hpp"
#include "eqk/closed_form.hpp"
#include "eqk/coxeter.hpp"
#include "eqk/error.hpp"
#include "eqk/group_class.hpp"
#include "eqk/orbit_complex.hpp"

namespace eqk::json_io {

using Json = nlohmann::ordered_json;

// Readers throw Error(InvalidInput) naming the offending field.

Json to_json(const AbGroup& g);
AbGroup abgroup_from_json(const Json& j);

/// "trivial", {"cyclic": m}, {"elem2": k}, {"dihedral_odd": m}
Json to_json(const GroupClass& g);
GroupClass group_from_json(const Json& j);

Json to_json(const InclusionDescriptor& d);
InclusionDescriptor descriptor_from_json(const Json& j);

/// [{"dim": p, "cells": [...], "incidence": sparse matrix, "descriptors": [...]}]
Json to_json(const OrbitComplex& x);
OrbitComplex orbit_complex_from_json(const Json& j);

/// {"size": n, "m": [[...]]}, 0 for infinity.
Json to_json(const CoxeterMatrix& m);
CoxeterMatrix coxeter_from_json(const Json& j);

/// {"r": [...], "m": [...]}
Json to_json(const AmalgamSpec& s);
AmalgamSpec amalgam_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const Mod2Matrix& m);

/// Block matrices of the Bredon cochain complex, each block labelled by the
/// incidence that produced it.
Json cochain_to_json(const OrbitComplex& x, const CoefficientFunctor& functor);

Json to_json(const E2Page& page);
Json to_json(const AbutmentReport& r);
Json to_json(const Verdict& v);
Json to_json(const ClosedForm& cf);
Json to_json(const Error& e);

}  // namespace eqk::json_io
