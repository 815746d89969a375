#include "eqk/json_io.hpp"

#include <limits>
#include <map>


namespace eqk::json_io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, field + ": " + what, field);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::uint64_t as_unsigned(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
    bad(field, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

long as_long(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
    bad(field, "integer out of range");
  }
  return j.get<long>();
}

std::vector<std::uint64_t> unsigned_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_unsigned(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

Json to_json(const AbGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion()) t.push_back(integer_json(d));
  return Json{{"rank", g.free_rank()}, {"torsion", t}, {"text", to_string(g)}};
}

AbGroup abgroup_from_json(const Json& j) {
  const std::size_t rank = as_unsigned(member(j, "rank", "group"), "group.rank");
  std::vector<Integer> orders(rank, Integer(0));
  const Json& t = member(j, "torsion", "group");
  if (!t.is_array()) bad("group.torsion", "expected an array");
  for (const auto& d : t) {
    Integer v;
    if (d.is_string()) {
      if (v.set_str(d.get<std::string>(), 10) != 0) bad("group.torsion", "bad integer");
    } else {
      v = static_cast<unsigned long>(as_unsigned(d, "group.torsion"));
    }
    if (v < 2) bad("group.torsion", "orders must be at least 2");
    orders.push_back(v);
  }
  return AbGroup::from_orders(orders);
}

Json to_json(const GroupClass& g) {
  switch (g.kind()) {
    case GroupClass::Kind::Trivial: return "trivial";
    case GroupClass::Kind::Cyclic: return Json{{"cyclic", g.parameter()}};
    case GroupClass::Kind::Elem2: return Json{{"elem2", g.parameter()}};
    case GroupClass::Kind::DihedralOdd: return Json{{"dihedral_odd", g.parameter()}};
  }
  return nullptr;
}

GroupClass group_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "trivial") return GroupClass::trivial();
  if (!j.is_object() || j.size() != 1) bad("stabilizer", "expected \"trivial\" or a one-key object");
  const auto& [key, value] = *j.items().begin();
  const std::uint64_t p = as_unsigned(value, "stabilizer." + key);
  if (key == "cyclic") {
    if (p == 0) bad("stabilizer.cyclic", "order must be positive");
    return GroupClass::cyclic(p);
  }
  if (key == "elem2") return GroupClass::elem2(p);
  if (key == "dihedral_odd") return GroupClass::dihedral_odd(p);
  bad("stabilizer", "unknown group kind " + key);
}

Json to_json(const InclusionDescriptor& d) {
  Json j{{"kind", to_string(d.kind)}, {"sub", to_json(d.sub)}, {"big", to_json(d.big)}};
  if (d.kind == InclusionDescriptor::Kind::Elem2Subset) j["injection"] = d.injection;
  return j;
}

InclusionDescriptor descriptor_from_json(const Json& j) {
  InclusionDescriptor d;
  const Json& kind = member(j, "kind", "descriptor");
  if (!kind.is_string()) bad("descriptor.kind", "expected a string");
  d.kind = descriptor_kind_from_string(kind.get<std::string>());
  d.sub = group_from_json(member(j, "sub", "descriptor"));
  d.big = group_from_json(member(j, "big", "descriptor"));
  if (j.contains("injection")) {
    for (auto v : unsigned_list(j["injection"], "descriptor.injection")) d.injection.push_back(v);
  }
  d.validate();
  return d;
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [c, v] : m.row(i)) entries.push_back(Json::array({i, c, integer_json(v)}));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Mod2Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c : m.row(i)) entries.push_back(Json::array({i, c}));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"ones", entries}};
}

Json to_json(const OrbitComplex& x) {
  Json out = Json::array();
  for (int p = 0; p <= x.dimension(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    Json cells = Json::array();
    for (const auto& c : x.cells(up)) cells.push_back(Json{{"label", c.label}, {"stabilizer", to_json(c.stabilizer)}});
    Json dim{{"dim", p}, {"cells", cells}};
    if (p > 0) {
      dim["incidence"] = to_json(x.coboundary(up));
      Json descriptors = Json::array();
      for (const auto& inc : x.incidences(up)) {
        descriptors.push_back(Json{{"cell", inc.cell}, {"face", inc.face}, {"descriptor", to_json(inc.descriptor)}});
      }
      dim["descriptors"] = descriptors;
    }
    out.push_back(dim);
  }
  return out;
}

OrbitComplex orbit_complex_from_json(const Json& j) {
  if (!j.is_array()) bad("complex", "expected an array of dimensions");
  std::vector<std::vector<Cell>> cells;
  std::vector<std::vector<Incidence>> incidences;
  for (std::size_t p = 0; p < j.size(); ++p) {
    const std::string where = "complex[" + std::to_string(p) + "]";
    const Json& dim = j[p];
    if (as_unsigned(member(dim, "dim", where), where + ".dim") != p) bad(where + ".dim", "dimensions must be listed in order");
    cells.emplace_back();
    const Json& cs = member(dim, "cells", where);
    if (!cs.is_array()) bad(where + ".cells", "expected an array");
    for (const auto& c : cs) {
      const Json& label = member(c, "label", where + ".cells");
      if (!label.is_string()) bad(where + ".cells.label", "expected a string");
      cells.back().push_back({label.get<std::string>(), group_from_json(member(c, "stabilizer", where + ".cells"))});
    }
    incidences.emplace_back();
    if (p == 0) continue;
    // coefficients come from the matrix, inclusions from the descriptor list
    const Json& inc = member(dim, "incidence", where);
    const Json& entries = member(inc, "entries", where + ".incidence");
    if (!entries.is_array()) bad(where + ".incidence.entries", "expected an array");
    std::map<std::pair<std::size_t, std::size_t>, long> coefficient;
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3) bad(where + ".incidence.entries", "expected [row, col, value]");
      coefficient[{as_unsigned(e[0], where + ".incidence"), as_unsigned(e[1], where + ".incidence")}] =
          as_long(e[2], where + ".incidence");
    }
    const Json& ds = member(dim, "descriptors", where);
    if (!ds.is_array()) bad(where + ".descriptors", "expected an array");
    for (const auto& d : ds) {
      const std::size_t cell = as_unsigned(member(d, "cell", where + ".descriptors"), where + ".descriptors.cell");
      const std::size_t face = as_unsigned(member(d, "face", where + ".descriptors"), where + ".descriptors.face");
      auto it = coefficient.find({cell, face});
      if (it == coefficient.end()) bad(where + ".descriptors", "descriptor without a nonzero incidence");
      incidences.back().push_back({cell, face, it->second, descriptor_from_json(member(d, "descriptor", where))});
      coefficient.erase(it);
    }
    if (!coefficient.empty()) bad(where + ".incidence", "nonzero incidence without a descriptor");
  }
  return OrbitComplex(std::move(cells), std::move(incidences));
}

Json to_json(const CoxeterMatrix& m) { return Json{{"size", m.size()}, {"m", m.entries()}}; }

CoxeterMatrix coxeter_from_json(const Json& j) {
  const std::size_t size = as_unsigned(member(j, "size", ""), "size");
  const Json& rows = member(j, "m", "");
  if (!rows.is_array() || rows.size() != size) bad("m", "expected " + std::to_string(size) + " rows");
  std::vector<std::vector<std::uint64_t>> m;
  for (std::size_t i = 0; i < size; ++i) {
    m.push_back(unsigned_list(rows[i], "m[" + std::to_string(i) + "]"));
    if (m.back().size() != size) bad("m[" + std::to_string(i) + "]", "expected " + std::to_string(size) + " entries");
  }
  return CoxeterMatrix(std::move(m));
}

Json to_json(const AmalgamSpec& s) { return Json{{"r", s.r}, {"m", s.m}}; }

AmalgamSpec amalgam_from_json(const Json& j) {
  AmalgamSpec s{unsigned_list(member(j, "r", ""), "r"), unsigned_list(member(j, "m", ""), "m")};
  s.validate();
  return s;
}

Json cochain_to_json(const OrbitComplex& x, const CoefficientFunctor& functor) {
  const SplitCochainComplex c = assemble_cochain(x, functor);
  Json out{{"theory", to_string(functor.theory)}, {"n", functor.n}};
  Json degrees = Json::array();
  for (int p = 0; p <= x.dimension(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    Json cells = Json::array();
    std::size_t free = 0, tor = 0;
    for (const auto& cell : x.cells(up)) {
      const CoefficientRanks r = coefficient_ranks(cell.stabilizer, functor);
      cells.push_back(Json{{"label", cell.label}, {"free_offset", free}, {"free", r.free}, {"tor2_offset", tor}, {"tor2", r.tor}});
      free += r.free;
      tor += r.tor;
    }
    degrees.push_back(Json{{"p", p}, {"free_rank", c.free_rank(up)}, {"tor2_rank", c.tor2_rank(up)}, {"cells", cells}});
  }
  out["degrees"] = degrees;
  Json maps = Json::array();
  for (std::size_t p = 0; p < c.length(); ++p) {
    Json blocks = Json::array();
    for (const auto& inc : x.incidences(p + 1)) {
      blocks.push_back(Json{{"cell", x.cells(p + 1)[inc.cell].label},
                            {"face", x.cells(p)[inc.face].label},
                            {"incidence", inc.coefficient},
                            {"descriptor", inc.descriptor.name()}});
    }
    maps.push_back(Json{{"from", p},
                        {"free", to_json(c.free_map(p))},
                        {"torsion", to_json(c.torsion_map(p))},
                        {"cross", to_json(c.cross_map(p))},
                        {"blocks", blocks}});
  }
  out["maps"] = maps;
  return out;
}

Json to_json(const E2Page& page) {
  Json entries = Json::array();
  for (std::size_t p = 0; p < page.columns(); ++p) {
    for (unsigned n = 0; n < page.period(); ++n) {
      entries.push_back(Json{{"p", p}, {"q", -static_cast<int>(n)}, {"group", to_json(page.at(p, n))}});
    }
  }
  return Json{{"theory", to_string(page.theory())},
              {"period", page.period()},
              {"columns", page.columns()},
              {"collapses", detect_collapse(page)},
              {"entries", entries}};
}

namespace {

Json pieces_json(const std::vector<AbutmentPiece>& pieces) {
  Json out = Json::array();
  for (const auto& piece : pieces) {
    out.push_back(Json{{"p", piece.p}, {"q", -static_cast<int>(piece.n)}, {"group", to_json(piece.group)}});
  }
  return out;
}

}  // namespace

Json to_json(const AbutmentReport& r) {
  Json j{{"pieces", pieces_json(r.pieces)}, {"extension_ambiguous", r.extension_ambiguous}};
  j["resolved"] = r.resolved ? to_json(*r.resolved) : Json(nullptr);
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"degree", v.degree}, {"verdict", to_string(v.kind)}, {"pieces", pieces_json(v.pieces)}};
  if (!v.diff.empty()) j["diff"] = v.diff;
  return j;
}

Json to_json(const ClosedForm& cf) {
  Json params = Json::object();
  for (const auto& [name, value] : cf.parameters) params[name] = value;
  Json degrees = Json::object();
  for (const auto& e : cf.degrees) {
    Json d{{"formula", e.formula}};
    if (e.group) {
      d["group"] = to_json(*e.group);
    } else {
      Json ext = Json::array();
      for (const auto& g : e.extension_of) ext.push_back(to_json(g));
      d["extension_of"] = ext;
    }
    degrees[std::to_string(e.degree)] = d;
  }
  return Json{{"family", cf.family}, {"parameters", params}, {"degrees", degrees}};
}

Json to_json(const Error& e) {
  return Json{{"error", to_string(e.kind())}, {"message", e.what()}, {"subject", e.subject()}};
}

}  // namespace eqk::json_io
