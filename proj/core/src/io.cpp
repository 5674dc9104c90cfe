#include "pentagon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pentagon/errors.hpp"

namespace pentagon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

void expect_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(path + "." + key, "unknown key");
  }
}

std::size_t as_index(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Scalar as_scalar(const json& j, const std::string& path, Field field) {
  if (!j.is_string()) fail(path, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>(), field);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<std::size_t> as_index_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_index(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Field as_field(const json& obj, const std::string& path) {
  const json& f = member(obj, path, "field");
  if (!f.is_string()) fail(path + ".field", "expected \"Q\" or \"Qq\"");
  try {
    return parse_field(f.get<std::string>());
  } catch (const Error& e) {
    fail(path + ".field", e.what());
  }
}

json operator_json(const Operator& op) {
  json entries = json::array();
  for (const Entry& e : op.entries()) {
    entries.push_back({{"row", unflatten(e.row, op.row_dims())},
                       {"col", unflatten(e.col, op.col_dims())},
                       {"value", e.value.to_string()}});
  }
  return {{"field", std::string(field_name(op.field()))},
          {"row_dims", op.row_dims()},
          {"col_dims", op.col_dims()},
          {"entries", std::move(entries)}};
}

Operator operator_from_json(const json& j, const std::string& path, bool allow_site_key) {
  if (allow_site_key) {
    expect_keys(j, path, {"field", "row_dims", "col_dims", "entries", "legs_per_site"});
  } else {
    expect_keys(j, path, {"field", "row_dims", "col_dims", "entries"});
  }
  const Field field = as_field(j, path);
  const auto row_dims = as_index_list(member(j, path, "row_dims"), path + ".row_dims");
  const auto col_dims = as_index_list(member(j, path, "col_dims"), path + ".col_dims");
  for (std::size_t i = 0; i < row_dims.size(); ++i) {
    if (row_dims[i] == 0) fail(path + ".row_dims[" + std::to_string(i) + "]", "dimension must be positive");
  }
  for (std::size_t i = 0; i < col_dims.size(); ++i) {
    if (col_dims[i] == 0) fail(path + ".col_dims[" + std::to_string(i) + "]", "dimension must be positive");
  }
  Operator op(field, row_dims, col_dims);
  const json& entries = member(j, path, "entries");
  if (!entries.is_array()) fail(path + ".entries", "expected an array");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string ep = path + ".entries[" + std::to_string(k) + "]";
    expect_keys(entries[k], ep, {"row", "col", "value"});
    const auto row = as_index_list(member(entries[k], ep, "row"), ep + ".row");
    const auto col = as_index_list(member(entries[k], ep, "col"), ep + ".col");
    if (row.size() != row_dims.size()) fail(ep + ".row", "wrong number of legs");
    if (col.size() != col_dims.size()) fail(ep + ".col", "wrong number of legs");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= row_dims[i]) fail(ep + ".row[" + std::to_string(i) + "]", "index out of range");
    }
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] >= col_dims[i]) fail(ep + ".col[" + std::to_string(i) + "]", "index out of range");
    }
    const Scalar value = as_scalar(member(entries[k], ep, "value"), ep + ".value", field);
    op.accumulate(flatten(row, row_dims), flatten(col, col_dims), value);
  }
  return op;
}

json tensor3_json(const Tensor3& t) {
  json out = json::array();
  for (const auto& [k, v] : t) out.push_back({k[0], k[1], k[2], v.to_string()});
  return out;
}

json tensor2_json(const Tensor2& t) {
  json out = json::array();
  for (const auto& [k, v] : t) out.push_back({k[0], k[1], v.to_string()});
  return out;
}

json vector_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

template <std::size_t N>
std::map<std::array<std::size_t, N>, Scalar> tensor_from_json(const json& j, const std::string& path, Field field,
                                                             std::size_t dim) {
  if (!j.is_array()) fail(path, "expected an array");
  std::map<std::array<std::size_t, N>, Scalar> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string ep = path + "[" + std::to_string(k) + "]";
    const json& row = j[k];
    if (!row.is_array() || row.size() != N + 1) fail(ep, "expected " + std::to_string(N) + " indices and a value");
    std::array<std::size_t, N> key{};
    for (std::size_t i = 0; i < N; ++i) {
      key[i] = as_index(row[i], ep + "[" + std::to_string(i) + "]");
      if (key[i] >= dim) fail(ep + "[" + std::to_string(i) + "]", "index out of range");
    }
    const Scalar v = as_scalar(row[N], ep + "[" + std::to_string(N) + "]", field);
    if (out.contains(key)) fail(ep, "duplicate index");
    if (!v.is_zero()) out.emplace(key, v);
  }
  return out;
}

std::vector<Scalar> vector_from_json(const json& j, const std::string& path, Field field, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) fail(path, "expected an array of " + std::to_string(dim) + " scalars");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(as_scalar(j[i], path + "[" + std::to_string(i) + "]", field));
  return out;
}

json constants_json(const StructureConstants& sc) {
  json out = {{"field", std::string(field_name(sc.field))},
              {"dim", sc.dim},
              {"m", tensor3_json(sc.m)},
              {"mu", tensor3_json(sc.mu)}};
  if (sc.unit) out["unit"] = vector_json(*sc.unit);
  if (sc.counit) out["counit"] = vector_json(*sc.counit);
  if (sc.antipode) out["antipode"] = tensor2_json(*sc.antipode);
  if (sc.antipode_inv) out["antipode_inv"] = tensor2_json(*sc.antipode_inv);
  return out;
}

json report_json(const VerificationReport& r) {
  json out = {{"relation", r.relation}, {"holds", r.holds}, {"space_dim", r.space_dim}, {"elapsed_ms", r.elapsed_ms}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.witness) {
    auto side = [](const std::vector<std::pair<std::string, Scalar>>& terms) {
      json a = json::array();
      for (const auto& [idx, v] : terms) a.push_back({idx, v.to_string()});
      return a;
    };
    out["witness"] = {{"basis", r.witness->basis}, {"lhs", side(r.witness->lhs)}, {"rhs", side(r.witness->rhs)}};
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

OperatorFile parse_operator_file(const std::string& text) {
  const json j = parse_document(text);
  OperatorFile out{operator_from_json(j, "$", true), std::nullopt};
  if (auto it = j.find("legs_per_site"); it != j.end()) {
    out.legs_per_site = as_index(*it, "$.legs_per_site");
    if (*out.legs_per_site == 0 || out.op.legs() % *out.legs_per_site != 0) {
      fail("$.legs_per_site", "must divide the number of legs");
    }
  }
  return out;
}

std::string format_operator_file(const OperatorFile& file) {
  json j = operator_json(file.op);
  if (file.legs_per_site) j["legs_per_site"] = *file.legs_per_site;
  return dump(j);
}

StructureConstants parse_structure_constants(const std::string& text) {
  const json j = parse_document(text);
  expect_keys(j, "$", {"field", "dim", "m", "mu", "unit", "counit", "antipode", "antipode_inv"});
  StructureConstants sc;
  sc.field = as_field(j, "$");
  sc.dim = as_index(member(j, "$", "dim"), "$.dim");
  if (sc.dim == 0) fail("$.dim", "dimension must be positive");
  sc.m = tensor_from_json<3>(member(j, "$", "m"), "$.m", sc.field, sc.dim);
  sc.mu = tensor_from_json<3>(member(j, "$", "mu"), "$.mu", sc.field, sc.dim);
  if (auto it = j.find("unit"); it != j.end()) sc.unit = vector_from_json(*it, "$.unit", sc.field, sc.dim);
  if (auto it = j.find("counit"); it != j.end()) sc.counit = vector_from_json(*it, "$.counit", sc.field, sc.dim);
  if (auto it = j.find("antipode"); it != j.end()) {
    sc.antipode = tensor_from_json<2>(*it, "$.antipode", sc.field, sc.dim);
  }
  if (auto it = j.find("antipode_inv"); it != j.end()) {
    sc.antipode_inv = tensor_from_json<2>(*it, "$.antipode_inv", sc.field, sc.dim);
  }
  if (sc.antipode.has_value() != sc.antipode_inv.has_value()) {
    fail("$", "antipode and antipode_inv must be given together");
  }
  return sc;
}

std::string format_structure_constants(const StructureConstants& sc) { return dump(constants_json(sc)); }

std::string format_reconstruction(const ReconstructionResult& result) {
  StructureConstants sc = result.constants;
  if (!sc.unit) sc.unit = result.unit;
  if (!sc.counit) sc.counit = result.counit;
  json j = constants_json(sc);
  json g = json::array();
  json f = json::array();
  for (const auto& op : result.g) g.push_back(operator_json(op));
  for (const auto& op : result.f) f.push_back(operator_json(op));
  j["G"] = std::move(g);
  j["F"] = std::move(f);
  return dump(j);
}

std::string format_report_json(const VerificationReport& report) { return dump(report_json(report)); }

std::string format_reports_json(const std::vector<VerificationReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(report_json(r));
  return dump(a);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw SchemaError(path.string() + ": write failed");
}

}  // namespace pentagon
