#ifndef DYNDEG_SERIALIZE_HPP
#define DYNDEG_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dyndeg/algebra.hpp"
#include "dyndeg/error.hpp"

namespace dyndeg {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

namespace json_detail {

inline std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
inline std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

inline const Json& member(const Json& obj, const std::string& path, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(path, key), "missing required field");
  return *it;
}

inline int positive_int(const Json& obj, const std::string& path, std::string_view key) {
  const Json& v = member(obj, path, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000000) {
    throw SchemaError(child(path, key), "expected a positive integer");
  }
  return v.get<int>();
}

inline double number(const Json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

template <class T, class EntryFn>
Matrix<T> parse_matrix(const Json& v, const std::string& path, EntryFn entry) {
  if (!v.is_array() || v.empty()) throw SchemaError(path, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].empty()) throw SchemaError(child(path, i), "expected a non-empty row");
    if (i == 0) cols = v[i].size();
    if (v[i].size() != cols) throw SchemaError(child(path, i), "ragged row");
  }
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(v[i][j], child(child(path, i), j));
  return m;
}

inline double real_entry(const Json& v, const std::string& path) { return number(v, path); }

inline Complex complex_entry(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw SchemaError(path, "expected a complex entry [re, im]");
  return {number(v[0], child(path, 0)), number(v[1], child(path, 1))};
}

inline Quaternion quaternion_entry(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4) throw SchemaError(path, "expected a quaternion entry [a, b, c, d]");
  return {number(v[0], child(path, 0)), number(v[1], child(path, 1)), number(v[2], child(path, 2)),
          number(v[3], child(path, 3))};
}

inline BigInt integer_entry(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return BigInt(v.get<long long>());
}

inline AlbertFactor parse_factor(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  AlbertFactor f;
  const Json& type = member(j, path, "albert_type");
  if (!type.is_string() || !parse_albert_type(type.get<std::string>())) {
    throw SchemaError(child(path, "albert_type"), "expected one of \"I\", \"II\", \"III\", \"IV\"");
  }
  f.albert_type = *parse_albert_type(type.get<std::string>());
  f.e0 = positive_int(j, path, "e0");
  f.d = positive_int(j, path, "d");
  f.n = positive_int(j, path, "n");
  f.g_A = positive_int(j, path, "g_A");
  if (auto it = j.find("translation_flag"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError(child(path, "translation_flag"), "expected a boolean");
    f.translation_flag = it->get<bool>();
  }
  const Json& blocks = member(j, path, "blocks");
  const std::string bpath = child(path, "blocks");
  if (!blocks.is_array()) throw SchemaError(bpath, "expected an array of matrices");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string mpath = child(bpath, b);
    switch (f.albert_type) {
      case AlbertType::I:
      case AlbertType::II: f.blocks.emplace_back(parse_matrix<double>(blocks[b], mpath, real_entry)); break;
      case AlbertType::III:
        f.blocks.emplace_back(parse_matrix<Quaternion>(blocks[b], mpath, quaternion_entry));
        break;
      case AlbertType::IV: f.blocks.emplace_back(parse_matrix<Complex>(blocks[b], mpath, complex_entry)); break;
    }
  }
  if (auto it = j.find("rational_form"); it != j.end()) {
    f.rational_form = parse_matrix<BigInt>(*it, child(path, "rational_form"), integer_entry);
  }
  return f;
}

inline void check_version(const Json& j) {
  const Json& v = member(j, "", "format_version");
  if (!v.is_number_integer()) throw SchemaError("/format_version", "expected an integer");
  if (v.get<long long>() != kFormatVersion) {
    throw Error(ErrorCode::VersionError, "unsupported format_version " + v.dump());
  }
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON (byte ") + std::to_string(e.byte) + ")");
  }
}

inline EndInstance parse_instance_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  EndInstance inst;
  const Json& label = member(j, path, "label");
  if (!label.is_string()) throw SchemaError(child(path, "label"), "expected a string");
  inst.label = label.get<std::string>();
  if (auto it = j.find("assert"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError(child(path, "assert"), "expected a boolean");
    inst.assert_theorem = it->get<bool>();
  }
  const Json& factors = member(j, path, "factors");
  if (!factors.is_array() || factors.empty()) {
    throw SchemaError(child(path, "factors"), "expected a non-empty array");
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    inst.factors.push_back(parse_factor(factors[k], child(child(path, "factors"), k)));
  }
  return inst;
}

template <class T, class EntryFn>
Json matrix_json(const Matrix<T>& m, EntryFn entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json factor_json(const AlbertFactor& f) {
  Json j;
  j["albert_type"] = std::string(to_string(f.albert_type));
  j["e0"] = f.e0;
  j["d"] = f.d;
  j["n"] = f.n;
  j["g_A"] = f.g_A;
  Json blocks = Json::array();
  for (const auto& block : f.blocks) {
    if (const auto* r = std::get_if<RealMatrix>(&block)) {
      blocks.push_back(matrix_json(*r, [](double x) { return Json(x); }));
    } else if (const auto* c = std::get_if<ComplexMatrix>(&block)) {
      blocks.push_back(matrix_json(*c, [](const Complex& z) { return Json::array({z.real(), z.imag()}); }));
    } else {
      blocks.push_back(matrix_json(std::get<QuaternionMatrix>(block),
                                   [](const Quaternion& q) { return Json::array({q.a, q.b, q.c, q.d}); }));
    }
  }
  j["blocks"] = std::move(blocks);
  if (f.translation_flag) j["translation_flag"] = true;
  if (f.rational_form) {
    j["rational_form"] = matrix_json(*f.rational_form, [](const BigInt& x) { return Json(x.convert_to<long long>()); });
  }
  return j;
}

inline Json instance_json(const EndInstance& inst, bool with_version) {
  Json j;
  if (with_version) j["format_version"] = kFormatVersion;
  j["label"] = inst.label;
  j["assert"] = inst.assert_theorem;
  Json factors = Json::array();
  for (const auto& f : inst.factors) factors.push_back(factor_json(f));
  j["factors"] = std::move(factors);
  return j;
}

}  // namespace json_detail

/// Parses a single-instance document.
inline EndInstance parse_instance(std::string_view text) {
  const Json j = json_detail::parse_json(text);
  if (!j.is_object()) throw SchemaError("", "expected an object");
  json_detail::check_version(j);
  return json_detail::parse_instance_object(j, "");
}

/// Parses either a single-instance document or a batch document
/// {"format_version": 1, "instances": [...]}.
inline std::vector<EndInstance> parse_document(std::string_view text) {
  const Json j = json_detail::parse_json(text);
  if (!j.is_object()) throw SchemaError("", "expected an object");
  json_detail::check_version(j);
  if (auto it = j.find("instances"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("/instances", "expected an array");
    std::vector<EndInstance> out;
    for (std::size_t k = 0; k < it->size(); ++k) {
      out.push_back(json_detail::parse_instance_object((*it)[k], "/instances/" + std::to_string(k)));
    }
    return out;
  }
  return {json_detail::parse_instance_object(j, "")};
}

/// Canonical compact form; doubles use the shortest representation that
/// round-trips exactly.
inline std::string serialize_instance(const EndInstance& inst) {
  return json_detail::instance_json(inst, true).dump();
}

inline std::string serialize_factor(const AlbertFactor& f) { return json_detail::factor_json(f).dump(); }

inline std::string serialize_batch(const std::vector<EndInstance>& instances) {
  Json j;
  j["format_version"] = kFormatVersion;
  Json arr = Json::array();
  for (const auto& inst : instances) arr.push_back(json_detail::instance_json(inst, false));
  j["instances"] = std::move(arr);
  return j.dump(1);
}

}  // namespace dyndeg

#endif  // DYNDEG_SERIALIZE_HPP
