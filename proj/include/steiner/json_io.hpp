#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "steiner/bundle.hpp"
#include "steiner/iso.hpp"
#include "steiner/paths.hpp"
#include "steiner/stabilizer.hpp"
#include "steiner/tensor.hpp"
#include "steiner/unstable.hpp"
#include "steiner/weights.hpp"

// File formats and report layouts.  Keys are emitted in a fixed order and
// points come out of the solvers already sorted, so serializing the same
// value twice gives byte-identical text.

namespace steiner {

using Json = nlohmann::ordered_json;

inline Json json_of_matrix(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_of_json(const Json& j, const Field& f) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix: expected a non-empty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  if (cols == 0) throw ParseError("matrix: rows must be non-empty");
  ExactMatrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("matrix: row " + std::to_string(r) + " has the wrong width");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string())
        throw ParseError("matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a rational string");
      m.at(r, c) = f.from_rat(parse_rational(j[r][c].get<std::string>()));
    }
  }
  return m;
}

namespace detail {

inline Json entries_of_axis(const BoundaryTensor& a, std::size_t axis, std::size_t offset,
                            const std::vector<std::size_t>& strides) {
  const auto& dims = a.format().dims;
  Json out = Json::array();
  for (std::size_t i = 0; i < dims[axis]; ++i) {
    std::size_t at = offset + i * strides[axis];
    if (axis + 1 == dims.size())
      out.push_back(a.entry(at).str());
    else
      out.push_back(entries_of_axis(a, axis + 1, at, strides));
  }
  return out;
}

inline void fill_axis(BoundaryTensor& a, const Json& j, std::size_t axis, std::size_t offset,
                      const std::vector<std::size_t>& strides, const Field& f,
                      const std::string& path) {
  const auto& dims = a.format().dims;
  if (!j.is_array() || j.size() != dims[axis])
    throw ParseError("entries" + path + ": expected an array of length " +
                     std::to_string(dims[axis]));
  for (std::size_t i = 0; i < dims[axis]; ++i) {
    std::string here = path + "[" + std::to_string(i) + "]";
    std::size_t at = offset + i * strides[axis];
    if (axis + 1 == dims.size()) {
      if (!j[i].is_string())
        throw ParseError("entries" + here + ": expected a rational string");
      a.entry(at) = f.from_rat(parse_rational(j[i].get<std::string>()));
    } else {
      fill_axis(a, j[i], axis + 1, at, strides, f, here);
    }
  }
}

inline std::vector<std::size_t> tensor_strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t j = dims.size(); j-- > 1;) strides[j - 1] = strides[j] * dims[j];
  return strides;
}

}  // namespace detail

inline Json json_of_tensor(const BoundaryTensor& a) {
  Json j;
  j["dims"] = a.format().dims;
  j["entries"] =
      detail::entries_of_axis(a, 0, 0, detail::tensor_strides(a.format().dims));
  return j;
}

inline BoundaryTensor tensor_of_json(const Json& j, const Field& f) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
    throw ParseError("tensor: expected an object with \"dims\" and \"entries\"");
  const Json& jd = j["dims"];
  if (!jd.is_array() || jd.empty())
    throw ParseError("tensor: \"dims\" must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const auto& d : jd) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
      throw ParseError("tensor: dimensions must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  BoundaryTensor a(validate_format(dims), f);
  detail::fill_axis(a, j["entries"], 0, 0, detail::tensor_strides(dims), f, "");
  return a;
}

inline Json json_of_bundle(const SteinerBundle& s) {
  Json j = json_of_tensor(s.tensor());
  j["n"] = s.n();
  j["k"] = s.k();
  return j;
}

inline SteinerBundle bundle_of_json(const Json& j, const Field& f) {
  BoundaryTensor a = tensor_of_json(j, f);
  SteinerBundle s = SteinerBundle::create(std::move(a));
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != s.n()))
    throw ParseError("bundle: \"n\" disagrees with the tensor format");
  if (j.contains("k") && (!j["k"].is_number_unsigned() || j["k"].get<std::size_t>() != s.k()))
    throw ParseError("bundle: \"k\" disagrees with the tensor format");
  return s;
}

inline Json json_of_hyperplanes(const std::vector<Hyperplane>& hps) {
  Json out = Json::array();
  for (const auto& h : hps) {
    Json row = Json::array();
    for (const auto& c : h.xi) row.push_back(rational_str(c));
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<Hyperplane> hyperplanes_of_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("hyperplanes: expected a non-empty array of coefficient vectors");
  std::vector<Hyperplane> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].empty())
      throw ParseError("hyperplanes: entry " + std::to_string(r) +
                       " must be a non-empty array");
    std::vector<BigRat> xi;
    for (const auto& c : j[r]) {
      if (!c.is_string())
        throw ParseError("hyperplanes: entry " + std::to_string(r) +
                         " must hold rational strings");
      xi.push_back(parse_rational(c.get<std::string>()));
    }
    out.push_back(Hyperplane::of(std::move(xi)));
  }
  return out;
}

inline Json json_of_rat_vector(const std::vector<BigRat>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rational_str(c));
  return out;
}

inline Json json_of_scalar_vector(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

inline Json json_of_points(const std::vector<ProjPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json e;
    e["y"] = json_of_rat_vector(p.y);
    e["mult"] = p.mult;
    out.push_back(std::move(e));
  }
  return out;
}

inline Json json_of_residual(const std::vector<std::pair<std::size_t, unsigned>>& res) {
  Json out = Json::array();
  for (const auto& [deg, mult] : res) {
    Json e;
    e["degree"] = deg;
    e["mult"] = mult;
    out.push_back(std::move(e));
  }
  return out;
}

inline Json json_of_unstable(const UnstableReport& rep) {
  Json j;
  j["verdict"] = rep.infinite ? "infinite" : "finite";
  if (rep.infinite)
    j["length"] = nullptr;
  else
    j["length"] = rep.length;
  j["points"] = json_of_points(rep.points);
  j["residual"] = json_of_residual(rep.residual);
  j["seed"] = rep.seed;
  return j;
}

inline Json json_of_classification(const Classification& c) {
  Json j = json_of_unstable(c.scheme);
  j["classification"] = to_string(c.kind);
  return j;
}

inline Json json_of_invariant(const WInvariant& w, std::uint64_t seed) {
  Json j;
  if (w.infinite)
    j["w"] = "infinite";
  else
    j["w"] = w.value;
  j["seed"] = seed;
  return j;
}

inline Json json_of_membership(const MembershipReport& m) {
  Json j;
  j["member"] = m.member;
  j["h0"] = m.h0;
  if (m.member) {
    j["witness_w"] = json_of_scalar_vector(m.witness_w);
    j["witness_u"] = json_of_scalar_vector(m.witness_u);
  }
  return j;
}

inline Json json_of_segre(const SegreReport& rep) {
  Json j;
  j["verdict"] = rep.infinite ? "infinite" : "finite";
  if (rep.infinite)
    j["length"] = nullptr;
  else
    j["length"] = rep.length;
  Json pts = Json::array();
  for (const auto& p : rep.points) {
    Json e;
    e["w"] = json_of_rat_vector(p.w);
    e["xi"] = json_of_rat_vector(p.xi);
    e["mult"] = p.mult;
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  j["residual"] = json_of_residual(rep.residual);
  j["seed"] = rep.seed;
  return j;
}

inline Json json_of_stabilizer(const StabilizerReport& rep) {
  Json j;
  j["dimension"] = rep.dimension;
  j["type"] = to_string(rep.type);
  if (!rep.generator.empty()) {
    Json g;
    g["x"] = json_of_matrix(rep.generator[0]);
    g["y"] = json_of_matrix(rep.generator[1]);
    g["z"] = json_of_matrix(rep.generator[2]);
    j["generator"] = std::move(g);
    j["lambda"] = rep.lambda.str();
  }
  if (!rep.v_weights.empty()) j["v_weights"] = json_of_rat_vector(rep.v_weights);
  return j;
}

inline Json json_of_iso(const IsoReport& rep) {
  Json j;
  j["verdict"] = to_string(rep.verdict);
  j["hom_dimension"] = rep.hom_dimension;
  if (rep.verdict == IsoVerdict::Iso) {
    j["phi_w"] = json_of_matrix(rep.phi_w);
    j["phi_i"] = json_of_matrix(rep.phi_i);
  }
  return j;
}

inline Json json_of_paths(const BoundaryFormat& fmt, const PathSliceReport& rep) {
  Json j;
  j["dims"] = fmt.dims;
  j["paths"] = rep.path_count;
  j["common"] = rep.common;
  j["slice_totals"] = rep.slice_totals;
  return j;
}

inline Json json_of_weights(const WeightVector& wv) {
  Json j;
  j["scale"] = rational_str(wv.scale);
  Json rows = Json::array();
  for (const auto& row : wv.w) rows.push_back(json_of_rat_vector(row));
  j["weights"] = std::move(rows);
  return j;
}

// Canonical serialization: two-space indent, one trailing newline.
inline std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace steiner
