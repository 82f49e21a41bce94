#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavepacket/beta.hpp"
#include "wavepacket/circuit.hpp"
#include "wavepacket/oracle.hpp"
#include "wavepacket/types.hpp"

// Serialization layer. Emission is hand-rolled so that a given object always
// produces byte-identical text; parsing goes through nlohmann::json and
// re-throws every failure as InvalidParams.

namespace wavepacket {

// A sampled signal of length 2^n, spatial order, index 0 first.
struct SignalFile {
  int n = 0;
  ComplexVector data;
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return std::string(buf);
}

inline std::string fmt_pair(const Complex& z) {
  return "[" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + "]";
}

inline std::string gate_kind_token(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::Rz: return "rz";
    case GateKind::Swap: return "swap";
    case GateKind::Custom: return "custom";
    case GateKind::Controlled: return "controlled";
  }
  throw InvalidParams("gate_kind_token: unknown gate kind");
}

inline GateKind parse_gate_kind(const std::string& s) {
  if (s == "x") return GateKind::X;
  if (s == "y") return GateKind::Y;
  if (s == "z") return GateKind::Z;
  if (s == "h") return GateKind::H;
  if (s == "rz") return GateKind::Rz;
  if (s == "swap") return GateKind::Swap;
  if (s == "custom") return GateKind::Custom;
  if (s == "controlled") return GateKind::Controlled;
  throw InvalidParams("parse_gate_kind: unknown gate kind '" + s + "'");
}

inline std::string int_list_json(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

inline std::string matrix_json(const DenseUnitary& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.dim; ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.dim; ++c) {
      if (c) out += ", ";
      out += fmt_pair(m.at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

// One gate on a single line; optional fields appear in a fixed order so
// emission is deterministic.
inline std::string gate_json(const Gate& g) {
  std::string out = "{\"kind\": \"" + gate_kind_token(g.kind) + "\", \"targets\": " +
                    int_list_json(g.targets);
  if (g.kind == GateKind::Rz) out += ", \"theta\": " + fmt_double(g.theta);
  if (g.kind == GateKind::Custom) out += ", \"matrix\": " + matrix_json(g.matrix);
  if (g.kind == GateKind::Controlled) {
    out += ", \"controls\": [";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) out += ", ";
      out += "{\"qubit\": " + std::to_string(g.controls[i].qubit) +
             ", \"on\": " + (g.controls[i].on ? "true" : "false") + "}";
    }
    out += "], \"inner\": " + gate_json(g.inner.front());
  }
  return out + "}";
}

inline nlohmann::json parse_json_text(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParams(std::string(what) + ": malformed JSON: " + e.what());
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                           const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidParams(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

inline int require_int(const nlohmann::json& j, const char* key, const char* what) {
  const nlohmann::json& f = require_field(j, key, what);
  if (!f.is_number_integer()) {
    throw InvalidParams(std::string(what) + ": field '" + key + "' must be an integer");
  }
  return f.get<int>();
}

inline double require_number(const nlohmann::json& j, const char* key, const char* what) {
  const nlohmann::json& f = require_field(j, key, what);
  if (!f.is_number()) {
    throw InvalidParams(std::string(what) + ": field '" + key + "' must be a number");
  }
  return f.get<double>();
}

inline std::string require_string(const nlohmann::json& j, const char* key,
                                  const char* what) {
  const nlohmann::json& f = require_field(j, key, what);
  if (!f.is_string()) {
    throw InvalidParams(std::string(what) + ": field '" + key + "' must be a string");
  }
  return f.get<std::string>();
}

inline Complex complex_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidParams(std::string(what) + ": complex entries must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline DenseUnitary matrix_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw InvalidParams(std::string(what) + ": matrix must be a non-empty array of rows");
  }
  const std::size_t dim = j.size();
  DenseUnitary m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const nlohmann::json& row = j[r];
    if (!row.is_array() || row.size() != dim) {
      throw InvalidParams(std::string(what) + ": matrix rows must all have the row count");
    }
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = complex_from_json(row[c], what);
  }
  return m;
}

inline std::vector<int> int_list_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidParams(std::string(what) + ": expected an integer array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const nlohmann::json& e : j) {
    if (!e.is_number_integer()) {
      throw InvalidParams(std::string(what) + ": expected an integer array");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

inline Gate gate_from_json(const nlohmann::json& j) {
  constexpr const char* what = "circuit_from_json";
  const GateKind kind = parse_gate_kind(require_string(j, "kind", what));
  const std::vector<int> targets = int_list_from_json(require_field(j, "targets", what), what);
  switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Rz: {
      if (targets.size() != 1) {
        throw InvalidParams(std::string(what) + ": single-qubit gate needs one target");
      }
      switch (kind) {
        case GateKind::X: return gate_x(targets[0]);
        case GateKind::Y: return gate_y(targets[0]);
        case GateKind::Z: return gate_z(targets[0]);
        case GateKind::H: return gate_h(targets[0]);
        default: return gate_rz(require_number(j, "theta", what), targets[0]);
      }
    }
    case GateKind::Swap:
      if (targets.size() != 2 || targets[0] == targets[1]) {
        throw InvalidParams(std::string(what) + ": swap needs two distinct targets");
      }
      return gate_swap(targets[0], targets[1]);
    case GateKind::Custom:
      return gate_custom(matrix_from_json(require_field(j, "matrix", what), what), targets);
    case GateKind::Controlled: {
      const nlohmann::json& ctrls = require_field(j, "controls", what);
      if (!ctrls.is_array() || ctrls.empty()) {
        throw InvalidParams(std::string(what) + ": controlled gate needs controls");
      }
      std::vector<ControlTerm> controls;
      controls.reserve(ctrls.size());
      for (const nlohmann::json& c : ctrls) {
        const nlohmann::json& on = require_field(c, "on", what);
        if (!on.is_boolean()) {
          throw InvalidParams(std::string(what) + ": control 'on' must be a boolean");
        }
        controls.push_back(ControlTerm{require_int(c, "qubit", what), on.get<bool>()});
      }
      Gate out = make_controlled(controls, gate_from_json(require_field(j, "inner", what)));
      if (out.targets != targets) {
        throw InvalidParams(std::string(what) +
                            ": controlled gate targets must match the inner targets");
      }
      return out;
    }
  }
  throw InvalidParams(std::string(what) + ": unknown gate kind");
}

// Every referenced qubit must fit the declared register including ancillas.
inline void check_gate_bounds(const Gate& g, int width, const char* what) {
  for (int t : g.targets) {
    if (t < 0 || t >= width) {
      throw InvalidParams(std::string(what) + ": target qubit out of range");
    }
  }
  for (const ControlTerm& c : g.controls) {
    if (c.qubit < 0 || c.qubit >= width) {
      throw InvalidParams(std::string(what) + ": control qubit out of range");
    }
  }
  for (const Gate& inner : g.inner) check_gate_bounds(inner, width, what);
}

}  // namespace detail

inline std::string circuit_to_json(const Circuit& c) {
  std::string out = "{\n  \"n\": " + std::to_string(c.n) +
                    ",\n  \"ancilla\": " + std::to_string(c.ancilla) + ",\n  \"gates\": [";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    out += (i ? ",\n    " : "\n    ");
    out += detail::gate_json(c.gates[i]);
  }
  out += c.gates.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline Circuit circuit_from_json(const std::string& text) {
  constexpr const char* what = "circuit_from_json";
  const nlohmann::json j = detail::parse_json_text(text, what);
  Circuit c;
  c.n = detail::require_int(j, "n", what);
  c.ancilla = detail::require_int(j, "ancilla", what);
  if (c.n < 1 || c.ancilla < 0) {
    throw InvalidParams(std::string(what) + ": need n >= 1 and ancilla >= 0");
  }
  const nlohmann::json& gates = detail::require_field(j, "gates", what);
  if (!gates.is_array()) {
    throw InvalidParams(std::string(what) + ": field 'gates' must be an array");
  }
  c.gates.reserve(gates.size());
  for (const nlohmann::json& g : gates) {
    c.gates.push_back(detail::gate_from_json(g));
    detail::check_gate_bounds(c.gates.back(), c.n + c.ancilla, what);
  }
  return c;
}

inline std::string signal_to_json(const SignalFile& s) {
  std::string out = "{\n  \"n\": " + std::to_string(s.n) + ",\n  \"data\": [";
  for (std::size_t i = 0; i < s.data.size(); ++i) {
    out += (i ? ",\n    " : "\n    ");
    out += detail::fmt_pair(s.data[i]);
  }
  out += s.data.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline SignalFile signal_from_json(const std::string& text) {
  constexpr const char* what = "signal_from_json";
  const nlohmann::json j = detail::parse_json_text(text, what);
  SignalFile s;
  s.n = detail::require_int(j, "n", what);
  if (s.n < 1 || s.n > 26) {
    throw InvalidParams(std::string(what) + ": need 1 <= n <= 26");
  }
  const nlohmann::json& data = detail::require_field(j, "data", what);
  if (!data.is_array() || data.size() != pow2(s.n)) {
    throw InvalidParams(std::string(what) + ": field 'data' must hold exactly 2^n entries");
  }
  s.data.reserve(data.size());
  for (const nlohmann::json& e : data) s.data.push_back(detail::complex_from_json(e, what));
  return s;
}

inline std::string basis_to_json(const BasisMatrix& b) {
  std::string out = "{\n  \"kind\": \"" + kind_name(b.kind) +
                    "\",\n  \"n\": " + std::to_string(b.n) +
                    ",\n  \"b\": " + std::to_string(b.b);
  if (!b.beta.name.empty()) out += ",\n  \"beta\": \"" + b.beta.name + "\"";
  out += ",\n  \"matrix\": [";
  for (std::size_t r = 0; r < b.matrix.dim; ++r) {
    out += (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < b.matrix.dim; ++c) {
      if (c) out += ", ";
      out += detail::fmt_pair(b.matrix.at(r, c));
    }
    out += "]";
  }
  out += b.matrix.dim == 0 ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline BasisMatrix basis_from_json(const std::string& text) {
  constexpr const char* what = "basis_from_json";
  const nlohmann::json j = detail::parse_json_text(text, what);
  BasisMatrix b;
  b.kind = parse_kind(detail::require_string(j, "kind", what));
  b.n = detail::require_int(j, "n", what);
  b.b = detail::require_int(j, "b", what);
  if (j.contains("beta")) b.beta = parse_beta(detail::require_string(j, "beta", what));
  b.matrix = detail::matrix_from_json(detail::require_field(j, "matrix", what), what);
  if (b.matrix.dim != pow2(b.n)) {
    throw InvalidParams(std::string(what) + ": matrix dimension must equal 2^n");
  }
  return b;
}

// Magnitude heatmap, one "row,col,magnitude" line per entry, header first.
inline std::string heatmap_to_csv(const DenseUnitary& m) {
  std::string out = "row,col,magnitude\n";
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t c = 0; c < m.dim; ++c) {
      out += std::to_string(r) + "," + std::to_string(c) + "," +
             detail::fmt_double(std::abs(m.at(r, c))) + "\n";
    }
  }
  return out;
}

// basis.json -> basis.heatmap.csv (the extension after the last path
// component is replaced; a path with no extension just gains the suffix).
inline std::string heatmap_path(const std::string& out_path) {
  const std::size_t slash = out_path.find_last_of("/\\");
  const std::size_t dot = out_path.find_last_of('.');
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? out_path.substr(0, dot) : out_path) + ".heatmap.csv";
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParams("write_text_file: cannot open '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw InvalidParams("write_text_file: failed writing '" + path + "'");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParams("read_text_file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wavepacket
