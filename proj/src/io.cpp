#include "homcsa/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "homcsa/errors.hpp"

namespace homcsa::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const char* k : required)
    if (!j.contains(k)) fail(path, std::string("missing field \"") + k + "\"");
  for (const auto& item : j.items()) {
    auto known = [&](std::initializer_list<const char*> keys) {
      return std::any_of(keys.begin(), keys.end(), [&](const char* k) { return item.key() == k; });
    };
    if (!known(required) && !known(optional)) fail(path, "unknown field \"" + item.key() + "\"");
  }
}

std::size_t read_count(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return std::size_t(j.get<long long>());
  fail(path, "expected a non-negative integer");
}

Scalar read_scalar(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  fail(path, "expected a rational string such as \"-3/4\"");
}

void expect_array(const json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of length " + std::to_string(len));
  if (j.size() != len)
    fail(path, "expected length " + std::to_string(len) + ", found " + std::to_string(j.size()));
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const char* key) { return path + "." + key; }

LinearMap read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  expect_array(j, rows, path);
  LinearMap m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    expect_array(j[r], cols, at(path, r));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = read_scalar(j[r][c], at(at(path, r), c));
  }
  return m;
}

BilinearTensor read_tensor(const json& j, std::size_t n, const std::string& path) {
  expect_array(j, n, path);
  BilinearTensor t(n, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    expect_array(j[a], n, at(path, a));
    for (std::size_t b = 0; b < n; ++b) {
      std::string pb = at(at(path, a), b);
      expect_array(j[a][b], n, pb);
      for (std::size_t c = 0; c < n; ++c) t.at(a, b, c) = read_scalar(j[a][b][c], at(pb, c));
    }
  }
  return t;
}

ActionTensor read_action(const json& j, std::size_t algDim, std::size_t modDim,
                         const std::string& path) {
  expect_array(j, algDim, path);
  std::vector<LinearMap> mats;
  mats.reserve(algDim);
  for (std::size_t i = 0; i < algDim; ++i) mats.push_back(read_matrix(j[i], modDim, modDim, at(path, i)));
  return ActionTensor(modDim, std::move(mats));
}

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t off = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1 + std::count(text.begin(), text.begin() + off, '\n');
    std::size_t lineStart = text.rfind('\n', off == 0 ? 0 : off - 1);
    std::size_t col = lineStart == std::string_view::npos || off == 0 ? off + 1 : off - lineStart;
    throw InputError(source + ": line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": malformed JSON");
  }
}

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << contents;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return ss.str();
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const BilinearTensor& t) {
  json out = json::array();
  for (std::size_t a = 0; a < t.dim_left(); ++a) {
    json pa = json::array();
    for (std::size_t b = 0; b < t.dim_right(); ++b) {
      json pb = json::array();
      for (std::size_t c = 0; c < t.dim_out(); ++c) pb.push_back(to_json(t.at(a, b, c)));
      pa.push_back(std::move(pb));
    }
    out.push_back(std::move(pa));
  }
  return out;
}

json to_json(const ActionTensor& a) {
  json out = json::array();
  for (const auto& m : a.mats()) out.push_back(to_json(m));
  return out;
}

json to_json(const HomAlgebra& A, const std::optional<std::string>& name) {
  json j = {{"dim", A.dim()}, {"mul", to_json(A.mul())}, {"alpha", to_json(A.twist())}};
  if (name) j["name"] = *name;
  return j;
}

json to_json(const Representation& R) {
  return {{"base", to_json(R.base)}, {"modDim", R.modDim}, {"rho", to_json(R.rho)}, {"psi", to_json(R.psi)}};
}

json to_json(const Bimodule& B) {
  return {{"base", to_json(B.base)}, {"modDim", B.modDim}, {"l", to_json(B.l)},
          {"r", to_json(B.r)},       {"phi", to_json(B.phi)}};
}

json to_json(const MatchedPairCSA& M) {
  return {{"A", to_json(M.A)},   {"B", to_json(M.B)},   {"lA", to_json(M.lA)},
          {"rA", to_json(M.rA)}, {"lB", to_json(M.lB)}, {"rB", to_json(M.rB)}};
}

json to_json(const MatchedPairHomLie& M) {
  return {{"G", to_json(M.G)}, {"H", to_json(M.H)}, {"rhoG", to_json(M.rhoG)}, {"rhoH", to_json(M.rhoH)}};
}

json to_json(const PairedAlgebras& P) {
  return {{"primal", to_json(P.primal)}, {"dual_mul", to_json(P.dualMul)}};
}

HomAlgebra algebra_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"dim", "mul", "alpha"}, {"name"});
  if (j.contains("name") && !j["name"].is_string()) fail(field(path, "name"), "expected a string");
  const std::size_t n = read_count(j["dim"], field(path, "dim"));
  return HomAlgebra(read_tensor(j["mul"], n, field(path, "mul")),
                    read_matrix(j["alpha"], n, n, field(path, "alpha")));
}

std::optional<std::string> algebra_name(const json& j) {
  if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return std::nullopt;
}

Representation representation_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"base", "modDim", "rho", "psi"});
  HomAlgebra base = algebra_from_json(j["base"], field(path, "base"));
  const std::size_t m = read_count(j["modDim"], field(path, "modDim"));
  ActionTensor rho = read_action(j["rho"], base.dim(), m, field(path, "rho"));
  LinearMap psi = read_matrix(j["psi"], m, m, field(path, "psi"));
  return Representation(std::move(base), m, std::move(rho), std::move(psi));
}

Bimodule bimodule_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"base", "modDim", "l", "r", "phi"});
  HomAlgebra base = algebra_from_json(j["base"], field(path, "base"));
  const std::size_t m = read_count(j["modDim"], field(path, "modDim"));
  ActionTensor l = read_action(j["l"], base.dim(), m, field(path, "l"));
  ActionTensor r = read_action(j["r"], base.dim(), m, field(path, "r"));
  LinearMap phi = read_matrix(j["phi"], m, m, field(path, "phi"));
  return Bimodule(std::move(base), m, std::move(l), std::move(r), std::move(phi));
}

MatchedPairCSA matched_pair_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"A", "B", "lA", "rA", "lB", "rB"});
  HomAlgebra A = algebra_from_json(j["A"], field(path, "A"));
  HomAlgebra B = algebra_from_json(j["B"], field(path, "B"));
  const std::size_t n = A.dim(), m = B.dim();
  ActionTensor lA = read_action(j["lA"], n, m, field(path, "lA"));
  ActionTensor rA = read_action(j["rA"], n, m, field(path, "rA"));
  ActionTensor lB = read_action(j["lB"], m, n, field(path, "lB"));
  ActionTensor rB = read_action(j["rB"], m, n, field(path, "rB"));
  return MatchedPairCSA(std::move(A), std::move(B), std::move(lA), std::move(rA), std::move(lB),
                        std::move(rB));
}

MatchedPairHomLie lie_pair_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"G", "H", "rhoG", "rhoH"});
  HomAlgebra G = algebra_from_json(j["G"], field(path, "G"));
  HomAlgebra H = algebra_from_json(j["H"], field(path, "H"));
  ActionTensor rhoG = read_action(j["rhoG"], G.dim(), H.dim(), field(path, "rhoG"));
  ActionTensor rhoH = read_action(j["rhoH"], H.dim(), G.dim(), field(path, "rhoH"));
  return MatchedPairHomLie(std::move(G), std::move(H), std::move(rhoG), std::move(rhoH));
}

PairedAlgebras bialgebra_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"primal", "dual_mul"});
  HomAlgebra primal = algebra_from_json(j["primal"], field(path, "primal"));
  BilinearTensor f = read_tensor(j["dual_mul"], primal.dim(), field(path, "dual_mul"));
  return PairedAlgebras(std::move(primal), std::move(f));
}

FileKind detect_kind(const json& j) {
  if (!j.is_object()) throw InputError("document is not a JSON object");
  if (j.contains("mul")) return FileKind::Algebra;
  if (j.contains("rho")) return FileKind::Representation;
  if (j.contains("l") || j.contains("phi")) return FileKind::Bimodule;
  if (j.contains("lA")) return FileKind::MatchedPair;
  if (j.contains("rhoG")) return FileKind::LiePair;
  if (j.contains("dual_mul")) return FileKind::Bialgebra;
  throw InputError("cannot tell what structure this document describes");
}

const char* kind_name(FileKind k) {
  switch (k) {
    case FileKind::Algebra: return "algebra";
    case FileKind::Representation: return "representation";
    case FileKind::Bimodule: return "bimodule";
    case FileKind::MatchedPair: return "matched-pair";
    case FileKind::LiePair: return "lie-matched-pair";
    case FileKind::Bialgebra: return "bialgebra";
  }
  return "?";
}

HomAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

std::string serialize_algebra(const HomAlgebra& A, const std::optional<std::string>& name) {
  return to_text(to_json(A, name));
}

}  // namespace homcsa::io
