#include "tj/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tj {

namespace {

VertexId parse_id(const std::string& tok, int n, int line) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "bad vertex id '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "bad vertex id '" + tok + "'");
  if (v < 0 || v >= n) throw ParseError(line, "vertex id " + tok + " out of range");
  return v;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false, have_n = false, have_ell = false, have_k = false;
  bool have_i = false, have_j = false;
  int n = 0;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!have_header) {
      int version = 0;
      if (key != "tji" || !(ls >> version) || version != 1)
        throw ParseError(lineno, "expected header 'tji 1'");
      have_header = true;
      continue;
    }
    if (key == "n") {
      if (have_n) throw ParseError(lineno, "duplicate n line");
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
      inst.graph = Graph(n);
      have_n = true;
    } else if (key == "e") {
      if (!have_n) throw ParseError(lineno, "e before n");
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError(lineno, "edge needs two endpoints");
      const VertexId u = parse_id(a, n, lineno);
      const VertexId v = parse_id(b, n, lineno);
      if (u == v) throw ParseError(lineno, "self-loop rejected");
      if (inst.graph.has_edge(u, v)) throw ParseError(lineno, "duplicate edge");
      inst.graph.add_edge(u, v);
    } else if (key == "ell") {
      if (have_ell) throw ParseError(lineno, "duplicate ell line");
      if (!(ls >> inst.ell) || inst.ell < 2) throw ParseError(lineno, "bad ell");
      have_ell = true;
    } else if (key == "k") {
      if (have_k) throw ParseError(lineno, "duplicate k line");
      if (!(ls >> inst.k) || inst.k < 1) throw ParseError(lineno, "bad k");
      have_k = true;
    } else if (key == "I" || key == "J") {
      if (!have_n) throw ParseError(lineno, key + " before n");
      bool& flag = key == "I" ? have_i : have_j;
      if (flag) throw ParseError(lineno, "duplicate " + key + " line");
      flag = true;
      VertexSet& s = key == "I" ? inst.start : inst.target;
      std::string tok;
      while (ls >> tok) {
        const VertexId v = parse_id(tok, n, lineno);
        if (set_contains(s, v)) throw ParseError(lineno, "duplicate vertex in " + key);
        set_insert(s, v);
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (!have_n) throw ParseError(lineno, "missing n line");
  if (!have_ell || !have_k || !have_i || !have_j)
    throw ParseError(lineno, "missing ell, k, I or J line");
  try {
    inst.validate();
  } catch (const GraphError& e) {
    throw ParseError(lineno, e.what());
  }
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst, int original_n) {
  const auto verts = inst.graph.vertices();
  std::map<VertexId, VertexId> compact;
  for (std::size_t i = 0; i < verts.size(); ++i) compact[verts[i]] = static_cast<VertexId>(i);

  std::ostringstream os;
  os << "tji 1\n";
  os << "n " << verts.size() << "\n";
  os << "ell " << inst.ell << "\n";
  os << "k " << inst.k << "\n";
  os << "I";
  for (VertexId v : inst.start) os << " " << compact.at(v);
  os << "\n";
  os << "J";
  for (VertexId v : inst.target) os << " " << compact.at(v);
  os << "\n";
  if (original_n >= 0) {
    for (VertexId v : verts) {
      if (v < original_n) continue;
      os << "# fresh " << compact.at(v) << " sig";
      for (VertexId u : inst.graph.neighbors(v)) os << " " << compact.at(u);
      os << "\n";
    }
  }
  for (VertexId u : verts)
    for (VertexId v : inst.graph.neighbors(u))
      if (u < v) os << "e " << compact.at(u) << " " << compact.at(v) << "\n";
  return os.str();
}

std::string decided_yes_sentinel(const std::string& reason) {
  return "decided yes\n# " + reason + "\n";
}

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "unknown";
  }
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "Oracle";
    case Method::KernelShortCircuit: return "KernelShortCircuit";
    case Method::KernelThenOracle: return "KernelThenOracle";
    default: return "Vc1";
  }
}

std::string checksum_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace tj
