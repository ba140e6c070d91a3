#include "quiverworks/textio.hpp"

#include <fstream>
#include <sstream>

namespace qw {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_number_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  bool slash = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '/' && !slash && i + 1 < t.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Path parse_path_word(const Quiver& q, const std::string& word) {
  std::string w = trim(word);
  if (w.rfind("e_", 0) == 0) return Path::lazy(q.vertex(w.substr(2)));
  std::vector<std::string> names = split_on(w, '*');
  Path p;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    int a = q.arrow_id(trim(*it));
    if (it == names.rbegin())
      p.base = q.arrow(a).src;
    else if (q.arrow(a).src != q.arrow(p.arrows.back()).dst)
      throw ParseError("word '" + w + "' is not a composable path");
    p.arrows.push_back(a);
  }
  return p;
}

LinComb parse_lincomb(const Quiver& q, const Field& f, const std::string& text) {
  // Split into signed terms at top level (no parentheses in the grammar).
  LinComb out(f);
  std::string t = trim(text);
  if (t.empty() || t == "0") return out;
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '+' || t[i] == '-') {
      if (trim(cur).empty() && t[i] == '-') {  // leading sign
        sign = -sign;
        continue;
      }
      terms.push_back({sign, trim(cur)});
      cur.clear();
      sign = (t[i] == '-') ? -1 : 1;
    } else {
      cur += t[i];
    }
  }
  terms.push_back({sign, trim(cur)});
  for (auto& [sg, body] : terms) {
    if (body.empty()) throw ParseError("empty term in '" + text + "'");
    if (body == "0") continue;
    std::vector<std::string> parts = split_on(body, '*');
    Scalar c = Scalar::of(f, sg);
    std::size_t start = 0;
    if (is_number_token(trim(parts[0]))) {
      c = c * Scalar::of(f, mpq_class(trim(parts[0])));
      start = 1;
    }
    if (start == parts.size()) throw ParseError("term '" + body + "' has no path");
    std::string word;
    for (std::size_t i = start; i < parts.size(); ++i) {
      if (i > start) word += "*";
      word += trim(parts[i]);
    }
    out.add(parse_path_word(q, word), c);
  }
  return out;
}

Matrix parse_matrix(const Field& f, const std::string& text) {
  // [[a,b],[c,d]]; [] or [[]] denote empty shapes (resolved by the caller).
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("matrix literal must be bracketed: " + text);
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<Vec> rows;
  std::size_t i = 0;
  while (i < inner.size()) {
    if (inner[i] == ',') {
      ++i;
      continue;
    }
    if (inner[i] != '[') throw ParseError("expected '[' in matrix literal: " + text);
    std::size_t j = inner.find(']', i);
    if (j == std::string::npos) throw ParseError("unbalanced matrix literal: " + text);
    std::string row = inner.substr(i + 1, j - i - 1);
    Vec r;
    if (!trim(row).empty())
      for (const std::string& e : split_on(row, ','))
        r.push_back(Scalar::of(f, mpq_class(trim(e))));
    rows.push_back(std::move(r));
    i = j + 1;
  }
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const Vec& r : rows)
    if (r.size() != cols) throw ParseError("ragged matrix literal: " + text);
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

namespace {

Field parse_field(const std::string& tok, int line) {
  if (tok == "Q") return Field();
  if (tok.rfind("GF(", 0) == 0 && tok.back() == ')') {
    try {
      return Field(std::stoll(tok.substr(3, tok.size() - 4)));
    } catch (const DomainError&) {
      throw;
    } catch (...) {
      fail(line, "bad characteristic in '" + tok + "'");
    }
  }
  fail(line, "field must be Q or GF(p), got '" + tok + "'");
}

// "a -> b" with optional whitespace; returns {a, b}.
std::pair<std::string, std::string> parse_edge(const std::string& rest, int line) {
  std::size_t pos = rest.find("->");
  if (pos == std::string::npos) fail(line, "expected 'src -> dst' in '" + rest + "'");
  std::string a = trim(rest.substr(0, pos)), b = trim(rest.substr(pos + 2));
  if (a.empty() || b.empty()) fail(line, "missing endpoint in '" + rest + "'");
  return {a, b};
}

std::pair<std::string, std::string> split_eq(const std::string& s, int line) {
  std::size_t pos = s.find('=');
  if (pos == std::string::npos) fail(line, "expected '=' in '" + s + "'");
  return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

}  // namespace

Fixture parse_fixture(const std::string& text, const std::string& name_hint,
                      const std::string& dir) {
  Fixture fx;
  fx.name = name_hint;
  fx.dir = dir;
  bool kind_known = false;
  ModuleSpec* open_module = nullptr;
  bool field_known = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> tok = split_ws(line);
    const std::string& key = tok[0];
    std::string rest = trim(line.substr(key.size()));

    if (!kind_known) {
      kind_known = true;
      if (key == "field") {
        fx.kind = Fixture::Kind::algebra;
      } else if (key == "tq") {
        fx.kind = Fixture::Kind::tq;
        continue;
      } else if (key == "cover") {
        fx.kind = Fixture::Kind::cover;
      } else if (key == "functor") {
        fx.kind = Fixture::Kind::functor;
      } else {
        fail(lineno, "file must start with field/tq/cover/functor, got '" + key + "'");
      }
    }

    try {
      if (key == "name") {
        fx.name = rest;
        if (fx.kind == Fixture::Kind::tq) fx.tq.name = rest;
        if (fx.kind == Fixture::Kind::algebra) fx.pres.name = rest;
        if (fx.kind == Fixture::Kind::cover) fx.cover.name = rest;
        if (fx.kind == Fixture::Kind::functor) fx.functor.name = rest;
        continue;
      }
      switch (fx.kind) {
        case Fixture::Kind::algebra: {
          if (key == "field") {
            fx.pres.field = parse_field(rest, lineno);
            field_known = true;
          } else if (key == "vertex") {
            fx.pres.quiver.add_vertex(rest);
          } else if (key == "arrow") {
            // arrow name: src -> dst
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos) fail(lineno, "expected 'arrow name: src -> dst'");
            auto [s, d] = parse_edge(rest.substr(colon + 1), lineno);
            fx.pres.quiver.add_arrow(trim(rest.substr(0, colon)), s, d);
          } else if (key == "relation") {
            if (!field_known) fail(lineno, "field line must precede relations");
            auto [lhs, rhs] = split_eq(rest, lineno);
            fx.pres.relations.push_back(parse_lincomb(fx.pres.quiver, fx.pres.field, lhs) -
                                        parse_lincomb(fx.pres.quiver, fx.pres.field, rhs));
          } else if (key == "module") {
            fx.modules.push_back(ModuleSpec{rest, {}, {}});
            open_module = &fx.modules.back();
          } else if (key == "dim") {
            if (!open_module) fail(lineno, "dim line outside a module block");
            auto [v, n] = split_eq(rest, lineno);
            fx.pres.quiver.vertex(v);  // validate the name
            open_module->dims[v] = std::stoi(n);
          } else if (key == "mat") {
            if (!open_module) fail(lineno, "mat line outside a module block");
            auto [a, lit] = split_eq(rest, lineno);
            fx.pres.quiver.arrow_id(a);  // validate the name
            open_module->mats.emplace(a, parse_matrix(fx.pres.field, lit));
          } else {
            fail(lineno, "unknown keyword '" + key + "' in algebra file");
          }
          break;
        }
        case Fixture::Kind::tq: {
          if (key == "tqvertex") {
            bool proj = false, inj = false, bdry = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
              if (tok[i] == "proj")
                proj = true;
              else if (tok[i] == "inj")
                inj = true;
              else if (tok[i] == "boundary")
                bdry = true;
              else
                fail(lineno, "unknown vertex flag '" + tok[i] + "'");
            }
            fx.tq.add_vertex(tok[1], proj, inj, bdry);
          } else if (key == "tqarrow") {
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos) fail(lineno, "expected 'tqarrow name: a -> b'");
            auto [s, d] = parse_edge(rest.substr(colon + 1), lineno);
            fx.tq.add_arrow(trim(rest.substr(0, colon)), s, d);
          } else if (key == "tau") {
            auto [z, w] = split_eq(rest, lineno);
            fx.tq.tau[fx.tq.q.vertex(z)] = fx.tq.q.vertex(w);
          } else if (key == "sigma") {
            auto [a, b] = split_eq(rest, lineno);
            fx.tq.sigma[fx.tq.q.arrow_id(a)] = fx.tq.q.arrow_id(b);
          } else {
            fail(lineno, "unknown keyword '" + key + "' in tq file");
          }
          break;
        }
        case Fixture::Kind::cover: {
          if (key == "cover") {
            if (tok.size() < 3 || tok[1] != "of") fail(lineno, "expected 'cover of <file>'");
            fx.cover.base_file = tok[2];
          } else if (key == "group") {
            fx.cover.group = rest;
          } else if (key == "window") {
            fx.cover.window = std::stoi(rest);
          } else if (key == "voltage") {
            auto [a, g] = split_eq(rest, lineno);
            fx.cover.voltage[a] = std::stol(g);
          } else {
            fail(lineno, "unknown keyword '" + key + "' in cover file");
          }
          break;
        }
        case Fixture::Kind::functor: {
          if (key == "functor") {
            if (tok.size() < 5 || tok[1] != "of" || tok[3] != "onto")
              fail(lineno, "expected 'functor of <total> onto <base>'");
            fx.functor.total_file = tok[2];
            fx.functor.base_file = tok[4];
          } else if (key == "group") {
            fx.functor.group = rest;
          } else if (key == "F(vertex") {
            // F(vertex x) = y
            std::size_t close = rest.find(')');
            if (close == std::string::npos) fail(lineno, "expected 'F(vertex x) = y'");
            auto [l, r] = split_eq(rest, lineno);
            fx.functor.vertex_map[trim(l.substr(0, l.find(')')))] = r;
          } else if (key == "F(arrow") {
            auto [l, r] = split_eq(rest, lineno);
            if (l.find(')') == std::string::npos) fail(lineno, "expected 'F(arrow a) = ...'");
            fx.functor.arrow_map[trim(l.substr(0, l.find(')')))] = r;
          } else if (key == "act") {
            if (tok.size() < 2) fail(lineno, "expected 'act vertex|arrow x = y'");
            auto [l, r] = split_eq(rest, lineno);
            std::vector<std::string> lt = split_ws(l);
            if (lt.size() != 2 || (lt[0] != "vertex" && lt[0] != "arrow"))
              fail(lineno, "expected 'act vertex|arrow x = y'");
            if (lt[0] == "vertex")
              fx.functor.vertex_action[lt[1]] = r;
            else
              fx.functor.arrow_action[lt[1]] = r;
          } else {
            fail(lineno, "unknown keyword '" + key + "' in functor file");
          }
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(lineno, e.what());
    }
  }
  if (!kind_known) throw ParseError("empty fixture file");
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  std::string dir = ".";
  std::size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos) {
    dir = stem.substr(0, slash);
    stem = stem.substr(slash + 1);
  }
  std::size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  try {
    return parse_fixture(buf.str(), stem, dir);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Representation build_module(const ModuleSpec& spec,
                            std::shared_ptr<const AlgebraBasis> alg) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  Representation m;
  m.alg = std::move(alg);
  m.dims.assign(q.num_vertices(), 0);
  for (const auto& [v, n] : spec.dims) {
    if (n < 0) throw DomainError("BadModule", "negative dimension at " + v);
    m.dims[q.vertex(v)] = n;
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    m.mats.push_back(Matrix(f, m.dims[q.arrow(a).dst], m.dims[q.arrow(a).src]));
  for (const auto& [a, mat] : spec.mats) {
    int id = q.arrow_id(a);
    if (mat.rows() != static_cast<std::size_t>(m.dims[q.arrow(id).dst]) ||
        mat.cols() != static_cast<std::size_t>(m.dims[q.arrow(id).src]))
      throw DomainError("BadModule", "matrix for arrow '" + a + "' in module '" + spec.name +
                                         "' has the wrong shape");
    m.mats[id] = mat;
  }
  m.check();
  return m;
}

std::string print_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

std::string print_algebra(const AlgebraPresentation& pres,
                          const std::vector<ModuleSpec>& modules) {
  const Quiver& q = pres.quiver;
  std::string s = "field " + pres.field.name() + "\n";
  if (!pres.name.empty()) s += "name " + pres.name + "\n";
  for (int v = 0; v < q.num_vertices(); ++v) s += "vertex " + q.vertex_name(v) + "\n";
  for (int a = 0; a < q.num_arrows(); ++a)
    s += "arrow " + q.arrow(a).name + ": " + q.vertex_name(q.arrow(a).src) + " -> " +
         q.vertex_name(q.arrow(a).dst) + "\n";
  for (const LinComb& r : pres.relations) s += "relation " + r.str(q) + " = 0\n";
  for (const ModuleSpec& m : modules) {
    s += "module " + m.name + "\n";
    for (const auto& [v, n] : m.dims)
      if (n != 0) s += "dim " + v + " = " + std::to_string(n) + "\n";
    for (const auto& [a, mat] : m.mats)
      if (mat.rows() * mat.cols() != 0) s += "mat " + a + " = " + print_matrix(mat) + "\n";
  }
  return s;
}

std::string print_tq(const TranslationQuiver& tq) {
  std::string s = "tq\n";
  if (!tq.name.empty()) s += "name " + tq.name + "\n";
  for (int v = 0; v < tq.q.num_vertices(); ++v) {
    s += "tqvertex " + tq.q.vertex_name(v);
    if (tq.is_projective(v)) s += " proj";
    if (tq.is_injective(v)) s += " inj";
    if (tq.is_boundary(v)) s += " boundary";
    s += "\n";
  }
  for (int a = 0; a < tq.q.num_arrows(); ++a)
    s += "tqarrow " + tq.q.arrow(a).name + ": " + tq.q.vertex_name(tq.q.arrow(a).src) +
         " -> " + tq.q.vertex_name(tq.q.arrow(a).dst) + "\n";
  for (const auto& [z, w] : tq.tau)
    s += "tau " + tq.q.vertex_name(z) + " = " + tq.q.vertex_name(w) + "\n";
  for (const auto& [a, b] : tq.sigma)
    s += "sigma " + tq.q.arrow(a).name + " = " + tq.q.arrow(b).name + "\n";
  return s;
}

ModuleSpec module_spec_of(const Representation& m, const std::string& name) {
  ModuleSpec spec;
  spec.name = name;
  const Quiver& q = m.quiver();
  for (int v = 0; v < q.num_vertices(); ++v)
    if (m.dims[v] != 0) spec.dims[q.vertex_name(v)] = m.dims[v];
  for (int a = 0; a < q.num_arrows(); ++a)
    if (m.mats[a].rows() * m.mats[a].cols() != 0) spec.mats.emplace(q.arrow(a).name, m.mats[a]);
  return spec;
}

}  // namespace qw
