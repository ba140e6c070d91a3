#include "quiverworks/quiver.hpp"

#include <algorithm>

namespace qw {

int Quiver::add_vertex(const std::string& name) {
  if (name.empty()) throw DomainError("BadName", "empty vertex name");
  if (vindex_.count(name))
    throw DomainError("DuplicateName", "vertex '" + name + "' declared twice");
  int id = num_vertices();
  vertices_.push_back(name);
  vindex_[name] = id;
  return id;
}

int Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& dst) {
  return add_arrow(name, vertex(src), vertex(dst));
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  if (name.empty()) throw DomainError("BadName", "empty arrow name");
  if (aindex_.count(name))
    throw DomainError("DuplicateName", "arrow '" + name + "' declared twice");
  if (src < 0 || src >= num_vertices() || dst < 0 || dst >= num_vertices())
    throw DomainError("UnknownVertex", "arrow '" + name + "' endpoint out of range");
  int id = num_arrows();
  arrows_.push_back(Arrow{name, src, dst});
  aindex_[name] = id;
  return id;
}

int Quiver::vertex(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) throw DomainError("UnknownVertex", "no vertex '" + name + "'");
  return it->second;
}

int Quiver::arrow_id(const std::string& name) const {
  auto it = aindex_.find(name);
  if (it == aindex_.end()) throw DomainError("UnknownArrow", "no arrow '" + name + "'");
  return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].src == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].dst == v) out.push_back(a);
  return out;
}

bool Quiver::connected() const {
  if (num_vertices() <= 1) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& a : arrows_) {
      int w = -1;
      if (a.src == v && !seen[a.dst]) w = a.dst;
      if (a.dst == v && !seen[a.src]) w = a.src;
      if (w >= 0) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Path Path::after(const Path& first, const Quiver& q) const {
  if (source() != first.target(q))
    throw DomainError("EndpointMismatch", "path composition endpoints disagree");
  Path r = first;
  r.arrows.insert(r.arrows.end(), arrows.begin(), arrows.end());
  if (r.arrows.empty()) r.base = first.base;
  return r;
}

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (arrows.empty()) return base < o.base;
  return arrows < o.arrows;
}

std::string Path::str(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertex_name(base);
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrow(*it).name;
  }
  return s;
}

LinComb LinComb::term(const Field& f, const Scalar& c, const Path& p) {
  LinComb l(f);
  l.add(p, c);
  return l;
}

void LinComb::add(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinComb LinComb::operator+(const LinComb& o) const {
  LinComb r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
  LinComb r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, -c);
  return r;
}

LinComb LinComb::scaled(const Scalar& c) const {
  LinComb r(f_);
  for (const auto& [p, k] : terms_) r.add(p, k * c);
  return r;
}

LinComb LinComb::operator*(const LinComb& o) const {
  // Caller guarantees endpoint compatibility termwise; Path::after would need
  // the quiver to check, so products are assembled by concatenation here.
  LinComb r(f_);
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_) {
      Path pq = q;
      pq.arrows.insert(pq.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (pq.arrows.empty()) pq.base = q.base;
      r.add(pq, c * d);
    }
  return r;
}

bool LinComb::check_uniform(const Quiver& q, int* src, int* tgt) const {
  if (terms_.empty()) return true;
  int s = terms_.begin()->first.source();
  int t = terms_.begin()->first.target(q);
  for (const auto& [p, c] : terms_) {
    (void)c;
    if (p.source() != s || p.target(q) != t) return false;
  }
  if (src) *src = s;
  if (tgt) *tgt = t;
  return true;
}

std::string LinComb::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    std::string cs = c.str();
    if (s.empty()) {
      if (cs == "1")
        s = p.str(q);
      else if (cs == "-1")
        s = "-" + p.str(q);
      else
        s = cs + "*" + p.str(q);
    } else {
      bool neg = !cs.empty() && cs[0] == '-';
      std::string abs = neg ? cs.substr(1) : cs;
      s += neg ? " - " : " + ";
      s += (abs == "1") ? p.str(q) : abs + "*" + p.str(q);
    }
  }
  return s;
}

}  // namespace qw
