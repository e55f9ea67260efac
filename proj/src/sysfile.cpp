#include <toricsolve/sysfile.hpp>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace toricsolve {

namespace {

std::string strip(std::string s) {
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

SystemFile parse_system_file(std::string_view text) {
  SystemFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool have_vars = false;
  std::vector<SparsePoly> polys;
  std::optional<std::string> projection_text;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (have_vars) fail("duplicate vars line");
      std::istringstream vs(line.substr(5));
      for (std::string v; vs >> v;) {
        if (!std::regex_match(v, ident)) fail("bad variable name '" + v + "'");
        if (std::find(out.vars.begin(), out.vars.end(), v) != out.vars.end()) fail("repeated variable '" + v + "'");
        out.vars.push_back(v);
      }
      have_vars = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'name = polynomial'");
    if (!have_vars) fail("polynomial before the vars line");
    const std::string name = strip(line.substr(0, eq)), body = line.substr(eq + 1);
    if (!std::regex_match(name, ident)) fail("bad polynomial name '" + name + "'");
    if (name == "projection") {
      if (projection_text) fail("duplicate projection");
      projection_text = body;
      continue;
    }
    if (std::find(out.names.begin(), out.names.end(), name) != out.names.end()) fail("repeated name '" + name + "'");
    try {
      polys.push_back(parse_poly(body, out.vars));
    } catch (const InputError& e) {
      fail(e.what());
    }
    out.names.push_back(name);
  }
  if (!have_vars) throw InputError("missing vars line");
  out.system = PolySystem(out.vars, std::move(polys));
  if (projection_text) {
    std::set<std::string> extra;
    for (std::sregex_iterator it(projection_text->begin(), projection_text->end(), ident), end; it != end; ++it)
      if (std::find(out.vars.begin(), out.vars.end(), it->str()) == out.vars.end()) extra.insert(it->str());
    if (extra.size() != 1) throw InputError("projection must use exactly one new variable");
    out.projection_var = *extra.begin();
    auto pv = out.vars;
    pv.push_back(out.projection_var);
    out.projection = parse_poly(*projection_text, pv);
  }
  return out;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system_file(ss.str());
}

std::string to_text(const SystemFile& s) {
  std::string out = "vars:";
  for (const auto& v : s.vars) out += " " + v;
  out += "\n";
  for (std::size_t i = 0; i < s.names.size(); ++i) out += s.names[i] + " = " + s.system[i].to_string() + "\n";
  if (s.projection) out += "projection = " + s.projection->to_string() + "\n";
  return out;
}

GoldenTerms load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  GoldenTerms out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ss(line);
    long e;
    std::string c, rest;
    if (!(ss >> e >> c) || (ss >> rest) || e < 0) throw InputError(path + ":" + std::to_string(no) + ": expected `exponent coefficient`");
    Int v;
    if (v.set_str(c, 10) != 0) throw InputError(path + ":" + std::to_string(no) + ": bad coefficient " + c);
    out.emplace_back(e, v);
  }
  return out;
}

GoldenDiff diff_golden(const std::vector<Int>& coeffs, const GoldenTerms& golden) {
  GoldenDiff d;
  std::set<long> listed;
  for (const auto& [e, v] : golden) {
    ++d.compared;
    listed.insert(e);
    const Int have = static_cast<std::size_t>(e) < coeffs.size() ? coeffs[static_cast<std::size_t>(e)] : Int(0);
    if (have != v) d.mismatched.push_back(e);
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0 && !listed.count(static_cast<long>(i))) d.unlisted.push_back(static_cast<long>(i));
  return d;
}

}  // namespace toricsolve
