#include "arrlog/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace arrlog {

Vec normalize_projective(const Vec& v) {
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw ValidationError("cannot normalize the zero vector");
  Vec out(v.size());
  Rational inv = 1 / v[lead];
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * inv;
  return out;
}

bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  return normalize_projective(a) == normalize_projective(b);
}

Arrangement::Arrangement(size_t k, std::vector<Vec> forms, std::vector<std::string> var_names)
    : k_(k), forms_(std::move(forms)), names_(std::move(var_names)) {
  if (k_ == 0) throw ValidationError("ambient dimension must be positive");
  if (forms_.empty()) throw ValidationError("arrangement needs at least one form");
  if (names_.empty()) {
    if (k_ == 3)
      names_ = {"x", "y", "z"};
    else if (k_ == 2)
      names_ = {"x", "y"};
    else
      for (size_t i = 0; i < k_; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (names_.size() != k_) throw ValidationError("variable name count mismatch");
  for (size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].size() != k_) throw ValidationError("form " + std::to_string(i + 1) + " has wrong length");
    bool zero = std::all_of(forms_[i].begin(), forms_[i].end(), [](const Rational& q) { return q == 0; });
    if (zero) throw ValidationError("form " + std::to_string(i + 1) + " is zero");
    for (size_t j = 0; j < i; ++j)
      if (proportional(forms_[i], forms_[j]))
        throw ValidationError("forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                              " define the same hyperplane");
  }
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One linear combination like "2x - 1/3y + z" over the declared variables.
Vec parse_form_line(const std::string& line, const std::map<std::string, size_t>& vars, size_t k,
                    int lineno) {
  Vec coeffs(k, Rational(0));
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < line.size() && std::isspace(unsigned(line[pos]))) ++pos; };
  skip_ws();
  bool any_term = false;
  while (pos < line.size()) {
    int sign = 1;
    if (line[pos] == '+' || line[pos] == '-') {
      sign = line[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (any_term) {
      throw ParseError("expected '+' or '-' between terms", lineno);
    }
    // optional rational coefficient
    std::string num;
    while (pos < line.size() && (std::isdigit(unsigned(line[pos])) || line[pos] == '/')) {
      num += line[pos];
      ++pos;
    }
    skip_ws();
    if (pos < line.size() && line[pos] == '*') {
      ++pos;
      skip_ws();
    }
    // variable name
    std::string name;
    while (pos < line.size() && (std::isalnum(unsigned(line[pos])) || line[pos] == '_')) {
      name += line[pos];
      ++pos;
    }
    if (name.empty()) throw ParseError("constant terms are not allowed in a linear form", lineno);
    auto it = vars.find(name);
    if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", lineno);
    Rational c = num.empty() ? Rational(1) : rat_from_string(num);
    if (sign < 0) c = -c;
    coeffs[it->second] += c;
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw ParseError("empty form", lineno);
  return coeffs;
}

}  // namespace

Arrangement Arrangement::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> names;
  std::map<std::string, size_t> vars;
  std::vector<Vec> forms;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (!have_vars) {
      if (s.rfind("vars:", 0) != 0) throw ParseError("expected 'vars: <names>' header", lineno);
      std::istringstream vs(s.substr(5));
      std::string name;
      while (std::getline(vs, name, ',')) {
        name = trim(name);
        if (name.empty()) throw ParseError("empty variable name", lineno);
        if (vars.count(name)) throw ParseError("duplicate variable '" + name + "'", lineno);
        vars[name] = names.size();
        names.push_back(name);
      }
      if (names.empty()) throw ParseError("no variables declared", lineno);
      have_vars = true;
      continue;
    }
    Vec f = parse_form_line(s, vars, names.size(), lineno);
    bool zero = std::all_of(f.begin(), f.end(), [](const Rational& q) { return q == 0; });
    if (zero) throw ParseError("form is zero", lineno);
    for (const Vec& g : forms)
      if (proportional(f, g)) throw ParseError("duplicate (proportional) form", lineno);
    forms.push_back(std::move(f));
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", lineno == 0 ? 1 : lineno);
  if (forms.empty()) throw ParseError("no forms given", lineno);
  size_t k = names.size();
  return Arrangement(k, std::move(forms), std::move(names));
}

Arrangement Arrangement::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("vars") || !j.contains("forms"))
    throw ValidationError("JSON arrangement needs 'vars' and 'forms'");
  std::vector<std::string> names = j["vars"].get<std::vector<std::string>>();
  std::vector<Vec> forms;
  for (const auto& row : j["forms"]) {
    Vec f;
    for (const auto& entry : row) {
      if (entry.is_number_integer())
        f.push_back(Rational(entry.get<long>()));
      else if (entry.is_string())
        f.push_back(rat_from_string(entry.get<std::string>()));
      else
        throw ValidationError("form entries must be integers or rational strings");
    }
    forms.push_back(std::move(f));
  }
  size_t k = names.size();
  return Arrangement(k, std::move(forms), std::move(names));
}

Arrangement Arrangement::parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && text[b] == '{') return parse_json(text);
  return parse_text(text);
}

size_t Arrangement::rank() const { return arrlog::rank(Matrix::from_rows(forms_)); }

Poly Arrangement::defining_polynomial() const {
  Poly f = Poly::constant(k_, Rational(1));
  for (size_t i = 0; i < forms_.size(); ++i) f = f * form_poly(i);
  return f;
}

std::vector<Poly> Arrangement::jacobian_generators() const {
  Poly f = defining_polynomial();
  std::vector<Poly> gens;
  for (size_t i = 0; i < k_; ++i) gens.push_back(f.derivative(i));
  return gens;
}

std::vector<Vec> Arrangement::dual_points() const {
  std::vector<Vec> pts;
  for (const Vec& f : forms_) pts.push_back(normalize_projective(f));
  return pts;
}

Arrangement Arrangement::transformed(const Matrix& t) const {
  if (t.rows() != k_ || t.cols() != k_) throw ValidationError("transform must be k x k");
  std::vector<Vec> forms;
  for (const Vec& f : forms_) forms.push_back(row_times_matrix(f, t));
  return Arrangement(k_, std::move(forms), names_);
}

Arrangement Arrangement::subarrangement(const std::vector<size_t>& indices) const {
  std::vector<Vec> forms;
  for (size_t i : indices) {
    if (i >= forms_.size()) throw ValidationError("subarrangement index out of range");
    forms.push_back(forms_[i]);
  }
  return Arrangement(k_, std::move(forms), names_);
}

CoordinateFrame normalize_coordinates(const Arrangement& a) {
  if (!a.is_essential()) throw ValidationError("normalize_coordinates requires an essential arrangement");
  // greedy scan: keep each form that enlarges the span of those kept
  RowSpace space;
  std::vector<size_t> chosen;
  for (size_t i = 0; i < a.n() && chosen.size() < a.k(); ++i)
    if (space.add(a.form(i))) chosen.push_back(i);
  std::vector<size_t> perm = chosen;
  for (size_t i = 0; i < a.n(); ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) perm.push_back(i);

  std::vector<Vec> rows;
  for (size_t i : chosen) rows.push_back(a.form(i));
  auto t = inverse(Matrix::from_rows(rows));
  if (!t) throw ConsistencyError("chosen forms not invertible despite rank check");
  std::vector<Vec> new_forms;
  for (size_t i : perm) new_forms.push_back(row_times_matrix(a.form(i), *t));
  return CoordinateFrame{Arrangement(a.k(), std::move(new_forms), a.var_names()), *t, perm};
}

std::string arrangement_to_text(const Arrangement& a) {
  std::ostringstream os;
  os << "vars: ";
  for (size_t i = 0; i < a.k(); ++i) os << (i ? "," : "") << a.var_names()[i];
  os << "\n";
  for (size_t i = 0; i < a.n(); ++i)
    os << Poly::linear_form(a.form(i)).to_string(a.var_names()) << "\n";
  return os.str();
}

}  // namespace arrlog
