#include "zetalab/io.hpp"

#include <fstream>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

using K = SpectralMapSpec::Kind;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a rational string");
  return parse_rational(v.get<std::string>());
}

long long_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

ExactScalar scalar_of(const Json& v) {
  if (v.is_number_integer()) return ExactScalar(v.get<long>());
  if (!v.is_string()) throw ParseError("exact values must be strings");
  return ExactScalar::parse(v.get<std::string>());
}

const char* kind_name(K k) {
  switch (k) {
    case K::Shift: return "shift";
    case K::Scale: return "scale";
    case K::AddInvPow: return "add_inv_pow";
    case K::FEpsC: return "f_eps_c";
    case K::Abs: return "abs";
    case K::SignPow: return "sign_pow";
  }
  return "?";
}

Json matrix_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (long k = 0; k < m.rank(); ++k) {
      Json entry = Json::array();
      for (const auto& [f, c] : m.at(i, k).coeffs()) entry.push_back(Json::array({f, to_string(c)}));
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

SymMatrix matrix_from(const Json& rows, long rank) {
  if (!rows.is_array() || static_cast<long>(rows.size()) != rank) throw ParseError("matrix must have rank rows");
  SymMatrix m(rank);
  for (long i = 0; i < rank; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != rank) throw ParseError("matrix row has the wrong length");
    for (long k = 0; k < rank; ++k) {
      TrigPoly p;
      for (const Json& term : row[static_cast<std::size_t>(k)]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
          throw ParseError("Fourier terms are [frequency, \"coefficient\"] pairs");
        p += TrigPoly::mode(term[0].get<long>(), parse_gaussian(term[1].get<std::string>()));
      }
      m.at(i, k) = p;
    }
  }
  return m;
}

template <class F>
auto with_parse_errors(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const AsymptoticSeries& s) {
  Json b = Json::array();
  for (const auto& x : s.b()) b.push_back(x.to_string());
  Json j = {{"sign", s.sign()}, {"A", s.A().to_string()}, {"e", to_string(s.e())}, {"b", b}};
  if (!s.terminating()) j["depth"] = s.depth();
  return j;
}

AsymptoticSeries series_from_json(const Json& j) {
  long sign = long_field(j, "sign");
  if (sign != 1 && sign != -1) throw ParseError("series sign must be +1 or -1");
  ExactScalar A = scalar_of(field(j, "A"));
  Rational e = rational_field(j, "e");
  std::vector<ExactScalar> b;
  if (j.contains("b")) {
    if (!j.at("b").is_array()) throw ParseError("series b must be an array");
    for (const auto& x : j.at("b")) b.push_back(scalar_of(x));
  }
  if (j.contains("depth")) return AsymptoticSeries::truncated(static_cast<int>(sign), A, e, b, long_field(j, "depth"));
  return AsymptoticSeries::exact(static_cast<int>(sign), A, e, b);
}

Json to_json(const SpectralMapSpec& m) {
  Json j = {{"kind", kind_name(m.kind)}};
  switch (m.kind) {
    case K::Shift: j["a"] = to_string(m.a); break;
    case K::Scale: j["epsilon"] = to_string(m.epsilon); break;
    case K::AddInvPow:
      j["c"] = to_string(m.c);
      j["n"] = m.n;
      break;
    case K::FEpsC:
      j["epsilon"] = to_string(m.epsilon);
      j["c"] = to_string(m.c);
      j["n"] = m.n;
      break;
    case K::Abs: break;
    case K::SignPow: j["p"] = to_string(m.p); break;
  }
  return j;
}

SpectralMapSpec map_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("map kind must be a string");
  std::string kind = k.get<std::string>();
  if (kind == "shift") return SpectralMapSpec::shift(rational_field(j, "a"));
  if (kind == "scale") return SpectralMapSpec::scale(rational_field(j, "epsilon"));
  if (kind == "add_inv_pow") return SpectralMapSpec::add_inv_pow(rational_field(j, "c"), long_field(j, "n"));
  if (kind == "f_eps_c")
    return SpectralMapSpec::f_eps_c(rational_field(j, "epsilon"), rational_field(j, "c"), long_field(j, "n"));
  if (kind == "abs") return SpectralMapSpec::abs();
  if (kind == "sign_pow") return SpectralMapSpec::sign_pow(rational_field(j, "p"));
  throw ParseError("unknown map kind '" + kind + "'");
}

Json to_json(const SpectralModel& m) {
  Json branches = Json::array();
  for (const auto& br : m.branches) {
    Json mult = Json::array();
    for (const auto& c : br.multiplicity().coeffs()) mult.push_back(to_string(c));
    Json maps = Json::array();
    for (const auto& mp : br.maps()) maps.push_back(to_json(mp));
    branches.push_back({{"sign", br.base().sign()}, {"multiplicity", mult}, {"law", to_json(br.base())},
                        {"k0", br.k0()}, {"maps", maps}});
  }
  Json exc = Json::array();
  for (const auto& ev : m.exceptional) exc.push_back(Json::array({ev.value.to_string(), ev.multiplicity}));
  return {{"name", m.name},         {"order", m.order},       {"dimension", m.dimension},
          {"kernel_dim", m.kernel_dim}, {"branches", branches}, {"exceptional", exc},
          {"notes", m.notes}};
}

SpectralModel model_from_json(const Json& j) {
  return with_parse_errors([&] {
    SpectralModel m;
    if (j.contains("name")) m.name = j.at("name").get<std::string>();
    m.order = long_field(j, "order");
    m.dimension = long_field(j, "dimension");
    m.kernel_dim = j.contains("kernel_dim") ? long_field(j, "kernel_dim") : 0;
    const Json& brs = field(j, "branches");
    if (!brs.is_array()) throw ParseError("branches must be an array");
    for (const auto& b : brs) {
      AsymptoticSeries law = series_from_json(field(b, "law"));
      if (b.contains("sign")) {
        long s = long_field(b, "sign");
        if (s != 1 && s != -1) throw ParseError("branch sign must be +1 or -1");
        law = law.with_sign(static_cast<int>(s));
      }
      std::vector<Rational> mult;
      for (const auto& c : field(b, "multiplicity")) mult.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      std::vector<SpectralMapSpec> maps;
      if (b.contains("maps"))
        for (const auto& mp : b.at("maps")) maps.push_back(map_from_json(mp));
      try {
        m.branches.emplace_back(law, Polynomial(mult), long_field(b, "k0"), maps);
      } catch (const DomainError& e) {
        throw ParseError(std::string("invalid branch: ") + e.what());
      }
    }
    if (j.contains("exceptional")) {
      for (const auto& ev : j.at("exceptional")) {
        if (!ev.is_array() || ev.size() != 2) throw ParseError("exceptional entries are [value, multiplicity]");
        m.exceptional.push_back({scalar_of(ev[0]), ev[1].get<long>()});
      }
    }
    if (j.contains("notes")) m.notes = j.at("notes").get<std::vector<std::string>>();
    try {
      m.validate();
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid model: ") + e.what());
    }
    return m;
  });
}

Json to_json(const SymbolExpansion& s) {
  Json comps = Json::array();
  for (auto it = s.components().rbegin(); it != s.components().rend(); ++it) {
    comps.push_back({{"degree", it->first}, {"ray_plus", matrix_json(it->second.plus)},
                     {"ray_minus", matrix_json(it->second.minus)}});
  }
  return {{"order", s.order()},
          {"truncation", s.truncation()},
          {"rank", s.rank()},
          {"mode", s.mode() == SymbolExpansion::Mode::ConstantExact ? "constant-exact" : "trig-fourier"},
          {"components", comps}};
}

SymbolExpansion symbol_from_json(const Json& j) {
  return with_parse_errors([&] {
    long rank = j.contains("rank") ? long_field(j, "rank") : 1;
    SymbolExpansion s(long_field(j, "order"), long_field(j, "truncation"), rank);
    for (const auto& c : field(j, "components")) {
      long d = long_field(c, "degree");
      try {
        s.set_component(d, {matrix_from(field(c, "ray_plus"), rank), matrix_from(field(c, "ray_minus"), rank)});
      } catch (const DomainError& e) {
        throw ParseError(std::string("invalid component: ") + e.what());
      }
    }
    if (j.contains("mode") && j.at("mode") == "constant-exact" && s.mode() != SymbolExpansion::Mode::ConstantExact)
      throw ParseError("symbol declared constant-exact has x-dependent coefficients");
    return s;
  });
}

std::string model_to_text(const SpectralModel& m) { return to_json(m).dump() + "\n"; }

SpectralModel model_from_text(const std::string& text) {
  return with_parse_errors([&] { return model_from_json(Json::parse(text)); });
}

std::string symbol_to_text(const SymbolExpansion& s) { return to_json(s).dump() + "\n"; }

SymbolExpansion symbol_from_text(const std::string& text) {
  return with_parse_errors([&] { return symbol_from_json(Json::parse(text)); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string decimal(const ExactScalar& x, int digits) {
  if (x.kind() == ExactScalar::Kind::Rational && x.is_zero()) return "0";
  BigComplex z = x.to_complex(std::max(x.precision(), 128L));
  std::string out = z.re().to_decimal(digits);
  if (!z.im().is_zero()) {
    std::string im = z.im().to_decimal(digits);
    out += (im.front() == '-' ? "" : "+") + im + " i";
  }
  return out;
}

std::vector<PoleRow> pole_table(const SpectralModel& model, long floor, long depth, long prec) {
  AdmissibleResidues adm = residues_at_admissible(model, floor, depth, prec);
  std::vector<PoleRow> rows;
  for (const auto& r : adm.rows) {
    rows.push_back({r.sigma, SpectralFunction::ZetaUp, r.zeta_up});
    rows.push_back({r.sigma, SpectralFunction::ZetaDown, r.zeta_down});
    rows.push_back({r.sigma, SpectralFunction::ZetaAbs, r.zeta_abs});
    rows.push_back({r.sigma, SpectralFunction::Eta, r.eta});
  }
  return rows;
}

std::string pole_table_csv(const std::vector<PoleRow>& rows) {
  std::ostringstream os;
  os << "sigma,function,residue_exact,residue_float\n";
  for (const auto& r : rows)
    os << to_string(r.sigma) << ',' << function_name(r.function) << ',' << r.residue.to_string() << ','
       << decimal(r.residue) << '\n';
  return os.str();
}

Json pole_table_json(const std::vector<PoleRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"sigma", to_string(r.sigma)},
                   {"function", function_name(r.function)},
                   {"residue_exact", r.residue.to_string()},
                   {"residue_float", decimal(r.residue)}});
  return out;
}

}  // namespace zetalab
