#include "ztame/json_io.hpp"

#include "ztame/parse.hpp"

#include <stdexcept>

namespace ztame {

namespace {

std::string text_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string("field '") + key + "' must be a string");
}

std::string text_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument("expected a string entry");
}

Scalar scalar_of(const std::string& s) { return parse_scalar(s); }

const Json& array_field(const Json& j, const char* key, std::size_t size) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != size) {
    throw std::invalid_argument(std::string("field '") + key + "' must be an array of length " + std::to_string(size));
  }
  return j.at(key);
}

}  // namespace

Json to_json(const TameGenerator& gen) {
  Json j;
  if (const auto* a = std::get_if<Affine>(&gen)) {
    j["type"] = "affine";
    j["m"] = Json::array({Json::array({to_string(a->m[0][0]), to_string(a->m[0][1])}),
                          Json::array({to_string(a->m[1][0]), to_string(a->m[1][1])})});
    j["zc"] = Json::array({to_string(a->zc[0]), to_string(a->zc[1])});
    j["tr"] = Json::array({to_string(a->tr[0]), to_string(a->tr[1])});
  } else if (const auto* t = std::get_if<Triangular>(&gen)) {
    j["type"] = "triangular";
    j["a1"] = to_string(t->a1);
    j["p1"] = print_nc(t->p1);
    j["a2"] = to_string(t->a2);
    j["p2"] = print_nc(t->p2);
  } else {
    j["type"] = "tau";
  }
  return j;
}

Json to_json(const TameWord& w) {
  Json arr = Json::array();
  for (const auto& g : w) arr.push_back(to_json(g));
  return arr;
}

Json to_json(const ZEndomorphism& e) {
  Json j;
  j["f"] = print_nc(e.f);
  j["g"] = print_nc(e.g);
  return j;
}

Json to_json(const NormalForm& nf) {
  Json j;
  j["n"] = nf.n();
  Json rhos = Json::array();
  for (const auto& r : nf.rhos) rhos.push_back(to_json(TameGenerator{r}));
  j["rhos"] = rhos;
  j["rho0_affine"] = nf.rho0_affine();
  j["rhon_affine"] = nf.rhon_affine();
  j["word"] = to_json(nf.to_word());
  return j;
}

Json to_json(const Matrix2& m) {
  return Json::array({Json::array({print_c(m.a[0][0]), print_c(m.a[0][1])}),
                      Json::array({print_c(m.a[1][0]), print_c(m.a[1][1])})});
}

Json to_json(const Ge2Result& r) {
  Json j;
  if (const auto* c = std::get_if<ElementaryCertificate>(&r)) {
    j["verdict"] = "Certificate";
    Json factors = Json::array();
    for (const auto& f : c->factors) {
      Json fj;
      switch (f.kind) {
        case ElementaryFactor::Kind::Upper: fj["kind"] = "upper"; fj["entry"] = print_c(f.entry); break;
        case ElementaryFactor::Kind::Lower: fj["kind"] = "lower"; fj["entry"] = print_c(f.entry); break;
        case ElementaryFactor::Kind::Diagonal:
          fj["kind"] = "diagonal";
          fj["d1"] = to_string(f.d1);
          fj["d2"] = to_string(f.d2);
          break;
      }
      fj["matrix"] = to_json(f.matrix());
      factors.push_back(fj);
    }
    j["factors"] = factors;
    j["product_check"] = true;
  } else if (const auto* n = std::get_if<NotReducible>(&r)) {
    j["verdict"] = "NotReducible";
    j["stuck"] = to_json(n->stuck);
  } else {
    j["verdict"] = "NotInvertible";
    j["det"] = print_c(std::get<NotInvertible>(r).det);
  }
  return j;
}

Json to_json(const TraceStep& s) {
  Json j;
  j["action"] = s.action;
  if (!s.u.is_zero()) j["u"] = print_nc(s.u);
  if (!s.v.is_zero()) j["v"] = print_nc(s.v);
  if (s.d) j["d"] = *s.d;
  if (s.omega) j["omega"] = print_c(*s.omega);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const Decision& d, bool with_trace) {
  Json j;
  j["verdict"] = to_string(d.verdict);
  if (!d.reason.empty()) j["reason"] = d.reason;
  j["certificate"] = to_json(d.certificate);
  if (with_trace) {
    Json steps = Json::array();
    for (const auto& s : d.trace) steps.push_back(to_json(s));
    j["trace"] = steps;
  }
  return j;
}

TameGenerator generator_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("generator must be an object");
  const std::string type = text_of(j, "type");
  TameGenerator gen;
  if (type == "tau") {
    gen = Tau{};
  } else if (type == "triangular") {
    Triangular t;
    t.a1 = scalar_of(text_of(j, "a1"));
    t.p1 = parse_nc(text_of(j, "p1"));
    t.a2 = scalar_of(text_of(j, "a2"));
    t.p2 = parse_nc(text_of(j, "p2"));
    gen = t;
  } else if (type == "affine") {
    Affine a;
    const Json& m = array_field(j, "m", 2);
    for (int r = 0; r < 2; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) throw std::invalid_argument("field 'm' must be 2x2");
      for (int c = 0; c < 2; ++c) a.m[r][c] = scalar_of(text_of(m[r][c]));
    }
    if (j.contains("zc")) {
      const Json& zc = array_field(j, "zc", 2);
      for (int i = 0; i < 2; ++i) a.zc[i] = scalar_of(text_of(zc[i]));
    }
    if (j.contains("tr")) {
      const Json& tr = array_field(j, "tr", 2);
      for (int i = 0; i < 2; ++i) a.tr[i] = scalar_of(text_of(tr[i]));
    }
    gen = a;
  } else {
    throw std::invalid_argument("unknown generator type '" + type + "'");
  }
  validate(gen);
  return gen;
}

TameWord word_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("word") ? j.at("word") : j;
  if (!arr.is_array()) throw std::invalid_argument("word must be an array of generators");
  TameWord w;
  for (const auto& g : arr) w.push_back(generator_from_json(g));
  return w;
}

Matrix2 matrix_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!arr.is_array() || arr.size() != 2) throw std::invalid_argument("matrix must be a 2x2 array");
  Matrix2 m;
  for (int r = 0; r < 2; ++r) {
    if (!arr[r].is_array() || arr[r].size() != 2) throw std::invalid_argument("matrix must be a 2x2 array");
    for (int c = 0; c < 2; ++c) m.a[r][c] = parse_c(text_of(arr[r][c]), Family::Zbar);
  }
  return m;
}

}  // namespace ztame
